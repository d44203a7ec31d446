#ifndef CHROMCAT_A4_DEMO_HPP
#define CHROMCAT_A4_DEMO_HPP

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "chromcat/colimit.hpp"
#include "chromcat/cyc.hpp"
#include "chromcat/fgl.hpp"
#include "chromcat/hopf.hpp"
#include "chromcat/invariants.hpp"
#include "chromcat/subring.hpp"

namespace chromcat {

struct A4DemoOptions {
    unsigned height = 2;
    unsigned degree = 8;
    bool weyl = true; // sum over the Weyl orbit of w^2 z, or take w^2 z alone
};

struct DemoCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct A4DemoReport {
    A4DemoOptions options;
    std::vector<std::pair<std::string, std::string>> stages;
    std::vector<DemoCheck> checks;
    PolyFp coefficient; // of b_1∘b_1∘b_1 in (s, t)-degree 3

    bool all_passed() const
    {
        for (const auto& c : checks) {
            if (!c.passed) {
                return false;
            }
        }
        return true;
    }

    std::string to_text() const
    {
        std::string out = "a4-demo: p=2 n=" + std::to_string(options.height) + " D=" + std::to_string(options.degree) +
                          " weyl=" + (options.weyl ? "on" : "off") + "\n";
        for (const auto& [name, value] : stages) {
            out += "  " + name + ": " + value + "\n";
        }
        for (const auto& c : checks) {
            out += std::string(c.passed ? "PASS " : "FAIL ") + c.name + (c.detail.empty() ? "" : ": " + c.detail) + "\n";
        }
        return out;
    }

    nlohmann::json to_json() const
    {
        nlohmann::json st = nlohmann::json::array();
        for (const auto& [name, value] : stages) {
            st.push_back({{"name", name}, {"value", value}});
        }
        nlohmann::json ch = nlohmann::json::array();
        for (const auto& c : checks) {
            ch.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        }
        return {{"options", {{"p", 2}, {"height", options.height}, {"degree", options.degree}, {"weyl", options.weyl}}},
                {"stages", st},
                {"checks", ch},
                {"coefficient", coefficient.to_string({"s", "t"})},
                {"all_passed", all_passed()}};
    }
};

inline FiniteGroup a4_group()
{
    const std::vector<Permutation> gens{{1, 2, 0, 3}, {1, 0, 3, 2}};
    return FiniteGroup::from_permutations(4, gens, 64, "A4");
}

/// The A_4 computation at p = 2: invariants and isogeny summary, then the
/// Honda law, the Weyl-orbit restriction of w^2 z, its beta pushforward mod
/// *-decomposables and the degree-3 coefficient of b_1∘b_1∘b_1.
inline A4DemoReport a4_demo(A4DemoOptions options = {})
{
    A4DemoReport r;
    r.options = options;
    auto check = [&](std::string name, bool ok, std::string detail = {}) {
        r.checks.push_back(DemoCheck{std::move(name), ok, std::move(detail)});
    };
    const std::vector<std::string> xy{"x", "y"};
    const std::vector<std::string> wz{"w", "z"};
    const std::vector<std::string> st{"s", "t"};

    const FiniteGroup G = a4_group();
    const auto P = elementary_abelian_sylow(G, 2);
    const LinearAction W = weyl_action(*P);
    r.stages.emplace_back("group", G.name() + ", order " + std::to_string(G.order()) + ", Sylow 2-subgroup of rank " +
                                       std::to_string(P->rank()) + ", Weyl group of order " + std::to_string(W.order()));
    check("Weyl group of V is C_3", W.order() == 3);

    // invariants of C_3 on F_2[x, y]
    const auto D1 = PolyFp::parse("x^2 + x*y + y^2", 2, xy);
    const auto D0 = PolyFp::parse("x^2*y + x*y^2", 2, xy);
    const auto eta = orbit_sum(PolyFp::parse("x^2*y", 2, xy), W);
    const auto eta2 = eta.pow(2);
    r.stages.emplace_back("eta", eta.to_string(xy));
    r.stages.emplace_back("eta^2", eta2.to_string(xy));
    const auto relation = eta2 + eta * D0 + D1.pow(3) + D0.pow(2);
    check("eta^2 + eta*D0 + D1^3 + D0^2 = 0", relation.is_zero(), relation.to_string(xy));
    const std::vector<PolyFp> chern{D1.pow(2), D0.pow(2)};
    const std::vector<PolyFp> full{D1, D0, eta};
    check("eta^2 not in <D1^2, D0^2>", !subring_membership(eta2, chern));
    check("eta^2 in <D1, D0, eta>", subring_membership(eta2, full));

    // isogeny summary at q = 4
    {
        const auto A1 = build_category(G, 2, Level::finite(1));
        const auto A2 = build_category(G, 2, Level::finite(2));
        const auto Q = quillen_category(G, 2);
        const auto c1 = colim_points(A1, 4).size;
        const auto c2 = colim_points(A2, 4).size;
        const auto cq = colim_points(Q, 4).size;
        r.stages.emplace_back("F_4 points", "Quillen " + std::to_string(cq) + ", A^(2) " + std::to_string(c2) +
                                                ", A^(1) " + std::to_string(c1));
        check("A^(2) and Quillen colimits agree at q = 4", c2 == cq && same_homs(A2, Q));
        check("A^(1) colimit strictly smaller at q = 4", c1 < c2);
    }

    // formal group law
    const FGL F = honda_fgl(2, options.height, options.degree);
    r.stages.emplace_back("F(s,t)", F.law.to_string(st));
    check("formal group law axioms to degree " + std::to_string(options.degree), check_fgl_axioms(F).all());
    const auto ps = p_series(F);
    const unsigned bound = static_cast<unsigned>(ipow(2, options.height));
    r.stages.emplace_back("[2](x)", ps.to_string({"x"}));
    {
        FpSeries expected(PrimeField{2}, 1, F.degree);
        expected.set({bound}, 1);
        check("[2](x) = x^" + std::to_string(bound), ps == expected);
    }
    check("F = s + t below degree " + std::to_string(bound), additive_below(F, bound));

    // Weyl-orbit restriction
    const CycRing R(F, 2);
    const FormalSum w2z = FormalSum::monomial(2, {2, 1});
    const OrbitRestriction orbit = weyl_orbit_restriction(R, w2z, W.generators());
    const FormalSum& input = options.weyl ? orbit.formal : w2z;
    r.stages.emplace_back("restriction (formal)", input.to_string(wz));
    r.stages.emplace_back("restriction (ring)", (options.weyl ? orbit.via_ring : R.evaluate(w2z)).to_string(wz));
    check("formal and ring orbit routes agree", orbit.routes_agree());

    const HopfExpr pushed = beta_pushforward(input, F, options.degree);
    const HopfExpr reduced = mod_indecomposables(pushed);
    r.stages.emplace_back("pushforward terms", std::to_string(pushed.terms().size()));
    HopfExpr low = reduced.empty_like();
    for (const auto& [t, c] : reduced.terms()) {
        low.add_term(t, c.truncate_degree(3));
    }
    r.stages.emplace_back("mod decomposables, degree <= 3", low.to_string());
    r.coefficient = coefficient_of(reduced, {1, 1, 1}, 3);

    // gamma: the functional that kills decomposables and reads b_1^{∘3},
    // followed by s -> x^2, t -> y^2
    const PolyFp gamma = r.coefficient.substitute({PolyFp::parse("x^2", 2, xy), PolyFp::parse("y^2", 2, xy)});
    r.stages.emplace_back("gamma image in H*(BV)", gamma.to_string(xy));
    check("gamma image equals eta^2", gamma == eta2, gamma.to_string(xy));

    const PolyFp expected = PolyFp::parse("s^3 + s^2*t + t^3", 2, st);
    check("coefficient of b_1∘b_1∘b_1 in degree 3 = s^3 + s^2*t + t^3", r.coefficient == expected,
          r.coefficient.to_string(st));
    return r;
}

} // namespace chromcat

#endif // CHROMCAT_A4_DEMO_HPP
