#ifndef CHROMCAT_TEST_PROPERTIES_HPP
#define CHROMCAT_TEST_PROPERTIES_HPP

// Invariant checks shared by the property suite and the acceptance binary.
// Each returns a list of failure messages; empty means the property holds.

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chromcat.hpp"
#include "oracles.hpp"

namespace props {

using namespace chromcat;
using Failures = std::vector<std::string>;

inline void fail(Failures& out, const std::string& where, const std::string& what)
{
    if (out.size() < 20) {
        out.push_back(where + ": " + what);
    }
}

inline std::vector<GroupElem> random_tuple(const FiniteGroup& G, std::mt19937& rng, std::size_t k)
{
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(G.order() - 1));
    std::vector<GroupElem> t;
    for (std::size_t i = 0; i < k; ++i) {
        t.push_back(GroupElem{pick(rng)});
    }
    return t;
}

inline std::vector<GroupElem> conjugate_tuple(const FiniteGroup& G, std::span<const GroupElem> a, GroupElem g)
{
    std::vector<GroupElem> out;
    for (auto x : a) {
        out.push_back(G.conjugate(x, g));
    }
    return out;
}

/// Pruned search agrees with the full scan; symmetry and transitivity for small groups.
inline Failures conjugacy_search(const FiniteGroup& G, unsigned seed, int trials = 200)
{
    Failures out;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> len(1, 3);
    for (int i = 0; i < trials; ++i) {
        const auto k = len(rng);
        const auto a = random_tuple(G, rng, k);
        // half the time b is a genuine conjugate of a
        const auto b = i % 2 ? conjugate_tuple(G, a, random_tuple(G, rng, 1)[0]) : random_tuple(G, rng, k);
        const auto slow = G.simultaneous_conjugacy(a, b);
        const auto fast = G.simultaneous_conjugacy_pruned(a, b);
        if (slow.has_value() != fast.has_value()) {
            fail(out, G.name(), "pruned and full search disagree");
            continue;
        }
        if (fast && conjugate_tuple(G, a, *fast) != b) {
            fail(out, G.name(), "pruned search returned a non-conjugating element");
        }
        if (G.order() <= 24) {
            if (slow.has_value() != G.simultaneous_conjugacy(b, a).has_value()) {
                fail(out, G.name(), "simultaneous conjugacy is not symmetric");
            }
            const auto c = conjugate_tuple(G, b, random_tuple(G, rng, 1)[0]);
            if (slow && !G.simultaneous_conjugacy(a, c)) {
                fail(out, G.name(), "simultaneous conjugacy is not transitive");
            }
        }
    }
    return out;
}

/// Enumerated subgroups are elementary abelian, distinct, and counted as by brute force.
inline Failures elem_abelians(const FiniteGroup& G, int p)
{
    Failures out;
    const auto subs = enumerate_elem_abelians(G, p);
    std::map<std::size_t, std::size_t> counts;
    std::size_t top = 0;
    for (const auto& s : subs) {
        ++counts[s->rank()];
        top = std::max(top, s->rank());
        const auto elems = s->elements();
        if (elems.size() != ipow(static_cast<std::size_t>(p), s->rank())) {
            fail(out, G.name(), "subgroup size is not p^rank");
        }
        for (auto a : elems) {
            if (G.mul(a, a) != G.identity() && p == 2) {
                fail(out, G.name(), "element of order above 2");
            }
            for (auto b : elems) {
                if (!s->contains(G.mul(a, b)) || G.mul(a, b) != G.mul(b, a)) {
                    fail(out, G.name(), "subgroup not closed or not abelian");
                }
            }
            if (G.element_order(a) != 1 && G.element_order(a) != static_cast<std::size_t>(p)) {
                fail(out, G.name(), "element of wrong order");
            }
        }
    }
    for (std::size_t i = 0; i < subs.size(); ++i) {
        for (std::size_t j = i + 1; j < subs.size(); ++j) {
            if (subs[i]->same_subgroup(*subs[j])) {
                fail(out, G.name(), "subgroup listed twice");
            }
        }
    }
    if (p_rank(G, p) != top) {
        fail(out, G.name(), "p_rank disagrees with the enumeration");
    }
    if (G.order() <= 32 && counts != oracle::elem_abelian_counts(G, p)) {
        fail(out, G.name(), "subgroup counts differ from brute force");
    }
    return out;
}

inline Failures injective_counts()
{
    Failures out;
    for (int p : {2, 3}) {
        for (std::size_t a = 0; a <= 3; ++a) {
            for (std::size_t b = 0; b <= 3; ++b) {
                const auto mats = injective_matrices(p, b, a);
                if (mats.size() != injective_hom_count(p, a, b)) {
                    fail(out, "injective", "count mismatch p=" + std::to_string(p));
                }
                for (const auto& m : mats) {
                    if (m.rank() != a) {
                        fail(out, "injective", "matrix not injective");
                    }
                }
            }
        }
    }
    return out;
}

/// Category axioms and the level chain for one group and prime. The
/// all-tuples oracle runs when `tuple_oracle` is set.
inline Failures chain_properties(const FiniteGroup& G, int p, bool tuple_oracle)
{
    Failures out;
    const std::string where = G.name() + " p=" + std::to_string(p);
    const auto Q = quillen_category(G, p);
    const std::size_t N = Q.object_count();
    std::size_t rank = 0;
    for (const auto& o : Q.objects()) {
        rank = std::max(rank, o->rank());
    }
    const unsigned top = static_cast<unsigned>(std::max<std::size_t>(rank, 1));
    std::vector<ChromCategory> levels; // levels[n] = A^(n), n = 0 .. top + 1
    for (unsigned n = 0; n <= top + 1; ++n) {
        levels.push_back(build_category(G, p, Level::finite(n)));
    }
    levels.push_back(build_category(G, p, Level::infinity()));

    std::mt19937 rng(static_cast<unsigned>(G.order() * 31 + p));
    for (std::size_t n = 0; n < levels.size(); ++n) {
        const auto& C = levels[n];
        const std::string at = where + " " + C.name();
        for (std::size_t w = 0; w < N; ++w) {
            if (!C.contains(w, w, FpMatrix::identity(p, C.object(w)->rank()))) {
                fail(out, at, "identity missing");
            }
        }
        if (!homs_subset(Q, C)) {
            fail(out, at, "a conjugation morphism is missing");
        }
        if (n + 1 < levels.size() && !homs_subset(levels[n + 1], C)) {
            fail(out, at, "chain is not monotone");
        }
        // composition closure on sampled composable pairs
        std::uniform_int_distribution<std::size_t> obj(0, N - 1);
        for (int trial = 0; trial < 300; ++trial) {
            const auto u = obj(rng), w = obj(rng), v = obj(rng);
            const auto f = C.hom(u, w);
            const auto g = C.hom(w, v);
            if (f.empty() || g.empty()) {
                continue;
            }
            const auto& mf = f[rng() % f.size()];
            const auto& mg = g[rng() % g.size()];
            if (!C.contains(u, v, mg * mf)) {
                fail(out, at, "not closed under composition");
            }
        }
    }
    if (!same_homs(levels[top], Q) || !same_homs(levels.back(), Q)) {
        fail(out, where, "A^(p-rank) differs from the Quillen category");
    }
    if (stabilization_rank(G, p) > top) {
        fail(out, where, "stabilization rank above the p-rank");
    }

    std::optional<oracle::ConjugacyMasks> masks;
    if (tuple_oracle && G.order() <= 32) {
        masks.emplace(G);
    }
    for (std::size_t w = 0; w < N; ++w) {
        for (std::size_t v = 0; v < N; ++v) {
            const auto W = Q.object(w), V = Q.object(v);
            for (const auto& M : injective_matrices(p, V->rank(), W->rank())) {
                const LinearMorphism f{W, V, M};
                if (levels[1].contains(w, v, M) != oracle::maps_to_conjugates(f)) {
                    fail(out, where, "A^(1) differs from elementwise conjugacy");
                }
                if (masks) {
                    for (unsigned n = 1; n <= std::min(3u, top); ++n) {
                        if (levels[n].contains(w, v, M) != oracle::level_by_all_tuples(f, n, *masks)) {
                            fail(out, where, "level " + std::to_string(n) + " differs from the all-tuples oracle");
                        }
                    }
                }
            }
        }
    }
    return out;
}

/// Colimit sizes never grow as n goes up the tower, the maps are onto, and
/// adding a subcategory changes nothing.
inline Failures colim_properties(const FiniteGroup& G, int p)
{
    Failures out;
    const std::string where = G.name() + " p=" + std::to_string(p);
    for (std::size_t q : {static_cast<std::size_t>(p), static_cast<std::size_t>(p * p)}) {
        const auto t = filtration_tower(G, p, q);
        const auto sizes = t.sizes();
        for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
            if (sizes[i + 1] > sizes[i] || !t.surjective[i]) {
                fail(out, where, "tower not non-increasing and onto at q=" + std::to_string(q));
            }
        }
        const auto A1 = build_category(G, p, Level::finite(1));
        const auto Q = quillen_category(G, p);
        const GaloisField F(q);
        if (colim_points({&A1, &Q}, F).class_of != colim_points(A1, F).class_of) {
            fail(out, where, "adding a subcategory changed the colimit");
        }
        if (G.order() <= 32 && q <= 4 && colim_points(A1, F).size != oracle::colim_size_bfs(A1, q)) {
            fail(out, where, "colimit size differs from the search oracle");
        }
    }
    return out;
}

/// C_R for random invariant generators of a group whose Sylow subgroup is
/// elementary abelian: contains the Quillen category, shrinks as R grows.
inline Failures subring_properties(const FiniteGroup& G, unsigned seed)
{
    Failures out;
    const auto P = elementary_abelian_sylow(G, 2);
    const auto W = weyl_action(*P);
    const std::size_t r = P->rank();
    std::mt19937 rng(seed);
    std::vector<PolyFp> pool;
    for (unsigned d = 1; d <= 4; ++d) {
        for (const auto& f : invariant_basis(W, d)) {
            pool.push_back(f);
        }
    }
    // orbit sums of random monomials add non-Dickson invariants
    for (int i = 0; i < 4; ++i) {
        Exponents e(r);
        for (auto& x : e) {
            x = rng() % 3;
        }
        const auto f = orbit_sum(PolyFp::monomial(2, e), W);
        if (!f.is_zero() && f.is_homogeneous()) {
            pool.push_back(f);
        }
    }
    const auto Q = quillen_category(G, 2);
    std::vector<PolyFp> gens;
    const ChromCategory* previous = nullptr;
    std::vector<ChromCategory> cats;
    cats.reserve(pool.size() + 1);
    for (std::size_t i = 0; i <= pool.size(); ++i) {
        cats.push_back(build_CR(G, make_presentation(G, 2, gens)));
        const auto& C = cats.back();
        if (!homs_subset(Q, C)) {
            fail(out, G.name(), "C_R misses a conjugation morphism");
        }
        if (previous && !homs_subset(C, *previous)) {
            fail(out, G.name(), "C_R is not monotone in R");
        }
        previous = &C;
        if (i < pool.size()) {
            gens.push_back(pool[i]);
        }
    }
    const auto R = make_presentation(G, 2, gens);
    for (const auto& S : enumerate_elem_abelians(G, 2)) {
        const auto all = embeddings_into(*S, *R.sylow);
        for (const auto& x : R.generators) {
            for (std::size_t k = 0; k < all.size(); k += 1 + all.size() / 8) {
                if (restrict_to(all[k], x) != restrict_to(all.front(), x)) {
                    fail(out, G.name(), "restriction depends on the conjugating element");
                }
            }
        }
    }
    return out;
}

inline Failures fgl_properties()
{
    Failures out;
    for (int p : {2, 3}) {
        for (unsigned n : {1u, 2u}) {
            const unsigned D = p == 3 && n == 2 ? 12 : 16;
            const auto F = honda_fgl(p, n, D);
            const std::string where = "honda(" + std::to_string(p) + "," + std::to_string(n) + ")";
            if (!check_fgl_axioms(F).all()) {
                fail(out, where, "formal group law axioms fail");
            }
            const auto bound = static_cast<unsigned>(ipow(static_cast<std::size_t>(p), n));
            const auto ps = p_series(F);
            if (ps.valuation() != bound || ps.coeff({bound}) != 1) {
                fail(out, where, "[p](x) does not start with x^(p^n)");
            }
            if (!additive_below(F, bound)) {
                fail(out, where, "law is not additive below degree p^n");
            }
        }
    }
    return out;
}

inline HopfExpr random_hopf(std::mt19937& rng, int p, unsigned n, unsigned D)
{
    HopfExpr e(p, n, D, 2);
    std::uniform_int_distribution<int> coeff(1, p - 1);
    for (int k = 0, terms = 1 + static_cast<int>(rng() % 5); k < terms; ++k) {
        StarTerm t;
        for (int f = 0, factors = static_cast<int>(rng() % 3); f < factors; ++f) {
            CircMonomial m;
            m.grouplike = rng() % 3 == 0 ? static_cast<int>(rng() % p) : -1;
            for (int i = 0, len = static_cast<int>(rng() % 3); i < len; ++i) {
                m.b.push_back(1 + rng() % 3);
            }
            std::sort(m.b.begin(), m.b.end());
            if (m.b.empty() && m.grouplike < 0) {
                m.grouplike = 1;
            }
            t.push_back(std::move(m));
        }
        std::sort(t.begin(), t.end());
        Exponents ex{static_cast<unsigned>(rng() % 3), static_cast<unsigned>(rng() % 3)};
        e.add_term(t, PolyFp::monomial(p, ex, coeff(rng)));
    }
    return e;
}

/// The quotient map is idempotent and linear, and the Hurewicz image of a
/// product is the ∘-convolution of the images.
inline Failures hopf_properties(unsigned seed, int trials = 200)
{
    Failures out;
    std::mt19937 rng(seed);
    for (int i = 0; i < trials; ++i) {
        const int p = i % 2 ? 3 : 2;
        const unsigned n = 1 + i % 3 / 2;
        const auto a = random_hopf(rng, p, n, 8);
        const auto b = random_hopf(rng, p, n, 8);
        const auto qa = mod_indecomposables(a);
        if (!(mod_indecomposables(qa) == qa)) {
            fail(out, "hopf", "quotient is not idempotent");
        }
        if (!(mod_indecomposables(a + b) == qa + mod_indecomposables(b))) {
            fail(out, "hopf", "quotient is not additive");
        }
        const auto c = PolyFp::constant(p, 2, 1 + static_cast<int>(rng() % (p - 1)));
        if (!(mod_indecomposables(a.scaled(c)) == qa.scaled(c))) {
            fail(out, "hopf", "quotient does not commute with scalars");
        }
    }
    for (int p : {2, 3}) {
        for (unsigned n : {1u, 2u}) {
            const unsigned bound = static_cast<unsigned>(ipow(static_cast<std::size_t>(p), n));
            for (unsigned a = 0; a < bound; ++a) {
                for (unsigned b = 0; a + b < bound; ++b) {
                    const auto fa = PolyFp::monomial(p, {a}, 1 + static_cast<int>(rng() % (p - 1)));
                    const auto fb = PolyFp::monomial(p, {b}, 1 + static_cast<int>(rng() % (p - 1)));
                    for (unsigned t = 0; t < bound; ++t) {
                        HopfExpr rhs(p, n, bound, 1);
                        for (unsigned j = 0; j <= t; ++j) {
                            rhs += circ(hurewicz_raw(fa, n, j), hurewicz_raw(fb, n, t - j));
                        }
                        if (!(hurewicz_raw(fa * fb, n, t) == rhs)) {
                            std::ostringstream msg;
                            msg << "image of a product is not the convolution (p=" << p << " n=" << n << " a=" << a
                                << " b=" << b << " t=" << t << ")";
                            fail(out, "hurewicz", msg.str());
                        }
                    }
                }
            }
        }
    }
    return out;
}

} // namespace props

#endif // CHROMCAT_TEST_PROPERTIES_HPP
