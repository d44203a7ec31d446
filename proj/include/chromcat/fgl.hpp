#ifndef CHROMCAT_FGL_HPP
#define CHROMCAT_FGL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "chromcat/series.hpp"

namespace chromcat {

/// A formal group law over F_p truncated above total degree D.
struct FGL {
    int p = 2;
    unsigned height = 1;
    unsigned degree = 1;
    FpSeries law; // F(s, t)

    /// F(a, b) for series a, b without constant term.
    FpSeries add(const FpSeries& a, const FpSeries& b) const { return law.compose({a, b}); }

    /// [k]_F(a): a +_F a +_F ... (k copies); [0]_F(a) = 0.
    FpSeries multiple(unsigned k, const FpSeries& a) const
    {
        FpSeries out(a.field(), a.variable_count(), a.truncation());
        for (unsigned i = 0; i < k; ++i) {
            out = i == 0 ? a : add(a, out);
        }
        return out;
    }
};

/// log(x) = sum_i x^{p^{n i}} / p^i up to degree D.
inline RationalSeries honda_logarithm(int p, unsigned n, unsigned D)
{
    if (n < 1) {
        throw Error("honda_logarithm: height must be at least 1");
    }
    RationalSeries f(RationalField{}, 1, D);
    RationalField::value_type scale = 1;
    for (std::size_t e = 1; e <= D; e *= ipow(static_cast<std::size_t>(p), n)) {
        f.set({static_cast<unsigned>(e)}, scale);
        scale /= p;
    }
    return f;
}

/// The height-n Honda law: F = exp(log s + log t) over the rationals,
/// checked p-integral and reduced mod p.
inline FGL honda_fgl(int p, unsigned n, unsigned D)
{
    if (!is_prime(p)) {
        throw Error("honda_fgl: p must be prime");
    }
    if (n < 1) {
        throw Error("honda_fgl: height must be at least 1");
    }
    if (D < 1 || D > 16) {
        throw Error("honda_fgl: truncation degree must lie in 1..16");
    }
    const RationalSeries log1 = honda_logarithm(p, n, D);
    const RationalSeries exp1 = compositional_inverse(log1);
    const RationalField Q{};
    const auto s = RationalSeries::variable(Q, 2, D, 0);
    const auto t = RationalSeries::variable(Q, 2, D, 1);
    const RationalSeries sum = log1.compose({s}) + log1.compose({t});
    const RationalSeries F = exp1.compose({sum});
    return FGL{p, n, D, reduce_mod_p(F, p)};
}

/// [p]_F(x) as a one-variable series.
inline FpSeries p_series(const FGL& F)
{
    const auto x = FpSeries::variable(PrimeField{F.p}, 1, F.degree, 0);
    return F.multiple(static_cast<unsigned>(F.p), x);
}

struct FGLAxioms {
    bool left_unit = false;
    bool right_unit = false;
    bool commutative = false;
    bool associative = false;

    bool all() const { return left_unit && right_unit && commutative && associative; }
};

/// Unit, commutativity and associativity up to the truncation degree.
inline FGLAxioms check_fgl_axioms(const FGL& F)
{
    const PrimeField k{F.p};
    const unsigned D = F.degree;
    FGLAxioms out;
    {
        const auto x = FpSeries::variable(k, 1, D, 0);
        const FpSeries zero(k, 1, D);
        out.left_unit = F.law.compose({zero, x}) == x;
        out.right_unit = F.law.compose({x, zero}) == x;
    }
    const auto s = FpSeries::variable(k, 2, D, 0);
    const auto t = FpSeries::variable(k, 2, D, 1);
    out.commutative = F.law.compose({t, s}) == F.law;
    const auto a = FpSeries::variable(k, 3, D, 0);
    const auto b = FpSeries::variable(k, 3, D, 1);
    const auto c = FpSeries::variable(k, 3, D, 2);
    out.associative = F.add(F.add(a, b), c) == F.add(a, F.add(b, c));
    return out;
}

/// Whether F(s, t) = s + t in all degrees below `bound`.
inline bool additive_below(const FGL& F, unsigned bound)
{
    for (const auto& e : F.law.support()) {
        const unsigned d = total_degree(e);
        if (d < bound && (d != 1 || F.law.coeff(e) != 1)) {
            return false;
        }
    }
    return F.law.coeff({1, 0}) == 1 && F.law.coeff({0, 1}) == 1;
}

} // namespace chromcat

#endif // CHROMCAT_FGL_HPP
