#ifndef CHROMCAT_CYC_HPP
#define CHROMCAT_CYC_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "chromcat/fgl.hpp"
#include "chromcat/invariants.hpp"
#include "chromcat/poly.hpp"

namespace chromcat {

/// u_a^e where u_a = [a_1](x_1) +_F ... +_F [a_r](x_r).
struct FormalFactor {
    std::vector<int> arg;
    unsigned exponent = 1;

    friend auto operator<=>(const FormalFactor&, const FormalFactor&) = default;
};

/// c * prod of factors, factors sorted by argument with distinct arguments.
struct FormalMonomial {
    int coeff = 1;
    std::vector<FormalFactor> factors;
};

/// An F_p-linear combination of products of formal-sum powers, the shape
/// taken by orbit sums of monomials under a linear Weyl action.
class FormalSum {
public:
    FormalSum(int p, std::size_t rank) : p_(p), rank_(rank) {}

    static FormalSum one(int p, std::size_t rank)
    {
        FormalSum s(p, rank);
        s.add(FormalMonomial{1, {}});
        return s;
    }

    /// coeff * prod x_i^{e_i} in the basic variables.
    static FormalSum monomial(int p, const Exponents& e, int coeff = 1)
    {
        FormalSum s(p, e.size());
        FormalMonomial m{coeff, {}};
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) {
                std::vector<int> arg(e.size(), 0);
                arg[i] = 1;
                m.factors.push_back(FormalFactor{std::move(arg), e[i]});
            }
        }
        s.add(std::move(m));
        return s;
    }

    int prime() const { return p_; }
    std::size_t rank() const { return rank_; }
    const std::vector<FormalMonomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(FormalMonomial m)
    {
        m.coeff = mod_p(m.coeff, p_);
        if (m.coeff == 0) {
            return;
        }
        std::map<std::vector<int>, unsigned> merged;
        for (auto& f : m.factors) {
            if (f.arg.size() != rank_) {
                throw Error("FormalSum: argument has wrong length");
            }
            for (auto& a : f.arg) {
                a = mod_p(a, p_);
            }
            if (f.exponent == 0) {
                continue;
            }
            if (std::all_of(f.arg.begin(), f.arg.end(), [](int a) { return a == 0; })) {
                return; // u_0 = 0
            }
            merged[f.arg] += f.exponent;
        }
        m.factors.clear();
        for (auto& [arg, e] : merged) {
            m.factors.push_back(FormalFactor{arg, e});
        }
        for (auto it = terms_.begin(); it != terms_.end(); ++it) {
            if (it->factors == m.factors) {
                it->coeff = mod_p(it->coeff + m.coeff, p_);
                if (it->coeff == 0) {
                    terms_.erase(it);
                }
                return;
            }
        }
        auto pos = std::lower_bound(terms_.begin(), terms_.end(), m,
                                    [](const FormalMonomial& a, const FormalMonomial& b) { return a.factors < b.factors; });
        terms_.insert(pos, std::move(m));
    }

    FormalSum& operator+=(const FormalSum& o)
    {
        for (const auto& m : o.terms_) {
            add(m);
        }
        return *this;
    }

    /// Acts on arguments: a -> A a.
    FormalSum apply(const FpMatrix& A) const
    {
        if (A.rows() != rank_ || A.cols() != rank_) {
            throw Error("FormalSum::apply: matrix has wrong shape");
        }
        FormalSum out(p_, rank_);
        for (const auto& m : terms_) {
            FormalMonomial image{m.coeff, {}};
            for (const auto& f : m.factors) {
                image.factors.push_back(FormalFactor{A.apply(f.arg), f.exponent});
            }
            out.add(std::move(image));
        }
        return out;
    }

    static std::string argument_string(const std::vector<int>& arg, const std::vector<std::string>& names)
    {
        std::vector<std::string> parts;
        for (std::size_t i = 0; i < arg.size(); ++i) {
            if (arg[i] == 1) {
                parts.push_back(names.at(i));
            } else if (arg[i] != 0) {
                parts.push_back("[" + std::to_string(arg[i]) + "](" + names.at(i) + ")");
            }
        }
        std::string out;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            out += (i ? " +_F " : "") + parts[i];
        }
        return parts.size() > 1 ? "(" + out + ")" : out;
    }

    std::string to_string(const std::vector<std::string>& names) const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        for (const auto& m : terms_) {
            std::string mono;
            for (const auto& f : m.factors) {
                mono += (mono.empty() ? "" : "*") + argument_string(f.arg, names) +
                        (f.exponent > 1 ? "^" + std::to_string(f.exponent) : "");
            }
            if (mono.empty()) {
                mono = std::to_string(m.coeff);
            } else if (m.coeff != 1) {
                mono = std::to_string(m.coeff) + "*" + mono;
            }
            out += (out.empty() ? "" : " + ") + mono;
        }
        return out;
    }

private:
    int p_;
    std::size_t rank_;
    std::vector<FormalMonomial> terms_;
};

/// Sum of g(expr) over every element g of the matrix group generated by
/// `generators` (elements, not distinct images).
inline FormalSum weyl_orbit_formal(const FormalSum& expr, const std::vector<FpMatrix>& generators)
{
    const LinearAction group(expr.prime(), expr.rank(), generators);
    FormalSum out(expr.prime(), expr.rank());
    for (const auto& g : group.elements()) {
        out += expr.apply(g);
    }
    return out;
}

/// F_p[x_1..x_r]/(x_i^{p^n}), the model of K(n)*(B(Z/p)^r) with v_n = 1.
class CycRing {
public:
    CycRing(FGL fgl, std::size_t rank) : fgl_(std::move(fgl)), rank_(rank)
    {
        bound_ = static_cast<unsigned>(ipow(static_cast<std::size_t>(fgl_.p), fgl_.height));
        if (rank < 1 || rank > 3) {
            throw Error("CycRing: rank must lie in 1..3");
        }
        if (fgl_.degree < rank * (bound_ - 1)) {
            throw Error("CycRing: truncation degree " + std::to_string(fgl_.degree) + " is below r(p^n - 1) = " +
                        std::to_string(rank * (bound_ - 1)));
        }
    }

    const FGL& fgl() const { return fgl_; }
    int prime() const { return fgl_.p; }
    std::size_t rank() const { return rank_; }
    /// p^n: every exponent stays below this.
    unsigned exponent_bound() const { return bound_; }
    std::size_t dimension() const { return ipow(bound_, rank_); }

    PolyFp zero() const { return PolyFp(prime(), rank_); }
    PolyFp one() const { return PolyFp::constant(prime(), rank_, 1); }
    PolyFp variable(std::size_t i) const { return PolyFp::variable(prime(), rank_, i); }

    PolyFp reduce(const PolyFp& f) const { return f.truncate_exponents(bound_); }
    PolyFp mul(const PolyFp& a, const PolyFp& b) const { return reduce(a * b); }

    PolyFp from_series(const FpSeries& s) const { return reduce(s.to_poly()); }

    /// [a_1](x_1) +_F ... +_F [a_r](x_r) in the ring.
    PolyFp formal_value(const std::vector<int>& arg) const
    {
        const PrimeField k{prime()};
        FpSeries acc(k, rank_, fgl_.degree);
        bool first = true;
        for (std::size_t i = 0; i < rank_; ++i) {
            const int a = mod_p(arg.at(i), prime());
            if (a == 0) {
                continue;
            }
            const auto term = fgl_.multiple(static_cast<unsigned>(a), FpSeries::variable(k, rank_, fgl_.degree, i));
            acc = first ? term : fgl_.add(acc, term);
            first = false;
        }
        return from_series(acc);
    }

    PolyFp evaluate(const FormalSum& expr) const
    {
        if (expr.rank() != rank_ || expr.prime() != prime()) {
            throw Error("CycRing::evaluate: expression belongs to a different ring");
        }
        PolyFp out = zero();
        for (const auto& m : expr.terms()) {
            PolyFp term = PolyFp::constant(prime(), rank_, m.coeff);
            for (const auto& f : m.factors) {
                term = mul(term, reduce(formal_value(f.arg).pow(f.exponent)));
            }
            out += term;
        }
        return out;
    }

    /// Ring endomorphism x_i -> images[i].
    PolyFp substitute(const PolyFp& f, const std::vector<PolyFp>& images) const { return reduce(f.substitute(images)); }

    std::string to_string(const PolyFp& f, const std::vector<std::string>& names) const { return f.to_string(names); }

private:
    FGL fgl_;
    std::size_t rank_;
    unsigned bound_ = 2;
};

/// Closes the substitutions x_i -> images[g][i] under composition and sums
/// sigma(f) over the resulting group. Throws if more than `cap` elements appear.
inline PolyFp ring_orbit_sum(const CycRing& R, const PolyFp& f, const std::vector<std::vector<PolyFp>>& generators,
                             std::size_t cap = 24)
{
    std::vector<PolyFp> identity;
    for (std::size_t i = 0; i < R.rank(); ++i) {
        identity.push_back(R.variable(i));
    }
    auto key = [](const std::vector<PolyFp>& images) {
        std::vector<std::string> k;
        for (const auto& p : images) {
            k.push_back(p.to_string());
        }
        return k;
    };
    std::vector<std::vector<PolyFp>> elements{identity};
    std::set<std::vector<std::string>> seen{key(identity)};
    for (std::size_t k = 0; k < elements.size(); ++k) {
        for (const auto& g : generators) {
            std::vector<PolyFp> composite;
            for (const auto& img : elements[k]) {
                composite.push_back(R.substitute(img, g));
            }
            if (seen.insert(key(composite)).second) {
                if (elements.size() >= cap) {
                    throw Error("ring_orbit_sum: action fails to close within " + std::to_string(cap) + " elements");
                }
                elements.push_back(std::move(composite));
            }
        }
    }
    PolyFp out = R.zero();
    for (const auto& sigma : elements) {
        out += R.substitute(f, sigma);
    }
    return out;
}

struct OrbitRestriction {
    FormalSum formal;
    PolyFp via_formal;
    PolyFp via_ring;

    bool routes_agree() const { return via_formal == via_ring; }
};

/// Weyl-orbit restriction of expr computed twice: formally on arguments and
/// then evaluated, and by closing the ring substitutions x_j -> u_{A e_j}.
inline OrbitRestriction weyl_orbit_restriction(const CycRing& R, const FormalSum& expr,
                                               const std::vector<FpMatrix>& generators)
{
    OrbitRestriction out{weyl_orbit_formal(expr, generators), R.zero(), R.zero()};
    out.via_formal = R.evaluate(out.formal);
    std::vector<std::vector<PolyFp>> ring_gens;
    for (const auto& A : generators) {
        std::vector<PolyFp> images;
        for (std::size_t j = 0; j < R.rank(); ++j) {
            images.push_back(R.formal_value(A.column(j)));
        }
        ring_gens.push_back(std::move(images));
    }
    out.via_ring = ring_orbit_sum(R, R.evaluate(expr), ring_gens);
    return out;
}

} // namespace chromcat

#endif // CHROMCAT_CYC_HPP
