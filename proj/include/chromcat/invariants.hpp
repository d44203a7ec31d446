#ifndef CHROMCAT_INVARIANTS_HPP
#define CHROMCAT_INVARIANTS_HPP

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include "chromcat/fp.hpp"
#include "chromcat/poly.hpp"

namespace chromcat {

/// A finite matrix group acting on polynomial variables by substitute_linear.
class LinearAction {
public:
    LinearAction(int p, std::size_t nvars, std::vector<FpMatrix> generators)
        : p_(p), nvars_(nvars), generators_(std::move(generators))
    {
        for (const auto& g : generators_) {
            if (g.rows() != nvars || g.cols() != nvars || g.prime() != p || !g.inverse()) {
                throw Error("LinearAction: generators must be invertible " + std::to_string(nvars) + "x" +
                            std::to_string(nvars) + " matrices over F_" + std::to_string(p));
            }
        }
        std::set<FpMatrix> seen{FpMatrix::identity(p, nvars)};
        elements_.push_back(FpMatrix::identity(p, nvars));
        for (std::size_t k = 0; k < elements_.size(); ++k) {
            for (const auto& g : generators_) {
                FpMatrix h = g * elements_[k];
                if (seen.insert(h).second) {
                    elements_.push_back(std::move(h));
                }
            }
        }
    }

    int prime() const { return p_; }
    std::size_t variable_count() const { return nvars_; }
    const std::vector<FpMatrix>& generators() const { return generators_; }
    /// Identity first, then in closure order.
    const std::vector<FpMatrix>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }

private:
    int p_;
    std::size_t nvars_;
    std::vector<FpMatrix> generators_;
    std::vector<FpMatrix> elements_;
};

inline bool is_invariant(const PolyFp& f, const LinearAction& A)
{
    for (const auto& g : A.generators()) {
        if (f.substitute_linear(g) != f) {
            return false;
        }
    }
    return true;
}

/// Sum over the distinct polynomials in the orbit of f.
inline PolyFp orbit_sum(const PolyFp& f, const LinearAction& A)
{
    std::vector<PolyFp> orbit;
    for (const auto& g : A.elements()) {
        PolyFp image = f.substitute_linear(g);
        if (std::find(orbit.begin(), orbit.end(), image) == orbit.end()) {
            orbit.push_back(std::move(image));
        }
    }
    PolyFp sum(f.prime(), f.variable_count());
    for (const auto& h : orbit) {
        sum += h;
    }
    return sum;
}

/// Exponent vectors of total degree d, in descending graded-lex order.
inline std::vector<Exponents> monomials_of_degree(std::size_t nvars, unsigned d)
{
    std::vector<Exponents> out;
    if (nvars == 0) {
        if (d == 0) {
            out.emplace_back();
        }
        return out;
    }
    Exponents e(nvars, 0);
    auto recurse = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i + 1 == nvars) {
            e[i] = left;
            out.push_back(e);
            return;
        }
        for (unsigned k = left + 1; k-- > 0;) {
            e[i] = k;
            self(self, i + 1, left - k);
        }
    };
    recurse(recurse, 0, d);
    return out;
}

namespace detail {

inline std::vector<int> coefficient_vector(const PolyFp& f, const std::vector<Exponents>& basis)
{
    std::vector<int> v(basis.size(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        v[i] = f.coefficient(basis[i]);
    }
    return v;
}

inline PolyFp from_coefficients(int p, std::size_t nvars, const std::vector<Exponents>& basis,
                                const std::vector<int>& v)
{
    PolyFp f(p, nvars);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        f.add_term(basis[i], v[i]);
    }
    return f;
}

} // namespace detail

/// Basis of the invariant degree-d forms, in reduced echelon form with
/// respect to the descending monomial order.
inline std::vector<PolyFp> invariant_basis(const LinearAction& A, unsigned d)
{
    const int p = A.prime();
    const std::size_t n = A.variable_count();
    const auto basis = monomials_of_degree(n, d);
    const std::size_t k = basis.size();
    FpMatrix stacked(p, k * A.generators().size(), k);
    for (std::size_t g = 0; g < A.generators().size(); ++g) {
        for (std::size_t j = 0; j < k; ++j) {
            const PolyFp m = PolyFp::monomial(p, basis[j]);
            const auto col = detail::coefficient_vector(m.substitute_linear(A.generators()[g]) - m, basis);
            for (std::size_t i = 0; i < k; ++i) {
                stacked.set(g * k + i, j, col[i]);
            }
        }
    }
    const auto kernel = stacked.kernel_basis();
    if (kernel.empty()) {
        return {};
    }
    auto echelon = FpMatrix::from_rows(p, kernel);
    const auto pivots = echelon.row_reduce();
    std::vector<PolyFp> out;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        out.push_back(detail::from_coefficients(p, n, basis, echelon.to_rows()[r]));
    }
    return out;
}

/// Whether the polynomials span the same F_p-subspace.
inline bool same_span(const std::vector<PolyFp>& a, const std::vector<PolyFp>& b)
{
    std::set<Exponents, GrlexDescending> support;
    for (const auto* list : {&a, &b}) {
        for (const auto& f : *list) {
            for (const auto& [e, c] : f.terms()) {
                support.insert(e);
            }
        }
    }
    if (a.empty() && b.empty()) {
        return true;
    }
    const int p = (a.empty() ? b : a).front().prime();
    const std::vector<Exponents> basis(support.begin(), support.end());
    auto rank_of = [&](const std::vector<PolyFp>& polys) {
        std::vector<std::vector<int>> rows;
        for (const auto& f : polys) {
            rows.push_back(detail::coefficient_vector(f, basis));
        }
        return rows.empty() ? std::size_t{0} : FpMatrix::from_rows(p, rows).rank();
    };
    std::vector<PolyFp> both = a;
    both.insert(both.end(), b.begin(), b.end());
    const std::size_t r = rank_of(both);
    return r == rank_of(a) && r == rank_of(b);
}

/// Products of the generators of total degree exactly d.
inline std::vector<PolyFp> subring_graded_piece(const std::vector<PolyFp>& generators, unsigned d, int p,
                                                std::size_t nvars)
{
    std::vector<const PolyFp*> positive;
    for (const auto& g : generators) {
        if (!g.is_homogeneous()) {
            throw Error("subring_membership: generator " + g.to_string() + " is not homogeneous");
        }
        if (g.degree() > 0) {
            positive.push_back(&g);
        }
    }
    std::vector<PolyFp> out;
    PolyFp current = PolyFp::constant(p, nvars, 1);
    auto recurse = [&](auto&& self, std::size_t i, unsigned left, const PolyFp& acc) -> void {
        if (left == 0) {
            out.push_back(acc);
            return;
        }
        if (i == positive.size()) {
            return;
        }
        const unsigned deg = static_cast<unsigned>(positive[i]->degree());
        PolyFp power = acc;
        for (unsigned used = 0; used <= left; used += deg) {
            self(self, i + 1, left - used, power);
            power *= *positive[i];
        }
    };
    recurse(recurse, 0, d, current);
    return out;
}

/// Whether f lies in the degree-(deg f) piece of the subring generated by
/// `generators`, decided by linear algebra on that piece.
inline bool subring_membership(const PolyFp& f, const std::vector<PolyFp>& generators, unsigned degree_bound = 12)
{
    if (!f.is_homogeneous()) {
        throw Error("subring_membership: " + f.to_string() + " is not homogeneous");
    }
    if (f.is_zero()) {
        for (const auto& g : generators) {
            if (!g.is_homogeneous()) {
                throw Error("subring_membership: generator " + g.to_string() + " is not homogeneous");
            }
        }
        return true;
    }
    const unsigned d = static_cast<unsigned>(f.degree());
    if (d > degree_bound) {
        throw Error("subring_membership: degree " + std::to_string(d) + " exceeds bound " +
                    std::to_string(degree_bound));
    }
    auto piece = subring_graded_piece(generators, d, f.prime(), f.variable_count());
    std::vector<PolyFp> with_f = piece;
    with_f.push_back(f);
    return same_span(piece, with_f);
}

} // namespace chromcat

#endif // CHROMCAT_INVARIANTS_HPP
