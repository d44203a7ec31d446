#ifndef CHROMCAT_TEST_ORACLES_HPP
#define CHROMCAT_TEST_ORACLES_HPP

// Brute-force reference implementations. Slow on purpose; they share no
// search code with the library.

#include <cstdint>
#include <filesystem>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "chromcat.hpp"

namespace oracle {

using namespace chromcat;

/// conj[a][b]: bitmask of g with g a g^-1 = b (orders up to 64).
class ConjugacyMasks {
public:
    explicit ConjugacyMasks(const FiniteGroup& G) : n_(G.order()), masks_(n_ * n_, 0)
    {
        if (n_ > 64) {
            throw Error("ConjugacyMasks: order above 64");
        }
        for (std::uint32_t g = 0; g < n_; ++g) {
            for (std::uint32_t a = 0; a < n_; ++a) {
                const auto b = G.conjugate(GroupElem{a}, GroupElem{g}).index;
                masks_[a * n_ + b] |= std::uint64_t{1} << g;
            }
        }
    }

    std::uint64_t operator()(GroupElem a, GroupElem b) const { return masks_[a.index * n_ + b.index]; }

private:
    std::size_t n_;
    std::vector<std::uint64_t> masks_;
};

/// Level-n test straight from the definition: every n-tuple of elements of W
/// (repetitions allowed) is simultaneously conjugate to its image.
inline bool level_by_all_tuples(const LinearMorphism& f, unsigned n, const ConjugacyMasks& masks)
{
    const auto elems = f.source->elements();
    std::vector<GroupElem> image;
    for (auto w : elems) {
        image.push_back(f(w));
    }
    auto recurse = [&](auto&& self, unsigned depth, std::uint64_t mask) -> bool {
        if (mask == 0) {
            return false;
        }
        if (depth == n) {
            return true;
        }
        for (std::size_t i = 0; i < elems.size(); ++i) {
            if (!self(self, depth + 1, mask & masks(elems[i], image[i]))) {
                return false;
            }
        }
        return true;
    };
    return recurse(recurse, 0, ~std::uint64_t{0});
}

/// Elementwise conjugacy: every w is conjugate to f(w).
inline bool maps_to_conjugates(const LinearMorphism& f)
{
    const FiniteGroup& G = f.source->group();
    for (auto w : f.source->elements()) {
        bool found = false;
        for (std::uint32_t g = 0; g < G.order() && !found; ++g) {
            found = G.conjugate(w, GroupElem{g}) == f(w);
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

/// Elementary abelian p-subgroups by closing every set of commuting
/// order-p elements, as sorted element-index sets, counted per rank.
inline std::map<std::size_t, std::size_t> elem_abelian_counts(const FiniteGroup& G, int p)
{
    std::vector<GroupElem> order_p;
    for (std::uint32_t i = 0; i < G.order(); ++i) {
        if (G.element_order(GroupElem{i}) == static_cast<std::size_t>(p)) {
            order_p.push_back(GroupElem{i});
        }
    }
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<std::vector<std::uint32_t>> frontier{{0}};
    seen.insert({0});
    while (!frontier.empty()) {
        std::vector<std::vector<std::uint32_t>> next;
        for (const auto& S : frontier) {
            for (auto x : order_p) {
                if (std::binary_search(S.begin(), S.end(), x.index)) {
                    continue;
                }
                bool commutes = true;
                for (auto s : S) {
                    commutes = commutes && G.commute(GroupElem{s}, x);
                }
                if (!commutes) {
                    continue;
                }
                // close S under multiplication by powers of x
                std::set<std::uint32_t> closed(S.begin(), S.end());
                GroupElem power = x;
                for (int k = 1; k < p; ++k) {
                    for (auto s : S) {
                        closed.insert(G.mul(GroupElem{s}, power).index);
                    }
                    power = G.mul(power, x);
                }
                std::vector<std::uint32_t> T(closed.begin(), closed.end());
                if (seen.insert(T).second) {
                    next.push_back(std::move(T));
                }
            }
        }
        frontier = std::move(next);
    }
    std::map<std::size_t, std::size_t> counts;
    for (const auto& S : seen) {
        std::size_t rank = 0;
        for (std::size_t size = 1; size < S.size(); size *= static_cast<std::size_t>(p)) {
            ++rank;
        }
        ++counts[rank];
    }
    return counts;
}

/// F_q by polynomial arithmetic on base-p digit vectors.
class SlowField {
public:
    SlowField(int p, std::vector<int> modulus) : p_(p), modulus_(std::move(modulus)) {}

    std::size_t degree() const { return modulus_.size() - 1; }

    std::size_t add(std::size_t a, std::size_t b) const
    {
        auto x = digits(a, p_, degree());
        auto y = digits(b, p_, degree());
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] = (x[i] + y[i]) % p_;
        }
        return from_digits(x, p_);
    }

    std::size_t mul(std::size_t a, std::size_t b) const
    {
        const auto x = digits(a, p_, degree());
        const auto y = digits(b, p_, degree());
        std::vector<int> prod(2 * degree(), 0);
        for (std::size_t i = 0; i < x.size(); ++i) {
            for (std::size_t j = 0; j < y.size(); ++j) {
                prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
            }
        }
        // reduce by the monic modulus, highest degree first
        for (std::size_t k = prod.size(); k-- > degree();) {
            const int c = prod[k];
            if (c == 0) {
                continue;
            }
            for (std::size_t i = 0; i <= degree(); ++i) {
                prod[k - degree() + i] = mod_p(prod[k - degree() + i] - c * modulus_[i], p_);
            }
        }
        prod.resize(degree());
        return from_digits(prod, p_);
    }

private:
    int p_;
    std::vector<int> modulus_;
};

/// Number of connected components of the point graph, by breadth-first search.
inline std::size_t colim_size_bfs(const ChromCategory& C, std::size_t q)
{
    const GaloisField F(q);
    const SlowField K(C.prime(), F.modulus());
    const std::size_t N = C.object_count();
    std::vector<std::size_t> offset;
    std::size_t total = 0;
    for (std::size_t i = 0; i < N; ++i) {
        offset.push_back(total);
        total += ipow(q, C.object(i)->rank());
    }
    std::vector<std::vector<std::size_t>> adj(total);
    for (std::size_t w = 0; w < N; ++w) {
        const std::size_t rw = C.object(w)->rank();
        for (std::size_t v = 0; v < N; ++v) {
            const std::size_t rv = C.object(v)->rank();
            for (const auto& M : C.hom(w, v)) {
                for (std::size_t x = 0; x < ipow(q, rw); ++x) {
                    std::vector<std::size_t> px(rw);
                    std::size_t k = x;
                    for (auto& c : px) {
                        c = k % q;
                        k /= q;
                    }
                    std::size_t y = 0;
                    for (std::size_t i = rv; i-- > 0;) {
                        std::size_t yi = 0;
                        for (std::size_t j = 0; j < rw; ++j) {
                            yi = K.add(yi, K.mul(static_cast<std::size_t>(M(i, j)), px[j]));
                        }
                        y = y * q + yi;
                    }
                    adj[offset[w] + x].push_back(offset[v] + y);
                    adj[offset[v] + y].push_back(offset[w] + x);
                }
            }
        }
    }
    std::vector<bool> seen(total, false);
    std::size_t components = 0;
    for (std::size_t s = 0; s < total; ++s) {
        if (seen[s]) {
            continue;
        }
        ++components;
        std::queue<std::size_t> todo;
        todo.push(s);
        seen[s] = true;
        while (!todo.empty()) {
            const auto u = todo.front();
            todo.pop();
            for (auto t : adj[u]) {
                if (!seen[t]) {
                    seen[t] = true;
                    todo.push(t);
                }
            }
        }
    }
    return components;
}

/// Membership of f in the span of `piece` over F_2 by trying every subset.
inline bool in_span_by_subsets(const PolyFp& f, const std::vector<PolyFp>& piece)
{
    if (piece.size() > 20) {
        throw Error("in_span_by_subsets: too many spanning elements");
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << piece.size()); ++mask) {
        PolyFp sum(f.prime(), f.variable_count());
        for (std::size_t i = 0; i < piece.size(); ++i) {
            if (mask >> i & 1) {
                sum += piece[i];
            }
        }
        if (sum == f) {
            return true;
        }
    }
    return false;
}

/// Dimension of the C-invariant degree-d polynomials over F_2, counting every
/// polynomial of degree d.
inline std::size_t invariant_dimension_by_subsets(const LinearAction& A, unsigned d)
{
    const auto monos = monomials_of_degree(A.variable_count(), d);
    std::size_t fixed = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << monos.size()); ++mask) {
        PolyFp f(2, A.variable_count());
        for (std::size_t i = 0; i < monos.size(); ++i) {
            if (mask >> i & 1) {
                f.add_term(monos[i], 1);
            }
        }
        fixed += is_invariant(f, A) ? 1 : 0;
    }
    std::size_t dim = 0;
    while ((std::size_t{1} << dim) < fixed) {
        ++dim;
    }
    return dim;
}

inline std::filesystem::path library_dir() { return CHROMCAT_DATA_DIR; }

/// Library groups of order at most `max_order`, built.
inline std::vector<FiniteGroup> library_groups(std::size_t max_order)
{
    std::vector<FiniteGroup> out;
    for (const auto& d : load_library(library_dir())) {
        try {
            auto G = d.build(max_order);
            out.push_back(std::move(G));
        } catch (const OrderCapExceeded&) {
        }
    }
    return out;
}

} // namespace oracle

#endif // CHROMCAT_TEST_ORACLES_HPP
