#ifndef CHROMCAT_ELEMAB_HPP
#define CHROMCAT_ELEMAB_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "chromcat/fp.hpp"
#include "chromcat/group.hpp"

namespace chromcat {

/// An elementary abelian p-subgroup with a chosen F_p basis.
///
/// Element k of elements() is the product of basis[i]^{c_i} where c is the
/// base-p expansion of k (least significant digit first). The owning group
/// must outlive the subgroup.
class ElemAbelian {
public:
    ElemAbelian(const FiniteGroup& group, int p, std::vector<GroupElem> basis)
        : group_(&group), p_(p), basis_(std::move(basis))
    {
        if (!is_prime(p)) {
            throw Error("ElemAbelian: p must be prime");
        }
        for (auto b : basis_) {
            if (b.index >= group.order() || group.element_order(b) != static_cast<std::size_t>(p)) {
                throw Error("ElemAbelian: basis element does not have order p");
            }
            for (auto c : basis_) {
                if (!group.commute(b, c)) {
                    throw Error("ElemAbelian: basis elements do not commute");
                }
            }
        }
        const std::size_t size = ipow(static_cast<std::size_t>(p), basis_.size());
        elements_.reserve(size);
        coord_index_.assign(group.order(), -1);
        for (std::size_t k = 0; k < size; ++k) {
            const auto coords = digits(k, p, basis_.size());
            GroupElem g = group.identity();
            for (std::size_t i = 0; i < basis_.size(); ++i) {
                for (int e = 0; e < coords[i]; ++e) {
                    g = group.mul(g, basis_[i]);
                }
            }
            if (coord_index_[g.index] != -1) {
                throw Error("ElemAbelian: basis is not independent");
            }
            coord_index_[g.index] = static_cast<std::int32_t>(k);
            elements_.push_back(g);
        }
        sorted_ = elements_;
        std::sort(sorted_.begin(), sorted_.end());
    }

    /// Subgroup on a given element set, with the lexicographically least
    /// basis by element index (greedy choice).
    static ElemAbelian with_canonical_basis(const FiniteGroup& group, int p, std::span<const GroupElem> element_set)
    {
        std::vector<GroupElem> sorted(element_set.begin(), element_set.end());
        std::sort(sorted.begin(), sorted.end());
        std::vector<GroupElem> basis;
        std::set<GroupElem> span{group.identity()};
        for (auto g : sorted) {
            if (span.contains(g)) {
                continue;
            }
            basis.push_back(g);
            std::set<GroupElem> next;
            GroupElem power = group.identity();
            for (int e = 0; e < p; ++e) {
                for (auto s : span) {
                    next.insert(group.mul(s, power));
                }
                power = group.mul(power, g);
            }
            span = std::move(next);
        }
        ElemAbelian out(group, p, std::move(basis));
        if (out.sorted_elements().size() != sorted.size() ||
            !std::equal(sorted.begin(), sorted.end(), out.sorted_elements().begin())) {
            throw Error("ElemAbelian: element set is not an elementary abelian subgroup");
        }
        return out;
    }

    const FiniteGroup& group() const { return *group_; }
    int prime() const { return p_; }
    std::size_t rank() const { return basis_.size(); }
    std::size_t size() const { return elements_.size(); }
    std::span<const GroupElem> basis() const { return basis_; }
    std::span<const GroupElem> elements() const { return elements_; }
    std::span<const GroupElem> sorted_elements() const { return sorted_; }

    bool contains(GroupElem g) const { return g.index < coord_index_.size() && coord_index_[g.index] >= 0; }

    /// Coordinate vector of g with respect to the basis.
    std::vector<int> coordinates(GroupElem g) const
    {
        return digits(coordinate_index(g), p_, basis_.size());
    }

    std::size_t coordinate_index(GroupElem g) const
    {
        if (!contains(g)) {
            throw Error("ElemAbelian: element " + group_->label(g) + " is not in the subgroup");
        }
        return static_cast<std::size_t>(coord_index_[g.index]);
    }

    GroupElem element_at(std::span<const int> coords) const
    {
        if (coords.size() != basis_.size()) {
            throw Error("ElemAbelian::element_at: coordinate length mismatch");
        }
        return elements_[from_digits(coords, p_)];
    }

    bool is_subgroup_of(const ElemAbelian& other) const
    {
        return std::all_of(basis_.begin(), basis_.end(), [&](GroupElem b) { return other.contains(b); });
    }

    /// Same element set (subgroup identity ignores the basis).
    bool same_subgroup(const ElemAbelian& other) const
    {
        return group_ == other.group_ && sorted_ == other.sorted_;
    }

    std::string describe() const
    {
        std::string out = "<";
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            out += (i ? ", " : "") + group_->label(basis_[i]);
        }
        return out + ">";
    }

private:
    const FiniteGroup* group_;
    int p_;
    std::vector<GroupElem> basis_;
    std::vector<GroupElem> elements_;
    std::vector<GroupElem> sorted_;
    std::vector<std::int32_t> coord_index_;
};

using SubgroupPtr = std::shared_ptr<const ElemAbelian>;

/// Every elementary abelian p-subgroup of G, trivial subgroup first,
/// ordered by rank and then by sorted element-index set.
inline std::vector<SubgroupPtr> enumerate_elem_abelians(const FiniteGroup& G, int p)
{
    if (!is_prime(p)) {
        throw Error("enumerate_elem_abelians: p must be prime");
    }
    std::vector<GroupElem> order_p;
    for (std::uint32_t i = 0; i < G.order(); ++i) {
        if (G.element_order(GroupElem{i}) == static_cast<std::size_t>(p)) {
            order_p.push_back(GroupElem{i});
        }
    }
    using ElementSet = std::vector<GroupElem>;
    std::set<ElementSet> found{ElementSet{G.identity()}};
    std::vector<ElemAbelian> layer{ElemAbelian(G, p, {})};
    std::vector<ElemAbelian> all = layer;
    while (!layer.empty()) {
        std::vector<ElemAbelian> next;
        for (const auto& S : layer) {
            for (auto g : order_p) {
                if (S.contains(g)) {
                    continue;
                }
                const auto basis = S.basis();
                if (!std::all_of(basis.begin(), basis.end(), [&](GroupElem b) { return G.commute(b, g); })) {
                    continue;
                }
                std::vector<GroupElem> extended(basis.begin(), basis.end());
                extended.push_back(g);
                ElemAbelian T(G, p, std::move(extended));
                ElementSet key(T.sorted_elements().begin(), T.sorted_elements().end());
                if (found.insert(key).second) {
                    next.push_back(ElemAbelian::with_canonical_basis(G, p, key));
                }
            }
        }
        all.insert(all.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    std::sort(all.begin(), all.end(), [](const ElemAbelian& a, const ElemAbelian& b) {
        if (a.rank() != b.rank()) {
            return a.rank() < b.rank();
        }
        return std::lexicographical_compare(a.sorted_elements().begin(), a.sorted_elements().end(),
                                            b.sorted_elements().begin(), b.sorted_elements().end());
    });
    std::vector<SubgroupPtr> out;
    out.reserve(all.size());
    for (auto& s : all) {
        out.push_back(std::make_shared<const ElemAbelian>(std::move(s)));
    }
    return out;
}

inline std::size_t p_rank(const FiniteGroup& G, int p)
{
    std::size_t r = 0;
    for (const auto& s : enumerate_elem_abelians(G, p)) {
        r = std::max(r, s->rank());
    }
    return r;
}

/// An injective homomorphism W -> V, stored as an r_V x r_W matrix whose
/// column j holds the coordinates in V of the image of W's j-th basis element.
struct LinearMorphism {
    SubgroupPtr source;
    SubgroupPtr target;
    FpMatrix matrix;

    GroupElem operator()(GroupElem w) const
    {
        const auto image = matrix.apply(source->coordinates(w));
        return target->element_at(image);
    }
};

/// g after f.
inline LinearMorphism compose(const LinearMorphism& g, const LinearMorphism& f)
{
    if (!f.target->same_subgroup(*g.source)) {
        throw Error("compose: morphisms are not composable");
    }
    return LinearMorphism{f.source, g.target, g.matrix * f.matrix};
}

inline GroupElem morphism_on_elements(const LinearMorphism& f, GroupElem w) { return f(w); }

/// All full-column-rank rows x cols matrices over F_p, column by column in
/// base-p counting order.
inline std::vector<FpMatrix> injective_matrices(int p, std::size_t rows, std::size_t cols)
{
    std::vector<FpMatrix> out;
    if (cols > rows) {
        return out;
    }
    const std::size_t vectors = ipow(static_cast<std::size_t>(p), rows);
    std::vector<std::size_t> choice;
    std::vector<std::vector<int>> columns;
    // depth-first over columns, skipping vectors in the span of earlier ones
    auto recurse = [&](auto&& self, std::size_t depth) -> void {
        if (depth == cols) {
            out.push_back(FpMatrix::from_columns(p, rows, columns));
            return;
        }
        for (std::size_t v = 0; v < vectors; ++v) {
            columns.push_back(digits(v, p, rows));
            if (FpMatrix::from_columns(p, rows, columns).rank() == depth + 1) {
                self(self, depth + 1);
            }
            columns.pop_back();
        }
    };
    recurse(recurse, 0);
    return out;
}

inline std::size_t injective_hom_count(int p, std::size_t source_rank, std::size_t target_rank)
{
    if (source_rank > target_rank) {
        return 0;
    }
    std::size_t count = 1;
    const std::size_t total = ipow(static_cast<std::size_t>(p), target_rank);
    for (std::size_t i = 0; i < source_rank; ++i) {
        count *= total - ipow(static_cast<std::size_t>(p), i);
    }
    return count;
}

inline std::vector<LinearMorphism> injective_homs(const SubgroupPtr& W, const SubgroupPtr& V)
{
    if (W->prime() != V->prime()) {
        throw Error("injective_homs: subgroups for different primes");
    }
    std::vector<LinearMorphism> out;
    for (auto& m : injective_matrices(W->prime(), V->rank(), W->rank())) {
        out.push_back(LinearMorphism{W, V, std::move(m)});
    }
    return out;
}

/// Matrix of w -> h w h^-1 as a map W -> V, or nothing if hWh^-1 is not inside V.
inline std::optional<FpMatrix> conjugation_matrix(const ElemAbelian& W, const ElemAbelian& V, GroupElem h)
{
    const FiniteGroup& G = W.group();
    std::vector<std::vector<int>> cols;
    cols.reserve(W.rank());
    for (auto b : W.basis()) {
        const GroupElem image = G.conjugate(b, h);
        if (!V.contains(image)) {
            return std::nullopt;
        }
        cols.push_back(V.coordinates(image));
    }
    return FpMatrix::from_columns(W.prime(), V.rank(), cols);
}

} // namespace chromcat

#endif // CHROMCAT_ELEMAB_HPP
