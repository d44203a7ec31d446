#ifndef CHROMCAT_GROUP_HPP
#define CHROMCAT_GROUP_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chromcat/fp.hpp"

namespace chromcat {

/// Index of an element in its owning FiniteGroup. Index 0 is the identity.
struct GroupElem {
    std::uint32_t index = 0;

    friend auto operator<=>(GroupElem, GroupElem) = default;
};

/// Permutation of {0, ..., degree-1} as an image array.
using Permutation = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultOrderCap = 2048;

/// Cycle notation, e.g. "(0 1 2)(3 4)"; the identity is "()".
inline std::string cycle_string(const Permutation& perm)
{
    std::string out;
    std::vector<bool> seen(perm.size(), false);
    for (std::uint32_t start = 0; start < perm.size(); ++start) {
        if (seen[start] || perm[start] == start) {
            continue;
        }
        out += '(';
        std::uint32_t i = start;
        bool first = true;
        while (!seen[i]) {
            seen[i] = true;
            if (!first) {
                out += ' ';
            }
            out += std::to_string(i);
            first = false;
            i = perm[i];
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

/// A finite group materialized as a Cayley table.
///
/// Immutable after construction. Products are table lookups; conjugation
/// follows the convention conjugate(g, h) = h g h^-1 throughout, which is
/// the map w -> g w g^-1 of the categories with h playing the role of g.
class FiniteGroup {
public:
    /// Closure of `generators` under composition, (a*b)(i) = a(b(i)).
    static FiniteGroup from_permutations(std::size_t degree,
                                         std::span<const Permutation> generators,
                                         std::size_t order_cap = kDefaultOrderCap,
                                         std::string name = {})
    {
        if (degree == 0) {
            throw Error("group_from_permutations: degree must be positive");
        }
        for (const auto& g : generators) {
            if (g.size() != degree) {
                throw Error("group_from_permutations: generator has wrong length");
            }
            std::vector<bool> hit(degree, false);
            for (auto v : g) {
                if (v >= degree || hit[v]) {
                    throw Error("group_from_permutations: generator is not a bijection");
                }
                hit[v] = true;
            }
        }
        Permutation id(degree);
        for (std::uint32_t i = 0; i < degree; ++i) {
            id[i] = i;
        }
        std::vector<Permutation> elements{id};
        std::map<Permutation, std::uint32_t> index{{id, 0}};
        for (std::size_t k = 0; k < elements.size(); ++k) {
            for (const auto& g : generators) {
                Permutation h = compose(g, elements[k]);
                if (!index.contains(h)) {
                    if (elements.size() >= order_cap) {
                        throw OrderCapExceeded("group_from_permutations: closure exceeds order cap " +
                                    std::to_string(order_cap));
                    }
                    index.emplace(h, static_cast<std::uint32_t>(elements.size()));
                    elements.push_back(std::move(h));
                }
            }
        }
        const std::size_t n = elements.size();
        std::vector<std::uint32_t> table(n * n);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                table[a * n + b] = index.at(compose(elements[a], elements[b]));
            }
        }
        std::vector<std::string> labels;
        labels.reserve(n);
        for (const auto& e : elements) {
            labels.push_back(cycle_string(e));
        }
        FiniteGroup g(n, std::move(table), std::move(labels), std::move(name));
        g.permutations_ = std::move(elements);
        return g;
    }

    /// Builds a group from an explicit Cayley table (row-major, index 0 the identity).
    static FiniteGroup from_table(std::size_t order, std::vector<std::uint32_t> table,
                                  std::vector<std::string> labels = {}, std::string name = {})
    {
        if (order == 0 || table.size() != order * order) {
            throw Error("FiniteGroup::from_table: table has wrong size");
        }
        if (labels.empty()) {
            for (std::size_t i = 0; i < order; ++i) {
                labels.push_back("g" + std::to_string(i));
            }
        }
        FiniteGroup g(order, std::move(table), std::move(labels), std::move(name));
        g.validate();
        return g;
    }

    std::size_t order() const { return order_; }
    const std::string& name() const { return name_; }
    GroupElem identity() const { return GroupElem{0}; }

    GroupElem element(std::size_t index) const
    {
        if (index >= order_) {
            throw Error("FiniteGroup::element: index out of range");
        }
        return GroupElem{static_cast<std::uint32_t>(index)};
    }

    GroupElem mul(GroupElem a, GroupElem b) const { return GroupElem{table_[a.index * order_ + b.index]}; }
    GroupElem inv(GroupElem a) const { return GroupElem{inverse_[a.index]}; }

    /// h g h^-1.
    GroupElem conjugate(GroupElem g, GroupElem h) const { return mul(mul(h, g), inv(h)); }

    const std::string& label(GroupElem g) const { return labels_[g.index]; }
    std::span<const std::string> labels() const { return labels_; }

    /// Underlying permutations, when the group was built from generators.
    std::span<const Permutation> permutations() const { return permutations_; }

    std::size_t element_order(GroupElem g) const { return orders_[g.index]; }

    std::size_t conjugacy_class(GroupElem g) const { return class_id_[g.index]; }
    std::size_t class_count() const { return class_count_; }

    std::optional<GroupElem> find_label(const std::string& label) const
    {
        for (std::size_t i = 0; i < order_; ++i) {
            if (labels_[i] == label) {
                return GroupElem{static_cast<std::uint32_t>(i)};
            }
        }
        return std::nullopt;
    }

    bool commute(GroupElem a, GroupElem b) const { return mul(a, b) == mul(b, a); }

    /// Pointwise centralizer of the tuple, in increasing index order.
    std::vector<GroupElem> centralizer(std::span<const GroupElem> elements) const
    {
        std::vector<GroupElem> out;
        for (std::uint32_t i = 0; i < order_; ++i) {
            const GroupElem g{i};
            if (std::all_of(elements.begin(), elements.end(), [&](GroupElem a) { return commute(g, a); })) {
                out.push_back(g);
            }
        }
        return out;
    }

    /// First g (by index) with g a_i g^-1 = b_i for every i.
    std::optional<GroupElem> simultaneous_conjugacy(std::span<const GroupElem> a,
                                                    std::span<const GroupElem> b) const
    {
        check_tuples(a, b);
        for (std::uint32_t i = 0; i < order_; ++i) {
            const GroupElem g{i};
            bool ok = true;
            for (std::size_t k = 0; k < a.size() && ok; ++k) {
                ok = conjugate(a[k], g) == b[k];
            }
            if (ok) {
                return g;
            }
        }
        return std::nullopt;
    }

    /// Same answer as simultaneous_conjugacy, found by walking the coset
    /// chain r * C(a_1, ..., a_k) instead of scanning the whole group.
    std::optional<GroupElem> simultaneous_conjugacy_pruned(std::span<const GroupElem> a,
                                                           std::span<const GroupElem> b) const
    {
        check_tuples(a, b);
        if (a.empty()) {
            return identity();
        }
        if (class_id_[a[0].index] != class_id_[b[0].index]) {
            return std::nullopt;
        }
        std::optional<GroupElem> rep;
        for (std::uint32_t i = 0; i < order_ && !rep; ++i) {
            if (conjugate(a[0], GroupElem{i}) == b[0]) {
                rep = GroupElem{i};
            }
        }
        if (!rep) {
            return std::nullopt;
        }
        std::vector<GroupElem> cent = centralizer(a.first(1));
        GroupElem r = *rep;
        for (std::size_t k = 1; k < a.size(); ++k) {
            // need c in cent with c a_k c^-1 = r^-1 b_k r
            const GroupElem target = conjugate(b[k], inv(r));
            std::optional<GroupElem> c;
            for (auto x : cent) {
                if (conjugate(a[k], x) == target) {
                    c = x;
                    break;
                }
            }
            if (!c) {
                return std::nullopt;
            }
            r = mul(r, *c);
            std::erase_if(cent, [&](GroupElem x) { return !commute(x, a[k]); });
        }
        GroupElem best = mul(r, cent.front());
        for (auto x : cent) {
            best = std::min(best, mul(r, x));
        }
        return best;
    }

    /// Checks the group axioms on the table; throws on violation.
    /// Associativity is exhaustive up to order 64 and sampled above.
    void validate(std::uint64_t seed = 1) const
    {
        for (std::size_t i = 0; i < table_.size(); ++i) {
            if (table_[i] >= order_) {
                throw Error("FiniteGroup: table is not closed");
            }
        }
        for (std::uint32_t g = 0; g < order_; ++g) {
            if (mul(GroupElem{0}, GroupElem{g}).index != g || mul(GroupElem{g}, GroupElem{0}).index != g) {
                throw Error("FiniteGroup: index 0 is not a two-sided identity");
            }
            if (mul(GroupElem{g}, inv(GroupElem{g})).index != 0) {
                throw Error("FiniteGroup: inverse table is wrong");
            }
        }
        auto assoc = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
            const GroupElem x{a}, y{b}, z{c};
            if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
                throw Error("FiniteGroup: table is not associative");
            }
        };
        if (order_ <= 64) {
            for (std::uint32_t a = 0; a < order_; ++a) {
                for (std::uint32_t b = 0; b < order_; ++b) {
                    for (std::uint32_t c = 0; c < order_; ++c) {
                        assoc(a, b, c);
                    }
                }
            }
        } else {
            std::mt19937_64 rng(seed);
            std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(order_ - 1));
            for (int i = 0; i < 10'000; ++i) {
                assoc(pick(rng), pick(rng), pick(rng));
            }
        }
    }

private:
    FiniteGroup(std::size_t order, std::vector<std::uint32_t> table, std::vector<std::string> labels,
                std::string name)
        : order_(order), table_(std::move(table)), labels_(std::move(labels)), name_(std::move(name))
    {
        if (labels_.size() != order_) {
            throw Error("FiniteGroup: label count does not match order");
        }
        if (std::any_of(table_.begin(), table_.end(), [&](std::uint32_t v) { return v >= order_; })) {
            throw Error("FiniteGroup: table is not closed");
        }
        inverse_.assign(order_, 0);
        for (std::uint32_t a = 0; a < order_; ++a) {
            bool found = false;
            for (std::uint32_t b = 0; b < order_ && !found; ++b) {
                if (table_[a * order_ + b] == 0) {
                    inverse_[a] = b;
                    found = true;
                }
            }
            if (!found) {
                throw Error("FiniteGroup: element without inverse");
            }
        }
        orders_.assign(order_, 0);
        for (std::uint32_t a = 0; a < order_; ++a) {
            std::size_t k = 1;
            GroupElem x{a};
            while (x.index != 0) {
                x = mul(x, GroupElem{a});
                if (++k > order_) {
                    throw Error("FiniteGroup: element of unbounded order");
                }
            }
            orders_[a] = k;
        }
        class_id_.assign(order_, order_);
        for (std::uint32_t a = 0; a < order_; ++a) {
            if (class_id_[a] != order_) {
                continue;
            }
            for (std::uint32_t h = 0; h < order_; ++h) {
                class_id_[conjugate(GroupElem{a}, GroupElem{h}).index] = class_count_;
            }
            ++class_count_;
        }
    }

    static Permutation compose(const Permutation& a, const Permutation& b)
    {
        Permutation out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            out[i] = a[b[i]];
        }
        return out;
    }

    void check_tuples(std::span<const GroupElem> a, std::span<const GroupElem> b) const
    {
        if (a.size() != b.size()) {
            throw Error("simultaneous_conjugacy: tuples differ in length");
        }
        for (auto x : a) {
            if (x.index >= order_) {
                throw Error("simultaneous_conjugacy: element not in group");
            }
        }
        for (auto x : b) {
            if (x.index >= order_) {
                throw Error("simultaneous_conjugacy: element not in group");
            }
        }
    }

    std::size_t order_ = 0;
    std::vector<std::uint32_t> table_;
    std::vector<std::uint32_t> inverse_;
    std::vector<std::string> labels_;
    std::string name_;
    std::vector<Permutation> permutations_;
    std::vector<std::size_t> orders_;
    std::vector<std::size_t> class_id_;
    std::size_t class_count_ = 0;
};

} // namespace chromcat

#endif // CHROMCAT_GROUP_HPP
