#ifndef CHROMCAT_CATEGORY_HPP
#define CHROMCAT_CATEGORY_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chromcat/elemab.hpp"
#include "chromcat/fp.hpp"
#include "chromcat/group.hpp"
#include "chromcat/parallel.hpp"

namespace chromcat {

/// Chromatic level n >= 0, or infinity (the Quillen category).
class Level {
public:
    constexpr Level() = default;

    static constexpr Level finite(unsigned n) { return Level(n, false); }
    static constexpr Level infinity() { return Level(0, true); }

    static Level parse(const std::string& text)
    {
        if (text == "inf" || text == "infinity") {
            return infinity();
        }
        std::size_t used = 0;
        long value = -1;
        try {
            value = std::stol(text, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != text.size() || value < 0) {
            throw Error("invalid level '" + text + "': expected a non-negative integer or 'inf'");
        }
        return finite(static_cast<unsigned>(value));
    }

    constexpr bool is_infinite() const { return infinite_; }

    unsigned value() const
    {
        if (infinite_) {
            throw Error("Level::value: level is infinite");
        }
        return n_;
    }

    /// min(n, rank).
    constexpr std::size_t cap(std::size_t rank) const { return infinite_ ? rank : std::min<std::size_t>(n_, rank); }

    std::string to_string() const { return infinite_ ? "inf" : std::to_string(n_); }

    friend constexpr bool operator==(Level, Level) = default;

private:
    constexpr Level(unsigned n, bool inf) : n_(n), infinite_(inf) {}

    unsigned n_ = 0;
    bool infinite_ = false;
};

struct SubgroupWitness {
    std::vector<GroupElem> generators;
    GroupElem witness;
};

/// Outcome of the level-n test: per-subgroup witnesses when it holds, the
/// generators of a subgroup with no simultaneous-conjugacy witness otherwise.
struct LevelCertificate {
    bool holds = true;
    std::vector<SubgroupWitness> witnesses;
    std::vector<GroupElem> failing_generators;
};

namespace detail {

inline const std::vector<std::vector<std::vector<int>>>& cached_subspaces(int p, std::size_t dim, std::size_t k)
{
    thread_local std::map<std::tuple<int, std::size_t, std::size_t>, std::vector<std::vector<std::vector<int>>>> cache;
    auto key = std::make_tuple(p, dim, k);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, subspaces_of_dimension(p, dim, k)).first;
    }
    return it->second;
}

} // namespace detail

/// Tests the level-n condition on f: W -> V by checking, for every subgroup
/// S of W of rank min(n, rank W), that the basis tuple of S and its image
/// are simultaneously conjugate. A witness for S also serves every subgroup
/// of S, so smaller ranks need no separate check.
inline LevelCertificate check_level(const LinearMorphism& f, Level n)
{
    const ElemAbelian& W = *f.source;
    const FiniteGroup& G = W.group();
    const std::size_t k = n.cap(W.rank());
    LevelCertificate cert;
    std::vector<GroupElem> gens(k), images(k);
    for (const auto& basis : detail::cached_subspaces(W.prime(), W.rank(), k)) {
        for (std::size_t i = 0; i < k; ++i) {
            gens[i] = W.element_at(basis[i]);
            images[i] = f(gens[i]);
        }
        auto witness = G.simultaneous_conjugacy_pruned(gens, images);
        if (!witness) {
            cert.holds = false;
            cert.witnesses.clear();
            cert.failing_generators = gens;
            return cert;
        }
        cert.witnesses.push_back(SubgroupWitness{gens, *witness});
    }
    return cert;
}

inline bool is_level_n_morphism(const LinearMorphism& f, Level n) { return check_level(f, n).holds; }

namespace detail {

/// check_level without certificates, with an elementwise conjugacy-class
/// filter first (necessary for every level n >= 1).
inline bool level_holds(const LinearMorphism& f, Level n)
{
    const ElemAbelian& W = *f.source;
    const FiniteGroup& G = W.group();
    const std::size_t k = n.cap(W.rank());
    if (k == 0) {
        return true;
    }
    for (auto w : W.elements()) {
        if (G.conjugacy_class(w) != G.conjugacy_class(f(w))) {
            return false;
        }
    }
    if (k == 1) {
        return true;
    }
    std::vector<GroupElem> gens(k), images(k);
    for (const auto& basis : cached_subspaces(W.prime(), W.rank(), k)) {
        for (std::size_t i = 0; i < k; ++i) {
            gens[i] = W.element_at(basis[i]);
            images[i] = f(gens[i]);
        }
        if (!G.simultaneous_conjugacy_pruned(gens, images)) {
            return false;
        }
    }
    return true;
}

using WitnessTable = std::map<FpMatrix, GroupElem>;

/// For every ordered object pair, the conjugation-induced matrices with the
/// first inducing element (by index).
inline std::vector<WitnessTable> conjugation_scan(const FiniteGroup& G, std::span<const SubgroupPtr> objects)
{
    const std::size_t N = objects.size();
    std::map<std::vector<GroupElem>, std::size_t> by_elements;
    for (std::size_t i = 0; i < N; ++i) {
        const auto e = objects[i]->sorted_elements();
        by_elements.emplace(std::vector<GroupElem>(e.begin(), e.end()), i);
    }
    std::vector<std::vector<std::size_t>> supersets(N);
    for (std::size_t a = 0; a < N; ++a) {
        for (std::size_t b = 0; b < N; ++b) {
            if (objects[a]->rank() <= objects[b]->rank() && objects[a]->is_subgroup_of(*objects[b])) {
                supersets[a].push_back(b);
            }
        }
    }
    std::vector<WitnessTable> table(N * N);
    parallel_for(N, [&](std::size_t w) {
        const ElemAbelian& W = *objects[w];
        std::vector<GroupElem> conj(W.size());
        for (std::uint32_t gi = 0; gi < G.order(); ++gi) {
            const GroupElem g{gi};
            for (std::size_t i = 0; i < W.size(); ++i) {
                conj[i] = G.conjugate(W.elements()[i], g);
            }
            std::vector<GroupElem> key = conj;
            std::sort(key.begin(), key.end());
            const std::size_t image = by_elements.at(key);
            for (auto v : supersets[image]) {
                auto m = conjugation_matrix(W, *objects[v], g);
                table[w * N + v].try_emplace(std::move(*m), g);
            }
        }
    });
    return table;
}

} // namespace detail

enum class CategoryKind { chromatic, quillen, subring };

/// A category on the elementary abelian p-subgroups of G with a chosen
/// hom-set for every ordered pair. The group must outlive the category.
class ChromCategory {
public:
    ChromCategory(const FiniteGroup& group, int p, CategoryKind kind, std::optional<Level> level,
                  std::vector<SubgroupPtr> objects, std::vector<std::vector<FpMatrix>> homs,
                  std::vector<detail::WitnessTable> witnesses)
        : group_(&group), p_(p), kind_(kind), level_(level), objects_(std::move(objects)),
          homs_(std::move(homs)), witnesses_(std::move(witnesses))
    {
        const std::size_t N = objects_.size();
        if (homs_.size() != N * N || witnesses_.size() != N * N) {
            throw Error("ChromCategory: hom table has wrong size");
        }
        for (auto& h : homs_) {
            std::sort(h.begin(), h.end());
            h.erase(std::unique(h.begin(), h.end()), h.end());
        }
    }

    const FiniteGroup& group() const { return *group_; }
    int prime() const { return p_; }
    CategoryKind kind() const { return kind_; }
    std::optional<Level> level() const { return level_; }

    std::string name() const
    {
        switch (kind_) {
        case CategoryKind::quillen:
            return "A";
        case CategoryKind::subring:
            return "C_R";
        case CategoryKind::chromatic:
            break;
        }
        return "A^(" + level_.value_or(Level{}).to_string() + ")";
    }

    std::size_t object_count() const { return objects_.size(); }
    std::span<const SubgroupPtr> objects() const { return objects_; }
    const SubgroupPtr& object(std::size_t i) const { return objects_.at(i); }

    std::span<const FpMatrix> hom(std::size_t w, std::size_t v) const { return homs_.at(w * objects_.size() + v); }

    bool contains(std::size_t w, std::size_t v, const FpMatrix& m) const
    {
        const auto h = hom(w, v);
        return std::binary_search(h.begin(), h.end(), m);
    }

    std::vector<LinearMorphism> morphisms(std::size_t w, std::size_t v) const
    {
        std::vector<LinearMorphism> out;
        for (const auto& m : hom(w, v)) {
            out.push_back(LinearMorphism{objects_[w], objects_[v], m});
        }
        return out;
    }

    /// First g with f(x) = g x g^-1 on W, if f is conjugation-induced.
    std::optional<GroupElem> conjugation_witness(std::size_t w, std::size_t v, const FpMatrix& m) const
    {
        const auto& table = witnesses_.at(w * objects_.size() + v);
        auto it = table.find(m);
        if (it == table.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    const detail::WitnessTable& conjugation_table(std::size_t w, std::size_t v) const
    {
        return witnesses_.at(w * objects_.size() + v);
    }

    std::size_t morphism_count() const
    {
        std::size_t total = 0;
        for (const auto& h : homs_) {
            total += h.size();
        }
        return total;
    }

    std::optional<std::size_t> index_of(const ElemAbelian& S) const
    {
        for (std::size_t i = 0; i < objects_.size(); ++i) {
            if (objects_[i]->same_subgroup(S)) {
                return i;
            }
        }
        return std::nullopt;
    }

private:
    const FiniteGroup* group_;
    int p_;
    CategoryKind kind_;
    std::optional<Level> level_;
    std::vector<SubgroupPtr> objects_;
    std::vector<std::vector<FpMatrix>> homs_;
    std::vector<detail::WitnessTable> witnesses_;
};

/// Hom-set-by-hom-set equality over identical object lists.
inline bool same_homs(const ChromCategory& a, const ChromCategory& b)
{
    const std::size_t N = a.object_count();
    if (N != b.object_count()) {
        return false;
    }
    for (std::size_t i = 0; i < N; ++i) {
        if (!a.object(i)->same_subgroup(*b.object(i))) {
            return false;
        }
    }
    for (std::size_t w = 0; w < N; ++w) {
        for (std::size_t v = 0; v < N; ++v) {
            const auto x = a.hom(w, v);
            const auto y = b.hom(w, v);
            if (!std::equal(x.begin(), x.end(), y.begin(), y.end())) {
                return false;
            }
        }
    }
    return true;
}

/// Every hom-set of `a` is contained in the matching hom-set of `b`.
inline bool homs_subset(const ChromCategory& a, const ChromCategory& b)
{
    const std::size_t N = a.object_count();
    if (N != b.object_count()) {
        return false;
    }
    for (std::size_t w = 0; w < N; ++w) {
        for (std::size_t v = 0; v < N; ++v) {
            const auto x = a.hom(w, v);
            const auto y = b.hom(w, v);
            if (!std::includes(y.begin(), y.end(), x.begin(), x.end())) {
                return false;
            }
        }
    }
    return true;
}

/// Morphisms generated by inclusion and conjugation, scanned directly over G.
inline ChromCategory quillen_category(const FiniteGroup& G, int p)
{
    auto objects = enumerate_elem_abelians(G, p);
    auto witnesses = detail::conjugation_scan(G, objects);
    std::vector<std::vector<FpMatrix>> homs(witnesses.size());
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
        for (const auto& [m, g] : witnesses[i]) {
            homs[i].push_back(m);
        }
    }
    return ChromCategory(G, p, CategoryKind::quillen, Level::infinity(), std::move(objects), std::move(homs),
                         std::move(witnesses));
}

/// A^(n): injective homomorphisms passing the level-n test. Level 0 admits
/// every injective homomorphism; level infinity is the Quillen category.
inline ChromCategory build_category(const FiniteGroup& G, int p, Level n)
{
    if (n.is_infinite()) {
        return quillen_category(G, p);
    }
    auto objects = enumerate_elem_abelians(G, p);
    auto witnesses = detail::conjugation_scan(G, objects);
    const std::size_t N = objects.size();
    std::size_t max_rank = 0;
    for (const auto& o : objects) {
        max_rank = std::max(max_rank, o->rank());
    }
    std::map<std::pair<std::size_t, std::size_t>, std::vector<FpMatrix>> candidates;
    for (std::size_t a = 0; a <= max_rank; ++a) {
        for (std::size_t b = a; b <= max_rank; ++b) {
            candidates.emplace(std::make_pair(a, b), injective_matrices(p, b, a));
        }
    }
    std::vector<std::vector<FpMatrix>> homs(N * N);
    detail::parallel_for(N * N, [&](std::size_t idx) {
        const std::size_t w = idx / N;
        const std::size_t v = idx % N;
        if (objects[w]->rank() > objects[v]->rank()) {
            return;
        }
        const auto& table = witnesses[idx];
        for (const auto& m : candidates.at({objects[w]->rank(), objects[v]->rank()})) {
            if (table.contains(m) || detail::level_holds(LinearMorphism{objects[w], objects[v], m}, n)) {
                homs[idx].push_back(m);
            }
        }
    });
    return ChromCategory(G, p, CategoryKind::chromatic, n, std::move(objects), std::move(homs), std::move(witnesses));
}

} // namespace chromcat

#endif // CHROMCAT_CATEGORY_HPP
