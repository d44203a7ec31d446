#ifndef CHROMCAT_COLIMIT_HPP
#define CHROMCAT_COLIMIT_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "json.hpp"

#include "chromcat/category.hpp"
#include "chromcat/gf.hpp"

namespace chromcat {

/// Point k of F_q^r: base-q digits of k, least significant first.
inline std::vector<std::size_t> fq_point(std::size_t index, std::size_t q, std::size_t rank)
{
    std::vector<std::size_t> out(rank);
    for (std::size_t i = 0; i < rank; ++i) {
        out[i] = index % q;
        index /= q;
    }
    return out;
}

inline std::size_t fq_point_index(std::span<const std::size_t> point, std::size_t q)
{
    std::size_t index = 0;
    for (std::size_t i = point.size(); i-- > 0;) {
        index = index * q + point[i];
    }
    return index;
}

/// All q^rank points of V tensor F_q.
inline std::vector<std::vector<std::size_t>> fq_points(const ElemAbelian& V, const GaloisField& F)
{
    if (F.characteristic() != V.prime()) {
        throw Error("fq_points: q = " + std::to_string(F.order()) + " is not a power of p = " +
                    std::to_string(V.prime()));
    }
    std::vector<std::vector<std::size_t>> out;
    const std::size_t n = ipow(F.order(), V.rank());
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.push_back(fq_point(k, F.order(), V.rank()));
    }
    return out;
}

/// F_q-linear extension of an F_p matrix applied to a point.
inline std::vector<std::size_t> push_forward(const FpMatrix& M, std::span<const std::size_t> x, const GaloisField& F)
{
    std::vector<std::size_t> y(M.rows(), 0);
    for (std::size_t i = 0; i < M.rows(); ++i) {
        for (std::size_t j = 0; j < M.cols(); ++j) {
            if (M(i, j) != 0) {
                y[i] = F.add(y[i], F.scale(M(i, j), x[j]));
            }
        }
    }
    return y;
}

struct ColimResult {
    std::size_t q = 0;
    std::vector<std::size_t> object_offsets; // node id of point 0 of each object
    std::vector<std::size_t> points_per_object;
    std::vector<std::size_t> object_ranks;
    std::size_t size = 0; // number of classes
    std::vector<std::size_t> class_of; // node id -> class id
    std::vector<std::size_t> representatives; // class id -> least node id
    std::vector<std::size_t> class_sizes;

    std::size_t node(std::size_t object, std::size_t point) const { return object_offsets.at(object) + point; }

    /// (object, point index) of a node id.
    std::pair<std::size_t, std::size_t> locate(std::size_t node_id) const
    {
        auto it = std::upper_bound(object_offsets.begin(), object_offsets.end(), node_id);
        const std::size_t obj = static_cast<std::size_t>(it - object_offsets.begin()) - 1;
        return {obj, node_id - object_offsets[obj]};
    }
};

namespace detail {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t x)
    {
        std::size_t root = x;
        while (parent_[root] != root) {
            root = parent_[root];
        }
        while (parent_[x] != root) {
            x = std::exchange(parent_[x], root);
        }
        return root;
    }

    /// The smaller root survives, so every root is the least node of its class.
    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent_[std::max(a, b)] = std::min(a, b);
        }
    }

private:
    std::vector<std::size_t> parent_;
};

} // namespace detail

/// Points of the disjoint union over objects, glued along every morphism of
/// every listed category. The categories must share their object list.
inline ColimResult colim_points(const std::vector<const ChromCategory*>& categories, const GaloisField& F)
{
    if (categories.empty()) {
        throw Error("colim_points: no category given");
    }
    const ChromCategory& C = *categories.front();
    for (const auto* other : categories) {
        if (other->object_count() != C.object_count() || other->prime() != C.prime()) {
            throw Error("colim_points: categories have different objects");
        }
    }
    if (F.characteristic() != C.prime()) {
        throw Error("colim_points: q = " + std::to_string(F.order()) + " is not a power of p = " +
                    std::to_string(C.prime()));
    }
    const std::size_t N = C.object_count();
    const std::size_t q = F.order();
    ColimResult result;
    result.q = q;
    std::size_t total = 0;
    for (std::size_t i = 0; i < N; ++i) {
        result.object_offsets.push_back(total);
        result.object_ranks.push_back(C.object(i)->rank());
        result.points_per_object.push_back(ipow(q, C.object(i)->rank()));
        total += result.points_per_object.back();
    }
    // relations per (W, V) pair, then a single-owner merge
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> relations(N * N);
    for (const auto* cat : categories) {
        detail::parallel_for(N * N, [&](std::size_t idx) {
            const std::size_t w = idx / N;
            const std::size_t v = idx % N;
            for (const auto& M : cat->hom(w, v)) {
                for (std::size_t x = 0; x < result.points_per_object[w]; ++x) {
                    const auto px = fq_point(x, q, M.cols());
                    const auto y = fq_point_index(push_forward(M, px, F), q);
                    relations[idx].emplace_back(result.object_offsets[w] + x, result.object_offsets[v] + y);
                }
            }
        });
    }
    detail::UnionFind uf(total);
    for (const auto& rel : relations) {
        for (auto [a, b] : rel) {
            uf.unite(a, b);
        }
    }
    result.class_of.assign(total, 0);
    std::vector<std::size_t> class_of_root(total, static_cast<std::size_t>(-1));
    for (std::size_t node = 0; node < total; ++node) {
        const std::size_t root = uf.find(node);
        if (class_of_root[root] == static_cast<std::size_t>(-1)) {
            class_of_root[root] = result.representatives.size();
            result.representatives.push_back(root);
            result.class_sizes.push_back(0);
        }
        result.class_of[node] = class_of_root[root];
        ++result.class_sizes[result.class_of[node]];
    }
    result.size = result.representatives.size();
    return result;
}

inline ColimResult colim_points(const ChromCategory& C, const GaloisField& F) { return colim_points({&C}, F); }

inline ColimResult colim_points(const ChromCategory& C, std::size_t q) { return colim_points(C, GaloisField(q)); }

struct TowerLevel {
    unsigned n = 0;
    ColimResult colim;
};

struct FiltrationTower {
    std::size_t q = 0;
    std::vector<TowerLevel> levels; // n = max(p-rank, 1) down to 1
    /// maps[i]: classes of levels[i] -> classes of levels[i + 1]
    std::vector<std::vector<std::size_t>> maps;
    std::vector<bool> surjective;

    std::vector<std::size_t> sizes() const
    {
        std::vector<std::size_t> out;
        for (const auto& l : levels) {
            out.push_back(l.colim.size);
        }
        return out;
    }
};

/// Colimit point counts for n = max(p-rank, 1) .. 1 with the connecting
/// maps. Each map must be well defined, which holds because hom-sets only
/// grow as n decreases; this is checked, as is surjectivity.
inline FiltrationTower filtration_tower(const FiniteGroup& G, int p, std::size_t q)
{
    const GaloisField F(q);
    if (F.characteristic() != p) {
        throw Error("filtration_tower: q = " + std::to_string(q) + " is not a power of p = " + std::to_string(p));
    }
    const unsigned top = static_cast<unsigned>(std::max<std::size_t>(p_rank(G, p), 1));
    FiltrationTower tower;
    tower.q = q;
    for (unsigned n = top; n >= 1; --n) {
        const auto C = build_category(G, p, Level::finite(n));
        tower.levels.push_back(TowerLevel{n, colim_points(C, F)});
    }
    for (std::size_t i = 0; i + 1 < tower.levels.size(); ++i) {
        const auto& from = tower.levels[i].colim;
        const auto& to = tower.levels[i + 1].colim;
        std::vector<std::size_t> map(from.size, static_cast<std::size_t>(-1));
        for (std::size_t node = 0; node < from.class_of.size(); ++node) {
            auto& slot = map[from.class_of[node]];
            if (slot == static_cast<std::size_t>(-1)) {
                slot = to.class_of[node];
            } else if (slot != to.class_of[node]) {
                throw Error("filtration_tower: connecting map is not well defined");
            }
        }
        std::vector<bool> hit(to.size, false);
        for (auto c : map) {
            hit[c] = true;
        }
        tower.surjective.push_back(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
        tower.maps.push_back(std::move(map));
    }
    return tower;
}

/// Isomorphism classes of maximal objects (no morphism into a larger rank).
inline std::size_t component_count(const ChromCategory& C)
{
    const std::size_t N = C.object_count();
    std::vector<std::size_t> maximal;
    for (std::size_t w = 0; w < N; ++w) {
        bool is_max = true;
        for (std::size_t v = 0; v < N && is_max; ++v) {
            if (C.object(v)->rank() > C.object(w)->rank() && !C.hom(w, v).empty()) {
                is_max = false;
            }
        }
        if (is_max) {
            maximal.push_back(w);
        }
    }
    std::vector<std::size_t> rep;
    for (auto w : maximal) {
        bool found = false;
        for (auto r : rep) {
            for (const auto& f : C.hom(r, w)) {
                auto inv = f.inverse();
                if (inv && C.contains(w, r, *inv)) {
                    found = true;
                    break;
                }
            }
            if (found) {
                break;
            }
        }
        if (!found) {
            rep.push_back(w);
        }
    }
    return rep.size();
}

inline nlohmann::json colim_classes_json(const ColimResult& r)
{
    nlohmann::json classes = nlohmann::json::array();
    for (std::size_t c = 0; c < r.size; ++c) {
        const auto [obj, pt] = r.locate(r.representatives[c]);
        classes.push_back({{"id", c},
                           {"object", obj},
                           {"point", fq_point(pt, r.q, r.object_ranks[obj])},
                           {"members", r.class_sizes[c]}});
    }
    return classes;
}

inline nlohmann::json to_json(const FiltrationTower& t)
{
    nlohmann::json levels = nlohmann::json::array();
    for (const auto& l : t.levels) {
        levels.push_back({{"n", l.n}, {"size", l.colim.size}, {"classes", colim_classes_json(l.colim)}});
    }
    nlohmann::json surj = nlohmann::json::array();
    for (std::size_t i = 0; i < t.maps.size(); ++i) {
        surj.push_back({{"from", t.levels[i].n},
                        {"to", t.levels[i + 1].n},
                        {"map", t.maps[i]},
                        {"surjective", static_cast<bool>(t.surjective[i])}});
    }
    return {{"q", t.q}, {"levels", levels}, {"surjections", surj}};
}

} // namespace chromcat

#endif // CHROMCAT_COLIMIT_HPP
