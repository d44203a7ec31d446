#ifndef CHROMCAT_SKELETON_HPP
#define CHROMCAT_SKELETON_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "chromcat/category.hpp"

namespace chromcat {

struct SkeletonOptions {
    /// Keep the trivial subgroup as a class. It is dropped by default unless
    /// it is the only object.
    bool include_trivial = false;
};

struct ObjectClass {
    std::size_t representative = 0; // object index in the category
    std::vector<std::size_t> members;
    std::size_t rank = 0;
    std::size_t aut_order = 0;
    bool aut_abelian = true;
    std::size_t aut_exponent = 1;
    std::string representative_label;
};

struct EdgeOrbit {
    std::size_t size = 0;
    std::size_t stabilizer_order = 0;
};

struct SkeletonEdge {
    std::size_t source = 0; // class indices
    std::size_t target = 0;
    std::size_t hom_size = 0;
    std::vector<EdgeOrbit> orbits; // under post-composition by Aut(target)
    std::size_t two_sided_orbits = 0; // under Aut(target) x Aut(source)
};

struct SkeletonReport {
    std::string category;
    std::vector<ObjectClass> classes;
    std::vector<SkeletonEdge> edges; // every ordered class pair with a nonempty hom-set

    const SkeletonEdge* edge(std::size_t source, std::size_t target) const
    {
        for (const auto& e : edges) {
            if (e.source == source && e.target == target) {
                return &e;
            }
        }
        return nullptr;
    }
};

namespace detail {

inline std::vector<std::size_t> orbit_sizes(std::span<const FpMatrix> homs, const std::vector<FpMatrix>& left,
                                            const std::vector<FpMatrix>& right)
{
    std::vector<bool> seen(homs.size(), false);
    std::vector<std::size_t> sizes;
    for (std::size_t i = 0; i < homs.size(); ++i) {
        if (seen[i]) {
            continue;
        }
        std::set<FpMatrix> orbit;
        for (const auto& a : left) {
            for (const auto& b : right) {
                orbit.insert(a * homs[i] * b);
            }
        }
        for (const auto& m : orbit) {
            auto it = std::lower_bound(homs.begin(), homs.end(), m);
            if (it == homs.end() || *it != m) {
                throw Error("skeleton: hom-set is not closed under composition with automorphisms");
            }
            seen[static_cast<std::size_t>(it - homs.begin())] = true;
        }
        sizes.push_back(orbit.size());
    }
    return sizes;
}

} // namespace detail

/// Isomorphism classes of objects with automorphism and edge-orbit data.
inline SkeletonReport skeleton(const ChromCategory& C, SkeletonOptions options = {})
{
    SkeletonReport report;
    report.category = C.name();
    const std::size_t N = C.object_count();
    std::vector<bool> assigned(N, false);
    for (std::size_t i = 0; i < N; ++i) {
        if (assigned[i]) {
            continue;
        }
        if (C.object(i)->rank() == 0 && !options.include_trivial && N > 1) {
            assigned[i] = true;
            continue;
        }
        ObjectClass cls;
        cls.representative = i;
        cls.rank = C.object(i)->rank();
        cls.representative_label = C.object(i)->describe();
        for (std::size_t j = i; j < N; ++j) {
            if (assigned[j] || C.object(j)->rank() != cls.rank) {
                continue;
            }
            bool iso = (j == i);
            for (const auto& f : C.hom(i, j)) {
                if (iso) {
                    break;
                }
                auto inv = f.inverse();
                iso = inv && C.contains(j, i, *inv);
            }
            if (iso) {
                assigned[j] = true;
                cls.members.push_back(j);
            }
        }
        const auto aut = C.hom(i, i);
        cls.aut_order = aut.size();
        for (const auto& a : aut) {
            cls.aut_exponent = std::lcm(cls.aut_exponent, matrix_order(a));
            for (const auto& b : aut) {
                if (a * b != b * a) {
                    cls.aut_abelian = false;
                }
            }
        }
        report.classes.push_back(std::move(cls));
    }
    for (std::size_t s = 0; s < report.classes.size(); ++s) {
        for (std::size_t t = 0; t < report.classes.size(); ++t) {
            const std::size_t w = report.classes[s].representative;
            const std::size_t v = report.classes[t].representative;
            const auto homs = C.hom(w, v);
            if (homs.empty()) {
                continue;
            }
            const auto target_aut = C.hom(v, v);
            const auto source_aut = C.hom(w, w);
            const std::vector<FpMatrix> left(target_aut.begin(), target_aut.end());
            std::vector<FpMatrix> right_id{FpMatrix::identity(C.prime(), C.object(w)->rank())};
            std::vector<FpMatrix> right(source_aut.begin(), source_aut.end());
            SkeletonEdge edge;
            edge.source = s;
            edge.target = t;
            edge.hom_size = homs.size();
            for (auto size : detail::orbit_sizes(homs, left, right_id)) {
                edge.orbits.push_back(EdgeOrbit{size, left.size() / size});
            }
            edge.two_sided_orbits = detail::orbit_sizes(homs, left, right).size();
            report.edges.push_back(std::move(edge));
        }
    }
    return report;
}

inline std::string to_dot(const SkeletonReport& report)
{
    std::ostringstream out;
    out << "digraph \"" << report.category << "\" {\n";
    for (std::size_t i = 0; i < report.classes.size(); ++i) {
        const auto& c = report.classes[i];
        out << "  V" << i << " [label=\"rank=" << c.rank << " |Aut|=" << c.aut_order << "\"];\n";
    }
    for (const auto& e : report.edges) {
        if (e.source == e.target) {
            continue;
        }
        for (const auto& o : e.orbits) {
            out << "  V" << e.source << " -> V" << e.target << " [label=\"" << o.size << " morphisms, stab="
                << o.stabilizer_order << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

inline nlohmann::json to_json(const SkeletonReport& report)
{
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& c : report.classes) {
        classes.push_back({{"representative", c.representative},
                           {"representative_basis", c.representative_label},
                           {"members", c.members},
                           {"rank", c.rank},
                           {"aut_order", c.aut_order},
                           {"aut_abelian", c.aut_abelian},
                           {"aut_exponent", c.aut_exponent}});
    }
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : report.edges) {
        nlohmann::json orbits = nlohmann::json::array();
        for (const auto& o : e.orbits) {
            orbits.push_back({{"size", o.size}, {"stabilizer_order", o.stabilizer_order}});
        }
        edges.push_back({{"source", e.source},
                         {"target", e.target},
                         {"hom_size", e.hom_size},
                         {"orbits", orbits},
                         {"two_sided_orbits", e.two_sided_orbits}});
    }
    return {{"category", report.category}, {"classes", classes}, {"edges", edges}};
}

} // namespace chromcat

#endif // CHROMCAT_SKELETON_HPP
