#ifndef CHROMCAT_CHAIN_HPP
#define CHROMCAT_CHAIN_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "chromcat/category.hpp"
#include "chromcat/group_io.hpp"

namespace chromcat {

/// Smallest n >= 1 with A^(n) = A, hom-set by hom-set. Never exceeds
/// max(p-rank, 1).
inline std::size_t stabilization_rank(const FiniteGroup& G, int p)
{
    const auto A = quillen_category(G, p);
    std::size_t rank = 0;
    for (const auto& o : A.objects()) {
        rank = std::max(rank, o->rank());
    }
    for (std::size_t n = 1; n < std::max<std::size_t>(rank, 1); ++n) {
        if (same_homs(build_category(G, p, Level::finite(static_cast<unsigned>(n))), A)) {
            return n;
        }
    }
    return std::max<std::size_t>(rank, 1);
}

struct ChainLevel {
    unsigned n = 0;
    std::size_t morphism_count = 0;
    bool strict_to_next = false; // A^(n) strictly contains A^(n+1)
};

struct HomChainReport {
    std::size_t p_rank = 0;
    std::size_t quillen_morphisms = 0;
    std::size_t stabilization_rank = 1;
    std::vector<ChainLevel> levels; // n = 1 .. max(p-rank, 1)
};

inline HomChainReport hom_chain_report(const FiniteGroup& G, int p)
{
    HomChainReport report;
    const auto A = quillen_category(G, p);
    for (const auto& o : A.objects()) {
        report.p_rank = std::max(report.p_rank, o->rank());
    }
    report.quillen_morphisms = A.morphism_count();
    const unsigned top = static_cast<unsigned>(std::max<std::size_t>(report.p_rank, 1));
    std::vector<ChromCategory> cats;
    for (unsigned n = 1; n <= top; ++n) {
        cats.push_back(build_category(G, p, Level::finite(n)));
    }
    report.stabilization_rank = top;
    for (unsigned n = 1; n <= top; ++n) {
        const auto& here = cats[n - 1];
        const auto& next = n < top ? cats[n] : A;
        report.levels.push_back(ChainLevel{n, here.morphism_count(), !same_homs(here, next)});
    }
    for (unsigned n = top; n >= 1; --n) {
        if (!same_homs(cats[n - 1], A)) {
            break;
        }
        report.stabilization_rank = n;
    }
    return report;
}

struct WitnessScanEntry {
    std::string name;
    std::size_t order = 0;
    std::size_t morphisms_n = 0;
    std::size_t morphisms_next = 0;
    bool strict = false;
};

struct WitnessScanResult {
    std::vector<std::string> witnesses; // groups with A^(n) != A^(n+1)
    std::vector<WitnessScanEntry> entries;
    std::vector<std::string> warnings; // skipped groups
};

/// Compares A^(n) with A^(n+1) on each group of the library. Groups whose
/// closure exceeds the order cap are skipped with a warning.
inline WitnessScanResult witness_scan(const std::vector<GroupDescription>& library, int p, unsigned n,
                                      std::size_t order_cap = kDefaultOrderCap)
{
    WitnessScanResult result;
    for (const auto& d : library) {
        std::optional<FiniteGroup> G;
        try {
            G.emplace(d.build(order_cap));
        } catch (const OrderCapExceeded&) {
            result.warnings.push_back("skipped " + d.name + ": order exceeds cap " + std::to_string(order_cap));
            continue;
        }
        const auto a = build_category(*G, p, Level::finite(n));
        const auto b = build_category(*G, p, Level::finite(n + 1));
        WitnessScanEntry e{d.name, G->order(), a.morphism_count(), b.morphism_count(), !same_homs(a, b)};
        if (e.strict) {
            result.witnesses.push_back(d.name);
        }
        result.entries.push_back(std::move(e));
    }
    return result;
}

} // namespace chromcat

#endif // CHROMCAT_CHAIN_HPP
