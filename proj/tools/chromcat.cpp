// chromcat command-line driver.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "chromcat.hpp"

#ifndef CHROMCAT_DATA_DIR
#define CHROMCAT_DATA_DIR "data/groups"
#endif

using nlohmann::json;
using namespace chromcat;

namespace {

constexpr int kOk = 0;
constexpr int kAssertionFailed = 1;
constexpr int kInputError = 2;

struct RunConfig {
    std::string group;
    std::string library_dir = CHROMCAT_DATA_DIR;
    int p = 2;
    std::string level = "inf";
    std::size_t q = 0;
    std::string format = "text";
    std::string output;
    std::size_t order_cap = kDefaultOrderCap;

    // command specific
    bool tower = false;
    bool include_trivial = false;
    std::vector<std::string> gens;
    std::string generators_file;
    unsigned degree = 3;
    int max_degree = -1;
    std::string member;
    unsigned height = 2;
    unsigned series_degree = 8;
    bool no_weyl = false;
};

void emit(const RunConfig& cfg, const std::string& text)
{
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output);
    if (!out) {
        throw Error("cannot write " + cfg.output);
    }
    out << text;
}

void emit(const RunConfig& cfg, const json& doc) { emit(cfg, doc.dump(2) + "\n"); }

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed)
{
    for (const char* f : allowed) {
        if (cfg.format == f) {
            return;
        }
    }
    throw Error("format '" + cfg.format + "' is not available for this command");
}

void require_prime(int p)
{
    if (!is_prime(p)) {
        throw Error("p = " + std::to_string(p) + " is not prime");
    }
}

FiniteGroup load(const RunConfig& cfg)
{
    if (cfg.group.empty()) {
        throw Error("--group is required");
    }
    return resolve_group(cfg.group, cfg.library_dir).build(cfg.order_cap);
}

json subgroup_json(const ElemAbelian& V, std::size_t index)
{
    std::vector<std::size_t> basis;
    std::vector<std::size_t> elements;
    for (auto g : V.basis()) {
        basis.push_back(g.index);
    }
    for (auto g : V.sorted_elements()) {
        elements.push_back(g.index);
    }
    return {{"index", index}, {"rank", V.rank()}, {"basis", basis}, {"basis_labels", V.describe()}, {"elements", elements}};
}

int cmd_group_info(const RunConfig& cfg)
{
    require_format(cfg, {"text", "json"});
    const FiniteGroup G = load(cfg);
    std::map<std::size_t, std::size_t> orders;
    for (std::size_t i = 0; i < G.order(); ++i) {
        ++orders[G.element_order(G.element(i))];
    }
    json order_hist = json::object();
    for (auto [o, c] : orders) {
        order_hist[std::to_string(o)] = c;
    }
    json ranks = json::object();
    for (int p = 2; p <= static_cast<int>(G.order()); ++p) {
        if (is_prime(p) && G.order() % static_cast<std::size_t>(p) == 0) {
            ranks[std::to_string(p)] = p_rank(G, p);
        }
    }
    if (cfg.format == "json") {
        emit(cfg, json{{"name", G.name()},
                       {"degree", G.permutations().empty() ? 0 : G.permutations().front().size()},
                       {"order", G.order()},
                       {"conjugacy_classes", G.class_count()},
                       {"element_orders", order_hist},
                       {"p_ranks", ranks}});
        return kOk;
    }
    std::ostringstream out;
    out << "group " << G.name() << "\n";
    out << "order " << G.order() << ", " << G.class_count() << " conjugacy classes\n";
    out << "element orders:";
    for (auto [o, c] : orders) {
        out << " " << o << "x" << c;
    }
    out << "\np-ranks:";
    for (auto& [p, r] : ranks.items()) {
        out << " p=" << p << ":" << r.get<std::size_t>();
    }
    out << "\n";
    emit(cfg, out.str());
    return kOk;
}

int cmd_elemab(const RunConfig& cfg)
{
    require_format(cfg, {"text", "json"});
    require_prime(cfg.p);
    const FiniteGroup G = load(cfg);
    const auto subs = enumerate_elem_abelians(G, cfg.p);
    if (cfg.format == "json") {
        json list = json::array();
        for (std::size_t i = 0; i < subs.size(); ++i) {
            list.push_back(subgroup_json(*subs[i], i));
        }
        emit(cfg, json{{"group", G.name()}, {"p", cfg.p}, {"p_rank", p_rank(G, cfg.p)}, {"subgroups", list}});
        return kOk;
    }
    std::ostringstream out;
    out << G.name() << ": " << subs.size() << " elementary abelian " << cfg.p << "-subgroups, p-rank "
        << p_rank(G, cfg.p) << "\n";
    for (std::size_t i = 0; i < subs.size(); ++i) {
        out << "  " << i << " rank " << subs[i]->rank() << " " << subs[i]->describe() << "\n";
    }
    emit(cfg, out.str());
    return kOk;
}

int cmd_category(const RunConfig& cfg)
{
    require_format(cfg, {"text", "json", "dot"});
    require_prime(cfg.p);
    const FiniteGroup G = load(cfg);
    const auto C = build_category(G, cfg.p, Level::parse(cfg.level));
    const auto report = skeleton(C, SkeletonOptions{cfg.include_trivial});
    if (cfg.format == "dot") {
        emit(cfg, to_dot(report));
        return kOk;
    }
    if (cfg.format == "json") {
        json doc = to_json(report);
        doc["group"] = G.name();
        doc["p"] = cfg.p;
        doc["level"] = cfg.level;
        doc["objects"] = C.object_count();
        doc["morphisms"] = C.morphism_count();
        emit(cfg, doc);
        return kOk;
    }
    std::ostringstream out;
    out << C.name() << " for " << G.name() << " at p=" << cfg.p << ": " << C.object_count() << " objects, "
        << C.morphism_count() << " morphisms\n";
    for (std::size_t i = 0; i < report.classes.size(); ++i) {
        const auto& c = report.classes[i];
        out << "  V" << i << " rank=" << c.rank << " |Aut|=" << c.aut_order << " members=" << c.members.size()
            << " rep=" << c.representative_label << "\n";
    }
    for (const auto& e : report.edges) {
        out << "  V" << e.source << " -> V" << e.target << ": " << e.hom_size << " morphisms";
        for (const auto& o : e.orbits) {
            out << " [" << o.size << " morphisms, stab=" << o.stabilizer_order << "]";
        }
        out << "\n";
    }
    emit(cfg, out.str());
    return kOk;
}

int cmd_stab(const RunConfig& cfg)
{
    require_format(cfg, {"text", "json"});
    require_prime(cfg.p);
    const FiniteGroup G = load(cfg);
    const auto r = hom_chain_report(G, cfg.p);
    if (cfg.format == "json") {
        json levels = json::array();
        for (const auto& l : r.levels) {
            levels.push_back({{"n", l.n}, {"morphisms", l.morphism_count}, {"strict_to_next", l.strict_to_next}});
        }
        emit(cfg, json{{"group", G.name()},
                       {"p", cfg.p},
                       {"p_rank", r.p_rank},
                       {"quillen_morphisms", r.quillen_morphisms},
                       {"stabilization_rank", r.stabilization_rank},
                       {"levels", levels}});
        return kOk;
    }
    std::ostringstream out;
    out << G.name() << " p=" << cfg.p << ": p-rank " << r.p_rank << ", stabilization rank " << r.stabilization_rank
        << ", Quillen morphisms " << r.quillen_morphisms << "\n";
    for (const auto& l : r.levels) {
        out << "  A^(" << l.n << "): " << l.morphism_count << " morphisms"
            << (l.strict_to_next ? ", strictly larger than the next level" : "") << "\n";
    }
    emit(cfg, out.str());
    return kOk;
}

int cmd_colim(const RunConfig& cfg)
{
    require_format(cfg, {"text", "json"});
    require_prime(cfg.p);
    if (cfg.q == 0) {
        throw Error("-q is required");
    }
    const FiniteGroup G = load(cfg);
    json doc;
    if (cfg.tower) {
        doc = to_json(filtration_tower(G, cfg.p, cfg.q));
    } else {
        const Level n = Level::parse(cfg.level);
        const auto r = colim_points(build_category(G, cfg.p, n), cfg.q);
        json level = {{"n", n.to_string()}, {"size", r.size}, {"classes", colim_classes_json(r)}};
        doc = {{"q", cfg.q}, {"levels", json::array({level})}, {"surjections", json::array()}};
    }
    if (cfg.format == "json") {
        emit(cfg, doc);
        return kOk;
    }
    std::ostringstream out;
    out << G.name() << " p=" << cfg.p << " q=" << cfg.q << "\n";
    for (const auto& l : doc["levels"]) {
        out << "  n=" << (l["n"].is_string() ? l["n"].get<std::string>() : std::to_string(l["n"].get<unsigned>()))
            << ": " << l["size"].get<std::size_t>() << " points\n";
    }
    for (const auto& s : doc["surjections"]) {
        out << "  " << s["from"].get<unsigned>() << " -> " << s["to"].get<unsigned>() << ": "
            << (s["surjective"].get<bool>() ? "surjective" : "not surjective") << "\n";
    }
    emit(cfg, out.str());
    return kOk;
}

std::vector<PolyFp> parse_polys(const std::vector<std::string>& texts, int p, const std::vector<std::string>& names)
{
    std::vector<PolyFp> out;
    for (const auto& t : texts) {
        out.push_back(PolyFp::parse(t, p, names));
    }
    return out;
}

int cmd_cr(const RunConfig& cfg)
{
    require_format(cfg, {"text", "json"});
    require_prime(cfg.p);
    const FiniteGroup G = load(cfg);
    const auto P = elementary_abelian_sylow(G, cfg.p);
    std::vector<std::string> names = default_variable_names(P->rank());
    std::vector<std::string> texts = cfg.gens;
    std::vector<FpMatrix> given_weyl;
    if (!cfg.generators_file.empty()) {
        std::ifstream in(cfg.generators_file);
        if (!in) {
            throw Error("cannot read " + cfg.generators_file);
        }
        const json doc = json::parse(in);
        if (doc.contains("variables")) {
            names = doc.at("variables").get<std::vector<std::string>>();
        }
        for (const auto& g : doc.at("generators")) {
            texts.push_back(g.get<std::string>());
        }
        if (doc.contains("weyl")) {
            for (const auto& m : doc.at("weyl")) {
                given_weyl.push_back(FpMatrix::from_rows(cfg.p, m.get<std::vector<std::vector<int>>>()));
            }
        }
    }
    const auto R = make_presentation(G, cfg.p, parse_polys(texts, cfg.p, names));
    for (const auto& f : R.generators) {
        for (const auto& A : given_weyl) {
            if (f.substitute_linear(A) != f) {
                throw UnsupportedInput("generator " + f.to_string(names) + " is not invariant under the supplied Weyl matrix " +
                                       A.to_string());
            }
        }
    }
    const auto C = build_CR(G, R);
    const auto A = quillen_category(G, cfg.p);
    json matches = json::array();
    std::vector<std::string> match_names;
    const std::size_t top = std::max<std::size_t>(P->rank(), 1);
    for (std::size_t n = 0; n <= top; ++n) {
        if (same_homs(C, build_category(G, cfg.p, Level::finite(static_cast<unsigned>(n))))) {
            matches.push_back("A^(" + std::to_string(n) + ")");
        }
    }
    if (same_homs(C, A)) {
        matches.push_back("A");
    }
    std::vector<std::string> gen_strings;
    for (const auto& f : R.generators) {
        gen_strings.push_back(f.to_string(names));
    }
    if (cfg.format == "json") {
        emit(cfg, json{{"group", G.name()},
                       {"p", cfg.p},
                       {"sylow", subgroup_json(*P, 0)},
                       {"weyl_order", R.weyl.order()},
                       {"generators", gen_strings},
                       {"morphisms", C.morphism_count()},
                       {"restriction_well_defined", restriction_well_defined(R)},
                       {"equals", matches}});
        return kOk;
    }
    std::ostringstream out;
    out << "C_R for " << G.name() << " with R = <";
    for (std::size_t i = 0; i < gen_strings.size(); ++i) {
        out << (i ? ", " : "") << gen_strings[i];
    }
    out << ">: " << C.morphism_count() << " morphisms\n  equals:";
    for (const auto& m : matches) {
        out << " " << m.get<std::string>();
    }
    out << (matches.empty() ? " none of A^(n), A" : "") << "\n";
    emit(cfg, out.str());
    return kOk;
}

int cmd_invariants(const RunConfig& cfg)
{
    require_format(cfg, {"text", "json"});
    require_prime(cfg.p);
    const FiniteGroup G = load(cfg);
    const auto P = elementary_abelian_sylow(G, cfg.p);
    const LinearAction W = weyl_action(*P);
    const auto names = default_variable_names(P->rank());
    const unsigned lo = cfg.max_degree >= 0 ? 0 : cfg.degree;
    const unsigned hi = cfg.max_degree >= 0 ? static_cast<unsigned>(cfg.max_degree) : cfg.degree;
    json degrees = json::array();
    std::ostringstream out;
    out << "invariants of the Weyl group (order " << W.order() << ") of " << P->describe() << " in " << G.name()
        << "\n";
    for (unsigned d = lo; d <= hi; ++d) {
        std::vector<std::string> basis;
        for (const auto& f : invariant_basis(W, d)) {
            basis.push_back(f.to_string(names));
        }
        degrees.push_back({{"degree", d}, {"basis", basis}});
        out << "  degree " << d << ":";
        for (const auto& b : basis) {
            out << " [" << b << "]";
        }
        out << "\n";
    }
    json doc = {{"group", G.name()}, {"p", cfg.p}, {"weyl_order", W.order()}, {"degrees", degrees}};
    if (!cfg.member.empty()) {
        const auto f = PolyFp::parse(cfg.member, cfg.p, names);
        const auto gens = parse_polys(cfg.gens, cfg.p, names);
        const bool in = subring_membership(f, gens);
        doc["membership"] = {{"element", f.to_string(names)}, {"generators", cfg.gens}, {"member", in}};
        out << "  " << f.to_string(names) << (in ? " lies in " : " does not lie in ") << "the subring generated by "
            << cfg.gens.size() << " generators\n";
    }
    if (cfg.format == "json") {
        emit(cfg, doc);
    } else {
        emit(cfg, out.str());
    }
    return kOk;
}

int cmd_witness(const RunConfig& cfg)
{
    require_format(cfg, {"text", "json"});
    require_prime(cfg.p);
    const Level n = Level::parse(cfg.level == "inf" ? "1" : cfg.level);
    if (n.is_infinite()) {
        throw Error("witness needs a finite level");
    }
    const auto r = witness_scan(load_library(cfg.library_dir), cfg.p, n.value(), cfg.order_cap);
    if (cfg.format == "json") {
        json entries = json::array();
        for (const auto& e : r.entries) {
            entries.push_back({{"name", e.name},
                               {"order", e.order},
                               {"morphisms_n", e.morphisms_n},
                               {"morphisms_next", e.morphisms_next},
                               {"strict", e.strict}});
        }
        emit(cfg, json{{"p", cfg.p},
                       {"n", n.value()},
                       {"witnesses", r.witnesses},
                       {"entries", entries},
                       {"warnings", r.warnings}});
        return kOk;
    }
    std::ostringstream out;
    out << "A^(" << n.value() << ") vs A^(" << n.value() + 1 << ") at p=" << cfg.p << "\n";
    for (const auto& e : r.entries) {
        out << "  " << e.name << " (order " << e.order << "): " << e.morphisms_n << " vs " << e.morphisms_next
            << (e.strict ? "  strict" : "") << "\n";
    }
    for (const auto& w : r.warnings) {
        out << "  warning: " << w << "\n";
    }
    out << "witnesses: " << r.witnesses.size() << "\n";
    emit(cfg, out.str());
    return kOk;
}

int cmd_a4_demo(const RunConfig& cfg)
{
    require_format(cfg, {"text", "json"});
    const auto r = a4_demo(A4DemoOptions{cfg.height, cfg.series_degree, !cfg.no_weyl});
    if (cfg.format == "json") {
        emit(cfg, r.to_json());
    } else {
        emit(cfg, r.to_text());
    }
    return r.all_passed() ? kOk : kAssertionFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Chromatic categories of elementary abelian subgroups"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub, bool needs_group) {
        if (needs_group) {
            sub->add_option("-g,--group", cfg.group, "group file or library name")->required();
        }
        sub->add_option("--library-dir", cfg.library_dir, "directory of group files");
        sub->add_option("-f,--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
        sub->add_option("-o,--output", cfg.output, "output file (default stdout)");
        sub->add_option("--order-cap", cfg.order_cap, "largest group order accepted");
    };

    std::map<CLI::App*, int (*)(const RunConfig&)> handlers;

    auto* group_info = app.add_subcommand("group-info", "order, classes and p-ranks");
    common(group_info, true);
    handlers[group_info] = cmd_group_info;

    auto* elemab = app.add_subcommand("elemab", "elementary abelian p-subgroups");
    common(elemab, true);
    elemab->add_option("-p", cfg.p, "prime");
    handlers[elemab] = cmd_elemab;

    auto* category = app.add_subcommand("category", "skeleton of A^(n)");
    common(category, true);
    category->add_option("-p", cfg.p, "prime");
    category->add_option("-n,--level", cfg.level, "level (integer or inf)");
    category->add_flag("--include-trivial", cfg.include_trivial, "keep the trivial subgroup");
    handlers[category] = cmd_category;

    auto* stab = app.add_subcommand("stab", "hom-set chain and stabilization rank");
    common(stab, true);
    stab->add_option("-p", cfg.p, "prime");
    handlers[stab] = cmd_stab;

    auto* colim = app.add_subcommand("colim", "F_q-points of the colimit");
    common(colim, true);
    colim->add_option("-p", cfg.p, "prime");
    colim->add_option("-n,--level", cfg.level, "level (integer or inf)");
    colim->add_option("-q", cfg.q, "field size")->required();
    colim->add_flag("--tower", cfg.tower, "all levels with connecting maps");
    handlers[colim] = cmd_colim;

    auto* cr = app.add_subcommand("cr", "category C_R of a subring");
    common(cr, true);
    cr->add_option("-p", cfg.p, "prime");
    cr->add_option("--gen", cfg.gens, "subring generator polynomial");
    cr->add_option("--generators", cfg.generators_file, "JSON file of generators");
    handlers[cr] = cmd_cr;

    auto* inv = app.add_subcommand("invariants", "Weyl-invariant polynomials on a Sylow subgroup");
    common(inv, true);
    inv->add_option("-p", cfg.p, "prime");
    inv->add_option("-d,--degree", cfg.degree, "degree");
    inv->add_option("--max-degree", cfg.max_degree, "every degree up to this one");
    inv->add_option("--member", cfg.member, "test membership in the subring of --gen");
    inv->add_option("--gen", cfg.gens, "subring generator polynomial");
    handlers[inv] = cmd_invariants;

    auto* witness = app.add_subcommand("witness", "scan the library for A^(n) != A^(n+1)");
    common(witness, false);
    witness->add_option("-p", cfg.p, "prime");
    witness->add_option("-n,--level", cfg.level, "level n");
    handlers[witness] = cmd_witness;

    auto* demo = app.add_subcommand("a4-demo", "the A_4 computation end to end");
    common(demo, false);
    demo->add_option("--height", cfg.height, "height of the Honda law");
    demo->add_option("--degree", cfg.series_degree, "series truncation degree");
    demo->add_flag("--no-weyl", cfg.no_weyl, "use w^2 z without its Weyl orbit");
    handlers[demo] = cmd_a4_demo;

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        for (auto& [sub, handler] : handlers) {
            if (sub->parsed()) {
                return handler(cfg);
            }
        }
    } catch (const UnsupportedInput& e) {
        std::cerr << "unsupported input: " << e.what() << "\n";
        return kInputError;
    } catch (const json::exception& e) {
        std::cerr << "malformed JSON: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
