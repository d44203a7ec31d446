#ifndef CHROMCAT_GROUP_IO_HPP
#define CHROMCAT_GROUP_IO_HPP

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "chromcat/group.hpp"

namespace chromcat {

/// A permutation group as stored on disk: {"name", "degree", "generators"}
/// with 0-indexed image arrays.
struct GroupDescription {
    std::string name;
    std::size_t degree = 1;
    std::vector<Permutation> generators;

    FiniteGroup build(std::size_t order_cap = kDefaultOrderCap) const
    {
        return FiniteGroup::from_permutations(degree, generators, order_cap, name);
    }
};

inline GroupDescription parse_group_json(const nlohmann::json& doc)
{
    if (!doc.is_object()) {
        throw Error("group file: expected a JSON object");
    }
    GroupDescription d;
    try {
        d.name = doc.value("name", std::string{});
        if (!doc.contains("degree") || !doc.at("degree").is_number_integer() || doc.at("degree").get<long long>() <= 0) {
            throw Error("group file: 'degree' must be a positive integer");
        }
        d.degree = doc.at("degree").get<std::size_t>();
        if (doc.contains("generators")) {
            const auto& gens = doc.at("generators");
            if (!gens.is_array()) {
                throw Error("group file: 'generators' must be an array");
            }
            for (const auto& g : gens) {
                if (!g.is_array()) {
                    throw Error("group file: each generator must be an array of integers");
                }
                Permutation perm;
                for (const auto& v : g) {
                    if (!v.is_number_integer() || v.get<long long>() < 0) {
                        throw Error("group file: generator entries must be non-negative integers");
                    }
                    perm.push_back(v.get<std::uint32_t>());
                }
                d.generators.push_back(std::move(perm));
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("group file: ") + e.what());
    }
    return d;
}

inline GroupDescription parse_group_json(const std::string& text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(std::string("group file: malformed JSON: ") + e.what());
    }
    return parse_group_json(doc);
}

inline GroupDescription parse_group_json(const char* text) { return parse_group_json(std::string(text)); }

inline GroupDescription load_group_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot read group file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    auto d = parse_group_json(buf.str());
    if (d.name.empty()) {
        d.name = path.stem().string();
    }
    return d;
}

inline nlohmann::json to_json(const GroupDescription& d)
{
    return {{"name", d.name}, {"degree", d.degree}, {"generators", d.generators}};
}

/// Every *.json group in a directory, sorted by file name.
inline std::vector<GroupDescription> load_library(const std::filesystem::path& dir)
{
    if (!std::filesystem::is_directory(dir)) {
        throw Error("group library directory not found: " + dir.string());
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::vector<GroupDescription> out;
    for (const auto& f : files) {
        out.push_back(load_group_file(f));
    }
    return out;
}

/// Resolves a path to a group file, or a library group by name (file stem
/// or the "name" field) inside `library_dir`.
inline GroupDescription resolve_group(const std::string& name_or_path, const std::filesystem::path& library_dir)
{
    if (std::filesystem::is_regular_file(name_or_path)) {
        return load_group_file(name_or_path);
    }
    const auto candidate = library_dir / (name_or_path + ".json");
    if (std::filesystem::is_regular_file(candidate)) {
        return load_group_file(candidate);
    }
    if (std::filesystem::is_directory(library_dir)) {
        for (auto& d : load_library(library_dir)) {
            if (d.name == name_or_path) {
                return d;
            }
        }
    }
    throw Error("unknown group '" + name_or_path + "': not a file and not in library " + library_dir.string());
}

} // namespace chromcat

#endif // CHROMCAT_GROUP_IO_HPP
