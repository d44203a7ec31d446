#include <gtest/gtest.h>

#include <set>

#include "chromcat.hpp"
#include "oracles.hpp"

using namespace chromcat;

namespace {

FiniteGroup make(std::size_t degree, std::vector<Permutation> gens, std::string name = {})
{
    return FiniteGroup::from_permutations(degree, gens, kDefaultOrderCap, std::move(name));
}

GroupElem find(const FiniteGroup& G, const std::string& label)
{
    auto g = G.find_label(label);
    if (!g) {
        throw Error("no element " + label);
    }
    return *g;
}

} // namespace

TEST(FpMatrix, RankInverseKernel)
{
    const auto A = FpMatrix::from_rows(2, {{0, 1}, {1, 1}});
    EXPECT_EQ(A.rank(), 2u);
    ASSERT_TRUE(A.inverse());
    EXPECT_EQ(*A.inverse() * A, FpMatrix::identity(2, 2));
    EXPECT_EQ(matrix_order(A), 3u);
    const auto B = FpMatrix::from_rows(3, {{1, 2}, {2, 1}});
    EXPECT_EQ(B.rank(), 1u);
    EXPECT_FALSE(B.inverse());
    const auto K = B.kernel_basis();
    ASSERT_EQ(K.size(), 1u);
    const auto image = B.apply(K.front());
    EXPECT_EQ(image, (std::vector<int>{0, 0}));
}

TEST(FpMatrix, SubspaceCounts)
{
    // Gaussian binomials: [3 choose 1]_2 = 7, [3 choose 2]_2 = 7, [2 choose 1]_3 = 4
    EXPECT_EQ(subspaces_of_dimension(2, 3, 1).size(), 7u);
    EXPECT_EQ(subspaces_of_dimension(2, 3, 2).size(), 7u);
    EXPECT_EQ(subspaces_of_dimension(3, 2, 1).size(), 4u);
    EXPECT_EQ(subspaces_of_dimension(2, 4, 2).size(), 35u);
}

TEST(Group, OrdersFromGenerators)
{
    EXPECT_EQ(make(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}).order(), 12u);
    EXPECT_EQ(make(3, {{1, 2, 0}, {1, 0, 2}}).order(), 6u);
    EXPECT_EQ(make(1, {}).order(), 1u);
}

TEST(Group, OrderCapThrows)
{
    const std::vector<Permutation> gens{{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}};
    EXPECT_THROW(FiniteGroup::from_permutations(5, gens, 100), OrderCapExceeded);
    EXPECT_EQ(FiniteGroup::from_permutations(5, gens, 120).order(), 120u);
}

TEST(Group, RejectsBadInput)
{
    const std::vector<Permutation> not_perm{{0, 0, 1}};
    EXPECT_THROW(FiniteGroup::from_permutations(3, not_perm), Error);
    const std::vector<Permutation> wrong_len{{1, 0}};
    EXPECT_THROW(FiniteGroup::from_permutations(3, wrong_len), Error);
    // not associative: a Latin square that is not a group table
    std::vector<std::uint32_t> table{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
    EXPECT_THROW(FiniteGroup::from_table(5, table), Error);
    EXPECT_THROW(FiniteGroup::from_table(2, {0, 1, 1, 5}), Error);
}

TEST(Group, FromTableCyclic)
{
    std::vector<std::uint32_t> table;
    for (std::uint32_t a = 0; a < 5; ++a) {
        for (std::uint32_t b = 0; b < 5; ++b) {
            table.push_back((a + b) % 5);
        }
    }
    const auto G = FiniteGroup::from_table(5, table);
    EXPECT_EQ(G.order(), 5u);
    EXPECT_EQ(G.element_order(GroupElem{1}), 5u);
    EXPECT_EQ(G.inv(GroupElem{2}), GroupElem{3});
}

TEST(Group, ConjugationInA4)
{
    const auto G = make(4, {{1, 2, 0, 3}, {1, 0, 3, 2}});
    const auto u = find(G, "(0 1)(2 3)");
    const auto c = find(G, "(0 1 2)");
    EXPECT_EQ(G.conjugate(u, G.identity()), u);
    EXPECT_EQ(G.conjugate(G.identity(), c), G.identity());
    const auto image = G.conjugate(u, c);
    EXPECT_NE(image, u);
    EXPECT_EQ(G.element_order(image), 2u);
    EXPECT_EQ(G.label(image), "(0 3)(1 2)");
    EXPECT_EQ(G.element_order(u), 2u);
    EXPECT_EQ(G.element_order(G.identity()), 1u);
    const std::vector<GroupElem> just_u{u};
    EXPECT_EQ(G.centralizer(just_u).size(), 4u);
    EXPECT_EQ(G.centralizer(std::vector<GroupElem>{G.identity()}).size(), 12u);
}

TEST(Group, SimultaneousConjugacyInA4)
{
    const auto G = make(4, {{1, 2, 0, 3}, {1, 0, 3, 2}});
    const auto u = find(G, "(0 1)(2 3)");
    const auto v = find(G, "(0 2)(1 3)");
    const std::vector<GroupElem> a{u}, b{v};
    EXPECT_TRUE(G.simultaneous_conjugacy(a, b));
    const std::vector<GroupElem> uv{u, v}, vu{v, u};
    EXPECT_FALSE(G.simultaneous_conjugacy(uv, vu));
    EXPECT_FALSE(G.simultaneous_conjugacy_pruned(uv, vu));
    EXPECT_EQ(G.simultaneous_conjugacy(uv, uv), G.identity());
    const auto w = G.simultaneous_conjugacy_pruned(a, b);
    ASSERT_TRUE(w);
    EXPECT_EQ(G.conjugate(u, *w), v);
}

TEST(Group, SimultaneousConjugacySymmetricAndTransitive)
{
    for (const auto& G : oracle::library_groups(24)) {
        const std::size_t n = G.order();
        // length-1 tuples exhaustively, length-2 tuples over a stride
        for (std::uint32_t a = 0; a < n; ++a) {
            for (std::uint32_t b = 0; b < n; ++b) {
                const std::vector<GroupElem> x{GroupElem{a}}, y{GroupElem{b}};
                const auto w = G.simultaneous_conjugacy(x, y);
                const auto back = G.simultaneous_conjugacy(y, x);
                ASSERT_EQ(w.has_value(), back.has_value()) << G.name();
                if (w) {
                    EXPECT_EQ(G.conjugate(GroupElem{b}, G.inv(*w)), GroupElem{a});
                }
            }
        }
        const std::size_t step = n > 12 ? 5 : 1;
        for (std::uint32_t a = 0; a < n; a += step) {
            for (std::uint32_t b = 0; b < n; b += step) {
                const std::vector<GroupElem> x{GroupElem{a}, GroupElem{b}};
                for (std::uint32_t g = 0; g < n; ++g) {
                    for (std::uint32_t h = 0; h < n; h += step) {
                        const std::vector<GroupElem> y{G.conjugate(x[0], GroupElem{g}), G.conjugate(x[1], GroupElem{g})};
                        const std::vector<GroupElem> z{G.conjugate(y[0], GroupElem{h}), G.conjugate(y[1], GroupElem{h})};
                        const auto wxy = G.simultaneous_conjugacy(x, y);
                        const auto wyz = G.simultaneous_conjugacy(y, z);
                        ASSERT_TRUE(wxy && wyz);
                        const auto composed = G.mul(*wyz, *wxy);
                        EXPECT_EQ(G.conjugate(x[0], composed), z[0]);
                        EXPECT_EQ(G.conjugate(x[1], composed), z[1]);
                        EXPECT_TRUE(G.simultaneous_conjugacy(x, z));
                    }
                }
            }
        }
    }
}

TEST(Group, ValidateLibrary)
{
    for (const auto& G : oracle::library_groups(64)) {
        EXPECT_NO_THROW(G.validate()) << G.name();
    }
}

TEST(GroupIo, ParsesAndRejects)
{
    const auto d = parse_group_json(R"({"name": "S3", "degree": 3, "generators": [[1,2,0],[1,0,2]]})");
    EXPECT_EQ(d.name, "S3");
    EXPECT_EQ(d.build().order(), 6u);
    EXPECT_EQ(to_json(d)["generators"].size(), 2u);
    EXPECT_THROW(parse_group_json("{not json"), Error);
    EXPECT_THROW(parse_group_json(R"({"degree": -1})"), Error);
    EXPECT_THROW(parse_group_json(R"({"degree": 3, "generators": [[1,"a",0]]})"), Error);
    EXPECT_THROW(parse_group_json(R"([1,2])"), Error);
    EXPECT_THROW(parse_group_json(R"({"degree": 3, "generators": [[1,1,0]]})").build(), Error);
}

TEST(GroupIo, ResolvesLibraryNames)
{
    const auto dir = oracle::library_dir();
    EXPECT_EQ(resolve_group("A4", dir).build().order(), 12u);
    EXPECT_EQ(resolve_group((dir / "S4.json").string(), dir).build().order(), 24u);
    EXPECT_THROW(resolve_group("NoSuchGroup", dir), Error);
    const auto lib = load_library(dir);
    EXPECT_GE(lib.size(), 20u);
    EXPECT_EQ(lib.front().name, "2^{1+4}_+");
    EXPECT_EQ(resolve_group("Z/2 wr Z/2", dir).build().order(), 8u);
}

TEST(GroupIo, LibraryOrders)
{
    const std::map<std::string, std::size_t> expected{
        {"A4", 12},         {"A5", 60},          {"A6", 360},         {"S3", 6},           {"S4", 24},
        {"S5", 120},        {"S6", 720},         {"D8", 8},           {"Q8", 8},           {"D16", 16},
        {"Q16", 16},        {"SD16", 16},        {"(Z/2)^3", 8},      {"(Z/3)^2", 9},      {"C2", 2},
        {"C3", 3},          {"V4", 4},           {"Z/2 wr Z/2", 8},   {"Z/3 wr Z/3", 81},  {"3^{1+2}_+", 27},
        {"3^{1+2}_-", 27},  {"2^{1+4}_+", 32},   {"2^{1+4}_-", 32}};
    for (const auto& d : load_library(oracle::library_dir())) {
        auto it = expected.find(d.name);
        ASSERT_NE(it, expected.end()) << d.name;
        EXPECT_EQ(d.build().order(), it->second) << d.name;
    }
}
