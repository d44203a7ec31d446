#include <gtest/gtest.h>

#include "properties.hpp"

using namespace chromcat;

namespace {

const std::vector<FiniteGroup>& groups()
{
    static const std::vector<FiniteGroup> G = oracle::library_groups(64);
    return G;
}

std::string joined(const props::Failures& f)
{
    std::string s;
    for (const auto& x : f) {
        s += x + "\n";
    }
    return s;
}

class LibraryGroup : public ::testing::TestWithParam<std::size_t> {
protected:
    const FiniteGroup& group() const { return groups().at(GetParam()); }
};

std::string group_name(const ::testing::TestParamInfo<std::size_t>& info)
{
    std::string s;
    for (char c : groups().at(info.param).name()) {
        s += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    }
    return s + "_" + std::to_string(info.param);
}

std::vector<std::size_t> indices()
{
    std::vector<std::size_t> out(groups().size());
    std::iota(out.begin(), out.end(), std::size_t{0});
    return out;
}

} // namespace

TEST_P(LibraryGroup, ConjugacySearch)
{
    const auto f = props::conjugacy_search(group(), 5);
    EXPECT_TRUE(f.empty()) << joined(f);
}

TEST_P(LibraryGroup, ElementaryAbelianSubgroups)
{
    for (int p : {2, 3}) {
        const auto f = props::elem_abelians(group(), p);
        EXPECT_TRUE(f.empty()) << joined(f);
    }
}

TEST_P(LibraryGroup, LevelChain)
{
    for (int p : {2, 3}) {
        const auto f = props::chain_properties(group(), p, true);
        EXPECT_TRUE(f.empty()) << joined(f);
    }
}

TEST_P(LibraryGroup, ColimitTower)
{
    for (int p : {2, 3}) {
        const auto f = props::colim_properties(group(), p);
        EXPECT_TRUE(f.empty()) << joined(f);
    }
}

INSTANTIATE_TEST_SUITE_P(Library, LibraryGroup, ::testing::ValuesIn(indices()), group_name);

TEST(ElemAbelianProperty, InjectiveCounts)
{
    const auto f = props::injective_counts();
    EXPECT_TRUE(f.empty()) << joined(f);
}

TEST(SubringProperty, RandomGenerators)
{
    for (const auto& G : groups()) {
        if (G.name() != "A4" && G.name() != "V4" && G.name() != "(Z/2)^3") {
            continue;
        }
        for (unsigned seed : {1u, 2u, 3u}) {
            const auto f = props::subring_properties(G, seed);
            EXPECT_TRUE(f.empty()) << joined(f);
        }
    }
}

TEST(FglProperty, AxiomsAndHeight)
{
    const auto f = props::fgl_properties();
    EXPECT_TRUE(f.empty()) << joined(f);
}

TEST(HopfProperty, QuotientAndConvolution)
{
    const auto f = props::hopf_properties(9);
    EXPECT_TRUE(f.empty()) << joined(f);
}
