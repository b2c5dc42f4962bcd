#include <qlattice/identities.hpp>
#include <qlattice/stratify.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace qlattice;

namespace {

std::vector<std::size_t> sizes(const Stratification& s)
{
    std::vector<std::size_t> out;
    for (const auto& st : s.strata)
        out.push_back(st.members.size());
    return out;
}

// Disjoint, exhaustive over the (tn, tk) family, every stratum on its prediction.
void expect_faithful(const Stratification& s)
{
    std::set<std::string> seen;
    std::size_t total = 0;
    for (const auto& st : s.strata) {
        EXPECT_TRUE(st.matches()) << criterion_name(s.criterion) << ' ' << s.first << ',' << s.second << ' '
                                  << st.label() << ": " << to_text(st.generating) << " vs " << to_text(st.predicted);
        for (const auto& t : st.members) {
            EXPECT_TRUE(seen.insert(t.text()).second) << "tiling in two strata: " << t.text();
            ++total;
        }
    }
    const auto words = oracle::tiling_words(s.tiling_n, s.tiling_k);
    EXPECT_EQ(total, words.size());
    EXPECT_EQ(seen, std::set<std::string>(words.begin(), words.end()));
}

} // namespace

TEST(LastSquare, FiveTwoAgainstBruteForce)
{
    const auto s = stratify_last_square(5, 2);
    ASSERT_EQ(s.strata.size(), 3u);
    EXPECT_EQ(s.strata[0].generating, Polynomial{1});
    EXPECT_EQ(s.strata[1].generating, (Polynomial{0, 1, 1, 1}));
    EXPECT_EQ(s.strata[2].generating, (Polynomial{0, 0, 1, 1, 2, 1, 1}));
    EXPECT_EQ(s.strata[2].predicted, shift(gauss(4, 2), 2));
    EXPECT_EQ(s.strata[1].predicted, shift(gauss(3, 1), 1));
    EXPECT_EQ(s.strata[0].predicted, gauss(2, 0));
    expect_faithful(s);
}

TEST(LastSquare, SingleDomino)
{
    for (int n = 2; n <= 9; ++n) {
        const auto s = stratify_last_square(n, 1);
        ASSERT_EQ(s.strata.size(), 2u);
        EXPECT_EQ(s.strata[0].predicted, gauss(n - 2, 0));
        EXPECT_EQ(s.strata[1].predicted, shift(gauss(n - 1, 1), 1));
        expect_faithful(s);
    }
}

TEST(LastSquare, Domain)
{
    EXPECT_THROW(stratify_last_square(3, 3), DomainError);
    EXPECT_THROW(stratify_last_square(3, 0), DomainError);
}

TEST(LastDomino, FiveTwoCardinalities)
{
    const auto s = stratify_last_domino(5, 2);
    EXPECT_EQ(sizes(s), (std::vector<std::size_t>{1, 2, 3, 4}));
    Polynomial total;
    for (const auto& st : s.strata)
        total += st.generating;
    EXPECT_EQ(total, gauss(5, 2));
    expect_faithful(s);
}

TEST(LastDomino, AllDominoBoard)
{
    for (int k = 1; k <= 6; ++k) {
        const auto s = stratify_last_domino(k, k);
        ASSERT_EQ(s.strata.size(), 1u);
        EXPECT_EQ(s.strata[0].predicted, Polynomial::one());
        expect_faithful(s);
    }
    EXPECT_THROW(stratify_last_domino(3, 0), DomainError);
}

TEST(MedianDomino, SixOneCardinalities)
{
    const auto s = stratify_median_domino(6, 1);
    EXPECT_EQ(sizes(s), (std::vector<std::size_t>{4, 6, 6, 4}));
    Polynomial total;
    for (const auto& st : s.strata)
        total += st.generating;
    EXPECT_EQ(total, (Polynomial{1, 1, 2, 3, 3, 3, 3, 2, 1, 1}));
    expect_faithful(s);
}

TEST(MedianDomino, AllDominoBoard)
{
    const auto s = stratify_median_domino(3, 1);
    EXPECT_EQ(sizes(s), (std::vector<std::size_t>{1}));
    expect_faithful(s);
    EXPECT_THROW(stratify_median_domino(2, 1), DomainError);
    EXPECT_THROW(stratify_median_domino(5, -1), DomainError);
}

TEST(MedianSquare, SmallCases)
{
    const auto s11 = stratify_median_square(1, 1);
    ASSERT_EQ(s11.strata.size(), 2u);
    EXPECT_EQ(s11.strata[0].generating, Polynomial::one());
    EXPECT_EQ(s11.strata[1].generating, (Polynomial{0, 1}));
    expect_faithful(s11);

    const auto s32 = stratify_median_square(3, 2);
    ASSERT_EQ(s32.strata.size(), 3u);
    EXPECT_EQ(s32.strata[0].generating, (Polynomial{1, 1, 1}));
    EXPECT_EQ(s32.strata[1].generating, (Polynomial{0, 0, 1, 2, 1}));
    EXPECT_EQ(s32.strata[2].generating, (Polynomial{0, 0, 0, 0, 1, 1, 1}));
    expect_faithful(s32);
}

TEST(MedianSquare, ThirteenBoardIllustration)
{
    // Five squares and four dominoes: a board of length 13 counted by [9 4].
    const auto s = stratify_median_square(5, 4);
    EXPECT_EQ(s.tiling_n + s.tiling_k, 13);
    Polynomial total;
    for (const auto& st : s.strata)
        total += st.generating;
    EXPECT_EQ(total, (Polynomial{1, 1, 2, 3, 5, 6, 8, 9, 11, 11, 12, 11, 11, 9, 8, 6, 5, 3, 2, 1, 1}));
    expect_faithful(s);
    EXPECT_THROW(stratify_median_square(4, 1), DomainError);
}

TEST(Stratifications, FidelitySweep)
{
    for (int n = 2; n <= 10; ++n)
        for (int k = 1; k < n; ++k)
            expect_faithful(stratify_last_square(n, k));
    for (int n = 1; n <= 10; ++n)
        for (int k = 1; k <= n; ++k)
            expect_faithful(stratify_last_domino(n, k));
    for (int r = 0; r <= 3; ++r)
        for (int n = 2 * r + 1; n <= 10; ++n)
            expect_faithful(stratify_median_domino(n, r));
    for (int m = 1; m <= 9; m += 2)
        for (int r = 0; r <= 4; ++r)
            expect_faithful(stratify_median_square(m, r));
}

TEST(Stratifications, TermwiseMatchIdentitySums)
{
    auto generating = [](const Stratification& s) {
        std::vector<Polynomial> g;
        for (const auto& st : s.strata)
            g.push_back(st.generating);
        return g;
    };
    for (int n = 2; n <= 9; ++n)
        for (int k = 1; k < n; ++k)
            ASSERT_EQ(generating(stratify_last_square(n, k)), thm1_terms(n, k));
    for (int n = 1; n <= 9; ++n)
        for (int k = 1; k <= n; ++k)
            ASSERT_EQ(generating(stratify_last_domino(n, k)), thm2_terms(n, k));
    for (int r = 1; r <= 3; ++r)
        for (int n = 2 * r + 1; n <= 10; ++n)
            ASSERT_EQ(generating(stratify_median_domino(n, r)), thm3_terms(n, r));
    for (int m = 1; m <= 9; m += 2)
        for (int r = 1; r <= 4; ++r)
            ASSERT_EQ(generating(stratify_median_square(m, r)), thm4_terms(m, r));
}
