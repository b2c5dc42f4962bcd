#include <qlattice/identities.hpp>
#include <qlattice/serialize.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace qlattice;

TEST(Thm1, Examples)
{
    const auto terms = thm1_terms(4, 2);
    ASSERT_EQ(terms.size(), 3u);
    EXPECT_EQ(terms[0], Polynomial::one());
    EXPECT_EQ(terms[1], (Polynomial{0, 1, 1}));
    EXPECT_EQ(terms[2], (Polynomial{0, 0, 1, 1, 1}));
    EXPECT_TRUE(verify_thm1(4, 2));
    EXPECT_EQ(std::get<Polynomial>(thm1_sides(4, 2).lhs), (Polynomial{1, 1, 2, 1, 1}));
    for (int n = 2; n <= 10; ++n)
        EXPECT_TRUE(verify_thm1(n, 1));
    EXPECT_TRUE(verify_thm1(5, 2));
    EXPECT_THROW(verify_thm1(3, 3), DomainError);
    EXPECT_THROW(verify_thm1(3, 0), DomainError);
}

TEST(Thm2, Examples)
{
    EXPECT_TRUE(verify_thm2(5, 2));
    std::vector<Integer> at_one;
    for (const auto& t : thm2_terms(5, 2))
        at_one.push_back(eval_int(t, 1));
    EXPECT_EQ(at_one, (std::vector<Integer>{1, 2, 3, 4}));
    for (int k = 1; k <= 6; ++k) {
        EXPECT_EQ(thm2_terms(k, k).size(), 1u);
        EXPECT_TRUE(verify_thm2(k, k));
    }
    const auto t42 = thm2_terms(4, 2);
    EXPECT_EQ(t42[0], Polynomial::monomial(1, 4));
    EXPECT_EQ(t42[1], (Polynomial{0, 0, 1, 1}));
    EXPECT_EQ(t42[2], (Polynomial{1, 1, 1}));
    EXPECT_THROW(verify_thm2(3, 0), DomainError);
}

TEST(Thm3, Examples)
{
    EXPECT_TRUE(verify_thm3(6, 1));
    EXPECT_EQ(std::get<Polynomial>(thm3_sides(6, 1).rhs), (Polynomial{1, 1, 2, 3, 3, 3, 3, 2, 1, 1}));
    for (int r = 1; r <= 4; ++r) {
        EXPECT_EQ(thm3_terms(2 * r + 1, r).size(), 1u);
        EXPECT_TRUE(verify_thm3(2 * r + 1, r));
    }
    const auto t41 = thm3_terms(4, 1);
    EXPECT_EQ(t41[0], (Polynomial{0, 0, 1, 1}));
    EXPECT_EQ(t41[1], (Polynomial{1, 1}));
    EXPECT_THROW(verify_thm3(4, 2), DomainError);
}

TEST(Thm4, Examples)
{
    EXPECT_EQ(std::get<Polynomial>(thm4_sides(1, 1).lhs), (Polynomial{1, 1}));
    const auto t31 = thm4_terms(3, 1);
    EXPECT_EQ(t31[0], (Polynomial{1, 1}));
    EXPECT_EQ(t31[1], (Polynomial{0, 0, 1, 1}));
    EXPECT_TRUE(verify_thm4(3, 1));

    // 5 squares, 4 dominoes: the 13-board illustration, [9 4].
    const auto s = thm4_sides(5, 4);
    EXPECT_TRUE(s.holds());
    EXPECT_EQ(std::get<Polynomial>(s.rhs), gauss(9, 4));
    EXPECT_EQ(std::get<Polynomial>(s.lhs).coefficient(10), 12);
    EXPECT_TRUE(verify_thm4(9, 4));
    EXPECT_THROW(verify_thm4(4, 1), DomainError);
}

TEST(Cor1, Examples)
{
    const auto s21 = cor1_sides(2, 1);
    EXPECT_EQ(std::get<Integer>(s21.lhs), 4);
    EXPECT_EQ(std::get<Integer>(s21.rhs), 4);
    const auto s41 = cor1_sides(4, 1);
    EXPECT_EQ(std::get<Integer>(s41.lhs), 20);
    EXPECT_TRUE(s41.holds());
    for (int n = 2; n <= 20; n += 2)
        for (int r = 0; r <= 8; ++r) {
            ASSERT_TRUE(verify_cor1(n, r));
            ASSERT_TRUE(cor1_matches_thm3_at_one(n, r));
        }
    EXPECT_THROW(verify_cor1(3, 1), DomainError);
}

TEST(Cor2, PrintedVariantFailsAtOneOne)
{
    const auto s = cor2_printed_sides(1, 1);
    EXPECT_EQ(std::get<Integer>(s.lhs), 4);
    EXPECT_EQ(std::get<Integer>(s.rhs), 2);
    EXPECT_FALSE(verify_cor2_printed(1, 1));
}

TEST(Cor2, CorrectedVariant)
{
    const auto s11 = cor2_corrected_sides(1, 1);
    EXPECT_EQ(std::get<Integer>(s11.lhs), 2);
    EXPECT_TRUE(s11.holds());
    const auto s33 = cor2_corrected_sides(3, 3);
    EXPECT_EQ(std::get<Integer>(s33.lhs), 20);
    EXPECT_EQ(std::get<Integer>(s33.rhs), 20);
    for (int n = 1; n <= 15; n += 2)
        for (int r = 1; r <= 15; r += 2) {
            ASSERT_TRUE(verify_cor2_corrected(n, r));
            ASSERT_TRUE(cor2_corrected_matches_thm4_at_one(n, r));
        }
    EXPECT_THROW(verify_cor2_corrected(1, 2), DomainError);
}

TEST(GuoYang, Examples)
{
    EXPECT_TRUE(verify_guoyang1(1, 1));
    EXPECT_EQ(std::get<Polynomial>(guoyang1_sides(1, 2).lhs), (Polynomial{1, 1, 1}));
    EXPECT_TRUE(verify_guoyang1(1, 2));
    const auto g11 = guoyang2_sides(1, 1);
    EXPECT_EQ(std::get<Polynomial>(g11.lhs), (Polynomial{1, 1}));
    EXPECT_EQ(std::get<Polynomial>(g11.rhs), (Polynomial{1, 1}));
    // RHS(1,2) = [3 2] - [2 1]_{q^2} [1 0] = (1+q+q^2) - (1+q^2) = q
    const auto g12 = guoyang2_sides(1, 2);
    EXPECT_EQ(std::get<Polynomial>(g12.rhs), (Polynomial{0, 1}));
    EXPECT_TRUE(g12.holds());
}

TEST(Sun, Examples)
{
    EXPECT_EQ(std::get<Integer>(sun1_sides(1, 2).lhs), 3);
    EXPECT_TRUE(verify_sun1(1, 2));
    for (int m = 0; m <= 8; ++m)
        EXPECT_EQ(std::get<Integer>(sun1_sides(m, 0).lhs), 1);
    for (int m = 0; m <= 20; ++m)
        for (int n = 0; n <= 20; ++n)
            ASSERT_TRUE(verify_sun2(m, n)) << m << ',' << n;
}

TEST(Sun, AgreesWithGuoYangAtOne)
{
    for (int m = 0; m <= 12; ++m)
        for (int n = 0; n <= 12; ++n) {
            ASSERT_TRUE(sun1_matches_guoyang1_at_one(m, n)) << m << ',' << n;
            ASSERT_TRUE(sun2_matches_guoyang2_at_one(m, n)) << m << ',' << n;
        }
}

TEST(Sweep, Examples)
{
    EXPECT_TRUE(sweep(IdentityId::Thm1, {16, 16}).passed());
    EXPECT_TRUE(sweep(IdentityId::GuoYang2, {10, 10}).passed());

    const auto printed = sweep(IdentityId::Cor2Printed, {15, 15});
    ASSERT_FALSE(printed.passed());
    const auto& f = printed.failures.front();
    EXPECT_EQ(f.params, (std::vector<std::pair<std::string, int>>{{"n", 1}, {"r", 1}}));
    EXPECT_EQ(f.lhs, "4");
    EXPECT_EQ(f.rhs, "2");
}

TEST(Sweep, ExtensionsAndErrors)
{
    for (auto id : {IdentityId::Thm3, IdentityId::Thm4, IdentityId::Cor1}) {
        SweepBounds b = default_bounds(id);
        b.extension = true;
        const auto r = sweep(id, b);
        EXPECT_TRUE(r.passed()) << identity_name(id);
        EXPECT_TRUE(r.extension);
        EXPECT_NE(r.domain.find("extension"), std::string::npos);
    }
    SweepBounds ext{5, 5, true};
    EXPECT_THROW(sweep(IdentityId::Thm1, ext), DomainError);
    EXPECT_THROW(sweep(IdentityId::Thm1, {-1, 3}), DomainError);
}

TEST(Sweep, DeterministicAcrossWorkerCounts)
{
    for (auto id : kAllIdentities) {
        SweepBounds one = default_bounds(id);
        one.max_first = std::min(one.max_first, 11);
        one.max_second = std::min(one.max_second, 11);
        SweepBounds many = one;
        many.workers = 4;
        const auto a = to_json_value(sweep(id, one)).dump();
        const auto b = to_json_value(sweep(id, many)).dump();
        ASSERT_EQ(a, b) << identity_name(id);
    }
}

TEST(Sweep, ReportJsonShape)
{
    const auto j = to_json_value(sweep(IdentityId::Cor2Printed, {3, 3}));
    EXPECT_EQ(j.dump(),
              R"({"id":"cor2-printed","domain":"odd n <= 3, odd r <= 3","checked":4,"passed":false,"failures":[)"
              R"({"params":{"n":1,"r":1},"lhs":"4","rhs":"2"},)"
              R"({"params":{"n":1,"r":3},"lhs":"6","rhs":"4"},)"
              R"({"params":{"n":3,"r":1},"lhs":"8","rhs":"4"},)"
              R"({"params":{"n":3,"r":3},"lhs":"32","rhs":"20"}]})");
    EXPECT_EQ(parse_identity("guoyang1"), IdentityId::GuoYang1);
    EXPECT_FALSE(parse_identity("thm9").has_value());
}
