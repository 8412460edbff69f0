#include <gtest/gtest.h>

#include <asmkit/asmkit.hpp>

#include "oracles.hpp"

using namespace asmkit;

namespace {

std::vector<BigInt> constants(const RefinedCounts& rc) {
    std::vector<BigInt> out;
    for (const auto& p : rc.counts) out.push_back(p.coefficient(0));
    return out;
}

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(AsmMatrix, ExampleStatistics) {
    const auto m = AsmMatrix::from_rows({{0, 1, 0, 0}, {1, -1, 1, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}}, AsmClass::asm_);
    ASSERT_TRUE(is_valid(m));
    const auto s = stats(m);
    EXPECT_EQ(s.r, 2);
    EXPECT_EQ(s.k, 1);
    EXPECT_EQ(s.r_last, 3);
    EXPECT_FALSE(s.l);
    EXPECT_EQ(m.str(), "0+00+-+0000+0+00");

    const auto perm = AsmMatrix::from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}, AsmClass::asm_);
    EXPECT_EQ(stats(perm).k, 0);
}

TEST(AsmMatrix, RejectsInvalid) {
    const auto bad = AsmMatrix::from_rows({{1, 0}, {1, 0}}, AsmClass::asm_);
    EXPECT_FALSE(is_valid(bad));
    EXPECT_THROW(stats(bad), contract_violation);
    EXPECT_THROW(AsmMatrix::from_rows({{1, 0}, {1}}, AsmClass::asm_), contract_violation);
    const auto diag = AsmMatrix::from_rows({{1, 0}, {0, 1}}, AsmClass::osasm);
    EXPECT_FALSE(is_valid(diag));
}

TEST(Enumeration, AsmMatchesBruteForce) {
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(oracle::sorted_class(AsmClass::asm_, n), oracle::sorted(oracle::asms(n))) << n;
}

TEST(Enumeration, AsmTotals) {
    const long expected[] = {1, 2, 7, 42, 429, 7436};
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(census(AsmClass::asm_, n).total(), expected[n - 1]) << n;
    EXPECT_EQ(oracle::asms(6).size(), 7436u);
}

TEST(Enumeration, VsasmsOfOrderFive) {
    const std::vector<oracle::Grid> figure = {
        {{0, 0, 1, 0, 0}, {1, 0, -1, 0, 1}, {0, 0, 1, 0, 0}, {0, 1, -1, 1, 0}, {0, 0, 1, 0, 0}},
        {{0, 0, 1, 0, 0}, {0, 1, -1, 1, 0}, {1, -1, 1, -1, 1}, {0, 1, -1, 1, 0}, {0, 0, 1, 0, 0}},
        {{0, 0, 1, 0, 0}, {0, 1, -1, 1, 0}, {0, 0, 1, 0, 0}, {1, 0, -1, 0, 1}, {0, 0, 1, 0, 0}},
    };
    EXPECT_EQ(oracle::sorted_class(AsmClass::vsasm, 2), oracle::sorted(figure));
    std::vector<int> ks;
    enumerate_class(AsmClass::vsasm, 2, [&](const AsmMatrix& m) { ks.push_back(stats(m).k); });
    std::sort(ks.begin(), ks.end());
    EXPECT_EQ(ks, (std::vector<int>{2, 2, 4}));
}

TEST(Enumeration, VsasmMatchesPalindromicBruteForce) {
    for (int n = 1; n <= 3; ++n)
        EXPECT_EQ(oracle::sorted_class(AsmClass::vsasm, n), oracle::sorted(oracle::vsasms(n))) << n;
}

TEST(Enumeration, VsasmOrderNine) {
    EXPECT_EQ(oracle::vsasms(4).size(), 646u);
    EXPECT_EQ(census(AsmClass::vsasm, 4).total(), 646);
    EXPECT_EQ(av_total(4), 646);
}

TEST(Enumeration, OsasmsOfOrderFour) {
    const std::vector<oracle::Grid> figure = {
        {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}},
        {{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}},
        {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}},
    };
    EXPECT_EQ(oracle::sorted_class(AsmClass::osasm, 2), oracle::sorted(figure));
}

TEST(Enumeration, OsasmMatchesFilteredAsms) {
    for (int n = 1; n <= 3; ++n)
        EXPECT_EQ(oracle::sorted_class(AsmClass::osasm, n), oracle::sorted(oracle::osasms(n))) << n;
}

TEST(Enumeration, UasmMatchesBruteForce) {
    for (int n = 1; n <= 3; ++n) EXPECT_EQ(oracle::sorted_class(AsmClass::uasm, n), oracle::sorted(oracle::uasms(n))) << n;
    EXPECT_EQ(oracle::uasms(2).size(), 12u);
}

TEST(Enumeration, EveryMemberIsValid) {
    for (auto cls : {AsmClass::asm_, AsmClass::vsasm, AsmClass::osasm, AsmClass::uasm})
        for (int n = 1; n <= 3; ++n)
            enumerate_class(cls, n, [&](const AsmMatrix& m) {
                EXPECT_TRUE(is_valid(m)) << class_name(cls) << " " << m.str();
                EXPECT_EQ(m.rows, class_rows(cls, n));
                EXPECT_EQ(m.cols, class_cols(cls, n));
            });
}

TEST(Enumeration, Caps) {
    EXPECT_THROW(census(AsmClass::asm_, 8), resource_limit);
    EXPECT_THROW(census(AsmClass::uasm, 5), resource_limit);
    EXPECT_THROW(census(AsmClass::asm_, 0), contract_violation);
    EXPECT_EQ(census(AsmClass::asm_, 3, 1, EnumerationLimits{3}).total(), 7);
    EXPECT_THROW(census(AsmClass::asm_, 4, 1, EnumerationLimits{3}), resource_limit);
}

TEST(Refined, PaperLists) {
    EXPECT_EQ(constants(refined_counts(AsmClass::asm_, 4, Statistic::first_column)), ints({7, 14, 14, 7}));
    EXPECT_EQ(constants(refined_counts(AsmClass::vsasm, 2, Statistic::first_column)), ints({0, 1, 1, 1, 0}));
    EXPECT_EQ(constants(refined_counts(AsmClass::osasm, 2, Statistic::first_column)), ints({0, 1, 1, 1}));

    const auto u2 = refined_counts(AsmClass::uasm, 2, Statistic::first_column);
    std::vector<BigInt> at_one;
    for (const auto& p : u2.counts) at_one.push_back(p.evaluate(BigInt(1)));
    EXPECT_EQ(at_one, ints({2, 4, 4, 2}));
    EXPECT_EQ(refined_counts(AsmClass::uasm, 1, Statistic::first_column).total(), IntPoly({BigInt(1), BigInt(1)}));
    const IntPoly one_y({BigInt(1), BigInt(1)});
    EXPECT_EQ(u2.total(), IntPoly(3) * one_y * one_y);
}

TEST(Refined, FirstColumnMatchesBruteForce) {
    for (int n = 1; n <= 5; ++n) {
        std::vector<BigInt> expected(static_cast<std::size_t>(n), BigInt(0));
        for (const auto& g : oracle::asms(n)) expected[static_cast<std::size_t>(oracle::first_column_row(g) - 1)] += 1;
        EXPECT_EQ(constants(refined_counts(AsmClass::asm_, n, Statistic::first_column)), expected) << n;
    }
}

TEST(Refined, LastColumnMirrorsFirstForAsm) {
    for (int n = 1; n <= 5; ++n) {
        auto first = constants(refined_counts(AsmClass::asm_, n, Statistic::first_column));
        std::reverse(first.begin(), first.end());
        EXPECT_EQ(constants(refined_counts(AsmClass::asm_, n, Statistic::last_column)), first);
    }
}

TEST(Census, ThreadCountDoesNotMatter) {
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(census(AsmClass::asm_, n, 1), census(AsmClass::asm_, n, 3)) << n;
}

TEST(Census, NamesRoundTrip) {
    for (auto cls : {AsmClass::asm_, AsmClass::vsasm, AsmClass::osasm, AsmClass::uasm})
        EXPECT_EQ(parse_class(class_name(cls)), cls);
    EXPECT_FALSE(parse_class("matrix"));
}
