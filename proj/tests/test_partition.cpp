#include <gtest/gtest.h>

#include <set>

#include <asmkit/asmkit.hpp>

#include "oracles.hpp"

using namespace asmkit;

namespace {

const Cyclo6 A = Cyclo6::zeta6();

int minus_ones(const oracle::Grid& g) {
    int k = 0;
    for (const auto& row : g)
        for (int v : row) k += v < 0;
    return k;
}

template <class F>
SpectralAssignment<F> ones(const F& a, int n, std::optional<F> b = std::nullopt) {
    return {a, b, std::vector<F>(static_cast<std::size_t>(n), F(1)), std::vector<F>(static_cast<std::size_t>(n), F(1)), {}};
}

std::vector<Cyclo6> cy(const std::vector<BigRational>& v) { return {v.begin(), v.end()}; }

std::set<oracle::Grid> matrices_of_states(Boundary b, int n) {
    const auto L = IceLayout::make(b, n);
    std::set<oracle::Grid> out;
    enumerate_states(L, [&](const IceState& s) { out.insert(oracle::to_grid(state_to_matrix(L, s))); });
    return out;
}

}  // namespace

TEST(Ice, StateCounts) {
    EXPECT_EQ(count_states(IceLayout::make(Boundary::dwbc, 1)), 1u);
    EXPECT_EQ(count_states(IceLayout::make(Boundary::dwbc, 3)), 7u);
    EXPECT_EQ(count_states(IceLayout::make(Boundary::dwbc, 5)), 429u);
    EXPECT_EQ(count_states(IceLayout::make(Boundary::uturn, 1)), 2u);
    EXPECT_EQ(count_states(IceLayout::make(Boundary::uturn, 2)), 12u);
    EXPECT_EQ(count_states(IceLayout::make(Boundary::os, 2)), 3u);
    EXPECT_THROW(count_states(IceLayout::make(Boundary::dwbc, 5), 100), resource_limit);
    EXPECT_THROW(IceLayout::make(Boundary::os, 0), contract_violation);
}

TEST(Ice, StatesBijectWithMatrices) {
    for (int n = 1; n <= 4; ++n) {
        const auto got = matrices_of_states(Boundary::dwbc, n);
        const auto want = oracle::asms(n);
        EXPECT_EQ(got, std::set<oracle::Grid>(want.begin(), want.end())) << "dwbc " << n;
    }
    for (int n = 1; n <= 3; ++n) {
        const auto got = matrices_of_states(Boundary::uturn, n);
        const auto want = oracle::uasms(n);
        EXPECT_EQ(got, std::set<oracle::Grid>(want.begin(), want.end())) << "uturn " << n;
        EXPECT_EQ(count_states(IceLayout::make(Boundary::uturn, n)), want.size());
    }
    for (int n = 1; n <= 3; ++n) {
        const auto got = matrices_of_states(Boundary::os, n);
        const auto want = oracle::osasms(n);
        EXPECT_EQ(got, std::set<oracle::Grid>(want.begin(), want.end())) << "os " << n;
    }
}

TEST(Ice, ExampleStateAppears) {
    const oracle::Grid example = {{0, 1, 0, 0}, {1, -1, 1, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}};
    EXPECT_EQ(matrices_of_states(Boundary::dwbc, 4).count(example), 1u);
}

TEST(Partition, DwbcInitialCondition) {
    Sampler s(3);
    for (int i = 0; i < 10; ++i) {
        const BigRational a = s.rational(), x = s.rational(), y = s.rational();
        if (a * a == 1) continue;
        SpectralAssignment<BigRational> p{a, std::nullopt, {x}, {y}, {}};
        EXPECT_EQ(partition_sum(Boundary::dwbc, p), sigma(BigRational(a * a)));
        const auto L = IceLayout::make(Boundary::dwbc, 1);
        enumerate_states(L, [&](const IceState& st) { EXPECT_EQ(state_weight(L, st, p), sigma(BigRational(a * a))); });
        if (alpha(BigRational(x / y), a) != 0) {
            EXPECT_EQ(z_ik(p), sigma(BigRational(a * a)));
        }
    }
}

TEST(Partition, DwbcAtUnitParametersCountsMinusOnes) {
    const BigRational a(2, 5);
    const BigRational sa = sigma(a), sa2 = sigma(BigRational(a * a));
    for (int n = 1; n <= 5; ++n) {
        BigRational expected(0);
        for (const auto& g : oracle::asms(n)) {
            const int k = minus_ones(g);
            expected += power(sa2, n + 2 * k) * power(sa, n * n - n - 2 * k);
        }
        EXPECT_EQ(partition_sum(Boundary::dwbc, ones(a, n)), expected) << n;
    }
}

TEST(Partition, DwbcAtZeta6CountsAsms) {
    const long counts[] = {1, 2, 7, 42, 429};
    for (int n = 1; n <= 5; ++n)
        EXPECT_EQ(partition_sum(Boundary::dwbc, ones(A, n)), Cyclo6(counts[n - 1]) * power(sigma(A), n * n)) << n;
}

TEST(Partition, UturnAtUnitParametersCountsUturns) {
    const BigRational a(3, 7), b(5, 2);
    for (int n = 1; n <= 3; ++n) {
        BigRational expected(0);
        for (const auto& g : oracle::uasms(n)) {
            const int k = minus_ones(g);
            int up = 0;
            for (std::size_t i = 0; i < g.size(); i += 2) up += std::accumulate(g[i].begin(), g[i].end(), 0) == 1;
            expected += power(sigma(BigRational(a * a)), n + 2 * k) * power(sigma(a), 2 * n * n - n - 2 * k) *
                        power(sigma(BigRational(b * a)), n - up) * power(sigma(BigRational(b / a)), up);
        }
        EXPECT_EQ(partition_sum(Boundary::uturn, ones(a, n, std::optional<BigRational>(b))), expected) << n;
    }
}

TEST(Partition, DwbcFormulasAgreeWithStateSum) {
    Sampler s(17);
    for (int n = 1; n <= 3; ++n)
        for (int i = 0; i < 5; ++i) {
            with_resampling(s, [&](Sampler& sm) {
                const BigRational a = sm.rational();
                SpectralAssignment<BigRational> p{a, std::nullopt, sm.rationals(static_cast<std::size_t>(n)), sm.rationals(static_cast<std::size_t>(n)), {}};
                EXPECT_EQ(z_ik(p), partition_sum(Boundary::dwbc, p));
                return 0;
            });
            with_resampling(s, [&](Sampler& sm) {
                const auto u = cy(sm.rationals(2 * static_cast<std::size_t>(n)));
                EXPECT_EQ(z_p(u), partition_sum(Boundary::dwbc, SpectralAssignment<Cyclo6>::from_unified(A, u)));
                return 0;
            });
        }
}

TEST(Partition, UturnAndOsFormulasAgreeWithStateSum) {
    Sampler s(23);
    for (int n = 1; n <= 2; ++n)
        for (int i = 0; i < 5; ++i) {
            with_resampling(s, [&](Sampler& sm) {
                const BigRational a = sm.rational(), b = sm.rational();
                SpectralAssignment<BigRational> p{a, b, sm.rationals(static_cast<std::size_t>(n)), sm.rationals(static_cast<std::size_t>(n)), {}};
                EXPECT_EQ(z_u_det(p), partition_sum(Boundary::uturn, p));
                return 0;
            });
            with_resampling(s, [&](Sampler& sm) {
                const BigRational a = sm.rational();
                SpectralAssignment<BigRational> p{a, std::nullopt, {}, {}, sm.rationals(2 * static_cast<std::size_t>(n))};
                EXPECT_EQ(z_o_pf(p.u, a), partition_sum(Boundary::os, p));
                return 0;
            });
            with_resampling(s, [&](Sampler& sm) {
                const auto u = cy(sm.rationals(2 * static_cast<std::size_t>(n)));
                const Cyclo6 b(sm.rational());
                EXPECT_EQ(z_u_p(u), z_u_prime(SpectralAssignment<Cyclo6>::from_unified(A, u, b)));
                EXPECT_EQ(z_o_p(u), z_o_pf(u, A));
                return 0;
            });
        }
}

TEST(Formulas, MatrixShapes) {
    EXPECT_EQ(p_exponents(1), (std::vector<long>{1, -1}));
    EXPECT_EQ(p_exponents(2), (std::vector<long>{4, 2, -2, -4}));
    EXPECT_EQ(p_u_exponents(1), (std::vector<long>{4, 2}));

    const Cyclo6 u1(BigRational(2)), u2(BigRational(3, 5));
    const auto p = build_p({u1, u2});
    EXPECT_EQ(p(0, 0), u1);
    EXPECT_EQ(p(1, 1), inverse(u2));
    EXPECT_EQ(z_p({u1, u2}), sigma(A * A));

    const auto pu = build_p_u({u1, u2});
    EXPECT_EQ(pu(0, 1), sigma(power(u2, 4)));
    EXPECT_EQ(pu(1, 0), sigma(power(u1, 2)));

    const auto mo = build_m_o<BigRational>({2, 3, BigRational(1, 5), 7}, BigRational(4, 9));
    EXPECT_TRUE(mo.is_skew_symmetric());
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(mo(i, i), 0);

    Sampler s(41);
    for (int i = 0; i < 10; ++i) {
        const Cyclo6 x(s.rational()), y(s.rational());
        if (x == y || x * x * x == y * y * y) continue;
        SpectralAssignment<Cyclo6> q{A, std::nullopt, {x}, {y}, {}};
        EXPECT_EQ(build_m(q)(0, 0), -sigma(Cyclo6(x / y)) / sigma(power(Cyclo6(x / y), 3)));
    }
}

TEST(Formulas, ContractViolations) {
    SpectralAssignment<BigRational> p{BigRational(2), std::nullopt, {1, 2}, {3}, {}};
    EXPECT_THROW(build_m(p), contract_violation);
    EXPECT_THROW(partition_sum(Boundary::dwbc, p), contract_violation);
    SpectralAssignment<BigRational> q{BigRational(2), std::nullopt, {2}, {3}, {}};
    EXPECT_THROW(partition_sum(Boundary::uturn, q), contract_violation);
    EXPECT_THROW(z_u_det(q), contract_violation);
}
