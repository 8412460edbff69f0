#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "checks.hpp"
#include "formulas.hpp"
#include "identities.hpp"
#include "special.hpp"

namespace asmkit {

namespace detail {

inline std::vector<Cyclo6> cy(const std::vector<BigRational>& v) { return {v.begin(), v.end()}; }

/// e with value == sigma(a)^e at a = zeta6, searched in [lo, hi].
inline std::optional<long> sigma_a_exponent(const Cyclo6& value, long lo = -64, long hi = 128) {
    const Cyclo6 s = sigma(Cyclo6::zeta6());
    for (long e = lo; e <= hi; ++e)
        if (power(s, e) == value) return e;
    return std::nullopt;
}

inline CheckSpec make_spec(std::string tag, int n_min, int cap, CaseFn body) {
    return CheckSpec{std::move(tag), n_min, cap, std::move(body)};
}

/// Shared body of the three single-variable f batteries.
inline std::optional<std::string> f_properties(CaseContext& c, FKind kind, const std::optional<Cyclo6>& b,
                                               const Cyclo6& constant_without_sigma, long expected_exponent) {
    const int n = c.n;
    const Cyclo6 A = Cyclo6::zeta6();
    const auto f = interpolate_f(kind, n, b);
    if (!f) return std::string("interpolant disagrees at an extra node (degree bound)");
    const long d = f_half_degree(kind, n);
    if (f->min_exponent() < -d || f->max_exponent() > d) return std::string("degree exceeds the bound");
    for (const auto& [e, coeff] : f->terms())
        if ((e + d) % 2 != 0) return "odd power u^" + std::to_string(e);
    if (f->substitute(Cyclo6(1), -1) != -*f) return std::string("f(1/u) != -f(u)");
    if (!(*f + f->substitute(power(A, 2), 1) + f->substitute(power(A, 4), 1)).is_zero())
        return std::string("f(u) + f(a^2 u) + f(a^4 u) != 0");
    const int order = kind == FKind::dwbc ? n : 2 * n;
    if (kind == FKind::dwbc) {
        if (!f->divide_by_sigma_u(static_cast<unsigned>(2 * n - 1))) return std::string("not divisible by sigma(u)^(2n-1)");
    } else {
        const auto q = f->divide_by_sigma_power(2, 1);
        if (!q || !q->divide_by_sigma_u(static_cast<unsigned>(4 * n - 2)))
            return std::string("not divisible by sigma(u)^(4n-2) sigma(u^2)");
    }
    const CycloLaurent ph = phi(order);
    const Cyclo6 ratio = divide(f->coefficient(d), ph.coefficient(d));
    if (*f != ph * ratio) return std::string("f is not proportional to phi");
    const auto e = sigma_a_exponent(divide(ratio, constant_without_sigma));
    if (!e) return "proportionality constant " + ratio.str() + " is not a power of sigma(a) times the count";
    c.note("f = count * sigma(a)^" + std::to_string(*e) + " * phi");
    if (*e != expected_exponent)
        return "sigma(a) exponent " + std::to_string(*e) + ", expected " + std::to_string(expected_exponent);
    return std::nullopt;
}

/// F(u) + F(.., a^2 u_mu, ..) + F(.., a^4 u_mu, ..) = 0 for every mu.
template <class Fn>
std::optional<std::string> rotation_at(const std::vector<Cyclo6>& u, Fn&& F) {
    const Cyclo6 a2 = power(Cyclo6::zeta6(), 2), a4 = power(Cyclo6::zeta6(), 4);
    for (std::size_t mu = 0; mu < u.size(); ++mu) {
        auto v2 = u, v4 = u;
        v2[mu] *= a2;
        v4[mu] *= a4;
        const Cyclo6 s = F(u) + F(v2) + F(v4);
        if (!s.is_zero()) return "mu=" + std::to_string(mu + 1) + " sum=" + s.str();
    }
    return std::nullopt;
}

}  // namespace detail

/// Partition-function oracle checks: formulas against brute-force state sums.
inline std::vector<CheckSpec> partition_checks() {
    using namespace detail;
    const Cyclo6 A = Cyclo6::zeta6();
    std::vector<CheckSpec> out;

    out.push_back(make_spec("DWBC_DET_VS_STATESUM", 1, 4, [](CaseContext& c) {
        return for_samples(c, [&](Sampler& sm) -> std::optional<std::string> {
            const BigRational a = sm.rational();
            const auto x = sm.rationals(static_cast<std::size_t>(c.n)), y = sm.rationals(static_cast<std::size_t>(c.n));
            const SpectralAssignment<BigRational> p{a, std::nullopt, x, y, {}};
            return expect_equal(z_ik(p), partition_sum(Boundary::dwbc, p),
                                "a=" + a.get_str() + " x=" + show_point(x) + " y=" + show_point(y));
        });
    }));

    out.push_back(make_spec("DWBC_RECURRENCE", 1, 4, [](CaseContext& c) {
        return for_samples(c, [&](Sampler& sm) -> std::optional<std::string> {
            const int n = c.n;
            const BigRational a = sm.rational();
            auto x = sm.rationals(static_cast<std::size_t>(n)), y = sm.rationals(static_cast<std::size_t>(n - 1));
            y.push_back(a * x.back());
            BigRational prev(1);
            if (n > 1) {
                const SpectralAssignment<BigRational> q{a, std::nullopt, {x.begin(), x.end() - 1}, {y.begin(), y.end() - 1}, {}};
                prev = partition_sum(Boundary::dwbc, q);
            }
            BigRational factor = sigma(BigRational(a * a));
            for (int k = 0; k < n - 1; ++k) {
                factor *= sigma(divide(BigRational(a * y[static_cast<std::size_t>(k)]), x.back()));
                factor *= sigma(divide(BigRational(a * y.back()), x[static_cast<std::size_t>(k)]));
            }
            const SpectralAssignment<BigRational> p{a, std::nullopt, x, y, {}};
            return expect_equal(partition_sum(Boundary::dwbc, p), BigRational(prev * factor),
                                "a=" + a.get_str() + " x=" + show_point(x) + " y=" + show_point(y));
        });
    }));

    out.push_back(make_spec("DWBC_SYMMETRY", 1, 4, [](CaseContext& c) {
        return for_samples(c, [&](Sampler& sm) -> std::optional<std::string> {
            const BigRational a = sm.rational();
            const auto x = sm.rationals(static_cast<std::size_t>(c.n)), y = sm.rationals(static_cast<std::size_t>(c.n));
            const std::string at = "a=" + a.get_str() + " x=" + show_point(x) + " y=" + show_point(y);
            const BigRational z = partition_sum(Boundary::dwbc, SpectralAssignment<BigRational>{a, std::nullopt, x, y, {}});
            auto xr = x, yr = y;
            std::reverse(xr.begin(), xr.end());
            std::rotate(yr.begin(), yr.begin() + 1, yr.end());
            if (auto w = expect_equal(z, partition_sum(Boundary::dwbc, SpectralAssignment<BigRational>{a, std::nullopt, xr, yr, {}}),
                                      "permuted " + at))
                return w;
            std::vector<BigRational> xi, yi;
            for (const auto& v : x) xi.push_back(inverse(v));
            for (const auto& v : y) yi.push_back(inverse(v));
            return expect_equal(z, partition_sum(Boundary::dwbc, SpectralAssignment<BigRational>{a, std::nullopt, xi, yi, {}}),
                                "inverted " + at);
        });
    }));

    out.push_back(make_spec("DWBC_ZETA6_DET", 1, 4, [A](CaseContext& c) {
        return for_samples(c, [&](Sampler& sm) -> std::optional<std::string> {
            const auto uq = sm.rationals(static_cast<std::size_t>(2 * c.n));
            const auto u = cy(uq);
            const auto p = SpectralAssignment<Cyclo6>::from_unified(A, u);
            return expect_equal(z_p(u), z_ik(p), "u=" + show_point(uq));
        });
    }));

    out.push_back(make_spec("UTURN_DET_VS_STATESUM", 1, 3, [](CaseContext& c) -> std::optional<std::string> {
        if (c.n == 1) {
            const auto states = count_states(IceLayout::make(Boundary::uturn, 1));
            if (states != 2) return "n=1 U-turn ice has " + std::to_string(states) + " states, expected 2";
        }
        return for_samples(c, [&](Sampler& sm) -> std::optional<std::string> {
            const BigRational a = sm.rational(), b = sm.rational();
            const auto x = sm.rationals(static_cast<std::size_t>(c.n)), y = sm.rationals(static_cast<std::size_t>(c.n));
            const SpectralAssignment<BigRational> p{a, b, x, y, {}};
            return expect_equal(z_u_det(p), partition_sum(Boundary::uturn, p),
                                "a=" + a.get_str() + " b=" + b.get_str() + " x=" + show_point(x) + " y=" + show_point(y));
        });
    }));

    out.push_back(make_spec("UTURN_ZETA6_DET", 1, 3, [A](CaseContext& c) {
        return for_samples(c, [&](Sampler& sm) -> std::optional<std::string> {
            const auto uq = sm.rationals(static_cast<std::size_t>(2 * c.n));
            const BigRational b = sm.rational();
            const auto u = cy(uq);
            const auto p = SpectralAssignment<Cyclo6>::from_unified(A, u, Cyclo6(b));
            return expect_equal(z_u_p(u), z_u_prime(p), "u=" + show_point(uq) + " b=" + b.get_str());
        });
    }));

    out.push_back(make_spec("UTURN_MODIFIED_SYMMETRY", 1, 3, [A](CaseContext& c) {
        return for_samples(c, [&](Sampler& sm) -> std::optional<std::string> {
            const auto uq = sm.rationals(static_cast<std::size_t>(2 * c.n));
            const BigRational b1 = sm.rational(), b2 = sm.rational();
            const auto u = cy(uq);
            const std::string at = "u=" + show_point(uq) + " b=" + b1.get_str() + "," + b2.get_str();
            const Cyclo6 z = z_u_prime(SpectralAssignment<Cyclo6>::from_unified(A, u, Cyclo6(b1)));
            if (auto w = expect_equal(z, z_u_prime(SpectralAssignment<Cyclo6>::from_unified(A, u, Cyclo6(b2))), "b-dependence " + at))
                return w;
            auto v = u;
            std::reverse(v.begin(), v.end());
            return expect_equal(z, z_u_prime(SpectralAssignment<Cyclo6>::from_unified(A, v, Cyclo6(b1))), "reversed " + at);
        });
    }));

    out.push_back(make_spec("OS_PFAFFIAN_VS_STATESUM", 1, 3, [](CaseContext& c) {
        return for_samples(c, [&](Sampler& sm) -> std::optional<std::string> {
            const BigRational a = sm.rational();
            const auto u = sm.rationals(static_cast<std::size_t>(2 * c.n));
            const SpectralAssignment<BigRational> p{a, std::nullopt, {}, {}, u};
            return expect_equal(z_o_pf(u, a), partition_sum(Boundary::os, p), "a=" + a.get_str() + " u=" + show_point(u));
        });
    }));

    out.push_back(make_spec("OS_ZETA6_DET", 1, 3, [A](CaseContext& c) {
        return for_samples(c, [&](Sampler& sm) -> std::optional<std::string> {
            const auto uq = sm.rationals(static_cast<std::size_t>(2 * c.n));
            const auto u = cy(uq);
            return expect_equal(z_o_p(u), z_o_pf(u, A), "u=" + show_point(uq));
        });
    }));

    out.push_back(make_spec("OS_EQUALS_UTURN_MODIFIED", 1, 3, [A](CaseContext& c) {
        return for_samples(c, [&](Sampler& sm) -> std::optional<std::string> {
            const auto uq = sm.rationals(static_cast<std::size_t>(2 * c.n));
            const BigRational b = sm.rational();
            const auto u = cy(uq);
            return expect_equal(z_o_pf(u, A), z_u_prime(SpectralAssignment<Cyclo6>::from_unified(A, u, Cyclo6(b))),
                                "u=" + show_point(uq) + " b=" + b.get_str());
        });
    }));
    return out;
}

/// Special-function and symmetric-function checks at a = zeta6.
inline std::vector<CheckSpec> function_checks() {
    using namespace detail;
    const Cyclo6 A = Cyclo6::zeta6();
    std::vector<CheckSpec> out;

    out.push_back(make_spec("PHI_NORMALIZATION", 1, 12, [A](CaseContext& c) {
        return expect_equal(phi(c.n).evaluate(A), Cyclo6(1));
    }));

    out.push_back(make_spec("PHI_BINOMIAL_SUM", 1, 12, [](CaseContext& c) {
        const long n = c.n;
        BigRational sum(0);
        for (long k = 0; k < n; ++k)
            sum += gen_binomial(BigRational(n) - BigRational(4, 3), n - 1 - k) * gen_binomial(BigRational(n) - BigRational(2, 3), k);
        return expect_equal(sum, BigRational(binomial(2 * n - 2, n - 1)));
    }));

    out.push_back(make_spec("P_DET_RECURRENCE", 2, 4, [A](CaseContext& c) {
        return for_samples(c, [&](Sampler& sm) -> std::optional<std::string> {
            const long n = c.n;
            const auto uq = sm.rationals(static_cast<std::size_t>(2 * n - 1));
            auto u = cy(uq);
            const Cyclo6 w = u.back();
            const std::vector<Cyclo6> head(u.begin(), u.end() - 1);
            u.push_back(A * w);
            Cyclo6 factor = sigma(A);
            if (n % 2 != 0) factor = -factor;
            for (const auto& v : head) factor *= sigma(divide(power(v, 3), power(w, 3)));
            const Cyclo6 prev = det(build_p(head));
            if (prev.is_zero()) throw division_by_zero("degenerate sample point");
            return expect_equal(det(build_p(u)), Cyclo6(factor * prev), "u=" + show_point(uq));
        });
    }));

    out.push_back(make_spec("PU_DET_RECURRENCE", 2, 4, [A](CaseContext& c) {
        bool plain_ever = false;
        auto res = for_samples(c, [&](Sampler& sm) -> std::optional<std::string> {
            const auto uq = sm.rationals(static_cast<std::size_t>(2 * c.n - 1));
            auto u = cy(uq);
            const Cyclo6 w = u.back();
            const std::vector<Cyclo6> head(u.begin(), u.end() - 1);
            u.push_back(A * w);
            Cyclo6 cubed = sigma(A) * sigma(power(w, 6)), plain = cubed;
            for (const auto& v : head) {
                cubed *= sigma(divide(power(v, 3), power(w, 3))) * sigma(Cyclo6(power(v, 3) * power(w, 3)));
                plain *= sigma(divide(v, w)) * sigma(Cyclo6(v * w));
            }
            const Cyclo6 prev = det(build_p_u(head));
            if (prev.is_zero()) throw division_by_zero("degenerate sample point");
            if (cubed.is_zero() || plain.is_zero()) throw division_by_zero("degenerate sample point");
            const Cyclo6 lhs = det(build_p_u(u));
            plain_ever = plain_ever || lhs == plain * prev;
            return expect_equal(lhs, Cyclo6(cubed * prev), "u=" + show_point(uq));
        });
        c.note(plain_ever ? "product over sigma(u_mu/w) sigma(u_mu w) also matched"
                          : "product over sigma(u_mu/w) sigma(u_mu w) does not match; cubes are required");
        return res;
    }));

    out.push_back(make_spec("F_ROTATION", 1, 4, [](CaseContext& c) {
        return for_samples(c, [&](Sampler& sm) -> std::optional<std::string> {
            const auto uq = sm.rationals(static_cast<std::size_t>(2 * c.n));
            auto w = rotation_at(cy(uq), [](const std::vector<Cyclo6>& v) { return f_dwbc(v); });
            if (w) return "u=" + show_point(uq) + " " + *w;
            return std::nullopt;
        });
    }));

    out.push_back(make_spec("FU_ROTATION", 1, 3, [](CaseContext& c) {
        return for_samples(c, [&](Sampler& sm) -> std::optional<std::string> {
            const auto uq = sm.rationals(static_cast<std::size_t>(2 * c.n));
            const Cyclo6 b(sm.rational());
            auto w = rotation_at(cy(uq), [&b](const std::vector<Cyclo6>& v) { return f_uturn(v, b); });
            if (w) return "u=" + show_point(uq) + " b=" + b.str() + " " + *w;
            return std::nullopt;
        });
    }));

    out.push_back(make_spec("FO_ROTATION", 1, 3, [](CaseContext& c) {
        return for_samples(c, [&](Sampler& sm) -> std::optional<std::string> {
            const auto uq = sm.rationals(static_cast<std::size_t>(2 * c.n));
            auto w = rotation_at(cy(uq), [](const std::vector<Cyclo6>& v) { return f_os(v); });
            if (w) return "u=" + show_point(uq) + " " + *w;
            return std::nullopt;
        });
    }));

    out.push_back(make_spec("ZERO_LOCI", 1, 3, [](CaseContext& c) {
        return for_samples(c, [&](Sampler& sm) -> std::optional<std::string> {
            const auto uq = sm.rationals(static_cast<std::size_t>(2 * c.n));
            const Cyclo6 b(sm.rational());
            const auto u = cy(uq);
            const std::string at = "u=" + show_point(uq) + " b=" + b.str() + " ";
            auto with = [&u](std::size_t i, const Cyclo6& v) {
                auto w = u;
                w[i] = v;
                return w;
            };
            std::vector<std::pair<std::string, std::vector<Cyclo6>>> loci;
            if (u.size() > 1) {
                loci.emplace_back("u2=-u1", with(1, -u[0]));
                loci.emplace_back("u2=1/u1", with(1, inverse(u[0])));
            }
            loci.emplace_back("u1=1", with(0, Cyclo6(1)));
            loci.emplace_back("u1=-1", with(0, Cyclo6(-1)));
            for (const auto& [name, v] : loci) {
                if (name == "u2=-u1" && !f_dwbc(v).is_zero()) return at + "F nonzero at " + name;
                if (!f_uturn(v, b).is_zero()) return at + "F_U nonzero at " + name;
                if (!f_os(v).is_zero()) return at + "F_O nonzero at " + name;
            }
            return std::optional<std::string>();
        });
    }));

    out.push_back(make_spec("F_DWBC_PROPERTIES", 1, 4, [](CaseContext& c) {
        return f_properties(c, FKind::dwbc, std::nullopt, Cyclo6(BigRational(c.counts.asm_count(c.n - 1))),
                            static_cast<long>(c.n) * c.n + 2L * c.n - 1);
    }));

    out.push_back(make_spec("F_UTURN_PROPERTIES", 1, 4, [A](CaseContext& c) {
        Sampler sm = c.sampler();
        return with_resampling(sm, [&](Sampler& s) -> std::optional<std::string> {
            const Cyclo6 b(s.rational());
            const long n = c.n;
            const Cyclo6 y = y_weight(A, b);
            const Cyclo6 constant =
                c.counts.au_total(c.n - 1).evaluate(y) * power(divide(sigma(Cyclo6(A * b)), sigma(b)), n - 1);
            ++c.samples_used;
            auto w = f_properties(c, FKind::uturn, b, constant, 2 * n * n + 3 * n - 1);
            if (w) return "b=" + b.str() + " " + *w;
            return std::optional<std::string>();
        });
    }));

    out.push_back(make_spec("F_OS_PROPERTIES", 1, 4, [A](CaseContext& c) -> std::optional<std::string> {
        const long n = c.n;
        if (auto w = f_properties(c, FKind::os, std::nullopt, Cyclo6(BigRational(c.counts.ao_count(c.n - 1))),
                                  2 * n * n + 3 * n - 1))
            return w;
        c.note("sigma(a)^" + std::to_string(2 * n * n - 5 * n - 2) + " does not match");
        // the OSASM generating function through phi(2n; u)
        const auto ao = c.counts.ao_refined(c.n);
        const BigInt prev = c.counts.ao_count(c.n - 1);
        const CycloLaurent ph = phi(2 * c.n);
        return for_samples(c, [&](Sampler& sm) -> std::optional<std::string> {
            const BigRational uq = sm.rational();
            const Cyclo6 u(uq), t = t_weight(A, u);
            Cyclo6 lhs(0);
            for (std::size_t r = 1; r < ao.size(); ++r) lhs += Cyclo6(BigRational(ao[r])) * power(t, static_cast<long>(r) - 1);
            lhs = divide(lhs, Cyclo6(BigRational(prev)));
            const Cyclo6 rhs = divide(power(sigma(A), 6 * n - 3) * ph.evaluate(u),
                                      power(sigma(Cyclo6(A * u)), 2 * n - 2) * power(sigma(u), 4 * n - 2) *
                                          sigma(Cyclo6(u * u)));
            return expect_equal(lhs, rhs, "u=" + uq.get_str());
        });
    }));
    return out;
}

inline std::vector<CheckSpec> identity_checks() {
    std::vector<CheckSpec> out;
    for (auto id : all_identities) out.push_back(identity_spec(id));
    return out;
}

}  // namespace asmkit
