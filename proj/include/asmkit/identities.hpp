#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "checks.hpp"
#include "formulas.hpp"
#include "refined.hpp"
#include "special.hpp"

namespace asmkit {

enum class IdentityId {
    EQ1, EQ6, EQ9, EQ10, EQ11, EQ12, EQ13, EQ14, EQ15, EQ16, EQ17, EQ18, EQ20, EQ21, EQ22, EQ23,
    RATIO_FAMOUS, RATIO_ROBBINS, REFINED_RATIO, AV_REFINED, AU_REFINED, KUTIN_YUEN
};

inline constexpr std::array<IdentityId, 22> all_identities = {
    IdentityId::EQ1,          IdentityId::EQ6,           IdentityId::EQ9,           IdentityId::EQ10,
    IdentityId::EQ11,         IdentityId::EQ12,          IdentityId::EQ13,          IdentityId::EQ14,
    IdentityId::EQ15,         IdentityId::EQ16,          IdentityId::EQ17,          IdentityId::EQ18,
    IdentityId::EQ20,         IdentityId::EQ21,          IdentityId::EQ22,          IdentityId::EQ23,
    IdentityId::RATIO_FAMOUS, IdentityId::RATIO_ROBBINS, IdentityId::REFINED_RATIO, IdentityId::AV_REFINED,
    IdentityId::AU_REFINED,   IdentityId::KUTIN_YUEN};

inline std::string_view identity_name(IdentityId id) {
    static constexpr std::array<std::string_view, 22> names = {
        "EQ1",  "EQ6",  "EQ9",  "EQ10", "EQ11", "EQ12", "EQ13", "EQ14", "EQ15", "EQ16",          "EQ17",
        "EQ18", "EQ20", "EQ21", "EQ22", "EQ23", "RATIO_FAMOUS", "RATIO_ROBBINS", "REFINED_RATIO", "AV_REFINED",
        "AU_REFINED", "KUTIN_YUEN"};
    return names[static_cast<std::size_t>(id)];
}

inline std::optional<IdentityId> parse_identity(std::string_view s) {
    for (auto id : all_identities)
        if (identity_name(id) == s) return id;
    return std::nullopt;
}

namespace detail {

inline BigRational big(std::uint64_t c) { return BigRational(BigInt(static_cast<unsigned long>(c))); }

/// sum over members of count * x^(k/k_div) * y^l * t^(r-1-r_shift).
template <ExactField F>
F census_weight(const Census& c, const F& x, const F& y, const F& t, int r_shift, int k_div) {
    F sum(0);
    for (const auto& [key, cnt] : c.entries()) {
        if (key[2] % k_div != 0) throw contract_violation("census_weight: k not divisible");
        sum += F(big(cnt)) * power(x, key[2] / k_div) * power(y, key[3]) * power(t, key[0] - 1 - r_shift);
    }
    return sum;
}

template <ExactField F>
F x_weight(const F& a) {
    return power(divide(sigma(F(a * a)), sigma(a)), 2);
}

template <ExactField F>
F t_weight(const F& a, const F& u) {
    return divide(sigma(divide(a, u)), sigma(F(a * u)));
}

template <ExactField F>
F y_weight(const F& a, const F& b) {
    return divide(sigma(divide(b, a)), sigma(F(a * b)));
}

template <ExactField F>
std::vector<F> u_first(int len, const F& u) {
    std::vector<F> v(static_cast<std::size_t>(len), F(1));
    v[0] = u;
    return v;
}

inline Cyclo6 cy(const BigRational& q) { return Cyclo6(q); }
inline Cyclo6 cy(const BigInt& z) { return Cyclo6(BigRational(z)); }

template <ExactField F>
std::optional<std::string> eq1_at(const Census& c, int n, const F& a) {
    const std::vector<F> ones(static_cast<std::size_t>(n), F(1));
    const SpectralAssignment<F> p{a, std::nullopt, ones, ones, {}};
    const F lhs = census_weight(c, x_weight(a), F(1), F(1), 0, 1);
    const F rhs = divide(partition_sum(Boundary::dwbc, p),
                         power(sigma(a), static_cast<long>(n) * n - n) * power(sigma(F(a * a)), n));
    return expect_equal(lhs, rhs);
}

template <ExactField F>
std::optional<std::string> eq6_at(const Census& c, int n, const F& a, const F& u) {
    const std::vector<F> ones(static_cast<std::size_t>(n), F(1));
    const SpectralAssignment<F> p{a, std::nullopt, ones, u_first(n, u), {}};
    const F lhs = census_weight(c, x_weight(a), F(1), t_weight(a, u), 0, 1);
    const F den = power(sigma(a), static_cast<long>(n) * n - 2L * n + 1) * power(sigma(F(a * a)), n) *
                  power(sigma(F(a * u)), n - 1);
    return expect_equal(lhs, divide(partition_sum(Boundary::dwbc, p), den));
}

template <ExactField F>
std::optional<std::string> eq9_at(const Census& c, int n, const F& a, const F& b, const F& u) {
    const std::vector<F> ones(static_cast<std::size_t>(n), F(1));
    const SpectralAssignment<F> p{a, b, ones, u_first(n, u), {}};
    const F lhs = census_weight(c, x_weight(a), y_weight(a, b), t_weight(a, u), 0, 1);
    const F den = power(sigma(a), 2L * n * n - 3L * n + 1) * power(sigma(F(a * a)), n) *
                  power(sigma(F(a * u)), 2L * n - 1) * power(sigma(F(a * b)), n);
    return expect_equal(lhs, divide(partition_sum(Boundary::uturn, p), den));
}

/// Returns (derived-normalisation witness, whether the alternative exponent matched too).
template <ExactField F>
std::pair<std::optional<std::string>, bool> eq20_at(const Census& c, int n, const F& a, const F& u) {
    const SpectralAssignment<F> p{a, std::nullopt, {}, {}, u_first(2 * n, inverse(u))};
    const F z = partition_sum(Boundary::os, p);
    const F lhs = census_weight(c, x_weight(a), F(1), t_weight(a, u), 1, 2);
    const F common = power(sigma(F(a * a)), n) * power(sigma(F(a * u)), 2L * n - 2);
    const F rhs = divide(z, power(sigma(a), 2L * n * n - 4L * n + 2) * common);
    const F alt = divide(z, power(sigma(a), 2L * n * n - 2L * n + 1) * common);
    return {expect_equal(lhs, rhs), lhs == alt};
}

}  // namespace detail

/// The check procedure and default n-cap of each identity.
inline CheckSpec identity_spec(IdentityId id) {
    using namespace detail;
    const Cyclo6 A = Cyclo6::zeta6();
    CheckSpec s;
    s.tag = std::string(identity_name(id));
    switch (id) {
        case IdentityId::EQ1:
            // weighted ASM count from the DWBC partition function at x = y = 1
            s.cap = 4;
            s.body = [A](CaseContext& c) -> std::optional<std::string> {
                const Census& cen = c.counts.census(AsmClass::asm_, c.n);
                if (auto w = eq1_at(cen, c.n, A)) return "a=zeta6 " + *w;
                return for_samples(c, [&](Sampler& sm) -> std::optional<std::string> {
                    const BigRational a = sm.rational();
                    if (auto w = eq1_at(cen, c.n, a)) return "a=" + a.get_str() + " " + *w;
                    return std::nullopt;
                });
            };
            break;
        case IdentityId::EQ6:
            // refined ASM generating function from Z(n; 1, (u, 1, ..., 1))
            s.cap = 4;
            s.body = [A](CaseContext& c) {
                const Census& cen = c.counts.census(AsmClass::asm_, c.n);
                return for_samples(c, [&](Sampler& sm) -> std::optional<std::string> {
                    const BigRational u = sm.rational(), a = sm.rational();
                    if (auto w = eq6_at(cen, c.n, A, cy(u))) return "a=zeta6 u=" + u.get_str() + " " + *w;
                    if (auto w = eq6_at(cen, c.n, a, u)) return "a=" + a.get_str() + " u=" + u.get_str() + " " + *w;
                    return std::nullopt;
                });
            };
            break;
        case IdentityId::EQ9:
            // refined UASM generating function from the U-turn partition function
            s.cap = 3;
            s.body = [A](CaseContext& c) {
                const Census& cen = c.counts.census(AsmClass::uasm, c.n);
                return for_samples(c, [&](Sampler& sm) -> std::optional<std::string> {
                    const BigRational u = sm.rational(), b = sm.rational(), a = sm.rational();
                    const std::string at = " u=" + u.get_str() + " b=" + b.get_str();
                    if (auto w = eq9_at(cen, c.n, A, cy(b), cy(u))) return "a=zeta6" + at + " " + *w;
                    if (auto w = eq9_at(cen, c.n, a, b, u)) return "a=" + a.get_str() + at + " " + *w;
                    return std::nullopt;
                });
            };
            break;
        case IdentityId::EQ10:
            // UASM generating function through phi(2n; u) at a = zeta6
            s.cap = 3;
            s.body = [A](CaseContext& c) {
                const auto au = c.counts.au_refined(c.n);
                const IntPoly prev = c.counts.au_total(c.n - 1);
                const CycloLaurent ph = phi(2 * c.n);
                const long n = c.n;
                return for_samples(c, [&](Sampler& sm) -> std::optional<std::string> {
                    const BigRational uq = sm.rational(), bq = sm.rational();
                    const Cyclo6 u = cy(uq), b = cy(bq);
                    const Cyclo6 y = y_weight(A, b), t = t_weight(A, u);
                    Cyclo6 lhs(0);
                    for (std::size_t r = 0; r < au.size(); ++r)
                        lhs += au[r].evaluate(y) * power(t, static_cast<long>(r));
                    lhs = divide(lhs, prev.evaluate(y));
                    const Cyclo6 rhs = divide(sigma(divide(b, u)) * power(sigma(A), 6 * n - 2) * ph.evaluate(u),
                                              sigma(Cyclo6(b * A)) * power(sigma(Cyclo6(A * u)), 2 * n - 1) *
                                                  power(sigma(u), 4 * n - 2) * sigma(Cyclo6(u * u)));
                    return expect_equal(lhs, rhs, "u=" + uq.get_str() + " b=" + bq.get_str());
                });
            };
            break;
        case IdentityId::EQ11:
            // refined ASM generating function through phi(n; u) at a = zeta6
            s.cap = 4;
            s.body = [A](CaseContext& c) {
                const auto ar = c.counts.asm_refined(c.n);
                const BigInt prev = c.counts.asm_count(c.n - 1);
                const CycloLaurent ph = phi(c.n);
                const long n = c.n;
                return for_samples(c, [&](Sampler& sm) -> std::optional<std::string> {
                    const BigRational uq = sm.rational();
                    const Cyclo6 u = cy(uq), t = t_weight(A, u);
                    Cyclo6 lhs(0);
                    for (std::size_t r = 0; r < ar.size(); ++r) lhs += cy(ar[r]) * power(t, static_cast<long>(r));
                    lhs = divide(lhs, cy(prev));
                    const Cyclo6 rhs = divide(power(sigma(A), 3 * n - 2) * ph.evaluate(u),
                                              power(sigma(Cyclo6(A * u)), n - 1) * power(sigma(u), 2 * n - 1));
                    return expect_equal(lhs, rhs, "u=" + uq.get_str());
                });
            };
            break;
        case IdentityId::EQ12:
            // the t = 1 case: 2 A(2n-1) A_U(2n; 1, y) = (1 + y) A(2n) A_U(2n-2; 1, y)
            s.cap = 3;
            s.body = [](CaseContext& c) -> std::optional<std::string> {
                const int n = c.n;
                const IntPoly au = c.counts.au_total(n), prev = c.counts.au_total(n - 1);
                const BigInt a_odd = c.counts.asm_count(2 * n - 1), a_even = c.counts.asm_count(2 * n);
                const IntPoly lhs = IntPoly(BigInt(2) * a_odd) * au;
                const IntPoly rhs = one_plus_y() * IntPoly(a_even) * prev;
                if (auto w = expect_equal(lhs, rhs)) return w;
                const BigRational left = make_rational(au.evaluate(BigInt(1)), prev.evaluate(BigInt(1)));
                const BigRational right = make_rational(a_even, a_odd);
                if (left != right) return "y=1: " + left.get_str() + " != " + right.get_str();
                c.note("at y=1 both sides equal " + left.get_str());
                return std::nullopt;
            };
            break;
        case IdentityId::EQ13:
            s.cap = 4;
            s.body = [](CaseContext& c) { return expect_equal(au_first(c.n), c.counts.au_total(c.n)); };
            break;
        case IdentityId::EQ14:
            s.cap = 4;
            s.body = [](CaseContext& c) { return expect_equal(av_total(c.n), c.counts.av_count(c.n)); };
            break;
        case IdentityId::EQ15:
            // A_U(2n; x, y) = (1 + y)^n A_V(2n+1; x); a VSASM with k minus ones has weight x^((k-n)/2)
            s.cap = 3;
            s.body = [](CaseContext& c) -> std::optional<std::string> {
                const int n = c.n;
                std::map<int, IntPoly> lhs_terms, rhs_terms;
                for (const auto& [key, cnt] : c.counts.census(AsmClass::uasm, n).entries()) {
                    std::vector<BigInt> mono(static_cast<std::size_t>(key[3] + 1), BigInt(0));
                    mono.back() = BigInt(static_cast<unsigned long>(cnt));
                    lhs_terms[key[2]] += IntPoly(std::move(mono));
                }
                const IntPoly scale = one_plus_y().pow(static_cast<unsigned>(n));
                for (const auto& [key, cnt] : c.counts.census(AsmClass::vsasm, n).entries()) {
                    if (key[2] < n || (key[2] - n) % 2 != 0)
                        return "VSASM with " + std::to_string(key[2]) + " minus ones";
                    rhs_terms[(key[2] - n) / 2] += IntPoly(BigInt(static_cast<unsigned long>(cnt))) * scale;
                }
                auto to2 = [](const std::map<int, IntPoly>& m) {
                    std::vector<IntPoly> v;
                    for (const auto& [k, p] : m) {
                        if (static_cast<std::size_t>(k) >= v.size()) v.resize(static_cast<std::size_t>(k) + 1);
                        v[static_cast<std::size_t>(k)] = p;
                    }
                    return IntPoly2(std::move(v));
                };
                return expect_equal(to2(lhs_terms), to2(rhs_terms), "coefficients of x^k as polynomials in y");
            };
            break;
        case IdentityId::EQ16:
            s.cap = 4;
            s.body = [](CaseContext& c) {
                return expect_equal(c.counts.au_refined(c.n).front(), IntPoly::x() * c.counts.au_total(c.n - 1));
            };
            break;
        case IdentityId::EQ17:
            s.cap = 4;
            s.body = [](CaseContext& c) {
                return expect_equal(c.counts.au_total(c.n),
                                    one_plus_y().pow(static_cast<unsigned>(c.n)) * IntPoly(c.counts.av_count(c.n)));
            };
            break;
        case IdentityId::EQ18:
            s.cap = 3;
            s.body = [](CaseContext& c) -> std::optional<std::string> {
                const int n = c.n;
                const auto au = c.counts.au_refined(n);
                const auto ar = c.counts.asm_refined(2 * n);
                const IntPoly prev = c.counts.au_total(n - 1);
                const BigInt a_odd = c.counts.asm_count(2 * n - 1);
                for (int r = 2; r <= 2 * n; ++r) {
                    const auto i = static_cast<std::size_t>(r - 1);
                    const IntPoly lhs = IntPoly(a_odd) * (au[i - 1] + au[i]);
                    const IntPoly rhs = prev * (IntPoly(ar[i - 1]) + IntPoly::x() * IntPoly(ar[i]));
                    if (auto w = expect_equal(lhs, rhs, "r=" + std::to_string(r))) return w;
                }
                return std::nullopt;
            };
            break;
        case IdentityId::EQ20:
            // refined OSASM generating function from Z_O(n; (1/u, 1, ..., 1))
            s.cap = 3;
            s.body = [A](CaseContext& c) {
                const Census& cen = c.counts.census(AsmClass::osasm, c.n);
                bool alt_ever = false;
                auto w = for_samples(c, [&](Sampler& sm) -> std::optional<std::string> {
                    const BigRational u = sm.rational(), a = sm.rational();
                    auto [wz, alt_z] = eq20_at(cen, c.n, A, cy(u));
                    if (wz) return "a=zeta6 u=" + u.get_str() + " " + *wz;
                    auto [wq, alt_q] = eq20_at(cen, c.n, a, u);
                    if (wq) return "a=" + a.get_str() + " u=" + u.get_str() + " " + *wq;
                    alt_ever = alt_ever || alt_z || alt_q;
                    return std::nullopt;
                });
                const long n = c.n;
                c.note("denominator uses sigma(a)^" + std::to_string(2 * n * n - 4 * n + 2) + "; sigma(a)^" +
                       std::to_string(2 * n * n - 2 * n + 1) + (alt_ever ? " also matched" : " does not match"));
                return w;
            };
            break;
        case IdentityId::EQ21:
            s.cap = 3;
            s.body = [](CaseContext& c) {
                const int n = c.n;
                const IntPoly2 t = IntPoly2::x();
                const IntPoly2 lhs = IntPoly2(IntPoly(c.counts.asm_count(2 * n - 1))) * (t + IntPoly2(1)) *
                                     t_poly(c.counts.av_refined(n));
                const IntPoly2 rhs =
                    IntPoly2(IntPoly(c.counts.av_count(n - 1))) * t * t_poly(c.counts.asm_refined(2 * n));
                return expect_equal(lhs, rhs);
            };
            break;
        case IdentityId::EQ22:
            s.cap = 4;
            s.body = [](CaseContext& c) -> std::optional<std::string> {
                const auto av = c.counts.av_refined(c.n);
                const auto au = c.counts.au_refined(c.n);
                std::vector<BigInt> at0;
                for (const auto& p : au) at0.push_back(p.coefficient(0));
                at0.emplace_back(0);  // no VSASM has its first-column 1 in the last row
                return expect_equal(av, at0);
            };
            break;
        case IdentityId::EQ23:
            // A(2n-1) (t+1) sum A_U(2n,r;1,y) t^(r-1) = A_U(2n-2;1,y) (t+y) sum A(2n,r) t^(r-1)
            s.cap = 3;
            s.body = [](CaseContext& c) {
                const int n = c.n;
                const IntPoly2 t = IntPoly2::x();
                const IntPoly2 t_plus_y({IntPoly::x(), IntPoly(1)});
                const IntPoly2 lhs = IntPoly2(IntPoly(c.counts.asm_count(2 * n - 1))) * (t + IntPoly2(1)) *
                                     t_poly(c.counts.au_refined(n));
                const IntPoly2 rhs =
                    IntPoly2(c.counts.au_total(n - 1)) * t_plus_y * t_poly(c.counts.asm_refined(2 * n));
                return expect_equal(lhs, rhs);
            };
            break;
        case IdentityId::RATIO_FAMOUS:
            s.n_min = 2;
            s.cap = 7;
            s.body = [](CaseContext& c) {
                return expect_equal(make_rational(c.counts.asm_count(c.n), c.counts.asm_count(c.n - 1)),
                                    asm_ratio(c.n));
            };
            break;
        case IdentityId::RATIO_ROBBINS:
            s.cap = 4;
            s.body = [](CaseContext& c) {
                return expect_equal(make_rational(c.counts.av_count(c.n), c.counts.av_count(c.n - 1)),
                                    robbins_ratio(c.n));
            };
            break;
        case IdentityId::REFINED_RATIO:
            s.cap = 7;
            s.body = [](CaseContext& c) {
                const BigRational prev(c.counts.asm_count(c.n - 1));
                std::vector<BigRational> formula, counted;
                for (int r = 1; r <= c.n; ++r) formula.push_back(asm_refined_ratio(c.n, r) * prev);
                for (const auto& v : c.counts.asm_refined(c.n)) counted.emplace_back(v);
                return expect_equal(formula, counted);
            };
            break;
        case IdentityId::AV_REFINED:
            s.cap = 4;
            s.body = [](CaseContext& c) {
                std::vector<BigInt> formula;
                for (int r = 1; r <= 2 * c.n + 1; ++r) formula.push_back(av_refined(c.n, r));
                return expect_equal(formula, c.counts.av_refined(c.n));
            };
            break;
        case IdentityId::AU_REFINED:
            s.cap = 4;
            s.body = [](CaseContext& c) {
                std::vector<IntPoly> formula;
                for (int r = 1; r <= 2 * c.n; ++r) formula.push_back(au_refined(c.n, r));
                return expect_equal(formula, c.counts.au_refined(c.n));
            };
            break;
        case IdentityId::KUTIN_YUEN:
            // A_O(2n, r) = A_V(2n+1, r), plus the generating-function relation between OSASMs and ASMs
            s.cap = 4;
            s.body = [](CaseContext& c) -> std::optional<std::string> {
                const int n = c.n;
                const auto ao = c.counts.ao_refined(n);
                auto av = c.counts.av_refined(n);
                if (av.back() != 0) return "A_V(2n+1, 2n+1) is nonzero";
                av.pop_back();
                if (auto w = expect_equal(ao, av, "A_O(2n,r) vs A_V(2n+1,r)")) return w;
                const bool counted = 2 * n <= default_cap(AsmClass::asm_);
                std::vector<BigInt> even;
                if (counted) {
                    even = c.counts.asm_refined(2 * n);
                } else {
                    for (int r = 1; r <= 2 * n; ++r) even.push_back(asm_refined(2 * n, r));
                    c.note("A(2n, r) taken from the refined ratio formula");
                }
                const IntPoly2 t = IntPoly2::x();
                const IntPoly2 lhs = IntPoly2(IntPoly(c.counts.asm_count(2 * n - 1))) * (t + IntPoly2(1)) * t_poly(ao);
                const IntPoly2 rhs = IntPoly2(IntPoly(c.counts.ao_count(n - 1))) * t * t_poly(even);
                if (auto w = expect_equal(lhs, rhs, "OSASM vs ASM generating functions")) return w;
                c.note("A_O(2n, r) = " + show(ao));
                return std::nullopt;
            };
            break;
    }
    return s;
}

/// Runs one identity for n from its lower bound up to min(n_max, cap);
/// n_max <= 0 selects the cap.
inline IdentityReport check_identity(IdentityId id, int n_max, int samples, std::uint64_t seed,
                                     CountCache& counts) {
    return run_check(identity_spec(id), n_max, counts, seed, samples);
}

inline IdentityReport check_identity(IdentityId id, int n_max, int samples, std::uint64_t seed) {
    CountCache counts;
    return check_identity(id, n_max, samples, seed, counts);
}

}  // namespace asmkit
