#pragma once

#include <cstddef>
#include <vector>

#include "ice.hpp"
#include "matrix.hpp"

namespace asmkit {

namespace detail {

template <ExactField F>
std::size_t half_size(const std::vector<F>& u) {
    if (u.empty() || u.size() % 2 != 0) throw contract_violation("spectral vector u must have even positive length");
    return u.size() / 2;
}

inline const Cyclo6& zeta() {
    static const Cyclo6 a = Cyclo6::zeta6();
    return a;
}

// prod_{mu<nu} sigma(u_mu / u_nu)
template <ExactField F>
F vandermonde_sigma(const std::vector<F>& u) {
    F d(1);
    for (std::size_t m = 0; m < u.size(); ++m)
        for (std::size_t v = m + 1; v < u.size(); ++v) d *= sigma(divide(u[m], u[v]));
    return d;
}

// prod_{mu<=nu} sigma(u_mu u_nu)
template <ExactField F>
F symmetric_sigma(const std::vector<F>& u) {
    F d(1);
    for (std::size_t m = 0; m < u.size(); ++m)
        for (std::size_t v = m; v < u.size(); ++v) d *= sigma(F(u[m] * u[v]));
    return d;
}

}  // namespace detail

/// Row exponents 3n-2k of P(n; u), k = 1..3n-1 with k not divisible by 3.
inline std::vector<long> p_exponents(int n) {
    std::vector<long> e;
    for (long k = 1; k <= 3L * n - 1; ++k)
        if (k % 3 != 0) e.push_back(3L * n - 2 * k);
    return e;
}

/// Row exponents 6n-2k of P_U(n; u), same k set.
inline std::vector<long> p_u_exponents(int n) {
    std::vector<long> e;
    for (long k = 1; k <= 3L * n - 1; ++k)
        if (k % 3 != 0) e.push_back(6L * n - 2 * k);
    return e;
}

// ---- domain wall boundary ------------------------------------------------

/// M(n; x, y)_ij = 1 / alpha(x_i / y_j).
template <ExactField F>
ExactMatrix<F> build_m(const SpectralAssignment<F>& p) {
    const std::size_t n = p.x.size();
    if (n == 0 || p.y.size() != n) throw contract_violation("build_m: x and y must have the same positive length");
    ExactMatrix<F> m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = inverse(alpha(divide(p.x[i], p.y[j]), p.a));
    return m;
}

/// Izergin-Korepin determinant formula for the domain wall partition function.
template <ExactField F>
F z_ik(const SpectralAssignment<F>& p) {
    const std::size_t n = p.x.size();
    const ExactMatrix<F> m = build_m(p);
    F num = power(sigma(F(p.a * p.a)), static_cast<long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) num *= alpha(divide(p.x[i], p.y[j]), p.a);
    F den(1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) den *= sigma(divide(p.x[j], p.x[i])) * sigma(divide(p.y[i], p.y[j]));
    return divide(num, den) * det(m);
}

/// P(n; u) at a = zeta6; u = (x_1, y_1, ..., x_n, y_n).
inline ExactMatrix<Cyclo6> build_p(const std::vector<Cyclo6>& u) {
    const int n = static_cast<int>(detail::half_size(u));
    const auto ex = p_exponents(n);
    ExactMatrix<Cyclo6> m(u.size());
    for (std::size_t r = 0; r < ex.size(); ++r)
        for (std::size_t c = 0; c < u.size(); ++c) m(r, c) = power(u[c], ex[r]);
    return m;
}

/// Domain wall partition function at a = zeta6 through det P.
inline Cyclo6 z_p(const std::vector<Cyclo6>& u) {
    const long n = static_cast<long>(detail::half_size(u));
    Cyclo6 pre = power(sigma(detail::zeta()), n);
    if ((n * (n - 1) / 2) % 2 != 0) pre = -pre;
    return divide(pre, detail::vandermonde_sigma(u)) * det(build_p(u));
}

// ---- U-turn boundary -----------------------------------------------------

/// M_U(n; x, y)_ij = 1/alpha(x_i / y_j) - 1/alpha(x_i y_j).
template <ExactField F>
ExactMatrix<F> build_m_u(const SpectralAssignment<F>& p) {
    const std::size_t n = p.x.size();
    if (n == 0 || p.y.size() != n) throw contract_violation("build_m_u: x and y must have the same positive length");
    ExactMatrix<F> m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = inverse(alpha(divide(p.x[i], p.y[j]), p.a)) - inverse(alpha(F(p.x[i] * p.y[j]), p.a));
    return m;
}

/// The U-turn normalisation prod_i sigma(b / y_i) sigma(a^2 x_i^2).
template <ExactField F>
F u_turn_divisor(const SpectralAssignment<F>& p) {
    if (!p.b) throw contract_violation("U-turn formulas need the parameter b");
    F d(1);
    for (std::size_t i = 0; i < p.x.size(); ++i)
        d *= sigma(divide(*p.b, p.y[i])) * sigma(F(p.a * p.a * p.x[i] * p.x[i]));
    return d;
}

/// Tsuchiya determinant (in Kuperberg's normalisation) for the U-turn partition function.
template <ExactField F>
F z_u_det(const SpectralAssignment<F>& p) {
    const std::size_t n = p.x.size();
    const ExactMatrix<F> m = build_m_u(p);
    F num = power(sigma(F(p.a * p.a)), static_cast<long>(n)) * u_turn_divisor(p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            num *= alpha(divide(p.x[i], p.y[j]), p.a) * alpha(F(p.x[i] * p.y[j]), p.a);
    F den(1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) den *= sigma(divide(p.x[j], p.x[i])) * sigma(divide(p.y[i], p.y[j]));
        for (std::size_t j = i; j < n; ++j) den *= sigma(inverse(F(p.x[i] * p.x[j]))) * sigma(F(p.y[i] * p.y[j]));
    }
    return divide(num, den) * det(m);
}

/// Modified U-turn partition function Z_U / prod sigma(b/y_i) sigma(a^2 x_i^2).
template <ExactField F>
F z_u_prime(const SpectralAssignment<F>& p) {
    return divide(z_u_det(p), u_turn_divisor(p));
}

/// P_U(n; u): rows sigma(u^e) for e in p_u_exponents(n).
inline ExactMatrix<Cyclo6> build_p_u(const std::vector<Cyclo6>& u) {
    const int n = static_cast<int>(detail::half_size(u));
    const auto ex = p_u_exponents(n);
    ExactMatrix<Cyclo6> m(u.size());
    for (std::size_t r = 0; r < ex.size(); ++r)
        for (std::size_t c = 0; c < u.size(); ++c) m(r, c) = sigma(power(u[c], ex[r]));
    return m;
}

/// sigma(a)^n det P_U / (prod_{mu<nu} sigma(u_mu/u_nu) prod_{mu<=nu} sigma(u_mu u_nu)).
inline Cyclo6 z_u_p(const std::vector<Cyclo6>& u) {
    const long n = static_cast<long>(detail::half_size(u));
    const Cyclo6 den = detail::vandermonde_sigma(u) * detail::symmetric_sigma(u);
    return divide(power(sigma(detail::zeta()), n), den) * det(build_p_u(u));
}

// ---- off-diagonal symmetric boundary -------------------------------------

/// M_O(n; u)_{mu nu} = sigma(u_nu / u_mu) / alpha(u_mu u_nu), zero diagonal.
template <ExactField F>
ExactMatrix<F> build_m_o(const std::vector<F>& u, const F& a) {
    detail::half_size(u);
    ExactMatrix<F> m(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < u.size(); ++j)
            if (i != j) m(i, j) = divide(sigma(divide(u[j], u[i])), alpha(F(u[i] * u[j]), a));
    return m;
}

/// Kuperberg's Pfaffian formula for the OS partition function.
template <ExactField F>
F z_o_pf(const std::vector<F>& u, const F& a) {
    const long n = static_cast<long>(detail::half_size(u));
    F num = power(sigma(F(a * a)), n);
    F den(1);
    for (std::size_t m = 0; m < u.size(); ++m)
        for (std::size_t v = m + 1; v < u.size(); ++v) {
            num *= alpha(F(u[m] * u[v]), a);
            den *= sigma(divide(u[v], u[m]));
        }
    return divide(num, den) * pfaffian(build_m_o(u, a));
}

/// Determinant form of the OS partition function at a = zeta6 (same as z_u_p).
inline Cyclo6 z_o_p(const std::vector<Cyclo6>& u) { return z_u_p(u); }

// ---- state-sum based F functions at a = zeta6 ----------------------------

/// prod_{mu<nu} sigma(u_mu / u_nu) * Z(n; u), Z from the state sum.
inline Cyclo6 f_dwbc(const std::vector<Cyclo6>& u) {
    const auto p = SpectralAssignment<Cyclo6>::from_unified(detail::zeta(), u);
    return detail::vandermonde_sigma(u) * partition_sum(Boundary::dwbc, p);
}

/// Z'_U(n; u) from the U-turn state sum.
inline Cyclo6 z_u_prime_statesum(const std::vector<Cyclo6>& u, const Cyclo6& b) {
    const auto p = SpectralAssignment<Cyclo6>::from_unified(detail::zeta(), u, b);
    return divide(partition_sum(Boundary::uturn, p), u_turn_divisor(p));
}

/// prod_{mu<nu} sigma(u_mu/u_nu) prod_{mu<=nu} sigma(u_mu u_nu) Z'_U(n; u).
inline Cyclo6 f_uturn(const std::vector<Cyclo6>& u, const Cyclo6& b) {
    return detail::vandermonde_sigma(u) * detail::symmetric_sigma(u) * z_u_prime_statesum(u, b);
}

/// Z_O(n; u) from the OS state sum.
inline Cyclo6 z_o_statesum(const std::vector<Cyclo6>& u) {
    SpectralAssignment<Cyclo6> p{detail::zeta(), std::nullopt, {}, {}, u};
    return partition_sum(Boundary::os, p);
}

/// sigma(a)^{-n} prod_{mu<nu} sigma(u_mu/u_nu) prod_{mu<=nu} sigma(u_mu u_nu) Z_O(n; u).
inline Cyclo6 f_os(const std::vector<Cyclo6>& u) {
    const long n = static_cast<long>(detail::half_size(u));
    return power(sigma(detail::zeta()), -n) * detail::vandermonde_sigma(u) * detail::symmetric_sigma(u) *
           z_o_statesum(u);
}

}  // namespace asmkit
