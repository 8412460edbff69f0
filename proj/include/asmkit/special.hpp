#pragma once

#include <optional>
#include <vector>

#include "formulas.hpp"
#include "laurent.hpp"

namespace asmkit {

/// (x choose m) = x (x-1) ... (x-m+1) / m! for rational x.
inline BigRational gen_binomial(const BigRational& x, long m) {
    if (m < 0) throw contract_violation("gen_binomial: m must be nonnegative");
    BigRational num(1);
    for (long i = 0; i < m; ++i) num *= x - BigRational(i);
    return num / BigRational(factorial(m));
}

/// phi(n; u) as a Laurent polynomial over Q(a), normalised so that phi(n; a) = 1.
inline CycloLaurent phi(int n) {
    if (n < 1) throw contract_violation("phi: n must be at least 1");
    const BigRational top1 = BigRational(n) - BigRational(4, 3);
    const BigRational top2 = BigRational(n) - BigRational(2, 3);
    CycloLaurent sum;
    for (long k = 0; k < n; ++k) {
        const BigRational c = gen_binomial(top1, n - 1 - k) * gen_binomial(top2, k);
        sum += CycloLaurent::sigma_monomial(Cyclo6(1), 3L * n - 2 - 6 * k) * Cyclo6(c);
    }
    Cyclo6 pre = inverse(sigma(Cyclo6::zeta6()) * Cyclo6(BigRational(binomial(2L * n - 2, n - 1))));
    if ((n - 1) % 2 != 0) pre = -pre;
    return sum * pre;
}

enum class FKind { dwbc, uturn, os };

/// f, f_U or f_O at a single point u, from the brute-force state sum with
/// spectral vector (u, 1, ..., 1). Requires b for the U-turn case.
inline Cyclo6 f_from_statesum(FKind kind, int n, const Cyclo6& u, const std::optional<Cyclo6>& b = std::nullopt) {
    std::vector<Cyclo6> v(static_cast<std::size_t>(2 * n), Cyclo6(1));
    v[0] = u;
    const Cyclo6 su = sigma(u);
    switch (kind) {
        case FKind::dwbc: {
            const auto p = SpectralAssignment<Cyclo6>::from_unified(Cyclo6::zeta6(), v);
            return power(su, 2L * n - 1) * partition_sum(Boundary::dwbc, p);
        }
        case FKind::uturn:
            if (!b) throw contract_violation("f_from_statesum: U-turn case needs b");
            return power(su, 4L * n - 2) * sigma(Cyclo6(u * u)) * z_u_prime_statesum(v, *b);
        case FKind::os: return power(su, 4L * n - 2) * sigma(Cyclo6(u * u)) * z_o_statesum(v);
    }
    return Cyclo6(0);
}

/// Laurent polynomial sum_{j=0}^{d} c_j u^{2j-d} through the given points
/// (exact Newton interpolation in w = u^2). Nodes must have distinct squares.
inline CycloLaurent interpolate_even_laurent(long d, const std::vector<BigRational>& nodes,
                                             const std::vector<Cyclo6>& values) {
    const std::size_t m = static_cast<std::size_t>(d + 1);
    if (nodes.size() < m || values.size() < m) throw contract_violation("interpolation needs d+1 points");
    std::vector<BigRational> w(m);
    std::vector<Cyclo6> dd(m);
    for (std::size_t i = 0; i < m; ++i) {
        w[i] = nodes[i] * nodes[i];
        dd[i] = values[i] * Cyclo6(power(nodes[i], d));
    }
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = m - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) * Cyclo6(inverse(BigRational(w[i] - w[i - level])));
    // expand the Newton form into monomials in w
    std::vector<Cyclo6> poly(1, dd[m - 1]);
    for (std::size_t i = m - 1; i-- > 0;) {
        std::vector<Cyclo6> next(poly.size() + 1, Cyclo6(0));
        for (std::size_t j = 0; j < poly.size(); ++j) {
            next[j + 1] += poly[j];
            next[j] -= poly[j] * Cyclo6(w[i]);
        }
        next[0] += dd[i];
        poly = std::move(next);
    }
    CycloLaurent out;
    for (std::size_t j = 0; j < poly.size(); ++j) out.add_term(2 * static_cast<long>(j) - d, poly[j]);
    return out;
}

/// Half-degree d of the f function: u^d f is a polynomial of degree d in u^2.
inline long f_half_degree(FKind kind, int n) { return kind == FKind::dwbc ? 3L * n - 2 : 6L * n - 2; }

/// Reconstructs f_kind(n; u) as a Laurent polynomial from state-sum values
/// at u = 2, 3, ...; `extra` further nodes are evaluated and must agree.
/// Returns nullopt when an extra node disagrees with the interpolant.
inline std::optional<CycloLaurent> interpolate_f(FKind kind, int n, const std::optional<Cyclo6>& b = std::nullopt,
                                                 int extra = 2) {
    const long d = f_half_degree(kind, n);
    std::vector<BigRational> nodes;
    std::vector<Cyclo6> values;
    for (long k = 0; k < d + 1 + extra; ++k) {
        nodes.emplace_back(k + 2);
        values.push_back(f_from_statesum(kind, n, Cyclo6(nodes.back()), b));
    }
    CycloLaurent f = interpolate_even_laurent(d, nodes, values);
    for (std::size_t i = static_cast<std::size_t>(d + 1); i < nodes.size(); ++i)
        if (f.evaluate(Cyclo6(nodes[i])) != values[i]) return std::nullopt;
    return f;
}

}  // namespace asmkit
