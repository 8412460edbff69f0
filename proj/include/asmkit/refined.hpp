#pragma once

#include <vector>

#include "poly.hpp"
#include "rational.hpp"

namespace asmkit {

/// A(n)/A(n-1) = (3n-2)! (n-1)! / ((2n-1)! (2n-2)!).
inline BigRational asm_ratio(long n) {
    if (n < 2) throw contract_violation("asm_ratio: n must be at least 2");
    return make_rational(factorial(3 * n - 2) * factorial(n - 1), factorial(2 * n - 1) * factorial(2 * n - 2));
}

/// A(n) from the ratio formula anchored at A(1) = 1 (A(0) = 1).
inline BigInt asm_total(long n) {
    if (n < 0) throw contract_violation("asm_total: n must be nonnegative");
    BigRational a(1);
    for (long m = 2; m <= n; ++m) a *= asm_ratio(m);
    return a.get_num();
}

/// A(n, r)/A(n-1) = (n+r-2)! (2n-r-1)! / ((2n-2)! (r-1)! (n-r)!).
inline BigRational asm_refined_ratio(long n, long r) {
    if (n < 1 || r < 1 || r > n) throw contract_violation("asm_refined_ratio: r out of range");
    return make_rational(factorial(n + r - 2) * factorial(2 * n - r - 1),
                       factorial(2 * n - 2) * factorial(r - 1) * factorial(n - r));
}

inline BigInt asm_refined(long n, long r) {
    const BigRational v = asm_refined_ratio(n, r) * BigRational(asm_total(n - 1));
    if (v.get_den() != 1) throw contract_violation("asm_refined: non-integral value");
    return v.get_num();
}

/// A_V(2n+1) = 2^{-n} prod_{k=1}^n (6k-2)! (2k-1)! / ((4k-1)! (4k-2)!); A_V(1) = 1.
inline BigInt av_total(long n) {
    if (n < 0) throw contract_violation("av_total: n must be nonnegative");
    BigRational v(1);
    for (long k = 1; k <= n; ++k)
        v *= make_rational(factorial(6 * k - 2) * factorial(2 * k - 1), factorial(4 * k - 1) * factorial(4 * k - 2) * 2);
    if (v.get_den() != 1) throw contract_violation("av_total: non-integral value");
    return v.get_num();
}

/// A_V(2n+1)/A_V(2n-1) = C(6n-2, 2n) / (2 C(4n-1, 2n)).
inline BigRational robbins_ratio(long n) {
    if (n < 1) throw contract_violation("robbins_ratio: n must be at least 1");
    return make_rational(binomial(6 * n - 2, 2 * n), 2 * binomial(4 * n - 1, 2 * n));
}

/// A_V(2n+1, r) by the alternating-sum solution of the y = 0 recurrence.
inline BigInt av_refined(long n, long r) {
    if (n < 1 || r < 1 || r > 2 * n + 1) throw contract_violation("av_refined: r out of range");
    BigRational sum(0);
    for (long k = 1; k <= r - 1; ++k) {
        if (k > 2 * n) break;
        const BigRational term = make_rational(factorial(2 * n + k - 2) * factorial(4 * n - k - 1), factorial(k - 1) * factorial(2 * n - k));
        sum += (r + k - 1) % 2 == 0 ? term : BigRational(-term);
    }
    const BigRational v = BigRational(av_total(n - 1)) * sum / BigRational(factorial(4 * n - 2));
    if (v.get_den() != 1) throw contract_violation("av_refined: non-integral value");
    return v.get_num();
}

inline IntPoly one_plus_y() { return IntPoly({BigInt(1), BigInt(1)}); }

namespace detail {

inline IntPoly to_int_poly(const RatPoly& p) {
    std::vector<BigInt> out;
    for (const auto& c : p.coeffs()) {
        if (c.get_den() != 1) throw contract_violation("polynomial has non-integral coefficients");
        out.push_back(c.get_num());
    }
    return IntPoly(std::move(out));
}

}  // namespace detail

inline RatPoly to_rat_poly(const IntPoly& p) {
    std::vector<BigRational> out;
    for (const auto& c : p.coeffs()) out.emplace_back(c);
    return RatPoly(std::move(out));
}

/// A_U(2n; 1, y) = 2^{-n} (1+y)^n prod_{k=1}^n (6k-2)! (2k-1)! / ((4k-1)! (4k-2)!).
inline IntPoly au_first(long n) {
    if (n < 0) throw contract_violation("au_first: n must be nonnegative");
    BigRational c(1);
    for (long k = 1; k <= n; ++k)
        c *= make_rational(factorial(6 * k - 2) * factorial(2 * k - 1), factorial(4 * k - 1) * factorial(4 * k - 2) * 2);
    return detail::to_int_poly(RatPoly(c) * to_rat_poly(one_plus_y().pow(static_cast<unsigned>(n))));
}

/// A_U(2n, r; 1, y) = (1+y)^{n-1} A_V(2n-1)/A(2n-1) [y A(2n, r) + sum_{k<r} (-1)^{r+k-1} (1-y) A(2n, k)].
inline IntPoly au_refined(long n, long r) {
    if (n < 1 || r < 1 || r > 2 * n) throw contract_violation("au_refined: r out of range");
    const RatPoly y = RatPoly::x();
    RatPoly bracket = y * RatPoly(BigRational(asm_refined(2 * n, r)));
    for (long k = 1; k <= r - 1; ++k) {
        RatPoly term = (RatPoly(BigRational(1)) - y) * RatPoly(BigRational(asm_refined(2 * n, k)));
        bracket += (r + k - 1) % 2 == 0 ? term : -term;
    }
    const BigRational c = make_rational(av_total(n - 1), asm_total(2 * n - 1));
    return detail::to_int_poly(RatPoly(c) * to_rat_poly(one_plus_y().pow(static_cast<unsigned>(n - 1))) * bracket);
}

}  // namespace asmkit
