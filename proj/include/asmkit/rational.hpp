#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace asmkit {

using BigInt = mpz_class;
/// Arbitrary-precision rational. gmpxx keeps results canonical
/// (lowest terms, positive denominator) after every arithmetic operation.
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw division_by_zero("rational with zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const BigRational& q) { return sgn(q) == 0; }

inline BigRational inverse(const BigRational& q) {
    if (is_zero(q)) throw division_by_zero("inverse of rational zero");
    return BigRational(1) / q;
}

/// Parses "p", "-p" or "p/q".
inline BigRational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw contract_violation("empty rational literal");
    BigRational q;
    if (q.set_str(s, 10) != 0) throw contract_violation("malformed rational literal: " + s);
    if (q.get_den() == 0) throw division_by_zero("rational with zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }
inline std::string to_string(const BigRational& q) { return q.get_str(); }

inline BigInt factorial(long n) {
    if (n < 0) throw contract_violation("factorial of a negative number");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace asmkit
