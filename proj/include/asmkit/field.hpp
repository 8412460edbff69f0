#pragma once

#include <concepts>

#include "cyclo6.hpp"
#include "rational.hpp"

namespace asmkit {

/// The two exact fields the library evaluates in.
template <class F>
concept ExactField = std::same_as<F, BigRational> || std::same_as<F, Cyclo6>;

template <ExactField F>
F power(const F& x, long e) {
    if (e < 0) return power(inverse(x), -e);
    F result(1);
    F base = x;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

/// x / y; throws division_by_zero when y == 0 (plain mpq division would trap).
template <ExactField F, class G>
F divide(const F& x, const G& y) {
    return x * inverse(F(y));
}

/// sigma(x) = x - 1/x.
template <ExactField F>
F sigma(const F& x) {
    return x - inverse(x);
}

/// alpha(x) = sigma(a x) sigma(a / x) for the vertex parameter a.
template <ExactField F>
F alpha(const F& x, const F& a) {
    return sigma(F(a * x)) * sigma(F(a * inverse(x)));
}

/// The ζ6 closed form alpha(x) = -sigma(x^3) / sigma(x).
inline Cyclo6 alpha_zeta6(const Cyclo6& x) {
    return -sigma(power(x, 3)) / sigma(x);
}

}  // namespace asmkit
