#pragma once

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace asmkit {

/// Dense univariate polynomial, coefficients lowest degree first, no trailing
/// zeros. The coefficient ring may itself be a Poly, which gives the
/// two-variable polynomials used by the (t, y) generating-function identities.
template <class R>
class Poly {
public:
    Poly() = default;
    Poly(long c) : Poly(R(c)) {}  // NOLINT(google-explicit-constructor)
    Poly(R c) {                    // NOLINT(google-explicit-constructor)
        coeffs_.push_back(std::move(c));
        trim();
    }
    Poly(std::initializer_list<R> cs) : coeffs_(cs) { trim(); }
    explicit Poly(std::vector<R> cs) : coeffs_(std::move(cs)) { trim(); }

    /// The variable itself.
    static Poly x() { return Poly({R(0), R(1)}); }

    const std::vector<R>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    R coefficient(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : R(0); }

    Poly& operator+=(const Poly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Poly operator+(Poly l, const Poly& r) { return l += r; }
    friend Poly operator-(Poly l, const Poly& r) { return l -= r; }
    friend Poly operator*(const Poly& l, const Poly& r) {
        if (l.is_zero() || r.is_zero()) return Poly();
        std::vector<R> out(l.coeffs_.size() + r.coeffs_.size() - 1, R(0));
        for (std::size_t i = 0; i < l.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < r.coeffs_.size(); ++j) out[i + j] += l.coeffs_[i] * r.coeffs_[j];
        return Poly(std::move(out));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& l, const Poly& r) { return l.coeffs_ == r.coeffs_; }
    friend bool operator!=(const Poly& l, const Poly& r) { return !(l == r); }

    Poly pow(unsigned e) const {
        Poly r(R(1));
        for (unsigned i = 0; i < e; ++i) r *= *this;
        return r;
    }

    /// Horner evaluation in any ring T that R converts into.
    template <class T>
    T evaluate(const T& at) const {
        T acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            if constexpr (std::is_same_v<R, BigInt> && !std::is_same_v<T, BigInt>)
                acc = acc * at + T(BigRational(*it));
            else
                acc = acc * at + T(*it);
        }
        return acc;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == R(0)) coeffs_.pop_back();
    }

    std::vector<R> coeffs_;
};

using IntPoly = Poly<BigInt>;
using RatPoly = Poly<BigRational>;
/// Polynomial in t whose coefficients are polynomials in y.
using IntPoly2 = Poly<IntPoly>;

inline std::string to_string(const IntPoly& p) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) os << (i ? "," : "") << p.coeffs()[i].get_str();
    os << "]";
    return os.str();
}

}  // namespace asmkit
