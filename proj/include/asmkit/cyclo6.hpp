#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "rational.hpp"

namespace asmkit {

/// Element p + q*a of Q(a), a = exp(i*pi/3), stored in the basis {1, a}.
/// Products are reduced with the minimal polynomial a^2 = a - 1.
class Cyclo6 {
public:
    Cyclo6() = default;
    Cyclo6(long v) : p_(v) {}  // NOLINT(google-explicit-constructor)
    Cyclo6(BigRational p) : p_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
    Cyclo6(BigRational p, BigRational q) : p_(std::move(p)), q_(std::move(q)) {}

    /// The primitive sixth root of unity a.
    static Cyclo6 zeta6() { return Cyclo6(0, 1); }

    const BigRational& p() const { return p_; }
    const BigRational& q() const { return q_; }

    bool is_zero() const { return sgn(p_) == 0 && sgn(q_) == 0; }
    bool is_rational() const { return sgn(q_) == 0; }

    /// Complex conjugation: a -> abar = 1 - a.
    Cyclo6 conj() const { return Cyclo6(p_ + q_, -q_); }

    /// Field norm z * conj(z) = p^2 + p q + q^2.
    BigRational norm() const { return p_ * p_ + p_ * q_ + q_ * q_; }

    Cyclo6 inverse() const {
        if (is_zero()) throw division_by_zero("inverse of zero in Q(a)");
        const BigRational n = norm();
        return Cyclo6((p_ + q_) / n, -q_ / n);
    }

    Cyclo6 operator-() const { return Cyclo6(-p_, -q_); }

    Cyclo6& operator+=(const Cyclo6& o) {
        p_ += o.p_;
        q_ += o.q_;
        return *this;
    }
    Cyclo6& operator-=(const Cyclo6& o) {
        p_ -= o.p_;
        q_ -= o.q_;
        return *this;
    }
    Cyclo6& operator*=(const Cyclo6& o) {
        // (p1 + q1 a)(p2 + q2 a) = p1 p2 - q1 q2 + (p1 q2 + q1 p2 + q1 q2) a
        BigRational qq = q_ * o.q_;
        BigRational np = p_ * o.p_ - qq;
        BigRational nq = p_ * o.q_ + q_ * o.p_ + qq;
        p_ = std::move(np);
        q_ = std::move(nq);
        return *this;
    }
    Cyclo6& operator/=(const Cyclo6& o) { return *this *= o.inverse(); }

    friend Cyclo6 operator+(Cyclo6 l, const Cyclo6& r) { return l += r; }
    friend Cyclo6 operator-(Cyclo6 l, const Cyclo6& r) { return l -= r; }
    friend Cyclo6 operator*(Cyclo6 l, const Cyclo6& r) { return l *= r; }
    friend Cyclo6 operator/(Cyclo6 l, const Cyclo6& r) { return l /= r; }

    friend bool operator==(const Cyclo6& l, const Cyclo6& r) { return l.p_ == r.p_ && l.q_ == r.q_; }
    friend bool operator!=(const Cyclo6& l, const Cyclo6& r) { return !(l == r); }

    std::string str() const {
        if (sgn(q_) == 0) return p_.get_str();
        std::string s = sgn(p_) == 0 ? std::string() : p_.get_str();
        if (!s.empty()) s += sgn(q_) > 0 ? "+" : "";
        if (q_ == 1) return s + "a";
        if (q_ == -1) return s + "-a";
        return s + q_.get_str() + "*a";
    }

    friend std::ostream& operator<<(std::ostream& os, const Cyclo6& z) { return os << z.str(); }

private:
    BigRational p_{0};
    BigRational q_{0};
};

inline bool is_zero(const Cyclo6& z) { return z.is_zero(); }
inline Cyclo6 inverse(const Cyclo6& z) { return z.inverse(); }
inline Cyclo6 conj(const Cyclo6& z) { return z.conj(); }
inline std::string to_string(const Cyclo6& z) { return z.str(); }

}  // namespace asmkit
