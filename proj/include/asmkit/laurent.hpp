#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"

namespace asmkit {

/// One-variable Laurent polynomial sum_k c_k u^k with exact coefficients.
/// Zero coefficients are never stored, so equality is structural.
template <ExactField C>
class LaurentPoly {
public:
    using Terms = std::map<long, C>;

    LaurentPoly() = default;
    explicit LaurentPoly(const C& constant) { add_term(0, constant); }

    static LaurentPoly monomial(const C& coeff, long exponent) {
        LaurentPoly p;
        p.add_term(exponent, coeff);
        return p;
    }

    /// sigma(c u^k) = c u^k - c^{-1} u^{-k}; c must be a unit.
    static LaurentPoly sigma_monomial(const C& coeff, long exponent) {
        LaurentPoly p = monomial(coeff, exponent);
        p.add_term(-exponent, -inverse(coeff));
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    long max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    C coefficient(long exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(long exponent, const C& coeff) {
        if (asmkit::is_zero(coeff)) return;
        auto [it, inserted] = terms_.try_emplace(exponent, coeff);
        if (!inserted) {
            it->second += coeff;
            if (asmkit::is_zero(it->second)) terms_.erase(it);
        }
    }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    LaurentPoly& operator*=(const C& s) {
        if (asmkit::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly l, const LaurentPoly& r) { return l += r; }
    friend LaurentPoly operator-(LaurentPoly l, const LaurentPoly& r) { return l -= r; }
    friend LaurentPoly operator*(LaurentPoly l, const C& s) { return l *= s; }
    friend LaurentPoly operator*(const C& s, LaurentPoly l) { return l *= s; }

    friend LaurentPoly operator*(const LaurentPoly& l, const LaurentPoly& r) {
        LaurentPoly out;
        for (const auto& [i, a] : l.terms_)
            for (const auto& [j, b] : r.terms_) out.add_term(i + j, a * b);
        return out;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& l, const LaurentPoly& r) { return l.terms_ == r.terms_; }
    friend bool operator!=(const LaurentPoly& l, const LaurentPoly& r) { return !(l == r); }

    LaurentPoly pow(unsigned e) const {
        LaurentPoly r(C(1));
        for (unsigned i = 0; i < e; ++i) r *= *this;
        return r;
    }

    C evaluate(const C& u) const {
        C acc(0);
        for (const auto& [k, c] : terms_) acc += c * power(u, k);
        return acc;
    }

    /// Term c_k u^k becomes c_k * scale^k * u^(direction*k); direction is +1 or -1.
    LaurentPoly substitute(const C& scale, int direction) const {
        if (direction != 1 && direction != -1) throw contract_violation("substitute: direction must be +1 or -1");
        LaurentPoly r;
        for (const auto& [k, c] : terms_) r.add_term(direction * k, c * power(scale, k));
        return r;
    }

    /// Exact division by sigma(u)^k = u^{-k} (u^2 - 1)^k; nullopt when the
    /// remainder is nonzero.
    std::optional<LaurentPoly> divide_by_sigma_u(unsigned k) const { return divide_by_sigma_power(1, k); }

    /// Exact division by sigma(u^m)^k = u^{-mk} (u^{2m} - 1)^k.
    std::optional<LaurentPoly> divide_by_sigma_power(unsigned m, unsigned k) const {
        if (m == 0) throw contract_violation("divide_by_sigma_power: m must be positive");
        if (is_zero()) return LaurentPoly();
        const long shift = min_exponent();
        const std::size_t w = 2 * static_cast<std::size_t>(m);
        // dense coefficients of u^{-shift} * p, lowest degree first
        std::vector<C> coeffs(static_cast<std::size_t>(max_exponent() - shift + 1), C(0));
        for (const auto& [e, c] : terms_) coeffs[static_cast<std::size_t>(e - shift)] = c;
        for (unsigned step = 0; step < k; ++step) {
            if (coeffs.size() <= w) return std::nullopt;
            // divide by the monic u^w - 1 from the top down
            std::vector<C> quotient(coeffs.size() - w, C(0));
            for (std::size_t d = coeffs.size() - 1; d >= w; --d) {
                const C q = coeffs[d];
                quotient[d - w] = q;
                coeffs[d - w] += q;
                coeffs[d] = C(0);
            }
            for (std::size_t d = 0; d < w; ++d)
                if (!asmkit::is_zero(coeffs[d])) return std::nullopt;
            coeffs = std::move(quotient);
        }
        LaurentPoly r;
        const long offset = shift + static_cast<long>(m) * static_cast<long>(k);
        for (std::size_t d = 0; d < coeffs.size(); ++d) r.add_term(static_cast<long>(d) + offset, coeffs[d]);
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            os << "(" << to_string(it->second) << ")*u^" << it->first;
        }
        return os.str();
    }

private:
    Terms terms_;
};

using CycloLaurent = LaurentPoly<Cyclo6>;

}  // namespace asmkit
