#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "counts.hpp"
#include "cyclo6.hpp"
#include "poly.hpp"
#include "sampling.hpp"

namespace asmkit {

/// Outcome of one named check over a range of sizes.
struct IdentityReport {
    std::string tag;
    int n_min = 0;
    int n_max = 0;      ///< n_max < n_min means no size was in range
    int samples = 0;    ///< sample points evaluated over all sizes
    bool pass = true;
    std::string witness;  ///< first failing input, empty on pass
    std::string note;

    friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

/// Per-(check, n) state handed to a check body.
struct CaseContext {
    CountCache& counts;
    std::uint64_t seed;
    int samples;
    std::string tag;
    int n = 0;
    int samples_used = 0;
    std::vector<std::string> notes;

    Sampler sampler() const { return Sampler::for_job(seed, tag, n); }
    void note(std::string s) { notes.push_back("n=" + std::to_string(n) + ": " + std::move(s)); }
};

/// Returns a witness string on failure.
using CaseFn = std::function<std::optional<std::string>(CaseContext&)>;

struct CheckSpec {
    std::string tag;
    int n_min = 1;
    int cap = 1;
    CaseFn body;
};

struct CaseOutcome {
    std::optional<std::string> witness;
    int samples_used = 0;
    std::vector<std::string> notes;
};

inline CaseOutcome run_case(const CheckSpec& spec, int n, CountCache& counts, std::uint64_t seed, int samples) {
    CaseContext ctx{counts, seed, samples, spec.tag, n, 0, {}};
    CaseOutcome out;
    out.witness = spec.body(ctx);
    if (out.witness) out.witness = "n=" + std::to_string(n) + " " + *out.witness;
    out.samples_used = ctx.samples_used;
    out.notes = std::move(ctx.notes);
    return out;
}

inline int effective_max(const CheckSpec& spec, int n_max) { return n_max <= 0 ? spec.cap : std::min(spec.cap, n_max); }

/// Folds per-n outcomes (in increasing n) into one report.
inline IdentityReport fold_report(const CheckSpec& spec, int hi, const std::vector<CaseOutcome>& cases) {
    IdentityReport r;
    r.tag = spec.tag;
    r.n_min = spec.n_min;
    r.n_max = hi;
    std::string notes;
    for (const auto& c : cases) {
        r.samples += c.samples_used;
        if (c.witness && r.pass) {
            r.pass = false;
            r.witness = *c.witness;
        }
        for (const auto& s : c.notes) notes += (notes.empty() ? "" : "; ") + s;
    }
    r.note = notes;
    return r;
}

inline IdentityReport run_check(const CheckSpec& spec, int n_max, CountCache& counts, std::uint64_t seed,
                                int samples) {
    const int hi = effective_max(spec, n_max);
    std::vector<CaseOutcome> cases;
    for (int n = spec.n_min; n <= hi; ++n) cases.push_back(run_case(spec, n, counts, seed, samples));
    return fold_report(spec, hi, cases);
}

// ---- helpers for check bodies --------------------------------------------

inline std::string show(const BigInt& v) { return v.get_str(); }
inline std::string show(const BigRational& v) { return v.get_str(); }
inline std::string show(const Cyclo6& v) { return v.str(); }
inline std::string show(const IntPoly& p) { return to_string(p); }
inline std::string show(const IntPoly2& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) s += (i ? "," : "") + to_string(p.coeffs()[i]);
    return s + "]";
}
template <class T>
std::string show(const std::vector<T>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + show(v[i]);
    return s + "]";
}

template <class T>
std::optional<std::string> expect_equal(const T& lhs, const T& rhs, const std::string& where = {}) {
    if (lhs == rhs) return std::nullopt;
    return (where.empty() ? std::string() : where + ": ") + "lhs=" + show(lhs) + " rhs=" + show(rhs);
}

/// Runs `fn(sampler)` at ctx.samples seeded points, redrawing at poles.
template <class Fn>
std::optional<std::string> for_samples(CaseContext& ctx, Fn&& fn) {
    Sampler s = ctx.sampler();
    for (int i = 0; i < ctx.samples; ++i) {
        auto w = with_resampling(s, [&](Sampler& sm) { return fn(sm); });
        ++ctx.samples_used;
        if (w) return "sample " + std::to_string(i) + " " + *w;
    }
    return std::nullopt;
}

inline std::string show_point(const std::vector<BigRational>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + ")";
}

inline IntPoly2 t_poly(const std::vector<IntPoly>& coeffs) { return IntPoly2(coeffs); }

inline IntPoly2 t_poly(const std::vector<BigInt>& coeffs) {
    std::vector<IntPoly> c;
    for (const auto& v : coeffs) c.emplace_back(v);
    return IntPoly2(std::move(c));
}

}  // namespace asmkit
