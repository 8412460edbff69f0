#pragma once

#include <future>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "asm.hpp"

namespace asmkit {

/// Memoised censuses shared by concurrent checks. Each (class, n) is
/// enumerated once; later callers wait for the first computation.
class CountCache {
public:
    explicit CountCache(EnumerationLimits lim = {}) : lim_(lim) {}

    const Census& census(AsmClass cls, int n) {
        std::shared_future<Census> fut;
        std::promise<Census> promise;
        bool owner = false;
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto key = std::make_pair(static_cast<int>(cls), n);
            auto it = cache_.find(key);
            if (it == cache_.end()) {
                fut = promise.get_future().share();
                cache_.emplace(key, fut);
                owner = true;
            } else {
                fut = it->second;
            }
        }
        if (owner) {
            try {
                promise.set_value(asmkit::census(cls, n, 1, lim_));
            } catch (...) {
                promise.set_exception(std::current_exception());
            }
        }
        return fut.get();
    }

    /// A(m), with A(0) = 1.
    BigInt asm_count(int m) { return m == 0 ? BigInt(1) : census(AsmClass::asm_, m).total(); }

    /// A(m, r) for r = 1..m.
    std::vector<BigInt> asm_refined(int m) {
        std::vector<BigInt> out;
        for (const auto& p : refined_counts(census(AsmClass::asm_, m), Statistic::first_column).counts)
            out.push_back(p.coefficient(0));
        return out;
    }

    /// A_V(2m+1), with A_V(1) = 1.
    BigInt av_count(int m) { return m == 0 ? BigInt(1) : census(AsmClass::vsasm, m).total(); }

    /// A_V(2m+1, r) for r = 1..2m+1.
    std::vector<BigInt> av_refined(int m) {
        std::vector<BigInt> out;
        for (const auto& p : refined_counts(census(AsmClass::vsasm, m), Statistic::first_column).counts)
            out.push_back(p.coefficient(0));
        return out;
    }

    /// A_O(2m), with A_O(0) = 1.
    BigInt ao_count(int m) { return m == 0 ? BigInt(1) : census(AsmClass::osasm, m).total(); }

    /// A_O(2m, r) for r = 1..2m (first column; A_O(2m, 1) = 0).
    std::vector<BigInt> ao_refined(int m) {
        std::vector<BigInt> out;
        for (const auto& p : refined_counts(census(AsmClass::osasm, m), Statistic::first_column).counts)
            out.push_back(p.coefficient(0));
        return out;
    }

    /// A_U(2m; 1, y), with A_U(0; 1, y) = 1.
    IntPoly au_total(int m) {
        return m == 0 ? IntPoly(1) : refined_counts(census(AsmClass::uasm, m), Statistic::first_column).total();
    }

    /// A_U(2m, r; 1, y) for r = 1..2m.
    std::vector<IntPoly> au_refined(int m) {
        return refined_counts(census(AsmClass::uasm, m), Statistic::first_column).counts;
    }

private:
    EnumerationLimits lim_;
    std::mutex mutex_;
    std::map<std::pair<int, int>, std::shared_future<Census>> cache_;
};

}  // namespace asmkit
