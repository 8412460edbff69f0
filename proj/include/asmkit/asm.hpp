#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"

namespace asmkit {

enum class AsmClass { asm_, vsasm, osasm, uasm };

/// Row of the boundary 1 used for refinement.
enum class Statistic { first_column, last_column };

inline std::string_view class_name(AsmClass c) {
    switch (c) {
        case AsmClass::asm_: return "asm";
        case AsmClass::vsasm: return "vsasm";
        case AsmClass::osasm: return "osasm";
        case AsmClass::uasm: return "uasm";
    }
    return "?";
}

inline std::optional<AsmClass> parse_class(std::string_view s) {
    if (s == "asm") return AsmClass::asm_;
    if (s == "vsasm") return AsmClass::vsasm;
    if (s == "osasm") return AsmClass::osasm;
    if (s == "uasm") return AsmClass::uasm;
    return std::nullopt;
}

inline std::string_view statistic_name(Statistic s) {
    return s == Statistic::first_column ? "first-column" : "last-column";
}

// Every class is indexed by the parameter n: ASM n x n, VSASM (2n+1) x (2n+1),
// OSASM 2n x 2n, UASM 2n x n.
inline int class_rows(AsmClass c, int n) {
    switch (c) {
        case AsmClass::asm_: return n;
        case AsmClass::vsasm: return 2 * n + 1;
        case AsmClass::osasm:
        case AsmClass::uasm: return 2 * n;
    }
    return 0;
}

inline int class_cols(AsmClass c, int n) {
    return c == AsmClass::uasm ? n : class_rows(c, n);
}

/// Largest n enumerated by default for each class.
inline int default_cap(AsmClass c) {
    switch (c) {
        case AsmClass::asm_: return 7;
        case AsmClass::vsasm: return 4;
        case AsmClass::osasm: return 4;
        case AsmClass::uasm: return 4;
    }
    return 0;
}

struct AsmMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::int8_t> entries;
    AsmClass cls = AsmClass::asm_;

    AsmMatrix() = default;
    AsmMatrix(int r, int c, AsmClass k) : rows(r), cols(c), entries(static_cast<std::size_t>(r * c), 0), cls(k) {}

    int at(int i, int j) const { return entries[static_cast<std::size_t>(i * cols + j)]; }
    void set(int i, int j, int v) { entries[static_cast<std::size_t>(i * cols + j)] = static_cast<std::int8_t>(v); }

    /// Row-concatenated signed digits: '+', '-', '0'.
    std::string str() const {
        std::string s;
        s.reserve(entries.size());
        for (auto e : entries) s.push_back(e > 0 ? '+' : (e < 0 ? '-' : '0'));
        return s;
    }

    static AsmMatrix from_rows(const std::vector<std::vector<int>>& rows_in, AsmClass k) {
        AsmMatrix m(static_cast<int>(rows_in.size()), rows_in.empty() ? 0 : static_cast<int>(rows_in[0].size()), k);
        for (int i = 0; i < m.rows; ++i) {
            if (static_cast<int>(rows_in[static_cast<std::size_t>(i)].size()) != m.cols)
                throw contract_violation("AsmMatrix::from_rows: ragged rows");
            for (int j = 0; j < m.cols; ++j) m.set(i, j, rows_in[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
        return m;
    }

    friend bool operator==(const AsmMatrix& l, const AsmMatrix& r) {
        return l.rows == r.rows && l.cols == r.cols && l.entries == r.entries;
    }
};

namespace detail {

// Partial sums along the sequence must stay in {0, 1} and end at `total`.
inline bool alternates(const std::vector<int>& seq, int total = 1) {
    int s = 0;
    for (int v : seq) {
        if (v < -1 || v > 1) return false;
        s += v;
        if (s < 0 || s > 1) return false;
    }
    return s == total;
}

inline bool is_plain_asm(const AsmMatrix& m) {
    if (m.rows != m.cols) return false;
    for (int i = 0; i < m.rows; ++i) {
        std::vector<int> row;
        for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
        if (!alternates(row)) return false;
    }
    for (int j = 0; j < m.cols; ++j) {
        std::vector<int> col;
        for (int i = 0; i < m.rows; ++i) col.push_back(m.at(i, j));
        if (!alternates(col)) return false;
    }
    return true;
}

}  // namespace detail

/// Checks the defining invariants of the matrix's class.
inline bool is_valid(const AsmMatrix& m) {
    switch (m.cls) {
        case AsmClass::asm_: return detail::is_plain_asm(m);
        case AsmClass::vsasm: {
            if (m.rows % 2 == 0 || !detail::is_plain_asm(m)) return false;
            for (int i = 0; i < m.rows; ++i)
                for (int j = 0; j < m.cols; ++j)
                    if (m.at(i, j) != m.at(i, m.cols - 1 - j)) return false;
            return true;
        }
        case AsmClass::osasm: {
            if (m.rows % 2 != 0 || !detail::is_plain_asm(m)) return false;
            for (int i = 0; i < m.rows; ++i) {
                if (m.at(i, i) != 0) return false;
                for (int j = 0; j < i; ++j)
                    if (m.at(i, j) != m.at(j, i)) return false;
            }
            return true;
        }
        case AsmClass::uasm: {
            if (m.rows != 2 * m.cols) return false;
            for (int j = 0; j < m.cols; ++j) {
                std::vector<int> col;
                for (int i = 0; i < m.rows; ++i) col.push_back(m.at(i, j));
                if (!detail::alternates(col)) return false;
            }
            // odd row left to right, then the next even row right to left
            for (int i = 0; i < m.rows; i += 2) {
                std::vector<int> path;
                for (int j = 0; j < m.cols; ++j) path.push_back(m.at(i, j));
                for (int j = m.cols - 1; j >= 0; --j) path.push_back(m.at(i + 1, j));
                if (!detail::alternates(path)) return false;
            }
            return true;
        }
    }
    return false;
}

struct RefinedStats {
    int r = 0;                ///< 1-based row of the unique 1 in the first column
    int k = 0;                ///< number of -1 entries
    std::optional<int> l;     ///< upward U-turns (UASM only)
    int r_last = 0;           ///< 1-based row of the unique nonzero of the last column, 0 if not unique
};

/// Statistics of a class member; throws contract_violation on a malformed matrix.
inline RefinedStats stats(const AsmMatrix& m) {
    if (!is_valid(m)) throw contract_violation("stats: matrix is not a valid " + std::string(class_name(m.cls)));
    RefinedStats s;
    int ones = 0;
    for (int i = 0; i < m.rows; ++i) {
        const int v = m.at(i, 0);
        if (v < 0) throw contract_violation("stats: -1 in the first column");
        if (v == 1) {
            ++ones;
            s.r = i + 1;
        }
    }
    if (ones != 1) throw contract_violation("stats: first column does not contain a unique 1");
    int nonzero_last = 0;
    for (int i = 0; i < m.rows; ++i) {
        const int v = m.at(i, m.cols - 1);
        if (v != 0) {
            ++nonzero_last;
            s.r_last = i + 1;
        }
    }
    if (nonzero_last != 1) s.r_last = 0;
    for (auto e : m.entries)
        if (e < 0) ++s.k;
    if (m.cls == AsmClass::uasm) {
        int up = 0;
        for (int i = 0; i < m.rows; i += 2) {
            int sum = 0;
            for (int j = 0; j < m.cols; ++j) sum += m.at(i, j);
            if (sum == 1) ++up;
        }
        s.l = up;
    }
    return s;
}

struct EnumerationLimits {
    int max_n = -1;  ///< -1 selects default_cap(class)
};

namespace detail {

inline void check_cap(AsmClass c, int n, const EnumerationLimits& lim) {
    const int cap = lim.max_n < 0 ? default_cap(c) : lim.max_n;
    if (n < 1) throw contract_violation("enumeration size must be at least 1");
    if (n > cap)
        throw resource_limit("enumeration of " + std::string(class_name(c)) + " at n=" + std::to_string(n) +
                             " exceeds the cap n<=" + std::to_string(cap));
}

/// Row-by-row search over matrices whose columns are ASM columns, tracking
/// the 0/1 column partial sums. `forced(i, j)` returns an entry fixed in
/// advance or 2 when the entry is free; `row_end(i, row_sum)` accepts or
/// rejects a completed row.
template <class Forced, class RowEnd, class Visit>
class ColumnSumSearch {
public:
    ColumnSumSearch(int rows, int cols, AsmClass cls, Forced forced, RowEnd row_end, Visit visit)
        : m_(rows, cols, cls), colsum_(static_cast<std::size_t>(cols), 0), forced_(forced), row_end_(row_end),
          visit_(visit) {}

    void run() { cell(0, 0, 0); }
    void run_from_first_one(int col) {
        // restrict row 0 to a single 1 at `col`
        first_row_col_ = col;
        cell(0, 0, 0);
    }

private:
    void cell(int i, int j, int rowsum) {
        if (j == m_.cols) {
            if (!row_end_(i, rowsum, m_)) return;
            if (i + 1 == m_.rows) {
                for (int c : colsum_)
                    if (c != 1) return;
                visit_(m_);
                return;
            }
            cell(i + 1, 0, 0);
            return;
        }
        const int f = forced_(i, j, m_);
        for (int v = -1; v <= 1; ++v) {
            if (f != 2 && v != f) continue;
            if (i == 0 && first_row_col_ >= 0 && v != (j == first_row_col_ ? 1 : 0)) continue;
            const int c = colsum_[static_cast<std::size_t>(j)] + v;
            const int p = rowsum + v;
            if (c < 0 || c > 1 || p < 0 || p > 1) continue;
            colsum_[static_cast<std::size_t>(j)] = c;
            m_.set(i, j, v);
            cell(i, j + 1, p);
            colsum_[static_cast<std::size_t>(j)] -= v;
        }
        m_.set(i, j, 0);
    }

    AsmMatrix m_;
    std::vector<int> colsum_;
    Forced forced_;
    RowEnd row_end_;
    Visit visit_;
    int first_row_col_ = -1;
};

template <class Forced, class RowEnd, class Visit>
ColumnSumSearch<Forced, RowEnd, Visit> make_search(int rows, int cols, AsmClass cls, Forced f, RowEnd e, Visit v) {
    return ColumnSumSearch<Forced, RowEnd, Visit>(rows, cols, cls, f, e, v);
}

inline auto free_entries() {
    return [](int, int, const AsmMatrix&) { return 2; };
}

inline auto row_sums_to_one() {
    return [](int, int s, const AsmMatrix&) { return s == 1; };
}

/// UASM search; with `downward_only` every odd row (1-based) sums to 0.
template <class Visit>
void enumerate_uasm_impl(int n, bool downward_only, Visit&& visit) {
    auto row_end = [downward_only](int i, int s, const AsmMatrix& m) {
        if (i % 2 == 0) return !downward_only || s == 0;
        int prev = 0;
        for (int j = 0; j < m.cols; ++j) prev += m.at(i - 1, j);
        return prev + s == 1;
    };
    auto search = make_search(2 * n, n, AsmClass::uasm, free_entries(), row_end, visit);
    search.run();
}

/// Rebuilds the (2n+1) x (2n+1) VSASM from a downward-only UASM (its left
/// block minus the all-zero bottom row).
inline AsmMatrix vsasm_from_uasm(const AsmMatrix& u) {
    const int n = u.cols;
    const int order = 2 * n + 1;
    AsmMatrix v(order, order, AsmClass::vsasm);
    for (int i = 0; i < 2 * n; ++i) {
        for (int j = 0; j < n; ++j) {
            v.set(i, j, u.at(i, j));
            v.set(i, order - 1 - j, u.at(i, j));
        }
        v.set(i, n, i % 2 == 0 ? 1 : -1);
    }
    v.set(order - 1, n, 1);
    return v;
}

}  // namespace detail

/// Every n x n ASM exactly once, via 0/1 column-partial-sum backtracking.
template <class Visit>
void enumerate_asm(int n, Visit&& visit, const EnumerationLimits& lim = {}) {
    detail::check_cap(AsmClass::asm_, n, lim);
    auto search = detail::make_search(n, n, AsmClass::asm_, detail::free_entries(), detail::row_sums_to_one(),
                                      std::ref(visit));
    search.run();
}

/// Members of a class exactly once. VSASMs are produced through the
/// downward-U-turn bijection rather than by filtering order-(2n+1) ASMs.
template <class Visit>
void enumerate_class(AsmClass cls, int n, Visit&& visit, const EnumerationLimits& lim = {}) {
    detail::check_cap(cls, n, lim);
    switch (cls) {
        case AsmClass::asm_: enumerate_asm(n, visit, lim); break;
        case AsmClass::uasm: detail::enumerate_uasm_impl(n, false, std::ref(visit)); break;
        case AsmClass::vsasm:
            detail::enumerate_uasm_impl(n, true, [&visit](const AsmMatrix& u) { visit(detail::vsasm_from_uasm(u)); });
            break;
        case AsmClass::osasm: {
            const int order = 2 * n;
            auto forced = [](int i, int j, const AsmMatrix& m) {
                if (j < i) return m.at(j, i);
                if (j == i) return 0;
                return 2;
            };
            auto search = detail::make_search(order, order, AsmClass::osasm, forced, detail::row_sums_to_one(),
                                              std::ref(visit));
            search.run();
            break;
        }
    }
}

/// Joint distribution of (first-column row, last-column row, k, l) over a class.
class Census {
public:
    using Key = std::array<int, 4>;  // r, r_last, k, l

    Census() = default;
    Census(AsmClass cls, int n) : cls_(cls), n_(n) {}

    AsmClass cls() const { return cls_; }
    int n() const { return n_; }
    int rows() const { return class_rows(cls_, n_); }

    void add(const RefinedStats& s, std::uint64_t count = 1) {
        counts_[{s.r, s.r_last, s.k, s.l.value_or(0)}] += count;
    }
    void merge(const Census& other) {
        for (const auto& [key, c] : other.counts_) counts_[key] += c;
    }

    const std::map<Key, std::uint64_t>& entries() const { return counts_; }

    BigInt total() const {
        BigInt t = 0;
        for (const auto& [key, c] : counts_) t += BigInt(static_cast<unsigned long>(c));
        return t;
    }

    friend bool operator==(const Census& l, const Census& r) {
        return l.cls_ == r.cls_ && l.n_ == r.n_ && l.counts_ == r.counts_;
    }

private:
    AsmClass cls_ = AsmClass::asm_;
    int n_ = 0;
    std::map<Key, std::uint64_t> counts_;
};

/// Census of a class. ASM enumeration is split over the position of the 1 in
/// the first row; branch results are merged in branch order, so the result
/// does not depend on `threads`.
inline Census census(AsmClass cls, int n, int threads = 1, const EnumerationLimits& lim = {}) {
    detail::check_cap(cls, n, lim);
    if (cls == AsmClass::asm_ && threads > 1 && n > 1) {
        std::vector<Census> branches(static_cast<std::size_t>(n), Census(cls, n));
        auto work = [&](int first, int step) {
            for (int col = first; col < n; col += step) {
                Census& part = branches[static_cast<std::size_t>(col)];
                auto visit = [&part](const AsmMatrix& m) { part.add(stats(m)); };
                auto search = detail::make_search(n, n, AsmClass::asm_, detail::free_entries(),
                                                  detail::row_sums_to_one(), visit);
                search.run_from_first_one(col);
            }
        };
        const int workers = std::min(threads, n);
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
        for (auto& t : pool) t.join();
        Census out(cls, n);
        for (const auto& b : branches) out.merge(b);
        return out;
    }
    Census out(cls, n);
    enumerate_class(cls, n, [&out](const AsmMatrix& m) { out.add(stats(m)); }, lim);
    return out;
}

struct RefinedCounts {
    AsmClass cls = AsmClass::asm_;
    int n = 0;
    Statistic statistic = Statistic::first_column;
    /// counts[r-1] = sum over members with statistic r of y^l (constant unless UASM).
    std::vector<IntPoly> counts;

    IntPoly total() const {
        IntPoly t;
        for (const auto& c : counts) t += c;
        return t;
    }

    friend bool operator==(const RefinedCounts&, const RefinedCounts&) = default;
};

inline RefinedCounts refined_counts(const Census& c, Statistic stat) {
    RefinedCounts out{c.cls(), c.n(), stat, std::vector<IntPoly>(static_cast<std::size_t>(c.rows()))};
    for (const auto& [key, count] : c.entries()) {
        const int r = stat == Statistic::first_column ? key[0] : key[1];
        if (r < 1) throw contract_violation("refined_counts: statistic undefined for a class member");
        std::vector<BigInt> mono(static_cast<std::size_t>(key[3] + 1), BigInt(0));
        mono.back() = BigInt(static_cast<unsigned long>(count));
        out.counts[static_cast<std::size_t>(r - 1)] += IntPoly(std::move(mono));
    }
    return out;
}

inline RefinedCounts refined_counts(AsmClass cls, int n, Statistic stat, int threads = 1,
                                    const EnumerationLimits& lim = {}) {
    return refined_counts(census(cls, n, threads, lim), stat);
}

}  // namespace asmkit
