#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "asm.hpp"
#include "field.hpp"

namespace asmkit {

enum class Boundary { dwbc, uturn, os };

inline std::string_view boundary_name(Boundary b) {
    switch (b) {
        case Boundary::dwbc: return "dwbc";
        case Boundary::uturn: return "uturn";
        case Boundary::os: return "os";
    }
    return "?";
}

inline std::optional<Boundary> parse_boundary(std::string_view s) {
    if (s == "dwbc") return Boundary::dwbc;
    if (s == "uturn") return Boundary::uturn;
    if (s == "os") return Boundary::os;
    return std::nullopt;
}

/// Spectral parameters of one evaluation. DWBC and U-turn use x and y
/// (length n); the OS model uses u (length 2n). b is the U-turn weight
/// parameter.
template <ExactField F>
struct SpectralAssignment {
    F a;
    std::optional<F> b;
    std::vector<F> x;
    std::vector<F> y;
    std::vector<F> u;

    /// Interleaved vector (x_1, y_1, x_2, y_2, ...).
    std::vector<F> unified() const {
        std::vector<F> out;
        for (std::size_t i = 0; i < x.size(); ++i) {
            out.push_back(x[i]);
            out.push_back(y[i]);
        }
        return out;
    }

    /// Splits u into x = odd positions, y = even positions (1-based).
    static SpectralAssignment from_unified(F a, std::vector<F> u_in, std::optional<F> b = std::nullopt) {
        SpectralAssignment p{std::move(a), std::move(b), {}, {}, {}};
        for (std::size_t i = 0; i + 1 < u_in.size(); i += 2) {
            p.x.push_back(u_in[i]);
            p.y.push_back(u_in[i + 1]);
        }
        p.u = std::move(u_in);
        return p;
    }
};

/// Edge geometry of one boundary type. Horizontal edge bits are 1 when the
/// arrow points right, vertical edge bits are 1 when it points up.
struct IceLayout {
    struct Vertex {
        int left, right, top, bottom;  // edge ids
        int row, col;                  // matrix position
    };

    Boundary boundary = Boundary::dwbc;
    int n = 0;
    int edge_count = 0;
    int horizontal_count = 0;           // edges [0, horizontal_count) are horizontal
    std::vector<std::int8_t> fixed;     // -1 free, else forced bit
    std::vector<int> copy_to;           // OS corner: assigning e also assigns copy_to[e]
    std::vector<int> differ_with;       // U-turn: the two right edges of a row pair differ
    std::vector<Vertex> vertices;       // in visiting order, left/top assigned before each
    std::vector<std::pair<int, int>> uturns;  // (right edge of odd row, right edge of even row)

    static IceLayout make(Boundary b, int n) {
        if (n < 1) throw contract_violation("ice layout: n must be at least 1");
        IceLayout L;
        L.boundary = b;
        L.n = n;
        switch (b) {
            case Boundary::dwbc: L.build_grid(n, n, false); break;
            case Boundary::uturn: L.build_grid(2 * n, n, true); break;
            case Boundary::os: L.build_os(2 * n); break;
        }
        return L;
    }

    int rows() const { return boundary == Boundary::dwbc ? n : 2 * n; }
    int cols() const { return boundary == Boundary::uturn ? n : (boundary == Boundary::dwbc ? n : 2 * n); }

private:
    int add_edge(bool horizontal, int fixed_bit = -1) {
        (void)horizontal;
        fixed.push_back(static_cast<std::int8_t>(fixed_bit));
        copy_to.push_back(-1);
        differ_with.push_back(-1);
        return edge_count++;
    }

    void build_grid(int rows, int cols, bool uturn) {
        std::vector<std::vector<int>> h(static_cast<std::size_t>(rows)), v(static_cast<std::size_t>(cols));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j <= cols; ++j) {
                int bit = -1;
                if (j == 0) bit = 1;                  // left boundary points in
                if (j == cols && !uturn) bit = 0;     // right boundary points in
                h[static_cast<std::size_t>(i)].push_back(add_edge(true, bit));
            }
        horizontal_count = edge_count;
        for (int j = 0; j < cols; ++j)
            for (int i = 0; i <= rows; ++i) {
                int bit = -1;
                if (i == 0) bit = 1;      // top boundary points out (up)
                if (i == rows) bit = 0;   // bottom boundary points out (down)
                v[static_cast<std::size_t>(j)].push_back(add_edge(false, bit));
            }
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                vertices.push_back({h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                    h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j + 1)],
                                    v[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)],
                                    v[static_cast<std::size_t>(j)][static_cast<std::size_t>(i + 1)], i, j});
        if (uturn) {
            for (int i = 0; i < rows; i += 2) {
                const int e1 = h[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols)];
                const int e2 = h[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(cols)];
                differ_with[static_cast<std::size_t>(e1)] = e2;
                differ_with[static_cast<std::size_t>(e2)] = e1;
                uturns.emplace_back(e1, e2);
            }
        }
    }

    // Triangular OS grid: line mu enters row mu from the left, meets the
    // diagonal corner and leaves downward as column mu. Tetravalent vertices
    // sit at (row nu, col mu) with mu < nu.
    void build_os(int lines) {
        std::vector<std::vector<int>> h(static_cast<std::size_t>(lines)), v(static_cast<std::size_t>(lines));
        for (int nu = 0; nu < lines; ++nu)
            for (int mu = 0; mu <= nu; ++mu) h[static_cast<std::size_t>(nu)].push_back(add_edge(true, mu == 0 ? 1 : -1));
        horizontal_count = edge_count;
        // v[mu][k] is the edge above row mu+1+k in column mu; the last one is the bottom boundary
        for (int mu = 0; mu < lines; ++mu)
            for (int nu = mu + 1; nu <= lines; ++nu)
                v[static_cast<std::size_t>(mu)].push_back(add_edge(false, nu == lines ? 0 : -1));
        for (int mu = 0; mu < lines; ++mu) {
            const int into_corner = h[static_cast<std::size_t>(mu)][static_cast<std::size_t>(mu)];
            const int below_corner = v[static_cast<std::size_t>(mu)][0];
            copy_to[static_cast<std::size_t>(into_corner)] = below_corner;
        }
        for (int nu = 0; nu < lines; ++nu)
            for (int mu = 0; mu < nu; ++mu)
                vertices.push_back({h[static_cast<std::size_t>(nu)][static_cast<std::size_t>(mu)],
                                    h[static_cast<std::size_t>(nu)][static_cast<std::size_t>(mu + 1)],
                                    v[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu - mu - 1)],
                                    v[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu - mu)], nu, mu});
    }
};

/// One orientation of every edge; `uturn` holds 1 per upward U-turn.
struct IceState {
    Boundary boundary = Boundary::dwbc;
    int n = 0;
    std::vector<std::uint8_t> edges;
    std::vector<std::uint8_t> uturn;

    /// `H:<bits> V:<bits> U:<bits>`; horizontal then vertical edges in layout order.
    std::string dump(const IceLayout& L) const {
        std::string h = "H:", v = " V:", u = " U:";
        for (int e = 0; e < L.edge_count; ++e)
            (e < L.horizontal_count ? h : v).push_back(edges[static_cast<std::size_t>(e)] ? '1' : '0');
        for (auto b : uturn) u.push_back(b ? '1' : '0');
        return h + v + u;
    }
};

/// Vertex classes of the six-vertex model.
enum class VertexKind { plus, minus, a_type, b_type };

/// left/top/right bits of a vertex; bottom follows from the ice rule.
inline VertexKind vertex_kind(bool left_right, bool top_up, bool right_right) {
    if (left_right && !right_right) return VertexKind::plus;   // both horizontal arrows point in
    if (!left_right && right_right) return VertexKind::minus;  // both point out
    // straight-through vertex: (R,R,U,U) and (L,L,D,D) carry sigma(a z)
    return left_right == top_up ? VertexKind::a_type : VertexKind::b_type;
}

inline int vertex_entry(VertexKind k) {
    return k == VertexKind::plus ? 1 : (k == VertexKind::minus ? -1 : 0);
}

namespace detail {

// Two arrows in and two out: left in iff R, top in iff D, right in iff L, bottom in iff U.
inline bool ice_rule(bool l, bool t, bool r, bool b) {
    return (l ? 1 : 0) + (t ? 0 : 1) + (r ? 0 : 1) + (b ? 1 : 0) == 2;
}

template <class OnVertex, class OnLeaf>
class IceSearch {
public:
    IceSearch(const IceLayout& L, OnVertex on_vertex, OnLeaf on_leaf)
        : L_(L), bits_(static_cast<std::size_t>(L.edge_count), -1), on_vertex_(on_vertex), on_leaf_(on_leaf) {
        for (int e = 0; e < L.edge_count; ++e)
            if (L.fixed[static_cast<std::size_t>(e)] >= 0) bits_[static_cast<std::size_t>(e)] = L.fixed[static_cast<std::size_t>(e)];
        // corners whose incoming edge is a fixed boundary edge
        for (int e = 0; e < L.edge_count; ++e) {
            const int to = L.copy_to[static_cast<std::size_t>(e)];
            if (to >= 0 && bits_[static_cast<std::size_t>(e)] >= 0) bits_[static_cast<std::size_t>(to)] = bits_[static_cast<std::size_t>(e)];
        }
    }

    template <class Acc>
    void run(const Acc& start) {
        if (!consistent_start()) return;
        step(0, start);
    }

private:
    bool consistent_start() const {
        for (int e = 0; e < L_.edge_count; ++e) {
            const int to = L_.copy_to[static_cast<std::size_t>(e)];
            if (to >= 0 && bits_[static_cast<std::size_t>(e)] >= 0 && L_.fixed[static_cast<std::size_t>(to)] >= 0 &&
                L_.fixed[static_cast<std::size_t>(to)] != bits_[static_cast<std::size_t>(e)])
                return false;
        }
        return true;
    }

    bool assign(int e, int bit, std::vector<int>& undo) {
        auto& slot = bits_[static_cast<std::size_t>(e)];
        if (slot >= 0) return slot == bit;
        slot = static_cast<std::int8_t>(bit);
        undo.push_back(e);
        const int partner = L_.differ_with[static_cast<std::size_t>(e)];
        if (partner >= 0 && bits_[static_cast<std::size_t>(partner)] >= 0 && bits_[static_cast<std::size_t>(partner)] == bit) return false;
        const int to = L_.copy_to[static_cast<std::size_t>(e)];
        if (to >= 0) return assign(to, bit, undo);
        return true;
    }

    template <class Acc>
    void step(std::size_t k, const Acc& acc) {
        if (k == L_.vertices.size()) {
            on_leaf_(bits_, acc);
            return;
        }
        const auto& v = L_.vertices[k];
        const bool l = bits_[static_cast<std::size_t>(v.left)] == 1;
        const bool t = bits_[static_cast<std::size_t>(v.top)] == 1;
        for (int r = 0; r <= 1; ++r) {
            for (int b = 0; b <= 1; ++b) {
                if (!ice_rule(l, t, r == 1, b == 1)) continue;
                std::vector<int> undo;
                const bool ok = assign(v.right, r, undo) && assign(v.bottom, b, undo);
                if (ok) step(k + 1, on_vertex_(k, vertex_kind(l, t, r == 1), acc));
                for (int e : undo) bits_[static_cast<std::size_t>(e)] = -1;
            }
        }
    }

    const IceLayout& L_;
    std::vector<std::int8_t> bits_;
    OnVertex on_vertex_;
    OnLeaf on_leaf_;
};

template <class OnVertex, class OnLeaf>
IceSearch<OnVertex, OnLeaf> make_ice_search(const IceLayout& L, OnVertex v, OnLeaf l) {
    return IceSearch<OnVertex, OnLeaf>(L, v, l);
}

inline std::vector<std::uint8_t> uturn_bits(const IceLayout& L, const std::vector<std::int8_t>& bits) {
    std::vector<std::uint8_t> out;
    // upward: the odd-row right edge points back into the grid
    for (const auto& pair : L.uturns) out.push_back(bits[static_cast<std::size_t>(pair.first)] == 0 ? 1 : 0);
    return out;
}

}  // namespace detail

/// Streams every valid state of the boundary in row-major backtracking order.
/// Throws resource_limit once more than `max_states` states were produced.
template <class Visit>
void enumerate_states(const IceLayout& L, Visit&& visit, std::uint64_t max_states = 50'000'000) {
    std::uint64_t produced = 0;
    auto on_vertex = [](std::size_t, VertexKind, int acc) { return acc; };
    auto on_leaf = [&](const std::vector<std::int8_t>& bits, int) {
        if (++produced > max_states) throw resource_limit("ice state enumeration exceeded its cap");
        IceState s;
        s.boundary = L.boundary;
        s.n = L.n;
        s.edges.assign(bits.begin(), bits.end());
        s.uturn = detail::uturn_bits(L, bits);
        visit(s);
    };
    auto search = detail::make_ice_search(L, on_vertex, on_leaf);
    search.run(0);
}

inline std::uint64_t count_states(const IceLayout& L, std::uint64_t max_states = 50'000'000) {
    std::uint64_t n = 0;
    enumerate_states(L, [&n](const IceState&) { ++n; }, max_states);
    return n;
}

/// Vertex kinds of a state in layout order.
inline std::vector<VertexKind> vertex_kinds(const IceLayout& L, const IceState& s) {
    std::vector<VertexKind> out;
    out.reserve(L.vertices.size());
    for (const auto& v : L.vertices)
        out.push_back(vertex_kind(s.edges[static_cast<std::size_t>(v.left)] == 1,
                                  s.edges[static_cast<std::size_t>(v.top)] == 1,
                                  s.edges[static_cast<std::size_t>(v.right)] == 1));
    return out;
}

/// DWBC -> n x n ASM, U-turn -> 2n x n UASM, OS -> symmetric 2n x 2n OSASM.
inline AsmMatrix state_to_matrix(const IceLayout& L, const IceState& s) {
    const auto kinds = vertex_kinds(L, s);
    AsmClass cls = L.boundary == Boundary::dwbc ? AsmClass::asm_
                   : L.boundary == Boundary::uturn ? AsmClass::uasm
                                                   : AsmClass::osasm;
    AsmMatrix m(L.rows(), L.cols(), cls);
    for (std::size_t k = 0; k < kinds.size(); ++k) {
        const auto& v = L.vertices[k];
        const int e = vertex_entry(kinds[k]);
        m.set(v.row, v.col, e);
        if (L.boundary == Boundary::os) m.set(v.col, v.row, e);
    }
    return m;
}

namespace detail {

template <ExactField F>
F vertex_parameter(const IceLayout& L, const IceLayout::Vertex& v, const SpectralAssignment<F>& p) {
    switch (L.boundary) {
        case Boundary::dwbc: return p.x.at(static_cast<std::size_t>(v.row)) / p.y.at(static_cast<std::size_t>(v.col));
        case Boundary::uturn: {
            const F& xi = p.x.at(static_cast<std::size_t>(v.row / 2));
            const F label = v.row % 2 == 0 ? xi : inverse(xi);
            return label / p.y.at(static_cast<std::size_t>(v.col));
        }
        case Boundary::os: return p.u.at(static_cast<std::size_t>(v.row)) * p.u.at(static_cast<std::size_t>(v.col));
    }
    return F(0);
}

template <ExactField F>
void check_dimensions(const IceLayout& L, const SpectralAssignment<F>& p) {
    const std::size_t n = static_cast<std::size_t>(L.n);
    if (L.boundary == Boundary::os) {
        if (p.u.size() != 2 * n) throw contract_violation("OS boundary needs 2n spectral parameters u");
        return;
    }
    if (p.x.size() != n || p.y.size() != n) throw contract_violation("spectral assignment must have n x and n y");
    if (L.boundary == Boundary::uturn && !p.b) throw contract_violation("U-turn boundary needs the parameter b");
}

/// Per-vertex weights (sigma(a^2), sigma(a z), sigma(a/z)).
template <ExactField F>
struct VertexWeights {
    F c;
    std::vector<F> a_type, b_type;
    std::vector<F> uturn_up, uturn_down;

    VertexWeights(const IceLayout& L, const SpectralAssignment<F>& p) : c(sigma(F(p.a * p.a))) {
        check_dimensions(L, p);
        for (const auto& v : L.vertices) {
            const F z = vertex_parameter(L, v, p);
            a_type.push_back(sigma(F(p.a * z)));
            b_type.push_back(sigma(F(p.a / z)));
        }
        if (L.boundary == Boundary::uturn) {
            // U-turn joining rows 2i-1, 2i carries the label a x_i
            for (const auto& xi : p.x) {
                const F label = p.a * xi;
                uturn_down.push_back(sigma(F(*p.b * label)));
                uturn_up.push_back(sigma(F(*p.b / label)));
            }
        }
    }

    const F& of(std::size_t k, VertexKind kind) const {
        switch (kind) {
            case VertexKind::plus:
            case VertexKind::minus: return c;
            case VertexKind::a_type: return a_type[k];
            case VertexKind::b_type: return b_type[k];
        }
        return c;
    }
};

}  // namespace detail

/// Product of all vertex weights (and U-turn weights) of one state.
template <ExactField F>
F state_weight(const IceLayout& L, const IceState& s, const SpectralAssignment<F>& p) {
    const detail::VertexWeights<F> w(L, p);
    const auto kinds = vertex_kinds(L, s);
    F total(1);
    for (std::size_t k = 0; k < kinds.size(); ++k) total *= w.of(k, kinds[k]);
    for (std::size_t i = 0; i < s.uturn.size(); ++i) total *= s.uturn[i] ? w.uturn_up[i] : w.uturn_down[i];
    return total;
}

/// Exact sum of state weights. Products are accumulated along the search
/// tree, so shared prefixes are multiplied once; branches whose partial
/// weight is zero are skipped. Summation order is the deterministic state order.
template <ExactField F>
F partition_sum(const IceLayout& L, const SpectralAssignment<F>& p) {
    const detail::VertexWeights<F> w(L, p);
    F total(0);
    auto on_vertex = [&w](std::size_t k, VertexKind kind, const F& acc) { return F(acc * w.of(k, kind)); };
    auto on_leaf = [&](const std::vector<std::int8_t>& bits, const F& acc) {
        if (is_zero(acc)) return;
        if (L.uturns.empty()) {
            total += acc;
            return;
        }
        F t = acc;
        const auto up = detail::uturn_bits(L, bits);
        for (std::size_t i = 0; i < up.size(); ++i) t *= up[i] ? w.uturn_up[i] : w.uturn_down[i];
        total += t;
    };
    auto search = detail::make_ice_search(L, on_vertex, on_leaf);
    search.run(F(1));
    return total;
}

template <ExactField F>
F partition_sum(Boundary b, const SpectralAssignment<F>& p) {
    const int n = b == Boundary::os ? static_cast<int>(p.u.size() / 2) : static_cast<int>(p.x.size());
    return partition_sum(IceLayout::make(b, n), p);
}

}  // namespace asmkit
