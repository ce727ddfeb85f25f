#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bbd {

/// Partite side of a balanced bipartite digraph. Vertices of side One are
/// named x1..xa, vertices of side Two are named y1..ya.
enum class Side : std::uint8_t { One = 0, Two = 1 };

constexpr Side opposite(Side s) { return s == Side::One ? Side::Two : Side::One; }

/// A vertex address: side plus 0-based index within that side.
struct Vertex {
    Side side;
    int index;

    friend constexpr bool operator==(const Vertex&, const Vertex&) = default;
    friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

constexpr Vertex x_vertex(int index) { return Vertex{Side::One, index}; }
constexpr Vertex y_vertex(int index) { return Vertex{Side::Two, index}; }

/// External name with 1-based labels: x3, y1, ...
inline std::string to_string(Vertex v) {
    return (v.side == Side::One ? "x" : "y") + std::to_string(v.index + 1);
}

struct Arc {
    Vertex from;
    Vertex to;

    friend constexpr bool operator==(const Arc&, const Arc&) = default;
    friend constexpr auto operator<=>(const Arc&, const Arc&) = default;
};

inline std::string to_string(const Arc& a) {
    return to_string(a.from) + " " + to_string(a.to);
}

namespace detail {
inline int popcount32(std::uint32_t m) { return std::popcount(m); }

inline void check_half_order(int a) {
    if (a < 1) throw std::invalid_argument("half-order must be positive");
    if (a > 16) throw std::invalid_argument("half-order above 16 is not supported");
}
} // namespace detail

/// Balanced bipartite digraph on partite sets V1 = {x1..xa} and V2 = {y1..ya}.
/// Only cross arcs are representable, so bipartiteness, loop-freeness and
/// balance hold by construction. Immutable once built; the mutating helpers
/// (with_arc, without_arc) return modified copies.
///
/// Adjacency is stored as per-vertex bitmasks over the opposite side, which
/// keeps degree, neighbourhood and reachability queries branch-free for the
/// half-orders this library targets (a <= 16).
class BipartiteDigraph {
public:
    explicit BipartiteDigraph(int half_order)
        : a_(half_order),
          x_out_(static_cast<std::size_t>(half_order), 0u),
          x_in_(static_cast<std::size_t>(half_order), 0u),
          y_out_(static_cast<std::size_t>(half_order), 0u),
          y_in_(static_cast<std::size_t>(half_order), 0u) {
        detail::check_half_order(half_order);
    }

    static BipartiteDigraph build(int half_order, std::span<const Arc> arcs) {
        BipartiteDigraph d(half_order);
        for (const Arc& arc : arcs) d.insert_arc(arc.from, arc.to);
        return d;
    }

    static BipartiteDigraph build(int half_order, std::initializer_list<Arc> arcs) {
        return build(half_order, std::span<const Arc>(arcs.begin(), arcs.size()));
    }

    int half_order() const { return a_; }
    int order() const { return 2 * a_; }

    bool has_arc(Vertex from, Vertex to) const {
        check_vertex(from);
        check_vertex(to);
        if (from.side == to.side) return false;
        if (from.side == Side::One) return (x_out_[from.index] >> to.index) & 1u;
        return (y_out_[from.index] >> to.index) & 1u;
    }

    bool adjacent(Vertex u, Vertex v) const { return has_arc(u, v) || has_arc(v, u); }

    /// Bitmask of out-neighbour indices on the opposite side.
    std::uint32_t out_mask(Vertex v) const {
        check_vertex(v);
        return v.side == Side::One ? x_out_[v.index] : y_out_[v.index];
    }

    /// Bitmask of in-neighbour indices on the opposite side.
    std::uint32_t in_mask(Vertex v) const {
        check_vertex(v);
        return v.side == Side::One ? x_in_[v.index] : y_in_[v.index];
    }

    int out_degree(Vertex v) const { return detail::popcount32(out_mask(v)); }
    int in_degree(Vertex v) const { return detail::popcount32(in_mask(v)); }
    int degree(Vertex v) const { return out_degree(v) + in_degree(v); }

    int arc_count() const {
        int n = 0;
        for (std::uint32_t m : x_out_) n += detail::popcount32(m);
        for (std::uint32_t m : y_out_) n += detail::popcount32(m);
        return n;
    }

    std::vector<Arc> arcs() const {
        std::vector<Arc> out;
        out.reserve(static_cast<std::size_t>(arc_count()));
        for (int i = 0; i < a_; ++i)
            for (int j = 0; j < a_; ++j)
                if ((x_out_[i] >> j) & 1u) out.push_back({x_vertex(i), y_vertex(j)});
        for (int j = 0; j < a_; ++j)
            for (int i = 0; i < a_; ++i)
                if ((y_out_[j] >> i) & 1u) out.push_back({y_vertex(j), x_vertex(i)});
        return out;
    }

    BipartiteDigraph with_arc(Vertex from, Vertex to) const {
        BipartiteDigraph d(*this);
        d.insert_arc(from, to);
        return d;
    }

    BipartiteDigraph without_arc(Vertex from, Vertex to) const {
        check_cross(from, to);
        BipartiteDigraph d(*this);
        if (from.side == Side::One) {
            d.x_out_[from.index] &= ~(1u << to.index);
            d.y_in_[to.index] &= ~(1u << from.index);
        } else {
            d.y_out_[from.index] &= ~(1u << to.index);
            d.x_in_[to.index] &= ~(1u << from.index);
        }
        return d;
    }

    /// The digraph with the partite sets exchanged: new x_i is old y_i.
    BipartiteDigraph swap_sides() const {
        BipartiteDigraph d(a_);
        d.x_out_ = y_out_;
        d.x_in_ = y_in_;
        d.y_out_ = x_out_;
        d.y_in_ = x_in_;
        return d;
    }

    /// Relabels vertices within each side: new x_{perm1[i]} is old x_i.
    BipartiteDigraph relabel(std::span<const int> perm_one, std::span<const int> perm_two) const {
        if (static_cast<int>(perm_one.size()) != a_ || static_cast<int>(perm_two.size()) != a_)
            throw std::invalid_argument("relabel permutations must have length a");
        BipartiteDigraph d(a_);
        for (int i = 0; i < a_; ++i)
            for (int j = 0; j < a_; ++j) {
                if ((x_out_[i] >> j) & 1u) d.insert_arc(x_vertex(perm_one[i]), y_vertex(perm_two[j]));
                if ((y_out_[j] >> i) & 1u) d.insert_arc(y_vertex(perm_two[j]), x_vertex(perm_one[i]));
            }
        return d;
    }

    friend bool operator==(const BipartiteDigraph& lhs, const BipartiteDigraph& rhs) {
        return lhs.a_ == rhs.a_ && lhs.x_out_ == rhs.x_out_ && lhs.y_out_ == rhs.y_out_;
    }

private:
    void check_vertex(Vertex v) const {
        if (v.index < 0 || v.index >= a_)
            throw std::out_of_range("vertex " + to_string(v) + " outside half-order " + std::to_string(a_));
    }

    void check_cross(Vertex from, Vertex to) const {
        check_vertex(from);
        check_vertex(to);
        if (from.side == to.side)
            throw std::invalid_argument("arc " + to_string(from) + " -> " + to_string(to) +
                                        " joins vertices of the same partite set");
    }

    void insert_arc(Vertex from, Vertex to) {
        check_cross(from, to);
        if (from.side == Side::One) {
            x_out_[from.index] |= 1u << to.index;
            y_in_[to.index] |= 1u << from.index;
        } else {
            y_out_[from.index] |= 1u << to.index;
            x_in_[to.index] |= 1u << from.index;
        }
    }

    int a_;
    std::vector<std::uint32_t> x_out_; // x_out_[i] bit j  <=>  x_i -> y_j
    std::vector<std::uint32_t> x_in_;  // x_in_[i]  bit j  <=>  y_j -> x_i
    std::vector<std::uint32_t> y_out_; // y_out_[j] bit i  <=>  y_j -> x_i
    std::vector<std::uint32_t> y_in_;  // y_in_[j]  bit i  <=>  x_i -> y_j
};

struct DegreeTriple {
    int out = 0;
    int in = 0;
    int total = 0;

    friend bool operator==(const DegreeTriple&, const DegreeTriple&) = default;
};

/// Per-vertex (out, in, total) degrees, x side then y side.
struct DegreeProfile {
    std::vector<DegreeTriple> side_one;
    std::vector<DegreeTriple> side_two;
    int arc_total = 0;
};

inline DegreeProfile degree_profile(const BipartiteDigraph& d) {
    DegreeProfile p;
    const int a = d.half_order();
    p.side_one.resize(a);
    p.side_two.resize(a);
    for (int i = 0; i < a; ++i) {
        Vertex v = x_vertex(i);
        p.side_one[i] = {d.out_degree(v), d.in_degree(v), d.degree(v)};
        p.arc_total += p.side_one[i].out;
    }
    for (int j = 0; j < a; ++j) {
        Vertex v = y_vertex(j);
        p.side_two[j] = {d.out_degree(v), d.in_degree(v), d.degree(v)};
        p.arc_total += p.side_two[j].out;
    }
    return p;
}

namespace detail {

/// Forward closure from x_0 (masks over each side), following out-arcs when
/// forward, in-arcs otherwise.
inline std::pair<std::uint32_t, std::uint32_t> reach_from_x0(const BipartiteDigraph& d, bool forward) {
    std::uint32_t rx = 1u, ry = 0u;
    bool grew = true;
    const int a = d.half_order();
    while (grew) {
        grew = false;
        std::uint32_t ny = ry, nx = rx;
        for (int i = 0; i < a; ++i)
            if ((rx >> i) & 1u) ny |= forward ? d.out_mask(x_vertex(i)) : d.in_mask(x_vertex(i));
        for (int j = 0; j < a; ++j)
            if ((ry >> j) & 1u) nx |= forward ? d.out_mask(y_vertex(j)) : d.in_mask(y_vertex(j));
        if (nx != rx || ny != ry) {
            rx = nx;
            ry = ny;
            grew = true;
        }
    }
    return {rx, ry};
}

} // namespace detail

/// True iff every ordered vertex pair is joined by a directed path.
inline bool is_strong(const BipartiteDigraph& d) {
    const std::uint32_t full = (d.half_order() == 32) ? ~0u : ((1u << d.half_order()) - 1u);
    auto [fx, fy] = detail::reach_from_x0(d, true);
    if (fx != full || fy != full) return false;
    auto [bx, by] = detail::reach_from_x0(d, false);
    return bx == full && by == full;
}

enum class AdjacencyKind {
    CompleteBipartite,
    CompleteMinusOneArc,
    SemicompleteBipartite,
    General,
};

/// Most specific adjacency grade; `missing` is set only for CompleteMinusOneArc.
struct AdjacencyClass {
    AdjacencyKind kind;
    std::optional<Arc> missing;
};

inline AdjacencyClass adjacency_class(const BipartiteDigraph& d) {
    const int a = d.half_order();
    const int total = d.arc_count();
    if (total == 2 * a * a) return {AdjacencyKind::CompleteBipartite, std::nullopt};
    if (total == 2 * a * a - 1) {
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < a; ++j) {
                if (!d.has_arc(x_vertex(i), y_vertex(j)))
                    return {AdjacencyKind::CompleteMinusOneArc, Arc{x_vertex(i), y_vertex(j)}};
                if (!d.has_arc(y_vertex(j), x_vertex(i)))
                    return {AdjacencyKind::CompleteMinusOneArc, Arc{y_vertex(j), x_vertex(i)}};
            }
    }
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < a; ++j)
            if (!d.adjacent(x_vertex(i), y_vertex(j))) return {AdjacencyKind::General, std::nullopt};
    return {AdjacencyKind::SemicompleteBipartite, std::nullopt};
}

inline bool is_semicomplete(const BipartiteDigraph& d) {
    return adjacency_class(d).kind != AdjacencyKind::General;
}

/// Complete bipartite digraph of half-order a (all 2a^2 cross arcs).
inline BipartiteDigraph complete_bipartite(int a) {
    BipartiteDigraph d(a);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < a; ++j)
            d = d.with_arc(x_vertex(i), y_vertex(j)).with_arc(y_vertex(j), x_vertex(i));
    return d;
}

/// The directed cycle x1 y1 x2 y2 ... xa ya x1.
inline BipartiteDigraph directed_cycle(int a) {
    BipartiteDigraph d(a);
    for (int i = 0; i < a; ++i) {
        d = d.with_arc(x_vertex(i), y_vertex(i));
        d = d.with_arc(y_vertex(i), x_vertex((i + 1) % a));
    }
    return d;
}

} // namespace bbd
