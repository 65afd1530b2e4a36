#ifndef OSLCM_CORE_HPP
#define OSLCM_CORE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace oslcm {

/// Thrown when an input violates a documented precondition.
class validation_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Directed edge from the fixed layer X (position 1..x_count) to the free
/// layer Y (id 1..y_count). Edge identity is its index in the input sequence.
struct edge {
    int x{0};
    int y{0};

    friend bool operator==(const edge &, const edge &) = default;
};

/// A 2-layer network with the X order fixed to the numeric order of
/// positions. Immutable after construction; per-Y adjacency is cached sorted.
struct two_layer_network {
    int x_count{0};
    int y_count{0};
    std::vector<edge> edges;
    std::vector<std::vector<int>> adjacency;  // adjacency[y-1], ascending x

    int degree(int y) const { return static_cast<int>(adjacency[y - 1].size()); }

    const std::vector<int> &neighbors(int y) const { return adjacency[y - 1]; }

    /// Index of the edge (x, y), if present. Linear scan; intended for tests
    /// and small instances, not hot paths.
    std::optional<std::size_t> find_edge(int x, int y) const {
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i].x == x && edges[i].y == y) return i;
        return std::nullopt;
    }
};

inline two_layer_network build_network(int x_count, int y_count, std::vector<edge> edges) {
    if (x_count < 0 || y_count < 0) throw validation_error("vertex counts must be non-negative");
    two_layer_network net;
    net.x_count = x_count;
    net.y_count = y_count;
    net.adjacency.assign(static_cast<std::size_t>(y_count), {});
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const edge e = edges[i];
        if (e.x < 1 || e.x > x_count || e.y < 1 || e.y > y_count)
            throw validation_error("edge " + std::to_string(i + 1) + " = (" + std::to_string(e.x) +
                                   "," + std::to_string(e.y) + ") out of range");
        net.adjacency[e.y - 1].push_back(e.x);
    }
    net.edges = std::move(edges);
    for (int y = 1; y <= y_count; ++y) {
        auto &adj = net.adjacency[y - 1];
        std::sort(adj.begin(), adj.end());
        if (std::adjacent_find(adj.begin(), adj.end()) != adj.end())
            throw validation_error("duplicate edge incident to y=" + std::to_string(y));
    }
    return net;
}

/// Linear order of Y, read left to right. Must be a permutation of 1..y_count.
struct y_order {
    std::vector<int> positions;
};

/// positions of each y (0-based), validating that the order is a permutation.
inline std::vector<int> rank_of(const two_layer_network &net, const y_order &order) {
    if (static_cast<int>(order.positions.size()) != net.y_count)
        throw validation_error("order has " + std::to_string(order.positions.size()) +
                               " entries, expected " + std::to_string(net.y_count));
    std::vector<int> rank(static_cast<std::size_t>(net.y_count), -1);
    for (std::size_t i = 0; i < order.positions.size(); ++i) {
        const int y = order.positions[i];
        if (y < 1 || y > net.y_count || rank[y - 1] != -1)
            throw validation_error("order is not a permutation of 1.." + std::to_string(net.y_count));
        rank[y - 1] = static_cast<int>(i);
    }
    return rank;
}

namespace detail {

/// Crossing predicate on raw coordinates; r1/r2 are the Y ranks.
inline bool cross(int x1, int r1, int x2, int r2) {
    return (x1 < x2 && r2 < r1) || (x2 < x1 && r1 < r2);
}

/// Fenwick tree over 1..size for prefix counts.
class fenwick {
  public:
    explicit fenwick(int size) : tree_(static_cast<std::size_t>(size) + 1, 0) {}

    void add(int i, std::int64_t delta) {
        for (; i < static_cast<int>(tree_.size()); i += i & -i) tree_[static_cast<std::size_t>(i)] += delta;
    }

    std::int64_t prefix(int i) const {  // sum of positions 1..i
        std::int64_t s = 0;
        for (; i > 0; i -= i & -i) s += tree_[static_cast<std::size_t>(i)];
        return s;
    }

    void clear() { std::fill(tree_.begin(), tree_.end(), 0); }

  private:
    std::vector<std::int64_t> tree_;
};

}  // namespace detail

inline bool edges_cross(const two_layer_network &net, std::size_t e1, std::size_t e2,
                        const y_order &order) {
    if (e1 >= net.edges.size() || e2 >= net.edges.size())
        throw validation_error("edge index out of range");
    const auto rank = rank_of(net, order);
    const edge a = net.edges[e1];
    const edge b = net.edges[e2];
    return detail::cross(a.x, rank[a.y - 1], b.x, rank[b.y - 1]);
}

enum class count_mode { oracle, fast };

/// Per-edge crossing counts of a drawing, and their maximum.
struct crossing_profile {
    std::vector<std::int64_t> per_edge;  // indexed by edge identity
    std::int64_t local_crossing_number{0};
};

namespace detail {

inline crossing_profile profile_oracle(const two_layer_network &net, const std::vector<int> &rank) {
    crossing_profile p;
    p.per_edge.assign(net.edges.size(), 0);
    for (std::size_t i = 0; i < net.edges.size(); ++i) {
        const edge a = net.edges[i];
        for (std::size_t j = i + 1; j < net.edges.size(); ++j) {
            const edge b = net.edges[j];
            if (a.x == b.x || a.y == b.y) continue;
            if (cross(a.x, rank[a.y - 1], b.x, rank[b.y - 1])) {
                ++p.per_edge[i];
                ++p.per_edge[j];
            }
        }
    }
    return p;
}

// Sweep in Y order with a prefix-sum index over X positions. For edge e=(x,y),
// crossings split into edges placed before y with X position > x and edges
// placed after y with X position < x.
inline crossing_profile profile_fast(const two_layer_network &net, const y_order &order) {
    crossing_profile p;
    p.per_edge.assign(net.edges.size(), 0);

    // edge indices grouped by Y id
    std::vector<std::vector<std::size_t>> by_y(static_cast<std::size_t>(net.y_count));
    for (std::size_t i = 0; i < net.edges.size(); ++i)
        by_y[static_cast<std::size_t>(net.edges[i].y - 1)].push_back(i);

    fenwick fw(net.x_count);
    std::int64_t inserted = 0;
    for (const int y : order.positions) {
        for (const std::size_t ei : by_y[static_cast<std::size_t>(y - 1)])
            p.per_edge[ei] += inserted - fw.prefix(net.edges[ei].x);
        for (const std::size_t ei : by_y[static_cast<std::size_t>(y - 1)]) {
            fw.add(net.edges[ei].x, 1);
            ++inserted;
        }
    }
    fw.clear();
    for (auto it = order.positions.rbegin(); it != order.positions.rend(); ++it) {
        for (const std::size_t ei : by_y[static_cast<std::size_t>(*it - 1)])
            p.per_edge[ei] += fw.prefix(net.edges[ei].x - 1);
        for (const std::size_t ei : by_y[static_cast<std::size_t>(*it - 1)]) fw.add(net.edges[ei].x, 1);
    }
    return p;
}

}  // namespace detail

inline crossing_profile compute_profile(const two_layer_network &net, const y_order &order,
                                        count_mode mode = count_mode::fast) {
    const auto rank = rank_of(net, order);
    crossing_profile p = mode == count_mode::oracle ? detail::profile_oracle(net, rank)
                                                    : detail::profile_fast(net, order);
    for (const std::int64_t c : p.per_edge)
        p.local_crossing_number = std::max(p.local_crossing_number, c);
    return p;
}

inline std::int64_t local_crossing_number(const two_layer_network &net, const y_order &order) {
    return compute_profile(net, order).local_crossing_number;
}

/// cr(e, Z, <): edges with an endpoint in Z that cross e, by the explicit
/// formula |{(w,z) in E : z in Z and ((x < w and z < y) or (w < x and y < z))}|.
inline std::int64_t cr_restricted(const two_layer_network &net, std::size_t e,
                                  const std::vector<int> &z_set, const y_order &order) {
    if (e >= net.edges.size()) throw validation_error("edge index out of range");
    std::vector<char> in_z(static_cast<std::size_t>(net.y_count) + 1, 0);
    for (const int z : z_set) {
        if (z < 1 || z > net.y_count) throw validation_error("unknown Y id in Z: " + std::to_string(z));
        in_z[static_cast<std::size_t>(z)] = 1;
    }
    const auto rank = rank_of(net, order);
    const int x = net.edges[e].x;
    const int ry = rank[net.edges[e].y - 1];
    std::int64_t count = 0;
    for (const edge f : net.edges) {
        if (!in_z[static_cast<std::size_t>(f.y)]) continue;
        const int rz = rank[f.y - 1];
        if ((x < f.x && rz < ry) || (f.x < x && ry < rz)) ++count;
    }
    return count;
}

}  // namespace oslcm

#endif
