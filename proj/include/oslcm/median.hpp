#ifndef OSLCM_MEDIAN_HPP
#define OSLCM_MEDIAN_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <tuple>
#include <vector>

#include "oslcm/core.hpp"

namespace oslcm {

/// Median selection rule. heuristic_a is the default: second neighbor for
/// degree 2, ceil(d/2)-th neighbor otherwise (1-based). The generic variants
/// round the half position (d+1)/2 down resp. up for every degree.
enum class median_rule { heuristic_a, floor_generic, ceil_generic };

/// Tie-breaking among vertices sharing a median: the three-class scheme
/// (2-vertices by heavy neighbor, then odd, then 4+ by degree) or the classic
/// odd-before-even rule.
enum class tie_break { paper, ew_odd_first };

enum class vertex_class { two, odd, four_plus, isolated };

/// 1-based position of the median within the sorted neighbor list.
inline int median_position(median_rule rule, int deg) {
    switch (rule) {
        case median_rule::heuristic_a: return deg == 2 ? 2 : (deg + 1) / 2;
        case median_rule::floor_generic: return (deg + 1) / 2;
        case median_rule::ceil_generic: return deg / 2 + 1;
    }
    return (deg + 1) / 2;
}

struct median_assignment {
    std::vector<int> median_of;             // [y-1] -> X position, 0 when isolated
    std::vector<vertex_class> vclass;       // [y-1]
    median_rule rule{median_rule::heuristic_a};

    int median(int y) const { return median_of[static_cast<std::size_t>(y - 1)]; }
    vertex_class cls(int y) const { return vclass[static_cast<std::size_t>(y - 1)]; }
};

inline median_assignment compute_medians(const two_layer_network &net,
                                         median_rule rule = median_rule::heuristic_a) {
    median_assignment a;
    a.rule = rule;
    a.median_of.assign(static_cast<std::size_t>(net.y_count), 0);
    a.vclass.assign(static_cast<std::size_t>(net.y_count), vertex_class::isolated);
    for (int y = 1; y <= net.y_count; ++y) {
        const auto &nb = net.neighbors(y);
        const int d = static_cast<int>(nb.size());
        if (d == 0) continue;
        a.median_of[static_cast<std::size_t>(y - 1)] = nb[static_cast<std::size_t>(median_position(rule, d) - 1)];
        a.vclass[static_cast<std::size_t>(y - 1)] =
            d == 2 ? vertex_class::two : (d % 2 == 1 ? vertex_class::odd : vertex_class::four_plus);
    }
    return a;
}

enum class edge_class { median_edge, heavy, light };
enum class edge_side { left, right, median };

struct edge_classification {
    std::vector<edge_class> cls;      // indexed by edge identity
    std::vector<edge_side> side;      // indexed by edge identity
    std::vector<int> heavy_neighbor;  // [y-1] -> X position, 0 unless y is a 2-vertex
};

inline edge_classification classify_edges(const two_layer_network &net, const median_assignment &a) {
    edge_classification c;
    c.cls.assign(net.edges.size(), edge_class::light);
    c.side.assign(net.edges.size(), edge_side::median);
    c.heavy_neighbor.assign(static_cast<std::size_t>(net.y_count), 0);
    for (std::size_t i = 0; i < net.edges.size(); ++i) {
        const edge e = net.edges[i];
        const int med = a.median(e.y);
        if (e.x == med) {
            c.cls[i] = edge_class::median_edge;
            c.side[i] = edge_side::median;
        } else {
            c.side[i] = e.x < med ? edge_side::left : edge_side::right;
            if (a.cls(e.y) == vertex_class::two) {
                c.cls[i] = edge_class::heavy;
                c.heavy_neighbor[static_cast<std::size_t>(e.y - 1)] = e.x;
            } else {
                c.cls[i] = edge_class::light;
            }
        }
    }
    return c;
}

/// The bunch of x: all Y vertices whose median is x, ascending by id.
inline std::vector<int> bunch(const two_layer_network &net, const median_assignment &a, int x) {
    std::vector<int> ys;
    for (int y = 1; y <= net.y_count; ++y)
        if (net.degree(y) > 0 && a.median(y) == x) ys.push_back(y);
    return ys;
}

/// The median heuristic order. Bunches appear ascending by X position of
/// their median; ties inside a bunch follow the selected scheme, residual
/// ties ascending by Y id; isolated vertices go last.
inline y_order heuristic_order(const two_layer_network &net,
                               median_rule rule = median_rule::heuristic_a,
                               tie_break ties = tie_break::paper) {
    const median_assignment a = compute_medians(net, rule);
    const edge_classification c = classify_edges(net, a);

    // sort key: (median x, class block, block key, y)
    std::vector<std::tuple<int, int, int, int>> keyed;
    std::vector<int> isolated;
    keyed.reserve(static_cast<std::size_t>(net.y_count));
    for (int y = 1; y <= net.y_count; ++y) {
        const int d = net.degree(y);
        if (d == 0) {
            isolated.push_back(y);
            continue;
        }
        int block = 0;
        int key = 0;
        if (ties == tie_break::paper) {
            switch (a.cls(y)) {
                case vertex_class::two:
                    block = 0;
                    key = c.heavy_neighbor[static_cast<std::size_t>(y - 1)];
                    break;
                case vertex_class::odd:
                    block = 1;
                    break;
                case vertex_class::four_plus:
                    block = 2;
                    key = d;
                    break;
                case vertex_class::isolated: break;
            }
        } else {
            block = d % 2 == 1 ? 0 : 1;  // odd degree first
        }
        keyed.emplace_back(a.median(y), block, key, y);
    }
    std::sort(keyed.begin(), keyed.end());

    y_order order;
    order.positions.reserve(static_cast<std::size_t>(net.y_count));
    for (const auto &[med, block, key, y] : keyed) order.positions.push_back(y);
    for (const int y : isolated) order.positions.push_back(y);
    return order;
}

/// Two edges (w,y), (x,y) with w < x. An intrusive edge is any (x',y') with
/// y' != y and w < x' < x.
struct valley {
    int w{0};
    int y{0};
    int x{0};
};

inline std::vector<valley> valleys_of(const two_layer_network &net) {
    std::vector<valley> vs;
    for (int y = 1; y <= net.y_count; ++y) {
        const auto &nb = net.neighbors(y);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) vs.push_back({nb[i], y, nb[j]});
    }
    return vs;
}

inline std::int64_t intrusive_edge_count(const two_layer_network &net, const valley &v) {
    if (v.w >= v.x) throw validation_error("valley endpoints must satisfy w < x");
    const auto &nb = net.neighbors(v.y);
    if (!std::binary_search(nb.begin(), nb.end(), v.w) || !std::binary_search(nb.begin(), nb.end(), v.x))
        throw validation_error("valley edges not present in network");
    std::int64_t count = 0;
    for (const edge e : net.edges)
        if (e.y != v.y && v.w < e.x && e.x < v.x) ++count;
    return count;
}

}  // namespace oslcm

#endif
