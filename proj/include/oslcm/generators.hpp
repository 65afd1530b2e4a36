#ifndef OSLCM_GENERATORS_HPP
#define OSLCM_GENERATORS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "oslcm/core.hpp"

namespace oslcm {

/// Multiset S of 3n positive integers with target sum T = sum(S)/n.
struct three_partition_instance {
    std::vector<std::int64_t> s;
    int n{0};
    std::int64_t t{0};
    bool elements_distinct{false};
    bool bounds_hold{false};  // T/4 < s_i < T/2 for every i

    bool strict() const { return elements_distinct && bounds_hold; }
};

inline three_partition_instance make_three_partition(std::vector<std::int64_t> s) {
    if (s.empty() || s.size() % 3 != 0)
        throw validation_error("3-partition needs 3n elements, got " + std::to_string(s.size()));
    for (const std::int64_t v : s)
        if (v <= 0) throw validation_error("3-partition elements must be positive");
    three_partition_instance inst;
    inst.n = static_cast<int>(s.size() / 3);
    const std::int64_t total = std::accumulate(s.begin(), s.end(), std::int64_t{0});
    if (total % inst.n != 0)
        throw validation_error("element sum " + std::to_string(total) + " is not divisible by n=" +
                               std::to_string(inst.n));
    inst.t = total / inst.n;
    std::vector<std::int64_t> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    inst.elements_distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    inst.bounds_hold = true;
    for (const std::int64_t v : s)
        if (!(4 * v > inst.t && 2 * v < inst.t)) inst.bounds_hold = false;
    inst.s = std::move(s);
    return inst;
}

/// Symbolic vertex names of a generated instance, e.g. "b_3", "p''_1" for X
/// and "l", "u_2", "p'_1" for Y.
struct name_map {
    std::map<std::string, int> x;
    std::map<std::string, int> y;

    int x_of(const std::string &name) const {
        const auto it = x.find(name);
        if (it == x.end()) throw validation_error("unknown X vertex name: " + name);
        return it->second;
    }

    int y_of(const std::string &name) const {
        const auto it = y.find(name);
        if (it == y.end()) throw validation_error("unknown Y vertex name: " + name);
        return it->second;
    }
};

/// The hardness reduction instance together with its parameters.
struct reduction_artifacts {
    two_layer_network network;
    std::int64_t k{0};
    int n{0};
    std::int64_t t{0};
    std::vector<std::int64_t> s;
    bool strict{false};
    name_map names;
};

/// Builds the reduction instance for a 3-partition input: blocks B, Q_i and
/// separators p_i on the left, the A_i groups in the middle, and the mirrored
/// Q''_i, p''_i, B'' on the right; Y consists of l, r, the p'_i and the u_j.
/// Y ids: l = 1, p'_i = 1+i, u_j = n+j, r = 4n+1.
inline reduction_artifacts hardness_instance(const three_partition_instance &inst,
                                             bool require_strict = false) {
    if (require_strict && !inst.strict())
        throw validation_error("instance violates the strict 3-partition restrictions");
    const int n = inst.n;
    const std::int64_t t = inst.t;
    const std::int64_t k = static_cast<std::int64_t>(n) * n * t + (n - 1);

    reduction_artifacts art;
    art.k = k;
    art.n = n;
    art.t = t;
    art.s = inst.s;
    art.strict = inst.strict();

    int next_x = 0;
    const auto add_x = [&](const std::string &name) {
        art.names.x.emplace(name, ++next_x);
        return next_x;
    };

    std::vector<int> b(static_cast<std::size_t>(k + 1));
    for (std::int64_t j = 1; j <= k + 1; ++j)
        b[static_cast<std::size_t>(j - 1)] = add_x("b_" + std::to_string(j));
    std::vector<int> p(static_cast<std::size_t>(n));  // p[i-1], 1 <= i <= n-1
    std::vector<std::vector<int>> q(static_cast<std::size_t>(n));
    for (int i = 1; i <= n - 1; ++i) {
        p[static_cast<std::size_t>(i - 1)] = add_x("p_" + std::to_string(i));
        auto &qi = q[static_cast<std::size_t>(i - 1)];
        for (std::int64_t j = 1; j <= n * t; ++j)
            qi.push_back(add_x("q_" + std::to_string(i) + "_" + std::to_string(j)));
    }
    std::vector<std::vector<int>> a(static_cast<std::size_t>(3 * n));
    for (int i = 1; i <= 3 * n; ++i) {
        auto &ai = a[static_cast<std::size_t>(i - 1)];
        const std::int64_t group = static_cast<std::int64_t>(n) * inst.s[static_cast<std::size_t>(i - 1)];
        for (std::int64_t j = 1; j <= group; ++j)
            ai.push_back(add_x("a_" + std::to_string(i) + "_" + std::to_string(j)));
    }
    std::vector<std::vector<int>> qq(static_cast<std::size_t>(n));
    std::vector<int> pp(static_cast<std::size_t>(n));
    for (int i = 1; i <= n - 1; ++i) {
        auto &qqi = qq[static_cast<std::size_t>(i - 1)];
        for (std::int64_t j = 1; j <= n * t; ++j)
            qqi.push_back(add_x("q''_" + std::to_string(i) + "_" + std::to_string(j)));
        pp[static_cast<std::size_t>(i - 1)] = add_x("p''_" + std::to_string(i));
    }
    std::vector<int> bb(static_cast<std::size_t>(k + 1));
    for (std::int64_t j = 1; j <= k + 1; ++j)
        bb[static_cast<std::size_t>(j - 1)] = add_x("b''_" + std::to_string(j));

    const int y_l = 1;
    const int y_r = 4 * n + 1;
    art.names.y.emplace("l", y_l);
    art.names.y.emplace("r", y_r);
    for (int i = 1; i <= n - 1; ++i) art.names.y.emplace("p'_" + std::to_string(i), 1 + i);
    for (int j = 1; j <= 3 * n; ++j) art.names.y.emplace("u_" + std::to_string(j), n + j);

    std::vector<edge> edges;
    for (const int x : b) edges.push_back({x, y_l});
    for (int i = 1; i <= n - 1; ++i)
        for (const int x : q[static_cast<std::size_t>(i - 1)]) edges.push_back({x, y_l});
    for (int i = 1; i <= n - 1; ++i)
        for (const int x : qq[static_cast<std::size_t>(i - 1)]) edges.push_back({x, y_r});
    for (const int x : bb) edges.push_back({x, y_r});
    for (int i = 1; i <= n - 1; ++i) {
        edges.push_back({p[static_cast<std::size_t>(i - 1)], 1 + i});
        edges.push_back({pp[static_cast<std::size_t>(i - 1)], 1 + i});
    }
    for (int i = 1; i <= 3 * n; ++i)
        for (const int x : a[static_cast<std::size_t>(i - 1)]) edges.push_back({x, n + i});

    art.network = build_network(next_x, 4 * n + 1, std::move(edges));
    return art;
}

/// Certificate Y order for a valid partition, given as n triplets of 1-based
/// indices into S: l, then the u_j of the first triplet, p'_1, the second
/// triplet, ..., r. Within a triplet the u_j appear ascending by index.
inline y_order certificate_order(const reduction_artifacts &art,
                                 const std::vector<std::array<int, 3>> &partition) {
    const int n = art.n;
    if (static_cast<int>(partition.size()) != n)
        throw validation_error("partition must have n=" + std::to_string(n) + " triplets");
    std::vector<char> used(static_cast<std::size_t>(3 * n) + 1, 0);
    y_order order;
    order.positions.push_back(art.names.y_of("l"));
    for (int g = 0; g < n; ++g) {
        std::array<int, 3> trip = partition[static_cast<std::size_t>(g)];
        std::sort(trip.begin(), trip.end());
        std::int64_t sum = 0;
        for (const int j : trip) {
            if (j < 1 || j > 3 * n || used[static_cast<std::size_t>(j)])
                throw validation_error("partition is not a permutation of 1.." + std::to_string(3 * n));
            used[static_cast<std::size_t>(j)] = 1;
            sum += art.s[static_cast<std::size_t>(j - 1)];
        }
        if (sum != art.t)
            throw validation_error("triplet sum " + std::to_string(sum) + " differs from T=" +
                                   std::to_string(art.t));
        for (const int j : trip) order.positions.push_back(n + j);
        if (g < n - 1) order.positions.push_back(1 + (g + 1));
    }
    order.positions.push_back(art.names.y_of("r"));
    return order;
}

/// Finds all ways to split a 3n-multiset into n triplets of sum T; intended
/// for tiny n only (exhaustive).
inline std::vector<std::vector<std::array<int, 3>>> enumerate_partitions(
    const three_partition_instance &inst) {
    std::vector<std::vector<std::array<int, 3>>> found;
    std::vector<std::array<int, 3>> current;
    std::vector<char> used(inst.s.size() + 1, 0);
    const int total = static_cast<int>(inst.s.size());

    const auto value = [&](int j) { return inst.s[static_cast<std::size_t>(j - 1)]; };
    auto recurse = [&](auto &&self) -> void {
        int first = 0;
        for (int j = 1; j <= total; ++j)
            if (!used[static_cast<std::size_t>(j)]) {
                first = j;
                break;
            }
        if (first == 0) {
            found.push_back(current);
            return;
        }
        used[static_cast<std::size_t>(first)] = 1;
        for (int j2 = first + 1; j2 <= total; ++j2) {
            if (used[static_cast<std::size_t>(j2)]) continue;
            used[static_cast<std::size_t>(j2)] = 1;
            for (int j3 = j2 + 1; j3 <= total; ++j3) {
                if (used[static_cast<std::size_t>(j3)]) continue;
                if (value(first) + value(j2) + value(j3) != inst.t) continue;
                used[static_cast<std::size_t>(j3)] = 1;
                current.push_back({first, j2, j3});
                self(self);
                current.pop_back();
                used[static_cast<std::size_t>(j3)] = 0;
            }
            used[static_cast<std::size_t>(j2)] = 0;
        }
        used[static_cast<std::size_t>(first)] = 0;
    };
    recurse(recurse);
    return found;
}

enum class violation_kind { identity, y_before_l, y_after_r, swap_pprime };

struct violation {
    violation_kind kind{violation_kind::identity};
    int y{0};  // Y id for y_before_l / y_after_r; 0 picks u_1
    int i{0};  // swap_pprime: move p'_j in front of p'_i, i < j
    int j{0};
};

/// Builds an order exhibiting the named violation on top of a base order and
/// returns it with its local crossing number.
inline std::pair<y_order, std::int64_t> soundness_probe(const reduction_artifacts &art,
                                                        const violation &v, const y_order &base) {
    y_order probe = base;
    const auto move_to = [&](int y, bool front) {
        auto &pos = probe.positions;
        const auto it = std::find(pos.begin(), pos.end(), y);
        if (it == pos.end()) throw validation_error("vertex not present in base order");
        pos.erase(it);
        pos.insert(front ? pos.begin() : pos.end(), y);
    };
    switch (v.kind) {
        case violation_kind::identity: break;
        case violation_kind::y_before_l: {
            const int y = v.y != 0 ? v.y : art.names.y_of("u_1");
            if (y == art.names.y_of("l")) throw validation_error("y_before_l requires y != l");
            move_to(y, true);
            break;
        }
        case violation_kind::y_after_r: {
            const int y = v.y != 0 ? v.y : art.names.y_of("u_1");
            if (y == art.names.y_of("r")) throw validation_error("y_after_r requires y != r");
            move_to(y, false);
            break;
        }
        case violation_kind::swap_pprime: {
            if (!(1 <= v.i && v.i < v.j && v.j <= art.n - 1))
                throw validation_error("swap_pprime needs 1 <= i < j <= n-1");
            auto &pos = probe.positions;
            const int pi = art.names.y_of("p'_" + std::to_string(v.i));
            const int pj = art.names.y_of("p'_" + std::to_string(v.j));
            pos.erase(std::find(pos.begin(), pos.end(), pj));
            pos.insert(std::find(pos.begin(), pos.end(), pi), pj);
            break;
        }
    }
    const std::int64_t value = compute_profile(art.network, probe).local_crossing_number;
    return {std::move(probe), value};
}

/// The lower-bound family G_k on X = {x_1..x_{3k+3}} and Y = {u, v, w}
/// (ids 1, 2, 3).
struct tightness_artifacts {
    two_layer_network network;
    int k{0};
    name_map names;
};

inline tightness_artifacts tightness_instance(int k) {
    if (k < 1) throw validation_error("tightness family needs k >= 1");
    tightness_artifacts art;
    art.k = k;
    const int x_count = 3 * k + 3;
    for (int i = 1; i <= x_count; ++i) art.names.x.emplace("x_" + std::to_string(i), i);
    const int u = 1;
    const int v = 2;
    const int w = 3;
    art.names.y = {{"u", u}, {"v", v}, {"w", w}};

    std::vector<edge> edges;
    for (int x = 1; x <= k; ++x) edges.push_back({x, u});
    for (int x = k + 2; x <= 2 * k + 2; ++x) edges.push_back({x, u});
    edges.push_back({k, v});
    edges.push_back({k + 1, v});
    edges.push_back({2 * k + 3, v});
    for (int x = k + 4; x <= 2 * k + 2; ++x) edges.push_back({x, w});
    for (int x = 2 * k + 4; x <= 3 * k + 3; ++x) edges.push_back({x, w});

    art.network = build_network(x_count, 3, std::move(edges));
    return art;
}

/// Uniform degree range for random instances.
struct degree_range {
    int min_deg{1};
    int max_deg{1};
};

namespace detail {

inline std::uint64_t bounded(std::mt19937_64 &rng, std::uint64_t n) {
    return n == 0 ? 0 : rng() % n;  // bias is negligible for the sizes used here
}

}  // namespace detail

/// Seed-deterministic random network: each Y vertex gets a uniform degree in
/// the given range and that many distinct X neighbors.
inline two_layer_network random_instance(int x_count, int y_count, degree_range deg,
                                         std::uint64_t seed) {
    if (deg.min_deg < 0 || deg.min_deg > deg.max_deg)
        throw validation_error("invalid degree range");
    if (deg.max_deg > x_count)
        throw validation_error("requested degree " + std::to_string(deg.max_deg) +
                               " exceeds x_count " + std::to_string(x_count));
    std::mt19937_64 rng(seed);
    std::vector<edge> edges;
    std::vector<int> pool(static_cast<std::size_t>(x_count));
    for (int y = 1; y <= y_count; ++y) {
        const int d = deg.min_deg +
                      static_cast<int>(detail::bounded(rng, static_cast<std::uint64_t>(deg.max_deg - deg.min_deg + 1)));
        std::iota(pool.begin(), pool.end(), 1);
        for (int i = 0; i < d; ++i) {
            const std::size_t pick =
                static_cast<std::size_t>(i) +
                static_cast<std::size_t>(detail::bounded(rng, static_cast<std::uint64_t>(x_count - i)));
            std::swap(pool[static_cast<std::size_t>(i)], pool[pick]);
        }
        std::sort(pool.begin(), pool.begin() + d);
        for (int i = 0; i < d; ++i) edges.push_back({pool[static_cast<std::size_t>(i)], y});
    }
    return build_network(x_count, y_count, std::move(edges));
}

}  // namespace oslcm

#endif
