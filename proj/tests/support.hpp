#ifndef OSLCM_TESTS_SUPPORT_HPP
#define OSLCM_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "oslcm/core.hpp"
#include "oslcm/generators.hpp"

namespace testsupport {

// Definition-level recount, kept independent of the library counting paths:
// two edges cross exactly when their X and Y endpoints are oppositely
// ordered, so the sign product decides each pair.
inline std::vector<std::int64_t> reference_counts(const oslcm::two_layer_network &net,
                                                  const oslcm::y_order &order) {
    std::vector<int> pos(static_cast<std::size_t>(net.y_count) + 1, -1);
    for (std::size_t i = 0; i < order.positions.size(); ++i)
        pos[static_cast<std::size_t>(order.positions[i])] = static_cast<int>(i);
    std::vector<std::int64_t> counts(net.edges.size(), 0);
    for (std::size_t i = 0; i < net.edges.size(); ++i) {
        for (std::size_t j = i + 1; j < net.edges.size(); ++j) {
            const auto a = net.edges[i];
            const auto b = net.edges[j];
            const long dx = a.x - b.x;
            const long dp = pos[static_cast<std::size_t>(a.y)] - pos[static_cast<std::size_t>(b.y)];
            if (dx * dp < 0) {
                ++counts[i];
                ++counts[j];
            }
        }
    }
    return counts;
}

inline std::int64_t reference_lcn(const oslcm::two_layer_network &net, const oslcm::y_order &order) {
    std::int64_t best = 0;
    for (const std::int64_t c : reference_counts(net, order)) best = std::max(best, c);
    return best;
}

inline oslcm::y_order shuffled_order(int y_count, std::mt19937_64 &rng) {
    oslcm::y_order order;
    order.positions.resize(static_cast<std::size_t>(y_count));
    std::iota(order.positions.begin(), order.positions.end(), 1);
    for (std::size_t i = order.positions.size(); i > 1; --i)
        std::swap(order.positions[i - 1], order.positions[rng() % i]);
    return order;
}

inline oslcm::y_order order_of(std::initializer_list<int> ids) {
    return oslcm::y_order{std::vector<int>(ids)};
}

}  // namespace testsupport

#endif
