#ifndef OSLCM_EXACT_HPP
#define OSLCM_EXACT_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "oslcm/core.hpp"
#include "oslcm/median.hpp"

namespace oslcm {

/// Search limits; zero means unlimited.
struct search_budget {
    std::uint64_t max_nodes{0};
    double max_seconds{0.0};
};

struct exact_result {
    y_order order;
    std::int64_t value{0};
    std::uint64_t nodes_explored{0};
    bool proven_optimal{false};
};

enum class decide_status { yes, no, unknown };

struct decide_result {
    decide_status status{decide_status::unknown};
    std::optional<y_order> witness;
    std::uint64_t nodes_explored{0};
};

namespace detail {

// Branch and bound over left-to-right prefixes of the Y order. Once a vertex
// is placed, every unplaced vertex ends up to its right, so the final
// crossing count of each placed edge is already exact: crossings with placed
// edges to its right plus, for each unplaced vertex, its neighbors strictly
// left of the edge's X position. The running maximum over placed edges is
// monotone along a branch, which makes it a sound pruning bound.
class bnb {
  public:
    explicit bnb(const two_layer_network &net) : net_(net), fw_(net.x_count) {
        const int yc = net.y_count;
        by_y_.assign(static_cast<std::size_t>(yc), {});
        for (std::size_t i = 0; i < net.edges.size(); ++i)
            by_y_[static_cast<std::size_t>(net.edges[i].y - 1)].push_back(i);

        // F_strict[x] = number of edges with X position < x
        f_strict_.assign(static_cast<std::size_t>(net.x_count) + 2, 0);
        for (const edge e : net.edges) ++f_strict_[static_cast<std::size_t>(e.x) + 1];
        for (std::size_t x = 1; x < f_strict_.size(); ++x) f_strict_[x] += f_strict_[x - 1];

        own_left_.assign(net.edges.size(), 0);
        for (int y = 1; y <= yc; ++y) {
            const auto &adj = net.neighbors(y);
            for (std::size_t pos = 0; pos < by_y_[static_cast<std::size_t>(y - 1)].size(); ++pos) {
                const std::size_t ei = by_y_[static_cast<std::size_t>(y - 1)][pos];
                own_left_[ei] = static_cast<std::int64_t>(
                    std::lower_bound(adj.begin(), adj.end(), net.edges[ei].x) - adj.begin());
            }
        }

        // branch candidates: non-isolated vertices, ordered by the median
        // heuristic so good incumbents appear early
        const median_assignment med = compute_medians(net);
        for (int y = 1; y <= yc; ++y)
            if (net.degree(y) > 0) candidates_.push_back(y);
        std::stable_sort(candidates_.begin(), candidates_.end(),
                         [&](int a, int b) { return med.median(a) < med.median(b); });
        for (int y = 1; y <= yc; ++y)
            if (net.degree(y) == 0) isolated_.push_back(y);

        // twin reduction: vertices with identical neighborhoods are
        // interchangeable; force ascending id within each twin class
        std::map<std::vector<int>, int> last_twin;
        twin_prev_.assign(static_cast<std::size_t>(yc) + 1, 0);
        for (int y = 1; y <= yc; ++y) {
            if (net.degree(y) == 0) continue;
            auto [it, inserted] = last_twin.try_emplace(net.neighbors(y), y);
            if (!inserted) {
                twin_prev_[static_cast<std::size_t>(y)] = it->second;
                it->second = y;
            }
        }

        placed_.assign(static_cast<std::size_t>(yc) + 1, false);
        prefix_.reserve(static_cast<std::size_t>(yc));
    }

    /// Minimize; returns best order found and whether optimality was proven.
    exact_result optimize(const search_budget &budget) {
        start_ = std::chrono::steady_clock::now();
        budget_ = budget;
        nodes_ = 0;
        out_of_budget_ = false;

        exact_result res;
        const y_order seed = heuristic_order(net_);
        best_value_ = compute_profile(net_, seed).local_crossing_number;
        best_order_ = seed.positions;
        decide_bound_ = -1;
        if (best_value_ > 0) descend(0);
        res.order.positions = best_order_;
        res.value = best_value_;
        res.nodes_explored = nodes_;
        res.proven_optimal = !out_of_budget_;
        return res;
    }

    /// Search for any order with local crossing number <= k.
    decide_result decide(std::int64_t k, const search_budget &budget) {
        start_ = std::chrono::steady_clock::now();
        budget_ = budget;
        nodes_ = 0;
        out_of_budget_ = false;

        decide_result res;
        const y_order seed = heuristic_order(net_);
        if (compute_profile(net_, seed).local_crossing_number <= k) {
            res.status = decide_status::yes;
            res.witness = seed;
            return res;
        }
        decide_bound_ = k;
        best_value_ = std::numeric_limits<std::int64_t>::max();
        best_order_.clear();
        const bool found = descend(0);
        res.nodes_explored = nodes_;
        if (found) {
            res.status = decide_status::yes;
            res.witness = y_order{best_order_};
        } else {
            res.status = out_of_budget_ ? decide_status::unknown : decide_status::no;
        }
        return res;
    }

  private:
    bool exhausted() {
        if (budget_.max_nodes > 0 && nodes_ >= budget_.max_nodes) return true;
        if (budget_.max_seconds > 0 && (nodes_ & 1023u) == 0) {
            const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_);
            if (elapsed.count() >= budget_.max_seconds) return true;
        }
        return false;
    }

    // returns true in decide mode once a witness is found
    bool descend(std::int64_t prefix_max) {
        if (prefix_.size() == candidates_.size()) {
            if (decide_bound_ >= 0) {
                best_order_ = full_order();
                return true;
            }
            if (prefix_max < best_value_) {
                best_value_ = prefix_max;
                best_order_ = full_order();
            }
            return false;
        }
        for (const int y : candidates_) {
            if (placed_[static_cast<std::size_t>(y)]) continue;
            const int prev = twin_prev_[static_cast<std::size_t>(y)];
            if (prev != 0 && !placed_[static_cast<std::size_t>(prev)]) continue;
            if (exhausted()) {
                out_of_budget_ = true;
                return false;
            }
            ++nodes_;

            // exact final counts for the edges of y: crossings with placed
            // edges right of x, plus unplaced neighbors strictly left of x
            std::int64_t new_max = prefix_max;
            const auto &eids = by_y_[static_cast<std::size_t>(y - 1)];
            for (const std::size_t ei : eids) {
                const int x = net_.edges[ei].x;
                const std::int64_t committed = placed_edges_ - fw_.prefix(x);
                const std::int64_t future =
                    f_strict_[static_cast<std::size_t>(x)] - fw_.prefix(x - 1) - own_left_[ei];
                new_max = std::max(new_max, committed + future);
            }
            const std::int64_t cutoff = decide_bound_ >= 0 ? decide_bound_ + 1 : best_value_;
            if (new_max >= cutoff) continue;

            place(y);
            const bool done = descend(new_max);
            unplace(y);
            if (done) return true;
        }
        return false;
    }

    void place(int y) {
        placed_[static_cast<std::size_t>(y)] = true;
        prefix_.push_back(y);
        for (const std::size_t ei : by_y_[static_cast<std::size_t>(y - 1)]) {
            fw_.add(net_.edges[ei].x, 1);
            ++placed_edges_;
        }
    }

    void unplace(int y) {
        placed_[static_cast<std::size_t>(y)] = false;
        prefix_.pop_back();
        for (const std::size_t ei : by_y_[static_cast<std::size_t>(y - 1)]) {
            fw_.add(net_.edges[ei].x, -1);
            --placed_edges_;
        }
    }

    std::vector<int> full_order() const {
        std::vector<int> order = prefix_;
        order.insert(order.end(), isolated_.begin(), isolated_.end());
        return order;
    }

    const two_layer_network &net_;
    fenwick fw_;
    std::vector<std::vector<std::size_t>> by_y_;
    std::vector<std::int64_t> f_strict_;
    std::vector<std::int64_t> own_left_;
    std::vector<int> candidates_;
    std::vector<int> isolated_;
    std::vector<int> twin_prev_;
    std::vector<char> placed_;
    std::vector<int> prefix_;
    std::int64_t placed_edges_{0};

    std::int64_t best_value_{0};
    std::vector<int> best_order_;
    std::int64_t decide_bound_{-1};

    search_budget budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_{0};
    bool out_of_budget_{false};
};

}  // namespace detail

/// Exact one-sided local crossing number by branch and bound, seeded with the
/// median heuristic. On budget exhaustion the best incumbent is returned with
/// proven_optimal = false.
inline exact_result exact_optimum(const two_layer_network &net, const search_budget &budget = {}) {
    if (net.y_count == 0) return {y_order{}, 0, 0, true};
    detail::bnb searcher(net);
    return searcher.optimize(budget);
}

/// Decision problem: is there an order whose drawing is k-planar? The witness
/// is re-verified against the crossing profile before being returned.
inline decide_result decide_k_planar(const two_layer_network &net, std::int64_t k,
                                     const search_budget &budget = {}) {
    if (k < 0) throw validation_error("k must be non-negative");
    if (net.y_count == 0) return {decide_status::yes, y_order{}, 0};
    detail::bnb searcher(net);
    decide_result res = searcher.decide(k, budget);
    if (res.status == decide_status::yes) {
        const auto check = compute_profile(net, *res.witness);
        if (check.local_crossing_number > k)
            throw std::logic_error("internal error: decide witness failed re-verification");
    }
    return res;
}

/// Ground-truth optimum by full enumeration of all |Y|! orders. Intended as a
/// test oracle; refuses networks above the cap.
inline exact_result brute_force_optimum(const two_layer_network &net, int y_cap = 9,
                                        count_mode mode = count_mode::fast) {
    if (net.y_count > y_cap)
        throw validation_error("brute force refused: y_count " + std::to_string(net.y_count) +
                               " exceeds cap " + std::to_string(y_cap));
    exact_result res;
    res.proven_optimal = true;
    y_order order;
    order.positions.resize(static_cast<std::size_t>(net.y_count));
    std::iota(order.positions.begin(), order.positions.end(), 1);
    res.value = std::numeric_limits<std::int64_t>::max();
    do {
        ++res.nodes_explored;
        const std::int64_t v = compute_profile(net, order, mode).local_crossing_number;
        if (v < res.value) {
            res.value = v;
            res.order = order;
        }
    } while (std::next_permutation(order.positions.begin(), order.positions.end()));
    return res;
}

}  // namespace oslcm

#endif
