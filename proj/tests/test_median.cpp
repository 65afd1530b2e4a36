#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oslcm/generators.hpp"
#include "oslcm/median.hpp"
#include "support.hpp"

using namespace oslcm;
using testsupport::order_of;

namespace {

// left/right edge counts of y under an assignment, median edges excluded
std::pair<int, int> side_counts(const two_layer_network &net, const median_assignment &a, int y) {
    int left = 0;
    int right = 0;
    for (const int x : net.neighbors(y)) {
        if (x < a.median(y)) ++left;
        if (x > a.median(y)) ++right;
    }
    return {left, right};
}

}  // namespace

TEST_CASE("median choice per degree") {
    SECTION("degree 2 rounds up to the second neighbor") {
        const two_layer_network net = build_network(5, 1, {{2, 1}, {4, 1}});
        CHECK(compute_medians(net).median(1) == 4);
        CHECK(compute_medians(net, median_rule::floor_generic).median(1) == 2);
        CHECK(compute_medians(net, median_rule::ceil_generic).median(1) == 4);
    }
    SECTION("degree 5 takes the middle neighbor") {
        const two_layer_network net =
            build_network(5, 1, {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}});
        const median_assignment a = compute_medians(net);
        CHECK(a.median(1) == 3);
        CHECK(side_counts(net, a, 1) == std::pair<int, int>{2, 2});
    }
    SECTION("degree 4 takes the second neighbor, one more right than left") {
        const two_layer_network net = build_network(4, 1, {{1, 1}, {2, 1}, {3, 1}, {4, 1}});
        const median_assignment a = compute_medians(net);
        CHECK(a.median(1) == 2);
        CHECK(side_counts(net, a, 1) == std::pair<int, int>{1, 2});
        CHECK(compute_medians(net, median_rule::ceil_generic).median(1) == 3);
    }
    SECTION("degree 1") {
        const two_layer_network net = build_network(3, 1, {{2, 1}});
        CHECK(compute_medians(net).median(1) == 2);
    }
}

TEST_CASE("vertex classes") {
    const two_layer_network net = build_network(
        6, 5, {{1, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}, {3, 3}, {1, 4}, {2, 4}, {3, 4}, {4, 4}});
    const median_assignment a = compute_medians(net);
    CHECK(a.cls(1) == vertex_class::odd);
    CHECK(a.cls(2) == vertex_class::two);
    CHECK(a.cls(3) == vertex_class::odd);
    CHECK(a.cls(4) == vertex_class::four_plus);
    CHECK(a.cls(5) == vertex_class::isolated);
    CHECK(a.median(5) == 0);
}

TEST_CASE("edge classification") {
    SECTION("2-vertex: heavy left edge plus median edge") {
        const two_layer_network net = build_network(4, 1, {{1, 1}, {3, 1}});
        const edge_classification c = classify_edges(net, compute_medians(net));
        CHECK(c.cls[0] == edge_class::heavy);
        CHECK(c.side[0] == edge_side::left);
        CHECK(c.cls[1] == edge_class::median_edge);
        CHECK(c.side[1] == edge_side::median);
        CHECK(c.heavy_neighbor[0] == 1);
    }
    SECTION("degree-1 vertex: the only edge is the median edge") {
        const two_layer_network net = build_network(2, 1, {{2, 1}});
        const edge_classification c = classify_edges(net, compute_medians(net));
        CHECK(c.cls[0] == edge_class::median_edge);
    }
    SECTION("degree-3 vertex: light left, median, light right") {
        const two_layer_network net = build_network(3, 1, {{1, 1}, {2, 1}, {3, 1}});
        const edge_classification c = classify_edges(net, compute_medians(net));
        CHECK(c.cls[0] == edge_class::light);
        CHECK(c.side[0] == edge_side::left);
        CHECK(c.cls[1] == edge_class::median_edge);
        CHECK(c.cls[2] == edge_class::light);
        CHECK(c.side[2] == edge_side::right);
        CHECK(c.heavy_neighbor[0] == 0);
    }
}

TEST_CASE("classification identities hold on random instances") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 200; ++trial) {
        const two_layer_network net = random_instance(10, 7, {1, 6}, rng());
        const median_assignment a = compute_medians(net);
        const edge_classification c = classify_edges(net, a);
        for (int y = 1; y <= net.y_count; ++y) {
            const auto [left, right] = side_counts(net, a, y);
            switch (a.cls(y)) {
                case vertex_class::two:
                    CHECK(left == 1);
                    CHECK(right == 0);
                    break;
                case vertex_class::odd: CHECK(left == right); break;
                case vertex_class::four_plus:
                    CHECK(left >= 1);
                    CHECK(right == left + 1);
                    break;
                case vertex_class::isolated: break;
            }
            int median_edges = 0;
            for (std::size_t e = 0; e < net.edges.size(); ++e)
                if (net.edges[e].y == y && c.cls[e] == edge_class::median_edge) ++median_edges;
            CHECK(median_edges == (net.degree(y) > 0 ? 1 : 0));
        }
        for (std::size_t e = 0; e < net.edges.size(); ++e) {
            const int y = net.edges[e].y;
            if (c.cls[e] == edge_class::heavy) {
                CHECK(a.cls(y) == vertex_class::two);
                CHECK(c.side[e] == edge_side::left);
                CHECK(c.heavy_neighbor[y - 1] == net.edges[e].x);
            }
            if (c.cls[e] == edge_class::light) CHECK(net.degree(y) >= 3);
        }
    }
}

TEST_CASE("bunch membership") {
    SECTION("vertex with no bunch") {
        const two_layer_network net = build_network(3, 1, {{2, 1}});
        CHECK(bunch(net, compute_medians(net), 3).empty());
        CHECK(bunch(net, compute_medians(net), 2) == std::vector<int>{1});
    }
    SECTION("G_k medians form singleton bunches") {
        const int k = 2;
        const tightness_artifacts art = tightness_instance(k);
        const median_assignment a = compute_medians(art.network);
        CHECK(bunch(art.network, a, k + 2) == std::vector<int>{art.names.y_of("u")});
        CHECK(bunch(art.network, a, k + 1) == std::vector<int>{art.names.y_of("v")});
        CHECK(bunch(art.network, a, 2 * k + 4) == std::vector<int>{art.names.y_of("w")});
    }
    SECTION("two degree-1 vertices on the same x share a bunch") {
        const two_layer_network net = build_network(3, 2, {{2, 1}, {2, 2}});
        CHECK(bunch(net, compute_medians(net), 2) == std::vector<int>{1, 2});
    }
}

TEST_CASE("heuristic order on G_2 is v, u, w") {
    const tightness_artifacts art = tightness_instance(2);
    const int u = art.names.y_of("u");
    const int v = art.names.y_of("v");
    const int w = art.names.y_of("w");
    for (const median_rule rule :
         {median_rule::heuristic_a, median_rule::floor_generic, median_rule::ceil_generic})
        for (const tie_break ties : {tie_break::paper, tie_break::ew_odd_first})
            CHECK(heuristic_order(art.network, rule, ties).positions == std::vector<int>{v, u, w});
}

TEST_CASE("bunch tie-breaking") {
    SECTION("2-vertices ascend by heavy neighbor") {
        // y1 and y2 both have median 8; y2's heavy neighbor is further left
        const two_layer_network net = build_network(10, 2, {{5, 1}, {8, 1}, {3, 2}, {8, 2}});
        CHECK(heuristic_order(net).positions == std::vector<int>{2, 1});
    }
    SECTION("4-plus vertices ascend by degree") {
        const two_layer_network net = build_network(
            11, 2,
            {{3, 1}, {4, 1}, {6, 1}, {9, 1}, {10, 1}, {11, 1}, {5, 2}, {6, 2}, {7, 2}, {8, 2}});
        const median_assignment a = compute_medians(net);
        REQUIRE(a.median(1) == 6);
        REQUIRE(a.median(2) == 6);
        CHECK(heuristic_order(net).positions == std::vector<int>{2, 1});
    }
    SECTION("class blocks: 2-vertices, then odd, then 4-plus") {
        // y1: 4-plus with median 6, y2: odd with median 6, y3: 2-vertex with median 6
        const two_layer_network net = build_network(
            9, 3, {{4, 1}, {6, 1}, {7, 1}, {8, 1}, {5, 2}, {6, 2}, {9, 2}, {2, 3}, {6, 3}});
        const median_assignment a = compute_medians(net);
        REQUIRE(a.median(1) == 6);
        REQUIRE(a.median(2) == 6);
        REQUIRE(a.median(3) == 6);
        CHECK(heuristic_order(net).positions == std::vector<int>{3, 2, 1});
    }
    SECTION("ew-odd-first puts odd degrees before even degrees") {
        const two_layer_network net = build_network(
            9, 3, {{4, 1}, {6, 1}, {7, 1}, {8, 1}, {5, 2}, {6, 2}, {9, 2}, {2, 3}, {6, 3}});
        CHECK(heuristic_order(net, median_rule::heuristic_a, tie_break::ew_odd_first).positions ==
              std::vector<int>{2, 1, 3});
    }
    SECTION("residual ties fall back to ascending Y id") {
        const two_layer_network net = build_network(3, 3, {{2, 1}, {2, 2}, {2, 3}});
        CHECK(heuristic_order(net).positions == std::vector<int>{1, 2, 3});
    }
}

TEST_CASE("isolated vertices go last") {
    const two_layer_network net = build_network(3, 4, {{2, 2}, {1, 4}});
    CHECK(heuristic_order(net).positions == std::vector<int>{4, 2, 1, 3});
}

TEST_CASE("heuristic order is deterministic") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 20; ++trial) {
        const std::uint64_t seed = rng();
        const two_layer_network net1 = random_instance(12, 8, {1, 6}, seed);
        const two_layer_network net2 = random_instance(12, 8, {1, 6}, seed);
        CHECK(heuristic_order(net1).positions == heuristic_order(net2).positions);
    }
}

TEST_CASE("no two median edges cross in the heuristic drawing") {
    std::mt19937_64 rng(2025);
    for (int trial = 0; trial < 150; ++trial) {
        const two_layer_network net = random_instance(11, 7, {1, 6}, rng());
        for (const median_rule rule :
             {median_rule::heuristic_a, median_rule::floor_generic, median_rule::ceil_generic}) {
            const median_assignment a = compute_medians(net, rule);
            const edge_classification c = classify_edges(net, a);
            const y_order order = heuristic_order(net, rule);
            for (std::size_t i = 0; i < net.edges.size(); ++i) {
                if (c.cls[i] != edge_class::median_edge) continue;
                for (std::size_t j = i + 1; j < net.edges.size(); ++j) {
                    if (c.cls[j] != edge_class::median_edge) continue;
                    CHECK_FALSE(edges_cross(net, i, j, order));
                }
            }
        }
    }
}

TEST_CASE("valley enumeration and intrusive counts") {
    SECTION("adjacent valley endpoints leave no room") {
        const two_layer_network net = build_network(2, 2, {{1, 1}, {2, 1}, {1, 2}, {2, 2}});
        const auto vs = valleys_of(net);
        REQUIRE(vs.size() == 2);
        CHECK(vs[0].w == 1);
        CHECK(vs[0].y == 1);
        CHECK(vs[0].x == 2);
        CHECK(intrusive_edge_count(net, vs[0]) == 0);
    }
    SECTION("an edge strictly inside the valley is intrusive") {
        const two_layer_network net = build_network(3, 2, {{1, 1}, {3, 1}, {2, 2}});
        const auto vs = valleys_of(net);
        REQUIRE(vs.size() == 1);
        CHECK(intrusive_edge_count(net, {1, 1, 3}) == 1);
    }
    SECTION("edges of the valley vertex itself are not intrusive") {
        const two_layer_network net = build_network(3, 1, {{1, 1}, {2, 1}, {3, 1}});
        CHECK(intrusive_edge_count(net, {1, 1, 3}) == 0);
    }
    SECTION("invalid valleys are rejected") {
        const two_layer_network net = build_network(3, 2, {{1, 1}, {3, 1}, {2, 2}});
        CHECK_THROWS_AS(intrusive_edge_count(net, {3, 1, 1}), validation_error);
        CHECK_THROWS_AS(intrusive_edge_count(net, {1, 2, 3}), validation_error);
    }
    SECTION("count matches a direct recount on random instances") {
        std::mt19937_64 rng(8080);
        for (int trial = 0; trial < 50; ++trial) {
            const two_layer_network net = random_instance(9, 5, {1, 5}, rng());
            for (const valley &v : valleys_of(net)) {
                std::int64_t direct = 0;
                for (const edge e : net.edges)
                    if (e.y != v.y && v.w < e.x && e.x < v.x) ++direct;
                CHECK(intrusive_edge_count(net, v) == direct);
            }
        }
    }
}
