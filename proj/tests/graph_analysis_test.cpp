#include "ecg/graph_analysis.hpp"

#include "ecg/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace ecg;

namespace {

TrafficPattern odd_hole_pattern() {
    TrafficPattern p;
    p.shape = {2, 3};
    p.flows.push_back({1, {1, 2, 3}, Rational(1, 2)});
    p.flows.push_back({1, {1}, Rational(1, 2)});
    p.flows.push_back({2, {2}, Rational(1, 2)});
    p.flows.push_back({2, {3}, Rational(1, 2)});
    return p;
}

ConflictGraph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
    return make_abstract_graph(n, edges);
}

std::vector<int> labels_to_indices(const ConflictGraph& g,
                                   const std::vector<std::string>& labels) {
    std::vector<int> out;
    for (const auto& label : labels) out.push_back(g.find_vertex(label));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_SUITE("graph_analysis") {

TEST_CASE("maximal cliques of G(2,3): six input cliques and three output columns") {
    const KnGraph kn = build_kn_graph(2, 3);
    const auto cliques = maximal_cliques(kn.graph);
    REQUIRE(cliques.size() == 9);

    std::set<std::vector<int>> expected;
    for (int i = 1; i <= 2; ++i) {
        for (int j = 1; j <= 3; ++j) {
            auto clique = kn.unicast_row(i);
            clique.push_back(kn.broadcast_vertex(i, j));
            std::sort(clique.begin(), clique.end());
            expected.insert(clique);
        }
    }
    for (int j = 1; j <= 3; ++j) {
        auto clique = kn.unicast_column(j);
        const auto broadcasts = kn.broadcast_column(j);
        clique.insert(clique.end(), broadcasts.begin(), broadcasts.end());
        std::sort(clique.begin(), clique.end());
        expected.insert(clique);
    }
    CHECK(std::set<std::vector<int>>(cliques.begin(), cliques.end()) == expected);
}

TEST_CASE("maximal cliques: triangle and edgeless graph") {
    const auto triangle = maximal_cliques(make_abstract_graph(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(triangle == std::vector<std::vector<int>>{{0, 1, 2}});

    const auto singletons = maximal_cliques(make_abstract_graph(3, {}));
    CHECK(singletons == std::vector<std::vector<int>>{{0}, {1}, {2}});
}

TEST_CASE("maximal stable sets of the odd hole pattern graph") {
    const ConflictGraph g = build_conflict_graph(odd_hole_pattern());
    const auto sets = maximal_stable_sets(g);
    std::set<std::vector<int>> expected;
    expected.insert(labels_to_indices(g, {"b11", "b12", "b13"}));
    expected.insert(labels_to_indices(g, {"u11", "u22"}));
    expected.insert(labels_to_indices(g, {"u11", "u23"}));
    expected.insert(labels_to_indices(g, {"b11", "b12", "u23"}));
    expected.insert(labels_to_indices(g, {"b11", "b13", "u22"}));
    CHECK(std::set<std::vector<int>>(sets.begin(), sets.end()) == expected);
}

TEST_CASE("maximal stable sets: small classics") {
    const auto k3 = maximal_stable_sets(make_abstract_graph(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(k3 == std::vector<std::vector<int>>{{0}, {1}, {2}});

    const auto c5 = maximal_stable_sets(cycle(5));
    CHECK(c5.size() == 5);
    for (const auto& s : c5) CHECK(s.size() == 2);
}

TEST_CASE("stable sets match the subset-scan oracle") {
    for (unsigned seed = 300; seed < 330; ++seed) {
        const ConflictGraph g = build_conflict_graph(oracle::random_pattern(seed));
        if (g.vertex_count() > 14) continue;
        CHECK(maximal_stable_sets(g) == oracle::subset_scan_stable_sets(g));
    }
}

TEST_CASE("stable sets are clique duals") {
    for (unsigned seed = 330; seed < 360; ++seed) {
        const ConflictGraph g = build_conflict_graph(oracle::random_pattern(seed));
        CHECK(maximal_stable_sets(g) == maximal_cliques(complement(g)));
    }
}

TEST_CASE("every reported set satisfies its definition") {
    for (unsigned seed = 360; seed < 380; ++seed) {
        const ConflictGraph g = build_conflict_graph(oracle::random_pattern(seed));
        for (const auto& clique : maximal_cliques(g)) {
            CHECK(oracle::is_clique(g, clique));
        }
        for (const auto& stable : maximal_stable_sets(g)) {
            CHECK(oracle::is_stable_set(g, stable));
        }
    }
}

TEST_CASE("max weight clique") {
    const ConflictGraph g = build_conflict_graph(odd_hole_pattern());

    SUBCASE("enhanced weights of the odd hole pattern reach exactly 1") {
        const WeightVector w(6, Rational(1, 2));
        const auto [value, clique] = max_weight_clique(g, w);
        CHECK(value == 1);
        CHECK(oracle::is_clique(g, clique));
        CHECK(clique.size() == 2);
    }
    SUBCASE("zero weights give zero") {
        const auto [value, clique] = max_weight_clique(g, WeightVector(6, Rational(0)));
        CHECK(value == 0);
    }
    SUBCASE("overloaded input shows up as clique weight above 1") {
        const KnGraph kn = build_kn_graph(2, 3);
        WeightVector w(12, Rational(0));
        for (int v : kn.unicast_row(1)) w[v] = Rational(1, 2);  // input load 3/2
        const auto [value, clique] = max_weight_clique(kn.graph, w);
        CHECK(value == Rational(3, 2));
    }
    SUBCASE("missing weights are an error") {
        CHECK_THROWS_AS(max_weight_clique(g, WeightVector(3, Rational(1))), ValidationError);
    }
}

TEST_CASE("find_odd_hole") {
    SUBCASE("odd hole pattern: the documented 5-hole, lexicographically least") {
        const ConflictGraph g = build_conflict_graph(odd_hole_pattern());
        const auto hole = find_odd_hole(g);
        REQUIRE(hole.has_value());
        std::vector<std::string> labels;
        for (int v : *hole) labels.push_back(g.vertex(v).label);
        CHECK(labels == std::vector<std::string>{"u11", "b12", "u22", "u23", "b13"});
        CHECK(oracle::is_chordless_cycle(g, *hole));
    }
    SUBCASE("bipartite graphs have none") {
        CHECK_FALSE(find_odd_hole(cycle(6)).has_value());
        // complete bipartite K(3,3)
        std::vector<std::pair<int, int>> edges;
        for (int a = 0; a < 3; ++a) {
            for (int b = 3; b < 6; ++b) edges.push_back({a, b});
        }
        CHECK_FALSE(find_odd_hole(make_abstract_graph(6, edges)).has_value());
    }
    SUBCASE("7-cycle is its own certificate") {
        const auto hole = find_odd_hole(cycle(7));
        REQUIRE(hole.has_value());
        CHECK(*hole == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
    }
    SUBCASE("triangles are not holes") {
        CHECK_FALSE(find_odd_hole(cycle(3)).has_value());
    }
    SUBCASE("a chord kills the 5-cycle") {
        auto g = cycle(5);
        g.add_edge(0, 2);
        CHECK_FALSE(find_odd_hole(g).has_value());
    }
}

TEST_CASE("is_perfect") {
    SUBCASE("unicast graph of 2x3 is perfect") {
        const KnGraph kn = build_kn_graph(2, 3);
        const auto verdict = is_perfect(induced_subgraph(kn.graph, kn.all_unicasts()));
        CHECK(verdict.perfect);
        CHECK(verdict.certificate == PerfectionVerdict::Certificate::none);
    }
    SUBCASE("odd hole pattern graph is imperfect with an odd-hole certificate") {
        const ConflictGraph g = build_conflict_graph(odd_hole_pattern());
        const auto verdict = is_perfect(g);
        CHECK_FALSE(verdict.perfect);
        CHECK(verdict.certificate == PerfectionVerdict::Certificate::odd_hole);
        CHECK(verdict.cycle.size() == 5);
        CHECK(oracle::is_chordless_cycle(g, verdict.cycle));
    }
    SUBCASE("5-cycle is the smallest imperfect graph") {
        const auto verdict = is_perfect(cycle(5));
        CHECK_FALSE(verdict.perfect);
        CHECK(verdict.certificate == PerfectionVerdict::Certificate::odd_hole);
    }
    SUBCASE("complement of the 7-cycle is an odd anti-hole") {
        const auto verdict = is_perfect(complement(cycle(7)));
        CHECK_FALSE(verdict.perfect);
        CHECK(verdict.certificate == PerfectionVerdict::Certificate::odd_anti_hole);
        CHECK(oracle::is_chordless_cycle(complement(complement(cycle(7))), verdict.cycle));
    }
    SUBCASE("perfection agrees with its complement on small samples") {
        for (unsigned seed = 400; seed < 420; ++seed) {
            const ConflictGraph g = build_conflict_graph(oracle::random_pattern(seed));
            CHECK(is_perfect(g).perfect == is_perfect(complement(g)).perfect);
        }
    }
}

TEST_CASE("size limits are enforced and overridable") {
    const ConflictGraph big = build_kn_graph(5, 5).graph;  // 50 vertices
    CHECK_THROWS_AS(maximal_cliques(big), LimitError);
    CHECK_THROWS_AS(find_odd_hole(big), LimitError);
    CHECK_THROWS_AS(is_perfect(big), LimitError);
    CHECK_NOTHROW(maximal_cliques(big, {64}));
}

}  // TEST_SUITE
