#include "ecg/region_speedup.hpp"

#include "ecg/errors.hpp"
#include "ecg/kn_bounds.hpp"
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

TrafficPattern coded_broadcast_pattern(int n) {
    TrafficPattern p;
    p.shape = {2, n};
    std::vector<int> all;
    for (int j = 1; j <= n; ++j) all.push_back(j);
    p.flows.push_back({1, all, Rational(n - 1, n)});
    for (int j = 1; j <= n; ++j) p.flows.push_back({2, {j}, Rational(1, n)});
    return p;
}

ConflictGraph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
    return make_abstract_graph(n, edges);
}

/// Exact feasibility of a schedule: entries are stable sets, coefficients sum
/// to the value, and every vertex is covered at least to its weight.
void check_schedule(const ConflictGraph& g, const WeightVector& weights,
                    const SpeedupResult& result) {
    Rational total = 0;
    std::vector<Rational> covered(g.vertex_count(), Rational(0));
    for (const auto& entry : result.schedule) {
        CHECK(oracle::is_stable_set(g, entry.vertices));
        CHECK(entry.coefficient > 0);
        total += entry.coefficient;
        for (int v : entry.vertices) covered[v] += entry.coefficient;
    }
    CHECK(total == result.value);
    for (int v = 0; v < g.vertex_count(); ++v) {
        CHECK(covered[v] >= weights[v]);
    }
}

}  // namespace

TEST_SUITE("region_speedup") {

TEST_CASE("fractional chromatic number of the odd hole pattern graph is 5/4") {
    const TrafficPattern p = validate_pattern(odd_hole_pattern());
    const ConflictGraph g = build_conflict_graph(p);
    const WeightVector w = enhance(p);
    const SpeedupResult result = fractional_chromatic(g, w);
    CHECK(result.value == Rational(5, 4));
    check_schedule(g, w, result);
}

TEST_CASE("fractional chromatic number basics") {
    SUBCASE("zero weights need no schedule at all") {
        const SpeedupResult r = fractional_chromatic(cycle(5), WeightVector(5, Rational(0)));
        CHECK(r.value == 0);
    }
    SUBCASE("unit-weight 5-cycle needs 5/2") {
        const WeightVector w(5, Rational(1));
        const SpeedupResult r = fractional_chromatic(cycle(5), w);
        CHECK(r.value == Rational(5, 2));
        check_schedule(cycle(5), w, r);
        // independently computed by the bounded-denominator cover search
        CHECK(oracle::brute_force_fractional_cover(cycle(5), w) == Rational(5, 2));
    }
    SUBCASE("empty graph") {
        const SpeedupResult r = fractional_chromatic(ConflictGraph(), {});
        CHECK(r.value == 0);
    }
}

TEST_CASE("LP value equals the bounded-denominator oracle on pattern graphs") {
    // Rate denominators stay at or below 6 so that the optimal cover's
    // common denominator stays within the oracle's cap of 60.
    int tested = 0;
    for (unsigned seed = 500; seed < 560; ++seed) {
        const TrafficPattern p = oracle::random_pattern(seed, 3, 3, 6);
        const ConflictGraph g = build_conflict_graph(p);
        if (g.vertex_count() > 7) continue;
        const WeightVector w = enhance(p);
        CHECK(fractional_chromatic(g, w).value == oracle::brute_force_fractional_cover(g, w));
        ++tested;
    }
    CHECK(tested >= 10);
}

TEST_CASE("in_stab") {
    SUBCASE("5-cycle at 2/5 is inside") {
        CHECK(in_stab(cycle(5), WeightVector(5, Rational(2, 5))));
    }
    SUBCASE("5-cycle at 1/2 is outside") {
        CHECK_FALSE(in_stab(cycle(5), WeightVector(5, Rational(1, 2))));
    }
    SUBCASE("the zero vector is inside") {
        CHECK(in_stab(cycle(5), WeightVector(5, Rational(0))));
    }
}

TEST_CASE("in_qstab") {
    SUBCASE("5-cycle at 1/2 satisfies every edge inequality") {
        CHECK(in_qstab(cycle(5), WeightVector(5, Rational(1, 2))));
    }
    SUBCASE("enhanced odd hole pattern is admissible hence inside") {
        const TrafficPattern p = validate_pattern(odd_hole_pattern());
        CHECK(in_qstab(build_conflict_graph(p), enhance(p)));
    }
    SUBCASE("a vertex weight of 2 violates its singleton clique") {
        WeightVector w(5, Rational(0));
        w[3] = 2;
        CHECK_FALSE(in_qstab(cycle(5), w));
    }
}

TEST_CASE("pattern_speedup") {
    SUBCASE("odd hole pattern needs speedup 5/4") {
        const SpeedupResult r = pattern_speedup(odd_hole_pattern());
        CHECK(r.value == Rational(5, 4));
    }
    SUBCASE("coded broadcast pattern is achievable at speedup 1") {
        for (int n = 3; n <= 6; ++n) {
            CHECK(pattern_speedup(coded_broadcast_pattern(n)).value == 1);
        }
    }
    SUBCASE("all-zero rates need nothing") {
        TrafficPattern p;
        p.shape = {2, 2};
        p.flows.push_back({1, {1, 2}, Rational(0)});
        CHECK(pattern_speedup(p).value == 0);
    }
    SUBCASE("empty pattern") {
        TrafficPattern p;
        p.shape = {1, 1};
        CHECK(pattern_speedup(p).value == 0);
    }
}

TEST_CASE("monotonicity of the fractional chromatic number") {
    const ConflictGraph g = build_conflict_graph(odd_hole_pattern());
    for (unsigned seed = 600; seed < 615; ++seed) {
        WeightVector lo = oracle::random_weights(seed, g.vertex_count());
        WeightVector hi = lo;
        const WeightVector bump = oracle::random_weights(seed + 1000, g.vertex_count());
        for (std::size_t i = 0; i < hi.size(); ++i) hi[i] += bump[i];
        CHECK(fractional_chromatic(g, lo).value <= fractional_chromatic(g, hi).value);
    }
}

TEST_CASE("clique weight sandwiches the fractional chromatic number") {
    for (unsigned seed = 650; seed < 680; ++seed) {
        const TrafficPattern p = oracle::random_pattern(seed);
        const ConflictGraph g = build_conflict_graph(p);
        if (g.vertex_count() == 0) continue;
        const WeightVector w = enhance(p);
        const Rational clique = max_weight_clique(g, w).first;
        const Rational chromatic = fractional_chromatic(g, w).value;
        CHECK(clique <= chromatic);
        if (is_perfect(g).perfect) {
            CHECK(clique == chromatic);
        }
    }
}

TEST_CASE("input loads appear as clique weights of the enhanced vector") {
    for (unsigned seed = 700; seed < 720; ++seed) {
        const TrafficPattern p = oracle::random_pattern(seed);
        const ConflictGraph g = build_conflict_graph(p);
        const WeightVector w = enhance(p);
        const auto loads = compute_loads(p);
        for (int i = 1; i <= p.shape.inputs; ++i) {
            // one subflow per flow at input i is a clique of weight = load
            std::vector<int> clique;
            std::set<int> flows_seen;
            for (int v = 0; v < g.vertex_count(); ++v) {
                const auto& info = g.vertex(v);
                if (info.input == i && flows_seen.insert(info.flow_index).second) {
                    clique.push_back(v);
                }
            }
            CHECK(oracle::is_clique(g, clique));
            Rational weight = 0;
            for (int v : clique) weight += w[v];
            CHECK(weight == loads.input_loads[i - 1]);
        }
    }
}

TEST_CASE("admissibility bridge: in_qstab(e(r)) iff is_admissible(r)") {
    for (unsigned seed = 800; seed < 860; ++seed) {
        const TrafficPattern p = oracle::random_pattern(seed);
        const ConflictGraph g = build_conflict_graph(p);
        CHECK(in_qstab(g, enhance(p)) == is_admissible(p));
    }
}

TEST_CASE("class_min_speedup") {
    SUBCASE("unicasts only never need speedup") {
        std::vector<FlowSpec> unicasts;
        for (int i = 1; i <= 2; ++i) {
            for (int j = 1; j <= 3; ++j) unicasts.push_back({i, {j}, std::nullopt});
        }
        const SpeedupResult r = class_min_speedup({2, 3}, unicasts);
        CHECK(r.value == 1);
    }
    SUBCASE("full structure on 2x2 is already perfect") {
        const SpeedupResult r =
            class_min_speedup({2, 2}, full_unicast_broadcast_structure({2, 2}));
        CHECK(r.value == 1);
    }
    SUBCASE("full structure on 2x3 reaches 5/4, witness self-consistent") {
        const SpeedupResult r =
            class_min_speedup({2, 3}, full_unicast_broadcast_structure({2, 3}));
        CHECK(r.value == Rational(5, 4));
        REQUIRE(r.witness.has_value());
        CHECK(pattern_speedup(*r.witness).value == r.value);
        CHECK(is_admissible(*r.witness));
    }
    SUBCASE("dimension refusal") {
        CHECK_THROWS_AS(
            class_min_speedup({4, 4}, full_unicast_broadcast_structure({4, 4})),
            LimitError);
    }
    SUBCASE("parallel sweep returns identical results") {
        SweepOptions serial;
        SweepOptions parallel;
        parallel.jobs = 4;
        const auto structure = full_unicast_broadcast_structure({2, 3});
        const SpeedupResult a = class_min_speedup({2, 3}, structure, serial);
        const SpeedupResult b = class_min_speedup({2, 3}, structure, parallel);
        CHECK(a.value == b.value);
        REQUIRE(a.witness.has_value());
        REQUIRE(b.witness.has_value());
        for (std::size_t k = 0; k < a.witness->flows.size(); ++k) {
            CHECK(a.witness->flows[k].rate == b.witness->flows[k].rate);
        }
    }
}

TEST_CASE("imperfection ratio") {
    SUBCASE("perfect graphs have ratio 1") {
        const KnGraph kn = build_kn_graph(2, 2);
        const ConflictGraph gu = induced_subgraph(kn.graph, kn.all_unicasts());
        REQUIRE(is_perfect(gu).perfect);
        CHECK(imperfection_ratio_exact(gu).value == 1);
    }
    SUBCASE("5-cycle: 5/4 with the half-weight witness") {
        const ImperfectionResult r = imperfection_ratio_exact(cycle(5));
        CHECK(r.value == Rational(5, 4));
        CHECK(r.witness == WeightVector(5, Rational(1, 2)));
    }
    SUBCASE("odd hole pattern graph: frozen regression value 5/4, within [5/4, 3/2]") {
        const ConflictGraph g = build_conflict_graph(odd_hole_pattern());
        const ImperfectionResult r = imperfection_ratio_exact(g);
        CHECK(r.value >= Rational(5, 4));
        CHECK(r.value <= Rational(3, 2));
        CHECK(r.value == Rational(5, 4));  // computed once, kept as regression
        CHECK(fractional_chromatic(g, r.witness).value == r.value);
    }
    SUBCASE("dimension refusal beyond 13 vertices") {
        CHECK_THROWS_AS(imperfection_ratio_exact(build_kn_graph(2, 4).graph), LimitError);
    }
}

TEST_CASE("convexity evidence for the vertex sweep") {
    const ConflictGraph g = build_conflict_graph(odd_hole_pattern());
    for (unsigned seed = 900; seed < 915; ++seed) {
        // random points of QSTAB: scale random weights by the clique norm
        WeightVector w1 = oracle::random_weights(seed, g.vertex_count());
        WeightVector w2 = oracle::random_weights(seed + 500, g.vertex_count());
        for (WeightVector* w : {&w1, &w2}) {
            const Rational norm = max_weight_clique(g, *w).first;
            if (norm > 1) {
                for (auto& x : *w) x /= norm;
            }
        }
        const Rational alpha(2, 7);
        WeightVector mix(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) {
            mix[v] = alpha * w1[v] + (1 - alpha) * w2[v];
        }
        const Rational mixed = fractional_chromatic(g, mix).value;
        const Rational worst = std::max(fractional_chromatic(g, w1).value,
                                        fractional_chromatic(g, w2).value);
        CHECK(mixed <= worst);
    }
}

TEST_CASE("cover bounds") {
    const KnGraph kn = build_kn_graph(2, 3);

    SUBCASE("input cover of G(2,3) gives 3/2") {
        CHECK(cover_bound(kn.graph, input_cover(2, 3)) == Rational(3, 2));
    }
    SUBCASE("output cover of G(2,3) gives 6/4 = 3/2") {
        CHECK(cover_bound(kn.graph, output_cover(2, 3)) == Rational(3, 2));
    }
    SUBCASE("an imperfect member is rejected with a certificate") {
        const ConflictGraph c5 = cycle(5);
        PerfectCover cover;
        cover.multiplicity = 1;
        cover.members.push_back({0, 1, 2, 3, 4});
        try {
            cover_bound(c5, cover);
            FAIL("expected CoverError");
        } catch (const CoverError& e) {
            CHECK(e.kind == CoverError::Kind::imperfect_member);
            CHECK(e.member_index == 0);
            CHECK(e.verdict.certificate == PerfectionVerdict::Certificate::odd_hole);
            CHECK(oracle::is_chordless_cycle(c5, e.verdict.cycle));
        }
    }
    SUBCASE("an undercovered vertex is named") {
        PerfectCover cover;
        cover.multiplicity = 1;
        cover.members.push_back(kn.all_unicasts());  // broadcasts uncovered
        try {
            cover_bound(kn.graph, cover);
            FAIL("expected CoverError");
        } catch (const CoverError& e) {
            CHECK(e.kind == CoverError::Kind::undercovered_vertex);
            CHECK(e.vertex == kn.broadcast_vertex(1, 1));
            CHECK(std::string(e.what()).find("b11") != std::string::npos);
        }
    }
}

TEST_CASE("ordering: pattern speedup <= imperfection ratio <= cover bound") {
    // the odd hole pattern graph against the restricted input cover of G(2,3)
    const TrafficPattern p = validate_pattern(odd_hole_pattern());
    const ConflictGraph g = build_conflict_graph(p);
    const Rational speedup = pattern_speedup(p).value;
    const Rational imp = imperfection_ratio_exact(g).value;
    CHECK(speedup <= imp);

    const KnGraph kn = build_kn_graph(2, 3);
    std::vector<int> fig_vertices;
    for (const char* label : {"u11", "b11", "b12", "b13", "u22", "u23"}) {
        fig_vertices.push_back(kn.graph.find_vertex(label));
    }
    // restriction of the K x N input cover covers the subgraph at least as often
    PerfectCover restricted;
    restricted.multiplicity = 2;
    for (const auto& member : input_cover(2, 3).members) {
        std::vector<int> kept;
        for (std::size_t idx = 0; idx < fig_vertices.size(); ++idx) {
            if (std::find(member.begin(), member.end(), fig_vertices[idx]) != member.end()) {
                kept.push_back(static_cast<int>(idx));
            }
        }
        restricted.members.push_back(kept);
    }
    const Rational bound = cover_bound(g, restricted);
    CHECK(bound == Rational(3, 2));
    CHECK(imp <= bound);
}

TEST_CASE("stab membership via schedules is consistent with speedup scaling") {
    // e(r)/s lies in STAB exactly when s reaches the pattern speedup
    const TrafficPattern p = validate_pattern(odd_hole_pattern());
    const ConflictGraph g = build_conflict_graph(p);
    const WeightVector w = enhance(p);
    const Rational s = pattern_speedup(p).value;
    WeightVector scaled = w;
    for (auto& x : scaled) x /= s;
    CHECK(in_stab(g, scaled));
    WeightVector too_fast = w;
    for (auto& x : too_fast) x /= (s - Rational(1, 100));
    CHECK_FALSE(in_stab(g, too_fast));
}

}  // TEST_SUITE
