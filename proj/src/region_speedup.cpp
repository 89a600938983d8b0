#include "ecg/region_speedup.hpp"

#include "ecg/errors.hpp"
#include "ecg/lp.hpp"
#include "ecg/polytope.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

namespace ecg {

namespace {

void check_weights(const ConflictGraph& g, const WeightVector& weights) {
    if (static_cast<int>(weights.size()) != g.vertex_count()) {
        throw ValidationError("weight vector does not cover all vertices");
    }
    for (const auto& w : weights) {
        if (w < 0) throw ValidationError("negative weight");
    }
}

/// Runs fn(i) for i in [0, count) across `jobs` threads. The work is pure per
/// index, so the results are identical to the sequential run.
void parallel_for(std::size_t count, int jobs,
                  const std::function<void(std::size_t, std::size_t)>& progress,
                  const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
            if (progress) progress(i + 1, count);
        }
        return;
    }
    std::mutex mutex;
    std::size_t next = 0;
    std::size_t done = 0;
    auto worker = [&] {
        for (;;) {
            std::size_t i;
            {
                std::lock_guard lock(mutex);
                if (next >= count) return;
                i = next++;
            }
            fn(i);
            {
                std::lock_guard lock(mutex);
                ++done;
                if (progress) progress(done, count);
            }
        }
    };
    std::vector<std::thread> threads;
    const int thread_count = std::min<std::size_t>(jobs, count == 0 ? 1 : count);
    threads.reserve(thread_count);
    for (int t = 0; t < thread_count; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
}

}  // namespace

SpeedupResult fractional_chromatic(const ConflictGraph& g, const WeightVector& weights,
                                   const AnalysisLimits& limits) {
    check_weights(g, weights);
    SpeedupResult result;
    result.value = 0;
    if (g.vertex_count() == 0) return result;

    const auto stable_sets = maximal_stable_sets(g, limits);
    const std::size_t columns = stable_sets.size();

    LinearProgram lp;
    lp.sense = Sense::minimize;
    lp.objective.assign(columns, Rational(1));
    for (int v = 0; v < g.vertex_count(); ++v) {
        LinearConstraint row;
        row.coefficients.assign(columns, Rational(0));
        for (std::size_t s = 0; s < columns; ++s) {
            if (std::binary_search(stable_sets[s].begin(), stable_sets[s].end(), v)) {
                row.coefficients[s] = 1;
            }
        }
        row.relation = Relation::greater_equal;
        row.rhs = weights[v];
        lp.constraints.push_back(std::move(row));
    }

    const LPResult solved = solve_lp(lp);
    // The cover LP is always feasible and bounded below by zero.
    result.value = solved.value;
    for (std::size_t s = 0; s < columns; ++s) {
        if (solved.primal[s] != 0) {
            result.schedule.push_back({stable_sets[s], solved.primal[s]});
        }
    }
    return result;
}

bool in_stab(const ConflictGraph& g, const WeightVector& weights,
             const AnalysisLimits& limits) {
    return fractional_chromatic(g, weights, limits).value <= 1;
}

bool in_qstab(const ConflictGraph& g, const WeightVector& weights,
              const AnalysisLimits& limits) {
    check_weights(g, weights);
    if (g.vertex_count() == 0) return true;
    return max_weight_clique(g, weights, limits).first <= 1;
}

SpeedupResult pattern_speedup(const TrafficPattern& pattern, const AnalysisLimits& limits) {
    const TrafficPattern validated = validate_pattern(pattern);
    const ConflictGraph g = build_conflict_graph(validated);
    return fractional_chromatic(g, enhance(validated), limits);
}

SpeedupResult class_min_speedup(PortShape shape, const std::vector<FlowSpec>& structure,
                                const SweepOptions& options) {
    const int limit = options.max_dimension > 0 ? options.max_dimension : 14;
    const Polytope region = admissible_polytope(shape, structure);
    if (region.dimension > limit) {
        throw LimitError("class speedup sweep refused: " + std::to_string(region.dimension) +
                         " flows exceed the dimension limit of " + std::to_string(limit));
    }
    const auto vertices = enumerate_vertices(region, {limit});
    const ConflictGraph g = build_conflict_graph(shape, structure);
    const auto subflows = canonical_subflows(shape, structure);

    std::vector<Rational> values(vertices.size());
    parallel_for(vertices.size(), options.jobs, options.progress, [&](std::size_t i) {
        WeightVector weights;
        weights.reserve(subflows.size());
        for (const auto& subflow : subflows) {
            weights.push_back(vertices[i][subflow.flow_index]);
        }
        values[i] = fractional_chromatic(g, weights, options.analysis).value;
    });

    SpeedupResult result;
    result.value = 0;
    std::size_t best = vertices.size();
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (best == vertices.size() || values[i] > result.value) {
            best = i;
            result.value = values[i];
        }
    }
    if (best < vertices.size()) {
        WeightVector weights;
        for (const auto& subflow : subflows) {
            weights.push_back(vertices[best][subflow.flow_index]);
        }
        result.schedule = fractional_chromatic(g, weights, options.analysis).schedule;
        result.witness = pattern_from_rates(shape, structure, vertices[best]);
    }
    return result;
}

ImperfectionResult imperfection_ratio_exact(const ConflictGraph& g,
                                            const SweepOptions& options) {
    const int limit = options.max_dimension > 0 ? options.max_dimension : 13;
    const int n = g.vertex_count();
    if (n > limit) {
        throw LimitError("imperfection ratio refused: " + std::to_string(n) +
                         " vertices exceed the dimension limit of " + std::to_string(limit));
    }
    ImperfectionResult result;
    result.value = n == 0 ? Rational(1) : Rational(0);
    if (n == 0) return result;

    // QSTAB(G) as an H-representation: clique rows plus nonnegativity.
    Polytope qstab;
    qstab.dimension = n;
    for (const auto& clique : maximal_cliques(g, options.analysis)) {
        HalfSpace row{std::vector<Rational>(n, Rational(0)), Rational(1)};
        for (int v : clique) row.coefficients[v] = 1;
        qstab.rows.push_back(std::move(row));
    }
    for (int v = 0; v < n; ++v) {
        HalfSpace row{std::vector<Rational>(n, Rational(0)), Rational(0)};
        row.coefficients[v] = -1;
        qstab.rows.push_back(std::move(row));
    }

    const auto vertices = enumerate_vertices(qstab, {std::max(limit, 14)});
    std::vector<Rational> values(vertices.size());
    parallel_for(vertices.size(), options.jobs, options.progress, [&](std::size_t i) {
        values[i] = fractional_chromatic(g, vertices[i], options.analysis).value;
    });
    std::size_t best = vertices.size();
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (best == vertices.size() || values[i] > result.value) {
            best = i;
            result.value = values[i];
        }
    }
    result.witness = vertices[best];
    return result;
}

std::vector<int> cover_coverage(const ConflictGraph& g, const PerfectCover& cover) {
    std::vector<int> counts(g.vertex_count(), 0);
    for (const auto& member : cover.members) {
        for (int v : member) {
            if (v < 0 || v >= g.vertex_count()) {
                throw ValidationError("cover member references unknown vertex " +
                                      std::to_string(v));
            }
            ++counts[v];
        }
    }
    return counts;
}

Rational cover_bound(const ConflictGraph& g, const PerfectCover& cover,
                     const AnalysisLimits& limits) {
    if (cover.multiplicity < 1) {
        throw ValidationError("cover multiplicity must be at least 1");
    }
    const auto counts = cover_coverage(g, cover);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (counts[v] < cover.multiplicity) {
            throw CoverError(CoverError::Kind::undercovered_vertex, v,
                             "vertex " + g.vertex(v).label + " is covered " +
                                 std::to_string(counts[v]) + " times, need " +
                                 std::to_string(cover.multiplicity));
        }
    }
    for (std::size_t m = 0; m < cover.members.size(); ++m) {
        const PerfectionVerdict verdict =
            is_perfect(induced_subgraph(g, cover.members[m]), limits);
        if (!verdict.perfect) {
            throw CoverError(CoverError::Kind::imperfect_member, static_cast<int>(m), verdict,
                             "cover member " + std::to_string(m) +
                                 " induces an imperfect subgraph");
        }
    }
    return Rational(static_cast<int>(cover.members.size()), cover.multiplicity);
}

}  // namespace ecg
