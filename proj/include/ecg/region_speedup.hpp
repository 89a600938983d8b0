#pragma once

#include "ecg/conflict_graph.hpp"
#include "ecg/graph_analysis.hpp"
#include "ecg/traffic.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace ecg {

/// One stable set and its time share in a fractional schedule.
struct ScheduleEntry {
    std::vector<int> vertices;
    Rational coefficient;
};

/// A speedup value with its certifying schedule: the coefficients sum to
/// `value` and cover every vertex weight exactly. Class-wide sweeps also
/// report the witness pattern attaining the value.
struct SpeedupResult {
    Rational value;
    std::vector<ScheduleEntry> schedule;
    std::optional<TrafficPattern> witness;
};

struct SweepOptions {
    int jobs = 1;
    /// 0 means the operation's documented default (14 for class sweeps,
    /// 13 for the imperfection ratio).
    int max_dimension = 0;
    AnalysisLimits analysis;
    /// Called as (processed, total) while sweeping polytope vertices.
    std::function<void(std::size_t, std::size_t)> progress;
};

/// Weighted fractional chromatic number: the exact minimum of sum(lambda_S)
/// over fractional covers of w by maximal stable sets; equivalently the least
/// s with w in s * STAB(G). The schedule is the optimal cover's support.
SpeedupResult fractional_chromatic(const ConflictGraph& g, const WeightVector& weights,
                                   const AnalysisLimits& limits = {});

/// w in STAB(G): some convex combination of stable sets dominates w.
bool in_stab(const ConflictGraph& g, const WeightVector& weights,
             const AnalysisLimits& limits = {});

/// w in QSTAB(G): w >= 0 and every maximal clique weighs at most 1.
bool in_qstab(const ConflictGraph& g, const WeightVector& weights,
              const AnalysisLimits& limits = {});

/// Minimum speedup for one pattern: the fractional chromatic number of its
/// conflict graph under the enhanced rate vector.
SpeedupResult pattern_speedup(const TrafficPattern& pattern,
                              const AnalysisLimits& limits = {});

/// Minimum speedup over every admissible rate vector of a flow structure.
/// The sweep evaluates the fractional chromatic number at every vertex of the
/// admissible polytope (the objective is convex, so vertices suffice) and
/// reports the lexicographically least maximizing vertex as witness.
SpeedupResult class_min_speedup(PortShape shape, const std::vector<FlowSpec>& structure,
                                const SweepOptions& options = {});

struct ImperfectionResult {
    Rational value;
    WeightVector witness;
};

/// Exact imperfection ratio: max of the fractional chromatic number over the
/// vertices of QSTAB(G). Unlike class_min_speedup this runs in subflow space,
/// with no flow-consistency ties between coordinates.
ImperfectionResult imperfection_ratio_exact(const ConflictGraph& g,
                                            const SweepOptions& options = {});

/// A family of induced subgraphs (vertex sets) claimed to be perfect and to
/// cover every vertex at least `multiplicity` times.
struct PerfectCover {
    std::vector<std::vector<int>> members;
    int multiplicity = 1;
};

class CoverError : public std::runtime_error {
public:
    enum class Kind { imperfect_member, undercovered_vertex };

    CoverError(Kind kind, int member_index, PerfectionVerdict verdict, std::string message)
        : std::runtime_error(std::move(message)), kind(kind), member_index(member_index),
          verdict(std::move(verdict)) {}
    CoverError(Kind kind, int vertex, std::string message)
        : std::runtime_error(std::move(message)), kind(kind), vertex(vertex) {}

    Kind kind;
    int member_index = -1;
    int vertex = -1;
    PerfectionVerdict verdict;  // certificate for an imperfect member
};

/// Exact per-vertex coverage counts of a cover's members.
std::vector<int> cover_coverage(const ConflictGraph& g, const PerfectCover& cover);

/// Validates the cover (each member induces a perfect subgraph, every vertex
/// is covered at least `multiplicity` times) and returns members/multiplicity
/// as an exact rational. Invalid covers throw CoverError carrying either the
/// imperfection certificate or the name of an undercovered vertex.
Rational cover_bound(const ConflictGraph& g, const PerfectCover& cover,
                     const AnalysisLimits& limits = {});

}  // namespace ecg
