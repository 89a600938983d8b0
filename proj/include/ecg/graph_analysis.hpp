#pragma once

#include "ecg/conflict_graph.hpp"
#include "ecg/traffic.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ecg {

/// Guard rail for the exponential searches. The hard ceiling is 64 vertices
/// (bitmask adjacency).
struct AnalysisLimits {
    int max_vertices = 40;
};

/// All inclusion-maximal cliques, each sorted ascending, the list in
/// lexicographic order. Branch and bound with pivoting.
std::vector<std::vector<int>> maximal_cliques(const ConflictGraph& g,
                                              const AnalysisLimits& limits = {});

/// All inclusion-maximal stable sets (= maximal cliques of the complement).
std::vector<std::vector<int>> maximal_stable_sets(const ConflictGraph& g,
                                                  const AnalysisLimits& limits = {});

/// Exact maximum clique weight with a witness (the lexicographically least
/// maximizer). Weights must cover every vertex and be nonnegative.
std::pair<Rational, std::vector<int>> max_weight_clique(const ConflictGraph& g,
                                                        const WeightVector& weights,
                                                        const AnalysisLimits& limits = {});

/// Lexicographically least chordless odd cycle of length >= 5, if any.
std::optional<std::vector<int>> find_odd_hole(const ConflictGraph& g,
                                              const AnalysisLimits& limits = {});

struct PerfectionVerdict {
    enum class Certificate { none, odd_hole, odd_anti_hole };
    bool perfect = false;
    Certificate certificate = Certificate::none;
    /// For odd_hole: a chordless odd cycle in the graph. For odd_anti_hole:
    /// a chordless odd cycle of the complement (vertex indices of g).
    std::vector<int> cycle;
};

/// Perfect iff neither the graph nor its complement contains an odd hole.
PerfectionVerdict is_perfect(const ConflictGraph& g, const AnalysisLimits& limits = {});

}  // namespace ecg
