#pragma once

#include "ecg/conflict_graph.hpp"
#include "ecg/region_speedup.hpp"

#include <vector>

namespace ecg {

/// The structured induced subgraphs of the K x N graph used by the perfect
/// covers. Row = input side, column = output side.
enum class KnSubgraphKind {
    all_unicasts,                    // every unicast vertex
    broadcasts_plus_input,           // every broadcast vertex plus one input's unicasts
    unicast_column_plus_broadcasts,  // unicasts to one output plus every broadcast vertex
    broadcast_column_plus_unicasts,  // broadcast subflows to one output plus every unicast
};

/// The kind's vertex set inside the K x N graph. `index` is the input for
/// broadcasts_plus_input and the output for the column kinds (ignored for
/// all_unicasts). Out-of-range indices throw.
std::vector<int> named_subgraph_vertices(const KnGraph& kn, KnSubgraphKind kind,
                                         int index = 1);

/// The induced subgraph itself.
ConflictGraph named_subgraph(int inputs, int outputs, KnSubgraphKind kind, int index = 1);

/// K-1 copies of the all-unicast subgraph plus one broadcasts_plus_input per
/// input: 2K-1 members covering every vertex exactly K times.
PerfectCover input_cover(int inputs, int outputs);

/// Both column kinds for every output: 2N members covering every vertex
/// exactly N+1 times.
PerfectCover output_cover(int inputs, int outputs);

/// min((2K-1)/K, 2N/(N+1)) as an exact rational; matches the validated
/// cover bounds.
Rational kn_speedup_bound(int inputs, int outputs);

}  // namespace ecg
