#include "ecg/kn_bounds.hpp"

#include "ecg/errors.hpp"

#include <algorithm>
#include <string>

namespace ecg {

namespace {

void check_index(int index, int limit, const char* what) {
    if (index < 1 || index > limit) {
        throw ValidationError(std::string(what) + " index " + std::to_string(index) +
                              " out of range [1," + std::to_string(limit) + "]");
    }
}

std::vector<int> append(std::vector<int> base, const std::vector<int>& extra) {
    base.insert(base.end(), extra.begin(), extra.end());
    std::sort(base.begin(), base.end());
    return base;
}

}  // namespace

std::vector<int> named_subgraph_vertices(const KnGraph& kn, KnSubgraphKind kind, int index) {
    switch (kind) {
        case KnSubgraphKind::all_unicasts:
            return kn.all_unicasts();
        case KnSubgraphKind::broadcasts_plus_input:
            check_index(index, kn.inputs, "input");
            return append(kn.all_broadcasts(), kn.unicast_row(index));
        case KnSubgraphKind::unicast_column_plus_broadcasts:
            check_index(index, kn.outputs, "output");
            return append(kn.all_broadcasts(), kn.unicast_column(index));
        case KnSubgraphKind::broadcast_column_plus_unicasts:
            check_index(index, kn.outputs, "output");
            return append(kn.all_unicasts(), kn.broadcast_column(index));
    }
    throw ValidationError("unknown subgraph kind");
}

ConflictGraph named_subgraph(int inputs, int outputs, KnSubgraphKind kind, int index) {
    const KnGraph kn = build_kn_graph(inputs, outputs);
    return induced_subgraph(kn.graph, named_subgraph_vertices(kn, kind, index));
}

PerfectCover input_cover(int inputs, int outputs) {
    const KnGraph kn = build_kn_graph(inputs, outputs);
    PerfectCover cover;
    cover.multiplicity = inputs;
    const auto unicasts = named_subgraph_vertices(kn, KnSubgraphKind::all_unicasts);
    for (int copy = 0; copy < inputs - 1; ++copy) {
        cover.members.push_back(unicasts);
    }
    for (int i = 1; i <= inputs; ++i) {
        cover.members.push_back(
            named_subgraph_vertices(kn, KnSubgraphKind::broadcasts_plus_input, i));
    }
    return cover;
}

PerfectCover output_cover(int inputs, int outputs) {
    const KnGraph kn = build_kn_graph(inputs, outputs);
    PerfectCover cover;
    cover.multiplicity = outputs + 1;
    for (int j = 1; j <= outputs; ++j) {
        cover.members.push_back(
            named_subgraph_vertices(kn, KnSubgraphKind::unicast_column_plus_broadcasts, j));
    }
    for (int j = 1; j <= outputs; ++j) {
        cover.members.push_back(
            named_subgraph_vertices(kn, KnSubgraphKind::broadcast_column_plus_unicasts, j));
    }
    return cover;
}

Rational kn_speedup_bound(int inputs, int outputs) {
    if (inputs < 1 || outputs < 1) {
        throw ValidationError("switch shape must have K >= 1 and N >= 1");
    }
    const Rational input_side(2 * inputs - 1, inputs);
    const Rational output_side(2 * outputs, outputs + 1);
    return std::min(input_side, output_side);
}

}  // namespace ecg
