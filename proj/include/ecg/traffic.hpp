#pragma once

#include "ecg/polytope.hpp"
#include "ecg/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ecg {

/// K inputs by N outputs.
struct PortShape {
    int inputs = 0;
    int outputs = 0;
};

/// A flow's structure: its input port and destination set (rate left open).
/// The optional name overrides the default vertex-label stem ("u<i>" for
/// unicasts, "b<i>" for full-fanout flows, "m<i>{...}" otherwise).
struct FlowSpec {
    int input = 0;
    std::vector<int> outputs;
    std::optional<std::string> name;
};

struct Flow {
    int input = 0;
    std::vector<int> outputs;
    Rational rate;
};

/// A set of flows with rates on a K x N switch. Two flows may never share
/// the same (input, outputs) pair.
struct TrafficPattern {
    PortShape shape;
    std::vector<Flow> flows;
};

/// One destination of one flow; the vertex unit of the conflict graph.
struct Subflow {
    int flow_index = 0;
    int output = 0;
};

/// Per-vertex rational weights, aligned with the canonical subflow order of
/// the structure they were built from. All weights are nonnegative.
using WeightVector = std::vector<Rational>;

struct LoadReport {
    bool admissible = false;
    std::vector<Rational> input_loads;
    std::vector<Rational> output_loads;
};

/// Checks shape and flow invariants; returns the pattern unchanged when they
/// hold. Out-of-range ports, duplicate flows and negative rates each raise a
/// distinctly worded ValidationError.
TrafficPattern validate_pattern(TrafficPattern pattern);

/// Structure-level validation (port ranges, nonempty fanouts). Duplicate
/// (input, outputs) entries are allowed here: flows are index-identified.
void validate_structure(PortShape shape, const std::vector<FlowSpec>& structure);

/// Exact per-port loads; admissible iff no load exceeds 1.
LoadReport compute_loads(const TrafficPattern& pattern);
bool is_admissible(const TrafficPattern& pattern);

/// Subflows in canonical order: by (input, unicast before multicast/broadcast,
/// fanout, output). This order is shared by conflict-graph vertices and
/// weight vectors.
std::vector<Subflow> canonical_subflows(PortShape shape,
                                        const std::vector<FlowSpec>& structure);

/// The enhanced rate vector: every subflow inherits its flow's rate.
WeightVector enhance(const TrafficPattern& pattern);

/// The admissible rate region for a flow structure: one variable per flow,
/// input-load and output-load rows, and nonnegativity rows.
Polytope admissible_polytope(PortShape shape, const std::vector<FlowSpec>& structure);

std::vector<FlowSpec> structure_of(const TrafficPattern& pattern);
TrafficPattern pattern_from_rates(PortShape shape, const std::vector<FlowSpec>& structure,
                                  const std::vector<Rational>& rates);

/// All N unicasts plus one broadcast per input, in canonical flow order.
std::vector<FlowSpec> full_unicast_broadcast_structure(PortShape shape);

/// Canonical on-disk format:
/// { "K": int, "N": int, "flows": [ { "input": int, "outputs": [int...],
///   "rate": "p/q" } ] }. Rates parse as exact fractions; plain integers are
/// accepted too. Errors name the offending field.
TrafficPattern pattern_from_json(const std::string& text);
std::string pattern_to_json(const TrafficPattern& pattern, int indent = 2);

}  // namespace ecg
