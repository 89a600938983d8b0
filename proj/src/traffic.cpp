#include "ecg/traffic.hpp"

#include "ecg/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace ecg {

namespace {

void check_shape(PortShape shape) {
    if (shape.inputs < 1 || shape.outputs < 1) {
        throw ValidationError("switch shape must have K >= 1 and N >= 1");
    }
}

void check_flow_ports(PortShape shape, int input, const std::vector<int>& outputs,
                      const std::string& where) {
    if (input < 1 || input > shape.inputs) {
        throw ValidationError(where + ": input port " + std::to_string(input) +
                              " out of range [1," + std::to_string(shape.inputs) + "]");
    }
    if (outputs.empty()) {
        throw ValidationError(where + ": output set is empty");
    }
    std::set<int> seen;
    for (int j : outputs) {
        if (j < 1 || j > shape.outputs) {
            throw ValidationError(where + ": output port " + std::to_string(j) +
                                  " out of range [1," + std::to_string(shape.outputs) + "]");
        }
        if (!seen.insert(j).second) {
            throw ValidationError(where + ": duplicate output port " + std::to_string(j));
        }
    }
}

std::vector<int> sorted_outputs(std::vector<int> outputs) {
    std::sort(outputs.begin(), outputs.end());
    return outputs;
}

}  // namespace

void validate_structure(PortShape shape, const std::vector<FlowSpec>& structure) {
    check_shape(shape);
    for (std::size_t k = 0; k < structure.size(); ++k) {
        check_flow_ports(shape, structure[k].input, structure[k].outputs,
                         "flows[" + std::to_string(k) + "]");
    }
}

TrafficPattern validate_pattern(TrafficPattern pattern) {
    check_shape(pattern.shape);
    std::set<std::pair<int, std::vector<int>>> keys;
    for (std::size_t k = 0; k < pattern.flows.size(); ++k) {
        auto& flow = pattern.flows[k];
        const std::string where = "flows[" + std::to_string(k) + "]";
        check_flow_ports(pattern.shape, flow.input, flow.outputs, where);
        flow.outputs = sorted_outputs(flow.outputs);
        if (flow.rate < 0) {
            throw ValidationError(where + ": negative rate " + to_fraction(flow.rate));
        }
        if (!keys.insert({flow.input, flow.outputs}).second) {
            throw ValidationError(where + ": duplicate flow (same input and output set)");
        }
    }
    return pattern;
}

LoadReport compute_loads(const TrafficPattern& pattern) {
    LoadReport report;
    report.input_loads.assign(pattern.shape.inputs, Rational(0));
    report.output_loads.assign(pattern.shape.outputs, Rational(0));
    for (const auto& flow : pattern.flows) {
        report.input_loads[flow.input - 1] += flow.rate;
        for (int j : flow.outputs) {
            report.output_loads[j - 1] += flow.rate;
        }
    }
    report.admissible = true;
    for (const auto& load : report.input_loads) {
        if (load > 1) report.admissible = false;
    }
    for (const auto& load : report.output_loads) {
        if (load > 1) report.admissible = false;
    }
    return report;
}

bool is_admissible(const TrafficPattern& pattern) {
    return compute_loads(pattern).admissible;
}

std::vector<Subflow> canonical_subflows(PortShape shape,
                                        const std::vector<FlowSpec>& structure) {
    validate_structure(shape, structure);
    // Sort key: input, unicast rank, fanout set, output, flow index.
    struct Key {
        int input;
        int rank;
        std::vector<int> fanout;
        int output;
        int flow_index;
    };
    std::vector<Key> keys;
    for (std::size_t k = 0; k < structure.size(); ++k) {
        const auto& spec = structure[k];
        std::vector<int> fanout = sorted_outputs(spec.outputs);
        const int rank = fanout.size() == 1 ? 0 : 1;
        for (int j : fanout) {
            keys.push_back({spec.input, rank, fanout, j, static_cast<int>(k)});
        }
    }
    std::stable_sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
        return std::tie(a.input, a.rank, a.fanout, a.output, a.flow_index) <
               std::tie(b.input, b.rank, b.fanout, b.output, b.flow_index);
    });
    std::vector<Subflow> subflows;
    subflows.reserve(keys.size());
    for (const auto& key : keys) {
        subflows.push_back({key.flow_index, key.output});
    }
    return subflows;
}

WeightVector enhance(const TrafficPattern& pattern) {
    const auto structure = structure_of(pattern);
    const auto subflows = canonical_subflows(pattern.shape, structure);
    WeightVector weights;
    weights.reserve(subflows.size());
    for (const auto& subflow : subflows) {
        weights.push_back(pattern.flows[subflow.flow_index].rate);
    }
    return weights;
}

Polytope admissible_polytope(PortShape shape, const std::vector<FlowSpec>& structure) {
    validate_structure(shape, structure);
    const int f = static_cast<int>(structure.size());
    Polytope p;
    p.dimension = f;
    for (int i = 1; i <= shape.inputs; ++i) {
        HalfSpace row{std::vector<Rational>(f, Rational(0)), Rational(1)};
        for (int k = 0; k < f; ++k) {
            if (structure[k].input == i) row.coefficients[k] = 1;
        }
        p.rows.push_back(std::move(row));
    }
    for (int j = 1; j <= shape.outputs; ++j) {
        HalfSpace row{std::vector<Rational>(f, Rational(0)), Rational(1)};
        for (int k = 0; k < f; ++k) {
            const auto& outs = structure[k].outputs;
            if (std::find(outs.begin(), outs.end(), j) != outs.end()) {
                row.coefficients[k] = 1;
            }
        }
        p.rows.push_back(std::move(row));
    }
    for (int k = 0; k < f; ++k) {
        HalfSpace row{std::vector<Rational>(f, Rational(0)), Rational(0)};
        row.coefficients[k] = -1;
        p.rows.push_back(std::move(row));
    }
    return p;
}

std::vector<FlowSpec> structure_of(const TrafficPattern& pattern) {
    std::vector<FlowSpec> structure;
    structure.reserve(pattern.flows.size());
    for (const auto& flow : pattern.flows) {
        structure.push_back({flow.input, flow.outputs, std::nullopt});
    }
    return structure;
}

TrafficPattern pattern_from_rates(PortShape shape, const std::vector<FlowSpec>& structure,
                                  const std::vector<Rational>& rates) {
    if (rates.size() != structure.size()) {
        throw ValidationError("rate count does not match flow count");
    }
    TrafficPattern pattern;
    pattern.shape = shape;
    pattern.flows.reserve(structure.size());
    for (std::size_t k = 0; k < structure.size(); ++k) {
        pattern.flows.push_back(
            {structure[k].input, sorted_outputs(structure[k].outputs), rates[k]});
    }
    return pattern;
}

std::vector<FlowSpec> full_unicast_broadcast_structure(PortShape shape) {
    check_shape(shape);
    std::vector<FlowSpec> structure;
    std::vector<int> all_outputs(shape.outputs);
    for (int j = 0; j < shape.outputs; ++j) all_outputs[j] = j + 1;
    for (int i = 1; i <= shape.inputs; ++i) {
        for (int j = 1; j <= shape.outputs; ++j) {
            structure.push_back({i, {j}, "u" + std::to_string(i)});
        }
        structure.push_back({i, all_outputs, "b" + std::to_string(i)});
    }
    return structure;
}

namespace {

using nlohmann::json;

Rational rate_from_json(const json& value, const std::string& where) {
    if (value.is_string()) {
        try {
            return parse_rational(value.get<std::string>());
        } catch (const ValidationError& e) {
            throw ValidationError(where + ": " + e.what());
        }
    }
    if (value.is_number_integer()) {
        return Rational(value.get<long long>());
    }
    throw ValidationError(where + ": rate must be a \"p/q\" string or an integer");
}

}  // namespace

TrafficPattern pattern_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("pattern JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("K") || !doc.contains("N")) {
        throw ValidationError("pattern JSON: expected an object with \"K\" and \"N\"");
    }
    TrafficPattern pattern;
    if (!doc["K"].is_number_integer() || !doc["N"].is_number_integer()) {
        throw ValidationError("pattern JSON: \"K\" and \"N\" must be integers");
    }
    pattern.shape.inputs = doc["K"].get<int>();
    pattern.shape.outputs = doc["N"].get<int>();
    const json flows = doc.value("flows", json::array());
    if (!flows.is_array()) {
        throw ValidationError("pattern JSON: \"flows\" must be an array");
    }
    for (std::size_t k = 0; k < flows.size(); ++k) {
        const std::string where = "flows[" + std::to_string(k) + "]";
        const json& f = flows[k];
        if (!f.is_object() || !f.contains("input") || !f.contains("outputs") ||
            !f.contains("rate")) {
            throw ValidationError(where + ": expected input, outputs and rate fields");
        }
        Flow flow;
        if (!f["input"].is_number_integer()) {
            throw ValidationError(where + ".input: must be an integer");
        }
        flow.input = f["input"].get<int>();
        if (!f["outputs"].is_array() || f["outputs"].empty()) {
            throw ValidationError(where + ".outputs: must be a nonempty array");
        }
        for (const json& j : f["outputs"]) {
            if (!j.is_number_integer()) {
                throw ValidationError(where + ".outputs: entries must be integers");
            }
            flow.outputs.push_back(j.get<int>());
        }
        flow.rate = rate_from_json(f["rate"], where + ".rate");
        pattern.flows.push_back(std::move(flow));
    }
    return validate_pattern(std::move(pattern));
}

std::string pattern_to_json(const TrafficPattern& pattern, int indent) {
    json doc;
    doc["K"] = pattern.shape.inputs;
    doc["N"] = pattern.shape.outputs;
    json flows = json::array();
    for (const auto& flow : pattern.flows) {
        json f;
        f["input"] = flow.input;
        f["outputs"] = flow.outputs;
        f["rate"] = to_fraction(flow.rate);
        flows.push_back(std::move(f));
    }
    doc["flows"] = std::move(flows);
    return doc.dump(indent);
}

}  // namespace ecg
