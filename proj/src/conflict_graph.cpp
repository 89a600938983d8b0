#include "ecg/conflict_graph.hpp"

#include "ecg/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace ecg {

ConflictGraph::ConflictGraph(std::vector<VertexInfo> vertices)
    : vertices_(std::move(vertices)),
      adjacency_(vertices_.size() * vertices_.size(), 0) {}

void ConflictGraph::add_edge(int a, int b) {
    if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count()) {
        throw ValidationError("edge endpoint out of range");
    }
    if (a == b) {
        throw ValidationError("self-loops are not allowed");
    }
    adjacency_[index(a, b)] = 1;
    adjacency_[index(b, a)] = 1;
}

int ConflictGraph::edge_count() const {
    int count = 0;
    for (int a = 0; a < vertex_count(); ++a) {
        for (int b = a + 1; b < vertex_count(); ++b) {
            if (adjacent(a, b)) ++count;
        }
    }
    return count;
}

std::vector<std::pair<int, int>> ConflictGraph::edges() const {
    std::vector<std::pair<int, int>> result;
    for (int a = 0; a < vertex_count(); ++a) {
        for (int b = a + 1; b < vertex_count(); ++b) {
            if (adjacent(a, b)) result.emplace_back(a, b);
        }
    }
    return result;
}

int ConflictGraph::find_vertex(const std::string& label) const {
    for (int v = 0; v < vertex_count(); ++v) {
        if (vertices_[v].label == label) return v;
    }
    return -1;
}

bool ConflictGraph::operator==(const ConflictGraph& other) const {
    if (vertex_count() != other.vertex_count()) return false;
    for (int v = 0; v < vertex_count(); ++v) {
        if (vertices_[v].label != other.vertices_[v].label) return false;
    }
    return adjacency_ == other.adjacency_;
}

namespace {

std::string port_token(int port) {
    return port <= 9 ? std::to_string(port) : "_" + std::to_string(port);
}

std::string default_flow_name(PortShape shape, const FlowSpec& spec) {
    const auto fanout = spec.outputs.size();
    if (fanout == 1) return "u" + std::to_string(spec.input);
    if (static_cast<int>(fanout) == shape.outputs) return "b" + std::to_string(spec.input);
    std::string name = "m" + std::to_string(spec.input) + "{";
    std::vector<int> sorted = spec.outputs;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i) name += ",";
        name += std::to_string(sorted[i]);
    }
    return name + "}";
}

SubflowKind kind_of(PortShape shape, const FlowSpec& spec) {
    if (spec.outputs.size() == 1) return SubflowKind::unicast;
    if (static_cast<int>(spec.outputs.size()) == shape.outputs) return SubflowKind::broadcast;
    return SubflowKind::multicast;
}

}  // namespace

ConflictGraph build_conflict_graph(PortShape shape, const std::vector<FlowSpec>& structure) {
    const auto subflows = canonical_subflows(shape, structure);

    std::vector<std::string> flow_names(structure.size());
    for (std::size_t k = 0; k < structure.size(); ++k) {
        flow_names[k] = structure[k].name ? *structure[k].name
                                          : default_flow_name(shape, structure[k]);
    }

    std::vector<VertexInfo> vertices;
    vertices.reserve(subflows.size());
    std::set<std::string> used;
    for (const auto& subflow : subflows) {
        const auto& spec = structure[subflow.flow_index];
        VertexInfo info;
        info.kind = kind_of(shape, spec);
        info.flow_index = subflow.flow_index;
        info.input = spec.input;
        info.output = subflow.output;
        info.label = flow_names[subflow.flow_index] + port_token(subflow.output);
        while (!used.insert(info.label).second) {
            info.label += "'";
        }
        vertices.push_back(std::move(info));
    }

    ConflictGraph g(std::move(vertices));
    for (int a = 0; a < g.vertex_count(); ++a) {
        for (int b = a + 1; b < g.vertex_count(); ++b) {
            const VertexInfo& va = g.vertex(a);
            const VertexInfo& vb = g.vertex(b);
            if (va.flow_index == vb.flow_index) continue;
            if (va.input == vb.input || va.output == vb.output) {
                g.add_edge(a, b);
            }
        }
    }
    return g;
}

ConflictGraph build_conflict_graph(const TrafficPattern& pattern) {
    TrafficPattern validated = validate_pattern(pattern);
    return build_conflict_graph(validated.shape, structure_of(validated));
}

int KnGraph::unicast_vertex(int input, int output) const {
    return (input - 1) * 2 * outputs + (output - 1);
}

int KnGraph::broadcast_vertex(int input, int output) const {
    return (input - 1) * 2 * outputs + outputs + (output - 1);
}

std::vector<int> KnGraph::unicast_row(int input) const {
    std::vector<int> row;
    for (int j = 1; j <= outputs; ++j) row.push_back(unicast_vertex(input, j));
    return row;
}

std::vector<int> KnGraph::broadcast_row(int input) const {
    std::vector<int> row;
    for (int j = 1; j <= outputs; ++j) row.push_back(broadcast_vertex(input, j));
    return row;
}

std::vector<int> KnGraph::unicast_column(int output) const {
    std::vector<int> column;
    for (int i = 1; i <= inputs; ++i) column.push_back(unicast_vertex(i, output));
    return column;
}

std::vector<int> KnGraph::broadcast_column(int output) const {
    std::vector<int> column;
    for (int i = 1; i <= inputs; ++i) column.push_back(broadcast_vertex(i, output));
    return column;
}

std::vector<int> KnGraph::all_unicasts() const {
    std::vector<int> result;
    for (int i = 1; i <= inputs; ++i) {
        for (int j = 1; j <= outputs; ++j) result.push_back(unicast_vertex(i, j));
    }
    return result;
}

std::vector<int> KnGraph::all_broadcasts() const {
    std::vector<int> result;
    for (int i = 1; i <= inputs; ++i) {
        for (int j = 1; j <= outputs; ++j) result.push_back(broadcast_vertex(i, j));
    }
    return result;
}

KnGraph build_kn_graph(int inputs, int outputs) {
    PortShape shape{inputs, outputs};
    KnGraph kn;
    kn.inputs = inputs;
    kn.outputs = outputs;
    kn.graph = build_conflict_graph(shape, full_unicast_broadcast_structure(shape));
    return kn;
}

ConflictGraph induced_subgraph(const ConflictGraph& g, std::vector<int> keep) {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<VertexInfo> vertices;
    vertices.reserve(keep.size());
    for (int v : keep) {
        if (v < 0 || v >= g.vertex_count()) {
            throw ValidationError("unknown vertex " + std::to_string(v) +
                                  " in induced subgraph");
        }
        vertices.push_back(g.vertex(v));
    }
    ConflictGraph sub(std::move(vertices));
    for (std::size_t a = 0; a < keep.size(); ++a) {
        for (std::size_t b = a + 1; b < keep.size(); ++b) {
            if (g.adjacent(keep[a], keep[b])) {
                sub.add_edge(static_cast<int>(a), static_cast<int>(b));
            }
        }
    }
    return sub;
}

ConflictGraph complement(const ConflictGraph& g) {
    ConflictGraph result(g.vertices());
    for (int a = 0; a < g.vertex_count(); ++a) {
        for (int b = a + 1; b < g.vertex_count(); ++b) {
            if (!g.adjacent(a, b)) result.add_edge(a, b);
        }
    }
    return result;
}

ConflictGraph make_abstract_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<VertexInfo> vertices(n);
    for (int v = 0; v < n; ++v) {
        vertices[v].label = "v" + std::to_string(v);
    }
    ConflictGraph g(std::move(vertices));
    for (const auto& [a, b] : edges) {
        g.add_edge(a, b);
    }
    return g;
}

std::string export_dot(const ConflictGraph& g) {
    std::string out = "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out += "  \"" + g.vertex(v).label + "\";\n";
    }
    for (const auto& [a, b] : g.edges()) {
        out += "  \"" + g.vertex(a).label + "\" -- \"" + g.vertex(b).label + "\";\n";
    }
    out += "}\n";
    return out;
}

std::string export_json(const ConflictGraph& g, int indent) {
    nlohmann::json doc;
    auto vertices = nlohmann::json::array();
    for (int v = 0; v < g.vertex_count(); ++v) {
        vertices.push_back(g.vertex(v).label);
    }
    doc["vertices"] = std::move(vertices);
    auto edges = nlohmann::json::array();
    for (const auto& [a, b] : g.edges()) {
        edges.push_back({a, b});
    }
    doc["edges"] = std::move(edges);
    return doc.dump(indent);
}

ConflictGraph graph_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("graph JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
        throw ValidationError("graph JSON: expected an object with a \"vertices\" array");
    }
    std::vector<VertexInfo> vertices;
    std::map<std::string, int> by_label;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_string()) {
            throw ValidationError("graph JSON: vertices must be label strings");
        }
        VertexInfo info;
        info.label = v.get<std::string>();
        if (!by_label.emplace(info.label, static_cast<int>(vertices.size())).second) {
            throw ValidationError("graph JSON: duplicate vertex label " + info.label);
        }
        vertices.push_back(std::move(info));
    }
    ConflictGraph g(std::move(vertices));
    for (const auto& e : doc.value("edges", nlohmann::json::array())) {
        if (!e.is_array() || e.size() != 2) {
            throw ValidationError("graph JSON: edges must be [a, b] pairs");
        }
        int endpoints[2];
        for (int k = 0; k < 2; ++k) {
            if (e[k].is_number_integer()) {
                endpoints[k] = e[k].get<int>();
            } else if (e[k].is_string()) {
                auto it = by_label.find(e[k].get<std::string>());
                if (it == by_label.end()) {
                    throw ValidationError("graph JSON: unknown vertex label " +
                                          e[k].get<std::string>());
                }
                endpoints[k] = it->second;
            } else {
                throw ValidationError("graph JSON: edge endpoints must be indices or labels");
            }
        }
        g.add_edge(endpoints[0], endpoints[1]);
    }
    return g;
}

}  // namespace ecg
