#pragma once

#include "ecg/traffic.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ecg {

enum class SubflowKind { abstract, unicast, multicast, broadcast };

struct VertexInfo {
    std::string label;
    SubflowKind kind = SubflowKind::abstract;
    int flow_index = -1;  // -1 for abstract vertices
    int input = 0;
    int output = 0;
};

/// Undirected graph on subflow vertices. Two subflows are adjacent iff they
/// belong to different flows and share an input or an output; subflows of one
/// flow are never adjacent. Irreflexive and symmetric by construction.
class ConflictGraph {
public:
    ConflictGraph() = default;
    explicit ConflictGraph(std::vector<VertexInfo> vertices);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    const VertexInfo& vertex(int v) const { return vertices_.at(v); }
    const std::vector<VertexInfo>& vertices() const { return vertices_; }

    bool adjacent(int a, int b) const { return adjacency_[index(a, b)]; }
    void add_edge(int a, int b);

    int edge_count() const;
    /// Edges as (a, b) with a < b, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    /// Vertex index for a label, or -1.
    int find_vertex(const std::string& label) const;

    bool operator==(const ConflictGraph& other) const;

private:
    std::size_t index(int a, int b) const {
        return static_cast<std::size_t>(a) * vertices_.size() + static_cast<std::size_t>(b);
    }
    std::vector<VertexInfo> vertices_;
    std::vector<char> adjacency_;
};

/// Builds the enhanced conflict graph of a flow structure. Vertices follow the
/// canonical subflow order; duplicate (input, outputs) entries are legal here
/// and get disambiguated labels unless explicit flow names are provided.
ConflictGraph build_conflict_graph(PortShape shape, const std::vector<FlowSpec>& structure);
ConflictGraph build_conflict_graph(const TrafficPattern& pattern);

/// The canonical K x N graph: every unicast plus one broadcast per input,
/// with row/column class lookups (U_i, B_i, U^o_j, B^o_j).
struct KnGraph {
    int inputs = 0;
    int outputs = 0;
    ConflictGraph graph;

    int unicast_vertex(int input, int output) const;
    int broadcast_vertex(int input, int output) const;
    std::vector<int> unicast_row(int input) const;     // U_i
    std::vector<int> broadcast_row(int input) const;   // B_i
    std::vector<int> unicast_column(int output) const;   // U^o_j
    std::vector<int> broadcast_column(int output) const;  // B^o_j
    std::vector<int> all_unicasts() const;
    std::vector<int> all_broadcasts() const;
};

KnGraph build_kn_graph(int inputs, int outputs);

/// Adjacency restricted exactly to the given vertices (indices into g,
/// deduplicated and taken in ascending order). Unknown vertices throw.
ConflictGraph induced_subgraph(const ConflictGraph& g, std::vector<int> keep);

ConflictGraph complement(const ConflictGraph& g);

/// Abstract n-vertex graph with labels v0, v1, ... (test and CLI helper).
ConflictGraph make_abstract_graph(int n, const std::vector<std::pair<int, int>>& edges);

/// Deterministic serializations. JSON round-trips to an equal graph.
std::string export_dot(const ConflictGraph& g);
std::string export_json(const ConflictGraph& g, int indent = 2);
ConflictGraph graph_from_json(const std::string& text);

}  // namespace ecg
