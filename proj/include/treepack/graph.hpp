#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace treepack {

/// Undirected edge with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free subset of 0..n-1.
using VertexSet = std::vector<int>;

/// Indices into Graph::edges().
using EdgeSet = std::vector<int>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges keep their insertion order; that order is the canonical edge order
/// used by every deterministic algorithm in the library. Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Throws InputError on out-of-range endpoints, self-loops, or duplicates.
    Graph(int n, std::span<const std::pair<int, int>> edges);
    Graph(int n, std::span<const Edge> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }

    std::span<const int> neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
    /// 0 for the empty graph.
    int min_degree() const;

    bool adjacent(int u, int v) const { return edge_id(u, v) >= 0; }
    /// Index of edge {u,v}, or -1.
    int edge_id(int u, int v) const;

    std::vector<std::pair<int, int>> edge_pairs() const;

private:
    void add_edge(int u, int v);

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<int> edge_index_;  // n*n, -1 when absent
};

/// Ordered partition of the vertex set into nonempty parts.
struct VertexPartition {
    std::vector<VertexSet> parts;

    int size() const { return static_cast<int>(parts.size()); }

    /// Throws InputError unless the parts are nonempty, disjoint, sorted, and cover 0..n-1.
    void validate(int n) const;

    /// Parts sorted internally and ordered by smallest element.
    VertexPartition canonical() const;

    /// Restricted-growth labelling: part index of each vertex in canonical order.
    std::vector<int> labels(int n) const;
    static VertexPartition from_labels(std::span<const int> labels);

    friend bool operator==(const VertexPartition&, const VertexPartition&) = default;
};

void validate_vertex_set(const VertexSet& s, int n);

// Structural queries.

std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

/// Component id per vertex; ids follow the order of smallest vertex.
std::vector<int> component_labels(const Graph& g);

/// Whether the edge subset is acyclic on V(G). Duplicate ids count as a cycle.
bool is_forest(const Graph& g, std::span<const int> edge_ids);

/// Greedy spanning forest in canonical edge order; n - #components edges.
EdgeSet max_spanning_forest(const Graph& g);

/// G[S] with vertices relabelled 0..|S|-1 in the order of S.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

/// G - E1; remaining edges keep their relative order.
Graph delete_edges(const Graph& g, std::span<const int> edge_ids);

/// e(X, Y) for disjoint nonempty X and Y.
int cross_edge_count(const Graph& g, const VertexSet& x, const VertexSet& y);

/// Number of edges with both ends in S.
int inner_edge_count(const Graph& g, const VertexSet& s);

/// Complement V \ S.
VertexSet complement(const VertexSet& s, int n);

}  // namespace treepack
