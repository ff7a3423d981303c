#include "treepack/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "treepack/detail/dsu.hpp"
#include "treepack/error.hpp"

namespace treepack {

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : n_(n)
{
    if (n < 0)
        throw InputError("negative vertex count");
    adjacency_.resize(static_cast<std::size_t>(n));
    edge_index_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    for (const auto& [u, v] : edges)
        add_edge(u, v);
}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n)
{
    if (n < 0)
        throw InputError("negative vertex count");
    adjacency_.resize(static_cast<std::size_t>(n));
    edge_index_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    for (const auto& e : edges)
        add_edge(e.u, e.v);
}

void Graph::add_edge(int u, int v)
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range for n=" +
                         std::to_string(n_));
    if (u == v)
        throw InputError("self-loop at vertex " + std::to_string(u));
    if (u > v)
        std::swap(u, v);
    if (edge_id(u, v) >= 0)
        throw InputError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    const int id = size();
    edges_.push_back({u, v});
    edge_index_[static_cast<std::size_t>(u) * n_ + v] = id;
    edge_index_[static_cast<std::size_t>(v) * n_ + u] = id;
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
}

int Graph::edge_id(int u, int v) const
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        return -1;
    return edge_index_[static_cast<std::size_t>(u) * n_ + v];
}

int Graph::min_degree() const
{
    if (n_ == 0)
        return 0;
    int best = degree(0);
    for (int v = 1; v < n_; ++v)
        best = std::min(best, degree(v));
    return best;
}

std::vector<std::pair<int, int>> Graph::edge_pairs() const
{
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_)
        out.emplace_back(e.u, e.v);
    return out;
}

void validate_vertex_set(const VertexSet& s, int n)
{
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= n)
            throw InputError("vertex " + std::to_string(s[i]) + " out of range");
        if (i > 0 && s[i - 1] >= s[i])
            throw InputError("vertex set must be sorted and duplicate-free");
    }
}

void VertexPartition::validate(int n) const
{
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int covered = 0;
    for (const auto& part : parts) {
        if (part.empty())
            throw InputError("partition has an empty part");
        validate_vertex_set(part, n);
        for (int v : part) {
            if (seen[v])
                throw InputError("partition parts overlap at vertex " + std::to_string(v));
            seen[v] = 1;
            ++covered;
        }
    }
    if (covered != n)
        throw InputError("partition does not cover the vertex set");
}

VertexPartition VertexPartition::canonical() const
{
    VertexPartition out = *this;
    for (auto& part : out.parts)
        std::sort(part.begin(), part.end());
    std::sort(out.parts.begin(), out.parts.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
    return out;
}

std::vector<int> VertexPartition::labels(int n) const
{
    std::vector<int> out(static_cast<std::size_t>(n), -1);
    const auto canon = canonical();
    for (int i = 0; i < canon.size(); ++i)
        for (int v : canon.parts[i])
            out[v] = i;
    return out;
}

VertexPartition VertexPartition::from_labels(std::span<const int> labels)
{
    std::vector<int> remap;
    VertexPartition out;
    for (std::size_t v = 0; v < labels.size(); ++v) {
        const int l = labels[v];
        if (l < 0)
            throw InputError("negative part label");
        if (static_cast<std::size_t>(l) >= remap.size())
            remap.resize(static_cast<std::size_t>(l) + 1, -1);
        if (remap[l] < 0) {
            remap[l] = out.size();
            out.parts.emplace_back();
        }
        out.parts[remap[l]].push_back(static_cast<int>(v));
    }
    return out;
}

std::vector<int> component_labels(const Graph& g)
{
    const int n = g.order();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0)
            continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (comp[w] < 0) {
                    comp[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

std::vector<VertexSet> components(const Graph& g)
{
    const auto comp = component_labels(g);
    int count = 0;
    for (int c : comp)
        count = std::max(count, c + 1);
    std::vector<VertexSet> out(static_cast<std::size_t>(count));
    for (int v = 0; v < g.order(); ++v)
        out[comp[v]].push_back(v);
    return out;
}

bool is_connected(const Graph& g)
{
    return g.order() <= 1 || components(g).size() == 1;
}

bool is_forest(const Graph& g, std::span<const int> edge_ids)
{
    detail::DisjointSets dsu(g.order());
    for (int id : edge_ids) {
        if (id < 0 || id >= g.size())
            throw InputError("edge id out of range");
        const auto& e = g.edge(id);
        if (!dsu.unite(e.u, e.v))
            return false;
    }
    return true;
}

EdgeSet max_spanning_forest(const Graph& g)
{
    detail::DisjointSets dsu(g.order());
    EdgeSet out;
    for (int id = 0; id < g.size(); ++id) {
        const auto& e = g.edge(id);
        if (dsu.unite(e.u, e.v))
            out.push_back(id);
    }
    return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s)
{
    if (s.empty())
        throw InputError("induced subgraph of an empty vertex set");
    validate_vertex_set(s, g.order());
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < s.size(); ++i)
        index[s[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        if (index[e.u] >= 0 && index[e.v] >= 0)
            edges.push_back({std::min(index[e.u], index[e.v]), std::max(index[e.u], index[e.v])});
    }
    return Graph(static_cast<int>(s.size()), std::span<const Edge>(edges));
}

Graph delete_edges(const Graph& g, std::span<const int> edge_ids)
{
    std::vector<char> drop(static_cast<std::size_t>(g.size()), 0);
    for (int id : edge_ids) {
        if (id < 0 || id >= g.size())
            throw InputError("deleted edge is not in E(G)");
        drop[id] = 1;
    }
    std::vector<Edge> kept;
    for (int id = 0; id < g.size(); ++id)
        if (!drop[id])
            kept.push_back(g.edge(id));
    return Graph(g.order(), std::span<const Edge>(kept));
}

int cross_edge_count(const Graph& g, const VertexSet& x, const VertexSet& y)
{
    if (x.empty() || y.empty())
        throw InputError("cross_edge_count needs nonempty sides");
    validate_vertex_set(x, g.order());
    validate_vertex_set(y, g.order());
    std::vector<char> side(static_cast<std::size_t>(g.order()), 0);
    for (int v : x)
        side[v] = 1;
    for (int v : y) {
        if (side[v])
            throw InputError("cross_edge_count sides overlap");
        side[v] = 2;
    }
    int count = 0;
    for (const auto& e : g.edges())
        if (side[e.u] && side[e.v] && side[e.u] != side[e.v])
            ++count;
    return count;
}

int inner_edge_count(const Graph& g, const VertexSet& s)
{
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    for (int v : s)
        in[v] = 1;
    int count = 0;
    for (const auto& e : g.edges())
        if (in[e.u] && in[e.v])
            ++count;
    return count;
}

VertexSet complement(const VertexSet& s, int n)
{
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (int v : s)
        in[v] = 1;
    VertexSet out;
    for (int v = 0; v < n; ++v)
        if (!in[v])
            out.push_back(v);
    return out;
}

}  // namespace treepack
