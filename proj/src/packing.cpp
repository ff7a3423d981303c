#include "treepack/packing.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <string>

#include "treepack/detail/dsu.hpp"
#include "treepack/error.hpp"

namespace treepack {

EdgeSet ForestDecomposition::edges_of(int forest) const
{
    EdgeSet out;
    for (std::size_t id = 0; id < label.size(); ++id)
        if (label[id] == forest)
            out.push_back(static_cast<int>(id));
    return out;
}

int ForestDecomposition::assigned() const
{
    return static_cast<int>(std::count_if(label.begin(), label.end(), [](int l) { return l != 0; }));
}

int ForestDecomposition::count(int forest) const
{
    return static_cast<int>(std::count(label.begin(), label.end(), forest));
}

ForestUnion::ForestUnion(const Graph& g, int forests)
    : graph_(&g), sizes_(static_cast<std::size_t>(forests) + 1, 0), blocked_(static_cast<std::size_t>(g.size()), 0)
{
    if (forests < 0)
        throw InputError("forest count must be nonnegative");
    dec_.forests = forests;
    dec_.label.assign(static_cast<std::size_t>(g.size()), 0);
}

ForestUnion::ForestUnion(const Graph& g, ForestDecomposition start)
    : graph_(&g), dec_(std::move(start)), blocked_(static_cast<std::size_t>(g.size()), 0)
{
    if (const auto check = verify_decomposition(g, dec_, 0); !check)
        throw InputError("invalid starting decomposition: " + check.reason);
    sizes_.assign(static_cast<std::size_t>(dec_.forests) + 1, 0);
    for (int l : dec_.label) {
        if (l != 0) {
            ++sizes_[l];
            ++assigned_;
        }
    }
}

void ForestUnion::add_forest()
{
    ++dec_.forests;
    sizes_.push_back(0);
}

void ForestUnion::remove(int edge)
{
    int& l = dec_.label[static_cast<std::size_t>(edge)];
    if (l == 0)
        return;
    --sizes_[l];
    --assigned_;
    l = 0;
}

void ForestUnion::saturate()
{
    for (int id = 0; id < graph_->size(); ++id)
        if (dec_.label[id] == 0 && !blocked_[id])
            insert(id);
}

bool ForestUnion::insert(int edge)
{
    const Graph& g = *graph_;
    auto& label = dec_.label;
    if (label[edge] != 0)
        return true;
    if (blocked_[edge])
        return false;
    const int n = g.order();
    const int t = dec_.forests;
    if (t == 0)
        return false;

    // Root every tree of every forest: component id, parent vertex, parent edge, depth.
    const auto stride = static_cast<std::size_t>(n);
    std::vector<int> comp(stride * t, -1), parent(stride * t, -1), parent_edge(stride * t, -1), depth(stride * t, 0);
    {
        std::vector<std::vector<std::pair<int, int>>> adj(stride);
        std::vector<int> stack;
        for (int j = 1; j <= t; ++j) {
            for (auto& a : adj)
                a.clear();
            for (int id = 0; id < g.size(); ++id) {
                if (label[id] == j) {
                    adj[g.edge(id).u].emplace_back(g.edge(id).v, id);
                    adj[g.edge(id).v].emplace_back(g.edge(id).u, id);
                }
            }
            const std::size_t base = stride * (j - 1);
            for (int root = 0; root < n; ++root) {
                if (comp[base + root] >= 0)
                    continue;
                comp[base + root] = root;
                stack.push_back(root);
                while (!stack.empty()) {
                    const int v = stack.back();
                    stack.pop_back();
                    for (const auto& [w, id] : adj[v]) {
                        if (comp[base + w] >= 0)
                            continue;
                        comp[base + w] = root;
                        parent[base + w] = v;
                        parent_edge[base + w] = id;
                        depth[base + w] = depth[base + v] + 1;
                        stack.push_back(w);
                    }
                }
            }
        }
    }

    std::vector<int> pred(static_cast<std::size_t>(g.size()), -2);
    pred[edge] = -1;
    std::deque<int> queue{edge};
    std::vector<int> path;
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        const auto& ex = g.edge(x);
        for (int j = 1; j <= t; ++j) {
            if (j == label[x])
                continue;
            const std::size_t base = stride * (j - 1);
            int a = ex.u;
            int b = ex.v;
            if (comp[base + a] != comp[base + b]) {
                // Shift the chain: x enters F_j, each predecessor takes its successor's old label.
                int cur = x;
                int incoming = j;
                while (cur != -1) {
                    const int old = label[cur];
                    label[cur] = incoming;
                    incoming = old;
                    cur = pred[cur];
                }
                ++sizes_[j];
                ++assigned_;
                return true;
            }
            path.clear();
            std::vector<int> tail;
            while (depth[base + a] > depth[base + b]) {
                path.push_back(parent_edge[base + a]);
                a = parent[base + a];
            }
            while (depth[base + b] > depth[base + a]) {
                tail.push_back(parent_edge[base + b]);
                b = parent[base + b];
            }
            while (a != b) {
                path.push_back(parent_edge[base + a]);
                a = parent[base + a];
                tail.push_back(parent_edge[base + b]);
                b = parent[base + b];
            }
            path.insert(path.end(), tail.rbegin(), tail.rend());
            for (int y : path) {
                if (pred[y] == -2) {
                    pred[y] = x;
                    queue.push_back(y);
                }
            }
        }
    }
    return false;
}

ForestDecomposition max_forest_union(const Graph& g, int t)
{
    if (t < 1)
        throw InputError("max_forest_union needs t >= 1");
    ForestUnion fu(g, t);
    fu.saturate();
    return fu.decomposition();
}

TreePacking tau(const Graph& g)
{
    const int n = g.order();
    if (n < 2)
        throw InputError("tau is undefined for graphs with fewer than 2 vertices");
    TreePacking out;
    out.trees.label.assign(static_cast<std::size_t>(g.size()), 0);
    if (!is_connected(g))
        return out;
    ForestUnion fu(g, 0);
    int t = 0;
    while (true) {
        fu.add_forest();
        fu.saturate();
        if (fu.count(t + 1) != n - 1)
            break;
        ++t;
    }
    out.tau = t;
    out.trees.forests = t;
    const auto& labels = fu.decomposition().label;
    for (std::size_t id = 0; id < labels.size(); ++id)
        out.trees.label[id] = labels[id] <= t ? labels[id] : 0;
    return out;
}

PartitionCertificate make_certificate(const Graph& g, const VertexPartition& p)
{
    p.validate(g.order());
    if (p.size() < 2)
        throw InputError("a fractional-packing certificate needs at least 2 parts");
    PartitionCertificate cert;
    cert.partition = p.canonical();
    const auto labels = cert.partition.labels(g.order());
    for (const auto& e : g.edges())
        if (labels[e.u] != labels[e.v])
            ++cert.cross_total;
    cert.ratio = Rational(cert.cross_total, p.size() - 1);
    return cert;
}

namespace {

class PartitionEnumerator {
public:
    explicit PartitionEnumerator(const Graph& g) : g_(g), n_(g.order()), labels_(static_cast<std::size_t>(n_), 0)
    {
        earlier_.resize(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v)
            for (int u : g.neighbors(v))
                if (u < v)
                    earlier_[v].push_back(u);
    }

    void run() { visit(0, 0, 0); }

    bool found = false;
    long best_cross = 0;
    int best_parts = 0;
    std::vector<int> best_labels;

private:
    // best_cross / (best_parts - 1) <= cross / (parts - 1)
    bool incumbent_at_most(long cross, int parts) const
    {
        return best_cross * static_cast<long>(parts - 1) <= cross * static_cast<long>(best_parts - 1);
    }

    void visit(int v, int parts, long cross)
    {
        if (v == n_) {
            if (parts < 2)
                return;
            if (!found || !incumbent_at_most(cross, parts)) {
                found = true;
                best_cross = cross;
                best_parts = parts;
                best_labels = labels_;
            }
            return;
        }
        const int max_parts = parts + (n_ - v);
        if (found && max_parts >= 2 && incumbent_at_most(cross, max_parts))
            return;
        std::vector<int> in_block(static_cast<std::size_t>(parts) + 1, 0);
        for (int u : earlier_[v])
            ++in_block[labels_[u]];
        const long earlier = static_cast<long>(earlier_[v].size());
        for (int b = 0; b <= parts; ++b) {
            labels_[v] = b;
            visit(v + 1, std::max(parts, b + 1), cross + earlier - in_block[b]);
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> labels_;
    std::vector<std::vector<int>> earlier_;
};

}  // namespace

PartitionCertificate nu_f_exact(const Graph& g, int max_n)
{
    const int n = g.order();
    if (n < 2)
        throw InputError("nu_f needs at least 2 vertices");
    if (n > max_n)
        throw InputError("nu_f_exact: n=" + std::to_string(n) + " exceeds the exact cutoff " + std::to_string(max_n) +
                         "; use nu_f_bounds");
    PartitionEnumerator en(g);
    en.run();
    return make_certificate(g, VertexPartition::from_labels(en.best_labels));
}

namespace {

struct Candidate {
    long cross = 0;
    int parts = 0;
    std::vector<int> labels;
};

// a strictly better than b
bool better_ratio(long a_cross, int a_parts, long b_cross, int b_parts)
{
    return a_cross * static_cast<long>(b_parts - 1) < b_cross * static_cast<long>(a_parts - 1);
}

std::vector<int> compress(std::vector<int> labels)
{
    std::vector<int> remap;
    int next = 0;
    for (int& l : labels) {
        if (static_cast<std::size_t>(l) >= remap.size())
            remap.resize(static_cast<std::size_t>(l) + 1, -1);
        if (remap[l] < 0)
            remap[l] = next++;
        l = remap[l];
    }
    return labels;
}

Candidate evaluate(const Graph& g, std::vector<int> labels)
{
    Candidate c;
    c.labels = compress(std::move(labels));
    c.parts = c.labels.empty() ? 0 : *std::max_element(c.labels.begin(), c.labels.end()) + 1;
    for (const auto& e : g.edges())
        if (c.labels[e.u] != c.labels[e.v])
            ++c.cross;
    return c;
}

// Component ids of G[block], -1 outside the block.
std::vector<int> block_components(const Graph& g, const std::vector<int>& labels, int block, int& count)
{
    std::vector<int> comp(labels.size(), -1);
    count = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.order(); ++s) {
        if (labels[s] != block || comp[s] >= 0)
            continue;
        comp[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (labels[w] == block && comp[w] < 0) {
                    comp[w] = count;
                    stack.push_back(w);
                }
            }
        }
        ++count;
    }
    return comp;
}

Candidate descend(const Graph& g, Candidate cur)
{
    const int n = g.order();
    while (true) {
        const int p = cur.parts;
        std::vector<long> nb(static_cast<std::size_t>(n) * p, 0);
        std::vector<int> sizes(static_cast<std::size_t>(p), 0);
        for (int v = 0; v < n; ++v) {
            ++sizes[cur.labels[v]];
            for (int w : g.neighbors(v))
                ++nb[static_cast<std::size_t>(v) * p + cur.labels[w]];
        }
        long best_cross = cur.cross;
        int best_parts = p;
        std::vector<int> best_labels;
        auto offer = [&](long cross, int parts, auto&& make) {
            if (parts >= 2 && better_ratio(cross, parts, best_cross, best_parts)) {
                best_cross = cross;
                best_parts = parts;
                best_labels = make();
            }
        };
        for (int v = 0; v < n; ++v) {
            const int a = cur.labels[v];
            const long own = nb[static_cast<std::size_t>(v) * p + a];
            for (int b = 0; b < p; ++b) {
                if (b == a)
                    continue;
                const long cross = cur.cross - nb[static_cast<std::size_t>(v) * p + b] + own;
                const int parts = sizes[a] == 1 ? p - 1 : p;
                offer(cross, parts, [&] {
                    auto l = cur.labels;
                    l[v] = b;
                    return l;
                });
            }
            if (sizes[a] >= 2) {
                offer(cur.cross + own, p + 1, [&] {
                    auto l = cur.labels;
                    l[v] = p;
                    return l;
                });
            }
        }
        if (p >= 3) {
            for (int a = 0; a < p; ++a) {
                for (int b = a + 1; b < p; ++b) {
                    long between = 0;
                    for (int v = 0; v < n; ++v)
                        if (cur.labels[v] == a)
                            between += nb[static_cast<std::size_t>(v) * p + b];
                    offer(cur.cross - between, p - 1, [&] {
                        auto l = cur.labels;
                        for (int& x : l)
                            if (x == b)
                                x = a;
                        return l;
                    });
                }
            }
        }
        for (int a = 0; a < p; ++a) {
            int count = 0;
            const auto comp = block_components(g, cur.labels, a, count);
            if (count < 2)
                continue;
            offer(cur.cross, p + count - 1, [&] {
                auto l = cur.labels;
                for (int v = 0; v < n; ++v)
                    if (comp[v] > 0)
                        l[v] = p + comp[v] - 1;
                return l;
            });
        }
        if (best_labels.empty())
            return cur;
        cur = evaluate(g, std::move(best_labels));
    }
}

}  // namespace

NuFBounds nu_f_bounds(const Graph& g, const LocalSearchOptions& options)
{
    const int n = g.order();
    if (n < 2)
        throw InputError("nu_f needs at least 2 vertices");
    NuFBounds out;
    out.lower = Rational(tau(g).tau);

    std::vector<Candidate> starts;
    {
        const auto comp = component_labels(g);
        if (*std::max_element(comp.begin(), comp.end()) >= 1)
            starts.push_back(evaluate(g, comp));
    }
    {
        std::vector<int> singles(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            singles[v] = v;
        starts.push_back(evaluate(g, singles));
    }
    for (int r = 0; r < options.restarts; ++r) {
        std::mt19937_64 rng(options.first_seed + static_cast<std::uint64_t>(r));
        const int p0 = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(4, n - 1)));
        std::vector<int> labels(static_cast<std::size_t>(n));
        for (int& l : labels)
            l = static_cast<int>(rng() % static_cast<std::uint64_t>(p0));
        if (std::all_of(labels.begin(), labels.end(), [&](int l) { return l == labels[0]; }))
            labels[0] = labels[0] == 0 ? 1 : 0;
        starts.push_back(evaluate(g, labels));
    }

    bool have = false;
    Candidate best;
    for (auto& start : starts) {
        auto local = descend(g, std::move(start));
        if (!have || better_ratio(local.cross, local.parts, best.cross, best.parts) ||
            (!better_ratio(best.cross, best.parts, local.cross, local.parts) && local.labels < best.labels)) {
            best = std::move(local);
            have = true;
        }
    }
    out.upper_certificate = make_certificate(g, VertexPartition::from_labels(best.labels));
    out.upper = out.upper_certificate.ratio;
    return out;
}

DecompositionCheck verify_decomposition(const Graph& g, const ForestDecomposition& d, int require_spanning)
{
    if (static_cast<int>(d.label.size()) != g.size())
        return {false, "label vector length differs from edge count"};
    if (require_spanning < 0 || require_spanning > d.forests)
        return {false, "require_spanning exceeds the forest count"};
    for (int l : d.label)
        if (l < 0 || l > d.forests)
            return {false, "label out of range"};
    for (int f = 1; f <= d.forests; ++f) {
        const auto edges = d.edges_of(f);
        if (!is_forest(g, edges))
            return {false, "label " + std::to_string(f) + " contains a cycle"};
        if (f <= require_spanning && static_cast<int>(edges.size()) != g.order() - 1)
            return {false, "label " + std::to_string(f) + " is not a spanning tree"};
    }
    return {true, {}};
}

}  // namespace treepack
