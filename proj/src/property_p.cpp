#include "treepack/property_p.hpp"

#include <algorithm>
#include <set>

#include "treepack/detail/dsu.hpp"
#include "treepack/error.hpp"

namespace treepack {

void PQuery::validate() const
{
    if (k < 1 || d < 1)
        throw InputError("P(k, d) needs k >= 1 and d >= 1");
}

const char* to_string(PStatus s)
{
    switch (s) {
    case PStatus::certified:
        return "certified";
    case PStatus::refuted:
        return "refuted";
    case PStatus::unknown:
        return "unknown";
    }
    return "unknown";
}

const char* to_string(RefutationKind k)
{
    switch (k) {
    case RefutationKind::counting:
        return "counting";
    case RefutationKind::bipartition_budget:
        return "bipartition_budget";
    case RefutationKind::exhaustive:
        return "exhaustive";
    }
    return "counting";
}

std::int64_t Refutation::number(const std::string& name) const
{
    for (const auto& [key, value] : numbers)
        if (key == name)
            return value;
    throw InputError("refutation has no number '" + name + "'");
}

bool forest_large_enough(int d, int n, std::int64_t forest_edges)
{
    return static_cast<std::int64_t>(d) * forest_edges > static_cast<std::int64_t>(d - 1) * (n - 1);
}

namespace {

// Largest component edge count of an acyclic edge set.
int largest_component_edges(const Graph& g, const EdgeSet& forest)
{
    detail::DisjointSets dsu(g.order());
    for (int id : forest)
        dsu.unite(g.edge(id).u, g.edge(id).v);
    std::vector<int> count(static_cast<std::size_t>(g.order()), 0);
    int best = 0;
    for (int id : forest)
        best = std::max(best, ++count[dsu.find(g.edge(id).u)]);
    return best;
}

PVerdict unknown(std::string stage, std::string note)
{
    PVerdict v;
    v.stage = std::move(stage);
    v.note = std::move(note);
    return v;
}

PVerdict refuted(std::string stage, Refutation r)
{
    PVerdict v;
    v.status = PStatus::refuted;
    v.stage = std::move(stage);
    v.refutation = std::move(r);
    return v;
}

ForestDecomposition with_forest(const ForestDecomposition& trees, int k, const EdgeSet& forest)
{
    ForestDecomposition d;
    d.forests = k + 1;
    d.label.assign(trees.label.size(), 0);
    for (std::size_t id = 0; id < trees.label.size(); ++id)
        if (trees.label[id] >= 1 && trees.label[id] <= k)
            d.label[id] = trees.label[id];
    for (int id : forest)
        d.label[id] = k + 1;
    return d;
}

}  // namespace

bool forest_has_big_component(const Graph& g, const EdgeSet& forest, int d)
{
    if (static_cast<int>(forest.size()) == g.order() - 1)
        return true;
    return largest_component_edges(g, forest) >= d;
}

DecompositionCheck verify_certificate(const Graph& g, const PQuery& q, const ForestDecomposition& d)
{
    if (d.forests != q.k + 1)
        return {false, "certificate needs exactly k + 1 labels"};
    if (auto check = verify_decomposition(g, d, q.k); !check)
        return check;
    const auto forest = d.edges_of(q.k + 1);
    if (!forest_large_enough(q.d, g.order(), static_cast<std::int64_t>(forest.size())))
        return {false, "forest has " + std::to_string(forest.size()) + " edges, not more than (d-1)(n-1)/d"};
    if (!forest_has_big_component(g, forest, q.d))
        return {false, "forest is not a spanning tree and has no component with at least d edges"};
    return {true, {}};
}

PVerdict sufficient_by_nuf(const Graph& g, const PQuery& q, int exact_limit)
{
    q.validate();
    if (g.order() < 2)
        return unknown("nu_f", "fewer than 2 vertices");
    const Rational threshold = Rational(q.k) + Rational(q.d - 1, q.d);
    const int t = tau(g).tau;
    auto certified = [&](const Rational& bound, std::string note) {
        PVerdict v;
        v.status = PStatus::certified;
        v.stage = "nu_f";
        v.nu_f_bound = bound;
        v.note = std::move(note);
        return v;
    };
    if (Rational(t) > threshold)
        return certified(Rational(t), "nu_f >= tau = " + std::to_string(t) + " > " + threshold.str());
    if (g.order() <= exact_limit) {
        const auto exact = nu_f_exact(g, exact_limit);
        if (exact.ratio > threshold)
            return certified(exact.ratio, "nu_f = " + exact.ratio.str() + " > " + threshold.str());
        auto v = unknown("nu_f", "nu_f = " + exact.ratio.str() + " <= " + threshold.str());
        v.nu_f_bound = exact.ratio;
        return v;
    }
    return unknown("nu_f", "tau = " + std::to_string(t) + " <= " + threshold.str() + " and n exceeds the exact cutoff");
}

PVerdict certify_P(const Graph& g, const PQuery& q)
{
    q.validate();
    const int n = g.order();
    if (n < 2)
        return unknown("constructive", "fewer than 2 vertices");
    const auto packing = tau(g);
    if (packing.tau < q.k)
        return unknown("constructive", "fewer than k edge-disjoint spanning trees");

    ForestDecomposition start;
    start.forests = q.k;
    start.label.assign(packing.trees.label.size(), 0);
    for (std::size_t id = 0; id < start.label.size(); ++id)
        if (packing.trees.label[id] <= q.k)
            start.label[id] = packing.trees.label[id];
    ForestUnion fu(g, std::move(start));
    fu.add_forest();
    fu.saturate();
    ForestDecomposition dec = fu.decomposition();
    const int f = q.k + 1;
    if (!forest_large_enough(q.d, n, fu.count(f)))
        return unknown("constructive", "maximum forest beside k trees has " + std::to_string(fu.count(f)) + " edges");

    // Hill-climb on the largest component of F; every move keeps |F| and keeps the trees spanning.
    auto objective = [&](const ForestDecomposition& d) {
        const auto forest = d.edges_of(f);
        if (static_cast<int>(forest.size()) == n - 1)
            return n;
        return largest_component_edges(g, forest);
    };
    auto labels_acyclic = [&](const ForestDecomposition& d, int label) { return is_forest(g, d.edges_of(label)); };
    int score = objective(dec);
    for (int moves = 0; moves < 2000 && score < q.d; ++moves) {
        bool improved = false;
        for (int out = 0; out < g.size() && !improved; ++out) {
            if (dec.label[out] != f)
                continue;
            for (int in = 0; in < g.size() && !improved; ++in) {
                const int other = dec.label[in];
                if (other == f)
                    continue;
                ForestDecomposition trial = dec;
                trial.label[out] = other;
                trial.label[in] = f;
                if (!labels_acyclic(trial, f))
                    continue;
                if (other != 0 && !labels_acyclic(trial, other))
                    continue;
                if (const int s = objective(trial); s > score) {
                    dec = std::move(trial);
                    score = s;
                    improved = true;
                }
            }
        }
        if (!improved)
            break;
    }
    if (auto check = verify_certificate(g, q, dec); !check)
        return unknown("constructive", check.reason);
    PVerdict v;
    v.status = PStatus::certified;
    v.stage = "constructive";
    v.decomposition = std::move(dec);
    return v;
}

PVerdict refute_by_counting(const Graph& g, const PQuery& q)
{
    q.validate();
    const std::int64_t n = g.order();
    const std::int64_t m = g.size();
    if (n < 2)
        return unknown("counting", "fewer than 2 vertices");
    const int t = tau(g).tau;
    if (t < q.k) {
        Refutation r;
        r.kind = RefutationKind::counting;
        r.reason = "tau < k";
        r.numbers = {{"tau", t}, {"k", q.k}};
        return refuted("counting", std::move(r));
    }
    const std::int64_t residual = m - static_cast<std::int64_t>(q.k) * (n - 1);
    const std::int64_t lhs = static_cast<std::int64_t>(q.d) * residual;
    const std::int64_t rhs = static_cast<std::int64_t>(q.d - 1) * (n - 1);
    if (lhs <= rhs) {
        Refutation r;
        r.kind = RefutationKind::counting;
        r.reason = "edges left after k spanning trees cannot exceed (d-1)(n-1)/d";
        r.numbers = {{"m", m}, {"k", q.k}, {"n", n}, {"residual", residual}, {"lhs", lhs}, {"rhs", rhs}};
        return refuted("counting", std::move(r));
    }
    return unknown("counting", "residual " + std::to_string(residual) + " edges leave room for F");
}

PVerdict refute_by_bipartition_budget(const Graph& g, const PQuery& q, const VertexSet& side)
{
    q.validate();
    const int n = g.order();
    if (side.empty() || static_cast<int>(side.size()) >= n)
        throw InputError("bipartition side must be a proper nonempty subset");
    validate_vertex_set(side, n);
    const VertexSet other = complement(side, n);
    const std::int64_t cross = cross_edge_count(g, side, other);
    Refutation r;
    r.kind = RefutationKind::bipartition_budget;
    r.side = side;
    if (cross < q.k) {
        r.reason = "fewer than k edges cross the cut, so tau < k";
        r.numbers = {{"cross", cross}, {"k", q.k}};
        return refuted("bipartition_budget", std::move(r));
    }
    if (cross > q.k)
        return unknown("bipartition_budget", "more than k edges cross the cut");

    const std::int64_t nu = static_cast<std::int64_t>(side.size());
    const std::int64_t nw = static_cast<std::int64_t>(other.size());
    const std::int64_t spare_u = inner_edge_count(g, side) - static_cast<std::int64_t>(q.k) * (nu - 1);
    const std::int64_t spare_w = inner_edge_count(g, other) - static_cast<std::int64_t>(q.k) * (nw - 1);
    if (spare_u < 0 || spare_w < 0) {
        r.reason = "one side cannot hold its share of k spanning trees";
        r.numbers = {{"cross", cross}, {"k", q.k}, {"spare_u", spare_u}, {"spare_w", spare_w}};
        return refuted("bipartition_budget", std::move(r));
    }
    const std::int64_t bound = std::min(nu - 1, spare_u) + std::min(nw - 1, spare_w);
    const std::int64_t lhs = static_cast<std::int64_t>(q.d) * bound;
    const std::int64_t rhs = static_cast<std::int64_t>(q.d - 1) * (n - 1);
    r.numbers = {{"cross", cross}, {"k", q.k},       {"size_u", nu}, {"size_w", nw}, {"spare_u", spare_u},
                 {"spare_w", spare_w}, {"bound", bound}, {"lhs", lhs}, {"rhs", rhs}};
    if (lhs <= rhs) {
        r.reason = "every tree crosses the cut once, so F stays inside the sides and has at most `bound` edges";
        return refuted("bipartition_budget", std::move(r));
    }
    return unknown("bipartition_budget", "side budget " + std::to_string(bound) + " leaves room for F");
}

namespace {

class ForestSearch {
public:
    ForestSearch(const Graph& g, const PQuery& q, std::uint64_t budget)
        : g_(g), q_(q), n_(g.order()), m_(g.size()), budget_(budget), in_forest_(static_cast<std::size_t>(m_), 0)
    {
        // Smallest |F| passing the size condition, and the room left beside k trees.
        min_size_ = static_cast<int>(static_cast<std::int64_t>(q.d - 1) * (n_ - 1) / q.d) + 1;
        max_size_ = std::min(n_ - 1, m_ - q.k * (n_ - 1));
    }

    int min_size() const { return min_size_; }
    int max_size() const { return max_size_; }

    // True when a witness was found.
    bool run(ForestUnion& trees) { return visit(0, trees); }

    std::uint64_t steps = 0;
    bool aborted = false;
    std::optional<ForestDecomposition> witness;

private:
    bool visit(int next, ForestUnion& trees)
    {
        if (++steps > budget_) {
            aborted = true;
            return false;
        }
        if (static_cast<int>(forest_.size()) >= min_size_ && forest_has_big_component(g_, forest_, q_.d)) {
            witness = with_forest(trees.decomposition(), q_.k, forest_);
            return true;
        }
        if (next == m_ || !reachable(next))
            return false;

        if (static_cast<int>(forest_.size()) < max_size_ && stays_acyclic(next)) {
            ForestUnion reduced = trees;
            reduced.set_blocked(next, true);
            bool feasible = true;
            if (reduced.decomposition().label[next] != 0) {
                reduced.remove(next);
                feasible = repair(reduced);
            }
            if (feasible) {
                forest_.push_back(next);
                in_forest_[next] = 1;
                const bool found = visit(next + 1, reduced);
                forest_.pop_back();
                in_forest_[next] = 0;
                if (found || aborted)
                    return found;
            }
        }
        return visit(next + 1, trees);
    }

    // Restores k spanning trees after one tree edge was withdrawn.
    static bool repair(ForestUnion& trees)
    {
        const auto& label = trees.decomposition().label;
        for (std::size_t id = 0; id < label.size(); ++id) {
            if (label[id] != 0 || trees.blocked(static_cast<int>(id)))
                continue;
            if (trees.insert(static_cast<int>(id)))
                return true;
        }
        return false;
    }

    bool stays_acyclic(int edge) const
    {
        detail::DisjointSets dsu(n_);
        for (int id : forest_)
            dsu.unite(g_.edge(id).u, g_.edge(id).v);
        return dsu.find(g_.edge(edge).u) != dsu.find(g_.edge(edge).v);
    }

    // Whether F plus the undecided edges can still produce a witness.
    bool reachable(int next) const
    {
        detail::DisjointSets dsu(n_);
        int joins = 0;
        for (int id : forest_)
            joins += dsu.unite(g_.edge(id).u, g_.edge(id).v);
        for (int id = next; id < m_; ++id)
            joins += dsu.unite(g_.edge(id).u, g_.edge(id).v);
        if (std::min(joins, max_size_) < min_size_)
            return false;
        if (joins >= n_ - 1 && max_size_ >= n_ - 1)
            return true;
        std::vector<int> size(static_cast<std::size_t>(n_), 0);
        int largest = 0;
        for (int v = 0; v < n_; ++v)
            largest = std::max(largest, ++size[dsu.find(v)]);
        return std::min(largest - 1, max_size_) >= q_.d;
    }

    const Graph& g_;
    PQuery q_;
    int n_;
    int m_;
    std::uint64_t budget_;
    int min_size_ = 0;
    int max_size_ = 0;
    EdgeSet forest_;
    std::vector<char> in_forest_;
};

}  // namespace

PVerdict refute_exhaustive(const Graph& g, const PQuery& q, std::uint64_t budget)
{
    q.validate();
    const int n = g.order();
    if (n < 2)
        return unknown("exhaustive", "fewer than 2 vertices");
    ForestUnion trees(g, q.k);
    trees.saturate();
    if (trees.assigned() < q.k * (n - 1)) {
        Refutation r;
        r.kind = RefutationKind::exhaustive;
        r.reason = "tau < k";
        r.numbers = {{"k", q.k}, {"max_union", trees.assigned()}, {"needed", q.k * (n - 1)}};
        return refuted("exhaustive", std::move(r));
    }
    ForestSearch search(g, q, budget);
    const bool found = search.run(trees);
    PVerdict v;
    v.stage = "exhaustive";
    v.steps = search.steps;
    if (found) {
        v.status = PStatus::certified;
        v.decomposition = std::move(search.witness);
        if (auto check = verify_certificate(g, q, *v.decomposition); !check)
            throw InternalError("exhaustive search produced an invalid certificate: " + check.reason);
        return v;
    }
    if (search.aborted) {
        v.note = "node budget exhausted";
        return v;
    }
    Refutation r;
    r.kind = RefutationKind::exhaustive;
    r.reason = "no forest F passes the size and component conditions with k spanning trees in G - F";
    r.numbers = {{"steps", static_cast<std::int64_t>(search.steps)},
                 {"min_forest", search.min_size()},
                 {"max_forest", search.max_size()}};
    v.status = PStatus::refuted;
    v.refutation = std::move(r);
    return v;
}

std::vector<VertexSet> bipartition_candidates(const Graph& g, int exact_limit)
{
    const int n = g.order();
    std::set<VertexSet> seen;
    std::vector<VertexSet> out;
    auto offer = [&](VertexSet side) {
        std::sort(side.begin(), side.end());
        if (side.empty() || static_cast<int>(side.size()) >= n)
            return;
        // Identify a cut by the side containing vertex 0.
        VertexSet key = side.front() == 0 ? side : complement(side, n);
        if (seen.insert(key).second)
            out.push_back(std::move(side));
    };
    if (n < 2)
        return out;
    for (const auto& comp : components(g))
        offer(comp);
    const auto cert = n <= exact_limit ? nu_f_exact(g, exact_limit) : nu_f_bounds(g).upper_certificate;
    const auto& parts = cert.partition.parts;
    const int p = static_cast<int>(parts.size());
    if (p <= 12) {
        for (std::uint32_t mask = 1; mask + 1 < (1u << p); ++mask) {
            VertexSet side;
            for (int i = 0; i < p; ++i)
                if (mask & (1u << i))
                    side.insert(side.end(), parts[i].begin(), parts[i].end());
            offer(std::move(side));
        }
    } else {
        for (const auto& part : parts)
            offer(part);
    }
    return out;
}

PVerdict check_P(const Graph& g, const PQuery& q, const CheckOptions& options)
{
    q.validate();
    if (g.order() < 2)
        return unknown("none", "fewer than 2 vertices");

    std::vector<PVerdict> results;
    auto settle = [&](PVerdict v) -> bool {
        const bool definite = v.status != PStatus::unknown;
        if (definite)
            results.push_back(std::move(v));
        return definite && !options.cross_check;
    };
    auto finish = [&]() -> PVerdict {
        if (results.empty())
            return unknown("none", "no stage was conclusive");
        for (const auto& r : results)
            if (r.status != results.front().status)
                throw InternalError("stage '" + r.stage + "' contradicts stage '" + results.front().stage + "'");
        return results.front();
    };

    if (settle(refute_by_counting(g, q)))
        return finish();
    if (settle(sufficient_by_nuf(g, q, options.exact_limit)))
        return finish();
    if (settle(certify_P(g, q)))
        return finish();

    std::vector<VertexSet> sides;
    if (options.bipartition)
        sides.push_back(*options.bipartition);
    for (auto& s : bipartition_candidates(g, options.exact_limit))
        sides.push_back(std::move(s));
    for (const auto& side : sides) {
        if (cross_edge_count(g, side, complement(side, g.order())) > q.k)
            continue;
        if (settle(refute_by_bipartition_budget(g, q, side)))
            return finish();
    }
    if (g.order() <= 12 && g.size() <= 30) {
        if (settle(refute_exhaustive(g, q, options.budget)))
            return finish();
    }
    return finish();
}

}  // namespace treepack
