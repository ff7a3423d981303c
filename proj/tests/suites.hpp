#pragma once

// Randomized property suites shared by the unit tests and the acceptance binary.
// Each returns how many cases ran and how many violated the property.

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "treepack/generators.hpp"
#include "treepack/packing.hpp"
#include "treepack/property_p.hpp"
#include "treepack/spectral.hpp"

namespace suites {

using namespace treepack;

struct Result {
    int cases = 0;
    int violations = 0;
    std::string first_violation;

    void record(bool ok, const std::string& what)
    {
        ++cases;
        if (!ok && violations++ == 0)
            first_violation = what;
    }
    bool ok() const { return violations == 0 && cases > 0; }
};

inline double uniform(std::mt19937_64& rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int pick(std::mt19937_64& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Graph circulant(int n, const std::vector<int>& jumps)
{
    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v < n; ++v)
        for (int j : jumps) {
            const int w = (v + j) % n;
            const auto e = std::minmax(v, w);
            if (std::find(pairs.begin(), pairs.end(), std::pair{e.first, e.second}) == pairs.end())
                pairs.emplace_back(e.first, e.second);
        }
    return Graph(n, pairs);
}

/// λ₁ <= (δ−1)/2 + sqrt(2m − nδ + (δ+1)²/4), with equality on regular graphs.
inline Result spectral_radius_bound(std::uint64_t seed, int samples = 200)
{
    std::mt19937_64 rng(seed);
    Result r;
    while (r.cases < samples) {
        const int n = pick(rng, 3, 14);
        const Graph g = oracle::random_graph(n, uniform(rng, 0.3, 0.95), rng);
        if (g.min_degree() < 1)
            continue;
        const double bound = hong_nikiforov_bound(n, g.size(), g.min_degree());
        r.record(lambda(g, 1) <= bound + 1e-9, "bound exceeded");
    }
    // Regular graphs: random circulants, complete and complete bipartite graphs.
    for (int t = 0; t < 50; ++t) {
        const int n = pick(rng, 5, 16);
        std::vector<int> jumps;
        for (int j = 1; j <= n / 2; ++j)
            if (rng() % 2)
                jumps.push_back(j);
        if (jumps.empty())
            jumps.push_back(1);
        const Graph g = circulant(n, jumps);
        const int d = g.degree(0);
        r.record(std::abs(lambda(g, 1) - hong_nikiforov_bound(n, g.size(), d)) < 1e-8, "no equality on circulant");
    }
    for (int n = 2; n <= 10; ++n)
        r.record(std::abs(lambda(complete(n), 1) - hong_nikiforov_bound(n, n * (n - 1) / 2, n - 1)) < 1e-8,
                 "no equality on K_n");
    r.record(std::abs(lambda(petersen(), 1) - hong_nikiforov_bound(10, 15, 3)) < 1e-8, "no equality on petersen");
    return r;
}

/// Spectra of principal submatrices interlace the spectrum of A(G).
inline Result principal_interlacing(std::uint64_t seed, int samples = 100)
{
    std::mt19937_64 rng(seed);
    Result r;
    for (int t = 0; t < samples; ++t) {
        const int n = pick(rng, 3, 12);
        const Graph g = oracle::random_graph(n, uniform(rng, 0.2, 0.9), rng);
        std::vector<int> idx(static_cast<std::size_t>(n));
        std::iota(idx.begin(), idx.end(), 0);
        std::shuffle(idx.begin(), idx.end(), rng);
        idx.resize(static_cast<std::size_t>(pick(rng, 1, n - 1)));
        std::sort(idx.begin(), idx.end());
        const auto a = adjacency_matrix(g);
        r.record(check_interlacing(eigenvalues_sym(a.principal_submatrix(idx)), eigenvalues_sym(a)),
                 "principal submatrix does not interlace");
    }
    return r;
}

/// Quotient-matrix eigenvalues interlace those of A(G).
inline Result quotient_interlacing(std::uint64_t seed, int samples = 100)
{
    std::mt19937_64 rng(seed);
    Result r;
    for (int t = 0; t < samples; ++t) {
        const int n = pick(rng, 3, 12);
        const Graph g = oracle::random_graph(n, uniform(rng, 0.2, 0.9), rng);
        const int p = pick(rng, 2, n - 1);
        std::vector<int> labels(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            labels[v] = v < p ? v : pick(rng, 0, p - 1);
        std::shuffle(labels.begin(), labels.end(), rng);
        const auto part = VertexPartition::from_labels(labels);
        r.record(check_interlacing(quotient_spectrum(g, part), adjacency_spectrum(g)), "quotient does not interlace");
    }
    return r;
}

/// e(U, V∖U) <= δ−1 forces |U| >= δ+1. Half the samples are two dense blocks
/// joined by a few edges, so that small cuts actually occur.
inline Result small_cut_sides(std::uint64_t seed, int samples = 200, int* small_cuts = nullptr)
{
    std::mt19937_64 rng(seed);
    Result r;
    int found = 0;
    while (r.cases < samples) {
        const int n = pick(rng, 4, 12);
        Graph g = oracle::random_graph(n, uniform(rng, 0.2, 0.9), rng);
        if (r.cases % 2 == 1) {
            const int split = pick(rng, 1, n - 1);
            auto pairs = disjoint_union(oracle::random_graph(split, 0.9, rng),
                                        oracle::random_graph(n - split, 0.9, rng)).edge_pairs();
            for (int t = pick(rng, 0, 3); t > 0; --t) {
                const int u = pick(rng, 0, split - 1), v = pick(rng, split, n - 1);
                if (std::find(pairs.begin(), pairs.end(), std::pair{u, v}) == pairs.end())
                    pairs.emplace_back(u, v);
            }
            g = Graph(n, pairs);
        }
        const int delta = g.min_degree();
        if (delta < 1)
            continue;
        bool ok = true;
        for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
            VertexSet u, w;
            for (int v = 0; v < n; ++v)
                ((mask >> v) & 1u ? u : w).push_back(v);
            if (cross_edge_count(g, u, w) <= delta - 1) {
                ++found;
                ok = ok && static_cast<int>(u.size()) >= delta + 1;
            }
        }
        r.record(ok, "small side with a small cut");
    }
    if (small_cuts)
        *small_cuts = found;
    return r;
}

/// τ(K_n − k edges) >= k+1 for n in 2k+3..2k+6.
inline Result complete_minus_edges(std::uint64_t seed, int per_case = 50)
{
    std::mt19937_64 rng(seed);
    Result r;
    for (int k = 1; k <= 3; ++k)
        for (int n = 2 * k + 3; n <= 2 * k + 6; ++n)
            for (int s = 0; s < per_case; ++s) {
                const Graph kn = complete(n);
                std::vector<int> ids(static_cast<std::size_t>(kn.size()));
                std::iota(ids.begin(), ids.end(), 0);
                std::shuffle(ids.begin(), ids.end(), rng);
                ids.resize(static_cast<std::size_t>(k));
                r.record(tau(delete_edges(kn, ids)).tau >= k + 1, "K_n minus k edges lost a tree");
            }
    return r;
}

inline long choose2(long x) { return x * (x - 1) / 2; }

/// C(x,2)+C(y,2) <= C(a,2)+C(x+y−a,2) for 2 <= a <= x, y <= 30.
inline Result binomial_pairs()
{
    Result r;
    for (long a = 2; a <= 30; ++a)
        for (long x = a; x <= 30; ++x)
            for (long y = a; y <= 30; ++y)
                r.record(choose2(x) + choose2(y) <= choose2(a) + choose2(x + y - a), "pair inequality");
    return r;
}

/// Σ C(a_i,2) <= C(Σa_i − p + 1, 2) over all compositions with Σa_i <= 20.
inline Result binomial_compositions()
{
    Result r;
    std::vector<long> parts;
    std::function<void(long)> rec = [&](long remaining) {
        if (!parts.empty()) {
            long sum = 0, lhs = 0;
            for (long a : parts) {
                sum += a;
                lhs += choose2(a);
            }
            r.record(lhs <= choose2(sum - static_cast<long>(parts.size()) + 1), "composition inequality");
        }
        for (long a = 1; a <= remaining; ++a) {
            parts.push_back(a);
            rec(remaining - a);
            parts.pop_back();
        }
    };
    rec(20);
    return r;
}

/// λ_{α,2}(G) >= αδ + (1−α)λ₂(G).
inline Result weyl_second(std::uint64_t seed, int samples = 100)
{
    std::mt19937_64 rng(seed);
    Result r;
    for (int t = 0; t < samples; ++t) {
        const int n = pick(rng, 2, 14);
        const Graph g = oracle::random_graph(n, uniform(rng, 0.2, 0.95), rng);
        const double l2 = lambda(g, 2);
        for (double alpha : {0.0, 0.25, 0.5, 0.75})
            r.record(lambda_alpha(g, alpha, 2) >= alpha * g.min_degree() + (1 - alpha) * l2 - 1e-9, "Weyl step");
    }
    return r;
}

/// Trace identities and λ₁ >= 2m/n >= δ.
inline Result spectral_identities(std::uint64_t seed, int samples = 100)
{
    std::mt19937_64 rng(seed);
    Result r;
    for (int t = 0; t < samples; ++t) {
        const int n = pick(rng, 1, 16);
        const Graph g = oracle::random_graph(n, uniform(rng, 0.0, 1.0), rng);
        const auto s = adjacency_spectrum(g);
        double sum = 0, squares = 0;
        for (double x : s.values) {
            sum += x;
            squares += x * x;
        }
        r.record(std::abs(sum) < 1e-8 * n && std::abs(squares - 2.0 * g.size()) < 1e-8 * n, "trace identity");
        const double avg = 2.0 * g.size() / n;
        r.record(s.values[0] >= avg - 1e-9 && avg >= g.min_degree(), "average degree");
    }
    return r;
}

/// Deleting an edge of a connected graph strictly lowers λ₁.
inline Result strict_monotonicity(std::uint64_t seed, int samples = 100)
{
    std::mt19937_64 rng(seed);
    Result r;
    while (r.cases < samples) {
        const int n = pick(rng, 3, 12);
        const Graph g = oracle::random_graph(n, uniform(rng, 0.3, 0.9), rng);
        if (!is_connected(g) || g.size() == 0)
            continue;
        const int id = pick(rng, 0, g.size() - 1);
        r.record(lambda(delete_edges(g, std::vector<int>{id}), 1) < lambda(g, 1) - 1e-9, "no strict drop");
    }
    return r;
}

/// Disconnected graphs with n >= 2δ+2 have λ₁ <= n−δ−2, tight only at K_{δ+1} ∪ K_{n−δ−1}.
inline Result disconnected_radius(std::uint64_t seed, int samples = 150)
{
    std::mt19937_64 rng(seed);
    Result r;
    while (r.cases < samples) {
        const int n = pick(rng, 8, 12);
        const int first = pick(rng, 1, n - 1);
        const double p = uniform(rng, 0.5, 1.0);
        const bool exact = rng() % 4 == 0;
        Graph a = exact ? complete(first) : oracle::random_graph(first, p, rng);
        Graph b = exact ? complete(n - first) : oracle::random_graph(n - first, p, rng);
        const Graph g = disjoint_union(a, b);
        const int delta = g.min_degree();
        if (n < 2 * delta + 2)
            continue;
        const double l1 = lambda(g, 1);
        const double cap = n - delta - 2;
        std::ostringstream what;
        what << "n=" << n << " delta=" << delta << " lambda1=" << l1;
        r.record(l1 <= cap + 1e-9, what.str());
        if (std::abs(l1 - cap) < 1e-6) {
            const bool extremal = (a.order() == delta + 1 && b.order() == n - delta - 1) ||
                                  (b.order() == delta + 1 && a.order() == n - delta - 1);
            r.record(extremal && g.size() == (delta + 1) * delta / 2 + (n - delta - 1) * (n - delta - 2) / 2,
                     "equality off the extremal graph: " + what.str());
        }
    }
    return r;
}

inline Graph random_two_clique_member(int n, int s, int cross, std::mt19937_64& rng)
{
    std::vector<std::pair<int, int>> all;
    for (int i = 0; i < s; ++i)
        for (int j = s; j < n; ++j)
            all.emplace_back(i, j);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(cross));
    return build_G_family(n, s, cross, all);
}

/// Two cliques joined by k−1 edges: λ₁ is largest when the edges share a hub,
/// and a larger small side (b >= δ+2, n >= 2b) only lowers it.
inline Result two_clique_radius(std::uint64_t seed, int per_case = 50)
{
    std::mt19937_64 rng(seed);
    Result r;
    for (int k : {2, 3}) {
        const int delta = 2 * k + 2, n = 2 * delta + 3;
        const double top = lambda(build_B(n, delta + 1, k - 1), 1);
        for (int s = 0; s < per_case; ++s)
            r.record(lambda(random_two_clique_member(n, delta + 1, k - 1, rng), 1) <= top + 1e-9, "member above B");
        for (int b = delta + 2; b <= delta + 3; ++b) {
            const int wide = 2 * b;
            const double wide_top = lambda(build_B(wide, delta + 1, k - 1), 1);
            for (int s = 0; s < per_case; ++s)
                r.record(lambda(random_two_clique_member(wide, b, k - 1, rng), 1) < wide_top - 1e-9,
                         "larger side not below B");
        }
    }
    return r;
}

/// τ >= k iff ν_f >= k, with ν_f from full partition enumeration.
inline Result tree_packing_equivalence(std::uint64_t seed, int samples = 300)
{
    std::mt19937_64 rng(seed);
    Result r;
    for (int t = 0; t < samples; ++t) {
        const int n = pick(rng, 2, 8);
        const Graph g = oracle::random_graph(n, uniform(rng, 0.3, 1.0), rng);
        const int packed = tau(g).tau;
        const auto nf = oracle::nu_f(g);
        for (int k = 1; k <= 3; ++k)
            r.record((packed >= k) == (nf >= Rational(k)), "tau/nu_f disagree");
    }
    return r;
}

/// ν_f > k + (d−1)/d implies the exhaustive search finds P(k,d).
inline Result fractional_sufficiency(std::uint64_t seed, int samples = 200, int* triggered = nullptr)
{
    std::mt19937_64 rng(seed);
    Result r;
    int hits = 0;
    for (int t = 0; t < samples; ++t) {
        const int n = pick(rng, 2, 7);
        const Graph g = oracle::random_graph(n, uniform(rng, 0.5, 1.0), rng);
        const auto nf = nu_f_exact(g).ratio;
        for (int k = 1; k <= 2; ++k)
            for (int d = 2; d <= 3; ++d) {
                if (!(nf > Rational(k) + Rational(d - 1, d)))
                    continue;
                ++hits;
                const auto v = refute_exhaustive(g, {k, d});
                r.record(v.status == PStatus::certified && verify_certificate(g, {k, d}, *v.decomposition),
                         "sufficient condition not certified");
            }
    }
    if (triggered)
        *triggered = hits;
    return r;
}

}  // namespace suites
