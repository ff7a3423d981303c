#include "treepack/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "treepack/error.hpp"

namespace treepack {

double SymmetricMatrix::trace() const
{
    double t = 0.0;
    for (int i = 0; i < order_; ++i)
        t += (*this)(i, i);
    return t;
}

double SymmetricMatrix::max_abs() const
{
    double best = 0.0;
    for (double x : data_)
        best = std::max(best, std::fabs(x));
    return best;
}

SymmetricMatrix SymmetricMatrix::principal_submatrix(std::span<const int> indices) const
{
    const int k = static_cast<int>(indices.size());
    SymmetricMatrix out(k);
    for (int a = 0; a < k; ++a) {
        if (indices[a] < 0 || indices[a] >= order_)
            throw InputError("principal submatrix index out of range");
        for (int b = a; b < k; ++b)
            out.set(a, b, (*this)(indices[a], indices[b]));
    }
    return out;
}

double Spectrum::lambda(int i) const
{
    if (i < 1 || i > size())
        throw InputError("eigenvalue index " + std::to_string(i) + " out of range 1.." + std::to_string(size()));
    return values[static_cast<std::size_t>(i - 1)];
}

Spectrum eigenvalues_sym(const SymmetricMatrix& m, const JacobiOptions& options)
{
    const int n = m.order();
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i) * n + j] = m(i, j);
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

    auto off_max = [&] {
        double best = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                best = std::max(best, std::fabs(at(i, j)));
        return best;
    };

    const double threshold = options.relative_tolerance * m.max_abs();
    Spectrum out;
    double off = off_max();
    while (off > threshold) {
        if (out.sweeps >= options.max_sweeps)
            throw InternalError("Jacobi eigensolver did not converge within " + std::to_string(options.max_sweeps) +
                                " sweeps");
        ++out.sweeps;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0)
                    continue;
                const double app = at(p, p);
                const double aqq = at(q, q);
                // Rotation angle that zeroes a_pq; t is the smaller root of t² + 2θt - 1 = 0.
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q)
                        continue;
                    const double arp = at(r, p);
                    const double arq = at(r, q);
                    const double np = c * arp - s * arq;
                    const double nq = s * arp + c * arq;
                    at(r, p) = at(p, r) = np;
                    at(r, q) = at(q, r) = nq;
                }
                at(p, p) = app - t * apq;
                at(q, q) = aqq + t * apq;
                at(p, q) = at(q, p) = 0.0;
            }
        }
        off = off_max();
    }
    out.residual = off;
    out.values.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out.values[i] = at(i, i);
    std::sort(out.values.begin(), out.values.end(), std::greater<>());
    return out;
}

SymmetricMatrix adjacency_matrix(const Graph& g)
{
    SymmetricMatrix a(g.order());
    for (const auto& e : g.edges())
        a.set(e.u, e.v, 1.0);
    return a;
}

SymmetricMatrix a_alpha_matrix(const Graph& g, double alpha)
{
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw InputError("alpha must lie in [0, 1)");
    SymmetricMatrix a(g.order());
    for (int v = 0; v < g.order(); ++v)
        a.set(v, v, alpha * g.degree(v));
    for (const auto& e : g.edges())
        a.set(e.u, e.v, 1.0 - alpha);
    return a;
}

Spectrum adjacency_spectrum(const Graph& g)
{
    return eigenvalues_sym(adjacency_matrix(g));
}

Spectrum a_alpha_spectrum(const Graph& g, double alpha)
{
    return eigenvalues_sym(a_alpha_matrix(g, alpha));
}

double lambda(const Graph& g, int i)
{
    if (i < 1 || i > g.order())
        throw InputError("eigenvalue index " + std::to_string(i) + " out of range 1.." + std::to_string(g.order()));
    return adjacency_spectrum(g).lambda(i);
}

double lambda_alpha(const Graph& g, double alpha, int i)
{
    if (i < 1 || i > g.order())
        throw InputError("eigenvalue index " + std::to_string(i) + " out of range 1.." + std::to_string(g.order()));
    return a_alpha_spectrum(g, alpha).lambda(i);
}

namespace {

// Edge counts between parts: counts[i][j] = e(V_i, V_j), counts[i][i] = e(G[V_i]).
std::vector<std::vector<long>> part_edge_counts(const Graph& g, const VertexPartition& p)
{
    p.validate(g.order());
    std::vector<int> part_of(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < p.size(); ++i)
        for (int v : p.parts[i])
            part_of[v] = i;
    std::vector<std::vector<long>> counts(static_cast<std::size_t>(p.size()), std::vector<long>(p.size(), 0));
    for (const auto& e : g.edges()) {
        const int a = part_of[e.u];
        const int b = part_of[e.v];
        if (a == b) {
            ++counts[a][a];
        } else {
            ++counts[a][b];
            ++counts[b][a];
        }
    }
    return counts;
}

}  // namespace

DenseMatrix quotient_matrix(const Graph& g, const VertexPartition& p)
{
    const auto counts = part_edge_counts(g, p);
    DenseMatrix b{p.size(), std::vector<double>(static_cast<std::size_t>(p.size()) * p.size(), 0.0)};
    for (int i = 0; i < p.size(); ++i) {
        const double size = static_cast<double>(p.parts[i].size());
        for (int j = 0; j < p.size(); ++j) {
            const double sum = i == j ? 2.0 * counts[i][i] : static_cast<double>(counts[i][j]);
            b.data[static_cast<std::size_t>(i) * p.size() + j] = sum / size;
        }
    }
    return b;
}

Spectrum quotient_spectrum(const Graph& g, const VertexPartition& p)
{
    const auto counts = part_edge_counts(g, p);
    SymmetricMatrix s(p.size());
    for (int i = 0; i < p.size(); ++i) {
        const double ni = static_cast<double>(p.parts[i].size());
        s.set(i, i, 2.0 * counts[i][i] / ni);
        for (int j = i + 1; j < p.size(); ++j) {
            const double nj = static_cast<double>(p.parts[j].size());
            s.set(i, j, counts[i][j] / std::sqrt(ni * nj));
        }
    }
    return eigenvalues_sym(s);
}

double quotient_lambda2_2part(double a1, double a2, int r, int n1, int n2)
{
    if (n1 < 1 || n2 < 1 || r < 0)
        throw InputError("quotient_lambda2_2part needs n1, n2 >= 1 and r >= 0");
    const double rr = static_cast<double>(r);
    const double disc = (a1 - a2) * (a1 - a2) + 4.0 * rr * rr / (static_cast<double>(n1) * n2);
    return 0.5 * (a1 + a2 - std::sqrt(disc));
}

double hong_nikiforov_bound(int n, int m, int min_degree)
{
    if (min_degree < 1)
        throw InputError("Hong-Nikiforov bound needs minimum degree >= 1");
    const double d = min_degree;
    const double radicand = 2.0 * m - static_cast<double>(n) * d + (d + 1.0) * (d + 1.0) / 4.0;
    if (radicand < 0.0)
        throw InputError("Hong-Nikiforov bound has a negative radicand");
    return (d - 1.0) / 2.0 + std::sqrt(radicand);
}

bool check_interlacing(std::span<const double> small, std::span<const double> big, double tolerance)
{
    const std::size_t m = small.size();
    const std::size_t n = big.size();
    if (m >= n)
        throw InputError("interlacing needs the smaller spectrum to be strictly shorter");
    for (std::size_t i = 0; i < m; ++i) {
        if (small[i] > big[i] + tolerance)
            return false;
        if (small[i] < big[n - m + i] - tolerance)
            return false;
    }
    return true;
}

bool check_interlacing(const Spectrum& small, const Spectrum& big, double tolerance)
{
    return check_interlacing(std::span<const double>(small.values), std::span<const double>(big.values), tolerance);
}

}  // namespace treepack
