#pragma once

#include <span>
#include <vector>

#include "treepack/graph.hpp"

namespace treepack {

/// Dense symmetric matrix; set() writes both triangles so symmetry is exact.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(int order) : order_(order), data_(static_cast<std::size_t>(order) * order, 0.0) {}

    int order() const { return order_; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * order_ + j]; }
    void set(int i, int j, double value)
    {
        data_[static_cast<std::size_t>(i) * order_ + j] = value;
        data_[static_cast<std::size_t>(j) * order_ + i] = value;
    }

    double trace() const;
    double max_abs() const;

    /// Rows and columns restricted to `indices` (in the given order).
    SymmetricMatrix principal_submatrix(std::span<const int> indices) const;

private:
    int order_ = 0;
    std::vector<double> data_;
};

/// Square matrix with no symmetry assumption (quotient matrices).
struct DenseMatrix {
    int order = 0;
    std::vector<double> data;

    double operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * order + j]; }
};

struct Spectrum {
    std::vector<double> values;  // descending
    double residual = 0.0;       // max |off-diagonal| at termination
    int sweeps = 0;

    int size() const { return static_cast<int>(values.size()); }
    /// 1-based: lambda(1) is the largest.
    double lambda(int i) const;
};

struct JacobiOptions {
    double relative_tolerance = 1e-12;
    int max_sweeps = 100;
};

/// Cyclic Jacobi rotations. Throws InternalError if the sweep cap is hit.
Spectrum eigenvalues_sym(const SymmetricMatrix& m, const JacobiOptions& options = {});

SymmetricMatrix adjacency_matrix(const Graph& g);
/// alpha * D(G) + (1 - alpha) * A(G); alpha must lie in [0, 1).
SymmetricMatrix a_alpha_matrix(const Graph& g, double alpha);

Spectrum adjacency_spectrum(const Graph& g);
Spectrum a_alpha_spectrum(const Graph& g, double alpha);

/// i-th largest adjacency eigenvalue, 1 <= i <= n.
double lambda(const Graph& g, int i);
double lambda_alpha(const Graph& g, double alpha, int i);

/// b_ij = e(V_i, V_j) / |V_i| off the diagonal, b_ii = 2 e(G[V_i]) / |V_i|.
DenseMatrix quotient_matrix(const Graph& g, const VertexPartition& p);

/// Eigenvalues of the quotient matrix via its diagonal similarity
/// S = D^{1/2} B D^{-1/2} with D = diag(|V_i|), which is symmetric.
Spectrum quotient_spectrum(const Graph& g, const VertexPartition& p);

/// Second eigenvalue of [[a1, r/n1], [r/n2, a2]] in closed form.
double quotient_lambda2_2part(double a1, double a2, int r, int n1, int n2);

/// (δ-1)/2 + sqrt(2m - nδ + (δ+1)²/4). Throws for δ < 1 or a negative radicand.
double hong_nikiforov_bound(int n, int m, int min_degree);

/// small interlaces big: big_i >= small_i >= big_{N-M+i}, within `tolerance`.
/// Throws InputError unless |small| < |big|.
bool check_interlacing(std::span<const double> small, std::span<const double> big, double tolerance = 1e-9);
bool check_interlacing(const Spectrum& small, const Spectrum& big, double tolerance = 1e-9);

}  // namespace treepack
