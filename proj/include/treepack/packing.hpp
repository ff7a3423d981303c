#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treepack/graph.hpp"
#include "treepack/rational.hpp"

namespace treepack {

/// Edges of G assigned to forests 1..t; label 0 means unassigned.
struct ForestDecomposition {
    int forests = 0;
    std::vector<int> label;  // one entry per edge of G

    /// Edge ids with the given label, in canonical order.
    EdgeSet edges_of(int forest) const;
    int assigned() const;
    int count(int forest) const;
};

/// Maximum union of t forests in a graph, grown by augmenting exchanges.
///
/// Inserting an edge runs a breadth-first search over the exchange graph: an
/// edge x may enter forest j directly if its ends lie in different trees of
/// F_j, otherwise every edge on the F_j path between its ends becomes a
/// candidate to be displaced. A shortest augmenting chain is applied in one
/// step. Applying a chain never shrinks any forest, so forests that are
/// already spanning trees stay spanning trees.
class ForestUnion {
public:
    ForestUnion(const Graph& g, int forests);
    /// Starts from an existing decomposition, which must be valid for g.
    ForestUnion(const Graph& g, ForestDecomposition start);

    /// Tries to add an unassigned edge, rearranging labels if necessary.
    bool insert(int edge);
    /// Unassigns an edge; the other labels are unchanged.
    void remove(int edge);
    void add_forest();

    /// Edges that may not be assigned (insert() refuses them and augmenting
    /// chains never route through them, since they are never assigned).
    void set_blocked(int edge, bool blocked) { blocked_[static_cast<std::size_t>(edge)] = blocked; }
    bool blocked(int edge) const { return blocked_[static_cast<std::size_t>(edge)] != 0; }

    /// Inserts every unassigned, unblocked edge in canonical order.
    void saturate();

    const ForestDecomposition& decomposition() const { return dec_; }
    int assigned() const { return assigned_; }
    int count(int forest) const { return sizes_[static_cast<std::size_t>(forest)]; }

private:
    const Graph* graph_;
    ForestDecomposition dec_;
    std::vector<int> sizes_;  // indexed by label, sizes_[0] unused
    std::vector<char> blocked_;
    int assigned_ = 0;
};

/// Maximum union of t edge-disjoint forests, inserting edges in canonical order.
ForestDecomposition max_forest_union(const Graph& g, int t);

struct TreePacking {
    int tau = 0;
    ForestDecomposition trees;  // `tau` labels, each a spanning tree
};

/// Spanning-tree packing number; 0 for disconnected graphs. Throws for n < 2.
TreePacking tau(const Graph& g);

struct PartitionCertificate {
    VertexPartition partition;
    long cross_total = 0;
    Rational ratio;
};

PartitionCertificate make_certificate(const Graph& g, const VertexPartition& p);

/// Exact fractional packing number by enumerating restricted-growth strings.
/// Ties are broken by the lexicographically first labelling.
/// Throws InputError for n < 2 or n > max_n.
PartitionCertificate nu_f_exact(const Graph& g, int max_n = 12);

struct NuFBounds {
    Rational lower;                      // τ(G)
    Rational upper;                      // ratio of upper_certificate
    PartitionCertificate upper_certificate;
};

struct LocalSearchOptions {
    int restarts = 20;
    std::uint64_t first_seed = 0;
};

/// Lower bound from τ, upper bound from steepest-descent local search over
/// partitions (relocate a vertex, split off a vertex, split a part into its
/// components, merge two parts).
NuFBounds nu_f_bounds(const Graph& g, const LocalSearchOptions& options = {});

struct DecompositionCheck {
    bool ok = false;
    std::string reason;

    explicit operator bool() const { return ok; }
};

/// Labels in range, each label acyclic, and the first `require_spanning`
/// labels spanning trees.
DecompositionCheck verify_decomposition(const Graph& g, const ForestDecomposition& d, int require_spanning);

}  // namespace treepack
