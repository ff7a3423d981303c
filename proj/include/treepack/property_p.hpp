#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treepack/graph.hpp"
#include "treepack/packing.hpp"
#include "treepack/rational.hpp"

namespace treepack {

/// k edge-disjoint spanning trees plus a further forest F with
/// d·|E(F)| > (d-1)(n-1), where F is a spanning tree or has a component with
/// at least d edges.
struct PQuery {
    int k = 1;
    int d = 1;

    void validate() const;
};

enum class PStatus { certified, refuted, unknown };

enum class RefutationKind { counting, bipartition_budget, exhaustive };

const char* to_string(PStatus s);
const char* to_string(RefutationKind k);

struct Refutation {
    RefutationKind kind = RefutationKind::counting;
    std::string reason;
    /// Named integers that reproduce the argument, in the order they were derived.
    std::vector<std::pair<std::string, std::int64_t>> numbers;
    VertexSet side;  // bipartition_budget only

    std::int64_t number(const std::string& name) const;
};

struct PVerdict {
    PStatus status = PStatus::unknown;
    std::string stage = "none";
    /// Certified constructively: labels 1..k are the trees, label k+1 is F.
    std::optional<ForestDecomposition> decomposition;
    std::optional<Refutation> refutation;
    /// Certified non-constructively through a fractional packing bound.
    std::optional<Rational> nu_f_bound;
    std::string note;
    std::uint64_t steps = 0;
};

/// d·f > (d-1)(n-1), in integers.
bool forest_large_enough(int d, int n, std::int64_t forest_edges);

/// Condition (c) for an acyclic edge set: spanning tree, or a component with >= d edges.
bool forest_has_big_component(const Graph& g, const EdgeSet& forest, int d);

DecompositionCheck verify_certificate(const Graph& g, const PQuery& q, const ForestDecomposition& d);

/// Certifies when ν_f(G) > k + (d-1)/d, using τ as a lower bound first and the
/// exact value when n <= exact_limit. Never refutes.
PVerdict sufficient_by_nuf(const Graph& g, const PQuery& q, int exact_limit = 12);

/// Constructive certificate from matroid-union packing; certified or unknown.
PVerdict certify_P(const Graph& g, const PQuery& q);

/// Refutes when τ < k or when the edges left after any k spanning trees are too few.
PVerdict refute_by_counting(const Graph& g, const PQuery& q);

/// Refutation through the edge budget across the cut (U, V \ U).
PVerdict refute_by_bipartition_budget(const Graph& g, const PQuery& q, const VertexSet& side);

/// Complete search over candidate forests F with a tree-packing check on G - F.
PVerdict refute_exhaustive(const Graph& g, const PQuery& q, std::uint64_t budget = 100'000'000);

struct CheckOptions {
    std::uint64_t budget = 100'000'000;
    int exact_limit = 12;
    std::optional<VertexSet> bipartition;
    /// Run every stage and throw InternalError if two stages disagree.
    bool cross_check = false;
};

/// Counting, fractional packing, constructive, bipartition budget, exhaustive.
/// The first stage with a definite answer wins.
PVerdict check_P(const Graph& g, const PQuery& q, const CheckOptions& options = {});

/// Bipartition sides tried by check_P; each is sorted and proper.
std::vector<VertexSet> bipartition_candidates(const Graph& g, int exact_limit = 12);

}  // namespace treepack
