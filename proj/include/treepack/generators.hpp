#pragma once

#include <span>
#include <utility>
#include <vector>

#include "treepack/graph.hpp"

namespace treepack {

Graph complete(int n);
/// Side A is 0..a-1, side B is a..a+b-1.
Graph complete_bipartite(int a, int b);
/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
Graph petersen();
/// H is relabelled by shifting its vertices by |V(G)|.
Graph disjoint_union(const Graph& g, const Graph& h);

/// B_{n,s}^k: K_s on 0..s-1, K_{n-s} on s..n-1, and hub 0 joined to s..s+k-1.
Graph build_B(int n, int s, int k);

/// K_s ∪ K_{n-s} plus the given cross pairs (i on the K_s side, j on the other).
Graph build_G_family(int n, int s, int k, std::span<const std::pair<int, int>> cross);

/// Eleven-vertex, 28-edge counterexample for the spectral-radius condition at δ = 2k.
///
/// Vertex order follows the drawing coordinates (-2,2), (-1,2), (-1,1), (-2,1),
/// (1,2), (1,1), (2,2), (2,1), (-1,-0.5), (1,-0.5), (0,-1). Edges are listed
/// dashed first, then bold, then thin.
Graph fixture_H1();

/// The three edge classes of fixture_H1, as edge ids into fixture_H1().
struct H1Drawing {
    EdgeSet dashed;  // the forest F
    EdgeSet bold;    // first spanning tree
    EdgeSet thin;    // second spanning tree
};
H1Drawing fixture_H1_drawing();

/// K_16 minus {0,1},{2,3} on 0..15, K_17 on 16..32, and 0..6 joined to w = 16.
Graph fixture_H2();

}  // namespace treepack
