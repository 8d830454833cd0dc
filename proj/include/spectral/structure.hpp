#pragma once

#include <optional>
#include <vector>

#include "spectral/graph.hpp"
#include "spectral/scalar.hpp"

namespace spectral {

// nullopt for forests
std::optional<int> girth(const Graph& g);
std::vector<int> bfs_distances(const Graph& g, int source);  // -1 when unreachable
std::optional<int> diameter(const Graph& g);                   // nullopt when disconnected
bool is_bipartite(const Graph& g);

struct QuotientMatrix {
  std::vector<std::vector<int>> parts;
  std::vector<std::vector<Rat>> B;  // B[i][j] = edges from part i to part j / |part i|
  bool equitable = false;
};

QuotientMatrix quotient(const Graph& g, const std::vector<std::vector<int>>& parts);
// eigenvalues of B (nonnegative rational matrix), as roots of its char poly
IntPoly quotient_char_poly(const QuotientMatrix& q);
Scalar quotient_lambda2(const QuotientMatrix& q);

struct ThreePartStats {
  Rat alpha, beta, gamma, epsilon;
  Rat Delta;
  Scalar lambda2Q;
};

// 1/2 (a + b - (g + e) + sqrt(D)), D = (a + b - (g + e))^2 - 4 (a b - b g - a e)
Scalar three_part_lambda2(const Rat& alpha, const Rat& beta, const Rat& gamma, const Rat& epsilon);
// partition {H, neighbours of H, the rest} of a regular graph
ThreePartStats three_part_stats(const Graph& g, const std::vector<int>& h);

// s + (2k - lambda - 1) / (k - lambda) * (k s - 2 edges)
Scalar subgraph_order_bound(int k, const Scalar& lambda, int s, long edges);

// parts by distance from the seed set
std::vector<std::vector<int>> distance_partition(const Graph& g, const std::vector<int>& seed);

struct DrgCheck {
  bool ok = false;
  int t = 0;  // eccentricity + 1
};
// the common distance partition quotient when every vertex sees the same one
std::optional<QuotientMatrix> distance_regular_quotient(const Graph& g);
// every vertex's distance partition has quotient tridiag T(k, t, c)
DrgCheck is_drg_with_array(const Graph& g, const Rat& c);

}  // namespace spectral
