#pragma once

#include <vector>

#include "spectral/graph.hpp"

namespace spectral {

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);

Graph complement(const Graph& g);
// vertices are the edges of g in lexicographic order
Graph line_graph(const Graph& g);
// vertex (v, s) -> v + s n
Graph bipartite_double(const Graph& g);
// vertex (u, v) -> u * |H| + v
Graph cartesian_product(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph circulant(int n, const std::vector<int>& connection);
// r-subsets of an m-set, adjacent when disjoint; subsets in lexicographic order
Graph kneser(int m, int r);
// Hamiltonian cycle 0..n-1 plus chords from the repeated LCF shifts
Graph lcf(const std::vector<int>& shifts, int repeats);
// complement of the line graph of K_{2,m}
Graph complement_line_K2m(int m);

}  // namespace spectral
