#include "spectral/constructions.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace spectral {

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

Graph complement(const Graph& g) {
  Graph h(g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (!g.adjacent(i, j)) h.add_edge(i, j);
  return h;
}

Graph line_graph(const Graph& g) {
  auto e = g.edges();
  const int m = static_cast<int>(e.size());
  Graph h(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      auto [a, b] = e[i];
      auto [c, d] = e[j];
      if (a == c || a == d || b == c || b == d) h.add_edge(i, j);
    }
  }
  return h;
}

Graph bipartite_double(const Graph& g) {
  const int n = g.order();
  Graph h(2 * n);
  for (auto [u, v] : g.edges()) {
    h.add_edge(u, v + n);
    h.add_edge(v, u + n);
  }
  return h;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int a = g.order(), b = h.order();
  Graph p(a * b);
  for (int u = 0; u < a; ++u)
    for (auto [x, y] : h.edges()) p.add_edge(u * b + x, u * b + y);
  for (auto [u, w] : g.edges())
    for (int x = 0; x < b; ++x) p.add_edge(u * b + x, w * b + x);
  return p;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph u(g.order() + h.order());
  for (auto [a, b] : g.edges()) u.add_edge(a, b);
  for (auto [a, b] : h.edges()) u.add_edge(a + g.order(), b + g.order());
  return u;
}

Graph circulant(int n, const std::vector<int>& connection) {
  Graph g(n);
  for (int s : connection) {
    int d = ((s % n) + n) % n;
    if (d == 0) throw std::invalid_argument("circulant: connection 0 gives a loop");
    for (int i = 0; i < n; ++i) {
      int j = (i + d) % n;
      if (!g.adjacent(i, j)) g.add_edge(i, j);
    }
  }
  return g;
}

Graph kneser(int m, int r) {
  if (r < 1 || m < r || m > 30) throw std::invalid_argument("kneser: bad parameters");
  std::vector<unsigned> sets;
  for (unsigned s = 0; s < (1U << m); ++s) {
    if (std::popcount(s) == r) sets.push_back(s);
  }
  // lexicographic order of the sorted element lists
  std::sort(sets.begin(), sets.end(), [](unsigned a, unsigned b) {
    while (a && b) {
      int x = std::countr_zero(a), y = std::countr_zero(b);
      if (x != y) return x < y;
      a &= a - 1;
      b &= b - 1;
    }
    return false;
  });
  Graph g(static_cast<int>(sets.size()));
  for (size_t i = 0; i < sets.size(); ++i)
    for (size_t j = i + 1; j < sets.size(); ++j)
      if ((sets[i] & sets[j]) == 0) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

Graph lcf(const std::vector<int>& shifts, int repeats) {
  const int n = static_cast<int>(shifts.size()) * repeats;
  Graph g = cycle_graph(n);
  for (int i = 0; i < n; ++i) {
    int j = ((i + shifts[i % shifts.size()]) % n + n) % n;
    if (j == i) throw std::invalid_argument("lcf: zero shift");
    if (!g.adjacent(i, j)) g.add_edge(i, j);
  }
  return g;
}

Graph complement_line_K2m(int m) { return complement(line_graph(complete_bipartite(2, m))); }

}  // namespace spectral
