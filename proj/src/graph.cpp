#include "spectral/graph.hpp"

#include <bit>
#include <deque>
#include <stdexcept>

namespace spectral {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<size_t>(n) * ((n + 63) / 64), 0) {
  if (n < 0) throw std::invalid_argument("negative order");
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  row_mut(u)[v >> 6] |= std::uint64_t{1} << (v & 63);
  row_mut(v)[u >> 6] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(int u, int v) {
  row_mut(u)[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  row_mut(v)[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
}

int Graph::degree(int v) const {
  int d = 0;
  const auto* r = row(v);
  for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  const auto* r = row(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t x = r[w];
    while (x) {
      out.push_back(w * 64 + std::countr_zero(x));
      x &= x - 1;
    }
  }
  return out;
}

long Graph::edge_count() const {
  long s = 0;
  for (int v = 0; v < n_; ++v) s += degree(v);
  return s / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::optional<int> Graph::regular_degree() const {
  if (n_ == 0) return 0;
  int d = degree(0);
  for (int v = 1; v < n_; ++v) {
    if (degree(v) != d) return std::nullopt;
  }
  return d;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<int> comp(n_, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n_; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (size_t i = 0; i < members.size(); ++i) {
      for (int w : neighbors(members[i])) {
        if (comp[w] < 0) {
          comp[w] = comp[s];
          members.push_back(w);
        }
      }
    }
    out.push_back(std::move(members));
  }
  return out;
}

bool Graph::is_connected() const { return n_ <= 1 || components().size() == 1; }

Graph Graph::induced(std::span<const int> vertices) const {
  Graph h(static_cast<int>(vertices.size()));
  for (size_t i = 0; i < vertices.size(); ++i) {
    for (size_t j = i + 1; j < vertices.size(); ++j) {
      if (adjacent(vertices[i], vertices[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return h;
}

Graph Graph::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
  return induced(perm);
}

}  // namespace spectral
