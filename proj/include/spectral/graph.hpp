#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace spectral {

// Simple undirected graph stored as adjacency bit rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int order() const { return n_; }
  bool adjacent(int u, int v) const { return (row(u)[v >> 6] >> (v & 63)) & 1U; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  long edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic
  std::optional<int> regular_degree() const;
  bool is_connected() const;
  std::vector<std::vector<int>> components() const;
  Graph induced(std::span<const int> vertices) const;
  // vertices relabelled: new vertex i is old vertex perm[i]
  Graph permuted(std::span<const int> perm) const;

  const std::uint64_t* row(int v) const { return bits_.data() + static_cast<size_t>(v) * words_; }
  int words() const { return words_; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

 private:
  std::uint64_t* row_mut(int v) { return bits_.data() + static_cast<size_t>(v) * words_; }
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// graph6 with the 1-, 4- and 8-byte size prefixes
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// "u v" lines, 0-indexed; an optional first line holding a single integer gives the order
Graph from_adjacency_list(std::string_view text);
std::string to_adjacency_list(const Graph& g);

// graph6 or adjacency list, decided by content
Graph parse_graph_text(std::string_view text);

}  // namespace spectral
