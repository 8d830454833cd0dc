#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spectral/graph.hpp"
#include "spectral/scalar.hpp"

namespace spectral {

inline constexpr int kSearchMaxOrder = 64;

struct PruneHooks {
  bool spectral = true;        // lambda_2 of the completed part exceeds the target
  bool girth = true;           // girth and Moore-bound infeasibility
  bool subgraph_bound = true;  // order bound from a dense induced subgraph
};

struct SearchSpec {
  enum class Mode { count, collect, extremal };
  int k = 3;
  int n_min = 1;
  int n_max = 1;
  int girth_min = 3;
  std::optional<int> girth_exact;
  std::optional<Scalar> lambda2_max;
  bool connected_only = true;
  Mode mode = Mode::count;
  PruneHooks hooks;
  int jobs = 1;
  int split_depth = 3;  // subtrees start after this many rows
};

struct SearchStats {
  long nodes = 0;
  long pruned_canonical = 0;
  long pruned_feasibility = 0;
  long pruned_spectral = 0;
  long pruned_subgraph = 0;
  long rejected_final = 0;  // complete graphs failing the girth or lambda_2 filter
  SearchStats& operator+=(const SearchStats& o);
};

struct Witness {
  std::string graph6;
  Scalar lambda2;
};

struct SearchResult {
  std::map<int, long> counts_by_n;
  std::vector<std::string> graphs;  // collect mode, graph6, in deterministic order
  std::optional<int> max_order;     // extremal mode
  std::vector<Witness> witnesses;   // extremal mode
  SearchStats stats;
  double wall_time = 0;
  std::vector<std::string> warnings;
  long total() const;
};

// One representative per isomorphism class of connected k-regular graphs on
// n_min..n_max vertices meeting the girth and lambda_2 constraints. The sink,
// when given, sees every accepted graph (from worker threads, serialized).
SearchResult enumerate(const SearchSpec& spec, const std::function<void(const Graph&)>& sink = {});

// Largest order of a connected k-regular graph with lambda_2 <= lambda, searching
// down from the linear programming bound, with all graphs of that order.
SearchResult find_extremal(int k, const Scalar& lambda, int jobs = 1);

// Smallest cycle length not excluded by the subgraph order bound for a
// k-regular graph on n vertices with lambda_2 <= lambda (3 when no cycle is excluded).
int effective_girth(int k, const Scalar& lambda, int n);

// Canonical labelling used by the generator: the BFS labelling with the
// lexicographically largest upper-triangular row code. Connected graphs only.
Graph canonical_form(const Graph& g);

int default_jobs();

}  // namespace spectral
