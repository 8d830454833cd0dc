#include <catch_amalgamated.hpp>

#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>

#include "spectral/catalog.hpp"
#include "spectral/expr.hpp"
#include "spectral/search.hpp"
#include "spectral/spectrum.hpp"
#include "spectral/structure.hpp"

using namespace spectral;

namespace {

Scalar S(const char* s) { return parse_scalar(s); }

bool isomorphic(const Graph& a, const Graph& b) {
  const int n = a.order();
  if (n != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> order{0}, parent(n, -1), seen(n, 0);
  seen[0] = 1;
  for (size_t i = 0; i < order.size(); ++i)
    for (int w : a.neighbors(order[i]))
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = order[i];
        order.push_back(w);
      }
  std::vector<int> map(n, -1), used(n, 0);
  std::function<bool(size_t)> go = [&](size_t i) {
    if (i == order.size()) return true;
    int v = order[i];
    std::vector<int> cands;
    if (parent[v] < 0) {
      for (int w = 0; w < n; ++w) cands.push_back(w);
    } else {
      cands = b.neighbors(map[parent[v]]);
    }
    for (int w : cands) {
      if (used[w]) continue;
      bool ok = true;
      for (size_t j = 0; j < i && ok; ++j) ok = a.adjacent(order[j], v) == b.adjacent(map[order[j]], w);
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (go(i + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  return go(0);
}

// per-vertex triangle counts and second-neighbourhood sizes, sorted
std::vector<std::pair<int, int>> invariant(const Graph& g) {
  std::vector<std::pair<int, int>> inv;
  for (int v = 0; v < g.order(); ++v) {
    auto d = bfs_distances(g, v);
    int tri = 0, two = 0;
    auto nb = g.neighbors(v);
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j) tri += g.adjacent(nb[i], nb[j]);
    for (int x : d) two += x == 2;
    inv.emplace_back(tri, two);
  }
  std::sort(inv.begin(), inv.end());
  return inv;
}

// isomorphism classes of connected k-regular graphs on n vertices, from
// labelled generation with vertex 0 joined to 1..k (every class has such a labelling)
long naive_count(int k, int n) {
  std::map<std::vector<std::pair<int, int>>, std::vector<Graph>> reps;
  Graph g(n);
  std::vector<int> deg(n, 0);
  for (int i = 1; i <= k; ++i) {
    g.add_edge(0, i);
    ++deg[0];
    ++deg[i];
  }
  long classes = 0;
  std::function<void(int)> fill = [&](int u) {
    if (u == n) {
      if (!g.is_connected()) return;
      auto& bucket = reps[invariant(g)];
      for (const auto& h : bucket)
        if (isomorphic(g, h)) return;
      bucket.push_back(g);
      ++classes;
      return;
    }
    int need = k - deg[u];
    if (need == 0) return fill(u + 1);
    std::vector<int> pick;
    std::function<void(int)> choose = [&](int from) {
      if (static_cast<int>(pick.size()) == need) {
        for (int v : pick) {
          g.add_edge(u, v);
          ++deg[v];
        }
        deg[u] = k;
        fill(u + 1);
        deg[u] = k - need;
        for (int v : pick) {
          g.remove_edge(u, v);
          --deg[v];
        }
        return;
      }
      for (int v = from; v < n; ++v) {
        if (deg[v] >= k) continue;
        pick.push_back(v);
        choose(v + 1);
        pick.pop_back();
      }
    };
    choose(u + 1);
  };
  fill(1);
  return classes;
}

std::map<int, long> nonzero(std::map<int, long> m) {
  std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
  return m;
}

SearchSpec spec(int k, int n_min, int n_max) {
  SearchSpec s;
  s.k = k;
  s.n_min = n_min;
  s.n_max = n_max;
  return s;
}

std::vector<Graph> collect(SearchSpec s) {
  s.mode = SearchSpec::Mode::collect;
  auto r = enumerate(s);
  std::vector<Graph> out;
  for (const auto& g6 : r.graphs) out.push_back(from_graph6(g6));
  return out;
}

void check_pairwise_distinct(const std::vector<Graph>& gs) {
  std::map<std::pair<int, std::vector<std::pair<int, int>>>, std::vector<const Graph*>> buckets;
  for (const auto& g : gs) buckets[{g.order(), invariant(g)}].push_back(&g);
  long pairs = 0;
  for (const auto& [key, b] : buckets)
    for (size_t i = 0; i < b.size(); ++i)
      for (size_t j = i + 1; j < b.size(); ++j) {
        ++pairs;
        if (isomorphic(*b[i], *b[j])) FAIL("isomorphic outputs " << to_graph6(*b[i]) << " " << to_graph6(*b[j]));
      }
  INFO("pairs compared " << pairs);
  SUCCEED();
}

}  // namespace

TEST_CASE("counts match a naive labelled generator") {
  for (int n = 4; n <= 10; n += 2) {
    INFO("k=3 n=" << n);
    CHECK(enumerate(spec(3, n, n)).total() == naive_count(3, n));
  }
  for (int n = 5; n <= 9; ++n) {
    INFO("k=4 n=" << n);
    CHECK(enumerate(spec(4, n, n)).total() == naive_count(4, n));
  }
}

TEST_CASE("counts of connected regular graphs") {
  auto c3 = nonzero(enumerate(spec(3, 4, 16)).counts_by_n);
  CHECK(c3 == std::map<int, long>{{4, 1}, {6, 2}, {8, 5}, {10, 19}, {12, 85}, {14, 509}, {16, 4060}});
  auto c4 = nonzero(enumerate(spec(4, 5, 12)).counts_by_n);
  CHECK(c4 == std::map<int, long>{{5, 1}, {6, 1}, {7, 2}, {8, 6}, {9, 16}, {10, 59}, {11, 265}, {12, 1544}});
  CHECK(enumerate(spec(3, 4, 4)).total() == 1);
  CHECK(nonzero(enumerate(spec(5, 6, 10)).counts_by_n) == std::map<int, long>{{6, 1}, {8, 3}, {10, 60}});
}

TEST_CASE("outputs are pairwise non-isomorphic") {
  auto cubic = collect(spec(3, 4, 14));
  CHECK(cubic.size() == 1 + 2 + 5 + 19 + 85 + 509);
  check_pairwise_distinct(cubic);
  auto quartic = collect(spec(4, 5, 10));
  CHECK(quartic.size() == 1 + 1 + 2 + 6 + 16 + 59);
  check_pairwise_distinct(quartic);
  for (const auto& g : quartic) {
    CHECK(g.regular_degree() == 4);
    CHECK(g.is_connected());
  }
}

TEST_CASE("canonical form ignores labelling") {
  std::mt19937 rng(11);
  for (const auto& g : collect(spec(3, 10, 12))) {
    Graph c = canonical_form(g);
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    for (int r = 0; r < 3; ++r) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_form(g.permuted(perm)) == c);
    }
    CHECK(isomorphic(c, g));
  }
}

TEST_CASE("results do not depend on the worker count") {
  auto base = spec(3, 16, 16);
  base.mode = SearchSpec::Mode::collect;
  std::set<std::string> first;
  for (int jobs : {1, 4, 8}) {
    auto s = base;
    s.jobs = jobs;
    auto r = enumerate(s);
    std::set<std::string> canon;
    for (const auto& g6 : r.graphs) canon.insert(to_graph6(canonical_form(from_graph6(g6))));
    CHECK(r.total() == 4060);
    if (jobs == 1) first = canon;
    else CHECK(canon == first);
    auto q = spec(4, 11, 11);
    q.jobs = jobs;
    q.split_depth = 2 + jobs % 3;
    CHECK(enumerate(q).total() == 265);
  }
}

TEST_CASE("prune hooks never change counts") {
  std::map<int, long> reference;
  for (int mask = 0; mask < 8; ++mask) {
    auto s = spec(3, 4, 16);
    s.lambda2_max = Scalar(Rat(19, 10));
    s.hooks.spectral = mask & 1;
    s.hooks.girth = mask & 2;
    s.hooks.subgraph_bound = mask & 4;
    auto r = enumerate(s);
    INFO("hooks " << mask);
    if (mask == 0) reference = r.counts_by_n;
    else CHECK(r.counts_by_n == reference);
  }
  // brute filter of the unpruned enumeration
  std::map<int, long> filtered;
  for (const auto& g : collect(spec(3, 4, 16)))
    if (!second_eig_exceeds(g, Scalar(Rat(19, 10)))) ++filtered[g.order()];
  CHECK(nonzero(reference) == filtered);
}

TEST_CASE("girth constraints") {
  auto s = spec(3, 18, 18);
  s.girth_exact = 6;
  auto gs = collect(s);
  CHECK(gs.size() == 5);
  int small = 0;
  for (const auto& g : gs) {
    CHECK(girth(g) == 6);
    if (!second_eig_exceeds(g, Scalar(Rat(19, 10)))) ++small;
  }
  CHECK(small == 2);
  auto s5 = spec(3, 18, 18);
  s5.girth_exact = 5;
  CHECK(enumerate(s5).total() == 450);
  auto s4 = spec(3, 10, 14);
  s4.girth_min = 5;
  CHECK(nonzero(enumerate(s4).counts_by_n) == std::map<int, long>{{10, 1}, {12, 2}, {14, 9}});
}

TEST_CASE("spectral target prunes") {
  // a triangle forces at most 9.78 vertices when lambda_2 <= sqrt(2)
  CHECK(effective_girth(3, Scalar::sqrt(2), 14) >= 4);
  CHECK(effective_girth(3, Scalar::sqrt(2), 9) == 3);
  auto s = spec(3, 14, 14);
  s.lambda2_max = Scalar::sqrt(2);
  auto r = enumerate(s);
  CHECK(r.total() == 1);
  CHECK(r.stats.pruned_spectral + r.stats.pruned_subgraph + r.stats.pruned_feasibility > 0);
}

TEST_CASE("extremal searches") {
  auto h = find_extremal(3, Scalar::sqrt(2));
  CHECK(h.max_order == 14);
  REQUIRE(h.witnesses.size() == 1);
  CHECK(isomorphic(from_graph6(h.witnesses[0].graph6), build("heawood")));
  CHECK(h.witnesses[0].lambda2 == Scalar::sqrt(2));
  auto p = find_extremal(3, Scalar(1L));
  CHECK(p.max_order == 10);
  REQUIRE(p.witnesses.size() == 1);
  CHECK(isomorphic(from_graph6(p.witnesses[0].graph6), build("petersen")));
  CHECK_THROWS_AS(find_extremal(3, Scalar::sqrt(6)), std::invalid_argument);
}

TEST_CASE("4-regular graphs with lambda_2 at most sqrt(5)-1") {
  auto s = spec(4, 5, 11);
  s.lambda2_max = S("sqrt(5)-1");
  s.mode = SearchSpec::Mode::collect;
  auto r = enumerate(s);
  std::map<int, std::vector<std::string>> equality;
  for (const auto& g6 : r.graphs) {
    Graph g = from_graph6(g6);
    if (second_eig(g) == S("sqrt(5)-1")) equality[g.order()].push_back(g6);
  }
  REQUIRE(equality[8].size() == 1);
  CHECK(isomorphic(from_graph6(equality[8][0]), build("fig_sqrt5")));
  REQUIRE(equality[10].size() == 1);
  CHECK(isomorphic(from_graph6(equality[10][0]), build("ci10_14")));
  auto x = find_extremal(4, S("sqrt(5)-1"));
  CHECK(x.max_order == 12);
  REQUIRE(x.witnesses.size() == 1);
  CHECK(isomorphic(from_graph6(x.witnesses[0].graph6), build("quartic12")));
  CHECK(x.witnesses[0].lambda2 == Scalar(1L));
}

TEST_CASE("spec validation and sinks") {
  auto odd = enumerate(spec(3, 5, 5));
  CHECK(odd.total() == 0);
  CHECK(!odd.warnings.empty());
  CHECK_THROWS_AS(enumerate(spec(3, 60, 66)), std::invalid_argument);
  auto s = spec(3, 4, 10);
  s.connected_only = false;
  CHECK_THROWS_AS(enumerate(s), std::invalid_argument);
  std::mutex m;
  long seen = 0;
  auto r = enumerate(spec(3, 4, 12), [&](const Graph&) {
    std::lock_guard<std::mutex> lock(m);
    ++seen;
  });
  CHECK(seen == r.total());
}
