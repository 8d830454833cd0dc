#include "spectral/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "spectral/lpbound.hpp"
#include "spectral/spectrum.hpp"
#include "spectral/structure.hpp"

namespace spectral {

namespace {

using u64 = std::uint64_t;

constexpr u64 bit(int i) { return u64{1} << i; }
// labels strictly above i
constexpr u64 above(int i) { return i >= 63 ? 0 : ~u64{0} << (i + 1); }
constexpr u64 below(int i) { return i <= 0 ? 0 : (i >= 64 ? ~u64{0} : (u64{1} << i) - 1); }

// Ordered partition of the labelled positions; every position before the
// one being processed is a singleton.
struct Cells {
  int count = 0;
  int start[kSearchMaxOrder + 1];
  u64 mem[kSearchMaxOrder + 1];
  int end() const { return count == 0 ? 0 : start[count - 1] + std::popcount(mem[count - 1]); }
};

// Relabelled row for vertex v at position j: splits later cells into
// neighbours first, then appends unlabelled neighbours as a new cell.
u64 refine_row(const u64* adj, int v, int j, Cells& c, u64 labelled) {
  u64 row = 0;
  const u64 nb = adj[v];
  Cells out;
  out.count = 0;
  for (int x = 0; x < c.count; ++x) {
    int s = c.start[x];
    u64 m = c.mem[x];
    if (s <= j) {
      out.start[out.count] = s;
      out.mem[out.count++] = m;
      continue;
    }
    u64 in = m & nb, rest = m & ~nb;
    int cnt = std::popcount(in);
    if (cnt) row |= below(s + cnt) & ~below(s);
    if (in && rest) {
      out.start[out.count] = s;
      out.mem[out.count++] = in;
      out.start[out.count] = s + cnt;
      out.mem[out.count++] = rest;
    } else {
      out.start[out.count] = s;
      out.mem[out.count++] = m;
    }
  }
  u64 fresh = nb & ~labelled;
  if (fresh) {
    int s = out.end();
    int cnt = std::popcount(fresh);
    row |= below(s + cnt) & ~below(s);
    out.start[out.count] = s;
    out.mem[out.count++] = fresh;
  }
  c = out;
  return row;
}

// true when a is larger: the lowest differing position decides
inline int compare_rows(u64 a, u64 b) {
  u64 d = a ^ b;
  if (!d) return 0;
  return (a >> std::countr_zero(d)) & 1 ? 1 : -1;
}

// Searches for a BFS relabelling whose code beats the given labelling on a
// prefix made of complete vertices.
class CanonTester {
 public:
  CanonTester(const u64* adj, int n, u64 complete) : adj_(adj), n_(n), complete_(complete) {}

  bool better_exists() {
    for (u64 roots = complete_; roots; roots &= roots - 1) {
      int r = std::countr_zero(roots);
      Cells c;
      c.count = 1;
      c.start[0] = 0;
      c.mem[0] = bit(r);
      if (process(0, r, c, bit(r))) return true;
    }
    return false;
  }

 private:
  bool dfs(int j, const Cells& c, u64 labelled) {
    if (j >= n_ || j >= c.end()) return false;
    // cells before index j are singletons, so cell j starts at position j
    u64 m = c.mem[j];
    if (!(m & (m - 1))) return process(j, std::countr_zero(m), c, labelled);
    for (u64 it = m; it; it &= it - 1) {
      int v = std::countr_zero(it);
      if (!(complete_ & bit(v))) continue;
      Cells d;
      d.count = 0;
      for (int x = 0; x < c.count; ++x) {
        if (x == j) {
          d.start[d.count] = j;
          d.mem[d.count++] = bit(v);
          d.start[d.count] = j + 1;
          d.mem[d.count++] = m & ~bit(v);
        } else {
          d.start[d.count] = c.start[x];
          d.mem[d.count++] = c.mem[x];
        }
      }
      if (process(j, v, d, labelled)) return true;
    }
    return false;
  }

  bool process(int j, int v, Cells c, u64 labelled) {
    if (!(complete_ & bit(v)) || !(complete_ & bit(j))) return false;
    u64 row = refine_row(adj_, v, j, c, labelled);
    labelled |= adj_[v];
    int cmp = compare_rows(row, adj_[j] & above(j));
    if (cmp > 0) return true;
    if (cmp < 0) return false;
    return dfs(j + 1, c, labelled);
  }

  const u64* adj_;
  int n_;
  u64 complete_;
};

bool erdos_gallai(const int* deficit, int count, int k) {
  // counts of each deficit value, largest first
  int hist[kSearchMaxOrder + 1] = {0};
  long sum = 0;
  for (int x = 0; x < count; ++x) {
    ++hist[deficit[x]];
    sum += deficit[x];
  }
  if (sum % 2) return false;
  std::vector<int> d;
  d.reserve(count);
  for (int v = k; v >= 1; --v)
    for (int t = 0; t < hist[v]; ++t) d.push_back(v);
  long left = 0;
  const int m = static_cast<int>(d.size());
  for (int r = 1; r <= m; ++r) {
    left += d[r - 1];
    long right = static_cast<long>(r) * (r - 1);
    for (int x = r; x < m; ++x) right += std::min(d[x], r);
    if (left > right) return false;
  }
  return true;
}

struct Config {
  int n = 0, k = 0;
  int girth = 3;  // enforced during generation
  std::optional<int> girth_exact;
  std::optional<Scalar> lambda;
  double lambda_d = 0;
  PruneHooks hooks;
  bool collect = false;
};

struct Frontier {
  u64 adj[kSearchMaxOrder];
  int deg[kSearchMaxOrder];
  int L;
  int row;
};

class Generator {
 public:
  Generator(const Config& cfg, const std::function<void(const Graph&)>* sink, std::mutex* sink_mu)
      : cfg_(cfg), sink_(sink), sink_mu_(sink_mu) {}

  void run_root(int split_depth, std::vector<Frontier>* frontier) {
    split_depth_ = split_depth;
    frontier_ = frontier;
    std::fill(adj_, adj_ + kSearchMaxOrder, 0);
    std::fill(deg_, deg_ + kSearchMaxOrder, 0);
    L_ = 1;
    if (cfg_.n == 1) {
      if (cfg_.k == 0) accept();
      return;
    }
    fill_row(0);
  }

  void run_frontier(const Frontier& f) {
    split_depth_ = -1;
    frontier_ = nullptr;
    std::copy(f.adj, f.adj + kSearchMaxOrder, adj_);
    std::copy(f.deg, f.deg + kSearchMaxOrder, deg_);
    L_ = f.L;
    fill_row(f.row);
  }

  SearchStats stats;
  long found = 0;
  std::vector<std::string> graphs;

 private:
  // vertices within distance r of x
  u64 ball(int x, int r) const {
    u64 seen = bit(x), front = bit(x);
    for (int s = 0; s < r && front; ++s) {
      u64 next = 0;
      for (u64 it = front; it; it &= it - 1) next |= adj_[std::countr_zero(it)];
      front = next & ~seen;
      seen |= front;
    }
    return seen;
  }

  void fill_row(int i) {
    if (i == cfg_.n) {
      leaf();
      return;
    }
    if (i == split_depth_ && frontier_) {
      Frontier f;
      std::copy(adj_, adj_ + kSearchMaxOrder, f.adj);
      std::copy(deg_, deg_ + kSearchMaxOrder, f.deg);
      f.L = L_;
      f.row = i;
      frontier_->push_back(f);
      return;
    }
    const int need = cfg_.k - deg_[i];
    // candidates: labelled, unprocessed, with spare degree, not too close to i
    u64 forbidden = cfg_.girth > 3 ? ball(i, cfg_.girth - 2) : bit(i);
    u64 cand = 0;
    for (int j = i + 1; j < L_; ++j) {
      if (deg_[j] < cfg_.k && !(forbidden & bit(j))) cand |= bit(j);
    }
    // classes of identical neighbourhoods; ones go to the smallest labels
    classes_[i].clear();
    for (u64 it = cand; it; it &= it - 1) {
      int j = std::countr_zero(it);
      bool placed = false;
      for (auto& cl : classes_[i]) {
        if (adj_[cl.front()] == adj_[j]) {
          cl.push_back(j);
          placed = true;
          break;
        }
      }
      if (!placed) classes_[i].push_back({j});
    }
    choose(i, 0, need, 0);
  }

  void choose(int i, size_t cls, int need, u64 chosen) {
    const auto& classes = classes_[i];
    if (cls == classes.size()) {
      int m = need;
      if (L_ + m > cfg_.n) return;
      apply(i, chosen, m);
      return;
    }
    const auto& cl = classes[cls];
    u64 add = 0;
    choose(i, cls + 1, need, chosen);
    for (size_t c = 1; c <= cl.size() && static_cast<int>(c) <= need; ++c) {
      int j = cl[c - 1];
      if (cfg_.girth > 4) {
        // j must be far from everything already chosen: a new cycle through i
        u64 near = ball(j, cfg_.girth - 3);
        if (near & (chosen | add)) break;
      }
      add |= bit(j);
      choose(i, cls + 1, need - static_cast<int>(c), chosen | add);
    }
  }

  void apply(int i, u64 chosen, int fresh) {
    ++stats.nodes;
    const int L0 = L_;
    for (u64 it = chosen; it; it &= it - 1) {
      int j = std::countr_zero(it);
      adj_[i] |= bit(j);
      adj_[j] |= bit(i);
      ++deg_[j];
    }
    for (int x = 0; x < fresh; ++x) {
      int j = L_ + x;
      adj_[i] |= bit(j);
      adj_[j] |= bit(i);
      deg_[j] = 1;
    }
    deg_[i] = cfg_.k;
    L_ += fresh;
    if (feasible(i) && canonical(i) && spectral_ok(i)) fill_row(i + 1);
    // undo
    for (int x = 0; x < fresh; ++x) {
      int j = L0 + x;
      adj_[i] &= ~bit(j);
      adj_[j] = 0;
      deg_[j] = 0;
    }
    for (u64 it = chosen; it; it &= it - 1) {
      int j = std::countr_zero(it);
      adj_[i] &= ~bit(j);
      adj_[j] &= ~bit(i);
      --deg_[j];
    }
    deg_[i] = std::popcount(adj_[i]);
    L_ = L0;
  }

  bool feasible(int i) {
    if (i + 1 < cfg_.n && L_ <= i + 1) {
      ++stats.pruned_feasibility;
      return false;
    }
    int def[kSearchMaxOrder];
    int cnt = 0;
    for (int j = i + 1; j < cfg_.n; ++j) def[cnt++] = j < L_ ? cfg_.k - deg_[j] : cfg_.k;
    if (!erdos_gallai(def, cnt, cfg_.k)) {
      ++stats.pruned_feasibility;
      return false;
    }
    return true;
  }

  u64 complete_mask() const {
    u64 c = 0;
    for (int j = 0; j < L_; ++j) {
      if (deg_[j] == cfg_.k) c |= bit(j);
    }
    return c;
  }

  bool canonical(int) {
    CanonTester t(adj_, cfg_.n, complete_mask());
    if (t.better_exists()) {
      ++stats.pruned_canonical;
      return false;
    }
    return true;
  }

  Graph induced_on(u64 mask, std::vector<int>* order = nullptr) const {
    std::vector<int> vs;
    for (u64 it = mask; it; it &= it - 1) vs.push_back(std::countr_zero(it));
    Graph h(static_cast<int>(vs.size()));
    for (size_t a = 0; a < vs.size(); ++a)
      for (size_t b = a + 1; b < vs.size(); ++b)
        if (adj_[vs[a]] & bit(vs[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
    if (order) *order = vs;
    return h;
  }

  bool spectral_ok(int i) {
    if (!cfg_.lambda || i + 1 >= cfg_.n) return true;
    if (!cfg_.hooks.spectral && !cfg_.hooks.subgraph_bound) return true;
    u64 comp = complete_mask();
    int s = std::popcount(comp);
    if (s < 3) return true;
    Graph h = induced_on(comp);
    auto ev = numeric_eigenvalues(h);
    const double lam = cfg_.lambda_d;
    if (cfg_.hooks.spectral) {
      bool exceeds = ev[1] > lam + 1e-6 || (ev[1] >= lam - 1e-6 && count_eigs_greater(h, *cfg_.lambda) >= 2);
      if (exceeds) {
        ++stats.pruned_spectral;
        return false;
      }
    }
    if (cfg_.hooks.subgraph_bound && lam < cfg_.k) {
      long e = h.edge_count();
      Scalar lambda = *cfg_.lambda;
      bool dense = Scalar(Rat(2 * e, s)) >= lambda;
      if (!dense) dense = ev[0] > lam + 1e-6 || (ev[0] >= lam - 1e-6 && count_eigs_greater(h, lambda) >= 1);
      if (dense) {
        double b = s + (2.0 * cfg_.k - lam - 1) / (cfg_.k - lam) * (static_cast<double>(cfg_.k) * s - 2.0 * e);
        bool below_n = b < cfg_.n - 1e-9;
        if (!below_n && b < cfg_.n + 1e-9) below_n = subgraph_order_bound(cfg_.k, lambda, s, e) < Scalar(static_cast<long>(cfg_.n));
        if (below_n) {
          ++stats.pruned_subgraph;
          return false;
        }
      }
    }
    return true;
  }

  void leaf() {
    Graph g(cfg_.n);
    for (int u = 0; u < cfg_.n; ++u)
      for (u64 it = adj_[u] & above(u); it; it &= it - 1) g.add_edge(u, std::countr_zero(it));
    if (cfg_.girth_exact) {
      auto gi = girth(g);
      if (!gi || *gi != *cfg_.girth_exact) {
        ++stats.rejected_final;
        return;
      }
    }
    if (cfg_.lambda && second_eig_exceeds(g, *cfg_.lambda)) {
      ++stats.rejected_final;
      return;
    }
    accept(&g);
  }

  void accept(const Graph* g = nullptr) {
    ++found;
    Graph single(1);
    const Graph& out = g ? *g : single;
    if (cfg_.collect) graphs.push_back(to_graph6(out));
    if (sink_ && *sink_) {
      std::lock_guard lock(*sink_mu_);
      (*sink_)(out);
    }
  }

  Config cfg_;
  const std::function<void(const Graph&)>* sink_;
  std::mutex* sink_mu_;
  int split_depth_ = -1;
  std::vector<Frontier>* frontier_ = nullptr;
  u64 adj_[kSearchMaxOrder];
  int deg_[kSearchMaxOrder];
  int L_ = 0;
  std::vector<std::vector<int>> classes_[kSearchMaxOrder];
};


}  // namespace

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  nodes += o.nodes;
  pruned_canonical += o.pruned_canonical;
  pruned_feasibility += o.pruned_feasibility;
  pruned_spectral += o.pruned_spectral;
  pruned_subgraph += o.pruned_subgraph;
  rejected_final += o.rejected_final;
  return *this;
}

long SearchResult::total() const {
  long t = 0;
  for (const auto& [n, c] : counts_by_n) t += c;
  return t;
}

int default_jobs() {
  if (const char* env = std::getenv("SPECTRAL_BOUND_JOBS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

int effective_girth(int k, const Scalar& lambda, int n) {
  // shortest cycles are induced with average degree and spectral radius 2
  if (!(lambda <= Scalar(2L)) || !(lambda < Scalar(static_cast<long>(k)))) return 3;
  for (int c = 3; c <= n; ++c) {
    if (subgraph_order_bound(k, lambda, c, c) >= Scalar(static_cast<long>(n))) return c;
  }
  return n + 1;
}

SearchResult enumerate(const SearchSpec& spec, const std::function<void(const Graph&)>& sink) {
  auto start = std::chrono::steady_clock::now();
  if (spec.k < 0 || spec.n_min < 1 || spec.n_max < spec.n_min) throw std::invalid_argument("search: bad order range");
  if (spec.n_max > kSearchMaxOrder)
    throw std::invalid_argument("search: n_max exceeds the policy limit of " + std::to_string(kSearchMaxOrder));
  if (!spec.connected_only) throw std::invalid_argument("search: only connected generation is supported");
  if (spec.girth_min < 3) throw std::invalid_argument("search: girth_min must be at least 3");
  if (spec.girth_exact && *spec.girth_exact < spec.girth_min)
    throw std::invalid_argument("search: girth_exact below girth_min");
  const int jobs = std::max(1, spec.jobs);
  SearchResult res;
  std::mutex sink_mu;
  for (int n = spec.n_min; n <= spec.n_max; ++n) {
    res.counts_by_n[n] = 0;
    if (n * spec.k % 2) {
      res.warnings.push_back("n*k odd for n=" + std::to_string(n) + ": no graphs");
      continue;
    }
    if (spec.k >= n && !(n == 1 && spec.k == 0)) continue;
    Config cfg;
    cfg.n = n;
    cfg.k = spec.k;
    cfg.girth = spec.girth_exact ? *spec.girth_exact : spec.girth_min;
    cfg.girth_exact = spec.girth_exact;
    cfg.lambda = spec.lambda2_max;
    if (cfg.lambda) cfg.lambda_d = cfg.lambda->to_double();
    cfg.hooks = spec.hooks;
    cfg.collect = spec.mode != SearchSpec::Mode::count;
    if (!spec.hooks.girth) cfg.girth = 3;
    if (cfg.lambda && spec.hooks.subgraph_bound)
      cfg.girth = std::max(cfg.girth, effective_girth(spec.k, *cfg.lambda, n));
    if (spec.girth_exact && cfg.girth > *spec.girth_exact) continue;
    if (spec.hooks.girth && spec.k >= 2 && cfg.girth <= n && moore_lower(spec.k, cfg.girth) > n) continue;
    if (cfg.girth > n) continue;

    // frontier of subtrees, then workers
    std::vector<Frontier> frontier;
    Generator root(cfg, &sink, &sink_mu);
    root.run_root(spec.split_depth, &frontier);
    res.stats += root.stats;
    res.counts_by_n[n] += root.found;
    for (auto& g6 : root.graphs) res.graphs.push_back(std::move(g6));

    std::vector<long> found(frontier.size(), 0);
    std::vector<std::vector<std::string>> graphs(frontier.size());
    std::vector<SearchStats> stats(frontier.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (;;) {
        size_t idx = next.fetch_add(1);
        if (idx >= frontier.size()) return;
        Generator gen(cfg, &sink, &sink_mu);
        gen.run_frontier(frontier[idx]);
        found[idx] = gen.found;
        graphs[idx] = std::move(gen.graphs);
        stats[idx] = gen.stats;
      }
    };
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    for (size_t idx = 0; idx < frontier.size(); ++idx) {
      res.counts_by_n[n] += found[idx];
      res.stats += stats[idx];
      for (auto& g6 : graphs[idx]) res.graphs.push_back(std::move(g6));
    }
  }
  res.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

SearchResult find_extremal(int k, const Scalar& lambda, int jobs) {
  auto start = std::chrono::steady_clock::now();
  auto cert = bound_for_lambda(k, lambda);
  if (cert.v_ub > kSearchMaxOrder)
    throw std::invalid_argument("bound " + cert.v_ub.get_str() + " exceeds the search limit of " +
                                std::to_string(kSearchMaxOrder));
  const int ub = static_cast<int>(cert.v_ub.get_si());
  SearchResult res;
  for (int n = ub; n >= k + 1; --n) {
    SearchSpec spec;
    spec.k = k;
    spec.n_min = spec.n_max = n;
    spec.lambda2_max = lambda;
    spec.mode = SearchSpec::Mode::extremal;
    spec.jobs = jobs;
    auto r = enumerate(spec);
    res.stats += r.stats;
    res.counts_by_n[n] = r.counts_by_n[n];
    if (!r.graphs.empty()) {
      res.max_order = n;
      for (const auto& g6 : r.graphs) res.witnesses.push_back({g6, second_eig(from_graph6(g6))});
      res.graphs = r.graphs;
      break;
    }
  }
  res.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

Graph canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > kSearchMaxOrder) throw std::invalid_argument("canonical_form: order above 64");
  if (!g.is_connected()) throw std::invalid_argument("canonical_form: graph is disconnected");
  if (n <= 1) return g;
  std::vector<u64> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.row(v)[0];
  std::vector<u64> best;
  std::vector<int> best_perm;
  std::vector<u64> code;
  std::vector<int> perm(n);
  // depth-first over BFS labellings, cut when the prefix falls below the best
  std::function<void(int, const Cells&, u64)> rec = [&](int j, const Cells& c, u64 labelled) {
    if (j == n) {
      bool larger = best.empty();
      for (int x = 0; x < n && !larger; ++x) {
        int cmp = compare_rows(code[x], best[x]);
        if (cmp < 0) break;
        if (cmp > 0) larger = true;
      }
      if (larger) {
        best = code;
        best_perm = perm;
      }
      return;
    }
    u64 m = c.mem[j];
    for (u64 it = m; it; it &= it - 1) {
      int v = std::countr_zero(it);
      Cells d;
      d.count = 0;
      for (int x = 0; x < c.count; ++x) {
        if (x == j) {
          d.start[d.count] = j;
          d.mem[d.count++] = bit(v);
          if (m & ~bit(v)) {
            d.start[d.count] = j + 1;
            d.mem[d.count++] = m & ~bit(v);
          }
        } else {
          d.start[d.count] = c.start[x];
          d.mem[d.count++] = c.mem[x];
        }
      }
      code[j] = refine_row(adj.data(), v, j, d, labelled);
      perm[j] = v;
      if (!best.empty()) {
        int cmp = 0;
        for (int x = 0; x <= j && cmp == 0; ++x) cmp = compare_rows(code[x], best[x]);
        if (cmp < 0) continue;
      }
      rec(j + 1, d, labelled | adj[v]);
    }
  };
  code.assign(n, 0);
  for (int r = 0; r < n; ++r) {
    Cells c;
    c.count = 1;
    c.start[0] = 0;
    c.mem[0] = bit(r);
    rec(0, c, bit(r));
  }
  return g.permuted(best_perm);
}

}  // namespace spectral
