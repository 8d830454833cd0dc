#include "spectral/structure.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "spectral/spectrum.hpp"

namespace spectral {

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.order(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = -1;
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      if (best > 0 && 2 * dist[u] + 1 >= best) break;
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          int len = dist[u] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

std::optional<int> diameter(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.order(); ++v) {
    for (int x : bfs_distances(g, v)) {
      if (x < 0) return std::nullopt;
      d = std::max(d, x);
    }
  }
  return d;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

QuotientMatrix quotient(const Graph& g, const std::vector<std::vector<int>>& parts) {
  const int n = g.order();
  std::vector<int> part_of(n, -1);
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) throw std::invalid_argument("quotient: empty part");
    for (int v : parts[i]) {
      if (v < 0 || v >= n) throw std::invalid_argument("quotient: vertex out of range");
      if (part_of[v] >= 0) throw std::invalid_argument("quotient: parts overlap");
      part_of[v] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (part_of[v] < 0) throw std::invalid_argument("quotient: parts do not cover the vertex set");
  }
  const size_t m = parts.size();
  QuotientMatrix q;
  q.parts = parts;
  q.B.assign(m, std::vector<Rat>(m, 0));
  q.equitable = true;
  for (size_t i = 0; i < m; ++i) {
    std::vector<long> first, total(m, 0);
    for (size_t idx = 0; idx < parts[i].size(); ++idx) {
      std::vector<long> counts(m, 0);
      for (int w : g.neighbors(parts[i][idx])) ++counts[part_of[w]];
      if (idx == 0) {
        first = counts;
      } else if (counts != first) {
        q.equitable = false;
      }
      for (size_t j = 0; j < m; ++j) total[j] += counts[j];
    }
    for (size_t j = 0; j < m; ++j) {
      q.B[i][j] = Rat(total[j], static_cast<long>(parts[i].size()));
      q.B[i][j].canonicalize();
    }
  }
  return q;
}

IntPoly quotient_char_poly(const QuotientMatrix& q) {
  // Faddeev-LeVerrier over Q
  const size_t m = q.B.size();
  using Mat = std::vector<std::vector<Rat>>;
  auto mul = [&](const Mat& x, const Mat& y) {
    Mat z(m, std::vector<Rat>(m, 0));
    for (size_t i = 0; i < m; ++i)
      for (size_t k = 0; k < m; ++k)
        if (x[i][k] != 0)
          for (size_t j = 0; j < m; ++j) z[i][j] += x[i][k] * y[k][j];
    return z;
  };
  std::vector<Rat> c(m + 1, 0);  // highest first
  c[0] = 1;
  Mat Mk(m, std::vector<Rat>(m, 0));
  for (size_t k = 1; k <= m; ++k) {
    for (size_t i = 0; i < m; ++i) Mk[i][i] += c[k - 1];
    Mat AM = mul(q.B, Mk);
    Rat tr = 0;
    for (size_t i = 0; i < m; ++i) tr += AM[i][i];
    c[k] = -tr / static_cast<long>(k);
    Mk = AM;
  }
  std::vector<Rat> low(c.rbegin(), c.rend());
  return IntPoly::from_rational(low);
}

Scalar quotient_lambda2(const QuotientMatrix& q) {
  std::vector<Scalar> flat;
  for (const auto& [f, m] : factor_rational(quotient_char_poly(q))) {
    for (auto& r : real_roots(f)) flat.insert(flat.end(), m, r);
  }
  if (flat.size() < 2) throw std::domain_error("quotient has fewer than two real eigenvalues");
  std::sort(flat.begin(), flat.end(), [](const Scalar& x, const Scalar& y) { return x > y; });
  return flat[1];
}

Scalar three_part_lambda2(const Rat& alpha, const Rat& beta, const Rat& gamma, const Rat& epsilon) {
  Rat s = alpha + beta - (gamma + epsilon);
  Rat delta = s * s - 4 * (alpha * beta - beta * gamma - alpha * epsilon);
  if (delta < 0) throw std::domain_error("three-part quotient has complex eigenvalues");
  return (Scalar(s) + Scalar::sqrt(delta)) / Scalar(Rat(2));
}

ThreePartStats three_part_stats(const Graph& g, const std::vector<int>& h) {
  auto parts = distance_partition(g, h);
  std::vector<std::vector<int>> three(3);
  for (size_t i = 0; i < parts.size(); ++i) {
    auto& dst = three[std::min<size_t>(i, 2)];
    dst.insert(dst.end(), parts[i].begin(), parts[i].end());
  }
  for (const auto& p : three) {
    if (p.empty()) throw std::domain_error("three-part partition has an empty part");
  }
  auto q = quotient(g, three);
  ThreePartStats st;
  st.alpha = q.B[0][0];
  st.beta = q.B[2][2];
  st.gamma = q.B[1][0];
  st.epsilon = q.B[1][2];
  Rat s = st.alpha + st.beta - (st.gamma + st.epsilon);
  st.Delta = s * s - 4 * (st.alpha * st.beta - st.beta * st.gamma - st.alpha * st.epsilon);
  st.lambda2Q = three_part_lambda2(st.alpha, st.beta, st.gamma, st.epsilon);
  return st;
}

Scalar subgraph_order_bound(int k, const Scalar& lambda, int s, long edges) {
  if (!(lambda < Scalar(static_cast<long>(k)))) throw std::domain_error("subgraph bound needs lambda < k");
  Scalar kk(static_cast<long>(k));
  Scalar factor = (Scalar(2L * k - 1) - lambda) / (kk - lambda);
  return Scalar(static_cast<long>(s)) + factor * Scalar(static_cast<long>(k) * s - 2 * edges);
}

std::vector<std::vector<int>> distance_partition(const Graph& g, const std::vector<int>& seed) {
  const int n = g.order();
  std::vector<int> dist(n, -1);
  std::deque<int> queue;
  for (int v : seed) {
    if (dist[v] < 0) {
      dist[v] = 0;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<std::vector<int>> parts;
  for (int v = 0; v < n; ++v) {
    if (dist[v] < 0) throw std::domain_error("distance partition of a disconnected graph");
    if (dist[v] >= static_cast<int>(parts.size())) parts.resize(dist[v] + 1);
    parts[dist[v]].push_back(v);
  }
  return parts;
}

std::optional<QuotientMatrix> distance_regular_quotient(const Graph& g) {
  if (g.order() == 0 || !g.is_connected()) return std::nullopt;
  std::optional<QuotientMatrix> first;
  for (int v = 0; v < g.order(); ++v) {
    auto q = quotient(g, distance_partition(g, {v}));
    if (!q.equitable) return std::nullopt;
    if (!first) {
      first = std::move(q);
    } else if (q.B != first->B) {
      return std::nullopt;
    }
  }
  return first;
}

DrgCheck is_drg_with_array(const Graph& g, const Rat& c) {
  auto k = g.regular_degree();
  if (!k) throw std::domain_error("graph is not regular");
  if (!g.is_connected()) throw std::domain_error("graph is disconnected");
  DrgCheck res;
  for (int v = 0; v < g.order(); ++v) {
    auto parts = distance_partition(g, {v});
    int t = static_cast<int>(parts.size());
    if (v == 0) res.t = t;
    if (t != res.t) return {false, res.t};
    auto q = quotient(g, parts);
    if (!q.equitable) return {false, res.t};
    for (int i = 0; i < t; ++i) {
      for (int j = 0; j < t; ++j) {
        Rat want = 0;
        if (j == i + 1) want = (i == 0) ? *k : *k - 1;
        if (j == i - 1) want = (i == t - 1) ? c : Rat(1);
        if (j == i) {
          Rat up = (i + 1 < t) ? Rat(i == 0 ? *k : *k - 1) : Rat(0);
          Rat down = (i == 0) ? Rat(0) : (i == t - 1 ? c : Rat(1));
          want = *k - up - down;
        }
        if (q.B[i][j] != want) return {false, res.t};
      }
    }
  }
  res.ok = true;
  return res;
}

}  // namespace spectral
