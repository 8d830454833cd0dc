#include <catch_amalgamated.hpp>

#include <functional>

#include "spectral/catalog.hpp"
#include "spectral/constructions.hpp"
#include "spectral/expr.hpp"
#include "spectral/finite_field.hpp"
#include "spectral/spectrum.hpp"
#include "spectral/structure.hpp"

using namespace spectral;

namespace {

Scalar S(const char* s) { return parse_scalar(s); }

// plain backtracking isomorphism test, independent of the generator's canonical
// form; vertices of a are mapped in BFS order so each has a mapped neighbour
bool isomorphic(const Graph& a, const Graph& b) {
  const int n = a.order();
  if (n != b.order() || a.edge_count() != b.edge_count()) return false;
  if (n == 0) return true;
  std::vector<int> order{0}, parent(n, -1), seen(n, 0);
  seen[0] = 1;
  for (size_t i = 0; i < order.size(); ++i)
    for (int w : a.neighbors(order[i]))
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = order[i];
        order.push_back(w);
      }
  if (static_cast<int>(order.size()) != n) return false;
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
      if (used[w] || a.degree(v) != b.degree(w)) continue;
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

}  // namespace

TEST_CASE("every standard entry certifies") {
  for (const auto& e : standard_entries()) {
    auto r = certify(e);
    INFO(r.label);
    for (const auto& f : r.failures) INFO(f);
    CHECK(r.ok);
  }
}

TEST_CASE("named second eigenvalues") {
  auto l2 = [](const char* name) { return *certify(entry(name)).lambda2; };
  CHECK(l2("heawood") == Scalar::sqrt(2));
  CHECK(l2("tutte_coxeter") == Scalar(2L));
  CHECK(l2("tutte_12cage") == Scalar::sqrt(6));
  CHECK(l2("hoffman_singleton") == Scalar(2L));
  CHECK(l2("higman_sims") == Scalar(2L));
  CHECK(l2("clebsch") == Scalar(1L));
  CHECK(l2("odd_graph_4") == Scalar(2L));
  CHECK(l2("mcgee") == Scalar(2L));
  CHECK(l2("ci10_14") == S("sqrt(5)-1"));
  CHECK(l2("fig_sqrt5") == S("sqrt(5)-1"));
  CHECK(l2("fig_onept9") == S("root(x^3+2x^2-4x-6, [1.8, 1.9])"));
  CHECK(l2("pappus") == Scalar::sqrt(3));
}

TEST_CASE("builds") {
  Graph pg2 = build("pg_incidence", {2});
  CHECK(pg2.order() == 14);
  CHECK(pg2.regular_degree() == 3);
  CHECK(girth(pg2) == 6);
  CHECK(second_eig(pg2) == Scalar::sqrt(2));
  CHECK(isomorphic(pg2, build("heawood")));
  Graph gq2 = build("gq_incidence", {2});
  CHECK(gq2.order() == 30);
  CHECK(girth(gq2) == 8);
  CHECK(second_eig(gq2) == Scalar(2L));
  CHECK(isomorphic(gq2, build("tutte_coxeter")));
  CHECK(isomorphic(build("ci10_14"), circulant(10, {1, 4})));
  Graph hs = build("hoffman_singleton");
  CHECK(hs.order() == 50);
  CHECK(hs.regular_degree() == 7);
  CHECK(girth(hs) == 5);
  Graph sc = build("schlafli_complement");
  CHECK(sc.order() == 27);
  CHECK(sc.regular_degree() == 10);
  CHECK(second_eig(sc) == Scalar(1L));
  Graph cl = build("clebsch");
  CHECK(cl.order() == 16);
  CHECK(cl.regular_degree() == 5);
  CHECK(second_eig(cl) == Scalar(1L));
  CHECK(build(entry("petersen")) == build("petersen"));
}

TEST_CASE("incidence graph families") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    auto e = entry("pg_incidence", {q});
    Graph g = build(e);
    INFO("q=" << q);
    CHECK(g.order() == 2 * (q * q + q + 1));
    CHECK(g.regular_degree() == q + 1);
    CHECK(girth(g) == 6);
    CHECK(second_eig(g) == Scalar::sqrt(q));
  }
  for (int q : {2, 3, 4}) {
    Graph g = build("gq_incidence", {q});
    INFO("q=" << q);
    CHECK(g.order() == 2 * (q + 1) * (q * q + 1));
    CHECK(girth(g) == 8);
    CHECK(second_eig(g) == Scalar::sqrt(2 * q));
  }
  for (int q : {5, 7, 8, 9}) {
    auto r = certify(entry("gq_incidence", {q}));
    INFO("q=" << q);
    CHECK(r.ok);
    CHECK(r.girth == 8);
    CHECK(*r.lambda2 == Scalar::sqrt(2 * q));
  }
  CHECK_THROWS_AS(build("pg_incidence", {6}), std::domain_error);
  CHECK_THROWS_AS(build("gq_incidence", {11}), std::domain_error);
}

TEST_CASE("complement of the line graph of K_2,m") {
  for (int k = 11; k <= 30; ++k) {
    Graph g = build("complement_line_K2m", {k + 1});
    INFO("k=" << k);
    CHECK(g.is_connected());
    CHECK(g.regular_degree() == k);
    CHECK(g.order() == 2 * k + 2);
    CHECK(second_eig(g) == Scalar(1L));
  }
}

TEST_CASE("classified orders for lambda = 1") {
  const int table[] = {6, 10, 9, 16, 15, 18, 21, 24, 27, 24, 26, 28, 30, 32, 34, 36, 38, 40, 42, 44, 46};
  for (int k = 2; k <= 22; ++k) {
    INFO("k=" << k);
    if (k == 4) CHECK(v_k_1(k) == 12);
    else CHECK(v_k_1(k) == table[k - 2]);
  }
  CHECK(v_k_1(7) == 18);
  CHECK(v_k_1(10) == 27);
  CHECK(v_k_1(15) == 32);
}

TEST_CASE("attainment") {
  auto h = certify_attainment(build("heawood"), 3, Scalar::sqrt(2));
  CHECK(h.attains);
  CHECK(h.t == 4);
  CHECK(h.c == Scalar(3L));
  CHECK(h.drg == true);
  auto p = certify_attainment(build("petersen"), 3, Scalar(1L));
  CHECK(p.attains);
  CHECK(p.equals_M);
  CHECK(p.classified == 10);
  auto c6 = certify_attainment(cycle_graph(6), 2, Scalar(1L));
  CHECK(c6.attains);
  auto cl = certify_attainment(build("complement_line_K2m", {12}), 11, Scalar(1L));
  CHECK(cl.attains);
  CHECK(!certify_attainment(build("petersen"), 3, Scalar::sqrt(2)).attains);
  CHECK(!certify_attainment(build("mcgee"), 3, Scalar(2L)).attains);
  CHECK(certify_attainment(build("tutte_coxeter"), 3, Scalar(2L)).attains);
  CHECK(certify_attainment(build("tutte_12cage"), 3, Scalar::sqrt(6)).attains);
}

TEST_CASE("labels and lookup") {
  auto [name, params] = parse_entry_label("pg_incidence(3)");
  CHECK(name == "pg_incidence");
  CHECK(params == std::vector<int>{3});
  CHECK(parse_entry_label("petersen").second.empty());
  CHECK(entry("complete_bipartite", {3}).label() == "complete_bipartite(3)");
  CHECK_THROWS_AS(entry("no_such_graph"), std::invalid_argument);
  CHECK_THROWS_AS(parse_entry_label("cycle(x)"), std::invalid_argument);
  CHECK_THROWS_AS(entry("petersen", {2}), std::invalid_argument);
}

TEST_CASE("finite fields") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    FiniteField f(q);
    INFO("q=" << q);
    for (int a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
      for (int b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (int c = 0; c < q; ++c) {
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
          CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
        }
      }
    }
  }
  CHECK(!FiniteField::supported(6));
  CHECK(!FiniteField::supported(11));
  CHECK_THROWS_AS(FiniteField(6), std::domain_error);
}
