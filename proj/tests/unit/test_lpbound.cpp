#include <catch_amalgamated.hpp>

#include <random>

#include "spectral/expr.hpp"
#include "spectral/lpbound.hpp"
#include "spectral/orthopoly.hpp"

using namespace spectral;

namespace {

Scalar S(const char* s) { return parse_scalar(s); }

TridiagParams P(int k, int t, Scalar c) { return {k, t, std::move(c)}; }

// det(xI - T) for a rational tridiagonal matrix by the continuant recurrence
IntPoly continuant(const std::vector<std::vector<Scalar>>& m) {
  const size_t t = m.size();
  using RP = std::vector<Rat>;
  auto mulx = [](const RP& p, const Rat& a) {
    RP r(p.size() + 1, 0);
    for (size_t i = 0; i < p.size(); ++i) {
      r[i + 1] += p[i];
      r[i] -= a * p[i];
    }
    return r;
  };
  RP prev{1}, cur = mulx(prev, m[0][0].rational());
  for (size_t i = 1; i < t; ++i) {
    RP next = mulx(cur, m[i][i].rational());
    Rat off = m[i - 1][i].rational() * m[i][i - 1].rational();
    for (size_t j = 0; j < prev.size(); ++j) next[j] -= off * prev[j];
    prev = cur;
    cur = next;
  }
  return IntPoly::from_rational(cur);
}

}  // namespace

TEST_CASE("tridiagonal matrices") {
  auto m = tridiag_matrix(P(3, 3, 1L));
  std::vector<std::vector<Scalar>> want{{0L, 3L, 0L}, {1L, 0L, 2L}, {0L, 1L, 2L}};
  CHECK(m == want);
  CHECK(tridiag_matrix(P(5, 2, 1L)) == std::vector<std::vector<Scalar>>{{0L, 5L}, {1L, 4L}});
  std::vector<std::vector<Scalar>> want4{{0L, 4L, 0L}, {1L, 0L, 3L}, {0L, 2L, 2L}};
  CHECK(tridiag_matrix(P(4, 3, 2L)) == want4);
}

TEST_CASE("second eigenvalue of T") {
  CHECK(tridiag_second_eig(P(3, 3, 1L)) == Scalar(1L));
  CHECK(tridiag_second_eig(P(3, 4, Rat(2641, 3510))) == Scalar(Rat(19, 10)));
  for (int k = 3; k <= 22; ++k) CHECK(tridiag_second_eig(P(k, 3, Rat(k - 1, 2))) == Scalar(1L));
}

TEST_CASE("second eigenvalue agrees with the exact characteristic polynomial") {
  for (int k = 3; k <= 22; ++k) {
    for (int t = 2; t <= 8; ++t) {
      for (Rat c : {Rat(1, 2), Rat(1), Rat(3, 2), Rat(2), Rat(k - 1), Rat(k)}) {
        if (t == 2 && c > k) continue;
        auto p = P(k, t, c);
        auto roots = real_roots(continuant(tridiag_matrix(p)));
        REQUIRE(roots.size() == static_cast<size_t>(t));
        INFO("k=" << k << " t=" << t << " c=" << c);
        CHECK(roots.back() == Scalar(static_cast<long>(k)));
        CHECK(tridiag_second_eig(p) == roots[t - 2]);
      }
    }
  }
}

TEST_CASE("second eigenvalue decreases in c") {
  const std::vector<Rat> cs{Rat(1, 100), Rat(1, 3), Rat(1, 2), Rat(1), Rat(3, 2), Rat(2), Rat(7, 2), Rat(10), Rat(100)};
  for (int k = 3; k <= 10; ++k) {
    for (int t = 3; t <= 7; ++t) {
      INFO("k=" << k << " t=" << t);
      for (size_t i = 0; i + 1 < cs.size(); ++i)
        CHECK(tridiag_second_eig(P(k, t, cs[i])) > tridiag_second_eig(P(k, t, cs[i + 1])));
      CHECK(tridiag_second_eig(P(k, t, 1L)) == lambda_top(k, t - 1));
      CHECK(tridiag_second_eig(P(k, t, Rat(100))) > lambda_top(k, t - 2));
      CHECK(tridiag_second_eig(P(k, t, Rat(1, 100))) < mu_top(k, t - 1));
    }
  }
}

TEST_CASE("M and c examples") {
  CHECK(M(P(3, 3, 1L)) == Scalar(10L));
  CHECK(M(P(7, 3, 1L)) == Scalar(50L));
  CHECK(M(P(5, 3, 2L)) == Scalar(16L));
  CHECK(M(P(22, 3, 6L)) == Scalar(100L));
  CHECK(M(P(4, 4, 2L)) == Scalar(35L));
  CHECK(M(P(3, 5, 3L)) == Scalar(30L));
  CHECK(M(P(3, 4, 3L)) == Scalar(14L));
  CHECK(M(P(3, 4, Rat(2641, 3510))) == Scalar(Rat(68530, 2641)));
  CHECK(c_for_lambda(3, 4, Scalar(Rat(19, 10))) == Scalar(Rat(2641, 3510)));
  CHECK(c_for_lambda(3, 4, Scalar::sqrt(2)) == Scalar(3L));
  for (int k = 3; k <= 22; ++k) CHECK(c_for_lambda(k, 3, Scalar(1L)) == Scalar(Rat(k - 1, 2)));
}

TEST_CASE("c_for_lambda inverts the second eigenvalue") {
  for (int k = 3; k <= 10; ++k) {
    for (int t = 3; t <= 7; ++t) {
      Scalar lo = lambda_top(k, t - 2), hi = lambda_top(k, t - 1);
      std::vector<Scalar> samples;
      auto [a, b] = lo.enclosure(Rat(1, 1000));
      auto [c, d] = hi.enclosure(Rat(1, 1000));
      Rat mid = (b + c) / 2;
      samples.emplace_back(mid);
      samples.emplace_back(Rat(b + 3 * c) / 4);
      for (int dd : {2, 3, 5, 6, 7}) {
        Scalar s = Scalar::sqrt(dd);
        for (int q = 1; q <= 4; ++q) {
          Scalar x = s * Scalar(Rat(q, 2)) - Scalar(1L);
          if (lo < x && x <= hi) samples.push_back(x);
        }
      }
      for (const auto& l : samples) {
        INFO("k=" << k << " t=" << t << " lambda=" << l.to_string());
        Scalar cc = c_for_lambda(k, t, l);
        CHECK(cc >= Scalar(1L));
        CHECK(tridiag_second_eig(P(k, t, cc)) == l);
      }
    }
  }
}

TEST_CASE("longer arrays with c below one give larger bounds") {
  int checked = 0;
  for (int k = 3; k <= 8; ++k) {
    for (int t = 3; t <= 6; ++t) {
      Scalar lo = lambda_top(k, t - 1), hi = mu_top(k, t - 1);
      if (!(lo < hi)) continue;
      auto [a, b] = lo.enclosure(Rat(1, 10000));
      auto [c, d] = hi.enclosure(Rat(1, 10000));
      for (int j = 1; j <= 5; ++j) {
        Scalar l(b + (c - b) * Rat(j, 6));
        Scalar c1 = c_for_lambda(k, t, l), c2 = c_for_lambda(k, t + 1, l);
        INFO("k=" << k << " t=" << t << " lambda=" << l.to_string());
        REQUIRE(c1 > Scalar(0L));
        REQUIRE(c2 > Scalar(0L));
        CHECK(M(P(k, t, c1)) > M(P(k, t + 1, c2)));
        ++checked;
      }
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("bound_for_lambda") {
  for (int k = 3; k <= 22; ++k) {
    CHECK(bound_for_lambda(k, Scalar(-1L)).v_ub == k + 1);
    CHECK(bound_for_lambda(k, Scalar(0L)).v_ub == 2 * k);
  }
  auto b = bound_for_lambda(3, Scalar(Rat(19, 10)));
  CHECK(b.v_ub == 24);
  CHECK(b.parity_applied);
  auto b2 = bound_for_lambda(3, Scalar(2L));
  CHECK(b2.params.t == 5);
  CHECK(b2.params.c == Scalar(3L));
  CHECK(b2.M == Scalar(30L));
  CHECK(b2.v_ub == 30);
  auto b3 = bound_for_lambda(4, Scalar(3L));
  CHECK(b3.M == Scalar(728L));
  CHECK(b3.v_ub == 728);
  CHECK(bound_for_lambda(3, S("sqrt(6)")).v_ub == 126);
  CHECK(bound_for_lambda(5, S("2*sqrt(3)")).v_ub == 2730);
  CHECK(bound_for_lambda(2, S("(sqrt(5)-1)/2")).v_ub == 5);
  CHECK_THROWS_AS(bound_for_lambda(3, S("2*sqrt(2)")), std::domain_error);
  CHECK_THROWS_AS(bound_for_lambda(3, Scalar(Rat(-3, 2))), std::domain_error);
}

TEST_CASE("linear programming certificates") {
  CHECK(lp_certificate_check({3, {5, 5, 3, 1}}, Scalar(1L)) == 10);
  CHECK(lp_certificate_check({3, {1, 1}}, Scalar(-1L)) == 4);
  // (x - 1)(x + 3)^2 for T(5,3,2), eigenvalues 5, 1, -3
  IntPoly clebsch = IntPoly{-1, 1} * IntPoly{3, 1} * IntPoly{3, 1};
  CHECK(lp_certificate_check({5, to_f_basis(5, clebsch)}, Scalar(1L)) == 16);
  IntPoly petersen = IntPoly{-1, 1} * IntPoly{2, 1} * IntPoly{2, 1};
  CHECK(to_f_basis(3, petersen) == std::vector<Rat>{5, 5, 3, 1});
  // f positive beyond lambda is not a certificate
  CHECK_THROWS(lp_certificate_check({3, to_f_basis(3, IntPoly{-1, 1})}, Scalar(1L)));
}

TEST_CASE("moore and alon-boppana bounds") {
  CHECK(moore_lower(3, 6) == 14);
  CHECK(moore_lower(3, 8) == 30);
  CHECK(moore_lower(3, 3) == 4);
  CHECK(moore_lower(3, 5) == 10);
  CHECK(moore_lower(7, 5) == 50);
  auto a = alon_boppana_min_t(3, Scalar(1L));
  CHECK(a.t == 4);
  CHECK(a.bound == 22);
  auto b = alon_boppana_min_t(3, Scalar(0L));
  CHECK(b.t == 3);
  CHECK(b.bound == 10);
  for (int k = 3; k <= 10; ++k) {
    auto c = alon_boppana_min_t(k, Scalar(-1L));
    CHECK(c.t == 3);
    CHECK(c.bound == 1 + k + k * (k - 1));
  }
}

TEST_CASE("extended range polynomials") {
  struct Row {
    int k, t, c;
    bool parity;
    IntPoly f;
    double lambda;
    Rat cstar;
  };
  const Row rows[] = {
      {7, 3, 1, true, IntPoly{-756, 113, 126, 1}, 2.02845, Rat(126)},
      {5, 3, 2, true, IntPoly{-10, 5, 3}, 1.1736, Rat(5, 3)},
      {10, 3, 2, false, IntPoly{-185, 45, 23}, 2.02182, Rat(45, 23)},
      {16, 3, 4, false, IntPoly{-736, 240, 61}, 2.02472, Rat(240, 61)},
      {22, 3, 6, false, IntPoly{-209, 77, 13}, 2.0232, Rat(77, 13)},
      {4, 4, 2, false, IntPoly{-108, -97, 36, 19}, 2.02156, Rat(36, 19)},
      {3, 3, 1, false, IntPoly{-24, 7, 12, 1}, 1.11207, Rat(12)},
  };
  for (const auto& r : rows) {
    INFO("k=" << r.k);
    auto e = extended_range(P(r.k, r.t, static_cast<long>(r.c)), r.parity ? Threshold::parity : Threshold::plain);
    CHECK(e.f == r.f);
    CHECK(e.threshold_c == r.cstar);
    CHECK(std::abs(e.lambda_prime.to_double() - r.lambda) < 1e-4);
  }
  // the parity rule picks the parity threshold for Petersen, unlike the published row
  auto pet = extended_range(P(3, 3, 1L), true, true);
  CHECK(pet.threshold == Threshold::parity);
  CHECK(!(pet.f == (IntPoly{-24, 7, 12, 1})));
  CHECK(extended_range(P(4, 4, 2L), false, false).f == (IntPoly{-108, -97, 36, 19}));
}
