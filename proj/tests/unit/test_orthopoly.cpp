#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "spectral/orthopoly.hpp"

using namespace spectral;

TEST_CASE("recurrence polynomials") {
  CHECK(F(3, 0) == IntPoly{1});
  CHECK(F(7, 0) == IntPoly{1});
  CHECK(F(3, 1) == (IntPoly{0, 1}));
  CHECK(F(3, 2) == (IntPoly{-3, 0, 1}));
  CHECK(F(3, 3) == (IntPoly{0, -5, 0, 1}));
  CHECK(G(3, 2) == (IntPoly{-2, 1, 1}));
  CHECK(G(7, 2) == (IntPoly{-6, 1, 1}));
  CHECK(G(5, 0) == IntPoly{1});
  for (int k = 2; k <= 12; ++k) {
    for (int i = 3; i <= 12; ++i) {
      CHECK(F(k, i) == IntPoly{0, 1} * F(k, i - 1) - BigInt(k - 1) * F(k, i - 2));
      CHECK(G(k, i) == G(k, i - 1) + F(k, i));
    }
  }
}

TEST_CASE("largest zeros") {
  CHECK(lambda_top(3, 2) == Scalar(1L));
  CHECK(std::abs(lambda_top(3, 3).to_double() - 1.81361) < 1e-5);
  CHECK(mu_top(3, 2) == Scalar::sqrt(3));
  CHECK(mu_top(3, 3) == Scalar::sqrt(5));
  for (int k = 2; k <= 12; ++k) {
    CHECK(lambda_top(k, 1) == Scalar(-1L));
    CHECK(mu_top(k, 1) == Scalar(0L));
  }
}

TEST_CASE("lambda_top is below mu_top") {
  for (int k = 2; k <= 12; ++k)
    for (int t = 1; t <= 10; ++t) CHECK(lambda_top(k, t) < mu_top(k, t));
}

TEST_CASE("mu_top(t-1) against lambda_top(t)") {
  for (int k = 3; k <= 12; ++k) {
    for (int t = 2; t <= 10; ++t) {
      INFO("k=" << k << " t=" << t);
      bool below = k >= 5 || (k == 4 && t <= 5) || (k == 3 && t <= 3);
      if (below) {
        CHECK(mu_top(k, t - 1) < lambda_top(k, t));
      } else {
        CHECK(mu_top(k, t - 1) > lambda_top(k, t));
      }
    }
  }
}

TEST_CASE("zeros of G interlace") {
  for (int k = 2; k <= 8; ++k) {
    for (int t = 2; t <= 8; ++t) {
      auto r = real_roots(G(k, t));
      REQUIRE(static_cast<int>(r.size()) == t);
      for (size_t i = 0; i + 1 < r.size(); ++i) CHECK(count_roots_between(G(k, t - 1), r[i], r[i + 1]) == 1);
    }
  }
}

TEST_CASE("lambda_top lies in the cosine bracket") {
  // 2 sqrt(k-1) cos(pi/m) exactly when cos^2(pi/m) is rational
  auto exact_bound = [](int k, int m) -> std::optional<Scalar> {
    Rat cos2;
    switch (m) {
      case 1: return Scalar(Surd(0, -2, k - 1));
      case 2: cos2 = 0; break;
      case 3: cos2 = Rat(1, 4); break;
      case 4: cos2 = Rat(1, 2); break;
      case 6: cos2 = Rat(3, 4); break;
      default: return std::nullopt;
    }
    return Scalar::sqrt(4 * (k - 1) * cos2);
  };
  int exact = 0;
  for (int k = 2; k <= 12; ++k) {
    for (int t = 1; t <= 10; ++t) {
      Scalar l = lambda_top(k, t);
      auto lo = exact_bound(k, t), hi = exact_bound(k, t + 1);
      double r = 2 * std::sqrt(k - 1.0);
      INFO("k=" << k << " t=" << t);
      if (lo) {
        CHECK(*lo < l);
        ++exact;
      } else {
        auto [a, b] = l.enclosure(Rat(1, 1000000000));
        CHECK(r * std::cos(std::numbers::pi / t) < a.get_d());
      }
      if (hi) {
        CHECK(l < *hi);
        ++exact;
      } else {
        auto [a, b] = l.enclosure(Rat(1, 1000000000));
        CHECK(b.get_d() < r * std::cos(std::numbers::pi / (t + 1)));
      }
    }
  }
  CHECK(exact > 40);
}
