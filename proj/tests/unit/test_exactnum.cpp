#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "spectral/expr.hpp"
#include "spectral/roots.hpp"
#include "spectral/scalar.hpp"

using namespace spectral;

namespace {

Scalar S(const char* s) { return parse_scalar(s); }

// product of distinct rational linear factors and positive definite quadratics;
// the number of real roots is known by construction
struct Built {
  IntPoly p;
  int real_roots;
};

Built random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4), coin(0, 2), quad(1, 6);
  IntPoly p{1};
  std::set<Rat> used;
  int deg = 0, roots = 0;
  std::uniform_int_distribution<int> target(1, 8);
  int want = target(rng);
  while (deg < want) {
    if (coin(rng) > 0 || deg + 2 > want) {
      Rat r(num(rng), den(rng));
      r.canonicalize();
      if (!used.insert(r).second) continue;
      p = p * IntPoly{-r.get_num().get_si(), r.get_den().get_si()};
      ++deg;
      ++roots;
    } else {
      // x^2 + b x + c with b^2 < 4c
      int b = num(rng) % 3;
      int c = b * b / 4 + quad(rng);
      p = p * IntPoly{c, b, 1};
      deg += 2;
    }
  }
  return {p, roots};
}

}  // namespace

TEST_CASE("sturm counts on small examples") {
  CHECK(sturm_count(IntPoly{-2, 0, 1}, 1, 2) == 1);
  CHECK(sturm_count(IntPoly{-2, 1, 1}, 0, 3) == 1);
  CHECK(sturm_count(IntPoly{-6, -4, 2, 1}, 1, 2) == 1);
  // (lo, hi] convention
  CHECK(sturm_count(IntPoly{-1, 1}, 0, 1) == 1);
  CHECK(sturm_count(IntPoly{-1, 1}, 1, 2) == 0);
  // repeated roots count once
  IntPoly sq = IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{2, 1};
  CHECK(sturm_count(sq, -10, 10) == 2);
}

TEST_CASE("sturm count matches constructed root counts") {
  std::mt19937 rng(12345);
  for (int it = 0; it < 300; ++it) {
    auto b = random_poly(rng);
    Rat bound = root_bound(b.p);
    INFO(b.p.to_string());
    CHECK(sturm_count(b.p, -bound, bound) == b.real_roots);
    CHECK(static_cast<int>(isolate_real_roots(b.p).size()) == b.real_roots);
    CHECK(static_cast<int>(real_roots(b.p).size()) == b.real_roots);
  }
}

TEST_CASE("sturm count matches sign-change bisection on random polynomials") {
  // grid bisection sees every root of a polynomial whose roots are at least
  // 1/64 apart, so only keep those
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> coef(-20, 20), degd(1, 8);
  int checked = 0;
  for (int it = 0; it < 400; ++it) {
    int d = degd(rng);
    std::vector<BigInt> c(d + 1);
    for (auto& x : c) x = coef(rng);
    if (c.back() == 0) c.back() = 1;
    IntPoly p(c);
    auto iv = isolate_real_roots(p);
    auto roots = real_roots(p);
    bool separated = true;
    for (size_t i = 1; i < roots.size(); ++i)
      if (roots[i].to_double() - roots[i - 1].to_double() < 1.0 / 32) separated = false;
    if (!separated) continue;
    IntPoly q = squarefree_part(p);
    Rat b = root_bound(p);
    int changes = 0;
    int last = q.sign_at(-b);
    for (Rat x = -b + Rat(1, 64); x <= b; x += Rat(1, 64)) {
      int s = q.sign_at(x);
      if (s == 0) {
        ++changes;
        x += Rat(1, 64);
        last = q.sign_at(x);
        continue;
      }
      if (s != last) ++changes;
      last = s;
    }
    INFO(p.to_string());
    CHECK(changes == sturm_count(p, -b, b));
    ++checked;
  }
  CHECK(checked > 200);
}

TEST_CASE("largest real root") {
  CHECK(largest_real_root(IntPoly{-3, 0, 1}) == Scalar::sqrt(3));
  CHECK(largest_real_root(IntPoly{-3, 0, 1}).kind() == Scalar::Kind::quadratic);
  Scalar r = largest_real_root(IntPoly{-6, -4, 2, 1});
  CHECK(std::abs(r.to_double() - 1.8662) < 1e-4);
  CHECK(std::abs(largest_real_root(IntPoly{-185, 45, 23}).to_double() - 2.02182) < 1e-5);

  std::mt19937 rng(4242);
  for (int it = 0; it < 100; ++it) {
    auto b = random_poly(rng);
    if (b.real_roots == 0) continue;
    Scalar x = largest_real_root(b.p);
    auto [lo, hi] = x.enclosure(Rat(1, 1000));
    CHECK(count_roots_above(b.p, x) == 0);
    if (lo != hi) CHECK(b.p.sign_at(lo) * b.p.sign_at(hi) <= 0);
    CHECK(sturm_count(b.p, hi, root_bound(b.p)) == 0);
  }
}

TEST_CASE("comparison examples") {
  CHECK(Scalar::sqrt(2) < Scalar(Rat(3, 2)));
  CHECK(S("sqrt(5)-1") == Scalar::root_of(IntPoly{-4, 2, 1}, 1, 2));
  CHECK(Scalar(Rat(19, 10)) > Scalar::sqrt(2));
  CHECK(S("root(x^3+2x^2-4x-6, [1.8, 1.9])") > S("sqrt(3)"));
  CHECK(S("root(x^3+2x^2-4x-6, [1.8, 1.9])") < S("19/10"));
}

TEST_CASE("comparison is a total order on mixed kinds") {
  std::vector<Scalar> pool;
  for (int a = -3; a <= 3; ++a) pool.emplace_back(Rat(a, 2));
  for (int d : {2, 3, 5, 6}) {
    pool.push_back(Scalar::sqrt(d));
    pool.push_back(Scalar(Surd(Rat(1, 3), Rat(-1, 2), d)));
  }
  pool.push_back(S("root(x^3+2x^2-4x-6, [1.8, 1.9])"));
  pool.push_back(S("root(x^3-3x-1, [1, 2])"));
  pool.push_back(S("root(x^3-3x-1, [-1, 0])"));
  pool.push_back(S("root(x^3-2, [1, 2])"));
  std::mt19937 rng(99);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  for (int it = 0; it < 2000; ++it) {
    const Scalar& x = pool[pick(rng)];
    const Scalar& y = pool[pick(rng)];
    const Scalar& z = pool[pick(rng)];
    auto xy = x <=> y, yx = y <=> x;
    CHECK((xy < 0) == (yx > 0));
    CHECK((xy == 0) == (yx == 0));
    if (x <= y && y <= z) CHECK(x <= z);
    if (std::abs(x.to_double() - y.to_double()) > 1e-9) CHECK((xy < 0) == (x.to_double() < y.to_double()));
  }
}

TEST_CASE("surd arithmetic is exact") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 9);
  for (int it = 0; it < 500; ++it) {
    Rat a(num(rng), den(rng)), b(num(rng), den(rng));
    a.canonicalize();
    b.canonicalize();
    unsigned long d = std::uniform_int_distribution<unsigned long>(2, 200)(rng);
    Rat r(d);
    if (!Surd::representable_sqrt(r) || Surd::sqrt(r).is_rational()) continue;
    Surd s = Surd(a) + Surd(b) * Surd::sqrt(r);
    Surd prod = s * s.conjugate();
    REQUIRE(prod.is_rational());
    CHECK(prod.a() == a * a - b * b * Rat(d));
    if (s.sign() != 0) CHECK(s / s == Surd(Rat(1)));
  }
  CHECK(Surd::sqrt(Rat(12)) == Surd(0, 2, 3));
  CHECK(Surd::sqrt(Rat(9, 4)) == Surd(Rat(3, 2)));
}

TEST_CASE("eval examples") {
  CHECK(eval(IntPoly{0, -5, 0, 1}, Scalar(Rat(19, 10))) == Scalar(Rat(-2641, 1000)));
  CHECK(eval(IntPoly{-2, 1, 1}, Scalar(1L)) == Scalar(0L));
  CHECK(eval(IntPoly{-3, 0, 1}, Scalar::sqrt(3)) == Scalar(0L));
  CHECK(sign_at(IntPoly{-6, -4, 2, 1}, S("sqrt(3)")) < 0);
  CHECK(sign_at(IntPoly{-6, -4, 2, 1}, S("root(x^3+2x^2-4x-6, [1.8, 1.9])")) == 0);
}

TEST_CASE("scalar arithmetic demotes") {
  Scalar a = S("(sqrt(5)-1)/2");
  CHECK(a * a + a == Scalar(1L));
  CHECK((S("sqrt(2)") * S("sqrt(2)")).is_rational());
  CHECK(S("sqrt(8)") == S("2*sqrt(2)"));
  CHECK(S("sqrt(12)/sqrt(3)") == Scalar(2L));
}

TEST_CASE("parser and canonical strings") {
  const char* table_lambdas[] = {"-1",        "0",         "(sqrt(5)-1)/2", "1",         "sqrt(2)",   "(sqrt(5)+1)/2",
                                 "sqrt(3)",   "2",         "sqrt(6)",       "sqrt(5)-1", "3",         "2*sqrt(2)",
                                 "2*sqrt(3)", "sqrt(5)",   "sqrt(10)",      "sqrt(15)",  "sqrt(7)",   "sqrt(14)",
                                 "sqrt(21)",  "4",         "2*sqrt(6)",     "3*sqrt(2)", "3*sqrt(3)", "sqrt(11)",
                                 "sqrt(22)",  "sqrt(33)",  "sqrt(13)",      "sqrt(26)",  "sqrt(39)",  "sqrt(17)",
                                 "sqrt(34)",  "sqrt(51)",  "sqrt(19)",      "sqrt(38)",  "sqrt(57)",  "19/10",
                                 "2641/3510", "root(x^3+2x^2-4x-6, [1.8,1.9])"};
  for (const char* s : table_lambdas) {
    Scalar x = S(s);
    INFO(s << " -> " << x.to_string());
    CHECK(S(x.to_string().c_str()) == x);
  }
  CHECK(S("sqrt(2)").to_string() == "sqrt(2)");
  CHECK(S("2641/3510").to_string() == "2641/3510");
  CHECK(S("1.9") == Scalar(Rat(19, 10)));
  CHECK_THROWS_AS(S("sqrt(2)+sqrt(3)"), std::invalid_argument);
  CHECK_THROWS_AS(S("sqrt(-1)"), std::invalid_argument);
  CHECK_THROWS_AS(S("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(S("(1"), std::invalid_argument);
  CHECK(parse_poly("23*x^2 + 45*x - 185") == (IntPoly{-185, 45, 23}));
}

TEST_CASE("rational factorization") {
  IntPoly petersen = IntPoly{-3, 1} * IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{-1, 1} *
                     IntPoly{-1, 1} * IntPoly{2, 1} * IntPoly{2, 1} * IntPoly{2, 1} * IntPoly{2, 1};
  CHECK(factored_string(factor_rational(petersen)) == "(x-3)(x-1)^5(x+2)^4");
  IntPoly heawood = IntPoly{-3, 1} * IntPoly{3, 1};
  for (int i = 0; i < 6; ++i) heawood = heawood * IntPoly{-2, 0, 1};
  CHECK(factored_string(factor_rational(heawood)) == "(x-3)(x^2-2)^6(x+3)");
  CHECK(factored_string(factor_rational(IntPoly{-9, 0, 1})) == "(x-3)(x+3)");
}

TEST_CASE("decimal strings round in the requested direction") {
  CHECK(decimal_string(Rat(2, 3), 3, false) == "0.666");
  CHECK(decimal_string(Rat(2, 3), 3, true) == "0.667");
  CHECK(decimal_string(Rat(-2, 3), 3, false) == "-0.667");
}
