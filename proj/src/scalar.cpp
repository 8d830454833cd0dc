#include "spectral/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "spectral/roots.hpp"

namespace spectral {

namespace {

using LComplex = std::complex<long double>;

BigInt floor_rat(const Rat& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

BigInt ceil_rat(const Rat& r) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rat make_rat(const BigInt& n, const BigInt& d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string rat_string(const Rat& r) { return r.get_str(); }

// n = m^2 * d with d squarefree; false when d would exceed the supported range
bool split_square(BigInt n, BigInt& m, unsigned long& d) {
  m = 1;
  if (n == 0) {
    d = 0;
    return true;
  }
  for (unsigned long i = 2; i <= 1000; ++i) {
    unsigned long sq = i * i;
    if (n < sq) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), sq)) {
      n /= sq;
      m *= i;
    }
  }
  if (n > Surd::kMaxRadicand) return false;
  d = n.get_ui();
  return true;
}

std::strong_ordering from_sign(int s) {
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering reverse(std::strong_ordering o) {
  if (o < 0) return std::strong_ordering::greater;
  if (o > 0) return std::strong_ordering::less;
  return o;
}

void unify(const Surd& x, const Surd& y, unsigned long& d) {
  if (x.d() != 0 && y.d() != 0 && x.d() != y.d()) {
    throw std::domain_error("mixed radicands sqrt(" + std::to_string(x.d()) + ") and sqrt(" +
                            std::to_string(y.d()) + ")");
  }
  d = x.d() != 0 ? x.d() : y.d();
}

Surd eval_surd(const IntPoly& p, const Surd& s) {
  Surd h;
  for (int i = p.degree(); i >= 0; --i) h = h * s + Surd(Rat(p.coeff(i)));
  return h;
}

// root of q isolated in (lo, hi); lo == hi means the exact rational lo
struct Iso {
  IntPoly q;
  Rat lo, hi;
  int slo = 0;

  bool exact() const { return lo == hi; }
  void bisect() {
    if (!exact()) bisect_root(q, slo, lo, hi);
  }
};

Iso iso_of(const AlgebraicReal& a) { return Iso{a.poly(), a.lo(), a.hi(), a.sign_lo()}; }

std::strong_ordering cmp_iso_rat(const Iso& a, const Rat& r) {
  if (a.exact()) return from_sign(sgn(a.lo - r));
  if (r <= a.lo) return std::strong_ordering::greater;
  if (r >= a.hi) return std::strong_ordering::less;
  int s = a.q.sign_at(r);
  if (s == 0) return std::strong_ordering::equal;
  return s == a.slo ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::strong_ordering cmp_iso_surd(const Iso& a, const Surd& s) {
  if (s.is_rational()) return cmp_iso_rat(a, s.a());
  if (a.exact()) return from_sign((Surd(a.lo) - s).sign());
  if ((s - Surd(a.lo)).sign() <= 0) return std::strong_ordering::greater;
  if ((s - Surd(a.hi)).sign() >= 0) return std::strong_ordering::less;
  int v = eval_surd(a.q, s).sign();
  if (v == 0) return std::strong_ordering::equal;
  return v == a.slo ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::strong_ordering cmp_iso_iso(Iso a, Iso b) {
  if (a.exact()) return reverse(cmp_iso_rat(b, a.lo));
  if (b.exact()) return cmp_iso_rat(a, b.lo);
  bool checked_equal = false;
  for (;;) {
    if (a.hi <= b.lo) return std::strong_ordering::less;
    if (b.hi <= a.lo) return std::strong_ordering::greater;
    if (!checked_equal) {
      checked_equal = true;
      IntPoly g = gcd(a.q, b.q);
      if (g.degree() >= 1) {
        Rat l = a.lo > b.lo ? a.lo : b.lo;
        Rat h = a.hi < b.hi ? a.hi : b.hi;
        if (sturm_count(g, l, h) >= 1) return std::strong_ordering::equal;
      }
    }
    if (a.hi - a.lo >= b.hi - b.lo) {
      a.bisect();
      if (a.exact()) return reverse(cmp_iso_rat(b, a.lo));
    } else {
      b.bisect();
      if (b.exact()) return cmp_iso_rat(a, b.lo);
    }
  }
}

std::strong_ordering cmp_surd_surd(const Surd& x, const Surd& y) {
  if (x.d() == 0 || y.d() == 0 || x.d() == y.d()) return from_sign((x - y).sign());
  // distinct radicands: never equal
  Rat w(1, 16);
  for (;;) {
    auto ex = x.enclosure(w);
    auto ey = y.enclosure(w);
    if (ex.second < ey.first) return std::strong_ordering::less;
    if (ey.second < ex.first) return std::strong_ordering::greater;
    w /= 1024;
  }
}

std::vector<BigInt> divisors_of(const BigInt& n0) {
  BigInt n = abs(n0);
  std::vector<BigInt> small, large;
  if (n == 0) return {};
  if (n > BigInt("1000000000000")) return {BigInt(1), n};
  unsigned long v = n.get_ui();
  for (unsigned long i = 1; i * i <= v; ++i) {
    if (v % i == 0) {
      small.emplace_back(i);
      if (i != v / i) large.emplace_back(v / i);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Aberth iteration on the squarefree polynomial q.
std::optional<std::vector<LComplex>> complex_roots(const IntPoly& q) {
  const int n = q.degree();
  if (n < 1) return std::vector<LComplex>{};
  std::vector<long double> c(n + 1);
  long double lc = q.leading().get_d();
  for (int i = 0; i <= n; ++i) c[i] = static_cast<long double>(q.coeff(i).get_d()) / lc;
  long double radius = 0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::pow(std::fabs(c[i]), 1.0L / (n - i)));
  radius = std::max(radius * 2, 1.0L);
  std::vector<LComplex> z(n);
  const long double pi = std::acos(-1.0L);
  for (int k = 0; k < n; ++k) z[k] = std::polar(radius, 2 * pi * k / n + 0.4L);
  for (int iter = 0; iter < 2000; ++iter) {
    long double change = 0;
    for (int k = 0; k < n; ++k) {
      LComplex p = c[n], dp = 0;
      for (int i = n - 1; i >= 0; --i) {
        dp = dp * z[k] + p;
        p = p * z[k] + c[i];
      }
      if (std::abs(p) == 0) continue;
      LComplex ratio = p / dp;
      LComplex sum = 0;
      for (int j = 0; j < n; ++j) {
        if (j != k) sum += 1.0L / (z[k] - z[j]);
      }
      LComplex w = ratio / (1.0L - ratio * sum);
      z[k] -= w;
      change = std::max(change, std::abs(w) / (1 + std::abs(z[k])));
    }
    if (change < 1e-17L) return z;
  }
  return std::nullopt;
}

bool near_integer(long double v, BigInt& out) {
  long double r = std::nearbyint(v);
  if (std::fabs(v - r) > 1e-6L * std::max(1.0L, std::fabs(v))) return false;
  if (std::fabs(r) > 1e18L) return false;
  out = BigInt(static_cast<long>(r));
  return true;
}

std::optional<IntPoly> round_factor(const std::vector<LComplex>& roots, const std::vector<BigInt>& scales) {
  std::vector<LComplex> poly{1};
  for (const auto& r : roots) {
    std::vector<LComplex> next(poly.size() + 1);
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * r;
    }
    poly.swap(next);
  }
  for (const auto& a : scales) {
    long double ad = a.get_d();
    std::vector<BigInt> coeffs(poly.size());
    bool ok = true;
    for (size_t i = 0; i < poly.size() && ok; ++i) {
      if (std::fabs(poly[i].imag()) * ad > 1e-6L * std::max(1.0L, std::abs(poly[i]) * ad)) ok = false;
      if (ok) ok = near_integer(poly[i].real() * ad, coeffs[i]);
    }
    if (ok) return IntPoly(std::move(coeffs));
  }
  return std::nullopt;
}

// Splits a squarefree q into factors over Q. Every factor is verified exactly;
// factors the numeric search cannot split further are returned whole.
std::vector<IntPoly> factor_squarefree_raw(const IntPoly& q0) {
  std::vector<IntPoly> out;
  IntPoly q = q0.primitive();
  if (q.degree() <= 2 || q.degree() > 48) return {q};
  auto rootsopt = complex_roots(q);
  if (!rootsopt) return {q};
  std::vector<LComplex> roots = *rootsopt;
  auto scales = divisors_of(q.leading());
  long budget = 3000000;
  while (q.degree() > 2 && budget > 0) {
    // units: real roots, or conjugate pairs
    std::vector<std::vector<int>> units;
    std::vector<bool> used(roots.size(), false);
    for (size_t i = 0; i < roots.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      long double tol = 1e-9L * (1 + std::abs(roots[i]));
      if (std::fabs(roots[i].imag()) <= tol) {
        units.push_back({static_cast<int>(i)});
        continue;
      }
      int best = -1;
      long double bd = 0;
      for (size_t j = 0; j < roots.size(); ++j) {
        if (used[j]) continue;
        long double dd = std::abs(roots[j] - std::conj(roots[i]));
        if (best < 0 || dd < bd) {
          best = static_cast<int>(j);
          bd = dd;
        }
      }
      if (best < 0) {
        out.push_back(q);
        return out;
      }
      used[best] = true;
      units.push_back({static_cast<int>(i), best});
    }
    const int n = q.degree();
    long double trace = 0;
    for (auto& r : roots) trace += r.real();
    std::optional<IntPoly> found;
    std::vector<int> chosen;
    // factor containing unit 0, by ascending degree; enumerate the smaller side
    for (int d = static_cast<int>(units[0].size()); d < n && !found && budget > 0; ++d) {
      bool with_first = (d - 1) <= (n - d);
      int target = with_first ? d - static_cast<int>(units[0].size()) : n - d;
      std::function<void(size_t, int, long double)> rec = [&](size_t start, int left, long double sum) {
        if (found || budget <= 0) return;
        if (left == 0) {
          --budget;
          long double s = with_first ? sum : trace - sum;
          bool plausible = false;
          for (const auto& a : scales) {
            BigInt tmp;
            if (near_integer(s * a.get_d(), tmp)) {
              plausible = true;
              break;
            }
          }
          if (!plausible) return;
          std::vector<LComplex> sel;
          if (with_first) {
            for (int i : units[0]) sel.push_back(roots[i]);
          }
          for (int u : chosen) {
            for (int i : units[u]) sel.push_back(roots[i]);
          }
          auto cand = round_factor(sel, scales);
          if (!cand) return;
          IntPoly f = cand->primitive(), cof;
          if (f.degree() <= 0 || !divide_exact(q, f, &cof)) return;
          found = with_first ? f : cof.primitive();
          return;
        }
        for (size_t u = start; u < units.size(); ++u) {
          int sz = static_cast<int>(units[u].size());
          if (sz > left) continue;
          chosen.push_back(static_cast<int>(u));
          long double add = 0;
          for (int i : units[u]) add += roots[i].real();
          rec(u + 1, left - sz, sum + add);
          chosen.pop_back();
          if (found || budget <= 0) return;
        }
      };
      if (with_first) {
        long double s0 = 0;
        for (int i : units[0]) s0 += roots[i].real();
        rec(1, target, s0);
      } else {
        rec(1, target, 0);
      }
    }
    if (!found || found->degree() == n) break;
    IntPoly cof;
    divide_exact(q, *found, &cof);
    // drop the roots of the found factor from the numeric list
    std::vector<LComplex> rest;
    {
      std::vector<bool> taken(roots.size(), false);
      for (size_t i = 0; i < roots.size(); ++i) {
        LComplex v = 0;
        for (int j = found->degree(); j >= 0; --j) v = v * roots[i] + static_cast<long double>(found->coeff(j).get_d());
        long double scale = 0;
        for (int j = 0; j <= found->degree(); ++j) scale += std::fabs(found->coeff(j).get_d()) * std::pow(std::abs(roots[i]) + 1, j);
        taken[i] = std::abs(v) <= 1e-9L * scale;
      }
      int cnt = 0;
      for (size_t i = 0; i < roots.size(); ++i) {
        if (taken[i]) ++cnt;
      }
      if (cnt != found->degree()) {
        out.push_back(*found);
        out.push_back(cof.primitive());
        return out;
      }
      for (size_t i = 0; i < roots.size(); ++i) {
        if (!taken[i]) rest.push_back(roots[i]);
      }
    }
    out.push_back(*found);
    q = cof.primitive();
    roots.swap(rest);
  }
  out.push_back(q);
  return out;
}

// splits a quadratic with a square discriminant into its linear factors
void push_split(const IntPoly& f, std::vector<IntPoly>& out) {
  if (f.degree() == 2) {
    const BigInt& a = f.coeff(2);
    BigInt b = f.coeff(1), c = f.coeff(0);
    BigInt disc = b * b - 4 * a * c;
    if (disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t())) {
      BigInt r = sqrt(disc);
      out.push_back(IntPoly::from_rational({make_rat(b + r, 2 * a), Rat(1)}));
      out.push_back(IntPoly::from_rational({make_rat(b - r, 2 * a), Rat(1)}));
      return;
    }
  }
  out.push_back(f);
}

std::vector<IntPoly> factor_squarefree(const IntPoly& q) {
  std::vector<IntPoly> out;
  for (const auto& f : factor_squarefree_raw(q)) push_split(f, out);
  return out;
}

// q squarefree, unique root in (lo, hi), q(lo) and q(hi) nonzero
Scalar demote(const IntPoly& q, Rat lo, Rat hi, const std::vector<IntPoly>* factors);

Scalar from_quadratic(const IntPoly& q, const Rat& lo, const Rat& hi, int slo) {
  const BigInt& a = q.coeff(2);
  const BigInt& b = q.coeff(1);
  const BigInt& c = q.coeff(0);
  BigInt disc = b * b - 4 * a * c;
  Rat centre = make_rat(-b, 2 * a);
  Iso iso{q, lo, hi, slo};
  bool upper = cmp_iso_rat(iso, centre) > 0;
  Rat dr(disc);
  if (!Surd::representable_sqrt(dr)) return Scalar::irreducible(AlgebraicReal(q, lo, hi));
  Surd root = Surd(centre) + Surd(make_rat(upper ? BigInt(1) : BigInt(-1), 2 * a)) * Surd::sqrt(dr);
  return Scalar(root);
}

Scalar demote(const IntPoly& q, Rat lo, Rat hi, const std::vector<IntPoly>* factors) {
  if (q.degree() == 1) return Scalar(make_rat(-q.coeff(0), q.coeff(1)));
  int slo = q.sign_at(lo);
  // a rational root has denominator dividing lc(q); such fractions are 1/lc^2 apart
  BigInt lc = abs(q.leading());
  if (mpz_sizeinbase(lc.get_mpz_t(), 2) < 4096) {
    Rat width(1, lc * lc);
    while (hi - lo >= width) {
      if (bisect_root(q, slo, lo, hi)) return Scalar(lo);
    }
    Rat r = simplest_between(lo, hi);
    if (q.sign_at(r) == 0) return Scalar(r);
  }
  if (q.degree() == 2) return from_quadratic(q, lo, hi, slo);
  std::vector<IntPoly> local;
  if (!factors) {
    local = factor_squarefree(q);
    factors = &local;
  }
  for (const auto& f : *factors) {
    if (f.degree() == q.degree()) break;
    if (f.sign_at(lo) == 0 || f.sign_at(hi) == 0) continue;
    if (sturm_count(f, lo, hi) == 1) return demote(f, lo, hi, nullptr);
  }
  return Scalar::irreducible(AlgebraicReal(q, lo, hi));
}

// Squarefree q, root unique in (lo, hi]; returns a tightened interval with q
// nonzero at both ends, or the exact root.
std::optional<Rat> tighten(const IntPoly& q, Rat& lo, Rat& hi) {
  if (q.sign_at(hi) == 0) return hi;
  if (q.sign_at(lo) == 0) {
    SturmSequence s(q);
    while (q.sign_at(lo) == 0) {
      Rat mid = (lo + hi) / 2;
      if (s.count(mid, hi) == 1) {
        lo = mid;
      } else {
        if (q.sign_at(mid) == 0) return mid;
        hi = mid;
      }
    }
  }
  return std::nullopt;
}

Surd surd_of(const Scalar& s) { return s.surd(); }

}  // namespace

// ---------------------------------------------------------------- Surd

Surd::Surd(const Rat& a) : a_(a) {}

Surd::Surd(const Rat& a, const Rat& b, unsigned long d) : a_(a), b_(b), d_(d) {
  if (b_ == 0 || d_ == 0) {
    b_ = 0;
    d_ = 0;
    return;
  }
  BigInt m;
  unsigned long k;
  if (!split_square(BigInt(d), m, k)) throw std::domain_error("radicand out of supported range");
  b_ *= m;
  d_ = k;
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
    d_ = 0;
  }
}

bool Surd::representable_sqrt(const Rat& r) {
  if (r < 0) return false;
  BigInt m;
  unsigned long d;
  return split_square(r.get_num() * r.get_den(), m, d);
}

Surd Surd::sqrt(const Rat& r) {
  if (r < 0) throw std::domain_error("square root of a negative number");
  BigInt m;
  unsigned long d;
  if (!split_square(r.get_num() * r.get_den(), m, d)) {
    throw std::domain_error("radicand of sqrt(" + r.get_str() + ") exceeds the supported range");
  }
  if (d <= 1) return Surd(make_rat(m * d, r.get_den()));
  return Surd(Rat(0), make_rat(m, r.get_den()), d);
}

int Surd::sign() const {
  int s = sgn(a_);
  int t = sgn(b_);
  if (t == 0) return s;
  if (s == 0 || s == t) return t;
  Rat lhs = a_ * a_;
  Rat rhs = b_ * b_ * d_;
  if (lhs > rhs) return s;
  if (lhs < rhs) return t;
  return 0;
}

IntPoly Surd::minimal_polynomial() const {
  if (is_rational()) return IntPoly::from_rational({-a_, Rat(1)});
  return IntPoly::from_rational({norm(), -2 * a_, Rat(1)});
}

std::pair<Rat, Rat> Surd::enclosure(const Rat& w) const {
  if (is_rational()) return {a_, a_};
  BigInt scale = 1;
  Rat ab = abs(b_);
  while (ab / scale > w) scale *= 2;
  BigInt r;
  BigInt arg = BigInt(d_) * scale * scale;
  mpz_sqrt(r.get_mpz_t(), arg.get_mpz_t());
  Rat s_lo = make_rat(r, scale);
  Rat s_hi = make_rat(r + 1, scale);
  Rat v1 = a_ + b_ * s_lo;
  Rat v2 = a_ + b_ * s_hi;
  if (v1 <= v2) return {v1, v2};
  return {v2, v1};
}

double Surd::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_)); }

std::string Surd::to_string() const {
  if (is_rational()) return rat_string(a_);
  std::string root = "sqrt(" + std::to_string(d_) + ")";
  Rat mag = abs(b_);
  std::string term = mag == 1 ? root : rat_string(mag) + "*" + root;
  if (a_ == 0) return (b_ < 0 ? "-" : "") + term;
  return rat_string(a_) + (b_ < 0 ? "-" : "+") + term;
}

Surd operator+(const Surd& x, const Surd& y) {
  unsigned long d;
  unify(x, y, d);
  return Surd(x.a_ + y.a_, x.b_ + y.b_, d);
}

Surd operator-(const Surd& x, const Surd& y) {
  unsigned long d;
  unify(x, y, d);
  return Surd(x.a_ - y.a_, x.b_ - y.b_, d);
}

Surd operator*(const Surd& x, const Surd& y) {
  unsigned long d;
  unify(x, y, d);
  return Surd(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
}

Surd operator/(const Surd& x, const Surd& y) {
  unsigned long d;
  unify(x, y, d);
  Rat n = y.norm();
  if (n == 0) throw std::domain_error("division by zero");
  Surd num = x * y.conjugate();
  return Surd(num.a_ / n, num.b_ / n, num.d_);
}

// ---------------------------------------------------------------- AlgebraicReal

AlgebraicReal::AlgebraicReal(IntPoly p, Rat lo, Rat hi) {
  p_ = squarefree_part(p);
  lo_ = std::move(lo);
  hi_ = std::move(hi);
  if (!(lo_ < hi_)) throw std::invalid_argument("isolating interval is empty");
  sign_lo_ = p_.sign_at(lo_);
  if (sign_lo_ == 0 || p_.sign_at(hi_) == 0) throw std::invalid_argument("isolating interval endpoint is a root");
  if (sturm_count(p_, lo_, hi_) != 1) throw std::invalid_argument("interval does not isolate a single root");
}

AlgebraicReal AlgebraicReal::bisected() const {
  Rat lo = lo_, hi = hi_;
  if (bisect_root(p_, sign_lo_, lo, hi)) throw std::logic_error("rational root inside algebraic interval");
  return AlgebraicReal(Trusted{}, p_, lo, hi, sign_lo_);
}

AlgebraicReal AlgebraicReal::refined(const Rat& width) const {
  Rat lo = lo_, hi = hi_;
  while (hi - lo > width) {
    if (bisect_root(p_, sign_lo_, lo, hi)) throw std::logic_error("rational root inside algebraic interval");
  }
  return AlgebraicReal(Trusted{}, p_, lo, hi, sign_lo_);
}

double AlgebraicReal::approx() const {
  Rat w = abs(lo_) + 1;
  w /= BigInt(1) << 60;
  AlgebraicReal r = refined(w);
  return Rat((r.lo_ + r.hi_) / 2).get_d();
}

std::string decimal_string(const Rat& r, int digits, bool round_up) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Rat s = r * scale;
  BigInt v = round_up ? ceil_rat(s) : floor_rat(s);
  bool neg = v < 0;
  std::string body = BigInt(abs(v)).get_str();
  if (digits > 0) {
    if (static_cast<int>(body.size()) <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
    while (body.back() == '0') body.pop_back();
    if (body.back() == '.') body.pop_back();
  }
  return (neg ? "-" : "") + body;
}

std::string AlgebraicReal::to_string() const {
  for (int digits = 6;; digits += 2) {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    AlgebraicReal r = refined(Rat(1, scale * 4));
    Rat dl = make_rat(floor_rat(r.lo_ * scale), scale);
    Rat dh = make_rat(ceil_rat(r.hi_ * scale), scale);
    if (p_.sign_at(dl) == 0 || p_.sign_at(dh) == 0) continue;
    if (sturm_count(p_, dl, dh) != 1) continue;
    return "root(" + p_.to_string() + ", [" + decimal_string(dl, digits, false) + "," +
           decimal_string(dh, digits, true) + "])";
  }
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(const Surd& s) {
  if (s.is_rational()) {
    v_ = s.a();
  } else {
    v_ = s;
  }
}

Scalar::Scalar(const AlgebraicReal& a) : v_(Rat(0)) { *this = demote(a.poly(), a.lo(), a.hi(), nullptr); }

Scalar Scalar::irreducible(const AlgebraicReal& a) {
  Scalar s;
  s.v_ = a;
  return s;
}

Scalar Scalar::sqrt(const Rat& r) {
  if (r < 0) throw std::domain_error("square root of a negative number");
  if (Surd::representable_sqrt(r)) return Scalar(Surd::sqrt(r));
  IntPoly q = IntPoly::from_rational({-r, Rat(0), Rat(1)});
  Rat b = root_bound(q);
  return root_of(q, Rat(0), b);
}

Scalar Scalar::root_of(const IntPoly& p, const Rat& lo0, const Rat& hi0) {
  if (p.is_zero()) throw std::domain_error("undefined root count");
  IntPoly q = squarefree_part(p);
  Rat lo = lo0, hi = hi0;
  if (!(lo < hi) || sturm_count(q, lo, hi) != 1) {
    throw std::invalid_argument("interval does not isolate a single root of " + p.to_string());
  }
  if (auto exact = tighten(q, lo, hi)) return Scalar(*exact);
  return demote(q, lo, hi, nullptr);
}

const Rat& Scalar::rational() const {
  if (!is_rational()) throw std::domain_error("value is not rational: " + to_string());
  return std::get<Rat>(v_);
}

Surd Scalar::surd() const {
  if (kind() == Kind::rational) return Surd(std::get<Rat>(v_));
  if (kind() == Kind::quadratic) return std::get<Surd>(v_);
  throw std::domain_error("value is not quadratic: " + to_string());
}

const AlgebraicReal& Scalar::algebraic() const {
  if (kind() != Kind::algebraic) throw std::domain_error("value is not an algebraic interval");
  return std::get<AlgebraicReal>(v_);
}

IntPoly Scalar::defining_polynomial() const {
  switch (kind()) {
    case Kind::rational:
      return Surd(rational()).minimal_polynomial();
    case Kind::quadratic:
      return std::get<Surd>(v_).minimal_polynomial();
    default:
      return std::get<AlgebraicReal>(v_).poly();
  }
}

std::pair<Rat, Rat> Scalar::enclosure(const Rat& width) const {
  switch (kind()) {
    case Kind::rational:
      return {rational(), rational()};
    case Kind::quadratic:
      return std::get<Surd>(v_).enclosure(width);
    default: {
      AlgebraicReal r = std::get<AlgebraicReal>(v_).refined(width);
      return {r.lo(), r.hi()};
    }
  }
}

double Scalar::to_double() const {
  switch (kind()) {
    case Kind::rational:
      return rational().get_d();
    case Kind::quadratic:
      return std::get<Surd>(v_).to_double();
    default:
      return std::get<AlgebraicReal>(v_).approx();
  }
}

std::string Scalar::to_string() const {
  switch (kind()) {
    case Kind::rational:
      return rat_string(rational());
    case Kind::quadratic:
      return std::get<Surd>(v_).to_string();
    default:
      return std::get<AlgebraicReal>(v_).to_string();
  }
}

Scalar Scalar::operator-() const {
  if (kind() != Kind::algebraic) return Scalar(-surd());
  const AlgebraicReal& a = algebraic();
  IntPoly r = reflect(a.poly()).primitive();
  return Scalar::irreducible(AlgebraicReal(AlgebraicReal::Trusted{}, r, -a.hi(), -a.lo(), r.sign_at(-a.hi())));
}

Scalar operator+(const Scalar& x, const Scalar& y) { return Scalar(surd_of(x) + surd_of(y)); }
Scalar operator-(const Scalar& x, const Scalar& y) { return Scalar(surd_of(x) - surd_of(y)); }
Scalar operator*(const Scalar& x, const Scalar& y) { return Scalar(surd_of(x) * surd_of(y)); }
Scalar operator/(const Scalar& x, const Scalar& y) { return Scalar(surd_of(x) / surd_of(y)); }

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
  using K = Scalar::Kind;
  const K kx = x.kind(), ky = y.kind();
  if (kx == K::rational && ky == K::rational) return from_sign(sgn(x.rational() - y.rational()));
  if (kx != K::algebraic && ky != K::algebraic) return cmp_surd_surd(x.surd(), y.surd());
  if (kx == K::algebraic && ky == K::algebraic) return cmp_iso_iso(iso_of(x.algebraic()), iso_of(y.algebraic()));
  if (kx == K::algebraic) return cmp_iso_surd(iso_of(x.algebraic()), y.surd());
  return reverse(cmp_iso_surd(iso_of(y.algebraic()), x.surd()));
}

std::strong_ordering compare(const Scalar& x, const Scalar& y) { return x <=> y; }

int sign_at(const IntPoly& p, const Scalar& x) {
  switch (x.kind()) {
    case Scalar::Kind::rational:
      return p.sign_at(x.rational());
    case Scalar::Kind::quadratic:
      return eval_surd(p, x.surd()).sign();
    default:
      break;
  }
  if (p.is_zero()) return 0;
  const AlgebraicReal& a = x.algebraic();
  IntPoly g = gcd(p, a.poly());
  if (g.degree() >= 1 && sturm_count(g, a.lo(), a.hi()) >= 1) return 0;
  SturmSequence s(p);
  Rat lo = a.lo(), hi = a.hi();
  while (s.count(lo, hi) != 0) bisect_root(a.poly(), a.sign_lo(), lo, hi);
  return p.sign_at(hi);
}

Scalar eval(const IntPoly& p, const Scalar& x) {
  if (x.kind() == Scalar::Kind::algebraic) throw std::domain_error("exact evaluation at an algebraic point; use eval_interval");
  return Scalar(eval_surd(p, x.surd()));
}

SignedInterval eval_interval(const IntPoly& p, const Scalar& x, const Rat& width) {
  int s = sign_at(p, x);
  Rat w = width;
  for (;;) {
    auto [l, h] = x.enclosure(w);
    Rat lo = 0, hi = 0;
    for (int i = p.degree(); i >= 0; --i) {
      Rat c1 = lo * l, c2 = lo * h, c3 = hi * l, c4 = hi * h;
      Rat mn = std::min({c1, c2, c3, c4});
      Rat mx = std::max({c1, c2, c3, c4});
      lo = mn + p.coeff(i);
      hi = mx + p.coeff(i);
    }
    bool sign_ok = (s > 0 && lo > 0) || (s < 0 && hi < 0) || s == 0;
    if (hi - lo <= width && sign_ok) return {lo, hi, s};
    w /= 16;
  }
}

int count_roots_above(const IntPoly& p, const Scalar& theta) {
  if (p.is_zero()) throw std::domain_error("undefined root count");
  IntPoly q = squarefree_part(p);
  int count = 0;
  for (const auto& r : isolate_real_roots(q)) {
    Iso iso{q, r.lo, r.hi, r.exact() ? 0 : q.sign_at(r.lo)};
    std::strong_ordering o = std::strong_ordering::equal;
    switch (theta.kind()) {
      case Scalar::Kind::rational:
        o = cmp_iso_rat(iso, theta.rational());
        break;
      case Scalar::Kind::quadratic:
        o = cmp_iso_surd(iso, theta.surd());
        break;
      default:
        o = cmp_iso_iso(iso, iso_of(theta.algebraic()));
        break;
    }
    if (o > 0) ++count;
  }
  return count;
}

int count_roots_between(const IntPoly& p, const Scalar& lo, const Scalar& hi) {
  if (!(lo < hi)) return 0;
  return count_roots_above(p, lo) - count_roots_above(p, hi);
}

std::vector<Scalar> real_roots(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("undefined root count");
  IntPoly q = squarefree_part(p);
  std::vector<Scalar> out;
  auto isolated = isolate_real_roots(q);
  if (isolated.empty()) return out;
  std::optional<std::vector<IntPoly>> factors;
  for (const auto& r : isolated) {
    if (r.exact()) {
      out.emplace_back(r.lo);
      continue;
    }
    if (!factors && q.degree() > 2) factors = factor_squarefree(q);
    out.push_back(demote(q, r.lo, r.hi, factors ? &*factors : nullptr));
  }
  return out;
}

Scalar largest_real_root(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("undefined root count");
  IntPoly q = squarefree_part(p);
  auto isolated = isolate_real_roots(q);
  if (isolated.empty()) throw std::domain_error("polynomial " + p.to_string() + " has no real root");
  const auto& r = isolated.back();
  if (r.exact()) return Scalar(r.lo);
  return demote(q, r.lo, r.hi, nullptr);
}

Scalar smallest_real_root(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("undefined root count");
  IntPoly q = squarefree_part(p);
  auto isolated = isolate_real_roots(q);
  if (isolated.empty()) throw std::domain_error("polynomial " + p.to_string() + " has no real root");
  const auto& r = isolated.front();
  if (r.exact()) return Scalar(r.lo);
  return demote(q, r.lo, r.hi, nullptr);
}

std::vector<std::pair<IntPoly, int>> factor_rational(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  std::vector<std::pair<IntPoly, int>> out;
  for (const auto& [a, m] : squarefree_factorization(p)) {
    for (auto& f : factor_squarefree(a)) out.emplace_back(f.primitive(), m);
  }
  auto key = [](const IntPoly& f) -> std::optional<Scalar> {
    if (isolate_real_roots(f).empty()) return std::nullopt;
    return largest_real_root(f);
  };
  std::vector<std::pair<std::optional<Scalar>, size_t>> keys;
  for (size_t i = 0; i < out.size(); ++i) keys.emplace_back(key(out[i].first), i);
  std::stable_sort(keys.begin(), keys.end(), [](const auto& x, const auto& y) {
    if (!x.first || !y.first) return x.first.has_value() && !y.first.has_value();
    return *x.first > *y.first;
  });
  std::vector<std::pair<IntPoly, int>> sorted;
  for (auto& kv : keys) sorted.push_back(out[kv.second]);
  return sorted;
}

std::string factored_string(const std::vector<std::pair<IntPoly, int>>& factors) {
  std::string s;
  for (const auto& [f, m] : factors) {
    s += "(" + f.to_string() + ")";
    if (m > 1) s += "^" + std::to_string(m);
  }
  return s.empty() ? "1" : s;
}

}  // namespace spectral
