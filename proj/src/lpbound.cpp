#include "spectral/lpbound.hpp"

#include <stdexcept>

#include "spectral/orthopoly.hpp"
#include "spectral/roots.hpp"

namespace spectral {

namespace {

void check_params(const TridiagParams& p) {
  if (p.k < 2) throw std::domain_error("valency must be at least 2");
  if (p.t < 2) throw std::domain_error("t must be at least 2");
  if (p.c <= Scalar(0)) throw std::domain_error("c must be positive");
  if (!p.c.is_quadratic_or_rational()) throw std::domain_error("c must be rational or quadratic");
}

BigInt ipow(long b, int e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(e));
  return r;
}

Rat rat_floor(const Rat& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rat(q);
}

// value of F_{t-1} + c G_{t-2} at a rational point, c quadratic
int h_sign(const IntPoly& f, const IntPoly& g, const Surd& c, const Rat& x) {
  return (Surd(f.eval(x)) + c * Surd(g.eval(x))).sign();
}

// rational strictly inside (a, b)
Rat rational_between(const Scalar& a, const Scalar& b) {
  Rat w(1, 4);
  for (;;) {
    auto ea = a.enclosure(w);
    auto eb = b.enclosure(w);
    if (ea.second < eb.first) return (ea.second + eb.first) / 2;
    w /= 16;
  }
}

}  // namespace

BigInt floor_of(const Scalar& x) {
  if (x.is_rational()) return rat_floor(x.rational()).get_num();
  Rat w(1, 8);
  for (;;) {
    auto [lo, hi] = x.enclosure(w);
    Rat a = rat_floor(lo), b = rat_floor(hi);
    if (a == b && hi != b + 1) return a.get_num();
    w /= 256;
  }
}

std::vector<std::vector<Scalar>> tridiag_matrix(const TridiagParams& p) {
  check_params(p);
  const int t = p.t;
  std::vector<std::vector<Scalar>> m(t, std::vector<Scalar>(t, Scalar(0)));
  for (int i = 0; i < t; ++i) {
    Scalar sub = 0, sup = 0;
    if (i > 0) sub = i == t - 1 ? p.c : Scalar(1);
    if (i < t - 1) sup = i == 0 ? Scalar(p.k) : Scalar(p.k - 1);
    if (i > 0) m[i][i - 1] = sub;
    if (i < t - 1) m[i][i + 1] = sup;
    m[i][i] = Scalar(p.k) - sub - sup;
  }
  return m;
}

Scalar tridiag_second_eig(const TridiagParams& p) {
  check_params(p);
  const int k = p.k, t = p.t;
  if (t == 2) return -p.c;
  if (p.c.is_rational()) {
    const Rat& c = p.c.rational();
    IntPoly h = G(k, t - 1) * BigInt(c.get_den()) + G(k, t - 2) * BigInt(c.get_num() - c.get_den());
    return largest_real_root(h);
  }
  // quadratic c: the zero is the unique solution of c = -F_{t-1}/G_{t-2}
  // above the largest zero of G_{t-2}
  const Surd c = p.c.surd();
  IntPoly f = F(k, t - 1), g = G(k, t - 2);
  Scalar low = lambda_top(k, t - 2);
  Rat w(1, 4);
  Rat a;
  for (;;) {
    a = low.enclosure(w).second;
    if (h_sign(f, g, c, a) < 0) break;
    w /= 16;
  }
  Rat b(k + 1);
  std::vector<Rat> hr;
  const int deg = t - 1;
  hr.resize(deg + 1);
  for (int i = 0; i <= deg; ++i) hr[i] = Rat(f.coeff(i)) + c.a() * Rat(g.coeff(i));
  // N = (f + a g)^2 - b^2 d g^2
  std::vector<Rat> norm(2 * deg + 1);
  Rat bd = c.b() * c.b() * c.d();
  for (int i = 0; i <= deg; ++i) {
    for (int j = 0; j <= deg; ++j) {
      norm[i + j] += hr[i] * hr[j] - bd * Rat(g.coeff(i)) * Rat(g.coeff(j));
    }
  }
  IntPoly n = IntPoly::from_rational(norm);
  IntPoly q = squarefree_part(n);
  while (sturm_count(q, a, b) != 1 || q.sign_at(b) == 0 || q.sign_at(a) == 0) {
    Rat mid = (a + b) / 2;
    int s = h_sign(f, g, c, mid);
    if (s == 0) return Scalar(mid);
    if (s < 0) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return Scalar::root_of(q, a, b);
}

Scalar M(const TridiagParams& p) {
  check_params(p);
  const int k = p.k, t = p.t;
  BigInt s = 1;
  for (int i = 0; i <= t - 3; ++i) s += BigInt(k) * ipow(k - 1, i);
  Scalar last = Scalar(Rat(BigInt(k) * ipow(k - 1, t - 2))) / p.c;
  return Scalar(Rat(s)) + last;
}

Scalar c_for_lambda(int k, int t, const Scalar& lambda) {
  if (k < 2) throw std::domain_error("valency must be at least 2");
  if (t < 2) throw std::domain_error("t must be at least 2");
  if (!lambda.is_quadratic_or_rational()) throw std::domain_error("c_for_lambda needs a rational or quadratic lambda");
  bool ok = lambda < mu_top(k, t - 1);
  if (ok && t >= 3) ok = lambda_top(k, t - 2) < lambda;
  if (!ok) throw std::domain_error("no positive c: lambda outside (lambda^(t-2), mu^(t-1))");
  Scalar fv = eval(F(k, t - 1), lambda);
  Scalar gv = eval(G(k, t - 2), lambda);
  return -(fv / gv);
}

BoundCertificate bound_for_lambda(int k, const Scalar& lambda) {
  if (k < 2) throw std::domain_error("valency must be at least 2");
  if (lambda < Scalar(-1)) throw std::domain_error("lambda below -1: no connected regular graph");
  if (lambda >= Scalar(Surd(0, 2, k - 1))) throw std::domain_error("no finite bound (Ramanujan regime)");
  int t = 2;
  while (!(lambda <= lambda_top(k, t - 1))) ++t;
  BoundCertificate cert;
  cert.params = TridiagParams{k, t, c_for_lambda(k, t, lambda)};
  cert.lambda2 = tridiag_second_eig(cert.params);
  cert.M = M(cert.params);
  cert.v_ub = floor_of(cert.M);
  if (k % 2 == 1 && cert.v_ub % 2 != 0) {
    cert.v_ub -= 1;
    cert.parity_applied = true;
  }
  return cert;
}

std::vector<Rat> to_f_basis(int k, const std::vector<Rat>& p0) {
  std::vector<Rat> p = p0;
  while (!p.empty() && p.back() == 0) p.pop_back();
  std::vector<Rat> out(p.size());
  for (int d = static_cast<int>(p.size()) - 1; d >= 0; --d) {
    Rat c = p[d];
    if (c == 0) continue;
    out[d] = c;
    IntPoly fd = F(k, d);
    for (int i = 0; i <= d; ++i) p[i] -= c * Rat(fd.coeff(i));
  }
  return out;
}

std::vector<Rat> to_f_basis(int k, const IntPoly& p) {
  std::vector<Rat> r;
  for (const auto& c : p.coeffs()) r.emplace_back(c);
  return to_f_basis(k, r);
}

Rat lp_certificate_check(const LPPolynomial& lp, const Scalar& lambda) {
  const int k = lp.k;
  if (k < 2) throw std::domain_error("valency must be at least 2");
  if (lp.f.empty() || lp.f[0] <= 0) throw std::domain_error("certificate violates f_0 > 0");
  for (size_t i = 1; i < lp.f.size(); ++i) {
    if (lp.f[i] < 0) throw std::domain_error("certificate violates f_" + std::to_string(i) + " >= 0");
  }
  std::vector<Rat> coeffs(lp.f.size());
  for (size_t i = 0; i < lp.f.size(); ++i) {
    IntPoly fi = F(k, static_cast<int>(i));
    for (int j = 0; j <= fi.degree(); ++j) coeffs[j] += lp.f[i] * Rat(fi.coeff(j));
  }
  IntPoly p = IntPoly::from_rational(coeffs);
  // from_rational scales by a positive factor, so signs are preserved
  Rat fk = 0;
  {
    Rat xk(k), pw(1);
    for (const auto& c : coeffs) {
      fk += c * pw;
      pw *= xk;
    }
  }
  if (fk <= 0) throw std::domain_error("certificate violates f(k) > 0");
  const Scalar lo(-k);
  if (lambda < lo) throw std::domain_error("lambda below -k");
  if (p.degree() >= 1) {
    std::vector<Scalar> pts{lo};
    for (const auto& r : real_roots(p)) {
      if (r > lo && r < lambda) pts.push_back(r);
    }
    pts.push_back(lambda);
    bool bad = sign_at(p, lo) > 0 || sign_at(p, lambda) > 0;
    for (size_t i = 0; i + 1 < pts.size() && !bad; ++i) {
      if (!(pts[i] < pts[i + 1])) continue;
      Rat mid = rational_between(pts[i], pts[i + 1]);
      if (p.sign_at(mid) > 0) bad = true;
    }
    if (bad) throw std::domain_error("certificate violates f <= 0 on [-k, lambda]");
  } else if (!p.is_zero() && sgn(p.leading()) > 0) {
    throw std::domain_error("certificate violates f <= 0 on [-k, lambda]");
  }
  return fk / lp.f[0];
}

BigInt moore_lower(int k, int g) {
  if (k < 2 || g < 3) throw std::domain_error("moore_lower needs k >= 2, g >= 3");
  BigInt s = 0;
  if (g % 2 == 1) {
    for (int i = 0; i <= (g - 3) / 2; ++i) s += ipow(k - 1, i);
    return 1 + BigInt(k) * s;
  }
  for (int i = 0; i <= g / 2 - 1; ++i) s += ipow(k - 1, i);
  return 2 * s;
}

AlonBoppana alon_boppana_min_t(int k, const Scalar& lambda) {
  if (k < 2) throw std::domain_error("valency must be at least 2");
  if (lambda >= Scalar(Surd(0, 2, k - 1))) throw std::domain_error("no finite bound (Ramanujan regime)");
  int t = 2;
  while (!(lambda_top(k, t - 1) > lambda)) ++t;
  BigInt b = 1;
  for (int i = 0; i <= t - 2; ++i) b += BigInt(k) * ipow(k - 1, i);
  return {t, b};
}

ExtendedRange extended_range(const TridiagParams& p, Threshold threshold) {
  check_params(p);
  if (!p.c.is_rational()) throw std::domain_error("extended range needs a rational c");
  const int k = p.k, t = p.t;
  const Rat c = p.c.rational();
  ExtendedRange out;
  out.base = p;
  out.threshold = threshold;
  std::vector<Rat> coeffs;
  auto combine = [&](const IntPoly& lo, const IntPoly& hi) {
    std::vector<Rat> v(hi.degree() + 1);
    for (int i = 0; i <= hi.degree(); ++i) v[i] = Rat(hi.coeff(i)) + (out.threshold_c - 1) * Rat(lo.coeff(i));
    return v;
  };
  if (c == 1) {
    Rat a(BigInt(k) * ipow(k - 1, t - 1));
    out.threshold_c = threshold == Threshold::parity ? Rat(a / 2) : a;
    coeffs = combine(G(k, t - 1), G(k, t));
  } else if (c > 1) {
    Rat b(BigInt(k) * ipow(k - 1, t - 2));
    out.threshold_c = threshold == Threshold::parity ? Rat(c - 2 * c * c / (b + 2 * c)) : Rat(c - c * c / (b + c));
    coeffs = combine(G(k, t - 2), G(k, t - 1));
  } else {
    throw std::domain_error("extended range is defined for c >= 1");
  }
  out.threshold_c.canonicalize();
  if (out.threshold_c <= 0) throw std::domain_error("threshold c* is not positive");
  out.f = IntPoly::from_rational(coeffs);
  out.lambda_prime = largest_real_root(out.f);
  return out;
}

ExtendedRange extended_range(const TridiagParams& p, bool M_parity_even, bool k_odd) {
  return extended_range(p, M_parity_even && k_odd ? Threshold::parity : Threshold::plain);
}

}  // namespace spectral
