#include "spectral/int_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace spectral {

int sign(const BigInt& v) { return sgn(v); }
int sign(const Rat& v) { return sgn(v); }

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(int degree, const BigInt& c) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::from_rational(const std::vector<Rat>& coeffs) {
  BigInt l = 1;
  for (const auto& r : coeffs) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den_mpz_t());
  }
  std::vector<BigInt> v;
  v.reserve(coeffs.size());
  for (const auto& r : coeffs) v.push_back(r.get_num() * (l / r.get_den()));
  return IntPoly(std::move(v)).primitive();
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[i];
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(r));
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigInt> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(r));
}

IntPoly IntPoly::shift_up(int k) const {
  if (is_zero()) return {};
  std::vector<BigInt> r(k, 0);
  r.insert(r.end(), c_.begin(), c_.end());
  return IntPoly(std::move(r));
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (leading() < 0) g = -g;
  IntPoly r = *this;
  if (g != 1) {
    for (auto& c : r.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return r;
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt h = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) h = h * x + *it;
  return h;
}

namespace {

// den^deg * p(num/den)
BigInt homogeneous_value(const std::vector<BigInt>& c, const BigInt& num, const BigInt& den) {
  if (c.empty()) return 0;
  const int n = static_cast<int>(c.size()) - 1;
  BigInt h = c[n];
  BigInt dpow = den;
  for (int i = n - 1; i >= 0; --i) {
    h *= num;
    mpz_addmul(h.get_mpz_t(), c[i].get_mpz_t(), dpow.get_mpz_t());
    if (i > 0) dpow *= den;
  }
  return h;
}

}  // namespace

Rat IntPoly::eval(const Rat& x) const {
  if (x.get_den() == 1) return Rat(eval(x.get_num()));
  BigInt h = homogeneous_value(c_, x.get_num(), x.get_den());
  BigInt d;
  mpz_pow_ui(d.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(std::max(degree(), 0)));
  Rat r(h, d);
  r.canonicalize();
  return r;
}

int IntPoly::sign_at(const Rat& x) const {
  if (x.get_den() == 1) return sgn(eval(x.get_num()));
  return sgn(homogeneous_value(c_, x.get_num(), x.get_den()));
}

int IntPoly::sign_at_pos_inf() const { return is_zero() ? 0 : sgn(leading()); }

int IntPoly::sign_at_neg_inf() const {
  if (is_zero()) return 0;
  int s = sgn(leading());
  return degree() % 2 == 0 ? s : -s;
}

double IntPoly::eval_double(double x) const {
  double h = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) h = h * x + it->get_d();
  return h;
}

std::string IntPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = c_[i];
    if (c == 0) continue;
    BigInt a = abs(c);
    if (c < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (i == 0 || a != 1) out += a.get_str();
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-division by zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const BigInt& lb = b.leading();
  for (int d = a.degree(); d >= db; --d) {
    BigInt q = r[d];
    for (int i = 0; i < d; ++i) r[i] *= lb;
    if (q == 0) continue;
    for (int j = 0; j < db; ++j) mpz_submul(r[d - db + j].get_mpz_t(), q.get_mpz_t(), bc[j].get_mpz_t());
    r[d] = 0;
  }
  r.resize(db);
  return IntPoly(std::move(r));
}

bool divide_exact(const IntPoly& a, const IntPoly& d, IntPoly* quotient) {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) {
    if (quotient) *quotient = IntPoly();
    return true;
  }
  if (a.degree() < d.degree()) return false;
  std::vector<BigInt> r = a.coeffs();
  const auto& dc = d.coeffs();
  const int dd = d.degree();
  std::vector<BigInt> q(a.degree() - dd + 1);
  BigInt rem;
  for (int i = a.degree(); i >= dd; --i) {
    if (r[i] == 0) continue;
    mpz_fdiv_qr(q[i - dd].get_mpz_t(), rem.get_mpz_t(), r[i].get_mpz_t(), d.leading().get_mpz_t());
    if (rem != 0) return false;
    for (int j = 0; j <= dd; ++j) mpz_submul(r[i - dd + j].get_mpz_t(), q[i - dd].get_mpz_t(), dc[j].get_mpz_t());
  }
  for (int i = 0; i < dd; ++i) {
    if (r[i] != 0) return false;
  }
  if (quotient) *quotient = IntPoly(std::move(q));
  return true;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  IntPoly u = a.primitive();
  IntPoly v = b.primitive();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    if (v.degree() == 0) return IntPoly{1};
    IntPoly r = pseudo_remainder(u, v).primitive();
    u = std::move(v);
    v = std::move(r);
  }
  return u.primitive();
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() <= 1) return p.primitive();
  IntPoly g = gcd(p, p.derivative());
  IntPoly q;
  if (!divide_exact(p.primitive(), g, &q)) throw std::logic_error("squarefree_part: inexact division");
  return q.primitive();
}

std::vector<std::pair<IntPoly, int>> squarefree_factorization(const IntPoly& p) {
  std::vector<std::pair<IntPoly, int>> out;
  if (p.degree() <= 0) return out;
  IntPoly f = p.primitive();
  IntPoly fp = f.derivative();
  IntPoly a = gcd(f, fp);
  IntPoly b, c;
  divide_exact(f, a, &b);
  divide_exact(fp, a, &c);
  int i = 1;
  while (b.degree() > 0) {
    IntPoly d = c - b.derivative();
    IntPoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    IntPoly nb, nc;
    divide_exact(b, g, &nb);
    divide_exact(d, g, &nc);
    b = std::move(nb);
    c = std::move(nc);
    ++i;
  }
  return out;
}

IntPoly reflect(const IntPoly& p) {
  std::vector<BigInt> c = p.coeffs();
  for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return IntPoly(std::move(c));
}

}  // namespace spectral
