#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace spectral {

using BigInt = mpz_class;
using Rat = mpq_class;

// Dense polynomial over Z, coefficients stored lowest degree first.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(int degree, const BigInt& c = 1);
  // Integer multiple of p with coprime coefficients and positive leading term.
  static IntPoly from_rational(const std::vector<Rat>& coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt coeff(int i) const;
  const BigInt& leading() const { return c_.back(); }

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const BigInt& s);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
  friend IntPoly operator*(const BigInt& s, IntPoly a) { return a *= s; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  IntPoly derivative() const;
  IntPoly shift_up(int k) const;  // multiply by x^k
  BigInt content() const;
  IntPoly primitive() const;  // leading coefficient made positive

  BigInt eval(const BigInt& x) const;
  Rat eval(const Rat& x) const;
  int sign_at(const Rat& x) const;
  int sign_at_pos_inf() const;
  int sign_at_neg_inf() const;
  double eval_double(double x) const;

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

int sign(const BigInt& v);
int sign(const Rat& v);

// lc(b)^(deg a - deg b + 1) * a mod b
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
// q with a = q * d, when d divides a over Z[x]; false otherwise
bool divide_exact(const IntPoly& a, const IntPoly& d, IntPoly* quotient);
IntPoly gcd(const IntPoly& a, const IntPoly& b);
IntPoly squarefree_part(const IntPoly& p);
// Yun: p = c * prod a_i^i, returned as (a_i, i) with deg a_i > 0
std::vector<std::pair<IntPoly, int>> squarefree_factorization(const IntPoly& p);
// a(x + s) style substitution x -> -x
IntPoly reflect(const IntPoly& p);

}  // namespace spectral
