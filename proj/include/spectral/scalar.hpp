#pragma once

#include <compare>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "spectral/int_poly.hpp"

namespace spectral {

// a + b*sqrt(d) with d squarefree; d == 0 iff b == 0.
class Surd {
 public:
  static constexpr unsigned long kMaxRadicand = 1000000;

  Surd() = default;
  Surd(const Rat& a);  // NOLINT(google-explicit-constructor)
  Surd(const Rat& a, const Rat& b, unsigned long d);

  static Surd sqrt(const Rat& r);
  static bool representable_sqrt(const Rat& r);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  unsigned long d() const { return d_; }
  bool is_rational() const { return d_ == 0; }

  int sign() const;
  Surd conjugate() const { return Surd(a_, -b_, d_); }
  Rat norm() const { return a_ * a_ - b_ * b_ * d_; }
  IntPoly minimal_polynomial() const;
  // closed rational interval of width <= w containing the value
  std::pair<Rat, Rat> enclosure(const Rat& w) const;
  double to_double() const;
  std::string to_string() const;

  Surd operator-() const { return Surd(-a_, -b_, d_); }
  friend Surd operator+(const Surd& x, const Surd& y);
  friend Surd operator-(const Surd& x, const Surd& y);
  friend Surd operator*(const Surd& x, const Surd& y);
  friend Surd operator/(const Surd& x, const Surd& y);
  friend bool operator==(const Surd& x, const Surd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }

 private:
  Rat a_, b_;
  unsigned long d_ = 0;
};

// Irrational real root of a squarefree integer polynomial isolated in (lo, hi),
// with p(lo) and p(hi) nonzero.
class AlgebraicReal {
 public:
  AlgebraicReal(IntPoly p, Rat lo, Rat hi);

  const IntPoly& poly() const { return p_; }
  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  int sign_lo() const { return sign_lo_; }

  AlgebraicReal refined(const Rat& width) const;
  AlgebraicReal bisected() const;
  double approx() const;
  std::string to_string() const;

 private:
  struct Trusted {};
  AlgebraicReal(Trusted, IntPoly p, Rat lo, Rat hi, int sign_lo)
      : p_(std::move(p)), lo_(std::move(lo)), hi_(std::move(hi)), sign_lo_(sign_lo) {}
  IntPoly p_;
  Rat lo_, hi_;
  int sign_lo_ = 0;
  friend class Scalar;
};

class Scalar {
 public:
  enum class Kind { rational, quadratic, algebraic };

  Scalar() : v_(Rat(0)) {}
  Scalar(long v) : v_(Rat(v)) {}           // NOLINT(google-explicit-constructor)
  Scalar(const Rat& r) : v_(r) {}          // NOLINT(google-explicit-constructor)
  Scalar(const Surd& s);                   // NOLINT(google-explicit-constructor)
  Scalar(const AlgebraicReal& a);          // NOLINT(google-explicit-constructor)

  static Scalar sqrt(const Rat& r);
  // The unique root of p in (lo, hi]; demoted to Rat or Surd when possible.
  static Scalar root_of(const IntPoly& p, const Rat& lo, const Rat& hi);
  // Stores a without attempting to demote it; a must not be rational or quadratic.
  static Scalar irreducible(const AlgebraicReal& a);

  Kind kind() const { return static_cast<Kind>(v_.index()); }
  bool is_rational() const { return kind() == Kind::rational; }
  bool is_quadratic_or_rational() const { return kind() != Kind::algebraic; }
  const Rat& rational() const;
  Surd surd() const;
  const AlgebraicReal& algebraic() const;

  // Primitive integer polynomial vanishing at the value (minimal below degree 3).
  IntPoly defining_polynomial() const;
  std::pair<Rat, Rat> enclosure(const Rat& width) const;
  double to_double() const;
  std::string to_string() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);

  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);
  friend bool operator==(const Scalar& x, const Scalar& y) { return (x <=> y) == 0; }

 private:
  std::variant<Rat, Surd, AlgebraicReal> v_;
};

std::strong_ordering compare(const Scalar& x, const Scalar& y);

// exact sign of p(x)
int sign_at(const IntPoly& p, const Scalar& x);
// exact value for rational and quadratic x
Scalar eval(const IntPoly& p, const Scalar& x);

struct SignedInterval {
  Rat lo, hi;
  int sign;
};
// enclosure of p(x) together with the exact sign of p(x)
SignedInterval eval_interval(const IntPoly& p, const Scalar& x, const Rat& width);

// number of distinct real roots of p strictly greater than theta
int count_roots_above(const IntPoly& p, const Scalar& theta);
// distinct real roots of p in (lo, hi]
int count_roots_between(const IntPoly& p, const Scalar& lo, const Scalar& hi);

std::vector<Scalar> real_roots(const IntPoly& p);
Scalar largest_real_root(const IntPoly& p);
Scalar smallest_real_root(const IntPoly& p);

// Factorization over Q into exactly verified factors with multiplicities,
// ordered by largest real root descending (factors without real roots last).
// Factors are irreducible unless the numeric splitting gives up.
std::vector<std::pair<IntPoly, int>> factor_rational(const IntPoly& p);
std::string factored_string(const std::vector<std::pair<IntPoly, int>>& factors);

std::string decimal_string(const Rat& r, int digits, bool round_up);

}  // namespace spectral
