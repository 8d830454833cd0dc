#pragma once

#include <vector>

namespace spectral {

// GF(q) for q in {2,3,4,5,7,8,9}. Elements are 0..q-1, read as base-p digit
// vectors of polynomials modulo x^2+x+1 (q=4), x^3+x+1 (q=8), x^2+2x+2 (q=9).
class FiniteField {
 public:
  explicit FiniteField(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int inv(int a) const;

  static bool supported(int q);

 private:
  int q_, p_, m_;
  std::vector<int> add_, mul_, neg_, inv_;
};

}  // namespace spectral
