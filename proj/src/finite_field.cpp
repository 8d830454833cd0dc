#include "spectral/finite_field.hpp"

#include <stdexcept>

namespace spectral {

namespace {

struct Params {
  int q, p, m;
  std::vector<int> modulus;  // monic, lowest first, without the leading 1
};

const Params* lookup(int q) {
  static const Params table[] = {
      {2, 2, 1, {}}, {3, 3, 1, {}}, {4, 2, 2, {1, 1}}, {5, 5, 1, {}},
      {7, 7, 1, {}}, {8, 2, 3, {1, 1, 0}}, {9, 3, 2, {2, 2}},
  };
  for (const auto& t : table) {
    if (t.q == q) return &t;
  }
  return nullptr;
}

}  // namespace

bool FiniteField::supported(int q) { return lookup(q) != nullptr; }

FiniteField::FiniteField(int q) : q_(q) {
  const Params* prm = lookup(q);
  if (!prm) throw std::domain_error("field not in supported set");
  p_ = prm->p;
  m_ = prm->m;
  auto digits = [&](int a) {
    std::vector<int> d(m_);
    for (int i = 0; i < m_; ++i, a /= p_) d[i] = a % p_;
    return d;
  };
  auto pack = [&](const std::vector<int>& d) {
    int a = 0;
    for (int i = m_ - 1; i >= 0; --i) a = a * p_ + d[i];
    return a;
  };
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    auto da = digits(a);
    for (int b = 0; b < q; ++b) {
      auto db = digits(b);
      std::vector<int> s(m_);
      for (int i = 0; i < m_; ++i) s[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = pack(s);
      std::vector<int> prod(2 * m_ - 1, 0);
      for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      // x^m = -(modulus)
      for (int d = 2 * m_ - 2; d >= m_; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < m_; ++i) prod[d - m_ + i] = ((prod[d - m_ + i] - c * prm->modulus[i]) % p_ + p_) % p_;
      }
      prod.resize(m_);
      mul_[a * q + b] = pack(prod);
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (add_[a * q + b] == 0) neg_[a] = b;
      if (mul_[a * q + b] == 1) inv_[a] = b;
    }
  }
}

int FiniteField::inv(int a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return inv_[a];
}

}  // namespace spectral
