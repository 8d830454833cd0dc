#include "spectral/roots.hpp"

#include <stdexcept>

namespace spectral {

namespace {

BigInt floor_rat(const Rat& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

}  // namespace

int sign_variations(const std::vector<int>& signs) {
  int last = 0, v = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

SturmSequence::SturmSequence(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("undefined root count");
  IntPoly a = squarefree_part(p);
  seq_.push_back(a);
  if (a.degree() <= 0) return;
  seq_.push_back(a.derivative().primitive());
  while (seq_.back().degree() > 0) {
    const IntPoly& u = seq_[seq_.size() - 2];
    const IntPoly& v = seq_.back();
    IntPoly r = pseudo_remainder(u, v);
    if (r.is_zero()) break;
    // prem carries lc(v)^(du-dv+1); the chain needs -rem up to a positive factor
    int delta = u.degree() - v.degree();
    bool flip = sgn(v.leading()) > 0 || delta % 2 == 1;
    BigInt g = r.content();
    if (flip) g = -g;
    std::vector<BigInt> c = r.coeffs();
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    seq_.emplace_back(std::move(c));
  }
}

int SturmSequence::variations_at(const Rat& x) const {
  std::vector<int> s;
  s.reserve(seq_.size());
  for (const auto& p : seq_) s.push_back(p.sign_at(x));
  return sign_variations(s);
}

int SturmSequence::variations_at_neg_inf() const {
  std::vector<int> s;
  for (const auto& p : seq_) s.push_back(p.sign_at_neg_inf());
  return sign_variations(s);
}

int SturmSequence::variations_at_pos_inf() const {
  std::vector<int> s;
  for (const auto& p : seq_) s.push_back(p.sign_at_pos_inf());
  return sign_variations(s);
}

int SturmSequence::count(const Rat& lo, const Rat& hi) const {
  if (lo >= hi) return 0;
  return variations_at(lo) - variations_at(hi);
}

int SturmSequence::count_above(const Rat& lo) const { return variations_at(lo) - variations_at_pos_inf(); }

int SturmSequence::total() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

int sturm_count(const IntPoly& p, const Rat& lo, const Rat& hi) {
  if (p.is_zero()) throw std::domain_error("undefined root count");
  return SturmSequence(p).count(lo, hi);
}

Rat root_bound(const IntPoly& p) {
  if (p.degree() <= 0) return Rat(1);
  Rat m = 0;
  Rat lc = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    Rat r = Rat(abs(p.coeff(i))) / lc;
    if (r > m) m = r;
  }
  Rat b = 1;
  while (b <= m + 1) b *= 2;
  return b;
}

namespace {

void isolate(const SturmSequence& s, Rat lo, int vlo, Rat hi, int vhi, std::vector<RootInterval>& out) {
  int n = vlo - vhi;
  if (n == 0) return;
  const IntPoly& q = s.base();
  if (n == 1) {
    if (q.sign_at(hi) == 0) {
      out.push_back({hi, hi});
      return;
    }
    // keep the open end off a neighbouring root
    while (q.sign_at(lo) == 0) {
      Rat mid = (lo + hi) / 2;
      int vm = s.variations_at(mid);
      if (vm - vhi == 1) {
        lo = mid;
      } else {
        if (q.sign_at(mid) == 0) {
          out.push_back({mid, mid});
          return;
        }
        hi = mid;
      }
    }
    out.push_back({lo, hi});
    return;
  }
  Rat mid = (lo + hi) / 2;
  int vm = s.variations_at(mid);
  isolate(s, lo, vlo, mid, vm, out);
  isolate(s, mid, vm, hi, vhi, out);
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const IntPoly& p) {
  std::vector<RootInterval> out;
  if (p.is_zero()) throw std::domain_error("undefined root count");
  if (p.degree() <= 0) return out;
  SturmSequence s(p);
  Rat b = root_bound(s.base());
  isolate(s, -b, s.variations_at(-b), b, s.variations_at(b), out);
  return out;
}

bool bisect_root(const IntPoly& q, int sign_lo, Rat& lo, Rat& hi) {
  Rat mid = (lo + hi) / 2;
  int sm = q.sign_at(mid);
  if (sm == 0) {
    lo = hi = mid;
    return true;
  }
  if (sm == sign_lo) {
    lo = mid;
  } else {
    hi = mid;
  }
  return false;
}

Rat simplest_between(const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) throw std::invalid_argument("simplest_between: empty interval");
  BigInt fl = floor_rat(lo);
  Rat cand(fl + 1);
  if (cand < hi) {
    // prefer the integer of least magnitude
    if (lo < 0 && hi > 0) return Rat(0);
    if (hi <= 0) {
      BigInt c = floor_rat(hi);
      if (Rat(c) == hi) c -= 1;
      return Rat(c);
    }
    return cand;
  }
  // lo, hi inside [fl, fl+1]; x = fl + 1/y
  Rat a = hi - fl;
  Rat b = lo - fl;
  Rat ylo = 1 / a;
  Rat y;
  if (b == 0) {
    y = Rat(floor_rat(ylo) + 1);
  } else {
    y = simplest_between(ylo, 1 / b);
  }
  Rat r = Rat(fl) + 1 / y;
  r.canonicalize();
  return r;
}

}  // namespace spectral
