#pragma once

#include <vector>

#include "spectral/int_poly.hpp"

namespace spectral {

// Canonical Sturm chain of the squarefree part of p.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& p);

  const IntPoly& base() const { return seq_.front(); }
  const std::vector<IntPoly>& polys() const { return seq_; }

  int variations_at(const Rat& x) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;
  // distinct roots in (lo, hi]
  int count(const Rat& lo, const Rat& hi) const;
  int count_above(const Rat& lo) const;
  int total() const;

 private:
  std::vector<IntPoly> seq_;
};

int sign_variations(const std::vector<int>& signs);

// Distinct real roots of p in (lo, hi].
int sturm_count(const IntPoly& p, const Rat& lo, const Rat& hi);

// A power of two strictly larger than the modulus of every complex root.
Rat root_bound(const IntPoly& p);

struct RootInterval {
  Rat lo, hi;  // root in (lo, hi); lo == hi marks an exact rational root
  bool exact() const { return lo == hi; }
};

// Isolating intervals of the distinct real roots, ascending. Endpoints of
// inexact intervals are never roots of p.
std::vector<RootInterval> isolate_real_roots(const IntPoly& p);

// Halve an isolating interval of the squarefree polynomial q; returns true and
// collapses the interval when the midpoint is the root.
bool bisect_root(const IntPoly& q, int sign_lo, Rat& lo, Rat& hi);

// Simplest fraction strictly inside (lo, hi).
Rat simplest_between(const Rat& lo, const Rat& hi);

}  // namespace spectral
