#pragma once

#include <utility>
#include <vector>

#include "spectral/graph.hpp"
#include "spectral/int_poly.hpp"
#include "spectral/scalar.hpp"

namespace spectral {

inline constexpr int kCharPolyMaxOrder = 256;

// det(xI - A), exact
IntPoly char_poly(const Graph& g);
// Berkowitz, division free; slower, kept as an independent check
IntPoly char_poly_berkowitz(const Graph& g);

struct Eigenvalue {
  Scalar value;
  int multiplicity = 0;
};

struct Spectrum {
  IntPoly charpoly;
  std::vector<std::pair<IntPoly, int>> factors;
  std::vector<Eigenvalue> eigenvalues;  // descending
};

Spectrum spectrum(const Graph& g);

// second largest eigenvalue of a connected graph
Scalar second_eig(const Graph& g);
// eigenvalues strictly greater than theta, with multiplicity
int count_eigs_greater(const Graph& g, const Scalar& theta);
int count_eigs_greater(const IntPoly& charpoly, const Scalar& theta);
Scalar spectral_radius(const Graph& g);
Scalar smallest_eig(const Graph& g);

// Floating point eigenvalues, descending. Untrusted; callers re-certify near
// decision boundaries.
std::vector<double> numeric_eigenvalues(const Graph& g);

// Decide lambda_2(g) > theta, using the numeric values away from theta and
// Sturm counts within 1e-6 of it. Works for disconnected g.
bool second_eig_exceeds(const Graph& g, const Scalar& theta);

}  // namespace spectral
