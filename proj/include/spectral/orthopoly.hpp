#pragma once

#include "spectral/int_poly.hpp"
#include "spectral/scalar.hpp"

namespace spectral {

// F_0 = 1, F_1 = x, F_2 = x^2 - k, F_i = x F_{i-1} - (k-1) F_{i-2}
IntPoly F(int k, int i);
// G_i = F_0 + ... + F_i
IntPoly G(int k, int i);

// largest zero of G_t (t >= 1)
Scalar lambda_top(int k, int t);
// largest zero of F_t (t >= 1)
Scalar mu_top(int k, int t);

}  // namespace spectral
