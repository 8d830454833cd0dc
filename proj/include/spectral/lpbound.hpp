#pragma once

#include <vector>

#include "spectral/int_poly.hpp"
#include "spectral/scalar.hpp"

namespace spectral {

// T(k,t,c): t x t tridiagonal, subdiagonal (1,...,1,c), superdiagonal
// (k,k-1,...,k-1), constant row sum k. c is rational or quadratic.
struct TridiagParams {
  int k = 0;
  int t = 0;
  Scalar c;
};

std::vector<std::vector<Scalar>> tridiag_matrix(const TridiagParams& p);
// largest zero of (c-1) G_{t-2} + G_{t-1}
Scalar tridiag_second_eig(const TridiagParams& p);
// 1 + sum_{i<=t-3} k(k-1)^i + k(k-1)^{t-2}/c
Scalar M(const TridiagParams& p);
// -F_{t-1}(lambda) / G_{t-2}(lambda)
Scalar c_for_lambda(int k, int t, const Scalar& lambda);

struct BoundCertificate {
  TridiagParams params;
  Scalar lambda2;
  Scalar M;
  BigInt v_ub;
  bool parity_applied = false;
};

BoundCertificate bound_for_lambda(int k, const Scalar& lambda);

struct LPPolynomial {
  int k = 0;
  std::vector<Rat> f;  // f = sum f_i F_i
};

// coefficients of p in the basis F_0, F_1, ...
std::vector<Rat> to_f_basis(int k, const std::vector<Rat>& p);
std::vector<Rat> to_f_basis(int k, const IntPoly& p);
// Checks the certificate conditions and returns f(k)/f_0.
Rat lp_certificate_check(const LPPolynomial& f, const Scalar& lambda);

BigInt moore_lower(int k, int g);

struct AlonBoppana {
  int t = 0;
  BigInt bound;
};
AlonBoppana alon_boppana_min_t(int k, const Scalar& lambda);

enum class Threshold { plain, parity };

struct ExtendedRange {
  TridiagParams base;
  Threshold threshold = Threshold::plain;
  Rat threshold_c;
  IntPoly f;
  Scalar lambda_prime;
};

ExtendedRange extended_range(const TridiagParams& p, Threshold threshold);
// parity threshold exactly when M is even and k is odd
ExtendedRange extended_range(const TridiagParams& p, bool M_parity_even, bool k_odd);

BigInt floor_of(const Scalar& x);

}  // namespace spectral
