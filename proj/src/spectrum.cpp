#include "spectral/spectrum.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cstdint>
#include <mutex>
#include <stdexcept>

#include "spectral/roots.hpp"

namespace spectral {

namespace {

using u64 = std::uint64_t;

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// primes just below 2^31, descending
const std::vector<u64>& moduli(size_t count) {
  static std::vector<u64> primes;
  static std::mutex mu;
  std::lock_guard lock(mu);
  u64 next = primes.empty() ? (u64{1} << 31) - 1 : primes.back() - 2;
  while (primes.size() < count) {
    while (!is_prime(next)) next -= 2;
    primes.push_back(next);
    next -= 2;
  }
  return primes;
}

// characteristic polynomial of a matrix mod p via Hessenberg reduction;
// coefficients lowest first, monic of degree n
std::vector<u64> char_poly_mod(std::vector<u64> a, int n, u64 p) {
  auto at = [&](int i, int j) -> u64& { return a[static_cast<size_t>(i) * n + j]; };
  for (int m = 1; m < n - 1; ++m) {
    int piv = -1;
    for (int i = m; i < n; ++i) {
      if (at(i, m - 1) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != m) {
      for (int j = 0; j < n; ++j) std::swap(at(piv, j), at(m, j));
      for (int i = 0; i < n; ++i) std::swap(at(i, piv), at(i, m));
    }
    u64 inv = pow_mod(at(m, m - 1), p - 2, p);
    for (int i = m + 1; i < n; ++i) {
      u64 f = at(i, m - 1) * inv % p;
      if (f == 0) continue;
      // row_i -= f row_m ; col_m += f col_i
      for (int j = 0; j < n; ++j) at(i, j) = (at(i, j) + (p - f) * at(m, j)) % p;
      for (int r = 0; r < n; ++r) at(r, m) = (at(r, m) + f * at(r, i)) % p;
    }
  }
  // p_0 = 1, p_m(x) = (x - h_mm) p_{m-1} - sum_{i<m} h_im prod_{j=i+1}^{m} h_{j,j-1} p_{i-1}
  std::vector<std::vector<u64>> P(n + 1);
  P[0] = {1};
  for (int m = 1; m <= n; ++m) {
    std::vector<u64> cur(m + 1, 0);
    const auto& prev = P[m - 1];
    for (int i = 0; i < m; ++i) {
      cur[i + 1] = (cur[i + 1] + prev[i]) % p;
      cur[i] = (cur[i] + (p - at(m - 1, m - 1)) * prev[i]) % p;
    }
    u64 prod = 1;
    for (int i = m - 1; i >= 1; --i) {
      prod = prod * at(i, i - 1) % p;
      if (prod == 0) break;
      u64 coef = prod * at(i - 1, m - 1) % p;
      const auto& q = P[i - 1];
      for (size_t j = 0; j < q.size(); ++j) cur[j] = (cur[j] + (p - coef) * q[j]) % p;
    }
    P[m] = std::move(cur);
  }
  return P[n];
}

void check_order(const Graph& g) {
  if (g.order() > kCharPolyMaxOrder)
    throw std::domain_error("characteristic polynomial limited to " + std::to_string(kCharPolyMaxOrder) + " vertices");
}

}  // namespace

IntPoly char_poly(const Graph& g) {
  check_order(g);
  const int n = g.order();
  if (n == 0) return IntPoly{1};
  int maxdeg = 0;
  for (int v = 0; v < n; ++v) maxdeg = std::max(maxdeg, g.degree(v));
  // eigenvalues lie in [-maxdeg, maxdeg], so |coefficients| <= (1 + maxdeg)^n
  BigInt bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), 1 + maxdeg, n);
  bound *= 2;
  std::vector<u64> base(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) base[static_cast<size_t>(i) * n + j] = g.adjacent(i, j) ? 1 : 0;
  }
  std::vector<BigInt> acc(n + 1, 0);
  BigInt modulus = 1;
  for (size_t k = 0; modulus <= bound; ++k) {
    u64 p = moduli(k + 1)[k];
    auto r = char_poly_mod(base, n, p);
    // det(xI - A) from det of A's companion: coefficients of det(xI - A) directly
    u64 mmod = mpz_fdiv_ui(modulus.get_mpz_t(), p);
    u64 inv = pow_mod(mmod, p - 2, p);
    for (int i = 0; i <= n; ++i) {
      u64 cur = mpz_fdiv_ui(acc[i].get_mpz_t(), p);
      u64 t = (r[i] + p - cur) % p * inv % p;
      acc[i] += modulus * static_cast<unsigned long>(t);
    }
    modulus *= static_cast<unsigned long>(p);
  }
  BigInt half = modulus / 2;
  for (auto& c : acc) {
    if (c > half) c -= modulus;
  }
  return IntPoly(std::move(acc));
}

IntPoly char_poly_berkowitz(const Graph& g) {
  check_order(g);
  const int n = g.order();
  if (n == 0) return IntPoly{1};
  auto a = [&](int i, int j) { return g.adjacent(i, j) ? 1 : 0; };
  // v holds the coefficients (highest first) of the char poly of the leading r x r block
  std::vector<BigInt> v{1, -a(0, 0)};
  for (int r = 1; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R C, -R A C, ...
    std::vector<BigInt> col(r + 2);
    col[0] = 1;
    col[1] = -a(r, r);
    std::vector<BigInt> cvec(r);
    for (int i = 0; i < r; ++i) cvec[i] = a(i, r);
    for (int k = 2; k <= r + 1; ++k) {
      BigInt s = 0;
      for (int i = 0; i < r; ++i) {
        if (a(r, i)) s += cvec[i];
      }
      col[k] = -s;
      std::vector<BigInt> next(r, 0);
      for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
          if (a(i, j)) next[i] += cvec[j];
        }
      }
      cvec.swap(next);
    }
    std::vector<BigInt> w(r + 2, 0);
    for (int i = 0; i < r + 2; ++i) {
      for (int j = 0; j <= i && j < static_cast<int>(v.size()); ++j) w[i] += col[i - j] * v[j];
    }
    v.swap(w);
  }
  std::vector<BigInt> low(v.rbegin(), v.rend());
  return IntPoly(std::move(low));
}

Spectrum spectrum(const Graph& g) {
  Spectrum s;
  s.charpoly = char_poly(g);
  s.factors = factor_rational(s.charpoly);
  for (const auto& [f, m] : s.factors) {
    for (auto& r : real_roots(f)) s.eigenvalues.push_back({r, m});
  }
  std::stable_sort(s.eigenvalues.begin(), s.eigenvalues.end(),
                   [](const Eigenvalue& x, const Eigenvalue& y) { return x.value > y.value; });
  return s;
}

Scalar second_eig(const Graph& g) {
  if (g.order() < 2) throw std::domain_error("second eigenvalue needs at least two vertices");
  if (!g.is_connected()) throw std::domain_error("graph is disconnected; define on components");
  IntPoly q = squarefree_part(char_poly(g));
  auto iso = isolate_real_roots(q);
  // connected: the top eigenvalue is simple, so the next distinct root is lambda_2
  if (iso.size() < 2) throw std::domain_error("graph has a single distinct eigenvalue");
  const auto& r = iso[iso.size() - 2];
  if (r.exact()) return Scalar(r.lo);
  return Scalar::root_of(q, r.lo, r.hi);
}

int count_eigs_greater(const IntPoly& charpoly, const Scalar& theta) {
  int total = 0;
  for (const auto& [a, m] : squarefree_factorization(charpoly)) total += m * count_roots_above(a, theta);
  return total;
}

int count_eigs_greater(const Graph& g, const Scalar& theta) { return count_eigs_greater(char_poly(g), theta); }

Scalar spectral_radius(const Graph& g) {
  if (g.order() == 0) throw std::domain_error("empty graph");
  return largest_real_root(char_poly(g));
}

Scalar smallest_eig(const Graph& g) {
  if (g.order() == 0) throw std::domain_error("empty graph");
  return smallest_real_root(char_poly(g));
}

std::vector<double> numeric_eigenvalues(const Graph& g) {
  const int n = g.order();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j : g.neighbors(i)) a(i, j) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = es.eigenvalues()(n - 1 - i);
  return out;
}

bool second_eig_exceeds(const Graph& g, const Scalar& theta) {
  if (g.order() < 2) return false;
  auto ev = numeric_eigenvalues(g);
  double t = theta.to_double();
  if (ev[1] > t + 1e-6) return true;
  if (ev[1] < t - 1e-6) return false;
  return count_eigs_greater(g, theta) >= 2;
}

}  // namespace spectral
