#include "spectral/orthopoly.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace spectral {

namespace {

struct Memo {
  std::mutex mu;
  std::map<int, std::vector<IntPoly>> f, g;
  std::map<std::pair<int, int>, Scalar> lambda, mu_top;
};

Memo& memo() {
  static Memo m;
  return m;
}

void check(int k, int i) {
  if (k < 2) throw std::domain_error("valency must be at least 2");
  if (i < 0) throw std::domain_error("index must be nonnegative");
}

// caller holds the lock
const IntPoly& f_locked(Memo& m, int k, int i) {
  auto& fs = m.f[k];
  if (fs.empty()) {
    fs.push_back(IntPoly{1});
    fs.push_back(IntPoly{0, 1});
    fs.push_back(IntPoly{-k, 0, 1});
  }
  while (static_cast<int>(fs.size()) <= i) {
    size_t n = fs.size();
    fs.push_back(fs[n - 1].shift_up(1) - fs[n - 2] * BigInt(k - 1));
  }
  return fs[i];
}

}  // namespace

IntPoly F(int k, int i) {
  check(k, i);
  Memo& m = memo();
  std::lock_guard<std::mutex> lock(m.mu);
  return f_locked(m, k, i);
}

IntPoly G(int k, int i) {
  check(k, i);
  Memo& m = memo();
  std::lock_guard<std::mutex> lock(m.mu);
  auto& gs = m.g[k];
  while (static_cast<int>(gs.size()) <= i) {
    size_t n = gs.size();
    IntPoly next = f_locked(m, k, static_cast<int>(n));
    if (n > 0) next += gs[n - 1];
    gs.push_back(std::move(next));
  }
  return gs[i];
}

Scalar lambda_top(int k, int t) {
  if (t < 1) throw std::domain_error("lambda_top needs t >= 1");
  {
    std::lock_guard<std::mutex> lock(memo().mu);
    auto it = memo().lambda.find({k, t});
    if (it != memo().lambda.end()) return it->second;
  }
  Scalar r = largest_real_root(G(k, t));
  std::lock_guard<std::mutex> lock(memo().mu);
  memo().lambda.emplace(std::make_pair(k, t), r);
  return r;
}

Scalar mu_top(int k, int t) {
  if (t < 1) throw std::domain_error("mu_top needs t >= 1");
  {
    std::lock_guard<std::mutex> lock(memo().mu);
    auto it = memo().mu_top.find({k, t});
    if (it != memo().mu_top.end()) return it->second;
  }
  Scalar r = largest_real_root(F(k, t));
  std::lock_guard<std::mutex> lock(memo().mu);
  memo().mu_top.emplace(std::make_pair(k, t), r);
  return r;
}

}  // namespace spectral
