#pragma once

// Test-only oracles that share no code with the library: double-precision
// coordinates built from scratch, duality by facet centers, Moebius
// cyclotomic polynomials, and seeded random generators.

#include "polychord/exactnum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace testsupport {

using Vec = std::vector<double>;

inline constexpr double kTau = 1.6180339887498948482;

struct DoubleEntry {
  double d_squared;
  long pairs;
  long from_first;
};

/// Brute-force spectrum on the unit sphere: points are scaled by |p0|.
inline std::vector<DoubleEntry> double_spectrum(const std::vector<Vec>& pts, double tol = 1e-9) {
  double r2 = 0;
  for (double x : pts[0]) r2 += x * x;
  std::vector<std::pair<double, bool>> d;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      double s = 0;
      for (std::size_t k = 0; k < pts[i].size(); ++k) s += (pts[i][k] - pts[j][k]) * (pts[i][k] - pts[j][k]);
      d.push_back({s / r2, i == 0});
    }
  std::sort(d.begin(), d.end());
  std::vector<DoubleEntry> out;
  for (const auto& [v, first] : d) {
    if (out.empty() || v - out.back().d_squared > tol) out.push_back({v, 0, 0});
    ++out.back().pairs;
    if (first) ++out.back().from_first;
  }
  return out;
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
inline double norm2(const Vec& a) {
  double s = 0;
  for (double x : a) s += x * x;
  return s;
}

/// Every signed permutation of `base` (only even ones if `even`), deduplicated.
inline std::vector<Vec> signed_perms(Vec base, bool even) {
  std::vector<Vec> out;
  std::vector<int> idx(base.size());
  std::iota(idx.begin(), idx.end(), 0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = i + 1; j < idx.size(); ++j) inversions += idx[i] > idx[j];
    if (even && inversions % 2) continue;
    for (unsigned mask = 0; mask < (1u << base.size()); ++mask) {
      Vec p(base.size());
      for (std::size_t i = 0; i < base.size(); ++i) p[i] = base[idx[i]] * ((mask >> i) & 1 ? -1 : 1);
      out.push_back(p);
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Vec& a, const Vec& b) { return norm2(sub(a, b)) < 1e-18; }),
            out.end());
  return out;
}

inline std::vector<Vec> concat(std::initializer_list<std::vector<Vec>> parts) {
  std::vector<Vec> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

inline std::vector<Vec> icosahedron_double() { return signed_perms({0, kTau, 1}, true); }

inline std::vector<Vec> cell600_double() {
  return concat({signed_perms({1, 0, 0, 0}, false), signed_perms({0.5, 0.5, 0.5, 0.5}, false),
                 signed_perms({kTau / 2, 0.5, 1 / (2 * kTau), 0}, true)});
}

inline std::vector<Vec> cell24_double() { return signed_perms({1, 1, 0, 0}, false); }

inline std::vector<Vec> crosspolytope_double(int n) {
  Vec e(n, 0.0);
  e[0] = 1;
  return signed_perms(e, false);
}

/// Centers of the simplicial facets: (dim)-cliques of the edge graph.
inline std::vector<Vec> facet_centers(const std::vector<Vec>& pts) {
  const std::size_t n = pts.size(), dim = pts[0].size();
  double e2 = 1e300;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e2 = std::min(e2, norm2(sub(pts[i], pts[j])));
  std::vector<std::vector<std::size_t>> adj(n);
  std::vector<std::vector<bool>> is_edge(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && std::abs(norm2(sub(pts[i], pts[j])) - e2) < 1e-9) {
        adj[i].push_back(j);
        is_edge[i][j] = true;
      }
  std::vector<Vec> centers;
  std::vector<std::size_t> clique;
  auto extend = [&](auto&& self, std::size_t from) -> void {
    if (clique.size() == dim) {
      Vec c(dim, 0.0);
      for (auto v : clique)
        for (std::size_t k = 0; k < dim; ++k) c[k] += pts[v][k] / static_cast<double>(dim);
      centers.push_back(c);
      return;
    }
    for (std::size_t v = from; v < n; ++v) {
      bool ok = true;
      for (auto u : clique) ok = ok && is_edge[u][v];
      if (!ok) continue;
      clique.push_back(v);
      self(self, v + 1);
      clique.pop_back();
    }
  };
  extend(extend, 0);
  return centers;
}

// ---------------------------------------------------------------------------
// Moebius form of the cyclotomic polynomial: prod_{d | n} (1 - x^d)^mu(n/d)
// for n > 1, as a power series truncated at degree phi(n).

inline int moebius(long n) {
  int mu = 1;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  return n > 1 ? -mu : mu;
}

inline long euler_phi(long n) {
  long r = 0;
  for (long k = 1; k <= n; ++k) r += std::gcd(k, n) == 1;
  return r;
}

inline std::vector<polychord::BigInt> cyclotomic_moebius(long n) {
  using polychord::BigInt;
  if (n == 1) return {BigInt(-1), BigInt(1)};
  const long deg = euler_phi(n);
  std::vector<BigInt> s(static_cast<std::size_t>(deg) + 1, BigInt(0));
  s[0] = 1;
  for (long d = 1; d <= n; ++d) {
    if (n % d) continue;
    const int mu = moebius(n / d);
    if (mu == 1) {  // multiply by (1 - x^d)
      for (long k = deg; k >= d; --k) s[k] -= s[k - d];
    } else if (mu == -1) {  // multiply by 1 / (1 - x^d)
      for (long k = d; k <= deg; ++k) s[k] += s[k - d];
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Random values

class Rng {
 public:
  explicit Rng(std::uint32_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

  polychord::BigRational rational(long bound = 20) {
    return polychord::make_rational(integer(-bound, bound), integer(1, bound));
  }

  polychord::QuadExt quad(long bound = 20) { return {rational(bound), rational(bound)}; }

  polychord::QuadExt nonzero_quad(long bound = 20) {
    for (;;) {
      auto q = quad(bound);
      if (!q.is_zero()) return q;
    }
  }

 private:
  std::mt19937 gen_;
};

inline constexpr int kPropertyRuns = 300;

}  // namespace testsupport
