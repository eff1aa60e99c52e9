#pragma once

// Floating cross-check of the exact spectra.
//
// Points are turned into MPFR floats, every pairwise squared distance is
// measured at the requested precision, divided by the floating squared norm
// of the first vertex, and clustered with a relative tolerance. None
// of the exact grouping code is reused.

#include "polychord/bigfloat.hpp"
#include "polychord/catalog.hpp"
#include "polychord/spectrum.hpp"
#include "polychord/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polychord {

/// Grouping cannot be trusted at the requested precision.
struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FloatEntry {
  BigFloat d_squared;
  BigInt count;
};

struct FloatSpectrum {
  std::vector<FloatEntry> entries;
  mpfr_prec_t precision_bits = 128;
  double grouping_tolerance = 0;

  BigInt total() const {
    BigInt n = 0;
    for (const auto& e : entries) n += e.count;
    return n;
  }
  BigFloat sum() const {
    BigFloat acc(precision_bits);
    for (const auto& e : entries) acc += e.d_squared * BigFloat(e.count, precision_bits);
    return acc;
  }
};

/// Relative gaps this close to the tolerance (within a factor 2^8 either way)
/// make the clustering ambiguous.
inline constexpr double kAmbiguityFactor = 256.0;

namespace detail {

using FloatPoint = std::vector<BigFloat>;

inline std::vector<FloatPoint> float_points(const PolytopeSpec& spec, mpfr_prec_t bits) {
  std::vector<FloatPoint> pts;
  if (spec.is_polygon()) {
    const long e = spec.parameter();
    const BigFloat two_pi = BigFloat::pi(bits) * BigFloat(2L, bits);
    for (long i = 0; i < e; ++i) {
      const BigFloat t = two_pi * BigFloat(i, bits) / BigFloat(e, bits);
      pts.push_back({cos(t), sin(t)});
    }
  } else if (spec.is_simplex()) {
    // e_i - centroid in R^(n+1)
    const long n = spec.parameter();
    const BigFloat c = BigFloat(1L, bits) / BigFloat(n + 1, bits);
    for (long i = 0; i <= n; ++i) {
      FloatPoint p;
      for (long j = 0; j <= n; ++j) p.push_back((i == j ? BigFloat(1L, bits) : BigFloat(0L, bits)) - c);
      pts.push_back(std::move(p));
    }
  } else {
    for (const auto& p : generate_vertices(spec).points) {
      FloatPoint fp;
      for (const auto& x : p) fp.push_back(to_float(x, bits));
      pts.push_back(std::move(fp));
    }
  }
  return pts;
}

}  // namespace detail

/// Numeric spectrum of a catalog entry. grouping_tolerance <= 0 selects the
/// default 2^(-bits/2).
inline FloatSpectrum float_spectrum(const PolytopeSpec& spec, mpfr_prec_t bits = 128,
                                    double grouping_tolerance = 0) {
  if (bits < 64) throw std::invalid_argument("float_spectrum needs at least 64 bits");
  const double tol = grouping_tolerance > 0 ? grouping_tolerance : std::ldexp(1.0, -static_cast<int>(bits / 2));
  if (tol < std::ldexp(1.0, -static_cast<int>(bits) + 16))
    throw PrecisionError("grouping tolerance " + std::to_string(tol) + " is below what " + std::to_string(bits) +
                         "-bit arithmetic resolves; raise the precision");

  const auto pts = detail::float_points(spec, bits);
  const std::size_t dim = pts.front().size();

  BigFloat r2(bits);
  for (const auto& x : pts.front()) r2.add_square(x);

  // Clusters are kept sorted by their first member. Each distance joins the
  // nearest cluster when its relative gap is below tolerance / 2^8 and opens a
  // new one when every gap exceeds tolerance * 2^8; anything between is
  // ambiguous.
  const BigFloat tol_f(tol, bits);
  const BigFloat lo = tol_f / BigFloat(kAmbiguityFactor, bits);
  const BigFloat hi = tol_f * BigFloat(kAmbiguityFactor, bits);
  struct Cluster {
    BigFloat rep;
    std::uint64_t count;
  };
  std::vector<Cluster> clusters;
  BigFloat diff(bits), acc(bits), rel(bits);
  auto gap_class = [&](const BigFloat& rep) {  // 0 join, 1 ambiguous, 2 distinct
    mpfr_sub(rel.raw(), acc.raw(), rep.raw(), MPFR_RNDN);
    mpfr_abs(rel.raw(), rel.raw(), MPFR_RNDN);
    mpfr_div(rel.raw(), rel.raw(), rep.raw(), MPFR_RNDN);
    if (rel <= lo) return 0;
    if (rel < hi) return 1;
    return 2;
  };
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      mpfr_set_zero(acc.raw(), 1);
      for (std::size_t d = 0; d < dim; ++d) {
        mpfr_sub(diff.raw(), pts[i][d].raw(), pts[j][d].raw(), MPFR_RNDN);
        mpfr_fma(acc.raw(), diff.raw(), diff.raw(), acc.raw(), MPFR_RNDN);
      }
      mpfr_div(acc.raw(), acc.raw(), r2.raw(), MPFR_RNDN);
      auto it = std::lower_bound(clusters.begin(), clusters.end(), acc,
                                 [](const Cluster& c, const BigFloat& x) { return c.rep < x; });
      Cluster* target = nullptr;
      for (auto cand : {it, it == clusters.begin() ? clusters.end() : std::prev(it)}) {
        if (cand == clusters.end()) continue;
        const int g = gap_class(cand->rep);
        if (g == 1)
          throw PrecisionError("ambiguous grouping near d^2 = " + acc.to_string(20) +
                               ": gap is comparable to the tolerance; raise the precision");
        if (g == 0) target = &*cand;
      }
      if (target) {
        ++target->count;
      } else {
        clusters.insert(it, Cluster{acc, 1});
      }
    }

  FloatSpectrum out;
  out.precision_bits = bits;
  out.grouping_tolerance = tol;
  for (const auto& c : clusters) out.entries.push_back({c.rep, BigInt(static_cast<unsigned long>(c.count))});
  return out;
}

/// Exact and floating spectra must have the same k, identical counts and
/// per-entry relative error below rel_tol.
inline Verdict cross_check(const PolytopeSpec& spec, mpfr_prec_t bits = 128, double rel_tol = 1e-9,
                           double grouping_tolerance = 0, const SpectrumOptions& opts = {}) {
  const FloatSpectrum fs = float_spectrum(spec, bits, grouping_tolerance);
  const AnySpectrum exact = compute_spectrum(spec, opts);
  Verdict v{"oracle", spec.name(), {}, {}};

  struct Row {
    BigFloat value;
    BigInt count;
    std::string text;
  };
  std::vector<Row> rows = std::visit(
      [&](const auto& s) {
        std::vector<Row> r;
        for (const auto& e : s.entries) r.push_back({to_float(e.d_squared, bits), e.total, detail::str(e.d_squared)});
        return r;
      },
      exact);

  v.clauses.push_back({"k agrees", std::to_string(rows.size()), std::to_string(fs.entries.size()),
                       rows.size() == fs.entries.size()});
  const BigInt V = std::visit([](const auto& s) { return s.vertex_count; }, exact);
  v.clauses.push_back({"float counts sum to V(V-1)/2", detail::str(BigInt(V * (V - 1) / 2)), detail::str(fs.total()),
                       fs.total() == V * (V - 1) / 2});
  const std::size_t n = std::min(rows.size(), fs.entries.size());
  const BigFloat tol(rel_tol, bits);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& f = fs.entries[i];
    const BigFloat rel = abs(rows[i].value - f.d_squared) / abs(rows[i].value);
    v.clauses.push_back({"entry " + std::to_string(i + 1) + " d^2 = " + rows[i].text, rows[i].value.to_string(20),
                         f.d_squared.to_string(20), rel < tol});
    v.clauses.push_back({"entry " + std::to_string(i + 1) + " count", detail::str(rows[i].count),
                         detail::str(f.count), rows[i].count == f.count});
  }
  v.detail = "precision " + std::to_string(bits) + " bits, relative tolerance " + std::to_string(rel_tol);
  return v;
}

}  // namespace polychord
