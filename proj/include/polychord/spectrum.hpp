#pragma once

/**
 * @file spectrum.hpp
 * @brief Exact chord spectra and the four aggregates built on them.
 *
 * A spectrum lists each distinct squared chord length d^2 (for the unit
 * circumsphere) with N, the number of chords of that length, and m, the
 * number of them leaving any one vertex. Entries are strictly ascending in
 * d^2.
 *
 * The value type is QuadExt for everything with coordinates or a Gram
 * description, and CycloElement for polygons. Aggregates are written once
 * for both.
 */

#include "polychord/catalog.hpp"
#include "polychord/cyclotomic.hpp"
#include "polychord/exactnum.hpp"
#include "polychord/pairwise.hpp"

#include <algorithm>
#include <map>
#include <type_traits>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace polychord {

/// An aggregate that the theory says is rational came out irrational.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

struct NotSmoothError : std::domain_error {
  using std::domain_error::domain_error;
};

template <class Value>
struct ChordEntry {
  Value d_squared;
  BigInt total;         // N
  long per_vertex = 0;  // m
  Value cos_theta;      // 1 - d^2/2
};

template <class Value>
struct BasicChordSpectrum {
  std::vector<ChordEntry<Value>> entries;
  BigInt vertex_count;

  std::size_t distinct() const { return entries.size(); }  // k
  BigInt total_chords() const {
    BigInt n = 0;
    for (const auto& e : entries) n += e.total;
    return n;
  }
};

using ChordSpectrum = BasicChordSpectrum<QuadExt>;
using PolygonSpectrum = BasicChordSpectrum<CycloElement>;
using AnySpectrum = std::variant<ChordSpectrum, PolygonSpectrum>;

struct SpectrumOptions {
  unsigned threads = 1;
  CatalogLimits limits{};
};

/// Cubes up to this dimension are measured pair by pair; larger ones use
/// the Hamming-weight closed form.
inline constexpr long kCubeBruteForceMaxDimension = 12;

// ---------------------------------------------------------------------------
// Value helpers shared by both fields

inline QuadExt one_like(const QuadExt&) { return QuadExt(1); }
inline CycloElement one_like(const CycloElement& x) { return x.constant(1); }

inline QuadExt half_of(const QuadExt& x) { return x * QuadExt(BigRational(1, 2)); }
inline CycloElement half_of(const CycloElement& x) { return x * BigRational(1, 2); }

inline std::optional<BigRational> as_rational(const QuadExt& x) {
  if (!x.is_rational()) return std::nullopt;
  return x.rational_part();
}
inline std::optional<BigRational> as_rational(const CycloElement& x) {
  if (!x.is_rational()) return std::nullopt;
  return x.coeffs()[0];
}

template <class Value>
ChordEntry<Value> make_entry(Value d2, BigInt total, long per_vertex) {
  Value c = one_like(d2) - half_of(d2);
  return {std::move(d2), std::move(total), per_vertex, std::move(c)};
}

// ---------------------------------------------------------------------------
// Construction

/// Spectrum of validated coordinates, normalized by the declared circumradius.
inline ChordSpectrum spectrum_from_groups(const VertexSet& vs, const std::vector<DistanceGroup>& groups) {
  ChordSpectrum s;
  s.vertex_count = static_cast<unsigned long>(vs.points.size());
  const QuadExt inv_r2 = vs.squared_circumradius.inverse();
  for (const auto& g : groups) s.entries.push_back(make_entry(g.squared * inv_r2, g.pairs, g.from_first));
  return s;
}

inline ChordSpectrum spectrum_from_vertices(const VertexSet& vs, unsigned threads = 1) {
  return spectrum_from_groups(vs, group_pairwise_distances(vs.points, threads));
}

/// Vertices of the n-cube at Hamming distance w from a given vertex sit at
/// squared distance 4w/n (unit circumradius); there are C(n, w) of them.
inline ChordSpectrum cube_spectrum_closed_form(long n) {
  ChordSpectrum s;
  s.vertex_count = pow(BigInt(2), static_cast<unsigned long>(n));
  for (long w = 1; w <= n; ++w) {
    const BigInt m = binomial(n, w);
    s.entries.push_back(make_entry(QuadExt(make_rational(4 * w, n)),
                                   BigInt(pow(BigInt(2), static_cast<unsigned long>(n - 1)) * m), m.get_si()));
  }
  return s;
}

inline ChordSpectrum simplex_spectrum(long n) {
  const SimplexGram g = simplex_gram(n);
  ChordSpectrum s;
  s.vertex_count = g.vertex_count;
  s.entries.push_back(make_entry(QuadExt(g.chord_squared), binomial(n + 1, 2), n));
  return s;
}

/// Regular E-gon with vertices zeta^0 .. zeta^(E-1). The squared distance
/// between vertices i < j depends only on the offset j - i; offsets with equal
/// values are merged by exact comparison in Q(zeta_E). Groups are ordered by
/// their smallest offset, which orders them by length because
/// 2 - 2cos(2 pi j / E) increases for j in [1, E/2].
inline PolygonSpectrum polygon_spectrum(long edges, long cap = kDefaultCyclotomicCap) {
  const CyclotomicField field(edges, cap);
  struct Group {
    CycloElement value;
    BigInt pairs;
    long from_first;
  };
  std::vector<Group> groups;
  for (long off = 1; off < edges; ++off) {
    CycloElement d2 = field.constant(2) - field.zeta_power(off) - field.zeta_power(-off);
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) { return g.value == d2; });
    if (it == groups.end()) {
      groups.push_back({std::move(d2), BigInt(0), 0});
      it = std::prev(groups.end());
    }
    it->pairs += edges - off;  // pairs (i, i + off) with i + off < E
    it->from_first += 1;
  }
  PolygonSpectrum s;
  s.vertex_count = edges;
  for (auto& g : groups) s.entries.push_back(make_entry(std::move(g.value), std::move(g.pairs), g.from_first));
  return s;
}

/// Exact spectrum of any non-polygon catalog entry. Coordinates pass through
/// the validation gates before they are used.
inline ChordSpectrum chord_spectrum(const PolytopeSpec& spec, const SpectrumOptions& opts = {}) {
  spec.check_limits(opts.limits);
  switch (spec.kind()) {
    case PolytopeKind::polygon:
      throw SpecError("chord_spectrum: polygons use polygon_spectrum (values in Q(zeta_E))");
    case PolytopeKind::simplex: return simplex_spectrum(spec.parameter());
    case PolytopeKind::cube:
      if (spec.parameter() > kCubeBruteForceMaxDimension) return cube_spectrum_closed_form(spec.parameter());
      break;
    default: break;
  }
  const VertexSet vs = generate_vertices(spec);
  const auto groups = group_pairwise_distances(vs.points, opts.threads);
  validate_groups(vs, face_counts(spec), groups);
  return spectrum_from_groups(vs, groups);
}

inline AnySpectrum compute_spectrum(const PolytopeSpec& spec, const SpectrumOptions& opts = {}) {
  if (spec.is_polygon()) {
    spec.check_limits(opts.limits);
    return polygon_spectrum(spec.parameter(), opts.limits.max_polygon_edges);
  }
  return chord_spectrum(spec, opts);
}

// ---------------------------------------------------------------------------
// Aggregates

template <class Value>
struct FactoredProduct {
  struct Factor {
    Value base;
    BigInt exponent;
  };
  std::vector<Factor> factors;
};

/// Sum over all chords of c^2 = sum N_i d_i^2, in the spectrum's field.
template <class Value>
Value sum_squared_value(const BasicChordSpectrum<Value>& s) {
  if (s.entries.empty()) throw std::invalid_argument("sum_squared_value: empty spectrum");
  Value acc = one_like(s.entries.front().d_squared) - one_like(s.entries.front().d_squared);
  for (const auto& e : s.entries) {
    Value term = e.d_squared;
    if constexpr (std::is_same_v<Value, QuadExt>) {
      term *= QuadExt(BigRational(e.total));
    } else {
      term *= BigRational(e.total);
    }
    acc += term;
  }
  return acc;
}

/// Sum over all chords of c^2. Must be rational.
template <class Value>
BigRational sum_squared(const BasicChordSpectrum<Value>& s) {
  if (s.entries.empty()) return 0;
  auto r = as_rational(sum_squared_value(s));
  if (!r) throw InternalError("sum of squared chords is irrational");
  return *r;
}

template <class Value>
Value sum_squared_distinct(const BasicChordSpectrum<Value>& s) {
  Value acc = one_like(s.entries.front().d_squared) - one_like(s.entries.front().d_squared);
  for (const auto& e : s.entries) acc += e.d_squared;
  return acc;
}

template <class Value>
FactoredProduct<Value> product_squared(const BasicChordSpectrum<Value>& s) {
  FactoredProduct<Value> p;
  for (const auto& e : s.entries) p.factors.push_back({e.d_squared, e.total});
  return p;
}

/// Largest exponent evaluate_product() accepts.
inline const BigInt kMaxEvaluableExponent = BigInt(1) << 40;

template <class Value>
Value evaluate_product(const FactoredProduct<Value>& p) {
  if (p.factors.empty()) throw std::invalid_argument("evaluate_product: empty product");
  Value acc = one_like(p.factors.front().base);
  for (const auto& f : p.factors) {
    if (f.exponent > kMaxEvaluableExponent)
      throw std::overflow_error("exponent " + f.exponent.get_str() + " too large to evaluate");
    acc *= pow(f.base, f.exponent.get_ui());
  }
  return acc;
}

template <class Value>
Value product_squared_distinct(const BasicChordSpectrum<Value>& s) {
  Value acc = one_like(s.entries.front().d_squared);
  for (const auto& e : s.entries) acc *= e.d_squared;
  return acc;
}

/// sum_{i<k} N_i cos(theta_i): the diameter entry is left out.
template <class Value>
Value weighted_cos_sum_without_last(const BasicChordSpectrum<Value>& s) {
  Value acc = one_like(s.entries.front().d_squared) - one_like(s.entries.front().d_squared);
  for (std::size_t i = 0; i + 1 < s.entries.size(); ++i) {
    Value term = s.entries[i].cos_theta;
    if constexpr (std::is_same_v<Value, QuadExt>) {
      term *= QuadExt(BigRational(s.entries[i].total));
    } else {
      term *= BigRational(s.entries[i].total);
    }
    acc += term;
  }
  return acc;
}

/// sum_{i<k} cos(theta_i).
template <class Value>
Value cos_sum_without_last(const BasicChordSpectrum<Value>& s) {
  Value acc = one_like(s.entries.front().d_squared) - one_like(s.entries.front().d_squared);
  for (std::size_t i = 0; i + 1 < s.entries.size(); ++i) acc += s.entries[i].cos_theta;
  return acc;
}

// ---------------------------------------------------------------------------
// Prime factorization of rationals

/// Exponent map of q > 0 over primes <= bound; denominator primes get
/// negative exponents. Anything left over is reported as not smooth.
inline std::map<long, long> prime_factor_rational(const BigRational& q, long bound = 1000) {
  if (q <= 0) throw std::domain_error("prime_factor_rational needs a positive rational");
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  std::map<long, long> out;
  BigInt num = q.get_num(), den = q.get_den();
  for (long p = 2; p <= bound; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    for (long m = p * p; m <= bound; m += p) composite[static_cast<std::size_t>(m)] = true;
    const BigInt bp(p);
    const long up = static_cast<long>(mpz_remove(num.get_mpz_t(), num.get_mpz_t(), bp.get_mpz_t()));
    const long down = static_cast<long>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), bp.get_mpz_t()));
    if (up - down != 0) out[p] = up - down;
  }
  if (num != 1 || den != 1)
    throw NotSmoothError("rational has a prime factor above " + std::to_string(bound));
  return out;
}

}  // namespace polychord
