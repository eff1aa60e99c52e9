#pragma once

/**
 * @file catalog.hpp
 * @brief The regular convex polytopes: identity, face counts, edge lengths,
 *        exact vertex coordinates and reciprocal pairs.
 *
 * Coordinates are exact in Q(sqrt5) and carry their own scale: a VertexSet
 * declares the common squared norm of its points instead of being normalized
 * to the unit sphere. Squared chords are divided by that value later, which
 * keeps every coordinate free of square roots.
 *
 * Polygons and simplices have no coordinates here. Polygons are handled in
 * Q(zeta_E) (see cyclotomic.hpp) and simplices through their Gram matrix.
 */

#include "polychord/exactnum.hpp"
#include "polychord/pairwise.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polychord {

enum class PolytopeKind {
  polygon,
  simplex,
  crosspolytope,
  cube,
  icosahedron,
  dodecahedron,
  cell24,
  cell600,
  cell120,
};

/// Size limits applied when a spec is parsed or constructed.
struct CatalogLimits {
  long max_dimension = 64;     // families
  long max_polygon_edges = 1000;  // cyclotomic cap
};

struct SpecError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A failed coordinate gate; `gate` is one of count, norm, distinct, edges.
struct ValidationError : std::runtime_error {
  ValidationError(std::string gate_name, const std::string& what)
      : std::runtime_error("validation gate '" + gate_name + "' failed: " + what),
        gate(std::move(gate_name)) {}
  std::string gate;
};

class PolytopeSpec {
 public:
  static PolytopeSpec polygon(long edges) { return checked({PolytopeKind::polygon, edges}); }
  static PolytopeSpec simplex(long n) { return checked({PolytopeKind::simplex, n}); }
  static PolytopeSpec crosspolytope(long n) { return checked({PolytopeKind::crosspolytope, n}); }
  static PolytopeSpec cube(long n) { return checked({PolytopeKind::cube, n}); }
  static PolytopeSpec icosahedron() { return {PolytopeKind::icosahedron, 3}; }
  static PolytopeSpec dodecahedron() { return {PolytopeKind::dodecahedron, 3}; }
  static PolytopeSpec cell24() { return {PolytopeKind::cell24, 4}; }
  static PolytopeSpec cell600() { return {PolytopeKind::cell600, 4}; }
  static PolytopeSpec cell120() { return {PolytopeKind::cell120, 4}; }

  PolytopeKind kind() const { return kind_; }
  /// Number of polygon edges, or the family dimension.
  long parameter() const { return param_; }
  long dimension() const {
    switch (kind_) {
      case PolytopeKind::polygon: return 2;
      case PolytopeKind::simplex:
      case PolytopeKind::crosspolytope:
      case PolytopeKind::cube: return param_;
      case PolytopeKind::icosahedron:
      case PolytopeKind::dodecahedron: return 3;
      default: return 4;
    }
  }
  bool is_polygon() const { return kind_ == PolytopeKind::polygon; }
  bool is_simplex() const { return kind_ == PolytopeKind::simplex; }

  /// Every regular polytope is centrally symmetric except odd polygons and simplices.
  bool centrally_symmetric() const {
    if (is_simplex()) return false;
    if (is_polygon()) return param_ % 2 == 0;
    return true;
  }

  /// Canonical CLI name, e.g. "polygon:7", "cube:4", "600-cell".
  std::string name() const {
    switch (kind_) {
      case PolytopeKind::polygon: return "polygon:" + std::to_string(param_);
      case PolytopeKind::simplex: return "simplex:" + std::to_string(param_);
      case PolytopeKind::crosspolytope: return "crosspolytope:" + std::to_string(param_);
      case PolytopeKind::cube: return "cube:" + std::to_string(param_);
      case PolytopeKind::icosahedron: return "icosahedron";
      case PolytopeKind::dodecahedron: return "dodecahedron";
      case PolytopeKind::cell24: return "24-cell";
      case PolytopeKind::cell600: return "600-cell";
      case PolytopeKind::cell120: return "120-cell";
    }
    return {};
  }

  /// Throws SpecError when the spec exceeds the given limits.
  void check_limits(const CatalogLimits& limits) const {
    if (is_polygon() && param_ > limits.max_polygon_edges)
      throw SpecError(name() + ": polygon edge count exceeds cap " +
                      std::to_string(limits.max_polygon_edges));
    if ((kind_ == PolytopeKind::simplex || kind_ == PolytopeKind::crosspolytope ||
         kind_ == PolytopeKind::cube) &&
        param_ > limits.max_dimension)
      throw SpecError(name() + ": dimension exceeds cap " + std::to_string(limits.max_dimension));
  }

  friend bool operator==(const PolytopeSpec&, const PolytopeSpec&) = default;
  friend auto operator<=>(const PolytopeSpec&, const PolytopeSpec&) = default;

 private:
  PolytopeSpec(PolytopeKind kind, long param) : kind_(kind), param_(param) {}

  static PolytopeSpec checked(PolytopeSpec s) {
    if (s.is_polygon() && s.param_ < 3) throw SpecError("polygon needs at least 3 edges");
    if (!s.is_polygon() && s.param_ < 2) throw SpecError(s.name() + ": dimension must be >= 2");
    return s;
  }

  PolytopeKind kind_;
  long param_;
};

/// Parses `polygon:E`, `simplex:n`, `crosspolytope:n`, `cube:n`, `icosahedron`,
/// `dodecahedron`, `24-cell`, `600-cell`, `120-cell`.
inline PolytopeSpec parse_polytope(const std::string& text, const CatalogLimits& limits = {}) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  auto number = [&]() -> long {
    if (colon == std::string::npos) throw SpecError("'" + text + "' needs a parameter, e.g. " + head + ":3");
    const std::string tail = text.substr(colon + 1);
    if (tail.empty() || !std::all_of(tail.begin(), tail.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        tail.size() > 9)
      throw SpecError("bad parameter in '" + text + "'");
    return std::stol(tail);
  };
  auto plain = [&](PolytopeSpec s) {
    if (colon != std::string::npos) throw SpecError("'" + head + "' takes no parameter");
    return s;
  };
  PolytopeSpec spec = [&] {
    if (head == "polygon") return PolytopeSpec::polygon(number());
    if (head == "simplex") return PolytopeSpec::simplex(number());
    if (head == "crosspolytope") return PolytopeSpec::crosspolytope(number());
    if (head == "cube") return PolytopeSpec::cube(number());
    if (head == "icosahedron") return plain(PolytopeSpec::icosahedron());
    if (head == "dodecahedron") return plain(PolytopeSpec::dodecahedron());
    if (head == "24-cell") return plain(PolytopeSpec::cell24());
    if (head == "600-cell") return plain(PolytopeSpec::cell600());
    if (head == "120-cell") return plain(PolytopeSpec::cell120());
    throw SpecError("unknown polytope '" + text + "'");
  }();
  spec.check_limits(limits);
  return spec;
}

// ---------------------------------------------------------------------------
// Face counts

struct FaceVector {
  std::vector<BigInt> counts;  // index j = number of j-faces, j = 0 .. n-1

  const BigInt& vertices() const { return counts.front(); }
  const BigInt& edges() const { return counts.at(1); }
  const BigInt& ridges() const { return counts.at(counts.size() - 2); }
  const BigInt& facets() const { return counts.back(); }
};

inline BigInt binomial(long n, long k) {
  BigInt r;
  if (k < 0 || k > n) return r = 0;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline FaceVector face_counts(const PolytopeSpec& spec) {
  const long n = spec.dimension();
  FaceVector fv;
  auto fixed = [&](std::initializer_list<long> c) {
    for (long x : c) fv.counts.emplace_back(x);
  };
  switch (spec.kind()) {
    case PolytopeKind::polygon: fixed({spec.parameter(), spec.parameter()}); break;
    case PolytopeKind::simplex:
      for (long j = 0; j < n; ++j) fv.counts.push_back(binomial(n + 1, j + 1));
      break;
    case PolytopeKind::crosspolytope:
      for (long j = 0; j < n; ++j) fv.counts.push_back(pow(BigInt(2), j + 1) * binomial(n, j + 1));
      break;
    case PolytopeKind::cube:
      for (long j = 0; j < n; ++j) fv.counts.push_back(pow(BigInt(2), n - j) * binomial(n, j));
      break;
    case PolytopeKind::icosahedron: fixed({12, 30, 20}); break;
    case PolytopeKind::dodecahedron: fixed({20, 30, 12}); break;
    case PolytopeKind::cell24: fixed({24, 96, 96, 24}); break;
    case PolytopeKind::cell600: fixed({120, 720, 1200, 600}); break;
    case PolytopeKind::cell120: fixed({600, 1200, 720, 120}); break;
  }
  return fv;
}

// ---------------------------------------------------------------------------
// Reciprocation

inline PolytopeSpec dual(const PolytopeSpec& spec) {
  switch (spec.kind()) {
    case PolytopeKind::crosspolytope: return PolytopeSpec::cube(spec.parameter());
    case PolytopeKind::cube: return PolytopeSpec::crosspolytope(spec.parameter());
    case PolytopeKind::icosahedron: return PolytopeSpec::dodecahedron();
    case PolytopeKind::dodecahedron: return PolytopeSpec::icosahedron();
    case PolytopeKind::cell600: return PolytopeSpec::cell120();
    case PolytopeKind::cell120: return PolytopeSpec::cell600();
    default: return spec;  // polygons, simplices, 24-cell
  }
}

// ---------------------------------------------------------------------------
// Edge length

/// x = (circumradius / half-edge) enters only squared, which stays in Q(sqrt5).
struct EdgeLengthRecord {
  QuadExt x_squared;
  QuadExt e_squared;  // = 4 / x^2, for the unit circumsphere
};

/// Squared edge length of the polytope inscribed in the unit sphere.
/// Polygons are not covered: their edges live in Q(zeta_E).
inline EdgeLengthRecord edge_length_squared(const PolytopeSpec& spec) {
  const long n = spec.dimension();
  const QuadExt r5 = QuadExt::root5();
  QuadExt x2;
  switch (spec.kind()) {
    case PolytopeKind::polygon:
      throw SpecError("edge_length_squared: polygon edges are not in Q(sqrt5); use chord_sq_polygon");
    case PolytopeKind::simplex: x2 = QuadExt(make_rational(2 * n, n + 1)); break;
    case PolytopeKind::crosspolytope: x2 = QuadExt(2); break;
    case PolytopeKind::cube: x2 = QuadExt(n); break;
    case PolytopeKind::icosahedron: x2 = QuadExt::golden() * r5; break;                        // tau sqrt5
    case PolytopeKind::dodecahedron: x2 = 3 * QuadExt::golden() * QuadExt::golden(); break;  // 3 tau^2
    case PolytopeKind::cell24: x2 = QuadExt(4); break;
    case PolytopeKind::cell600: x2 = 4 * pow(QuadExt::golden(), 2); break;                   // (2 tau)^2
    case PolytopeKind::cell120: x2 = 8 * pow(QuadExt::golden(), 4); break;                   // (2 sqrt2 tau^2)^2
  }
  QuadExt e2 = QuadExt(4) / x2;
  return {x2, e2};
}

// ---------------------------------------------------------------------------
// Coordinates

struct VertexSet {
  long dimension = 0;
  std::vector<Point> points;
  QuadExt squared_circumradius;
};

/// What validate() measured.
struct ValidationReport {
  std::size_t point_count = 0;
  BigInt edge_pairs;
  QuadExt min_squared_distance;  // normalized to the unit sphere
};

enum class PermutationMode { all, even };

namespace detail {

inline bool is_even_permutation(const std::vector<std::size_t>& p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

struct PointLess {
  bool operator()(const Point& x, const Point& y) const {
    for (std::size_t i = 0; i < x.size(); ++i) {
      const auto& xa = x[i].rational_part();
      const auto& ya = y[i].rational_part();
      if (xa != ya) return xa < ya;
      const auto& xb = x[i].root5_part();
      const auto& yb = y[i].root5_part();
      if (xb != yb) return xb < yb;
    }
    return false;
  }
};

using PointSet = std::set<Point, PointLess>;

/// Inserts every sign choice of every (even) permutation of `base`.
inline void add_signed_permutations(PointSet& out, const Point& base, PermutationMode mode) {
  std::vector<std::size_t> idx(base.size());
  std::iota(idx.begin(), idx.end(), 0);
  do {
    if (mode == PermutationMode::even && !is_even_permutation(idx)) continue;
    Point p(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) p[i] = base[idx[i]];
    std::vector<std::size_t> nonzero;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (!p[i].is_zero()) nonzero.push_back(i);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nonzero.size()); ++mask) {
      Point q = p;
      for (std::size_t b = 0; b < nonzero.size(); ++b)
        if (mask >> b & 1) q[nonzero[b]] = -q[nonzero[b]];
      out.insert(std::move(q));
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
}

inline std::vector<Point> to_vector(PointSet s) { return {s.begin(), s.end()}; }

inline QuadExt q(long a, long b = 0, long den = 1) {
  return {BigRational(a, den), BigRational(b, den)};
}

}  // namespace detail

/// Coordinate generation caps: cubes above this dimension use closed forms only.
inline constexpr long kMaxCubeCoordinateDimension = 16;

/// Exact coordinates without running the validation gates.
inline VertexSet generate_vertices(const PolytopeSpec& spec) {
  using detail::q;
  const QuadExt tau = QuadExt::golden();
  const QuadExt tau_inv = tau - 1;          // tau^-1 = tau - 1
  const QuadExt tau2 = tau + 1;             // tau^2 = tau + 1
  const QuadExt tau_inv2 = 2 - tau;         // tau^-2 = 2 - tau
  const QuadExt half = q(1, 0, 2);
  detail::PointSet pts;
  VertexSet vs;
  vs.dimension = spec.dimension();
  switch (spec.kind()) {
    case PolytopeKind::polygon:
      throw SpecError("polygon vertices live in Q(zeta_E); use the cyclotomic path");
    case PolytopeKind::simplex:
      throw SpecError("simplices are described by simplex_gram, not coordinates");
    case PolytopeKind::crosspolytope: {
      const long n = spec.parameter();
      for (long i = 0; i < n; ++i)
        for (long s : {1, -1}) {
          Point p(static_cast<std::size_t>(n));
          p[static_cast<std::size_t>(i)] = s;
          vs.points.push_back(std::move(p));
        }
      vs.squared_circumradius = 1;
      return vs;
    }
    case PolytopeKind::cube: {
      const long n = spec.parameter();
      if (n > kMaxCubeCoordinateDimension)
        throw SpecError(spec.name() + ": too many vertices for explicit coordinates");
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Point p(static_cast<std::size_t>(n));
        for (long i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = (mask >> i & 1) ? -1 : 1;
        vs.points.push_back(std::move(p));
      }
      vs.squared_circumradius = n;
      return vs;
    }
    case PolytopeKind::icosahedron:
      detail::add_signed_permutations(pts, {0, tau, 1}, PermutationMode::even);
      vs.squared_circumradius = tau + 2;
      break;
    case PolytopeKind::dodecahedron:
      detail::add_signed_permutations(pts, {0, tau_inv, tau}, PermutationMode::even);
      detail::add_signed_permutations(pts, {1, 1, 1}, PermutationMode::all);
      vs.squared_circumradius = 3;
      break;
    case PolytopeKind::cell24:
      detail::add_signed_permutations(pts, {1, 1, 0, 0}, PermutationMode::all);
      vs.squared_circumradius = 2;
      break;
    case PolytopeKind::cell600:
      detail::add_signed_permutations(pts, {1, 0, 0, 0}, PermutationMode::all);
      detail::add_signed_permutations(pts, {half, half, half, half}, PermutationMode::all);
      detail::add_signed_permutations(pts, {tau * half, half, tau_inv * half, 0}, PermutationMode::even);
      vs.squared_circumradius = 1;
      break;
    case PolytopeKind::cell120: {
      const QuadExt r5 = QuadExt::root5();
      detail::add_signed_permutations(pts, {0, 0, 2, 2}, PermutationMode::all);
      detail::add_signed_permutations(pts, {1, 1, 1, r5}, PermutationMode::all);
      detail::add_signed_permutations(pts, {tau_inv2, tau, tau, tau}, PermutationMode::all);
      detail::add_signed_permutations(pts, {tau_inv, tau_inv, tau_inv, tau2}, PermutationMode::all);
      detail::add_signed_permutations(pts, {0, tau_inv2, 1, tau2}, PermutationMode::even);
      detail::add_signed_permutations(pts, {0, tau_inv, tau, r5}, PermutationMode::even);
      detail::add_signed_permutations(pts, {tau_inv, 1, tau, 2}, PermutationMode::even);
      vs.squared_circumradius = 8;
      break;
    }
  }
  vs.points = detail::to_vector(std::move(pts));
  return vs;
}

/// Runs the count, norm, distinct and edges gates against pre-grouped
/// pairwise distances of `vs`.
inline ValidationReport validate_groups(const VertexSet& vs, const FaceVector& fv,
                                        const std::vector<DistanceGroup>& groups) {
  ValidationReport rep;
  rep.point_count = vs.points.size();
  if (BigInt(static_cast<unsigned long>(vs.points.size())) != fv.vertices())
    throw ValidationError("count", std::to_string(vs.points.size()) + " points, expected " +
                                       fv.vertices().get_str());
  for (std::size_t i = 0; i < vs.points.size(); ++i) {
    const Point& p = vs.points[i];
    if (static_cast<long>(p.size()) != vs.dimension)
      throw ValidationError("norm", "point " + std::to_string(i) + " has wrong dimension");
    QuadExt s;
    for (const auto& c : p) s += c * c;
    if (s != vs.squared_circumradius)
      throw ValidationError("norm", "point " + std::to_string(i) + " has squared norm " + to_string(s) +
                                        ", expected " + to_string(vs.squared_circumradius));
  }
  if (groups.empty()) throw ValidationError("edges", "fewer than two points");
  if (groups.front().squared.is_zero())
    throw ValidationError("distinct", groups.front().pairs.get_str() + " coincident pairs");
  rep.edge_pairs = groups.front().pairs;
  rep.min_squared_distance = groups.front().squared / vs.squared_circumradius;
  if (rep.edge_pairs != fv.edges())
    throw ValidationError("edges", rep.edge_pairs.get_str() + " minimal pairs, expected " +
                                       fv.edges().get_str());
  return rep;
}

inline ValidationReport validate(const VertexSet& vs, const FaceVector& fv, unsigned threads = 1) {
  return validate_groups(vs, fv, group_pairwise_distances(vs.points, threads));
}

/// Exact coordinates that passed every validation gate.
inline VertexSet vertices(const PolytopeSpec& spec) {
  VertexSet vs = generate_vertices(spec);
  validate(vs, face_counts(spec));
  return vs;
}

/// Unit vectors to the n+1 vertices of a regular n-simplex have pairwise dot
/// product -1/n, so every squared chord is 2 - 2(-1/n) = 2(n+1)/n.
struct SimplexGram {
  long vertex_count = 0;
  BigRational offdiag_dot;
  BigRational chord_squared;
};

inline SimplexGram simplex_gram(long n) {
  if (n < 2) throw SpecError("simplex_gram: n must be >= 2");
  SimplexGram g;
  g.vertex_count = n + 1;
  g.offdiag_dot = make_rational(-1, n);
  g.chord_squared = 2 - 2 * g.offdiag_dot;
  return g;
}

}  // namespace polychord
