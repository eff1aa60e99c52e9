#pragma once

/**
 * @file theorems.hpp
 * @brief One named check per chord law. Each check recomputes both sides
 *        exactly and returns a Verdict made of individually judged clauses.
 *
 * Stable check names: fact1, fact2, sums3d, xpoly-product, c24-product,
 * congruences3d, fact4, polygon, duality. `fact2-integral` is a deliberately
 * naive claim (every distinct sum is an integer) kept as a negative control.
 * Open cases are handled by explore_open_products(), which reports and never
 * judges.
 */

#include "polychord/catalog.hpp"
#include "polychord/cyclotomic.hpp"
#include "polychord/exactnum.hpp"
#include "polychord/spectrum.hpp"

#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polychord {

struct Clause {
  std::string name;
  std::string claimed;
  std::string computed;
  bool pass = false;
};

struct Verdict {
  std::string check;
  std::string polytope;
  std::vector<Clause> clauses;
  std::string detail;

  bool pass() const {
    if (clauses.empty()) return false;
    for (const auto& c : clauses)
      if (!c.pass) return false;
    return true;
  }
};

/// Exponent data for one nu^a / eps^b representation of a 3-polytope product.
struct CongruenceWitness {
  long nu = 2;
  long epsilon = 0;
  long q = 0;           // family index; only the octahedron has more than one
  BigInt a, b;          // exponents of the full product
  BigInt c, d;          // exponents of the distinct product
  long m = 0;           // 1 or 2 where a = cVm applies, else 0
  long gcd_value = 0;   // E / (E, V)
};

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"fact1",         "fact2", "sums3d", "xpoly-product",
                                              "c24-product",   "congruences3d", "fact4", "polygon",
                                              "duality",       "fact2-integral"};
  return names;
}

namespace detail {

inline std::string str(const QuadExt& x) { return to_string(x); }
inline std::string str(const CycloElement& x) { return to_string(x); }
inline std::string str(const BigRational& x) { return to_string(x); }
inline std::string str(const BigInt& x) { return x.get_str(); }
inline std::string str(long x) { return std::to_string(x); }

template <class T>
Clause equal_clause(std::string name, const T& claimed, const T& computed) {
  return {std::move(name), str(claimed), str(computed), claimed == computed};
}

inline Clause bool_clause(std::string name, std::string claimed, std::string computed, bool ok) {
  return {std::move(name), std::move(claimed), std::move(computed), ok};
}

/// Everything the checks read from a spectrum, independent of its field.
struct SpectrumFacts {
  BigInt V;
  long k = 0;
  std::optional<BigRational> sum;
  std::string sum_text;
  std::optional<BigRational> distinct_sum;
  std::string distinct_sum_text;
  std::optional<BigRational> distinct_product;
  std::string distinct_product_text;
  std::vector<std::string> d_squared_text;
  std::vector<BigInt> totals;
  std::vector<long> per_vertex;
  bool last_is_diameter = false;  // last entry is (4, V/2, 1)
  bool weighted_cos_zero = false;
  bool cos_zero = false;
};

template <class Value>
SpectrumFacts gather(const BasicChordSpectrum<Value>& s) {
  SpectrumFacts f;
  f.V = s.vertex_count;
  f.k = static_cast<long>(s.distinct());
  const Value sum = sum_squared_value(s);
  f.sum = as_rational(sum);
  f.sum_text = str(sum);
  const Value ds = sum_squared_distinct(s);
  f.distinct_sum = as_rational(ds);
  f.distinct_sum_text = str(ds);
  const Value dp = product_squared_distinct(s);
  f.distinct_product = as_rational(dp);
  f.distinct_product_text = str(dp);
  for (const auto& e : s.entries) {
    f.d_squared_text.push_back(str(e.d_squared));
    f.totals.push_back(e.total);
    f.per_vertex.push_back(e.per_vertex);
  }
  const auto& last = s.entries.back();
  const auto last_d2 = as_rational(last.d_squared);
  f.last_is_diameter = last_d2 && *last_d2 == 4 && last.per_vertex == 1 && 2 * last.total == f.V;
  const auto wc = as_rational(weighted_cos_sum_without_last(s));
  f.weighted_cos_zero = wc && *wc == 0;
  const auto cs = as_rational(cos_sum_without_last(s));
  f.cos_zero = cs && *cs == 0;
  return f;
}

inline SpectrumFacts gather(const AnySpectrum& s) {
  return std::visit([](const auto& x) { return gather(x); }, s);
}

inline Clause sum_clause(std::string name, const BigRational& want, const SpectrumFacts& f) {
  return {std::move(name), str(want), f.sum_text, f.sum && *f.sum == want};
}

/// Exact product of all squared chords, reduced to a rational when possible.
inline std::pair<std::optional<BigRational>, std::string> evaluated_product(const AnySpectrum& s) {
  return std::visit(
      [](const auto& x) -> std::pair<std::optional<BigRational>, std::string> {
        const auto v = evaluate_product(product_squared(x));
        return {as_rational(v), str(v)};
      },
      s);
}

inline long to_long(const BigInt& z) { return z.get_si(); }

/// Largest t with g^t == x, if x is a nonnegative integral power of g.
inline std::optional<BigInt> integer_log(BigRational x, long g) {
  if (x <= 0 || g < 2) return std::nullopt;
  if (!is_integer(x)) return std::nullopt;
  BigInt z = x.get_num();
  BigInt t = 0;
  while (z % g == 0) {
    z /= g;
    t += 1;
  }
  if (z != 1) return std::nullopt;
  return t;
}

inline std::string power_text(long base, const BigInt& exponent) {
  return std::to_string(base) + "^" + exponent.get_str();
}

inline BigRational ratio_of_powers(long num_base, const BigInt& a, long den_base, const BigInt& b) {
  return make_rational(pow(BigInt(num_base), a.get_ui()), pow(BigInt(den_base), b.get_ui()));
}

inline BigInt mod(const BigInt& x, const BigInt& m) {
  BigInt r = x % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Spectrum cache

/// Memoizes spectra by spec; safe for concurrent use.
class SpectrumCache {
 public:
  explicit SpectrumCache(SpectrumOptions opts = {}) : opts_(std::move(opts)) {}

  const AnySpectrum& get(const PolytopeSpec& spec) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (auto it = cache_.find(spec); it != cache_.end()) return it->second;
    }
    AnySpectrum s = compute_spectrum(spec, opts_);
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.emplace(spec, std::move(s)).first->second;
  }

  const SpectrumOptions& options() const { return opts_; }

 private:
  SpectrumOptions opts_;
  std::mutex mu_;
  std::map<PolytopeSpec, AnySpectrum> cache_;
};

// ---------------------------------------------------------------------------
// Incidence data for the 3-polytopes

/// Edges incident to any vertex (nu, vertices per edge, is always 2).
inline long edges_per_vertex(const PolytopeSpec& spec) {
  switch (spec.kind()) {
    case PolytopeKind::simplex: return 3;
    case PolytopeKind::crosspolytope: return 4;
    case PolytopeKind::cube: return 3;
    case PolytopeKind::icosahedron: return 5;
    case PolytopeKind::dodecahedron: return 3;
    default: throw SpecError("edges_per_vertex: only the five 3-polytopes are tabulated");
  }
}

inline bool is_three_polytope(const PolytopeSpec& spec) { return spec.dimension() == 3; }

// ---------------------------------------------------------------------------
// Applicability

inline bool check_applies(std::string_view name, const PolytopeSpec& spec) {
  if (name == "fact1" || name == "fact2" || name == "fact2-integral" || name == "duality") return true;
  if (name == "sums3d" || name == "congruences3d") return is_three_polytope(spec);
  if (name == "xpoly-product") return spec.kind() == PolytopeKind::crosspolytope;
  if (name == "c24-product") return spec.kind() == PolytopeKind::cell24;
  if (name == "fact4")
    return spec.is_polygon() || spec.kind() == PolytopeKind::crosspolytope ||
           spec.kind() == PolytopeKind::cell24 || is_three_polytope(spec);
  if (name == "polygon") return spec.is_polygon();
  return false;
}

// ---------------------------------------------------------------------------
// Individual checks

/// Sum of all squared chords equals V^2, with the counting lemmas it rests
/// on: sum N_i = V(V-1)/2, N_i = m_i V / 2, sum m_i = V - 1, and for centrally
/// symmetric polytopes a single diameter per vertex and sum N_i cos = 0.
inline Verdict check_fact1(const PolytopeSpec& spec, const AnySpectrum& s) {
  using namespace detail;
  const SpectrumFacts f = gather(s);
  Verdict v{"fact1", spec.name(), {}, {}};
  v.clauses.push_back(sum_clause("sum of squared chords = V^2", BigRational(f.V * f.V), f));
  BigInt total = 0;
  long msum = 0;
  bool lemma22 = true;
  for (std::size_t i = 0; i < f.totals.size(); ++i) {
    total += f.totals[i];
    msum += f.per_vertex[i];
    if (2 * f.totals[i] != f.per_vertex[i] * f.V) lemma22 = false;
  }
  v.clauses.push_back(equal_clause("total chords = V(V-1)/2", BigInt(f.V * (f.V - 1) / 2), total));
  v.clauses.push_back(bool_clause("N_i = m_i V / 2 for every entry", "true", lemma22 ? "true" : "false", lemma22));
  v.clauses.push_back(equal_clause("sum of m_i = V - 1", BigInt(f.V - 1), BigInt(msum)));
  if (spec.centrally_symmetric()) {
    v.clauses.push_back(bool_clause("longest entry is (4, V/2, 1)", "true",
                                    f.last_is_diameter ? "true" : "false", f.last_is_diameter));
    v.clauses.push_back(bool_clause("sum_{i<k} N_i cos(theta_i) = 0", "0",
                                    f.weighted_cos_zero ? "0" : "nonzero", f.weighted_cos_zero));
  }
  return v;
}

/// Distinct sum: 2(n+1)/n and non-integral for simplices of dimension >= 3,
/// otherwise 2k+1 for odd E and 2k+2 for even E.
inline Verdict check_fact2(const PolytopeSpec& spec, const AnySpectrum& s) {
  using namespace detail;
  const SpectrumFacts f = gather(s);
  const FaceVector fv = face_counts(spec);
  Verdict v{"fact2", spec.name(), {}, {}};
  if (!f.distinct_sum) {
    v.clauses.push_back(bool_clause("distinct sum is rational", "rational", f.distinct_sum_text, false));
    return v;
  }
  const BigRational ds = *f.distinct_sum;
  if (spec.is_simplex() && spec.dimension() >= 3) {
    const long n = spec.dimension();
    v.clauses.push_back(equal_clause("distinct sum = 2(n+1)/n", make_rational(2 * (n + 1), n), ds));
    v.clauses.push_back(bool_clause("distinct sum is non-integral", "non-integral",
                                    is_integer(ds) ? "integer" : "non-integral", !is_integer(ds)));
    return v;
  }
  const bool odd = fv.edges() % 2 != 0;
  v.clauses.push_back(bool_clause("distinct sum is an integer", "integer", str(ds), is_integer(ds)));
  if (odd) {
    v.clauses.push_back(equal_clause("distinct sum = 2k+1", BigRational(2 * f.k + 1), ds));
    v.clauses.push_back(equal_clause("distinct sum = E", BigRational(fv.edges()), ds));
  } else {
    v.clauses.push_back(equal_clause("distinct sum = 2k+2", BigRational(2 * f.k + 2), ds));
  }
  if (spec.centrally_symmetric())
    v.clauses.push_back(bool_clause("sum_{i<k} cos(theta_i) = 0", "0", f.cos_zero ? "0" : "nonzero", f.cos_zero));
  return v;
}

/// Naive claim that every distinct sum is an integer. Fails for simplices
/// of dimension >= 3; used as a negative control.
inline Verdict check_fact2_integral(const PolytopeSpec& spec, const AnySpectrum& s) {
  using namespace detail;
  const SpectrumFacts f = gather(s);
  Verdict v{"fact2-integral", spec.name(), {}, "negative control: asserts integrality unconditionally"};
  const bool ok = f.distinct_sum && is_integer(*f.distinct_sum);
  v.clauses.push_back(bool_clause("distinct sum is an integer", "integer", f.distinct_sum_text, ok));
  return v;
}

inline Verdict check_3d_sums(const PolytopeSpec& spec, const AnySpectrum& s) {
  using namespace detail;
  if (!is_three_polytope(spec)) throw SpecError("sums3d applies to 3-polytopes only");
  const SpectrumFacts f = gather(s);
  Verdict v{"sums3d", spec.name(), {}, {}};
  switch (spec.kind()) {
    case PolytopeKind::simplex:
      v.clauses.push_back(bool_clause("distinct sum is rational", "rational", f.distinct_sum_text,
                                      f.distinct_sum.has_value()));
      if (f.distinct_sum) v.clauses.push_back(equal_clause("distinct sum = 8/3", BigRational(8, 3), *f.distinct_sum));
      break;
    case PolytopeKind::crosspolytope:
    case PolytopeKind::cube:
      v.clauses.push_back({"distinct sum = V", str(f.V), f.distinct_sum_text,
                           f.distinct_sum && *f.distinct_sum == BigRational(f.V)});
      break;
    default:
      v.clauses.push_back({"distinct sum = 2k+2", str(2 * f.k + 2), f.distinct_sum_text,
                           f.distinct_sum && *f.distinct_sum == 2 * f.k + 2});
      break;
  }
  return v;
}

/// Crosspolytope product of squared chords equals F^V = (2^n)^(2n).
inline Verdict check_crosspolytope_product(long n, const AnySpectrum& s) {
  using namespace detail;
  const PolytopeSpec spec = PolytopeSpec::crosspolytope(n);
  const FaceVector fv = face_counts(spec);
  Verdict v{"xpoly-product", spec.name(), {}, {}};
  const auto [value, text] = evaluated_product(s);
  const BigInt fv_pow = pow(fv.facets(), fv.vertices().get_ui());
  const BigInt closed = pow(pow(BigInt(2), static_cast<unsigned long>(n)), static_cast<unsigned long>(2 * n));
  v.clauses.push_back({"product = F^V", str(fv.facets()) + "^" + str(fv.vertices()), text,
                       value && *value == BigRational(fv_pow)});
  v.clauses.push_back({"product = (2^n)^(2n)", "(2^" + std::to_string(n) + ")^" + std::to_string(2 * n), text,
                       value && *value == BigRational(closed)});
  return v;
}

inline Verdict check_24cell_product(const AnySpectrum& s) {
  using namespace detail;
  const FaceVector fv = face_counts(PolytopeSpec::cell24());
  Verdict v{"c24-product", "24-cell", {}, {}};
  const auto [value, text] = evaluated_product(s);
  auto six_pow = [](const BigInt& e) { return BigRational(pow(BigInt(6), e.get_ui())); };
  v.clauses.push_back({"product = 6^E", "6^" + str(fv.edges()), text, value && *value == six_pow(fv.edges())});
  v.clauses.push_back({"product = 6^R", "6^" + str(fv.ridges()), text, value && *value == six_pow(fv.ridges())});
  v.clauses.push_back({"product = 6^96", "6^96", text, value && *value == six_pow(BigInt(96))});
  return v;
}

/// The exact product values for the five 3-polytopes.
inline BigRational reference_3d_product(const PolytopeSpec& spec) {
  auto r = [](unsigned long a2, unsigned long p, unsigned long bp) {
    return make_rational(pow(BigInt(2), a2), pow(BigInt(static_cast<long>(p)), bp));
  };
  switch (spec.kind()) {
    case PolytopeKind::simplex: return r(18, 3, 6);
    case PolytopeKind::crosspolytope: return r(18, 1, 0);
    case PolytopeKind::cube: return r(68, 3, 24);
    case PolytopeKind::icosahedron: return r(132, 5, 30);
    case PolytopeKind::dodecahedron: return r(440, 3, 180);
    default: throw SpecError("reference_3d_product: not a 3-polytope");
  }
}

/// The exact distinct-product values for the five 3-polytopes.
inline BigRational reference_3d_distinct_product(const PolytopeSpec& spec) {
  switch (spec.kind()) {
    case PolytopeKind::simplex: return {8, 3};
    case PolytopeKind::crosspolytope: return {8, 1};
    case PolytopeKind::cube: return {128, 9};
    case PolytopeKind::icosahedron: return {64, 5};
    case PolytopeKind::dodecahedron: return {2048, 81};
    default: throw SpecError("reference_3d_distinct_product: not a 3-polytope");
  }
}

/// Octahedron representations are checked for these family indices.
inline constexpr std::array<long, 3> kOctahedronFamily{0, 1, 2};

/// All nu^a / eps^b representations of the product of a 3-polytope (one, or
/// one per q for the octahedron) together with the matching nu^c / eps^d
/// representation of the distinct product.
inline std::vector<CongruenceWitness> congruence_witnesses(const PolytopeSpec& spec, const BigRational& product,
                                                           const BigRational& distinct_product) {
  using detail::to_long;
  const FaceVector fv = face_counts(spec);
  const long E = to_long(fv.edges()), V = to_long(fv.vertices());
  const long eps = edges_per_vertex(spec);
  const long g = E / std::gcd(E, V);
  const auto pf = prime_factor_rational(product);
  const auto df = prime_factor_rational(distinct_product);
  auto val = [](const std::map<long, long>& m, long p) {
    auto it = m.find(p);
    return it == m.end() ? 0L : it->second;
  };
  std::vector<CongruenceWitness> out;
  if (eps % 2 != 0) {
    // eps is an odd prime here, so both representations are unique.
    CongruenceWitness w;
    w.epsilon = eps;
    w.gcd_value = g;
    w.a = val(pf, 2);
    w.b = -val(pf, eps);
    w.c = val(df, 2);
    w.d = -val(df, eps);
    if (spec.kind() == PolytopeKind::dodecahedron) w.m = 2;
    out.push_back(w);
    return out;
  }
  // eps = 4 (octahedron): 2^alpha = 2^a / 4^b with E | b, so b = E q and
  // a = alpha + 2 E q. The distinct product follows a = c V (m = 1).
  const long alpha = val(pf, 2);
  const long delta = val(df, 2);
  for (long q : kOctahedronFamily) {
    CongruenceWitness w;
    w.epsilon = eps;
    w.gcd_value = g;
    w.q = q;
    w.b = E * q;
    w.a = alpha + 2 * E * q;
    w.m = 1;
    w.c = w.a / V;
    w.d = (w.c - delta) / 2;
    out.push_back(w);
  }
  return out;
}

/// Product of squared chords of a 3-polytope as nu^a / eps^b with E | b and
/// the class-wise congruences on a; eps replaceable by E/(E,V).
inline Verdict check_3d_product_congruences(const PolytopeSpec& spec, const AnySpectrum& s) {
  using namespace detail;
  if (!is_three_polytope(spec)) throw SpecError("congruences3d applies to 3-polytopes only");
  const FaceVector fv = face_counts(spec);
  const BigInt E = fv.edges(), V = fv.vertices();
  Verdict v{"congruences3d", spec.name(), {}, {}};
  const auto [value, text] = evaluated_product(s);
  const BigRational expected = reference_3d_product(spec);
  v.clauses.push_back({"product = " + str(expected), str(expected), text, value && *value == expected});
  if (!value) return v;
  const SpectrumFacts f = gather(s);
  if (!f.distinct_product) return v;

  const long eps = edges_per_vertex(spec);
  v.clauses.push_back(equal_clause("eps = 2E/V (edges per vertex)", BigInt(eps), BigInt(2 * E / V)));
  BigInt gcd_ev, lcm_ev;
  mpz_gcd(gcd_ev.get_mpz_t(), E.get_mpz_t(), V.get_mpz_t());
  mpz_lcm(lcm_ev.get_mpz_t(), E.get_mpz_t(), V.get_mpz_t());
  v.clauses.push_back(equal_clause("E/(E,V) = [E,V]/V", BigInt(lcm_ev / V), BigInt(E / gcd_ev)));

  for (const auto& w : congruence_witnesses(spec, *value, *f.distinct_product)) {
    const std::string tag = spec.kind() == PolytopeKind::crosspolytope ? " [q=" + std::to_string(w.q) + "]" : "";
    v.clauses.push_back({"product = nu^a/eps^b" + tag,
                         power_text(w.nu, w.a) + "/" + power_text(w.epsilon, w.b), str(*value),
                         ratio_of_powers(w.nu, w.a, w.epsilon, w.b) == *value});
    v.clauses.push_back({"a > 0 and b >= 0" + tag, "a > 0, b >= 0", "a=" + str(w.a) + ", b=" + str(w.b),
                         w.a > 0 && w.b >= 0});
    v.clauses.push_back({"E divides b" + tag, "b = 0 mod " + str(E), "b mod E = " + str(mod(w.b, E)),
                         mod(w.b, E) == 0});
    BigInt want_mod_e, want_mod_v;
    switch (spec.kind()) {
      case PolytopeKind::simplex: want_mod_e = 0; want_mod_v = mod(E, V); break;
      case PolytopeKind::crosspolytope:
      case PolytopeKind::cube: want_mod_e = mod(V, E); want_mod_v = mod(E, V); break;
      default: want_mod_e = mod(V, E); want_mod_v = 0; break;
    }
    v.clauses.push_back({"a mod E" + tag, str(want_mod_e), str(mod(w.a, E)), mod(w.a, E) == want_mod_e});
    v.clauses.push_back({"a mod V" + tag, str(want_mod_v), str(mod(w.a, V)), mod(w.a, V) == want_mod_v});
    // Replacing eps by E/(E,V) keeps a and needs a nonnegative integer exponent.
    const auto bg = integer_log(ratio_of_powers(w.nu, w.a, 1, BigInt(0)) / *value, w.gcd_value);
    v.clauses.push_back({"denominator base E/(E,V) = " + std::to_string(w.gcd_value) + tag,
                         power_text(w.nu, w.a) + "/" + std::to_string(w.gcd_value) + "^t",
                         bg ? "t = " + str(*bg) : "no integer t", bg.has_value()});
  }
  if (spec.kind() == PolytopeKind::crosspolytope)
    v.detail = "octahedron exponents are not unique: checked 2^(18+24q)/4^(12q) for q = 0, 1, 2; "
               "b = 0 at q = 0";
  return v;
}

/// Distinct products: 8 for crosspolytopes, F = V = 24 for the 24-cell, E
/// (odd) or an integer (even) for polygons, and the nu^c/eps^d relations for
/// the 3-polytopes.
inline Verdict check_fact4(const PolytopeSpec& spec, const AnySpectrum& s) {
  using namespace detail;
  if (!check_applies("fact4", spec)) throw SpecError("fact4 does not apply to " + spec.name());
  const SpectrumFacts f = gather(s);
  const FaceVector fv = face_counts(spec);
  Verdict v{"fact4", spec.name(), {}, {}};
  const auto& dp = f.distinct_product;
  auto is = [&](const BigRational& want) { return dp && *dp == want; };

  if (spec.kind() == PolytopeKind::crosspolytope && spec.dimension() != 3) {
    v.clauses.push_back({"distinct product = 8", "8", f.distinct_product_text, is(8)});
  } else if (spec.kind() == PolytopeKind::cell24) {
    v.clauses.push_back({"distinct product = 24", "24", f.distinct_product_text, is(24)});
    v.clauses.push_back({"distinct product = F", str(fv.facets()), f.distinct_product_text, is(BigRational(fv.facets()))});
    v.clauses.push_back({"distinct product = V", str(fv.vertices()), f.distinct_product_text,
                         is(BigRational(fv.vertices()))});
  } else if (spec.is_polygon()) {
    const long e = spec.parameter();
    if (e % 2 != 0) {
      v.clauses.push_back({"distinct product = E", std::to_string(e), f.distinct_product_text, is(e)});
    } else {
      v.clauses.push_back({"distinct product is an integer", "integer", f.distinct_product_text,
                           dp && is_integer(*dp)});
      v.detail = "even E: only integrality is claimed";
    }
  } else {
    // 3-polytopes
    const BigRational want = reference_3d_distinct_product(spec);
    v.clauses.push_back({"distinct product = " + str(want), str(want), f.distinct_product_text, is(want)});
    if (spec.kind() == PolytopeKind::crosspolytope)
      v.clauses.push_back({"distinct product = 8", "8", f.distinct_product_text, is(8)});
    const auto [value, text] = evaluated_product(s);
    if (!value || !dp) {
      v.clauses.push_back({"products are rational", "rational", text, false});
      return v;
    }
    const BigInt E = fv.edges(), V = fv.vertices();
    for (const auto& w : congruence_witnesses(spec, *value, *dp)) {
      const std::string tag = spec.kind() == PolytopeKind::crosspolytope ? " [q=" + std::to_string(w.q) + "]" : "";
      v.clauses.push_back({"distinct product = nu^c/eps^d" + tag,
                           power_text(w.nu, w.c) + "/" + power_text(w.epsilon, w.d), str(*dp),
                           w.d >= 0 && w.c >= 0 && ratio_of_powers(w.nu, w.c, w.epsilon, w.d) == *dp});
      switch (spec.kind()) {
        case PolytopeKind::simplex:
        case PolytopeKind::cube:
        case PolytopeKind::icosahedron:
          v.clauses.push_back({"b = dE", str(w.b), str(BigInt(w.d * E)), w.b == w.d * E});
          break;
        default:
          v.clauses.push_back({"a = cVm (m=" + std::to_string(w.m) + ")" + tag, str(w.a),
                               str(BigInt(w.c * V * w.m)), w.a == w.c * V * w.m});
          break;
      }
      const auto tg = integer_log(ratio_of_powers(w.nu, w.c, 1, BigInt(0)) / *dp, w.gcd_value);
      v.clauses.push_back({"denominator base E/(E,V) = " + std::to_string(w.gcd_value) + tag,
                           power_text(w.nu, w.c) + "/" + std::to_string(w.gcd_value) + "^t",
                           tg ? "t = " + str(*tg) : "no integer t", tg.has_value()});
    }
    if (spec.kind() == PolytopeKind::crosspolytope)
      v.detail = "octahedron: c = 3+4q, d = 2q depend on the chosen q (q = 0, 1, 2 checked); "
                 "no canonical q exists";
  }
  return v;
}

/// Sum, distinct sum, product and distinct product of a polygon through
/// Q(zeta_E), plus k = (E-1)/2 for odd E.
inline Verdict check_polygon_facts(long edges, const AnySpectrum& s) {
  using namespace detail;
  const SpectrumFacts f = gather(s);
  const PolytopeSpec spec = PolytopeSpec::polygon(edges);
  Verdict v{"polygon", spec.name(), {}, {}};
  v.clauses.push_back(sum_clause("sum = E^2", BigRational(edges * edges), f));
  const bool odd = edges % 2 != 0;
  if (odd) {
    v.clauses.push_back({"distinct sum = E", std::to_string(edges), f.distinct_sum_text,
                         f.distinct_sum && *f.distinct_sum == edges});
    v.clauses.push_back(equal_clause("k = (E-1)/2", (edges - 1) / 2, f.k));
  } else {
    v.clauses.push_back({"distinct sum is an integer", "integer", f.distinct_sum_text,
                         f.distinct_sum && is_integer(*f.distinct_sum)});
  }
  const auto [value, text] = evaluated_product(s);
  const BigInt ee = pow(BigInt(edges), static_cast<unsigned long>(edges));
  v.clauses.push_back({"product = E^E", std::to_string(edges) + "^" + std::to_string(edges), text,
                       value && *value == BigRational(ee)});
  if (odd) {
    v.clauses.push_back({"distinct product = E", std::to_string(edges), f.distinct_product_text,
                         f.distinct_product && *f.distinct_product == edges});
  } else {
    v.clauses.push_back({"distinct product is an integer", "integer", f.distinct_product_text,
                         f.distinct_product && is_integer(*f.distinct_product)});
    if (f.distinct_product) v.detail = "even E: distinct product " + str(*f.distinct_product);
  }
  return v;
}

/// Reciprocal-polytope corollaries: every statement about the chords of
/// P = dual(Q) is restated with Q's facet count.
inline Verdict check_duality_corollaries(const PolytopeSpec& q_spec, const AnySpectrum& dual_spectrum) {
  using namespace detail;
  const PolytopeSpec p_spec = dual(q_spec);
  const FaceVector qf = face_counts(q_spec), pf = face_counts(p_spec);
  const SpectrumFacts f = gather(dual_spectrum);
  Verdict v{"duality", q_spec.name(), {}, "chords of " + p_spec.name() + " are facet-center segments of " +
                                              q_spec.name()};
  v.clauses.push_back({"dual(dual(Q)) = Q", q_spec.name(), dual(p_spec).name(), dual(p_spec) == q_spec});
  bool reversed = qf.counts.size() == pf.counts.size();
  for (std::size_t j = 0; reversed && j < qf.counts.size(); ++j)
    reversed = qf.counts[j] == pf.counts[qf.counts.size() - 1 - j];
  if (q_spec.is_polygon()) reversed = qf.counts == pf.counts;
  v.clauses.push_back(bool_clause("face counts reverse under reciprocation", "true", reversed ? "true" : "false",
                                  reversed));
  const BigInt F = qf.facets();
  v.clauses.push_back(sum_clause("facet-center sum = F^2", BigRational(F * F), f));

  const auto& ds = f.distinct_sum;
  if (q_spec.is_simplex() && q_spec.dimension() >= 3) {
    v.clauses.push_back({"facet-center distinct sum non-integral rational", "non-integral", f.distinct_sum_text,
                         ds && !is_integer(*ds)});
  } else if (qf.edges() % 2 != 0) {
    v.clauses.push_back({"facet-center distinct sum = 2k+1", str(2 * f.k + 1), f.distinct_sum_text,
                         ds && *ds == 2 * f.k + 1});
  } else {
    v.clauses.push_back({"facet-center distinct sum = 2k+2", str(2 * f.k + 2), f.distinct_sum_text,
                         ds && *ds == 2 * f.k + 2});
  }
  if (is_three_polytope(q_spec)) {
    if (q_spec.kind() == PolytopeKind::simplex) {
      v.clauses.push_back({"3D facet-center distinct sum is rational", "rational", f.distinct_sum_text,
                           ds.has_value()});
    } else if (q_spec.kind() == PolytopeKind::crosspolytope || q_spec.kind() == PolytopeKind::cube) {
      v.clauses.push_back({"3D facet-center distinct sum = F", str(F), f.distinct_sum_text,
                           ds && *ds == BigRational(F)});
    } else {
      v.clauses.push_back({"3D facet-center distinct sum = 2k+2", str(2 * f.k + 2), f.distinct_sum_text,
                           ds && *ds == 2 * f.k + 2});
    }
  }
  if (q_spec.kind() == PolytopeKind::cube) {
    const auto [value, text] = evaluated_product(dual_spectrum);
    const BigInt vq = qf.vertices();
    v.clauses.push_back({"facet-center product = V^F", str(vq) + "^" + str(F), text,
                         value && *value == BigRational(pow(vq, F.get_ui()))});
    v.clauses.push_back({"facet-center distinct product = 8", "8", f.distinct_product_text,
                         f.distinct_product && *f.distinct_product == 8});
  }
  if (q_spec.kind() == PolytopeKind::cell24) {
    v.clauses.push_back({"facet-center distinct product = V = F", str(qf.vertices()), f.distinct_product_text,
                         f.distinct_product && *f.distinct_product == BigRational(qf.vertices()) &&
                             qf.vertices() == F});
  }
  return v;
}

// ---------------------------------------------------------------------------
// Dispatch

/// Runs one named check; the spectrum cache supplies the needed spectrum
/// (the dual's, for `duality`).
inline Verdict run_check(std::string_view name, const PolytopeSpec& spec, SpectrumCache& cache) {
  if (!check_applies(name, spec)) throw SpecError(std::string(name) + " does not apply to " + spec.name());
  if (name == "fact1") return check_fact1(spec, cache.get(spec));
  if (name == "fact2") return check_fact2(spec, cache.get(spec));
  if (name == "fact2-integral") return check_fact2_integral(spec, cache.get(spec));
  if (name == "sums3d") return check_3d_sums(spec, cache.get(spec));
  if (name == "xpoly-product") return check_crosspolytope_product(spec.parameter(), cache.get(spec));
  if (name == "c24-product") return check_24cell_product(cache.get(spec));
  if (name == "congruences3d") return check_3d_product_congruences(spec, cache.get(spec));
  if (name == "fact4") return check_fact4(spec, cache.get(spec));
  if (name == "polygon") return check_polygon_facts(spec.parameter(), cache.get(spec));
  if (name == "duality") return check_duality_corollaries(spec, cache.get(dual(spec)));
  throw SpecError("unknown check '" + std::string(name) + "'");
}

inline Verdict run_check(std::string_view name, const PolytopeSpec& spec) {
  SpectrumCache cache;
  return run_check(name, spec, cache);
}

/// The checks run by default: every applicable one except the negative control.
inline std::vector<std::string> default_checks(const PolytopeSpec& spec) {
  std::vector<std::string> out;
  for (const auto& n : check_names())
    if (n != "fact2-integral" && check_applies(n, spec)) out.push_back(n);
  return out;
}

/// Polygons 3..30; simplex, crosspolytope and cube for n = 2..12; the
/// icosahedron, dodecahedron and the three exceptional 4-polytopes.
inline std::vector<PolytopeSpec> default_suite() {
  std::vector<PolytopeSpec> out;
  for (long e = 3; e <= 30; ++e) out.push_back(PolytopeSpec::polygon(e));
  for (long n = 2; n <= 12; ++n) out.push_back(PolytopeSpec::simplex(n));
  for (long n = 2; n <= 12; ++n) out.push_back(PolytopeSpec::crosspolytope(n));
  for (long n = 2; n <= 12; ++n) out.push_back(PolytopeSpec::cube(n));
  for (auto s : {PolytopeSpec::icosahedron(), PolytopeSpec::dodecahedron(), PolytopeSpec::cell24(),
                 PolytopeSpec::cell600(), PolytopeSpec::cell120()})
    out.push_back(s);
  return out;
}

/// Polygons 3..100 and families up to n = 20 (cubes past 12 use the closed form).
inline std::vector<PolytopeSpec> extended_suite() {
  std::vector<PolytopeSpec> out;
  for (long e = 3; e <= 100; ++e) out.push_back(PolytopeSpec::polygon(e));
  for (long n = 2; n <= 20; ++n) out.push_back(PolytopeSpec::simplex(n));
  for (long n = 2; n <= 20; ++n) out.push_back(PolytopeSpec::crosspolytope(n));
  for (long n = 2; n <= 20; ++n) out.push_back(PolytopeSpec::cube(n));
  for (auto s : {PolytopeSpec::icosahedron(), PolytopeSpec::dodecahedron(), PolytopeSpec::cell24(),
                 PolytopeSpec::cell600(), PolytopeSpec::cell120()})
    out.push_back(s);
  return out;
}

// ---------------------------------------------------------------------------
// Open cases

struct ShapeResult {
  std::string shape;
  std::optional<bool> holds;  // nullopt: not decidable without full evaluation
  std::string detail;
};

struct ExploreReport {
  std::string polytope;
  FactoredProduct<QuadExt> product;
  std::optional<QuadExt> evaluated;
  QuadExt distinct_product;
  std::vector<ShapeResult> shapes;
};

inline bool is_open_case(const PolytopeSpec& spec) {
  switch (spec.kind()) {
    case PolytopeKind::cell600:
    case PolytopeKind::cell120: return true;
    case PolytopeKind::simplex:
    case PolytopeKind::cube: return spec.dimension() > 3;
    default: return false;
  }
}

/// Computes the exact factored product for a case without a published value
/// and tests it against the polygon shapes. Reports only; never judges.
///
/// Without evaluation, product = F^V is decided from prime valuations of
/// norms: N(product) = prod N(d_i^2)^N_i must equal F^(2V). A mismatch refutes
/// the shape; a match settles it only when every base is rational.
inline ExploreReport explore_open_products(const PolytopeSpec& spec, bool evaluate,
                                           const SpectrumOptions& opts = {}) {
  if (!is_open_case(spec))
    throw SpecError("explore: " + spec.name() + " is not an open case (600-cell, 120-cell, simplex:n>3, cube:n>3)");
  const ChordSpectrum s = chord_spectrum(spec, opts);
  const FaceVector fv = face_counts(spec);
  ExploreReport rep;
  rep.polytope = spec.name();
  rep.product = product_squared(s);
  rep.distinct_product = product_squared_distinct(s);

  std::map<long, BigInt> norm_val;
  bool all_rational = true;
  for (const auto& fct : rep.product.factors) {
    const BigRational n = fct.base.norm();
    all_rational = all_rational && fct.base.is_rational();
    for (const auto& [p, e] : prime_factor_rational(n, 100000)) norm_val[p] += BigInt(e) * fct.exponent;
  }
  auto norm_matches = [&](const BigInt& base, const BigInt& exponent) {
    std::map<long, BigInt> want;
    for (const auto& [p, e] : prime_factor_rational(BigRational(base), 100000)) want[p] = BigInt(e) * exponent * 2;
    std::erase_if(norm_val, [](const auto& kv) { return kv.second == 0; });
    return want == norm_val;
  };

  if (evaluate) rep.evaluated = evaluate_product(rep.product);

  auto decide = [&](std::string name, const BigInt& base, const BigInt& exponent) {
    ShapeResult r{std::move(name), std::nullopt, {}};
    if (rep.evaluated) {
      r.holds = *rep.evaluated == QuadExt(BigRational(pow(base, exponent.get_ui())));
      r.detail = "decided on the evaluated product";
    } else if (!norm_matches(base, exponent)) {
      r.holds = false;
      r.detail = "refuted by prime valuations of the norm";
    } else if (all_rational) {
      r.holds = true;
      r.detail = "rational bases: valuations decide";
    } else {
      r.detail = "norm matches; needs --evaluate";
    }
    return r;
  };
  rep.shapes.push_back(decide("product = F^V", fv.facets(), fv.vertices()));
  rep.shapes.push_back(decide("product = V^V", fv.vertices(), fv.vertices()));
  rep.shapes.push_back(decide("product = E^E", fv.edges(), fv.edges()));

  const auto dp = as_rational(rep.distinct_product);
  rep.shapes.push_back({"distinct product is an integer", dp && is_integer(*dp), to_string(rep.distinct_product)});
  rep.shapes.push_back({"distinct product = V", dp && *dp == BigRational(fv.vertices()), to_string(rep.distinct_product)});
  rep.shapes.push_back({"distinct product = F", dp && *dp == BigRational(fv.facets()), to_string(rep.distinct_product)});
  return rep;
}

}  // namespace polychord
