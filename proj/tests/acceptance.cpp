// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "cli_runner.hpp"
#include "polychord/polychord.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace polychord;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) note << "first failure: " << what;
      pass = false;
    }
  }
};

BigRational power(long base, unsigned long e) { return BigRational(pow(BigInt(base), e)); }

BigRational ratio(long nb, unsigned long ne, long db, unsigned long de) {
  BigRational r(pow(BigInt(nb), ne), pow(BigInt(db), de));
  r.canonicalize();
  return r;
}

std::optional<BigRational> product_value(const AnySpectrum& s) {
  return std::visit([](const auto& x) { return as_rational(evaluate_product(product_squared(x))); }, s);
}

std::optional<BigRational> distinct_sum(const AnySpectrum& s) {
  return std::visit([](const auto& x) { return as_rational(sum_squared_distinct(x)); }, s);
}

std::optional<BigRational> distinct_product(const AnySpectrum& s) {
  return std::visit([](const auto& x) { return as_rational(product_squared_distinct(x)); }, s);
}

std::size_t distinct_count(const AnySpectrum& s) {
  return std::visit([](const auto& x) { return x.distinct(); }, s);
}

bool passes(SpectrumCache& cache, const std::string& check, const PolytopeSpec& spec) {
  return run_check(check, spec, cache).pass();
}

Outcome sum_law(SpectrumCache& cache) {
  Outcome o;
  const auto t0 = Clock::now();
  const auto suite = default_suite();
  for (const auto& spec : suite) {
    const AnySpectrum& s = cache.get(spec);
    const BigRational sum = std::visit([](const auto& x) { return sum_squared(x); }, s);
    const BigInt v = face_counts(spec).vertices();
    o.require(sum == BigRational(v * v), spec.name() + " sum " + to_string(sum));
  }
  const std::vector<std::pair<PolytopeSpec, long>> named{{PolytopeSpec::icosahedron(), 144},
                                                         {PolytopeSpec::dodecahedron(), 400},
                                                         {PolytopeSpec::cell24(), 576},
                                                         {PolytopeSpec::cell600(), 14400},
                                                         {PolytopeSpec::cell120(), 360000}};
  for (const auto& [spec, want] : named)
    o.require(std::get<ChordSpectrum>(cache.get(spec)).entries.size() > 0 &&
                  sum_squared(std::get<ChordSpectrum>(cache.get(spec))) == want,
              spec.name() + " != " + std::to_string(want));
  const double t = seconds_since(t0);
  o.require(t < 60, "runtime " + std::to_string(t) + " s");
  if (o.pass) o.note << suite.size() << " entries, " << t << " s";
  return o;
}

Outcome distinct_sum_law(SpectrumCache& cache) {
  Outcome o;
  for (long n = 2; n <= 12; ++n) {
    const PolytopeSpec s = PolytopeSpec::simplex(n);
    const auto ds = distinct_sum(cache.get(s));
    o.require(ds && *ds == make_rational(2 * (n + 1), n), s.name() + " distinct sum");
    if (n >= 3) o.require(ds && !is_integer(*ds), s.name() + " is integral");
  }
  const std::vector<std::pair<PolytopeSpec, long>> solids{{PolytopeSpec::crosspolytope(3), 6},
                                                          {PolytopeSpec::cube(3), 8},
                                                          {PolytopeSpec::icosahedron(), 8},
                                                          {PolytopeSpec::dodecahedron(), 12}};
  for (const auto& [spec, want] : solids) {
    const auto ds = distinct_sum(cache.get(spec));
    o.require(ds && *ds == want, spec.name() + " distinct sum");
  }
  for (auto spec : {PolytopeSpec::icosahedron(), PolytopeSpec::dodecahedron()}) {
    const long k = static_cast<long>(distinct_count(cache.get(spec)));
    o.require(*distinct_sum(cache.get(spec)) == 2 * k + 2, spec.name() + " 2k+2");
  }
  for (long e = 3; e <= 30; ++e) {
    const AnySpectrum& s = cache.get(PolytopeSpec::polygon(e));
    const long k = static_cast<long>(distinct_count(s));
    const auto ds = distinct_sum(s);
    if (e % 2) {
      o.require(ds && *ds == e && e == 2 * k + 1, "polygon:" + std::to_string(e));
    } else {
      o.require(ds && *ds == 2 * k + 2, "polygon:" + std::to_string(e));
    }
  }
  for (const auto& spec : default_suite()) o.require(passes(cache, "fact2", spec), "fact2 on " + spec.name());
  return o;
}

Outcome product_laws(SpectrumCache& cache) {
  Outcome o;
  for (long n = 2; n <= 12; ++n) {
    const PolytopeSpec s = PolytopeSpec::crosspolytope(n);
    const auto p = product_value(cache.get(s));
    const BigRational want = power(1L << n, 2 * n);
    o.require(p && *p == want, s.name());
    const FaceVector fv = face_counts(s);
    o.require(want == BigRational(pow(fv.facets(), fv.vertices().get_ui())), s.name() + " F^V");
  }
  o.require(product_value(cache.get(PolytopeSpec::cell24())) == power(6, 96), "24-cell 6^96");
  const std::vector<std::pair<PolytopeSpec, BigRational>> solids{
      {PolytopeSpec::simplex(3), ratio(2, 18, 3, 6)},
      {PolytopeSpec::crosspolytope(3), power(2, 18)},
      {PolytopeSpec::cube(3), ratio(2, 68, 3, 24)},
      {PolytopeSpec::icosahedron(), ratio(2, 132, 5, 30)},
      {PolytopeSpec::dodecahedron(), ratio(2, 440, 3, 180)}};
  for (const auto& [spec, want] : solids)
    o.require(product_value(cache.get(spec)) == want, spec.name() + " product");
  for (long e = 3; e <= 30; ++e) {
    const AnySpectrum& s = cache.get(PolytopeSpec::polygon(e));
    o.require(std::holds_alternative<PolygonSpectrum>(s), "polygon path");
    o.require(product_value(s) == power(e, e), "polygon:" + std::to_string(e) + " E^E");
  }
  return o;
}

Outcome congruences(SpectrumCache& cache) {
  Outcome o;
  for (auto spec : {PolytopeSpec::simplex(3), PolytopeSpec::crosspolytope(3), PolytopeSpec::cube(3),
                    PolytopeSpec::icosahedron(), PolytopeSpec::dodecahedron()}) {
    o.require(passes(cache, "congruences3d", spec), "congruences3d on " + spec.name());
    o.require(passes(cache, "fact4", spec), "b = dE / a = cVm on " + spec.name());
    const auto w = congruence_witnesses(spec, *product_value(cache.get(spec)), *distinct_product(cache.get(spec)));
    const BigInt E = face_counts(spec).edges();
    for (const auto& x : w) o.require(x.b % E == 0, spec.name() + " E | b");
    if (spec.kind() == PolytopeKind::crosspolytope) {
      o.require(w.size() == 3, "octahedron q-family size");
      for (std::size_t q = 0; q < w.size(); ++q)
        o.require(w[q].q == static_cast<long>(q), "octahedron q order");
    }
  }
  return o;
}

Outcome distinct_products(SpectrumCache& cache) {
  Outcome o;
  for (long n = 2; n <= 12; ++n)
    o.require(distinct_product(cache.get(PolytopeSpec::crosspolytope(n))) == BigRational(8),
              "crosspolytope:" + std::to_string(n));
  const FaceVector c24 = face_counts(PolytopeSpec::cell24());
  o.require(distinct_product(cache.get(PolytopeSpec::cell24())) == BigRational(24) && c24.facets() == 24 &&
                c24.vertices() == 24,
            "24-cell");
  for (long e = 3; e <= 30; ++e) {
    const auto dp = distinct_product(cache.get(PolytopeSpec::polygon(e)));
    if (e % 2)
      o.require(dp == BigRational(e), "polygon:" + std::to_string(e));
    else
      o.require(dp && is_integer(*dp), "polygon:" + std::to_string(e) + " integral");
  }
  for (const auto& spec : default_suite())
    if (check_applies("fact4", spec)) o.require(passes(cache, "fact4", spec), "fact4 on " + spec.name());
  return o;
}

Outcome duality(SpectrumCache& cache) {
  Outcome o;
  for (const auto& spec : default_suite()) {
    o.require(dual(dual(spec)) == spec, "dual(dual) on " + spec.name());
    o.require(passes(cache, "duality", spec), "duality on " + spec.name());
  }
  return o;
}

Outcome counting_lemmas(SpectrumCache& cache) {
  Outcome o;
  for (const auto& spec : extended_suite()) {
    std::visit(
        [&](const auto& s) {
          const BigInt v = s.vertex_count;
          BigInt total = 0;
          for (const auto& e : s.entries) {
            total += e.total;
            o.require(2 * e.total == e.per_vertex * v, spec.name() + " N = mV/2");
          }
          o.require(total == v * (v - 1) / 2, spec.name() + " total chords");
          if (spec.centrally_symmetric()) {
            const auto& last = s.entries.back();
            auto four = one_like(last.d_squared) + one_like(last.d_squared);
            four = four + four;
            o.require(last.d_squared == four && last.total == v / 2 &&
                          last.per_vertex == 1,
                      spec.name() + " diameter entry");
            const auto w = weighted_cos_sum_without_last(s);
            o.require(w == w - w, spec.name() + " weighted cos");
          }
        },
        cache.get(spec));
    o.require(passes(cache, "fact1", spec), "fact1 on " + spec.name());
  }
  if (o.pass) o.note << extended_suite().size() << " entries";
  return o;
}

Outcome oracle() {
  Outcome o;
  const auto t0 = Clock::now();
  for (const auto& spec : default_suite()) {
    const Verdict v = cross_check(spec, 128, 1e-9);
    o.require(v.pass(), "oracle on " + spec.name());
  }
  if (o.pass) o.note << "128 bits, rel 1e-9, " << seconds_since(t0) << " s";
  return o;
}

Outcome open_cases() {
  Outcome o;
  for (auto spec : {PolytopeSpec::cell600(), PolytopeSpec::cell120()}) {
    auto t0 = Clock::now();
    const ExploreReport quick = explore_open_products(spec, false);
    const double tq = seconds_since(t0);
    t0 = Clock::now();
    const ExploreReport full = explore_open_products(spec, true);
    const double tf = seconds_since(t0);
    o.require(tq < 5, spec.name() + " factored " + std::to_string(tq) + " s");
    o.require(tf < 120, spec.name() + " evaluated " + std::to_string(tf) + " s");
    o.require(!quick.product.factors.empty() && full.evaluated.has_value(), spec.name() + " products");
    if (spec.kind() == PolytopeKind::cell120) o.note << "; ";
    o.note << spec.name() << ": ";
    for (const auto& s : full.shapes)
      if (s.shape == "product = F^V" || s.shape == "distinct product is an integer")
        o.note << s.shape << " " << (s.holds ? (*s.holds ? "holds" : "fails") : "undecided") << ", ";
    o.note << "factored " << tq << " s, evaluated " << tf << " s";
  }
  return o;
}

Outcome negative_controls() {
  Outcome o;
  const PolytopeSpec ico = PolytopeSpec::icosahedron();
  ChordSpectrum counts = chord_spectrum(ico);
  counts.entries[0].total += 1;
  o.require(!check_fact1(ico, counts).pass(), "mutated count accepted");
  ChordSpectrum lengths = chord_spectrum(ico);
  lengths.entries[2].d_squared = lengths.entries[2].d_squared + QuadExt(make_rational(1, 7));
  o.require(!check_fact1(ico, lengths).pass(), "mutated length accepted");
  PolygonSpectrum poly = polygon_spectrum(11);
  poly.entries[3].per_vertex += 1;
  o.require(!check_fact1(PolytopeSpec::polygon(11), poly).pass(), "mutated polygon accepted");
  o.require(!run_check("fact2-integral", PolytopeSpec::simplex(3)).pass(), "simplex:3 integrality accepted");

  using testsupport::run_cli;
  o.require(run_cli("verify --polytope 24-cell").exit_code == 0, "exit 0");
  o.require(run_cli("verify --polytope simplex:3 --check fact2-integral").exit_code == 1, "exit 1");
  o.require(run_cli("spectrum nonagon").exit_code == 2, "exit 2 on bad polytope");
  o.require(run_cli("verify --check nonsense").exit_code == 2, "exit 2 on bad check");
  return o;
}

}  // namespace

int main() {
  SpectrumCache cache;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"sum law", [&] { return sum_law(cache); }},
      {"distinct-sum law", [&] { return distinct_sum_law(cache); }},
      {"product laws", [&] { return product_laws(cache); }},
      {"congruence structure", [&] { return congruences(cache); }},
      {"distinct products", [&] { return distinct_products(cache); }},
      {"duality corollaries", [&] { return duality(cache); }},
      {"counting lemmas", [&] { return counting_lemmas(cache); }},
      {"oracle equivalence", oracle},
      {"open-case exploration", open_cases},
      {"negative controls", negative_controls},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << "exception: " << e.what();
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << i + 1 << " " << criteria[i].first;
    const std::string note = o.note.str();
    if (!note.empty()) std::cout << " (" << note << ")";
    std::cout << std::endl;
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
