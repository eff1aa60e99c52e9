// polychord: list, spectrum, verify, explore, report.
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 usage or internal error.

#include "polychord/polychord.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace polychord;

struct Options {
  std::string format = "json";
  std::string suite = "default";
  std::vector<std::string> polytopes;
  std::vector<std::string> checks;
  std::string polytope;
  std::string dims = "2..6";
  std::string out;
  bool evaluate = false;
  unsigned threads = 1;
  long dim_cap = CatalogLimits{}.max_dimension;
  long cyclo_cap = CatalogLimits{}.max_polygon_edges;
};

SpectrumOptions spectrum_options(const Options& o) {
  SpectrumOptions s;
  s.threads = o.threads;
  s.limits.max_dimension = o.dim_cap;
  s.limits.max_polygon_edges = o.cyclo_cap;
  return s;
}

std::vector<PolytopeSpec> suite_by_name(const std::string& name) {
  if (name == "default") return default_suite();
  if (name == "extended") return extended_suite();
  throw std::invalid_argument("unknown suite '" + name + "' (default, extended)");
}

std::pair<long, long> parse_dims(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("--dims expects a..b, got '" + s + "'");
  const long a = std::stol(s.substr(0, dots)), b = std::stol(s.substr(dots + 2));
  if (a < 2 || b < a) throw std::invalid_argument("--dims needs 2 <= a <= b, got '" + s + "'");
  return {a, b};
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int cmd_list(const Options& o) {
  const auto specs = suite_by_name(o.suite);
  const Format fmt = parse_format(o.format);
  emit(o, fmt == Format::json ? dump(list_json(specs)) : list_text(specs, fmt));
  return 0;
}

int cmd_spectrum(const Options& o) {
  const SpectrumOptions so = spectrum_options(o);
  const PolytopeSpec spec = parse_polytope(o.polytope, so.limits);
  const AnySpectrum s = compute_spectrum(spec, so);
  switch (parse_format(o.format)) {
    case Format::json: emit(o, dump(spectrum_document(spec, s))); break;
    case Format::csv: emit(o, spectrum_csv(s)); break;
    case Format::markdown: emit(o, spectrum_markdown(spec, s)); break;
  }
  return 0;
}

int cmd_verify(const Options& o) {
  const SpectrumOptions so = spectrum_options(o);
  std::vector<PolytopeSpec> specs;
  if (o.polytopes.empty()) {
    specs = suite_by_name(o.suite);
  } else {
    for (const auto& p : o.polytopes) specs.push_back(parse_polytope(p, so.limits));
  }
  for (const auto& c : o.checks) {
    if (c == "explore") throw std::invalid_argument("'explore' reports rather than checks; use the explore command");
    if (std::find(check_names().begin(), check_names().end(), c) == check_names().end())
      throw std::invalid_argument("unknown check '" + c + "'");
  }
  SpectrumCache cache(so);
  std::vector<Verdict> verdicts;
  for (const auto& spec : specs) {
    std::vector<std::string> names;
    if (o.checks.empty()) {
      names = default_checks(spec);
    } else {
      for (const auto& c : o.checks)
        if (check_applies(c, spec)) names.push_back(c);
      if (names.empty() && !o.polytopes.empty())
        throw std::invalid_argument("none of the requested checks applies to " + spec.name());
    }
    for (const auto& n : names) verdicts.push_back(run_check(n, spec, cache));
  }
  const std::string suite = o.polytopes.empty() ? o.suite : "custom";
  switch (parse_format(o.format)) {
    case Format::json: emit(o, dump(verify_document(suite, verdicts))); break;
    case Format::csv: emit(o, verdicts_csv(verdicts)); break;
    case Format::markdown: emit(o, verdicts_markdown(verdicts)); break;
  }
  for (const auto& v : verdicts)
    if (!v.pass()) return 1;
  return 0;
}

int cmd_explore(const Options& o) {
  const SpectrumOptions so = spectrum_options(o);
  const PolytopeSpec spec = parse_polytope(o.polytope, so.limits);
  const ExploreReport r = explore_open_products(spec, o.evaluate, so);
  switch (parse_format(o.format)) {
    case Format::json: emit(o, dump(explore_json(r))); break;
    case Format::csv: emit(o, explore_csv(r)); break;
    case Format::markdown: emit(o, explore_markdown(r)); break;
  }
  return 0;
}

int cmd_report(const Options& o) {
  const SpectrumOptions so = spectrum_options(o);
  const auto [lo, hi] = parse_dims(o.dims);
  std::vector<PolytopeSpec> specs;
  for (long n = lo; n <= hi; ++n) specs.push_back(PolytopeSpec::simplex(n));
  for (long n = lo; n <= hi; ++n) specs.push_back(PolytopeSpec::crosspolytope(n));
  for (long n = lo; n <= hi; ++n) specs.push_back(PolytopeSpec::cube(n));
  for (auto s : {PolytopeSpec::icosahedron(), PolytopeSpec::dodecahedron(), PolytopeSpec::cell24(),
                 PolytopeSpec::cell600(), PolytopeSpec::cell120()})
    specs.push_back(s);
  for (const auto& s : specs) s.check_limits(so.limits);

  SpectrumCache cache(so);
  bool all_pass = true;
  const Format fmt = parse_format(o.format);
  if (fmt == Format::json) {
    Json polytopes = Json::array();
    for (const auto& s : specs) {
      Json p = polytope_report(s, cache);
      for (const auto& v : p["verdicts"]) all_pass = all_pass && v["pass"].get<bool>();
      polytopes.push_back(std::move(p));
    }
    emit(o, dump({{"schema_version", kSchemaVersion},
                  {"tool_version", kToolVersion},
                  {"dims", {lo, hi}},
                  {"polytopes", polytopes}}));
  } else if (fmt == Format::markdown) {
    std::string text = "# Chord spectra, dimensions " + std::to_string(lo) + ".." + std::to_string(hi) + "\n\n";
    std::vector<Verdict> verdicts;
    for (const auto& s : specs) {
      text += spectrum_markdown(s, cache.get(s)) + "\n";
      for (const auto& c : default_checks(s)) verdicts.push_back(run_check(c, s, cache));
    }
    text += "## Checks\n\n" + verdicts_markdown(verdicts);
    for (const auto& v : verdicts) all_pass = all_pass && v.pass();
    emit(o, text);
  } else {
    throw std::invalid_argument("report supports json and markdown");
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact chord spectra of regular polytopes"};
  app.require_subcommand(1);
  app.add_option("--threads", o.threads, "Worker threads for pairwise distances")->check(CLI::Range(1u, 256u));
  app.add_option("--dim-cap", o.dim_cap, "Largest family dimension accepted")->check(CLI::PositiveNumber);
  app.add_option("--cyclo-cap", o.cyclo_cap, "Largest polygon edge count (cyclotomic order)")
      ->check(CLI::PositiveNumber);

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json, csv or markdown")
        ->check(CLI::IsMember({"json", "csv", "markdown", "md"}));
    sub->add_option("--out", o.out, "Write to this file instead of stdout");
  };

  auto* list = app.add_subcommand("list", "Catalog with V/E/R/F columns");
  list->add_option("--suite", o.suite, "default or extended");
  add_format(list);

  auto* spectrum = app.add_subcommand("spectrum", "Exact chord spectrum of one polytope");
  spectrum->add_option("polytope", o.polytope, "e.g. polygon:7, cube:4, 600-cell")->required();
  add_format(spectrum);

  auto* verify = app.add_subcommand("verify", "Run the theorem checks");
  verify->add_option("--suite", o.suite, "default or extended");
  verify->add_option("--polytope", o.polytopes, "Restrict to these polytopes");
  verify->add_option("--check", o.checks, "Restrict to these checks");
  add_format(verify);

  auto* explore = app.add_subcommand("explore", "Exact products for cases without a published value");
  explore->add_option("polytope", o.polytope, "600-cell, 120-cell, simplex:n or cube:n with n > 3")->required();
  explore->add_flag("--evaluate", o.evaluate, "Evaluate the factored product in full");
  add_format(explore);

  auto* report = app.add_subcommand("report", "Batch document over families and exceptional solids");
  report->add_option("--dims", o.dims, "Family dimensions a..b");
  add_format(report);

  // list defaults to a table; everything else to JSON.
  for (auto* sub : {spectrum, verify, explore, report})
    sub->preparse_callback([&](std::size_t) { o.format = "json"; });
  list->preparse_callback([&](std::size_t) { o.format = "markdown"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*list) return cmd_list(o);
    if (*spectrum) return cmd_spectrum(o);
    if (*verify) return cmd_verify(o);
    if (*explore) return cmd_explore(o);
    if (*report) return cmd_report(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
