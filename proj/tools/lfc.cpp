// lfc: command-line front end.
// Exit codes: 0 pass, 1 semantic failure, 2 input error.
#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "lfc/acceptance.hpp"
#include "lfc/audit.hpp"
#include "lfc/bounds.hpp"
#include "lfc/errors.hpp"
#include "lfc/fibration.hpp"
#include "lfc/generate.hpp"
#include "lfc/grow.hpp"
#include "lfc/homology.hpp"
#include "lfc/io.hpp"
#include "lfc/mapping_telescope.hpp"
#include "lfc/telescope.hpp"
#include "lfc/tower.hpp"

using namespace lfc;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;

struct Common {
  std::string format = "text";
  bool machine() const { return format == "machine"; }
};

// A path, or "fixture:<name>" for a built-in fixture.
ComplexFile load(const std::string& in, bool strict = false) {
  if (in.rfind("fixture:", 0) == 0) {
    ComplexFile file;
    file.complex = fixture(in.substr(8));
    return file;
  }
  return read_complex_file(in, {strict});
}

void emit(const Common& common, const Json& machine, const std::string& text) {
  if (common.machine())
    std::cout << machine.dump(2) << "\n";
  else
    std::cout << text;
}

// Writes the complex to `out`, or to stdout when no file was given.
void write_or_print(const std::string& out, const Complex& c, const Json& metadata) {
  const std::string text = complex_to_text(c, metadata);
  if (out.empty())
    std::cout << text;
  else
    write_text_file(out, text);
}

Json counts_json(const Complex& c) {
  Json j = Json::array();
  for (int d = 0; d <= c.dim(); ++d) j.push_back(c.count(d));
  return j;
}

std::string counts_text(const Complex& c) {
  std::ostringstream s;
  s << "(";
  for (int d = 0; d <= c.dim(); ++d) s << (d ? "," : "") << c.count(d);
  return s.str() + ")";
}

Json homology_json(const HomologyGroups& h) {
  Json j;
  j["coefficients"] = h.coefficients.name();
  j["reduced"] = h.reduced;
  j["bottom"] = h.bottom;
  j["betti"] = h.betti;
  Json torsion = Json::array();
  for (const auto& t : h.torsion) {
    Json row = Json::array();
    for (const auto& x : t) row.push_back(x.str());
    torsion.push_back(std::move(row));
  }
  j["torsion"] = std::move(torsion);
  return j;
}

std::string homology_table(const HomologyGroups& h) {
  std::ostringstream s;
  s << "coefficients " << h.coefficients.name() << (h.reduced ? ", reduced" : "") << "\n";
  s << "dim  rank  torsion\n";
  for (std::size_t i = 0; i < h.betti.size(); ++i) {
    s << std::left << std::setw(5) << h.bottom + static_cast<int>(i) << std::setw(6) << h.betti[i];
    if (i < h.torsion.size())
      for (std::size_t t = 0; t < h.torsion[i].size(); ++t) s << (t ? " " : "") << h.torsion[i][t].str();
    s << "\n";
  }
  return s.str();
}

std::size_t max_degree(const Complex& c) {
  const auto deg = edge_degrees(c);
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

RayPolicy ray_policy(const std::vector<Coord>& rays, std::size_t levels) {
  RayPolicy policy;
  if (rays.size() == 1)
    for (std::size_t k = 1; k <= levels; ++k) policy.fixed[k] = rays[0];
  else if (!rays.empty()) {
    if (rays.size() != levels) throw PreconditionError("--ray-bound: give one value or one per level");
    for (std::size_t k = 1; k <= levels; ++k) policy.fixed[k] = rays[k - 1];
  }
  return policy;
}

int cmd_validate(const Common& common, const std::string& in, bool strict) {
  const auto file = load(in, strict);
  const Complex& c = file.complex;
  const auto report = validate(c, c.level() > 0 || c.staged());
  const bool ok = report.valid() && file.strict_violations.empty();
  Json j;
  j["valid"] = ok;
  j["dim"] = c.dim();
  j["counts"] = counts_json(c);
  j["closed"] = report.closed;
  j["singletons"] = report.singletons;
  j["chains"] = report.chains;
  j["violations"] = report.violations;
  j["non_maximal_listed"] = file.strict_violations;
  std::ostringstream s;
  s << (ok ? "valid" : "INVALID") << ": dim " << c.dim() << ", simplices " << counts_text(c) << "\n";
  for (const auto& v : report.violations) s << "  " << v << "\n";
  for (const auto& v : file.strict_violations) s << "  listed as maximal but not maximal: " << v << "\n";
  emit(common, j, s.str());
  return ok ? kPass : kFail;
}

int cmd_homology(const Common& common, const std::string& in, const std::string& coeff, bool reduced) {
  const auto file = load(in);
  const auto h = homology(file.complex, reduced, Coefficients::parse(coeff));
  emit(common, homology_json(h), homology_table(h));
  return kPass;
}

int cmd_audit(const Common& common, const std::string& in, std::optional<unsigned> dim) {
  const auto file = load(in);
  const Complex& c = file.complex;
  const unsigned n = dim.value_or(static_cast<unsigned>(std::max<std::size_t>(c.level(), 1)));
  const auto b = bounds(n);
  const auto a = degree_audit(c, b.M, b.K - 1);
  Json j;
  j["n"] = n;
  j["bound"] = b.M;
  j["one_sided_bound"] = b.K - 1;
  j["max_degree"] = a.max_degree;
  j["max_up"] = a.max_up;
  j["max_down"] = a.max_down;
  Json hist = Json::object();
  for (auto [d, k] : a.histogram) hist[std::to_string(d)] = k;
  j["histogram"] = std::move(hist);
  j["violators"] = a.violators.size();
  j["one_sided_violators"] = a.one_sided_violators.size();
  j["passed"] = a.passed();
  std::ostringstream s;
  s << (a.passed() ? "pass" : "FAIL") << ": max degree " << a.max_degree << " (bound M_" << n << " = " << b.M
    << "), one-sided up/down " << a.max_up << "/" << a.max_down << " (bound " << b.K - 1 << ")\n";
  s << "degree histogram:";
  for (auto [d, k] : a.histogram) s << " " << d << ":" << k;
  s << "\n";
  for (std::size_t i = 0; i < std::min<std::size_t>(a.violators.size(), 10); ++i)
    s << "  over bound: " << to_string(c.vertex(a.violators[i])) << "\n";
  emit(common, j, s.str());
  return a.passed() ? kPass : kFail;
}

struct LocalizeArgs {
  std::string in, out;
  std::vector<Coord> rays;
  std::optional<std::size_t> rounds;
  bool fibers = false;
};

int cmd_localize(const Common& common, const LocalizeArgs& args) {
  auto file = load(args.in);
  auto s = std::make_shared<const Complex>(std::move(file.complex));
  Json summary;
  std::ostringstream text;
  text << std::boolalpha;
  if (s->empty()) {
    if (!args.out.empty()) write_text_file(args.out, complex_to_text(*s));
    summary["dim"] = -1;
    summary["empty"] = true;
    emit(common, summary, "empty input, empty output\n");
    return kPass;
  }
  const std::size_t levels = static_cast<std::size_t>(std::max(s->dim(), 0));
  LocalizeOptions options;
  options.rays = ray_policy(args.rays, levels);
  const Localization loc = localize(s, options);
  const Tower& tower = loc.tower;
  const Complex& t = *loc.complex;
  const unsigned n = static_cast<unsigned>(std::max<std::size_t>(levels, 1));
  const auto b = bounds(n);

  const auto audit = degree_audit(t, b.M, b.K - 1);
  const bool homology_ok = isomorphic(homology(t), homology(*s));
  bool surjective = surjective_on_simplices(loc.projection);
  std::optional<bool> fibers_ok;
  if (args.fibers) {
    bool ok = true;
    for (std::size_t k = 0; k < tower.levels.size(); ++k) {
      ok = ok && check_pseudofibration(projection_map(tower.levels[k].complex, tower.levels[k].skeleton)).all_collapsed();
      if (k >= 1)
        ok = ok && check_pseudofibration(projection_map(tower.levels[k].prime, tower.levels[k - 1].skeleton)).all_collapsed();
    }
    fibers_ok = ok;
  }

  Json meta;
  Json tj;
  tj["levels"] = tower.top_level();
  tj["ray_bounds"] = tower.ray_bounds(tower.top_level());
  Json colorings = Json::object();
  for (const auto& [m, c] : tower.colorings()) colorings[std::to_string(m)] = c.colors;
  tj["colorings"] = std::move(colorings);
  Json stats = Json::array();
  for (const auto& level : tower.levels) {
    Json st;
    st["k"] = level.k;
    st["counts"] = level.stats.counts;
    st["max_degree"] = level.stats.max_degree;
    stats.push_back(std::move(st));
  }
  tj["level_stats"] = std::move(stats);
  meta["tower"] = std::move(tj);
  Json projection = Json::array();
  for (VertexId v = 0; v < t.num_vertices(); ++v) projection.push_back(loc.projection(v));
  meta["projection"] = std::move(projection);

  const Complex* output = &t;
  std::optional<GrowResult> grown;
  bool grow_ok = true;
  if (args.rounds) {
    grown = grow_edges(t, b.M, *args.rounds, {GrowScope::original});
    const auto deg = edge_degrees(grown->complex);
    for (VertexId v = 0; v < grown->complex.num_vertices(); ++v) {
      const auto done = grown->completion_round(v);
      if (deg[v] > b.M || (done && *done <= *args.rounds && deg[v] != b.M)) grow_ok = false;
    }
    meta["grow"] = {{"rounds", *args.rounds}, {"bound", b.M}, {"scope", "original"}};
    output = &grown->complex;
  }
  if (!args.out.empty()) write_text_file(args.out, complex_to_text(*output, meta));

  summary["dim"] = t.dim();
  summary["counts"] = counts_json(t);
  summary["max_degree"] = audit.max_degree;
  summary["bound"] = b.M;
  summary["one_sided_bound"] = b.K - 1;
  summary["max_one_sided"] = std::max(audit.max_up, audit.max_down);
  summary["degree_bound_ok"] = audit.passed();
  summary["dimension_preserved"] = t.dim() == s->dim();
  summary["homology_preserved"] = homology_ok;
  summary["surjective"] = surjective;
  if (fibers_ok) summary["fibers_collapse"] = *fibers_ok;
  if (grown) {
    summary["grown_vertices"] = grown->complex.num_vertices();
    summary["grown_max_degree"] = max_degree(grown->complex);
    summary["grow_ok"] = grow_ok;
  }
  const bool ok = audit.passed() && homology_ok && surjective && t.dim() == s->dim() && fibers_ok.value_or(true) && grow_ok;
  summary["passed"] = ok;

  text << "T: dim " << t.dim() << ", simplices " << counts_text(t) << ", vertices " << t.num_vertices() << "\n";
  text << "max_degree=" << audit.max_degree << " bound=" << b.M << " max_one_sided=" << std::max(audit.max_up, audit.max_down)
       << " one_sided_bound=" << b.K - 1 << "\n";
  text << "dimension_preserved=" << (t.dim() == s->dim()) << " homology_preserved=" << homology_ok
       << " surjective=" << surjective;
  if (fibers_ok) text << " fibers_collapse=" << *fibers_ok;
  text << "\n";
  if (grown)
    text << "grown: vertices " << grown->complex.num_vertices() << ", max degree " << max_degree(grown->complex)
         << ", grow_ok=" << grow_ok << "\n";
  text << (ok ? "pass" : "FAIL") << "\n";
  emit(common, summary, text.str());
  return ok ? kPass : kFail;
}

int cmd_grow(const Common& common, const std::string& in, const std::string& out, std::size_t rounds,
             std::optional<unsigned> dim, const std::string& scope) {
  const auto file = load(in);
  const Complex& t = file.complex;
  const unsigned n = dim.value_or(static_cast<unsigned>(std::max<std::size_t>(t.level(), 1)));
  const auto b = bounds(n);
  if (scope != "stage" && scope != "original") throw InputError("--scope must be stage or original");
  const auto g = grow_edges(t, b.M, rounds, {scope == "stage" ? GrowScope::stage : GrowScope::original});
  Json meta;
  meta["grow"] = {{"rounds", rounds}, {"bound", b.M}, {"scope", scope}};
  if (!out.empty()) write_text_file(out, complex_to_text(g.complex, meta));
  std::size_t complete = 0;
  const auto deg = edge_degrees(g.complex);
  bool ok = true;
  for (VertexId v = 0; v < g.complex.num_vertices(); ++v) {
    const auto done = g.completion_round(v);
    if (done && *done <= rounds) {
      ++complete;
      if (deg[v] != b.M) ok = false;
    }
    if (deg[v] > b.M) ok = false;
  }
  Json j;
  j["vertices"] = g.complex.num_vertices();
  j["bound"] = b.M;
  j["rounds"] = rounds;
  j["completed_vertices"] = complete;
  j["max_degree"] = max_degree(g.complex);
  j["passed"] = ok;
  std::ostringstream s;
  s << (ok ? "pass" : "FAIL") << ": " << g.complex.num_vertices() << " vertices, " << complete << " at exactly M = " << b.M
    << " after " << rounds << " rounds, max degree " << max_degree(g.complex) << "\n";
  if (out.empty() && !common.machine())
    std::cout << complex_to_text(g.complex, meta);
  else
    emit(common, j, s.str());
  return ok ? kPass : kFail;
}

int cmd_telescope(const std::string& in, const std::string& out, const std::vector<Coord>& rays) {
  const auto file = load(in);
  std::vector<Coord> r = rays;
  if (r.size() == 1) r.assign(file.complex.level(), rays[0]);
  write_or_print(out, telescope(file.complex, r), Json::object());
  return kPass;
}

int cmd_product(const std::string& a, const std::string& b, const std::string& out) {
  write_or_print(out, product(load(a).complex, load(b).complex), Json::object());
  return kPass;
}

int cmd_mtel(const Common& common, const std::string& in, const std::string& out, const std::vector<Coord>& rays) {
  auto s = std::make_shared<const Complex>(load(in).complex);
  if (s->empty()) throw InputError("mtel: empty input");
  const std::size_t levels = static_cast<std::size_t>(std::max(s->dim(), 0));
  LocalizeOptions options;
  options.rays = ray_policy(rays, levels);
  const auto loc = localize(s, options);
  const auto mt = mapping_telescope(loc.tower);
  if (!out.empty()) write_text_file(out, complex_to_text(*mt.complex));
  const bool homology_ok = isomorphic(homology(*mt.complex), homology(*s));
  const bool surjective = surjective_on_simplices(mt.projection);
  Json j;
  j["dim"] = mt.complex->dim();
  j["counts"] = counts_json(*mt.complex);
  j["max_degree"] = max_degree(*mt.complex);
  j["homology_preserved"] = homology_ok;
  j["surjective"] = surjective;
  j["passed"] = homology_ok && surjective;
  std::ostringstream t;
  t << std::boolalpha;
  t << "mapping telescope: dim " << mt.complex->dim() << ", simplices " << counts_text(*mt.complex) << ", max degree "
    << max_degree(*mt.complex) << "\nhomology_preserved=" << homology_ok << " surjective=" << surjective << "\n";
  emit(common, j, t.str());
  return homology_ok && surjective ? kPass : kFail;
}

int cmd_generate(const std::string& kind, int dim, std::size_t size, std::uint64_t seed, const std::string& name,
                 const std::string& out) {
  Complex c;
  if (kind == "tree")
    c = shelled_tree(dim, size, seed);
  else if (kind == "fixture")
    c = fixture(name);
  else if (kind == "cone")
    c = cone(fixture(name));
  else
    throw InputError("--kind must be tree, fixture or cone");
  write_or_print(out, c, Json::object());
  return kPass;
}

int cmd_selftest(const Common& common, std::uint64_t seed, const std::string& sizes,
                 const std::vector<std::string>& overrides) {
  AcceptanceOptions options;
  options.seed = seed;
  if (sizes == "tiny")
    options.sizes = SuiteSize::tiny;
  else if (sizes != "full")
    throw InputError("--sizes must be full or tiny");
  for (const auto& o : overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos) throw InputError("--fixture expects NAME=FILE");
    const auto file = read_complex_file(o.substr(eq + 1));
    std::vector<std::vector<std::uint32_t>> facets;
    for (auto [d, i] : file.complex.maximal_simplices()) {
      std::vector<std::uint32_t> s;
      for (VertexId v : file.complex.simplex(d, i)) s.push_back(file.complex.vertex(v).base);
      facets.push_back(std::move(s));
    }
    options.fixture_overrides[o.substr(0, eq)] = std::move(facets);
  }
  if (!common.machine()) options.progress = [](const std::string& m) { std::cerr << "  .. " << m << std::endl; };
  const auto report = run_acceptance(options);
  if (common.machine()) {
    std::cout << report_to_json(report).dump(2) << "\n";
  } else {
    for (const auto& r : report.results) std::cout << format_result(r) << "\n";
    std::cout << (report.passed() ? "ALL PASS" : "SOME CRITERIA FAILED") << "\n";
  }
  return report.passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounded-degree localization of ordered simplicial complexes"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--format", common.format, "Report format")->check(CLI::IsMember({"text", "machine"}));

  std::string in, in2, out, coeff = "Z", scope = "stage", sizes = "full", kind = "tree", name;
  bool strict = false, reduced = false, fibers = false;
  std::vector<Coord> rays;
  std::optional<std::size_t> rounds;
  std::optional<unsigned> dim;
  int gen_dim = 1;
  std::size_t size = 1;
  std::uint64_t seed = 20240615;
  std::vector<std::string> overrides;
  const char* in_help = "Complex file, or fixture:<name>";

  auto* validate_cmd = app.add_subcommand("validate", "Parse and validate a complex");
  validate_cmd->add_option("input", in, in_help)->required();
  validate_cmd->add_flag("--strict", strict, "Take simplex lists as given, no closure");

  auto* localize_cmd = app.add_subcommand("localize", "Build the bounded-degree tower");
  localize_cmd->add_option("input", in, in_help)->required();
  localize_cmd->add_option("--ray-bound", rays, "Ray bound R_k (one value for every level, or one per level)");
  localize_cmd->add_option("--rounds", rounds, "Also grow edges at the input vertices for this many rounds");
  localize_cmd->add_flag("--fibers", fibers, "Certify every fiber of every tower map");
  localize_cmd->add_option("--out", out, "Output file for T");

  auto* homology_cmd = app.add_subcommand("homology", "Simplicial homology");
  homology_cmd->add_option("input", in, in_help)->required();
  homology_cmd->add_option("--coeff", coeff, "Z, Q or Z/p");
  homology_cmd->add_flag("--reduced", reduced, "Reduced homology");

  auto* audit_cmd = app.add_subcommand("audit", "Edge-degree audit against M_n");
  audit_cmd->add_option("input", in, in_help)->required();
  audit_cmd->add_option("--dim", dim, "n for the bound M_n (default: level of the complex)");

  auto* grow_cmd = app.add_subcommand("grow", "Add pendant edges towards exactly M_n");
  grow_cmd->add_option("input", in, in_help)->required();
  grow_cmd->add_option("--rounds", rounds, "Number of rounds")->required();
  grow_cmd->add_option("--dim", dim, "n for the bound M_n (default: level of the complex)");
  grow_cmd->add_option("--scope", scope, "stage or original");
  grow_cmd->add_option("--out", out, "Output file");

  auto* telescope_cmd = app.add_subcommand("telescope", "Telescope of a level-n complex");
  telescope_cmd->add_option("input", in, in_help)->required();
  telescope_cmd->add_option("--ray-bound", rays, "Ray bounds, one value or one per coordinate")->required();
  telescope_cmd->add_option("--out", out, "Output file");

  auto* product_cmd = app.add_subcommand("product", "Product of two ordered complexes");
  product_cmd->add_option("left", in, in_help)->required();
  product_cmd->add_option("right", in2, in_help)->required();
  product_cmd->add_option("--out", out, "Output file");

  auto* mtel_cmd = app.add_subcommand("mtel", "Mapping telescope of the tower");
  mtel_cmd->add_option("input", in, in_help)->required();
  mtel_cmd->add_option("--ray-bound", rays, "Ray bound R_k");
  mtel_cmd->add_option("--out", out, "Output file");

  auto* generate_cmd = app.add_subcommand("generate", "Write a generated complex");
  generate_cmd->add_option("--kind", kind, "tree, fixture or cone");
  generate_cmd->add_option("--dim", gen_dim, "Dimension of a shelled tree");
  generate_cmd->add_option("--size", size, "Number of top simplices of a shelled tree");
  generate_cmd->add_option("--seed", seed, "Seed");
  generate_cmd->add_option("--name", name, "Fixture name");
  generate_cmd->add_option("--out", out, "Output file");

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest_cmd->add_option("--seed", seed, "Corpus seed");
  selftest_cmd->add_option("--sizes", sizes, "full or tiny");
  selftest_cmd->add_option("--fixture", overrides, "Replace a catalog fixture: NAME=FILE");

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->add_option("--format", common.format, "Report format: text or machine")->check(CLI::IsMember({"text", "machine"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*validate_cmd) return cmd_validate(common, in, strict);
    if (*localize_cmd) return cmd_localize(common, {in, out, rays, rounds, fibers});
    if (*homology_cmd) return cmd_homology(common, in, coeff, reduced);
    if (*audit_cmd) return cmd_audit(common, in, dim);
    if (*grow_cmd) return cmd_grow(common, in, out, *rounds, dim, scope);
    if (*telescope_cmd) return cmd_telescope(in, out, rays);
    if (*product_cmd) return cmd_product(in, in2, out);
    if (*mtel_cmd) return cmd_mtel(common, in, out, rays);
    if (*generate_cmd) return cmd_generate(kind, gen_dim, size, seed, name, out);
    if (*selftest_cmd) return cmd_selftest(common, seed, sizes, overrides);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kInput;
}
