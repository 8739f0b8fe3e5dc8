#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "fht/airfoil.hpp"
#include "fht/errors.hpp"
#include "fht/function_spec.hpp"
#include "fht/identities.hpp"
#include "fht/io.hpp"
#include "fht/rearrangement.hpp"
#include "fht/run_config.hpp"
#include "fht/spectral_atlas.hpp"
#include "fht/transform.hpp"

namespace {

using namespace fht;

enum Exit { kOk = 0, kFailedReport = 1, kParse = 2, kQuadrature = 3, kNotSolvable = 4, kUnsupported = 5 };

// Flags shared by every subcommand; unset flags leave the file/default value alone.
struct Common {
  std::string config;
  std::string output;
  bool no_timestamp = false;
  double abs_tol = 0, rel_tol = 0, edge_eps = 0;
  std::size_t max_panels = 0, grid = 0;
  unsigned seed = 0;
  std::string convention, format;
  std::map<std::string, CLI::Option*> opts;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--config", c.config, "key=value config file (default: $FHT_CONFIG)");
  sub->add_option("--output,-o", c.output, "write to this file instead of stdout");
  sub->add_flag("--no-timestamp", c.no_timestamp, "omit the timestamp field");
  c.opts["abs_tol"] = sub->add_option("--abs-tol", c.abs_tol);
  c.opts["rel_tol"] = sub->add_option("--rel-tol", c.rel_tol);
  c.opts["edge_eps"] = sub->add_option("--edge-eps", c.edge_eps);
  c.opts["max_panels"] = sub->add_option("--max-panels", c.max_panels);
  c.opts["grid"] = sub->add_option("--grid", c.grid, "number of interior grid points");
  c.opts["seed"] = sub->add_option("--seed", c.seed);
  c.opts["convention"] = sub->add_option("--convention", c.convention)->check(CLI::IsMember({"tricomi", "widom"}));
  c.opts["format"] = sub->add_option("--format", c.format)->check(CLI::IsMember({"json", "csv"}));
}

RunConfig resolve(const Common& c) {
  RunConfig cfg = load_run_config(c.config);
  const auto set = [&](const char* key) { return c.opts.at(key)->count() > 0; };
  if (set("abs_tol")) cfg.quad.abs_tol = c.abs_tol;
  if (set("rel_tol")) cfg.quad.rel_tol = c.rel_tol;
  if (set("edge_eps")) cfg.quad.edge_eps = c.edge_eps;
  if (set("max_panels")) cfg.quad.max_panels = c.max_panels;
  if (set("grid")) cfg.grid = c.grid;
  if (set("seed")) cfg.seed = c.seed;
  if (set("convention")) cfg.convention = parse_convention(c.convention);
  if (set("format")) cfg.format = parse_format(c.format);
  cfg.quad.validate();
  return cfg;
}

void emit(json j, const Common& c) {
  if (!c.no_timestamp) j["timestamp"] = utc_timestamp();
  write_output(j.dump(2) + "\n", c.output);
}

cplx parse_lambda(const std::string& text) {
  const std::vector<double> v = parse_real_list(text);
  if (v.size() == 1) return v[0];
  if (v.size() == 2) return {v[0], v[1]};
  throw Error(ErrorCode::ParseError, "expected re[,im], got '" + text + "'");
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoConvergence:
    case ErrorCode::SingularEvaluation: return kQuadrature;
    case ErrorCode::NotSolvable: return kNotSolvable;
    case ErrorCode::UnsupportedDescriptor: return kUnsupported;
    case ErrorCode::InconsistentClassification: return kFailedReport;
    default: return kParse;
  }
}

// --- subcommands -------------------------------------------------------------------------

struct TransformArgs {
  Common common;
  std::string f, points;
};

int cmd_transform(const TransformArgs& a, std::string& stage) {
  stage = "config";
  const RunConfig cfg = resolve(a.common);
  stage = "parse";
  const FunctionSpec spec = parse_function_spec(a.f);
  const std::vector<double> pts = a.points.empty() ? interior_grid(cfg.grid) : parse_real_list(a.points);
  const Evaluable f = to_evaluable(spec, cfg.quad.edge_eps);
  stage = "transform";
  const std::vector<cplx> vals = fht_batch(f, pts, cfg.quad, cfg.convention);
  stage = "write";
  if (cfg.format == OutputFormat::Csv) {
    write_output(csv_table(pts, vals), a.common.output);
    return kOk;
  }
  json j;
  j["command"] = "transform";
  j["function"] = to_string(spec);
  j["convention"] = to_string(cfg.convention);
  json rows = json::array();
  for (std::size_t k = 0; k < pts.size(); ++k) rows.push_back({{"t", pts[k]}, {"re", vals[k].real()}, {"im", vals[k].imag()}});
  j["values"] = std::move(rows);
  emit(std::move(j), a.common);
  return kOk;
}

struct InvertArgs {
  Common common;
  std::string g, regime = "low", constant = "0";
};

int cmd_invert(const InvertArgs& a, std::string& stage) {
  stage = "config";
  const RunConfig cfg = resolve(a.common);
  AirfoilConfig acfg;
  acfg.quad = cfg.quad;
  acfg.solvability_tol = cfg.solvability_tol;
  acfg.interp_degree = cfg.interp_degree;
  acfg.check_points = cfg.grid;
  stage = "parse";
  const FunctionSpec spec = parse_function_spec(a.g);
  const Regime regime = a.regime == "high" ? Regime::High : Regime::Low;
  const cplx c = parse_lambda(a.constant);
  ChebyshevSeries g = spec.kind == SpecKind::Csv ? as_rhs_series(load_samples(spec.path, cfg.quad.edge_eps), cfg.interp_degree)
                                                 : as_rhs_series(to_weighted(spec));
  stage = "solve";
  std::optional<AirfoilSolution> sol;
  try {
    sol = regime == Regime::High ? solve_high(g, acfg) : solve_low(g, c);
  } catch (const NotSolvableError& e) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", e.residual());
    std::cerr << "fht invert: solvability: not in the range of T, residual " << buf << "\n";
    json j;
    j["command"] = "invert";
    j["regime"] = a.regime;
    j["input"] = to_string(spec);
    j["error"] = "NotSolvable";
    j["residual"] = e.residual();
    std::cout << j.dump(2) << "\n";
    return kNotSolvable;
  }
  stage = "roundtrip";
  const RoundTripReport rt = measure_roundtrip(*sol, Evaluable(g), acfg);
  stage = "write";
  if (cfg.format == OutputFormat::Csv) {
    std::vector<cplx> vals;
    for (double x : rt.grid) vals.push_back(sol->particular(x));
    write_output(csv_table(rt.grid, vals), a.common.output);
    return kOk;
  }
  json j;
  j["command"] = "invert";
  j["regime"] = a.regime;
  j["input"] = to_string(spec);
  j["solution"] = to_string(spec_from(sol->particular));
  j["solution_series"] = series_json(sol->particular);
  if (sol->homogeneous_coefficient) j["homogeneous_coefficient"] = complex_json(*sol->homogeneous_coefficient);
  json r;
  r["max_residual"] = rt.max_residual;
  r["grid_size"] = rt.grid.size();
  if (rt.constant_recovered) r["constant_recovered"] = complex_json(*rt.constant_recovered);
  j["roundtrip"] = std::move(r);
  emit(std::move(j), a.common);
  return kOk;
}

struct ClassifyArgs {
  Common common;
  std::string space, lambda, boundary;
};

int cmd_classify(const ClassifyArgs& a, std::string& stage) {
  stage = "config";
  (void)resolve(a.common);
  stage = "parse";
  const SpaceDescriptor desc = parse_space_descriptor(a.space);
  stage = "classify";
  const FineSpectrum fs = classify_space(desc);
  json j;
  j["command"] = "classify";
  j["convention"] = "widom";
  j["fine_spectrum"] = fine_spectrum_json(desc, fs);
  if (!a.lambda.empty()) {
    const cplx lambda = parse_lambda(a.lambda);
    j["lambda"] = complex_json(lambda);
    j["class"] = std::string(to_string(classify_point(desc, lambda)));
    if (fs.sigma_p) j["region_membership"] = std::string(to_string(region_contains(*fs.sigma_p, lambda)));
  }
  stage = "write";
  if (!a.boundary.empty()) {
    if (!fs.sigma_p) throw Error(ErrorCode::UnsupportedDescriptor, "no closed-form spectrum to draw for " + desc.label());
    const SpectralRegion region(*fs.sigma_p);
    std::vector<double> xs;
    std::vector<cplx> zs;
    for (int sign : {1, -1}) {
      const std::vector<cplx> arc = region.boundary_arc(sign, 400);
      for (std::size_t k = 0; k < arc.size(); ++k) {
        xs.push_back(static_cast<double>(sign * static_cast<int>(k)) / static_cast<double>(arc.size() - 1));
        zs.push_back(arc[k]);
      }
    }
    write_output(csv_table(xs, zs), a.boundary);
  }
  emit(std::move(j), a.common);
  return kOk;
}

struct EigenArgs {
  Common common;
  std::string lambda;
  double tolerance = 1e-5;
};

int cmd_eigencheck(const EigenArgs& a, std::string& stage) {
  stage = "config";
  const RunConfig cfg = resolve(a.common);
  stage = "parse";
  const cplx lambda = parse_lambda(a.lambda);
  stage = "eigen";
  const std::vector<double> grid = interior_grid(cfg.grid);
  const double res = eigen_residual(lambda, grid, cfg.quad);
  json j;
  j["command"] = "eigencheck";
  j["convention"] = "widom";
  j["lambda"] = complex_json(lambda);
  j["z"] = complex_json(z_of_lambda(lambda));
  j["gamma"] = gamma_of_lambda(lambda);
  j["residual"] = res;
  j["grid_size"] = grid.size();
  j["tolerance"] = a.tolerance;
  j["pass"] = res <= a.tolerance;
  stage = "write";
  emit(std::move(j), a.common);
  return res <= a.tolerance ? kOk : kFailedReport;
}

struct IdentitiesArgs {
  Common common;
  std::string suite = "all";
};

int cmd_identities(const IdentitiesArgs& a, std::string& stage) {
  stage = "config";
  const RunConfig cfg = resolve(a.common);
  HarnessConfig h;
  h.quad = cfg.quad;
  stage = "parse";
  const Suite suite = parse_suite(a.suite);
  stage = "identities";
  const std::vector<IdentityReport> reports = run_suite(suite, cfg.seed, h);
  bool all_pass = true;
  json arr = json::array();
  for (const auto& r : reports) {
    all_pass = all_pass && r.pass;
    arr.push_back(report_json(r));
  }
  json j;
  j["command"] = "identities";
  j["suite"] = a.suite;
  j["seed"] = cfg.seed;
  j["all_pass"] = all_pass;
  j["reports"] = std::move(arr);
  stage = "write";
  emit(std::move(j), a.common);
  return all_pass ? kOk : kFailedReport;
}

struct NormsArgs {
  Common common;
  std::string f, norm = "lp:2", of = "f";
  std::size_t base = 1024;
};

int cmd_norms(const NormsArgs& a, std::string& stage) {
  stage = "config";
  const RunConfig cfg = resolve(a.common);
  stage = "parse";
  const FunctionSpec spec = parse_function_spec(a.f);
  const Evaluable f = to_evaluable(spec, cfg.quad.edge_eps);
  const auto colon = a.norm.find(':');
  const std::string kind = a.norm.substr(0, colon);
  const std::vector<double> params =
      colon == std::string::npos ? std::vector<double>{} : parse_real_list(std::string_view(a.norm).substr(colon + 1));
  std::function<double(const SampledFunction&)> norm;
  if (kind == "lp" && params.size() == 1) norm = [p = params[0]](const SampledFunction& s) { return lp_norm(p, s); };
  else if (kind == "lorentz" && params.size() == 2)
    norm = [p = params[0], q = params[1]](const SampledFunction& s) { return lorentz_norm(p, q, s); };
  else if (kind == "zygmund" && params.size() == 1)
    norm = [al = params[0]](const SampledFunction& s) { return zygmund_norm(al, s); };
  else throw Error(ErrorCode::ParseError, "norm must be lp:p, lorentz:p,q or zygmund:alpha");
  std::function<cplx(double)> target;
  if (a.of == "Tf") target = [&f, &cfg](double x) { return fht_pointwise(f, x, cfg.quad, cfg.convention); };
  else target = [&f](double x) { return f(x); };
  stage = "norms";
  const NormEstimate est = refine_norm(norm, target, a.base);
  json j;
  j["command"] = "norms";
  j["function"] = to_string(spec);
  j["of"] = a.of;
  j["norm"] = a.norm;
  j["value"] = est.value;
  j["status"] = est.status == NormStatus::Bounded ? "bounded" : "unbounded";
  j["grid_sizes"] = est.grid_sizes;
  j["sequence"] = est.sequence;
  stage = "write";
  emit(std::move(j), a.common);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Hilbert transform toolkit"};
  app.require_subcommand(1);

  TransformArgs ta;
  auto* transform = app.add_subcommand("transform", "evaluate T(f) at points");
  add_common(transform, ta.common);
  transform->add_option("--f", ta.f, "function spec")->required();
  transform->add_option("--points", ta.points, "comma-separated interior points (default: --grid)");

  InvertArgs ia;
  auto* invert = app.add_subcommand("invert", "solve the airfoil equation T(f) = g");
  add_common(invert, ia.common);
  invert->add_option("--g", ia.g, "right-hand side spec")->required();
  invert->add_option("--regime", ia.regime)->check(CLI::IsMember({"low", "high"}));
  invert->add_option("--constant", ia.constant, "re[,im], low regime only");

  ClassifyArgs ca;
  auto* classify = app.add_subcommand("classify-spectrum", "fine spectrum of T/i on a r.i. space");
  classify->alias("classify");
  add_common(classify, ca.common);
  classify->add_option("--space", ca.space, "lebesgue:p | lorentz:p,r | indexed:pX,qX,pa,qa[,interp] | L^{p,r}")->required();
  classify->add_option("--lambda", ca.lambda, "re[,im]");
  classify->add_option("--boundary", ca.boundary, "write the boundary arcs of the spectrum as CSV");

  EigenArgs ea;
  auto* eigen = app.add_subcommand("eigencheck", "residual of (T/i) xi = lambda xi");
  add_common(eigen, ea.common);
  eigen->add_option("--lambda", ea.lambda, "re[,im]")->required();
  eigen->add_option("--tolerance", ea.tolerance);

  IdentitiesArgs da;
  auto* ident = app.add_subcommand("identities", "run identity suites");
  add_common(ident, da.common);
  ident->add_option("--suite", da.suite)->check(CLI::IsMember({"parseval", "pb", "laeng", "kernel", "norms", "all"}));

  NormsArgs na;
  auto* norms = app.add_subcommand("norms", "rearrangement norms with divergence detection");
  add_common(norms, na.common);
  norms->add_option("--f", na.f, "function spec")->required();
  norms->add_option("--norm", na.norm, "lp:p | lorentz:p,q | zygmund:alpha");
  norms->add_option("--of", na.of)->check(CLI::IsMember({"f", "Tf"}));
  norms->add_option("--n", na.base, "coarsest grid size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParse;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  std::string stage = "start";
  try {
    if (*transform) return cmd_transform(ta, stage);
    if (*invert) return cmd_invert(ia, stage);
    if (*classify) return cmd_classify(ca, stage);
    if (*eigen) return cmd_eigencheck(ea, stage);
    if (*ident) return cmd_identities(da, stage);
    if (*norms) return cmd_norms(na, stage);
  } catch (const Error& e) {
    std::cerr << "fht " << name << ": " << stage << ": " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "fht " << name << ": " << stage << ": " << e.what() << "\n";
    return kParse;
  }
  return kParse;
}
