#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "framedual/cli.hpp"
#include "framedual/experiments.hpp"
#include "framedual/matrix_io.hpp"
#include "framedual/spectral.hpp"
#include "framedual/tetris.hpp"
#include "report.hpp"

namespace framedual::cli {

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::SizeLimit: return 3;
    case ErrorCode::NoTightDual: return 4;
    case ErrorCode::BoundInfeasible:
    case ErrorCode::BelowCanonical: return 5;
    case ErrorCode::BadTarget:
    case ErrorCode::TooManyPicks: return 6;
    case ErrorCode::InvalidSpectrum: return 7;
    case ErrorCode::NonConvergence:
    case ErrorCode::AmbiguousSupport: return 1;
    default: return 2;
  }
}

namespace {

struct Options {
  // shared
  std::string input;
  std::string output;
  bool json = false;
  double tol = 0;
  bool exact = false;
  std::uint64_t seed = 0;
  std::size_t limit = 1000;
  // sparsest
  bool all = false;
  bool floating = false;
  // spectral
  double sigma = 0;
  std::string picks;
  std::string spectrum;
  // tetris
  std::string eigs;
  std::string dual_path;
  // random / generate
  Index n = 0;
  Index m = 0;
  Index trials = 100;
  std::string dist = "real";
  std::string generator;
  std::string xs;
  std::string ys;
  std::string window;
  // surface
  double lo = -3;
  double hi = 3;
  double step = 0.05;
  // nudge
  std::string target;
  std::string schedule;
};

struct Context {
  Options opt;
  bool tol_given = false;
  bool sigma_given = false;
  std::ostream* out = nullptr;
  Report report;
  // Raw text printed instead of the report when not in --json mode.
  std::optional<std::string> raw;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

std::vector<Rational> rational_list(const std::string& text, const char* what) {
  if (text.empty()) throw FrameError(ErrorCode::ParseError, std::string("missing ") + what);
  std::vector<Rational> values;
  for (const std::string& part : split(text, ',')) values.push_back(parse_rational(part));
  return values;
}

std::vector<double> double_list(const std::string& text, const char* what) {
  std::vector<double> values;
  for (const Rational& q : rational_list(text, what)) values.push_back(to_double(q));
  return values;
}

SearchOptions search_options(const Context& ctx) {
  SearchOptions options;
  if (ctx.tol_given) options.tolerance.absolute = ctx.opt.tol;
  options.force_floating = ctx.opt.floating;
  return options;
}

void record_tolerances(Context& ctx) {
  Json rank;
  if (ctx.tol_given) {
    rank = {{"absolute", ctx.opt.tol}};
  } else {
    rank = {{"rule", "max(rows, cols) * eps * sigma_max"}};
  }
  ctx.report.tolerances["rank"] = rank;
  ctx.report.tolerances["duality"] = kDualityTolerance;
}

FrameMatrix load_frame(Context& ctx, const std::string& path) {
  const std::string bytes = ctx.report.add_input(path);
  Matrix a;
  try {
    a = parse_matrix(bytes, ctx.opt.exact);
  } catch (const FrameError& e) {
    throw FrameError(e.code(), path + ": " + e.what());
  }
  return FrameMatrix(std::move(a), search_options(ctx).tolerance);
}

std::vector<double> sorted_desc(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

std::vector<double> canonical_spectrum(const FrameMatrix& frame) {
  std::vector<double> c;
  for (double s : singular_values(frame.matrix())) c.push_back(1.0 / s);
  return sorted_desc(c);
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0;
  for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

Json interval_json(const Interval& iv) { return Json::array({number(iv.lo), number(iv.hi)}); }

void write_if_requested(Context& ctx, const Matrix& a, const char* key) {
  if (ctx.opt.output.empty()) return;
  write_matrix_file(ctx.opt.output, a);
  ctx.report.results[key] = ctx.opt.output;
}

Json dual_check_json(const FrameMatrix& frame, const FrameMatrix& dual) {
  const DualityCheck check = is_dual(frame, dual);
  return {{"is_dual", check.is_dual}, {"residual", check.residual}};
}

// --- commands ---

void cmd_analyze(Context& ctx) {
  const FrameMatrix frame = load_frame(ctx, ctx.opt.input);
  const FrameBounds bounds = frame_bounds(frame);
  const FrameMatrix dual = canonical_dual(frame);
  Json& r = ctx.report.results;
  r["n"] = frame.n();
  r["m"] = frame.m();
  r["field"] = to_string(frame.field());
  r["singular_values"] = numbers(singular_values(frame.matrix()));
  r["frame_bounds"] = {{"lower", bounds.lower}, {"upper", bounds.upper}};
  r["tight"] = bounds.upper - bounds.lower <= 1e-10 * bounds.upper;
  r["dual_set_dimension"] = frame.n() * frame.redundancy_gap();
  r["canonical_dual"] = matrix_json(dual.matrix());
  r["canonical_dual_check"] = dual_check_json(frame, dual);
  Json region = Json::array();
  for (const Interval& iv : lambda_region(frame)) region.push_back(interval_json(iv));
  r["lambda_region"] = region;
  const DualBoundRange range = dual_bound_range(frame);
  r["dual_bound_range"] = {{"upper", interval_json(range.upper)}, {"lower", interval_json(range.lower)}};
  write_if_requested(ctx, dual.matrix(), "canonical_dual_file");
  ctx.report.tolerance_dependent = !frame.matrix().is_exact();
}

void cmd_sparsest(Context& ctx) {
  const FrameMatrix frame = load_frame(ctx, ctx.opt.input);
  const SearchOptions options = search_options(ctx);
  const SparsestDual best = sparsest_dual(frame, options);
  const SparsityBounds bounds = sparsity_bounds(frame, options);
  Json& r = ctx.report.results;
  r["n"] = frame.n();
  r["m"] = frame.m();
  r["exact_path"] = frame.matrix().is_exact() && !options.force_floating;
  r["sparsity"] = best.certificate.total();
  r["sparsity_bounds"] = {{"lower", bounds.lower}, {"exact", bounds.exact}, {"upper", bounds.upper}};
  Json rows = Json::array();
  for (const RowCertificate& row : best.certificate.rows) {
    Json support = Json::array();
    for (Index k : row.support) support.push_back(k + 1);
    Json coefficients = Json::array();
    for (const Scalar& c : row.coefficients) coefficients.push_back(format_entry(c));
    rows.push_back({{"row", row.row + 1},
                    {"spark", row.spark},
                    {"support", support},
                    {"coefficients", coefficients},
                    {"scale", format_entry(row.scale)}});
  }
  r["certificate"] = rows;
  r["certificate_verified"] = verify_certificate(frame, best.certificate);
  r["degenerate"] = best.certificate.degenerate;
  r["dual"] = matrix_json(best.dual.matrix());
  r["dual_check"] = dual_check_json(frame, best.dual);
  bool dependent = best.certificate.tolerance_dependent;
  if (ctx.opt.all) {
    const SparsestDualSet set = enumerate_sparsest_duals(frame, ctx.opt.limit, options);
    Json duals = Json::array();
    for (const FrameMatrix& d : set.duals) duals.push_back(matrix_json(d.matrix()));
    r["count"] = set.duals.size();
    r["truncated"] = set.truncated;
    r["duals"] = duals;
    dependent = dependent || set.tolerance_dependent;
  }
  write_if_requested(ctx, best.dual.matrix(), "dual_file");
  ctx.report.tolerance_dependent = dependent;
}

Json spectrum_report(Context& ctx, const FrameMatrix& frame, const ConstructedDual& built) {
  const std::vector<double> measured = singular_values(built.dual.matrix());
  Json& r = ctx.report.results;
  r["requested_spectrum"] = numbers(built.expected_spectrum);
  r["measured_spectrum"] = numbers(measured);
  r["max_spectrum_error"] = max_abs_diff(built.expected_spectrum, measured);
  r["free_block"] = matrix_json(built.free_block);
  r["dual"] = matrix_json(built.dual.matrix());
  r["dual_check"] = dual_check_json(frame, built.dual);
  write_if_requested(ctx, built.dual.matrix(), "dual_file");
  ctx.report.tolerance_dependent = true;
  return r;
}

void cmd_tight(Context& ctx) {
  const FrameMatrix frame = load_frame(ctx, ctx.opt.input);
  const std::optional<double> sigma = ctx.sigma_given ? std::optional<double>(ctx.opt.sigma) : std::nullopt;
  const TightDual td = tight_dual(frame, sigma);
  Json& r = ctx.report.results;
  r["case"] = to_string(td.spec.tight_case);
  r["p"] = td.spec.p;
  r["sigma_psi"] = td.spec.sigma_psi;
  r["canonical_spectrum"] = numbers(canonical_spectrum(frame));
  if (frame.redundancy_gap() == 1) {
    const ComplexMatrix s = td.result.free_block.to_complex();
    std::vector<double> column;
    for (Index i = 0; i < s.rows(); ++i) column.push_back(s(i, 0).real());
    r["s"] = numbers(column);
  }
  spectrum_report(ctx, frame, td.result);
  const ComplexMatrix psi = td.result.dual.matrix().to_complex();
  const double target = td.spec.sigma_psi * td.spec.sigma_psi;
  r["frame_operator_error"] = (psi * psi.adjoint() - target * ComplexMatrix::Identity(frame.n(), frame.n())).norm();
  ctx.report.tolerances["multiplicity"] = kMultiplicityTolerance;
}

void cmd_prescribe(Context& ctx) {
  const FrameMatrix frame = load_frame(ctx, ctx.opt.input);
  if (ctx.opt.picks.empty()) throw FrameError(ErrorCode::ParseError, "missing --picks i=q,...");
  std::vector<SpectrumPick> picks;
  Json echo = Json::array();
  for (const std::string& part : split(ctx.opt.picks, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw FrameError(ErrorCode::ParseError, "pick '" + part + "' is not of the form i=q");
    const Rational index = parse_rational(part.substr(0, eq));
    if (denominator(index) != 1 || index < 1 || index > frame.n()) {
      throw FrameError(ErrorCode::IndexOutOfRange, "pick index must be an integer in 1.." + std::to_string(frame.n()));
    }
    const double value = to_double(parse_rational(part.substr(eq + 1)));
    picks.push_back({static_cast<Index>(numerator(index)) - 1, value});
    echo.push_back({{"index", picks.back().index + 1}, {"value", value}});
  }
  const ConstructedDual built = prescribed_spectrum_dual(frame, picks);
  ctx.report.results["picks"] = echo;
  ctx.report.results["canonical_spectrum"] = numbers(canonical_spectrum(frame));
  spectrum_report(ctx, frame, built);
}

void cmd_feasible(Context& ctx) {
  const FrameMatrix frame = load_frame(ctx, ctx.opt.input);
  std::vector<double> target;
  try {
    target = double_list(ctx.opt.spectrum, "--spectrum");
  } catch (const FrameError& e) {
    throw FrameError(ErrorCode::BadTarget, e.what());
  }
  constexpr double rel_tol = 1e-9;
  const SpectrumTarget verdict = spectrum_feasible(frame, target, rel_tol);
  Json& r = ctx.report.results;
  r["target"] = numbers(verdict.values);
  r["canonical_spectrum"] = numbers(canonical_spectrum(frame));
  r["feasible"] = verdict.feasible;
  r["constructive"] = verdict.constructive;
  Json violations = Json::array();
  for (const InterlacingViolation& v : verdict.violated) {
    violations.push_back({{"index", v.index + 1}, {"bound", v.bound}, {"side", v.lower ? "lower" : "upper"}});
  }
  r["violations"] = violations;
  Json picks = Json::array();
  for (const SpectrumPick& p : verdict.picks) picks.push_back({{"index", p.index + 1}, {"value", p.value}});
  r["picks"] = picks;
  if (verdict.constructive && !ctx.opt.output.empty()) {
    spectrum_report(ctx, frame, prescribed_spectrum_dual(frame, verdict.picks));
  }
  ctx.report.tolerances["feasibility_relative"] = rel_tol;
  ctx.report.tolerance_dependent = true;
}

void cmd_tetris(Context& ctx) {
  const std::vector<Rational> eigs = rational_list(ctx.opt.eigs, "--eigs");
  const TetrisPlan plan = tetris_plan(std::span<const Rational>(eigs));
  const FrameMatrix frame = tetris_frame(plan);
  Json& r = ctx.report.results;
  Json echo = Json::array();
  for (const Rational& q : eigs) echo.push_back(to_string(q));
  r["eigenvalues"] = echo;
  r["n"] = plan.n;
  r["m"] = plan.m;
  r["K"] = plan.k_list;
  r["mu"] = plan.mu;
  r["I"] = plan.consecutive_steps;
  Json unit_rows = Json::array();
  for (Index j : plan.interior_unit_rows) unit_rows.push_back(j + 1);
  r["J"] = unit_rows;
  r["k_hat"] = plan.k_hat;
  r["sparsity"] = tetris_sparsity(plan);
  Json hosts = Json::array();
  for (Index j : rows_with_unit_column(frame.matrix())) hosts.push_back(j + 1);
  r["unit_column_rows"] = hosts;
  r["frame"] = matrix_json(frame.matrix());
  write_if_requested(ctx, frame.matrix(), "frame_file");
  if (!ctx.opt.dual_path.empty()) {
    const FrameMatrix dual = tetris_sparse_dual(plan);
    write_matrix_file(ctx.opt.dual_path, dual.matrix());
    r["dual"] = matrix_json(dual.matrix());
    r["dual_check"] = dual_check_json(frame, dual);
    r["dual_nonzeros"] = dual.matrix().count_nonzeros(1e-12);
    r["dual_file"] = ctx.opt.dual_path;
  }
}

Distribution parse_distribution(const std::string& name) {
  if (name == "real") return Distribution::GaussianReal;
  if (name == "complex") return Distribution::GaussianComplex;
  throw FrameError(ErrorCode::ParseError, "unknown distribution '" + name + "' (real|complex)");
}

void cmd_random(Context& ctx) {
  const TrialReport t = genericity_trial(ctx.opt.n, ctx.opt.m, ctx.opt.trials, ctx.opt.seed,
                                         parse_distribution(ctx.opt.dist), search_options(ctx));
  Json& r = ctx.report.results;
  r["n"] = t.n;
  r["m"] = t.m;
  r["trials"] = t.trials;
  r["seed"] = t.seed;
  r["distribution"] = to_string(t.distribution);
  r["count_in_P"] = t.count_in_p;
  r["count_sparsity_n2"] = t.count_sparsity_n2;
  Json failed = Json::array();
  for (Index k : t.failed_trials) failed.push_back(k);
  r["failed_trials"] = failed;
  r["boundary"] = t.boundary;
  r["failures"] = t.failures;
  ctx.report.tolerance_dependent = t.tolerance_dependent;
}

void cmd_surface(Context& ctx) {
  const FrameMatrix frame = load_frame(ctx, ctx.opt.input);
  const Surface s = surface_2x3(frame, ctx.opt.lo, ctx.opt.hi, ctx.opt.step);
  std::string csv = "s1,s2,lambda1,lambda2\n";
  const SurfacePoint* best = nullptr;
  double l1_min = kInfinity, l2_min = kInfinity, l2_max = -kInfinity;
  for (const SurfacePoint& p : s.points) {
    csv += format_double(p.s1) + "," + format_double(p.s2) + "," + format_double(p.lambda1) + "," +
           format_double(p.lambda2) + "\n";
    if (!best || p.lambda1 - p.lambda2 < best->lambda1 - best->lambda2) best = &p;
    l1_min = std::min(l1_min, p.lambda1);
    l2_min = std::min(l2_min, p.lambda2);
    l2_max = std::max(l2_max, p.lambda2);
  }
  Json& r = ctx.report.results;
  r["sigma"] = numbers({s.sigma1, s.sigma2});
  r["tight_s1"] = s.tight_s1;
  r["grid"] = {{"min", ctx.opt.lo}, {"max", ctx.opt.hi}, {"step", ctx.opt.step}, {"points", s.points.size()}};
  if (best) {
    r["min_gap"] = {{"s1", best->s1}, {"s2", best->s2}, {"lambda1", best->lambda1}, {"lambda2", best->lambda2},
                    {"gap", best->lambda1 - best->lambda2}};
  }
  r["lambda1_min"] = number(l1_min);
  r["lambda2_min"] = number(l2_min);
  r["lambda2_max"] = number(l2_max);
  if (!ctx.opt.output.empty()) {
    write_text_atomic(ctx.opt.output, csv);
    r["csv_file"] = ctx.opt.output;
  } else {
    ctx.raw = csv;
  }
  ctx.report.tolerance_dependent = true;
}

void cmd_generate(Context& ctx) {
  const std::string& g = ctx.opt.generator;
  Json& r = ctx.report.results;
  r["generator"] = g;
  std::vector<std::string> warnings;
  std::optional<FrameMatrix> frame;
  if (g == "vandermonde") {
    const std::vector<Rational> xs = rational_list(ctx.opt.xs, "--xs");
    const std::vector<Rational> ys = rational_list(ctx.opt.ys, "--ys");
    const bool integral = std::all_of(ys.begin(), ys.end(), [](const Rational& y) { return denominator(y) == 1; });
    if (integral) {
      std::vector<Index> exponents;
      for (const Rational& y : ys) exponents.push_back(static_cast<Index>(numerator(y)));
      frame = vandermonde_frame(std::span<const Rational>(xs), std::span<const Index>(exponents));
    } else {
      std::vector<double> xd, yd;
      for (const Rational& x : xs) xd.push_back(to_double(x));
      for (const Rational& y : ys) yd.push_back(to_double(y));
      frame = vandermonde_frame(std::span<const double>(xd), std::span<const double>(yd));
    }
  } else if (g == "dft") {
    GeneratedFrame dft = partial_dft_frame(ctx.opt.n, ctx.opt.m);
    warnings = dft.warnings;
    frame = std::move(dft.frame);
  } else if (g == "gabor") {
    if (ctx.opt.window.empty()) throw FrameError(ErrorCode::ParseError, "missing --window");
    const ComplexMatrix w = parse_matrix(ctx.opt.window).to_complex();
    std::vector<Complex> window(w.data(), w.data() + w.size());
    frame = gabor_frame(window);
  } else if (g == "gaussian") {
    if (ctx.opt.n < 1 || ctx.opt.m < ctx.opt.n) throw FrameError(ErrorCode::InvalidArgument, "need 1 <= n <= m");
    std::mt19937_64 rng = trial_rng(ctx.opt.seed, 0);
    frame = FrameMatrix(gaussian_matrix(ctx.opt.n, ctx.opt.m, parse_distribution(ctx.opt.dist), rng));
  } else {
    throw FrameError(ErrorCode::ParseError, "unknown generator '" + g + "' (vandermonde|dft|gabor|gaussian)");
  }
  r["warnings"] = warnings;
  r["matrix"] = matrix_json(frame->matrix());
  if (ctx.opt.output.empty()) {
    ctx.raw = format_matrix(frame->matrix());
  } else {
    write_matrix_file(ctx.opt.output, frame->matrix());
    r["matrix_file"] = ctx.opt.output;
  }
}

void cmd_nudge(Context& ctx) {
  const FrameMatrix phi0 = load_frame(ctx, ctx.opt.input);
  std::variant<FrameMatrix, AutoVandermonde> phi1 = AutoVandermonde{};
  if (!ctx.opt.target.empty()) phi1 = load_frame(ctx, ctx.opt.target);
  std::vector<Rational> schedule =
      ctx.opt.schedule.empty() ? default_nudge_schedule() : rational_list(ctx.opt.schedule, "--schedule");
  const SearchOptions options = search_options(ctx);
  const NudgeResult nudged = nudge_to_generic(phi0, phi1, schedule, options);
  Index sparsity = 0;
  for (Index j = 0; j < nudged.frame.n(); ++j) sparsity += generalized_spark(nudged.frame, j, options);
  Json& r = ctx.report.results;
  r["target"] = ctx.opt.target.empty() ? "vandermonde" : ctx.opt.target;
  r["t"] = to_string(nudged.t);
  r["t_value"] = to_double(nudged.t);
  r["sparsity"] = sparsity;
  r["frame"] = matrix_json(nudged.frame.matrix());
  write_if_requested(ctx, nudged.frame.matrix(), "frame_file");
  ctx.report.tolerance_dependent = !nudged.frame.matrix().is_exact();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx;
  ctx.out = &out;
  Options& o = ctx.opt;

  CLI::App app{"Dual frame analysis: sparsest duals, tight duals, spectra and spectral tetris frames", "framedual"};
  app.require_subcommand(1);
  std::map<std::string, std::function<void(Context&)>> handlers;

  auto common = [&](CLI::App* sub, bool output) {
    sub->add_flag("--json", o.json, "Print the JSON report");
    sub->add_option("--tol", o.tol, "Absolute rank threshold for floating decisions")
        ->each([&](const std::string&) { ctx.tol_given = true; });
    sub->add_flag("--exact", o.exact, "Read decimal entries as exact rationals");
    if (output) sub->add_option("-o,--output", o.output, "Output file");
  };
  auto with_input = [&](const char* name, const char* help, std::function<void(Context&)> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", o.input, "Matrix file")->required();
    common(sub, true);
    handlers[name] = std::move(fn);
    return sub;
  };

  with_input("analyze", "Singular values, frame bounds, canonical dual and spectral regions", cmd_analyze);

  CLI::App* sparsest = with_input("sparsest", "Sparsest dual with a per-row certificate", cmd_sparsest);
  sparsest->add_flag("--all", o.all, "Enumerate every sparsest dual");
  sparsest->add_option("--limit", o.limit, "Maximum number of duals listed with --all")->capture_default_str();
  sparsest->add_flag("--floating", o.floating, "Use the floating path on rational input");

  CLI::App* tight = with_input("tight", "Tight dual with the smallest (or given) singular value", cmd_tight);
  tight->add_option("--sigma", o.sigma, "Requested singular value of the tight dual")
      ->each([&](const std::string&) { ctx.sigma_given = true; });

  CLI::App* prescribe = with_input("prescribe", "Dual with prescribed raised singular values", cmd_prescribe);
  prescribe->add_option("--picks", o.picks, "i=q,... with 1-based singular value positions")->required();

  CLI::App* feasible = with_input("feasible", "Interlacing test for a target dual spectrum", cmd_feasible);
  feasible->add_option("--spectrum", o.spectrum, "q1,...,qn non-increasing")->required();

  CLI::App* surface = with_input("surface", "Dual frame operator eigenvalues of a 2x3 frame on a grid", cmd_surface);
  surface->add_option("--min", o.lo, "Grid minimum")->capture_default_str();
  surface->add_option("--max", o.hi, "Grid maximum")->capture_default_str();
  surface->add_option("--step", o.step, "Grid step")->capture_default_str();

  CLI::App* nudge = with_input("nudge", "Move a frame into general position along t Phi1 + (1 - t) Phi0", cmd_nudge);
  nudge->add_option("--target", o.target, "Frame Phi1 in P (default: Vandermonde)");
  nudge->add_option("--schedule", o.schedule, "Comma-separated t values (default 10^-k, k = 1..12)");

  CLI::App* tetris = app.add_subcommand("tetris", "Spectral tetris frame and its sparsest dual");
  tetris->add_option("--eigs", o.eigs, "lambda_1,...,lambda_n, each >= 2, integral sum")->required();
  tetris->add_option("--dual", o.dual_path, "Write the sparse dual here");
  common(tetris, true);
  handlers["tetris"] = cmd_tetris;

  CLI::App* random = app.add_subcommand("random", "Genericity trials on Gaussian frames");
  random->add_option("-n", o.n, "Rows")->required();
  random->add_option("-m", o.m, "Columns")->required();
  random->add_option("--trials", o.trials, "Number of trials")->capture_default_str();
  random->add_option("--seed", o.seed, "Seed")->capture_default_str();
  random->add_option("--dist", o.dist, "real|complex")->capture_default_str();
  common(random, false);
  handlers["random"] = cmd_random;

  CLI::App* generate = app.add_subcommand("generate", "Write a generated frame");
  generate->add_option("generator", o.generator, "vandermonde|dft|gabor|gaussian")->required();
  generate->add_option("--xs", o.xs, "Vandermonde column nodes");
  generate->add_option("--ys", o.ys, "Vandermonde row exponents");
  generate->add_option("-n", o.n, "Rows");
  generate->add_option("-m", o.m, "Columns");
  generate->add_option("--window", o.window, "Gabor window entries, e.g. 1+2i,0.5");
  generate->add_option("--seed", o.seed, "Seed")->capture_default_str();
  generate->add_option("--dist", o.dist, "real|complex")->capture_default_str();
  common(generate, true);
  handlers["generate"] = cmd_generate;

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  ctx.report.command = chosen->get_name();
  ctx.report.args = args;
  record_tolerances(ctx);
  try {
    const auto start = std::chrono::steady_clock::now();
    handlers.at(chosen->get_name())(ctx);
    ctx.report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  } catch (const FrameError& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }

  if (o.json) {
    out << ctx.report.to_json().dump(2) << "\n";
  } else if (ctx.raw) {
    out << *ctx.raw;
  } else {
    out << ctx.report.to_text();
  }
  return 0;
}

}  // namespace framedual::cli
