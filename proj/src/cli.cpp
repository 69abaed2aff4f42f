#include "cvw/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "cvw/error.hpp"
#include "cvw/kernel_spectral.hpp"

namespace cvw::cli {

using nlohmann::json;

namespace {

constexpr std::pair<Command, const char*> kCommandNames[] = {
    {Command::CheckGaussian, "check-gaussian"},   {Command::CheckNongaussian, "check-nongaussian"},
    {Command::WitnessOptimize, "witness-optimize"}, {Command::KernelSpectrum, "kernel-spectrum"},
    {Command::FockIterate, "fock-iterate"},       {Command::SweepFig1, "sweep-fig1"},
    {Command::SweepFig2, "sweep-fig2"},
};

[[noreturn]] void schema_error(const std::string& pointer, const std::string& message) {
  throw CliError(FailureKind::SchemaError, message + " at '" + pointer + "'", pointer);
}

const json& member(const json& doc, const std::string& key, const std::string& pointer) {
  if (!doc.is_object() || !doc.contains(key)) schema_error(pointer + "/" + key, "missing required field");
  return doc.at(key);
}

double number(const json& doc, const std::string& key, const std::string& pointer) {
  const json& v = member(doc, key, pointer);
  if (!v.is_number()) schema_error(pointer + "/" + key, "expected a number");
  return v.get<double>();
}

int integer(const json& doc, const std::string& key, const std::string& pointer) {
  const json& v = member(doc, key, pointer);
  if (!v.is_number_integer()) schema_error(pointer + "/" + key, "expected an integer");
  return v.get<int>();
}

std::vector<int> int_list(const json& doc, const std::string& key, const std::string& pointer) {
  if (!doc.contains(key)) return {};
  const json& v = doc.at(key);
  if (!v.is_array()) schema_error(pointer + "/" + key, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_integer()) schema_error(fmt::format("{}/{}/{}", pointer, key, i), "expected an integer");
    out.push_back(v[i].get<int>());
  }
  return out;
}

Matrix parse_matrix(const json& v, const std::string& pointer) {
  if (!v.is_array() || v.empty()) schema_error(pointer, "expected a non-empty array of rows");
  const std::size_t n = v.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row = fmt::format("{}/{}", pointer, i);
    if (!v[i].is_array() || v[i].size() != n) schema_error(row, "expected a square matrix");
    for (std::size_t j = 0; j < n; ++j) {
      if (!v[i][j].is_number()) schema_error(fmt::format("{}/{}", row, j), "expected a number");
      m(i, j) = v[i][j].get<double>();
    }
  }
  if (n % 2 != 0) schema_error(pointer, "covariance matrix dimension must be even");
  return m;
}

StandardForm parse_standard_form(const json& doc, const std::string& pointer) {
  return {number(doc, "a", pointer), number(doc, "b", pointer), number(doc, "c1", pointer),
          number(doc, "c2", pointer)};
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  for (const auto& [c, n] : kCommandNames)
    if (name == n) return c;
  return std::nullopt;
}

const char* to_string(Command c) {
  for (const auto& [cmd, n] : kCommandNames)
    if (cmd == c) return n;
  return "unknown";
}

CliError::CliError(FailureKind kind, const std::string& message, std::string pointer)
    : std::runtime_error(message), kind_(kind), pointer_(std::move(pointer)) {}

StateDescription parse_state(const json& doc, const std::string& pointer) {
  if (!doc.is_object()) schema_error(pointer, "expected an object");
  if (doc.contains("cm")) return RawCM{parse_matrix(doc.at("cm"), pointer + "/cm")};
  if (doc.contains("standard_form"))
    return parse_standard_form(doc.at("standard_form"), pointer + "/standard_form");
  if (!doc.contains("family")) schema_error(pointer, "expected one of 'cm', 'standard_form' or 'family'");
  const json& fam = doc.at("family");
  if (!fam.is_string()) schema_error(pointer + "/family", "expected a string");
  const std::string f = fam.get<std::string>();
  if (f == "standard_form") return parse_standard_form(doc, pointer);
  if (f == "symmetric_two_mode")
    return SymmetricTwoModeState{number(doc, "a", pointer), number(doc, "c1", pointer), number(doc, "c2", pointer)};
  if (f == "squeezed_thermal")
    return SqueezedThermalState{number(doc, "a", pointer), number(doc, "b", pointer), number(doc, "c", pointer)};
  if (f == "werner_wolf_2x2")
    return WernerWolf2x2Params{number(doc, "A", pointer), number(doc, "B", pointer), number(doc, "C", pointer),
                               number(doc, "D", pointer), number(doc, "E", pointer), number(doc, "F", pointer)};
  if (f == "symmetric_multimode")
    return SymmetricMultimodeParams{integer(doc, "n", pointer), number(doc, "a", pointer), number(doc, "b", pointer),
                                    number(doc, "c1", pointer), number(doc, "c2", pointer)};
  if (f == "ghz") return GhzState{number(doc, "a", pointer), number(doc, "c", pointer), integer(doc, "n", pointer)};
  if (f == "ngpasg") {
    const StateDescription kernel = parse_state(member(doc, "kernel", pointer), pointer + "/kernel");
    if (std::holds_alternative<NgpasgSpec>(kernel)) schema_error(pointer + "/kernel", "kernel must be Gaussian");
    Matrix cm;
    try {
      cm = state_matrix(kernel);
    } catch (const Error& e) {
      schema_error(pointer + "/kernel", e.what());
    }
    const std::vector<int> adds = int_list(doc, "add", pointer), subs = int_list(doc, "sub", pointer);
    try {
      return NgpasgSpec::make(validate_cm(cm), adds, subs);
    } catch (const Error& e) {
      schema_error(pointer, e.what());
    }
  }
  schema_error(pointer + "/family", "unknown family '" + f + "'");
}

StateDescription parse_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError(FailureKind::IoError, "cannot open input '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw CliError(FailureKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return parse_state(doc);
}

Matrix state_matrix(const StateDescription& s) {
  return std::visit(
      [](const auto& v) -> Matrix {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RawCM>) return v.cm;
        else if constexpr (std::is_same_v<T, StandardForm>) return v.to_matrix();
        else if constexpr (std::is_same_v<T, SymmetricTwoModeState>) return StandardForm{v.a, v.a, v.c1, v.c2}.to_matrix();
        else if constexpr (std::is_same_v<T, SqueezedThermalState>) return StandardForm{v.a, v.b, v.c, v.c}.to_matrix();
        else if constexpr (std::is_same_v<T, WernerWolf2x2Params>) return v.to_matrix();
        else if constexpr (std::is_same_v<T, SymmetricMultimodeParams>) return v.to_matrix();
        else if constexpr (std::is_same_v<T, GhzState>) return ghz_cm(v.a, v.c, v.n);
        else return v.kernel;
      },
      s);
}

std::vector<double> parse_schedule(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CliError(FailureKind::ParseError, "invalid schedule entry '" + item + "'");
    }
  }
  if (out.empty()) throw CliError(FailureKind::ParseError, "empty schedule");
  return out;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

namespace {

double nine_digits(double x) { return std::stod(fmt::format("{:.9g}", x)); }

const char* status(const Verdict& v) {
  if (std::abs(v.margin) <= 1e-9) return "boundary";
  return to_string(v.classification);
}

}  // namespace

json verdict_to_json(const Verdict& v) {
  return {{"criterion_id", v.criterion_id},
          {"margin", nine_digits(v.margin)},
          {"classification", to_string(v.classification)},
          {"status", status(v)}};
}

std::string verdict_line(const Verdict& v) {
  return fmt::format("{} margin {:.9g} {}", v.criterion_id, v.margin, status(v));
}

namespace {

struct Report {
  json doc;
  std::ostream& log;

  void add(const Verdict& v) {
    doc["verdicts"].push_back(verdict_to_json(v));
    log << verdict_line(v) << '\n';
  }
  void note(const std::string& key, const json& value, const std::string& line) {
    doc[key] = value;
    log << line << '\n';
  }
};

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError(FailureKind::IoError, "cannot open input '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw CliError(FailureKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError(FailureKind::IoError, "cannot write '" + path + "'");
  return out;
}

std::string sibling_path(const std::string& path, const std::string& suffix) {
  const std::filesystem::path p(path);
  return (p.parent_path() / (p.stem().string() + suffix)).string();
}

void require_input(const JobSpec& job) {
  if (job.input.empty()) throw CliError(FailureKind::ParseError, "--input is required for this command");
}

std::uint64_t require_seed(const JobSpec& job) {
  if (!job.seed) throw CliError(FailureKind::ParseError, "--seed is required for stochastic commands");
  return *job.seed;
}

SixParamDetect parse_detect(const json& doc, const std::string& pointer) {
  const json& m = member(doc, "m", pointer);
  if (!m.is_array() || m.size() != 6) schema_error(pointer + "/m", "expected six numbers M1..M6");
  std::array<double, 6> v{};
  for (std::size_t i = 0; i < 6; ++i) {
    if (!m[i].is_number()) schema_error(fmt::format("{}/m/{}", pointer, i), "expected a number");
    v[i] = m[i].get<double>();
  }
  return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

json detect_to_json(const SixParamDetect& d) { return json::array({d.m1, d.m2, d.m3, d.m4, d.m5, d.m6}); }

void check_gaussian(const JobSpec& job, Report& r) {
  require_input(job);
  const StateDescription s = parse_state_file(job.input);
  if (std::holds_alternative<NgpasgSpec>(s))
    throw CliError(FailureKind::SchemaError, "photon-added states belong to check-nongaussian", "/family");
  const CovarianceMatrix cm = validate_cm(state_matrix(s));
  r.doc["cm"] = matrix_to_json(cm.matrix());
  r.doc["symplectic_eigenvalues"] = symplectic_eigenvalues(cm);

  if (const auto* st = std::get_if<SymmetricTwoModeState>(&s)) r.add(symmetric_two_mode(st->a, st->c1, st->c2));
  if (const auto* st = std::get_if<SqueezedThermalState>(&s)) r.add(squeezed_thermal(st->a, st->b, st->c));
  if (const auto* st = std::get_if<WernerWolf2x2Params>(&s)) {
    r.add(werner_wolf_2x2(*st));
    const PairSearch ps = ww_pair_search(*st);
    r.note("ww_pair", {{"found", ps.found}, {"x", ps.x}, {"y", ps.y}, {"slack", ps.slack}},
           fmt::format("ww_pair_exists {} (x = {:.9g}, y = {:.9g})", ps.found, ps.x, ps.y));
  }
  if (const auto* st = std::get_if<SymmetricMultimodeParams>(&s)) r.add(multimode_symmetric_full_sep(*st));
  if (const auto* st = std::get_if<GhzState>(&s)) {
    r.add(ghz_full_sep(st->a, st->c, st->n));
    if (st->n == 3 && st->c >= 0) r.add(three_mode_biseparable(st->a, st->c));
  }
  if (cm.modes() == 2) {
    const StandardForm sf = standard_form(cm);
    r.doc["standard_form"] = {{"a", sf.a}, {"b", sf.b}, {"c1", sf.c1}, {"c2", sf.c2}};
    r.add(simon_criterion(sf));
    // Closed-form criteria whose preconditions the reduced form happens to meet.
    const double tol = 1e-12 * std::max(1.0, std::abs(sf.c1));
    if (!std::holds_alternative<SqueezedThermalState>(s) && std::abs(sf.c1 - sf.c2) <= tol)
      r.add(squeezed_thermal(sf.a, sf.b, sf.c1));
    if (sf.c1 > 0 && sf.c2 > 0) r.add(cauchy_schwarz_bound(sf));
  }
  if (cm.modes() >= 2) {
    // PPT across the first half of the modes versus the rest.
    const int na = cm.modes() / 2;
    const auto nu = symplectic_eigenvalues(partial_transpose(cm, ModePartition::bipartite(na, cm.modes() - na)));
    r.add(Verdict::from_margin("ppt", nu.back() - 1));
  }
}

void check_nongaussian(const JobSpec& job, Report& r) {
  require_input(job);
  const json doc = load_json(job.input);
  const StateDescription s = parse_state(doc);
  const auto* spec = std::get_if<NgpasgSpec>(&s);
  if (!spec) throw CliError(FailureKind::SchemaError, "check-nongaussian needs an ngpasg family", "/family");
  r.doc["cm"] = matrix_to_json(spec->kernel);
  r.doc["add"] = spec->adds;
  r.doc["sub"] = spec->subs;
  r.add(photon_added_criterion(*spec));
  if (doc.contains("detect")) {
    const Matrix gm = state_matrix(parse_state(doc.at("detect"), "/detect"));
    json rows = json::array();
    for (double lambda : job.schedule) {
      const double fin = ngpasg_trace_finite(*spec, lambda * gm);
      const double lim = ngpasg_trace_limit(*spec, lambda * gm);
      rows.push_back({{"scale", lambda}, {"finite", fin}, {"limit", lim}, {"relative_gap", std::abs(fin - lim) / lim}});
      r.log << fmt::format("scale {:.9g}: trace {:.9g}, limit {:.9g}, relative gap {:.3e}\n", lambda, fin, lim,
                           std::abs(fin - lim) / lim);
    }
    r.doc["traces"] = rows;
  }
}

void witness_optimize(const JobSpec& job, Report& r) {
  require_input(job);
  const json doc = load_json(job.input);
  if (doc.contains("detect")) {
    const SixParamDetect d = parse_detect(doc.at("detect"), "/detect");
    const LambdaResult lv = lambda_product_vacuum(d);
    const auto [r1, r2] = stationarity_residuals(d, lv.x, lv.y);
    const OmegaMembership om = omega_residuals(d);
    r.note("lambda", {{"lambda", lv.lambda}, {"x", lv.x}, {"y", lv.y}, {"min_det", lv.min_det},
                      {"stationarity", {r1, r2}}, {"omega_residuals", {om.residual_a, om.residual_b}},
                      {"omega_member", om.member()}},
           fmt::format("lambda {:.9g} at x = {:.9g}, y = {:.9g}", lv.lambda, lv.x, lv.y));
    return;
  }
  const CovarianceMatrix cm = validate_cm(state_matrix(parse_state(doc)));
  if (cm.modes() != 2) throw CliError(FailureKind::SchemaError, "ratio optimization needs a two-mode state");
  r.doc["cm"] = matrix_to_json(cm.matrix());
  const MinimizeLResult l = minimize_l(cm, job.schedule);
  r.add(Verdict::from_margin("ratio_L", l.value - 1));
  r.note("ratio", {{"value", l.value}, {"limit", l.limit}, {"schedule_values", l.schedule},
                   {"from_limit", l.from_limit}, {"detect", detect_to_json(l.detect)}},
         fmt::format("ratio {:.9g} (limit {:.9g})", l.value, l.limit));
}

void kernel_spectrum(const JobSpec& job, Report& r) {
  require_input(job);
  const json doc = load_json(job.input);
  const KernelSpec k(number(doc, "alpha", ""), number(doc, "r", ""));
  const int count = doc.contains("count") ? integer(doc, "count", "") : 10;
  const int nodes = doc.contains("nodes") ? integer(doc, "nodes", "") : kDefaultGridNodes;
  const std::vector<double> ny = nystrom_spectrum(k, nodes);
  std::ostringstream csv;
  csv << "n,analytic,nystrom,abs_diff\n";
  double worst = 0;
  for (int n = 0; n < count && n < static_cast<int>(ny.size()); ++n) {
    const double an = analytic_eigenvalue(k, n);
    worst = std::max(worst, std::abs(an - ny[n]));
    fmt::print(csv, "{},{:.17g},{:.17g},{:.3e}\n", n, an, ny[n], std::abs(an - ny[n]));
  }
  const double tr = kernel_matrix_trace(k, default_grid(k, nodes));
  r.note("spectrum", {{"alpha", k.alpha()}, {"r", k.r()}, {"beta", k.beta()}, {"max_abs_diff", worst},
                      {"trace_quadrature", tr}, {"trace_analytic", analytic_trace(k)}},
         fmt::format("max |nystrom - analytic| {:.3e}; trace {:.12g} vs {:.12g}", worst, tr, analytic_trace(k)));
  r.doc["table"] = csv.str();
}

void fock_iterate(const JobSpec& job, Report& r) {
  const std::uint64_t seed = require_seed(job);
  SixParamDetect d = random_detect_operator(derive_seed(seed, 0));
  if (!job.input.empty()) {
    const json doc = load_json(job.input);
    if (doc.contains("detect")) d = parse_detect(doc.at("detect"), "/detect");
  }
  const FockOperator m = fock_elements(d, job.cutoff);
  const AlternationResult a = alternate_maximize(m, derive_seed(seed, 1));
  std::ostringstream csv;
  csv << "round,m0,avg_photon\n";
  for (std::size_t i = 0; i < a.m0_trace.size(); ++i)
    fmt::print(csv, "{},{:.17g},{:.17g}\n", i + 1, a.m0_trace[i], a.photon_trace[i]);
  r.note("iteration", {{"detect", detect_to_json(d)}, {"m0", a.m0}, {"rounds", a.rounds}, {"converged", a.converged},
                       {"photon_trace", a.photon_trace}, {"m0_trace", a.m0_trace}},
         fmt::format("M0 {:.9g} after {} rounds ({})", a.m0, a.rounds, a.converged ? "converged" : "not converged"));
  r.doc["table"] = csv.str();
}

void sweep_fig1_job(const JobSpec& job, Report& r) {
  const std::uint64_t seed = require_seed(job);
  const auto rows = sweep_fig1(job.samples, job.cutoff, seed);
  std::ostringstream csv, failures;
  write_sweep_csv(csv, rows);
  write_failures_csv(failures, rows);
  int converged = 0, violations = 0;
  double max_m0 = 0;
  for (const auto& row : rows) {
    converged += row.converged;
    violations += row.m0 > 1 + 1e-6;
    max_m0 = std::max(max_m0, row.m0);
  }
  r.note("sweep", {{"samples", job.samples}, {"converged", converged}, {"max_m0", max_m0}, {"violations", violations}},
         fmt::format("{} samples, {} converged, max M0 {:.9g}, {} vacuum-optimality violations", job.samples,
                     converged, max_m0, violations));
  r.doc["table"] = csv.str();
  r.doc["failures_table"] = failures.str();
}

std::vector<double> grid_or(const json& doc, const std::string& key, std::vector<double> fallback) {
  if (!doc.contains(key)) return fallback;
  const json& v = doc.at(key);
  if (!v.is_array()) schema_error("/" + key, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) schema_error(fmt::format("/{}/{}", key, i), "expected a number");
    out.push_back(v[i].get<double>());
  }
  return out;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(lo + (hi - lo) * i / (n - 1));
  return v;
}

void sweep_squeezed_grid(const JobSpec& job, Report& r) {
  const json doc = job.input.empty() ? json::object() : load_json(job.input);
  const auto ns = grid_or(doc, "N", linspace(0, 2, 21));
  const auto rs = grid_or(doc, "r", linspace(0, 1.5, 31));
  std::ostringstream two, three;
  two << "N,r,r_boundary,margin,one_photon,two_photon\n";
  three << "N,r,a,c,full_separability_margin,biseparability_margin,region\n";
  int mismatches = 0;
  for (double n : ns)
    for (double sq : rs) {
      const Matrix kernel = symmetric_squeezed_thermal(n, sq);
      const CovarianceMatrix cm = validate_cm(kernel);
      const Verdict one = photon_added_criterion(NgpasgSpec::make(cm, {1, 1}, {0, 0}));
      const Verdict twov = photon_added_criterion(NgpasgSpec::make(cm, {2, 2}, {0, 0}));
      mismatches += one.classification != twov.classification;
      fmt::print(two, "{:.17g},{:.17g},{:.17g},{:.17g},{},{}\n", n, sq, fig2a_boundary(n), one.margin,
                 to_string(one.classification), to_string(twov.classification));

      const double a = (2 * n + 1) * (std::exp(2 * sq) + 2 * std::exp(-2 * sq)) / 3;
      const double c = (2 * n + 1) * (std::exp(2 * sq) - std::exp(-2 * sq)) / 3;
      const Verdict full = ghz_full_sep(a, c, 3);
      const Verdict bisep = three_mode_biseparable(a, c);
      const char* region = bisep.entangled() ? "genuine_entangled" : full.entangled() ? "biseparable" : "full_separable";
      fmt::print(three, "{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{}\n", n, sq, a, c, full.margin, bisep.margin,
                 region);
    }
  r.note("grid", {{"points", ns.size() * rs.size()}, {"one_vs_two_photon_mismatches", mismatches}},
         fmt::format("{} grid points, {} one/two-photon verdict mismatches", ns.size() * rs.size(), mismatches));
  r.doc["table"] = two.str();
  r.doc["three_mode_table"] = three.str();
}

void write_artifacts(const JobSpec& job, Report& r) {
  // Tables go to CSV files next to the requested output, the report to JSON.
  json& doc = r.doc;
  if (job.output.empty()) {
    if (doc.contains("table")) r.log << doc["table"].get<std::string>();
    return;
  }
  const bool csv_main = std::filesystem::path(job.output).extension() == ".csv";
  std::string report_path = csv_main ? sibling_path(job.output, "_report.json") : job.output;
  if (doc.contains("table")) {
    const std::string table_path = csv_main ? job.output : sibling_path(job.output, ".csv");
    open_output(table_path) << doc["table"].get<std::string>();
    doc["table_path"] = table_path;
    doc.erase("table");
  }
  const std::pair<const char*, const char*> extra[] = {{"failures_table", "_failures.csv"},
                                                        {"three_mode_table", "_three_mode.csv"}};
  for (const auto& [key, suffix] : extra) {
    if (!doc.contains(key)) continue;
    const std::string path = sibling_path(job.output, suffix);
    open_output(path) << doc[key].get<std::string>();
    doc[std::string(key) + "_path"] = path;
    doc.erase(key);
  }
  open_output(report_path) << doc.dump(2) << '\n';
}

}  // namespace

int run(const JobSpec& job, std::ostream& log) {
  Report r{json::object(), log};
  r.doc["command"] = to_string(job.command);
  r.doc["parameters"] = {{"seed", job.seed ? json(*job.seed) : json(nullptr)},
                         {"cutoff", job.cutoff},
                         {"samples", job.samples},
                         {"schedule", job.schedule},
                         {"input", job.input}};
  r.doc["verdicts"] = json::array();
  try {
    switch (job.command) {
      case Command::CheckGaussian: check_gaussian(job, r); break;
      case Command::CheckNongaussian: check_nongaussian(job, r); break;
      case Command::WitnessOptimize: witness_optimize(job, r); break;
      case Command::KernelSpectrum: kernel_spectrum(job, r); break;
      case Command::FockIterate: fock_iterate(job, r); break;
      case Command::SweepFig1: sweep_fig1_job(job, r); break;
      case Command::SweepFig2: sweep_squeezed_grid(job, r); break;
    }
  } catch (const Error& e) {
    throw CliError(FailureKind::ComputeError, std::string(to_string(job.command)) + ": " + e.what());
  }
  write_artifacts(job, r);
  return 0;
}

}  // namespace cvw::cli
