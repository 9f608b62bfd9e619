#include "paretotrace/app.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

#include "pareto/descent.hpp"
#include "pareto/errors.hpp"
#include "pareto/ode_rhs.hpp"
#include "pareto/quadratic.hpp"
#include "pareto/scalarization.hpp"
#include "pareto/shape/shape_problem.hpp"
#include "paretotrace/csv.hpp"
#include "paretotrace/svg.hpp"

namespace pareto::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

json to_json(const Vector& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

const QuadraticProblem* as_quadratic(const BiCriteriaProblem& problem) {
  return dynamic_cast<const QuadraticProblem*>(&problem);
}

Vector default_start(const BiCriteriaProblem& problem) {
  if (const auto* s = dynamic_cast<const shape::ShapeProblem*>(&problem)) return s->initial_design();
  return Vector::Zero(problem.dimension());
}

class Logger {
 public:
  explicit Logger(const RunOptions& options)
      : out_(options.verbose ? options.log : nullptr), start_(Clock::now()) {}

  template <typename... Args>
  void operator()(const Args&... args) const {
    if (!out_) return;
    std::ostringstream line;
    line.precision(3);
    line << '[' << std::fixed << seconds_since(start_) << "s] ";
    line.unsetf(std::ios::fixed);
    line.precision(6);
    (line << ... << args);
    *out_ << line.str() << '\n';
  }

 private:
  std::ostream* out_;
  Clock::time_point start_;
};

fs::path prepare_output_dir(const RunConfig& config, const RunOptions& options) {
  const fs::path dir = options.output_dir.value_or(config.output_dir);
  fs::create_directories(dir);
  return dir;
}

std::ofstream open_artifact(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  return out;
}

json direction_report(const ParetoTrace& t) {
  json j{{"termination", to_string(t.termination)},
         {"points", t.records.size()},
         {"lambda_end", t.records.empty() ? json(nullptr) : json(t.records.back().lambda)}};
  if (!t.message.empty()) j["message"] = t.message;
  return j;
}

struct TracedStart {
  StartPoint start;
  ParetoTrace forward;
  ParetoTrace backward;
  std::string file;
};

std::string csv_name(const StartPoint& s) {
  return s.name == "main" ? "trace.csv" : "trace_" + s.name + ".csv";
}

json gronwall_report(const BiCriteriaProblem& problem, const RunConfig& config,
                     const TraceConfig& trace_config, const StartPoint& start) {
  const DiagnosticsSpec& d = config.diagnostics;
  const Weight w(start.lambda0);
  try {
    const LipschitzEstimates est = lipschitz_estimates(problem, w, start.x, d.delta, d.rho, d.samples);
    double initial_error = 0.0;
    std::string source;
    if (const auto* qp = as_quadratic(problem)) {
      initial_error = (start.x - analytic_solution(*qp, w)).norm();
      source = "analytic";
    } else {
      // One Newton step from x0 approximates its distance to the front.
      initial_error = scalarized_gradient(problem, w, start.x).norm() / est.min_eigenvalue;
      source = "newton-step";
    }
    const GronwallBound bound =
        gronwall_bound(initial_error, 0.0, est.l_f, start.lambda0 - trace_config.lambda_low.value(),
                       trace_config.lambda_high.value() - start.lambda0);
    return {{"inputs",
             {{"initial_error", bound.initial_error},
              {"initial_error_source", source},
              {"rhs_error", bound.rhs_error},
              {"span_left", bound.span_left},
              {"span_right", bound.span_right},
              {"delta", est.delta},
              {"rho", est.rho},
              {"samples", d.samples}}},
            {"lipschitz",
             {{"l_f", est.l_f},
              {"l_h", est.l_h},
              {"l_lambda", est.l_lambda},
              {"c1", est.c1},
              {"c2", est.c2},
              {"min_eigenvalue", est.min_eigenvalue}}},
            {"bound", bound.bound},
            {"overflow", !std::isfinite(bound.bound)}};
  } catch (const Error& e) {
    return {{"error", e.what()}};
  }
}

Panel front_panel(const std::vector<std::pair<std::string, CsvTable>>& tables) {
  Panel p{"Pareto front", "J0", "J1", {}};
  for (const auto& [name, table] : tables) {
    p.series.push_back({name, table.values("J0"), table.values("J1")});
  }
  return p;
}

std::vector<Panel> diagnostics_panels(const std::vector<std::pair<std::string, CsvTable>>& tables) {
  Panel grad{"Criticality along the trace", "lambda", "grad_norm", {}};
  Panel eig{"Second-order optimality along the trace", "lambda", "min_eig", {}};
  for (const auto& [name, table] : tables) {
    grad.series.push_back({name, table.values("lambda"), table.values("grad_norm")});
    eig.series.push_back({name, table.values("lambda"), table.values("min_eig")});
  }
  return {grad, eig};
}

std::string problem_type(const RunConfig& config) {
  if (std::holds_alternative<QuadraticSpec>(config.problem)) return "quadratic";
  if (std::holds_alternative<QuadraticExplicitSpec>(config.problem)) return "quadratic-explicit";
  return "shape";
}

}  // namespace

Initialization initialize(const BiCriteriaProblem& problem, const RunConfig& config) {
  Initialization init;
  init.main.name = "main";
  if (const auto* e = std::get_if<ExactOracleInit>(&config.initializer)) {
    const auto* qp = as_quadratic(problem);
    if (!qp) throw ConfigError("exact-oracle initialization requires a quadratic problem");
    init.main.lambda0 = e->lambda0;
    init.main.x = analytic_solution(*qp, Weight(e->lambda0));
    init.report = {{"type", "exact-oracle"}};
  } else if (const auto* a = std::get_if<ArmijoInit>(&config.initializer)) {
    const Vector start = a->x_start.value_or(default_start(problem));
    const DescentResult r = armijo_descent(problem, Weight(a->lambda0), start, a->descent);
    init.main.lambda0 = a->lambda0;
    init.main.x = r.x;
    json skipped = json::array();
    for (int k : a->log_iterations) {
      if (static_cast<std::size_t>(k) < r.iterates.size()) {
        init.extra.push_back({"armijo_k" + std::to_string(k), a->lambda0, r.iterates[k]});
      } else {
        skipped.push_back(k);
      }
    }
    init.report = {{"type", "armijo"},
                   {"iterations", r.iterations},
                   {"converged", r.converged},
                   {"final_grad_norm", r.final_grad_norm},
                   {"logged_iterations_not_reached", skipped}};
  } else if (const auto* g = std::get_if<GivenPointInit>(&config.initializer)) {
    init.main.lambda0 = g->lambda0;
    init.main.x = g->x;
    init.report = {{"type", "given-point"}};
  } else {
    const auto& r = std::get<RecoverLambdaInit>(config.initializer);
    init.main.x = r.x.value_or(default_start(problem));
    const auto [g0, g1] = problem.gradients(init.main.x);
    const CriticalWeight cw = lambda_for_critical(g0, g1);
    init.main.lambda0 = cw.lambda.value();
    init.report = {{"type", "recover-lambda"}, {"residual", cw.residual}};
  }
  init.report["lambda0"] = init.main.lambda0;
  init.report["x0"] = to_json(init.main.x);
  init.report["grad_norm"] =
      scalarized_gradient(problem, Weight(init.main.lambda0), init.main.x).norm();
  return init;
}

RunResult run_trace(const RunConfig& config, const RunOptions& options) {
  const auto t_start = Clock::now();
  const Logger log(options);
  RunResult result;
  result.output_dir = prepare_output_dir(config, options);

  const auto problem = make_problem(config);
  log("problem ", problem_type(config), ", dimension ", problem->dimension());

  auto t = Clock::now();
  const Initialization init = initialize(*problem, config);
  const double init_seconds = seconds_since(t);
  log("initializer done: lambda0 = ", init.main.lambda0, ", ", init.extra.size(), " extra starts");

  const TraceConfig trace_config = config.trace.resolve(init.main.lambda0);
  log("tracing over [", trace_config.lambda_low.value(), ", ", trace_config.lambda_high.value(),
      "] with ", trace_config.tableau.name, ", h = ", trace_config.step);

  std::vector<StartPoint> starts{init.main};
  starts.insert(starts.end(), init.extra.begin(), init.extra.end());

  t = Clock::now();
  std::vector<std::future<TracedStart>> jobs;
  for (const StartPoint& s : starts) {
    jobs.push_back(std::async(std::launch::async, [&problem, &trace_config, s] {
      TraceConfig c = trace_config;
      c.lambda0 = Weight(s.lambda0);
      auto [fw, bw] = trace_bidirectional(*problem, c, s.x);
      return TracedStart{s, std::move(fw), std::move(bw), csv_name(s)};
    }));
  }
  std::vector<TracedStart> traced;
  for (auto& job : jobs) traced.push_back(job.get());
  const double trace_seconds = seconds_since(t);
  log("traces done in ", trace_seconds, "s");

  json traces = json::array();
  bool rhs_error = false;
  std::vector<std::pair<std::string, CsvTable>> tables;
  for (const TracedStart& ts : traced) {
    const auto records = merge_by_lambda(ts.forward, ts.backward);
    rhs_error = rhs_error || ts.forward.termination == TerminationReason::kRhsError ||
                ts.backward.termination == TerminationReason::kRhsError;
    json entry{{"name", ts.start.name},
               {"lambda0", ts.start.lambda0},
               {"points", records.size()},
               {"forward", direction_report(ts.forward)},
               {"backward", direction_report(ts.backward)}};
    if (config.wants(Output::kCsv)) {
      const fs::path path = result.output_dir / ts.file;
      {
        std::ofstream out = open_artifact(path);
        write_trace_csv(out, records);
      }
      entry["file"] = ts.file;
      std::ifstream in(path, std::ios::binary);
      tables.emplace_back(ts.start.name, read_csv(in));
      log("wrote ", path.string());
    }
    traces.push_back(std::move(entry));
  }

  json artifacts = json::array();
  for (const auto& e : traces) {
    if (e.contains("file")) artifacts.push_back(e["file"]);
  }
  if (config.wants(Output::kSvgFront)) {
    std::ofstream out = open_artifact(result.output_dir / "front.svg");
    write_svg(out, {front_panel(tables)});
    artifacts.push_back("front.svg");
  }
  if (config.wants(Output::kSvgDiagnostics)) {
    std::ofstream out = open_artifact(result.output_dir / "diagnostics.svg");
    write_svg(out, diagnostics_panels(tables));
    artifacts.push_back("diagnostics.svg");
  }

  t = Clock::now();
  json gronwall = nullptr;
  if (config.diagnostics.gronwall) {
    gronwall = gronwall_report(*problem, config, trace_config, init.main);
    log("Gronwall bound computed");
  }
  const double gronwall_seconds = seconds_since(t);

  result.exit_code = rhs_error ? kExitNumericalError : kExitOk;
  result.manifest = {
      {"command", "trace"},
      {"config", config.source},
      {"problem", {{"type", problem_type(config)}, {"dimension", problem->dimension()}}},
      {"initializer", init.report},
      {"trace",
       {{"method", trace_config.tableau.name},
        {"step", trace_config.step},
        {"lambda_low", trace_config.lambda_low.value()},
        {"lambda_high", trace_config.lambda_high.value()}}},
      {"traces", traces},
      {"gronwall", gronwall},
      {"timings",
       {{"initializer_s", init_seconds},
        {"trace_s", trace_seconds},
        {"gronwall_s", gronwall_seconds},
        {"total_s", seconds_since(t_start)}}},
      {"exit_code", result.exit_code}};
  if (config.wants(Output::kJson)) {
    artifacts.push_back("manifest.json");
    result.manifest["artifacts"] = artifacts;
    std::ofstream out = open_artifact(result.output_dir / "manifest.json");
    out << result.manifest.dump(2) << '\n';
  } else {
    result.manifest["artifacts"] = artifacts;
  }
  return result;
}

RunResult run_order_study(const RunConfig& config, const std::vector<double>& steps,
                          const RunOptions& options) {
  const auto t_start = Clock::now();
  const Logger log(options);
  RunResult result;
  result.output_dir = prepare_output_dir(config, options);

  const auto problem = make_problem(config);
  const Initialization init = initialize(*problem, config);
  const TraceConfig trace_config = config.trace.resolve(init.main.lambda0);
  for (double h : steps) {
    if (!(h > 0.0)) throw ConfigError("step sizes must be positive");
  }

  ReferenceSolution reference;
  std::string reference_kind;
  const auto* qp = as_quadratic(*problem);
  if (qp && std::holds_alternative<ExactOracleInit>(config.initializer)) {
    reference = [qp](double lambda) { return analytic_solution(*qp, Weight(lambda)); };
    reference_kind = "analytic";
  } else {
    const double fine = *std::min_element(steps.begin(), steps.end()) / 16.0;
    log("computing reference trace at h = ", fine);
    reference = fine_trace_reference(*problem, trace_config, init.main.x, fine);
    reference_kind = "fine-trace h=" + format_double(fine);
  }

  log("order study with ", steps.size(), " step sizes");
  const OrderStudy study = order_study(*problem, trace_config, init.main.x, steps, reference);

  {
    std::ofstream out = open_artifact(result.output_dir / "order_study.csv");
    out << "step,error,ratio\n";
    for (const OrderSample& s : study.samples) {
      out << format_double(s.step) << ',' << format_double(s.error) << ','
          << format_double(s.ratio.value_or(std::nan(""))) << '\n';
    }
  }
  json samples = json::array();
  for (const OrderSample& s : study.samples) {
    samples.push_back({{"step", s.step},
                       {"error", s.error},
                       {"ratio", s.ratio ? json(*s.ratio) : json(nullptr)}});
  }
  const bool forward = trace_config.lambda_high.value() > trace_config.lambda0.value();
  result.manifest = {
      {"command", "order-study"},
      {"config", config.source},
      {"method", trace_config.tableau.name},
      {"order", trace_config.tableau.order},
      {"reference", reference_kind},
      {"lambda0", trace_config.lambda0.value()},
      {"target", forward ? trace_config.lambda_high.value() : trace_config.lambda_low.value()},
      {"samples", samples},
      {"slope", study.slope ? json(*study.slope) : json(nullptr)},
      {"exact", study.exact()},
      {"timings", {{"total_s", seconds_since(t_start)}}}};
  std::ofstream out = open_artifact(result.output_dir / "order_study.json");
  out << result.manifest.dump(2) << '\n';
  return result;
}

json validate_config(const RunConfig& config) {
  const auto problem = make_problem(config);
  return {{"status", "ok"},
          {"problem", problem_type(config)},
          {"dimension", problem->dimension()}};
}

std::vector<double> parse_steps(const std::string& list) {
  std::vector<double> steps;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw ConfigError("empty entry in step list '" + list + "'");
    try {
      steps.push_back(parse_double(item.substr(first, last - first + 1)));
    } catch (const InputError& e) {
      throw ConfigError(std::string("step list: ") + e.what());
    }
    if (!(steps.back() > 0.0) || !std::isfinite(steps.back())) {
      throw ConfigError("step sizes must be positive");
    }
  }
  if (steps.size() < 2) throw ConfigError("an order study needs at least two step sizes");
  return steps;
}

int guarded(const std::function<int()>& body, std::ostream& err) {
  auto report = [&err](const std::string& kind, const std::string& message, int code) {
    err << json{{"status", "error"}, {"kind", kind}, {"message", message}, {"exit_code", code}}.dump()
        << '\n';
    return code;
  };
  try {
    return body();
  } catch (const ConfigError& e) {
    return report("config-error", e.what(), kExitConfigError);
  } catch (const DefinitenessLost& e) {
    return report("definiteness-lost", e.what(), kExitNumericalError);
  } catch (const GeometryError& e) {
    return report("geometry-error", e.what(), kExitNumericalError);
  } catch (const Error& e) {
    return report("numerical-error", e.what(), kExitNumericalError);
  } catch (const fs::filesystem_error& e) {
    return report("io-error", e.what(), kExitConfigError);
  } catch (const std::exception& e) {
    return report("internal-error", e.what(), kExitNumericalError);
  }
}

}  // namespace pareto::cli
