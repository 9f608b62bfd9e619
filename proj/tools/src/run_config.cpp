#include "paretotrace/run_config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "pareto/errors.hpp"
#include "pareto/shape/shape_problem.hpp"

namespace pareto::cli {
namespace {

using nlohmann::json;

void require_object(const json& doc, const std::string& where) {
  if (!doc.is_object()) throw ConfigError(where + " must be a JSON object");
}

void check_keys(const json& doc, const std::string& where, const std::set<std::string>& allowed) {
  require_object(doc, where);
  for (const auto& [key, value] : doc.items()) {
    if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

const json& field(const json& doc, const std::string& key, const std::string& where) {
  if (!doc.contains(key)) throw ConfigError(where + " is missing '" + key + "'");
  return doc.at(key);
}

double number(const json& value, const std::string& what) {
  if (!value.is_number()) throw ConfigError(what + " must be a number");
  const double v = value.get<double>();
  if (!std::isfinite(v)) throw ConfigError(what + " must be finite");
  return v;
}

std::optional<double> optional_number(const json& doc, const std::string& key,
                                      const std::string& where) {
  if (!doc.contains(key)) return std::nullopt;
  return number(doc.at(key), where + "." + key);
}

Vector vector_from(const json& value, const std::string& what) {
  if (!value.is_array()) throw ConfigError(what + " must be an array of numbers");
  Vector v(static_cast<Eigen::Index>(value.size()));
  for (std::size_t i = 0; i < value.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = number(value[i], what);
  }
  return v;
}

std::string type_of(const json& doc, const std::string& where) {
  const json& t = field(doc, "type", where);
  if (!t.is_string()) throw ConfigError(where + ".type must be a string");
  return t.get<std::string>();
}

const std::set<std::string> kShapeKeys{"type",          "preset",        "nx",
                                       "ny",            "length",        "left_height",
                                       "right_height",  "left_midline",  "right_midline",
                                       "n_basis",       "spline_degree", "n_angles",
                                       "fd_step",       "material"};
const std::set<std::string> kMaterialKeys{"youngs_modulus", "poisson_ratio", "weibull_module",
                                          "sigma0",         "surface_load",  "body_force"};

ProblemSpec parse_problem(const json& doc) {
  const std::string type = type_of(doc, "problem");
  if (type == "quadratic") {
    check_keys(doc, "problem", {"type", "n", "seed"});
    const json& n = field(doc, "n", "problem");
    const json& seed = field(doc, "seed", "problem");
    if (!n.is_number_integer() || n.get<long long>() < 1) {
      throw ConfigError("problem.n must be a positive integer");
    }
    if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<long long>() >= 0)) {
      throw ConfigError("problem.seed must be a non-negative integer");
    }
    return QuadraticSpec{n.get<Eigen::Index>(), seed.get<std::uint64_t>()};
  }
  if (type == "quadratic-explicit") {
    check_keys(doc, "problem", {"type", "n", "Q0", "Q1", "chi0", "chi1"});
    for (const char* key : {"n", "Q0", "Q1", "chi0", "chi1"}) field(doc, key, "problem");
    json matrices = doc;
    matrices.erase("type");
    quadratic_from_json(matrices);  // validates
    return QuadraticExplicitSpec{std::move(matrices)};
  }
  if (type == "shape") {
    check_keys(doc, "problem", kShapeKeys);
    json base = to_json(shape::straight_joint_case());
    if (doc.contains("preset")) {
      const std::string preset = doc.at("preset").get<std::string>();
      if (preset == "s-joint") {
        base = to_json(shape::s_joint_case());
      } else if (preset != "straight-joint") {
        throw ConfigError("unknown shape preset '" + preset + "'");
      }
    }
    json overrides = doc;
    overrides.erase("type");
    overrides.erase("preset");
    if (overrides.contains("material")) check_keys(overrides.at("material"), "problem.material", kMaterialKeys);
    base.merge_patch(overrides);
    return ShapeSpec{shape::shape_config_from_json(base)};
  }
  throw ConfigError("unknown problem type '" + type + "'");
}

Eigen::Index dimension_of(const ProblemSpec& problem) {
  if (const auto* q = std::get_if<QuadraticSpec>(&problem)) return q->n;
  if (const auto* q = std::get_if<QuadraticExplicitSpec>(&problem)) {
    return q->matrices.at("n").get<Eigen::Index>();
  }
  return std::get<ShapeSpec>(problem).config.geometry.design_dimension();
}

void check_point(const Vector& x, Eigen::Index n, const std::string& what) {
  if (x.size() != n) {
    throw ConfigError(what + " has " + std::to_string(x.size()) + " entries, problem dimension is " +
                      std::to_string(n));
  }
}

double weight(const json& doc, const std::string& key, const std::string& where) {
  const double v = number(field(doc, key, where), where + "." + key);
  if (v < 0.0 || v > 1.0) throw ConfigError(where + "." + key + " must lie in [0, 1]");
  return v;
}

DescentConfig parse_descent(const json& doc) {
  check_keys(doc, "initializer.descent",
             {"rho", "armijo_slope", "max_iterations", "grad_tolerance", "initial_step"});
  DescentConfig d;
  d.rho = doc.value("rho", d.rho);
  d.armijo_slope = doc.value("armijo_slope", d.armijo_slope);
  d.max_iterations = doc.value("max_iterations", d.max_iterations);
  d.grad_tolerance = doc.value("grad_tolerance", d.grad_tolerance);
  d.initial_step = doc.value("initial_step", d.initial_step);
  d.validate();
  return d;
}

InitializerSpec parse_initializer(const json& doc, const ProblemSpec& problem) {
  const std::string type = type_of(doc, "initializer");
  const Eigen::Index n = dimension_of(problem);
  const bool quadratic = !std::holds_alternative<ShapeSpec>(problem);
  if (type == "exact-oracle") {
    check_keys(doc, "initializer", {"type", "lambda0"});
    if (!quadratic) throw ConfigError("exact-oracle initialization requires a quadratic problem");
    return ExactOracleInit{weight(doc, "lambda0", "initializer")};
  }
  if (type == "armijo") {
    check_keys(doc, "initializer", {"type", "lambda0", "x_start", "descent", "log_iterations"});
    ArmijoInit init;
    init.lambda0 = weight(doc, "lambda0", "initializer");
    if (doc.contains("x_start")) {
      init.x_start = vector_from(doc.at("x_start"), "initializer.x_start");
      check_point(*init.x_start, n, "initializer.x_start");
    }
    if (doc.contains("descent")) init.descent = parse_descent(doc.at("descent"));
    if (doc.contains("log_iterations")) {
      const json& logs = doc.at("log_iterations");
      if (!logs.is_array()) throw ConfigError("initializer.log_iterations must be an array");
      for (const json& k : logs) {
        if (!k.is_number_integer() || k.get<int>() < 0) {
          throw ConfigError("initializer.log_iterations entries must be non-negative integers");
        }
        init.log_iterations.push_back(k.get<int>());
      }
      std::sort(init.log_iterations.begin(), init.log_iterations.end());
      init.log_iterations.erase(std::unique(init.log_iterations.begin(), init.log_iterations.end()),
                                init.log_iterations.end());
      init.descent.log_iterates = !init.log_iterations.empty();
    }
    return init;
  }
  if (type == "given-point") {
    check_keys(doc, "initializer", {"type", "x", "lambda0"});
    GivenPointInit init{vector_from(field(doc, "x", "initializer"), "initializer.x"),
                        weight(doc, "lambda0", "initializer")};
    check_point(init.x, n, "initializer.x");
    return init;
  }
  if (type == "recover-lambda") {
    check_keys(doc, "initializer", {"type", "x"});
    const json& x = field(doc, "x", "initializer");
    if (x.is_string()) {
      if (x.get<std::string>() != "initial-design") {
        throw ConfigError("initializer.x must be an array or \"initial-design\"");
      }
      if (quadratic) throw ConfigError("\"initial-design\" is only defined for shape problems");
      return RecoverLambdaInit{std::nullopt};
    }
    RecoverLambdaInit init{vector_from(x, "initializer.x")};
    check_point(*init.x, n, "initializer.x");
    return init;
  }
  throw ConfigError("unknown initializer type '" + type + "'");
}

TraceSpec parse_trace(const json& doc) {
  check_keys(doc, "trace",
             {"lambda_low", "lambda_high", "span_backward", "span_forward", "step", "method",
              "stop_on_definiteness", "epsilon"});
  TraceSpec t;
  t.lambda_low = optional_number(doc, "lambda_low", "trace");
  t.lambda_high = optional_number(doc, "lambda_high", "trace");
  t.span_backward = optional_number(doc, "span_backward", "trace");
  t.span_forward = optional_number(doc, "span_forward", "trace");
  const bool absolute = t.lambda_low || t.lambda_high;
  const bool relative = t.span_backward || t.span_forward;
  if (absolute && relative) {
    throw ConfigError("trace takes either lambda_low/lambda_high or span_backward/span_forward");
  }
  if (t.span_backward && *t.span_backward < 0.0) throw ConfigError("trace.span_backward must be >= 0");
  if (t.span_forward && *t.span_forward < 0.0) throw ConfigError("trace.span_forward must be >= 0");
  t.step = number(field(doc, "step", "trace"), "trace.step");
  if (!(t.step > 0.0)) throw ConfigError("trace.step must be positive");
  t.method = doc.value("method", t.method);
  tableau_by_name(t.method);
  t.stop_on_definiteness = doc.value("stop_on_definiteness", t.stop_on_definiteness);
  t.epsilon = doc.value("epsilon", t.epsilon);
  if (!(t.epsilon > 0.0)) throw ConfigError("trace.epsilon must be positive");
  return t;
}

DiagnosticsSpec parse_diagnostics(const json& doc) {
  check_keys(doc, "diagnostics", {"gronwall", "delta", "rho", "samples"});
  DiagnosticsSpec d;
  d.gronwall = doc.value("gronwall", d.gronwall);
  d.delta = doc.value("delta", d.delta);
  d.rho = doc.value("rho", d.rho);
  d.samples = doc.value("samples", d.samples);
  if (!(d.delta > 0.0)) throw ConfigError("diagnostics.delta must be positive");
  if (!(d.rho > 0.0 && d.rho < 1.0)) throw ConfigError("diagnostics.rho must lie in (0, 1)");
  if (d.samples < 0) throw ConfigError("diagnostics.samples must be >= 0");
  return d;
}

Output parse_output(const json& value) {
  const std::string s = value.is_string() ? value.get<std::string>() : std::string{};
  if (s == "csv") return Output::kCsv;
  if (s == "json") return Output::kJson;
  if (s == "svg-front") return Output::kSvgFront;
  if (s == "svg-diagnostics") return Output::kSvgDiagnostics;
  throw ConfigError("unknown output '" + value.dump() + "'");
}

}  // namespace

std::string to_string(Output o) {
  switch (o) {
    case Output::kCsv:
      return "csv";
    case Output::kJson:
      return "json";
    case Output::kSvgFront:
      return "svg-front";
    case Output::kSvgDiagnostics:
      return "svg-diagnostics";
  }
  return "unknown";
}

TraceConfig TraceSpec::resolve(double lambda0) const {
  TraceConfig config;
  try {
    config.lambda0 = Weight(lambda0);
    if (span_backward || span_forward) {
      config.lambda_low = Weight(std::max(0.0, lambda0 - span_backward.value_or(0.0)));
      config.lambda_high = Weight(std::min(1.0, lambda0 + span_forward.value_or(0.0)));
    } else {
      config.lambda_low = Weight(lambda_low.value_or(0.0));
      config.lambda_high = Weight(lambda_high.value_or(1.0));
    }
    config.step = step;
    config.tableau = tableau_by_name(method);
    config.stop_on_definiteness = stop_on_definiteness;
    config.epsilon = epsilon;
    config.validate();
  } catch (const InputError& e) {
    throw ConfigError(std::string("trace: ") + e.what());
  }
  return config;
}

bool RunConfig::wants(Output o) const {
  return std::find(outputs.begin(), outputs.end(), o) != outputs.end();
}

RunConfig parse_run_config(const nlohmann::json& doc) {
  try {
    check_keys(doc, "run configuration",
               {"problem", "initializer", "trace", "diagnostics", "outputs", "output_dir"});
    RunConfig config;
    config.source = doc;
    config.problem = parse_problem(field(doc, "problem", "run configuration"));
    config.initializer = parse_initializer(field(doc, "initializer", "run configuration"), config.problem);
    config.trace = parse_trace(field(doc, "trace", "run configuration"));
    if (doc.contains("diagnostics")) config.diagnostics = parse_diagnostics(doc.at("diagnostics"));
    if (doc.contains("outputs")) {
      const json& outs = doc.at("outputs");
      if (!outs.is_array()) throw ConfigError("outputs must be an array");
      config.outputs.clear();
      for (const json& o : outs) {
        const Output out = parse_output(o);
        if (!config.wants(out)) config.outputs.push_back(out);
      }
    }
    if ((config.wants(Output::kSvgFront) || config.wants(Output::kSvgDiagnostics)) &&
        !config.wants(Output::kCsv)) {
      throw ConfigError("svg outputs are rendered from the trace CSV; add \"csv\" to outputs");
    }
    if (doc.contains("output_dir")) {
      if (!doc.at("output_dir").is_string()) throw ConfigError("output_dir must be a string");
      config.output_dir = doc.at("output_dir").get<std::string>();
    }
    // Absolute intervals can be checked before lambda0 is known.
    if (const auto* e = std::get_if<ExactOracleInit>(&config.initializer)) {
      config.trace.resolve(e->lambda0);
    } else if (const auto* g = std::get_if<GivenPointInit>(&config.initializer)) {
      config.trace.resolve(g->lambda0);
    } else if (const auto* a = std::get_if<ArmijoInit>(&config.initializer)) {
      config.trace.resolve(a->lambda0);
    }
    return config;
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed configuration: ") + e.what());
  }
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open configuration file " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return parse_run_config(doc);
}

std::unique_ptr<BiCriteriaProblem> make_problem(const RunConfig& config) {
  if (const auto* q = std::get_if<QuadraticSpec>(&config.problem)) {
    return std::make_unique<QuadraticProblem>(random_qp(q->n, q->seed));
  }
  if (const auto* q = std::get_if<QuadraticExplicitSpec>(&config.problem)) {
    return std::make_unique<QuadraticProblem>(quadratic_from_json(q->matrices));
  }
  return std::make_unique<shape::ShapeProblem>(std::get<ShapeSpec>(config.problem).config);
}

}  // namespace pareto::cli
