#include "pareto/tracing.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <map>

#include "pareto/ode_rhs.hpp"

namespace pareto {
namespace {

constexpr double kGridSnapTolerance = 1e-9;

TraceRecord make_record(const BiCriteriaProblem& problem, double lambda, const Vector& x,
                        const PointEvaluation& eval) {
  const auto [j0, j1] = problem.values(x);
  return {lambda, x, j0, j1, eval.scalarized_gradient.norm(), eval.rhs.min_eigenvalue};
}

// Round-off can push a stage abscissa a few ulps outside [0, 1].
Weight stage_weight(double lambda) { return Weight(std::clamp(lambda, 0.0, 1.0)); }

double round_off_floor(const Vector& reference) {
  return 1e-13 * (1.0 + reference.norm());
}

}  // namespace

void TraceConfig::validate() const {
  if (!(lambda_low.value() <= lambda0.value() && lambda0.value() <= lambda_high.value())) {
    throw InputError("trace interval must satisfy lambda_low <= lambda0 <= lambda_high");
  }
  if (!(step > 0.0) || !std::isfinite(step)) throw InputError("step size must be positive");
  const double span = lambda_high.value() - lambda_low.value();
  if (span > 0.0 && step > span) {
    throw InputError("step size exceeds the trace interval");
  }
  if (!(epsilon > 0.0)) throw InputError("criticality tolerance must be positive");
  tableau.validate();
}

std::string to_string(Direction d) { return d == Direction::kForward ? "forward" : "backward"; }

std::string to_string(TerminationReason r) {
  switch (r) {
    case TerminationReason::kCompleted:
      return "completed";
    case TerminationReason::kDefinitenessLost:
      return "definiteness-lost";
    case TerminationReason::kRhsError:
      return "rhs-error";
  }
  return "unknown";
}

std::vector<double> lambda_grid(double lambda0, double target, double step) {
  if (!(step > 0.0)) throw InputError("step size must be positive");
  const double span = std::abs(target - lambda0);
  const double sign = target >= lambda0 ? 1.0 : -1.0;
  std::vector<double> grid{lambda0};
  if (span == 0.0) return grid;

  const double whole = std::round(span / step);
  const bool divisible = std::abs(whole * step - span) <= kGridSnapTolerance * step;
  const long long full_steps =
      divisible ? static_cast<long long>(whole) : static_cast<long long>(std::floor(span / step));
  for (long long i = 1; i <= full_steps; ++i) {
    grid.push_back(lambda0 + sign * static_cast<double>(i) * step);
  }
  if (divisible) {
    grid.back() = target;
  } else {
    grid.push_back(target);
  }
  return grid;
}

ParetoTrace trace(const BiCriteriaProblem& problem, const TraceConfig& config, const Vector& x0,
                  Direction direction) {
  config.validate();
  problem.check_dimension(x0);

  ParetoTrace out;
  out.direction = direction;

  const double lambda0 = config.lambda0.value();
  PointEvaluation eval = evaluate_point(problem, config.lambda0, x0);
  out.records.push_back(make_record(problem, lambda0, x0, eval));

  const double target = direction == Direction::kForward ? config.lambda_high.value()
                                                         : config.lambda_low.value();
  const std::vector<double> grid = lambda_grid(lambda0, target, config.step);

  const RhsFunction field = [&problem](double lambda, const Vector& x) {
    return rhs(problem, stage_weight(lambda), x).f;
  };

  Vector x = x0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double h = grid[i] - grid[i - 1];
    try {
      x = rk_step(config.tableau, field, grid[i - 1], x, h, eval.rhs.f);
      eval = evaluate_point(problem, Weight(grid[i]), x);
    } catch (const DefinitenessLost& e) {
      if (!config.stop_on_definiteness) throw;
      out.termination = TerminationReason::kDefinitenessLost;
      out.message = e.what();
      break;
    } catch (const Error& e) {
      out.termination = TerminationReason::kRhsError;
      out.message = e.what();
      break;
    }
    out.records.push_back(make_record(problem, grid[i], x, eval));
  }
  return out;
}

std::pair<ParetoTrace, ParetoTrace> trace_bidirectional(const BiCriteriaProblem& problem,
                                                        const TraceConfig& config,
                                                        const Vector& x0) {
  auto backward = std::async(std::launch::async, [&] {
    return trace(problem, config, x0, Direction::kBackward);
  });
  ParetoTrace forward = trace(problem, config, x0, Direction::kForward);
  return {std::move(forward), backward.get()};
}

std::vector<TraceRecord> merge_by_lambda(const ParetoTrace& forward, const ParetoTrace& backward) {
  std::vector<TraceRecord> merged(backward.records.rbegin(), backward.records.rend());
  if (!merged.empty() && !forward.records.empty()) merged.pop_back();
  merged.insert(merged.end(), forward.records.begin(), forward.records.end());
  return merged;
}

OrderStudy order_study(const BiCriteriaProblem& problem, const TraceConfig& config,
                       const Vector& x0, const std::vector<double>& steps,
                       const ReferenceSolution& reference) {
  if (steps.size() < 2) throw InputError("an order study needs at least two step sizes");
  const bool forward = config.lambda_high.value() > config.lambda0.value();
  const double target = forward ? config.lambda_high.value() : config.lambda_low.value();
  const Vector exact_end = reference(target);

  OrderStudy study;
  for (const double step : steps) {
    TraceConfig run = config;
    run.step = step;
    const ParetoTrace t =
        trace(problem, run, x0, forward ? Direction::kForward : Direction::kBackward);
    if (t.termination != TerminationReason::kCompleted) {
      throw NumericalError("order study trace stopped early: " + t.message);
    }
    OrderSample sample{step, (t.records.back().x - exact_end).norm(), std::nullopt};
    if (!study.samples.empty() && sample.error > 0.0) {
      sample.ratio = study.samples.back().error / sample.error;
    }
    study.samples.push_back(sample);
  }

  const double floor = round_off_floor(exact_end);
  std::vector<std::pair<double, double>> points;
  for (const OrderSample& s : study.samples) {
    if (s.error > floor) points.emplace_back(std::log(s.step), std::log(s.error));
  }
  if (points.size() >= 2) {
    double mx = 0.0, my = 0.0;
    for (const auto& [px, py] : points) {
      mx += px;
      my += py;
    }
    mx /= static_cast<double>(points.size());
    my /= static_cast<double>(points.size());
    double sxy = 0.0, sxx = 0.0;
    for (const auto& [px, py] : points) {
      sxy += (px - mx) * (py - my);
      sxx += (px - mx) * (px - mx);
    }
    study.slope = sxy / sxx;
  }
  return study;
}

OrderStudy empirical_order(const BiCriteriaProblem& problem, const TraceConfig& config,
                           const Vector& x0, const ReferenceSolution& reference) {
  return order_study(problem, config, x0, {config.step, config.step / 2.0, config.step / 4.0},
                     reference);
}

ReferenceSolution fine_trace_reference(const BiCriteriaProblem& problem, const TraceConfig& config,
                                       const Vector& x0, double step) {
  std::map<double, Vector> by_lambda;
  TraceConfig fine = config;
  fine.step = step;
  for (const ParetoTrace& t : {trace(problem, fine, x0, Direction::kForward),
                               trace(problem, fine, x0, Direction::kBackward)}) {
    if (t.termination != TerminationReason::kCompleted) {
      throw NumericalError("reference trace stopped early: " + t.message);
    }
    for (const TraceRecord& r : t.records) by_lambda.emplace(r.lambda, r.x);
  }
  return [table = std::move(by_lambda)](double lambda) {
    const auto it = table.find(lambda);
    if (it == table.end()) throw InputError("lambda is not on the reference grid");
    return it->second;
  };
}

}  // namespace pareto
