// One pass/fail line per acceptance criterion. Usage:
//   paretotrace_acceptance [--criterion N]
// Without arguments every criterion runs. The exit status is non-zero when
// any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "pareto/descent.hpp"
#include "pareto/linalg.hpp"
#include "pareto/ode_rhs.hpp"
#include "pareto/quadratic.hpp"
#include "pareto/random.hpp"
#include "pareto/scalarization.hpp"
#include "pareto/shape/elasticity.hpp"
#include "pareto/shape/shape_problem.hpp"
#include "pareto/tracing.hpp"
#include "paretotrace/app.hpp"
#include "paretotrace/csv.hpp"
#include "paretotrace/run_config.hpp"
#include "test_problems.hpp"

namespace {

namespace fs = std::filesystem;
using namespace pareto;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof buffer, format, args...);
  return buffer;
}

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("paretotrace_acceptance_" + name);
  fs::remove_all(dir);
  return dir;
}

cli::RunResult run_config_file(const std::string& file, const fs::path& out) {
  cli::RunOptions options;
  options.output_dir = out;
  return cli::run_trace(cli::load_run_config(fs::path(PARETOTRACE_CONFIG_DIR) / file), options);
}

cli::CsvTable read_table(const fs::path& p) {
  std::ifstream in(p);
  return cli::read_csv(in);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// 1. n = 100 quadratic problem, RK4, h = 0.05, ten steps each way from the
// exact start, compared point by point with the closed-form front.
Outcome qp_oracle_agreement() {
  const fs::path dir = scratch("c1");
  const auto t0 = Clock::now();
  const cli::RunResult r = run_config_file("qp100_oracle.json", dir);
  const double elapsed = seconds_since(t0);
  const auto config = cli::load_run_config(fs::path(PARETOTRACE_CONFIG_DIR) / "qp100_oracle.json");
  const auto& spec = std::get<cli::QuadraticSpec>(config.problem);
  const QuadraticProblem qp = random_qp(spec.n, spec.seed);

  const auto records = cli::records_from_table(read_table(dir / "trace.csv"));
  double worst = 0.0;
  for (const auto& rec : records) {
    const Vector exact = analytic_solution(qp, Weight(rec.lambda));
    worst = std::max(worst, (rec.x - exact).norm() / (1.0 + exact.norm()));
  }
  fs::remove_all(dir);
  const bool ok = r.exit_code == 0 && records.size() == 21 && worst <= 1e-5 && elapsed < 5.0;
  return {ok, fmt("%zu points, max relative error %.3g (limit 1e-5), %.2f s (limit 5 s)",
                  records.size(), worst, elapsed)};
}

// 2. Fitted global error slopes on an n = 10 quadratic problem over [0.1, 0.9].
Outcome convergence_orders() {
  const auto t0 = Clock::now();
  const QuadraticProblem qp = random_qp(10, 7);
  const ReferenceSolution exact = [&qp](double l) { return analytic_solution(qp, Weight(l)); };
  TraceConfig c;
  c.lambda0 = c.lambda_low = Weight(0.1);
  c.lambda_high = Weight(0.9);
  c.step = 0.1;
  const Vector x0 = exact(0.1);

  bool ok = true;
  std::string detail;
  for (const auto& tableau : builtin_tableaus()) {
    c.tableau = tableau;
    const OrderStudy s = empirical_order(qp, c, x0, exact);
    double largest = 0.0;
    for (const auto& sample : s.samples) largest = std::max(largest, sample.error);
    if (s.exact()) {
      ok = false;
      detail += fmt("%s: no slope, errors <= %.2g are round-off (method exact on this field); ",
                    tableau.name.c_str(), largest);
    } else {
      const bool within = std::abs(*s.slope - tableau.order) <= 0.3;
      ok = ok && within;
      detail += fmt("%s: slope %.3f (p = %d)%s; ", tableau.name.c_str(), *s.slope, tableau.order,
                    within ? "" : " out of tolerance");
    }
  }

  // Supplementary: the same RK4 study on a non-quadratic problem, where the
  // field is not integrated exactly.
  const auto quartic = testing::quartic_problem(10, 7);
  c.tableau = rk4_tableau();
  const std::vector<double> steps{0.05, 0.025, 0.0125};
  const Vector q0 = Vector::Zero(10);
  const OrderStudy q = order_study(quartic, c, q0, steps, fine_trace_reference(quartic, c, q0, 0.0125 / 16));
  detail += q.exact() ? "rk4 on quartic problem: exact; "
                      : fmt("rk4 on quartic problem: slope %.3f; ", *q.slope);

  const double elapsed = seconds_since(t0);
  ok = ok && elapsed < 10.0;
  detail += fmt("%.2f s (limit 10 s)", elapsed);
  return {ok, detail};
}

// 3. Perturbed starts stay within the continuous-dependence bound.
Outcome gronwall_dominance() {
  const double lambda0 = 0.5;
  const double step = 0.05;
  bool ok = true;
  double worst_ratio = 0.0;
  int checks = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const QuadraticProblem qp = random_qp(10, seed);
    const Vector x0 = analytic_solution(qp, Weight(lambda0));
    TraceConfig c;
    c.lambda0 = Weight(lambda0);
    c.step = step;

    // High-accuracy unperturbed trace: the closed-form front on the same grid.
    Vector direction(10);
    NormalStream normals(1000 + seed);
    for (Eigen::Index i = 0; i < direction.size(); ++i) direction(i) = normals.next();
    direction.normalize();

    for (double delta0 : {1e-3, 1e-2}) {
      const Vector start = x0 + delta0 * direction;
      const auto [fw, bw] = trace_bidirectional(qp, c, start);
      double deviation = 0.0;
      for (const auto& rec : merge_by_lambda(fw, bw)) {
        deviation = std::max(deviation, (rec.x - analytic_solution(qp, Weight(rec.lambda))).norm());
      }
      const LipschitzEstimates est =
          lipschitz_estimates(qp, Weight(lambda0), x0, 2.0 * delta0, kDefaultRho, 64);
      const GronwallBound b =
          gronwall_bound(delta0, 0.0, est.l_f, lambda0 - 0.0, 1.0 - lambda0);
      const bool complete = fw.termination == TerminationReason::kCompleted &&
                            bw.termination == TerminationReason::kCompleted;
      ok = ok && complete && deviation <= b.bound;
      worst_ratio = std::max(worst_ratio, deviation / b.bound);
      ++checks;
    }
  }
  return {ok, fmt("%d cases (10 seeds x 2 perturbations), worst deviation/bound %.3g", checks,
                  worst_ratio)};
}

// 4. Along an RK4 trace from an approximately critical start the scalarized
// gradient norm stays within one tolerance of its initial value.
Outcome gradient_conservation() {
  const QuadraticProblem qp = random_qp(10, 7);
  const double lambda0 = 0.5;
  DescentConfig d;
  d.grad_tolerance = 1e-3;
  d.max_iterations = 1000000;
  const DescentResult start = armijo_descent(qp, Weight(lambda0), Vector::Zero(10), d);
  TraceConfig c;
  c.lambda0 = Weight(lambda0);
  c.step = 0.01;
  const auto [fw, bw] = trace_bidirectional(qp, c, start.x);
  const auto records = merge_by_lambda(fw, bw);
  const double g0 = start.final_grad_norm;
  double worst = 0.0;
  for (const auto& rec : records) worst = std::max(worst, std::abs(rec.grad_norm - g0));
  const bool ok = start.converged && records.size() == 101 && worst <= 1e-3;
  return {ok, fmt("Armijo start after %d iterations, |grad| = %.3g; %zu points, max drift %.3g "
                  "(limit 1e-3)",
                  start.iterations, g0, records.size(), worst)};
}

// 5. Identical criteria: the tracing field vanishes and the trace is constant.
Outcome degenerate_pair() {
  const QuadraticProblem base = random_qp(10, 4);
  const QuadraticProblem same(base.q0(), base.q0(), base.chi0(), base.chi0());
  const Vector x0 = base.chi0() + Vector::LinSpaced(10, -0.5, 0.5);
  TraceConfig c;
  c.step = 0.05;
  const auto [fw, bw] = trace_bidirectional(same, c, x0);
  double worst = 0.0;
  std::size_t count = 0;
  for (const auto& rec : merge_by_lambda(fw, bw)) {
    worst = std::max(worst, (rec.x - x0).norm());
    ++count;
  }
  const double limit = std::numeric_limits<double>::epsilon() * (1.0 + x0.norm());
  return {worst <= limit && count == 21,
          fmt("%zu points, max |x - x0| = %.3g (limit %.3g)", count, worst, limit)};
}

// 6. |Lambda(l') - Lambda(l'')| <= (||Q0|| + ||Q1||) |l' - l''| on a 101-point grid.
Outcome eigenvalue_lipschitz() {
  double worst_ratio = 0.0;
  bool ok = true;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const QuadraticProblem qp = random_qp(8, seed);
    const double constant = spectral_norm(qp.q0()) + spectral_norm(qp.q1());
    double previous = 0.0;
    for (int i = 0; i <= 100; ++i) {
      const double l = i / 100.0;
      const double current = min_eigenvalue((1.0 - l) * qp.q0() + l * qp.q1());
      if (i > 0) {
        const double allowed = constant * 0.01;
        // Round-off in the two eigenvalues is the only slack granted.
        const double slack = 64 * std::numeric_limits<double>::epsilon() * constant;
        ok = ok && std::abs(current - previous) <= allowed + slack;
        worst_ratio = std::max(worst_ratio, std::abs(current - previous) / allowed);
      }
      previous = current;
    }
  }
  return {ok, fmt("100 pairs x 100 intervals, worst |dLambda| / ((|Q0|+|Q1|) dl) = %.3g",
                  worst_ratio)};
}

// 7. Mid-span stresses of the straight rod under uniaxial tension.
Outcome uniaxial_state() {
  const auto t0 = Clock::now();
  const shape::ShapeConfig c = shape::straight_joint_case();
  const shape::FemState s =
      shape::solve_state(c.geometry, shape::initial_design(c.geometry), c.material);
  const double elapsed = seconds_since(t0);
  const double load = c.material.surface_load;
  const double dx = c.geometry.length / (c.geometry.nx - 1);
  const double bottom = -c.geometry.left_height / 2;
  const double top = c.geometry.left_height / 2;
  const double row = c.geometry.left_height / (c.geometry.ny - 1);

  double worst_xx = 0.0;
  double worst_yy = 0.0;
  int elements = 0;
  for (std::size_t e = 0; e < s.mesh.triangles.size(); ++e) {
    const auto& t = s.mesh.triangles[e];
    Eigen::Vector2d centroid = Eigen::Vector2d::Zero();
    for (int k : t) centroid += s.mesh.nodes[k] / 3.0;
    const bool mid_span = std::abs(centroid.x() - c.geometry.length / 2) <= dx;
    const bool interior = centroid.y() > bottom + row && centroid.y() < top - row;
    if (!mid_span || !interior) continue;
    ++elements;
    worst_xx = std::max(worst_xx, std::abs(s.stress[e](0, 0) - load) / load);
    worst_yy = std::max(worst_yy, std::abs(s.stress[e](1, 1)) / s.stress[e](0, 0));
  }
  const bool ok = elements > 0 && worst_xx <= 0.05 && worst_yy <= 0.05 && elapsed < 2.0;
  return {ok, fmt("%d interior mid-span elements, max |sxx/g - 1| = %.3g, max |syy/sxx| = %.3g "
                  "(limits 0.05), %.3f s (limit 2 s)",
                  elements, worst_xx, worst_yy, elapsed)};
}

// 8. Straight joint: recover the start weight and trace with the midpoint rule.
Outcome straight_joint_trace() {
  const fs::path dir = scratch("c8");
  const auto t0 = Clock::now();
  const cli::RunResult r = run_config_file("shape_straight_joint.json", dir);
  const double elapsed = seconds_since(t0);
  const double lambda0 = r.manifest.at("initializer").at("lambda0").get<double>();
  const auto records = cli::records_from_table(read_table(dir / "trace.csv"));
  fs::remove_all(dir);

  const shape::ShapeProblem problem(shape::straight_joint_case());
  double meanline = 0.0;
  bool positive = true;
  bool volume_monotone = true;
  bool trade_off = true;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto [ml, th] = problem.profiles(records[i].x);
    meanline = std::max(meanline, ml.cwiseAbs().maxCoeff());
    positive = positive && records[i].min_eigenvalue > 0.0;
    if (i == 0) continue;
    const double d0 = records[i].j0 - records[i - 1].j0;
    const double d1 = records[i].j1 - records[i - 1].j1;
    volume_monotone = volume_monotone && d0 > 0.0;
    trade_off = trade_off && d0 > 0.0 && d1 < 0.0;
  }
  const double span = records.empty() ? 0.0 : records.back().lambda - records.front().lambda;
  const bool ok = r.exit_code == 0 && lambda0 > 0.5 && lambda0 < 0.95 && span >= 0.3 &&
                  meanline <= 1e-6 && positive && volume_monotone && trade_off && elapsed < 600.0;
  return {ok, fmt("lambda0 = %.4f, %zu points over [%.2f, %.2f] (span %.2f), max |meanline| = "
                  "%.2g, min eigenvalue > 0: %s, volume increasing: %s, J1 decreasing: %s, "
                  "%.1f s (limit 600 s)",
                  lambda0, records.size(), records.empty() ? 0.0 : records.front().lambda,
                  records.empty() ? 0.0 : records.back().lambda, span, meanline,
                  positive ? "yes" : "no", volume_monotone ? "yes" : "no",
                  trade_off ? "yes" : "no", elapsed)};
}

// 9. Angular quadrature with 64 points against a brute-force sum over 10^6 angles.
Outcome weibull_quadrature() {
  shape::MaterialData m;
  m.weibull_module = 5.0;
  m.sigma0 = 2.0;
  const double s = 1.0;
  const Eigen::Matrix2d sigma = Eigen::Vector2d(s, 0.0).asDiagonal();
  const double j64 = shape::weibull_intensity({sigma}, {1.0}, m, 64);

  // Independent oracle: (1/2pi) sum_k (2pi/N) ((s cos^2 theta_k)^+ / sigma0)^m
  const long n = 1000000;
  double sum = 0.0;
  for (long k = 0; k < n; ++k) {
    const double c = std::cos(2.0 * std::numbers::pi * static_cast<double>(k) / n);
    sum += std::pow(std::max(s * c * c, 0.0) / m.sigma0, m.weibull_module);
  }
  const double dense = sum / n;
  const double rel = std::abs(j64 - dense) / dense;
  return {rel <= 1e-4, fmt("J1(64) = %.15g, dense oracle = %.15g, relative difference %.3g "
                           "(limit 1e-4)",
                           j64, dense, rel)};
}

// 10. Two runs of the criterion 1 configuration write byte-identical CSV files.
Outcome determinism() {
  const fs::path a = scratch("c10a");
  const fs::path b = scratch("c10b");
  run_config_file("qp100_oracle.json", a);
  run_config_file("qp100_oracle.json", b);
  int files = 0;
  bool identical = true;
  for (const auto& entry : fs::directory_iterator(a)) {
    if (entry.path().extension() != ".csv") continue;
    ++files;
    const fs::path other = b / entry.path().filename();
    identical = identical && fs::exists(other) && slurp(entry.path()) == slurp(other);
  }
  fs::remove_all(a);
  fs::remove_all(b);
  return {files > 0 && identical, fmt("%d CSV file(s) compared, identical: %s", files,
                                      identical ? "yes" : "no")};
}

struct Criterion {
  const char* title;
  std::function<Outcome()> check;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"quadratic oracle agreement", qp_oracle_agreement},
      {"convergence orders", convergence_orders},
      {"Gronwall dominance", gronwall_dominance},
      {"gradient conservation", gradient_conservation},
      {"degenerate pair", degenerate_pair},
      {"eigenvalue Lipschitz property", eigenvalue_lipschitz},
      {"shape state solve", uniaxial_state},
      {"straight joint trace", straight_joint_trace},
      {"Weibull quadrature", weibull_quadrature},
      {"determinism", determinism},
  };
  return all;
}

bool run(int index) {
  const Criterion& c = criteria()[index - 1];
  Outcome o;
  try {
    o = c.check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  std::printf("criterion %d %s: %s | %s\n", index, o.pass ? "PASS" : "FAIL", c.title,
              o.detail.c_str());
  std::fflush(stdout);
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  const int count = static_cast<int>(criteria().size());
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      const int n = std::atoi(argv[++i]);
      if (n < 1 || n > count) {
        std::fprintf(stderr, "criterion must be between 1 and %d\n", count);
        return 2;
      }
      selected.push_back(n);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }
  if (selected.empty()) {
    for (int i = 1; i <= count; ++i) selected.push_back(i);
  }
  bool all = true;
  for (int n : selected) all = run(n) && all;
  return all ? 0 : 1;
}
