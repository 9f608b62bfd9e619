#include <benchmark/benchmark.h>

#include "pareto/ode_rhs.hpp"
#include "pareto/quadratic.hpp"
#include "pareto/runge_kutta.hpp"
#include "pareto/shape/elasticity.hpp"
#include "pareto/shape/shape_problem.hpp"

namespace {

using namespace pareto;

void BM_QuadraticRhs(benchmark::State& state) {
  const QuadraticProblem qp = random_qp(state.range(0), 20210601);
  const Vector x = analytic_solution(qp, Weight(0.5));
  for (auto _ : state) benchmark::DoNotOptimize(rhs(qp, Weight(0.5), x));
}
BENCHMARK(BM_QuadraticRhs)->Arg(10)->Arg(100);

void BM_Rk4StepQuadratic(benchmark::State& state) {
  const QuadraticProblem qp = random_qp(100, 20210601);
  const Vector x = analytic_solution(qp, Weight(0.5));
  const RhsFunction field = [&qp](double l, const Vector& y) { return rhs(qp, Weight(l), y).f; };
  const ButcherTableau rk4 = rk4_tableau();
  for (auto _ : state) benchmark::DoNotOptimize(rk_step(rk4, field, 0.5, x, 0.05));
}
BENCHMARK(BM_Rk4StepQuadratic);

void BM_FemSolve(benchmark::State& state) {
  shape::ShapeConfig c = shape::straight_joint_case();
  c.geometry.nx = static_cast<int>(state.range(0));
  c.geometry.ny = static_cast<int>(state.range(1));
  const Vector x = shape::initial_design(c.geometry);
  for (auto _ : state) benchmark::DoNotOptimize(shape::solve_state(c.geometry, x, c.material));
}
BENCHMARK(BM_FemSolve)->Args({41, 7})->Args({81, 13})->Unit(benchmark::kMillisecond);

void BM_ShapeHessians(benchmark::State& state) {
  const shape::ShapeProblem p(shape::straight_joint_case());
  const Vector x = p.initial_design();
  for (auto _ : state) benchmark::DoNotOptimize(p.hessians(x));
}
BENCHMARK(BM_ShapeHessians)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
