// Serial vs OpenMP kernel timings. Usage: bench_kernels [repeats]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <vector>

#include <omp.h>

#include "squeeze/kernels.hpp"
#include "squeeze/states.hpp"

using namespace squeeze;

namespace {

double seconds(const std::function<void()>& f, int repeats) {
  double best = 1e300;
  for (int k = 0; k < repeats; ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

void report(const char* name, double ts, double tp, double diff) {
  std::printf("%-16s serial %9.4f s   omp %9.4f s   speedup %5.2fx   max|diff| %.1e\n", name, ts, tp, ts / tp, diff);
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d\n", omp_get_max_threads());

  const Axis axis = default_axis();
  const auto psi = make_coherent({0.4, 0.2}, axis);
  std::vector<double> x(axis.n_points);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = axis.at(i);

  {
    std::vector<cplx> a(x.size()), b(x.size());
    const auto ts = seconds([&] { kernels::serial::exp_sum(x, x, psi.samples(), -1.0, a); }, repeats);
    const auto tp = seconds([&] { kernels::omp::exp_sum(x, x, psi.samples(), -1.0, b); }, repeats);
    report("exp_sum", ts, tp, max_diff(a, b));
  }
  {
    const Axis ax2{-8.0, 8.0, 1024};
    const auto grid = GridFunction::sample({ax2, ax2}, [](std::span<const double> p) {
      return vacuum_value(p[0]) * vacuum_value(p[1]);
    });
    const kernels::DilationLines lines{&grid.axis(0), grid.stride(0), 1, grid.stride(0)};
    std::vector<cplx> a(grid.size()), b(grid.size());
    const auto ts = seconds([&] { kernels::serial::dilate(lines, std::exp(-0.3), std::exp(-0.15), kernels::Stencil::octic, grid.samples(), a); }, repeats);
    const auto tp = seconds([&] { kernels::omp::dilate(lines, std::exp(-0.3), std::exp(-0.15), kernels::Stencil::octic, grid.samples(), b); }, repeats);
    report("dilate (2D)", ts, tp, max_diff(a, b));
  }
  {
    const std::size_t dim = 60;
    std::vector<double> ta(dim * x.size()), tb(dim * x.size());
    const auto ts = seconds([&] { kernels::serial::hermite_table(x, dim, ta); }, repeats);
    const auto tp = seconds([&] { kernels::omp::hermite_table(x, dim, tb); }, repeats);
    double d = 0.0;
    for (std::size_t i = 0; i < ta.size(); ++i) d = std::max(d, std::abs(ta[i] - tb[i]));
    report("hermite_table", ts, tp, d);

    const auto w = trapezoid_weights(axis);
    std::vector<cplx> a(dim), b(dim);
    const auto ts2 = seconds([&] { kernels::serial::hermite_project(ta, w, psi.samples(), dim, a); }, repeats);
    const auto tp2 = seconds([&] { kernels::omp::hermite_project(ta, w, psi.samples(), dim, b); }, repeats);
    report("hermite_project", ts2, tp2, max_diff(a, b));
  }
  return 0;
}
