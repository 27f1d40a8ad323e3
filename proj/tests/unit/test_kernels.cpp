#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "squeeze/kernels.hpp"
#include "squeeze/states.hpp"

using namespace squeeze;

namespace {

std::vector<cplx> random_samples(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<cplx> v(n);
  for (auto& x : v) x = {g(rng), g(rng)};
  return v;
}

}  // namespace

TEST_CASE("serial and OpenMP exp_sum agree") {
  std::vector<double> t(300), u(500);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = -3.0 + 0.02 * i;
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = -5.0 + 0.02 * i;
  const auto f = random_samples(u.size(), 1);
  std::vector<cplx> a(t.size()), b(t.size());
  kernels::serial::exp_sum(t, u, f, -1.0, a);
  kernels::omp::exp_sum(t, u, f, -1.0, b);
  for (std::size_t j = 0; j < t.size(); ++j) REQUIRE(std::abs(a[j] - b[j]) < 1e-12);
  // Direct check of one entry.
  cplx want{};
  for (std::size_t k = 0; k < u.size(); ++k) want += f[k] * std::polar(1.0, -t[7] * u[k]);
  CHECK(std::abs(a[7] - want) < 1e-11);
}

TEST_CASE("serial and OpenMP dilation agree") {
  const Axis ax{-4.0, 4.0, 101};
  const auto in = random_samples(ax.n_points * 37, 2);
  for (const std::size_t stride : {std::size_t{1}, std::size_t{37}}) {
    const kernels::DilationLines lines{&ax, stride, stride == 1 ? std::size_t{37} : std::size_t{1}, stride};
    std::vector<cplx> a(in.size()), b(in.size());
    kernels::serial::dilate(lines, 0.8, 1.1, kernels::Stencil::octic, in, a);
    kernels::omp::dilate(lines, 0.8, 1.1, kernels::Stencil::octic, in, b);
    CHECK(a == b);
  }
}

TEST_CASE("interpolation reproduces polynomials") {
  const Axis ax{-1.0, 1.0, 41};
  std::vector<cplx> line(ax.n_points);
  auto p = [](double x) { return cplx{1.0 - 2.0 * x + 0.5 * x * x * x, x * x}; };
  auto p7 = [](double x) { return cplx{std::pow(x, 7) - x * x, 0.0}; };
  for (std::size_t i = 0; i < line.size(); ++i) line[i] = p(ax.at(i));
  cplx out{};
  for (double x : {-0.99, -0.3141, 0.0, 0.777, 0.99}) {
    REQUIRE(kernels::interpolate(ax, line.data(), 1, x, kernels::Stencil::cubic, &out));
    CHECK(std::abs(out - p(x)) < 1e-13);
  }
  for (std::size_t i = 0; i < line.size(); ++i) line[i] = p7(ax.at(i));
  for (double x : {-0.91, 0.123, 0.5}) {
    REQUIRE(kernels::interpolate(ax, line.data(), 1, x, kernels::Stencil::octic, &out));
    CHECK(std::abs(out - p7(x)) < 1e-13);
  }
  CHECK_FALSE(kernels::interpolate(ax, line.data(), 1, 1.5, kernels::Stencil::octic, &out));
}

TEST_CASE("Hermite table and projection") {
  std::vector<double> x(1121);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = -14.0 + 0.025 * i;
  const std::size_t dim = 70;
  std::vector<double> a(dim * x.size()), b(dim * x.size());
  kernels::serial::hermite_table(x, dim, a);
  kernels::omp::hermite_table(x, dim, b);
  CHECK(a == b);
  // h_1 = sqrt2 x h_0.
  CHECK(std::abs(a[x.size() + 560] - std::sqrt(2.0) * x[560] * a[560]) < 1e-15);
  // Orthonormality by trapezoid.
  double worst = 0.0;
  for (std::size_t n : {0u, 13u, 69u})
    for (std::size_t m : {0u, 13u, 69u}) {
      double s = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) s += 0.025 * a[n * x.size() + i] * a[m * x.size() + i];
      worst = std::max(worst, std::abs(s - (n == m ? 1.0 : 0.0)));
    }
  CHECK(worst < 1e-10);

  const auto psi = random_samples(x.size(), 3);
  std::vector<double> w(x.size(), 0.025);
  std::vector<cplx> pa(dim), pb(dim);
  kernels::serial::hermite_project(a, w, psi, dim, pa);
  kernels::omp::hermite_project(a, w, psi, dim, pb);
  for (std::size_t n = 0; n < dim; ++n) CHECK(std::abs(pa[n] - pb[n]) < 1e-12);
}
