#include <doctest.h>

#include <cmath>
#include <random>

#include "squeeze/errors.hpp"
#include "squeeze/singlemode.hpp"
#include "squeeze/spectral.hpp"
#include "squeeze/states.hpp"

using namespace squeeze;

namespace {

cplx unit(double) { return 1.0; }
cplx squeeze_multiplier(double E) { return std::polar(1.0, E); }

HybridFunction gaussian(double c) {
  return {TaylorState::gaussian(1.0, 0.0, c, 80), [c](double x) { return cplx{std::exp(c * x * x)}; }};
}

GridFunction odd_state() {
  auto f = pointwise(make_vacuum(), [](double x, cplx v) { return std::sqrt(2.0) * x * v; });
  return f;
}

}  // namespace

TEST_CASE("generalized eigenfunctions") {
  for (double r : {0.3, 1.0})
    for (double E : {-2.0, 0.0, 3.5}) {
      CHECK(std::abs(psi_E(E, Branch::plus, r, 1.0) - 1.0 / std::sqrt(2 * kPi * r)) < 1e-15);
      CHECK(psi_E(E, Branch::minus, r, 1.0) == cplx{});
      CHECK(psi_E(E, Branch::plus, r, -1.0) == cplx{});
      for (double x : {0.01, 0.7, 13.0})
        CHECK(std::abs(std::abs(psi_E(E, Branch::plus, r, x)) * std::sqrt(x) - 1.0 / std::sqrt(2 * kPi * r)) < 1e-14);
    }
  CHECK_THROWS_AS(psi_E(1.0, Branch::plus, 1.0, 0.0), SingularPointError);
}

TEST_CASE("Mellin amplitudes of even and odd states") {
  const auto amp = mellin_forward(make_vacuum(), 0.5);
  double d = 0.0;
  for (std::size_t j = 0; j < amp.E.size(); ++j) d = std::max(d, std::abs(amp.c_plus[j] - amp.c_minus[j]));
  CHECK(d < 1e-10);
  CHECK(std::abs(plancherel_norm(amp) - 1.0) < 1e-6);

  const auto odd = mellin_forward(odd_state(), 0.5);
  d = 0.0;
  for (std::size_t j = 0; j < odd.E.size(); ++j) d = std::max(d, std::abs(odd.c_plus[j] + odd.c_minus[j]));
  CHECK(d < 1e-10);
  CHECK(std::abs(plancherel_norm(odd) - std::pow(norm(odd_state()), 2)) < 1e-6);
}

TEST_CASE("E grid is symmetric and tied to r") {
  const auto amp = mellin_forward(make_vacuum(), 0.5);
  CHECK(std::abs(amp.E.front() + amp.E.back()) < 1e-12);
  CHECK(amp.E.back() <= 40.0 * 0.5 + 1e-12);
}

TEST_CASE("Mellin coverage error") {
  // A state that has not decayed at the grid edge cannot be represented.
  CHECK_THROWS_AS(mellin_forward(make_coherent(4.0, Axis{-4.0, 4.0, 1024}), 0.5), CoverageError);
  CHECK_THROWS_AS(mellin_forward(make_vacuum(), 0.0), ConfigError);
}

TEST_CASE("spectral resolution") {
  const auto v = make_vacuum();
  const auto amp = mellin_forward(v, 0.5);
  CHECK(l2_distance(spectral_apply(amp, unit), v) < 1e-6);
  CHECK(l2_distance(spectral_apply(amp, squeeze_multiplier), apply_exact(0.5, v)) < 1e-6);

  const auto amp1 = mellin_forward(v, 1.0);
  const auto hv = spectral_apply(amp1, [](double E) { return cplx{E}; });
  CHECK(l2_distance(hv, apply_H_grid(1.0, v)) < 1e-5);
}

TEST_CASE("spectral truncation error") {
  const auto amp = mellin_forward(make_vacuum(), 0.5);
  CHECK_THROWS_AS(spectral_apply(amp, [](double E) { return cplx{std::exp(std::abs(E))}; }), TruncationError);
}

TEST_CASE("continued pairing against the Gamma function") {
  const auto phi = gaussian(-1.0);
  CHECK(std::abs(continue_pairing(0.0, Branch::plus, phi).value - std::sqrt(kPi) / 2) < 1e-12);
  CHECK(std::abs(continue_pairing(-0.5, Branch::plus, phi).value - std::tgamma(0.25) / 2) < 1e-12);
  // Real lambda below -1: the continuation matches Gamma((lambda+1)/2)/2.
  for (double l : {-1.5, -2.7, -4.2, -5.9})
    CHECK(std::abs(continue_pairing(l, Branch::plus, phi).value - std::tgamma((l + 1) / 2) / 2) < 1e-9);
  // Even phi: both branches agree.
  CHECK(std::abs(continue_pairing({-2.3, 0.4}, Branch::plus, phi).value -
                 continue_pairing({-2.3, 0.4}, Branch::minus, phi).value) < 1e-12);
}

TEST_CASE("continuation is independent of the subtraction count") {
  const auto phi = gaussian(-0.5);
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> re(-6.0, 1.0), im(-2.0, 2.0);
  int done = 0;
  while (done < 20) {
    const cplx l{re(rng), im(rng)};
    bool near = false;
    for (int n = 1; n <= 8; ++n) near |= std::abs(l + double(n)) < 0.1;
    if (near) continue;
    const auto a = continue_pairing(l, Branch::plus, phi);
    for (std::size_t extra : {1u, 4u}) {
      const auto b = continue_pairing(l, Branch::plus, phi, a.n_subtracted + extra);
      CHECK(std::abs(a.value - b.value) < 1e-9);
    }
    ++done;
  }
}

TEST_CASE("continuation preconditions") {
  const auto phi = gaussian(-1.0);
  CHECK_THROWS_AS(continue_pairing({-3.5, 0.0}, Branch::plus, phi, 1), PreconditionError);
  CHECK_THROWS_AS(continue_pairing({-3.5, 0.0}, Branch::plus, phi, 500), PreconditionError);
}

TEST_CASE("pole flags and energies") {
  const auto phi = gaussian(-1.0);
  for (std::size_t n = 0; n <= 8; ++n) {
    const cplx l = -double(n) - 1.0;
    const auto c = continue_pairing(l, Branch::plus, phi, n + 2);
    CHECK(c.pole_flags == std::vector<std::size_t>{n});
    CHECK(energy_of_lambda(l, 0.6) == cplx(0.0, -0.6 * (n + 0.5)));
  }
  CHECK(continue_pairing({-1.5, 0.0}, Branch::plus, phi).pole_flags.empty());
  CHECK(std::abs(lambda_of_energy(energy_of_lambda({-2.2, 0.3}, 0.7), 0.7) - cplx(-2.2, 0.3)) < 1e-15);
}

TEST_CASE("residues") {
  const auto phi = gaussian(-1.0);
  CHECK(std::abs(pairing_residue(0, phi) - 1.0) < 1e-8);
  CHECK(std::abs(pairing_residue(2, phi) + 1.0) < 1e-8);
  CHECK(std::abs(pairing_residue(1, phi)) < 1e-8);

  const double r = 0.9;
  auto one_plus_x = HybridFunction{
      [] {
        const auto g = TaylorState::gaussian(1.0, 0.0, -1.0, 80);
        std::vector<cplx> c(g.size() + 1);
        for (std::size_t n = 0; n < g.size(); ++n) {
          c[n] += g.coeff(n);
          c[n + 1] += g.coeff(n);
        }
        return TaylorState(c);
      }(),
      [](double x) { return cplx{(1.0 + x) * std::exp(-x * x)}; }};
  for (std::size_t n : {0u, 2u}) {
    const auto a = residue_at_resonance(n, r, gaussian(-1.0));
    const auto b = residue_at_resonance(n, r, gaussian(-0.5));
    const auto c = residue_at_resonance(n, r, one_plus_x);
    CHECK(std::abs(a.ratio - b.ratio) < 1e-7 * std::abs(a.ratio));
    CHECK(std::abs(a.ratio - c.ratio) < 1e-7 * std::abs(a.ratio));
    CHECK(a.pole_E == -resonant_pair(n, r).E_n);
  }
  CHECK_THROWS_AS(residue_at_resonance(1, r, gaussian(-1.0)), IllConditionedError);
}

TEST_CASE("inverted oscillator") {
  CHECK(inverted_oscillator_check(1.0).determinant == doctest::Approx(1.0).epsilon(1e-15));
  const auto rep = inverted_oscillator_check(0.7);
  CHECK(rep.congruence_residual <= 1e-14);
  CHECK(rep.eigenvalue_residual < 1e-14);
  CHECK(rep.eigenvalues.size() == 6);
  CHECK(std::abs(rep.omega - cplx(0.0, 0.7)) < 1e-15);
}

TEST_CASE("spectral commutation with the Fourier transform") {
  const auto psi = make_coherent({0.5, 0.0});
  auto energy = [](double E) { return cplx{E}; };
  const auto lhs = spectral_apply(mellin_forward(fourier_transform(psi), 0.5), energy);
  const auto rhs = cplx{-1.0} * fourier_transform(spectral_apply(mellin_forward(psi, 0.5), energy));
  CHECK(l2_distance(lhs, rhs) < 1e-6);
}
