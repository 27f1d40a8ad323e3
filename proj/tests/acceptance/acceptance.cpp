// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <Eigen/SVD>

#include "squeeze/fock.hpp"
#include "squeeze/multimode.hpp"
#include "squeeze/singlemode.hpp"
#include "squeeze/spectral.hpp"
#include "squeeze/states.hpp"

using namespace squeeze;

namespace {

int failures = 0;

struct Part {
  std::string what;
  double residual;
  double tol;
};

void report(int id, const char* title, const std::vector<Part>& parts) {
  bool ok = true;
  for (const auto& p : parts) ok &= std::isfinite(p.residual) && p.residual <= p.tol;
  if (!ok) ++failures;
  std::printf("%s  %2d  %s\n", ok ? "PASS" : "FAIL", id, title);
  for (const auto& p : parts)
    std::printf("          %-58s %.3e <= %.0e%s\n", p.what.c_str(), p.residual, p.tol,
                std::isfinite(p.residual) && p.residual <= p.tol ? "" : "   <-- fails");
}

template <class F>
void guarded(int id, const char* title, F&& body) {
  try {
    report(id, title, body());
  } catch (const std::exception& e) {
    ++failures;
    std::printf("FAIL  %2d  %s\n          exception: %s\n", id, title, e.what());
  }
}

cplx exp_s(double E) { return std::polar(1.0, E); }

// ---------------------------------------------------------------------------

std::vector<Part> triple_agreement() {
  const Axis axis = default_axis();
  const auto vac = make_vacuum(axis);
  const auto t = taylor_of_state(Vacuum{}, 60);
  std::vector<Part> parts;
  for (double r : {0.25, 0.5, 1.0}) {
    const auto exact = apply_exact(r, vac);
    const auto spectral = spectral_apply(mellin_forward(vac, r), exp_s);
    const auto series_t = apply_series_Z(r, t);
    const auto series = series_t.on_grid(axis);
    // A degree-60 series is only meaningful where its tail is below 1e-12.
    const double R = std::min(series_t.convergence_radius(1e-12), axis.x_max);
    char buf[96];
    std::snprintf(buf, sizeof buf, "r=%.2f exact vs spectral (|x|<=8)", r);
    parts.push_back({buf, l2_distance(exact, spectral), 1e-6});
    std::snprintf(buf, sizeof buf, "r=%.2f series vs exact (|x|<=%.2f)", r, R);
    parts.push_back({buf, l2_distance_within(series, exact, R), 1e-6});
    std::snprintf(buf, sizeof buf, "r=%.2f series vs spectral (|x|<=%.2f)", r, R);
    parts.push_back({buf, l2_distance_within(series, spectral, R), 1e-6});
  }
  return parts;
}

std::vector<Part> discrete_eigenvalues() {
  double coeff = 0.0, product = 0.0;
  for (double r : {0.3, 1.0, 2.5})
    for (std::size_t n = 0; n <= 100; ++n) {
      const auto f = TaylorState::monomial(n);
      const auto hf = apply_H_taylor(r, f);
      for (std::size_t k = 0; k < std::max(hf.size(), f.size()); ++k) {
        const cplx expected = cplx{0.0, r * (static_cast<double>(n) + 0.5)} * f.coeff(k);
        coeff = std::max(coeff, std::abs(hf.coeff(k) - expected));
      }
      const auto p = resonant_pair(n, r);
      product = std::max(product, std::abs(p.s_plus * p.s_minus - 1.0));
    }
  return {{"H f+_n - i r (n+1/2) f+_n, n<=100 (coefficient-exact)", coeff, 0.0},
          {"|s+_n s-_n - 1|, n<=100", product, 1e-15}};
}

std::vector<Part> biorthogonality_completeness() {
  double delta = 0.0;
  for (std::size_t n = 0; n <= 20; ++n)
    for (std::size_t m = 0; m <= 20; ++m) {
      const double want = n == m ? 1.0 : 0.0;
      delta = std::max(delta, std::abs(biorthogonality(n, m) - want));
      delta = std::max(delta, std::abs(DualState::basis(m).pair(TaylorState::monomial(n)) - want));
    }
  double round_trip = 0.0;
  for (const auto& t : {taylor_of_state(Vacuum{}, 60), taylor_of_state(Coherent{{0.7, -0.3}}, 60),
                        TaylorState::gaussian(1.0, {0.4, 0.1}, {-0.6, 0.2}, 80)}) {
    const auto back = resolve_identity_Z(t);
    for (std::size_t n = 0; n < t.size(); ++n) round_trip = std::max(round_trip, std::abs(back.coeff(n) - t.coeff(n)));
  }
  return {{"<f-_m, f+_n> - delta_nm, n,m<=20", delta, 0.0},
          {"sum |f+_n><f-_n| round trip (coefficient-exact)", round_trip, 0.0}};
}

HybridFunction gaussian_hybrid(cplx b, cplx c, std::size_t n_max = 80) {
  return HybridFunction{TaylorState::gaussian(1.0, b, c, n_max),
                        [b, c](double x) { return std::exp(b * x + c * x * x); }};
}

std::vector<Part> resonance_poles() {
  // Gamma((lambda+1)/2)/2, 20 digits, computed independently.
  struct Ref {
    cplx lambda;
    cplx value;
  };
  const Ref refs[] = {
      {{0.5, 0.0}, {0.61270835123258882256, 0.0}},
      {{2.3, 0.0}, {0.45005840815861574421, 0.0}},
      {{-0.5, 0.7}, {0.51246400550617692665, -0.83626191831735418975}},
      {{-1.5, -0.4}, {-1.6283470944767143127, 0.8156604057902654327}},
      {{-2.5, 0.3}, {-1.8649151730357301644, 0.73709804219285705996}},
      {{-3.3, 1.1}, {0.11759055353444790792, 0.56633335913734314068}},
      {{-4.6, -0.2}, {1.3357013788808830939, 0.43147683170318319687}},
      {{0.2, 2.0}, {0.17973210227421046403, -0.18656443476296220647}},
      {{-1.2, -1.5}, {-0.22761962848912005699, 0.38852445385957052183}},
      {{-5.5, 0.5}, {-0.37338844038361278466, -0.41241207767460985276}},
  };
  const auto phi = gaussian_hybrid(0.0, -1.0);
  double value = 0.0;
  for (const auto& ref : refs)
    value = std::max(value, std::abs(continue_pairing(ref.lambda, Branch::plus, phi).value - ref.value));

  double residue = 0.0;
  for (std::size_t n = 0; n <= 5; ++n) {
    const double want = n % 2 ? 0.0 : std::pow(-1.0, n / 2) / std::tgamma(n / 2 + 1.0);
    residue = std::max(residue, std::abs(pairing_residue(n, phi) - want));
  }

  const double r = 0.7;
  double position = 0.0;
  for (std::size_t n = 0; n <= 8; ++n) {
    const cplx lambda = -static_cast<double>(n) - 1.0;
    const auto c = continue_pairing(lambda, Branch::plus, phi, n + 2);
    if (c.pole_flags != std::vector<std::size_t>{n}) position = 1.0;
    const cplx want{0.0, -r * (static_cast<double>(n) + 0.5)};
    position = std::max(position, std::abs(energy_of_lambda(lambda, r) - want));
    position = std::max(position, std::abs(lambda_of_energy(want, r) - lambda));
  }
  return {{"M(lambda) vs Gamma((lambda+1)/2)/2, 10 off-pole points", value, 1e-9},
          {"residue at lambda=-n-1 vs phi^(n)(0)/n!, n<=5", residue, 1e-8},
          {"poles flagged at lambda=-n-1 <-> E=-ir(n+1/2), n<=8", position, 1e-15}};
}

std::vector<Part> residue_proportionality() {
  const double r = 0.8;
  // (1+x) e^{-x^2}, (1+x) e^{-x^2/2}, e^{x - x^2}: nonzero at every order.
  auto one_plus_x = [](cplx c) {
    HybridFunction h;
    const auto g = TaylorState::gaussian(1.0, 0.0, c, 80);
    std::vector<cplx> co(g.size() + 1);
    for (std::size_t n = 0; n < g.size(); ++n) {
      co[n] += g.coeff(n);
      co[n + 1] += g.coeff(n);
    }
    h.taylor = TaylorState(co);
    h.eval = [c](double x) { return (1.0 + x) * std::exp(c * x * x); };
    return h;
  };
  const std::vector<HybridFunction> family = {one_plus_x(-1.0), one_plus_x(-0.5), gaussian_hybrid(1.0, -1.0)};
  // Even family: e^{-x^2}, e^{-x^2/2}, e^{-2x^2}; usable for even n only.
  const std::vector<HybridFunction> even = {gaussian_hybrid(0.0, -1.0), gaussian_hybrid(0.0, -0.5),
                                            gaussian_hybrid(0.0, -2.0)};
  double spread = 0.0;
  for (std::size_t n = 0; n <= 4; ++n)
    for (const Branch branch : {Branch::plus, Branch::minus}) {
      std::vector<cplx> ratios;
      for (const auto& f : family) ratios.push_back(residue_at_resonance(n, r, f, branch).ratio);
      if (n % 2 == 0)
        for (const auto& f : even) ratios.push_back(residue_at_resonance(n, r, f, branch).ratio);
      for (const auto& q : ratios) spread = std::max(spread, std::abs(q - ratios.front()) / std::abs(ratios.front()));
    }
  return {{"relative spread of residue/<f-_n,phi>, 3 functions, n<=4", spread, 1e-7}};
}

std::vector<Part> inverted_oscillator() {
  double det = 0.0, congruence = 0.0;
  for (double r : {0.25, 0.5, 1.0, 2.0}) {
    const auto rep = inverted_oscillator_check(r);
    det = std::max(det, std::abs(rep.determinant - 1.0));
    congruence = std::max(congruence, rep.congruence_residual);
  }
  return {{"|det T - 1|", det, 1e-14}, {"T^T A T - diag(-r^2/2, 1/2)", congruence, 1e-14}};
}

std::vector<Part> takagi_random() {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double recon = 0.0, herm = 0.0, sv = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index n = Eigen::Index{2} << (trial % 3);
    MatrixXc z(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index k = i; k < n; ++k) z(i, k) = z(k, i) = std::polar(std::sqrt(u(rng)), 2.0 * kPi * u(rng));
    const auto t = takagi(z);
    recon = std::max(recon, (conjugate_by_rotation(t.Phi, z) - t.Z_D).norm());
    herm = std::max(herm, hermiticity_defect(t.Phi));
    const Eigen::VectorXd s = Eigen::JacobiSVD<MatrixXc>(z).singularValues();
    for (Eigen::Index k = 0; k < n; ++k) sv = std::max(sv, std::abs(std::abs(t.Z_D(k, k)) - s(k)));
  }
  return {{"||e^{-i Phi} Z e^{-i Phi^T} - Z_D||_F, 100 matrices", recon, 1e-10},
          {"Phi Hermiticity", herm, 1e-12},
          {"|Z_D| vs singular values (SVD)", sv, 1e-10}};
}

std::vector<Part> two_mode() {
  const auto rep = two_mode_rotation_identity();
  const std::size_t d = 25;
  const double r = 0.3;
  const auto b = beam_splitter_matrix(kPi / 4, d);
  const MatrixXc lhs = b.matrix.adjoint() * product_squeeze_matrix(r, -r, d).matrix * b.matrix;
  const std::size_t total = two_mode_interior_total(d);
  const double bs = two_mode_block_difference(lhs, two_mode_squeeze_matrix(r, d).matrix, d, total);

  double mono = 0.0;
  const double rv = 0.45;
  const double rs[] = {rv, -rv};
  for (std::size_t n = 0; n <= 12; ++n)
    for (std::size_t m = 0; m <= 12; ++m) {
      const std::size_t idx[] = {n, m};
      const auto t = multimode_series_apply(rs, TensorTaylorState::monomial(idx));
      const double k = rv * (static_cast<double>(n) - static_cast<double>(m));
      const cplx c0 = TensorTaylorState::monomial(idx).coeff(idx);
      mono = std::max(mono, std::abs(t.coeff(idx) - std::exp(-k) * c0));
      const auto l = eigen_lattice(rs, idx);
      mono = std::max({mono, std::abs(l.s_plus - std::exp(k)), std::abs(l.s_minus - std::exp(-k))});
    }
  char buf[96];
  std::snprintf(buf, sizeof buf, "B^H S1(z) S2(-z) B vs S_2(z), dim 25, n1+n2<=%zu", total);
  return {{"e^{i pi/4 s2} s1 e^{-i pi/4 s2} = s3 (and generator map)",
           std::max(rep.pauli_residual, rep.generator_residual), 1e-14},
          {buf, bs, 1e-6},
          {"s+-_nm = e^{+-r(n-m)} on monomials (coefficient-exact)", mono, 0.0}};
}

std::vector<Part> fock_oracle() {
  const Axis axis = default_axis();
  const std::size_t dim = 60;
  double grid_l2 = 0.0, amp = 0.0, parity = 0.0;
  for (double r : {0.1, 0.25, 0.5}) {
    const VectorXc v = squeeze_matrix(r, dim).matrix.col(0);
    grid_l2 = std::max(grid_l2, l2_distance(squeezed_vacuum(r, axis), synthesize_from_fock(v, axis)));
    // <2n|S(r)|0> = tanh(r)^n sqrt((2n)!) / (2^n n! sqrt(cosh r)).
    for (std::size_t n = 0; 2 * n < dim - kTruncationMargin; ++n) {
      const double ln = 0.5 * std::lgamma(2.0 * n + 1.0) - n * std::log(2.0) - std::lgamma(n + 1.0) -
                        0.5 * std::log(std::cosh(r)) + n * std::log(std::tanh(r));
      amp = std::max(amp, std::abs(v(2 * n) - std::exp(ln)));
    }
    for (const cplx z : {cplx{r, 0.0}, std::polar(r, 1.3)}) {
      const auto s = squeeze_matrix(z, dim);
      for (Eigen::Index n = 1; n < static_cast<Eigen::Index>(dim); n += 2)
        parity = std::max(parity, std::abs(s.matrix(n, 0)));
    }
  }
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> ur(0.05, 0.5), ut(-kPi, kPi);
  double phase = 0.0;
  for (int k = 0; k < 5; ++k) {
    const double r = ur(rng), theta = ut(rng);
    const auto rot = rotation_matrix(theta / 2, dim);
    const MatrixXc conj = rot.matrix.adjoint() * squeeze_matrix(std::polar(r, theta), dim).matrix * rot.matrix;
    phase = std::max(phase, interior_difference(conj, squeeze_matrix(r, dim).matrix, dim - kTruncationMargin));
  }
  return {{"analytic vs Fock squeezed vacuum on grid (L2), dim 60, r<=0.5", grid_l2, 1e-6},
          {"Fock amplitudes vs closed form, n<50", amp, 1e-6},
          {"parity-forbidden amplitudes", parity, 1e-14},
          {"R^H(theta/2) S(z) R(theta/2) vs S(r), 5 random (r,theta)", phase, 1e-9}};
}

std::vector<Part> lattice() {
  double one = 0.0;
  for (double r : {0.3, 1.0, 2.2})
    for (std::size_t n = 0; n <= 40; ++n) {
      const double rs[] = {r};
      const std::size_t idx[] = {n};
      const auto l = eigen_lattice(rs, idx);
      const auto p = resonant_pair(n, r);
      one = std::max({one, std::abs(l.s_plus - p.s_plus), std::abs(l.s_minus - p.s_minus)});
    }
  double two = 0.0;
  const double r = 0.9;
  const double rs[] = {r, -r};
  for (std::size_t n = 0; n <= 20; ++n)
    for (std::size_t m = 0; m <= 20; ++m) {
      const std::size_t idx[] = {n, m};
      const double k = r * (static_cast<double>(n) - static_cast<double>(m));
      const auto l = eigen_lattice(rs, idx);
      two = std::max({two, std::abs(l.s_plus - std::exp(k)), std::abs(l.s_minus - std::exp(-k))});
    }
  double violations = 0.0;
  const double rp[] = {0.2, 0.5, 1.3};
  for (std::size_t a = 0; a < 10; ++a)
    for (std::size_t b = 0; b < 10; ++b)
      for (std::size_t c = 0; c < 10; ++c) {
        const std::size_t idx[] = {a, b, c};
        const double base = eigen_lattice(rp, idx).s_plus;
        for (std::size_t k = 0; k < 3; ++k) {
          std::size_t next[] = {a, b, c};
          ++next[k];
          if (!(eigen_lattice(rp, next).s_plus > base)) violations += 1.0;
        }
      }
  return {{"N=1 lattice vs single-mode s+-_n (exact)", one, 0.0},
          {"N=2, (r,-r): e^{+-r(n-m)} (exact)", two, 0.0},
          {"monotonicity violations, r_k>0, N=3", violations, 0.0}};
}

}  // namespace

int main() {
  guarded(1, "representation triple agreement (exact / series / spectral)", triple_agreement);
  guarded(2, "discrete eigenvalues of H on f+_n, s+_n s-_n = 1", discrete_eigenvalues);
  guarded(3, "biorthogonality and completeness on Z", biorthogonality_completeness);
  guarded(4, "resonance poles of the continued pairing", resonance_poles);
  guarded(5, "residue / eigenvector proportionality", residue_proportionality);
  guarded(6, "inverted oscillator symplectic map", inverted_oscillator);
  guarded(7, "Takagi factorization, 100 seeded matrices", takagi_random);
  guarded(8, "two-mode identities", two_mode);
  guarded(9, "Fock oracle", fock_oracle);
  guarded(10, "N-mode eigenvalue lattice", lattice);
  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
