#include <doctest.h>

#include <sstream>

#include "squeeze/errors.hpp"
#include "squeeze/io.hpp"
#include "squeeze/states.hpp"

using namespace squeeze;

TEST_CASE("grid CSV round trip") {
  const auto c = make_coherent({0.4, -0.3}, Axis{-6.0, 6.0, 301});
  std::stringstream ss;
  io::write_grid_csv(ss, c);
  const auto back = io::read_grid_csv(ss);
  CHECK(back.same_grid(c));
  for (std::size_t i = 0; i < c.size(); ++i) REQUIRE(back[i] == c[i]);
}

TEST_CASE("grid CSV errors") {
  std::stringstream bad("# x,re,im\n0,1,0\n0.5;1;0\n");
  CHECK_THROWS_AS(io::read_grid_csv(bad), ConfigError);
  std::stringstream uneven("0,1,0\n0.5,1,0\n2.0,1,0\n");
  CHECK_THROWS_AS(io::read_grid_csv(uneven), ConfigError);
  std::stringstream single("0,1,0\n");
  CHECK_THROWS_AS(io::read_grid_csv(single), ConfigError);
}

TEST_CASE("shortest round-trip doubles") {
  CHECK(io::format_double(0.1) == "0.1");
  CHECK(io::format_double(1e-300) == "1e-300");
  CHECK(std::stod(io::format_double(kPi)) == kPi);
}

TEST_CASE("JSON encodings") {
  const auto t = TaylorState::gaussian(1.0, {0.2, 0.1}, -0.5, 10);
  const auto t2 = io::taylor_from_json(io::to_json(t));
  for (std::size_t n = 0; n < t.size(); ++n) CHECK(t2.coeff(n) == t.coeff(n));

  const auto p = io::to_json(resonant_pair(2, 1.0));
  CHECK(p["n"] == 2);
  CHECK(p["E_n"][1].get<double>() == doctest::Approx(2.5));
  CHECK(p["s_minus"].get<double>() == doctest::Approx(std::exp(-2.5)));

  MatrixXc m(2, 2);
  m << cplx(1, 2), 3, cplx(0, -1), 4;
  CHECK(io::matrix_from_json(io::matrix_to_json(m)) == m);
  CHECK_THROWS_AS(io::matrix_from_json(io::json::parse("[[1,2],[3]]")), ShapeError);

  VectorXc v(3);
  v << 1, cplx(0, 1), -2;
  CHECK(io::fock_vector_from_json(io::fock_vector_to_json(v)) == v);

  const auto rep = io::to_json(OracleReport{1e-9, 2e-9, 60, 10});
  for (const char* key : {"max_dev", "l2_dev", "dim", "margin"}) CHECK(rep.contains(key));

  const auto tk = io::to_json(takagi(m + m.transpose()));
  for (const char* key : {"Phi", "Z_D", "residual"}) CHECK(tk.contains(key));
}

TEST_CASE("Mellin CSV columns") {
  MellinAmplitude amp;
  amp.r = 1.0;
  amp.E = {-1.0, 0.0, 1.0};
  amp.c_plus = {1.0, cplx(0, 1), 2.0};
  amp.c_minus = {0.0, 0.5, 0.25};
  std::stringstream ss;
  io::write_mellin_csv(ss, amp);
  std::string header, row;
  std::getline(ss, header);
  std::getline(ss, row);
  CHECK(header == "E,re_c_plus,im_c_plus,re_c_minus,im_c_minus");
  CHECK(row == "-1,1,0,0,0");
}

TEST_CASE("continuation JSON") {
  ContinuationResult c{{-1.0, 0.0}, {0.5, 0.25}, 2, {0}};
  const auto j = io::to_json(c);
  CHECK(j["pole_flags"][0] == 0);
  CHECK(j["n_subtracted"] == 2);
}

#include "squeeze/verify.hpp"

TEST_CASE("verification keys are ordered by suite") {
  const auto keys = verification_keys();
  CHECK(keys.size() == 28);
  for (std::size_t i = 1; i < keys.size(); ++i) {
    const auto a = keys[i - 1].substr(0, keys[i - 1].find('.'));
    const auto b = keys[i].substr(0, keys[i].find('.'));
    CHECK(a <= b);
  }
  VerifyOptions opts;
  opts.tolerance_overrides["nope.check"] = 1e-3;
  CHECK_THROWS_AS(run_verification(opts), ConfigError);
  opts.tolerance_overrides = {{"states.double_fourier_parity", 1e-20}};
  CHECK_THROWS_AS(run_verification(opts), ConfigError);
}
