#include "squeeze/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "squeeze/errors.hpp"

namespace squeeze::io {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_grid_csv(std::ostream& os, const GridFunction& f) {
  if (f.dims() != 1) throw ShapeError("CSV output is limited to 1D grids");
  os << "# x,re,im\n";
  for (std::size_t i = 0; i < f.size(); ++i)
    os << format_double(f.x(i)) << ',' << format_double(f[i].real()) << ',' << format_double(f[i].imag()) << '\n';
}

GridFunction read_grid_csv(std::istream& is) {
  std::vector<double> xs;
  std::vector<cplx> vals;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    double x = 0, re = 0, im = 0;
    char c1 = 0, c2 = 0;
    if (!(ls >> x >> c1 >> re >> c2 >> im) || c1 != ',' || c2 != ',')
      throw ConfigError("malformed CSV row at line " + std::to_string(lineno));
    xs.push_back(x);
    vals.emplace_back(re, im);
  }
  if (xs.size() < 2) throw ConfigError("CSV grid needs at least two rows");
  Axis axis{xs.front(), xs.back(), xs.size()};
  axis.validate();
  const double h = axis.spacing();
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (std::abs(xs[i] - axis.at(i)) > 1e-9 * std::max(1.0, std::abs(xs[i])) + 1e-6 * h)
      throw ConfigError("CSV grid is not uniform (line for x = " + format_double(xs[i]) + ")");
  return GridFunction(axis, std::move(vals));
}

json complex_array(std::span<const cplx> values) {
  json out = json::array();
  for (const auto& v : values) out.push_back({v.real(), v.imag()});
  return out;
}

std::vector<cplx> complex_vector(const json& j) {
  if (!j.is_array()) throw ConfigError("expected an array of [re, im] pairs");
  std::vector<cplx> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (e.is_number()) {
      out.emplace_back(e.get<double>(), 0.0);
    } else if (e.is_array() && e.size() == 2) {
      out.emplace_back(e[0].get<double>(), e[1].get<double>());
    } else {
      throw ConfigError("expected [re, im], got " + e.dump());
    }
  }
  return out;
}

json to_json(const TaylorState& t) { return json{{"coefficients", complex_array(t.coeffs())}}; }

TaylorState taylor_from_json(const json& j) {
  if (!j.contains("coefficients")) throw ConfigError("Taylor state JSON needs 'coefficients'");
  return TaylorState(complex_vector(j.at("coefficients")));
}

json to_json(const ResonantPair& p) {
  return json{{"n", p.n},
              {"r", p.r},
              {"E_n", {p.E_n.real(), p.E_n.imag()}},
              {"s_plus", p.s_plus},
              {"s_minus", p.s_minus}};
}

void write_mellin_csv(std::ostream& os, const MellinAmplitude& amp) {
  os << "E,re_c_plus,im_c_plus,re_c_minus,im_c_minus\n";
  for (std::size_t j = 0; j < amp.E.size(); ++j)
    os << format_double(amp.E[j]) << ',' << format_double(amp.c_plus[j].real()) << ','
       << format_double(amp.c_plus[j].imag()) << ',' << format_double(amp.c_minus[j].real()) << ','
       << format_double(amp.c_minus[j].imag()) << '\n';
}

json to_json(const ContinuationResult& c) {
  return json{{"lambda", {c.lambda.real(), c.lambda.imag()}},
              {"value", {c.value.real(), c.value.imag()}},
              {"n_subtracted", c.n_subtracted},
              {"pole_flags", c.pole_flags}};
}

json matrix_to_json(const MatrixXc& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back({m(i, k).real(), m(i, k).imag()});
    out.push_back(std::move(row));
  }
  return out;
}

MatrixXc matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ConfigError("matrix JSON must be a non-empty array of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  MatrixXc m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto row = complex_vector(j[static_cast<std::size_t>(i)]);
    if (static_cast<Eigen::Index>(row.size()) != n) throw ShapeError("matrix JSON must be square");
    for (Eigen::Index k = 0; k < n; ++k) m(i, k) = row[static_cast<std::size_t>(k)];
  }
  return m;
}

json to_json(const TakagiResult& t) {
  return json{{"Phi", matrix_to_json(t.Phi)}, {"Z_D", matrix_to_json(t.Z_D)}, {"residual", t.residual}};
}

json fock_vector_to_json(const VectorXc& v) {
  return complex_array(std::span<const cplx>(v.data(), static_cast<std::size_t>(v.size())));
}

VectorXc fock_vector_from_json(const json& j) {
  const auto vals = complex_vector(j);
  VectorXc v(static_cast<Eigen::Index>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) v(static_cast<Eigen::Index>(i)) = vals[i];
  return v;
}

json to_json(const OracleReport& r) {
  return json{{"max_dev", r.max_dev}, {"l2_dev", r.l2_dev}, {"dim", r.dim}, {"margin", r.margin}};
}

}  // namespace squeeze::io
