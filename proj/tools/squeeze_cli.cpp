// squeeze: command-line front end.
//
//   squeeze verify [--seed N] [--tol-override suite.check=VAL ...]
//   squeeze apply --r R [--theta T] [--input state.csv] [--output out.csv]
//   squeeze spectrum --r R [--input state.csv]
//   squeeze resonances --r R --n-max N
//   squeeze takagi --input Z.json
//
// Exit status: 0 all assertions pass, 1 numerical failure, 2 usage or config error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "squeeze/errors.hpp"
#include "squeeze/fock.hpp"
#include "squeeze/io.hpp"
#include "squeeze/multimode.hpp"
#include "squeeze/singlemode.hpp"
#include "squeeze/spectral.hpp"
#include "squeeze/states.hpp"
#include "squeeze/verify.hpp"

namespace {

using namespace squeeze;
using io::json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  double r = 0.0;
  double theta = 0.0;
  std::size_t n_max = 10;
  std::string input;
  std::string output;
  std::string format = "csv";
  std::uint64_t seed = 42;
  std::vector<std::string> tol_overrides;
  double x_min = -8.0;
  double x_max = 8.0;
  std::size_t points = 2048;
};

std::map<std::string, double> parse_overrides(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--tol-override expects KEY=VAL, got '" + item + "'");
    double v = 0.0;
    try {
      std::size_t used = 0;
      v = std::stod(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw UsageError("--tol-override value is not a number: '" + item + "'");
    }
    if (!(v >= std::numeric_limits<double>::epsilon()))
      throw UsageError("--tol-override " + item.substr(0, eq) + " is below machine epsilon");
    out[item.substr(0, eq)] = v;
  }
  return out;
}

class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

GridFunction load_state(const Options& o) {
  if (o.input.empty()) {
    Axis axis{o.x_min, o.x_max, o.points};
    axis.validate();
    return make_vacuum(axis);
  }
  std::ifstream in(o.input);
  if (!in) throw UsageError("cannot read input file '" + o.input + "'");
  return io::read_grid_csv(in);
}

void write_state(std::ostream& os, const GridFunction& f, const std::string& format) {
  if (format == "csv") {
    io::write_grid_csv(os, f);
    return;
  }
  json x = json::array();
  for (std::size_t i = 0; i < f.size(); ++i) x.push_back(f.x(i));
  os << json{{"x", x}, {"psi", io::complex_array(f.samples())}}.dump(2) << '\n';
}

int run_verify(const Options& o) {
  VerifyOptions vo;
  vo.seed = o.seed;
  vo.tolerance_overrides = parse_overrides(o.tol_overrides);
  const auto rows = run_verification(vo);
  Sink sink(o.output);
  auto& os = sink.stream();
  bool ok = true;
  if (o.format == "json") {
    json results = json::array();
    for (const auto& r : rows)
      results.push_back({{"suite", r.suite}, {"check", r.check}, {"residual", r.residual},
                         {"tolerance", r.tolerance}, {"pass", r.pass}});
    os << json{{"seed", o.seed}, {"results", results}}.dump(2) << '\n';
  } else {
    os << "# seed=" << o.seed << '\n' << "suite,check,residual,tolerance,pass\n";
    for (const auto& r : rows)
      os << r.suite << ',' << r.check << ',' << io::format_double(r.residual) << ','
         << io::format_double(r.tolerance) << ',' << (r.pass ? "PASS" : "FAIL") << '\n';
  }
  for (const auto& r : rows) {
    if (r.pass) continue;
    ok = false;
    std::cerr << "FAIL " << r.suite << '.' << r.check << ": residual " << r.residual << " > tolerance "
              << r.tolerance << '\n';
  }
  return ok ? 0 : kExitFail;
}

int run_apply(const Options& o) {
  SqueezeSpec{o.r, o.theta}.validate();
  const auto psi = load_state(o);
  GridFunction out;
  if (o.theta == 0.0) {
    out = apply_exact(o.r, psi);
  } else {
    // S(r e^{i theta}) = R(theta/2) S(r) R(-theta/2).
    out = rotate_grid(o.theta / 2, apply_exact(o.r, rotate_grid(-o.theta / 2, psi)));
  }
  Sink sink(o.output);
  write_state(sink.stream(), out, o.format);
  return 0;
}

int run_spectrum(const Options& o) {
  if (!(o.r > 0.0)) throw UsageError("spectrum needs --r > 0");
  if (o.theta != 0.0) throw UsageError("spectrum takes no --theta (the spectrum depends on r only)");
  const auto amp = mellin_forward(load_state(o), o.r);
  Sink sink(o.output);
  if (o.format == "csv") {
    io::write_mellin_csv(sink.stream(), amp);
  } else {
    sink.stream() << json{{"r", amp.r},
                          {"E", amp.E},
                          {"c_plus", io::complex_array(amp.c_plus)},
                          {"c_minus", io::complex_array(amp.c_minus)}}
                         .dump(2)
                  << '\n';
  }
  return 0;
}

int run_resonances(const Options& o) {
  if (o.r < 0.0) throw UsageError("resonances needs --r >= 0");
  if (o.n_max > 1000) throw UsageError("--n-max is limited to 1000");
  Sink sink(o.output);
  auto& os = sink.stream();
  if (o.format == "csv") {
    os << "n,re_E_n,im_E_n,s_plus,s_minus\n";
    for (std::size_t n = 0; n <= o.n_max; ++n) {
      const auto p = resonant_pair(n, o.r);
      os << n << ',' << io::format_double(p.E_n.real()) << ',' << io::format_double(p.E_n.imag()) << ','
         << io::format_double(p.s_plus) << ',' << io::format_double(p.s_minus) << '\n';
    }
  } else {
    json rows = json::array();
    for (std::size_t n = 0; n <= o.n_max; ++n) rows.push_back(io::to_json(resonant_pair(n, o.r)));
    os << rows.dump(2) << '\n';
  }
  return 0;
}

int run_takagi(const Options& o) {
  if (o.input.empty()) throw UsageError("takagi needs --input with a JSON matrix");
  if (o.format != "json") throw UsageError("takagi writes JSON only (use --format json)");
  std::ifstream in(o.input);
  if (!in) throw UsageError("cannot read input file '" + o.input + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed matrix JSON: ") + e.what());
  }
  const MatrixXc z = io::matrix_from_json(j.is_object() ? j.at("Z") : j);
  const auto overrides = parse_overrides(o.tol_overrides);
  double tol = 1e-10;
  for (const auto& [key, v] : overrides) {
    if (key != "takagi.residual") throw UsageError("unknown tolerance override key '" + key + "'");
    tol = v;
  }
  const auto t = takagi(z);
  Sink sink(o.output);
  sink.stream() << io::to_json(t).dump(2) << '\n';
  if (!(t.residual <= tol)) {
    std::cerr << "FAIL takagi.residual: residual " << t.residual << " > tolerance " << tol << '\n';
    return kExitFail;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Squeeze operators: dilations, spectra, resonances and Takagi factorization"};
  app.set_config("--config", "", "TOML/INI file with option defaults (flags take precedence)");
  app.require_subcommand(1, 1);

  Options o;
  app.add_option("--r", o.r, "squeeze magnitude r");
  app.add_option("--theta", o.theta, "squeeze phase theta in (-pi, pi]");
  app.add_option("--n-max", o.n_max, "largest resonance index");
  app.add_option("--input", o.input, "input file (state CSV or matrix JSON)");
  app.add_option("--output", o.output, "output file (default: stdout)");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", o.seed, "seed for randomized checks");
  app.add_option("--tol-override", o.tol_overrides, "KEY=VAL tolerance override (repeatable)");
  app.add_option("--x-min", o.x_min, "grid lower end when no input is given");
  app.add_option("--x-max", o.x_max, "grid upper end when no input is given");
  app.add_option("--points", o.points, "grid size when no input is given");

  std::string command;
  for (const char* name : {"verify", "apply", "spectrum", "resonances", "takagi"})
    app.add_subcommand(name)->fallthrough()->callback([&command, name] { command = name; });
  app.get_subcommand("verify")->description("run every invariant suite and write a pass/fail table");
  app.get_subcommand("apply")->description("apply S(r e^{i theta}) to a state");
  app.get_subcommand("spectrum")->description("write the Mellin amplitudes c_pm(E) of a state");
  app.get_subcommand("resonances")->description("write E_n and s_pm_n for n <= n-max");
  app.get_subcommand("takagi")->description("factorize a complex symmetric matrix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (command == "verify") return run_verify(o);
    if (command == "apply") return run_apply(o);
    if (command == "spectrum") return run_spectrum(o);
    if (command == "resonances") return run_resonances(o);
    if (command == "takagi") return run_takagi(o);
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ShapeError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitFail;
  }
}
