#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "squeeze/fock.hpp"
#include "squeeze/grid.hpp"
#include "squeeze/linalg.hpp"
#include "squeeze/multimode.hpp"
#include "squeeze/singlemode.hpp"
#include "squeeze/spectral.hpp"
#include "squeeze/taylor.hpp"

namespace squeeze::io {

using nlohmann::json;

/// CSV with header "# x,re,im" and one row per sample (1D grids only).
void write_grid_csv(std::ostream& os, const GridFunction& f);
/// Parses the CSV above; the axis is recovered from the first and last x.
GridFunction read_grid_csv(std::istream& is);

/// [[re, im], ...]
json complex_array(std::span<const cplx> values);
std::vector<cplx> complex_vector(const json& j);

json to_json(const TaylorState& t);
TaylorState taylor_from_json(const json& j);

/// {n, r, E_n: [re, im], s_plus, s_minus}
json to_json(const ResonantPair& p);

/// Columns E, re_c_plus, im_c_plus, re_c_minus, im_c_minus.
void write_mellin_csv(std::ostream& os, const MellinAmplitude& amp);

json to_json(const ContinuationResult& c);

/// N x N array of [re, im].
json matrix_to_json(const MatrixXc& m);
MatrixXc matrix_from_json(const json& j);

/// {Phi, Z_D, residual}
json to_json(const TakagiResult& t);

json fock_vector_to_json(const VectorXc& v);
VectorXc fock_vector_from_json(const json& j);

/// {max_dev, l2_dev, dim, margin}
json to_json(const OracleReport& r);

/// Shortest round-trip decimal representation used in CSV output.
std::string format_double(double v);

}  // namespace squeeze::io
