// Direction parsing and machine-readable report rendering.
//
// Directions are written "x,y,z" with decimal reals; direction files hold one
// per line with '#' comment lines ignored. JSON documents carry a top-level
// "schema": 1 and serialize every real with 17 significant digits, so a
// parse -> serialize round trip is byte-identical.
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "paulikit/complementarity.hpp"
#include "paulikit/measurement.hpp"

namespace paulikit::io {

inline constexpr int kSchemaVersion = 1;

/// "%.Ng" rendering; machine formats use 17 significant digits, tables 6.
std::string format_double(double v, int sig_digits);

/// Canonical compact dump: keys in lexicographic order, floats at 17
/// significant digits.
std::string dump_json(const nlohmann::json& j);

Vec3 parse_vec3(std::string_view text);
BlochDirection parse_direction(std::string_view text, bool normalize);

/// One "x,y,z" per line; '#' lines and blank lines skipped. Errors carry the
/// 1-based line number.
std::vector<BlochDirection> read_directions(std::istream& in, bool normalize);
std::vector<BlochDirection> read_directions_file(const std::string& path, bool normalize);

nlohmann::json direction_json(const BlochDirection& d);
nlohmann::json complex_json(Cplx z);
nlohmann::json matrix_json(const Matrix2c& m);
nlohmann::json subset_json(SpectralSubset s);

nlohmann::json pair_report_json(const ComplementarityReport& r);
nlohmann::json set_report_json(const SetReport& r);
nlohmann::json pvm_json(const BlochDirection& dir);
nlohmann::json triple_json(std::uint64_t seed, const std::array<BlochDirection, 3>& triple);
nlohmann::json simulate_json(const BlochDirection& alpha, const BlochDirection& beta,
                             std::uint64_t seed, const JointHistogram& h);

/// Header line plus one "theta,inner_product,max_deviation" row per sweep
/// point, all at 17 significant digits.
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace paulikit::io
