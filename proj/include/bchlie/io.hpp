#pragma once

// File formats used by the command-line tool:
//  - schedule JSON ("format": 1), either an oscillator preset or sampled
//    eta(t) values interpolated linearly
//  - element lists for composition
//  - CSV trajectories
// Complex numbers are [re, im] arrays everywhere.

#include "bchlie/algebra.hpp"
#include "bchlie/evolver.hpp"

#include <iosfwd>
#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace bchlie::io {

using json = nlohmann::ordered_json;

/// Malformed or schema-violating input.
class SchemaError : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

inline constexpr int schedule_format_version = 1;

inline constexpr char const *trajectory_csv_header =
    "t,alpha_re,alpha_im,beta_re,beta_im,gamma_re,gamma_im";

json to_json(cplx z);
cplx complex_from_json(json const &j, std::string const &what);

/// "re,im" or "re".
cplx parse_complex(std::string const &text);

/// Serialises with a fixed layout and 17 significant digits per number, so
/// equal values always give byte-identical text.
std::string dump(json const &j);

/// Parses a schedule document. Throws SchemaError.
HamiltonianSchedule parse_schedule(json const &doc);
HamiltonianSchedule load_schedule(std::string const &path);

/// Accepts a bare array or {"elements": [...]}; each entry is
/// {"Lambda_plus", "Lambda_c" | "log_c", "Lambda_minus", optional "phase"}.
std::vector<GroupElement> parse_elements(json const &doc, AlgebraKind algebra);
std::vector<GroupElement> load_elements(std::string const &path,
                                        AlgebraKind algebra);

json element_to_json(GroupElement const &g);

void write_trajectory_csv(std::ostream &os,
                          std::vector<Checkpoint> const &trajectory);

struct TrajectoryRow
{
	double t;
	cplx alpha, beta, gamma;
};

/// Throws SchemaError on a wrong header or malformed row.
std::vector<TrajectoryRow> read_trajectory_csv(std::istream &is);

json read_json_file(std::string const &path);

} // namespace bchlie::io
