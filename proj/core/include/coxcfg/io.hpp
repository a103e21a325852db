#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "coxcfg/builders.hpp"
#include "coxcfg/incidence.hpp"
#include "coxcfg/realization.hpp"

namespace coxcfg {

/// Malformed input file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"points": [labels], "blocks": [{"label": ..., "points": [labels]}]}
std::string structure_to_json(const IncidenceStructure& s);
IncidenceStructure structure_from_json(std::string_view text);

enum class MatrixOrder { Canonical, SteinerMiquel };

/// Block-by-point 0/1 matrix with a header row of point labels and a leading
/// column of block labels. SteinerMiquel applies only to cox(4) and renames
/// rows and columns to q_A.. and A_1..B_4 in matrix order.
std::string incidence_csv(const IncidenceStructure& s, MatrixOrder order = MatrixOrder::Canonical);

std::string graph_to_dot(const Graph& g, std::string_view name = "G");

/// Integers are decimal strings; the point at infinity is {"label": "{}", "inf": true}.
std::string realization_to_json(const Realization& r);
/// The result is unverified; run verify() before trusting it.
Realization realization_from_json(std::string_view text);

std::string sphere_to_json(const SphereModel& m);

/// Planar drawing: one group per circle or line, points as dots, clipped to a
/// window around the finite points.
std::string realization_to_svg(const Realization& r);

}  // namespace coxcfg
