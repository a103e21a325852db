#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "coxcfg/incidence.hpp"

namespace coxcfg {

/// An incidence-preserving bijection between two structures, given as images
/// of point indices and of block indices.
struct IncidenceMap {
  std::vector<Index> point_image;
  std::vector<Index> block_image;
  friend auto operator<=>(const IncidenceMap&, const IncidenceMap&) = default;
};

/// True when `map` is a bijection from `from` onto `to` that preserves incidence
/// and non-incidence.
bool is_isomorphism(const IncidenceStructure& from, const IncidenceStructure& to,
                    const IncidenceMap& map);

/// Visits every isomorphism from `a` onto `b`, in a deterministic order.
/// The visitor returns false to stop the search. Returns the number visited.
///
/// Search is individualization-refinement: both Levi graphs are colour-refined
/// jointly (points and blocks start in separate classes), then a vertex of the
/// smallest non-trivial class of `a` is matched in turn with each vertex of the
/// same class of `b`.
std::size_t for_each_isomorphism(const IncidenceStructure& a, const IncidenceStructure& b,
                                 const std::function<bool(const IncidenceMap&)>& visit);

/// First isomorphism found, or nothing.
std::optional<IncidenceMap> find_isomorphism(const IncidenceStructure& a,
                                             const IncidenceStructure& b);

}  // namespace coxcfg
