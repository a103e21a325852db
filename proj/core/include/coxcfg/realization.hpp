#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxcfg/inversive.hpp"
#include "coxcfg/subset.hpp"
#include "coxcfg/symmetry.hpp"

namespace coxcfg {

/// Seed used when none is given (and COXCFG_SEED is unset in the CLI).
inline constexpr std::uint64_t kDefaultSeed = 20161;

/// Largest n realize/extend accept unless told otherwise. Coefficient sizes
/// grow quickly with n; the cap is a knob, not a mathematical limit.
inline constexpr int kDefaultRealizeCap = 10;

/// A construction could not keep objects in general position; retry with another seed.
class GenericityError : public DegenerateError {
 public:
  using DegenerateError::DegenerateError;
};

/// Realization of cox(n) on the inversive plane: even subsets are points,
/// odd subsets circles or lines, and the empty set sits at infinity.
class Realization {
 public:
  Realization(int n, std::uint64_t seed);

  int n() const { return n_; }
  std::uint64_t seed() const { return seed_; }
  bool verified() const { return verified_; }
  void set_verified(bool v) { verified_ = v; }

  bool has_point(Subset s) const;
  bool has_circle(Subset s) const;
  /// Throw std::out_of_range when unassigned.
  const InvPoint& point(Subset s) const;
  const InvCircle& circle(Subset s) const;
  /// Throw std::invalid_argument for a subset of the wrong parity or outside {0..n-1}.
  void set_point(Subset s, InvPoint p);
  void set_circle(Subset s, InvCircle c);

  /// Assigned labels in canonical order.
  std::vector<Subset> point_labels() const;
  std::vector<Subset> circle_labels() const;

 private:
  int n_;
  std::uint64_t seed_;
  bool verified_ = false;
  std::vector<std::optional<InvPoint>> points_;    // indexed by bit word
  std::vector<std::optional<InvCircle>> circles_;  // indexed by bit word
};

struct VerificationReport {
  int n = 0;
  std::size_t flags_checked = 0;
  std::size_t non_flags_checked = 0;
  bool empty_at_infinity = false;
  std::vector<Subset> missing;
  std::vector<std::pair<Subset, Subset>> incidence_defects;      // (point, circle) flags that fail
  std::vector<std::pair<Subset, Subset>> accidental_incidences;  // non-flags that hold
  std::vector<std::pair<Subset, Subset>> coincident_points;
  std::vector<std::pair<Subset, Subset>> coincident_circles;

  bool clean() const {
    return empty_at_infinity && missing.empty() && incidence_defects.empty() &&
           accidental_incidences.empty() && coincident_points.empty() && coincident_circles.empty();
  }
};

std::string summary(const VerificationReport& r);

/// Exact check of every flag, every non-flag and pairwise distinctness.
VerificationReport verify(const Realization& r);

/// Builds a realization of cox(n): lines with seeded random rational slope and
/// intercept for the singletons, their intersections for the pairs, then by
/// increasing size each point as the second intersection of two circles and
/// each circle through three points, checking every other required incidence
/// exactly. Throws GenericityError on coincidences or tangencies.
Realization realize(int n, std::uint64_t seed = kDefaultSeed, int max_n = kDefaultRealizeCap);

/// Adds element n: a new line through infinity crossing every existing line,
/// then every subset containing n. Earlier assignments are kept.
Realization extend(const Realization& r, std::uint64_t seed, int max_n = kDefaultRealizeCap);

/// Realized cross ratio (empty, {i,j1}; {i,j2}, {i,j3}) on the line {i}.
mpq_class line_cross_ratio(const Realization& r, int i, int j1, int j2, int j3);

/// A spot where relabeling by phi changes a line cross ratio, witnessing that
/// the combinatorial automorphism is not induced by a Moebius map.
struct CrossRatioWitness {
  int i = 0;
  std::array<int, 3> j{};
  mpq_class before;
  mpq_class after;
};
/// All witnesses for phi, ordered by (i, j1 < j2 < j3).
std::vector<CrossRatioWitness> cross_ratio_obstructions(const Realization& r, const Permutation& phi);

/// Inverse stereographic image on the sphere of the given radius centred at
/// the origin, projecting from the north pole (0, 0, radius).
struct SpherePoint {
  Subset label;
  std::array<double, 3> position{};
};
struct SphereCircle {
  Subset label;
  std::array<double, 3> center{};
  std::array<double, 3> normal{};  // unit
  double radius = 0;
};
struct SphereModel {
  double radius = 1;
  std::vector<SpherePoint> points;
  std::vector<SphereCircle> circles;
  double max_residual = 0;  // largest flag residual, in units of the radius
};
SphereModel stereographic(const Realization& r, const mpq_class& sphere_radius);

/// Circle coefficients scaled to doubles by a common power of two.
std::array<double, 4> scaled_coefficients(const InvCircle& c);

}  // namespace coxcfg
