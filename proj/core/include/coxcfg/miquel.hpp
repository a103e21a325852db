#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "coxcfg/incidence.hpp"

namespace coxcfg {

inline constexpr std::size_t kDefaultMiquelBudget = 10'000'000;

/// One occurrence of the Miquel hypothesis: eight distinct points around a
/// cube, a chain through a[0..3] and four distinct side chains, side[i]
/// through a[i], b[i], a[i+1], b[i+1] (indices mod 4).
struct MiquelInstance {
  std::array<Index, 4> a{};
  std::array<Index, 4> b{};
  Index horizontal = 0;
  std::array<Index, 4> sides{};
  friend auto operator<=>(const MiquelInstance&, const MiquelInstance&) = default;
};

/// Smallest image under the dihedral symmetries of the 4-cycle (rotations and
/// reflections applied to a, b and sides together).
MiquelInstance canonical_form(const MiquelInstance& m);

/// The hypothesis holds for m in s (incidences and distinctness).
bool is_miquel_instance(const IncidenceStructure& s, const MiquelInstance& m);

std::string describe(const IncidenceStructure& s, const MiquelInstance& m);

struct MiquelEnumeration {
  std::vector<MiquelInstance> instances;  // sorted
  std::size_t raw_count = 0;              // instances found before deduplication
  bool cap_reached = false;
  bool deduplicated = true;
};

/// All instances, each once per dihedral orbit unless `deduplicate` is false.
/// Chooses the horizontal chain and an ordered 4-tuple of its points first,
/// then the side chains through consecutive a's, whose pairwise meets give
/// the b's. Stops after `budget` instances and reports the cap.
MiquelEnumeration enumerate_miquel_instances(const IncidenceStructure& s,
                                             std::size_t budget = kDefaultMiquelBudget,
                                             bool deduplicate = true);

/// strong: b[0..3] lie on a common chain.
/// weak: any chain through three of the b's also passes through the fourth.
enum class MiquelVariant { Strong, Weak };
enum class MiquelStatus { Pass, Fail, CapReached };

std::string to_string(MiquelVariant v);
std::string to_string(MiquelStatus s);

struct MiquelCheck {
  MiquelStatus status = MiquelStatus::Pass;
  std::size_t instances_checked = 0;
  std::vector<MiquelInstance> counterexamples;  // sorted canonical forms
};

MiquelCheck check_miquel(const IncidenceStructure& s, MiquelVariant variant,
                         std::size_t budget = kDefaultMiquelBudget);

/// The instance satisfies the hypothesis but not the conclusion of `variant`.
bool instance_violates(const IncidenceStructure& s, const MiquelInstance& m, MiquelVariant variant);

}  // namespace coxcfg
