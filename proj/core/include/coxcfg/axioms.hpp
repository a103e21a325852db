#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coxcfg/incidence.hpp"

namespace coxcfg {

/// Incidence conditions of chain structures:
///   I   through any two points pass 0 or 2 blocks
///   II  no three points lie on two blocks
///   III every block has at least three points
///   IV  three points pairwise on a block lie on a common block
///   V   three pairwise intersecting blocks share a point
enum class Condition { I, II, III, IV, V };

std::string to_string(Condition c);

/// A tuple violating a condition: the points and blocks that exhibit it.
///   I   points {p, q}, blocks = the common blocks
///   II  points {p, q, r}, blocks {B, C}
///   III blocks {B}, points = its points
///   IV  points {p, q, r}
///   V   blocks {B, C, D}
struct Witness {
  Condition condition = Condition::I;
  std::vector<Index> points;
  std::vector<Index> blocks;
};

std::string describe(const IncidenceStructure& s, const Witness& w);

/// Nothing when the condition holds; otherwise the first witness in index order.
std::optional<Witness> check_condition(const IncidenceStructure& s, Condition c);

/// Re-checks a witness against the definition of its condition.
bool witness_violates(const IncidenceStructure& s, const Witness& w);

struct WeakChainReport {
  bool ok = false;
  std::optional<Witness> no_two_blocks_share_three_points;  // II
  std::optional<Witness> blocks_have_three_points;          // III
  std::optional<Witness> collinear_triples_close;           // IV
};

/// Conditions II, III and IV together.
WeakChainReport is_weak_chain_structure(const IncidenceStructure& s);

}  // namespace coxcfg
