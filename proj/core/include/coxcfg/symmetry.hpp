#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "coxcfg/incidence.hpp"
#include "coxcfg/isomorphism.hpp"
#include "coxcfg/subset.hpp"

namespace coxcfg {

/// A permutation of {0..n-1}.
class Permutation {
 public:
  /// Throws std::invalid_argument unless `images` is a permutation of 0..n-1.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  static Permutation transposition(int n, int i, int j);
  /// i -> i+1 mod n
  static Permutation rotation(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& images() const { return images_; }
  Permutation inverse() const;
  /// The induced bijection of subsets.
  Subset apply(Subset s) const;

  /// (a * b)(i) = a(b(i))
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// The map a -> phi(a) symmetric-difference A of subsets of {0..n-1}:
/// permute first, then translate. It preserves the covering relation, so it
/// acts on cox(n) as a collineation when |A| is even and a correlation when
/// |A| is odd.
struct CoxMap {
  Permutation phi;
  Subset translation;

  static CoxMap identity(int n) { return {Permutation::identity(n), Subset{}}; }
  static CoxMap translate(int n, Subset a) { return {Permutation::identity(n), a}; }
  static CoxMap permute(Permutation p) { return {std::move(p), Subset{}}; }

  int size() const { return phi.size(); }
  bool is_collineation() const { return translation.even(); }
  friend auto operator<=>(const CoxMap&, const CoxMap&) = default;
};

Subset apply(const CoxMap& g, Subset a);
/// apply(compose(g1, g2), a) == apply(g1, apply(g2, a)).
CoxMap compose(const CoxMap& g1, const CoxMap& g2);
CoxMap inverse(const CoxMap& g);

/// The collineation-correlation group of cox(n) as pairs (phi, A).
struct GroupDescription {
  int n = 0;
  std::uint64_t order = 0;              // n! 2^n
  std::uint64_t collineation_order = 0; // n! 2^(n-1)
  std::vector<CoxMap> generators;       // transposition (0 1), rotation, translation by {0}
  std::vector<CoxMap> collineation_generators;  // ... translation by {0,1} instead
};
GroupDescription full_group(int n);

/// Every (phi, A), phi in lexicographic order, then A by bit word. n <= 10.
void for_each_element(int n, const std::function<void(const CoxMap&)>& visit);

/// The action of g on cox(n) in index form. A collineation maps points to
/// points; a correlation maps points to block indices and blocks to point indices.
IncidenceMap to_incidence_map(int n, const CoxMap& g);

inline constexpr std::size_t kBruteForceCap = 64;

/// All incidence-preserving point/block bijections of s, sorted.
/// Throws std::length_error when points + blocks exceeds `cap`.
std::vector<IncidenceMap> brute_force_automorphisms(const IncidenceStructure& s,
                                                    std::size_t cap = kBruteForceCap);
/// All incidence-preserving maps swapping points and blocks, sorted; the
/// point image indexes blocks and the block image indexes points.
std::vector<IncidenceMap> brute_force_correlations(const IncidenceStructure& s,
                                                   std::size_t cap = kBruteForceCap);

struct CoxFlag {
  Subset point;
  Subset block;
  friend auto operator<=>(const CoxFlag&, const CoxFlag&) = default;
};

/// Orbit of a flag of cox(n) under the collineation group, closed over its generators.
std::set<CoxFlag> flag_orbit(int n, CoxFlag flag);
/// Orbit of a point under the collineation group.
std::set<Subset> point_orbit(int n, Subset point);

struct Stabilizer {
  std::vector<IncidenceMap> elements;  // brute-force automorphisms fixing the empty set
  bool matches_permutations = false;   // equal as maps to { (phi, {}) : phi in S_n }
};
/// Uses brute force on cox(n) as the oracle; n <= 5.
Stabilizer stabilizer_of_empty(int n);

}  // namespace coxcfg
