#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coxcfg {

using Index = std::size_t;

/// A point-block pair of an incidence structure.
struct Flag {
  Index point = 0;
  Index block = 0;
  friend auto operator<=>(const Flag&, const Flag&) = default;
};

/// Finite incidence structure with labelled points and blocks.
///
/// Blocks are stored as sorted point-index lists; incidence is membership.
/// Labels are opaque strings and must be unique within each side.
class IncidenceStructure {
 public:
  IncidenceStructure() = default;
  /// Throws std::invalid_argument on duplicate labels or out-of-range point indices.
  IncidenceStructure(std::vector<std::string> point_labels, std::vector<std::string> block_labels,
                     std::vector<std::vector<Index>> block_points);

  std::size_t num_points() const { return point_labels_.size(); }
  std::size_t num_blocks() const { return block_labels_.size(); }
  std::size_t num_flags() const { return num_flags_; }

  const std::string& point_label(Index p) const { return point_labels_.at(p); }
  const std::string& block_label(Index b) const { return block_labels_.at(b); }
  const std::vector<std::string>& point_labels() const { return point_labels_; }
  const std::vector<std::string>& block_labels() const { return block_labels_; }

  std::span<const Index> points_on(Index block) const { return block_points_.at(block); }
  std::span<const Index> blocks_through(Index point) const { return point_blocks_.at(point); }
  std::size_t point_rank(Index p) const { return point_blocks_.at(p).size(); }
  std::size_t block_rank(Index b) const { return block_points_.at(b).size(); }

  bool incident(Index point, Index block) const;

  std::optional<Index> find_point(std::string_view label) const;
  std::optional<Index> find_block(std::string_view label) const;
  /// Like find_*, but throws std::out_of_range for unknown labels.
  Index point_index(std::string_view label) const;
  Index block_index(std::string_view label) const;

  /// All flags, ordered by (point, block).
  std::vector<Flag> flags() const;
  /// Points shared by two blocks.
  std::vector<Index> common_points(Index b1, Index b2) const;
  /// Blocks through both points.
  std::vector<Index> common_blocks(Index p1, Index p2) const;

  friend bool operator==(const IncidenceStructure& a, const IncidenceStructure& b) {
    return a.point_labels_ == b.point_labels_ && a.block_labels_ == b.block_labels_ &&
           a.block_points_ == b.block_points_;
  }

 private:
  std::vector<std::string> point_labels_;
  std::vector<std::string> block_labels_;
  std::vector<std::vector<Index>> block_points_;
  std::vector<std::vector<Index>> point_blocks_;
  std::map<std::string, Index, std::less<>> point_lookup_;
  std::map<std::string, Index, std::less<>> block_lookup_;
  std::size_t num_flags_ = 0;
};

/// (v r b k) configuration type. When ranks vary, r and k are the modal ranks
/// (smallest on ties) and `uniform` is false.
struct ConfigSignature {
  std::size_t v = 0;
  std::size_t r = 0;
  std::size_t b = 0;
  std::size_t k = 0;
  bool uniform = false;
  friend bool operator==(const ConfigSignature&, const ConfigSignature&) = default;
};

std::string to_string(const ConfigSignature& sig);

/// Throws std::invalid_argument on an empty structure.
ConfigSignature signature(const IncidenceStructure& s);

/// Points and blocks swapped, flags transposed.
IncidenceStructure dual(const IncidenceStructure& s);

/// Restriction to the given points and blocks (blocks keep only retained points).
IncidenceStructure substructure(const IncidenceStructure& s, std::span<const Index> points,
                                std::span<const Index> blocks);
IncidenceStructure without_block(const IncidenceStructure& s, Index block);
IncidenceStructure without_flag(const IncidenceStructure& s, Index point, Index block);

struct Closure {
  std::vector<Index> points;  // sorted
  std::vector<Index> blocks;  // sorted
};

/// Least (l1,l2)-closed substructure containing the seeds: a block joins once it
/// meets the current points in at least l1 points, a point joins once it lies on
/// at least l2 current blocks.
Closure closure(const IncidenceStructure& s, std::span<const Index> seed_points,
                std::span<const Index> seed_blocks, int l1, int l2);

bool is_closed_substructure(const IncidenceStructure& s, std::span<const Index> points,
                            std::span<const Index> blocks, int l1, int l2);

}  // namespace coxcfg
