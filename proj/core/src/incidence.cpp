#include "coxcfg/incidence.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxcfg {

IncidenceStructure::IncidenceStructure(std::vector<std::string> point_labels,
                                       std::vector<std::string> block_labels,
                                       std::vector<std::vector<Index>> block_points)
    : point_labels_(std::move(point_labels)),
      block_labels_(std::move(block_labels)),
      block_points_(std::move(block_points)) {
  if (block_points_.size() != block_labels_.size()) {
    throw std::invalid_argument("block label count does not match block count");
  }
  for (Index p = 0; p < point_labels_.size(); ++p) {
    if (!point_lookup_.emplace(point_labels_[p], p).second) {
      throw std::invalid_argument("duplicate point label " + point_labels_[p]);
    }
  }
  for (Index b = 0; b < block_labels_.size(); ++b) {
    if (!block_lookup_.emplace(block_labels_[b], b).second) {
      throw std::invalid_argument("duplicate block label " + block_labels_[b]);
    }
  }
  point_blocks_.resize(point_labels_.size());
  for (Index b = 0; b < block_points_.size(); ++b) {
    auto& pts = block_points_[b];
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (Index p : pts) {
      if (p >= point_labels_.size()) {
        throw std::invalid_argument("flag references unknown point in block " + block_labels_[b]);
      }
      point_blocks_[p].push_back(b);
    }
    num_flags_ += pts.size();
  }
}

bool IncidenceStructure::incident(Index point, Index block) const {
  const auto& pts = block_points_.at(block);
  return std::binary_search(pts.begin(), pts.end(), point);
}

std::optional<Index> IncidenceStructure::find_point(std::string_view label) const {
  if (auto it = point_lookup_.find(label); it != point_lookup_.end()) return it->second;
  return std::nullopt;
}

std::optional<Index> IncidenceStructure::find_block(std::string_view label) const {
  if (auto it = block_lookup_.find(label); it != block_lookup_.end()) return it->second;
  return std::nullopt;
}

Index IncidenceStructure::point_index(std::string_view label) const {
  if (auto p = find_point(label)) return *p;
  throw std::out_of_range("no point labelled " + std::string(label));
}

Index IncidenceStructure::block_index(std::string_view label) const {
  if (auto b = find_block(label)) return *b;
  throw std::out_of_range("no block labelled " + std::string(label));
}

std::vector<Flag> IncidenceStructure::flags() const {
  std::vector<Flag> out;
  out.reserve(num_flags_);
  for (Index p = 0; p < point_blocks_.size(); ++p) {
    for (Index b : point_blocks_[p]) out.push_back({p, b});
  }
  return out;
}

std::vector<Index> IncidenceStructure::common_points(Index b1, Index b2) const {
  std::vector<Index> out;
  const auto& x = block_points_.at(b1);
  const auto& y = block_points_.at(b2);
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

std::vector<Index> IncidenceStructure::common_blocks(Index p1, Index p2) const {
  std::vector<Index> out;
  const auto& x = point_blocks_.at(p1);
  const auto& y = point_blocks_.at(p2);
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

std::string to_string(const ConfigSignature& sig) {
  std::string out = "(" + std::to_string(sig.v) + "," + std::to_string(sig.r) + "," +
                    std::to_string(sig.b) + "," + std::to_string(sig.k) + ")";
  if (!sig.uniform) out += " non-uniform";
  return out;
}

namespace {

// Most frequent value, smallest on ties; also reports whether all values agree.
std::pair<std::size_t, bool> modal(const std::vector<std::size_t>& values) {
  std::map<std::size_t, std::size_t> counts;
  for (auto v : values) ++counts[v];
  std::size_t best = 0;
  std::size_t best_count = 0;
  for (auto [v, c] : counts) {
    if (c > best_count) {
      best = v;
      best_count = c;
    }
  }
  return {best, counts.size() <= 1};
}

}  // namespace

ConfigSignature signature(const IncidenceStructure& s) {
  if (s.num_points() == 0 && s.num_blocks() == 0) {
    throw std::invalid_argument("signature of an empty structure");
  }
  std::vector<std::size_t> point_ranks(s.num_points());
  std::vector<std::size_t> block_ranks(s.num_blocks());
  for (Index p = 0; p < s.num_points(); ++p) point_ranks[p] = s.point_rank(p);
  for (Index b = 0; b < s.num_blocks(); ++b) block_ranks[b] = s.block_rank(b);
  auto [r, r_uniform] = modal(point_ranks);
  auto [k, k_uniform] = modal(block_ranks);
  return {s.num_points(), r, s.num_blocks(), k, r_uniform && k_uniform};
}

IncidenceStructure dual(const IncidenceStructure& s) {
  std::vector<std::vector<Index>> blocks(s.num_points());
  for (Index p = 0; p < s.num_points(); ++p) {
    auto through = s.blocks_through(p);
    blocks[p].assign(through.begin(), through.end());
  }
  return IncidenceStructure(s.block_labels(), s.point_labels(), std::move(blocks));
}

IncidenceStructure substructure(const IncidenceStructure& s, std::span<const Index> points,
                                std::span<const Index> blocks) {
  std::vector<Index> sorted_points(points.begin(), points.end());
  std::sort(sorted_points.begin(), sorted_points.end());
  sorted_points.erase(std::unique(sorted_points.begin(), sorted_points.end()), sorted_points.end());
  std::vector<Index> sorted_blocks(blocks.begin(), blocks.end());
  std::sort(sorted_blocks.begin(), sorted_blocks.end());
  sorted_blocks.erase(std::unique(sorted_blocks.begin(), sorted_blocks.end()), sorted_blocks.end());

  std::vector<Index> new_index(s.num_points(), s.num_points());
  std::vector<std::string> point_labels;
  for (Index p : sorted_points) {
    new_index.at(p) = point_labels.size();
    point_labels.push_back(s.point_label(p));
  }
  std::vector<std::string> block_labels;
  std::vector<std::vector<Index>> block_points;
  for (Index b : sorted_blocks) {
    block_labels.push_back(s.block_label(b));
    auto& pts = block_points.emplace_back();
    for (Index p : s.points_on(b)) {
      if (new_index[p] != s.num_points()) pts.push_back(new_index[p]);
    }
  }
  return IncidenceStructure(std::move(point_labels), std::move(block_labels), std::move(block_points));
}

IncidenceStructure without_block(const IncidenceStructure& s, Index block) {
  std::vector<Index> points(s.num_points());
  for (Index p = 0; p < points.size(); ++p) points[p] = p;
  std::vector<Index> blocks;
  for (Index b = 0; b < s.num_blocks(); ++b) {
    if (b != block) blocks.push_back(b);
  }
  return substructure(s, points, blocks);
}

IncidenceStructure without_flag(const IncidenceStructure& s, Index point, Index block) {
  if (!s.incident(point, block)) throw std::invalid_argument("not a flag");
  std::vector<std::vector<Index>> blocks;
  for (Index b = 0; b < s.num_blocks(); ++b) {
    auto pts = s.points_on(b);
    auto& out = blocks.emplace_back(pts.begin(), pts.end());
    if (b == block) out.erase(std::find(out.begin(), out.end(), point));
  }
  return IncidenceStructure(s.point_labels(), s.block_labels(), std::move(blocks));
}

Closure closure(const IncidenceStructure& s, std::span<const Index> seed_points,
                std::span<const Index> seed_blocks, int l1, int l2) {
  if (l1 < 1 || l2 < 1) throw std::invalid_argument("closure thresholds must be positive");
  std::vector<char> in_points(s.num_points(), 0);
  std::vector<char> in_blocks(s.num_blocks(), 0);
  // hits[b]: current points on b; support[p]: current blocks through p.
  std::vector<std::size_t> hits(s.num_blocks(), 0);
  std::vector<std::size_t> support(s.num_points(), 0);
  std::vector<Index> point_queue;
  std::vector<Index> block_queue;

  auto add_point = [&](Index p) {
    if (in_points.at(p)) return;
    in_points[p] = 1;
    point_queue.push_back(p);
  };
  auto add_block = [&](Index b) {
    if (in_blocks.at(b)) return;
    in_blocks[b] = 1;
    block_queue.push_back(b);
  };
  for (Index p : seed_points) add_point(p);
  for (Index b : seed_blocks) add_block(b);

  while (!point_queue.empty() || !block_queue.empty()) {
    if (!point_queue.empty()) {
      Index p = point_queue.back();
      point_queue.pop_back();
      for (Index b : s.blocks_through(p)) {
        if (++hits[b] >= static_cast<std::size_t>(l1)) add_block(b);
      }
    } else {
      Index b = block_queue.back();
      block_queue.pop_back();
      for (Index p : s.points_on(b)) {
        if (++support[p] >= static_cast<std::size_t>(l2)) add_point(p);
      }
    }
  }

  Closure out;
  for (Index p = 0; p < s.num_points(); ++p) {
    if (in_points[p]) out.points.push_back(p);
  }
  for (Index b = 0; b < s.num_blocks(); ++b) {
    if (in_blocks[b]) out.blocks.push_back(b);
  }
  return out;
}

bool is_closed_substructure(const IncidenceStructure& s, std::span<const Index> points,
                            std::span<const Index> blocks, int l1, int l2) {
  std::vector<char> in_points(s.num_points(), 0);
  std::vector<char> in_blocks(s.num_blocks(), 0);
  for (Index p : points) in_points.at(p) = 1;
  for (Index b : blocks) in_blocks.at(b) = 1;
  for (Index b = 0; b < s.num_blocks(); ++b) {
    if (in_blocks[b]) continue;
    std::size_t hits = 0;
    for (Index p : s.points_on(b)) hits += in_points[p];
    if (hits >= static_cast<std::size_t>(l1)) return false;
  }
  for (Index p = 0; p < s.num_points(); ++p) {
    if (in_points[p]) continue;
    std::size_t support = 0;
    for (Index b : s.blocks_through(p)) support += in_blocks[b];
    if (support >= static_cast<std::size_t>(l2)) return false;
  }
  return true;
}

}  // namespace coxcfg
