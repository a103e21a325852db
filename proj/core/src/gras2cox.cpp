#include <algorithm>
#include <map>
#include <stdexcept>

#include "coxcfg/builders.hpp"
#include "coxcfg/cliques.hpp"

namespace coxcfg {

namespace {

// Incidence structure under construction. Every object carries the subset it
// will be labelled with; labels are derived from the defining family and are
// never used to decide incidences.
class Completion {
 public:
  explicit Completion(int n) : n_(n) {
    auto base = grassmannian(n, 2);
    for (const auto& label : base.point_labels()) add_point(2, parse_subset(label));
    for (Index b = 0; b < base.num_blocks(); ++b) {
      Index blk = add_block(3, parse_subset(base.block_label(b)));
      for (Index p : base.points_on(b)) link(p, blk);
    }
  }

  // Improper points for the planes of G(X,k), then blocks joining improper
  // points of maximal neighbouring plane families without a common line.
  bool step_up(int k) {
    const auto lines = blocks_at(k + 1);
    if (lines.empty()) return false;
    const auto pts = points_at(k);
    // Planes: maximal cliques of concurrent lines with no point common to all of them.
    AdjacencyMatrix line_adj(lines.size(), std::vector<char>(lines.size(), 0));
    for (std::size_t i = 0; i < lines.size(); ++i) {
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        bool meet = share(block_points_[lines[i]], block_points_[lines[j]], pts);
        line_adj[i][j] = line_adj[j][i] = meet;
      }
    }
    std::vector<std::vector<Index>> planes;
    for (const auto& clique : maximal_cliques(line_adj)) {
      std::vector<Index> members;
      for (auto i : clique) members.push_back(lines[i]);
      if (!common_point(members, pts)) planes.push_back(std::move(members));
    }
    std::vector<Index> improper;
    for (const auto& plane : planes) {
      Subset label;
      for (Index l : plane) label = label | block_label_[l];
      Index p = add_point(k + 2, label);
      for (Index l : plane) link(p, l);
      improper.push_back(p);
    }
    record(k + 2, true, improper.size(), "improper points of planes");

    // Neighbouring planes share a line.
    AdjacencyMatrix plane_adj(planes.size(), std::vector<char>(planes.size(), 0));
    for (std::size_t i = 0; i < planes.size(); ++i) {
      for (std::size_t j = i + 1; j < planes.size(); ++j) {
        bool nb = std::find_first_of(planes[i].begin(), planes[i].end(), planes[j].begin(),
                                     planes[j].end()) != planes[i].end();
        plane_adj[i][j] = plane_adj[j][i] = nb;
      }
    }
    std::size_t joined = 0;
    for (const auto& family : maximal_cliques(plane_adj)) {
      if (common_line(family, planes)) continue;
      Subset label;
      for (auto i : family) label = label | point_label_[improper[i]];
      Index blk = add_block(k + 3, label);
      for (auto i : family) link(improper[i], blk);
      ++joined;
    }
    record(k + 3, false, joined, "blocks joining neighbouring plane families");
    return !improper.empty();
  }

  // Clique-blocks for the maximal simplices of G(X,k), then ideal points for
  // maximal pairwise-intersecting simplex families without a common point.
  bool step_down(int k) {
    const auto pts = points_at(k);
    const auto lines = blocks_at(k + 1);
    if (pts.empty()) return false;
    std::map<Index, std::size_t> local;
    for (std::size_t i = 0; i < pts.size(); ++i) local[pts[i]] = i;
    AdjacencyMatrix collinear(pts.size(), std::vector<char>(pts.size(), 0));
    for (Index l : lines) {
      std::vector<std::size_t> on;
      for (Index p : block_points_[l]) {
        if (auto it = local.find(p); it != local.end()) on.push_back(it->second);
      }
      for (auto a : on) {
        for (auto b : on) collinear[a][b] = a != b;
      }
    }
    std::vector<std::vector<Index>> simplices;
    for (const auto& clique : maximal_cliques(collinear)) {
      std::vector<Index> members;
      for (auto i : clique) members.push_back(pts[i]);
      bool inside_line = std::any_of(lines.begin(), lines.end(), [&](Index l) {
        return std::includes(block_points_[l].begin(), block_points_[l].end(), members.begin(),
                             members.end());
      });
      if (!inside_line) simplices.push_back(std::move(members));
    }
    std::vector<Index> clique_blocks;
    for (const auto& simplex : simplices) {
      Subset label = Subset::full(n_);
      for (Index p : simplex) label = label & point_label_[p];
      Index blk = add_block(k - 1, label);
      for (Index p : simplex) link(p, blk);
      clique_blocks.push_back(blk);
    }
    record(k - 1, false, clique_blocks.size(), "clique-blocks of maximal simplices");

    AdjacencyMatrix meets(simplices.size(), std::vector<char>(simplices.size(), 0));
    for (std::size_t i = 0; i < simplices.size(); ++i) {
      for (std::size_t j = i + 1; j < simplices.size(); ++j) {
        bool m = std::find_first_of(simplices[i].begin(), simplices[i].end(), simplices[j].begin(),
                                    simplices[j].end()) != simplices[i].end();
        meets[i][j] = meets[j][i] = m;
      }
    }
    std::size_t ideal = 0;
    for (const auto& family : maximal_cliques(meets)) {
      std::vector<Index> members;
      for (auto i : family) members.push_back(clique_blocks[i]);
      if (common_point(members, pts)) continue;
      Subset label = Subset::full(n_);
      for (Index b : members) label = label & block_label_[b];
      Index p = add_point(k - 2, label);
      for (Index b : members) link(p, b);
      ++ideal;
    }
    record(k - 2, true, ideal, "ideal points of intersecting simplex families");
    return ideal > 0;
  }

  CompletionResult finish() {
    std::vector<Index> point_order(point_label_.size());
    std::vector<Index> block_order(block_label_.size());
    for (Index i = 0; i < point_order.size(); ++i) point_order[i] = i;
    for (Index i = 0; i < block_order.size(); ++i) block_order[i] = i;
    std::sort(point_order.begin(), point_order.end(),
              [&](Index a, Index b) { return point_label_[a] < point_label_[b]; });
    std::sort(block_order.begin(), block_order.end(),
              [&](Index a, Index b) { return block_label_[a] < block_label_[b]; });
    std::vector<Index> new_point(point_order.size());
    std::vector<std::string> point_labels;
    for (Index i = 0; i < point_order.size(); ++i) {
      new_point[point_order[i]] = i;
      point_labels.push_back(to_string(point_label_[point_order[i]]));
    }
    std::vector<std::string> block_labels;
    std::vector<std::vector<Index>> block_points;
    for (Index b : block_order) {
      block_labels.push_back(to_string(block_label_[b]));
      auto& pts = block_points.emplace_back();
      for (Index p : block_points_[b]) pts.push_back(new_point[p]);
    }
    // Duplicate derived labels would throw here.
    return {IncidenceStructure(std::move(point_labels), std::move(block_labels), std::move(block_points)),
            std::move(layers_)};
  }

 private:
  Index add_point(int layer, Subset label) {
    point_label_.push_back(label);
    point_layer_.push_back(layer);
    return point_label_.size() - 1;
  }
  Index add_block(int layer, Subset label) {
    block_label_.push_back(label);
    block_layer_.push_back(layer);
    block_points_.emplace_back();
    return block_label_.size() - 1;
  }
  void link(Index point, Index block) {
    auto& pts = block_points_[block];
    pts.insert(std::upper_bound(pts.begin(), pts.end(), point), point);
  }
  void record(int layer, bool points, std::size_t created, std::string rule) {
    layers_.push_back({layer, points, created, std::move(rule)});
  }

  std::vector<Index> points_at(int layer) const {
    std::vector<Index> out;
    for (Index p = 0; p < point_layer_.size(); ++p) {
      if (point_layer_[p] == layer) out.push_back(p);
    }
    return out;
  }
  std::vector<Index> blocks_at(int layer) const {
    std::vector<Index> out;
    for (Index b = 0; b < block_layer_.size(); ++b) {
      if (block_layer_[b] == layer) out.push_back(b);
    }
    return out;
  }

  // Both sorted point lists share a point of `within` (sorted).
  static bool share(const std::vector<Index>& a, const std::vector<Index>& b,
                    const std::vector<Index>& within) {
    for (Index p : a) {
      if (std::binary_search(b.begin(), b.end(), p) &&
          std::binary_search(within.begin(), within.end(), p)) {
        return true;
      }
    }
    return false;
  }

  bool common_point(const std::vector<Index>& blocks, const std::vector<Index>& within) const {
    for (Index p : within) {
      bool on_all = std::all_of(blocks.begin(), blocks.end(), [&](Index b) {
        return std::binary_search(block_points_[b].begin(), block_points_[b].end(), p);
      });
      if (on_all) return true;
    }
    return false;
  }

  static bool common_line(const std::vector<std::size_t>& family,
                          const std::vector<std::vector<Index>>& planes) {
    for (Index l : planes[family.front()]) {
      bool in_all = std::all_of(family.begin(), family.end(), [&](std::size_t i) {
        return std::find(planes[i].begin(), planes[i].end(), l) != planes[i].end();
      });
      if (in_all) return true;
    }
    return false;
  }

  int n_;
  std::vector<Subset> point_label_;
  std::vector<int> point_layer_;
  std::vector<Subset> block_label_;
  std::vector<int> block_layer_;
  std::vector<std::vector<Index>> block_points_;
  std::vector<CompletionLayer> layers_;
};

}  // namespace

CompletionResult gras2cox_with_report(int n) {
  if (n < 4 || n > 12) throw std::invalid_argument("gras2cox needs 4 <= n <= 12");
  Completion work(n);
  for (int k = 2; k + 1 <= n && work.step_up(k); k += 2) {
  }
  for (int k = 2; k > 0 && work.step_down(k); k -= 2) {
  }
  return work.finish();
}

IncidenceStructure gras2cox(int n) { return gras2cox_with_report(n).structure; }

}  // namespace coxcfg
