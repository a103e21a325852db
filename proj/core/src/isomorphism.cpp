#include "coxcfg/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace coxcfg {

namespace {

// Levi graph as adjacency lists: points first, then blocks.
struct LeviGraph {
  std::size_t num_points = 0;
  std::vector<std::vector<std::size_t>> adjacency;
};

LeviGraph levi_of(const IncidenceStructure& s) {
  LeviGraph g;
  g.num_points = s.num_points();
  g.adjacency.resize(s.num_points() + s.num_blocks());
  for (Index b = 0; b < s.num_blocks(); ++b) {
    for (Index p : s.points_on(b)) {
      g.adjacency[p].push_back(g.num_points + b);
      g.adjacency[g.num_points + b].push_back(p);
    }
  }
  return g;
}

using Colours = std::vector<int>;

int count_colours(const Colours& c) {
  int m = -1;
  for (int x : c) m = std::max(m, x);
  return m + 1;
}

// Joint colour refinement of both graphs; false if the colour histograms diverge.
bool refine(const LeviGraph& ga, const LeviGraph& gb, Colours& ca, Colours& cb) {
  int classes = count_colours(ca);
  std::vector<std::pair<int, std::vector<int>>> sig_a(ca.size());
  std::vector<std::pair<int, std::vector<int>>> sig_b(cb.size());
  while (true) {
    auto build = [](const LeviGraph& g, const Colours& c, auto& sig) {
      for (std::size_t v = 0; v < c.size(); ++v) {
        sig[v].first = c[v];
        auto& nb = sig[v].second;
        nb.clear();
        for (auto w : g.adjacency[v]) nb.push_back(c[w]);
        std::sort(nb.begin(), nb.end());
      }
    };
    build(ga, ca, sig_a);
    build(gb, cb, sig_b);
    std::map<std::pair<int, std::vector<int>>, int> ids;
    for (const auto& s : sig_a) ids.emplace(s, 0);
    for (const auto& s : sig_b) ids.emplace(s, 0);
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (std::size_t v = 0; v < ca.size(); ++v) ca[v] = ids.at(sig_a[v]);
    for (std::size_t v = 0; v < cb.size(); ++v) cb[v] = ids.at(sig_b[v]);
    if (next == classes) break;
    classes = next;
  }
  std::vector<int> hist(static_cast<std::size_t>(classes), 0);
  for (int c : ca) ++hist[static_cast<std::size_t>(c)];
  for (int c : cb) --hist[static_cast<std::size_t>(c)];
  return std::all_of(hist.begin(), hist.end(), [](int h) { return h == 0; });
}

class Search {
 public:
  Search(const IncidenceStructure& a, const IncidenceStructure& b,
         const std::function<bool(const IncidenceMap&)>& visit)
      : a_(a), b_(b), ga_(levi_of(a)), gb_(levi_of(b)), visit_(visit) {}

  std::size_t run() {
    if (a_.num_points() != b_.num_points() || a_.num_blocks() != b_.num_blocks() ||
        a_.num_flags() != b_.num_flags()) {
      return 0;
    }
    Colours ca(ga_.adjacency.size());
    Colours cb(gb_.adjacency.size());
    for (std::size_t v = 0; v < ca.size(); ++v) ca[v] = v < ga_.num_points ? 0 : 1;
    for (std::size_t v = 0; v < cb.size(); ++v) cb[v] = v < gb_.num_points ? 0 : 1;
    recurse(std::move(ca), std::move(cb));
    return found_;
  }

 private:
  // Returns false once the visitor asked to stop.
  bool recurse(Colours ca, Colours cb) {
    if (!refine(ga_, gb_, ca, cb)) return true;
    int classes = count_colours(ca);
    std::vector<int> size(static_cast<std::size_t>(classes), 0);
    for (int c : ca) ++size[static_cast<std::size_t>(c)];
    int target = -1;
    for (int c = 0; c < classes; ++c) {
      auto sz = size[static_cast<std::size_t>(c)];
      if (sz > 1 && (target < 0 || sz < size[static_cast<std::size_t>(target)])) target = c;
    }
    if (target < 0) return leaf(ca, cb);

    std::size_t v = 0;
    while (ca[v] != target) ++v;
    for (std::size_t w = 0; w < cb.size(); ++w) {
      if (cb[w] != target) continue;
      Colours na = ca;
      Colours nb = cb;
      na[v] = classes;
      nb[w] = classes;
      if (!recurse(std::move(na), std::move(nb))) return false;
    }
    return true;
  }

  bool leaf(const Colours& ca, const Colours& cb) {
    std::vector<std::size_t> by_colour(cb.size());
    for (std::size_t w = 0; w < cb.size(); ++w) by_colour[static_cast<std::size_t>(cb[w])] = w;
    IncidenceMap map;
    map.point_image.resize(a_.num_points());
    map.block_image.resize(a_.num_blocks());
    for (std::size_t v = 0; v < ca.size(); ++v) {
      std::size_t w = by_colour[static_cast<std::size_t>(ca[v])];
      if (v < ga_.num_points) {
        map.point_image[v] = w;
      } else {
        map.block_image[v - ga_.num_points] = w - gb_.num_points;
      }
    }
    for (Index blk = 0; blk < a_.num_blocks(); ++blk) {
      for (Index p : a_.points_on(blk)) {
        if (!b_.incident(map.point_image[p], map.block_image[blk])) return true;
      }
    }
    ++found_;
    return visit_(map);
  }

  const IncidenceStructure& a_;
  const IncidenceStructure& b_;
  LeviGraph ga_;
  LeviGraph gb_;
  const std::function<bool(const IncidenceMap&)>& visit_;
  std::size_t found_ = 0;
};

}  // namespace

bool is_isomorphism(const IncidenceStructure& from, const IncidenceStructure& to,
                    const IncidenceMap& map) {
  if (from.num_points() != to.num_points() || from.num_blocks() != to.num_blocks()) return false;
  if (map.point_image.size() != from.num_points() || map.block_image.size() != from.num_blocks()) {
    return false;
  }
  auto bijective = [](const std::vector<Index>& image, std::size_t n) {
    std::vector<char> seen(n, 0);
    for (Index i : image) {
      if (i >= n || seen[i]) return false;
      seen[i] = 1;
    }
    return true;
  };
  if (!bijective(map.point_image, to.num_points()) || !bijective(map.block_image, to.num_blocks())) {
    return false;
  }
  for (Index b = 0; b < from.num_blocks(); ++b) {
    for (Index p = 0; p < from.num_points(); ++p) {
      if (from.incident(p, b) != to.incident(map.point_image[p], map.block_image[b])) return false;
    }
  }
  return true;
}

std::size_t for_each_isomorphism(const IncidenceStructure& a, const IncidenceStructure& b,
                                 const std::function<bool(const IncidenceMap&)>& visit) {
  return Search(a, b, visit).run();
}

std::optional<IncidenceMap> find_isomorphism(const IncidenceStructure& a,
                                             const IncidenceStructure& b) {
  std::optional<IncidenceMap> out;
  for_each_isomorphism(a, b, [&](const IncidenceMap& m) {
    out = m;
    return false;
  });
  return out;
}

}  // namespace coxcfg
