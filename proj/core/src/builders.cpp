#include "coxcfg/builders.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "coxcfg/cliques.hpp"

namespace coxcfg {

namespace {

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return out;
}

// Rank of s among subsets of the same size in increasing bit-word order (colex rank).
std::size_t colex_rank(Subset s) {
  std::size_t rank = 0;
  int i = 0;
  for (int e : s.elements()) rank += binomial(e, ++i);
  return rank;
}

std::vector<std::string> labels_of(const std::vector<Subset>& sets) {
  std::vector<std::string> out;
  out.reserve(sets.size());
  for (auto s : sets) out.push_back(to_string(s));
  return out;
}

void check_ground(int n, int lo) {
  if (n < lo || n > kMaxGroundSize) {
    throw std::invalid_argument("ground set size " + std::to_string(n) + " outside [" +
                                std::to_string(lo) + "," + std::to_string(kMaxGroundSize) + "]");
  }
}

void check_grassmann_range(int n, int k) {
  check_ground(n, 2);
  if (!(1 < k + 1 && k + 1 < n)) {
    throw std::invalid_argument("Grassmannian parameters need 1 < k+1 < n");
  }
}

}  // namespace

Index cox_index(int n, Subset s) {
  if (!s.within(n)) throw std::invalid_argument("subset outside the ground set");
  std::size_t index = 0;
  for (int c = s.size() % 2; c < s.size(); c += 2) index += binomial(n, c);
  return index + colex_rank(s);
}

IncidenceStructure cox(int n) {
  check_ground(n, 3);
  auto points = subsets_of_parity(n, 0);
  auto blocks = subsets_of_parity(n, 1);
  std::vector<std::vector<Index>> block_points;
  block_points.reserve(blocks.size());
  for (auto b : blocks) {
    auto& pts = block_points.emplace_back();
    pts.reserve(static_cast<std::size_t>(n));
    for (int e = 0; e < n; ++e) pts.push_back(cox_index(n, b.flip(e)));
  }
  return IncidenceStructure(labels_of(points), labels_of(blocks), std::move(block_points));
}

SteinerMiquelLabels steiner_miquel_labels() {
  SteinerMiquelLabels out;
  out.points.emplace_back("q_A", Subset{});
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      out.points.emplace_back("q_{" + std::to_string(i + 1) + std::to_string(j + 1) + "}",
                              Subset::of({i, j}));
    }
  }
  out.points.emplace_back("q_B", Subset::full(4));
  for (int i = 0; i < 4; ++i) out.blocks.emplace_back("A_" + std::to_string(i + 1), Subset::singleton(i));
  for (int i = 0; i < 4; ++i) {
    out.blocks.emplace_back("B_" + std::to_string(i + 1), Subset::full(4).without(i));
  }
  return out;
}

IncidenceStructure grassmannian(int n, int k) {
  check_grassmann_range(n, k);
  auto points = subsets_of_size(n, k);
  auto tops = subsets_of_size(n, k + 1);
  std::vector<std::vector<Index>> block_points;
  for (auto b : tops) {
    auto& pts = block_points.emplace_back();
    for (int e : b.elements()) pts.push_back(colex_rank(b.without(e)));
  }
  return IncidenceStructure(labels_of(points), labels_of(tops), std::move(block_points));
}

IncidenceStructure k_dagger(int n, int k) {
  check_grassmann_range(n, k);
  auto points = subsets_of_size(n, k);
  auto stars = subsets_of_size(n, k - 1);
  auto tops = subsets_of_size(n, k + 1);
  std::vector<Subset> blocks = stars;
  blocks.insert(blocks.end(), tops.begin(), tops.end());
  std::vector<std::vector<Index>> block_points;
  for (auto h : stars) {
    auto& pts = block_points.emplace_back();
    for (int e = 0; e < n; ++e) {
      if (!h.contains(e)) pts.push_back(colex_rank(h.with(e)));
    }
  }
  for (auto b : tops) {
    auto& pts = block_points.emplace_back();
    for (int e : b.elements()) pts.push_back(colex_rank(b.without(e)));
  }
  return IncidenceStructure(labels_of(points), labels_of(blocks), std::move(block_points));
}

std::vector<Clique> max_cliques_grassmann(int n, int k) {
  check_grassmann_range(n, k);
  auto vertices = subsets_of_size(n, k + 1);
  AdjacencyMatrix adj(vertices.size(), std::vector<char>(vertices.size(), 0));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      adj[i][j] = i != j && (vertices[i] & vertices[j]).size() == k;
    }
  }
  std::vector<Clique> stars;
  std::vector<Clique> tops;
  for (const auto& found : maximal_cliques(adj)) {
    Clique c;
    Subset meet = Subset::full(n);
    Subset join;
    for (auto v : found) {
      c.members.push_back(vertices[v]);
      meet = meet & vertices[v];
      join = join | vertices[v];
    }
    std::sort(c.members.begin(), c.members.end());
    if (meet.size() == k) {
      c.kind = CliqueKind::Star;
      c.center = meet;
      stars.push_back(std::move(c));
    } else if (join.size() == k + 2) {
      c.kind = CliqueKind::Top;
      c.center = join;
      tops.push_back(std::move(c));
    } else {
      throw std::logic_error("maximal clique is neither a star nor a top");
    }
  }
  auto by_center = [](const Clique& a, const Clique& b) { return a.center < b.center; };
  std::sort(stars.begin(), stars.end(), by_center);
  std::sort(tops.begin(), tops.end(), by_center);
  stars.insert(stars.end(), std::make_move_iterator(tops.begin()), std::make_move_iterator(tops.end()));
  return stars;
}

Residual residual_at_point(const IncidenceStructure& s, Index point) {
  if (point >= s.num_points()) throw std::invalid_argument("not a point");
  auto through = s.blocks_through(point);
  std::vector<std::size_t> rank(s.num_points(), 0);
  for (Index b : through) {
    for (Index q : s.points_on(b)) {
      if (q != point) ++rank[q];
    }
  }
  std::vector<Index> points;
  for (Index q = 0; q < s.num_points(); ++q) {
    if (rank[q] >= 2) points.push_back(q);
  }
  Residual out;
  out.structure = substructure(s, points, std::vector<Index>(through.begin(), through.end()));
  const auto& r = out.structure;
  out.pairwise_meeting = true;
  for (Index a = 0; a < r.num_blocks(); ++a) {
    for (Index b = a + 1; b < r.num_blocks(); ++b) {
      if (r.common_points(a, b).empty()) out.pairwise_meeting = false;
    }
  }
  return out;
}

CoxResidual residual_at_point(int n, Subset p) {
  if (!p.even() || !p.within(n)) throw std::invalid_argument(to_string(p) + " is not a point");
  auto s = cox(n);
  CoxResidual out;
  Index idx = cox_index(n, p);
  out.residual = residual_at_point(s, idx);
  out.blocks_through = s.point_rank(idx);
  out.quoted_count = static_cast<std::size_t>(n - p.size());
  return out;
}

std::vector<Index> disjoint_blocks(const IncidenceStructure& s, Index d) {
  if (d >= s.num_blocks()) throw std::invalid_argument("not a block");
  std::vector<Index> out;
  for (Index b = 0; b < s.num_blocks(); ++b) {
    if (b != d && s.common_points(b, d).empty()) out.push_back(b);
  }
  return out;
}

IncidenceStructure miquel_substructure(Subset d) {
  if (d.even() || !d.within(4)) throw std::invalid_argument(to_string(d) + " is not a block of cox(4)");
  auto s = cox(4);
  Index block = cox_index(4, d);
  auto partners = disjoint_blocks(s, block);
  if (partners.size() != 1) throw std::logic_error("block without a unique disjoint partner");
  std::vector<Index> points(s.num_points());
  for (Index p = 0; p < points.size(); ++p) points[p] = p;
  std::vector<Index> blocks;
  for (Index b = 0; b < s.num_blocks(); ++b) {
    if (b != block && b != partners.front()) blocks.push_back(b);
  }
  return substructure(s, points, blocks);
}

Graph levi_graph(const IncidenceStructure& s) {
  Graph g;
  g.labels = s.point_labels();
  g.labels.insert(g.labels.end(), s.block_labels().begin(), s.block_labels().end());
  for (Index b = 0; b < s.num_blocks(); ++b) {
    for (Index p : s.points_on(b)) g.edges.emplace_back(p, s.num_points() + b);
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

Graph hypercube(int n) {
  if (n < 0 || n > kMaxGroundSize) throw std::invalid_argument("hypercube dimension out of range");
  auto vertices = subsets_of(Subset::full(n));
  std::vector<std::size_t> index(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i].bits()] = i;
  Graph g;
  g.labels = labels_of(vertices);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (int e = 0; e < n; ++e) {
      std::size_t j = index[vertices[i].flip(e).bits()];
      if (i < j) g.edges.emplace_back(i, j);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

bool same_labelled_graph(const Graph& a, const Graph& b) {
  auto vertex_set = [](const Graph& g) { return std::multiset<std::string>(g.labels.begin(), g.labels.end()); };
  if (vertex_set(a) != vertex_set(b)) return false;
  auto edge_set = [](const Graph& g) {
    std::multiset<std::pair<std::string, std::string>> out;
    for (auto [i, j] : g.edges) out.insert(std::minmax(g.labels.at(i), g.labels.at(j)));
    return out;
  };
  return edge_set(a) == edge_set(b);
}

}  // namespace coxcfg
