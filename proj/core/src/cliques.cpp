#include "coxcfg/cliques.hpp"

#include <algorithm>

namespace coxcfg {

namespace {

void expand(const AdjacencyMatrix& adj, std::vector<std::size_t>& current,
            std::vector<std::size_t> candidates, std::vector<std::size_t> excluded,
            std::vector<std::vector<std::size_t>>& out) {
  if (candidates.empty() && excluded.empty()) {
    auto clique = current;
    std::sort(clique.begin(), clique.end());
    out.push_back(std::move(clique));
    return;
  }
  // Pivot: the vertex of candidates + excluded with most neighbours in candidates.
  std::size_t pivot = 0;
  std::size_t best = 0;
  bool have_pivot = false;
  for (const auto* pool : {&candidates, &excluded}) {
    for (auto u : *pool) {
      std::size_t deg = 0;
      for (auto v : candidates) deg += adj[u][v] ? 1 : 0;
      if (!have_pivot || deg > best) {
        pivot = u;
        best = deg;
        have_pivot = true;
      }
    }
  }
  std::vector<std::size_t> branch;
  for (auto v : candidates) {
    if (!adj[pivot][v]) branch.push_back(v);
  }
  for (auto v : branch) {
    std::vector<std::size_t> next_candidates;
    std::vector<std::size_t> next_excluded;
    for (auto w : candidates) {
      if (adj[v][w]) next_candidates.push_back(w);
    }
    for (auto w : excluded) {
      if (adj[v][w]) next_excluded.push_back(w);
    }
    current.push_back(v);
    expand(adj, current, std::move(next_candidates), std::move(next_excluded), out);
    current.pop_back();
    candidates.erase(std::find(candidates.begin(), candidates.end(), v));
    excluded.push_back(v);
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> maximal_cliques(const AdjacencyMatrix& adjacency) {
  std::vector<std::vector<std::size_t>> out;
  if (adjacency.empty()) return out;
  std::vector<std::size_t> all(adjacency.size());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = v;
  std::vector<std::size_t> current;
  expand(adjacency, current, std::move(all), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace coxcfg
