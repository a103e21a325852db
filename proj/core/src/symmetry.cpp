#include "coxcfg/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "coxcfg/builders.hpp"

namespace coxcfg {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int i : images_) {
    if (i < 0 || static_cast<std::size_t>(i) >= images_.size() || seen[static_cast<std::size_t>(i)]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[static_cast<std::size_t>(i)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int i, int j) {
  auto images = identity(n).images_;
  std::swap(images.at(static_cast<std::size_t>(i)), images.at(static_cast<std::size_t>(j)));
  return Permutation(std::move(images));
}

Permutation Permutation::rotation(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = (i + 1) % n;
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

Subset Permutation::apply(Subset s) const {
  Subset out;
  for (int e : s.elements()) out = out.with((*this)(e));
  return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutations of different degree");
  std::vector<int> images(b.images_.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = a(b.images_[i]);
  return Permutation(std::move(images));
}

Subset apply(const CoxMap& g, Subset a) { return g.phi.apply(a) ^ g.translation; }

CoxMap compose(const CoxMap& g1, const CoxMap& g2) {
  return {g1.phi * g2.phi, g1.translation ^ g1.phi.apply(g2.translation)};
}

CoxMap inverse(const CoxMap& g) {
  auto inv = g.phi.inverse();
  Subset t = inv.apply(g.translation);
  return {std::move(inv), t};
}

GroupDescription full_group(int n) {
  if (n < 1 || n > 20) throw std::invalid_argument("group degree out of range");
  GroupDescription g;
  g.n = n;
  std::uint64_t factorial = 1;
  for (int i = 2; i <= n; ++i) factorial *= static_cast<std::uint64_t>(i);
  g.order = factorial << n;
  g.collineation_order = factorial << (n - 1);
  if (n >= 2) {
    g.generators.push_back(CoxMap::permute(Permutation::transposition(n, 0, 1)));
    g.generators.push_back(CoxMap::permute(Permutation::rotation(n)));
  }
  g.collineation_generators = g.generators;
  g.generators.push_back(CoxMap::translate(n, Subset::singleton(0)));
  if (n >= 2) g.collineation_generators.push_back(CoxMap::translate(n, Subset::of({0, 1})));
  return g;
}

void for_each_element(int n, const std::function<void(const CoxMap&)>& visit) {
  if (n < 1 || n > 10) throw std::invalid_argument("full iteration needs 1 <= n <= 10");
  auto images = Permutation::identity(n).images();
  do {
    Permutation phi(images);
    for (Subset::Bits bits = 0; bits < (Subset::Bits{1} << n); ++bits) visit({phi, Subset(bits)});
  } while (std::next_permutation(images.begin(), images.end()));
}

IncidenceMap to_incidence_map(int n, const CoxMap& g) {
  if (g.size() != n) throw std::invalid_argument("map degree differs from n");
  IncidenceMap m;
  for (auto p : subsets_of_parity(n, 0)) m.point_image.push_back(cox_index(n, apply(g, p)));
  for (auto b : subsets_of_parity(n, 1)) m.block_image.push_back(cox_index(n, apply(g, b)));
  return m;
}

namespace {

std::vector<IncidenceMap> all_isomorphisms(const IncidenceStructure& a, const IncidenceStructure& b,
                                           std::size_t cap) {
  if (a.num_points() + a.num_blocks() > cap) {
    throw std::length_error("structure exceeds the brute-force size cap");
  }
  std::vector<IncidenceMap> out;
  for_each_isomorphism(a, b, [&](const IncidenceMap& m) {
    out.push_back(m);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<IncidenceMap> brute_force_automorphisms(const IncidenceStructure& s, std::size_t cap) {
  return all_isomorphisms(s, s, cap);
}

std::vector<IncidenceMap> brute_force_correlations(const IncidenceStructure& s, std::size_t cap) {
  return all_isomorphisms(s, dual(s), cap);
}

namespace {

template <typename T, typename Step>
std::set<T> orbit(const T& start, const std::vector<CoxMap>& generators, Step step) {
  std::set<T> seen{start};
  std::deque<T> queue{start};
  while (!queue.empty()) {
    T cur = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      T next = step(g, cur);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen;
}

}  // namespace

std::set<CoxFlag> flag_orbit(int n, CoxFlag flag) {
  if (!flag.point.even() || flag.block.even() || !flag.point.adjacent(flag.block) ||
      !flag.point.within(n) || !flag.block.within(n)) {
    throw std::invalid_argument("not a flag of cox(n)");
  }
  auto gens = full_group(n).collineation_generators;
  return orbit(flag, gens, [](const CoxMap& g, const CoxFlag& f) {
    return CoxFlag{apply(g, f.point), apply(g, f.block)};
  });
}

std::set<Subset> point_orbit(int n, Subset point) {
  if (!point.even() || !point.within(n)) throw std::invalid_argument("not a point of cox(n)");
  auto gens = full_group(n).collineation_generators;
  return orbit(point, gens, [](const CoxMap& g, Subset p) { return apply(g, p); });
}

Stabilizer stabilizer_of_empty(int n) {
  if (n < 3 || n > 5) throw std::invalid_argument("stabilizer oracle needs 3 <= n <= 5");
  auto s = cox(n);
  const Index empty = cox_index(n, Subset{});
  Stabilizer out;
  for (auto& m : brute_force_automorphisms(s)) {
    if (m.point_image[empty] == empty) out.elements.push_back(std::move(m));
  }
  std::vector<IncidenceMap> expected;
  auto images = Permutation::identity(n).images();
  do {
    expected.push_back(to_incidence_map(n, CoxMap::permute(Permutation(images))));
  } while (std::next_permutation(images.begin(), images.end()));
  std::sort(expected.begin(), expected.end());
  out.matches_permutations = expected == out.elements;
  return out;
}

}  // namespace coxcfg
