#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "coxcfg/builders.hpp"
#include "coxcfg/symmetry.hpp"

using namespace coxcfg;

namespace {

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  auto images = Permutation::identity(n).images();
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// Set semantics of phi(a) sym-diff A, element by element.
Subset by_hand(const CoxMap& g, Subset a) {
  Subset image;
  for (int e : a.elements()) image = image.with(g.phi(e));
  Subset out;
  for (int e = 0; e < g.size(); ++e) {
    if (image.contains(e) != g.translation.contains(e)) out = out.with(e);
  }
  return out;
}

Subset random_subset(std::mt19937& rng, int n) { return Subset(static_cast<Subset::Bits>(rng()) & Subset::full(n).bits()); }

Permutation random_permutation(std::mt19937& rng, int n) {
  auto images = Permutation::identity(n).images();
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

}  // namespace

TEST(CoxMap, ApplyExamples) {
  EXPECT_EQ(apply(CoxMap::translate(3, Subset::of({0, 1})), Subset{}), Subset::of({0, 1}));
  auto tau1 = CoxMap::translate(4, Subset::of({0}));
  EXPECT_FALSE(tau1.is_collineation());
  EXPECT_EQ(apply(tau1, Subset{}), Subset::of({0}));
  EXPECT_EQ(apply(CoxMap::permute(Permutation::transposition(3, 0, 1)), Subset::of({0, 2})), Subset::of({1, 2}));
  EXPECT_THROW(Permutation({0, 0, 1}), std::invalid_argument);
}

TEST(CoxMap, ActionAndParity) {
  for (int n = 1; n <= 4; ++n) {
    for_each_element(n, [&](const CoxMap& g) {
      for (auto a : subsets_of(Subset::full(n))) {
        Subset img = apply(g, a);
        EXPECT_EQ(img, by_hand(g, a));
        EXPECT_EQ(img.even() == a.even(), g.is_collineation());
        for (int e = 0; e < n; ++e) EXPECT_TRUE(img.adjacent(apply(g, a.flip(e))));
      }
    });
  }
}

TEST(CoxMap, CompositionIsExhaustivelyPointwise) {
  for (int n = 1; n <= 3; ++n) {
    std::vector<CoxMap> all;
    for_each_element(n, [&](const CoxMap& g) { all.push_back(g); });
    for (const auto& g1 : all) {
      for (const auto& g2 : all) {
        auto c = compose(g1, g2);
        EXPECT_EQ(c.is_collineation(), g1.is_collineation() == g2.is_collineation());
        for (auto a : subsets_of(Subset::full(n))) EXPECT_EQ(apply(c, a), apply(g1, apply(g2, a)));
      }
    }
  }
  // n = 4 and 5: every pair against a fixed sample of elements.
  std::mt19937 rng(2);
  for (int n = 4; n <= 5; ++n) {
    std::vector<CoxMap> all;
    for_each_element(n, [&](const CoxMap& g) { all.push_back(g); });
    for (int t = 0; t < 2000; ++t) {
      const auto& g1 = all[rng() % all.size()];
      const auto& g2 = all[rng() % all.size()];
      auto c = compose(g1, g2);
      for (auto a : subsets_of(Subset::full(n))) EXPECT_EQ(apply(c, a), apply(g1, apply(g2, a)));
      EXPECT_EQ(compose(g1, inverse(g1)), CoxMap::identity(n));
      EXPECT_EQ(compose(g1, CoxMap::identity(n)), g1);
    }
  }
}

TEST(CoxMap, RandomTriplesUpToTen) {
  std::mt19937 rng(9);
  for (int t = 0; t < 10000; ++t) {
    int n = 1 + static_cast<int>(rng() % 10);
    CoxMap g1{random_permutation(rng, n), random_subset(rng, n)};
    CoxMap g2{random_permutation(rng, n), random_subset(rng, n)};
    Subset a = random_subset(rng, n);
    EXPECT_EQ(apply(compose(g1, g2), a), apply(g1, apply(g2, a)));
  }
}

TEST(CoxMap, ConjugationIdentity) {
  for (const auto& phi : all_permutations(4)) {
    auto ph = CoxMap::permute(phi);
    auto ph_inv = CoxMap::permute(phi.inverse());
    for (auto a : subsets_of(Subset::full(4))) {
      EXPECT_EQ(compose(compose(ph, CoxMap::translate(4, a)), ph_inv), CoxMap::translate(4, phi.apply(a)));
    }
  }
}

TEST(CoxMap, PermutationExtensionIsAMonomorphism) {
  for (int n = 1; n <= 5; ++n) {
    auto perms = all_permutations(n);
    std::set<std::vector<Subset>> actions;
    for (const auto& p : perms) {
      std::vector<Subset> images;
      for (auto a : subsets_of(Subset::full(n))) images.push_back(p.apply(a));
      actions.insert(images);
    }
    EXPECT_EQ(actions.size(), perms.size());
    std::mt19937 rng(static_cast<unsigned>(n));
    for (int t = 0; t < 200; ++t) {
      const auto& p = perms[rng() % perms.size()];
      const auto& q = perms[rng() % perms.size()];
      auto a = random_subset(rng, n);
      EXPECT_EQ((p * q).apply(a), p.apply(q.apply(a)));
    }
  }
}

TEST(Group, Orders) {
  auto g4 = full_group(4);
  EXPECT_EQ(g4.order, 384u);
  EXPECT_EQ(g4.collineation_order, 192u);
  EXPECT_EQ(full_group(3).collineation_order, 24u);
  for (const auto& g : g4.collineation_generators) EXPECT_TRUE(g.is_collineation());
  // Even subsets are closed under symmetric difference.
  for (auto a : subsets_of_parity(5, 0)) {
    for (auto b : subsets_of_parity(5, 0)) EXPECT_TRUE((a ^ b).even());
  }
}

TEST(Group, GeneratorsGenerateEverything) {
  for (int n = 3; n <= 4; ++n) {
    auto g = full_group(n);
    for (const auto* gens : {&g.generators, &g.collineation_generators}) {
      std::set<CoxMap> seen{CoxMap::identity(n)};
      std::vector<CoxMap> frontier{CoxMap::identity(n)};
      while (!frontier.empty()) {
        auto cur = frontier.back();
        frontier.pop_back();
        for (const auto& s : *gens) {
          auto next = compose(s, cur);
          if (seen.insert(next).second) frontier.push_back(next);
        }
      }
      EXPECT_EQ(seen.size(), gens == &g.generators ? g.order : g.collineation_order);
    }
  }
}

TEST(BruteForce, MatchesTheFormulaAsMaps) {
  for (int n = 3; n <= 5; ++n) {
    auto s = cox(n);
    auto autos = brute_force_automorphisms(s);
    auto corrs = brute_force_correlations(s);
    std::vector<IncidenceMap> ga, gc;
    for_each_element(n, [&](const CoxMap& g) { (g.is_collineation() ? ga : gc).push_back(to_incidence_map(n, g)); });
    std::sort(ga.begin(), ga.end());
    std::sort(gc.begin(), gc.end());
    EXPECT_EQ(autos, ga) << n;
    EXPECT_EQ(corrs, gc) << n;
    auto d = dual(s);
    for (const auto& m : corrs) EXPECT_TRUE(is_isomorphism(s, d, m));
  }
  auto c4 = brute_force_correlations(cox(4));
  EXPECT_EQ(c4.size(), 192u);
  EXPECT_TRUE(std::binary_search(c4.begin(), c4.end(), to_incidence_map(4, CoxMap::translate(4, Subset::of({0})))));
  EXPECT_THROW(brute_force_automorphisms(cox(7)), std::length_error);
}

TEST(BruteForce, KDaggerSixThree) {
  auto s = k_dagger(6, 3);
  auto autos = brute_force_automorphisms(s);
  EXPECT_EQ(autos.size(), 1440u);
  // Complementation swaps tops and stars and is one of them.
  IncidenceMap comp;
  for (Index p = 0; p < s.num_points(); ++p) {
    comp.point_image.push_back(s.point_index(to_string(Subset::full(6) - parse_subset(s.point_label(p)))));
  }
  for (Index b = 0; b < s.num_blocks(); ++b) {
    comp.block_image.push_back(s.block_index(to_string(Subset::full(6) - parse_subset(s.block_label(b)))));
  }
  EXPECT_TRUE(is_isomorphism(s, s, comp));
  EXPECT_TRUE(std::binary_search(autos.begin(), autos.end(), comp));
}

TEST(Orbits, FlagTransitive) {
  for (int n = 3; n <= 6; ++n) {
    auto orbit = flag_orbit(n, {Subset{}, Subset::singleton(0)});
    EXPECT_EQ(orbit.size(), static_cast<std::size_t>(n) << (n - 1));
    EXPECT_EQ(point_orbit(n, Subset{}).size(), std::size_t{1} << (n - 1));
  }
  EXPECT_THROW(flag_orbit(4, {Subset{}, Subset::of({0, 1, 2})}), std::invalid_argument);
}

TEST(Orbits, StabilizerOfEmptySet) {
  auto s3 = stabilizer_of_empty(3);
  EXPECT_EQ(s3.elements.size(), 6u);
  EXPECT_TRUE(s3.matches_permutations);
  auto s4 = stabilizer_of_empty(4);
  EXPECT_EQ(s4.elements.size(), 24u);
  EXPECT_TRUE(s4.matches_permutations);
}

TEST(Orbits, PointStabilizersAreConjugate) {
  // tau_p maps the stabilizer of {} onto that of p, so the two have equal size.
  const int n = 4;
  auto s = cox(n);
  auto autos = brute_force_automorphisms(s);
  for (auto p : subsets_of_parity(n, 0)) {
    Index idx = cox_index(n, p);
    auto fixed = std::count_if(autos.begin(), autos.end(), [&](const IncidenceMap& m) { return m.point_image[idx] == idx; });
    EXPECT_EQ(fixed, 24);
  }
}
