#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "coxcfg/builders.hpp"
#include "coxcfg/cliques.hpp"
#include "coxcfg/incidence.hpp"
#include "coxcfg/isomorphism.hpp"
#include "coxcfg/subset.hpp"

using namespace coxcfg;

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::vector<Index> indices(const IncidenceStructure& s, std::initializer_list<const char*> labels, bool points) {
  std::vector<Index> out;
  for (const char* l : labels) out.push_back(points ? s.point_index(l) : s.block_index(l));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Subset, TextRoundTrip) {
  EXPECT_EQ(to_string(Subset{}), "{}");
  EXPECT_EQ(to_string(Subset::of({0, 2, 3})), "{1,3,4}");
  EXPECT_EQ(parse_subset("{1,3,4}"), Subset::of({0, 2, 3}));
  EXPECT_EQ(parse_subset(" { 2 , 1 } "), Subset::of({0, 1}));
  for (Subset::Bits b = 0; b < 256; ++b) EXPECT_EQ(parse_subset(to_string(Subset(b))), Subset(b));
  EXPECT_THROW(parse_subset("{0}"), std::invalid_argument);
  EXPECT_THROW(parse_subset("{1,1}"), std::invalid_argument);
  EXPECT_THROW(parse_subset("1,2"), std::invalid_argument);
}

TEST(Subset, SetSemantics) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    Subset a(rng() & 0xFFu), b(rng() & 0xFFu);
    std::set<int> sa, sb;
    for (int e : a.elements()) sa.insert(e);
    for (int e : b.elements()) sb.insert(e);
    std::set<int> sym;
    std::set_symmetric_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(sym, sym.end()));
    EXPECT_EQ(static_cast<std::size_t>((a ^ b).size()), sym.size());
    bool inc = std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
    EXPECT_EQ(a.subset_of(b), inc);
    EXPECT_EQ(a.directly_below(b), inc && sb.size() == sa.size() + 1);
    EXPECT_EQ(a.adjacent(b), sym.size() == 1);
  }
}

TEST(Subset, CanonicalOrderAndCounts) {
  for (int n = 1; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      auto v = subsets_of_size(n, k);
      EXPECT_EQ(v.size(), binomial(n, k));
      EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
    }
    EXPECT_EQ(subsets_of_parity(n, 0).size(), std::size_t{1} << (n - 1));
  }
  EXPECT_LT(Subset::of({3}), Subset::of({0, 1}));
  EXPECT_LT(Subset::of({0, 2}), Subset::of({1, 2}));
}

TEST(Incidence, RejectsBadInput) {
  EXPECT_THROW(IncidenceStructure({"a", "a"}, {"B"}, {{0}}), std::invalid_argument);
  EXPECT_THROW(IncidenceStructure({"a"}, {"B"}, {{3}}), std::invalid_argument);
  EXPECT_THROW(signature(IncidenceStructure{}), std::invalid_argument);
}

TEST(Incidence, Signatures) {
  EXPECT_EQ(signature(cox(4)), (ConfigSignature{8, 4, 8, 4, true}));
  EXPECT_EQ(signature(cox(3)), (ConfigSignature{4, 3, 4, 3, true}));
  EXPECT_EQ(signature(grassmannian(5, 2)), (ConfigSignature{10, 3, 10, 3, true}));
  for (int n = 3; n <= 10; ++n) {
    std::size_t half = std::size_t{1} << (n - 1);
    auto sig = signature(cox(n));
    EXPECT_EQ(sig, (ConfigSignature{half, static_cast<std::size_t>(n), half, static_cast<std::size_t>(n), true}));
    EXPECT_EQ(sig.v * sig.r, sig.b * sig.k);
  }
}

TEST(Incidence, DualIsAnInvolution) {
  IncidenceStructure one({"p"}, {"B"}, {{0}});
  auto d = dual(one);
  EXPECT_EQ(d.point_labels(), std::vector<std::string>{"B"});
  EXPECT_EQ(d.block_labels(), std::vector<std::string>{"p"});
  for (const auto& s : {cox(4), grassmannian(5, 2), k_dagger(4, 2), one}) EXPECT_EQ(dual(dual(s)), s);
  EXPECT_EQ(signature(dual(grassmannian(5, 2))), (ConfigSignature{10, 3, 10, 3, true}));
}

TEST(Incidence, CoxIsSelfDual) {
  for (int n = 3; n <= 6; ++n) {
    auto s = cox(n);
    auto m = find_isomorphism(s, dual(s));
    ASSERT_TRUE(m.has_value()) << n;
    EXPECT_TRUE(is_isomorphism(s, dual(s), *m));
  }
}

TEST(Closure, FillsCoxFromTwoLines) {
  auto s = cox(4);
  auto blocks = indices(s, {"{1}", "{2}"}, false);
  std::set<Index> pts;
  for (Index b : blocks) pts.insert(s.points_on(b).begin(), s.points_on(b).end());
  std::vector<Index> seed(pts.begin(), pts.end());
  auto c = closure(s, seed, blocks, 3, 1);
  EXPECT_EQ(c.points.size(), 8u);
  EXPECT_EQ(c.blocks.size(), 8u);
}

TEST(Closure, EmptySeedsStayEmpty) {
  auto c = closure(cox(5), {}, {}, 3, 1);
  EXPECT_TRUE(c.points.empty());
  EXPECT_TRUE(c.blocks.empty());
  EXPECT_THROW(closure(cox(4), {}, {}, 0, 1), std::invalid_argument);
}

TEST(Closure, TwoMeetingBlocksGenerateCox5) {
  auto s = cox(5);
  auto blocks = indices(s, {"{1}", "{2}"}, false);
  auto c = closure(s, {}, blocks, 3, 1);
  EXPECT_EQ(c.points.size(), 16u);
  EXPECT_EQ(c.blocks.size(), 16u);
  EXPECT_TRUE(is_closed_substructure(s, c.points, c.blocks, 3, 1));
}

TEST(Closure, MonotoneAndIdempotent) {
  auto s = cox(5);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Index> small, large;
    for (Index p = 0; p < s.num_points(); ++p) {
      auto r = rng() % 6;
      if (r == 0) small.push_back(p);
      if (r <= 1) large.push_back(p);
    }
    auto a = closure(s, small, {}, 3, 2);
    auto b = closure(s, large, {}, 3, 2);
    EXPECT_TRUE(std::includes(b.points.begin(), b.points.end(), a.points.begin(), a.points.end()));
    EXPECT_TRUE(std::includes(b.blocks.begin(), b.blocks.end(), a.blocks.begin(), a.blocks.end()));
    auto again = closure(s, a.points, a.blocks, 3, 2);
    EXPECT_EQ(again.points, a.points);
    EXPECT_EQ(again.blocks, a.blocks);
  }
}

TEST(Closure, ClosedSubstructures) {
  // cox(4) on {1..4} inside cox(5).
  auto big = cox(5);
  std::vector<Index> pts, blks;
  for (auto p : subsets_of_parity(4, 0)) pts.push_back(big.point_index(to_string(p)));
  for (auto b : subsets_of_parity(4, 1)) blks.push_back(big.block_index(to_string(b)));
  std::sort(pts.begin(), pts.end());
  std::sort(blks.begin(), blks.end());
  EXPECT_TRUE(is_closed_substructure(big, pts, blks, 2, 2));

  // Pairs of {1..4} with every block of cox(4) meeting them twice: closed under
  // the block rule; the point rule is switched off with l2 above every rank.
  auto s = cox(4);
  std::vector<Index> pairs, two;
  for (auto p : subsets_of_size(4, 2)) pairs.push_back(s.point_index(to_string(p)));
  std::sort(pairs.begin(), pairs.end());
  for (Index b = 0; b < s.num_blocks(); ++b) {
    auto on = s.points_on(b);
    auto hits = std::count_if(on.begin(), on.end(), [&](Index p) {
      return std::binary_search(pairs.begin(), pairs.end(), p);
    });
    if (hits >= 2) two.push_back(b);
  }
  EXPECT_TRUE(is_closed_substructure(s, pairs, two, 2, 5));

  Index line = s.block_index("{1}");
  std::vector<Index> on(s.points_on(line).begin(), s.points_on(line).end());
  std::vector<Index> just{line};
  EXPECT_FALSE(is_closed_substructure(s, on, just, 2, 2));
}

TEST(Isomorphism, SteinerMiquelLiteral) {
  // Rows A_1..A_4, B_1..B_4 over columns q_A, q_12, q_13, q_14, q_23, q_24, q_34, q_B.
  const char* rows[8] = {"11110000", "11001100", "10101010", "10010110",
                         "00001111", "00110011", "01010101", "01101001"};
  std::vector<std::string> points{"qA", "q12", "q13", "q14", "q23", "q24", "q34", "qB"};
  std::vector<std::string> blocks{"A1", "A2", "A3", "A4", "B1", "B2", "B3", "B4"};
  std::vector<std::vector<Index>> members(8);
  for (Index b = 0; b < 8; ++b) {
    for (Index p = 0; p < 8; ++p) {
      if (rows[b][p] == '1') members[b].push_back(p);
    }
  }
  IncidenceStructure table(points, blocks, members);
  auto m = find_isomorphism(cox(4), table);
  ASSERT_TRUE(m.has_value());
  EXPECT_TRUE(is_isomorphism(cox(4), table, *m));
  EXPECT_FALSE(find_isomorphism(cox(3), cox(4)).has_value());
}

TEST(Isomorphism, CountsMatchForSmallCases) {
  // Automorphisms of the 4-cycle incidence structure (2 points x 2 blocks, all incident): 2 * 2.
  IncidenceStructure k22({"a", "b"}, {"X", "Y"}, {{0, 1}, {0, 1}});
  EXPECT_EQ(for_each_isomorphism(k22, k22, [](const IncidenceMap&) { return true; }), 4u);
  std::size_t seen = 0;
  for_each_isomorphism(cox(4), cox(4), [&](const IncidenceMap&) { return ++seen < 5; });
  EXPECT_EQ(seen, 5u);
}

TEST(Cliques, MatchesExhaustiveSearch) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 9;
    AdjacencyMatrix adj(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) adj[i][j] = adj[j][i] = (rng() % 2) ? 1 : 0;
    }
    std::vector<std::vector<std::size_t>> expected;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<std::size_t> vs;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1u) vs.push_back(i);
      }
      bool clique = true;
      for (auto a : vs) {
        for (auto b : vs) clique = clique && (a == b || adj[a][b]);
      }
      if (!clique) continue;
      bool maximal = true;
      for (std::size_t x = 0; x < n && maximal; ++x) {
        if (mask >> x & 1u) continue;
        maximal = !std::all_of(vs.begin(), vs.end(), [&](std::size_t v) { return adj[x][v]; });
      }
      if (maximal) expected.push_back(vs);
    }
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(maximal_cliques(adj), expected);
  }
}
