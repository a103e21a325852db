#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "coxcfg/builders.hpp"
#include "coxcfg/isomorphism.hpp"

using namespace coxcfg;

namespace {

std::set<std::string> labels_on(const IncidenceStructure& s, Index b) {
  std::set<std::string> out;
  for (Index p : s.points_on(b)) out.insert(s.point_label(p));
  return out;
}

// Maximal cliques of the graph on (k+1)-subsets of {0..n-1}, adjacent when
// sharing k elements, by scanning every vertex set.
std::set<std::vector<Subset>> brute_cliques(int n, int k) {
  auto verts = subsets_of_size(n, k + 1);
  const std::size_t m = verts.size();
  auto adj = [&](std::size_t i, std::size_t j) { return (verts[i] & verts[j]).size() == k; };
  std::set<std::vector<Subset>> out;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    bool clique = true;
    for (std::size_t i = 0; i < m && clique; ++i) {
      if (!(mask >> i & 1u)) continue;
      for (std::size_t j = i + 1; j < m && clique; ++j) {
        if (mask >> j & 1u) clique = adj(i, j);
      }
    }
    if (!clique) continue;
    bool maximal = true;
    for (std::size_t x = 0; x < m && maximal; ++x) {
      if (mask >> x & 1u) continue;
      bool all = true;
      for (std::size_t i = 0; i < m && all; ++i) {
        if (mask >> i & 1u) all = adj(x, i);
      }
      maximal = !all;
    }
    if (!maximal) continue;
    std::vector<Subset> members;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1u) members.push_back(verts[i]);
    }
    out.insert(members);
  }
  return out;
}

}  // namespace

TEST(Cox, SmallestCase) {
  auto s = cox(3);
  EXPECT_EQ(s.point_labels(), (std::vector<std::string>{"{}", "{1,2}", "{1,3}", "{2,3}"}));
  EXPECT_EQ(s.block_labels(), (std::vector<std::string>{"{1}", "{2}", "{3}", "{1,2,3}"}));
  EXPECT_EQ(s.num_flags(), 12u);
  EXPECT_EQ(cox(5).num_flags(), 80u);
  EXPECT_THROW(cox(2), std::invalid_argument);
  EXPECT_THROW(cox(17), std::invalid_argument);
}

TEST(Cox, IncidenceIsCovering) {
  for (int n = 3; n <= 7; ++n) {
    auto s = cox(n);
    for (Index p = 0; p < s.num_points(); ++p) {
      Subset a = parse_subset(s.point_label(p));
      for (Index b = 0; b < s.num_blocks(); ++b) {
        Subset c = parse_subset(s.block_label(b));
        EXPECT_EQ(s.incident(p, b), a.directly_below(c) || c.directly_below(a));
      }
      EXPECT_EQ(cox_index(n, a), p);
    }
    for (Index b = 0; b < s.num_blocks(); ++b) EXPECT_EQ(cox_index(n, parse_subset(s.block_label(b))), b);
  }
}

TEST(Cox, TwoPointsShareZeroOrTwoBlocks) {
  for (int n = 3; n <= 8; ++n) {
    auto s = cox(n);
    for (Index p = 0; p < s.num_points(); ++p) {
      for (Index q = p + 1; q < s.num_points(); ++q) {
        auto diff = parse_subset(s.point_label(p)) ^ parse_subset(s.point_label(q));
        EXPECT_EQ(s.common_blocks(p, q).size(), diff.size() == 2 ? 2u : 0u);
      }
    }
  }
}

TEST(SteinerMiquel, MatchesLiteralMatrix) {
  const char* rows[8] = {"11110000", "11001100", "10101010", "10010110",
                         "00001111", "00110011", "01010101", "01101001"};
  auto names = steiner_miquel_labels();
  ASSERT_EQ(names.points.size(), 8u);
  ASSERT_EQ(names.blocks.size(), 8u);
  EXPECT_EQ(names.points.front().second, Subset{});
  EXPECT_EQ(names.points.back().second, Subset::full(4));
  auto s = cox(4);
  for (std::size_t r = 0; r < 8; ++r) {
    Index b = s.block_index(to_string(names.blocks[r].second));
    for (std::size_t c = 0; c < 8; ++c) {
      Index p = s.point_index(to_string(names.points[c].second));
      EXPECT_EQ(s.incident(p, b), rows[r][c] == '1') << names.blocks[r].first << " " << names.points[c].first;
    }
  }
}

TEST(Grassmannian, Signatures) {
  EXPECT_EQ(signature(grassmannian(4, 2)), (ConfigSignature{6, 2, 4, 3, true}));
  EXPECT_EQ(signature(grassmannian(5, 2)), (ConfigSignature{10, 3, 10, 3, true}));
  EXPECT_THROW(grassmannian(4, 3), std::invalid_argument);
  auto g = grassmannian(5, 2);
  std::vector<std::string> pairs;
  for (auto p : subsets_of_size(5, 2)) pairs.push_back(to_string(p));
  EXPECT_EQ(g.point_labels(), pairs);
  auto c = cox(5);
  for (const auto& p : pairs) EXPECT_TRUE(c.find_point(p).has_value());
}

TEST(Grassmannian, PartialLinearSpace) {
  for (int n = 4; n <= 8; ++n) {
    for (int k = 1; k + 1 < n; ++k) {
      auto g = grassmannian(n, k);
      for (Index p = 0; p < g.num_points(); ++p) {
        for (Index q = p + 1; q < g.num_points(); ++q) EXPECT_LE(g.common_blocks(p, q).size(), 1u);
      }
    }
  }
}

TEST(KDagger, Signatures) {
  EXPECT_EQ(signature(k_dagger(4, 2)), (ConfigSignature{6, 4, 8, 3, true}));
  EXPECT_EQ(signature(k_dagger(6, 3)), (ConfigSignature{20, 6, 30, 4, true}));
}

TEST(KDagger, ContainsTraceOfCoxBlocks) {
  auto c = cox(4);
  auto kd = k_dagger(4, 2);
  std::set<std::set<std::string>> kblocks;
  for (Index b = 0; b < kd.num_blocks(); ++b) kblocks.insert(labels_on(kd, b));
  for (Index b = 0; b < c.num_blocks(); ++b) {
    std::set<std::string> trace;
    for (const auto& l : labels_on(c, b)) {
      if (parse_subset(l).size() == 2) trace.insert(l);
    }
    if (trace.size() >= 2) EXPECT_TRUE(kblocks.count(trace)) << c.block_label(b);
  }
}

TEST(MaxCliques, MatchExhaustiveSearch) {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 1}, {5, 1}, {5, 2}, {6, 1}, {6, 3}}) {
    auto cl = max_cliques_grassmann(n, k);
    std::set<std::vector<Subset>> got;
    for (const auto& c : cl) {
      got.insert(c.members);
      if (c.kind == CliqueKind::Star) {
        EXPECT_EQ(c.center.size(), k);
        for (auto m : c.members) EXPECT_TRUE(c.center.subset_of(m));
      } else {
        EXPECT_EQ(c.center.size(), k + 2);
        for (auto m : c.members) EXPECT_TRUE(m.subset_of(c.center));
      }
    }
    EXPECT_EQ(got.size(), cl.size());
    EXPECT_EQ(got, brute_cliques(n, k)) << n << "," << k;
  }
  auto c41 = max_cliques_grassmann(4, 1);
  EXPECT_EQ(std::count_if(c41.begin(), c41.end(), [](const Clique& c) { return c.kind == CliqueKind::Star; }), 4);
  for (const auto& c : c41) EXPECT_EQ(c.members.size(), 3u);
  for (const auto& c : max_cliques_grassmann(5, 1)) {
    EXPECT_EQ(c.members.size(), c.kind == CliqueKind::Star ? 4u : 3u);
  }
}

TEST(Gras2Cox, RecoversCox) {
  for (int n = 4; n <= 6; ++n) {
    auto g = gras2cox(n);
    EXPECT_EQ(g, cox(n)) << n;
    EXPECT_TRUE(find_isomorphism(g, cox(n)).has_value());
  }
}

TEST(Gras2Cox, ImproperPointsFillTheFourLayer) {
  for (int n = 4; n <= 7; ++n) {
    auto rep = gras2cox_with_report(n);
    std::map<int, std::size_t> made;
    for (const auto& l : rep.layers) made[l.layer] += l.created;
    std::size_t four = subsets_of_size(n, 4).size();
    EXPECT_EQ(made[4], four) << n;
    EXPECT_EQ(made[0], 1u);
    EXPECT_EQ(made[1], static_cast<std::size_t>(n));
  }
}

TEST(Residual, VeblenAtEmptySet) {
  auto r = residual_at_point(4, Subset{});
  EXPECT_EQ(r.residual.structure.num_blocks(), 4u);
  EXPECT_EQ(r.residual.structure.num_points(), 6u);
  EXPECT_TRUE(r.residual.pairwise_meeting);
  EXPECT_TRUE(find_isomorphism(r.residual.structure, grassmannian(4, 2)).has_value());
  for (int n = 3; n <= 8; ++n) {
    auto rn = residual_at_point(n, Subset{});
    EXPECT_EQ(rn.residual.structure.num_blocks(), static_cast<std::size_t>(n));
    EXPECT_TRUE(rn.residual.pairwise_meeting);
  }
}

TEST(Residual, ReportsBothCounts) {
  auto r = residual_at_point(5, Subset::of({0, 1}));
  EXPECT_EQ(r.blocks_through, 5u);
  EXPECT_EQ(r.quoted_count, 3u);
  EXPECT_EQ(r.residual.structure.num_blocks(), 5u);
  EXPECT_TRUE(r.residual.pairwise_meeting);
  EXPECT_THROW(residual_at_point(5, Subset::of({0})), std::invalid_argument);
}

TEST(DisjointBlocks, UniquePartnerInCox4) {
  auto s = cox(4);
  auto one = disjoint_blocks(s, s.block_index("{1}"));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(s.block_label(one[0]), "{2,3,4}");
  auto three = disjoint_blocks(s, s.block_index("{1,2,3}"));
  ASSERT_EQ(three.size(), 1u);
  EXPECT_EQ(s.block_label(three[0]), "{4}");
  auto s6 = cox(6);
  EXPECT_GT(disjoint_blocks(s6, s6.block_index("{1}")).size(), 1u);
}

TEST(MiquelSubstructure, CubeFaces) {
  auto m = miquel_substructure(Subset::of({0}));
  EXPECT_EQ(signature(m), (ConfigSignature{8, 3, 6, 4, true}));
  auto g = levi_graph(m);
  EXPECT_EQ(g.labels.size(), 14u);
  EXPECT_EQ(g.edges.size(), 24u);

  // Q_4 without the antipodal pair {1}, {2,3,4}.
  auto q = hypercube(4);
  Graph cut;
  std::map<std::size_t, std::size_t> keep;
  for (std::size_t i = 0; i < q.labels.size(); ++i) {
    if (q.labels[i] == "{1}" || q.labels[i] == "{2,3,4}") continue;
    keep[i] = cut.labels.size();
    cut.labels.push_back(q.labels[i]);
  }
  for (auto [a, b] : q.edges) {
    if (keep.count(a) && keep.count(b)) cut.edges.emplace_back(keep[a], keep[b]);
  }
  EXPECT_TRUE(same_labelled_graph(g, cut));

  auto s = cox(4);
  auto only = without_block(s, s.block_index("{1}"));
  EXPECT_FALSE(signature(only).uniform);
  EXPECT_THROW(miquel_substructure(Subset::of({0, 1})), std::invalid_argument);
}

TEST(Decompose, FamilySizesAndCovering) {
  struct Case {
    int n, a, b;
    std::size_t f1, f2;
  };
  for (auto c : {Case{8, 4, 4, 16, 16}, Case{6, 3, 3, 8, 8}, Case{9, 4, 5, 32, 16}}) {
    Subset x1 = Subset::full(c.a);
    Subset x2 = Subset::full(c.n) - x1;
    auto d = decompose(c.n, x1, x2);
    EXPECT_EQ(d.family1.size(), c.f1);
    EXPECT_EQ(d.family2.size(), c.f2);
    EXPECT_TRUE(d.covers);
    EXPECT_TRUE(d.unique);
    EXPECT_TRUE(d.transversal);
    EXPECT_EQ(d.flag_members.size(), cox(c.n).num_flags());
  }
  EXPECT_THROW(decompose(6, Subset::full(3), Subset::full(3)), std::invalid_argument);
}

TEST(Decompose, MembershipMatchesDirectCheck) {
  // Flag (p, b) lies in tau_A(cox(X)) iff p ^ A and b ^ A are both inside X.
  const int n = 6;
  Subset x1 = Subset::full(3), x2 = Subset::full(n) - x1;
  auto d = decompose(n, x1, x2);
  auto s = cox(n);
  auto flags = s.flags();
  std::vector<DecompositionMember> all(d.family1);
  all.insert(all.end(), d.family2.begin(), d.family2.end());
  for (std::size_t f = 0; f < flags.size(); ++f) {
    Subset p = parse_subset(s.point_label(flags[f].point));
    Subset b = parse_subset(s.block_label(flags[f].block));
    std::vector<std::size_t> expected;
    for (std::size_t m = 0; m < all.size(); ++m) {
      if ((p ^ all[m].translation).subset_of(all[m].ground) && (b ^ all[m].translation).subset_of(all[m].ground)) {
        expected.push_back(m);
      }
    }
    EXPECT_EQ(d.flag_members[f], expected);
  }
}

TEST(Levi, HypercubeIdentity) {
  for (int n = 3; n <= 10; ++n) {
    auto g = levi_graph(cox(n));
    EXPECT_EQ(g.labels.size(), std::size_t{1} << n);
    EXPECT_EQ(g.edges.size(), static_cast<std::size_t>(n) << (n - 1));
    EXPECT_TRUE(same_labelled_graph(g, hypercube(n)));
  }
  auto q3 = hypercube(3);
  EXPECT_EQ(q3.labels.size(), 8u);
  EXPECT_EQ(q3.edges.size(), 12u);
  for (int n = 1; n <= 8; ++n) {
    auto q = hypercube(n);
    std::vector<int> deg(q.labels.size(), 0);
    for (auto [a, b] : q.edges) ++deg[a], ++deg[b];
    EXPECT_TRUE(std::all_of(deg.begin(), deg.end(), [&](int x) { return x == n; }));
  }
  EXPECT_FALSE(same_labelled_graph(levi_graph(cox(4)), hypercube(5)));
}
