#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <set>
#include <vector>

#include "grammalc.hpp"

using namespace grammalc;

namespace {

/// Parent vector over 1..n with 0 at the root.
RootedTree T(std::vector<int> parents) {
  parents.insert(parents.begin(), 0);
  return RootedTree(std::move(parents));
}

// Root 4 with children 1 and 2, and 3 below 1.
RootedTree four_vertex_example() { return T({4, 4, 1, 0}); }

// Root 1 with children 5 and 2; 5 has children 3, 4, 6.
RootedTree six_vertex_example() { return T({0, 1, 5, 5, 1, 5}); }

std::vector<RootedTree> collect_rooted(int n, bool rooted_at_1) {
  std::vector<RootedTree> out;
  for_each_rooted(n, rooted_at_1, [&](const RootedTree& t) { out.push_back(t); });
  return out;
}

}  // namespace

TEST(RootedTree, Validation) {
  EXPECT_THROW(T({0, 0}), Error);
  EXPECT_THROW(T({2, 1, 0}), Error);
  EXPECT_THROW(T({1, 3}), Error);
  EXPECT_EQ(RootedTree::single_vertex().size(), 1);
  EXPECT_EQ(four_vertex_example().root(), 4);
  EXPECT_EQ(four_vertex_example().parent(3), 1);
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(collect_rooted(1, false).size(), 1u);
  EXPECT_EQ(collect_rooted(3, false).size(), 9u);
  EXPECT_EQ(collect_rooted(4, false).size(), 64u);
  EXPECT_EQ(collect_rooted(5, true).size(), 125u);
}

TEST(Enumerate, CountMatchesDumontCoefficientSum) {
  const LaurentPoly d3 = derive_n(builtin("G"), builtin("G").parse("A*S"), 3);
  Integer total = 0;
  for (const auto& [m, c] : d3.terms()) total += c;
  EXPECT_EQ(total, Integer(collect_rooted(4, false).size()));
}

TEST(Enumerate, ShorAndFilterGeneratorsAgree) {
  for (int n = 1; n <= 6; ++n) {
    for (bool at1 : {false, true}) {
      auto shor = collect_rooted(n, at1);
      std::vector<RootedTree> filter;
      for_each_rooted_by_filter(n, at1, [&](const RootedTree& t) { filter.push_back(t); });
      std::sort(shor.begin(), shor.end());
      std::sort(filter.begin(), filter.end());
      EXPECT_TRUE(std::adjacent_find(shor.begin(), shor.end()) == shor.end()) << "duplicate at n=" << n;
      EXPECT_EQ(shor, filter) << "n=" << n << " rooted_at_1=" << at1;
    }
  }
}

TEST(Enumerate, DeskLimit) {
  EXPECT_THROW(for_each_rooted(9, false, [](const RootedTree&) {}), LimitExceeded);
  EXPECT_THROW(for_each_rooted(4, false, [](const RootedTree&) {}, 3), LimitExceeded);
  ::setenv("GRAMMALC_DESK_LIMIT", "3", 1);
  EXPECT_EQ(desk_limit(), 3);
  EXPECT_THROW(for_each_rooted(4, false, [](const RootedTree&) {}), LimitExceeded);
  ::unsetenv("GRAMMALC_DESK_LIMIT");
  EXPECT_EQ(desk_limit(), 8);
}

TEST(Stats, PathsAndHistogram) {
  const TreeStats a = stats(T({0, 1, 2}));
  EXPECT_EQ(a.k, 0);
  EXPECT_EQ(a.deg1, 1);
  const TreeStats b = stats(T({0, 3, 1}));
  EXPECT_EQ(b.k, 1);
  EXPECT_EQ(b.deg1, 1);
  EXPECT_TRUE(b.is_improper(3, 2));
  EXPECT_EQ(b.beta[3], 2);

  EXPECT_EQ(improper_histogram(3), (std::vector<Integer>{2, 4, 3}));
}

TEST(Stats, ChildrenOrderedByBeta) {
  // Root 5 with children 4 (subtree {4,1}) and 2: beta(4) = 1 < beta(2) = 2.
  const TreeStats s = stats(T({4, 5, 5, 5, 0}));
  EXPECT_EQ(s.children[5], (std::vector<int>{4, 2, 3}));
  for (int v = 1; v <= 5; ++v) EXPECT_LE(s.beta[static_cast<std::size_t>(v)], v);
}

TEST(ShorChildren, SingleVertex) {
  const auto kids = shor_children(RootedTree::single_vertex());
  ASSERT_EQ(kids.size(), 2u);
  std::set<RootedTree> got(kids.begin(), kids.end());
  EXPECT_TRUE(got.count(T({0, 1})));
  EXPECT_TRUE(got.count(T({2, 0})));
  int k_total = 0;
  for (const auto& t : kids) k_total += stats(t).k;
  EXPECT_EQ(k_total, 1);
}

TEST(ShorChildren, FourCasesOfTheExample) {
  const RootedTree t = four_vertex_example();
  const auto kids = shor_children(t);
  const std::set<RootedTree> got(kids.begin(), kids.end());
  EXPECT_EQ(got.size(), kids.size());
  EXPECT_TRUE(got.count(T({4, 4, 1, 0, 1})));  // 5 a leaf below 1
  EXPECT_TRUE(got.count(T({5, 4, 1, 0, 4})));  // split (4,1)
  EXPECT_TRUE(got.count(T({4, 4, 5, 0, 1})));  // split (1,3)
  EXPECT_TRUE(got.count(T({5, 4, 1, 5, 0})));  // 5 replaces 4, 2 stays under 4
  // D(A^6 S^4) has 4 + 6 terms once the exponent weights are counted.
  EXPECT_EQ(kids.size(), 4u + 4u + 2u);
}

TEST(ShorChildren, CoverR3FromR2) {
  std::vector<RootedTree> r3;
  for (const auto& t : collect_rooted(2, false)) {
    for (const auto& c : shor_children(t)) r3.push_back(c);
  }
  EXPECT_EQ(r3.size(), 9u);
  EXPECT_EQ(std::set<RootedTree>(r3.begin(), r3.end()).size(), 9u);
}

TEST(ShorDelete, Examples) {
  EXPECT_EQ(shor_delete(T({2, 0})), RootedTree::single_vertex());
  EXPECT_EQ(shor_delete(T({0, 1, 1})), T({0, 1}));
  EXPECT_EQ(shor_delete(T({5, 4, 1, 5, 0})), four_vertex_example());
  EXPECT_THROW(shor_delete(RootedTree::single_vertex()), Error);
}

TEST(ShorDelete, RoundTripOverR4) {
  for (const auto& t : collect_rooted(4, false)) {
    for (const auto& c : shor_children(t)) EXPECT_EQ(shor_delete(c), t);
  }
}

TEST(Weight, Examples) {
  EXPECT_EQ(weight(four_vertex_example(), WeightScheme::G), Monomial(std::vector<int>{6, 4}));
  EXPECT_EQ(weight(six_vertex_example(), WeightScheme::H), Monomial(std::vector<int>{1, 2, 7, 3}));
  EXPECT_THROW(weight(four_vertex_example(), WeightScheme::H), SchemeMismatch);
  EXPECT_THROW(weight(six_vertex_example(), WeightScheme::Fr), SchemeMismatch);
}

TEST(Weight, LeafInsertionsMatchSubstitutionRules) {
  // Adding 7 below 1, 2 and 6 multiplies the weight by xy, yw and yw.
  EXPECT_EQ(weight(T({0, 1, 5, 5, 1, 5, 1}), WeightScheme::H), Monomial(std::vector<int>{1, 3, 8, 3}));
  EXPECT_EQ(weight(T({0, 1, 5, 5, 1, 5, 2}), WeightScheme::H), Monomial(std::vector<int>{1, 2, 8, 4}));
  EXPECT_EQ(weight(T({0, 1, 5, 5, 1, 5, 6}), WeightScheme::H), Monomial(std::vector<int>{1, 2, 8, 4}));
}

TEST(Weight, AllBlackColoringMatchesH) {
  for (const auto& t : collect_rooted(5, true)) {
    int seen = 0;
    for_each_coloring(t, 0, [&](const ColoredTree& ct) {
      ++seen;
      EXPECT_EQ(weight(ct, WeightScheme::Fr, 0), weight(t, WeightScheme::H));
    });
    EXPECT_EQ(seen, 1);
  }
}

TEST(Weight, ColoringCount) {
  // Vertex 1 has two children here, so r = 2 gives 3^2 colourings.
  int count = 0;
  int black = 0;
  for_each_coloring(T({0, 1, 1}), 2, [&](const ColoredTree& ct) {
    ++count;
    black += ct.black();
  });
  EXPECT_EQ(count, 9);
  EXPECT_EQ(black, 6);
}

TEST(QOracle, Examples) {
  EXPECT_EQ(q_poly_oracle(3, 1, OracleMode::F), UniPoly::from_ascending({4, 3}));
  EXPECT_EQ(q_poly_oracle(3, 1, OracleMode::R), UniPoly::from_ascending({4, 3}));
  EXPECT_EQ(q_poly_oracle(1, 0, OracleMode::F), UniPoly::constant(1));
  EXPECT_EQ(q_poly_oracle(1, 0, OracleMode::R), UniPoly::constant(1));
  EXPECT_TRUE(q_poly_oracle(3, 3, OracleMode::F).is_zero());
  EXPECT_TRUE(q_poly_oracle(3, -1, OracleMode::R).is_zero());
}

TEST(QOracle, RModeHandEnumeration) {
  // k = 1 trees of R_3 and deg(1): three with deg 1 and one with deg 0.
  UniPoly sum;
  for (const auto& t : collect_rooted(3, false)) {
    const TreeStats s = stats(t);
    if (s.k == 1) sum += pow(UniPoly::linear(1), static_cast<unsigned>(s.deg1));
  }
  EXPECT_EQ(sum, UniPoly::from_ascending({4, 3}));
}

TEST(ForestPowerSum, SmallCases) {
  for (int r = 1; r <= 4; ++r) {
    EXPECT_EQ(forest_power_sum(2, 0, r), Integer(r * r + r));
    EXPECT_EQ(forest_power_sum(2, 1, r), Integer(r));
    EXPECT_EQ(forest_power_sum(1, 0, r), Integer(r));
  }
}

TEST(InternalVertices, CountsForThreeVertexRows) {
  const InternalVertexCounts c = internal_vertex_counts(3);
  EXPECT_EQ(c.second_internal, (std::vector<Integer>{4, 3, 0, 0}));
  EXPECT_EQ(c.last_internal, (std::vector<Integer>{0, 4, 3, 0}));
}

TEST(InternalVertices, SameImproperCountReadingDoesNotHold) {
  // An edge leaving the largest vertex is always improper, so the equality
  // only holds after shifting the improper count by one.
  const InternalVertexCounts c = internal_vertex_counts(3);
  EXPECT_NE(c.second_internal[0], c.last_internal[0]);
}

TEST(LeafOne, HistogramMatchesQAtMinusOne) {
  const QTable q = q_table(5);
  for (int n = 1; n <= 5; ++n) {
    const auto leaf = leaf1_histogram(n);
    for (int k = 0; k <= n - 1; ++k) {
      EXPECT_EQ(leaf[static_cast<std::size_t>(k)], q.at(n, k).evaluate(Integer(-1))) << n << "," << k;
    }
  }
  // One index higher does not match: Q_{1,0}(-1) = 1 while no tree on [2] has leaf 1 and k = 0.
  EXPECT_EQ(q.at(1, 0).evaluate(Integer(-1)), 1);
  EXPECT_EQ(leaf1_histogram(2)[0], 0);
}

TEST(Csv, RowFormat) {
  const RootedTree t = four_vertex_example();
  EXPECT_EQ(csv_row(t, stats(t)), "4,4,4;4;1;0,2,1");
}
