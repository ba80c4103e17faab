#include <gtest/gtest.h>

#include <random>

#include "dkern/digraph.hpp"
#include "dkern/enumeration.hpp"
#include "dkern/errors.hpp"
#include "oracles.hpp"

using namespace dkern;

namespace {

Digraph make(int n, std::vector<Arc> arcs) { return build_digraph(n, arcs); }

std::vector<Digraph> corpus() {
  std::vector<Digraph> out;
  for (int n = 0; n <= 3; ++n)
    for (std::uint64_t i = 0; i < state_count(n, false); ++i) out.push_back(digraph_from_state(n, i, false));
  for (std::uint64_t s = 0; s < 300; ++s) out.push_back(random_digraph(4 + static_cast<int>(s % 5), kUniformPairStates, s));
  return out;
}

}  // namespace

TEST(BuildDigraph, DirectedTriangle) {
  const auto d = make(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(d.order(), 3);
  EXPECT_EQ(d.arc_count(), 3u);
  EXPECT_TRUE(d.arc(0, 1));
  EXPECT_FALSE(d.arc(1, 0));
  EXPECT_EQ(d, directed_cycle(3));
}

TEST(BuildDigraph, SymmetricPair) {
  const auto d = make(2, {{0, 1}, {1, 0}});
  EXPECT_TRUE(d.symmetric(0, 1));
  EXPECT_EQ(d.arc_count(), 2u);
}

TEST(BuildDigraph, DuplicatesCollapse) { EXPECT_EQ(make(2, {{0, 1}, {0, 1}}).arc_count(), 1u); }

TEST(BuildDigraph, RejectsLoop) {
  try {
    make(3, {{0, 0}});
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("loop (0,0)"), std::string::npos);
  }
}

TEST(BuildDigraph, RejectsOutOfRange) {
  EXPECT_THROW(make(3, {{0, 3}}), InvalidArgument);
  EXPECT_THROW(make(3, {{-1, 1}}), InvalidArgument);
}

TEST(BuildDigraph, RejectsOrderAboveCap) {
  EXPECT_THROW(DigraphBuilder(65), CapExceeded);
  EXPECT_NO_THROW(DigraphBuilder(65, kLargeCap));
}

TEST(DeriveView, UnderlyingOfTriangleIsK3) {
  const auto g = std::get<Graph>(derive_view(directed_cycle(3), View::Underlying));
  EXPECT_EQ(g.edge_count(), 3u);
}

TEST(DeriveView, ComplementOfC7OneTwoJoinsDistanceThree) {
  const auto g = std::get<Graph>(derive_view(c7_12(), View::ComplementUnderlying));
  EXPECT_EQ(g.edge_count(), 7u);
  for (int i = 0; i < 7; ++i) {
    EXPECT_TRUE(g.edge(i, (i + 3) % 7));
    EXPECT_TRUE(g.edge(i, (i + 4) % 7));
    EXPECT_EQ(g.degree(i), 2);
  }
}

TEST(DeriveView, AsymmetricPartOfFullCirculantFiveIsHamiltonianCycle) {
  EXPECT_EQ(std::get<Digraph>(derive_view(full_circulant(5), View::AsymmetricPart)), directed_cycle(5));
}

TEST(DeriveView, SymmetricPartAndConverse) {
  const auto d = make(3, {{0, 1}, {1, 0}, {1, 2}});
  EXPECT_EQ(std::get<Digraph>(derive_view(d, View::SymmetricPart)), make(3, {{0, 1}, {1, 0}}));
  EXPECT_EQ(std::get<Digraph>(derive_view(d, View::Converse)), make(3, {{0, 1}, {1, 0}, {2, 1}}));
}

TEST(Induced, PathOfFiveCycle) {
  EXPECT_EQ(induced(directed_cycle(5), VertexSet::of({0, 1, 2})), make(3, {{0, 1}, {1, 2}}));
}

TEST(Induced, FullSetIsIdentity) {
  const auto d = c7_12();
  EXPECT_EQ(induced(d, d.vertices()), d);
}

TEST(Induced, C7OneTwoOnFirstThreeIsTransitiveTriangle) {
  EXPECT_EQ(induced(c7_12(), VertexSet::of({0, 1, 2})), make(3, {{0, 1}, {1, 2}, {0, 2}}));
  EXPECT_EQ(transitive_tournament(3), make(3, {{0, 1}, {0, 2}, {1, 2}}));
}

TEST(Induced, RejectsOutOfRange) { EXPECT_THROW(induced(directed_cycle(3), VertexSet::of({3})), InvalidArgument); }

TEST(Circulant, C7OneTwo) {
  const auto d = c7_12();
  EXPECT_EQ(d.out_mask(0), VertexSet::of({1, 2}).bits());
  // Each vertex has out-degree 2, so 7 * 2 arcs.
  EXPECT_EQ(d.arc_count(), 14u);
}

TEST(Circulant, FullCirculantFour) {
  const auto d = full_circulant(4);
  EXPECT_EQ(d, construct_circulant(CirculantSpec(4, {1, 2})));
  for (int i = 0; i < 4; ++i) {
    EXPECT_TRUE(d.arc(i, (i + 1) % 4));
    EXPECT_FALSE(d.arc((i + 1) % 4, i));
    EXPECT_TRUE(d.symmetric(i, (i + 2) % 4));
  }
}

TEST(Circulant, LemmaCirculantThreeIsC7TwoFour) {
  EXPECT_EQ(lemma_circulant(3), construct_circulant(CirculantSpec(7, {2, 4})));
  EXPECT_EQ(CirculantSpec::from_offsets(7, std::vector<int>{2, -3}), CirculantSpec(7, {2, 4}));
}

TEST(Circulant, FullCirculantIsEveryArcButTheReversedCycleArc) {
  for (int n = 4; n <= 12; ++n) {
    const auto d = full_circulant(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) EXPECT_EQ(d.arc(i, j), (j - i + n) % n != n - 1) << n << " " << i << " " << j;
  }
}

TEST(Circulant, RejectsBadSpecs) {
  EXPECT_THROW(CirculantSpec(1, {1}), InvalidArgument);
  EXPECT_THROW(CirculantSpec(5, {}), InvalidArgument);
  EXPECT_THROW(CirculantSpec(5, {0}), InvalidArgument);
  EXPECT_THROW(CirculantSpec(5, {5}), InvalidArgument);
  EXPECT_THROW(CirculantSpec::from_offsets(5, std::vector<int>{-5}), InvalidArgument);
  EXPECT_THROW(full_circulant(3), InvalidArgument);
}

TEST(CycleShape, Examples) {
  const auto c5 = cycle_shape(directed_cycle(5));
  EXPECT_TRUE(c5.is_odd_cycle());
  EXPECT_EQ(c5.length, 5);
  const auto c4 = cycle_shape(directed_cycle(4));
  EXPECT_TRUE(c4.is_directed_cycle());
  EXPECT_FALSE(c4.is_odd_cycle());
  const auto c7 = cycle_shape(c7_12());
  EXPECT_EQ(c7.violation, CycleShape::Violation::OutDegree);
  EXPECT_EQ(c7.describe(), "out-degree 2 at vertex 0");
}

TEST(CycleShape, DisconnectedAndSymmetric) {
  EXPECT_EQ(cycle_shape(make(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})).violation,
            CycleShape::Violation::Disconnected);
  EXPECT_EQ(cycle_shape(make(2, {{0, 1}, {1, 0}})).violation, CycleShape::Violation::SymmetricPair);
  EXPECT_EQ(cycle_shape(Digraph{}).violation, CycleShape::Violation::Empty);
}

TEST(CycleShape, AgreesWithOracleOnSmallDigraphs) {
  for (int n = 1; n <= 4; ++n)
    for (std::uint64_t i = 0; i < state_count(n, false); ++i) {
      const auto d = digraph_from_state(n, i, false);
      EXPECT_EQ(cycle_shape(d).is_directed_cycle(), n >= 3 && oracle::induces_directed_cycle(d, (1u << n) - 1));
    }
}

TEST(CycleShape, LargeMode) {
  const auto d = construct_circulant(CirculantSpec(5001, {1}));
  EXPECT_TRUE(cycle_shape(d).is_odd_cycle());
}

TEST(Isomorphism, Examples) {
  EXPECT_TRUE(is_isomorphic(lemma_circulant(3), c7_12()));
  EXPECT_FALSE(is_isomorphic(directed_cycle(3), transitive_tournament(3)));
  const auto id = is_isomorphic(c7_12(), c7_12());
  ASSERT_TRUE(id);
  EXPECT_EQ(*id, (std::vector<int>{0, 1, 2, 3, 4, 5, 6}));
}

TEST(Isomorphism, SizeMismatchBeforeCap) {
  EXPECT_FALSE(is_isomorphic(directed_cycle(3), directed_cycle(20)));
  EXPECT_THROW(is_isomorphic(directed_cycle(13), directed_cycle(13)), CapExceeded);
  EXPECT_TRUE(is_isomorphic(directed_cycle(13), directed_cycle(13), 13));
}

TEST(Isomorphism, LexicographicallyLeastMatchesOracle) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const int n = 3 + t % 4;
    const auto a = random_digraph(n, {0.5, 0.2, 0.2, 0.1}, rng());
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto b = t % 3 == 0 ? random_digraph(n, {0.5, 0.2, 0.2, 0.1}, rng()) : relabel(a, perm);
    EXPECT_EQ(is_isomorphic(a, b), oracle::isomorphism(a, b));
  }
}

TEST(ViewProperties, ConverseIsAnInvolution) {
  for (const auto& d : corpus()) EXPECT_EQ(converse(converse(d)), d);
}

TEST(ViewProperties, AsymmetricAndSymmetricPartsPartitionArcs) {
  for (const auto& d : corpus()) {
    const auto a = asymmetric_part(d), s = symmetric_part(d);
    EXPECT_EQ(a.arc_count() + s.arc_count(), d.arc_count());
    for (auto [u, v] : d.arc_list()) EXPECT_NE(a.arc(u, v), s.arc(u, v));
    EXPECT_EQ(converse(s), s);
  }
}

TEST(ViewProperties, UnderlyingIgnoresDirection) {
  for (const auto& d : corpus()) EXPECT_EQ(underlying(d), underlying(converse(d)));
}

TEST(ViewProperties, ConverseOfCirculantNegatesConnectionSet) {
  std::mt19937_64 rng(11);
  for (int m = 2; m <= 10; ++m)
    for (int t = 0; t < 20; ++t) {
      std::vector<int> j;
      for (int r = 1; r < m; ++r)
        if (rng() % 2) j.push_back(r);
      if (j.empty()) j.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(m - 1)));
      const CirculantSpec spec(m, j);
      EXPECT_EQ(converse(construct_circulant(spec)), construct_circulant(spec.negated()));
    }
}

TEST(ViewProperties, CycleCirculantsAreDirectedCycles) {
  for (int m = 3; m <= 12; ++m) {
    const auto s = cycle_shape(construct_circulant(CirculantSpec(m, {1})));
    EXPECT_TRUE(s.is_directed_cycle());
    EXPECT_EQ(s.length, m);
    EXPECT_EQ(s.is_odd_cycle(), m % 2 == 1);
  }
}
