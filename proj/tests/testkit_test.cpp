#include "lpcd/testkit.hpp"

#include <gtest/gtest.h>

#include <queue>
#include <random>

#include "lpcd/quality.hpp"
#include "lpcd/rak.hpp"

namespace lpcd::testkit {
namespace {

bool Connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<bool> seen(g.vertex_count());
  std::queue<VertexId> q;
  q.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop();
    for (VertexId v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        q.push(v);
      }
    }
  }
  return reached == g.vertex_count();
}

TEST(GenGraphTest, DisjointCliques) {
  Graph g = gen_graph(disjoint_cliques(2, 3));
  EXPECT_EQ(g.vertex_count(), 6u);
  EXPECT_EQ(g.arc_count(), 2u * 6 + 6);
  EXPECT_TRUE(g.is_symmetric());
  EXPECT_EQ(g.self_loop_count(), 6u);
}

TEST(GenGraphTest, EmptyGnp) {
  Graph g = gen_graph(gnp(0, 0.5, 1));
  EXPECT_EQ(g.vertex_count(), 0u);
  EXPECT_EQ(g.arc_count(), 0u);
}

TEST(GenGraphTest, RingOfCliquesIsConnected) {
  Graph g = gen_graph(ring_of_cliques(4, 5));
  EXPECT_EQ(g.vertex_count(), 20u);
  EXPECT_TRUE(Connected(g));
  // 4 * C(5,2) edges + 4 bridges, both directions, plus loops.
  EXPECT_EQ(g.arc_count(), 2u * (40 + 4) + 20);
}

TEST(GenGraphTest, StarAndPath) {
  Graph s = gen_graph(star(4));
  EXPECT_EQ(s.vertex_count(), 5u);
  EXPECT_EQ(s.degree(0), 5u);
  Graph p = gen_graph(path(5));
  EXPECT_EQ(p.arc_count(), 2u * 4 + 5);
  EXPECT_TRUE(Connected(p));
}

TEST(GenGraphTest, GnpIsDeterministicAndNearExpectedDensity) {
  Graph a = gen_graph(gnp(2000, 0.01, 42));
  Graph b = gen_graph(gnp(2000, 0.01, 42));
  EXPECT_EQ(a, b);
  EXPECT_NE(a, gen_graph(gnp(2000, 0.01, 43)));
  const double edges = (a.arc_count() - 2000) / 2.0;
  const double expected = 0.01 * 2000 * 1999 / 2;
  EXPECT_NEAR(edges, expected, 5 * std::sqrt(expected));
}

TEST(GenGraphTest, GnpExtremes) {
  EXPECT_EQ(gen_graph(gnp(10, 0.0, 1)).arc_count(), 10u);
  EXPECT_EQ(gen_graph(gnp(10, 1.0, 1)).arc_count(), 10u * 9 + 10);
  EXPECT_THROW(gen_graph(gnp(10, 1.5, 1)), ContractViolation);
}

TEST(GenGraphTest, OutputsSatisfyGraphInvariants) {
  std::mt19937 gen(3);
  for (int trial = 0; trial < 30; ++trial) {
    SyntheticGraphSpec spec{static_cast<GraphKind>(trial % 5), 1 + gen() % 6, 1 + gen() % 30,
                            std::uniform_real_distribution<double>(0, 1)(gen), gen()};
    Graph g = gen_graph(spec);
    EXPECT_TRUE(g.is_symmetric());
    EXPECT_EQ(g.self_loop_count(), g.vertex_count());
    EXPECT_EQ(g.offsets().back(), g.arc_count());
    for (VertexId t : g.targets()) EXPECT_LT(t, g.vertex_count());
  }
}

TEST(BruteModularityTest, AgreesWithModularityOnGeneratedCases) {
  std::mt19937 gen(21);
  for (int trial = 0; trial < 100; ++trial) {
    SyntheticGraphSpec spec{static_cast<GraphKind>(trial % 5), 1 + gen() % 5, 1 + gen() % 12,
                            0.3, gen()};
    Graph g = gen_graph(spec);
    CommunityAssignment a{std::vector<VertexId>(g.vertex_count())};
    for (auto& l : a.labels) l = static_cast<VertexId>(gen() % std::max<std::size_t>(1, g.vertex_count()));
    EXPECT_NEAR(brute_modularity(g, a), modularity(g, a), 1e-9);
  }
}

TEST(BruteModularityTest, TrivialPartitions) {
  Graph g = gen_raw_graph(ring_of_cliques(3, 4));
  CommunityAssignment one{std::vector<VertexId>(12, 0)};
  EXPECT_NEAR(brute_modularity(g, one), 0.0, 1e-12);
  CommunityAssignment singletons{{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}};
  double expected = 0.0;
  for (VertexId v = 0; v < 12; ++v) {
    const double s = degree_weight(g, v) / g.total_weight();
    expected -= s * s;
  }
  EXPECT_NEAR(brute_modularity(g, singletons), expected, 1e-12);
}

TEST(BruteModularityTest, SizeGuard) {
  Graph g = gen_graph(path(257));
  CommunityAssignment a{std::vector<VertexId>(257, 0)};
  EXPECT_THROW(brute_modularity(g, a), ContractViolation);
}

TEST(RingOfCliquesTest, RakNeverFormsAMonsterCommunity) {
  Graph g = gen_graph(ring_of_cliques(10, 5));
  for (bool strict : {true, false}) {
    for (std::uint32_t seed = 1; seed <= 5; ++seed) {
      DetectionResult r = rak_detect(g, {.strict = strict, .seed = seed});
      EXPECT_GT(r.assignment.community_count(), 1u);
    }
  }
}

TEST(SamePartitionTest, DetectsRelabelingAndSplits) {
  EXPECT_TRUE(same_partition(CommunityAssignment{{0, 0, 1}}, CommunityAssignment{{5, 5, 2}}));
  EXPECT_FALSE(same_partition(CommunityAssignment{{0, 0, 1}}, CommunityAssignment{{5, 5, 5}}));
  EXPECT_FALSE(same_partition(CommunityAssignment{{0, 0, 0}}, CommunityAssignment{{5, 5, 2}}));
}

}  // namespace
}  // namespace lpcd::testkit
