#include "lpcd/graph.hpp"

#include <gtest/gtest.h>

#include <random>

#include "lpcd/testkit.hpp"

namespace lpcd {
namespace {

void ExpectCsrInvariants(const Graph& g) {
  auto off = g.offsets();
  ASSERT_EQ(off.size(), g.vertex_count() + 1);
  EXPECT_EQ(off.front(), 0u);
  EXPECT_EQ(off.back(), g.arc_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) EXPECT_LE(off[v], off[v + 1]);
  for (VertexId t : g.targets()) EXPECT_LT(t, g.vertex_count());
  for (double w : g.weights()) EXPECT_GT(w, 0.0);
}

Graph RandomDirected(std::mt19937& gen, std::size_t n, std::size_t m, bool weighted) {
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
  std::uniform_real_distribution<double> weight(0.5, 4.0);
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < m; ++i) {
    arcs.push_back({pick(gen), pick(gen), weighted ? weight(gen) : 1.0});
  }
  return Graph::from_arcs(n, std::move(arcs));
}

TEST(GraphTest, FromArcsSortsAndMergesDuplicates) {
  Graph g = Graph::from_arcs(3, {{0, 2, 1.0}, {0, 1, 2.0}, {0, 2, 0.5}, {2, 2, 1.0}});
  ExpectCsrInvariants(g);
  EXPECT_EQ(g.arc_count(), 3u);
  ASSERT_EQ(g.neighbors(0).size(), 2u);
  EXPECT_EQ(g.neighbors(0)[0], 1u);
  EXPECT_EQ(g.neighbors(0)[1], 2u);
  EXPECT_DOUBLE_EQ(g.neighbor_weights(0)[1], 1.5);
  // Self-loop counted twice in the normaliser.
  EXPECT_DOUBLE_EQ(g.total_weight(), 2.0 + 1.5 + 2.0);
}

TEST(GraphTest, FromArcsRejectsOutOfRangeEndpoint) {
  EXPECT_THROW(Graph::from_arcs(2, {{0, 2, 1.0}}), ContractViolation);
}

TEST(GraphTest, PreprocessSymmetrisesAndAddsSelfLoops) {
  Graph g = preprocess(Graph::from_arcs(2, {{0, 1, 1.0}}));
  auto arcs = g.arcs();
  ASSERT_EQ(arcs.size(), 4u);
  EXPECT_EQ(arcs[0].source, 0u); EXPECT_EQ(arcs[0].target, 0u);
  EXPECT_EQ(arcs[1].source, 0u); EXPECT_EQ(arcs[1].target, 1u);
  EXPECT_EQ(arcs[2].source, 1u); EXPECT_EQ(arcs[2].target, 0u);
  EXPECT_EQ(arcs[3].source, 1u); EXPECT_EQ(arcs[3].target, 1u);
  EXPECT_TRUE(g.is_symmetric());
}

TEST(GraphTest, PreprocessReplacesExistingSelfLoop) {
  Graph g = preprocess(Graph::from_arcs(2, {{0, 0, 7.0}, {0, 1, 1.0}}),
                       {.unit_weights = false, .self_loops = true});
  EXPECT_EQ(g.neighbors(0)[0], 0u);
  EXPECT_DOUBLE_EQ(g.neighbor_weights(0)[0], 1.0);
  EXPECT_EQ(g.self_loop_count(), 2u);
}

TEST(GraphTest, PreprocessEmptyGraph) {
  Graph g = preprocess(Graph{});
  EXPECT_EQ(g.vertex_count(), 0u);
  EXPECT_EQ(g.arc_count(), 0u);
  EXPECT_EQ(g.total_weight(), 0.0);
}

TEST(GraphTest, PreprocessKeepsIsolatedVertices) {
  Graph g = preprocess(Graph::from_arcs(4, {{0, 1, 1.0}}));
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.degree(3), 1u);
}

TEST(GraphTest, PreprocessUnitWeightsFlag) {
  Graph raw = Graph::from_arcs(2, {{0, 1, 3.0}, {1, 0, 5.0}});
  EXPECT_DOUBLE_EQ(preprocess(raw).neighbor_weights(0)[1], 1.0);
  Graph kept = preprocess(raw, {.unit_weights = false});
  EXPECT_DOUBLE_EQ(kept.neighbor_weights(0)[1], 5.0);
  EXPECT_DOUBLE_EQ(kept.neighbor_weights(1)[0], 5.0);
}

TEST(GraphTest, PreprocessWithoutSelfLoopsKeepsGraphLoopFree) {
  Graph g = preprocess(Graph::from_arcs(3, {{0, 1, 1.0}, {1, 2, 1.0}}), {.self_loops = false});
  EXPECT_EQ(g.self_loop_count(), 0u);
  EXPECT_EQ(g.arc_count(), 4u);
}

TEST(GraphTest, DegreeWeightExamples) {
  // Triangle with unit self-loops: two neighbors + loop counted twice.
  Graph tri = testkit::gen_graph(testkit::disjoint_cliques(1, 3));
  for (VertexId v = 0; v < 3; ++v) EXPECT_DOUBLE_EQ(degree_weight(tri, v), 4.0);

  Graph loop_only = preprocess(Graph::from_arcs(1, {}));
  EXPECT_DOUBLE_EQ(degree_weight(loop_only, 0), 2.0);

  Graph bare = Graph::from_arcs(1, {});
  EXPECT_DOUBLE_EQ(degree_weight(bare, 0), 0.0);
  EXPECT_THROW(degree_weight(bare, 1), ContractViolation);
}

TEST(GraphTest, PreprocessPropertiesOnRandomGraphs) {
  std::mt19937 gen(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 20;
    Graph raw = RandomDirected(gen, n, 3 * n, trial % 2 == 0);
    for (bool unit : {true, false}) {
      Graph once = preprocess(raw, {.unit_weights = unit});
      Graph twice = preprocess(once, {.unit_weights = unit});
      ExpectCsrInvariants(once);
      EXPECT_EQ(once, twice) << "preprocess must be idempotent";
      EXPECT_TRUE(once.is_symmetric());
      EXPECT_EQ(once.self_loop_count(), n);

      // Degrees count loops twice; so does the normaliser.
      double degree_sum = 0.0, arc_sum = 0.0, loop_sum = 0.0;
      for (VertexId v = 0; v < n; ++v) degree_sum += degree_weight(once, v);
      for (const Arc& a : once.arcs()) {
        arc_sum += a.weight;
        if (a.source == a.target) loop_sum += a.weight;
      }
      EXPECT_NEAR(degree_sum, arc_sum + loop_sum, 1e-9);
      EXPECT_NEAR(once.total_weight(), arc_sum + loop_sum, 1e-9);
    }
  }
}

TEST(GraphTest, CommunityCount) {
  CommunityAssignment a{{0, 0, 2, 2, 4}};
  EXPECT_EQ(a.community_count(), 3u);
}

}  // namespace
}  // namespace lpcd
