#include "tourforge/bigraph.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "tourforge/errors.hpp"
#include "tourforge/linalg.hpp"

using namespace tourforge;
using namespace tftest;

namespace {

Edge mk_link(int id, int a, int la, int b, int lb) {
  return Edge{id, {{a, la}, {b, lb}}};
}
Edge mk_arc(int id, int tail, int head) {  // positive link, tail -1, head +1
  return mk_link(id, tail, -1, head, 1);
}
Edge mk_negloop(int id, int v) { return Edge{id, {{v, 1}, {v, 1}}}; }
Edge mk_posloop(int id, int v) { return Edge{id, {{v, 1}, {v, -1}}}; }
Edge mk_half(int id, int v, int l = 1) { return Edge{id, {{v, l}}}; }
Edge mk_loose(int id) { return Edge{id, {}}; }

BidirectedGraph make_graph(const std::vector<int>& nodes,
                           const std::vector<Edge>& edges) {
  BidirectedGraph g;
  for (int v : nodes) g.add_node(v);
  for (const Edge& e : edges) g.add_edge(e);
  return g;
}

std::vector<int> all_edge_ids(const BidirectedGraph& g) {
  std::vector<int> ids;
  for (const auto& e : g.edges()) ids.push_back(e.id);
  return ids;
}

}  // namespace

TEST(Edges, KindAndSignDerivedFromEnds) {
  EXPECT_EQ(mk_loose(0).kind(), EdgeKind::LooseEdge);
  EXPECT_TRUE(mk_loose(0).is_positive());
  EXPECT_EQ(mk_half(0, 1).kind(), EdgeKind::HalfEdge);
  EXPECT_FALSE(mk_half(0, 1).is_positive());
  EXPECT_EQ(mk_negloop(0, 1).kind(), EdgeKind::Loop);
  EXPECT_FALSE(mk_negloop(0, 1).is_positive());
  EXPECT_TRUE(mk_posloop(0, 1).is_positive());
  EXPECT_EQ(mk_link(0, 1, -1, 2, 1).kind(), EdgeKind::Link);
  EXPECT_TRUE(mk_link(0, 1, -1, 2, 1).is_positive());
  EXPECT_FALSE(mk_link(0, 1, 1, 2, 1).is_positive());
  EXPECT_FALSE(mk_link(0, 1, -1, 2, -1).is_positive());

  Edge bad{0, {{1, 1}, {1, 1}, {1, 1}}};
  EXPECT_THROW(bad.kind(), StructureError);
}

TEST(Edges, TouchesChecksBothEnds) {
  Edge e = mk_link(7, 1, -1, 2, 1);
  EXPECT_TRUE(e.touches(1));
  EXPECT_TRUE(e.touches(2));
  EXPECT_FALSE(e.touches(3));
  EXPECT_FALSE(mk_loose(0).touches(1));
}

TEST(GraphBuild, AddValidation) {
  BidirectedGraph g;
  g.add_node(1);
  EXPECT_THROW(g.add_node(1), StructureError);
  EXPECT_THROW(g.add_node(-2), StructureError);
  g.add_edge(mk_half(0, 1));
  EXPECT_THROW(g.add_edge(mk_half(0, 1)), StructureError);   // duplicate id
  EXPECT_THROW(g.add_edge(mk_half(1, 9)), LookupError);      // unknown node
  EXPECT_THROW(g.add_edge(Edge{1, {{1, 2}}}), StructureError);  // bad label
  EXPECT_THROW(g.add_edge(Edge{-1, {{1, 1}}}), StructureError);
  EXPECT_THROW(g.add_edge(Edge{1, {{1, 1}, {1, 1}, {1, 1}}}), StructureError);
  EXPECT_THROW(g.edge(42), LookupError);
  EXPECT_THROW(g.node_position(42), LookupError);
  EXPECT_EQ(g.fresh_node_id(), 2);
  EXPECT_EQ(g.fresh_edge_id(), 1);
}

TEST(Incidence, ColumnsByKind) {
  auto g = make_graph({1, 2, 3}, {mk_link(0, 1, -1, 2, 1), mk_negloop(1, 2),
                                  mk_posloop(2, 3), mk_half(3, 1, -1),
                                  mk_loose(4)});
  RatMatrix expect{{-1, 0, 0, -1, 0}, {1, 2, 0, 0, 0}, {0, 0, 0, 0, 0}};
  EXPECT_EQ(incidence_matrix(g), expect);
  EXPECT_EQ(g.incidence_column(1), rational_vector({0, 2, 0}));
  // Negative loop with both labels -1 gives a -2 entry.
  auto g2 = make_graph({5}, {Edge{0, {{5, -1}, {5, -1}}}});
  EXPECT_EQ(g2.incidence_column(0), rational_vector({-2}));
}

TEST(Incidence, ColumnToEdgeInvertsNonPositiveLoopColumns) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto rep = random_binet_rep(rng, 4, 3);
    const BidirectedGraph& g = rep.graph;
    for (const auto& e : g.edges()) {
      auto col = g.incidence_column(e.id);
      Edge back = column_to_edge(col, g.nodes(), e.id);
      BidirectedGraph probe;
      for (int v : g.nodes()) probe.add_node(v);
      probe.add_edge(back);
      EXPECT_EQ(probe.incidence_column(e.id), col);
      if (e.kind() == EdgeKind::Loop && e.is_positive())
        EXPECT_TRUE(back.is_loose());  // zero column convention
      else
        EXPECT_EQ(back.kind(), e.kind());
    }
  }
}

TEST(Incidence, ColumnToEdgeRejectsImpossibleColumns) {
  std::vector<int> nodes{1, 2, 3};
  EXPECT_THROW(column_to_edge(rational_vector({3, 0, 0}), nodes, 0),
               ParseError);
  EXPECT_THROW(column_to_edge({rat(1, 2), Rational(0), Rational(0)}, nodes, 0),
               ParseError);
  EXPECT_THROW(column_to_edge(rational_vector({1, 1, 1}), nodes, 0),
               ParseError);
  EXPECT_THROW(column_to_edge(rational_vector({2, 1, 0}), nodes, 0),
               ParseError);
  EXPECT_THROW(column_to_edge(rational_vector({1, 0}), nodes, 0), ShapeError);
}

TEST(Switching, NegatesOneIncidenceRowAndIsAnInvolution) {
  std::mt19937 rng(3);
  auto rep = random_binet_rep(rng, 5, 4);
  const BidirectedGraph& g = rep.graph;
  RatMatrix before = incidence_matrix(g);
  for (int v : g.nodes()) {
    BidirectedGraph sw = switch_node(g, v);
    RatMatrix after = incidence_matrix(sw);
    int pos = g.node_position(v);
    for (int i = 0; i < before.rows(); ++i)
      for (int j = 0; j < before.cols(); ++j)
        EXPECT_EQ(after.at(i, j),
                  i == pos ? -before.at(i, j) : before.at(i, j));
    EXPECT_EQ(switch_node(sw, v), g);
  }
  EXPECT_THROW(switch_node(g, 99), LookupError);
}

TEST(NodeDeletion, StripsEndsAtTheNode) {
  auto g = make_graph({1, 2, 3},
                      {mk_arc(0, 1, 2), mk_negloop(1, 2), mk_half(2, 2),
                       mk_arc(3, 2, 3), mk_loose(4)});
  BidirectedGraph out = delete_node(g, 2);
  EXPECT_EQ(out.nodes(), (std::vector<int>{1, 3}));
  EXPECT_EQ(out.edge(0).kind(), EdgeKind::HalfEdge);
  EXPECT_EQ(out.edge(0).ends[0], (EndAttachment{1, -1}));
  EXPECT_TRUE(out.edge(1).is_loose());
  EXPECT_TRUE(out.edge(2).is_loose());
  EXPECT_EQ(out.edge(3).kind(), EdgeKind::HalfEdge);
  EXPECT_EQ(out.edge(3).ends[0], (EndAttachment{3, 1}));
  EXPECT_TRUE(out.edge(4).is_loose());
  EXPECT_THROW(delete_node(g, 9), LookupError);
}

TEST(NodeMerge, MovesEndsOver) {
  auto g = make_graph({1, 2, 3},
                      {mk_arc(0, 1, 2), mk_arc(1, 2, 3), mk_arc(2, 1, 3)});
  BidirectedGraph out = merge_nodes(g, 1, 3);
  EXPECT_EQ(out.nodes(), (std::vector<int>{1, 2}));
  EXPECT_EQ(out.edge(0), mk_arc(0, 1, 2));
  EXPECT_EQ(out.edge(1), mk_link(1, 2, -1, 1, 1));
  // Edge 2 closes into a loop at 1 with its labels intact (positive loop).
  EXPECT_TRUE(out.edge(2).is_loop());
  EXPECT_TRUE(out.edge(2).is_positive());
  EXPECT_THROW(merge_nodes(g, 1, 1), StructureError);
  EXPECT_THROW(merge_nodes(g, 1, 9), LookupError);
}

TEST(Contraction, PositiveLinkMergesItsEndNodes) {
  auto g = make_graph({1, 2, 3},
                      {mk_arc(0, 1, 2), mk_arc(1, 2, 3), mk_arc(2, 1, 3)});
  BidirectedGraph out = contract_edge(g, 2);  // link 1-3, smaller id kept
  EXPECT_EQ(out.nodes(), (std::vector<int>{1, 2}));
  EXPECT_FALSE(out.has_edge(2));
  EXPECT_EQ(out.edge(1), mk_link(1, 2, -1, 1, 1));
}

TEST(Contraction, NegativeLinkSwitchesBeforeMerging) {
  auto g = make_graph({1, 2}, {mk_link(0, 1, 1, 2, 1), mk_half(1, 1, 1)});
  BidirectedGraph out = contract_edge(g, 0);
  EXPECT_EQ(out.nodes(), (std::vector<int>{1}));
  // The switch at node 1 flips the other edge's label there.
  EXPECT_EQ(out.edge(1).ends[0], (EndAttachment{1, -1}));
}

TEST(Contraction, LoopsHalfEdgesAndLooseEdges) {
  auto g = make_graph({1, 2}, {mk_posloop(0, 1), mk_negloop(1, 1),
                               mk_half(2, 1), mk_arc(3, 1, 2), mk_loose(4)});
  BidirectedGraph pos = contract_edge(g, 0);
  EXPECT_EQ(pos.nodes(), (std::vector<int>{1, 2}));
  EXPECT_FALSE(pos.has_edge(0));

  BidirectedGraph neg = contract_edge(g, 1);  // deletes node 1
  EXPECT_EQ(neg.nodes(), (std::vector<int>{2}));
  EXPECT_TRUE(neg.edge(2).is_loose());
  EXPECT_EQ(neg.edge(3).kind(), EdgeKind::HalfEdge);

  BidirectedGraph hf = contract_edge(g, 2);
  EXPECT_EQ(hf.nodes(), (std::vector<int>{2}));

  EXPECT_THROW(contract_edge(g, 4), StructureError);
}

TEST(Classify, SingleEdgeSets) {
  auto g = make_graph({1}, {mk_negloop(0, 1), mk_posloop(1, 1), mk_half(2, 1),
                            mk_loose(3)});
  // A lone negative loop or half-edge is independent, not a dependent set.
  EXPECT_EQ(classify_subgraph(g, {0}), SubgraphClass::Other);
  EXPECT_EQ(classify_subgraph(g, {2}), SubgraphClass::Other);
  // A positive loop and a loose edge are degenerate positive cycles.
  EXPECT_EQ(classify_subgraph(g, {1}), SubgraphClass::PositiveCycle);
  EXPECT_EQ(classify_subgraph(g, {3}), SubgraphClass::PositiveCycle);
  EXPECT_EQ(classify_subgraph(g, {}), SubgraphClass::Other);
  EXPECT_THROW(classify_subgraph(g, {0, 0}), LookupError);
  EXPECT_THROW(classify_subgraph(g, {42}), LookupError);
}

TEST(Classify, CyclesOfLinks) {
  auto tri = make_graph({1, 2, 3},
                        {mk_arc(0, 1, 2), mk_arc(1, 2, 3), mk_arc(2, 3, 1)});
  EXPECT_EQ(classify_subgraph(tri, {0, 1, 2}), SubgraphClass::PositiveCycle);
  EXPECT_EQ(classify_subgraph(tri, {0, 1}), SubgraphClass::Other);  // path

  auto negtri = make_graph(
      {1, 2, 3}, {mk_arc(0, 1, 2), mk_arc(1, 2, 3), mk_link(2, 3, 1, 1, 1)});
  EXPECT_EQ(classify_subgraph(negtri, {0, 1, 2}), SubgraphClass::Other);

  // Two parallel links, both positive: a 2-cycle.
  auto par = make_graph({1, 2}, {mk_arc(0, 1, 2), mk_arc(1, 2, 1)});
  EXPECT_EQ(classify_subgraph(par, {0, 1}), SubgraphClass::PositiveCycle);
}

TEST(Classify, HandcuffsSharingANode) {
  // Two unit negative cycles at the same node.
  auto units = make_graph({1}, {mk_negloop(0, 1), mk_negloop(1, 1)});
  EXPECT_EQ(classify_subgraph(units, {0, 1}), SubgraphClass::HandcuffI);
  auto halves = make_graph({1}, {mk_half(0, 1), mk_half(1, 1, -1)});
  EXPECT_EQ(classify_subgraph(halves, {0, 1}), SubgraphClass::HandcuffI);

  // A negative cycle through the node of a negative loop.
  auto mixed = make_graph({1, 2, 3},
                          {mk_negloop(0, 1), mk_arc(1, 1, 2), mk_arc(2, 2, 3),
                           mk_link(3, 3, 1, 1, 1)});
  EXPECT_EQ(classify_subgraph(mixed, {0, 1, 2, 3}), SubgraphClass::HandcuffI);
  // Same shape but the link cycle is positive: not minimal dependent.
  auto mixed_pos = make_graph(
      {1, 2, 3},
      {mk_negloop(0, 1), mk_arc(1, 1, 2), mk_arc(2, 2, 3), mk_arc(3, 3, 1)});
  EXPECT_EQ(classify_subgraph(mixed_pos, {0, 1, 2, 3}), SubgraphClass::Other);

  // Figure-8: two negative triangles sharing node 3.
  auto fig8 = make_graph(
      {1, 2, 3, 4, 5},
      {mk_arc(0, 1, 2), mk_arc(1, 2, 3), mk_link(2, 3, 1, 1, 1),
       mk_arc(3, 3, 4), mk_arc(4, 4, 5), mk_link(5, 5, 1, 3, 1)});
  EXPECT_EQ(classify_subgraph(fig8, {0, 1, 2, 3, 4, 5}),
            SubgraphClass::HandcuffI);
}

TEST(Classify, HandcuffsJoinedByAPath) {
  // Negative loops at the path endpoints.
  auto pair = make_graph(
      {1, 2, 3}, {mk_negloop(0, 1), mk_arc(1, 1, 2), mk_arc(2, 2, 3),
                  mk_negloop(3, 3)});
  EXPECT_EQ(classify_subgraph(pair, {0, 1, 2, 3}), SubgraphClass::HandcuffII);
  // Without the path the two loops are node-disjoint and unconnected.
  EXPECT_EQ(classify_subgraph(pair, {0, 3}), SubgraphClass::Other);

  // Negative loop, a path, and a negative triangle avoiding the loop node.
  auto loop_tri = make_graph(
      {1, 2, 3, 4, 5},
      {mk_negloop(0, 1), mk_arc(1, 1, 2), mk_arc(2, 2, 3), mk_arc(3, 3, 4),
       mk_arc(4, 4, 5), mk_link(5, 5, 1, 3, 1)});
  EXPECT_EQ(classify_subgraph(loop_tri, {0, 1, 2, 3, 4, 5}),
            SubgraphClass::HandcuffII);

  // Dumbbell: two negative triangles joined by a two-link path.
  auto dumbbell = make_graph(
      {1, 2, 3, 4, 5, 6, 7},
      {mk_arc(0, 1, 2), mk_arc(1, 2, 3), mk_link(2, 3, 1, 1, 1),
       mk_arc(3, 3, 4), mk_arc(4, 4, 5), mk_arc(5, 5, 6), mk_arc(6, 6, 7),
       mk_link(7, 7, 1, 5, 1)});
  EXPECT_EQ(classify_subgraph(dumbbell, {0, 1, 2, 3, 4, 5, 6, 7}),
            SubgraphClass::HandcuffII);
}

TEST(Classify, NonMinimalShapesAreOther) {
  // Theta: three internally disjoint 1-2 paths.
  auto theta = make_graph(
      {1, 2, 3, 4}, {mk_arc(0, 1, 2), mk_arc(1, 1, 3), mk_arc(2, 3, 2),
                     mk_arc(3, 1, 4), mk_arc(4, 4, 2)});
  EXPECT_EQ(classify_subgraph(theta, {0, 1, 2, 3, 4}), SubgraphClass::Other);

  // A positive loop hiding inside a bigger set.
  auto tri = make_graph({1, 2, 3},
                        {mk_arc(0, 1, 2), mk_arc(1, 2, 3), mk_arc(2, 3, 1),
                         mk_posloop(3, 1)});
  EXPECT_EQ(classify_subgraph(tri, {0, 1, 2, 3}), SubgraphClass::Other);

  // Three negative loops at one node.
  auto three = make_graph(
      {1}, {mk_negloop(0, 1), mk_negloop(1, 1), mk_negloop(2, 1)});
  EXPECT_EQ(classify_subgraph(three, {0, 1, 2}), SubgraphClass::Other);
}

TEST(Bases, HandPickedSets) {
  // Star of positive links plus one negative loop at the hub: valid.
  auto star = make_graph({1, 2, 3, 4},
                         {mk_arc(0, 1, 2), mk_arc(1, 1, 3), mk_arc(2, 1, 4),
                          mk_negloop(3, 1), mk_posloop(4, 1)});
  EXPECT_TRUE(is_valid_basis(star, {0, 1, 2, 3}));
  // Tree alone: one column short of covering its nodes.
  EXPECT_FALSE(is_valid_basis(star, {0, 1, 2}));
  // A positive loop contributes a zero column.
  EXPECT_FALSE(is_valid_basis(star, {0, 1, 2, 4}));

  // A negative cycle is a valid basis of its nodes; a positive one is not.
  auto negtri = make_graph(
      {1, 2, 3}, {mk_arc(0, 1, 2), mk_arc(1, 2, 3), mk_link(2, 3, 1, 1, 1)});
  EXPECT_TRUE(is_valid_basis(negtri, {0, 1, 2}));
  auto postri = make_graph(
      {1, 2, 3}, {mk_arc(0, 1, 2), mk_arc(1, 2, 3), mk_arc(2, 3, 1)});
  EXPECT_FALSE(is_valid_basis(postri, {0, 1, 2}));

  // Two components, each a negative 1-tree.
  auto two = make_graph({1, 2, 3}, {mk_arc(0, 1, 2), mk_negloop(1, 1),
                                    mk_negloop(2, 3)});
  EXPECT_TRUE(is_valid_basis(two, {0, 1, 2}));
}

TEST(Bases, TwoUnitsInOneComponentAreDependent) {
  auto g = make_graph({1, 2}, {mk_arc(0, 1, 2), mk_negloop(1, 1),
                               mk_negloop(2, 2)});
  // Three columns on two nodes: never a basis.
  EXPECT_FALSE(is_valid_basis(g, {0, 1, 2}));
  // Two units joined by the link: square but singular? No: columns
  // (2,0) and (0,2) are independent, so {1,2} is a valid basis.
  EXPECT_TRUE(is_valid_basis(g, {1, 2}));
}

TEST(Bases, AgreesWithDeterminantOracleOnRandomSubsets) {
  std::mt19937 rng(20260823);
  for (int trial = 0; trial < 200; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 5)(rng);
    int extra = std::uniform_int_distribution<int>(0, 4)(rng);
    auto rep = random_binet_rep(rng, n, extra);
    const BidirectedGraph& g = rep.graph;
    std::vector<int> subset;
    for (const auto& e : g.edges())
      if (std::uniform_int_distribution<int>(0, 1)(rng))
        subset.push_back(e.id);
    if (subset.empty()) continue;

    // Oracle: as many edges as touched nodes, and the square incidence
    // submatrix on the touched rows has nonzero determinant.
    std::vector<int> touched_rows;
    for (int v : g.nodes()) {
      bool hit = false;
      for (int id : subset)
        if (g.edge(id).touches(v)) hit = true;
      if (hit) touched_rows.push_back(g.node_position(v));
    }
    bool expect_valid = touched_rows.size() == subset.size();
    if (expect_valid) {
      RatMatrix cols(static_cast<int>(touched_rows.size()),
                     static_cast<int>(subset.size()));
      for (std::size_t j = 0; j < subset.size(); ++j) {
        auto c = g.incidence_column(subset[j]);
        for (std::size_t i = 0; i < touched_rows.size(); ++i)
          cols.at(static_cast<int>(i), static_cast<int>(j)) =
              c[touched_rows[i]];
      }
      expect_valid = det_cofactor(cols) != 0;
    }
    EXPECT_EQ(is_valid_basis(g, subset), expect_valid);
  }
}

TEST(Components, LinksConnectLoopsDoNot) {
  auto g = make_graph({0, 1, 2, 3, 4},
                      {mk_arc(0, 0, 1), mk_arc(1, 1, 2), mk_negloop(2, 3),
                       mk_half(3, 4)});
  auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(comps[1], (std::vector<int>{3}));
  EXPECT_EQ(comps[2], (std::vector<int>{4}));
}
