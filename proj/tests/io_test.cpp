// Serialization tests: JSON matrix/graph/representation/tree files, byte
// stability against the shipped fixtures, and Graphviz rendering.

#include <gtest/gtest.h>

#include <filesystem>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "tourforge/errors.hpp"
#include "tourforge/io.hpp"
#include "tourforge/ksum.hpp"
#include "tourforge/repr.hpp"

namespace {

namespace fs = std::filesystem;
using namespace tourforge;
using tftest::golden_b1;
using tftest::golden_b2;
using tftest::golden_m;

constexpr auto npos = std::string::npos;

std::string fixture(const std::string& name) {
  return std::string(TF_FIXTURE_DIR) + "/" + name;
}

fs::path fresh_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("tourforge_io_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

BidirectedGraph triangle_graph() {
  BidirectedGraph g;
  for (int v : {1, 2, 3}) g.add_node(v);
  g.add_edge(Edge{0, {{1, -1}, {2, 1}}});
  g.add_edge(Edge{1, {{2, -1}, {3, 1}}});
  g.add_edge(Edge{2, {{1, -1}, {3, 1}}});
  return g;
}

TourRepresentation triangle_rep() {
  TourRepresentation rep;
  rep.graph = triangle_graph();
  rep.prime = {0, 1};
  rep.nonprime = {2};
  return rep;
}

// ---------------------------------------------------------------------------
// Shipped fixtures.

TEST(Fixtures, MatrixFilesRoundTripByteForByte) {
  std::string b1_text = read_file(fixture("b1.json"));
  RatMatrix b1 = matrix_from_json(b1_text);
  EXPECT_EQ(b1, golden_b1());
  EXPECT_EQ(matrix_to_json(b1), b1_text);

  std::string m_text = read_file(fixture("m.json"));
  RatMatrix m = matrix_from_json(m_text);
  EXPECT_EQ(m, golden_m());
  EXPECT_EQ(matrix_to_json(m), m_text);
}

TEST(Fixtures, RepresentationFilesResolveTheirGraphs) {
  TourRepresentation rep = load_rep(fixture("triangle_rep.json"));
  EXPECT_EQ(rep.prime, (std::vector<int>{0, 1}));
  EXPECT_EQ(rep.nonprime, (std::vector<int>{2}));
  EXPECT_TRUE(rep.graph == triangle_graph());
  EXPECT_EQ(compute_matrix(rep), (RatMatrix{{1}, {1}}));
  EXPECT_EQ(graph_to_json(rep.graph), read_file(fixture("triangle_graph.json")));
}

TEST(Fixtures, StoredTourVerifiesAgainstItsMatrix) {
  TourRepresentation rep = load_rep(fixture("b2_tour.json"));
  EXPECT_TRUE(verify_tour(rep, golden_b2()).pass());
}

TEST(Fixtures, TheShippedTreeComposesTheGoldenMatrix) {
  DecompositionNodePtr tree = load_tree(fixture("tree_2sum.json"));
  ASSERT_TRUE(tree);
  ASSERT_FALSE(tree->is_leaf());
  EXPECT_EQ(tree->op, "2sum");
  ASSERT_TRUE(tree->left && tree->right);
  ASSERT_TRUE(tree->left->is_leaf());
  EXPECT_EQ(tree->left->certificate_kind, "tour");
  EXPECT_EQ(*tree->left->matrix, golden_b1());
  EXPECT_EQ(*tree->right->matrix, golden_b2());

  TourPair out = compose_tree(*tree);
  EXPECT_EQ(out.matrix, golden_m());
  EXPECT_TRUE(verify_tour(out.rep, out.matrix).pass());
}

// ---------------------------------------------------------------------------
// Matrix JSON.

TEST(MatrixJson, IntegersStayNumbersFractionsBecomeStrings) {
  RatMatrix m(1, 2);
  m.at(0, 0) = Rational(1, 2);
  m.at(0, 1) = Rational(-3);
  std::string text = matrix_to_json(m);
  EXPECT_NE(text.find("\"1/2\""), npos) << text;
  EXPECT_NE(text.find("-3"), npos) << text;
  EXPECT_EQ(text.find("\"-3\""), npos) << text;
  EXPECT_EQ(matrix_from_json(text), m);
}

TEST(MatrixJson, HugeValuesSurviveAsStrings) {
  RatMatrix m(1, 1);
  m.at(0, 0) = Rational(Integer("123456789012345678901234567890"));
  std::string text = matrix_to_json(m);
  EXPECT_NE(text.find("\"123456789012345678901234567890\""), npos) << text;
  EXPECT_EQ(matrix_from_json(text), m);
}

TEST(MatrixJson, EmptyShapesKeepTheirColumnCount) {
  RatMatrix empty(0, 3);
  RatMatrix back = matrix_from_json(matrix_to_json(empty));
  EXPECT_EQ(back.rows(), 0);
  EXPECT_EQ(back.cols(), 3);
}

TEST(MatrixJson, RejectsMalformedInput) {
  EXPECT_THROW(matrix_from_json("{nope"), ParseError);
  EXPECT_THROW(matrix_from_json("{}"), ParseError);
  EXPECT_THROW(matrix_from_json("[1, 2]"), ParseError);
  EXPECT_THROW(
      matrix_from_json(R"({"rows": 2, "cols": 1, "entries": [[1]]})"),
      ParseError);
  EXPECT_THROW(
      matrix_from_json(R"({"rows": 1, "cols": 2, "entries": [[1]]})"),
      ParseError);
  EXPECT_THROW(
      matrix_from_json(R"({"rows": 1, "cols": 1, "entries": [[true]]})"),
      ParseError);
  EXPECT_THROW(
      matrix_from_json(R"({"rows": -1, "cols": 1, "entries": []})"),
      ParseError);
  EXPECT_THROW(
      matrix_from_json(R"({"rows": 1, "cols": 1, "entries": [["x"]]})"),
      ParseError);
}

// ---------------------------------------------------------------------------
// Graph JSON.

TEST(GraphJson, RoundTripsAllEdgeKinds) {
  BidirectedGraph g;
  for (int v : {3, 1}) g.add_node(v);
  g.add_edge(Edge{0, {{1, 1}, {3, 1}}});    // negative link
  g.add_edge(Edge{2, {{1, 1}, {1, 1}}});    // negative loop
  g.add_edge(Edge{4, {{3, 1}, {3, -1}}});   // positive loop
  g.add_edge(Edge{5, {{1, -1}}});           // half-edge
  g.add_edge(Edge{7, {}});                  // loose edge
  std::string text = graph_to_json(g);
  BidirectedGraph back = graph_from_json(text);
  EXPECT_TRUE(back == g);
  EXPECT_EQ(graph_to_json(back), text);
}

TEST(GraphJson, RejectsMalformedInput) {
  EXPECT_THROW(graph_from_json("{nope"), ParseError);
  EXPECT_THROW(graph_from_json("[]"), ParseError);
  EXPECT_THROW(graph_from_json(R"({"nodes": [1]})"), ParseError);
  // Structural problems surface as graph-construction errors.
  EXPECT_THROW(graph_from_json(R"({"nodes": [1], "edges": [
      {"id": 0, "ends": [{"node": 2, "label": 1}]}]})"),
               LookupError);
  EXPECT_THROW(graph_from_json(R"({"nodes": [1], "edges": [
      {"id": 0, "ends": [{"node": 1, "label": 2}]}]})"),
               StructureError);
  EXPECT_THROW(graph_from_json(R"({"nodes": [1], "edges": [
      {"id": 0, "ends": []}, {"id": 0, "ends": []}]})"),
               StructureError);
}

// ---------------------------------------------------------------------------
// Files and relative references.

TEST(Files, MatrixSaveLoadRoundTrip) {
  fs::path dir = fresh_dir("matrix");
  std::string path = (dir / "m.json").string();
  save_matrix(golden_b2(), path);
  EXPECT_EQ(load_matrix(path), golden_b2());
}

TEST(Files, RepSaveWritesTheGraphNextToIt) {
  fs::path dir = fresh_dir("rep");
  fs::create_directories(dir / "sub");
  TourRepresentation rep = triangle_rep();
  std::string rep_path = (dir / "sub" / "rep.json").string();
  save_rep(rep, rep_path, "g.json");
  EXPECT_TRUE(fs::exists(dir / "sub" / "g.json"));
  TourRepresentation back = load_rep(rep_path);
  EXPECT_TRUE(back.graph == rep.graph);
  EXPECT_EQ(back.prime, rep.prime);
  EXPECT_EQ(back.nonprime, rep.nonprime);
}

TEST(Files, MissingOrBrokenFilesAreParseErrorsNamingThePath) {
  fs::path dir = fresh_dir("broken");
  std::string missing = (dir / "missing.json").string();
  EXPECT_THROW(load_matrix(missing), ParseError);

  std::string bad = (dir / "bad.json").string();
  write_file(bad, "{nope");
  try {
    load_matrix(bad);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("bad.json"), npos) << msg;
    EXPECT_NE(msg.find("invalid JSON"), npos) << msg;
  }
}

TEST(Files, RepValidationStillApplies) {
  fs::path dir = fresh_dir("repcheck");
  save_graph(triangle_graph(), (dir / "g.json").string());
  write_file((dir / "rep.json").string(),
             R"({"graph": "g.json", "prime": [999], "nonprime": [2]})");
  EXPECT_THROW(load_rep((dir / "rep.json").string()), LookupError);
}

// ---------------------------------------------------------------------------
// Decomposition trees.

TEST(Trees, InlineAndReferencedDbarBothLoad) {
  fs::path dir = fresh_dir("tree");
  save_matrix(RatMatrix{{1}, {1}}, (dir / "m1.json").string());
  save_graph(triangle_graph(), (dir / "g1.json").string());
  save_matrix(RatMatrix{{1, 0}, {1, 1}}, (dir / "dbar.json").string());
  std::string leaf =
      R"({"matrix": "m1.json", "certificate": {"kind": "network",
          "graph": "g1.json", "prime": [0, 1], "nonprime": [2]}})";

  write_file((dir / "inline.json").string(),
             R"({"op": "3sum-alt",
                 "connecting": {"dbar":
                     {"rows": 2, "cols": 2, "entries": [[1, 0], [1, 1]]}},
                 "left": )" + leaf + R"(, "right": )" + leaf + "}");
  DecompositionNodePtr t1 = load_tree((dir / "inline.json").string());
  ASSERT_TRUE(t1->dbar.has_value());
  EXPECT_EQ(*t1->dbar, (RatMatrix{{1, 0}, {1, 1}}));
  EXPECT_EQ(t1->left->certificate_kind, "network");
  EXPECT_EQ(*t1->left->matrix, (RatMatrix{{1}, {1}}));

  write_file((dir / "ref.json").string(),
             R"({"op": "3sum-alt", "connecting": {"dbar": "dbar.json"},
                 "left": )" + leaf + R"(, "right": )" + leaf + "}");
  DecompositionNodePtr t2 = load_tree((dir / "ref.json").string());
  ASSERT_TRUE(t2->dbar.has_value());
  EXPECT_EQ(*t2->dbar, *t1->dbar);
}

TEST(Trees, MalformedNodesAreParseErrors) {
  fs::path dir = fresh_dir("badtree");
  save_matrix(RatMatrix{{1}, {1}}, (dir / "m1.json").string());
  save_graph(triangle_graph(), (dir / "g1.json").string());

  write_file((dir / "nocert.json").string(), R"({"matrix": "m1.json"})");
  EXPECT_THROW(load_tree((dir / "nocert.json").string()), ParseError);

  write_file((dir / "nochild.json").string(), R"({"op": "2sum"})");
  EXPECT_THROW(load_tree((dir / "nochild.json").string()), ParseError);

  write_file((dir / "badrep.json").string(),
             R"({"matrix": "m1.json", "certificate": {"kind": "network",
                 "graph": "g1.json"}})");
  EXPECT_THROW(load_tree((dir / "badrep.json").string()), ParseError);
}

// ---------------------------------------------------------------------------
// Graphviz rendering.

TEST(Dot, TriangleGraphRendersExactly) {
  std::string expected =
      "digraph tour {\n"
      "  node [shape=circle];\n"
      "  n1;\n"
      "  n2;\n"
      "  n3;\n"
      "  n1 -> n2 [dir=both, arrowtail=none, arrowhead=normal, label=\"e0\"];\n"
      "  n2 -> n3 [dir=both, arrowtail=none, arrowhead=normal, label=\"e1\"];\n"
      "  n1 -> n3 [dir=both, arrowtail=none, arrowhead=normal, label=\"e2\"];\n"
      "}\n";
  EXPECT_EQ(to_dot(triangle_graph()), expected);
}

TEST(Dot, RepresentationVariantBoldsTheBasis) {
  std::string dot = to_dot(triangle_rep());
  EXPECT_NE(dot.find("label=\"e0\", style=bold"), npos) << dot;
  EXPECT_NE(dot.find("label=\"e1\", style=bold"), npos) << dot;
  EXPECT_NE(dot.find("label=\"e2\", style=dashed"), npos) << dot;
}

TEST(Dot, AnnotatesLoopsHalfEdgesAndLooseEdges) {
  BidirectedGraph g;
  g.add_node(1);
  g.add_edge(Edge{0, {{1, 1}, {1, 1}}});    // negative loop, incidence +2
  g.add_edge(Edge{1, {{1, -1}, {1, -1}}});  // negative loop, incidence -2
  g.add_edge(Edge{2, {{1, 1}, {1, -1}}});   // positive loop
  g.add_edge(Edge{3, {{1, -1}}});           // half-edge
  g.add_edge(Edge{4, {}});                  // loose edge
  std::string dot = to_dot(g);
  EXPECT_NE(dot.find("label=\"e0 (+2)\""), npos) << dot;
  EXPECT_NE(dot.find("label=\"e1 (-2)\""), npos) << dot;
  EXPECT_EQ(dot.find("e2 ("), npos) << dot;
  EXPECT_NE(dot.find("h3 [shape=point, style=invis];"), npos) << dot;
  EXPECT_NE(dot.find("n1 -> h3 [dir=both, arrowtail=none, arrowhead=none"),
            npos)
      << dot;
  EXPECT_NE(dot.find("h4a -> h4b [dir=none"), npos) << dot;
  // Rendering is deterministic.
  EXPECT_EQ(to_dot(g), dot);
}

}  // namespace
