// Regenerates the files under fixtures/ from the library itself, so the
// shipped fixtures stay byte-identical with what the serializer emits.
// Usage: gen_fixtures <fixtures-dir>

#include <iostream>
#include <string>

#include <json.hpp>

#include "tourforge/io.hpp"
#include "tourforge/ksum.hpp"
#include "tourforge/repr.hpp"

using namespace tourforge;
using nlohmann::json;

namespace {

const RatMatrix kB1{{0, 0, 1, -1, 1},
                    {1, 0, 0, 1, -1},
                    {-1, 1, 0, 0, 1},
                    {1, -1, 1, 0, 0},
                    {0, 1, -1, 1, 0}};

const RatMatrix kB2{{1, 1, 1, 1, 1},
                    {1, 1, 1, 0, 0},
                    {1, 0, 1, 1, 0},
                    {1, 0, 0, 1, 1},
                    {1, 1, 0, 0, 1}};

// Directed triangle on nodes 1,2,3: tree edges 0 = 1->2, 1 = 2->3 and
// chord 2 = 1->3, tail label -1 and head label +1.
TourRepresentation triangle_rep() {
  BidirectedGraph g;
  for (int v : {1, 2, 3}) g.add_node(v);
  g.add_edge(Edge{0, {{1, -1}, {2, 1}}});
  g.add_edge(Edge{1, {{2, -1}, {3, 1}}});
  g.add_edge(Edge{2, {{1, -1}, {3, 1}}});
  return TourRepresentation{g, {0, 1}, {2}};
}

json leaf_json(const std::string& matrix_file, const TourRepresentation& cert,
               const std::string& graph_file) {
  json c{{"kind", "tour"},
         {"graph", graph_file},
         {"prime", cert.prime},
         {"nonprime", cert.nonprime}};
  return json{{"matrix", matrix_file}, {"certificate", c}};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_fixtures <fixtures-dir>\n";
    return 2;
  }
  std::string dir = argv[1];
  auto path = [&](const std::string& name) { return dir + "/" + name; };

  save_matrix(kB1, path("b1.json"));
  save_matrix(kB2, path("b2.json"));
  save_matrix(matrix_2sum(kB1, kB2), path("m.json"));

  TourRepresentation tri = triangle_rep();
  save_rep(tri, path("triangle_rep.json"), "triangle_graph.json");
  save_matrix(compute_matrix(tri), path("triangle_matrix.json"));

  TourRepresentation b1_tour = trivial_tour_from_tu(kB1);
  TourRepresentation b2_tour = trivial_tour_from_tu(kB2);
  save_rep(b2_tour, path("b2_tour.json"), "b2_tour_graph.json");
  save_graph(b1_tour.graph, path("b1_tour_graph.json"));

  json tree{{"op", "2sum"},
            {"left", leaf_json("b1.json", b1_tour, "b1_tour_graph.json")},
            {"right", leaf_json("b2.json", b2_tour, "b2_tour_graph.json")}};
  write_file(path("tree_2sum.json"), tree.dump(2) + "\n");

  std::cout << "fixtures written to " << dir << '\n';
  return 0;
}
