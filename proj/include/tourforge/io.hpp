#pragma once

#include <string>

#include "tourforge/bigraph.hpp"
#include "tourforge/ksum.hpp"
#include "tourforge/matrix.hpp"
#include "tourforge/repr.hpp"

namespace tourforge {

// All writers emit two-space indented JSON with a trailing newline, so
// re-serializing a loaded file reproduces it byte for byte.

std::string matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const std::string& text);
RatMatrix load_matrix(const std::string& path);
void save_matrix(const RatMatrix& m, const std::string& path);

std::string graph_to_json(const BidirectedGraph& g);
BidirectedGraph graph_from_json(const std::string& text);
BidirectedGraph load_graph(const std::string& path);
void save_graph(const BidirectedGraph& g, const std::string& path);

// A representation file stores prime and nonprime edge ids plus a path to
// its graph file, relative to the representation file itself.
TourRepresentation load_rep(const std::string& path);

// Writes the graph to graph_filename next to rep_path and the
// representation file referencing it.
void save_rep(const TourRepresentation& rep, const std::string& rep_path,
              const std::string& graph_filename);

// Decomposition trees nest their nodes in one file; leaf matrices, leaf
// certificate graphs, and rank-two connector matrices may be file
// references relative to the tree file.
DecompositionNodePtr load_tree(const std::string& path);

// Graphviz rendering: end labels +1 draw an arrowhead at their node,
// half-edges run to an invisible point, negative loops are annotated with
// their incidence value. The representation variant draws prime edges
// bold and nonprime edges dashed.
std::string to_dot(const BidirectedGraph& g);
std::string to_dot(const TourRepresentation& rep);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace tourforge
