#pragma once

#include <string>
#include <vector>

#include "tourforge/matrix.hpp"

namespace tourforge {

// One signed attachment of an edge to a node. label +1 draws an arrowhead
// into the node, -1 a plain tail out of it.
struct EndAttachment {
  int node = -1;
  int label = 1;  // +1 or -1
  bool operator==(const EndAttachment&) const = default;
};

enum class EdgeKind { Link, Loop, HalfEdge, LooseEdge };

// An edge with 0, 1 or 2 end attachments. The kind and the sign are derived
// from the ends, never stored:
//   0 ends  = loose edge (positive),
//   1 end   = half-edge (negative),
//   2 ends  = link (distinct nodes) or loop (same node); opposite labels
//             make the edge positive, equal labels negative.
struct Edge {
  int id = -1;
  std::vector<EndAttachment> ends;

  EdgeKind kind() const;
  bool is_positive() const;
  bool is_link() const { return kind() == EdgeKind::Link; }
  bool is_loop() const { return kind() == EdgeKind::Loop; }
  bool is_half_edge() const { return kind() == EdgeKind::HalfEdge; }
  bool is_loose() const { return kind() == EdgeKind::LooseEdge; }
  bool touches(int node) const;
  bool operator==(const Edge&) const = default;
};

std::string edge_kind_name(EdgeKind k);

// Bidirected graph with explicit, stable node and edge orders; the orders
// index incidence-matrix rows and columns.
class BidirectedGraph {
 public:
  const std::vector<int>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<Edge>& edges_mut() { return edges_; }

  bool has_node(int v) const;
  bool has_edge(int id) const;
  const Edge& edge(int id) const;
  Edge& edge_mut(int id);
  int node_position(int v) const;
  int edge_position(int id) const;

  void add_node(int v);
  void add_edge(Edge e);
  void remove_edge(int id);

  int fresh_node_id() const;
  int fresh_edge_id() const;

  // Incidence column of one edge over the graph's node order: +-1 per
  // link/half-edge end, +-2 for a negative loop, zeros for positive loops
  // and loose edges.
  std::vector<Rational> incidence_column(int edge_id) const;

  bool operator==(const BidirectedGraph&) const = default;

 private:
  std::vector<int> nodes_;
  std::vector<Edge> edges_;
};

// |V| x |E| incidence matrix over the graph's node and edge orders.
RatMatrix incidence_matrix(const BidirectedGraph& g);

// Inverse of a single incidence column: builds the unique edge whose column
// over node_ids equals col. Zero column convention: loose edge. Throws
// ParseError for columns no edge can produce.
Edge column_to_edge(const std::vector<Rational>& col,
                    const std::vector<int>& node_ids, int edge_id);

// Negates every end label at v; the incidence row of v flips sign and the
// represented matrix of any representation on g is unchanged.
BidirectedGraph switch_node(const BidirectedGraph& g, int v);

BidirectedGraph delete_edge(const BidirectedGraph& g, int edge_id);

// Removes v and every end attached to it: incident links become half-edges
// at their other end, incident loops and half-edges become loose edges.
BidirectedGraph delete_node(const BidirectedGraph& g, int v);

// Identifies `gone` with `keep`: ends move over, `gone` leaves the node
// order, `keep` stays at its position.
BidirectedGraph merge_nodes(const BidirectedGraph& g, int keep, int gone);

// Contraction: positive link = merge end-nodes (smaller id kept) and drop
// the edge; negative link = switch at the smaller end-node first; positive
// loop = drop the edge; negative loop / half-edge = delete the node.
// Loose edges are rejected.
BidirectedGraph contract_edge(const BidirectedGraph& g, int edge_id);

enum class SubgraphClass { PositiveCycle, HandcuffI, HandcuffII, Other };

std::string subgraph_class_name(SubgraphClass c);

// Classifies an edge subset against the minimal-dependent-set taxonomy:
// a positive cycle; two negative cycles sharing exactly one node
// (handcuff I); two node-disjoint negative cycles joined by a path
// (handcuff II). A negative loop or half-edge counts as a unit negative
// cycle. Everything else is Other. Degenerate positive cycles: a single
// positive loop, and a single loose edge (zero incidence column).
SubgraphClass classify_subgraph(const BidirectedGraph& g,
                                const std::vector<int>& edge_ids);

// True iff the incidence columns of the edge set are linearly independent
// and the set covers its touched nodes exactly (|edges| = |touched nodes|),
// i.e. every component spans a negative 1-tree. Computed both algebraically
// (rational rank) and structurally; the two routes must agree.
bool is_valid_basis(const BidirectedGraph& g, const std::vector<int>& edge_ids);

// Groups of node ids connected through links (loops/half-edges keep a node
// in its group but connect nothing). Order follows the node order.
std::vector<std::vector<int>> connected_components(const BidirectedGraph& g);

}  // namespace tourforge
