#pragma once

#include <string>
#include <vector>

#include "tourforge/bigraph.hpp"
#include "tourforge/matrix.hpp"
#include "tourforge/report.hpp"
#include "tourforge/tu.hpp"

namespace tourforge {

// A matrix representation over a bidirected graph: every edge is either
// prime (one per matrix row) or nonprime (one per matrix column). The
// represented matrix B is the unique solution of Q B = S where Q and S
// collect the incidence columns of the prime and nonprime edges.
struct TourRepresentation {
  BidirectedGraph graph;
  std::vector<int> prime;     // edge ids in row order
  std::vector<int> nonprime;  // edge ids in column order
};

// Checks that prime and nonprime are disjoint, duplicate free, reference
// existing edges, and together cover every edge of the graph.
void validate_rep(const TourRepresentation& rep);

// Incidence columns of the prime edges: |nodes| x |prime|.
RatMatrix q_matrix(const TourRepresentation& rep);

// Incidence columns of the nonprime edges: |nodes| x |nonprime|.
RatMatrix s_matrix(const TourRepresentation& rep);

enum class RepKind {
  Network,  // directed graph, primes a spanning forest
  Binet,    // one prime per node with a nonsingular incidence basis
  Tour,     // prime incidence columns of full row rank
  None,
};

std::string rep_kind_name(RepKind k);

RepKind classify_rep(const TourRepresentation& rep);

// Solves Q B = S for B. Requires either a square nonsingular prime basis
// (one prime per node) or a directed graph whose primes form a spanning
// forest; otherwise throws RepresentationError. A singular basis names a
// dependent subset of prime edges in the error message.
RatMatrix compute_matrix(const TourRepresentation& rep);

// Verifies that the representation is a tour representation of b:
//  - every entry of b lies in {0, +1, -1},
//  - Q b = S exactly,
//  - the prime incidence columns have full row rank.
// Dimension mismatches throw ShapeError; mathematical failures are
// reported per check with a witness column or entry.
VerificationReport verify_tour(const TourRepresentation& rep,
                               const RatMatrix& b);

struct FundamentalCircuit {
  std::vector<Rational> column;  // coefficients aligned with rep.prime
  std::vector<int> support;      // prime edge ids with nonzero coefficient
  SubgraphClass cls;  // class of the support together with the nonprime edge
};

// Expands a nonprime edge against the prime basis and classifies the
// resulting edge set.
FundamentalCircuit fundamental_circuit(const TourRepresentation& rep,
                                       int nonprime_id);

// Turns one nonprime link of a directed representation into a negative
// loop by inserting a parallel negative link and contracting it. The
// represented matrix is unchanged; the touched component loses one node,
// so its prime basis becomes square.
TourRepresentation network_to_binet_loop(const TourRepresentation& rep,
                                         int nonprime_link_id);

// Applies network_to_binet_loop once per connected component, using the
// first nonprime link inside each component. Throws RepresentationError
// when a component has none.
TourRepresentation network_to_binet_all(const TourRepresentation& rep);

// Builds a two-node tour representation of a totally unimodular matrix
// from the lexicographically first equitable signing of its full row set.
// One-row inputs use a single node, zero-row inputs an empty graph.
TourRepresentation trivial_tour_from_tu(const RatMatrix& b,
                                        int cap = kSigningCapDefault);

}  // namespace tourforge
