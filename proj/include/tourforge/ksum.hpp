#pragma once

#include <memory>
#include <optional>
#include <string>

#include "tourforge/matrix.hpp"
#include "tourforge/tourops.hpp"

namespace tourforge {

// Block-diagonal sum: [[A, 0], [0, B]].
RatMatrix matrix_1sum(const RatMatrix& a, const RatMatrix& b);

// Left operand [A a] (connector column last), right operand [b; B]
// (connector row first); the sum is [[A, a b], [0, B]].
RatMatrix matrix_2sum(const RatMatrix& left, const RatMatrix& right);

// Left operand [A a a; c 0 1], right operand [1 0 b; d d B]; the sum is
// [[A, a b], [d c, B]]. Throws OperandError when the operands do not have
// the required connector layout.
RatMatrix matrix_3sum(const RatMatrix& left, const RatMatrix& right);

// Rank-two variant. Left operand [A 0; b 1; c 1], right operand
// [1 1 0; a d B]; the sum is [[A, 0], [D, B]] with
// D = [a d] dbar^{-1} [b; c] for the explicitly supplied 2x2 connector
// matrix dbar, which must be nonsingular.
RatMatrix matrix_3sum_alt(const RatMatrix& left, const RatMatrix& right,
                          const RatMatrix& dbar);

// Rewrites the three connector edges of a representation as links so the
// glue step can identify them with the other side. Requires the incidence
// identity col(x1) = col(x2) + col(x3) with x3 prime and x1, x2 nonprime;
// the half-edge and double-loop configurations additionally require the
// matrix row of x3 to read 1 under x1 and 0 under x2, which the k-sum
// connector layout guarantees. Beyond the all-link case it supports three
// configurations, each appending helper prime rows at the bottom of the
// matrix:
//  - x1 negative loop, x2 negative link, x3 positive link,
//  - x1 and x3 half-edges, x2 positive link,
//  - x1 and x2 negative loops at one node, x3 positive loop.
// Anything else throws ClassifyError.
TourPair normalize_connecting(const TourPair& p, int x1, int x2, int x3);

// Graph-level composition along a 3-sum. The matrices must carry the
// matrix_3sum connector layout; the connector edges are read off the last
// two columns and last row on the left and the first two columns and first
// row on the right. The result represents matrix_3sum(left, right).
TourPair compose_3sum_graphs(const TourPair& left, const TourPair& right);

// Graph-level composition along a 2-sum, reduced to the 3-sum case by
// padding: the left side gains a duplicated connector column and a
// positive-loop prime row, the right side a parallel copy of its first
// prime edge and a loose edge. All padding lands in connector positions,
// so no cleanup is needed afterwards.
TourPair compose_2sum_graphs(const TourPair& left, const TourPair& right);

// Disjoint union; right node and edge ids are remapped to fresh values.
TourPair compose_1sum_graphs(const TourPair& left, const TourPair& right);

struct DecompositionNode;
using DecompositionNodePtr = std::shared_ptr<DecompositionNode>;

// A leaf carries a matrix plus a certificate representation; an internal
// node carries an operation ("1sum", "2sum", "3sum", "3sum-alt") and two
// children. "3sum-alt" nodes also carry the 2x2 connector matrix dbar.
struct DecompositionNode {
  std::string op;
  std::optional<RatMatrix> dbar;
  DecompositionNodePtr left, right;

  std::optional<RatMatrix> matrix;
  std::string certificate_kind;  // network | binet | tour | transpose-network
  std::optional<TourRepresentation> certificate;

  bool is_leaf() const { return matrix.has_value(); }
};

// Checks the composition conditions of one internal node: core blocks of
// both operands must have both dimensions greater than k, and the binary
// ranks of the two rank-one (or rank-two) connector blocks must sum to
// k - 1. Violations throw OperandError mentioning `where`.
void validate_ksum_node(const std::string& op, const RatMatrix& left,
                        const RatMatrix& right,
                        const std::optional<RatMatrix>& dbar,
                        const std::string& where);

// Recursively composes a decomposition tree: validates every leaf
// certificate against its matrix, every internal node against the
// composition conditions, builds the glued representation bottom-up, and
// finally converts a directed root into a loop-based one so the result
// passes verify_tour.
TourPair compose_tree(const DecompositionNode& root);

}  // namespace tourforge
