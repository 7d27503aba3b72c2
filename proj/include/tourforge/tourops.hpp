#pragma once

#include <vector>

#include "tourforge/matrix.hpp"
#include "tourforge/repr.hpp"

namespace tourforge {

// A tour representation together with the matrix it represents. Every
// operation below preserves the invariant that verify_tour(rep, matrix)
// passes when it passed on the input.
struct TourPair {
  TourRepresentation rep;
  RatMatrix matrix;
};

// Negates matrix row i by flipping the end labels of the i-th prime edge.
TourPair negate_row(const TourPair& p, int i);

// Negates matrix column j by flipping the end labels of the j-th nonprime
// edge.
TourPair negate_col(const TourPair& p, int j);

// Appends a copy of column j: a parallel copy of the j-th nonprime edge
// becomes the new last nonprime.
TourPair duplicate_col(const TourPair& p, int j);

// Appends a copy of row i. The surgery depends on the kind of the i-th
// prime edge (negative loop, link, half-edge, or positive loop); loose
// primes are not supported. Link and loop cases introduce a fresh node.
TourPair duplicate_row(const TourPair& p, int i);

// Removes column j and its nonprime edge.
TourPair delete_col(const TourPair& p, int j);

// Removes row i. Positive loops are deleted, links contracted, negative
// loops and half-edges remove their node; edges losing all ends become
// positive loops or loose edges with unchanged (zero) incidence columns.
TourPair delete_row(const TourPair& p, int i);

// Pivots on entry (i, j), which must be +1 or -1: the i-th prime and the
// j-th nonprime edge swap roles and the matrix is replaced by its pivot.
TourPair pivot_rep(const TourPair& p, int i, int j);

// Reorders rows so that new row k is old row perm[k].
TourPair permute_rows(const TourPair& p, const std::vector<int>& perm);

// Reorders columns so that new column k is old column perm[k].
TourPair permute_cols(const TourPair& p, const std::vector<int>& perm);

}  // namespace tourforge
