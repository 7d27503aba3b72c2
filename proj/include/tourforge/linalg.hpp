#pragma once

#include <optional>
#include <vector>

#include "tourforge/matrix.hpp"

namespace tourforge {

// Exact determinant (rational Gaussian elimination with an integer
// fraction-free fast path). Throws ShapeError on non-square input.
Rational det(const RatMatrix& m);

// Rank over the rationals.
int rank_q(const RatMatrix& m);

// Rank of the entries reduced mod 2. Throws Error on non-integral entries.
int rank_gf2(const RatMatrix& m);

// Exact inverse; throws SingularError when det = 0.
RatMatrix inverse(const RatMatrix& m);

// Solves A X = B for X with A square nonsingular.
RatMatrix solve(const RatMatrix& a, const RatMatrix& b);

// Returns a nonzero vector v with A v = 0, or nullopt when A has full
// column rank. Used to name dependent column subsets in error messages.
std::optional<std::vector<Rational>> null_vector(const RatMatrix& m);

// Pivot over the reals at (r, c): with the pivot element p = m[r][c]
// required to be +-1, the entry becomes -p, the rest of row r and column c
// are kept, and every other entry (i, j) becomes
// m[i][j] - p * m[i][c] * m[r][j]. Applying it twice at the same position
// is the identity. Throws PivotError if p is not +-1.
RatMatrix pivot_real(const RatMatrix& m, int r, int c);

}  // namespace tourforge
