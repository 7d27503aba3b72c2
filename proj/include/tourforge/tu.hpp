#pragma once

#include <optional>
#include <vector>

#include "tourforge/matrix.hpp"
#include "tourforge/report.hpp"

namespace tourforge {

// Enumeration caps. The checks are exponential by design and target desk
// scale; callers can raise the caps explicitly (the CLI also honors the
// TOURFORGE_CAP environment variable).
inline constexpr int kDetCapDefault = 10;      // max(rows, cols) for is_tu_det
inline constexpr int kGhCapDefault = 15;       // rows and cols for is_tu_gh
inline constexpr int kSigningCapDefault = 20;  // rows for equitable_signing

// Total unimodularity by enumerating every square submatrix in increasing
// size (then lexicographic row set, then column set) and testing its
// determinant against {0, +1, -1}. The first violation is reported with its
// row/column index sets and determinant. Entries outside {0, +1, -1} fail
// immediately with the entry position as witness. submatrices_checked counts
// the empty submatrix too (det of the 0x0 matrix is 1 by convention).
VerificationReport is_tu_det(const RatMatrix& m, int cap = kDetCapDefault);

// Lexicographically first {+1,-1} signing x of the selected rows such that
// sum_i x_i * row_i has every entry in {0, +1, -1}; nullopt when none
// exists. The enumeration starts at the all-+1 signing and flips signs in
// binary-counter order (bit set => -1), so the result is reproducible.
std::optional<std::vector<int>> equitable_signing(
    const RatMatrix& m, const std::vector<int>& rowset,
    int cap = kSigningCapDefault);

// Total unimodularity via equitable signings: true iff every nonempty row
// subset admits one. A subset without a signing is the reported witness.
VerificationReport is_tu_gh(const RatMatrix& m, int cap = kGhCapDefault);

}  // namespace tourforge
