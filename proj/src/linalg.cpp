#include "tourforge/linalg.hpp"

#include <cstdint>

#include "tourforge/errors.hpp"

namespace tourforge {

namespace {

// Fraction-free Bareiss determinant for integral matrices. All intermediate
// values are exact integers, so no rational normalization cost is paid.
Integer det_bareiss_int(const RatMatrix& m) {
  int n = m.rows();
  std::vector<Integer> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[static_cast<std::size_t>(i) * n + j] = m.at(i, j).get_num();
  auto at = [&](int i, int j) -> Integer& {
    return a[static_cast<std::size_t>(i) * n + j];
  };
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = k; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Integer v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = v;
      }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

// Row-echelon elimination over the rationals. Returns the rank; when
// want_det is set also accumulates the determinant into *det_out (square
// input assumed by the caller in that case).
int eliminate(std::vector<std::vector<Rational>>& a, Rational* det_out) {
  int rows = static_cast<int>(a.size());
  int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  Rational det = 1;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int p = -1;
    for (int i = rank; i < rows; ++i)
      if (a[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != rank) {
      std::swap(a[p], a[rank]);
      det = -det;
    }
    det *= a[rank][col];
    for (int i = rank + 1; i < rows; ++i) {
      if (a[i][col] == 0) continue;
      Rational f = a[i][col] / a[rank][col];
      for (int j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  if (det_out) *det_out = (rank == rows) ? det : Rational(0);
  return rank;
}

std::vector<std::vector<Rational>> to_rows(const RatMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows());
  for (int i = 0; i < m.rows(); ++i) a[i] = m.row(i);
  return a;
}

}  // namespace

Rational det(const RatMatrix& m) {
  if (m.rows() != m.cols())
    throw ShapeError("determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  if (m.is_integral()) return Rational(det_bareiss_int(m));
  auto a = to_rows(m);
  Rational d;
  eliminate(a, &d);
  return d;
}

int rank_q(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  auto a = to_rows(m);
  return eliminate(a, nullptr);
}

int rank_gf2(const RatMatrix& m) {
  if (!m.is_integral())
    throw Error("rank_gf2 requires integral entries");
  int rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  int words = (cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> bits(
      rows, std::vector<std::uint64_t>(words, 0));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (mpz_odd_p(m.at(i, j).get_num().get_mpz_t()))
        bits[i][j / 64] |= std::uint64_t(1) << (j % 64);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int word = col / 64;
    std::uint64_t mask = std::uint64_t(1) << (col % 64);
    int p = -1;
    for (int i = rank; i < rows; ++i)
      if (bits[i][word] & mask) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(bits[p], bits[rank]);
    for (int i = 0; i < rows; ++i) {
      if (i == rank || !(bits[i][word] & mask)) continue;
      for (int w = 0; w < words; ++w) bits[i][w] ^= bits[rank][w];
    }
    ++rank;
  }
  return rank;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse of non-square matrix");
  return solve(m, RatMatrix::identity(m.rows()));
}

RatMatrix solve(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != a.cols()) throw ShapeError("solve needs a square matrix");
  if (a.rows() != b.rows())
    throw ShapeError("solve right-hand side row mismatch");
  int n = a.rows(), k = b.cols();
  // Gauss-Jordan on [A | B].
  std::vector<std::vector<Rational>> w(n);
  for (int i = 0; i < n; ++i) {
    w[i] = a.row(i);
    auto rhs = b.row(i);
    w[i].insert(w[i].end(), rhs.begin(), rhs.end());
  }
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (w[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) throw SingularError("singular matrix in solve");
    std::swap(w[p], w[col]);
    Rational piv = w[col][col];
    for (int j = col; j < n + k; ++j) w[col][j] /= piv;
    for (int i = 0; i < n; ++i) {
      if (i == col || w[i][col] == 0) continue;
      Rational f = w[i][col];
      for (int j = col; j < n + k; ++j) w[i][j] -= f * w[col][j];
    }
  }
  RatMatrix x(n, k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) x.at(i, j) = w[i][n + j];
  return x;
}

std::optional<std::vector<Rational>> null_vector(const RatMatrix& m) {
  int rows = m.rows(), cols = m.cols();
  if (cols == 0) return std::nullopt;
  // Reduced row echelon form, tracking pivot columns.
  auto a = to_rows(m);
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int p = -1;
    for (int i = rank; i < rows; ++i)
      if (a[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[p], a[rank]);
    Rational piv = a[rank][col];
    for (int j = col; j < cols; ++j) a[rank][j] /= piv;
    for (int i = 0; i < rows; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (int j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  if (rank == cols) return std::nullopt;
  // First free column: express it against the pivot columns.
  int free_col = 0;
  {
    std::size_t k = 0;
    while (k < pivot_col.size() && pivot_col[k] == free_col) {
      ++free_col;
      ++k;
    }
  }
  std::vector<Rational> v(cols, Rational(0));
  v[free_col] = 1;
  for (int r = 0; r < rank; ++r)
    if (pivot_col[r] < free_col) v[pivot_col[r]] = -a[r][free_col];
  return v;
}

RatMatrix pivot_real(const RatMatrix& m, int r, int c) {
  if (r < 0 || r >= m.rows() || c < 0 || c >= m.cols())
    throw LookupError("pivot index out of range");
  const Rational& p = m.at(r, c);
  if (p != 1 && p != -1)
    throw PivotError("pivot element " + rat_to_string(p) + " is not +-1");
  RatMatrix out = m;
  out.at(r, c) = -p;
  for (int i = 0; i < m.rows(); ++i) {
    if (i == r) continue;
    for (int j = 0; j < m.cols(); ++j) {
      if (j == c) continue;
      out.at(i, j) = m.at(i, j) - p * m.at(i, c) * m.at(r, j);
    }
  }
  return out;
}

}  // namespace tourforge
