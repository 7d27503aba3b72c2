#include "tourforge/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "tourforge/errors.hpp"

namespace tourforge {

Rational rat_from_string(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  // mpq_class accepts "p" and "p/q" but also tolerates some junk; validate
  // the shape first.
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::string num = s, den = "1";
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!is_int(num) || !is_int(den))
    throw ParseError("bad rational literal: " + s);
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw ParseError("bad rational literal: " + s);
  if (r.get_den() == 0) throw ParseError("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rational& r) { return r.get_str(); }

long rat_to_long(const Rational& r) {
  if (!is_integral(r)) throw Error("non-integral value " + rat_to_string(r));
  if (!r.get_num().fits_slong_p())
    throw Error("value out of long range " + rat_to_string(r));
  return r.get_num().get_si();
}

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
  data_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  data_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_)
      throw ShapeError("ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  RatMatrix m(static_cast<int>(rows.size()),
              rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols())
      throw ShapeError("ragged row list");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

void RatMatrix::check_index(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw LookupError("matrix index (" + std::to_string(r) + "," +
                      std::to_string(c) + ") out of range for " +
                      std::to_string(rows_) + "x" + std::to_string(cols_));
}

Rational& RatMatrix::at(int r, int c) {
  check_index(r, c);
  return data_[static_cast<std::size_t>(r) * cols_ + c];
}

const Rational& RatMatrix::at(int r, int c) const {
  check_index(r, c);
  return data_[static_cast<std::size_t>(r) * cols_ + c];
}

bool RatMatrix::operator==(const RatMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix RatMatrix::operator+(const RatMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw ShapeError("matrix addition shape mismatch");
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = data_[i] + other.data_[i];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw ShapeError("matrix subtraction shape mismatch");
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = data_[i] - other.data_[i];
  return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  if (cols_ != other.rows_)
    throw ShapeError("matrix product shape mismatch: " +
                     std::to_string(cols_) + " vs " +
                     std::to_string(other.rows_));
  RatMatrix r(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < other.cols_; ++j)
        r.at(i, j) += aik * other.at(k, j);
    }
  return r;
}

RatMatrix RatMatrix::negated() const {
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
  return r;
}

bool RatMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

bool RatMatrix::is_integral() const {
  for (const auto& v : data_)
    if (!tourforge::is_integral(v)) return false;
  return true;
}

bool RatMatrix::is_sign_matrix() const {
  for (const auto& v : data_)
    if (v != 0 && v != 1 && v != -1) return false;
  return true;
}

RatMatrix RatMatrix::submatrix(const std::vector<int>& row_idx,
                               const std::vector<int>& col_idx) const {
  RatMatrix s(static_cast<int>(row_idx.size()),
              static_cast<int>(col_idx.size()));
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < s.cols(); ++j)
      s.at(i, j) = at(row_idx[i], col_idx[j]);
  return s;
}

std::vector<Rational> RatMatrix::row(int r) const {
  std::vector<Rational> v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(r, j);
  return v;
}

std::vector<Rational> RatMatrix::col(int c) const {
  std::vector<Rational> v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, c);
  return v;
}

void RatMatrix::set_row(int r, const std::vector<Rational>& values) {
  if (static_cast<int>(values.size()) != cols_)
    throw ShapeError("row length mismatch");
  for (int j = 0; j < cols_; ++j) at(r, j) = values[j];
}

void RatMatrix::set_col(int c, const std::vector<Rational>& values) {
  if (static_cast<int>(values.size()) != rows_)
    throw ShapeError("column length mismatch");
  for (int i = 0; i < rows_; ++i) at(i, c) = values[i];
}

RatMatrix RatMatrix::vconcat(const RatMatrix& other) const {
  if (cols_ != other.cols_ && rows_ != 0 && other.rows_ != 0)
    throw ShapeError("vconcat column mismatch");
  int cols = rows_ == 0 ? other.cols_ : cols_;
  RatMatrix r(rows_ + other.rows_, cols);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < other.rows_; ++i)
    for (int j = 0; j < other.cols_; ++j) r.at(rows_ + i, j) = other.at(i, j);
  return r;
}

RatMatrix RatMatrix::hconcat(const RatMatrix& other) const {
  if (rows_ != other.rows_ && cols_ != 0 && other.cols_ != 0)
    throw ShapeError("hconcat row mismatch");
  int rows = cols_ == 0 ? other.rows_ : rows_;
  RatMatrix r(rows, cols_ + other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < other.rows_; ++i)
    for (int j = 0; j < other.cols_; ++j) r.at(i, cols_ + j) = other.at(i, j);
  return r;
}

RatMatrix RatMatrix::with_row_appended(
    const std::vector<Rational>& values) const {
  if (static_cast<int>(values.size()) != cols_ && rows_ != 0)
    throw ShapeError("appended row length mismatch");
  RatMatrix r(rows_ + 1, rows_ == 0 ? static_cast<int>(values.size()) : cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int j = 0; j < r.cols(); ++j) r.at(rows_, j) = values[j];
  return r;
}

RatMatrix RatMatrix::with_col_appended(
    const std::vector<Rational>& values) const {
  if (static_cast<int>(values.size()) != rows_ && cols_ != 0)
    throw ShapeError("appended column length mismatch");
  RatMatrix r(cols_ == 0 ? static_cast<int>(values.size()) : rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < r.rows(); ++i) r.at(i, cols_) = values[i];
  return r;
}

RatMatrix RatMatrix::with_row_removed(int r) const {
  if (r < 0 || r >= rows_) throw LookupError("row index out of range");
  RatMatrix m(rows_ - 1, cols_);
  for (int i = 0, ii = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (int j = 0; j < cols_; ++j) m.at(ii, j) = at(i, j);
    ++ii;
  }
  return m;
}

RatMatrix RatMatrix::with_col_removed(int c) const {
  if (c < 0 || c >= cols_) throw LookupError("column index out of range");
  RatMatrix m(rows_, cols_ - 1);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0, jj = 0; j < cols_; ++j) {
      if (j == c) continue;
      m.at(i, jj++) = at(i, j);
    }
  return m;
}

RatMatrix RatMatrix::with_row_inserted(
    int pos, const std::vector<Rational>& values) const {
  if (pos < 0 || pos > rows_) throw LookupError("row position out of range");
  if (static_cast<int>(values.size()) != cols_ && rows_ != 0)
    throw ShapeError("inserted row length mismatch");
  RatMatrix m(rows_ + 1, rows_ == 0 ? static_cast<int>(values.size()) : cols_);
  for (int i = 0; i < pos; ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
  for (int j = 0; j < m.cols(); ++j) m.at(pos, j) = values[j];
  for (int i = pos; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(i + 1, j) = at(i, j);
  return m;
}

RatMatrix RatMatrix::permuted_rows(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != rows_)
    throw ShapeError("row permutation length mismatch");
  RatMatrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(perm[i], j);
  return m;
}

RatMatrix RatMatrix::permuted_cols(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != cols_)
    throw ShapeError("column permutation length mismatch");
  RatMatrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, perm[j]);
  return m;
}

std::string RatMatrix::to_pretty_string() const {
  // Right-aligned columns, one row per line.
  std::vector<std::string> cells(static_cast<std::size_t>(rows_) * cols_);
  std::vector<std::size_t> width(cols_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      std::string s = rat_to_string(at(i, j));
      width[j] = std::max(width[j], s.size());
      cells[static_cast<std::size_t>(i) * cols_ + j] = std::move(s);
    }
  std::ostringstream out;
  for (int i = 0; i < rows_; ++i) {
    out << "[";
    for (int j = 0; j < cols_; ++j) {
      const std::string& s = cells[static_cast<std::size_t>(i) * cols_ + j];
      out << std::string(width[j] - s.size() + (j ? 1 : 0), ' ') << s;
    }
    out << "]\n";
  }
  return out.str();
}

std::vector<Rational> rational_vector(const std::vector<long>& v) {
  std::vector<Rational> r;
  r.reserve(v.size());
  for (long x : v) r.emplace_back(x);
  return r;
}

RatMatrix outer_product(const std::vector<Rational>& col,
                        const std::vector<Rational>& row) {
  RatMatrix m(static_cast<int>(col.size()), static_cast<int>(row.size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = col[i] * row[j];
  return m;
}

}  // namespace tourforge
