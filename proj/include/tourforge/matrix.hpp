#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "tourforge/rational.hpp"

namespace tourforge {

// Dense matrix of exact rationals, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols);
  RatMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RatMatrix identity(int n);
  static RatMatrix zero(int rows, int cols) { return RatMatrix(rows, cols); }
  static RatMatrix from_rows(const std::vector<std::vector<long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c);
  const Rational& at(int r, int c) const;

  bool operator==(const RatMatrix& other) const;
  bool operator!=(const RatMatrix& other) const { return !(*this == other); }

  RatMatrix transpose() const;
  RatMatrix operator+(const RatMatrix& other) const;
  RatMatrix operator-(const RatMatrix& other) const;
  RatMatrix operator*(const RatMatrix& other) const;
  RatMatrix negated() const;

  bool is_zero() const;
  bool is_integral() const;
  // Every entry in {0, +1, -1}.
  bool is_sign_matrix() const;

  RatMatrix submatrix(const std::vector<int>& row_idx,
                      const std::vector<int>& col_idx) const;
  std::vector<Rational> row(int r) const;
  std::vector<Rational> col(int c) const;
  void set_row(int r, const std::vector<Rational>& values);
  void set_col(int c, const std::vector<Rational>& values);

  // Stacks this on top of other (column counts must match).
  RatMatrix vconcat(const RatMatrix& other) const;
  // Places other to the right of this (row counts must match).
  RatMatrix hconcat(const RatMatrix& other) const;

  RatMatrix with_row_appended(const std::vector<Rational>& values) const;
  RatMatrix with_col_appended(const std::vector<Rational>& values) const;
  RatMatrix with_row_removed(int r) const;
  RatMatrix with_col_removed(int c) const;
  RatMatrix with_row_inserted(int pos, const std::vector<Rational>& values) const;

  RatMatrix permuted_rows(const std::vector<int>& perm) const;
  RatMatrix permuted_cols(const std::vector<int>& perm) const;

  std::string to_pretty_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
  void check_index(int r, int c) const;
};

std::vector<Rational> rational_vector(const std::vector<long>& v);
RatMatrix outer_product(const std::vector<Rational>& col,
                        const std::vector<Rational>& row);

}  // namespace tourforge
