#include "tourforge/tu.hpp"

#include <cstdint>
#include <string>

#include "tourforge/errors.hpp"
#include "tourforge/linalg.hpp"

namespace tourforge {

namespace {

std::string index_set_string(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

// Finds a non-{0,+1,-1} entry; records it as witness and returns false.
bool check_sign_entries(const RatMatrix& m, VerificationReport& report,
                        const std::string& check_name) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const Rational& v = m.at(i, j);
      if (v != 0 && v != 1 && v != -1) {
        report.add(check_name, false,
                   "entry (" + std::to_string(i) + "," + std::to_string(j) +
                       ") = " + rat_to_string(v) + " outside {0,+1,-1}");
        report.witness_rows = {i};
        report.witness_cols = {j};
        report.witness_det = v;
        return false;
      }
    }
  report.add(check_name, true, "all entries in {0,+1,-1}");
  return true;
}

// Determinant of the submatrix selected by rows/cols, all entries {0,+1,-1}.
// Fraction-free Bareiss over int64; intermediate values are k x k minors,
// bounded by Hadamard's k^(k/2), which fits in int64 for k <= 24.
long long det_pm_int64(const std::vector<signed char>& entries, int stride,
                       const std::vector<int>& rows,
                       const std::vector<int>& cols) {
  int n = static_cast<int>(rows.size());
  if (n == 0) return 1;
  long long a[24 * 24];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[i * n + j] = entries[static_cast<std::size_t>(rows[i]) * stride +
                             cols[j]];
  long long prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k * n + k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i * n + k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = k; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i * n + j] =
            (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
    prev = a[k * n + k];
  }
  return sign * a[(n - 1) * n + (n - 1)];
}

// Advances a k-combination of {0..limit-1} in lexicographic order.
bool next_combination(std::vector<int>& c, int limit) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < limit - (k - i)) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> first_combination(int k) {
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  return c;
}

}  // namespace

VerificationReport is_tu_det(const RatMatrix& m, int cap) {
  VerificationReport report;
  if (m.rows() > cap || m.cols() > cap)
    throw CapacityError("is_tu_det: " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) +
                        " exceeds enumeration cap " + std::to_string(cap));
  if (!check_sign_entries(m, report, "tu-det entries")) return report;
  if (m.rows() > 24 || m.cols() > 24)
    throw CapacityError("is_tu_det int64 path limited to 24 rows/cols");

  std::vector<signed char> entries(
      static_cast<std::size_t>(m.rows()) * std::max(m.cols(), 1), 0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      entries[static_cast<std::size_t>(i) * m.cols() + j] =
          static_cast<signed char>(rat_to_long(m.at(i, j)));

  long long checked = 1;  // the empty submatrix, det 1 by convention
  int max_size = std::min(m.rows(), m.cols());
  for (int k = 1; k <= max_size; ++k) {
    auto rows = first_combination(k);
    do {
      auto cols = first_combination(k);
      do {
        long long d = det_pm_int64(entries, m.cols(), rows, cols);
        ++checked;
        if (d < -1 || d > 1) {
          report.add("tu-det minors", false,
                     "submatrix rows " + index_set_string(rows) + " cols " +
                         index_set_string(cols) + " has determinant " +
                         std::to_string(d));
          report.witness_rows = rows;
          report.witness_cols = cols;
          report.witness_det = Rational(static_cast<long>(d));
          report.submatrices_checked = checked;
          return report;
        }
      } while (next_combination(cols, m.cols()));
    } while (next_combination(rows, m.rows()));
  }
  report.add("tu-det minors", true,
             "all " + std::to_string(checked) +
                 " square submatrix determinants lie in {0,+1,-1}");
  report.submatrices_checked = checked;
  return report;
}

std::optional<std::vector<int>> equitable_signing(const RatMatrix& m,
                                                  const std::vector<int>& rowset,
                                                  int cap) {
  if (rowset.empty()) throw Error("equitable_signing: empty row set");
  int k = static_cast<int>(rowset.size());
  if (k > cap)
    throw CapacityError("equitable_signing: " + std::to_string(k) +
                        " rows exceed cap " + std::to_string(cap));
  int n = m.cols();
  std::vector<std::vector<long>> rows(k, std::vector<long>(n));
  for (int i = 0; i < k; ++i) {
    if (rowset[i] < 0 || rowset[i] >= m.rows())
      throw LookupError("equitable_signing: row index out of range");
    for (int j = 0; j < n; ++j) {
      long v = rat_to_long(m.at(rowset[i], j));
      if (v < -1 || v > 1)
        throw Error("equitable_signing requires {0,+1,-1} entries");
      rows[i][j] = v;
    }
  }
  // Binary-counter enumeration with the last row as the least significant
  // digit and +1 counting as 0. Counter 0 (all +1) comes first, so the
  // returned signing is the lexicographically smallest with +1 < -1 when
  // read from row 0 onward.
  std::vector<long> sums(n, 0);
  std::vector<int> sign(k, 1);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) sums[j] += rows[i][j];
  auto equitable = [&]() {
    for (int j = 0; j < n; ++j)
      if (sums[j] < -1 || sums[j] > 1) return false;
    return true;
  };
  std::uint64_t total = std::uint64_t(1) << k;
  for (std::uint64_t c = 0;; ++c) {
    if (equitable()) return sign;
    if (c + 1 >= total) break;
    // Increment the counter: flip signs upward from the last row until one
    // flips to -1, where the carry stops.
    for (int i = k - 1; i >= 0; --i) {
      sign[i] = -sign[i];
      for (int j = 0; j < n; ++j) sums[j] += 2 * sign[i] * rows[i][j];
      if (sign[i] == -1) break;
    }
  }
  return std::nullopt;
}

VerificationReport is_tu_gh(const RatMatrix& m, int cap) {
  VerificationReport report;
  if (m.rows() > cap || m.cols() > cap)
    throw CapacityError("is_tu_gh: " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) + " exceeds cap " +
                        std::to_string(cap));
  if (!check_sign_entries(m, report, "tu-gh entries")) return report;

  // Every nonempty row subset must admit an equitable signing. Subsets are
  // enumerated in increasing size, then lexicographically, so a failure
  // witness is the smallest violating subset in that order.
  long long subsets = 0;
  for (int k = 1; k <= m.rows(); ++k) {
    auto subset = first_combination(k);
    do {
      ++subsets;
      if (!equitable_signing(m, subset, std::max(cap, kSigningCapDefault))) {
        report.add("tu-gh signings", false,
                   "row subset " + index_set_string(subset) +
                       " admits no equitable signing");
        report.witness_rows = subset;
        return report;
      }
    } while (next_combination(subset, m.rows()));
  }
  report.add("tu-gh signings", true,
             "all " + std::to_string(subsets) +
                 " nonempty row subsets admit equitable signings");
  return report;
}

}  // namespace tourforge
