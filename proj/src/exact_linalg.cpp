#include "desalg/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace desalg {

RationalMatrix RationalMatrix::from_rows(std::vector<std::vector<Rational>> rows,
                                         size_t cols) {
  RationalMatrix m(0, cols);
  for (auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("row length mismatch");
  }
  m.rows_ = std::move(rows);
  return m;
}

SubspaceBasis rref(const RationalMatrix& m) {
  std::vector<std::vector<Rational>> a = m.data();
  const size_t cols = m.cols();
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < a.size(); ++col) {
    size_t p = row;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[row], a[p]);
    if (a[row][col] != 1) {
      Rational inv = 1 / a[row][col];
      for (size_t c = col; c < cols; ++c) a[row][c] *= inv;
    }
    for (size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (size_t c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  a.resize(row);
  return SubspaceBasis{cols, std::move(a), std::move(pivots)};
}

bool span_contains(const SubspaceBasis& s, const std::vector<Rational>& v) {
  if (v.size() != s.ambient) throw std::invalid_argument("ambient mismatch");
  std::vector<Rational> r = v;
  for (size_t i = 0; i < s.rows.size(); ++i) {
    const Rational& f = r[s.pivots[i]];
    if (f == 0) continue;
    Rational c = f;
    for (size_t k = s.pivots[i]; k < s.ambient; ++k) r[k] -= c * s.rows[i][k];
  }
  for (const Rational& x : r) {
    if (x != 0) return false;
  }
  return true;
}

bool span_equal(const SubspaceBasis& s, const SubspaceBasis& t) {
  if (s.ambient != t.ambient) throw std::invalid_argument("ambient mismatch");
  return s == t;
}

SubspaceBasis subspace_sum(const SubspaceBasis& s, const SubspaceBasis& t) {
  if (s.ambient != t.ambient) throw std::invalid_argument("ambient mismatch");
  std::vector<std::vector<Rational>> rows = s.rows;
  rows.insert(rows.end(), t.rows.begin(), t.rows.end());
  return rref(RationalMatrix::from_rows(std::move(rows), s.ambient));
}

bool unitriangular_certificate(const std::vector<std::vector<Rational>>& columns) {
  const size_t n = columns.size();
  for (size_t j = 0; j < n; ++j) {
    if (columns[j].size() != n) throw std::invalid_argument("not square");
    if (columns[j][j] != 1) return false;
    for (size_t i = j + 1; i < n; ++i) {
      if (columns[j][i] != 0) return false;
    }
  }
  return true;
}

}  // namespace desalg
