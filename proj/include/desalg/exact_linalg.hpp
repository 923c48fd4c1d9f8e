#pragma once

#include <cstddef>
#include <vector>

#include "desalg/rational.hpp"

namespace desalg {

// Dense rational matrix. Row count may be zero; the column count is carried
// explicitly so empty matrices still know their ambient dimension.
class RationalMatrix {
 public:
  RationalMatrix(size_t rows, size_t cols)
      : cols_(cols), rows_(rows, std::vector<Rational>(cols, Rational(0))) {}
  static RationalMatrix from_rows(std::vector<std::vector<Rational>> rows, size_t cols);

  size_t rows() const { return rows_.size(); }
  size_t cols() const { return cols_; }
  Rational& at(size_t r, size_t c) { return rows_[r][c]; }
  const Rational& at(size_t r, size_t c) const { return rows_[r][c]; }
  const std::vector<std::vector<Rational>>& data() const { return rows_; }

 private:
  size_t cols_;
  std::vector<std::vector<Rational>> rows_;
};

// Row space of a matrix in reduced row echelon form: pivots strictly
// increasing, pivot entries 1, pivot columns otherwise zero, no zero rows.
// Two equal subspaces always produce identical objects, so operator== decides
// subspace equality.
struct SubspaceBasis {
  size_t ambient = 0;
  std::vector<std::vector<Rational>> rows;
  std::vector<size_t> pivots;

  size_t rank() const { return rows.size(); }
  static SubspaceBasis zero(size_t ambient) { return SubspaceBasis{ambient, {}, {}}; }

  bool operator==(const SubspaceBasis&) const = default;
};

// Gauss-Jordan elimination with the first nonzero entry as pivot. Exact, no
// pivot-size heuristics: the matrices here stay small-entried.
SubspaceBasis rref(const RationalMatrix& m);

// Membership of v in the row space.
bool span_contains(const SubspaceBasis& s, const std::vector<Rational>& v);

bool span_equal(const SubspaceBasis& s, const SubspaceBasis& t);

// Row space of the union of the two row sets.
SubspaceBasis subspace_sum(const SubspaceBasis& s, const SubspaceBasis& t);

// columns[j] is the coordinate vector of the j-th family member over a basis
// indexed the same way. True iff the matrix is upper unitriangular: 1 at
// (j, j), 0 at (i, j) for i > j.
bool unitriangular_certificate(const std::vector<std::vector<Rational>>& columns);

}  // namespace desalg
