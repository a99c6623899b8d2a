#pragma once

#include <cstddef>
#include <map>
#include <variant>
#include <vector>

#include "dgm/scalar.hpp"

namespace dgm::linalg {

using SparseVec = std::map<std::size_t, Scalar>;

/// y += a * x, dropping entries that cancel.
void axpy(SparseVec& y, const Scalar& a, const SparseVec& x);

/// Row-sparse matrix over an exact field.
class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  const SparseVec& row(std::size_t r) const { return rows_.at(r); }
  const std::vector<SparseVec>& row_data() const noexcept { return rows_; }

  Scalar get(std::size_t r, std::size_t c) const;
  void add(std::size_t r, std::size_t c, const Scalar& v);

 private:
  FieldSpec field_;
  std::size_t cols_;
  std::vector<SparseVec> rows_;
};

/// Reduced row echelon form: pivot entries are 1 and are the only nonzero
/// entries of their columns. rows[k] has its pivot at pivots[k].
struct Echelon {
  std::vector<SparseVec> rows;
  std::vector<std::size_t> pivots;
};

Echelon rref(const Matrix& a);
std::size_t rank(const Matrix& a);

/// Kernel basis read off the RREF: one vector per free column, free columns
/// ascending, each with a 1 in its free column.
std::vector<SparseVec> kernel_basis(const Matrix& a);

/// Certificate that A x = b has no solution: y^T A = 0 while y^T b = value != 0.
/// `combination` is indexed by the rows of A.
struct Inconsistency {
  SparseVec combination;
  Scalar value;
};

/// Particular solution of A x = b with every free variable set to zero, or an
/// inconsistency certificate. Among several certificates the one combining the
/// fewest equations is returned (ties broken by the earliest equations).
std::variant<SparseVec, Inconsistency> solve(const Matrix& a, const SparseVec& b);

/// Incrementally built echelon basis, used to test membership in a span.
class SpanBuilder {
 public:
  explicit SpanBuilder(FieldSpec field) : field_(field) {}

  /// Adds v to the span; returns true when v was independent of it.
  bool insert(SparseVec v);
  /// Reduces v against the current basis; zero iff v lies in the span.
  SparseVec reduce(SparseVec v) const;
  std::size_t rank() const noexcept { return pivot_rows_.size(); }

 private:
  FieldSpec field_;
  std::map<std::size_t, SparseVec> pivot_rows_;
};

}  // namespace dgm::linalg
