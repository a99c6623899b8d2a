#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "dgm/gmap.hpp"

namespace dgm::testing {

// Dense linear algebra written without the library's solver, used as an
// independent check. Entries are mpq_class; over GF(p) they are kept as
// integers in [0, p).
class DenseField {
 public:
  explicit DenseField(std::uint64_t p = 0) : p_(p) {}
  static DenseField of(const FieldSpec& f) { return DenseField(f.modulus()); }

  mpq_class norm(const mpq_class& x) const;
  mpq_class inv(const mpq_class& x) const;
  bool zero(const mpq_class& x) const { return norm(x) == 0; }

 private:
  std::uint64_t p_;
};

struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<mpq_class> a;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  mpq_class& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const mpq_class& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

std::size_t dense_rank(DenseMatrix m, const DenseField& f);
DenseMatrix dense_mul(const DenseMatrix& x, const DenseMatrix& y, const DenseField& f);

/// Entry (i, j) is the coefficient of x_i in map(x_j).
DenseMatrix to_dense(const GradedMap& map);

/// dim H^p(End V) from scratch: dim C^p - rank δ^p - rank δ^{p-1}, with δ
/// assembled densely from the formula d f - (-1)^p f d.
std::size_t oracle_cohomology_dim(const std::vector<int>& degrees, const DenseMatrix& d, int p,
                                  const DenseField& f);

}  // namespace dgm::testing
