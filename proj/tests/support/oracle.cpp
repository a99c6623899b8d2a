#include "oracle.hpp"

#include <utility>

namespace dgm::testing {

mpq_class DenseField::norm(const mpq_class& x) const {
  if (p_ == 0) return x;
  mpz_class num = x.get_num();
  mpz_class den = x.get_den();
  const mpz_class p = static_cast<unsigned long>(p_);
  mpz_class r;
  mpz_invert(r.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  r = (num * r) % p;
  if (r < 0) r += p;
  return mpq_class(r);
}

mpq_class DenseField::inv(const mpq_class& x) const {
  if (p_ == 0) return 1 / x;
  const mpz_class p = static_cast<unsigned long>(p_);
  mpz_class v = norm(x).get_num();
  mpz_class r;
  mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return mpq_class(r);
}

std::size_t dense_rank(DenseMatrix m, const DenseField& f) {
  for (auto& x : m.a) x = f.norm(x);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows && m.at(pivot, c) == 0) ++pivot;
    if (pivot == m.rows) continue;
    for (std::size_t k = 0; k < m.cols; ++k) std::swap(m.at(pivot, k), m.at(rank, k));
    const mpq_class s = f.inv(m.at(rank, c));
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == rank || m.at(r, c) == 0) continue;
      const mpq_class factor = f.norm(m.at(r, c) * s);
      for (std::size_t k = 0; k < m.cols; ++k) {
        m.at(r, k) = f.norm(m.at(r, k) - factor * m.at(rank, k));
      }
    }
    ++rank;
  }
  return rank;
}

DenseMatrix dense_mul(const DenseMatrix& x, const DenseMatrix& y, const DenseField& f) {
  DenseMatrix out(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) out.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  }
  for (auto& v : out.a) v = f.norm(v);
  return out;
}

DenseMatrix to_dense(const GradedMap& map) {
  DenseMatrix out(map.target()->dimension(), map.source()->dimension());
  for (const auto& [j, col] : map.columns()) {
    for (const auto& [i, c] : col.terms()) {
      out.at(i, j) = c.field().is_rationals() ? c.rational() : mpq_class(static_cast<unsigned long>(c.residue()));
    }
  }
  return out;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> pairs(const std::vector<int>& deg, int p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < deg.size(); ++i) {
    for (std::size_t j = 0; j < deg.size(); ++j) {
      if (deg[i] == deg[j] - p) out.emplace_back(i, j);
    }
  }
  return out;
}

std::size_t rank_of_delta(const std::vector<int>& deg, const DenseMatrix& d, int p, const DenseField& f) {
  const auto cols = pairs(deg, p);
  const auto rows = pairs(deg, p + 1);
  if (cols.empty() || rows.empty()) return 0;
  const std::size_t n = deg.size();
  const mpq_class sign = (p % 2 == 0) ? 1 : -1;
  DenseMatrix m(rows.size(), cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const auto [i, j] = cols[k];
    // image = D E_ij - (-1)^p E_ij D as a full n x n matrix
    DenseMatrix image(n, n);
    for (std::size_t a = 0; a < n; ++a) image.at(a, j) += d.at(a, i);
    for (std::size_t b = 0; b < n; ++b) image.at(i, b) -= sign * d.at(j, b);
    for (std::size_t r = 0; r < rows.size(); ++r) m.at(r, k) = image.at(rows[r].first, rows[r].second);
  }
  return dense_rank(std::move(m), f);
}

}  // namespace

std::size_t oracle_cohomology_dim(const std::vector<int>& degrees, const DenseMatrix& d, int p,
                                  const DenseField& f) {
  const std::size_t dim = pairs(degrees, p).size();
  return dim - rank_of_delta(degrees, d, p, f) - rank_of_delta(degrees, d, p - 1, f);
}

}  // namespace dgm::testing
