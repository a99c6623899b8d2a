#include "dgm/linalg.hpp"

#include <algorithm>
#include <optional>

#include "dgm/error.hpp"

namespace dgm::linalg {

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
  if (a.is_zero()) return;
  for (const auto& [k, v] : x) {
    const Scalar term = a * v;
    if (term.is_zero()) continue;
    auto [it, inserted] = y.try_emplace(k, term);
    if (!inserted) {
      it->second += term;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), cols_(cols), rows_(rows) {}

Scalar Matrix::get(std::size_t r, std::size_t c) const {
  const auto& row = rows_.at(r);
  auto it = row.find(c);
  return it == row.end() ? Scalar::zero(field_) : it->second;
}

void Matrix::add(std::size_t r, std::size_t c, const Scalar& v) {
  if (c >= cols_) throw Error(Errc::DegreeMismatch, "column index out of range");
  SparseVec single{{c, v}};
  axpy(rows_.at(r), Scalar::one(field_), single);
}

namespace {

struct Workspace {
  std::vector<SparseVec> rows;
  std::vector<Scalar> rhs;            // empty unless solving
  std::vector<SparseVec> combination; // empty unless solving
  std::vector<std::size_t> pivots;
  bool tracking = false;
};

// Gauss-Jordan elimination in column order. Rows that are already zero are
// never touched, so a zero equation keeps its trivial combination.
void eliminate(Workspace& ws, std::size_t cols) {
  const bool tracking = ws.tracking;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < ws.rows.size(); ++c) {
    std::optional<std::size_t> pivot;
    for (std::size_t r = rank; r < ws.rows.size(); ++r) {
      if (ws.rows[r].count(c) != 0) {
        pivot = r;
        break;
      }
    }
    if (!pivot) continue;
    if (*pivot != rank) {
      std::swap(ws.rows[*pivot], ws.rows[rank]);
      if (tracking) {
        std::swap(ws.rhs[*pivot], ws.rhs[rank]);
        std::swap(ws.combination[*pivot], ws.combination[rank]);
      }
    }
    const Scalar inv = ws.rows[rank].at(c).inverse();
    if (!inv.is_one()) {
      for (auto& [k, v] : ws.rows[rank]) v *= inv;
      if (tracking) {
        ws.rhs[rank] *= inv;
        for (auto& [k, v] : ws.combination[rank]) v *= inv;
      }
    }
    for (std::size_t r = 0; r < ws.rows.size(); ++r) {
      if (r == rank) continue;
      auto it = ws.rows[r].find(c);
      if (it == ws.rows[r].end()) continue;
      const Scalar factor = -it->second;
      axpy(ws.rows[r], factor, ws.rows[rank]);
      if (tracking) {
        ws.rhs[r] += factor * ws.rhs[rank];
        axpy(ws.combination[r], factor, ws.combination[rank]);
      }
    }
    ws.pivots.push_back(c);
    ++rank;
  }
}

}  // namespace

Echelon rref(const Matrix& a) {
  Workspace ws;
  ws.rows = a.row_data();
  eliminate(ws, a.cols());
  Echelon out;
  out.pivots = ws.pivots;
  out.rows.assign(ws.rows.begin(), ws.rows.begin() + static_cast<std::ptrdiff_t>(ws.pivots.size()));
  return out;
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

std::vector<SparseVec> kernel_basis(const Matrix& a) {
  const Echelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<SparseVec> out;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    SparseVec v{{f, Scalar::one(a.field())}};
    for (std::size_t k = 0; k < e.rows.size(); ++k) {
      auto it = e.rows[k].find(f);
      if (it != e.rows[k].end()) v.emplace(e.pivots[k], -it->second);
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::variant<SparseVec, Inconsistency> solve(const Matrix& a, const SparseVec& b) {
  Workspace ws;
  ws.rows = a.row_data();
  ws.rhs.assign(a.rows(), Scalar::zero(a.field()));
  ws.combination.resize(a.rows());
  for (const auto& [r, v] : b) {
    if (r >= a.rows()) throw Error(Errc::DegreeMismatch, "right-hand side index out of range");
    ws.rhs[r] = v;
  }
  for (std::size_t r = 0; r < a.rows(); ++r) ws.combination[r].emplace(r, Scalar::one(a.field()));
  ws.tracking = true;
  eliminate(ws, a.cols());

  const std::size_t rank = ws.pivots.size();
  std::optional<std::size_t> best;
  for (std::size_t r = rank; r < ws.rows.size(); ++r) {
    if (ws.rhs[r].is_zero()) continue;
    if (!best) {
      best = r;
      continue;
    }
    const auto& cand = ws.combination[r];
    const auto& cur = ws.combination[*best];
    if (cand.size() < cur.size() ||
        (cand.size() == cur.size() &&
         std::lexicographical_compare(cand.begin(), cand.end(), cur.begin(), cur.end(),
                                      [](const auto& x, const auto& y) { return x.first < y.first; }))) {
      best = r;
    }
  }
  if (best) return Inconsistency{ws.combination[*best], ws.rhs[*best]};

  SparseVec x;
  for (std::size_t k = 0; k < rank; ++k) {
    if (!ws.rhs[k].is_zero()) x.emplace(ws.pivots[k], ws.rhs[k]);
  }
  return x;
}

SparseVec SpanBuilder::reduce(SparseVec v) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto row = pivot_rows_.find(it->first);
    if (row == pivot_rows_.end()) {
      ++it;
      continue;
    }
    const std::size_t key = it->first;
    axpy(v, -it->second, row->second);
    it = v.upper_bound(key);
  }
  return v;
}

bool SpanBuilder::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const std::size_t pivot = v.begin()->first;
  const Scalar inv = v.begin()->second.inverse();
  for (auto& [k, x] : v) x *= inv;
  pivot_rows_.emplace(pivot, std::move(v));
  return true;
}

}  // namespace dgm::linalg
