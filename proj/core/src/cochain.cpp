#include "dgm/cochain.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "dgm/error.hpp"

namespace dgm {

DgModule::DgModule(ModulePtr module, GradedMap d) : module_(std::move(module)), d_(std::move(d)) {
  if (!same_module(d_.source(), module_) || !same_module(d_.target(), module_)) {
    throw Error(Errc::NotEndomorphism, "differential must be an endomorphism of " + module_->name());
  }
  if (d_.degree() != -1) {
    throw Error(Errc::BadDegree,
                "differential must have degree -1, got " + std::to_string(d_.degree()));
  }
  if (!is_differential(d_)) throw Error(Errc::NotADifferential, "d^2 != 0");
}

Cochain::Cochain(int p, GradedMap map) : p_(p), map_(std::move(map)) {
  if (map_.degree() != -p_) {
    throw Error(Errc::MalformedCochain, "a " + std::to_string(p_) + "-cochain must have degree " +
                                            std::to_string(-p_) + ", got " +
                                            std::to_string(map_.degree()));
  }
}

std::vector<std::string> Witness::sources() const {
  std::vector<std::string> out;
  for (const auto& t : equations) {
    if (std::find(out.begin(), out.end(), t.source) == out.end()) out.push_back(t.source);
  }
  return out;
}

bool Witness::involves_source(const std::string& name) const {
  return std::any_of(equations.begin(), equations.end(),
                     [&](const Term& t) { return t.source == name; });
}

std::string Witness::to_string() const {
  std::string out;
  for (const auto& t : equations) append_term(out, t.coeff, "[" + t.target + " d/d " + t.source + "]");
  out += " => 0 = " + value.to_string();
  if (support_degree) out += " (degree-support certificate at p=" + std::to_string(*support_degree) + ")";
  return out;
}

HomComplex::HomComplex(DgModule source, DgModule target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (!(source_.field() == target_.field())) {
    throw Error(Errc::FieldMismatch, "complexes over different fields");
  }
}

std::vector<ElementaryIndex> HomComplex::basis(int p) const {
  const auto& v = *source_.module();
  const auto& m = *target_.module();
  std::vector<ElementaryIndex> out;
  for (std::size_t j = 0; j < v.dimension(); ++j) {
    for (std::size_t i = 0; i < m.dimension(); ++i) {
      if (m.degree(i) == v.degree(j) - p) out.push_back({i, j});
    }
  }
  return out;
}

namespace {

std::map<std::pair<std::size_t, std::size_t>, std::size_t> index_lookup(
    const std::vector<ElementaryIndex>& basis) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> out;
  for (std::size_t k = 0; k < basis.size(); ++k) out.emplace(std::pair{basis[k].target, basis[k].source}, k);
  return out;
}

}  // namespace

Cochain HomComplex::zero(int p) const {
  return Cochain(p, GradedMap::zero(source_.module(), target_.module(), -p));
}

void HomComplex::check(const Cochain& f) const {
  if (!same_module(f.map().source(), source_.module()) ||
      !same_module(f.map().target(), target_.module())) {
    throw Error(Errc::MalformedCochain, "cochain does not map " + source_.module()->name() +
                                            " to " + target_.module()->name());
  }
}

linalg::SparseVec HomComplex::coordinates(const Cochain& f) const {
  check(f);
  const auto lookup = index_lookup(basis(f.degree()));
  linalg::SparseVec out;
  for (const auto& [j, col] : f.map().columns()) {
    for (const auto& [i, c] : col.terms()) out.emplace(lookup.at({i, j}), c);
  }
  return out;
}

Cochain HomComplex::from_coordinates(int p, const linalg::SparseVec& coords) const {
  const auto b = basis(p);
  GradedMap f = GradedMap::zero(source_.module(), target_.module(), -p);
  for (const auto& [k, c] : coords) f.add_entry(b.at(k).target, b.at(k).source, c);
  return Cochain(p, std::move(f));
}

Cochain HomComplex::coboundary(const Cochain& f) const {
  check(f);
  const int p = f.degree();
  GradedMap left = target_.differential().compose(f.map());
  GradedMap right = f.map().compose(source_.differential());
  if (p % 2 == 0) {
    left -= right;
  } else {
    left += right;
  }
  return Cochain(p + 1, std::move(left));
}

bool HomComplex::is_cocycle(const Cochain& f) const { return coboundary(f).is_zero(); }

linalg::Matrix HomComplex::coboundary_matrix(int p) const {
  const auto cols = basis(p);
  const auto rows = basis(p + 1);
  const auto row_of = index_lookup(rows);
  linalg::Matrix a(field(), rows.size(), cols.size());
  const auto& dv = source_.differential();
  const auto& dm = target_.differential();
  const Scalar sign = (p % 2 == 0) ? -Scalar::one(field()) : Scalar::one(field());

  // Columns of d_V that hit x_j: preimage[j] = {(j', a)} with d_V(x_j') ∋ a x_j.
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> preimage(source_.module()->dimension());
  for (const auto& [jp, col] : dv.columns()) {
    for (const auto& [j, c] : col.terms()) preimage[j].emplace_back(jp, c);
  }

  for (std::size_t k = 0; k < cols.size(); ++k) {
    const auto [i, j] = cols[k];
    // d_M ∘ (x_i d/d x_j) = Σ c x_i' d/d x_j over d_M(x_i) = Σ c x_i'
    const Vector image = dm.apply_basis(i);
    for (const auto& [ip, c] : image.terms()) a.add(row_of.at({ip, j}), k, c);
    // (x_i d/d x_j) ∘ d_V = Σ c x_i d/d x_j' over d_V(x_j') ∋ c x_j
    for (const auto& [jp, c] : preimage[j]) a.add(row_of.at({i, jp}), k, sign * c);
  }
  return a;
}

CohomologyResult HomComplex::cohomology(int p) const {
  CohomologyResult out;
  out.p = p;
  const linalg::Matrix delta_p = coboundary_matrix(p);
  const linalg::Matrix delta_prev = coboundary_matrix(p - 1);
  out.dim_cochains = delta_p.cols();

  const auto cocycles = linalg::kernel_basis(delta_p);
  out.dim_cocycles = cocycles.size();

  // Columns of δ^{p-1} span the coboundaries.
  std::vector<linalg::SparseVec> images(delta_prev.cols());
  for (std::size_t r = 0; r < delta_prev.rows(); ++r) {
    for (const auto& [c, v] : delta_prev.row(r)) images[c].emplace(r, v);
  }
  linalg::SpanBuilder span(field());
  for (auto& img : images) span.insert(std::move(img));
  out.dim_coboundaries = span.rank();

  for (const auto& z : cocycles) {
    if (span.insert(z)) out.representatives.push_back(from_coordinates(p, z));
  }
  out.dim = out.representatives.size();
  return out;
}

SolveOutcome HomComplex::solve_coboundary(const Cochain& g) const {
  check(g);
  if (!is_cocycle(g)) {
    throw Error(Errc::NotACocycle, "right-hand side of degree " + std::to_string(g.degree()) +
                                       " is not a cocycle");
  }
  const int p = g.degree() - 1;
  const linalg::Matrix a = coboundary_matrix(p);
  auto result = linalg::solve(a, coordinates(g));
  if (auto* x = std::get_if<linalg::SparseVec>(&result)) {
    Cochain f = from_coordinates(p, *x);
    if (!(coboundary(f) == g)) {
      throw std::logic_error("solve_coboundary: δ(f) != g for the computed preimage");
    }
    return SolveOutcome::solved(std::move(f));
  }
  const auto& inc = std::get<linalg::Inconsistency>(result);
  const auto rows = basis(g.degree());
  Witness w{{}, inc.value, std::nullopt};
  for (const auto& [r, c] : inc.combination) {
    w.equations.push_back({target_.module()->element(rows[r].target).name,
                           source_.module()->element(rows[r].source).name, c});
  }
  if (g.degree() == 2 && same_module(source_.module(), target_.module())) {
    w.support_degree = noncobounding_degree(source_.differential(), g);
  }
  return SolveOutcome::infeasible(std::move(w));
}

std::optional<int> noncobounding_degree(const GradedMap& d, const Cochain& g) {
  if (d.degree() != -1 || g.degree() != 2) return std::nullopt;
  const auto d_support = d.block_support();
  for (int p : g.map().block_support()) {
    if (d_support.count(p) == 0 && d_support.count(p - 1) == 0) return p;
  }
  return std::nullopt;
}

bool noncobounding_certificate(const GradedMap& d, const Cochain& g) {
  return noncobounding_degree(d, g).has_value();
}

}  // namespace dgm
