#include "dgm/gmap.hpp"

#include "dgm/error.hpp"

namespace dgm {

GradedMap::GradedMap(ModulePtr source, ModulePtr target, int degree)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree) {
  if (!(source_->field() == target_->field())) {
    throw Error(Errc::FieldMismatch, "source and target are over different fields");
  }
}

GradedMap GradedMap::identity(const ModulePtr& module) {
  GradedMap id(module, module, 0);
  const Scalar one = Scalar::one(module->field());
  for (std::size_t j = 0; j < module->dimension(); ++j) {
    id.columns_.emplace(j, Vector::basis(module, j, one));
  }
  return id;
}

GradedMap GradedMap::elementary(const ModulePtr& source, const ModulePtr& target,
                                std::string_view i, std::string_view j, const Scalar& c) {
  return elementary_at(source, target, target->index_of(i), source->index_of(j), c);
}

GradedMap GradedMap::elementary_at(const ModulePtr& source, const ModulePtr& target,
                                   std::size_t target_index, std::size_t source_index,
                                   const Scalar& c) {
  if (c.is_zero()) throw Error(Errc::ZeroCoefficient, "elementary map with zero coefficient");
  GradedMap f(source, target, target->degree(target_index) - source->degree(source_index));
  f.add_entry(target_index, source_index, c);
  return f;
}

std::size_t GradedMap::term_count() const {
  std::size_t n = 0;
  for (const auto& [j, col] : columns_) n += col.terms().size();
  return n;
}

Scalar GradedMap::entry(std::size_t target_index, std::size_t source_index) const {
  auto it = columns_.find(source_index);
  if (it == columns_.end()) return Scalar::zero(field());
  return it->second.coefficient(target_index);
}

void GradedMap::add_entry(std::size_t target_index, std::size_t source_index, const Scalar& c) {
  if (source_index >= source_->dimension() || target_index >= target_->dimension()) {
    throw Error(Errc::UnknownBasisName, "basis index out of range");
  }
  if (target_->degree(target_index) != source_->degree(source_index) + degree_) {
    throw Error(Errc::DegreeMismatch,
                "entry " + target_->element(target_index).name + " d/d " +
                    source_->element(source_index).name + " does not have degree " +
                    std::to_string(degree_));
  }
  if (c.is_zero()) return;
  auto it = columns_.try_emplace(source_index, target_).first;
  it->second.add_term(target_index, c);
  if (it->second.is_zero()) columns_.erase(it);
}

Vector GradedMap::apply_basis(std::size_t source_index) const {
  auto it = columns_.find(source_index);
  if (it == columns_.end()) return Vector(target_);
  return it->second;
}

Vector GradedMap::apply(const Vector& v) const {
  if (!same_module(v.module(), source_)) {
    throw Error(Errc::ModuleMismatch, "vector is not in the source module");
  }
  Vector out(target_);
  for (const auto& [j, c] : v.terms()) {
    auto it = columns_.find(j);
    if (it != columns_.end()) out.axpy(c, it->second);
  }
  return out;
}

GradedMap GradedMap::compose(const GradedMap& g) const {
  if (!same_module(source_, g.target_)) {
    throw Error(Errc::CompositionMismatch, "source of f differs from target of g");
  }
  GradedMap out(g.source_, target_, degree_ + g.degree_);
  for (const auto& [j, col] : g.columns_) {
    Vector image = apply(col);
    if (!image.is_zero()) out.columns_.emplace(j, std::move(image));
  }
  return out;
}

void GradedMap::check_compatible(const GradedMap& other) const {
  if (!same_module(source_, other.source_) || !same_module(target_, other.target_)) {
    throw Error(Errc::ModuleMismatch, "maps have different source or target");
  }
  if (degree_ != other.degree_) {
    throw Error(Errc::DegreeMismatch, "maps of degree " + std::to_string(degree_) + " and " +
                                          std::to_string(other.degree_));
  }
}

GradedMap& GradedMap::operator+=(const GradedMap& rhs) {
  check_compatible(rhs);
  for (const auto& [j, col] : rhs.columns_) {
    auto it = columns_.try_emplace(j, target_).first;
    it->second += col;
    if (it->second.is_zero()) columns_.erase(it);
  }
  return *this;
}

GradedMap& GradedMap::operator-=(const GradedMap& rhs) {
  check_compatible(rhs);
  for (const auto& [j, col] : rhs.columns_) {
    auto it = columns_.try_emplace(j, target_).first;
    it->second -= col;
    if (it->second.is_zero()) columns_.erase(it);
  }
  return *this;
}

GradedMap GradedMap::scaled(const Scalar& c) const {
  GradedMap out(source_, target_, degree_);
  if (c.is_zero()) return out;
  for (const auto& [j, col] : columns_) out.columns_.emplace(j, col.scaled(c));
  return out;
}

GradedMap GradedMap::operator-() const { return scaled(-Scalar::one(field())); }

std::set<int> GradedMap::block_support() const {
  std::set<int> out;
  for (const auto& [j, col] : columns_) out.insert(source_->degree(j));
  return out;
}

std::string GradedMap::to_string() const {
  if (columns_.empty()) return "0";
  std::string out;
  for (const auto& [j, col] : columns_) {
    const std::string& src = source_->element(j).name;
    for (const auto& [i, c] : col.terms()) {
      append_term(out, c, target_->element(i).name + " d/d " + src);
    }
  }
  return out;
}

bool operator==(const GradedMap& a, const GradedMap& b) {
  if (a.degree_ != b.degree_) return false;
  if (!same_module(a.source_, b.source_) || !same_module(a.target_, b.target_)) return false;
  return a.columns_ == b.columns_;
}

bool is_differential(const GradedMap& d) {
  if (!d.is_endomorphism()) throw Error(Errc::NotEndomorphism, "differential must be an endomorphism");
  if (d.degree() != 1 && d.degree() != -1) {
    throw Error(Errc::BadDegree, "differential must have degree +1 or -1, got " +
                                     std::to_string(d.degree()));
  }
  return d.compose(d).is_zero();
}

}  // namespace dgm
