#include "dgm/graded.hpp"

#include <algorithm>
#include <set>

#include "dgm/error.hpp"

namespace dgm {

GradedModule::GradedModule(std::string name, FieldSpec field, std::vector<BasisElement> basis)
    : name_(std::move(name)), field_(field), basis_(std::move(basis)) {
  index_.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (!index_.emplace(basis_[i].name, i).second) {
      throw Error(Errc::DuplicateName, "duplicate basis name '" + basis_[i].name + "'");
    }
  }
}

std::optional<std::size_t> GradedModule::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GradedModule::index_of(std::string_view name) const {
  if (auto idx = find(name)) return *idx;
  throw Error(Errc::UnknownBasisName,
              "unknown basis name '" + std::string(name) + "' in module " + name_);
}

std::vector<std::string> GradedModule::degree_component(int p) const {
  std::vector<std::string> out;
  for (const auto& e : basis_) {
    if (e.degree == p) out.push_back(e.name);
  }
  return out;
}

std::vector<std::size_t> GradedModule::component_indices(int p) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].degree == p) out.push_back(i);
  }
  return out;
}

std::vector<int> GradedModule::degrees() const {
  std::set<int> seen;
  for (const auto& e : basis_) seen.insert(e.degree);
  return {seen.begin(), seen.end()};
}

ModulePtr make_module(std::string name, FieldSpec field, std::vector<BasisElement> basis) {
  return std::make_shared<const GradedModule>(std::move(name), field, std::move(basis));
}

bool same_module(const ModulePtr& a, const ModulePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

Vector::Vector(ModulePtr module) : module_(std::move(module)) {}

Vector Vector::basis(ModulePtr module, std::size_t index, Scalar coeff) {
  if (index >= module->dimension()) {
    throw Error(Errc::UnknownBasisName, "basis index out of range");
  }
  Vector v(std::move(module));
  v.add_term(index, coeff);
  return v;
}

Vector Vector::basis(ModulePtr module, std::string_view name, Scalar coeff) {
  const std::size_t index = module->index_of(name);
  return basis(std::move(module), index, std::move(coeff));
}

Scalar Vector::coefficient(std::size_t index) const {
  auto it = terms_.find(index);
  if (it == terms_.end()) return Scalar::zero(module_->field());
  return it->second;
}

std::optional<int> Vector::degree() const {
  if (terms_.empty()) throw Error(Errc::ZeroVectorHasNoDegree, "zero vector has no degree");
  const int first = module_->degree(terms_.begin()->first);
  for (const auto& [index, c] : terms_) {
    if (module_->degree(index) != first) return std::nullopt;
  }
  return first;
}

void Vector::add_term(std::size_t index, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Vector::axpy(const Scalar& c, const Vector& other) {
  check_module(other);
  if (c.is_zero()) return;
  for (const auto& [index, coeff] : other.terms_) add_term(index, c * coeff);
}

void Vector::check_module(const Vector& other) const {
  if (!same_module(module_, other.module_)) {
    throw Error(Errc::ModuleMismatch, "vectors live in different modules");
  }
}

Vector& Vector::operator+=(const Vector& rhs) {
  check_module(rhs);
  for (const auto& [index, c] : rhs.terms_) add_term(index, c);
  return *this;
}

Vector& Vector::operator-=(const Vector& rhs) {
  check_module(rhs);
  for (const auto& [index, c] : rhs.terms_) add_term(index, -c);
  return *this;
}

Vector Vector::scaled(const Scalar& c) const {
  Vector out(module_);
  if (c.is_zero()) return out;
  for (const auto& [index, coeff] : terms_) out.terms_.emplace(index, coeff * c);
  return out;
}

Vector Vector::operator-() const { return scaled(-Scalar::one(module_->field())); }

bool operator==(const Vector& a, const Vector& b) {
  return same_module(a.module_, b.module_) && a.terms_ == b.terms_;
}

void append_term(std::string& out, const Scalar& c, std::string_view name) {
  const auto s = c.split_sign();
  if (out.empty()) {
    if (s.negative) out += "-";
  } else {
    out += s.negative ? " - " : " + ";
  }
  if (!s.unit) {
    out += s.magnitude;
    out += "*";
  }
  out += name;
}

std::string Vector::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [index, c] : terms_) append_term(out, c, module_->element(index).name);
  return out;
}

}  // namespace dgm
