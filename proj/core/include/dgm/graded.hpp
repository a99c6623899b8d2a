#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dgm/scalar.hpp"

namespace dgm {

struct BasisElement {
  std::string name;
  int degree = 0;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// A finite graded k-module with an ordered, named, degree-tagged basis.
/// Declaration order is the canonical order for every deterministic output.
class GradedModule {
 public:
  /// Throws DuplicateName on repeated basis names.
  GradedModule(std::string name, FieldSpec field, std::vector<BasisElement> basis);

  const std::string& name() const noexcept { return name_; }
  const FieldSpec& field() const noexcept { return field_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<BasisElement>& basis() const noexcept { return basis_; }
  const BasisElement& element(std::size_t index) const { return basis_.at(index); }
  int degree(std::size_t index) const { return basis_.at(index).degree; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws UnknownBasisName.
  std::size_t index_of(std::string_view name) const;

  /// Basis names of degree exactly p, in declaration order.
  std::vector<std::string> degree_component(int p) const;
  std::vector<std::size_t> component_indices(int p) const;
  /// Distinct degrees that occur, ascending.
  std::vector<int> degrees() const;

  friend bool operator==(const GradedModule& a, const GradedModule& b) {
    return a.name_ == b.name_ && a.field_ == b.field_ && a.basis_ == b.basis_;
  }

 private:
  std::string name_;
  FieldSpec field_;
  std::vector<BasisElement> basis_;
  std::unordered_map<std::string, std::size_t> index_;
};

using ModulePtr = std::shared_ptr<const GradedModule>;

ModulePtr make_module(std::string name, FieldSpec field, std::vector<BasisElement> basis);

/// Pointer identity or structural equality.
bool same_module(const ModulePtr& a, const ModulePtr& b);

/// Sparse vector in a graded module. Zero coefficients are never stored, so
/// equality of vectors is equality of the stored maps.
class Vector {
 public:
  using Terms = std::map<std::size_t, Scalar>;

  explicit Vector(ModulePtr module);
  static Vector basis(ModulePtr module, std::size_t index, Scalar coeff);
  static Vector basis(ModulePtr module, std::string_view name, Scalar coeff);

  const ModulePtr& module() const noexcept { return module_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coefficient(std::size_t index) const;

  /// Common degree when homogeneous, std::nullopt when mixed.
  /// Throws ZeroVectorHasNoDegree on the zero vector.
  std::optional<int> degree() const;

  /// Adds c * x_index in place.
  void add_term(std::size_t index, const Scalar& c);
  /// this += c * other
  void axpy(const Scalar& c, const Vector& other);

  Vector& operator+=(const Vector& rhs);
  Vector& operator-=(const Vector& rhs);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  Vector scaled(const Scalar& c) const;
  Vector operator-() const;

  friend bool operator==(const Vector& a, const Vector& b);

  /// `2*x1 - x3`, `0` for the zero vector.
  std::string to_string() const;

 private:
  void check_module(const Vector& other) const;

  ModulePtr module_;
  Terms terms_;
};

/// Appends `c*name` to a linear-combination rendering with sign handling.
void append_term(std::string& out, const Scalar& c, std::string_view name);

}  // namespace dgm
