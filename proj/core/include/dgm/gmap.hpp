#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include "dgm/graded.hpp"

namespace dgm {

/// A degree-homogeneous linear map, stored column-wise: source basis index ->
/// image vector. In elementary-operator coordinates the entry (i, j) is the
/// coefficient of x_i d/d x_j.
class GradedMap {
 public:
  using Columns = std::map<std::size_t, Vector>;

  /// The zero map of the given degree.
  GradedMap(ModulePtr source, ModulePtr target, int degree);

  static GradedMap zero(ModulePtr source, ModulePtr target, int degree) {
    return GradedMap(std::move(source), std::move(target), degree);
  }
  static GradedMap identity(const ModulePtr& module);

  /// c * x_i d/d x_j: sends x_j to c*x_i and every other basis element to 0.
  /// Throws UnknownBasisName or ZeroCoefficient.
  static GradedMap elementary(const ModulePtr& source, const ModulePtr& target,
                              std::string_view i, std::string_view j, const Scalar& c);
  static GradedMap elementary(const ModulePtr& module, std::string_view i, std::string_view j,
                              const Scalar& c) {
    return elementary(module, module, i, j, c);
  }
  static GradedMap elementary_at(const ModulePtr& source, const ModulePtr& target,
                                 std::size_t target_index, std::size_t source_index,
                                 const Scalar& c);

  const ModulePtr& source() const noexcept { return source_; }
  const ModulePtr& target() const noexcept { return target_; }
  int degree() const noexcept { return degree_; }
  const FieldSpec& field() const noexcept { return source_->field(); }
  const Columns& columns() const noexcept { return columns_; }
  bool is_zero() const noexcept { return columns_.empty(); }
  bool is_endomorphism() const { return same_module(source_, target_); }
  std::size_t term_count() const;

  /// Coefficient of x_i d/d x_j.
  Scalar entry(std::size_t target_index, std::size_t source_index) const;
  /// Adds c * x_i d/d x_j. Throws DegreeMismatch when |x_i| != |x_j| + degree.
  void add_entry(std::size_t target_index, std::size_t source_index, const Scalar& c);

  Vector apply(const Vector& v) const;
  Vector apply_basis(std::size_t source_index) const;

  /// this ∘ g. Throws CompositionMismatch unless source(this) = target(g).
  GradedMap compose(const GradedMap& g) const;

  GradedMap& operator+=(const GradedMap& rhs);
  GradedMap& operator-=(const GradedMap& rhs);
  friend GradedMap operator+(GradedMap a, const GradedMap& b) { return a += b; }
  friend GradedMap operator-(GradedMap a, const GradedMap& b) { return a -= b; }
  GradedMap scaled(const Scalar& c) const;
  GradedMap operator-() const;

  /// Source degrees p for which some column x_j with |x_j| = p is nonzero.
  std::set<int> block_support() const;

  /// Terms `c*x_i d/d x_j` ordered by (source index, target index); `0` when empty.
  std::string to_string() const;

  friend bool operator==(const GradedMap& a, const GradedMap& b);

 private:
  void check_compatible(const GradedMap& other) const;

  ModulePtr source_;
  ModulePtr target_;
  int degree_;
  Columns columns_;
};

inline GradedMap compose(const GradedMap& f, const GradedMap& g) { return f.compose(g); }

/// d² = 0 for an endomorphism of degree ±1.
/// Throws NotEndomorphism or BadDegree when d is not of that shape.
bool is_differential(const GradedMap& d);

}  // namespace dgm
