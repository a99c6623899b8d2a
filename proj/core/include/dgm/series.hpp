#pragma once

#include <span>
#include <vector>

#include "dgm/gmap.hpp"

namespace dgm {

/// Truncated power series m_0 + t m_1 + ... + t^N m_N with coefficients in the
/// graded endomorphisms of one module, all of a common degree.
class MapSeries {
 public:
  /// Zero series of the given map degree through order N.
  MapSeries(ModulePtr module, int degree, int order);
  /// Takes the coefficient list m_0..m_N. Throws ModuleMismatch or DegreeMismatch.
  explicit MapSeries(std::vector<GradedMap> coeffs);

  static MapSeries identity(const ModulePtr& module, int order);
  /// d + t d_1 + t^2 d_2 + ..., with lifts beyond the order dropped.
  static MapSeries deformation(const GradedMap& d, std::span<const GradedMap> lifts, int order);

  const ModulePtr& module() const noexcept { return module_; }
  int degree() const noexcept { return degree_; }
  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const GradedMap& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::vector<GradedMap>& coeffs() const noexcept { return coeffs_; }
  void set_coeff(int i, GradedMap m);

  /// True when coefficients from..to (inclusive) are all zero.
  bool is_zero_between(int from, int to) const;

  friend bool operator==(const MapSeries& a, const MapSeries& b) {
    return a.degree_ == b.degree_ && same_module(a.module_, b.module_) && a.coeffs_ == b.coeffs_;
  }

 private:
  ModulePtr module_;
  int degree_;
  std::vector<GradedMap> coeffs_;
};

/// Truncated Cauchy product: (ab)_k = Σ_{i+j=k} a_i ∘ b_j.
/// Throws TruncationMismatch on differing orders.
MapSeries series_mul(const MapSeries& a, const MapSeries& b);

/// Two-sided inverse of a series with constant term Id.
/// Throws ConstantTermNotIdentity.
MapSeries series_inverse(const MapSeries& a);

/// φ_t ∘ d_t ∘ φ_t^{-1}.
MapSeries gauge_transform(const MapSeries& d_t, const MapSeries& phi_t);

/// d_t ∘ d_t vanishes through the truncation order.
bool squares_to_zero(const MapSeries& d_t);

}  // namespace dgm
