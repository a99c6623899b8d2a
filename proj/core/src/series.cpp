#include "dgm/series.hpp"

#include "dgm/error.hpp"

namespace dgm {

MapSeries::MapSeries(ModulePtr module, int degree, int order)
    : module_(std::move(module)), degree_(degree) {
  if (order < 0) throw Error(Errc::InvalidArgument, "negative truncation order");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, GradedMap::zero(module_, module_, degree_));
}

MapSeries::MapSeries(std::vector<GradedMap> coeffs) : degree_(0), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(Errc::InvalidArgument, "series needs a constant term");
  module_ = coeffs_.front().source();
  degree_ = coeffs_.front().degree();
  for (const auto& m : coeffs_) {
    if (!m.is_endomorphism() || !same_module(m.source(), module_)) {
      throw Error(Errc::ModuleMismatch, "series coefficients must be endomorphisms of one module");
    }
    if (m.degree() != degree_) throw Error(Errc::DegreeMismatch, "series coefficients differ in degree");
  }
}

MapSeries MapSeries::identity(const ModulePtr& module, int order) {
  MapSeries s(module, 0, order);
  s.coeffs_[0] = GradedMap::identity(module);
  return s;
}

MapSeries MapSeries::deformation(const GradedMap& d, std::span<const GradedMap> lifts, int order) {
  MapSeries s(d.source(), d.degree(), order);
  s.set_coeff(0, d);
  for (std::size_t i = 0; i < lifts.size() && static_cast<int>(i) + 1 <= order; ++i) {
    s.set_coeff(static_cast<int>(i) + 1, lifts[i]);
  }
  return s;
}

void MapSeries::set_coeff(int i, GradedMap m) {
  if (!same_module(m.source(), module_) || !same_module(m.target(), module_)) {
    throw Error(Errc::ModuleMismatch, "coefficient is not an endomorphism of the series module");
  }
  if (m.degree() != degree_) throw Error(Errc::DegreeMismatch, "coefficient has the wrong degree");
  coeffs_.at(static_cast<std::size_t>(i)) = std::move(m);
}

bool MapSeries::is_zero_between(int from, int to) const {
  for (int i = from; i <= to && i <= order(); ++i) {
    if (!coeff(i).is_zero()) return false;
  }
  return true;
}

MapSeries series_mul(const MapSeries& a, const MapSeries& b) {
  if (a.order() != b.order()) {
    throw Error(Errc::TruncationMismatch, "series truncated at orders " + std::to_string(a.order()) +
                                              " and " + std::to_string(b.order()));
  }
  if (!same_module(a.module(), b.module())) throw Error(Errc::ModuleMismatch, "series over different modules");
  MapSeries out(a.module(), a.degree() + b.degree(), a.order());
  for (int k = 0; k <= a.order(); ++k) {
    GradedMap acc = GradedMap::zero(a.module(), a.module(), out.degree());
    for (int i = 0; i <= k; ++i) {
      if (a.coeff(i).is_zero() || b.coeff(k - i).is_zero()) continue;
      acc += a.coeff(i).compose(b.coeff(k - i));
    }
    out.set_coeff(k, std::move(acc));
  }
  return out;
}

MapSeries series_inverse(const MapSeries& a) {
  if (a.degree() != 0 || !(a.coeff(0) == GradedMap::identity(a.module()))) {
    throw Error(Errc::ConstantTermNotIdentity, "series constant term is not the identity");
  }
  // b_0 = Id, b_k = -Σ_{i=1..k} a_i b_{k-i}
  MapSeries b = MapSeries::identity(a.module(), a.order());
  for (int k = 1; k <= a.order(); ++k) {
    GradedMap acc = GradedMap::zero(a.module(), a.module(), 0);
    for (int i = 1; i <= k; ++i) {
      if (a.coeff(i).is_zero() || b.coeff(k - i).is_zero()) continue;
      acc -= a.coeff(i).compose(b.coeff(k - i));
    }
    b.set_coeff(k, std::move(acc));
  }
  return b;
}

MapSeries gauge_transform(const MapSeries& d_t, const MapSeries& phi_t) {
  const MapSeries inverse = series_inverse(phi_t);
  return series_mul(series_mul(phi_t, d_t), inverse);
}

bool squares_to_zero(const MapSeries& d_t) {
  const MapSeries sq = series_mul(d_t, d_t);
  return sq.is_zero_between(0, sq.order());
}

}  // namespace dgm
