#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "dgm/cochain.hpp"
#include "dgm/series.hpp"

namespace dgm {

// Deformations d_t = d + t d_1 + t^2 d_2 + ... of a complex (V, d). Every d_i
// is a 1-cochain (degree -1 endomorphism of V).

/// O_n = -Σ_{i=1..n} d_i ∘ d_{n-i+1} with n = lifts.size(); O_0 = 0.
/// Throws DegreeMismatch when a lift is not a 1-cochain on V.
Cochain obstruction(const DgModule& v, std::span<const GradedMap> lifts);

/// Entry k (0 <= k < lifts.size()) is whether δ(d_{k+1}) = O_k.
std::vector<bool> check_relations(const DgModule& v, std::span<const GradedMap> lifts);

struct NextLift {
  GradedMap lift;
};

struct Obstructed {
  Cochain obstruction;
  Witness witness;  ///< witness.support_degree is set when the degree-support certificate fires
};

using StepResult = std::variant<NextLift, Obstructed>;

/// Solves δ(d_{n+1}) = O_n for n = lifts.size() with the canonical
/// particular solution, plus `cocycle` when given.
/// Throws RelationsViolated if the lifts fail a lower relation, NotACocycle
/// if `cocycle` is not a 1-cocycle.
StepResult extend_step(const DgModule& v, std::span<const GradedMap> lifts,
                       const GradedMap* cocycle = nullptr);

/// How deform_to_order picks d_2, d_3, ...
class LiftStrategy {
 public:
  enum class Kind {
    Canonical,      ///< free variables zero in the canonical cochain basis
    Given,          ///< a supplied list d_1..d_m, validated; canonical beyond m
    WithCocycles,   ///< canonical particular solution plus a supplied 1-cocycle per order
  };

  static LiftStrategy canonical(GradedMap infinitesimal);
  static LiftStrategy given(std::vector<GradedMap> lifts);
  /// cocycles[k] is added to the canonical lift d_{k+2}; orders past the list use none.
  static LiftStrategy with_cocycles(GradedMap infinitesimal, std::vector<GradedMap> cocycles);

  Kind kind() const noexcept { return kind_; }
  const GradedMap& infinitesimal() const { return maps_.front(); }
  const std::vector<GradedMap>& maps() const noexcept { return maps_; }
  const std::vector<GradedMap>& cocycles() const noexcept { return cocycles_; }
  std::string describe() const;

 private:
  LiftStrategy(Kind kind, std::vector<GradedMap> maps, std::vector<GradedMap> cocycles);

  Kind kind_;
  std::vector<GradedMap> maps_;
  std::vector<GradedMap> cocycles_;
};

struct DeformationReport {
  enum class Status {
    Extended,        ///< d_1..d_N satisfy relations 0..N-1
    Obstructed,      ///< O_order does not cobound for the chosen lifts
    RelationFailed,  ///< a supplied lift violates relation `order`
  };

  Status status = Status::Extended;
  int order = 0;
  std::vector<GradedMap> lifts;
  std::vector<bool> relation_checks;
  std::optional<Cochain> obstruction;
  std::optional<Witness> witness;
  std::string strategy;

  /// Line-oriented rendering used by the CLI.
  std::string to_string() const;
};

/// Inductive extension of d + t d_1 to order N, stopping at the first
/// obstruction. Throws InfinitesimalNotCocycle when δ(d_1) != 0.
DeformationReport deform_to_order(const DgModule& v, const LiftStrategy& strategy, int order);

/// Solves δ(φ_1) = -d_1 in C^0. Throws InfinitesimalNotCocycle.
SolveOutcome first_order_triviality(const DgModule& v, const GradedMap& d1);

struct TrivializationReport {
  enum class Status { Trivialized, Stuck };

  TrivializationReport(MapSeries gauge_series, MapSeries transformed)
      : gauge(std::move(gauge_series)), result(std::move(transformed)) {}

  Status status = Status::Trivialized;
  /// Truncation order when trivialized; the first order r that could not be killed otherwise.
  int order = 0;
  std::vector<GradedMap> gauges;  ///< φ_1, φ_2, ... in C^0
  MapSeries gauge;                ///< (Id - t^r φ_r) ∘ ... ∘ (Id - t φ_1)
  MapSeries result;               ///< gauge ∘ d_t ∘ gauge^{-1}
  std::optional<Cochain> unsolved;
  std::optional<Witness> witness;
  /// Only failures at order 1 certify non-triviality.
  bool definitive_nontriviality = false;

  std::string to_string() const;
};

/// Gauges away the coefficients of d_t one order at a time: at stage r solve
/// δ(φ_r) = -d_r^{(r-1)} and conjugate by Id - t^r φ_r.
/// Throws NotSquareZero when d_t ∘ d_t != 0 through `order`, TruncationMismatch
/// when `order` exceeds the series truncation.
TrivializationReport trivialize(const MapSeries& d_t, int order);

}  // namespace dgm
