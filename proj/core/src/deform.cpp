#include "dgm/deform.hpp"

#include <sstream>
#include <stdexcept>

#include "dgm/error.hpp"

namespace dgm {

namespace {

void check_lift(const DgModule& v, const GradedMap& m, std::size_t order) {
  if (!same_module(m.source(), v.module()) || !same_module(m.target(), v.module()) ||
      m.degree() != -1) {
    throw Error(Errc::DegreeMismatch,
                "d_" + std::to_string(order) + " must be a degree -1 endomorphism of " +
                    v.module()->name());
  }
}

void check_lifts(const DgModule& v, std::span<const GradedMap> lifts) {
  for (std::size_t i = 0; i < lifts.size(); ++i) check_lift(v, lifts[i], i + 1);
}

Cochain obstruction_unchecked(const DgModule& v, std::span<const GradedMap> lifts) {
  const std::size_t n = lifts.size();
  GradedMap acc = GradedMap::zero(v.module(), v.module(), -2);
  for (std::size_t i = 1; i <= n; ++i) {
    const GradedMap& left = lifts[i - 1];
    const GradedMap& right = lifts[n - i];
    if (left.is_zero() || right.is_zero()) continue;
    acc -= left.compose(right);
  }
  return Cochain(2, std::move(acc));
}

// Lifts are assumed to satisfy relations 0..n-1.
StepResult extend_unchecked(const HomComplex& h, std::span<const GradedMap> lifts,
                            const GradedMap* cocycle) {
  const DgModule& v = h.source();
  Cochain o = obstruction_unchecked(v, lifts);
  SolveOutcome solved = h.solve_coboundary(o);
  if (!solved.is_solved()) return Obstructed{std::move(o), solved.witness()};
  GradedMap lift = solved.solution().map();
  if (cocycle != nullptr) lift += *cocycle;
  return NextLift{std::move(lift)};
}

}  // namespace

Cochain obstruction(const DgModule& v, std::span<const GradedMap> lifts) {
  check_lifts(v, lifts);
  return obstruction_unchecked(v, lifts);
}

std::vector<bool> check_relations(const DgModule& v, std::span<const GradedMap> lifts) {
  check_lifts(v, lifts);
  const HomComplex h(v);
  std::vector<bool> out;
  out.reserve(lifts.size());
  for (std::size_t k = 0; k < lifts.size(); ++k) {
    const Cochain lhs = h.coboundary(Cochain(1, lifts[k]));
    out.push_back(lhs == obstruction_unchecked(v, lifts.first(k)));
  }
  return out;
}

StepResult extend_step(const DgModule& v, std::span<const GradedMap> lifts, const GradedMap* cocycle) {
  const auto relations = check_relations(v, lifts);
  for (std::size_t k = 0; k < relations.size(); ++k) {
    if (!relations[k]) {
      throw Error(Errc::RelationsViolated,
                  "relation " + std::to_string(k) + " fails: δ(d_" + std::to_string(k + 1) +
                      ") != O_" + std::to_string(k));
    }
  }
  const HomComplex h(v);
  if (cocycle != nullptr) {
    check_lift(v, *cocycle, lifts.size() + 1);
    if (!h.is_cocycle(Cochain(1, *cocycle))) {
      throw Error(Errc::NotACocycle, "cocycle added to d_" + std::to_string(lifts.size() + 1) +
                                         " is not a 1-cocycle");
    }
  }
  return extend_unchecked(h, lifts, cocycle);
}

LiftStrategy::LiftStrategy(Kind kind, std::vector<GradedMap> maps, std::vector<GradedMap> cocycles)
    : kind_(kind), maps_(std::move(maps)), cocycles_(std::move(cocycles)) {
  if (maps_.empty()) throw Error(Errc::InvalidArgument, "a deformation needs an infinitesimal d_1");
}

LiftStrategy LiftStrategy::canonical(GradedMap infinitesimal) {
  return LiftStrategy(Kind::Canonical, {std::move(infinitesimal)}, {});
}

LiftStrategy LiftStrategy::given(std::vector<GradedMap> lifts) {
  return LiftStrategy(Kind::Given, std::move(lifts), {});
}

LiftStrategy LiftStrategy::with_cocycles(GradedMap infinitesimal, std::vector<GradedMap> cocycles) {
  return LiftStrategy(Kind::WithCocycles, {std::move(infinitesimal)}, std::move(cocycles));
}

std::string LiftStrategy::describe() const {
  switch (kind_) {
    case Kind::Canonical:
      return "canonical";
    case Kind::Given:
      return "given d_1..d_" + std::to_string(maps_.size()) + ", canonical beyond";
    case Kind::WithCocycles:
      return "canonical plus supplied cocycles for d_2..d_" + std::to_string(cocycles_.size() + 1);
  }
  return {};
}

DeformationReport deform_to_order(const DgModule& v, const LiftStrategy& strategy, int order) {
  if (order < 1) throw Error(Errc::InvalidArgument, "deformation order must be at least 1");
  const auto target = static_cast<std::size_t>(order);
  const HomComplex h(v);
  DeformationReport report;
  report.strategy = strategy.describe();

  const GradedMap& d1 = strategy.infinitesimal();
  check_lift(v, d1, 1);
  if (!h.is_cocycle(Cochain(1, d1))) {
    throw Error(Errc::InfinitesimalNotCocycle, "d_1 is not a 1-cocycle");
  }
  report.lifts.push_back(d1);
  report.relation_checks.push_back(true);

  if (strategy.kind() == LiftStrategy::Kind::Given) {
    const auto& given = strategy.maps();
    for (std::size_t k = 1; k < given.size() && report.lifts.size() < target; ++k) {
      check_lift(v, given[k], k + 1);
      const Cochain o = obstruction_unchecked(v, report.lifts);
      const bool ok = h.coboundary(Cochain(1, given[k])) == o;
      report.lifts.push_back(given[k]);
      report.relation_checks.push_back(ok);
      if (!ok) {
        report.status = DeformationReport::Status::RelationFailed;
        report.order = static_cast<int>(k);
        report.obstruction = o;
        return report;
      }
    }
  }

  while (report.lifts.size() < target) {
    const GradedMap* cocycle = nullptr;
    const std::size_t next = report.lifts.size() + 1;  // order of the lift being built
    if (strategy.kind() == LiftStrategy::Kind::WithCocycles && next - 2 < strategy.cocycles().size()) {
      cocycle = &strategy.cocycles()[next - 2];
      check_lift(v, *cocycle, next);
      if (!h.is_cocycle(Cochain(1, *cocycle))) {
        throw Error(Errc::NotACocycle, "cocycle for d_" + std::to_string(next) + " is not a 1-cocycle");
      }
    }
    StepResult step = extend_unchecked(h, report.lifts, cocycle);
    if (auto* obstructed = std::get_if<Obstructed>(&step)) {
      report.status = DeformationReport::Status::Obstructed;
      report.order = static_cast<int>(report.lifts.size());
      report.obstruction = std::move(obstructed->obstruction);
      report.witness = std::move(obstructed->witness);
      return report;
    }
    report.lifts.push_back(std::move(std::get<NextLift>(step).lift));
    report.relation_checks.push_back(true);
  }
  report.status = DeformationReport::Status::Extended;
  report.order = order;
  return report;
}

std::string DeformationReport::to_string() const {
  std::ostringstream os;
  os << "lifts: " << strategy << "\n";
  for (std::size_t i = 0; i < lifts.size(); ++i) {
    os << "d_" << i + 1 << " = " << lifts[i].to_string() << "\n";
  }
  for (std::size_t k = 0; k < relation_checks.size(); ++k) {
    os << "relation " << k << ": " << (relation_checks[k] ? "ok" : "FAILED") << "\n";
  }
  switch (status) {
    case Status::Extended:
      os << "status: extended to order " << order << "\n";
      break;
    case Status::Obstructed:
      os << "O_" << order << " = " << obstruction->to_string() << "\n";
      os << "witness: " << witness->to_string() << "\n";
      os << "status: obstructed at order " << order << "\n";
      break;
    case Status::RelationFailed:
      os << "O_" << order << " = " << obstruction->to_string() << "\n";
      os << "status: relation " << order << " violated (delta(d_" << order + 1 << ") != O_" << order
         << ")\n";
      break;
  }
  return os.str();
}

SolveOutcome first_order_triviality(const DgModule& v, const GradedMap& d1) {
  check_lift(v, d1, 1);
  const HomComplex h(v);
  if (!h.is_cocycle(Cochain(1, d1))) {
    throw Error(Errc::InfinitesimalNotCocycle, "d_1 is not a 1-cocycle");
  }
  return h.solve_coboundary(Cochain(1, -d1));
}

TrivializationReport trivialize(const MapSeries& d_t, int order) {
  if (order < 0) throw Error(Errc::InvalidArgument, "negative trivialization order");
  if (order > d_t.order()) {
    throw Error(Errc::TruncationMismatch, "series is truncated at order " +
                                              std::to_string(d_t.order()) + " < " +
                                              std::to_string(order));
  }
  if (d_t.degree() != -1) throw Error(Errc::BadDegree, "d_t must have degree -1");
  std::vector<GradedMap> coeffs(d_t.coeffs().begin(), d_t.coeffs().begin() + order + 1);
  MapSeries current(std::move(coeffs));
  if (!squares_to_zero(current)) {
    throw Error(Errc::NotSquareZero, "d_t o d_t != 0 through order " + std::to_string(order));
  }
  const ModulePtr& module = current.module();
  const DgModule v(module, current.coeff(0));
  const HomComplex h(v);

  TrivializationReport report(MapSeries::identity(module, order), current);
  for (int r = 1; r <= order; ++r) {
    const GradedMap& c = current.coeff(r);
    if (c.is_zero()) {
      report.gauges.push_back(GradedMap::zero(module, module, 0));
      continue;
    }
    SolveOutcome solved = h.solve_coboundary(Cochain(1, -c));
    if (!solved.is_solved()) {
      report.status = TrivializationReport::Status::Stuck;
      report.order = r;
      report.unsolved = Cochain(1, c);
      report.witness = solved.witness();
      report.definitive_nontriviality = (r == 1);
      report.result = current;
      return report;
    }
    const GradedMap& phi = solved.solution().map();
    MapSeries factor = MapSeries::identity(module, order);
    factor.set_coeff(r, -phi);
    current = gauge_transform(current, factor);
    report.gauge = series_mul(factor, report.gauge);
    report.gauges.push_back(phi);
    if (!current.coeff(r).is_zero()) {
      throw std::logic_error("trivialize: gauge step left a nonzero coefficient");
    }
  }
  report.status = TrivializationReport::Status::Trivialized;
  report.order = order;
  report.result = current;
  return report;
}

std::string TrivializationReport::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < gauges.size(); ++i) {
    os << "phi_" << i + 1 << " = " << gauges[i].to_string() << "\n";
  }
  if (status == Status::Trivialized) {
    os << "status: trivialized through order " << order << "\n";
    return os.str();
  }
  os << "unsolved: d_" << order << " = " << unsolved->to_string() << "\n";
  os << "witness: " << witness->to_string() << "\n";
  os << "status: stuck at order " << order
     << (definitive_nontriviality ? " (definitive: not equivalent to the trivial deformation)"
                                  : " (not definitive: depends on the chosen gauges)")
     << "\n";
  return os.str();
}

}  // namespace dgm
