#include "dgm/family.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "dgm/error.hpp"

namespace dgm::family {

std::string_view variant_name(Variant v) noexcept {
  switch (v) {
    case Variant::Polynomial: return "polynomial";
    case Variant::Obstructed: return "obstructed";
    case Variant::Linear: return "linear";
    case Variant::Infinite: return "infinite";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view name) noexcept {
  for (Variant v : {Variant::Polynomial, Variant::Obstructed, Variant::Linear, Variant::Infinite}) {
    if (variant_name(v) == name) return v;
  }
  return std::nullopt;
}

int minimal_truncation(int n, Variant v) noexcept {
  if (v == Variant::Linear) return 4;
  // Highest index touched is x_{6n} (degree 3n); one degree of headroom.
  return 3 * n + 1;
}

FamilySpec make_spec(int n, Variant v, std::optional<int> truncation, FieldSpec field) {
  if (v == Variant::Polynomial && n < 2) {
    throw Error(Errc::InvalidFamily, "the polynomial variant needs n >= 2 (use linear for n = 1)");
  }
  if (n < 1) throw Error(Errc::InvalidFamily, "n must be at least 1");
  const int minimum = minimal_truncation(n, v);
  const int p = truncation.value_or(minimum);
  if (p < minimum) {
    throw Error(Errc::TruncationTooSmall, "truncation " + std::to_string(p) + " is below the minimum " +
                                              std::to_string(minimum) + " for this variant");
  }
  return FamilySpec{n, v, p, field};
}

std::string basis_name(int index) { return "x" + std::to_string(index); }

std::optional<int> basis_index(std::string_view name) noexcept {
  if (name.size() < 2 || name.front() != 'x') return std::nullopt;
  int value = 0;
  const auto* first = name.data() + 1;
  const auto* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

DgModule base_complex(int truncation, FieldSpec field) {
  if (truncation < 1) throw Error(Errc::BadTruncation, "truncation degree must be at least 1");
  std::vector<BasisElement> basis;
  basis.reserve(static_cast<std::size_t>(2 * truncation));
  for (int k = 1; k <= 2 * truncation; ++k) basis.push_back({basis_name(k), (k + 1) / 2});
  ModulePtr v = make_module("V", field, std::move(basis));
  GradedMap d = GradedMap::zero(v, v, -1);
  for (int i = 1; 6 * i - 3 <= 2 * truncation; ++i) {
    d.add_entry(static_cast<std::size_t>(6 * i - 6), static_cast<std::size_t>(6 * i - 4),
                Scalar::one(field));
  }
  return DgModule(std::move(v), std::move(d));
}

GradedMap op(const DgModule& base, int i, int j, long c) {
  return GradedMap::elementary(base.module(), basis_name(i), basis_name(j),
                               Scalar::make(base.field(), c));
}

GradedMap closed_form_lift(const DgModule& base, int n, int k) {
  const ModulePtr& v = base.module();
  GradedMap out = GradedMap::zero(v, v, -1);
  const int top = static_cast<int>(v->dimension());
  if (k == 1) {
    out += op(base, 1, 4);
    for (int i = 1; (n == 0 || i <= n - 1) && 6 * i <= top; ++i) out += op(base, 6 * i - 2, 6 * i);
    return out;
  }
  out += op(base, 6 * k - 9, 6 * k - 6, -1);
  if (n != k) out += op(base, 6 * k - 5, 6 * k - 2);
  return out;
}

std::vector<GradedMap> infinite_cocycles(const DgModule& base, int order) {
  std::vector<GradedMap> out;
  for (int k = 2; k <= order; ++k) out.push_back(op(base, 6 * k - 5, 6 * k - 2));
  return out;
}

std::vector<GradedMap> lifts(const FamilySpec& spec, const DgModule& base) {
  const int n = spec.n;
  std::vector<GradedMap> out;
  switch (spec.variant) {
    case Variant::Polynomial:
      for (int k = 1; k <= n; ++k) out.push_back(closed_form_lift(base, n, k));
      break;
    case Variant::Obstructed:
      if (n == 1) {
        out.push_back(op(base, 4, 6) + op(base, 6, 8));
        break;
      }
      out.push_back(closed_form_lift(base, n, 1));
      for (int k = 2; k < n; ++k) out.push_back(closed_form_lift(base, n, k));
      out.push_back(op(base, 6 * n - 9, 6 * n - 6, -1) + op(base, 6 * n - 6, 6 * n - 4));
      break;
    case Variant::Linear:
      out.push_back(op(base, 4, 6));
      break;
    case Variant::Infinite: {
      const auto strategy =
          LiftStrategy::with_cocycles(closed_form_lift(base, 0, 1), infinite_cocycles(base, n));
      DeformationReport report = deform_to_order(base, strategy, n);
      if (report.status != DeformationReport::Status::Extended) {
        throw std::logic_error("infinite variant failed to extend:\n" + report.to_string());
      }
      out = std::move(report.lifts);
      break;
    }
  }
  return out;
}

bool VerificationReport::passed() const {
  for (const auto& c : clauses) {
    if (!c.passed) return false;
  }
  return !clauses.empty();
}

void VerificationReport::add(std::string name, bool passed, std::string detail) {
  clauses.push_back({std::move(name), passed, std::move(detail)});
}

std::string VerificationReport::to_string() const {
  std::ostringstream os;
  os << "== " << title << "\n";
  for (const auto& c : clauses) {
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  for (const auto& note : notes) os << "note: " << note << "\n";
  os << "result: " << (passed() ? "verified" : "FAILED") << "\n";
  return os.str();
}

namespace {

std::string title_for(std::string_view what, int n, const DgModule& base, std::string_view symbol = "n") {
  std::ostringstream os;
  os << what << ", " << symbol << "=" << n << ", field " << base.field().to_string() << ", truncation P="
     << base.module()->degrees().back();
  return os.str();
}

bool all_true(const std::vector<bool>& v) {
  for (bool b : v) {
    if (!b) return false;
  }
  return true;
}

template <typename Pred>
bool all_columns(const GradedMap& f, Pred pred) {
  for (const auto& [j, col] : f.columns()) {
    const auto src = basis_index(f.source()->element(j).name);
    for (const auto& [i, c] : col.terms()) {
      const auto dst = basis_index(f.target()->element(i).name);
      if (!src || !dst || !pred(*dst, *src)) return false;
    }
  }
  return true;
}

void add_nontriviality(VerificationReport& r, const DgModule& base, const GradedMap& d1) {
  const SolveOutcome first = first_order_triviality(base, d1);
  if (first.is_solved()) {
    r.add("non-triviality", false,
          "delta(phi_1) = -d_1 is solvable: phi_1 = " + first.solution().to_string());
    return;
  }
  const bool at_x6 = first.witness().involves_source("x6");
  r.add("non-triviality", at_x6,
        "delta(phi_1) = -d_1 has no solution; witness " + first.witness().to_string());
}

}  // namespace

VerificationReport verify_polynomial_deformation(int n, std::optional<int> truncation, FieldSpec field) {
  const Variant variant = n == 1 ? Variant::Linear : Variant::Polynomial;
  const FamilySpec spec = make_spec(n, variant, truncation, field);
  const DgModule base = base_complex(spec.truncation, field);
  const std::vector<GradedMap> ds = lifts(spec, base);
  const HomComplex h(base);
  const ModulePtr& v = base.module();
  const GradedMap& d = base.differential();
  const GradedMap zero = GradedMap::zero(v, v, -1);

  VerificationReport r;
  r.title = title_for(n == 1 ? "non-trivial linear deformation" : "non-trivial polynomial deformation",
                      n, base);

  // Orders past n carry zero lifts; relations through 2n cover every
  // coefficient of d_t o d_t.
  std::vector<GradedMap> padded = ds;
  padded.resize(static_cast<std::size_t>(2 * n), zero);
  r.add("relations", all_true(check_relations(base, padded)),
        "delta(d_{k+1}) = O_k for k = 0.." + std::to_string(2 * n - 1));

  const MapSeries dt = MapSeries::deformation(d, ds, 2 * n);
  r.add("square-zero", squares_to_zero(dt),
        "d_t o d_t = 0 through t^" + std::to_string(2 * n));

  r.add("polynomial order", !ds.back().is_zero() && static_cast<int>(ds.size()) == n,
        "d_" + std::to_string(n) + " = " + ds.back().to_string() + ", d_i = 0 for i > " +
            std::to_string(n));

  if (n >= 2) {
    const Cochain o1 = obstruction(base, std::span(ds).first(1));
    const bool formula = o1.map() == op(base, 1, 6, -1);
    const SolveOutcome pre = h.solve_coboundary(o1);
    const bool cobounds = pre.is_solved() && h.coboundary(pre.solution()) == o1;
    r.add("primary obstruction", formula && cobounds,
          "O_1 = " + o1.to_string() +
              (pre.is_solved() ? ", delta(" + pre.solution().to_string() + ") = O_1" : ", no preimage"));

    bool formula_ok = true;
    bool product_ok = true;
    for (int k = 2; k <= n; ++k) {
      const auto k_idx = static_cast<std::size_t>(k);
      const Cochain ok = obstruction(base, std::span(ds).first(k_idx));
      const GradedMap expected = k < n ? op(base, 6 * k - 5, 6 * k, -1) : GradedMap::zero(v, v, -2);
      formula_ok = formula_ok && ok.map() == expected;
      product_ok = product_ok && ok.map() == -ds[k_idx - 1].compose(ds[0]);
    }
    r.add("higher obstructions", formula_ok && product_ok,
          "O_k = -d_k d_1 = -x_{6k-5} d/d x_{6k} for 2 <= k < n, O_n = 0");

    if (n >= 3) {
      bool plus = true;
      bool minus = true;
      for (int k = 2; k < n; ++k) {
        const auto k_idx = static_cast<std::size_t>(k);
        const Cochain ok = obstruction(base, std::span(ds).first(k_idx));
        plus = plus && h.coboundary(Cochain(1, ds[k_idx])) == ok;
        minus = minus && h.coboundary(Cochain(1, -ds[k_idx])) == ok;
      }
      r.add("realized sign", plus,
            std::string("delta(+d_{k+1}) = O_k for 2 <= k < n; delta(-d_{k+1}) = O_k ") +
                (minus ? "also holds (characteristic 2)" : "does not hold"));
    }
  }

  bool sources_even = true;
  bool images_odd = true;
  bool products_vanish = true;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    sources_even = sources_even && all_columns(ds[i], [](int, int src) { return src % 2 == 0; });
    if (i >= 1) {
      images_odd = images_odd && all_columns(ds[i], [](int dst, int) { return dst % 2 == 1; });
      products_vanish = products_vanish && ds[0].compose(ds[i]).is_zero() && ds[i].compose(d).is_zero();
      for (std::size_t j = 1; j < ds.size(); ++j) {
        products_vanish = products_vanish && ds[i].compose(ds[j]).is_zero();
      }
    }
  }
  const bool d_parity = all_columns(d, [](int dst, int src) { return src % 2 == 1 && dst % 2 == 1; });
  r.add("support separation", sources_even && images_odd && products_vanish && d_parity,
        "d_i supported on even indices, d_k (k >= 2) valued in odd indices; d_i d_j = d_1 d_k = d_k d = 0");

  add_nontriviality(r, base, ds[0]);
  return r;
}

VerificationReport verify_obstructed_approximation(int n, std::optional<int> truncation, FieldSpec field) {
  const FamilySpec spec = make_spec(n, Variant::Obstructed, truncation, field);
  const DgModule base = base_complex(spec.truncation, field);
  const std::vector<GradedMap> ds = lifts(spec, base);
  const HomComplex h(base);

  VerificationReport r;
  r.title = title_for("approximation obstructed at order n", n, base);

  const auto relations = check_relations(base, ds);
  r.add("relations", all_true(relations),
        "delta(d_{k+1}) = O_k for k = 0.." + std::to_string(n - 1) +
            (n >= 2 ? ", including delta(d_n) = O_{n-1}" : ""));

  const Cochain on = obstruction(base, ds);
  const GradedMap expected = n == 1 ? op(base, 4, 8, -1) : op(base, 6 * n - 8, 6 * n - 4, -1);
  r.add("obstruction", on.map() == expected, "O_" + std::to_string(n) + " = " + on.to_string());

  const SolveOutcome solved = h.solve_coboundary(on);
  r.add("does not cobound", !solved.is_solved(),
        solved.is_solved() ? "preimage " + solved.solution().to_string()
                           : "witness " + solved.witness().to_string());

  const auto degree = noncobounding_degree(base.differential(), on);
  r.add("degree-support certificate", degree.has_value() && *degree == (n == 1 ? 4 : 3 * n - 2),
        degree ? "O_n lives on V_" + std::to_string(*degree) + " -> V_" + std::to_string(*degree - 2) +
                     " where every delta(f) vanishes"
               : "no certificate");

  const DeformationReport stepped = deform_to_order(base, LiftStrategy::given(ds), n + 1);
  r.add("stepper", stepped.status == DeformationReport::Status::Obstructed && stepped.order == n,
        "deform_to_order stops: obstructed at order " + std::to_string(stepped.order));
  return r;
}

VerificationReport verify_infinite_deformation(int truncation, int order, FieldSpec field) {
  if (order < 1) throw Error(Errc::InvalidFamily, "order must be at least 1");
  if (truncation < 3 * order + 3) {
    throw Error(Errc::TruncationTooSmall, "truncation " + std::to_string(truncation) +
                                              " is below 3N+3 = " + std::to_string(3 * order + 3));
  }
  const DgModule base = base_complex(truncation, field);
  const GradedMap d1 = closed_form_lift(base, 0, 1);

  VerificationReport r;
  r.title = title_for("deformation with nonzero terms of all orders", order, base, "N");

  const auto strategy = LiftStrategy::with_cocycles(d1, infinite_cocycles(base, order));
  const DeformationReport report = deform_to_order(base, strategy, order);
  const bool extended = report.status == DeformationReport::Status::Extended && report.order == order;
  r.add("stepper", extended, "extended to order " + std::to_string(report.order));
  if (!extended) return r;

  bool nonzero = true;
  for (const auto& dk : report.lifts) nonzero = nonzero && !dk.is_zero();
  r.add("nonzero terms", nonzero, "d_1..d_" + std::to_string(order) + " all nonzero");

  r.add("relations", all_true(check_relations(base, report.lifts)),
        "delta(d_{k+1}) = O_k for k = 0.." + std::to_string(order - 1));

  const MapSeries dt = MapSeries::deformation(base.differential(), report.lifts, order);
  r.add("square-zero", squares_to_zero(dt), "d_t o d_t = 0 through t^" + std::to_string(order));

  bool closed = true;
  for (int k = 2; k <= order; ++k) {
    closed = closed && report.lifts[static_cast<std::size_t>(k - 1)] == closed_form_lift(base, 0, k);
  }
  r.add("closed form", closed,
        "d_k = -x_{6k-9} d/d x_{6k-6} + x_{6k-5} d/d x_{6k-2} for 2 <= k <= N");

  const DeformationReport canonical = deform_to_order(base, LiftStrategy::canonical(d1), order);
  int nonzero_canonical = 0;
  for (const auto& dk : canonical.lifts) nonzero_canonical += dk.is_zero() ? 0 : 1;
  r.notes.push_back("canonical lifts alone give " + std::to_string(nonzero_canonical) + " nonzero of " +
                    std::to_string(canonical.lifts.size()) +
                    " terms; the cocycles x_{6k-5} d/d x_{6k-2} keep every order nonzero");

  add_nontriviality(r, base, d1);
  return r;
}

}  // namespace dgm::family
