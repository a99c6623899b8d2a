// Runs the eight acceptance criteria and prints one pass/fail line for each.
// Exit status is 0 only when every criterion passes.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "dgm/cli.hpp"
#include "dgm/deform.hpp"
#include "dgm/dsl.hpp"
#include "dgm/family.hpp"
#include "dgm/linalg.hpp"
#include "oracle.hpp"
#include "random.hpp"

using namespace dgm;
using family::Variant;

namespace {

struct Result {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) detail = what;
    passed = passed && ok;
  }
};

const std::vector<FieldSpec> kFields = {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(5)};

// x_i d/d x_j with coefficient c, built by name so expected values do not go
// through the family generator.
GradedMap named(const DgModule& v, int i, int j, long c) {
  return GradedMap::elementary(v.module(), "x" + std::to_string(i), "x" + std::to_string(j),
                               Scalar::make(v.field(), c));
}

std::vector<GradedMap> family_lifts(int n, Variant variant, const DgModule& base) {
  const auto spec = family::make_spec(n, variant, base.module()->degrees().back(), base.field());
  return family::lifts(spec, base);
}

std::string tag(int n, const FieldSpec& f) { return "n=" + std::to_string(n) + " over " + f.to_string(); }

Result criterion1() {
  Result r;
  int cases = 0;
  for (const auto& f : kFields) {
    for (int n = 2; n <= 8; ++n) {
      const DgModule base = family::base_complex(family::minimal_truncation(n, Variant::Polynomial), f);
      const auto ds = family_lifts(n, Variant::Polynomial, base);
      const MapSeries dt = MapSeries::deformation(base.differential(), ds, 2 * n);
      r.require(series_mul(dt, dt).is_zero_between(0, 2 * n), "d_t o d_t != 0 at " + tag(n, f));
      r.require(static_cast<int>(ds.size()) == n && !ds.back().is_zero(), "d_n vanishes at " + tag(n, f));
      r.require(ds.back() == named(base, 6 * n - 9, 6 * n - 6, -1), "d_n differs from its closed form at " + tag(n, f));
      const SolveOutcome s = first_order_triviality(base, ds.front());
      r.require(!s.is_solved() && s.witness().involves_source("x6"), "no x6 witness at " + tag(n, f));
      ++cases;
    }
  }
  if (r.passed) r.detail = std::to_string(cases) + " cases; witness block at x6 every time";
  return r;
}

Result criterion2() {
  Result r;
  int cases = 0;
  for (const auto& f : kFields) {
    for (int n = 1; n <= 8; ++n) {
      const DgModule base = family::base_complex(family::minimal_truncation(n, Variant::Obstructed), f);
      const auto ds = family_lifts(n, Variant::Obstructed, base);
      const Cochain on = obstruction(base, ds);
      const GradedMap expected = n == 1 ? named(base, 4, 8, -1) : named(base, 6 * n - 8, 6 * n - 4, -1);
      r.require(on.map() == expected, "O_n = " + on.to_string() + " at " + tag(n, f));
      const HomComplex h(base);
      r.require(!h.solve_coboundary(on).is_solved(), "O_n cobounds at " + tag(n, f));
      r.require(noncobounding_certificate(base.differential(), on), "no certificate at " + tag(n, f));
      ++cases;
    }
  }
  if (r.passed) r.detail = std::to_string(cases) + " cases; infeasible and certified";
  return r;
}

Result criterion3() {
  Result r;
  std::string preimage;
  for (int n = 2; n <= 8; ++n) {
    const FieldSpec q = FieldSpec::rationals();
    const DgModule base = family::base_complex(family::minimal_truncation(n, Variant::Polynomial), q);
    const auto ds = family_lifts(n, Variant::Polynomial, base);
    const Cochain o1 = obstruction(base, std::span(ds).first(1));
    r.require(o1.map() == named(base, 1, 6, -1), "O_1 = " + o1.to_string() + " at n=" + std::to_string(n));
    const HomComplex h(base);
    const SolveOutcome s = h.solve_coboundary(o1);
    r.require(s.is_solved() && h.coboundary(s.solution()) == o1, "no exact preimage at n=" + std::to_string(n));
    if (s.is_solved()) preimage = s.solution().to_string();
  }
  if (r.passed) r.detail = "O_1 = -x1 d/d x6 = delta(" + preimage + ") for n = 2..8";
  return r;
}

Result criterion4() {
  Result r;
  for (int n = 2; n <= 8; ++n) {
    const DgModule base = family::base_complex(family::minimal_truncation(n, Variant::Polynomial), FieldSpec::rationals());
    auto ds = family_lifts(n, Variant::Polynomial, base);
    for (const auto& dk : ds) r.require(!dk.is_zero(), "zero lift in the polynomial family n=" + std::to_string(n));
    ds.resize(static_cast<std::size_t>(2 * n), GradedMap::zero(base.module(), base.module(), -1));
    for (bool ok : check_relations(base, ds)) r.require(ok, "relation fails for polynomial n=" + std::to_string(n));
  }
  const DgModule base = family::base_complex(21, FieldSpec::rationals());
  const GradedMap d1 = family::closed_form_lift(base, 0, 1);
  const auto report =
      deform_to_order(base, LiftStrategy::with_cocycles(d1, family::infinite_cocycles(base, 6)), 6);
  r.require(report.status == DeformationReport::Status::Extended, "infinite variant did not extend to 6");
  for (bool ok : check_relations(base, report.lifts)) r.require(ok, "relation fails for the infinite variant");
  int nonzero = 0;
  for (const auto& dk : report.lifts) nonzero += dk.is_zero() ? 0 : 1;
  r.require(nonzero == 6, "infinite variant has " + std::to_string(nonzero) + " nonzero of 6 terms");
  const auto canonical = deform_to_order(base, LiftStrategy::canonical(d1), 6);
  int canonical_nonzero = 0;
  for (const auto& dk : canonical.lifts) canonical_nonzero += dk.is_zero() ? 0 : 1;
  if (r.passed) {
    r.detail = "polynomial n=2..8 and infinite N=6, P=21 with all d_k != 0 (canonical lifts alone: " +
               std::to_string(canonical_nonzero) + " of 6 nonzero)";
  }
  return r;
}

Result criterion5() {
  Result r;
  testing::Rng rng(501);
  int accepted = 0;
  int nonzero = 0;
  int attempts = 0;
  while (accepted < 60 && attempts < 5000) {
    ++attempts;
    const FieldSpec f = testing::random_field(rng);
    const DgModule v = testing::random_complex(rng, f, 10, 4);
    const HomComplex h(v);
    if (h.cohomology(2).dim != 0) continue;
    const Cochain d1 = testing::random_cocycle(rng, h, 1);
    const auto report = deform_to_order(v, LiftStrategy::canonical(d1.map()), 6);
    r.require(report.status == DeformationReport::Status::Extended,
              "obstructed although H^2 = 0 (attempt " + std::to_string(attempts) + ")");
    for (bool ok : check_relations(v, report.lifts)) r.require(ok, "relation fails on a random extension");
    if (!d1.is_zero()) ++nonzero;
    ++accepted;
  }
  r.require(accepted >= 50, "only " + std::to_string(accepted) + " complexes with H^2 = 0");
  if (r.passed) {
    r.detail = std::to_string(accepted) + " complexes with H^2 = 0 (" + std::to_string(nonzero) +
               " nonzero d_1) extended to order 6";
  }
  return r;
}

Result criterion6() {
  Result r;
  testing::Rng rng(601);
  int accepted = 0;
  int attempts = 0;
  int nonzero_inputs = 0;
  while (accepted < 60 && attempts < 5000) {
    ++attempts;
    const FieldSpec f = testing::random_field(rng);
    const DgModule v = testing::random_complex(rng, f, 10, 4);
    const HomComplex h(v);
    if (h.cohomology(1).dim != 0) continue;
    const Cochain d1 = testing::random_cocycle(rng, h, 1);
    std::vector<GradedMap> cocycles;
    for (int k = 2; k <= 5; ++k) cocycles.push_back(testing::random_cocycle(rng, h, 1).map());
    const auto ext = deform_to_order(v, LiftStrategy::with_cocycles(d1.map(), cocycles), 5);
    r.require(ext.status == DeformationReport::Status::Extended, "random deformation did not extend");
    if (ext.status != DeformationReport::Status::Extended) continue;
    const MapSeries dt = MapSeries::deformation(v.differential(), ext.lifts, 5);
    r.require(squares_to_zero(dt), "random deformation does not square to zero");
    if (!dt.is_zero_between(1, 5)) ++nonzero_inputs;
    const auto report = trivialize(dt, 5);
    r.require(report.status == TrivializationReport::Status::Trivialized, "stuck although H^1 = 0");
    const MapSeries gauged = gauge_transform(dt, report.gauge);
    r.require(gauged.is_zero_between(1, 5), "gauge leaves nonzero coefficients");
    r.require(gauged == report.result, "reported result differs from the gauge transform");
    ++accepted;
  }
  r.require(accepted >= 50, "only " + std::to_string(accepted) + " complexes with H^1 = 0");
  if (r.passed) {
    r.detail = std::to_string(accepted) + " complexes with H^1 = 0 (" + std::to_string(nonzero_inputs) +
               " nontrivial inputs) trivialized through order 5";
  }
  return r;
}

std::vector<int> degrees_of(const ModulePtr& m) {
  std::vector<int> out;
  for (const auto& b : m->basis()) out.push_back(b.degree);
  return out;
}

Result criterion7() {
  Result r;
  testing::Rng rng(701);
  int cochains = 0;
  int solved = 0;
  int instances = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const FieldSpec f = testing::random_field(rng);
    const DgModule v = testing::random_complex(rng, f, 12, 3);
    const HomComplex h(v);
    const auto deg = degrees_of(v.module());
    const auto dense = testing::to_dense(v.differential());
    const auto field = testing::DenseField::of(f);
    ++instances;
    for (int p = -2; p <= 2; ++p) {
      const Cochain c(p, testing::random_map(rng, v.module(), -p));
      const Cochain dc = h.coboundary(c);
      r.require(h.coboundary(dc).is_zero(), "delta^2 != 0");
      ++cochains;
      for (const Cochain& g : {dc, testing::random_cocycle(rng, h, p + 1)}) {
        const SolveOutcome s = h.solve_coboundary(g);
        if (s.is_solved()) {
          ++solved;
          r.require(h.coboundary(s.solution()) == g, "solved outcome does not re-verify");
        }
      }
      r.require(h.solve_coboundary(dc).is_solved(), "an exact coboundary was reported infeasible");
      r.require(h.cohomology(p).dim == testing::oracle_cohomology_dim(deg, dense, p, field),
                "cohomology dimension differs from the dense oracle");
    }
  }
  r.require(cochains >= 200, "only " + std::to_string(cochains) + " cochains");
  if (r.passed) {
    r.detail = std::to_string(cochains) + " cochains, " + std::to_string(solved) + " re-verified solves, " +
               std::to_string(instances) + " complexes matched the oracle";
  }
  return r;
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out;
  std::ostringstream err;
  code = cli::run(args, out, err);
  return out.str() + "\n--stderr--\n" + err.str();
}

Result criterion8() {
  Result r;
  int files = 0;
  for (const auto& f : kFields) {
    for (int n = 1; n <= 8; ++n) {
      for (const Variant v : {Variant::Polynomial, Variant::Obstructed, Variant::Linear, Variant::Infinite}) {
        if ((v == Variant::Polynomial && n < 2) || (v == Variant::Linear && n != 1)) continue;
        const auto spec = family::make_spec(n, v, std::nullopt, f);
        const DgModule base = family::base_complex(spec.truncation, f);
        const dsl::Document doc = dsl::make_document(base, family::lifts(spec, base));
        const std::string text = dsl::print(doc);
        const dsl::Document back = dsl::parse(text);
        r.require(back == doc && dsl::print(back) == text, "generator file does not round-trip");
        ++files;
      }
    }
  }
  testing::Rng rng(801);
  for (int k = 0; k < 100; ++k) {
    const dsl::Document doc = testing::random_document(rng);
    const std::string text = dsl::print(doc);
    r.require(dsl::parse(text) == doc, "random document " + std::to_string(k) + " does not round-trip");
  }

  const auto dir = std::filesystem::temp_directory_path() / "dgm_acceptance";
  std::filesystem::create_directories(dir);
  const std::string poly = (dir / "poly.dgm").string();
  const std::string obst = (dir / "obst.dgm").string();
  int code = 0;
  run_cli({"paper-family", "--n", "3", "--variant", "polynomial", "--out", poly}, code);
  run_cli({"paper-family", "--n", "2", "--variant", "obstructed", "--out", obst}, code);
  const std::vector<std::vector<std::string>> commands = {
      {"verify-paper", "--n", "3"},
      {"verify-paper", "--n", "2", "--field", "GF:5"},
      {"check", poly},
      {"cohomology", poly, "--p", "0", "--p", "1", "--p", "2"},
      {"obstruction", poly, "--order", "1"},
      {"deform", poly, "--order", "6"},
      {"deform", obst, "--order", "5"},
      {"trivialize", poly, "--order", "6"},
      {"paper-family", "--n", "4", "--variant", "infinite", "--truncate", "15"},
  };
  for (const auto& args : commands) {
    int a = 0;
    int b = 0;
    const std::string first = run_cli(args, a);
    const std::string second = run_cli(args, b);
    r.require(first == second && a == b, "CLI output differs between runs of " + args.front());
  }
  std::filesystem::remove_all(dir);
  if (r.passed) {
    r.detail = std::to_string(files) + " generator files, 100 random documents, " +
               std::to_string(commands.size()) + " CLI commands repeated byte-identically";
  }
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    std::function<Result()> run;
    double limit_seconds;  // 0 = no limit
  };
  const std::vector<Criterion> criteria = {
      {1, "polynomial deformations of order n", criterion1, 5.0},
      {2, "approximations obstructed at order n", criterion2, 5.0},
      {3, "primary obstruction cobounds", criterion3, 0},
      {4, "relations ledger", criterion4, 0},
      {5, "H^2 = 0 implies unobstructed extension", criterion5, 0},
      {6, "H^1 = 0 implies trivializable", criterion6, 0},
      {7, "delta^2 = 0 and solver soundness", criterion7, 0},
      {8, "format round-trip and CLI determinism", criterion8, 0},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      r.passed = false;
      r.detail += " (over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit)";
    }
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << seconds;
    std::cout << "criterion " << c.number << " [" << (r.passed ? "PASS" : "FAIL") << "] " << c.name << ": "
              << r.detail << " (" << time.str() << " s)\n";
    all = all && r.passed;
  }
  std::cout << (all ? "acceptance: all criteria passed\n" : "acceptance: FAILED\n");
  return all ? 0 : 1;
}
