#include <doctest.h>

#include "dgm/cochain.hpp"
#include "dgm/error.hpp"
#include "dgm/family.hpp"
#include "oracle.hpp"
#include "random.hpp"

using namespace dgm;

namespace {

const FieldSpec Q = FieldSpec::rationals();

GradedMap e(const DgModule& v, const char* i, const char* j, long c = 1) {
  return GradedMap::elementary(v.module(), i, j, Scalar::make(v.field(), c));
}

std::vector<int> degrees_of(const ModulePtr& m) {
  std::vector<int> out;
  for (const auto& b : m->basis()) out.push_back(b.degree);
  return out;
}

}  // namespace

TEST_SUITE("cochain") {

TEST_CASE("coboundaries on the example complex") {
  const auto base = family::base_complex(6, Q);
  const HomComplex h(base);
  CHECK(h.coboundary(Cochain(1, e(base, "x3", "x6", -1))).map() == e(base, "x1", "x6", -1));
  CHECK(h.coboundary(h.zero(1)).is_zero());
  const auto d1 = family::closed_form_lift(base, 2, 1);
  CHECK(h.is_cocycle(Cochain(1, d1)));
  // Nothing hits x3 and d(x4) = 0, so x4 d/d x3 is a cocycle; x3 d/d x4 is not.
  CHECK(h.is_cocycle(Cochain(0, e(base, "x4", "x3"))));
  CHECK_FALSE(h.is_cocycle(Cochain(0, e(base, "x3", "x4"))));
  const auto dense = testing::to_dense(base.differential());
  const auto df = testing::dense_mul(dense, testing::to_dense(e(base, "x3", "x4")), testing::DenseField(0));
  const auto fd = testing::dense_mul(testing::to_dense(e(base, "x3", "x4")), dense, testing::DenseField(0));
  CHECK(df.a != fd.a);
}

TEST_CASE("sign law on both parities") {
  const auto base = family::base_complex(6, Q);
  const HomComplex h(base);
  const auto& d = base.differential();
  const GradedMap f0 = e(base, "x3", "x4");          // p = 0
  const GradedMap f1 = e(base, "x3", "x6", -1);      // p = 1
  CHECK(h.coboundary(Cochain(0, f0)).map() == d.compose(f0) - f0.compose(d));
  CHECK(h.coboundary(Cochain(1, f1)).map() == d.compose(f1) + f1.compose(d));
  CHECK_THROWS_AS(Cochain(1, f0), Error);
}

TEST_CASE("cohomology: zero differential") {
  const auto m = make_module("V", Q, {{"x1", 0}});
  const DgModule v(m, GradedMap::zero(m, m, -1));
  const HomComplex h(v);
  const auto r = h.cohomology(0);
  CHECK(r.dim == 1);
  CHECK(r.dim == r.dim_cochains);
  CHECK(h.cohomology(1).dim == 0);
}

TEST_CASE("cohomology: two-element complex") {
  const auto m = make_module("V", Q, {{"x1", 1}, {"x2", 2}});
  const DgModule v(m, GradedMap::elementary(m, "x1", "x2", Scalar::one(Q)));
  const HomComplex h(v);
  CHECK(h.cohomology(0).dim == 0);
  CHECK(h.cohomology(0).dim_cochains == 2);
}

TEST_CASE("cohomology of the example truncation matches the oracle") {
  const auto base = family::base_complex(6, Q);
  const HomComplex h(base);
  const auto deg = degrees_of(base.module());
  const auto dense = testing::to_dense(base.differential());
  for (int p = -3; p <= 3; ++p) {
    const auto r = h.cohomology(p);
    CHECK(r.dim == testing::oracle_cohomology_dim(deg, dense, p, testing::DenseField(0)));
    CHECK(r.dim == r.dim_cocycles - r.dim_coboundaries);
    CHECK(r.representatives.size() == r.dim);
    for (const auto& rep : r.representatives) CHECK(h.is_cocycle(rep));
  }
}

TEST_CASE("solve_coboundary") {
  const auto base = family::base_complex(6, Q);
  const HomComplex h(base);
  const Cochain g(2, e(base, "x1", "x6", -1));
  const auto s = h.solve_coboundary(g);
  REQUIRE(s.is_solved());
  CHECK(h.coboundary(s.solution()) == g);
  CHECK(s.solution().map() == e(base, "x3", "x6", -1));

  const auto z = h.solve_coboundary(h.zero(2));
  REQUIRE(z.is_solved());
  CHECK(z.solution().is_zero());

  const auto bad = h.solve_coboundary(Cochain(2, e(base, "x4", "x8", -1)));
  REQUIRE_FALSE(bad.is_solved());
  CHECK(bad.witness().involves_source("x8"));
  CHECK(bad.witness().support_degree == 4);

  try {
    (void)h.solve_coboundary(Cochain(0, e(base, "x3", "x4")));
    FAIL("expected NotACocycle");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::NotACocycle);
  }
}

TEST_CASE("degree-support certificate") {
  const auto base = family::base_complex(10, Q);
  const auto& d = base.differential();
  CHECK(noncobounding_certificate(d, Cochain(2, e(base, "x4", "x8", -1))));
  for (int n = 2; n <= 3; ++n) {
    const auto i = family::basis_name(6 * n - 8);
    const auto j = family::basis_name(6 * n - 4);
    CHECK(noncobounding_certificate(d, Cochain(2, e(base, i.c_str(), j.c_str(), -1))));
  }
  CHECK_FALSE(noncobounding_certificate(d, Cochain(2, e(base, "x1", "x6", -1))));
}

TEST_CASE("random complexes: delta squared, solver soundness, oracle dims") {
  testing::Rng rng(23);
  int cochains = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const FieldSpec f = testing::random_field(rng);
    const DgModule v = testing::random_complex(rng, f, 8);
    const HomComplex h(v);
    const auto deg = degrees_of(v.module());
    const auto dense = testing::to_dense(v.differential());
    for (int p = -2; p <= 2; ++p) {
      const GradedMap f_map = testing::random_map(rng, v.module(), -p);
      const Cochain c(p, f_map);
      CHECK(h.coboundary(h.coboundary(c)).is_zero());
      ++cochains;
      const auto s = h.solve_coboundary(h.coboundary(c));
      REQUIRE(s.is_solved());
      CHECK(h.coboundary(s.solution()) == h.coboundary(c));
      CHECK(h.cohomology(p).dim == testing::oracle_cohomology_dim(deg, dense, p, testing::DenseField::of(f)));
    }
  }
  CHECK(cochains >= 200);
}

}
