#include <doctest.h>

#include "dgm/error.hpp"
#include "dgm/family.hpp"
#include "random.hpp"

using namespace dgm;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Scalar one() { return Scalar::one(Q); }

}  // namespace

TEST_SUITE("gmap") {

TEST_CASE("elementary operators") {
  const auto v = family::base_complex(4, Q).module();
  const GradedMap e = GradedMap::elementary(v, "x1", "x3", one());
  CHECK(e.apply_basis(v->index_of("x3")) == Vector::basis(v, "x1", one()));
  CHECK(e.apply_basis(v->index_of("x4")).is_zero());
  CHECK(e.degree() == -1);
  CHECK_THROWS_AS(GradedMap::elementary(v, "x1", "y", one()), Error);
  CHECK_THROWS_AS(GradedMap::elementary(v, "x1", "x3", Scalar::zero(Q)), Error);
}

TEST_CASE("composition") {
  const auto v = family::base_complex(4, Q).module();
  const auto e = [&](const char* i, const char* j) { return GradedMap::elementary(v, i, j, one()); };
  CHECK(e("x1", "x4").compose(e("x4", "x6")) == e("x1", "x6"));
  CHECK(e("x1", "x3").compose(e("x1", "x3")).is_zero());
  CHECK(e("x1", "x3").compose(GradedMap::identity(v)) == e("x1", "x3"));
  const auto w = make_module("W", Q, {{"y", 1}});
  CHECK_THROWS_AS((void)e("x1", "x3").compose(GradedMap::identity(w)), Error);
}

TEST_CASE("elementary products on a 6-element basis") {
  const auto v = family::base_complex(3, Q).module();
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      for (std::size_t k = 0; k < 6; ++k) {
        for (std::size_t l = 0; l < 6; ++l) {
          const auto a = GradedMap::elementary_at(v, v, i, j, one());
          const auto b = GradedMap::elementary_at(v, v, k, l, one());
          const GradedMap prod = a.compose(b);
          if (j == k) {
            CHECK(prod == GradedMap::elementary_at(v, v, i, l, one()));
          } else {
            CHECK(prod.is_zero());
          }
        }
      }
    }
  }
}

TEST_CASE("arithmetic and rendering") {
  const auto base = family::base_complex(7, Q);
  const auto d1 = family::closed_form_lift(base, 3, 1);
  CHECK((d1 + d1.scaled(Scalar::make(Q, -1))).is_zero());
  const auto m = GradedMap::elementary(base.module(), "x3", "x6", one()).scaled(Scalar::make(Q, -1));
  CHECK(m.to_string() == "-x3 d/d x6");
  CHECK(GradedMap::zero(base.module(), base.module(), -1).to_string() == "0");
  try {
    (void)(d1 + GradedMap::identity(base.module()));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegreeMismatch);
  }
  GradedMap two = m;
  two.add_entry(base.module()->index_of("x1"), base.module()->index_of("x4"), Scalar::make(Q, 2));
  CHECK(two.to_string() == "2*x1 d/d x4 - x3 d/d x6");
}

TEST_CASE("apply") {
  const auto base = family::base_complex(5, Q);
  const auto& v = base.module();
  const auto& d = base.differential();
  CHECK(d.apply(Vector::basis(v, "x3", one())) == Vector::basis(v, "x1", one()));
  CHECK(d.apply(Vector::basis(v, "x5", one())).is_zero());
  CHECK(d.apply(Vector(v)).is_zero());
}

TEST_CASE("differential test") {
  const auto base = family::base_complex(6, Q);
  CHECK(is_differential(base.differential()));
  const auto& v = base.module();
  GradedMap bad = GradedMap::elementary(v, "x4", "x6", one()) + GradedMap::elementary(v, "x6", "x8", one());
  CHECK_FALSE(is_differential(bad));
  CHECK(is_differential(GradedMap::zero(v, v, -1)));
  CHECK_THROWS_AS(is_differential(GradedMap::identity(v)), Error);
}

TEST_CASE("block support") {
  const auto base = family::base_complex(9, Q);
  CHECK(base.differential().block_support() == std::set<int>{2, 5, 8});
  CHECK(GradedMap::zero(base.module(), base.module(), -1).block_support().empty());
}

TEST_CASE("random maps: homogeneity, associativity, bilinearity") {
  testing::Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const FieldSpec f = testing::random_field(rng);
    const auto v = testing::random_complex(rng, f, 7).module();
    const auto a = testing::random_map(rng, v, -1);
    const auto b = testing::random_map(rng, v, 0);
    const auto c = testing::random_map(rng, v, 1);
    for (const auto& [j, col] : a.columns()) CHECK(col.degree() == v->degree(j) - 1);
    CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
    const auto b2 = testing::random_map(rng, v, 0);
    const Scalar s = testing::random_scalar(rng, f);
    CHECK(a.compose(b + b2.scaled(s)) == a.compose(b) + a.compose(b2).scaled(s));
  }
}

}
