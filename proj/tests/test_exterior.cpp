#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <descent/exterior.hpp>
#include <descent/randomized.hpp>

#include "oracles.hpp"

using namespace descent;

namespace {

const Metric kLor4 = Metric::lorentzian(4);

Form F(const char* text, int dim = 4) { return Form::parse(dim, text); }
Poly P(const char* text, int dim = 4) { return Poly::parse(dim, text); }

FrameVector T4 = FrameVector::axis(4, 0);
FrameVector Z4 = FrameVector::axis(4, 3);

}  // namespace

TEST_CASE("wedge basics") {
  CHECK(wedge(F("(1) dt"), F("(1) dx")) == F("(1) dt^dx"));
  CHECK(wedge(F("(1) dx"), F("(1) dx")).is_zero());
  CHECK(wedge(F("(t) dx"), F("(x) dy")) == F("(tx) dx^dy"));
  // anticommutativity on homogeneous grades
  CHECK(wedge(F("(1) dx"), F("(1) dt")) == -F("(1) dt^dx"));
}

TEST_CASE("wedge graded sign on random homogeneous forms") {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const int dim = rng.range(2, 5);
    const int p = rng.range(0, dim);
    const int q = rng.range(0, dim);
    const Form a = random_homogeneous_form(rng, dim, p);
    const Form b = random_homogeneous_form(rng, dim, q);
    const Form lhs = wedge(a, b);
    Form rhs = wedge(b, a);
    if ((p * q) % 2 != 0) rhs = -rhs;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("interior product") {
  CHECK(interior(Z4, F("(1) dz")) == F("(1)"));
  // i_Z on dy^dz expands to -dy by the antiderivation rule
  CHECK(interior(Z4, F("(1) dy^dz")) == -F("(1) dy"));
  CHECK(interior(Z4, interior(Z4, F("(1) dy^dz"))).is_zero());
}

TEST_CASE("interior matches the antiderivation oracle") {
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const int dim = rng.range(2, 5);
    const Form w = random_form(rng, dim);
    const FrameVector X = random_frame_vector(rng, dim);
    CHECK(interior(X, w) == oracles::interior_oracle(X, w));
  }
}

TEST_CASE("extension") {
  // dz^dx reorders to -dx^dz
  CHECK(extend(FrameVector::axis(4, 3), F("(1) dx")) == F("(-1) dx^dz"));
  CHECK(extend(FrameVector::axis(4, 3), F("(-1) dx^dz")).is_zero());
  CHECK(extend(FrameVector::axis(4, 3), F("(1)")) == F("(1) dz"));
}

TEST_CASE("sharp and flat") {
  CHECK(sharp(F("(1) dt"), kLor4) == FrameVector::axis(4, 0));
  FrameVector neg_x(4);
  neg_x.component(1) = Rational(-1);
  CHECK(sharp(F("(1) dx"), kLor4) == neg_x);
  FrameVector neg_z_cov(4);
  neg_z_cov.component(3) = Rational(-1);
  CHECK(flat(FrameVector::axis(4, 3), kLor4) == neg_z_cov);
  for (int a = 0; a < 4; ++a) {
    const FrameVector X = FrameVector::axis(4, a);
    CHECK(sharp(one_form(flat(X, kLor4)), kLor4) == X);
  }
  CHECK_THROWS_AS(sharp(F("(t) dx"), kLor4), std::invalid_argument);
  CHECK_THROWS_AS(sharp(F("(1) dt^dx"), kLor4), std::invalid_argument);
}

TEST_CASE("exterior derivative") {
  CHECK(exterior_derivative(F("(3)")).is_zero());
  CHECK(exterior_derivative(F("(t) dx")) == F("(1) dt^dx"));
  // dz^dx^dy reorders to +dx^dy^dz
  CHECK(exterior_derivative(F("(z) dx^dy")) == F("(1) dx^dy^dz"));
}

TEST_CASE("lie derivative") {
  CHECK(lie_derivative(Z4, F("(z) dx")) == F("(1) dx"));
  CHECK(lie_derivative(Z4, F("(1) dt")).is_zero());
  // z-free coefficients are annihilated
  CHECK(lie_derivative(Z4, F("(t - x) dt^dy + (xy) dy^dz")).is_zero());
}

TEST_CASE("hodge star on the Lorentzian basis") {
  CHECK(hodge(F("(1) dx^dy"), kLor4) == F("(1) dt^dz"));
  CHECK(hodge(F("(1) dt^dx"), kLor4) == -F("(1) dy^dz"));
  CHECK(hodge(F("(1)"), kLor4) == F("(1) dt^dx^dy^dz"));
  CHECK(hodge(F("(1) dt^dx^dy^dz"), kLor4) == F("(-1)"));
}

TEST_CASE("hodge matches the generic contraction oracle everywhere") {
  for (int m = 2; m <= 5; ++m) {
    for (const auto& signs : all_signatures(m)) {
      const Metric g(m, signs);
      for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        const Form w = Form::basis(m, BasisIndex{mask});
        CHECK(hodge(w, g) == oracles::hodge_oracle(w, g));
      }
    }
  }
}

TEST_CASE("codifferential") {
  const Metric& g = kLor4;
  CHECK(codifferential(F("(t^2x + 3)"), g).is_zero());
  // hand chain: star(t dt) = t dx^dy^dz, d gives the volume form, star -> -1
  CHECK(codifferential(F("(t) dt"), g) == F("(-1)"));
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    CHECK(codifferential(Form::basis(4, BasisIndex{mask}), g).is_zero());
  }
}

TEST_CASE("laplace-beltrami hand values") {
  const Metric& g = kLor4;
  CHECK(laplace_beltrami(F("(t^2)"), g) == F("(-2)"));
  CHECK(laplace_beltrami(F("(5) dt^dy"), g).is_zero());
  CHECK(laplace_beltrami(F("(x^2)"), g) == F("(2)"));
}

TEST_CASE("wave operator hand values") {
  const Metric& g = kLor4;
  CHECK(wave_operator(F("(t^2)"), g) == F("(2)"));
  CHECK(wave_operator(F("(x^2) dy"), g) == F("(-2) dy"));
  // functions of t - x are annihilated
  CHECK(wave_operator(F("(t^2 - 2tx + x^2) dy"), g).is_zero());
}

TEST_CASE("principal symbol recovers the metric") {
  const Metric& g = kLor4;
  CHECK(principal_symbol(g, P("t"), P("t")) == P("1"));
  CHECK(principal_symbol(g, P("x"), P("x")) == P("-1"));
  CHECK(principal_symbol(g, P("t"), P("x")).is_zero());
}

TEST_CASE("duality and nilpotency sweeps") {
  Rng rng(31);
  for (int m = 2; m <= 5; ++m) {
    for (const auto& signs : all_signatures(m)) {
      const Metric g(m, signs);
      for (int t = 0; t < 10; ++t) {
        const int p = rng.range(0, m);
        const Form w = random_homogeneous_form(rng, m, p);
        Form expect = w;
        if ((p * (m - p) + g.negative_inertia()) % 2 != 0) expect = -expect;
        CHECK(hodge(hodge(w, g), g) == expect);
        const Form mixed = random_form(rng, m);
        CHECK(exterior_derivative(exterior_derivative(mixed)).is_zero());
        CHECK(codifferential(codifferential(mixed, g), g).is_zero());
        CHECK(wave_operator(mixed, g) == -laplace_beltrami(mixed, g));
      }
    }
  }
}

TEST_CASE("leibniz rule for d over wedge") {
  Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    const int dim = rng.range(2, 5);
    const int p = rng.range(0, dim);
    const Form a = random_homogeneous_form(rng, dim, p);
    const Form b = random_form(rng, dim);
    Form rhs = wedge(exterior_derivative(a), b);
    Form cross = wedge(a, exterior_derivative(b));
    if (p % 2 != 0) cross = -cross;
    CHECK(exterior_derivative(wedge(a, b)) == rhs + cross);
  }
}
