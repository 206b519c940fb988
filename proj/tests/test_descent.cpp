#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <descent/descent.hpp>
#include <descent/maxwell.hpp>
#include <descent/randomized.hpp>

using namespace descent;

namespace {

const Metric kLor4 = Metric::lorentzian(4);

Form F(const char* text, int dim = 4) { return Form::parse(dim, text); }

const DescentPair kPairY = DescentPair::coordinate(4, 2);
const DescentPair kPairZ = DescentPair::coordinate(4, 3);

}  // namespace

TEST_CASE("pair validation") {
  CHECK_THROWS_AS(DescentPair(FrameVector::axis(4, 3), FrameVector::axis(4, 2), "bad"),
                  std::invalid_argument);
  // metric duals: xi = flat(X)/g(X,X); null directions are rejected
  const DescentPair mz = DescentPair::metric_dual(FrameVector::axis(4, 3), kLor4, "e_z");
  CHECK(mz.covector() == FrameVector::axis(4, 3));
  CHECK(mz.metric_consistent(kLor4));
  FrameVector null_dir(4);
  null_dir.component(0) = Rational(1);
  null_dir.component(1) = Rational(1);
  CHECK_THROWS_AS(DescentPair::metric_dual(null_dir, kLor4, "n"), std::invalid_argument);
}

TEST_CASE("projector examples") {
  // dz^dx in canonical order is -dx^dz; it carries a dz factor, so P keeps
  // it and Q kills it
  CHECK(proj_P(kPairZ, F("(-1) dx^dz")) == F("(-1) dx^dz"));
  CHECK(proj_Q(kPairZ, F("(-1) dx^dz")).is_zero());
  CHECK(proj_P(kPairZ, F("(1) dx")).is_zero());
  CHECK(proj_Q(kPairZ, F("(1) dx")) == F("(1) dx"));
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const Form w = random_form(rng, 4);
    CHECK(proj_P(kPairZ, w) + proj_Q(kPairZ, w) == w);
  }
}

TEST_CASE("single decomposition") {
  const auto d = decompose_single(kPairZ, F("(1) dz"));
  CHECK(d.scalar_part.is_zero());
  CHECK(d.vector_part == F("(1)"));

  // a z-free form with no dz factor is purely scalar
  const auto d2 = decompose_single(kPairZ, F("(t - x) dt^dy + (2) dx"));
  CHECK(d2.vector_part.is_zero());
  CHECK(d2.scalar_part == F("(t - x) dt^dy + (2) dx"));
  CHECK(d2.recompose() == F("(t - x) dt^dy + (2) dx"));
}

TEST_CASE("faraday vector part matches the component expansion") {
  EMConfig c;
  c.Ez = Poly::parse(4, "t + x");
  c.Bx = Poly::parse(4, "2x");
  c.By = Poly::parse(4, "y");
  const Form f = assemble_faraday(c);
  const auto d = decompose_single(kPairZ, f);
  // i_Z F = -Ez dt - By dx + Bx dy
  Form expect(4);
  expect.add_term(BasisIndex::from_axes({0}), -c.Ez);
  expect.add_term(BasisIndex::from_axes({1}), -c.By);
  expect.add_term(BasisIndex::from_axes({2}), c.Bx);
  CHECK(d.vector_part == expect);
}

TEST_CASE("double decomposition of the faraday form") {
  EMConfig c;
  c.Ex = Poly::parse(4, "t^2");
  c.Ey = Poly::parse(4, "x");
  c.Ez = Poly::parse(4, "1/2t");
  c.Bx = Poly::parse(4, "3");
  c.By = Poly::parse(4, "x^2");
  c.Bz = Poly::parse(4, "t + x");
  const Form f = assemble_faraday(c);
  const auto d = decompose_double(kPairY, kPairZ, f);

  Form f00(4);
  f00.add_term(BasisIndex::from_axes({0, 1}), c.Ex);
  Form f10(4);
  f10.add_term(BasisIndex::from_axes({0}), -c.Ey);
  f10.add_term(BasisIndex::from_axes({1}), c.Bz);
  Form f01(4);
  f01.add_term(BasisIndex::from_axes({0}), -c.Ez);
  f01.add_term(BasisIndex::from_axes({1}), -c.By);
  Form f11 = Form::scalar(4, -c.Bx);

  CHECK(d.part(0, 0) == f00);
  CHECK(d.part(1, 0) == f10);
  CHECK(d.part(0, 1) == f01);
  CHECK(d.part(1, 1) == f11);
  CHECK(d.recompose() == f);
}

TEST_CASE("double decomposition basics") {
  const auto d = decompose_double(kPairY, kPairZ, F("(1) dy^dz"));
  CHECK(d.part(1, 1) == F("(1)"));
  CHECK(d.part(0, 0).is_zero());
  CHECK(d.part(1, 0).is_zero());
  CHECK(d.part(0, 1).is_zero());

  // pairs that fail biorthogonality are rejected
  const DescentPair skew(FrameVector::axis(4, 2) + FrameVector::axis(4, 3),
                         FrameVector::axis(4, 2), "skew");
  CHECK_THROWS_AS(decompose_double(skew, kPairZ, F("(1) dy")), std::invalid_argument);
}

TEST_CASE("invariance predicate") {
  CHECK_FALSE(is_invariant(FrameVector::axis(4, 3), F("(z) dx")));
  CHECK(is_invariant(FrameVector::axis(4, 3), F("(t - x) dy")));
  EMConfig c;
  c.Ey = Poly::parse(4, "t - x");
  c.Bz = Poly::parse(4, "t - x");
  CHECK(is_invariant(FrameVector::axis(4, 3), assemble_faraday(c)));
}

TEST_CASE("hodge components examples") {
  const auto h = hodge_components(kPairZ, F("(1) dt^dx"), kLor4);
  CHECK(h.vector_part == F("(1) dy"));
  CHECK(h.scalar_part.is_zero());

  const auto h2 = hodge_components(kPairZ, F("(1) dz"), kLor4);
  CHECK(h2.vector_part.is_zero());
  CHECK(h2.scalar_part == F("(1) dt^dx^dy"));

  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const int p = rng.range(0, 4);
    const Form w = random_homogeneous_form(rng, 4, p);
    const auto via = hodge_components(kPairZ, w, kLor4);
    const auto direct = decompose_single(kPairZ, hodge(w, kLor4));
    CHECK(via.scalar_part == direct.scalar_part);
    CHECK(via.vector_part == direct.vector_part);
  }

  CHECK_THROWS_AS(hodge_components(kPairZ, F("(1) + (1) dx"), kLor4), std::invalid_argument);
  // a pair that is not metric consistent is rejected
  const DescentPair odd(FrameVector::axis(4, 3), FrameVector::axis(4, 3) + FrameVector::axis(4, 0),
                        "odd");
  CHECK_THROWS_AS(hodge_components(odd, F("(1) dz"), kLor4), std::invalid_argument);
}

TEST_CASE("projector commutator report") {
  Rng rng(77);
  SUBCASE("biorthogonal coordinate pairs commute") {
    for (int i = 0; i < 50; ++i) {
      const Form w = random_form(rng, 4);
      CHECK(projector_commutator_residual(kPairY, kPairZ, w).is_zero());
      CHECK(proj_P(kPairY, proj_P(kPairZ, w)) == proj_P(kPairZ, proj_P(kPairY, w)));
    }
  }
  SUBCASE("a pair commutes with itself") {
    for (int i = 0; i < 20; ++i) {
      const Form w = random_form(rng, 4);
      CHECK(projector_commutator_residual(kPairZ, kPairZ, w).is_zero());
    }
  }
  SUBCASE("the general commutator formula holds for overlapping pairs") {
    // xi_j(X_i) = 1 here, so the commutator reduces to eps_dz i_Y.
    const DescentPair pi = kPairZ;
    const DescentPair pj(FrameVector::axis(4, 3) + FrameVector::axis(4, 2),
                         FrameVector::axis(4, 3), "mix");
    for (std::uint32_t mask = 0; mask < 16; ++mask) {
      const Form w = Form::basis(4, BasisIndex{mask});
      CHECK(projector_commutator_residual(pi, pj, w).is_zero());
      const Form commutator = proj_P(pi, proj_P(pj, w)) - proj_P(pj, proj_P(pi, w));
      const Form reduced = extend(pi.covector(), interior(FrameVector::axis(4, 2), w));
      CHECK(commutator == reduced);
    }
  }
}

TEST_CASE("lie derivative respects the splitting") {
  Rng rng(88);
  const FrameVector Z = FrameVector::axis(4, 3);
  for (int i = 0; i < 50; ++i) {
    const Form w = random_form(rng, 4);
    CHECK(lie_derivative(Z, proj_P(kPairZ, w)) == proj_P(kPairZ, lie_derivative(Z, w)));
    CHECK(is_invariant(Z, w) ==
          (is_invariant(Z, proj_P(kPairZ, w)) && is_invariant(Z, proj_Q(kPairZ, w))));
  }
}
