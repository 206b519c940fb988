#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <descent/poly.hpp>
#include <descent/randomized.hpp>

using namespace descent;

namespace {
Poly P(const char* text, int dim = 4) { return Poly::parse(dim, text); }
}  // namespace

TEST_CASE("rational invariants") {
  const Rational r = parse_rational("-6/4");
  CHECK(rational_num(r) == -3);
  CHECK(rational_den(r) == 2);
  CHECK(to_string(r) == "-3/2");
  CHECK(to_string(parse_rational("0")) == "0");
  CHECK(rational_den(parse_rational("0")) == 1);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("addition") {
  CHECK((P("t") + P("-t")).is_zero());
  CHECK(P("x^2") + P("x^2") == P("2x^2"));
  CHECK(P("t + x") + P("x") == P("t + 2x"));
}

TEST_CASE("multiplication") {
  CHECK(P("t") * P("x") == P("tx"));
  CHECK(P("t - x") * P("t + x") == P("t^2 - x^2"));
  CHECK((P("0") * P("t^3 + 2x")).is_zero());
}

TEST_CASE("partial derivatives") {
  CHECK(P("t^2").partial(0) == P("2t"));
  CHECK(P("t + x").partial(3).is_zero());
  CHECK(P("txy").partial(1) == P("ty"));
  CHECK_THROWS_AS(P("t").partial(7), std::invalid_argument);
}

TEST_CASE("dependence detection") {
  CHECK_FALSE(P("t - x").depends_on(3));
  CHECK(P("z").depends_on(3));
  CHECK_FALSE(P("0").depends_on(0));
  CHECK_FALSE(P("0").depends_on(2));
}

TEST_CASE("dimension mismatch is rejected") {
  CHECK_THROWS_AS(Poly::parse(2, "t") + Poly::parse(4, "t"), std::invalid_argument);
  CHECK_THROWS_AS(Poly::parse(2, "t") * Poly::parse(3, "t"), std::invalid_argument);
}

TEST_CASE("canonical printing and lossless round trip") {
  CHECK(P("x + t").str() == "t + x");
  CHECK(P("1/2 - x^2 + 2tx").str() == "2tx - x^2 + 1/2");
  CHECK(P("0").str() == "0");
  CHECK(P("-t").str() == "-t");
  CHECK(P("3/2x").str() == "3/2x");

  Rng rng(2024);
  for (int i = 0; i < 300; ++i) {
    const int dim = rng.range(2, 5);
    const Poly p = random_poly(rng, dim, 4, 6);
    CHECK(Poly::parse(dim, p.str()) == p);
  }
}

TEST_CASE("parser accepts explicit stars and rejects junk") {
  CHECK(P("2*t^2*x") == P("2t^2x"));
  CHECK(P("2 t x") == P("2tx"));
  CHECK_THROWS_AS(P("2 +"), std::invalid_argument);
  CHECK_THROWS_AS(P("q"), std::invalid_argument);
  CHECK_THROWS_AS(P(""), std::invalid_argument);
  CHECK_THROWS_AS(P("t^"), std::invalid_argument);
}

TEST_CASE("ring axioms on random triples") {
  Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    const int dim = rng.range(2, 5);
    const Poly a = random_poly(rng, dim, 3, 4);
    const Poly b = random_poly(rng, dim, 3, 4);
    const Poly c = random_poly(rng, dim, 3, 4);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("partials commute and detect dependence") {
  Rng rng(123);
  for (int i = 0; i < 200; ++i) {
    const int dim = rng.range(2, 5);
    const Poly p = random_poly(rng, dim, 4, 5);
    const int mu = rng.range(0, dim - 1);
    const int nu = rng.range(0, dim - 1);
    CHECK(p.partial(mu).partial(nu) == p.partial(nu).partial(mu));
    CHECK(p.depends_on(mu) == !p.partial(mu).is_zero());
  }
}

TEST_CASE("evaluation matches a hand value") {
  const Poly p = P("t^2x - 1/2z + 3");
  const double v = p.eval(std::array{2.0, 3.0, 0.0, 4.0});
  CHECK(v == doctest::Approx(2.0 * 2.0 * 3.0 - 0.5 * 4.0 + 3.0));
}
