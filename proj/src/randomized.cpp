#include <descent/randomized.hpp>

namespace descent {

Rational random_rational(Rng& rng) {
  const int num = rng.range(-4, 4);
  const int den = rng.range(1, 3);
  return Rational(num, den);
}

Poly random_poly(Rng& rng, int dim, int max_degree, int max_terms, const std::vector<int>& axes) {
  std::vector<int> allowed = axes;
  if (allowed.empty()) {
    for (int a = 0; a < dim; ++a) allowed.push_back(a);
  }
  Poly p(dim);
  const int terms = rng.range(0, max_terms);
  for (int t = 0; t < terms; ++t) {
    Monomial m(dim);
    const int degree = rng.range(0, max_degree);
    for (int d = 0; d < degree; ++d) {
      const int axis = allowed[static_cast<std::size_t>(rng.range(0, static_cast<int>(allowed.size()) - 1))];
      m = m.with_exponent(axis, m.exponent(axis) + 1);
    }
    p.add_term(m, random_rational(rng));
  }
  return p;
}

Form random_homogeneous_form(Rng& rng, int dim, int grade, int max_poly_degree) {
  Form f(dim);
  const int tries = rng.range(1, 3);
  for (int t = 0; t < tries; ++t) {
    std::uint32_t mask = 0;
    int placed = 0;
    while (placed < grade) {
      const int axis = rng.range(0, dim - 1);
      if (!((mask >> axis) & 1u)) {
        mask |= 1u << axis;
        ++placed;
      }
    }
    f.add_term(BasisIndex{mask}, random_poly(rng, dim, max_poly_degree, 3));
  }
  return f;
}

Form random_form(Rng& rng, int dim, int max_poly_degree) {
  Form f(dim);
  const int terms = rng.range(1, 4);
  for (int t = 0; t < terms; ++t) {
    const int grade = rng.range(0, dim);
    f += random_homogeneous_form(rng, dim, grade, max_poly_degree);
  }
  return f;
}

FrameVector random_frame_vector(Rng& rng, int dim) {
  FrameVector v(dim);
  for (int a = 0; a < dim; ++a) v.component(a) = random_rational(rng);
  return v;
}

EMConfig random_invariant_config(Rng& rng, bool y_invariant_too) {
  std::vector<int> axes = {0, 1};
  if (!y_invariant_too) axes.push_back(2);
  EMConfig c;
  auto gen = [&] { return rng.chance(3, 4) ? random_poly(rng, 4, 2, 3, axes) : Poly(4); };
  c.Ex = gen();
  c.Ey = gen();
  c.Ez = gen();
  c.Bx = gen();
  c.By = gen();
  c.Bz = gen();
  c.rho = gen();
  c.jx = gen();
  c.jy = gen();
  c.jz = gen();
  return c;
}

std::vector<std::vector<int>> all_signatures(int dim) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t bits = 0; bits < (1u << dim); ++bits) {
    std::vector<int> signs(static_cast<std::size_t>(dim), 1);
    for (int a = 0; a < dim; ++a) {
      if ((bits >> a) & 1u) signs[static_cast<std::size_t>(a)] = -1;
    }
    out.push_back(std::move(signs));
  }
  return out;
}

}  // namespace descent
