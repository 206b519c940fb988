#include <descent/descent.hpp>

#include <stdexcept>

namespace descent {

DescentPair::DescentPair(FrameVector X, FrameVector xi, std::string label)
    : x_(std::move(X)), xi_(std::move(xi)), label_(std::move(label)) {
  if (x_.dimension() != xi_.dimension()) throw std::invalid_argument("descent pair: dimension mismatch");
  if (xi_.contract(x_) != 1) throw std::invalid_argument("descent pair: xi(X) must equal 1");
}

DescentPair DescentPair::coordinate(int dim, int axis) {
  FrameVector x = FrameVector::axis(dim, axis);
  return DescentPair(x, x, std::string("e_") + axis_letter(axis));
}

DescentPair DescentPair::metric_dual(FrameVector X, const Metric& g, std::string label) {
  if (X.dimension() != g.dimension()) throw std::invalid_argument("descent pair: dimension mismatch");
  Rational norm(0);
  for (int a = 0; a < g.dimension(); ++a) norm += X.component(a) * X.component(a) * Rational(g.sign(a));
  if (is_zero(norm)) throw std::invalid_argument("descent pair: g(X,X) vanishes");
  FrameVector xi = flat(X, g);
  for (int a = 0; a < g.dimension(); ++a) xi.component(a) /= norm;
  return DescentPair(std::move(X), std::move(xi), std::move(label));
}

bool DescentPair::metric_consistent(const Metric& g) const {
  Rational norm(0);
  for (int a = 0; a < g.dimension(); ++a) norm += x_.component(a) * x_.component(a) * Rational(g.sign(a));
  if (is_zero(norm)) return false;
  const FrameVector lowered = flat(x_, g);
  for (int a = 0; a < g.dimension(); ++a) {
    if (xi_.component(a) * norm != lowered.component(a)) return false;
  }
  return true;
}

Form proj_P(const DescentPair& pair, const Form& w) {
  return extend(pair.covector(), interior(pair.direction(), w));
}

Form proj_Q(const DescentPair& pair, const Form& w) {
  return interior(pair.direction(), extend(pair.covector(), w));
}

Form SingleDecomposition::recompose() const {
  return extend(pair.covector(), vector_part) + scalar_part;
}

SingleDecomposition decompose_single(const DescentPair& pair, const Form& w) {
  if (pair.dimension() != w.dimension()) throw std::invalid_argument("decompose: dimension mismatch");
  return SingleDecomposition{proj_Q(pair, w), interior(pair.direction(), w), pair};
}

Form DoubleDecomposition::recompose() const {
  Form r = parts[0][0];
  r += extend(pair_y.covector(), parts[1][0]);
  r += extend(pair_z.covector(), parts[0][1]);
  r += extend(pair_y.covector(), extend(pair_z.covector(), parts[1][1]));
  return r;
}

DoubleDecomposition decompose_double(const DescentPair& pair_y, const DescentPair& pair_z, const Form& w) {
  if (pair_y.dimension() != w.dimension() || pair_z.dimension() != w.dimension()) {
    throw std::invalid_argument("decompose: dimension mismatch");
  }
  if (!is_zero(pair_y.covector().contract(pair_z.direction())) ||
      !is_zero(pair_z.covector().contract(pair_y.direction()))) {
    throw std::invalid_argument("decompose: pairs are not biorthogonal");
  }
  const FrameVector& Y = pair_y.direction();
  const FrameVector& Z = pair_z.direction();
  const Form xi_y = one_form(pair_y.covector());
  const Form xi_z = one_form(pair_z.covector());
  auto iyiz = [&](const Form& f) { return interior(Y, interior(Z, f)); };

  DoubleDecomposition d{{{Form(w.dimension()), Form(w.dimension())},
                         {Form(w.dimension()), Form(w.dimension())}},
                        pair_y,
                        pair_z};
  d.parts[0][0] = -iyiz(wedge(xi_y, wedge(xi_z, w)));
  d.parts[0][1] = -iyiz(wedge(xi_y, w));
  d.parts[1][0] = iyiz(wedge(xi_z, w));
  d.parts[1][1] = -iyiz(w);
  return d;
}

bool is_invariant(const FrameVector& X, const Form& w) {
  return lie_derivative(X, w).is_zero();
}

SingleDecomposition hodge_components(const DescentPair& pair, const Form& w, const Metric& g) {
  if (!pair.metric_consistent(g)) {
    throw std::invalid_argument("hodge_components: pair is not metric consistent (or g(X,X) = 0)");
  }
  int p = 0;
  if (!w.is_homogeneous(&p)) throw std::invalid_argument("hodge_components: form must be homogeneous");
  const auto base = decompose_single(pair, w);
  Form vector_part = interior(pair.direction(), hodge(base.scalar_part, g));
  // nu_0 = (-1)^(p+1) / g(X,X) * i_X star(w_1); the factor reduces to
  // (-1)^p for a unit timelike-style direction with g(X,X) = -1.
  Rational norm(0);
  for (int a = 0; a < g.dimension(); ++a) {
    norm += pair.direction().component(a) * pair.direction().component(a) * Rational(g.sign(a));
  }
  Rational factor = Rational(1) / norm;
  if ((p + 1) % 2 != 0) factor = -factor;
  Form scalar_part = interior(pair.direction(), hodge(base.vector_part, g)).scaled(factor);
  return SingleDecomposition{std::move(scalar_part), std::move(vector_part), pair};
}

Form projector_commutator_residual(const DescentPair& pi, const DescentPair& pj, const Form& w) {
  const Form commutator = proj_P(pi, proj_P(pj, w)) - proj_P(pj, proj_P(pi, w));
  const Rational xj_of_xi = pj.covector().contract(pi.direction());
  const Rational xi_of_xj = pi.covector().contract(pj.direction());
  Form expected = extend(pi.covector(), interior(pj.direction(), w)).scaled(xj_of_xi) -
                  extend(pj.covector(), interior(pi.direction(), w)).scaled(xi_of_xj);
  return commutator - expected;
}

}  // namespace descent
