#include <descent/exterior.hpp>

#include <functional>
#include <stdexcept>

namespace descent {

namespace {

void check_same_dim(int a, int b) {
  if (a != b) throw std::invalid_argument("dimension mismatch");
}

}  // namespace

Form wedge(const Form& a, const Form& b) {
  check_same_dim(a.dimension(), b.dimension());
  Form r(a.dimension());
  for (const auto& [ia, pa] : a.terms()) {
    for (const auto& [ib, pb] : b.terms()) {
      const int sgn = wedge_sign(ia, ib);
      if (sgn == 0) continue;
      Poly c = pa * pb;
      if (sgn < 0) c = -c;
      r.add_term(BasisIndex{ia.bits | ib.bits}, c);
    }
  }
  return r;
}

Form interior(const FrameVector& X, const Form& w) {
  check_same_dim(X.dimension(), w.dimension());
  const int dim = w.dimension();
  Form r(dim);
  for (const auto& [idx, coef] : w.terms()) {
    int pos = 0;
    for (int a = 0; a < dim; ++a) {
      if (!idx.contains(a)) continue;
      const Rational& c = X.component(a);
      if (!is_zero(c)) {
        Poly term = coef.scaled(pos % 2 == 0 ? c : Rational(-c));
        r.add_term(BasisIndex{idx.bits & ~(1u << a)}, term);
      }
      ++pos;
    }
  }
  return r;
}

Form extend(const FrameVector& xi, const Form& w) {
  check_same_dim(xi.dimension(), w.dimension());
  return wedge(one_form(xi), w);
}

FrameVector sharp(const Form& omega, const Metric& g) {
  check_same_dim(omega.dimension(), g.dimension());
  FrameVector v(g.dimension());
  for (const auto& [idx, coef] : omega.terms()) {
    if (idx.degree() != 1) throw std::invalid_argument("sharp requires a homogeneous 1-form");
    if (coef.total_degree() > 0) throw std::invalid_argument("sharp requires constant coefficients");
    const int axis = idx.axes().front();
    v.component(axis) = coef.coefficient(Monomial(g.dimension())) * Rational(g.sign(axis));
  }
  return v;
}

FrameVector flat(const FrameVector& X, const Metric& g) {
  check_same_dim(X.dimension(), g.dimension());
  FrameVector v(g.dimension());
  for (int a = 0; a < g.dimension(); ++a) v.component(a) = X.component(a) * Rational(g.sign(a));
  return v;
}

Form exterior_derivative(const Form& w) {
  const int dim = w.dimension();
  Form r(dim);
  for (const auto& [idx, coef] : w.terms()) {
    for (int mu = 0; mu < dim; ++mu) {
      if (idx.contains(mu)) continue;
      Poly d = coef.partial(mu);
      if (d.is_zero()) continue;
      const int sgn = wedge_sign(BasisIndex{1u << mu}, idx);
      r.add_term(BasisIndex{idx.bits | (1u << mu)}, sgn < 0 ? -d : d);
    }
  }
  return r;
}

Form lie_derivative(const FrameVector& X, const Form& w) {
  check_same_dim(X.dimension(), w.dimension());
  const int dim = w.dimension();
  Form r(dim);
  for (const auto& [idx, coef] : w.terms()) {
    Poly der(dim);
    for (int a = 0; a < dim; ++a) {
      if (is_zero(X.component(a))) continue;
      der += coef.partial(a).scaled(X.component(a));
    }
    r.add_term(idx, der);
  }
  return r;
}

Form hodge(const Form& w, const Metric& g) {
  check_same_dim(w.dimension(), g.dimension());
  Form r(w.dimension());
  const std::uint32_t full = g.volume_mask();
  for (const auto& [idx, coef] : w.terms()) {
    const int sgn = g.hodge_sign(idx.bits);
    r.add_term(BasisIndex{full & ~idx.bits}, sgn < 0 ? -coef : coef);
  }
  return r;
}

Form codifferential(const Form& w, const Metric& g) {
  check_same_dim(w.dimension(), g.dimension());
  const int m = g.dimension();
  const int s = g.negative_inertia();
  Form r(w.dimension());
  for (int p : w.grades()) {
    if (p == 0) continue;  // vanishes on functions
    const Form slice = w.grade(p);
    Form part = hodge(exterior_derivative(hodge(slice, g)), g);
    const int exponent = m * (p + 1) + s + 1;
    if (exponent % 2 != 0) part = -part;
    r += part;
  }
  return r;
}

Form laplace_beltrami(const Form& w, const Metric& g) {
  return exterior_derivative(codifferential(w, g)) + codifferential(exterior_derivative(w), g);
}

Form wave_operator(const Form& w, const Metric& g) {
  check_same_dim(w.dimension(), g.dimension());
  Form r(w.dimension());
  for (const auto& [idx, coef] : w.terms()) {
    Poly acc(w.dimension());
    for (int a = 0; a < g.dimension(); ++a) {
      Poly second = coef.partial(a).partial(a);
      if (second.is_zero()) continue;
      acc += g.sign(a) > 0 ? second : -second;
    }
    r.add_term(idx, acc);
  }
  return r;
}

Poly principal_symbol(const Metric& g, const Poly& f, const Poly& h) {
  check_same_dim(f.dimension(), g.dimension());
  check_same_dim(h.dimension(), g.dimension());
  using Op = std::function<Poly(const Poly&)>;
  const Op wave = [&g](const Poly& u) {
    Poly acc(u.dimension());
    for (int a = 0; a < g.dimension(); ++a) {
      Poly second = u.partial(a).partial(a);
      if (second.is_zero()) continue;
      acc += g.sign(a) > 0 ? second : -second;
    }
    return acc;
  };
  const auto mul_by = [](const Poly& m) {
    return Op([m](const Poly& u) { return m * u; });
  };
  const auto commutator = [](const Op& A, const Op& B) {
    return Op([A, B](const Poly& u) { return A(B(u)) - B(A(u)); });
  };
  const Op inner = commutator(wave, mul_by(h));
  const Op outer = commutator(inner, mul_by(f));
  return outer(Poly::constant(f.dimension(), Rational(1))).scaled(Rational(1, 2));
}

}  // namespace descent
