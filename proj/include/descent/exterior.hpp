#ifndef DESCENT_EXTERIOR_HPP
#define DESCENT_EXTERIOR_HPP

#include <descent/form.hpp>
#include <descent/metric.hpp>

namespace descent {

// Graded anticommutative product, bilinear over the polynomial coefficients.
Form wedge(const Form& a, const Form& b);

// Interior product i_X, a degree -1 antiderivation; i_X i_X = 0.
Form interior(const FrameVector& X, const Form& w);

// Extension eps_xi(w) = xi ^ w by a constant covector; squares to zero.
Form extend(const FrameVector& xi, const Form& w);

// Index raising and lowering by the diagonal metric. sharp requires a
// constant homogeneous 1-form.
FrameVector sharp(const Form& one_form, const Metric& g);
FrameVector flat(const FrameVector& X, const Metric& g);

// d(w) = sum_mu d(coef)/dx^mu dx^mu ^ dx^I; dd = 0.
Form exterior_derivative(const Form& w);

// L_X for constant X acts coefficientwise: sum_I X(w_I) dx^I.
Form lie_derivative(const FrameVector& X, const Form& w);

// star(w) = i_{w sharp} (volume form), extended coefficientwise by the
// per-basis sign table of the metric.
Form hodge(const Form& w, const Metric& g);

// delta(w) = (-1)^(m(p+1)+s+1) star d star (w) on each grade-p slice.
Form codifferential(const Form& w, const Metric& g);

// d delta + delta d.
Form laplace_beltrami(const Form& w, const Metric& g);

// Signature-weighted sum of second coordinate derivatives, applied to each
// basis coefficient. Coincides with -(d delta + delta d).
Form wave_operator(const Form& w, const Metric& g);

// Half the nested commutator [[L, mul_h], mul_f] applied to 1, where L is
// the wave operator on functions. Equals g^{ab} (df/dx^a)(dh/dx^b), the
// contravariant metric evaluated on the differentials.
Poly principal_symbol(const Metric& g, const Poly& f, const Poly& h);

}  // namespace descent

#endif
