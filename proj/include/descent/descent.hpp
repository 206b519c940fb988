#ifndef DESCENT_DESCENT_HPP
#define DESCENT_DESCENT_HPP

#include <descent/exterior.hpp>

#include <string>

namespace descent {

// A constant invariance generator X together with the closed constant
// covector xi dual to it, xi(X) = 1. Validated at construction.
class DescentPair {
 public:
  DescentPair(FrameVector X, FrameVector xi, std::string label);

  // The coordinate pair (X_axis, dx^axis).
  static DescentPair coordinate(int dim, int axis);

  // xi = flat(X) / g(X,X); requires a nonvanishing norm g(X,X).
  static DescentPair metric_dual(FrameVector X, const Metric& g, std::string label);

  const FrameVector& direction() const { return x_; }
  const FrameVector& covector() const { return xi_; }
  const std::string& label() const { return label_; }
  int dimension() const { return x_.dimension(); }

  // True when xi coincides with flat(X)/g(X,X).
  bool metric_consistent(const Metric& g) const;

 private:
  FrameVector x_;
  FrameVector xi_;
  std::string label_;
};

// P = eps_xi . i_X and Q = i_X . eps_xi. P + Q = id, both idempotent,
// P Q = Q P = 0.
Form proj_P(const DescentPair& pair, const Form& w);
Form proj_Q(const DescentPair& pair, const Form& w);

// w = xi ^ vector_part + scalar_part with i_X of both parts zero.
struct SingleDecomposition {
  Form scalar_part;  // Q(w), tag "1"
  Form vector_part;  // i_X w, tag e_label
  DescentPair pair;

  Form recompose() const;
};

SingleDecomposition decompose_single(const DescentPair& pair, const Form& w);

// w = p00 + xi_Y ^ p10 + xi_Z ^ p01 + xi_Y ^ xi_Z ^ p11 with all four parts
// annihilated by i_Y and i_Z. Requires biorthogonal pairs,
// xi_Y(Z) = xi_Z(Y) = 0, so the projectors commute.
struct DoubleDecomposition {
  Form parts[2][2];  // parts[r][s], tags 1, e_y, e_z, e_y^e_z
  DescentPair pair_y;
  DescentPair pair_z;

  const Form& part(int r, int s) const { return parts[r][s]; }
  Form recompose() const;
};

DoubleDecomposition decompose_double(const DescentPair& pair_y, const DescentPair& pair_z, const Form& w);

// L_X w = 0.
bool is_invariant(const FrameVector& X, const Form& w);

// Components of star(w) for homogeneous w of degree p, computed through the
// off-diagonal block identities
//   nu_1 = i_X star(w_0),   nu_0 = (-1)^p i_X star(w_1),
// which require a metric-consistent pair. Agrees with directly decomposing
// star(w).
SingleDecomposition hodge_components(const DescentPair& pair, const Form& w, const Metric& g);

// [P_i, P_j] w - ( xi_j(X_i) eps_{xi_i} i_{X_j} - xi_i(X_j) eps_{xi_j} i_{X_i} ) w.
// Vanishes identically for every pair of valid descent pairs.
Form projector_commutator_residual(const DescentPair& pi, const DescentPair& pj, const Form& w);

}  // namespace descent

#endif
