#include <descent/verify.hpp>

#include <descent/descent.hpp>
#include <descent/randomized.hpp>

#include <functional>
#include <sstream>

namespace descent {

namespace {

struct Runner {
  const VerifyOptions& opts;
  std::vector<CheckResult> results;
  std::uint64_t salt = 0;

  void add(const std::string& id, const std::string& description,
           const std::function<bool(Rng&, std::string&)>& body) {
    Rng rng(opts.seed * 1000003937ull + ++salt);
    std::string detail;
    bool passed = false;
    try {
      passed = body(rng, detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    results.push_back(CheckResult{id, description, passed, passed ? "" : detail});
  }
};

std::string describe(int m, const std::vector<int>& signs, int trial) {
  std::ostringstream out;
  out << "m=" << m << " signature=(";
  for (std::size_t i = 0; i < signs.size(); ++i) out << (signs[i] > 0 ? "+" : "-");
  out << ") trial=" << trial;
  return out.str();
}

int duality_sign(int p, int m, int s) {
  return ((p * (m - p) + s) % 2 == 0) ? 1 : -1;
}

// Random pair with xi(X) = 1 that is generally not metric consistent.
DescentPair random_pair(Rng& rng, int dim) {
  while (true) {
    FrameVector x = random_frame_vector(rng, dim);
    FrameVector xi = random_frame_vector(rng, dim);
    const Rational c = xi.contract(x);
    if (is_zero(c)) continue;
    for (int a = 0; a < dim; ++a) xi.component(a) /= c;
    return DescentPair(std::move(x), std::move(xi), "e");
  }
}

}  // namespace

std::vector<CheckResult> run_identity_suites(const VerifyOptions& opts) {
  Runner run{opts};
  const int trials = opts.trials;

  run.add("hodge-duality", "star(star(w)) = (-1)^(p(m-p)+s) w on homogeneous slices",
          [&](Rng& rng, std::string& detail) {
            for (int m : opts.dims) {
              for (const auto& signs : all_signatures(m)) {
                const Metric g(m, signs);
                for (int t = 0; t < trials; ++t) {
                  const int p = rng.range(0, m);
                  const Form w = random_homogeneous_form(rng, m, p);
                  const Form twice = hodge(hodge(w, g), g);
                  const Form expected = duality_sign(p, m, g.negative_inertia()) > 0 ? w : -w;
                  if (twice != expected) {
                    detail = describe(m, signs, t);
                    return false;
                  }
                }
              }
            }
            return true;
          });

  run.add("d-squared-zero", "d(d(w)) = 0 on random mixed-grade forms",
          [&](Rng& rng, std::string& detail) {
            for (int m : opts.dims) {
              for (int t = 0; t < trials; ++t) {
                const Form w = random_form(rng, m);
                if (!exterior_derivative(exterior_derivative(w)).is_zero()) {
                  detail = "m=" + std::to_string(m) + " trial=" + std::to_string(t);
                  return false;
                }
              }
            }
            return true;
          });

  run.add("codifferential-squared-zero", "delta(delta(w)) = 0 across dimensions and signatures",
          [&](Rng& rng, std::string& detail) {
            for (int m : opts.dims) {
              for (const auto& signs : all_signatures(m)) {
                const Metric g(m, signs);
                for (int t = 0; t < trials / 8 + 1; ++t) {
                  const Form w = random_form(rng, m);
                  if (!codifferential(codifferential(w, g), g).is_zero()) {
                    detail = describe(m, signs, t);
                    return false;
                  }
                }
              }
            }
            return true;
          });

  run.add("codifferential-sign", "delta = star d star at m=4 Lorentzian, and delta vanishes on functions",
          [&](Rng& rng, std::string& detail) {
            const Metric g = Metric::lorentzian(4);
            for (int t = 0; t < trials; ++t) {
              const Form w = random_form(rng, 4);
              if (codifferential(w, g) != hodge(exterior_derivative(hodge(w, g)), g)) {
                detail = "trial=" + std::to_string(t);
                return false;
              }
              const Form f = Form::scalar(4, random_poly(rng, 4, 3, 3));
              if (!codifferential(f, g).is_zero()) {
                detail = "nonzero on a function, trial=" + std::to_string(t);
                return false;
              }
            }
            return true;
          });

  run.add("hodge-wedge-contraction", "star(w ^ nu) = i_{nu sharp}(star w) for constant 1-forms nu",
          [&](Rng& rng, std::string& detail) {
            for (int m : opts.dims) {
              for (const auto& signs : all_signatures(m)) {
                const Metric g(m, signs);
                for (int t = 0; t < trials / 8 + 1; ++t) {
                  const Form w = random_form(rng, m);
                  const Form nu = one_form(random_frame_vector(rng, m));
                  if (hodge(wedge(w, nu), g) != interior(sharp(nu, g), hodge(w, g))) {
                    detail = describe(m, signs, t);
                    return false;
                  }
                }
              }
            }
            return true;
          });

  run.add("contraction-extension-swap",
          "i_{nu sharp} star w = (-1)^(pq) star eps_nu w and star i_{nu sharp} w = (-1)^(q(p+q)) eps_nu star w",
          [&](Rng& rng, std::string& detail) {
            const int q = 1;
            for (int m : opts.dims) {
              for (const auto& signs : all_signatures(m)) {
                const Metric g(m, signs);
                for (int t = 0; t < trials / 8 + 1; ++t) {
                  const int p = rng.range(0, m);
                  const Form w = random_homogeneous_form(rng, m, p);
                  const FrameVector nu = random_frame_vector(rng, m);
                  const FrameVector nu_sharp = sharp(one_form(nu), g);
                  Form lhs1 = interior(nu_sharp, hodge(w, g));
                  Form rhs1 = hodge(extend(nu, w), g);
                  if ((p * q) % 2 != 0) rhs1 = -rhs1;
                  if (lhs1 != rhs1) {
                    detail = describe(m, signs, t) + " first identity";
                    return false;
                  }
                  Form lhs2 = hodge(interior(nu_sharp, w), g);
                  Form rhs2 = extend(nu, hodge(w, g));
                  if ((q * (p + q)) % 2 != 0) rhs2 = -rhs2;
                  if (lhs2 != rhs2) {
                    detail = describe(m, signs, t) + " second identity";
                    return false;
                  }
                }
              }
            }
            return true;
          });

  run.add("wave-laplace", "wave(w) = -(d delta + delta d)(w) across dimensions and signatures",
          [&](Rng& rng, std::string& detail) {
            for (int m : opts.dims) {
              for (const auto& signs : all_signatures(m)) {
                const Metric g(m, signs);
                for (int t = 0; t < trials; ++t) {
                  const Form w = random_form(rng, m);
                  if (wave_operator(w, g) != -laplace_beltrami(w, g)) {
                    detail = describe(m, signs, t);
                    return false;
                  }
                }
              }
            }
            return true;
          });

  run.add("cartan", "L_X = i_X d + d i_X for constant X",
          [&](Rng& rng, std::string& detail) {
            for (int m : opts.dims) {
              for (int t = 0; t < trials; ++t) {
                const Form w = random_form(rng, m);
                const FrameVector X = random_frame_vector(rng, m);
                const Form lhs = lie_derivative(X, w);
                const Form rhs = interior(X, exterior_derivative(w)) + exterior_derivative(interior(X, w));
                if (lhs != rhs) {
                  detail = "m=" + std::to_string(m) + " trial=" + std::to_string(t);
                  return false;
                }
              }
            }
            return true;
          });

  run.add("lie-d-commute", "L_X d = d L_X",
          [&](Rng& rng, std::string& detail) {
            for (int m : opts.dims) {
              for (int t = 0; t < trials / 4 + 1; ++t) {
                const Form w = random_form(rng, m);
                const FrameVector X = random_frame_vector(rng, m);
                if (lie_derivative(X, exterior_derivative(w)) != exterior_derivative(lie_derivative(X, w))) {
                  detail = "m=" + std::to_string(m) + " trial=" + std::to_string(t);
                  return false;
                }
              }
            }
            return true;
          });

  run.add("lie-hodge-commute", "L_X star = star L_X for constant X",
          [&](Rng& rng, std::string& detail) {
            for (int m : opts.dims) {
              for (const auto& signs : all_signatures(m)) {
                const Metric g(m, signs);
                for (int t = 0; t < trials / 8 + 1; ++t) {
                  const Form w = random_form(rng, m);
                  const FrameVector X = random_frame_vector(rng, m);
                  if (lie_derivative(X, hodge(w, g)) != hodge(lie_derivative(X, w), g)) {
                    detail = describe(m, signs, t);
                    return false;
                  }
                }
              }
            }
            return true;
          });

  run.add("lie-wave-commute", "L_X wave = wave L_X",
          [&](Rng& rng, std::string& detail) {
            for (int m : opts.dims) {
              const Metric g = Metric::lorentzian(m);
              for (int t = 0; t < trials / 4 + 1; ++t) {
                const Form w = random_form(rng, m);
                const FrameVector X = random_frame_vector(rng, m);
                if (lie_derivative(X, wave_operator(w, g)) != wave_operator(lie_derivative(X, w), g)) {
                  detail = "m=" + std::to_string(m) + " trial=" + std::to_string(t);
                  return false;
                }
              }
            }
            return true;
          });

  run.add("principal-symbol", "half the nested commutator recovers the contravariant metric",
          [&](Rng& rng, std::string& detail) {
            for (int m : opts.dims) {
              for (const auto& signs : all_signatures(m)) {
                const Metric g(m, signs);
                for (int mu = 0; mu < m; ++mu) {
                  for (int nu = 0; nu < m; ++nu) {
                    const Poly sym = principal_symbol(g, Poly::variable(m, mu), Poly::variable(m, nu));
                    const Rational expected(mu == nu ? g.sign(mu) : 0);
                    if (sym != Poly::constant(m, expected)) {
                      detail = "m=" + std::to_string(m) + " coordinates " + std::to_string(mu) + "," +
                               std::to_string(nu);
                      return false;
                    }
                  }
                }
                for (int t = 0; t < 8; ++t) {
                  const Poly f = random_poly(rng, m, 3, 3);
                  const Poly h = random_poly(rng, m, 3, 3);
                  Poly direct(m);
                  for (int a = 0; a < m; ++a) {
                    Poly prod = f.partial(a) * h.partial(a);
                    direct += g.sign(a) > 0 ? prod : -prod;
                  }
                  if (principal_symbol(g, f, h) != direct) {
                    detail = describe(m, signs, t);
                    return false;
                  }
                }
              }
            }
            return true;
          });

  run.add("projector-resolution", "P + Q = id for random valid pairs",
          [&](Rng& rng, std::string& detail) {
            for (int m : opts.dims) {
              for (int t = 0; t < trials; ++t) {
                const DescentPair pair = random_pair(rng, m);
                const Form w = random_form(rng, m);
                if (proj_P(pair, w) + proj_Q(pair, w) != w) {
                  detail = "m=" + std::to_string(m) + " trial=" + std::to_string(t);
                  return false;
                }
              }
            }
            return true;
          });

  run.add("projector-idempotent", "P^2 = P, Q^2 = Q, PQ = QP = 0",
          [&](Rng& rng, std::string& detail) {
            for (int m : opts.dims) {
              for (int t = 0; t < trials / 2 + 1; ++t) {
                const DescentPair pair = random_pair(rng, m);
                const Form w = random_form(rng, m);
                const Form pw = proj_P(pair, w);
                const Form qw = proj_Q(pair, w);
                if (proj_P(pair, pw) != pw || proj_Q(pair, qw) != qw ||
                    !proj_P(pair, qw).is_zero() || !proj_Q(pair, pw).is_zero()) {
                  detail = "m=" + std::to_string(m) + " trial=" + std::to_string(t);
                  return false;
                }
              }
            }
            return true;
          });

  run.add("projector-wedge", "P(w^v) = Pw^Qv + Qw^Pv and Q(w^v) = Qw^Qv",
          [&](Rng& rng, std::string& detail) {
            for (int m : opts.dims) {
              for (int t = 0; t < trials / 2 + 1; ++t) {
                const DescentPair pair = random_pair(rng, m);
                const Form w = random_form(rng, m);
                const Form v = random_form(rng, m);
                const Form lhs_p = proj_P(pair, wedge(w, v));
                const Form rhs_p =
                    wedge(proj_P(pair, w), proj_Q(pair, v)) + wedge(proj_Q(pair, w), proj_P(pair, v));
                const Form lhs_q = proj_Q(pair, wedge(w, v));
                const Form rhs_q = wedge(proj_Q(pair, w), proj_Q(pair, v));
                if (lhs_p != rhs_p || lhs_q != rhs_q) {
                  detail = "m=" + std::to_string(m) + " trial=" + std::to_string(t);
                  return false;
                }
              }
            }
            return true;
          });

  run.add("projector-commute", "biorthogonal coordinate projectors commute",
          [&](Rng& rng, std::string& detail) {
            for (int m : opts.dims) {
              if (m < 2) continue;
              const DescentPair py = DescentPair::coordinate(m, m - 2);
              const DescentPair pz = DescentPair::coordinate(m, m - 1);
              for (int t = 0; t < trials; ++t) {
                const Form w = random_form(rng, m);
                if (proj_P(py, proj_P(pz, w)) != proj_P(pz, proj_P(py, w))) {
                  detail = "m=" + std::to_string(m) + " trial=" + std::to_string(t);
                  return false;
                }
              }
            }
            return true;
          });

  run.add("projector-commutator-general",
          "[P_i, P_j] equals xi_j(X_i) eps_i i_j - xi_i(X_j) eps_j i_i for arbitrary valid pairs",
          [&](Rng& rng, std::string& detail) {
            for (int m : opts.dims) {
              for (int t = 0; t < trials / 2 + 1; ++t) {
                const DescentPair pi = random_pair(rng, m);
                const DescentPair pj = random_pair(rng, m);
                const Form w = random_form(rng, m);
                if (!projector_commutator_residual(pi, pj, w).is_zero()) {
                  detail = "m=" + std::to_string(m) + " trial=" + std::to_string(t);
                  return false;
                }
              }
            }
            return true;
          });

  run.add("lie-projector-commute", "L_X commutes with P and Q",
          [&](Rng& rng, std::string& detail) {
            for (int m : opts.dims) {
              for (int t = 0; t < trials / 2 + 1; ++t) {
                const DescentPair pair = random_pair(rng, m);
                const FrameVector& X = pair.direction();
                const Form w = random_form(rng, m);
                if (lie_derivative(X, proj_P(pair, w)) != proj_P(pair, lie_derivative(X, w)) ||
                    lie_derivative(X, proj_Q(pair, w)) != proj_Q(pair, lie_derivative(X, w))) {
                  detail = "m=" + std::to_string(m) + " trial=" + std::to_string(t);
                  return false;
                }
              }
            }
            return true;
          });

  run.add("hodge-offdiagonal", "star = P star Q + Q star P and P star P = Q star Q = 0 for metric pairs",
          [&](Rng& rng, std::string& detail) {
            for (int m : opts.dims) {
              for (const auto& signs : all_signatures(m)) {
                const Metric g(m, signs);
                const int axis = rng.range(0, m - 1);
                const DescentPair pair = DescentPair::coordinate(m, axis);
                for (int t = 0; t < trials / 8 + 1; ++t) {
                  const Form w = random_form(rng, m);
                  const Form split = proj_P(pair, hodge(proj_Q(pair, w), g)) +
                                     proj_Q(pair, hodge(proj_P(pair, w), g));
                  const bool diag_zero =
                      proj_P(pair, hodge(proj_P(pair, w), g)).is_zero() &&
                      proj_Q(pair, hodge(proj_Q(pair, w), g)).is_zero();
                  if (split != hodge(w, g) || !diag_zero) {
                    detail = describe(m, signs, t) + " axis=" + std::to_string(axis);
                    return false;
                  }
                }
              }
            }
            return true;
          });

  run.add("decompose-roundtrip-single", "xi ^ vector + scalar reproduces the input, parts xi-free",
          [&](Rng& rng, std::string& detail) {
            for (int m : opts.dims) {
              for (int t = 0; t < trials; ++t) {
                const DescentPair pair = random_pair(rng, m);
                const Form w = random_form(rng, m);
                const auto d = decompose_single(pair, w);
                if (d.recompose() != w || !interior(pair.direction(), d.scalar_part).is_zero() ||
                    !interior(pair.direction(), d.vector_part).is_zero()) {
                  detail = "m=" + std::to_string(m) + " trial=" + std::to_string(t);
                  return false;
                }
              }
            }
            return true;
          });

  run.add("decompose-roundtrip-double", "four-component recomposition, parts annihilated by both contractions",
          [&](Rng& rng, std::string& detail) {
            for (int m : opts.dims) {
              if (m < 2) continue;
              const DescentPair py = DescentPair::coordinate(m, m - 2);
              const DescentPair pz = DescentPair::coordinate(m, m - 1);
              for (int t = 0; t < trials; ++t) {
                const Form w = random_form(rng, m);
                const auto d = decompose_double(py, pz, w);
                if (d.recompose() != w) {
                  detail = "m=" + std::to_string(m) + " trial=" + std::to_string(t);
                  return false;
                }
                for (int r = 0; r < 2; ++r) {
                  for (int s = 0; s < 2; ++s) {
                    if (!interior(py.direction(), d.part(r, s)).is_zero() ||
                        !interior(pz.direction(), d.part(r, s)).is_zero()) {
                      detail = "m=" + std::to_string(m) + " trial=" + std::to_string(t) + " part " +
                               std::to_string(r) + "," + std::to_string(s);
                      return false;
                    }
                  }
                }
              }
            }
            return true;
          });

  run.add("hodge-components-match", "block formulas agree with directly decomposing star(w)",
          [&](Rng& rng, std::string& detail) {
            for (int m : opts.dims) {
              for (const auto& signs : all_signatures(m)) {
                const Metric g(m, signs);
                const DescentPair pair = DescentPair::coordinate(m, rng.range(0, m - 1));
                for (int t = 0; t < trials / 8 + 1; ++t) {
                  const int p = rng.range(0, m);
                  const Form w = random_homogeneous_form(rng, m, p);
                  const auto via_formula = hodge_components(pair, w, g);
                  const auto direct = decompose_single(pair, hodge(w, g));
                  if (via_formula.scalar_part != direct.scalar_part ||
                      via_formula.vector_part != direct.vector_part) {
                    detail = describe(m, signs, t);
                    return false;
                  }
                }
              }
            }
            return true;
          });

  run.add("d-decomposition-invariant", "d(w) = -xi ^ d(w_1) + d(w_0) for invariant w",
          [&](Rng& rng, std::string& detail) {
            for (int m : opts.dims) {
              const int axis = m - 1;
              const DescentPair pair = DescentPair::coordinate(m, axis);
              std::vector<int> free_axes;
              for (int a = 0; a < axis; ++a) free_axes.push_back(a);
              for (int t = 0; t < trials / 2 + 1; ++t) {
                Form w(m);
                const int parts = rng.range(1, 3);
                for (int k = 0; k < parts; ++k) {
                  const int grade = rng.range(0, m);
                  Form h = random_homogeneous_form(rng, m, grade, 0);
                  // Replace coefficients with axis-free polynomials.
                  for (const auto& [idx, coef] : h.terms()) {
                    w.add_term(idx, random_poly(rng, m, 3, 3, free_axes));
                  }
                }
                const auto dparts = decompose_single(pair, w);
                const Form lhs = exterior_derivative(w);
                const Form rhs = -extend(pair.covector(), exterior_derivative(dparts.vector_part)) +
                                 exterior_derivative(dparts.scalar_part);
                if (lhs != rhs) {
                  detail = "m=" + std::to_string(m) + " trial=" + std::to_string(t);
                  return false;
                }
              }
            }
            return true;
          });

  run.add("continuity-scalar-part", "d(w_0) = xi ^ L_X(w_0) for arbitrary 3-forms at m=4",
          [&](Rng& rng, std::string& detail) {
            const DescentPair pair = DescentPair::coordinate(4, 3);
            for (int t = 0; t < trials; ++t) {
              const Form j = random_homogeneous_form(rng, 4, 3);
              const Form j0 = decompose_single(pair, j).scalar_part;
              const Form lhs = exterior_derivative(j0);
              const Form rhs = extend(pair.covector(), lie_derivative(pair.direction(), j0));
              if (lhs != rhs) {
                detail = "trial=" + std::to_string(t);
                return false;
              }
            }
            return true;
          });

  return run.results;
}

}  // namespace descent
