#ifndef DESCENT_RANDOMIZED_HPP
#define DESCENT_RANDOMIZED_HPP

#include <descent/form.hpp>
#include <descent/maxwell.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace descent {

// Deterministic source for the randomized suites. Bounded draws go through
// modulo reduction so that the sequence depends only on the seed, not on
// library distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform-ish integer in [lo, hi], inclusive.
  int range(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool chance(int num, int den) { return range(1, den) <= num; }

 private:
  std::mt19937_64 eng_;
};

// Small rational with numerator in [-4, 4] and denominator in [1, 3].
Rational random_rational(Rng& rng);

// At most max_terms monomials of total degree <= max_degree, restricted to
// the listed axes (all axes when empty).
Poly random_poly(Rng& rng, int dim, int max_degree, int max_terms, const std::vector<int>& axes = {});

Form random_homogeneous_form(Rng& rng, int dim, int grade, int max_poly_degree = 3);

// Mixed grades.
Form random_form(Rng& rng, int dim, int max_poly_degree = 3);

FrameVector random_frame_vector(Rng& rng, int dim);

// Degree <= 2 polynomials in (t, x, y) only, several components possibly zero.
EMConfig random_invariant_config(Rng& rng, bool y_invariant_too);

// All 2^dim diagonal sign vectors.
std::vector<std::vector<int>> all_signatures(int dim);

}  // namespace descent

#endif
