#ifndef DESCENT_POLY_HPP
#define DESCENT_POLY_HPP

#include <descent/rational.hpp>

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace descent {

inline constexpr int kMaxDimension = 8;

// Coordinate letters, axis 0 first. Axis 0 is the time direction.
char axis_letter(int axis);
int axis_from_letter(char c, int dim);

// Exponent vector of one monomial, length equal to the ambient dimension.
class Monomial {
 public:
  explicit Monomial(int dim) : exps_(static_cast<std::size_t>(dim), 0u) {}
  Monomial(std::initializer_list<unsigned> exps) : exps_(exps) {}

  int dimension() const { return static_cast<int>(exps_.size()); }
  unsigned exponent(int axis) const { return exps_[static_cast<std::size_t>(axis)]; }
  unsigned total_degree() const;

  Monomial with_exponent(int axis, unsigned e) const {
    Monomial m = *this;
    m.exps_[static_cast<std::size_t>(axis)] = e;
    return m;
  }

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<unsigned> exps_;
};

// Graded lexicographic: total degree first, then exponents from axis 0 on.
struct MonomialGradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse exact polynomial over the rationals in dim coordinate variables.
// No zero coefficients are stored; equality is equality of the term maps.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialGradedLex>;

  explicit Poly(int dim);
  static Poly constant(int dim, const Rational& c);
  static Poly variable(int dim, int axis);
  static Poly parse(int dim, std::string_view text);

  int dimension() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;
  unsigned total_degree() const;  // zero polynomial reports 0

  void add_term(const Monomial& m, const Rational& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rational& c) const;

  Poly partial(int axis) const;
  bool depends_on(int axis) const;

  double eval(std::span<const double> coords) const;

  // Canonical text, graded-lex descending, e.g. "t^2x - 2x + 1/2".
  std::string str() const;

  bool operator==(const Poly&) const = default;

 private:
  void check_same_dim(const Poly& o) const;

  int dim_;
  TermMap terms_;
};

}  // namespace descent

#endif
