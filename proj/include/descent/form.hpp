#ifndef DESCENT_FORM_HPP
#define DESCENT_FORM_HPP

#include <descent/poly.hpp>

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace descent {

// A basis form dx^{i1...ip} with strictly increasing axes, stored as the
// bitmask of its axes. The empty mask is the scalar basis element 1.
struct BasisIndex {
  std::uint32_t bits = 0;

  static BasisIndex from_axes(std::initializer_list<int> axes);

  int degree() const { return std::popcount(bits); }
  bool contains(int axis) const { return (bits >> axis) & 1u; }
  std::vector<int> axes() const;
  std::string str() const;  // "dt^dx"; "1" for the empty index

  bool operator==(const BasisIndex&) const = default;
};

// Degree first, then lexicographic on the increasing axis tuples.
struct BasisIndexLess {
  bool operator()(BasisIndex a, BasisIndex b) const;
};

// Sign of dx^a ^ dx^b as a multiple of the merged increasing basis form,
// or 0 when the indices overlap.
int wedge_sign(BasisIndex a, BasisIndex b);

// Constant-coefficient vector X = c^mu X_mu in the coordinate frame. The
// same type carries constant 1-forms xi = c_mu dx^mu; the metric converts
// between the two views through flat and sharp.
class FrameVector {
 public:
  explicit FrameVector(int dim) : comps_(static_cast<std::size_t>(dim), Rational(0)) {}
  FrameVector(int dim, std::vector<Rational> comps);
  static FrameVector axis(int dim, int axis);

  int dimension() const { return static_cast<int>(comps_.size()); }
  const Rational& component(int axis) const { return comps_[static_cast<std::size_t>(axis)]; }
  Rational& component(int axis) { return comps_[static_cast<std::size_t>(axis)]; }

  // Pairing of a covector view with a vector view: sum of c_mu d^mu.
  Rational contract(const FrameVector& other) const;

  friend FrameVector operator+(const FrameVector& a, const FrameVector& b);

  bool operator==(const FrameVector&) const = default;

 private:
  std::vector<Rational> comps_;
};

// Differential form with Poly coefficients on the basis forms. Mixed grades
// are allowed; no zero coefficients are stored.
class Form {
 public:
  using TermMap = std::map<BasisIndex, Poly, BasisIndexLess>;

  explicit Form(int dim);
  static Form scalar(int dim, const Poly& p);
  static Form basis(int dim, BasisIndex idx);  // coefficient 1
  static Form parse(int dim, std::string_view text);

  int dimension() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Poly coefficient(BasisIndex idx) const;

  void add_term(BasisIndex idx, const Poly& p);

  Form grade(int p) const;  // homogeneous slice of degree p
  std::vector<int> grades() const;
  bool is_homogeneous(int* degree_out = nullptr) const;

  Form operator-() const;
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  Form scaled(const Rational& c) const;
  Form scaled(const Poly& p) const;

  // Canonical text, e.g. "(2t) dt^dx + (-1) dy^dz"; grade-0 terms print as
  // a bare "(poly)"; the zero form prints "0".
  std::string str() const;

  bool operator==(const Form&) const = default;

 private:
  int dim_;
  TermMap terms_;
};

// The covector view of xi materialized as a constant 1-form.
Form one_form(const FrameVector& covector);

}  // namespace descent

#endif
