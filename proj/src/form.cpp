#include <descent/form.hpp>

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace descent {

BasisIndex BasisIndex::from_axes(std::initializer_list<int> axes) {
  BasisIndex idx;
  for (int a : axes) {
    if (a < 0 || a >= kMaxDimension) throw std::invalid_argument("axis out of range");
    if (idx.contains(a)) throw std::invalid_argument("repeated axis in basis index");
    idx.bits |= 1u << a;
  }
  return idx;
}

std::vector<int> BasisIndex::axes() const {
  std::vector<int> out;
  for (int a = 0; a < kMaxDimension; ++a) {
    if (contains(a)) out.push_back(a);
  }
  return out;
}

std::string BasisIndex::str() const {
  if (bits == 0) return "1";
  std::string s;
  for (int a : axes()) {
    if (!s.empty()) s += "^";
    s += "d";
    s += axis_letter(a);
  }
  return s;
}

bool BasisIndexLess::operator()(BasisIndex a, BasisIndex b) const {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  std::uint32_t x = a.bits;
  std::uint32_t y = b.bits;
  while (x && y) {
    const int ax = std::countr_zero(x);
    const int ay = std::countr_zero(y);
    if (ax != ay) return ax < ay;
    x &= x - 1;
    y &= y - 1;
  }
  return false;
}

int wedge_sign(BasisIndex a, BasisIndex b) {
  if (a.bits & b.bits) return 0;
  // Count transpositions needed to merge: pairs (i in a, j in b) with i > j.
  int inversions = 0;
  for (int j = 0; j < kMaxDimension; ++j) {
    if (!b.contains(j)) continue;
    inversions += std::popcount(a.bits >> (j + 1));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

FrameVector::FrameVector(int dim, std::vector<Rational> comps) : comps_(std::move(comps)) {
  if (static_cast<int>(comps_.size()) != dim) throw std::invalid_argument("component count mismatch");
}

FrameVector FrameVector::axis(int dim, int axis) {
  if (axis < 0 || axis >= dim) throw std::invalid_argument("axis out of range");
  FrameVector v(dim);
  v.component(axis) = Rational(1);
  return v;
}

Rational FrameVector::contract(const FrameVector& other) const {
  if (dimension() != other.dimension()) throw std::invalid_argument("dimension mismatch");
  Rational sum(0);
  for (int a = 0; a < dimension(); ++a) sum += component(a) * other.component(a);
  return sum;
}

FrameVector operator+(const FrameVector& a, const FrameVector& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("dimension mismatch");
  FrameVector r(a.dimension());
  for (int i = 0; i < a.dimension(); ++i) r.component(i) = a.component(i) + b.component(i);
  return r;
}

Form::Form(int dim) : dim_(dim) {
  if (dim < 1 || dim > kMaxDimension) throw std::invalid_argument("form dimension out of range");
}

Form Form::scalar(int dim, const Poly& p) {
  Form f(dim);
  f.add_term(BasisIndex{}, p);
  return f;
}

Form Form::basis(int dim, BasisIndex idx) {
  Form f(dim);
  f.add_term(idx, Poly::constant(dim, Rational(1)));
  return f;
}

Poly Form::coefficient(BasisIndex idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Poly(dim_) : it->second;
}

void Form::add_term(BasisIndex idx, const Poly& p) {
  if (p.dimension() != dim_) throw std::invalid_argument("coefficient dimension mismatch");
  if (idx.bits >= (1u << dim_)) throw std::invalid_argument("basis index outside dimension");
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.emplace(idx, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Form Form::grade(int p) const {
  Form r(dim_);
  for (const auto& [idx, coef] : terms_) {
    if (idx.degree() == p) r.terms_.emplace(idx, coef);
  }
  return r;
}

std::vector<int> Form::grades() const {
  std::vector<int> out;
  for (const auto& [idx, coef] : terms_) {
    const int d = idx.degree();
    if (out.empty() || out.back() != d) out.push_back(d);
  }
  return out;
}

bool Form::is_homogeneous(int* degree_out) const {
  const auto gs = grades();
  if (gs.size() > 1) return false;
  if (degree_out) *degree_out = gs.empty() ? 0 : gs.front();
  return true;
}

Form Form::operator-() const {
  Form r(dim_);
  for (const auto& [idx, coef] : terms_) r.terms_.emplace(idx, -coef);
  return r;
}

Form& Form::operator+=(const Form& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("form dimension mismatch");
  for (const auto& [idx, coef] : o.terms_) add_term(idx, coef);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("form dimension mismatch");
  for (const auto& [idx, coef] : o.terms_) add_term(idx, -coef);
  return *this;
}

Form Form::scaled(const Rational& c) const {
  Form r(dim_);
  if (c.is_zero()) return r;
  for (const auto& [idx, coef] : terms_) r.terms_.emplace(idx, coef.scaled(c));
  return r;
}

Form Form::scaled(const Poly& p) const {
  Form r(dim_);
  for (const auto& [idx, coef] : terms_) r.add_term(idx, coef * p);
  return r;
}

std::string Form::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [idx, coef] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << coef.str() << ")";
    if (idx.bits != 0) out << " " << idx.str();
  }
  return out.str();
}

// Accepts the canonical rendering: '+'-separated terms "(poly) dt^dx", with
// an optional basis token. A bare leading '-' on a term is folded into the
// coefficient.
Form Form::parse(int dim, std::string_view text) {
  Form result(dim);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i < text.size() && text[i] == '0' && text.substr(i).find_first_not_of("0 \t") == std::string_view::npos) {
    return result;
  }
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    int sign = 1;
    if (!first) {
      if (text[i] == '+') {
        ++i;
      } else if (text[i] == '-') {
        sign = -1;
        ++i;
      } else {
        throw std::invalid_argument("form: expected '+' between terms");
      }
      skip_ws();
    } else if (text[i] == '-') {
      sign = -1;
      ++i;
      skip_ws();
    }
    if (i >= text.size() || text[i] != '(') throw std::invalid_argument("form: expected '(poly)'");
    const std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) throw std::invalid_argument("form: unbalanced parenthesis");
    Poly coef = Poly::parse(dim, text.substr(i + 1, close - i - 1));
    i = close + 1;
    skip_ws();
    BasisIndex idx;
    if (i < text.size() && text[i] == '1') {
      ++i;
    } else {
      int last_axis = -1;
      while (i < text.size() && text[i] == 'd') {
        ++i;
        if (i >= text.size()) throw std::invalid_argument("form: dangling 'd'");
        const int axis = axis_from_letter(text[i], dim);
        if (axis < 0) throw std::invalid_argument("form: unknown coordinate in basis");
        if (axis <= last_axis) throw std::invalid_argument("form: basis axes must strictly increase");
        last_axis = axis;
        idx.bits |= 1u << axis;
        ++i;
        if (i < text.size() && text[i] == '^') {
          ++i;
          continue;
        }
        break;
      }
    }
    result.add_term(idx, sign < 0 ? Poly(dim) - coef : coef);
    first = false;
  }
  if (first) throw std::invalid_argument("form: empty input");
  return result;
}

Form one_form(const FrameVector& covector) {
  Form f(covector.dimension());
  for (int a = 0; a < covector.dimension(); ++a) {
    const Rational& c = covector.component(a);
    if (is_zero(c)) continue;
    f.add_term(BasisIndex{1u << a}, Poly::constant(covector.dimension(), c));
  }
  return f;
}

}  // namespace descent
