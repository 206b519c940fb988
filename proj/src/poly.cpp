#include <descent/poly.hpp>

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace descent {

namespace {
constexpr char kAxisLetters[kMaxDimension + 1] = "txyzuvwr";
}

char axis_letter(int axis) {
  if (axis < 0 || axis >= kMaxDimension) throw std::invalid_argument("axis out of range");
  return kAxisLetters[axis];
}

int axis_from_letter(char c, int dim) {
  for (int a = 0; a < dim; ++a) {
    if (kAxisLetters[a] == c) return a;
  }
  return -1;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (unsigned e : exps_) d += e;
  return d;
}

bool MonomialGradedLex::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.total_degree();
  const unsigned db = b.total_degree();
  if (da != db) return da < db;
  for (int i = 0; i < a.dimension(); ++i) {
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i);
  }
  return false;
}

Poly::Poly(int dim) : dim_(dim) {
  if (dim < 1 || dim > kMaxDimension) throw std::invalid_argument("polynomial dimension out of range");
}

Poly Poly::constant(int dim, const Rational& c) {
  Poly p(dim);
  p.add_term(Monomial(dim), c);
  return p;
}

Poly Poly::variable(int dim, int axis) {
  if (axis < 0 || axis >= dim) throw std::invalid_argument("axis out of range");
  Poly p(dim);
  p.add_term(Monomial(dim).with_exponent(axis, 1), Rational(1));
  return p;
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Poly::total_degree() const {
  return terms_.empty() ? 0u : terms_.rbegin()->first.total_degree();
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (m.dimension() != dim_) throw std::invalid_argument("monomial dimension mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Poly::check_same_dim(const Poly& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("polynomial dimension mismatch");
}

Poly Poly::operator-() const {
  Poly r(dim_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same_dim(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same_dim(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same_dim(b);
  Poly r(a.dim_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m(a.dim_);
      for (int i = 0; i < a.dim_; ++i) m = m.with_exponent(i, ma.exponent(i) + mb.exponent(i));
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  Poly r(dim_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Poly Poly::partial(int axis) const {
  if (axis < 0 || axis >= dim_) throw std::invalid_argument("axis out of range");
  Poly r(dim_);
  for (const auto& [m, c] : terms_) {
    const unsigned e = m.exponent(axis);
    if (e == 0) continue;
    r.add_term(m.with_exponent(axis, e - 1), c * Rational(e));
  }
  return r;
}

bool Poly::depends_on(int axis) const {
  if (axis < 0 || axis >= dim_) throw std::invalid_argument("axis out of range");
  for (const auto& [m, c] : terms_) {
    if (m.exponent(axis) > 0) return true;
  }
  return false;
}

double Poly::eval(std::span<const double> coords) const {
  if (static_cast<int>(coords.size()) != dim_) throw std::invalid_argument("coordinate count mismatch");
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = to_double(c);
    for (int i = 0; i < dim_; ++i) {
      for (unsigned e = 0; e < m.exponent(i); ++e) t *= coords[static_cast<std::size_t>(i)];
    }
    sum += t;
  }
  return sum;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Descending graded-lex, leading term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    std::string vars;
    for (int a = 0; a < dim_; ++a) {
      const unsigned e = m.exponent(a);
      if (e == 0) continue;
      vars += axis_letter(a);
      if (e > 1) vars += "^" + std::to_string(e);
    }
    if (vars.empty()) {
      out << to_string(mag);
    } else {
      if (mag != 1) out << to_string(mag);
      out << vars;
    }
  }
  return out.str();
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() { return s[i]; }
};

std::string read_digits(Cursor& c) {
  std::string d;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) d += c.s[c.i++];
  return d;
}

}  // namespace

// Grammar: sum of terms separated by '+'/'-'. A term is an optional rational
// coefficient followed by variable factors "x", "x^3", with optional '*' or
// whitespace between factors. "0" parses to the zero polynomial.
Poly Poly::parse(int dim, std::string_view text) {
  Poly result(dim);
  Cursor c{text};
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    c.skip_ws();
    if (c.peek() == '+' || c.peek() == '-') {
      sign = c.peek() == '-' ? -1 : 1;
      ++c.i;
    } else if (!first) {
      throw std::invalid_argument("polynomial: expected '+' or '-' between terms");
    }
    c.skip_ws();
    // Allow an extra unary sign after the separator, as in "+ -2x".
    if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
      if (c.peek() == '-') sign = -sign;
      ++c.i;
      c.skip_ws();
    }

    Rational coef(1);
    bool saw_anything = false;
    if (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
      std::string num = read_digits(c);
      std::string den;
      if (c.i < c.s.size() && c.s[c.i] == '/') {
        ++c.i;
        den = read_digits(c);
        if (den.empty()) throw std::invalid_argument("polynomial: missing denominator");
      }
      coef = den.empty() ? Rational(BigInt(num)) : Rational(BigInt(num), BigInt(den));
      saw_anything = true;
    }

    Monomial mono(dim);
    while (true) {
      c.skip_ws();
      if (c.i < c.s.size() && c.s[c.i] == '*') {
        ++c.i;
        c.skip_ws();
      }
      if (c.i >= c.s.size()) break;
      const char ch = c.s[c.i];
      if (!std::isalpha(static_cast<unsigned char>(ch))) break;
      const int axis = axis_from_letter(ch, dim);
      if (axis < 0) throw std::invalid_argument(std::string("polynomial: unknown variable '") + ch + "'");
      ++c.i;
      unsigned exp = 1;
      if (c.i < c.s.size() && c.s[c.i] == '^') {
        ++c.i;
        std::string d = read_digits(c);
        if (d.empty()) throw std::invalid_argument("polynomial: missing exponent");
        exp = static_cast<unsigned>(std::stoul(d));
      }
      mono = mono.with_exponent(axis, mono.exponent(axis) + exp);
      saw_anything = true;
    }

    if (!saw_anything) throw std::invalid_argument("polynomial: empty term");
    result.add_term(mono, sign < 0 ? Rational(-coef) : coef);
    first = false;
  }
  if (first) throw std::invalid_argument("polynomial: empty input");
  return result;
}

}  // namespace descent
