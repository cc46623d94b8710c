#include "htg/quadratic.hpp"

#include <cctype>
#include <cmath>

#include "htg/error.hpp"
#include "text.hpp"

namespace htg {

std::string format_rational(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
  s = detail::trim(s);
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw Error(ErrorKind::Parse, "expected integer in '" + std::string(whole) + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw Error(ErrorKind::Parse, "expected integer in '" + std::string(whole) + "'");
  Integer v(std::string(s.substr(i)));
  return s[0] == '-' ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = detail::trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(text.substr(0, slash), text), den);
}

int sign(const Rational& r) { return r.sign(); }

std::string_view to_string(Ordering o) noexcept {
  switch (o) {
    case Ordering::Less: return "less";
    case Ordering::Equal: return "equal";
    case Ordering::Greater: return "greater";
  }
  return "?";
}

std::pair<std::int64_t, std::int64_t> squarefree_decompose(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "radicand must be positive");
  std::int64_t factor = 1;
  std::int64_t rest = n;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      factor *= p;
    }
  }
  return {rest, factor};
}

QuadraticValue::QuadraticValue(Rational a, Rational b, std::int64_t radicand)
    : a_(std::move(a)), b_(std::move(b)) {
  const auto [free, factor] = squarefree_decompose(radicand);
  m_ = free;
  b_ *= factor;
  canonicalize();
}

void QuadraticValue::canonicalize() {
  if (m_ == 1) {
    a_ += b_;
    b_ = 0;
  }
}

QuadraticValue& QuadraticValue::operator+=(const QuadraticValue& o) {
  if (m_ != o.m_) {
    if (o.b_ == 0) {
      a_ += o.a_;
      return *this;
    }
    if (b_ != 0)
      throw Error(ErrorKind::InvalidArgument, "cannot add values over different radicands");
    m_ = o.m_;
  }
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadraticValue QuadraticValue::operator-() const {
  QuadraticValue r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadraticValue operator*(const QuadraticValue& x, const Rational& s) {
  QuadraticValue r = x;
  r.a_ *= s;
  r.b_ *= s;
  return r;
}

QuadraticValue operator*(const QuadraticValue& x, const QuadraticValue& y) {
  if (y.b_ == 0) return x * y.a_;
  if (x.b_ == 0) return y * x.a_;
  if (x.m_ != y.m_)
    throw Error(ErrorKind::InvalidArgument, "cannot multiply values over different radicands");
  QuadraticValue r;
  r.m_ = x.m_;
  r.a_ = x.a_ * y.a_ + x.b_ * y.b_ * x.m_;
  r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
  return r;
}

double QuadraticValue::approx() const {
  return a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(static_cast<double>(m_));
}

namespace {

// sign(a + b*sqrt(m)), m square-free.
int sign_of(const Rational& a, const Rational& b, std::int64_t m) {
  const int sa = a.sign();
  const int sb = m == 1 ? 0 : b.sign();
  if (m == 1) return Rational(a + b).sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger magnitude wins; compare a^2 with b^2 m.
  const Rational lhs = a * a;
  const Rational rhs = b * b * m;
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

// sign(a + b*sqrt(p) + c*sqrt(q)) with p != q, both square-free.
int sign_of(const Rational& a, const Rational& b, std::int64_t p, const Rational& c, std::int64_t q) {
  const int sl = sign_of(a, b, p);
  const int sc = q == 1 ? 0 : c.sign();
  if (sc == 0) return q == 1 ? sign_of(a + c, b, p) : sl;
  if (sl == 0 || sl == sc) return sc;
  // |a + b sqrt p|^2 - c^2 q = (a^2 + b^2 p - c^2 q) + 2ab sqrt p.
  const int s = sign_of(a * a + b * b * p - c * c * q, 2 * a * b, p);
  if (s > 0) return sl;
  if (s < 0) return sc;
  return 0;
}

}  // namespace

int sign(const QuadraticValue& x) { return sign_of(x.a(), x.b(), x.m()); }

Ordering quad_compare(const QuadraticValue& u, const QuadraticValue& v) {
  int s = 0;
  if (u.m() == v.m())
    s = sign_of(u.a() - v.a(), u.b() - v.b(), u.m());
  else
    s = sign_of(u.a() - v.a(), u.b(), u.m(), -v.b(), v.m());
  return s < 0 ? Ordering::Less : s > 0 ? Ordering::Greater : Ordering::Equal;
}

std::string format_quadratic(const QuadraticValue& x) {
  return format_rational(x.a()) + " + " + format_rational(x.b()) + "*sqrt(" + std::to_string(x.m()) + ")";
}

QuadraticValue parse_quadratic(std::string_view text) {
  const std::string_view whole = detail::trim(text);
  const auto pos = whole.find("sqrt(");
  if (pos == std::string_view::npos) return QuadraticValue(parse_rational(whole));
  const auto close = whole.find(')', pos);
  if (close == std::string_view::npos || !detail::trim(whole.substr(close + 1)).empty())
    throw Error(ErrorKind::Parse, "malformed quadratic value '" + std::string(whole) + "'");
  const Integer radicand = parse_integer(whole.substr(pos + 5, close - pos - 5), whole);
  if (radicand < 1 || radicand > Integer(INT64_MAX))
    throw Error(ErrorKind::Parse, "radicand out of range in '" + std::string(whole) + "'");
  std::string_view left = detail::trim(whole.substr(0, pos));
  Rational a = 0;
  Rational b = 1;
  if (!left.empty()) {
    if (left.back() != '*') throw Error(ErrorKind::Parse, "expected '*' before sqrt in '" + std::string(whole) + "'");
    left = detail::trim(left.substr(0, left.size() - 1));
    const auto plus = left.rfind('+');
    if (plus != std::string_view::npos && plus > 0) {
      a = parse_rational(left.substr(0, plus));
      b = parse_rational(left.substr(plus + 1));
    } else {
      b = parse_rational(left);
    }
  }
  return QuadraticValue(a, b, radicand.convert_to<std::int64_t>());
}

}  // namespace htg
