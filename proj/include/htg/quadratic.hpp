#pragma once

// Exact numbers a + b*sqrt(m) with rational a, b and square-free m >= 1.

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace htg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// `p/q` in lowest terms, or `p` when q = 1.
std::string format_rational(const Rational& r);
Rational parse_rational(std::string_view text);

int sign(const Rational& r);

enum class Ordering { Less, Equal, Greater };
std::string_view to_string(Ordering o) noexcept;

class QuadraticValue {
 public:
  QuadraticValue() = default;
  explicit QuadraticValue(Rational a) : a_(std::move(a)) {}
  // Any positive radicand; square factors are pulled into b.
  QuadraticValue(Rational a, Rational b, std::int64_t radicand);

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  std::int64_t m() const noexcept { return m_; }

  QuadraticValue& operator+=(const QuadraticValue& o);
  friend QuadraticValue operator+(QuadraticValue x, const QuadraticValue& y) { return x += y; }
  QuadraticValue operator-() const;
  friend QuadraticValue operator-(const QuadraticValue& x, const QuadraticValue& y) { return x + (-y); }
  // Multiplication by a rational scalar.
  friend QuadraticValue operator*(const QuadraticValue& x, const Rational& s);
  // Product within one field Q(sqrt m).
  friend QuadraticValue operator*(const QuadraticValue& x, const QuadraticValue& y);

  // Radicands match exactly on structurally equal values.
  friend bool operator==(const QuadraticValue&, const QuadraticValue&) = default;

  double approx() const;

 private:
  void canonicalize();
  Rational a_{0};
  Rational b_{0};
  std::int64_t m_ = 1;
};

// Square-free part s and factor f with n = f^2 * s.
std::pair<std::int64_t, std::int64_t> squarefree_decompose(std::int64_t n);

// Exact sign of a + b*sqrt(m).
int sign(const QuadraticValue& x);

// Exact comparison across possibly different radicands by clearing one
// radical at a time; never approximates.
Ordering quad_compare(const QuadraticValue& u, const QuadraticValue& v);

// `a + b*sqrt(m)`.
std::string format_quadratic(const QuadraticValue& x);
QuadraticValue parse_quadratic(std::string_view text);

}  // namespace htg
