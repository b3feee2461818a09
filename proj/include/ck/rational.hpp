#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "ck/errors.hpp"

namespace ck {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// q ∈ {0, 1, 2, ...}
inline bool is_natural(const Rational& q) { return is_integer(q) && q >= 0; }

inline long to_long(const Rational& q) {
  if (!is_integer(q)) throw StructuralError("rational is not an integer");
  return numerator(q).convert_to<long>();
}

/// Parse "p/q", "p", or a decimal like "0.25" (interpreted exactly) into a
/// rational.  Throws DomainError on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

/// Element of the field Q(i, sqrt(2)): (a + b*sqrt2) + i*(c + d*sqrt2).
/// Closed under the ring operations needed for exact determinant expansions
/// in the fixed orthonormal coordinates (where off-diagonal matrix units
/// carry 1/sqrt2 factors and hermitian units carry +-i/sqrt2).
struct ExactScalar {
  Rational re1, re2;  // re1 + re2*sqrt2
  Rational im1, im2;  // i*(im1 + im2*sqrt2)

  ExactScalar() = default;
  ExactScalar(Rational a) : re1(std::move(a)) {}
  ExactScalar(Rational a, Rational b, Rational c, Rational d)
      : re1(std::move(a)), re2(std::move(b)), im1(std::move(c)), im2(std::move(d)) {}

  static ExactScalar sqrt2() { return ExactScalar(0, 1, 0, 0); }
  static ExactScalar inv_sqrt2() { return ExactScalar(0, Rational(1, 2), 0, 0); }
  static ExactScalar i_unit() { return ExactScalar(0, 0, 1, 0); }

  bool is_zero() const { return re1 == 0 && re2 == 0 && im1 == 0 && im2 == 0; }
  bool is_rational() const { return re2 == 0 && im1 == 0 && im2 == 0; }
  const Rational& rational_part() const { return re1; }

  std::complex<double> value() const {
    static const double s2 = 1.4142135623730950488;
    return {to_double(re1) + s2 * to_double(re2), to_double(im1) + s2 * to_double(im2)};
  }

  friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
    return {x.re1 + y.re1, x.re2 + y.re2, x.im1 + y.im1, x.im2 + y.im2};
  }
  friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) {
    return {x.re1 - y.re1, x.re2 - y.re2, x.im1 - y.im1, x.im2 - y.im2};
  }
  friend ExactScalar operator-(const ExactScalar& x) {
    return {-x.re1, -x.re2, -x.im1, -x.im2};
  }
  friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
    // (a1 + b1 s)(a2 + b2 s) = a1 a2 + 2 b1 b2 + (a1 b2 + b1 a2) s,  s = sqrt2
    auto mul = [](const Rational& a1, const Rational& b1, const Rational& a2,
                  const Rational& b2) {
      return std::pair<Rational, Rational>{a1 * a2 + 2 * b1 * b2, a1 * b2 + b1 * a2};
    };
    auto [rr1, rr2] = mul(x.re1, x.re2, y.re1, y.re2);
    auto [ii1, ii2] = mul(x.im1, x.im2, y.im1, y.im2);
    auto [ri1, ri2] = mul(x.re1, x.re2, y.im1, y.im2);
    auto [ir1, ir2] = mul(x.im1, x.im2, y.re1, y.re2);
    return ExactScalar{rr1 - ii1, rr2 - ii2, ri1 + ir1, ri2 + ir2};
  }
  ExactScalar& operator+=(const ExactScalar& y) { return *this = *this + y; }
  ExactScalar& operator-=(const ExactScalar& y) { return *this = *this - y; }
  ExactScalar& operator*=(const ExactScalar& y) { return *this = *this * y; }
  friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
    return x.re1 == y.re1 && x.re2 == y.re2 && x.im1 == y.im1 && x.im2 == y.im2;
  }
};

using RationalVec = std::vector<Rational>;

}  // namespace ck
