#pragma once

/// Exact arithmetic in the degree-4 number field Q(i, sqrt2).
///
/// Elements are stored on the fixed basis {1, i, sqrt2, i*sqrt2} with rational
/// coordinates.  The field is closed under all four operations; inversion goes
/// through the product of the three nontrivial Galois conjugates, whose product
/// with the element itself is rational.

#include <array>
#include <stdexcept>
#include <string>

#include "liecheck/rational.hpp"

namespace liecheck {

class BaseNumber {
public:
  BaseNumber() = default;
  BaseNumber(const Rational& re) { c_[0] = re; }  // NOLINT: implicit by design
  BaseNumber(std::int64_t re) { c_[0] = Rational(re); }  // NOLINT
  BaseNumber(Rational one, Rational i, Rational rt2, Rational i_rt2)
      : c_{one, i, rt2, i_rt2} {}

  static BaseNumber i() { return BaseNumber(0, 1, 0, 0); }
  static BaseNumber sqrt2() { return BaseNumber(0, 0, 1, 0); }

  /// Coordinate on basis element k (0:1, 1:i, 2:sqrt2, 3:i*sqrt2).
  const Rational& coord(int k) const { return c_[static_cast<std::size_t>(k)]; }

  bool is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
  }
  bool is_one() const {
    return c_[0].is_one() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
  }
  bool is_rational() const {
    return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
  }
  /// The rational part, valid only when is_rational().
  const Rational& rational_part() const { return c_[0]; }

  BaseNumber operator-() const {
    return BaseNumber(-c_[0], -c_[1], -c_[2], -c_[3]);
  }

  friend BaseNumber operator+(const BaseNumber& a, const BaseNumber& b) {
    return BaseNumber(a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2],
                      a.c_[3] + b.c_[3]);
  }
  friend BaseNumber operator-(const BaseNumber& a, const BaseNumber& b) {
    return a + (-b);
  }
  friend BaseNumber operator*(const BaseNumber& a, const BaseNumber& b) {
    const Rational &a0 = a.c_[0], &a1 = a.c_[1], &a2 = a.c_[2], &a3 = a.c_[3];
    const Rational &b0 = b.c_[0], &b1 = b.c_[1], &b2 = b.c_[2], &b3 = b.c_[3];
    Rational two(2);
    return BaseNumber(
        a0 * b0 - a1 * b1 + two * (a2 * b2 - a3 * b3),
        a0 * b1 + a1 * b0 + two * (a2 * b3 + a3 * b2),
        a0 * b2 + a2 * b0 - a1 * b3 - a3 * b1,
        a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1);
  }
  friend BaseNumber operator/(const BaseNumber& a, const BaseNumber& b) {
    return a * b.inverse();
  }

  BaseNumber& operator+=(const BaseNumber& o) { return *this = *this + o; }
  BaseNumber& operator-=(const BaseNumber& o) { return *this = *this - o; }
  BaseNumber& operator*=(const BaseNumber& o) { return *this = *this * o; }
  BaseNumber& operator/=(const BaseNumber& o) { return *this = *this / o; }

  friend bool operator==(const BaseNumber& a, const BaseNumber& b) {
    return a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1] && a.c_[2] == b.c_[2] &&
           a.c_[3] == b.c_[3];
  }
  friend bool operator!=(const BaseNumber& a, const BaseNumber& b) {
    return !(a == b);
  }

  /// Complex conjugation: i -> -i.
  BaseNumber conjugate() const {
    return BaseNumber(c_[0], -c_[1], c_[2], -c_[3]);
  }
  /// Galois conjugation sqrt2 -> -sqrt2.
  BaseNumber conjugate_sqrt2() const {
    return BaseNumber(c_[0], c_[1], -c_[2], -c_[3]);
  }

  BaseNumber inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in Q(i,sqrt2)");
    BaseNumber p = conjugate() * conjugate_sqrt2() * conjugate().conjugate_sqrt2();
    BaseNumber n = *this * p;  // rational by construction
    if (!n.is_rational() || n.c_[0].is_zero())
      throw std::logic_error("field norm failed to be a nonzero rational");
    Rational inv_n = Rational(1) / n.c_[0];
    return BaseNumber(p.c_[0] * inv_n, p.c_[1] * inv_n, p.c_[2] * inv_n,
                      p.c_[3] * inv_n);
  }

  /// Canonical rendering, e.g. "1", "-i", "1/2*sqrt2", "2+i-3/2*i*sqrt2".
  std::string to_string() const {
    static const char* kBasis[4] = {"", "i", "sqrt2", "i*sqrt2"};
    std::string out;
    for (int k = 0; k < 4; ++k) {
      const Rational& q = c_[static_cast<std::size_t>(k)];
      if (q.is_zero()) continue;
      std::string mag = q.abs().to_string();
      std::string piece;
      if (k == 0) {
        piece = mag;
      } else if (q.abs().is_one()) {
        piece = kBasis[k];
      } else {
        piece = mag + "*" + kBasis[k];
      }
      if (out.empty()) {
        out = (q.sign() < 0 ? "-" : "") + piece;
      } else {
        out += (q.sign() < 0 ? "-" : "+") + piece;
      }
    }
    return out.empty() ? "0" : out;
  }

private:
  std::array<Rational, 4> c_{};  // 1, i, sqrt2, i*sqrt2
};

}  // namespace liecheck
