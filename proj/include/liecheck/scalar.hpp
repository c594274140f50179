#pragma once

/// Symbolic scalars: exact Laurent polynomials in one contraction symbol `u`
/// and up to eight named parameters, with coefficients in Q(i, sqrt2).
///
/// A Scalar is a sorted vector of terms (coefficient * parameter-monomial *
/// u^k).  The symbol u is the contraction scale; u^2 plays the role of the
/// speed parameter c, and limits are taken as u -> infinity by inspecting the
/// u-exponent of each term.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liecheck/base_number.hpp"

namespace liecheck {

/// Thrown when a u->infinity limit is requested for a scalar that still has
/// terms of positive u-degree.
class divergent_limit_error : public std::runtime_error {
public:
  explicit divergent_limit_error(const std::string& what)
      : std::runtime_error(what) {}
};

constexpr int kMaxParams = 8;

/// Interned symbolic parameter (closed global registry, at most kMaxParams).
class Param {
public:
  /// Find-or-create the parameter with this name.
  static Param intern(const std::string& name);
  /// Look up an existing parameter; throws std::out_of_range if unknown.
  static Param lookup(const std::string& name);

  const std::string& name() const;
  int id() const { return id_; }

  friend bool operator==(Param a, Param b) { return a.id_ == b.id_; }
  friend bool operator!=(Param a, Param b) { return a.id_ != b.id_; }
  friend bool operator<(Param a, Param b) { return a.id_ < b.id_; }

private:
  explicit Param(int id) : id_(id) {}
  int id_;
};

/// Product of parameter powers and a (possibly negative) power of u.
struct Monomial {
  std::array<std::uint8_t, kMaxParams> pexp{};
  int upow = 0;

  bool is_one() const {
    if (upow != 0) return false;
    for (auto e : pexp)
      if (e != 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.pexp == b.pexp && a.upow == b.upow;
  }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.pexp != b.pexp) return a.pexp < b.pexp;
    return a.upow < b.upow;
  }

  Monomial operator*(const Monomial& o) const;
  std::string to_string() const;  // "a^2*u^-3", "" for the unit monomial
};

class Scalar {
public:
  Scalar() = default;
  Scalar(const Rational& q) { set_constant(BaseNumber(q)); }   // NOLINT
  Scalar(std::int64_t n) { set_constant(BaseNumber(n)); }      // NOLINT
  Scalar(const BaseNumber& b) { set_constant(b); }             // NOLINT

  static Scalar param(Param p);
  static Scalar param(const std::string& name) { return param(Param::intern(name)); }
  /// u^k.
  static Scalar u_power(int k);
  static Scalar i() { return Scalar(BaseNumber::i()); }
  static Scalar sqrt2() { return Scalar(BaseNumber::sqrt2()); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  /// The value as a plain field element, if parameter- and u-free.
  std::optional<BaseNumber> as_base() const {
    if (terms_.empty()) return BaseNumber();
    if (terms_.size() == 1 && terms_[0].mono.is_one()) return terms_[0].coeff;
    return std::nullopt;
  }

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar pow(unsigned e) const;

  /// Complex conjugation: i -> -i on coefficients; parameters and u are fixed.
  Scalar conjugate() const;

  /// Multiply by u^k.
  Scalar u_shift(int k) const;

  /// Replace parameters by the given scalars (missing parameters stay).
  Scalar substitute(const std::map<Param, Scalar>& values) const;

  /// u -> infinity: drops terms of negative u-degree, keeps degree 0, throws
  /// divergent_limit_error when positive-degree terms remain.
  Scalar limit_u_to_infinity() const;

  /// Terms of positive / zero / negative u-degree, split out (for structured
  /// contraction reporting).
  Scalar part_upow_positive() const;
  Scalar part_upow_zero() const;
  Scalar part_upow_negative() const;
  int max_upow() const;  // 0 for the zero scalar

  /// Multiplicative inverse of a constant scalar; throws std::domain_error
  /// otherwise.
  Scalar inverse_constant() const;

  /// Parameters that actually occur.
  std::vector<Param> params_used() const;
  bool contains(Param p) const;
  int degree_in(Param p) const;
  /// Coefficient of p^k, with p stripped from the result.
  Scalar coeff_of_power(Param p, int k) const;

  /// Canonical rendering, e.g. "(1/2*i)*alpha^2*u^-3 + (1)".
  std::string to_string() const;

  struct Term {
    Monomial mono;
    BaseNumber coeff;
    friend bool operator==(const Term& a, const Term& b) {
      return a.mono == b.mono && a.coeff == b.coeff;
    }
  };
  const std::vector<Term>& terms() const { return terms_; }

private:
  void set_constant(const BaseNumber& b) {
    if (!b.is_zero()) terms_.push_back(Term{Monomial{}, b});
  }
  static Scalar from_terms(std::vector<Term> t);  // sorts and prunes zeros

  std::vector<Term> terms_;  // sorted by Monomial, no zero coefficients
};

inline Scalar operator*(const BaseNumber& b, const Scalar& s) { return Scalar(b) * s; }
inline Scalar operator*(const Rational& q, const Scalar& s) { return Scalar(q) * s; }

/// Names of all interned parameters, in id order (for reports).
std::vector<std::string> registered_params();

}  // namespace liecheck
