// Oracle tests for the exact scalar arithmetic layer.  Expected values are
// frozen by hand, not computed by the code under test.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liecheck/scalar.hpp"

using namespace liecheck;

TEST_CASE("rational normalization and arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 5) == Rational(0));
  CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
  CHECK((Rational(1, 2) - Rational(1, 3)) == Rational(1, 6));
  CHECK((Rational(3, 4) * Rational(2, 9)) == Rational(1, 6));
  CHECK((Rational(3, 4) / Rational(9, 2)) == Rational(1, 6));
  CHECK(Rational(7, 3).to_string() == "7/3");
  CHECK(Rational(-7).to_string() == "-7");
  CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational overflow is detected, not wrapped") {
  Rational big(INT64_MAX - 1);
  CHECK_THROWS_AS(big * big, overflow_error);
  CHECK_THROWS_AS(big + Rational(INT64_MAX - 1), overflow_error);
  // near-limit values that reduce are fine
  CHECK((Rational(INT64_MAX - 1, 2) * Rational(2)) == Rational(INT64_MAX - 1));
}

TEST_CASE("base number field structure of Q(i, sqrt2)") {
  BaseNumber i = BaseNumber::i();
  BaseNumber r = BaseNumber::sqrt2();
  CHECK(i * i == BaseNumber(-1));
  CHECK(r * r == BaseNumber(2));
  CHECK((i * r) * (i * r) == BaseNumber(-2));
  CHECK((i * r).to_string() == "i*sqrt2");

  // (1 + i) * (1 - i) = 2
  BaseNumber z(Rational(1), Rational(1), Rational(0), Rational(0));
  CHECK(z * z.conjugate() == BaseNumber(2));

  // (1 + sqrt2)(−1 + sqrt2) = 1
  BaseNumber w(Rational(1), Rational(0), Rational(1), Rational(0));
  BaseNumber wc(Rational(-1), Rational(0), Rational(1), Rational(0));
  CHECK(w * wc == BaseNumber(1));

  // inverse of a generic element, checked by multiplication
  BaseNumber g(Rational(3), Rational(-1), Rational(1, 2), Rational(2));
  CHECK(g * g.inverse() == BaseNumber(1));
  CHECK(g.inverse() * g == BaseNumber(1));
  CHECK_THROWS_AS(BaseNumber().inverse(), std::domain_error);

  // hand value: 1/(1+i) = (1-i)/2
  CHECK(z.inverse() == BaseNumber(Rational(1, 2), Rational(-1, 2), Rational(0),
                                  Rational(0)));
  // hand value: 1/sqrt2 = sqrt2/2
  CHECK(r.inverse() == BaseNumber(Rational(0), Rational(0), Rational(1, 2),
                                  Rational(0)));
}

TEST_CASE("base number rendering is canonical") {
  CHECK(BaseNumber().to_string() == "0");
  CHECK(BaseNumber(1).to_string() == "1");
  CHECK((-BaseNumber::i()).to_string() == "-i");
  BaseNumber m(Rational(2), Rational(1), Rational(0), Rational(-3, 2));
  CHECK(m.to_string() == "2+i-3/2*i*sqrt2");
}

TEST_CASE("scalar polynomial arithmetic with parameters and u powers") {
  Scalar a = Scalar::param("alpha");
  Scalar u2 = Scalar::u_power(2);
  Scalar s = Scalar(Rational(1, 2)) * Scalar::i() * a * a * Scalar::u_power(-3);
  CHECK(s.to_string() == "(1/2*i)*alpha^2*u^-3");

  Scalar p = (a + Scalar(1)) * (a - Scalar(1));
  CHECK(p == a * a - Scalar(1));
  CHECK(p.degree_in(Param::lookup("alpha")) == 2);
  CHECK(p.coeff_of_power(Param::lookup("alpha"), 2) == Scalar(1));
  CHECK(p.coeff_of_power(Param::lookup("alpha"), 0) == Scalar(-1));
  CHECK(p.coeff_of_power(Param::lookup("alpha"), 1).is_zero());

  CHECK((u2 * Scalar::u_power(-2)) == Scalar(1));
  CHECK(s.u_shift(3).part_upow_zero() == Scalar(Rational(1, 2)) * Scalar::i() * a * a);
  CHECK(a.pow(3) == a * a * a);
}

TEST_CASE("scalar substitution") {
  Scalar a = Scalar::param("alpha");
  Scalar b = Scalar::param("beta");
  Scalar expr = a * b + Scalar(2) * a + Scalar(5);
  std::map<Param, Scalar> values{{Param::lookup("alpha"), Scalar(-1)}};
  Scalar sub = expr.substitute(values);
  CHECK(sub == -b + Scalar(3));
  std::map<Param, Scalar> rest{{Param::lookup("beta"), Scalar(3)}};
  CHECK(sub.substitute(rest) == Scalar(0));
}

TEST_CASE("scalar conjugation fixes parameters and u") {
  Scalar a = Scalar::param("alpha");
  Scalar s = Scalar::i() * a * Scalar::u_power(1) + Scalar(2);
  CHECK(s.conjugate() == -Scalar::i() * a * Scalar::u_power(1) + Scalar(2));
  CHECK(s.conjugate().conjugate() == s);
}

TEST_CASE("u -> infinity limits") {
  Scalar keep = Scalar(3) + Scalar::param("alpha");
  Scalar drop = Scalar(5) * Scalar::u_power(-2);
  Scalar diverge = Scalar::u_power(1);

  CHECK((keep + drop).limit_u_to_infinity() == keep);
  CHECK_THROWS_AS((keep + diverge).limit_u_to_infinity(), divergent_limit_error);
  CHECK((keep + drop + diverge).part_upow_positive() == diverge);
  CHECK((keep + drop + diverge).part_upow_negative() == drop);
  CHECK((keep + drop).max_upow() == 0);
  CHECK(diverge.max_upow() == 1);
}

TEST_CASE("constant scalar inversion") {
  Scalar c = Scalar(Rational(2)) * Scalar::i();
  CHECK(c * c.inverse_constant() == Scalar(1));
  CHECK_THROWS_AS(Scalar::param("alpha").inverse_constant(), std::domain_error);
  CHECK_THROWS_AS(Scalar().inverse_constant(), std::domain_error);
}

TEST_CASE("parameter registry is closed and capped") {
  // alpha/beta already interned above; idempotent re-intern
  Param a1 = Param::intern("alpha");
  Param a2 = Param::intern("alpha");
  CHECK(a1 == a2);
  CHECK(a1.name() == "alpha");
  CHECK_THROWS_AS(Param::lookup("no-such-parameter"), std::out_of_range);
  auto names = registered_params();
  CHECK(names.size() >= 2);
  CHECK(names.size() <= static_cast<std::size_t>(kMaxParams));
}

TEST_CASE("rendering is stable under term reordering") {
  Scalar a = Scalar::param("alpha");
  Scalar b = Scalar::param("beta");
  Scalar s1 = a * b + Scalar(2) * a + b;
  Scalar s2 = b + Scalar(2) * a + b * a;  // same content, different build order
  CHECK(s1 == s2);
  CHECK(s1.to_string() == s2.to_string());
}
