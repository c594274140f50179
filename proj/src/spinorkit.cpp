#include "liecheck/spinorkit.hpp"

#include <stdexcept>

namespace liecheck {

Mat2 Mat2::identity() {
  Mat2 m;
  m.at(1, 1) = BaseNumber(1);
  m.at(2, 2) = BaseNumber(1);
  return m;
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
  Mat2 m;
  for (int r = 1; r <= 2; ++r)
    for (int c = 1; c <= 2; ++c) m.at(r, c) = a.at(r, c) + b.at(r, c);
  return m;
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
  Mat2 m;
  for (int r = 1; r <= 2; ++r)
    for (int c = 1; c <= 2; ++c) m.at(r, c) = a.at(r, c) - b.at(r, c);
  return m;
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  Mat2 m;
  for (int r = 1; r <= 2; ++r)
    for (int c = 1; c <= 2; ++c) {
      BaseNumber s;
      for (int k = 1; k <= 2; ++k) s += a.at(r, k) * b.at(k, c);
      m.at(r, c) = s;
    }
  return m;
}

Mat2 Mat2::scaled(const BaseNumber& s) const {
  Mat2 m;
  for (int r = 1; r <= 2; ++r)
    for (int c = 1; c <= 2; ++c) m.at(r, c) = at(r, c) * s;
  return m;
}

Mat2 Mat2::transpose() const {
  Mat2 m;
  for (int r = 1; r <= 2; ++r)
    for (int c = 1; c <= 2; ++c) m.at(r, c) = at(c, r);
  return m;
}

Mat2 Mat2::dagger() const {
  Mat2 m;
  for (int r = 1; r <= 2; ++r)
    for (int c = 1; c <= 2; ++c) m.at(r, c) = at(c, r).conjugate();
  return m;
}

Mat2 pauli(int k) {
  Mat2 m;
  BaseNumber one(1), i = BaseNumber::i();
  switch (k) {
    case 1:
      m.at(1, 2) = one;
      m.at(2, 1) = one;
      return m;
    case 2:
      m.at(1, 2) = -i;
      m.at(2, 1) = i;
      return m;
    case 3:
      m.at(1, 1) = one;
      m.at(2, 2) = -one;
      return m;
    default:
      throw std::out_of_range("pauli index must be 1..3");
  }
}

Mat2 sigma4(int mu) {
  if (mu == 0) return Mat2::identity();
  if (mu >= 1 && mu <= 3) return pauli(mu);
  throw std::out_of_range("vector index must be 0..3");
}

Mat2 sigma4_tilde(int mu) {
  if (mu == 0) return Mat2::identity();
  if (mu >= 1 && mu <= 3) return pauli(mu).scaled(BaseNumber(-1));
  throw std::out_of_range("vector index must be 0..3");
}

Rational eta(int mu) {
  if (mu == 0) return Rational(1);
  if (mu >= 1 && mu <= 3) return Rational(-1);
  throw std::out_of_range("vector index must be 0..3");
}

Rational eps_lo(int a, int b) {
  if (a == 1 && b == 2) return Rational(1);
  if (a == 2 && b == 1) return Rational(-1);
  return Rational(0);
}

Rational eps_up(int a, int b) {
  if (a == 2 && b == 1) return Rational(1);
  if (a == 1 && b == 2) return Rational(-1);
  return Rational(0);
}

Mat2 sigma_mn(int mu, int nu) {
  Mat2 d = sigma4(mu) * sigma4_tilde(nu) - sigma4(nu) * sigma4_tilde(mu);
  return d.scaled(BaseNumber::i() * BaseNumber(Rational(1, 2)));
}

Mat2 sigmat_mn(int mu, int nu) {
  Mat2 d = sigma4_tilde(mu) * sigma4(nu) - sigma4_tilde(nu) * sigma4(mu);
  return d.scaled(BaseNumber::i() * BaseNumber(Rational(1, 2)));
}

Mat2 sigma_mn_low(int mu, int nu) {
  return sigma_mn(mu, nu).scaled(BaseNumber(eta(mu) * eta(nu)));
}

Mat2 sigmat_mn_low(int mu, int nu) {
  return sigmat_mn(mu, nu).scaled(BaseNumber(eta(mu) * eta(nu)));
}

Mat2 sigma_sym_low(int k) {
  Mat2 s = pauli(k);
  Mat2 m;
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) {
      BaseNumber v;
      for (int g = 1; g <= 2; ++g) v += s.at(a, g) * BaseNumber(eps_lo(b, g));
      m.at(a, b) = v;
    }
  return m;
}

int eps3(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  // parity of the permutation (i,j,k) of (1,2,3)
  int sign = 1;
  int v[3] = {i, j, k};
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (v[a] > v[b]) {
        std::swap(v[a], v[b]);
        sign = -sign;
      }
  return sign;
}

Rational OmegaMetric::up(int a, int b) const {
  if (a < 1 || b < 1 || a > 2 * n_ || b > 2 * n_)
    throw std::out_of_range("Omega index out of range");
  if (b == a + n_) return Rational(1);
  if (a == b + n_) return Rational(-1);
  return Rational(0);
}

}  // namespace liecheck
