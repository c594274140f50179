#pragma once

/// Two-component spinor toolkit over Q(i, sqrt2): Pauli matrices, the
/// relativistic sigma^mu / tilde-sigma^mu pairs, their antisymmetrized
/// sigma^{mu nu} combinations, epsilon metrics, the 3d Levi-Civita symbol and
/// the symplectic metric Omega used for internal indices.
///
/// Conventions:
///   * spinor indices run over {1,2}; eps_{12} = eps^{21} = +1, so that
///     eps^{ab} eps_{bc} = delta^a_c and eps_{ab} eps^{bc} = delta_a^c;
///   * sigma^mu = (1, sigma_k), tilde-sigma^mu = (1, -sigma_k);
///   * metric eta = diag(+,-,-,-) with mu in {0,1,2,3};
///   * sigma^{mu nu} = (i/2)(sigma^mu tilde-sigma^nu - sigma^nu tilde-sigma^mu)
///     with index structure (sigma^{mu nu})_alpha^beta, and tilde-sigma^{mu nu}
///     likewise with structure (tilde-sigma^{mu nu})^alpha_beta;
///   * Omega is the 2N x 2N block matrix [[0, 1_N], [-1_N, 0]], with raised and
///     lowered components numerically equal.

#include <array>

#include "liecheck/base_number.hpp"

namespace liecheck {

/// Dense 2x2 matrix over Q(i,sqrt2); indices are 1-based.
struct Mat2 {
  std::array<std::array<BaseNumber, 2>, 2> e{};

  BaseNumber& at(int r, int c) {
    return e[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];
  }
  const BaseNumber& at(int r, int c) const {
    return e[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];
  }

  static Mat2 zero() { return Mat2{}; }
  static Mat2 identity();

  friend Mat2 operator+(const Mat2& a, const Mat2& b);
  friend Mat2 operator-(const Mat2& a, const Mat2& b);
  friend Mat2 operator*(const Mat2& a, const Mat2& b);
  Mat2 scaled(const BaseNumber& s) const;
  Mat2 transpose() const;
  /// Entrywise complex conjugate, then transpose.
  Mat2 dagger() const;
  friend bool operator==(const Mat2& a, const Mat2& b) { return a.e == b.e; }
};

/// Pauli matrix sigma_k, k in {1,2,3}.
Mat2 pauli(int k);

/// sigma^mu = (1, sigma_k); entries carry the index structure
/// (sigma^mu)_{alpha beta-dot}.
Mat2 sigma4(int mu);
/// tilde-sigma^mu = (1, -sigma_k); structure (tilde-sigma^mu)^{alpha-dot beta}.
Mat2 sigma4_tilde(int mu);

/// Minkowski metric component eta_{mu mu}, eta = diag(+,-,-,-).
Rational eta(int mu);

/// eps with lower indices: eps_{12} = +1.
Rational eps_lo(int a, int b);
/// eps with upper indices: eps^{21} = +1.
Rational eps_up(int a, int b);

/// (sigma^{mu nu})_alpha^beta = (i/2)(sigma^mu tilde-sigma^nu -
///                                    sigma^nu tilde-sigma^mu).
Mat2 sigma_mn(int mu, int nu);
/// (tilde-sigma^{mu nu})^alpha_beta.
Mat2 sigmat_mn(int mu, int nu);
/// Both vector indices lowered with eta.
Mat2 sigma_mn_low(int mu, int nu);
Mat2 sigmat_mn_low(int mu, int nu);

/// Symmetric lowered form (sigma_k)_{alpha beta} = sum_g (sigma_k)_{alpha g}
/// eps_{beta g}; symmetric in (alpha, beta).
Mat2 sigma_sym_low(int k);

/// 3d Levi-Civita, eps3(1,2,3) = +1.
int eps3(int i, int j, int k);

/// Symplectic metric on the 2N-dimensional internal space.
class OmegaMetric {
public:
  explicit OmegaMetric(int n) : n_(n) {}
  int dim() const { return 2 * n_; }
  /// Omega^{AB}, A,B in 1..2N.
  Rational up(int a, int b) const;
  /// Omega_{AB}; numerically equal to up().
  Rational lo(int a, int b) const { return up(a, b); }

private:
  int n_;
};

}  // namespace liecheck
