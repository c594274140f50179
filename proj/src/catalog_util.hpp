#pragma once

/// Internal helpers shared by the catalog builders.  Not installed.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "liecheck/bracket_table.hpp"
#include "liecheck/linalg.hpp"
#include "liecheck/spinorkit.hpp"

namespace liecheck::detail {

/// eps_{ab} with 1-based labels (eps_{12} = +1), as a rational number.
inline Rational eps2(int a, int b) {
  if (a == 1 && b == 2) return Rational(1);
  if (a == 2 && b == 1) return Rational(-1);
  return Rational(0);
}

/// Kronecker delta.
inline Rational kron(int a, int b) { return Rational(a == b ? 1 : 0); }

/// Sorted copy of a two-index label (for symmetric-pair generators).
inline std::pair<int, int> sorted2(int a, int b) {
  return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
}

/// Accumulate  coeff * gen(name, labels...)  into `out`, looking the
/// generator up by display name.
inline void acc(const BracketTable& t, LinComb& out, const Scalar& coeff,
                const Generator& pattern) {
  if (coeff == Scalar(0)) return;
  out = out + LinComb::single(t.index_of(pattern.display()), coeff);
}

inline Generator gen(std::string name, std::vector<int> labels, Parity p) {
  Generator g;
  g.name = std::move(name);
  g.labels = std::move(labels);
  g.parity = p;
  return g;
}

/// One-slot action of the sp(2) generator X_{ab} (symmetric pair, lower
/// indices) on a single lower index c:  c -> -(i/2) (eps_{ca} [b] + eps_{cb} [a]).
/// Returns the list of (new_label, coefficient).
inline std::vector<std::pair<int, Scalar>> sp2_slot_action(int a, int b,
                                                           int c) {
  const Scalar half_i = Scalar(Rational(-1, 2)) * Scalar::i();
  std::vector<std::pair<int, Scalar>> out;
  const Rational ca = eps2(c, a), cb = eps2(c, b);
  if (!ca.is_zero()) out.emplace_back(b, half_i * Scalar(ca));
  if (!cb.is_zero()) out.emplace_back(a, half_i * Scalar(cb));
  return out;
}

/// Coordinates of the traceless u(M) generator T^A_B over the table basis
/// (off-diagonal generators (A,B), A != B, in lexicographic order, followed by
/// the diagonal generators A = 1..M-1).  T^M_M maps to -sum of diagonals.
class TracelessCoords {
 public:
  explicit TracelessCoords(int m) : m_(m) {
    int k = 0;
    for (int a = 1; a <= m; ++a)
      for (int b = 1; b <= m; ++b)
        if (a != b) offdiag_[{a, b}] = k++;
    offdiag_count_ = k;
  }

  int dim() const { return m_ * m_ - 1; }
  int m() const { return m_; }

  /// Index of the table generator representing T^A_B ((A,B) with A != B, or a
  /// diagonal with A = B < M).
  int slot(int a, int b) const {
    if (a != b) return offdiag_.at({a, b});
    if (a == m_) throw std::logic_error("T^M_M is not a basis slot");
    return offdiag_count_ + (a - 1);
  }

  /// Coordinate vector of T^A_B (any labels, including A = B = M).
  BVec vec(int a, int b) const {
    BVec v(static_cast<std::size_t>(dim()), BaseNumber(Rational(0)));
    if (a != b) {
      v[static_cast<std::size_t>(slot(a, b))] = BaseNumber(Rational(1));
    } else if (a < m_) {
      v[static_cast<std::size_t>(slot(a, a))] = BaseNumber(Rational(1));
    } else {
      for (int c = 1; c < m_; ++c)
        v[static_cast<std::size_t>(slot(c, c))] = BaseNumber(Rational(-1));
    }
    return v;
  }

  /// Labels (A,B) of a basis slot.
  std::pair<int, int> labels(int s) const {
    for (const auto& [ab, idx] : offdiag_)
      if (idx == s) return ab;
    return {s - offdiag_count_ + 1, s - offdiag_count_ + 1};
  }

 private:
  int m_;
  int offdiag_count_ = 0;
  std::map<std::pair<int, int>, int> offdiag_;
};

/// [T^A_B, T^C_D] = delta^A_D T^C_B - delta^C_B T^A_D as coordinates.
inline BVec tt_bracket_vec(const TracelessCoords& tc, int a, int b, int c,
                           int d) {
  BVec out(static_cast<std::size_t>(tc.dim()), BaseNumber(Rational(0)));
  auto add = [&](int x, int y, int sgn) {
    BVec v = tc.vec(x, y);
    for (std::size_t k = 0; k < out.size(); ++k)
      out[k] = out[k] + (sgn > 0 ? v[k] : BaseNumber(Rational(0)) - v[k]);
  };
  if (a == d) add(c, b, +1);
  if (c == b) add(a, d, -1);
  return out;
}

/// Split of the traceless u(2N) sector into the +1 / -1 eigenspaces of
/// theta(T^A_B) = Omega^{AC} Omega_{DB} T^D_C.  Pivot vectors are chosen in
/// lexicographic (A,B) order; the same choice is used by the Weyl basis map
/// and the expected-table builder so generator names line up.
struct TSplit {
  TracelessCoords coords;
  OmegaMetric omega;
  std::vector<std::pair<int, int>> plus_labels;
  std::vector<std::pair<int, int>> minus_labels;
  std::vector<BVec> plus_vecs;
  std::vector<BVec> minus_vecs;
  /// Square matrix whose columns are plus_vecs then minus_vecs.
  BMat basis;
  BMat basis_inv;

  explicit TSplit(int n);

  int nplus() const { return static_cast<int>(plus_labels.size()); }
  int nminus() const { return static_cast<int>(minus_labels.size()); }

  /// Expansion coefficients of an arbitrary coordinate vector over the pivot
  /// basis: first nplus() entries belong to T+, the rest to T-.
  BVec expand(const BVec& v) const;
};

inline TSplit::TSplit(int n) : coords(2 * n), omega(n) {
  const int m = 2 * n;
  auto theta = [&](int a, int b, int& ta, int& tb, Rational& sign) {
    // theta(T^A_B) = sum_{C,D} Omega^{AC} Omega_{DB} T^D_C; Omega pairs each
    // index with a single partner, so this is a signed relabeling.
    int pa = (a <= n) ? a + n : a - n;
    int pb = (b <= n) ? b + n : b - n;
    sign = omega.up(a, pa) * omega.up(pb, b);
    ta = pb;
    tb = pa;
  };
  BMat chosen;  // accumulated pivot vectors as rows, for span tests
  auto enlarges = [&](const BVec& v) {
    BMat test = chosen;
    test.push_back(v);
    BMat probe = test;
    std::size_t rank_with = rref(probe).size();
    BMat base = chosen;
    std::size_t rank_without = chosen.empty() ? 0 : rref(base).size();
    return rank_with > rank_without;
  };
  for (int pass = 0; pass < 2; ++pass) {
    const Rational s0(pass == 0 ? 1 : -1);
    chosen.clear();
    for (int a = 1; a <= m; ++a) {
      for (int b = 1; b <= m; ++b) {
        if (a == b && a == m) continue;
        int ta, tb;
        Rational sign;
        theta(a, b, ta, tb, sign);
        BVec v = coords.vec(a, b);
        BVec w = coords.vec(ta, tb);
        for (std::size_t k = 0; k < v.size(); ++k)
          v[k] = v[k] + BaseNumber(s0 * sign) * w[k];
        bool zero = true;
        for (const auto& x : v) zero = zero && x.is_zero();
        if (zero) continue;
        if (!enlarges(v)) continue;
        chosen.push_back(v);
        if (pass == 0) {
          plus_labels.emplace_back(a, b);
          plus_vecs.push_back(v);
        } else {
          minus_labels.emplace_back(a, b);
          minus_vecs.push_back(v);
        }
      }
    }
  }
  const int dim = coords.dim();
  if (nplus() + nminus() != dim)
    throw std::logic_error("internal-sector split has wrong total dimension");
  basis.assign(static_cast<std::size_t>(dim),
               BVec(static_cast<std::size_t>(dim), BaseNumber(Rational(0))));
  for (int c = 0; c < dim; ++c) {
    const BVec& col =
        c < nplus() ? plus_vecs[static_cast<std::size_t>(c)]
                    : minus_vecs[static_cast<std::size_t>(c - nplus())];
    for (int r = 0; r < dim; ++r)
      basis[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          col[static_cast<std::size_t>(r)];
  }
  auto inv = invert(basis);
  if (!inv) throw std::logic_error("internal-sector pivot basis is singular");
  basis_inv = *inv;
}

inline BVec TSplit::expand(const BVec& v) const {
  const std::size_t dim = static_cast<std::size_t>(coords.dim());
  BVec out(dim, BaseNumber(Rational(0)));
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      out[r] = out[r] + basis_inv[r][c] * v[c];
  return out;
}

}  // namespace liecheck::detail
