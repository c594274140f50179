#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "catalog_util.hpp"
#include "liecheck/catalog.hpp"
#include "liecheck/linalg.hpp"
#include "liecheck/spinorkit.hpp"

namespace liecheck {

namespace {

using detail::gen;
using detail::TracelessCoords;

// Derive the even-even sector from the fermionic one.  Every even generator
// is resolved as a linear combination of anticommutators {f, g} of odd
// generators; graded Leibniz then determines [X, Y] for even X, Y:
//   [X, {f, g}] = {[X, f], g} + {f, [X, g]}.
// This keeps the even-even structure constants consistent with the mixed
// sector by construction and avoids transcribing them separately.
void resolve_even_even(BracketTable& t) {
  std::vector<std::uint32_t> odd_ids, even_ids;
  for (std::uint32_t g = 0; g < t.size(); ++g)
    (t.is_odd(g) ? odd_ids : even_ids).push_back(g);
  const std::size_t nb = even_ids.size();
  std::vector<std::size_t> even_slot(t.size(), nb);
  for (std::size_t s = 0; s < nb; ++s) even_slot[even_ids[s]] = s;

  // Columns: fermion pairs with a nonzero bracket, as vectors over the even
  // basis.  Coefficients must be numeric for the linear solve.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::vector<BVec> cols;
  for (std::size_t a = 0; a < odd_ids.size(); ++a)
    for (std::size_t b = a; b < odd_ids.size(); ++b) {
      LinComb br = t.bracket(odd_ids[a], odd_ids[b]);
      if (br.is_zero()) continue;
      BVec v(nb, BaseNumber());
      for (const auto& [g, c] : br.terms()) {
        auto base = c.as_base();
        if (!base)
          throw std::logic_error("resolve_even_even: non-numeric coefficient");
        if (even_slot[g] == nb)
          throw std::logic_error("resolve_even_even: odd term in even sector");
        v[even_slot[g]] = *base;
      }
      pairs.emplace_back(odd_ids[a], odd_ids[b]);
      cols.push_back(std::move(v));
    }

  // One elimination with all unit vectors as right-hand sides.
  BMat aug(nb, BVec(pairs.size() + nb, BaseNumber()));
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (std::size_t r = 0; r < nb; ++r) aug[r][p] = cols[p][r];
  for (std::size_t r = 0; r < nb; ++r) aug[r][pairs.size() + r] = BaseNumber(1);
  std::vector<std::size_t> pivots = rref(aug);
  if (pivots.size() != nb || (!pivots.empty() && pivots.back() >= pairs.size()))
    throw std::logic_error(
        "resolve_even_even: even sector not spanned by fermion bilinears");

  // resolution[y]: sparse coefficients over `pairs` reproducing even_ids[y].
  std::vector<std::vector<std::pair<std::size_t, BaseNumber>>> resolution(nb);
  for (std::size_t y = 0; y < nb; ++y)
    for (std::size_t k = 0; k < nb; ++k) {
      const BaseNumber& lam = aug[k][pairs.size() + y];
      if (!lam.is_zero()) resolution[y].emplace_back(pivots[k], lam);
    }

  for (std::size_t xi = 0; xi < nb; ++xi) {
    const std::uint32_t X = even_ids[xi];
    for (std::size_t yi = xi + 1; yi < nb; ++yi) {
      const std::uint32_t Y = even_ids[yi];
      LinComb out;
      for (const auto& [p, lam] : resolution[yi]) {
        const auto& [f, g] = pairs[p];
        LinComb term = t.bracket(t.bracket(X, f), LinComb::single(g)) +
                       t.bracket(LinComb::single(f), t.bracket(X, g));
        out = out + term.scaled(Scalar(lam));
      }
      if (!out.is_zero()) t.set_bracket(X, Y, out);
    }
  }
}

}  // namespace

AlgebraModel build_su22_2n(int n) {
  if (n != 1 && n != 2)
    throw UnsupportedN("build_su22_2n: supported values are n = 1 and n = 2");
  const int m = 2 * n;

  BracketTable t("su22-n" + std::to_string(n));

  // Even part: conformal algebra (P, K, M, D), the axial charge A, and the
  // traceless internal sector T^A_B (off-diagonal units first, then diagonal
  // units T^A_A for A < 2n; T^{2n}_{2n} is minus the sum of the others).
  for (int mu = 0; mu < 4; ++mu) t.add_generator(gen("P", {mu}, Parity::even));
  for (int mu = 0; mu < 4; ++mu) t.add_generator(gen("K", {mu}, Parity::even));
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu)
      t.add_generator(gen("M", {mu, nu}, Parity::even));
  t.add_generator(gen("D", {}, Parity::even));
  t.add_generator(gen("A", {}, Parity::even));
  TracelessCoords tc(m);
  const std::uint32_t t_base = t.size();
  for (int s = 0; s < tc.dim(); ++s) {
    auto [a, b] = tc.labels(s);
    t.add_generator(gen("T", {a, b}, Parity::even));
  }
  // Odd part: supertranslations Q, Qb and superboosts S, Sb.
  for (const char* f : {"Q", "Qb", "S", "Sb"})
    for (int al = 1; al <= 2; ++al)
      for (int A = 1; A <= m; ++A)
        t.add_generator(gen(f, {al, A}, Parity::odd));

  auto P = [&](int mu) { return t.index_of("P(" + std::to_string(mu) + ")"); };
  auto K = [&](int mu) { return t.index_of("K(" + std::to_string(mu) + ")"); };
  auto Mg = [&](int mu, int nu) {
    return t.index_of("M(" + std::to_string(mu) + "," + std::to_string(nu) + ")");
  };
  const std::uint32_t Dg = t.index_of("D");
  const std::uint32_t Ag = t.index_of("A");
  auto F = [&](const char* f, int al, int A) {
    return t.index_of(std::string(f) + "(" + std::to_string(al) + "," +
                      std::to_string(A) + ")");
  };
  // LinComb for the abstract unit T^a_b in traceless coordinates.
  auto t_unit = [&](int a, int b) {
    LinComb out;
    BVec v = tc.vec(a, b);
    for (int s = 0; s < tc.dim(); ++s)
      if (!v[s].is_zero())
        out = out + LinComb::single(t_base + static_cast<std::uint32_t>(s),
                                    Scalar(v[s]));
    return out;
  };

  const Scalar two(2);
  const Scalar mtwo(-2);
  const Scalar ih = Scalar(Rational(1, 2)) * Scalar::i();

  // ---- odd-odd sector ----
  for (int al = 1; al <= 2; ++al)
    for (int A = 1; A <= m; ++A)
      for (int be = 1; be <= 2; ++be)
        for (int B = 1; B <= m; ++B) {
          const Rational eba = eps_lo(be, al);
          if (A == B) {
            // {Q_al^A, Qb_be^B} = 2 (sigma^mu)_{al be} P_mu, and K for S, Sb.
            LinComb qqb, ssb;
            for (int mu = 0; mu < 4; ++mu) {
              const BaseNumber c = sigma4(mu).at(al, be);
              if (c.is_zero()) continue;
              qqb = qqb + LinComb::single(P(mu), two * Scalar(c));
              ssb = ssb + LinComb::single(K(mu), two * Scalar(c));
            }
            t.set_bracket(F("Q", al, A), F("Qb", be, B), qqb);
            t.set_bracket(F("S", al, A), F("Sb", be, B), ssb);
          }
          // {Q_al^A, S_be^B}: Lorentz + dilatation + axial + internal parts.
          {
            LinComb rhs;
            if (A == B) {
              for (int mu = 0; mu < 4; ++mu)
                for (int nu = mu + 1; nu < 4; ++nu) {
                  BaseNumber c;
                  for (int ga = 1; ga <= 2; ++ga)
                    c += BaseNumber(eps_lo(be, ga)) * sigma_mn(mu, nu).at(al, ga);
                  c = BaseNumber(Rational(-2)) * c;
                  if (!c.is_zero())
                    rhs = rhs + LinComb::single(Mg(mu, nu), Scalar(c));
                }
              if (!eba.is_zero()) {
                rhs = rhs + LinComb::single(Dg, mtwo * Scalar::i() * Scalar(eba));
                rhs = rhs + LinComb::single(Ag, two * Scalar(eba));
              }
            }
            if (!eba.is_zero())
              rhs = rhs + t_unit(A, B).scaled(Scalar(-4) * Scalar(eba));
            if (!rhs.is_zero())
              t.set_bracket(F("Q", al, A), F("S", be, B), rhs);
          }
          // {Qb_al^A, Sb_be^B}: conjugate structure.
          {
            LinComb rhs;
            if (A == B) {
              for (int mu = 0; mu < 4; ++mu)
                for (int nu = mu + 1; nu < 4; ++nu) {
                  BaseNumber c;
                  for (int ga = 1; ga <= 2; ++ga)
                    c += BaseNumber(eps_lo(be, ga)) *
                         sigmat_mn(mu, nu).at(ga, al);
                  c = BaseNumber(Rational(-2)) * c;
                  if (!c.is_zero())
                    rhs = rhs + LinComb::single(Mg(mu, nu), Scalar(c));
                }
              if (!eba.is_zero()) {
                rhs = rhs + LinComb::single(Dg, two * Scalar::i() * Scalar(eba));
                rhs = rhs + LinComb::single(Ag, two * Scalar(eba));
              }
            }
            if (!eba.is_zero())
              rhs = rhs + t_unit(B, A).scaled(Scalar(-4) * Scalar(eba));
            if (!rhs.is_zero())
              t.set_bracket(F("Qb", al, A), F("Sb", be, B), rhs);
          }
        }

  // ---- mixed sector ----
  // Lorentz action: chiral fermions rotate with sigma^{mu nu}, antichiral
  // ones with sigmat^{mu nu} (both vector indices lowered).
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu)
      for (int al = 1; al <= 2; ++al)
        for (int A = 1; A <= m; ++A) {
          LinComb q, s, qb, sb;
          for (int be = 1; be <= 2; ++be) {
            const BaseNumber c = sigma_mn_low(mu, nu).at(al, be);
            if (!c.is_zero()) {
              const Scalar f = Scalar(Rational(-1, 2)) * Scalar(c);
              q = q + LinComb::single(F("Q", be, A), f);
              s = s + LinComb::single(F("S", be, A), f);
            }
            const BaseNumber ct = sigmat_mn_low(mu, nu).at(be, al);
            if (!ct.is_zero()) {
              const Scalar f = Scalar(Rational(1, 2)) * Scalar(ct);
              qb = qb + LinComb::single(F("Qb", be, A), f);
              sb = sb + LinComb::single(F("Sb", be, A), f);
            }
          }
          t.set_bracket(Mg(mu, nu), F("Q", al, A), q);
          t.set_bracket(Mg(mu, nu), F("S", al, A), s);
          t.set_bracket(Mg(mu, nu), F("Qb", al, A), qb);
          t.set_bracket(Mg(mu, nu), F("Sb", al, A), sb);
        }

  // Translations move superboosts into supertranslations and vice versa for
  // conformal boosts; spinor indices are raised with eps_up.
  for (int mu = 0; mu < 4; ++mu) {
    const Rational et = eta(mu);
    for (int al = 1; al <= 2; ++al)
      for (int A = 1; A <= m; ++A) {
        LinComb ps, psb, kq, kqb;
        for (int be = 1; be <= 2; ++be)
          for (int ga = 1; ga <= 2; ++ga) {
            const Rational eug = eps_up(be, ga);
            if (eug.is_zero()) continue;
            const BaseNumber c1 =
                BaseNumber(et * eug) * sigma4(mu).at(al, be);
            if (!c1.is_zero()) {
              ps = ps + LinComb::single(F("Qb", ga, A), Scalar(c1));
              kq = kq + LinComb::single(F("Sb", ga, A), Scalar(c1));
            }
            const BaseNumber c2 =
                BaseNumber(Rational(0) - et * eug) * sigma4(mu).at(be, al);
            if (!c2.is_zero()) {
              psb = psb + LinComb::single(F("Q", ga, A), Scalar(c2));
              kqb = kqb + LinComb::single(F("S", ga, A), Scalar(c2));
            }
          }
        t.set_bracket(P(mu), F("S", al, A), ps);
        t.set_bracket(P(mu), F("Sb", al, A), psb);
        t.set_bracket(K(mu), F("Q", al, A), kq);
        t.set_bracket(K(mu), F("Qb", al, A), kqb);
      }
  }

  // Dilatation weights: +1/2 for supertranslations, -1/2 for superboosts.
  for (int al = 1; al <= 2; ++al)
    for (int A = 1; A <= m; ++A) {
      t.set_bracket(Dg, F("Q", al, A), LinComb::single(F("Q", al, A), ih));
      t.set_bracket(Dg, F("Qb", al, A), LinComb::single(F("Qb", al, A), ih));
      t.set_bracket(Dg, F("S", al, A),
                    LinComb::single(F("S", al, A), Scalar(-1) * ih));
      t.set_bracket(Dg, F("Sb", al, A),
                    LinComb::single(F("Sb", al, A), Scalar(-1) * ih));
    }

  // Axial charge: a = (2 - n) / (2 n); vanishes at n = 2, making A central.
  const Rational ax(2 - n, 2 * n);
  if (!ax.is_zero())
    for (int al = 1; al <= 2; ++al)
      for (int A = 1; A <= m; ++A) {
        t.set_bracket(Ag, F("Q", al, A),
                      LinComb::single(F("Q", al, A), Scalar(Rational(0) - ax)));
        t.set_bracket(Ag, F("Qb", al, A),
                      LinComb::single(F("Qb", al, A), Scalar(ax)));
        t.set_bracket(Ag, F("S", al, A),
                      LinComb::single(F("S", al, A), Scalar(ax)));
        t.set_bracket(Ag, F("Sb", al, A),
                      LinComb::single(F("Sb", al, A), Scalar(Rational(0) - ax)));
      }

  // Internal sector: Q, Sb transform in the fundamental, Qb, S in the
  // antifundamental, with the trace subtracted.
  for (int s = 0; s < tc.dim(); ++s) {
    auto [X, Y] = tc.labels(s);
    const std::uint32_t Ts = t_base + static_cast<std::uint32_t>(s);
    for (int al = 1; al <= 2; ++al)
      for (int C = 1; C <= m; ++C) {
        LinComb q, qb, ss, sb;
        if (C == Y) {
          q = q + LinComb::single(F("Q", al, X));
          sb = sb + LinComb::single(F("Sb", al, X));
        }
        if (X == C) {
          qb = qb + LinComb::single(F("Qb", al, Y), Scalar(-1));
          ss = ss + LinComb::single(F("S", al, Y), Scalar(-1));
        }
        if (X == Y) {
          const Scalar tr(Rational(1, m));
          q = q + LinComb::single(F("Q", al, C), Scalar(-1) * tr);
          sb = sb + LinComb::single(F("Sb", al, C), Scalar(-1) * tr);
          qb = qb + LinComb::single(F("Qb", al, C), tr);
          ss = ss + LinComb::single(F("S", al, C), tr);
        }
        if (!q.is_zero()) t.set_bracket(Ts, F("Q", al, C), q);
        if (!qb.is_zero()) t.set_bracket(Ts, F("Qb", al, C), qb);
        if (!ss.is_zero()) t.set_bracket(Ts, F("S", al, C), ss);
        if (!sb.is_zero()) t.set_bracket(Ts, F("Sb", al, C), sb);
      }
  }

  // ---- even-even sector, derived ----
  resolve_even_even(t);
  t.finalize();

  // Conjugation: P, K, M, D, A hermitian; Q <-> Qb, S <-> Sb; T^A_B -> T^B_A.
  StarStructure star;
  star.image.resize(t.size());
  for (std::uint32_t g = 0; g < t.size(); ++g)
    star.image[g] = LinComb::single(g);
  for (int s = 0; s < tc.dim(); ++s) {
    auto [a, b] = tc.labels(s);
    star.image[t_base + static_cast<std::uint32_t>(s)] = t_unit(b, a);
  }
  for (int al = 1; al <= 2; ++al)
    for (int A = 1; A <= m; ++A) {
      star.image[F("Q", al, A)] = LinComb::single(F("Qb", al, A));
      star.image[F("Qb", al, A)] = LinComb::single(F("Q", al, A));
      star.image[F("S", al, A)] = LinComb::single(F("Sb", al, A));
      star.image[F("Sb", al, A)] = LinComb::single(F("S", al, A));
    }

  AlgebraModel model;
  model.table = std::move(t);
  model.star = std::move(star);
  model.split = std::nullopt;
  return model;
}

}  // namespace liecheck
