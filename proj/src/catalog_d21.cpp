#include "liecheck/catalog.hpp"

#include <array>
#include <tuple>

#include "catalog_util.hpp"

namespace liecheck {

using detail::eps2;
using detail::gen;
using detail::sorted2;

D21Options::D21Options()
    : alpha(Scalar::param("alpha")),
      beta(Scalar::param("beta")),
      gamma(Scalar::param("gamma")) {}

AlgebraModel build_d21_extended(const D21Options& opt) {
  BracketTable t(opt.swap_su2 ? "d21-ext-swapped" : "d21-ext");

  // Even sector: three sp(2)/su(2) factors as symmetric pairs, plus the
  // graded-Abelian extension tensor and its scalar partner.
  for (int a = 1; a <= 2; ++a)
    for (int b = a; b <= 2; ++b)
      t.add_generator(gen("R", {a, b}, Parity::even));
  for (int a = 1; a <= 2; ++a)
    for (int b = a; b <= 2; ++b)
      t.add_generator(gen("J", {a, b}, Parity::even));
  for (int a = 1; a <= 2; ++a)
    for (int b = a; b <= 2; ++b)
      t.add_generator(gen("T", {a, b}, Parity::even));
  if (opt.include_extension) {
    for (int a = 1; a <= 2; ++a)
      for (int b = a; b <= 2; ++b)
        for (int c = 1; c <= 2; ++c)
          for (int d = c; d <= 2; ++d)
            t.add_generator(gen("A", {a, b, c, d}, Parity::even));
    t.add_generator(gen("A0", {}, Parity::even));
  }
  for (int a = 1; a <= 2; ++a)
    for (int al = 1; al <= 2; ++al)
      for (int A = 1; A <= 2; ++A)
        t.add_generator(gen("Q+", {a, al, A}, Parity::odd));
  if (opt.include_extension)
    for (int a = 1; a <= 2; ++a)
      for (int al = 1; al <= 2; ++al)
        for (int A = 1; A <= 2; ++A)
          t.add_generator(gen("Q-", {a, al, A}, Parity::odd));

  auto sym = [&](const char* f, int a, int b) {
    auto [x, y] = sorted2(a, b);
    return t.index_of(std::string(f) + "(" + std::to_string(x) + "," +
                      std::to_string(y) + ")");
  };
  auto Aext = [&](int a, int b, int c, int d) {
    auto [x, y] = sorted2(a, b);
    auto [z, w] = sorted2(c, d);
    return t.index_of("A(" + std::to_string(x) + "," + std::to_string(y) +
                      "," + std::to_string(z) + "," + std::to_string(w) + ")");
  };
  auto Qof = [&](const char* f, int a, int al, int A) {
    return t.index_of(std::string(f) + "(" + std::to_string(a) + "," +
                      std::to_string(al) + "," + std::to_string(A) + ")");
  };

  // Each su(2)-type factor: [X_ab, X_cd] = i (eps_ac X_bd + eps_bd X_ac).
  for (const char* fam : {"R", "J", "T"})
    for (int a = 1; a <= 2; ++a)
      for (int b = a; b <= 2; ++b)
        for (int c = 1; c <= 2; ++c)
          for (int d = c; d <= 2; ++d) {
            if (std::make_pair(a, b) >= std::make_pair(c, d)) continue;
            LinComb rhs;
            auto put = [&](const Rational& e, int x, int y) {
              if (!e.is_zero())
                rhs = rhs +
                      LinComb::single(sym(fam, x, y), Scalar(e) * Scalar::i());
            };
            put(eps2(a, c), b, d);
            put(eps2(b, d), a, c);
            t.set_bracket(sym(fam, a, b), sym(fam, c, d), rhs);
          }

  // Actions on the supercharges: R on slot 1, J on slot 2, T on slot 3.
  std::vector<const char*> fermions{"Q+"};
  if (opt.include_extension) fermions.push_back("Q-");
  for (const char* f : fermions)
    for (int a = 1; a <= 2; ++a)
      for (int b = a; b <= 2; ++b)
        for (int x = 1; x <= 2; ++x)
          for (int y = 1; y <= 2; ++y)
            for (int z = 1; z <= 2; ++z) {
              for (const auto& [lab, c] : detail::sp2_slot_action(a, b, x))
                t.add_term(sym("R", a, b), Qof(f, x, y, z), Qof(f, lab, y, z),
                           c);
              for (const auto& [lab, c] : detail::sp2_slot_action(a, b, y))
                t.add_term(sym("J", a, b), Qof(f, x, y, z), Qof(f, x, lab, z),
                           c);
              for (const auto& [lab, c] : detail::sp2_slot_action(a, b, z))
                t.add_term(sym("T", a, b), Qof(f, x, y, z), Qof(f, x, y, lab),
                           c);
            }

  // {Q+_{a al A}, Q+_{b be B}} = 2 ( eps_{al be} eps_{AB} R_ab
  //     + alpha eps_{ab} eps_{AB} J_{al be} - (1+alpha) eps_{ab} eps_{al be} T_{AB} )
  const Scalar two(2);
  for (int a = 1; a <= 2; ++a)
    for (int al = 1; al <= 2; ++al)
      for (int A = 1; A <= 2; ++A)
        for (int b = 1; b <= 2; ++b)
          for (int be = 1; be <= 2; ++be)
            for (int B = 1; B <= 2; ++B) {
              if (std::make_tuple(a, al, A) > std::make_tuple(b, be, B))
                continue;
              LinComb rhs;
              const Rational eab = eps2(a, b), eal = eps2(al, be),
                             eAB = eps2(A, B);
              if (!eal.is_zero() && !eAB.is_zero())
                rhs = rhs + LinComb::single(sym("R", a, b),
                                            two * Scalar(eal * eAB));
              if (!eab.is_zero() && !eAB.is_zero())
                rhs = rhs + LinComb::single(
                                sym("J", al, be),
                                two * opt.alpha * Scalar(eab * eAB));
              if (!eab.is_zero() && !eal.is_zero())
                rhs = rhs +
                      LinComb::single(sym("T", A, B),
                                      two * (Scalar(-1) - opt.alpha) *
                                          Scalar(eab * eal));
              t.set_bracket(Qof("Q+", a, al, A), Qof("Q+", b, be, B), rhs);
            }

  if (opt.include_extension) {
    const std::uint32_t A0 = t.index_of("A0");

    // Extension tensor transforms as a symmetric pair under R (slots 1,2) and
    // under J (standard) or T (swapped) on slots 3,4.
    for (int a = 1; a <= 2; ++a)
      for (int b = a; b <= 2; ++b)
        for (int x = 1; x <= 2; ++x)
          for (int y = x; y <= 2; ++y)
            for (int z = 1; z <= 2; ++z)
              for (int w = z; w <= 2; ++w) {
                for (const auto& [lab, c] : detail::sp2_slot_action(a, b, x))
                  t.add_term(sym("R", a, b), Aext(x, y, z, w),
                             Aext(lab, y, z, w), c);
                for (const auto& [lab, c] : detail::sp2_slot_action(a, b, y))
                  t.add_term(sym("R", a, b), Aext(x, y, z, w),
                             Aext(x, lab, z, w), c);
                const char* act = opt.swap_su2 ? "T" : "J";
                for (const auto& [lab, c] : detail::sp2_slot_action(a, b, z))
                  t.add_term(sym(act, a, b), Aext(x, y, z, w),
                             Aext(x, y, lab, w), c);
                for (const auto& [lab, c] : detail::sp2_slot_action(a, b, w))
                  t.add_term(sym(act, a, b), Aext(x, y, z, w),
                             Aext(x, y, z, lab), c);
              }

    // {Q+_{a al A}, Q-_{b be B}}:
    //   standard: beta eps_{AB} A_{ab, al be} + gamma eps_{ab} eps_{al be} eps_{AB} A0
    //   swapped:  beta eps_{al be} A_{ab, AB} + gamma eps_{ab} eps_{al be} eps_{AB} A0
    for (int a = 1; a <= 2; ++a)
      for (int al = 1; al <= 2; ++al)
        for (int A = 1; A <= 2; ++A)
          for (int b = 1; b <= 2; ++b)
            for (int be = 1; be <= 2; ++be)
              for (int B = 1; B <= 2; ++B) {
                LinComb rhs;
                const Rational eab = eps2(a, b), eal = eps2(al, be),
                               eAB = eps2(A, B);
                if (!opt.swap_su2 && !eAB.is_zero())
                  rhs = rhs + LinComb::single(Aext(a, b, al, be),
                                              opt.beta * Scalar(eAB));
                if (opt.swap_su2 && !eal.is_zero())
                  rhs = rhs + LinComb::single(Aext(a, b, A, B),
                                              opt.beta * Scalar(eal));
                if (!eab.is_zero() && !eal.is_zero() && !eAB.is_zero())
                  rhs = rhs + LinComb::single(
                                  A0, opt.gamma * Scalar(eab * eal * eAB));
                t.set_bracket(Qof("Q+", a, al, A), Qof("Q-", b, be, B), rhs);
              }

    // [Q+_{a al A}, A_{bc, yz}] = -i [ eps_{ab} eps_{*y} Q-_{c z'}
    //   + ... ] (four symmetrized terms; * = al standard / A swapped).
    for (int a = 1; a <= 2; ++a)
      for (int al = 1; al <= 2; ++al)
        for (int A = 1; A <= 2; ++A)
          for (int b = 1; b <= 2; ++b)
            for (int c = b; c <= 2; ++c)
              for (int y = 1; y <= 2; ++y)
                for (int z = y; z <= 2; ++z) {
                  LinComb rhs;
                  const Scalar mi = Scalar(-1) * Scalar::i();
                  const int act = opt.swap_su2 ? A : al;
                  struct Term {
                    int sp2;   // surviving sp2 label of A
                    int act2;  // surviving acted-slot label of A
                  };
                  const std::array<std::pair<Rational, Term>, 4> terms{
                      std::make_pair(eps2(a, b) * eps2(act, y), Term{c, z}),
                      std::make_pair(eps2(a, b) * eps2(act, z), Term{c, y}),
                      std::make_pair(eps2(a, c) * eps2(act, y), Term{b, z}),
                      std::make_pair(eps2(a, c) * eps2(act, z), Term{b, y})};
                  for (const auto& [coeff, tm] : terms) {
                    if (coeff.is_zero()) continue;
                    const int qa = tm.sp2;
                    const int qal = opt.swap_su2 ? al : tm.act2;
                    const int qA = opt.swap_su2 ? tm.act2 : A;
                    rhs = rhs + LinComb::single(Qof("Q-", qa, qal, qA),
                                                mi * Scalar(coeff));
                  }
                  if (!rhs.is_zero())
                    t.set_bracket(Qof("Q+", a, al, A), Aext(b, c, y, z), rhs);
                }

    // [Q+_{a al A}, A0] = i Q-_{a al A}
    for (int a = 1; a <= 2; ++a)
      for (int al = 1; al <= 2; ++al)
        for (int A = 1; A <= 2; ++A)
          t.set_bracket(Qof("Q+", a, al, A), A0,
                        LinComb::single(Qof("Q-", a, al, A), Scalar::i()));
  }

  t.finalize();

  // Star: R hermitian; J/T/A(spinor or internal pairs) conjugated with
  // eps-raising on each non-sp2 slot; fermions likewise on slots 2,3.
  auto raise2 = [](int x) { return x == 1 ? 2 : 1; };
  auto raise_sign = [&raise2](int x, int y) {
    // eps^{x x'} eps^{y y'} with x' = raise2(x), y' = raise2(y):
    // eps^{12} = -1, eps^{21} = +1.
    auto up = [](int p, int q) { return (p == 1 && q == 2) ? -1 : 1; };
    return Rational(up(x, raise2(x)) * up(y, raise2(y)));
  };
  StarStructure star;
  for (std::uint32_t g = 0; g < t.size(); ++g) {
    const Generator& gg = t.generator(g);
    if (gg.name == "J" || gg.name == "T") {
      const int x = gg.labels[0], y = gg.labels[1];
      star.image.push_back(LinComb::single(
          sym(gg.name.c_str(), raise2(x), raise2(y)),
          Scalar(raise_sign(x, y))));
    } else if (gg.name == "Q+" || gg.name == "Q-") {
      const int al = gg.labels[1], A = gg.labels[2];
      star.image.push_back(LinComb::single(
          Qof(gg.name.c_str(), gg.labels[0], raise2(al), raise2(A)),
          Scalar(raise_sign(al, A))));
    } else if (gg.name == "A") {
      const int y = gg.labels[2], z = gg.labels[3];
      star.image.push_back(LinComb::single(
          Aext(gg.labels[0], gg.labels[1], raise2(y), raise2(z)),
          Scalar(raise_sign(y, z))));
    } else {
      star.image.push_back(LinComb::single(g));
    }
  }

  SplitSpec split;
  for (const auto& g : t.generators())
    split.side.push_back(
        (g.name == "A" || g.name == "A0" || g.name == "Q-") ? 1 : 0);

  AlgebraModel model{std::move(t), std::move(star), std::move(split),
                     SplitMode::abelian_minus};
  return model;
}

}  // namespace liecheck
