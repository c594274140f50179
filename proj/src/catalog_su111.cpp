#include "liecheck/catalog.hpp"

#include "catalog_util.hpp"

namespace liecheck {

using detail::eps2;
using detail::gen;
using detail::sorted2;

AlgebraModel build_su111_extended(const Scalar& beta, const Scalar& gamma) {
  BracketTable t("su111-ext");
  for (int a = 1; a <= 2; ++a)
    for (int b = a; b <= 2; ++b)
      t.add_generator(gen("R", {a, b}, Parity::even));
  t.add_generator(gen("J", {}, Parity::even));
  t.add_generator(gen("C", {}, Parity::even));
  for (int a = 1; a <= 2; ++a)
    for (int b = a; b <= 2; ++b)
      t.add_generator(gen("A", {a, b}, Parity::even));
  for (int a = 1; a <= 2; ++a)
    for (int b = a; b <= 2; ++b)
      t.add_generator(gen("Ab", {a, b}, Parity::even));
  for (const char* f : {"Q+", "Qb+", "Q-", "Qb-"})
    for (int a = 1; a <= 2; ++a)
      t.add_generator(gen(f, {a}, Parity::odd));

  auto R = [&](int a, int b) {
    auto [x, y] = sorted2(a, b);
    return t.index_of("R(" + std::to_string(x) + "," + std::to_string(y) +
                      ")");
  };
  auto sym = [&](const char* f, int a, int b) {
    auto [x, y] = sorted2(a, b);
    return t.index_of(std::string(f) + "(" + std::to_string(x) + "," +
                      std::to_string(y) + ")");
  };
  auto F = [&](const char* f, int a) {
    return t.index_of(std::string(f) + "(" + std::to_string(a) + ")");
  };
  const std::uint32_t J = t.index_of("J");
  const std::uint32_t C = t.index_of("C");

  // sp(2) sector and its actions.
  for (int a = 1; a <= 2; ++a)
    for (int b = a; b <= 2; ++b)
      for (int c = 1; c <= 2; ++c)
        for (int d = c; d <= 2; ++d) {
          if (std::make_pair(a, b) < std::make_pair(c, d)) {
            LinComb rhs;
            auto put = [&](const Rational& e, int x, int y) {
              if (!e.is_zero())
                rhs = rhs +
                      LinComb::single(R(x, y), Scalar(e) * Scalar::i());
            };
            put(eps2(a, c), b, d);
            put(eps2(b, d), a, c);
            t.set_bracket(R(a, b), R(c, d), rhs);
          }
          for (const char* fam : {"A", "Ab"}) {
            for (const auto& [lab, coeff] : detail::sp2_slot_action(a, b, c))
              t.add_term(R(a, b), sym(fam, c, d), sym(fam, lab, d), coeff);
            for (const auto& [lab, coeff] : detail::sp2_slot_action(a, b, d))
              t.add_term(R(a, b), sym(fam, c, d), sym(fam, c, lab), coeff);
          }
        }
  for (int a = 1; a <= 2; ++a)
    for (int b = a; b <= 2; ++b)
      for (int c = 1; c <= 2; ++c)
        for (const char* fam : {"Q+", "Qb+", "Q-", "Qb-"})
          for (const auto& [lab, coeff] : detail::sp2_slot_action(a, b, c))
            t.add_term(R(a, b), F(fam, c), F(fam, lab), coeff);

  // u(1) charges.  [J, X] = -i q(X) X with q: Q+ -> 1/2, Qb+ -> -1/2,
  // Q- -> -1/2, Qb- -> 1/2 (the minus supercharges carry the opposite
  // rotation charge; consequently A, Ab are J-neutral since A ~ {Q+, Q-}).
  // [C, X] = -i qc(X) X with qc: Q- -> gamma, Qb- -> -gamma, A -> gamma,
  // Ab -> -gamma.
  const Scalar mi = Scalar(Rational(-1)) * Scalar::i();
  const Scalar half(Rational(1, 2));
  for (int a = 1; a <= 2; ++a) {
    t.set_bracket(J, F("Q+", a), LinComb::single(F("Q+", a), mi * half));
    t.set_bracket(J, F("Qb+", a),
                  LinComb::single(F("Qb+", a), mi * half * Scalar(-1)));
    t.set_bracket(J, F("Q-", a),
                  LinComb::single(F("Q-", a), mi * half * Scalar(-1)));
    t.set_bracket(J, F("Qb-", a), LinComb::single(F("Qb-", a), mi * half));
    t.set_bracket(C, F("Q-", a), LinComb::single(F("Q-", a), mi * gamma));
    t.set_bracket(C, F("Qb-", a),
                  LinComb::single(F("Qb-", a), mi * gamma * Scalar(-1)));
  }
  for (int a = 1; a <= 2; ++a)
    for (int b = a; b <= 2; ++b) {
      t.set_bracket(C, sym("A", a, b),
                    LinComb::single(sym("A", a, b), mi * gamma));
      t.set_bracket(C, sym("Ab", a, b),
                    LinComb::single(sym("Ab", a, b), mi * gamma * Scalar(-1)));
    }

  // {Q+_a, Qb+_b} = 2 (R_ab - eps_ab J + eps_ab C).  The relative sign of
  // the J term against the R term is pinned by the (Q+, Q+, Qb+) Jacobi
  // identity; the C coefficient is free at this stage and is the
  // normalization that the minus-sector Jacobi identities later pin
  // against gamma.
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) {
      LinComb rhs = LinComb::single(R(a, b), Scalar(2));
      if (!eps2(a, b).is_zero()) {
        rhs = rhs + LinComb::single(J, Scalar(-2) * Scalar(eps2(a, b)));
        rhs = rhs + LinComb::single(C, Scalar(2) * Scalar(eps2(a, b)));
      }
      t.set_bracket(F("Q+", a), F("Qb+", b), rhs);
    }

  // {Q+_a, Q-_b} = 2 beta A_ab ; {Qb+_a, Qb-_b} = 2 beta Ab_ab
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) {
      t.set_bracket(F("Q+", a), F("Q-", b),
                    LinComb::single(sym("A", a, b), Scalar(2) * beta));
      t.set_bracket(F("Qb+", a), F("Qb-", b),
                    LinComb::single(sym("Ab", a, b), Scalar(2) * beta));
    }

  // [Q+_a, Ab_bc] = 2i eps_{a(b} Qb-_{c)} ; [Qb+_a, A_bc] = 2i eps_{a(b} Q-_{c)}
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      for (int c = b; c <= 2; ++c) {
        LinComb r1, r2;
        if (!eps2(a, b).is_zero()) {
          r1 = r1 + LinComb::single(F("Qb-", c), Scalar::i() * Scalar(eps2(a, b)));
          r2 = r2 + LinComb::single(F("Q-", c), Scalar::i() * Scalar(eps2(a, b)));
        }
        if (!eps2(a, c).is_zero()) {
          r1 = r1 + LinComb::single(F("Qb-", b), Scalar::i() * Scalar(eps2(a, c)));
          r2 = r2 + LinComb::single(F("Q-", b), Scalar::i() * Scalar(eps2(a, c)));
        }
        if (!r1.is_zero()) t.set_bracket(F("Q+", a), sym("Ab", b, c), r1);
        if (!r2.is_zero()) t.set_bracket(F("Qb+", a), sym("A", b, c), r2);
      }

  // Everything else ({Q+,Qb-}, {Qb+,Q-}, the whole minus sector among
  // itself, [Q+,A], [Qb+,Ab], [C,R], [C,J]) vanishes.
  t.finalize();

  AlgebraModel model{std::move(t), std::nullopt, std::nullopt,
                     SplitMode::abelian_minus};
  StarStructure star;
  const BracketTable& tb = model.table;
  for (std::uint32_t g = 0; g < tb.size(); ++g) {
    const Generator& gg = tb.generator(g);
    if (gg.name == "J" || gg.name == "C")
      star.image.push_back(LinComb::single(g, Scalar(-1)));
    else if (gg.name == "Q+")
      star.image.push_back(LinComb::single(tb.index_of(
          "Qb+(" + std::to_string(gg.labels[0]) + ")")));
    else if (gg.name == "Qb+")
      star.image.push_back(LinComb::single(tb.index_of(
          "Q+(" + std::to_string(gg.labels[0]) + ")")));
    else if (gg.name == "Q-")
      star.image.push_back(LinComb::single(tb.index_of(
          "Qb-(" + std::to_string(gg.labels[0]) + ")")));
    else if (gg.name == "Qb-")
      star.image.push_back(LinComb::single(tb.index_of(
          "Q-(" + std::to_string(gg.labels[0]) + ")")));
    else if (gg.name == "A")
      star.image.push_back(LinComb::single(tb.index_of(
          "Ab(" + std::to_string(gg.labels[0]) + "," +
          std::to_string(gg.labels[1]) + ")")));
    else if (gg.name == "Ab")
      star.image.push_back(LinComb::single(tb.index_of(
          "A(" + std::to_string(gg.labels[0]) + "," +
          std::to_string(gg.labels[1]) + ")")));
    else
      star.image.push_back(LinComb::single(g));
  }
  model.star = star;
  SplitSpec split;
  for (const auto& g : model.table.generators())
    split.side.push_back((g.name == "A" || g.name == "Ab" || g.name == "Q-" ||
                          g.name == "Qb-")
                             ? 1
                             : 0);
  model.split = split;
  model.split_mode = SplitMode::abelian_minus;
  return model;
}

}  // namespace liecheck
