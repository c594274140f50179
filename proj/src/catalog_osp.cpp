#include "liecheck/catalog.hpp"

#include "catalog_util.hpp"

namespace liecheck {

using detail::eps2;
using detail::gen;
using detail::sorted2;

namespace {

/// Add the sp(2) sector [R_ab, R_cd] = i (eps_ac R_bd + eps_bd R_ac) over the
/// symmetric generators R(a,b), a<=b.
void add_sp2_sector(BracketTable& t) {
  auto R = [&](int a, int b) {
    auto [x, y] = sorted2(a, b);
    return t.index_of("R(" + std::to_string(x) + "," + std::to_string(y) +
                      ")");
  };
  for (int a = 1; a <= 2; ++a)
    for (int b = a; b <= 2; ++b)
      for (int c = 1; c <= 2; ++c)
        for (int d = c; d <= 2; ++d) {
          if (std::make_pair(a, b) >= std::make_pair(c, d)) continue;
          LinComb rhs;
          auto put = [&](const Rational& e, int x, int y) {
            if (!e.is_zero())
              rhs = rhs + LinComb::single(R(x, y), Scalar(e) * Scalar::i());
          };
          put(eps2(a, c), b, d);
          put(eps2(b, d), a, c);
          t.set_bracket(R(a, b), R(c, d), rhs);
        }
}

/// [R_ab, X_c...] = -i eps_{c(a} X_{b)...} for each generator family member
/// whose first label transforms as a lower sp(2) index.
void add_sp2_action_on_first_label(BracketTable& t, const std::string& fam,
                                   const std::vector<std::vector<int>>& rest,
                                   int nlabels_total) {
  (void)nlabels_total;
  auto R = [&](int a, int b) {
    auto [x, y] = sorted2(a, b);
    return t.index_of("R(" + std::to_string(x) + "," + std::to_string(y) +
                      ")");
  };
  auto member = [&](int c, const std::vector<int>& extra) {
    std::vector<int> labels{c};
    labels.insert(labels.end(), extra.begin(), extra.end());
    Generator g;
    g.name = fam;
    g.labels = labels;
    return t.index_of(g.display());
  };
  for (int a = 1; a <= 2; ++a)
    for (int b = a; b <= 2; ++b)
      for (int c = 1; c <= 2; ++c)
        for (const auto& extra : rest)
          for (const auto& [lab, coeff] : detail::sp2_slot_action(a, b, c))
            t.add_term(R(a, b), member(c, extra), member(lab, extra), coeff);
}

}  // namespace

AlgebraModel build_osp_n2(int n) {
  if (n < 0 || n > 3)
    throw std::invalid_argument("build_osp_n2: n must be 0..3");
  BracketTable t("osp" + std::to_string(n) + "2");
  for (int a = 1; a <= 2; ++a)
    for (int b = a; b <= 2; ++b)
      t.add_generator(gen("R", {a, b}, Parity::even));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      t.add_generator(gen("J", {i, j}, Parity::even));
  for (int a = 1; a <= 2; ++a)
    for (int i = 1; i <= n; ++i)
      t.add_generator(gen("Q", {a, i}, Parity::odd));

  add_sp2_sector(t);

  auto Q = [&](int a, int i) {
    return t.index_of("Q(" + std::to_string(a) + "," + std::to_string(i) +
                      ")");
  };
  auto R = [&](int a, int b) {
    auto [x, y] = sorted2(a, b);
    return t.index_of("R(" + std::to_string(x) + "," + std::to_string(y) +
                      ")");
  };
  auto Jlc = [&](int i, int j) -> LinComb {
    if (i == j) return LinComb();
    const Rational sign(i < j ? 1 : -1);
    auto [x, y] = sorted2(i, j);
    return LinComb::single(
        t.index_of("J(" + std::to_string(x) + "," + std::to_string(y) + ")"),
        Scalar(sign));
  };

  // [R_ab, Q_ci]
  {
    std::vector<std::vector<int>> rest;
    for (int i = 1; i <= n; ++i) rest.push_back({i});
    add_sp2_action_on_first_label(t, "Q", rest, 2);
  }

  // [J_ij, J_kl] (o(n) sector) and [J_ij, Q_ak]
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          if (std::make_pair(i, j) >= std::make_pair(k, l)) continue;
          LinComb rhs;
          auto addj = [&](int a, int b, int c1, int c2, const Rational& s) {
            if (a != b) return;
            rhs = rhs + Jlc(c1, c2).scaled(Scalar(s) * Scalar::i());
          };
          addj(i, k, j, l, Rational(1));
          addj(j, l, i, k, Rational(1));
          addj(i, l, j, k, Rational(-1));
          addj(j, k, i, l, Rational(-1));
          if (!rhs.is_zero())
            t.set_bracket(t.index_of("J(" + std::to_string(i) + "," +
                                     std::to_string(j) + ")"),
                          t.index_of("J(" + std::to_string(k) + "," +
                                     std::to_string(l) + ")"),
                          rhs);
        }
      for (int a = 1; a <= 2; ++a)
        for (int k = 1; k <= n; ++k) {
          LinComb rhs;
          if (i == k) rhs = rhs + LinComb::single(Q(a, j), Scalar::i());
          if (j == k) rhs = rhs - LinComb::single(Q(a, i), Scalar::i());
          if (!rhs.is_zero())
            t.set_bracket(t.index_of("J(" + std::to_string(i) + "," +
                                     std::to_string(j) + ")"),
                          Q(a, k), rhs);
        }
    }

  // {Q_ai, Q_bj} = 2 delta_ij R_ab - eps_ab J_ij
  for (int a = 1; a <= 2; ++a)
    for (int i = 1; i <= n; ++i)
      for (int b = 1; b <= 2; ++b)
        for (int j = 1; j <= n; ++j) {
          if (std::make_pair(a, i) > std::make_pair(b, j)) continue;
          LinComb rhs;
          if (i == j) rhs = rhs + LinComb::single(R(a, b), Scalar(2));
          if (!eps2(a, b).is_zero() && i != j)
            rhs = rhs + Jlc(i, j).scaled(Scalar(-eps2(a, b)));
          t.set_bracket(Q(a, i), Q(b, j), rhs);
        }

  t.finalize();

  AlgebraModel model{std::move(t), std::nullopt, std::nullopt,
                     SplitMode::abelian_minus};
  StarStructure star;
  for (std::size_t g = 0; g < model.table.size(); ++g)
    star.image.push_back(LinComb::single(static_cast<std::uint32_t>(g)));
  model.star = star;
  return model;
}

AlgebraModel build_osp12_extended(const Scalar& beta) {
  BracketTable t("osp12-ext");
  for (int a = 1; a <= 2; ++a)
    for (int b = a; b <= 2; ++b)
      t.add_generator(gen("R", {a, b}, Parity::even));
  for (int a = 1; a <= 2; ++a)
    for (int b = a; b <= 2; ++b)
      t.add_generator(gen("A", {a, b}, Parity::even));
  for (int a = 1; a <= 2; ++a)
    t.add_generator(gen("Q+", {a}, Parity::odd));
  for (int a = 1; a <= 2; ++a)
    t.add_generator(gen("Q-", {a}, Parity::odd));

  add_sp2_sector(t);

  auto R = [&](int a, int b) {
    auto [x, y] = sorted2(a, b);
    return t.index_of("R(" + std::to_string(x) + "," + std::to_string(y) +
                      ")");
  };
  auto A = [&](int a, int b) {
    auto [x, y] = sorted2(a, b);
    return t.index_of("A(" + std::to_string(x) + "," + std::to_string(y) +
                      ")");
  };
  auto Qp = [&](int a) { return t.index_of("Q+(" + std::to_string(a) + ")"); };
  auto Qm = [&](int a) { return t.index_of("Q-(" + std::to_string(a) + ")"); };

  // [R_ab, Q+-_c] and [R_ab, A_cd] (A transforms as a symmetric pair).
  add_sp2_action_on_first_label(t, "Q+", {{}}, 1);
  add_sp2_action_on_first_label(t, "Q-", {{}}, 1);
  for (int a = 1; a <= 2; ++a)
    for (int b = a; b <= 2; ++b)
      for (int c = 1; c <= 2; ++c)
        for (int d = c; d <= 2; ++d) {
          // slot action on each of the two symmetric labels
          for (const auto& [lab, coeff] : detail::sp2_slot_action(a, b, c))
            t.add_term(R(a, b), A(c, d), A(lab, d), coeff);
          for (const auto& [lab, coeff] : detail::sp2_slot_action(a, b, d))
            t.add_term(R(a, b), A(c, d), A(c, lab), coeff);
        }

  // {Q+_a, Q+_b} = 2 R_ab
  for (int a = 1; a <= 2; ++a)
    for (int b = a; b <= 2; ++b)
      t.set_bracket(Qp(a), Qp(b), LinComb::single(R(a, b), Scalar(2)));

  // {Q+_a, Q-_b} = beta A_ab
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      t.set_bracket(Qp(a), Qm(b), LinComb::single(A(a, b), beta));

  // [Q+_a, A_bc] = 2i eps_{a(b} Q-_{c)}
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      for (int c = b; c <= 2; ++c) {
        LinComb rhs;
        const Scalar i2 = Scalar::i();
        if (!eps2(a, b).is_zero())
          rhs = rhs + LinComb::single(Qm(c), i2 * Scalar(eps2(a, b)));
        if (!eps2(a, c).is_zero())
          rhs = rhs + LinComb::single(Qm(b), i2 * Scalar(eps2(a, c)));
        if (!rhs.is_zero()) t.set_bracket(Qp(a), A(b, c), rhs);
      }

  // minus sector graded-Abelian: {Q-,Q-} = [Q-,A] = [A,A] = 0 (unset).
  t.finalize();

  AlgebraModel model{std::move(t), std::nullopt, std::nullopt,
                     SplitMode::abelian_minus};
  StarStructure star;
  for (std::size_t g = 0; g < model.table.size(); ++g)
    star.image.push_back(LinComb::single(static_cast<std::uint32_t>(g)));
  model.star = star;
  SplitSpec split;
  for (const auto& g : model.table.generators())
    split.side.push_back((g.name == "A" || g.name == "Q-") ? 1 : 0);
  model.split = split;
  model.split_mode = SplitMode::abelian_minus;
  return model;
}

}  // namespace liecheck
