#include "liecheck/catalog.hpp"

#include "catalog_util.hpp"

namespace liecheck {

namespace {

// Structure constants of the d=1 conformal factor in the hermitian basis:
// [R_r, R_s] = i eps_{rs}^t R_t with eps_{rs}^t = eps_{rsu} eta^{ut},
// eta = diag(-1,+1,+1), eps_{012} = +1 (labels 0,1,2).
Rational eps3_metric(int r, int s, int t) {
  auto lc = [](int a, int b, int c) -> int {
    if (a == b || b == c || a == c) return 0;
    // parity of the permutation (a,b,c) of (0,1,2)
    int sign = 1;
    int v[3] = {a, b, c};
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (v[i] > v[j]) {
          std::swap(v[i], v[j]);
          sign = -sign;
        }
    return sign;
  };
  const int eta_t = (t == 0) ? -1 : 1;  // eta^{tt}
  return Rational(lc(r, s, t) * eta_t);
}

}  // namespace

AlgebraModel build_gca(int d) {
  using detail::gen;
  if (d < 1 || d > 5) throw std::invalid_argument("build_gca: d must be 1..5");
  BracketTable t("gca-d" + std::to_string(d));

  for (int r = 0; r < 3; ++r) t.add_generator(gen("R", {r}, Parity::even));
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      t.add_generator(gen("J", {i, j}, Parity::even));
  for (int r = 0; r < 3; ++r)
    for (int i = 1; i <= d; ++i)
      t.add_generator(gen("A", {r, i}, Parity::even));

  auto R = [&](int r) { return t.index_of("R(" + std::to_string(r) + ")"); };
  auto A = [&](int r, int i) {
    return t.index_of("A(" + std::to_string(r) + "," + std::to_string(i) +
                      ")");
  };
  // J with unordered labels: J_{ji} = -J_{ij}.
  auto Jlc = [&](int i, int j) -> LinComb {
    if (i == j) return LinComb();
    const Rational sign(i < j ? 1 : -1);
    auto [a, b] = detail::sorted2(i, j);
    return LinComb::single(
        t.index_of("J(" + std::to_string(a) + "," + std::to_string(b) + ")"),
        Scalar(sign));
  };

  // [R_r, R_s] and [R_r, A_{s,i}]
  for (int r = 0; r < 3; ++r) {
    for (int s = 0; s < 3; ++s) {
      for (int u = 0; u < 3; ++u) {
        const Rational c = eps3_metric(r, s, u);
        if (c.is_zero()) continue;
        if (r < s) t.add_term(R(r), R(s), R(u), Scalar(c) * Scalar::i());
        for (int i = 1; i <= d; ++i)
          t.add_term(R(r), A(s, i), A(u, i), Scalar(c) * Scalar::i());
      }
    }
  }

  // [J_ij, J_kl] = i (delta_ik J_jl + delta_jl J_ik - delta_il J_jk
  //                   - delta_jk J_il)
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k)
        for (int l = k + 1; l <= d; ++l) {
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

  // [J_ij, A_{r,k}] = i (delta_ik A_{r,j} - delta_jk A_{r,i})
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      for (int r = 0; r < 3; ++r)
        for (int k = 1; k <= d; ++k) {
          LinComb rhs;
          if (i == k)
            rhs = rhs + LinComb::single(A(r, j), Scalar::i());
          if (j == k)
            rhs = rhs - LinComb::single(A(r, i), Scalar::i());
          if (!rhs.is_zero())
            t.set_bracket(t.index_of("J(" + std::to_string(i) + "," +
                                     std::to_string(j) + ")"),
                          A(r, k), rhs);
        }

  t.finalize();

  AlgebraModel model{std::move(t), std::nullopt, std::nullopt,
                     SplitMode::abelian_minus};
  // All generators hermitian in this basis.
  StarStructure star;
  for (std::size_t g = 0; g < model.table.generators().size(); ++g)
    star.image.push_back(LinComb::single(static_cast<std::uint32_t>(g)));
  model.star = star;
  SplitSpec split;
  for (const auto& g : model.table.generators())
    split.side.push_back(g.name == "A" ? 1 : 0);
  model.split = split;
  model.split_mode = SplitMode::abelian_minus;
  return model;
}

}  // namespace liecheck
