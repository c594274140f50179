#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liecheck/catalog.hpp"
#include "liecheck/table_checks.hpp"
#include "liecheck/table_compare.hpp"

using namespace liecheck;

namespace {

Scalar s_i() { return Scalar::i(); }

LinComb lc(const BracketTable& t, const std::string& d, Scalar c = Scalar(1)) {
  return LinComb::single(t.index_of(d), c);
}

std::map<Param, Scalar> vals(
    std::initializer_list<std::pair<const char*, int>> xs) {
  std::map<Param, Scalar> m;
  for (const auto& [n, v] : xs) m[Param::intern(n)] = Scalar(v);
  return m;
}

}  // namespace

TEST_CASE("gca conformal factor matches the pinned structure constants") {
  auto m = build_gca(3);
  const auto& t = m.table;
  CHECK(t.bracket(t.index_of("R(0)"), t.index_of("R(1)")) ==
        lc(t, "R(2)", s_i()));
  CHECK(t.bracket(t.index_of("R(1)"), t.index_of("R(2)")) ==
        lc(t, "R(0)", Scalar(-1) * s_i()));
  CHECK(t.bracket(t.index_of("R(2)"), t.index_of("R(0)")) ==
        lc(t, "R(1)", s_i()));
  // Column structure: [R_r, A_{s,i}] mirrors [R_r, R_s].
  CHECK(t.bracket(t.index_of("R(0)"), t.index_of("A(1,2)")) ==
        lc(t, "A(2,2)", s_i()));
  // Rotations act on the spatial label.
  CHECK(t.bracket(t.index_of("J(1,2)"), t.index_of("A(0,1)")) ==
        lc(t, "A(0,2)", s_i()));
  CHECK(t.bracket(t.index_of("J(1,2)"), t.index_of("A(0,3)")).is_zero());
  // Abelian ideal.
  CHECK(t.bracket(t.index_of("A(0,1)"), t.index_of("A(2,3)")).is_zero());
}

TEST_CASE("gca: jacobi, star, split and dimensions for d=1..5") {
  for (int d = 1; d <= 5; ++d) {
    CAPTURE(d);
    auto m = build_gca(d);
    auto jr = check_graded_jacobi(m.table);
    CHECK(jr.clean());
    REQUIRE(m.star.has_value());
    CHECK(check_star_compatibility(m.table, *m.star).clean());
    REQUIRE(m.split.has_value());
    CHECK(check_split_structure(m.table, *m.split, m.split_mode).clean());
    auto dims = dimension_report(m.table);
    CHECK(dims.even == static_cast<std::size_t>(3 + d * (d - 1) / 2 + 3 * d));
    CHECK(dims.odd == 0);
  }
}

TEST_CASE("osp(N|2): frozen entries and jacobi for n=0..3") {
  for (int n = 0; n <= 3; ++n) {
    CAPTURE(n);
    auto m = build_osp_n2(n);
    CHECK(check_graded_jacobi(m.table).clean());
    REQUIRE(m.star.has_value());
    CHECK(check_star_compatibility(m.table, *m.star).clean());
    auto dims = dimension_report(m.table);
    CHECK(dims.even == static_cast<std::size_t>(3 + n * (n - 1) / 2));
    CHECK(dims.odd == static_cast<std::size_t>(2 * n));
  }
  auto m = build_osp_n2(2);
  const auto& t = m.table;
  CHECK(t.bracket(t.index_of("Q(1,1)"), t.index_of("Q(1,1)")) ==
        lc(t, "R(1,1)", Scalar(2)));
  // {Q_{a i}, Q_{b j}} = 2 delta_ij R_ab - eps_ab J_ij
  CHECK(t.bracket(t.index_of("Q(1,1)"), t.index_of("Q(2,2)")) ==
        lc(t, "J(1,2)", Scalar(-1)));
  CHECK(t.bracket(t.index_of("Q(1,1)"), t.index_of("Q(2,1)")) ==
        lc(t, "R(1,2)", Scalar(2)));
}

TEST_CASE("extended osp(1|2): jacobi holds exactly at beta=1 and only there") {
  auto model = build_osp12_extended(Scalar::param("beta"));
  auto sym = check_graded_jacobi(model.table);
  CHECK(!sym.clean());  // symbolic beta leaves residuals

  auto at1 = model.table.substituted(vals({{"beta", 1}}));
  CHECK(check_graded_jacobi(at1).clean());
  auto at2 = model.table.substituted(vals({{"beta", 2}}));
  CHECK(!check_graded_jacobi(at2).clean());

  REQUIRE(model.star.has_value());
  CHECK(check_star_compatibility(at1, *model.star).clean());
  REQUIRE(model.split.has_value());
  CHECK(check_split_structure(at1, *model.split, model.split_mode).clean());

  auto solved = build_osp12_extended(Scalar(1));
  auto dims = dimension_report(solved.table);
  CHECK(dims.even == 6);
  CHECK(dims.odd == 4);
}

TEST_CASE("extended su(1,1|1)+u(1): jacobi pins beta=gamma=1") {
  auto model =
      build_su111_extended(Scalar::param("beta"), Scalar::param("gamma"));
  CHECK(!check_graded_jacobi(model.table).clean());

  auto good = model.table.substituted(vals({{"beta", 1}, {"gamma", 1}}));
  CHECK(check_graded_jacobi(good).clean());
  auto bad = model.table.substituted(vals({{"beta", 1}, {"gamma", 2}}));
  CHECK(!check_graded_jacobi(bad).clean());
  auto bad2 = model.table.substituted(vals({{"beta", -1}, {"gamma", -1}}));
  CHECK(!check_graded_jacobi(bad2).clean());

  REQUIRE(model.star.has_value());
  CHECK(check_star_compatibility(good, *model.star).clean());
  REQUIRE(model.split.has_value());
  CHECK(check_split_structure(good, *model.split, model.split_mode).clean());

  auto dims = dimension_report(model.table);
  CHECK(dims.even == 11);
  CHECK(dims.odd == 8);

  // Charge bookkeeping, frozen.  The minus supercharges carry the opposite
  // J charge of the plus ones, so the A family is J-neutral; C acts on the
  // minus sector only, scaled by gamma.
  const auto& t = model.table;
  CHECK(t.bracket(t.index_of("J"), t.index_of("Q+(1)")) ==
        lc(t, "Q+(1)", Scalar(Rational(-1, 2)) * s_i()));
  CHECK(t.bracket(t.index_of("J"), t.index_of("Q-(1)")) ==
        lc(t, "Q-(1)", Scalar(Rational(1, 2)) * s_i()));
  CHECK(t.bracket(t.index_of("J"), t.index_of("A(1,2)")) == LinComb{});
  CHECK(t.bracket(t.index_of("C"), t.index_of("Q-(1)")) ==
        lc(t, "Q-(1)", Scalar(-1) * s_i() * Scalar::param("gamma")));
  CHECK(t.bracket(t.index_of("C"), t.index_of("Q+(1)")) == LinComb{});
}

TEST_CASE("one-parameter family without extension: jacobi clean for symbolic alpha") {
  D21Options opt;
  opt.include_extension = false;
  auto model = build_d21_extended(opt);
  auto dims = dimension_report(model.table);
  CHECK(dims.even == 9);
  CHECK(dims.odd == 8);
  auto jr = check_graded_jacobi(model.table);
  CHECK(jr.clean());  // holds identically in alpha
}

TEST_CASE("extended one-parameter family: jacobi forces alpha=beta=gamma=1") {
  auto model = build_d21_extended();
  auto dims = dimension_report(model.table);
  CHECK(dims.even == 19);
  CHECK(dims.odd == 16);

  CHECK(!check_graded_jacobi(model.table).clean());
  auto good = model.table.substituted(
      vals({{"alpha", 1}, {"beta", 1}, {"gamma", 1}}));
  CHECK(check_graded_jacobi(good).clean());
  auto bad = model.table.substituted(
      vals({{"alpha", -2}, {"beta", 1}, {"gamma", 1}}));
  CHECK(!check_graded_jacobi(bad).clean());

  REQUIRE(model.star.has_value());
  CHECK(check_star_compatibility(good, *model.star).clean());
  REQUIRE(model.split.has_value());
  CHECK(check_split_structure(good, *model.split, model.split_mode).clean());
}

TEST_CASE("swapped extension couples the other su(2): alpha=-2 instead") {
  D21Options opt;
  opt.swap_su2 = true;
  auto model = build_d21_extended(opt);
  CHECK(!check_graded_jacobi(model.table).clean());
  auto good = model.table.substituted(
      vals({{"alpha", -2}, {"beta", 1}, {"gamma", 1}}));
  CHECK(check_graded_jacobi(good).clean());
  auto bad = model.table.substituted(
      vals({{"alpha", 1}, {"beta", 1}, {"gamma", 1}}));
  CHECK(!check_graded_jacobi(bad).clean());
  REQUIRE(model.star.has_value());
  CHECK(check_star_compatibility(good, *model.star).clean());
}

TEST_CASE("coset dimension bookkeeping") {
  auto d2 = coset_dim_report(2, 2);
  REQUIRE(d2.size() == 3);
  for (const auto& item : d2) {
    CAPTURE(item.label);
    CHECK(item.computed == item.reference);
  }
  CHECK(d2[0].computed == 6);
  CHECK(d2[1].computed == 2);  // N=2: N^2 - N
  CHECK(d2[2].computed == 8);

  auto d4 = coset_dim_report(4, 1);
  REQUIRE(d4.size() == 2);
  CHECK(d4[0].computed == 8);
  CHECK(d4[0].reference == 8);
  CHECK(d4[1].computed == 15);
  CHECK(d4[1].reference == 15);

  auto d5 = coset_dim_report(5, 1);
  REQUIRE(d5.size() == 2);
  CHECK(d5[0].computed == 16);
  CHECK(d5[1].computed == 22);
  auto d5n2 = coset_dim_report(5, 2);
  CHECK(d5n2[0].computed == 32);
  CHECK(d5n2[1].computed == 22);
}

TEST_CASE("su(2,2|2N): dimensions, jacobi, star, and central axial charge") {
  CHECK_THROWS_AS(build_su22_2n(0), UnsupportedN);
  CHECK_THROWS_AS(build_su22_2n(3), UnsupportedN);

  auto m1 = build_su22_2n(1);
  const auto& t1 = m1.table;
  auto d1 = dimension_report(t1);
  CHECK(d1.even == 19);
  CHECK(d1.odd == 16);
  CHECK(check_graded_jacobi(t1).clean());
  REQUIRE(m1.star.has_value());
  CHECK(check_star_compatibility(t1, *m1.star).clean());
  // Standard conformal completion shows up in the derived even-even sector.
  CHECK(t1.bracket(t1.index_of("P(0)"), t1.index_of("K(0)")) ==
        lc(t1, "D", Scalar(-2) * s_i()));
  CHECK(t1.bracket(t1.index_of("D"), t1.index_of("P(0)")) ==
        lc(t1, "P(0)", s_i()));
  CHECK(t1.bracket(t1.index_of("D"), t1.index_of("K(0)")) ==
        lc(t1, "K(0)", Scalar(-1) * s_i()));
  // N=1: the axial charge acts on fermions with weight 1/2.
  CHECK(t1.bracket(t1.index_of("A"), t1.index_of("Q(1,1)")) ==
        lc(t1, "Q(1,1)", Scalar(Rational(-1, 2))));

  auto m2 = build_su22_2n(2);
  const auto& t2 = m2.table;
  auto d2 = dimension_report(t2);
  CHECK(d2.even == 31);
  CHECK(d2.odd == 32);
  CHECK(check_graded_jacobi(t2).clean());
  REQUIRE(m2.star.has_value());
  CHECK(check_star_compatibility(t2, *m2.star).clean());
  // N=2: the axial charge is central.
  const std::uint32_t a2 = t2.index_of("A");
  bool central = true;
  for (std::uint32_t g = 0; g < t2.size(); ++g)
    if (!t2.bracket(a2, g).is_zero()) central = false;
  CHECK(central);
}

TEST_CASE("weyl basis model: jacobi, star, and symmetric-pair split") {
  for (int n : {1, 2}) {
    WeylModel w = build_weyl_model(n);
    const auto& t = w.model.table;
    auto d = dimension_report(t);
    CHECK(d.even == (n == 1 ? 19 : 31));
    CHECK(d.odd == (n == 1 ? 16 : 32));
    CHECK(check_graded_jacobi(t).clean());
    REQUIRE(w.model.star.has_value());
    CHECK(check_star_compatibility(t, *w.model.star).clean());
    REQUIRE(w.model.split.has_value());
    CHECK(w.model.split_mode == SplitMode::symmetric_pair);
    CHECK(check_split_structure(t, *w.model.split, w.model.split_mode).clean());
  }
  // The internal minus sector is empty at n=1 and five-dimensional at n=2.
  CHECK(build_weyl_model(1).tminus.empty());
  CHECK(build_weyl_model(2).tminus.size() == 5);
  CHECK(build_weyl_model(2).tplus.size() == 10);
}

TEST_CASE("expected d=3 super-Galilean table: checks and reference entries") {
  CHECK_THROWS_AS(build_expected_gca3_susy(0), UnsupportedN);
  CHECK_THROWS_AS(build_expected_gca3_susy(5), UnsupportedN);
  for (int n : {1, 2}) {
    WeylModel g = build_expected_gca3_susy(n);
    const auto& t = g.model.table;
    auto d = dimension_report(t);
    CHECK(d.even == (n == 1 ? 19 : 31));
    CHECK(d.odd == (n == 1 ? 16 : 32));
    CHECK(check_graded_jacobi(t).clean());
    REQUIRE(g.model.star.has_value());
    CHECK(check_star_compatibility(t, *g.model.star).clean());
    REQUIRE(g.model.split.has_value());
    CHECK(g.model.split_mode == SplitMode::abelian_minus);
    CHECK(check_split_structure(t, *g.model.split, g.model.split_mode).clean());

    // Reference entries common to both ranks.
    CHECK(t.bracket(t.index_of("H"), t.index_of("K")) ==
          lc(t, "D", Scalar(-2) * s_i()));
    CHECK(t.bracket(t.index_of("H"), t.index_of("F(2)")) ==
          lc(t, "B(2)", Scalar(2) * s_i()));
    CHECK(t.bracket(t.index_of("K"), t.index_of("P(1)")) ==
          lc(t, "B(1)", Scalar(2) * s_i()));
    CHECK(t.bracket(t.index_of("Q+(1,1)"), t.index_of("S+(2,1)")) ==
          lc(t, "D", Scalar(2) * s_i()) + lc(t, "J(1,2)", Scalar(2)) +
              lc(t, "T+(1,1)", Scalar(2)));
    // Supersymmetric pairing onto time translations.
    const int m = 2 * n;
    CHECK(t.bracket(t.index_of("Q+(1,1)"),
                    t.index_of("Q+(2," + std::to_string(1 + n) + ")")) ==
          lc(t, "H", Scalar(2)));
    // The minus supercharges are graded-abelian among themselves.
    for (const char* a : {"Q-(1,1)", "S-(1,1)"})
      for (const char* b : {"Q-(2,1)", "S-(2,1)"})
        CHECK(t.bracket(t.index_of(a), t.index_of(b)).is_zero());
    (void)m;
  }
  // n=2 boost/axial block of the mixed supercharge product.
  WeylModel g2 = build_expected_gca3_susy(2);
  const auto& t2 = g2.model.table;
  CHECK(t2.bracket(t2.index_of("Q+(1,1)"), t2.index_of("S-(2,1)")) ==
        lc(t2, "B(3)", Scalar(2) * s_i()) + lc(t2, "A0", Scalar(-2)) +
            lc(t2, "T-(1,1)", Scalar(2)));
  CHECK(t2.bracket(t2.index_of("T-(1,2)"), t2.index_of("Q+(1,3)")) ==
        lc(t2, "Q-(1,4)", Scalar(1)));
  // Axial charge is central at n=2 but acts at n=1.
  const auto& t1 = build_expected_gca3_susy(1).model.table;
  CHECK(t1.bracket(t1.index_of("A0"), t1.index_of("Q+(1,1)")) ==
        lc(t1, "Q-(1,1)", Scalar(Rational(-1, 2))));
  bool central = true;
  const std::uint32_t a0 = t2.index_of("A0");
  for (std::uint32_t g = 0; g < t2.size(); ++g)
    if (!t2.bracket(a0, g).is_zero()) central = false;
  CHECK(central);
}

TEST_CASE("solved family maps onto the expected n=1 table via the dictionary") {
  D21Options opt;
  opt.alpha = Scalar(1);
  opt.beta = Scalar(1);
  opt.gamma = Scalar(1);
  const AlgebraModel d21 = build_d21_extended(opt);
  const WeylModel wg = build_expected_gca3_susy(1);
  REQUIRE(d21.table.size() == wg.model.table.size());

  const Dictionary dict = build_n1_dictionary(d21.table, wg.model.table);
  const auto cb = change_basis(d21.table, dict.new_gens, dict.old_in_new);
  const CompareReport full = compare_tables(
      cb.table, wg.model.table,
      build_mapping_by_display(cb.table, wg.model.table),
      CompareMode::up_to_diagonal_rescaling);
  CHECK(full.ok);
  CHECK(full.mismatches.empty());

  // The plus sectors agree on their own, under identity labels after the
  // dictionary, up to diagonal rescaling.
  REQUIRE(wg.model.split.has_value());
  std::vector<std::uint32_t> plus;
  for (std::uint32_t g = 0; g < wg.model.table.size(); ++g)
    if (wg.model.split->side[g] == 0) plus.push_back(g);
  // cb.table shares the golden generator order, so indices carry over.
  const BracketTable mapped_plus = subtable(cb.table, plus);
  const BracketTable expected_plus = subtable(wg.model.table, plus);
  const CompareReport ps = compare_tables(
      mapped_plus, expected_plus,
      build_mapping_by_display(mapped_plus, expected_plus),
      CompareMode::up_to_diagonal_rescaling);
  CHECK(ps.ok);
  CHECK(mapped_plus.size() == 17);
}
