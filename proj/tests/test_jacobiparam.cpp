#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <vector>
#include "liecheck/catalog.hpp"
#include "liecheck/jacobiparam.hpp"
#include "liecheck/table_checks.hpp"

using namespace liecheck;

namespace {

Param param_by_name(const std::string& n) { return Param::lookup(n); }

bool has_value(const Assignment& a, const std::string& name,
               const BaseNumber& v) {
  auto it = a.values.find(Param::lookup(name));
  return it != a.values.end() && it->second == v;
}

}  // namespace

TEST_CASE("one-parameter family: residuals force the unique closure point") {
  const AlgebraModel m = build_d21_extended();
  const ConstraintSystem sys = residual_system(m.table);
  REQUIRE(!sys.empty());
  CHECK(sys.params.size() == 3);

  // Every equation is monic with a remembered producing triple.
  for (const auto& eq : sys.equations) {
    CHECK(!eq.poly.is_zero());
    CHECK(eq.poly.terms().back().coeff.is_one());
    CHECK(!eq.gen_i.empty());
    CHECK(!eq.gen_j.empty());
    CHECK(!eq.gen_k.empty());
    CHECK(!eq.target.empty());
  }
  // No duplicate polynomials survive normalization.
  std::vector<std::string> keys;
  for (const auto& eq : sys.equations) keys.push_back(eq.poly.to_string());
  std::sort(keys.begin(), keys.end());
  CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());

  // At least one equation is produced by an odd-odd-odd triple.
  const bool odd_triple = std::any_of(
      sys.equations.begin(), sys.equations.end(), [](const Equation& eq) {
        return eq.gen_i.rfind("Q", 0) == 0 && eq.gen_j.rfind("Q", 0) == 0 &&
               eq.gen_k.rfind("Q", 0) == 0;
      });
  CHECK(odd_triple);

  const SolveResult r = solve_small(sys);
  REQUIRE(r.determined);
  REQUIRE(r.solutions.size() == 1);
  const BaseNumber one{Rational(1)};
  CHECK(has_value(r.solutions[0], "alpha", one));
  CHECK(has_value(r.solutions[0], "beta", one));
  CHECK(has_value(r.solutions[0], "gamma", one));

  // The solved point really closes the algebra.
  std::map<Param, Scalar> sub;
  for (const auto& [p, v] : r.solutions[0].values) sub.emplace(p, Scalar(v));
  CHECK(check_graded_jacobi(m.table.substituted(sub)).clean());

  // verify_assignment agrees on the solution and rejects a perturbation.
  CHECK(verify_assignment(sys, sub));
  std::map<Param, Scalar> wrong = sub;
  wrong[param_by_name("alpha")] = Scalar(Rational(2));
  CHECK(!verify_assignment(sys, wrong));
  std::map<Param, Scalar> incomplete = sub;
  incomplete.erase(param_by_name("gamma"));
  CHECK_THROWS_AS(verify_assignment(sys, incomplete), MissingAssignment);
}

TEST_CASE("swapped internal factors move the closure point") {
  D21Options opt;
  opt.swap_su2 = true;
  const AlgebraModel m = build_d21_extended(opt);
  const SolveResult r = solve_small(residual_system(m.table));
  REQUIRE(r.determined);
  REQUIRE(r.solutions.size() == 1);
  CHECK(has_value(r.solutions[0], "alpha", BaseNumber{Rational(-2)}));
  CHECK(has_value(r.solutions[0], "beta", BaseNumber{Rational(1)}));
  CHECK(has_value(r.solutions[0], "gamma", BaseNumber{Rational(1)}));
}

TEST_CASE("without the extension the family closes identically") {
  D21Options opt;
  opt.include_extension = false;
  const AlgebraModel m = build_d21_extended(opt);
  const ConstraintSystem sys = residual_system(m.table);
  CHECK(sys.empty());
  const SolveResult r = solve_small(sys);
  REQUIRE(r.determined);
  REQUIRE(r.solutions.size() == 1);
  CHECK(r.solutions[0].values.empty());
}

TEST_CASE("extended osp(1|2) and su(1,1|1) close at the same couplings") {
  {
    const AlgebraModel m = build_osp12_extended(Scalar::param("beta"));
    const SolveResult r = solve_small(residual_system(m.table));
    REQUIRE(r.determined);
    REQUIRE(r.solutions.size() == 1);
    CHECK(has_value(r.solutions[0], "beta", BaseNumber{Rational(1)}));
  }
  {
    const AlgebraModel m = build_su111_extended(Scalar::param("beta"),
                                                Scalar::param("gamma"));
    const SolveResult r = solve_small(residual_system(m.table));
    REQUIRE(r.determined);
    REQUIRE(r.solutions.size() == 1);
    CHECK(has_value(r.solutions[0], "beta", BaseNumber{Rational(1)}));
    CHECK(has_value(r.solutions[0], "gamma", BaseNumber{Rational(1)}));
  }
}

TEST_CASE("random non-solutions are rejected") {
  const AlgebraModel m = build_d21_extended();
  const ConstraintSystem sys = residual_system(m.table);
  const SolveResult r = solve_small(sys);
  REQUIRE(r.determined);
  REQUIRE(r.solutions.size() == 1);
  const auto& good = r.solutions[0].values;

  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<int> num(-6, 6);
  int tested = 0;
  while (tested < 20) {
    std::map<Param, Scalar> a;
    for (const auto& [p, v] : good) a.emplace(p, Scalar(Rational(num(rng))));
    bool differs = false;
    for (const auto& [p, v] : good)
      if (a.at(p).as_base() != std::optional<BaseNumber>(v)) differs = true;
    if (!differs) continue;
    ++tested;
    CHECK(!verify_assignment(sys, a));
  }
}

TEST_CASE("univariate quadratics over Q(i,sqrt2) are solved exactly") {
  // Synthetic table: [E, E] = (x^2 - 2) E for a single odd generator would
  // break grading, so use two bosons: [X, Y] = (x^2 - 2) X and force the
  // constraint through a Jacobi triple is overkill here -- instead feed the
  // solver directly through a hand-made system.
  ConstraintSystem sys;
  const Scalar x = Scalar::param("qx");
  Equation eq;
  eq.poly = x * x - Scalar(Rational(2));
  eq.gen_i = eq.gen_j = eq.gen_k = "X";
  eq.target = "X";
  sys.equations.push_back(eq);
  sys.params = {param_by_name("qx")};
  // Empty source table: soundness check trivially passes.
  const SolveResult r = solve_small(sys);
  REQUIRE(r.determined);
  REQUIRE(r.solutions.size() == 2);
  std::vector<BaseNumber> roots;
  for (const auto& a : r.solutions)
    roots.push_back(a.values.at(param_by_name("qx")));
  const BaseNumber s2 = BaseNumber::sqrt2();
  CHECK(std::count(roots.begin(), roots.end(), s2) == 1);
  CHECK(std::count(roots.begin(), roots.end(), -s2) == 1);
}

TEST_CASE("irreducible or underdetermined systems are reported as such") {
  {
    // x^2 = 3 has no root in Q(i,sqrt2).
    ConstraintSystem sys;
    const Scalar x = Scalar::param("qy");
    Equation eq;
    eq.poly = x * x - Scalar(Rational(3));
    eq.gen_i = eq.gen_j = eq.gen_k = eq.target = "X";
    sys.equations.push_back(eq);
    sys.params = {param_by_name("qy")};
    const SolveResult r = solve_small(sys);
    CHECK(!r.determined);
    REQUIRE(r.reduced.size() == 1);
  }
  {
    // A single bilinear equation x*y = 1 cannot be finished by the solver.
    ConstraintSystem sys;
    const Scalar x = Scalar::param("qu");
    const Scalar y = Scalar::param("qv");
    Equation eq;
    eq.poly = x * y - Scalar(Rational(1));
    eq.gen_i = eq.gen_j = eq.gen_k = eq.target = "X";
    sys.equations.push_back(eq);
    sys.params = {param_by_name("qu"), param_by_name("qv")};
    const SolveResult r = solve_small(sys);
    CHECK(!r.determined);
    CHECK(!r.reduced.empty());
  }
}
