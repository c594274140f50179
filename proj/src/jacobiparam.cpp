#include "liecheck/jacobiparam.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "liecheck/table_checks.hpp"
#include "liecheck/table_compare.hpp"

namespace liecheck {

namespace {

/// Monic normal form: divide by the coefficient of the last (highest) term.
Scalar normalize_poly(const Scalar& p) {
  if (p.is_zero()) return p;
  const BaseNumber lead = p.terms().back().coeff;
  return Scalar(lead.inverse()) * p;
}

}  // namespace

ConstraintSystem residual_system(const BracketTable& t) {
  ConstraintSystem out;
  out.source = t;
  std::set<std::string> seen;
  const std::uint32_t n = static_cast<std::uint32_t>(t.size());
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i; j < n; ++j)
      for (std::uint32_t k = j; k < n; ++k) {
        LinComb r = jacobi_residual(t, i, j, k);
        if (r.is_zero()) continue;
        for (const auto& [g, c] : r.terms()) {
          const Scalar poly = normalize_poly(c);
          if (poly.is_zero()) continue;
          const std::string key = poly.to_string();
          if (!seen.insert(key).second) continue;
          Equation eq;
          eq.poly = poly;
          eq.gen_i = t.generator(i).display();
          eq.gen_j = t.generator(j).display();
          eq.gen_k = t.generator(k).display();
          eq.target = t.generator(g).display();
          out.equations.push_back(std::move(eq));
        }
      }
  std::set<Param> ps;
  for (const auto& eq : out.equations)
    for (Param p : eq.poly.params_used()) ps.insert(p);
  out.params.assign(ps.begin(), ps.end());
  return out;
}

bool verify_assignment(const ConstraintSystem& s,
                       const std::map<Param, Scalar>& a) {
  for (Param p : s.params)
    if (a.find(p) == a.end())
      throw MissingAssignment("verify_assignment: no value for parameter " +
                              p.name());
  for (const auto& eq : s.equations)
    if (!eq.poly.substitute(a).is_zero()) return false;
  return true;
}

namespace {

/// Recursive worker: solve the given (normalized, nonzero) polynomial list.
/// Returns false when the rules do not apply (undetermined); `reduced` then
/// holds the remaining equations.
bool solve_list(std::vector<Scalar> eqs,
                std::vector<std::map<Param, BaseNumber>>& solutions,
                std::vector<Scalar>& reduced) {
  // Normalize: drop zeros; an inconsistent constant kills all solutions.
  std::vector<Scalar> sys;
  for (const auto& e : eqs) {
    if (e.is_zero()) continue;
    if (e.as_base().has_value()) {
      solutions.clear();
      return true;  // determined: no solutions
    }
    sys.push_back(normalize_poly(e));
  }
  std::sort(sys.begin(), sys.end(),
            [](const Scalar& a, const Scalar& b) {
              return a.to_string() < b.to_string();
            });
  sys.erase(std::unique(sys.begin(), sys.end()), sys.end());
  if (sys.empty()) {
    solutions.push_back({});
    return true;
  }

  std::set<Param> ps;
  for (const auto& e : sys)
    for (Param p : e.params_used()) ps.insert(p);

  // Rule 1: a parameter occurring linearly with constant leading coefficient.
  // Prefer equations in a single parameter so substitutions stay small.
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t idx = 0; idx < sys.size(); ++idx) {
      const Scalar& e = sys[idx];
      const bool univariate = e.params_used().size() == 1;
      if (pass == 0 && !univariate) continue;
      for (Param p : e.params_used()) {
        if (e.degree_in(p) != 1) continue;
        const Scalar c1 = e.coeff_of_power(p, 1);
        auto c1v = c1.as_base();
        if (!c1v || c1v->is_zero()) continue;
        const Scalar c0 = e.coeff_of_power(p, 0);
        // p = -c0 / c1 (a polynomial in the remaining parameters).
        const Scalar value = Scalar(BaseNumber(Rational(-1)) / *c1v) * c0;
        std::map<Param, Scalar> sub{{p, value}};
        std::vector<Scalar> rest;
        for (std::size_t r = 0; r < sys.size(); ++r) {
          if (r == idx) continue;
          rest.push_back(sys[r].substitute(sub));
        }
        std::vector<std::map<Param, BaseNumber>> tails;
        if (!solve_list(std::move(rest), tails, reduced)) return false;
        for (auto& tail : tails) {
          std::map<Param, Scalar> back;
          for (const auto& [q, v] : tail) back.emplace(q, Scalar(v));
          auto pv = value.substitute(back).as_base();
          if (!pv) {
            // Free parameters survive in the eliminated expression: give up.
            reduced = sys;
            return false;
          }
          tail.emplace(p, *pv);
          solutions.push_back(std::move(tail));
        }
        return true;
      }
    }

  // Rule 2: a univariate polynomial of degree <= 2.
  for (std::size_t idx = 0; idx < sys.size(); ++idx) {
    const Scalar& e = sys[idx];
    auto used = e.params_used();
    if (used.size() != 1) continue;
    const Param p = used.front();
    const int deg = e.degree_in(p);
    if (deg != 2) continue;
    const auto c2 = e.coeff_of_power(p, 2).as_base();
    const auto c1 = e.coeff_of_power(p, 1).as_base();
    const auto c0 = e.coeff_of_power(p, 0).as_base();
    if (!c2 || !c1 || !c0) continue;
    const BaseNumber disc = *c1 * *c1 - BaseNumber(Rational(4)) * *c2 * *c0;
    const auto root = sqrt_in_field(disc);
    if (!root) {
      reduced = sys;
      return false;  // no square root in Q(i,sqrt2): undetermined here
    }
    std::vector<BaseNumber> zeros;
    const BaseNumber two_c2 = BaseNumber(Rational(2)) * *c2;
    zeros.push_back((BaseNumber() - *c1 + *root) / two_c2);
    if (!root->is_zero()) zeros.push_back((BaseNumber() - *c1 - *root) / two_c2);
    for (const BaseNumber& z : zeros) {
      std::map<Param, Scalar> sub{{p, Scalar(z)}};
      std::vector<Scalar> rest;
      for (std::size_t r = 0; r < sys.size(); ++r) {
        if (r == idx) continue;
        rest.push_back(sys[r].substitute(sub));
      }
      std::vector<std::map<Param, BaseNumber>> tails;
      if (!solve_list(std::move(rest), tails, reduced)) return false;
      for (auto& tail : tails) {
        tail.emplace(p, z);
        solutions.push_back(std::move(tail));
      }
    }
    return true;
  }

  reduced = sys;
  return false;
}

}  // namespace

SolveResult solve_small(const ConstraintSystem& s) {
  SolveResult out;
  std::vector<Scalar> eqs;
  for (const auto& eq : s.equations) eqs.push_back(eq.poly);
  std::vector<std::map<Param, BaseNumber>> sols;
  if (!solve_list(std::move(eqs), sols, out.reduced)) {
    out.determined = false;
    return out;
  }
  out.determined = true;
  for (auto& m : sols) {
    Assignment a;
    a.values = std::move(m);
    out.solutions.push_back(std::move(a));
  }
  // Soundness: every solution must make the source table Jacobi-clean.
  for (const auto& a : out.solutions) {
    std::map<Param, Scalar> sub;
    for (const auto& [p, v] : a.values) sub.emplace(p, Scalar(v));
    BracketTable t = s.source.substituted(sub);
    if (!check_graded_jacobi(t).clean())
      throw std::logic_error(
          "solve_small: solution fails the Jacobi identity on the source "
          "table");
  }
  return out;
}

}  // namespace liecheck
