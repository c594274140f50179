#include "liecheck/table_compare.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace liecheck {

namespace {

std::optional<std::int64_t> isqrt_exact(std::int64_t v) {
  if (v < 0) return std::nullopt;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
  for (std::int64_t c = std::max<std::int64_t>(0, r - 2); c <= r + 2; ++c)
    if (c * c == v) return c;
  return std::nullopt;
}

std::optional<Rational> sqrt_rational(const Rational& q) {
  if (q.sign() < 0) return std::nullopt;
  auto n = isqrt_exact(q.num());
  auto d = isqrt_exact(q.den());
  if (!n || !d) return std::nullopt;
  return Rational(*n, *d);
}

/// Constant ratio a/b of two scalars, when it exists.
std::optional<BaseNumber> ratio_of(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) return std::nullopt;
  // candidate from the leading term of b and the matching monomial in a
  const auto& bt = b.terms().front();
  BaseNumber num;
  bool found = false;
  for (const auto& t : a.terms())
    if (t.mono == bt.mono) {
      num = t.coeff;
      found = true;
      break;
    }
  if (!found) return std::nullopt;
  BaseNumber r = num * bt.coeff.inverse();
  if (a == Scalar(r) * b) return r;
  return std::nullopt;
}

struct Constraint {
  std::uint32_t i, j, k;
  BaseNumber r;  // s_i s_j = r s_k
};

struct Solver {
  std::size_t n;
  const std::vector<Constraint>& cons;
  std::vector<std::optional<BaseNumber>> s;
  /// Node budget: free torus directions make the search space large, so the
  /// solver gives up (reporting no solution found) rather than running
  /// exhaustively.  Matching tables resolve in O(rank) nodes because the
  /// seed list starts with the overwhelmingly common scales.
  long budget = 20000;

  explicit Solver(std::size_t n_, const std::vector<Constraint>& c)
      : n(n_), cons(c), s(n_) {}

  /// Propagate to a fixpoint; false on contradiction.  Square constraints
  /// (s_g^2 = r s_k) only propagate forward into s_k; solving them for s_g
  /// is left to the two-root branching in solve().
  bool propagate() {
    bool progress = true;
    while (progress) {
      progress = false;
      for (const auto& c : cons) {
        const auto &si = s[c.i], &sj = s[c.j], &sk = s[c.k];
        // Cancellation pins: every scale is a unit, so a constraint whose
        // target coincides with one of the pair (an eigen-bracket
        // [X, Y} = c Y) fixes the other member outright.
        if (c.j == c.k && c.i != c.j) {
          if (!si) {
            s[c.i] = c.r;
            progress = true;
          } else if (*si != c.r) {
            return false;
          }
          continue;
        }
        if (c.i == c.k && c.i != c.j) {
          if (!sj) {
            s[c.j] = c.r;
            progress = true;
          } else if (*sj != c.r) {
            return false;
          }
          continue;
        }
        if (c.i == c.j && c.i == c.k) {  // s_g^2 = r s_g
          if (!si) {
            s[c.i] = c.r;
            progress = true;
          } else if (*si != c.r) {
            return false;
          }
          continue;
        }
        if (c.i == c.j) {
          if (si && sk) {
            if (*si * *si != c.r * *sk) return false;
          } else if (si && !sk) {
            s[c.k] = *si * *si * c.r.inverse();
            progress = true;
          }
          continue;
        }
        int known = (si ? 1 : 0) + (sj ? 1 : 0) + (sk ? 1 : 0);
        if (known == 3) {
          if (*si * *sj != c.r * *sk) return false;
          continue;
        }
        if (known != 2) continue;
        if (!sk) {
          s[c.k] = *si * *sj * c.r.inverse();
        } else if (!sj) {
          s[c.j] = c.r * *sk * si->inverse();
        } else {
          s[c.i] = c.r * *sk * sj->inverse();
        }
        progress = true;
      }
    }
    return true;
  }

  std::optional<std::uint32_t> first_unknown_in_constraints() const {
    std::optional<std::uint32_t> best;
    for (const auto& c : cons)
      for (std::uint32_t g : {c.i, c.j, c.k})
        if (!s[g] && (!best || g < *best)) best = g;
    return best;
  }

  bool solve() {
    if (--budget < 0) return false;
    if (!propagate()) return false;

    // Determined branch: a square constraint with known target has exactly
    // two candidate roots (or none within the field).
    for (const auto& c : cons)
      if (c.i == c.j && !s[c.i] && s[c.k]) {
        const auto root = sqrt_in_field(c.r * *s[c.k]);
        if (!root) return false;
        const auto saved = s;
        s[c.i] = *root;
        if (solve()) return true;
        s = saved;
        if (!root->is_zero()) {
          s[c.i] = -*root;
          if (solve()) return true;
          s = saved;
        }
        return false;
      }

    const auto g = first_unknown_in_constraints();
    if (!g) return true;
    static const BaseNumber kSeeds[] = {
        BaseNumber(1),
        BaseNumber(-1),
        BaseNumber::i(),
        -BaseNumber::i(),
        BaseNumber::sqrt2(),
        -BaseNumber::sqrt2(),
        BaseNumber::i() * BaseNumber::sqrt2(),
        -(BaseNumber::i() * BaseNumber::sqrt2()),
        BaseNumber(2),
        BaseNumber(-2),
        BaseNumber(2) * BaseNumber::i(),
        BaseNumber(-2) * BaseNumber::i(),
        BaseNumber(Rational(1, 2)),
        BaseNumber(Rational(-1, 2)),
        BaseNumber(Rational(1, 2)) * BaseNumber::i(),
        BaseNumber(Rational(-1, 2)) * BaseNumber::i(),
        BaseNumber(Rational(1, 2)) * BaseNumber::sqrt2(),
        BaseNumber(Rational(-1, 2)) * BaseNumber::sqrt2(),
        BaseNumber(Rational(1, 2)) * BaseNumber::i() * BaseNumber::sqrt2(),
        BaseNumber(Rational(-1, 2)) * BaseNumber::i() * BaseNumber::sqrt2(),
    };
    const auto saved = s;
    for (const auto& seed : kSeeds) {
      s = saved;
      s[*g] = seed;
      if (solve()) return true;
    }
    s = saved;
    return false;
  }
};

}  // namespace

namespace {

/// Square root within Q(sqrt2): (p, q) with (p + q*sqrt2)^2 = c + d*sqrt2.
std::optional<std::pair<Rational, Rational>> sqrt_q_sqrt2(const Rational& c,
                                                          const Rational& d) {
  const Rational two(2);
  if (d.is_zero()) {
    if (auto p = sqrt_rational(c)) return std::make_pair(*p, Rational(0));
    if (auto q = sqrt_rational(c / two)) return std::make_pair(Rational(0), *q);
    return std::nullopt;
  }
  // With d != 0 both p and q are nonzero, q = d/(2p), and p^2 solves
  // 2 t^2 - 2 c t + d^2 = 0, so t = (c ± sqrt(c^2 - 2 d^2))/2 with a rational
  // discriminant root.
  const auto e = sqrt_rational(c * c - two * d * d);
  if (!e) return std::nullopt;
  for (const Rational& t : {(c + *e) / two, (c - *e) / two}) {
    if (auto p = sqrt_rational(t)) {
      if (p->is_zero()) continue;
      return std::make_pair(*p, d / (two * *p));
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<BaseNumber> sqrt_in_field(const BaseNumber& v) {
  if (v.is_zero()) return BaseNumber();
  // Split v = a + b*i with a, b in Q(sqrt2).
  const Rational a0 = v.coord(0), a1 = v.coord(2);
  const Rational b0 = v.coord(1), b1 = v.coord(3);
  const Rational two(2);
  if (b0.is_zero() && b1.is_zero()) {
    if (auto y = sqrt_q_sqrt2(a0, a1))
      return BaseNumber(y->first, Rational(0), y->second, Rational(0));
    if (auto z = sqrt_q_sqrt2(-a0, -a1))  // (z*i)^2 = -z^2 = a
      return BaseNumber(Rational(0), z->first, Rational(0), z->second);
    return std::nullopt;
  }
  // A root x = y + z*i with b != 0 forces y != 0 and z = b/(2y); then
  // y^2 = (a ± e)/2 where e in Q(sqrt2) satisfies e^2 = a^2 + b^2.
  const Rational s0 = a0 * a0 + two * a1 * a1 + b0 * b0 + two * b1 * b1;
  const Rational s1 = two * (a0 * a1 + b0 * b1);
  const auto e = sqrt_q_sqrt2(s0, s1);
  if (!e) return std::nullopt;
  for (int sign : {+1, -1}) {
    const Rational e0 = sign > 0 ? e->first : -e->first;
    const Rational e1 = sign > 0 ? e->second : -e->second;
    const auto y = sqrt_q_sqrt2((a0 + e0) / two, (a1 + e1) / two);
    if (!y || (y->first.is_zero() && y->second.is_zero())) continue;
    const BaseNumber yb(y->first, Rational(0), y->second, Rational(0));
    const BaseNumber bb(b0, Rational(0), b1, Rational(0));
    const BaseNumber zb = bb / (BaseNumber(2) * yb);
    const BaseNumber root(yb.coord(0), zb.coord(0), yb.coord(2), zb.coord(2));
    if (root * root == v) return root;
  }
  return std::nullopt;
}

std::vector<std::uint32_t> build_mapping_by_display(const BracketTable& a,
                                                    const BracketTable& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("tables have different sizes: " +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  std::vector<std::uint32_t> m(a.size());
  for (std::uint32_t i = 0; i < a.size(); ++i)
    m[i] = b.index_of(a.generator(i).display());
  return m;
}

CompareReport compare_tables(const BracketTable& a, const BracketTable& b,
                             const std::vector<std::uint32_t>& mapping,
                             CompareMode mode) {
  CompareReport report;
  const std::size_t n = a.size();
  if (mapping.size() != n || b.size() != n)
    throw std::invalid_argument("compare_tables requires a bijection");
  {
    std::vector<bool> hit(n, false);
    for (auto v : mapping) {
      if (v >= n || hit[v])
        throw std::invalid_argument("compare_tables mapping is not a bijection");
      hit[v] = true;
    }
  }

  auto pair_name = [&](std::uint32_t i, std::uint32_t j) {
    return "[" + a.generator(i).display() + ", " + a.generator(j).display() + "}";
  };

  if (mode == CompareMode::exact) {
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = i; j < n; ++j) {
        LinComb va = a.bracket(i, j);
        LinComb vb = b.bracket(mapping[i], mapping[j]);
        LinComb va_mapped;
        for (const auto& [g, c] : va.terms()) va_mapped.add(mapping[g], c);
        if (va_mapped != vb)
          report.mismatches.push_back(pair_name(i, j) + ": " + a.render(va) +
                                      " vs " + b.render(vb));
      }
    report.ok = report.mismatches.empty();
    return report;
  }

  // --- rescaling mode ---
  std::vector<std::uint32_t> inverse(n);
  for (std::uint32_t i = 0; i < n; ++i) inverse[mapping[i]] = i;

  std::vector<Constraint> cons;
  bool hard_mismatch = false;
  for (std::uint32_t i = 0; i < n && !hard_mismatch; ++i)
    for (std::uint32_t j = i; j < n; ++j) {
      LinComb va = a.bracket(i, j);
      LinComb vb = b.bracket(mapping[i], mapping[j]);
      // collect coefficients per target generator of `a`
      std::map<std::uint32_t, std::pair<Scalar, Scalar>> both;
      for (const auto& [g, c] : va.terms()) both[g].first = c;
      for (const auto& [g, c] : vb.terms()) both[inverse[g]].second = c;
      for (const auto& [k, cc] : both) {
        const auto& [ca, cb] = cc;
        if (ca.is_zero() != cb.is_zero()) {
          report.mismatches.push_back(pair_name(i, j) + ": component " +
                                      a.generator(k).display() +
                                      " is zero on one side only");
          hard_mismatch = true;
          continue;
        }
        if (ca.is_zero()) continue;
        auto r = ratio_of(ca, cb);
        if (!r) {
          report.mismatches.push_back(pair_name(i, j) + ": component " +
                                      a.generator(k).display() +
                                      " has a non-constant ratio");
          hard_mismatch = true;
          continue;
        }
        cons.push_back(Constraint{i, j, k, *r});
      }
      if (hard_mismatch) break;
    }
  if (hard_mismatch) {
    report.ok = false;
    return report;
  }

  Solver solver(n, cons);
  if (!solver.solve()) {
    report.ok = false;
    report.mismatches.push_back(
        "no consistent diagonal rescaling exists for the constraint system (" +
        std::to_string(cons.size()) + " constraints)");
    return report;
  }

  std::vector<BaseNumber> s(n, BaseNumber(1));
  for (std::uint32_t g = 0; g < n; ++g)
    if (solver.s[g]) s[g] = *solver.s[g];

  // exact re-verification: s_i s_j [Y,Y} must equal the s-image of [X,X}
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i; j < n; ++j) {
      LinComb va = a.bracket(i, j);
      LinComb lhs;  // phi([X_i,X_j}) over b's generators
      for (const auto& [g, c] : va.terms())
        lhs.add(mapping[g], c * Scalar(s[g]));
      LinComb rhs =
          b.bracket(mapping[i], mapping[j]).scaled(Scalar(s[i] * s[j]));
      if (lhs != rhs)
        report.mismatches.push_back(pair_name(i, j) +
                                    ": rescaled entries differ: " +
                                    b.render(lhs) + " vs " + b.render(rhs));
    }
  report.ok = report.mismatches.empty();
  if (report.ok)
    for (std::uint32_t g = 0; g < n; ++g)
      if (!s[g].is_one())
        report.scales.push_back({a.generator(g).display(), s[g].to_string()});
  return report;
}

}  // namespace liecheck
