#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "catalog_util.hpp"
#include "liecheck/catalog.hpp"
#include "liecheck/spinorkit.hpp"

namespace liecheck {

// Map su(2,2|2n) to the holomorphic Weyl basis: fermions are recombined into
// the chiral pairs Q+/Q-, S+/S- with 1/sqrt(2) weights, the internal sector
// is split into the T+/T- pivot basis, and the bosons are renamed to the
// identities they acquire in the Galilean limit (H, K, D, J, P, B, F, A0).
WeylModel build_weyl_model(int n) {
  AlgebraModel su = build_su22_2n(n);
  const BracketTable& t = su.table;
  const int m = 2 * n;
  detail::TSplit ts(n);
  OmegaMetric omega(n);
  using detail::gen;

  WeylModel out;
  std::vector<Generator> ng;
  ng.push_back(gen("H", {}, Parity::even));
  ng.push_back(gen("K", {}, Parity::even));
  ng.push_back(gen("D", {}, Parity::even));
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j)
      ng.push_back(gen("J", {i, j}, Parity::even));
  for (int i = 1; i <= 3; ++i) ng.push_back(gen("P", {i}, Parity::even));
  for (int i = 1; i <= 3; ++i) ng.push_back(gen("B", {i}, Parity::even));
  for (int i = 1; i <= 3; ++i) ng.push_back(gen("F", {i}, Parity::even));
  ng.push_back(gen("A0", {}, Parity::even));
  for (const auto& [a, b] : ts.plus_labels) {
    ng.push_back(gen("T+", {a, b}, Parity::even));
    out.tplus.push_back(ng.back().display());
  }
  for (const auto& [a, b] : ts.minus_labels) {
    ng.push_back(gen("T-", {a, b}, Parity::even));
    out.tminus.push_back(ng.back().display());
  }
  for (const char* f : {"Q+", "Q-", "S+", "S-"})
    for (int al = 1; al <= 2; ++al)
      for (int A = 1; A <= m; ++A)
        ng.push_back(gen(f, {al, A}, Parity::odd));

  auto nidx = [&](const std::string& d) -> std::uint32_t {
    for (std::uint32_t k = 0; k < ng.size(); ++k)
      if (ng[k].display() == d) return k;
    throw std::logic_error("build_weyl_model: missing new generator " + d);
  };
  auto lbl2 = [](const char* f, int a, int b) {
    return std::string(f) + "(" + std::to_string(a) + "," + std::to_string(b) +
           ")";
  };
  auto lbl1 = [](const char* f, int a) {
    return std::string(f) + "(" + std::to_string(a) + ")";
  };

  std::vector<LinComb> oin(t.size());
  auto set1 = [&](const std::string& old_d, const std::string& new_d,
                  Scalar c = Scalar(1)) {
    oin[t.index_of(old_d)] = LinComb::single(nidx(new_d), c);
  };
  set1("P(0)", "H");
  set1("K(0)", "K");
  set1("D", "D");
  set1("A", "A0");
  for (int i = 1; i <= 3; ++i) {
    set1(lbl1("P", i), lbl1("P", i));
    set1(lbl1("K", i), lbl1("F", i));
    set1(lbl2("M", 0, i), lbl1("B", i), Scalar(-1));
    for (int j = i + 1; j <= 3; ++j) set1(lbl2("M", i, j), lbl2("J", i, j));
  }
  // Internal sector: expand each traceless unit over the T+/T- pivots.
  for (int s = 0; s < ts.coords.dim(); ++s) {
    auto [a, b] = ts.coords.labels(s);
    BVec e(static_cast<std::size_t>(ts.coords.dim()), BaseNumber());
    e[static_cast<std::size_t>(s)] = BaseNumber(1);
    BVec co = ts.expand(e);
    LinComb l;
    for (int k = 0; k < ts.nplus(); ++k)
      if (!co[static_cast<std::size_t>(k)].is_zero())
        l = l + LinComb::single(
                    nidx(lbl2("T+", ts.plus_labels[static_cast<std::size_t>(k)]
                                        .first,
                              ts.plus_labels[static_cast<std::size_t>(k)]
                                  .second)),
                    Scalar(co[static_cast<std::size_t>(k)]));
    for (int k = 0; k < ts.nminus(); ++k) {
      const auto& c = co[static_cast<std::size_t>(ts.nplus() + k)];
      if (!c.is_zero())
        l = l + LinComb::single(
                    nidx(lbl2("T-",
                              ts.minus_labels[static_cast<std::size_t>(k)].first,
                              ts.minus_labels[static_cast<std::size_t>(k)]
                                  .second)),
                    Scalar(c));
    }
    oin[t.index_of(lbl2("T", a, b))] = l;
  }
  // Fermions: Q = (Q+ + Q-)/sqrt2, S = (S+ + S-)/sqrt2, and the conjugates
  // carry the symplectic/spinor metrics:
  //   Qb(g,C) = -(1/sqrt2) sum Omega_{CA} eps^{g a} (Q+ - Q-)(a,A)
  //   Sb(g,C) = +(1/sqrt2) sum Omega^{CA} eps^{g a} (S+ - S-)(a,A)
  const Scalar inv_rt2 = Scalar(Rational(1, 2)) * Scalar::sqrt2();
  for (int al = 1; al <= 2; ++al)
    for (int A = 1; A <= m; ++A) {
      oin[t.index_of(lbl2("Q", al, A))] =
          LinComb::single(nidx(lbl2("Q+", al, A)), inv_rt2) +
          LinComb::single(nidx(lbl2("Q-", al, A)), inv_rt2);
      oin[t.index_of(lbl2("S", al, A))] =
          LinComb::single(nidx(lbl2("S+", al, A)), inv_rt2) +
          LinComb::single(nidx(lbl2("S-", al, A)), inv_rt2);
      LinComb qb, sb;
      for (int be = 1; be <= 2; ++be)
        for (int B = 1; B <= m; ++B) {
          const Rational w = omega.lo(A, B) * eps_up(al, be);
          if (w.is_zero()) continue;
          qb = qb +
               LinComb::single(nidx(lbl2("Q+", be, B)),
                               Scalar(Rational(0) - w) * inv_rt2) +
               LinComb::single(nidx(lbl2("Q-", be, B)), Scalar(w) * inv_rt2);
          sb = sb +
               LinComb::single(nidx(lbl2("S+", be, B)), Scalar(w) * inv_rt2) +
               LinComb::single(nidx(lbl2("S-", be, B)),
                               Scalar(Rational(0) - w) * inv_rt2);
        }
      oin[t.index_of(lbl2("Qb", al, A))] = qb;
      oin[t.index_of(lbl2("Sb", al, A))] = sb;
    }

  ChangeBasisResult cb = change_basis(t, ng, oin);
  StarStructure star = change_basis_star(*su.star, cb);

  // Galilean-limit grading: "plus" generators survive at weight 0, "minus"
  // ones at weight -2 under the composed rescaling.
  SplitSpec split;
  split.side.resize(ng.size(), 0);
  for (std::uint32_t k = 0; k < ng.size(); ++k) {
    const std::string& name = ng[k].name;
    if (name == "P" || name == "B" || name == "F" || name == "A0" ||
        name == "T-" || name == "Q-" || name == "S-")
      split.side[k] = 1;
  }

  out.model.table = std::move(cb.table);
  out.model.star = std::move(star);
  out.model.split = std::move(split);
  out.model.split_mode = SplitMode::symmetric_pair;
  return out;
}

}  // namespace liecheck
