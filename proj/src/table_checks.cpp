#include "liecheck/table_checks.hpp"

#include <algorithm>
#include <thread>

namespace liecheck {

LinComb jacobi_residual(const BracketTable& t, std::uint32_t i, std::uint32_t j,
                        std::uint32_t k) {
  const bool pi = t.is_odd(i), pj = t.is_odd(j), pk = t.is_odd(k);
  LinComb a = LinComb::single(i), b = LinComb::single(j), c = LinComb::single(k);

  LinComb r = t.bracket(a, t.bracket(j, k));
  if (pi && pk) r = -r;  // (-1)^{p_i p_k}, applied as an overall sign below
  LinComb r1 = t.bracket(b, t.bracket(k, i));
  if (pj && pi) r1 = -r1;
  LinComb r2 = t.bracket(c, t.bracket(i, j));
  if (pk && pj) r2 = -r2;

  // Signs above already folded in: residual = s1*[i,[j,k}} + s2*[j,[k,i}} +
  // s3*[k,[i,j}} with s1=(-1)^{pi pk}, s2=(-1)^{pj pi}, s3=(-1)^{pk pj}.
  return r + r1 + r2;
}

namespace {

struct TripleRange {
  std::size_t begin, end;  // flat triple indices
};

// Enumerate triples i<=j<=k of 0..n-1 in lexicographic order; total count is
// C(n+2,3).
std::size_t triple_count(std::size_t n) { return n * (n + 1) * (n + 2) / 6; }

void unflatten(std::size_t n, std::size_t flat, std::uint32_t& i,
               std::uint32_t& j, std::uint32_t& k) {
  // Walk i, then j; cheap enough for the sizes at hand.
  std::size_t rem = flat;
  for (std::uint32_t a = 0; a < n; ++a) {
    std::size_t m = n - a;                  // choices with i == a
    std::size_t block = m * (m + 1) / 2;    // pairs a<=j<=k
    if (rem < block) {
      i = a;
      for (std::uint32_t b = a; b < n; ++b) {
        std::size_t row = n - b;
        if (rem < row) {
          j = b;
          k = b + static_cast<std::uint32_t>(rem);
          return;
        }
        rem -= row;
      }
    }
    rem -= block;
  }
  throw std::logic_error("triple index out of range");
}

}  // namespace

JacobiReport check_graded_jacobi(const BracketTable& t, int jobs) {
  const std::size_t n = t.size();
  const std::size_t total = triple_count(n);
  JacobiReport report;
  report.triples = total;
  if (total == 0) return report;
  if (jobs < 1) jobs = 1;
  const std::size_t chunks = std::min<std::size_t>(static_cast<std::size_t>(jobs), total);

  std::vector<std::vector<JacobiViolation>> found(chunks);
  auto work = [&](std::size_t c) {
    std::size_t lo = total * c / chunks;
    std::size_t hi = total * (c + 1) / chunks;
    if (lo >= hi) return;
    std::uint32_t i, j, k;
    unflatten(n, lo, i, j, k);
    for (std::size_t flat = lo; flat < hi; ++flat) {
      LinComb r = jacobi_residual(t, i, j, k);
      if (!r.is_zero()) found[c].push_back(JacobiViolation{i, j, k, std::move(r)});
      // advance (i,j,k) lexicographically
      if (k + 1 < n) {
        ++k;
      } else if (j + 1 < n) {
        ++j;
        k = j;
      } else {
        ++i;
        j = k = i;
      }
    }
  };

  if (chunks == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) threads.emplace_back(work, c);
    for (auto& th : threads) th.join();
  }
  for (auto& v : found)
    for (auto& item : v) report.items.push_back(std::move(item));
  return report;
}

SplitReport check_split_structure(const BracketTable& t, const SplitSpec& split,
                                  SplitMode mode) {
  SplitReport report;
  const std::size_t n = t.size();
  if (split.side.size() != n)
    throw std::invalid_argument("split spec size mismatch");
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i; j < n; ++j) {
      LinComb v = t.bracket(i, j);
      if (v.is_zero()) continue;
      int si = split.side[i], sj = split.side[j];
      if (si == 1 && sj == 1 && mode == SplitMode::abelian_minus) {
        report.items.push_back(
            SplitViolation{i, j, "minus-minus bracket is nonzero: " + t.render(v)});
        continue;
      }
      int want = (si + sj) % 2;  // plus=0, minus=1 under the pair grading
      for (const auto& [g, c] : v.terms()) {
        (void)c;
        if (split.side[g] != want) {
          report.items.push_back(SplitViolation{
              i, j,
              "component " + t.generator(g).display() + " lands on the wrong side"});
          break;
        }
      }
    }
  }
  return report;
}

StarReport check_star_compatibility(const BracketTable& t,
                                    const StarStructure& star) {
  StarReport report;
  const std::size_t n = t.size();
  if (star.image.size() != n)
    throw std::invalid_argument("star structure size mismatch");

  for (std::uint32_t i = 0; i < n; ++i) {
    LinComb twice = star.apply(star.image[i]);
    if (twice != LinComb::single(i)) {
      report.involution_ok = false;
      report.items.push_back(
          StarViolation{i, i, "star is not an involution on " +
                                t.generator(i).display() + ": " + t.render(twice)});
    }
    // star must preserve parity
    for (const auto& [g, c] : star.image[i].terms()) {
      (void)c;
      if (t.is_odd(g) != t.is_odd(i)) {
        report.involution_ok = false;
        report.items.push_back(StarViolation{
            i, i, "star image of " + t.generator(i).display() + " mixes parity"});
        break;
      }
    }
  }

  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i; j < n; ++j) {
      LinComb lhs = star.apply(t.bracket(i, j));
      LinComb rhs = t.bracket(star.image[i], star.image[j]);
      if (!(t.is_odd(i) && t.is_odd(j))) rhs = -rhs;
      // star([X,Y}) = -(-1)^{p_X p_Y}[star X, star Y}
      if (lhs != rhs)
        report.items.push_back(StarViolation{
            i, j,
            "[" + t.generator(i).display() + ", " + t.generator(j).display() +
                "}: star image " + t.render(lhs) + " vs " + t.render(rhs)});
    }
  }
  return report;
}

DimensionReport dimension_report(const BracketTable& t) {
  DimensionReport report;
  std::map<std::string, std::size_t> counts;
  for (const auto& g : t.generators()) {
    if (g.parity == Parity::odd)
      ++report.odd;
    else
      ++report.even;
    ++counts[g.name];
  }
  report.by_name.assign(counts.begin(), counts.end());
  return report;
}

}  // namespace liecheck
