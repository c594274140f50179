#pragma once

/// Structural checks on bracket tables: the graded Jacobi identity over all
/// generator triples, split (plus/minus) closure properties, star-structure
/// compatibility, and dimension counting.

#include <cstdint>
#include <string>
#include <vector>

#include "liecheck/bracket_table.hpp"

namespace liecheck {

struct JacobiViolation {
  std::uint32_t i, j, k;
  LinComb residual;
};

struct JacobiReport {
  std::vector<JacobiViolation> items;
  std::size_t triples = 0;
  bool clean() const { return items.empty(); }
};

/// Graded Jacobi residual
///   (-1)^{p_a p_c}[a,[b,c}} + (-1)^{p_b p_a}[b,[c,a}} + (-1)^{p_c p_b}[c,[a,b}}
/// for each triple i<=j<=k (repetition allowed).  jobs > 1 splits the triple
/// range across threads; the report is deterministic either way.
JacobiReport check_graded_jacobi(const BracketTable& t, int jobs = 1);

/// Single-triple residual (exposed for the parametric constraint extractor).
LinComb jacobi_residual(const BracketTable& t, std::uint32_t i, std::uint32_t j,
                        std::uint32_t k);

enum class SplitMode {
  /// [P,P} in P, [P,M} in M, [M,M} in P.
  symmetric_pair,
  /// [P,P} in P, [P,M} in M, [M,M} = 0.
  abelian_minus,
};

struct SplitSpec {
  std::vector<std::uint8_t> side;  // 0 = plus, 1 = minus, per generator id
};

struct SplitViolation {
  std::uint32_t i, j;
  std::string detail;
};

struct SplitReport {
  std::vector<SplitViolation> items;
  bool clean() const { return items.empty(); }
};

SplitReport check_split_structure(const BracketTable& t, const SplitSpec& split,
                                  SplitMode mode);

struct StarViolation {
  std::uint32_t i, j;  // j == i for involution failures
  std::string detail;
};

struct StarReport {
  std::vector<StarViolation> items;
  bool involution_ok = true;
  bool clean() const { return involution_ok && items.empty(); }
};

/// Verifies star(star(g)) = g and the bracket axiom
///   star([X,Y}) = -(-1)^{p_X p_Y} [star X, star Y}
/// over all generator pairs.
StarReport check_star_compatibility(const BracketTable& t,
                                    const StarStructure& star);

struct DimensionReport {
  std::size_t even = 0;
  std::size_t odd = 0;
  std::vector<std::pair<std::string, std::size_t>> by_name;  // name -> count
};

DimensionReport dimension_report(const BracketTable& t);

}  // namespace liecheck
