#pragma once

/// Exact and rescaling-tolerant comparison of two bracket tables under a
/// generator bijection.
///
/// In rescaling mode the checker looks for nonzero field constants s_x (one
/// per generator) such that X -> s_x * Y_{m(x)} is an isomorphism; the induced
/// multiplicative constraints s_i s_j = r_{ijk} s_k are solved by propagation
/// with a small seed search per connected component, then every pair is
/// re-verified exactly.

#include <optional>
#include <string>
#include <vector>

#include "liecheck/bracket_table.hpp"

namespace liecheck {

enum class CompareMode { exact, up_to_diagonal_rescaling };

struct CompareReport {
  bool ok = false;
  std::vector<std::string> mismatches;
  /// display -> scale (rescaling mode only; identity scales omitted)
  std::vector<std::pair<std::string, std::string>> scales;
};

/// mapping[i] = index in `b` of the generator matching a's generator i; must
/// be a bijection.
CompareReport compare_tables(const BracketTable& a, const BracketTable& b,
                             const std::vector<std::uint32_t>& mapping,
                             CompareMode mode);

/// Build the display-string bijection a -> b; throws unknown_generator_error
/// when a generator of `a` has no counterpart, std::invalid_argument when
/// sizes differ.
std::vector<std::uint32_t> build_mapping_by_display(const BracketTable& a,
                                                    const BracketTable& b);

/// Complete square root within Q(i, sqrt2): returns one of the two roots of
/// v when v is a square in the field (solved on the tower Q, Q(sqrt2),
/// Q(sqrt2, i)), nullopt otherwise.
std::optional<BaseNumber> sqrt_in_field(const BaseNumber& v);

}  // namespace liecheck
