#pragma once

/// Registered verification cases: each case builds one table (or pipeline),
/// runs its structural checks and returns a deterministic result record.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "liecheck/bracket_table.hpp"

namespace liecheck {

/// Thrown by run_case / case_table for an unregistered id.
struct UnknownCase : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown for an override key a case does not accept, or an unparsable value.
struct InvalidOverride : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// One named sub-check with its verdict and a single-line explanation.
struct CheckLine {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// A recorded disagreement (or absence of a comparison point) between the
/// computed value and the transcribed reference value.
struct Deviation {
  std::string computed;
  std::string paper_value;
  std::string citation;
};

enum class CaseStatus { pass, deviation, fail };

std::string to_string(CaseStatus s);

/// Result of one case run.  status == pass iff every check succeeded and no
/// deviation was recorded; a failed check forces fail; otherwise deviation.
struct CaseResult {
  std::string id;
  CaseStatus status = CaseStatus::fail;
  std::vector<CheckLine> checks;
  std::vector<Deviation> deviations;
  long long millis = 0;
};

struct CaseInfo {
  std::string id;
  std::string summary;
};

/// The registry in its stable (lexicographic) order.
std::vector<CaseInfo> list_cases();

/// Run one registered case.  Overrides pin case parameters before the run:
/// the parametric families accept their parameter names with rational values
/// ("2", "-1/3"); the coset bookkeeping cases accept "n" (1..9).  Any other
/// key, or a malformed value, throws InvalidOverride.  jobs > 1 parallelizes
/// the per-triple Jacobi evaluation; the result is identical either way.
CaseResult run_case(const std::string& id,
                    const std::map<std::string, std::string>& overrides = {},
                    int jobs = 1);

/// The table a case is about, for serialization: builders and golden tables
/// as constructed, parametric families with their symbolic (or overridden)
/// parameters, contraction cases after the limit.  The dimension-bookkeeping
/// cases have no table and return nullopt.
std::optional<BracketTable> case_table(
    const std::string& id,
    const std::map<std::string, std::string>& overrides = {});

}  // namespace liecheck
