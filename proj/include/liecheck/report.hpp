#pragma once

/// Rendering of case results: a human-readable text report with real timings,
/// and a deterministic JSON report whose bytes are stable across runs.

#include <stdexcept>
#include <string>
#include <vector>

#include "liecheck/cases.hpp"

namespace liecheck {

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Multi-line human-readable rendering, one block per case plus a summary
/// line.  Timings are the measured values.
std::string render_text(const std::vector<CaseResult>& results);

/// JSON array sorted by case id.  Every field is deterministic; millis is
/// pinned to 0 so that repeated runs are byte-identical.
std::string render_json(std::vector<CaseResult> results);

/// Writes content to path, throwing IoFailure when the file cannot be
/// created or fully written.
void write_file(const std::string& path, const std::string& content);

}  // namespace liecheck
