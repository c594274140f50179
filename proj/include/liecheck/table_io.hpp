#pragma once

/// Deterministic line-oriented text serialization of a bracket table
/// (generators first, then all canonical nonzero entries).  Golden files are
/// compared byte-for-byte against this output.

#include <string>

#include "liecheck/bracket_table.hpp"

namespace liecheck {

std::string serialize_table(const BracketTable& t);

}  // namespace liecheck
