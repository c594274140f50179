#pragma once

/// Contraction engine: assign per-generator weights, rescale structure
/// constants by Laurent powers of the half-step unit u (u^2 = the contraction
/// variable), take the limit u -> infinity, and run the named pipelines.
///
/// Weight convention: NEW = var^{w} OLD with w in var-units; specs store w as
/// integers in u-units (twice the var-exponent), so the constant of a bracket
/// (a,b) -> g picks up u^{w_a + w_b - w_g}.  In the limit, positive u-powers
/// diverge (the outcome is flagged invalid with an offender list), u^0 terms
/// survive, and negative powers vanish (logged per bracket).

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "liecheck/bracket_table.hpp"
#include "liecheck/table_checks.hpp"
#include "liecheck/table_compare.hpp"

namespace liecheck {

/// Thrown by rescale_table when a generator has no assigned weight.
struct MissingWeight : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown by the pipeline registry for unrecognized names.
struct UnknownPipeline : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Weight assignment for one contraction, keyed by generator display string.
struct ContractionSpec {
  std::map<std::string, int> weight_u;  // in u-units (u^2 = variable)
  std::string variable = "c";
  std::string label;

  /// The inverse rescaling (all weights flipped).
  ContractionSpec negated() const {
    ContractionSpec s = *this;
    for (auto& [k, w] : s.weight_u) w = -w;
    s.label = label + "-inverse";
    return s;
  }
};

/// One structure-constant part removed (negative power) or diverging
/// (positive power) in the limit.
struct TermRecord {
  std::string gen_a, gen_b;  // bracket pair displays
  std::string target;        // target generator display
  int upow = 0;              // dominant u-exponent of the affected part
};

struct ContractionOutcome {
  BracketTable table;                // u-free limit table
  std::vector<TermRecord> dropped;   // vanished parts (upow < 0)
  std::vector<TermRecord> offenders; // divergent parts (upow > 0)
  bool valid = true;                 // no offender appeared
};

/// Multiply each bracket constant by u^{w_a + w_b - w_g} and stamp the
/// weights onto the generators.  Throws MissingWeight when the spec is not
/// total on the table's generators.
BracketTable rescale_table(const BracketTable& t, const ContractionSpec& spec);

/// Take the limit of a u-parametric table.  Invalidity (a positive u-power)
/// is reported in the outcome, never thrown.
ContractionOutcome contract_limit(const BracketTable& t_param);

/// Registered pipeline names: physical-n1, physical-n2, composed-n1,
/// composed-n2, d1-diagonal, bosonic-o42.  Throws UnknownPipeline otherwise.
ContractionSpec assign_weights(const std::string& name);

/// A remark attached to a pipeline run; kind is "info" or "deviation".
/// Deviations carry the computed value next to the documented reference
/// value they disagree with.
struct PipelineNote {
  std::string kind;
  std::string computed;
  std::string reference;
};

/// Outcome of one named pipeline together with its structure reports.
struct PipelineRun {
  std::string name;
  ContractionSpec spec;
  ContractionOutcome outcome;
  JacobiReport jacobi;                    // on the limit table
  std::optional<SplitReport> split_pre;   // declared split, before the limit
  std::optional<SplitReport> split_post;  // same split on the limit table
  std::optional<CompareReport> compare;   // diff against the expected table
  std::vector<PipelineNote> notes;

  bool ok() const {
    return outcome.valid && jacobi.clean() &&
           (!split_pre || split_pre->clean()) &&
           (!split_post || split_post->clean()) && (!compare || compare->ok);
  }
};

/// Build the named pipeline's source algebra, rescale, take the limit and
/// attach Jacobi / split / comparison reports.  Throws UnknownPipeline.
PipelineRun run_named_contraction(const std::string& name, int jobs = 1);

/// All registered pipeline names, in registry order.
std::vector<std::string> pipeline_names();

}  // namespace liecheck
