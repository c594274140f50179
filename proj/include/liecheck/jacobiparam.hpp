#pragma once

/// Extraction of polynomial constraints on symbolic parameters from graded
/// Jacobi residuals, plus a tiny solver for the systems this produces
/// (linear elimination and univariate polynomials of degree <= 2).

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "liecheck/bracket_table.hpp"
#include "liecheck/scalar.hpp"

namespace liecheck {

/// Thrown by verify_assignment when the assignment misses a parameter that
/// occurs in the system.
struct MissingAssignment : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// One polynomial equation (== 0), tagged with the Jacobi triple and the
/// residual component that produced it.
struct Equation {
  Scalar poly;             // monic parameter polynomial, u-free
  std::string gen_i, gen_j, gen_k;  // displays of the producing triple
  std::string target;              // display of the residual component
};

/// A set of normalized, deduplicated equations extracted from one table.
struct ConstraintSystem {
  std::vector<Equation> equations;
  std::vector<Param> params;  // parameters occurring, in id order
  BracketTable source;        // the table the system was extracted from

  bool empty() const { return equations.empty(); }
};

/// Extract the constraint system of a (possibly parametric, u-free) table:
/// one equation per distinct normalized residual coefficient.  The system
/// vanishes identically iff the table satisfies the graded Jacobi identity
/// for every parameter value.
ConstraintSystem residual_system(const BracketTable& t);

/// True iff every equation evaluates to zero under the assignment.  The
/// assignment must cover all parameters of the system.
bool verify_assignment(const ConstraintSystem& s,
                       const std::map<Param, Scalar>& a);

/// One solution point: a field value for each solved parameter.
struct Assignment {
  std::map<Param, BaseNumber> values;
};

/// Result of solve_small: either the full (possibly empty) solution set over
/// Q(i,sqrt2), or Undetermined together with the reduced system that the
/// linear/quadratic rules could not finish off.
struct SolveResult {
  bool determined = false;
  std::vector<Assignment> solutions;  // valid when determined
  std::vector<Scalar> reduced;        // remaining equations otherwise
};

/// Solve by (i) eliminating parameters that occur linearly with constant
/// leading coefficient and (ii) factoring univariate polynomials of degree
/// <= 2 over Q(i,sqrt2).  Every returned solution is substituted back into
/// the source table and verified Jacobi-clean (throws std::logic_error on an
/// internal soundness failure).
SolveResult solve_small(const ConstraintSystem& s);

}  // namespace liecheck
