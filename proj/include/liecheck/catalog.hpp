#pragma once

/// Builders for the algebra families shipped with the tool: Galilean
/// conformal algebras gca(d), the one-parameter superconformal family with
/// graded-Abelian extension, orthosymplectic families, the extended
/// su(1,1|1)+u(1) model, su(2,2|2N) with its Weyl/holomorphic basis, the
/// expected d=3 super-Galilean tables, and coset dimension bookkeeping.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "liecheck/bracket_table.hpp"
#include "liecheck/table_checks.hpp"

namespace liecheck {

/// Thrown by builders that only support specific internal ranks.
struct UnsupportedN : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct AlgebraModel {
  BracketTable table;
  std::optional<StarStructure> star;
  std::optional<SplitSpec> split;  // plus/minus split, when declared
  SplitMode split_mode = SplitMode::abelian_minus;
};

/// Galilean conformal algebra gca(d), d in 1..5: generators R(r) (r=0,1,2),
/// rotations J(i,j) (1<=i<j<=d) and the Abelian ideal A(r,i).
AlgebraModel build_gca(int d);

/// Options for the extended one-parameter superconformal family (d=3 internal
/// structure): parameters default to the symbolic alpha/beta/gamma.
struct D21Options {
  Scalar alpha;
  Scalar beta;
  Scalar gamma;
  bool include_extension = true;
  /// Interchange the roles of the two internal su(2) factors (the extension
  /// tensor then carries internal indices instead of spinor indices).
  bool swap_su2 = false;
  D21Options();
};
AlgebraModel build_d21_extended(const D21Options& opt = D21Options());

/// osp(N|2), N = 0..3: R(a,b), rotations J(i,j), supercharges Q(a,i).
AlgebraModel build_osp_n2(int n);

/// osp(1|2) with graded-Abelian extension (Q-(a), A(a,b)); beta may be
/// symbolic.
AlgebraModel build_osp12_extended(const Scalar& beta);

/// su(1,1|1) + u(1) with graded-Abelian extension; beta/gamma may be symbolic.
AlgebraModel build_su111_extended(const Scalar& beta, const Scalar& gamma);

/// su(2,2|2N), n = 1 or 2, in the standard conformal basis
/// {P,K,M,D,A,T; Q,Qb,S,Sb}.  The boson-boson sector is derived from the
/// boson-fermion and fermion-fermion entries by resolving each boson as a
/// fermion bilinear and applying the graded Leibniz rule.
AlgebraModel build_su22_2n(int n);

/// su(2,2|2N) mapped to the holomorphic (Weyl) basis with the internal sector
/// split into T+ / T- and bosons renamed to their Galilean-limit identities
/// (H, K, D, J(i,j), P(i), B(i), F(i), A0).
struct WeylModel {
  AlgebraModel model;
  std::vector<std::string> tplus;   // displays of the T+ basis generators
  std::vector<std::string> tminus;  // displays of the T- basis generators
};
WeylModel build_weyl_model(int n);

/// Expected d=3 super-Galilean conformal tables (n = 1 or 2), built
/// independently of the contraction engine: fermionic blocks transcribed from
/// the reference tables, internal sector from su(2N) matrix brackets in the
/// pivot T+/T- basis, bosonic sector = build_gca(3) mapped through the inverse
/// generator dictionary.
WeylModel build_expected_gca3_susy(int n);

/// Change-of-basis data: each generator of `source` expressed over the
/// generators of `target` (inputs to change_basis).
struct Dictionary {
  std::vector<Generator> new_gens;
  std::vector<LinComb> old_in_new;
};

/// Dictionary mapping the extended one-parameter family at the solved
/// parameter point onto the n=1 d=3 super-Galilean basis (correct up to
/// diagonal rescaling).
Dictionary build_n1_dictionary(const BracketTable& d21ext,
                               const BracketTable& gca3_susy_n1);

/// Dictionary mapping the contracted conformal bosons {P(mu), K(mu), M(mu,nu),
/// D} onto the gca(3) basis {R(r), J(i,j), A(r,i)} (exact).
Dictionary build_o42_dictionary(const BracketTable& contracted_bosons,
                                const BracketTable& gca3);

/// Coset dimension bookkeeping for the d=2, d=4 and d=5 constructions;
/// each item pairs a computed dimension with its reference value.
struct CosetDimItem {
  std::string label;
  long long computed;
  long long reference;
};
std::vector<CosetDimItem> coset_dim_report(int d, int n);

}  // namespace liecheck
