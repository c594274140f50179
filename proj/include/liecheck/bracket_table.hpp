#pragma once

/// Graded bracket tables: generators with Z2 parity, linear combinations with
/// symbolic Scalar coefficients, and the canonical sparse storage of all
/// brackets [g_i, g_j} with the graded antisymmetry sign handled on reads.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liecheck/linalg.hpp"
#include "liecheck/scalar.hpp"

namespace liecheck {

class unknown_generator_error : public std::runtime_error {
public:
  explicit unknown_generator_error(const std::string& what)
      : std::runtime_error(what) {}
};

class parity_violation_error : public std::runtime_error {
public:
  explicit parity_violation_error(const std::string& what)
      : std::runtime_error(what) {}
};

class singular_map_error : public std::runtime_error {
public:
  explicit singular_map_error(const std::string& what)
      : std::runtime_error(what) {}
};

enum class Parity : std::uint8_t { even = 0, odd = 1 };

struct Generator {
  std::string name;
  std::vector<int> labels;
  Parity parity = Parity::even;
  std::optional<int> weight;  // u-exponent assigned by a contraction spec

  /// "R(1,2)", "D", "Q+(1,2,1)".
  std::string display() const {
    if (labels.empty()) return name;
    std::string s = name + "(";
    for (std::size_t k = 0; k < labels.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(labels[k]);
    }
    return s + ")";
  }
};

/// Sparse linear combination of generators with Scalar coefficients,
/// kept sorted by generator id with no zero coefficients.
class LinComb {
public:
  LinComb() = default;
  static LinComb single(std::uint32_t gen, Scalar coeff = Scalar(1)) {
    LinComb l;
    l.add(gen, coeff);
    return l;
  }

  void add(std::uint32_t gen, const Scalar& coeff);
  LinComb operator-() const;
  friend LinComb operator+(const LinComb& a, const LinComb& b);
  friend LinComb operator-(const LinComb& a, const LinComb& b);
  LinComb& operator+=(const LinComb& o);
  LinComb scaled(const Scalar& s) const;
  friend bool operator==(const LinComb& a, const LinComb& b) {
    return a.t_ == b.t_;
  }
  friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

  bool is_zero() const { return t_.empty(); }
  const std::vector<std::pair<std::uint32_t, Scalar>>& terms() const { return t_; }

  /// Map each coefficient through a function (e.g. substitution).
  template <typename F>
  LinComb map_coeffs(F f) const {
    LinComb out;
    for (const auto& [g, c] : t_) out.add(g, f(c));
    return out;
  }

private:
  std::vector<std::pair<std::uint32_t, Scalar>> t_;
};

class BracketTable {
public:
  explicit BracketTable(std::string family = "") : family_(std::move(family)) {}

  const std::string& family() const { return family_; }
  void set_family(std::string f) { family_ = std::move(f); }

  std::uint32_t add_generator(Generator g);
  std::size_t size() const { return gens_.size(); }
  const Generator& generator(std::uint32_t i) const { return gens_.at(i); }
  Generator& generator_mut(std::uint32_t i) { return gens_.at(i); }
  const std::vector<Generator>& generators() const { return gens_; }

  /// Index of the generator with this display string; throws
  /// unknown_generator_error when absent.
  std::uint32_t index_of(const std::string& display) const;
  std::optional<std::uint32_t> find_index(const std::string& display) const;
  bool is_odd(std::uint32_t i) const { return gens_.at(i).parity == Parity::odd; }

  /// Overwrite [g_i, g_j} (canonicalized to i<=j with the graded sign).
  void set_bracket(std::uint32_t i, std::uint32_t j, LinComb value);
  /// Accumulate coeff * g_k into [g_i, g_j}.
  void add_term(std::uint32_t i, std::uint32_t j, std::uint32_t k,
                const Scalar& coeff);

  /// [g_i, g_j} with the graded antisymmetry sign applied as needed.
  LinComb bracket(std::uint32_t i, std::uint32_t j) const;
  /// Bilinear extension to linear combinations.
  LinComb bracket(const LinComb& a, const LinComb& b) const;

  /// Canonical stored entries (i<=j), sorted by (i,j); zero values pruned by
  /// finalize().
  const std::map<std::uint64_t, LinComb>& entries() const { return entries_; }
  static std::uint32_t key_i(std::uint64_t key) {
    return static_cast<std::uint32_t>(key >> 32);
  }
  static std::uint32_t key_j(std::uint64_t key) {
    return static_cast<std::uint32_t>(key & 0xffffffffu);
  }

  /// Prunes zero entries and validates: even diagonals vanish, all referenced
  /// generator ids exist.
  void finalize();

  /// Substitute parameter values in every entry.
  BracketTable substituted(const std::map<Param, Scalar>& values) const;

  std::string render(const LinComb& l) const;

private:
  static std::uint64_t key(std::uint32_t i, std::uint32_t j) {
    return (static_cast<std::uint64_t>(i) << 32) | j;
  }

  std::string family_;
  std::vector<Generator> gens_;
  std::map<std::string, std::uint32_t> index_;
  std::map<std::uint64_t, LinComb> entries_;
};

/// Antilinear star structure: generator -> linear combination.
struct StarStructure {
  std::vector<LinComb> image;  // indexed by generator id

  /// Antilinear extension to a linear combination.
  LinComb apply(const LinComb& l) const {
    LinComb out;
    for (const auto& [g, c] : l.terms())
      out += image.at(g).scaled(c.conjugate());
    return out;
  }
};

/// Change of basis.  old_in_new[i] expresses old generator i in the new
/// generators; coefficients must be parameter- and u-free.  Throws
/// singular_map_error / parity_violation_error.
struct ChangeBasisResult {
  BracketTable table;
  BMat old_to_new;  // row i: coordinates of old_i over new basis
  BMat new_to_old;  // row a: coordinates of new_a over old basis
};
ChangeBasisResult change_basis(const BracketTable& t,
                               const std::vector<Generator>& new_gens,
                               const std::vector<LinComb>& old_in_new);

/// Transport a star structure through a change of basis.
StarStructure change_basis_star(const StarStructure& star,
                                const ChangeBasisResult& cb);

/// Disjoint union; generator names get the given suffixes, cross brackets 0.
BracketTable direct_sum(const BracketTable& a, const BracketTable& b,
                        const std::string& suffix_a, const std::string& suffix_b);

/// Restriction to a subset of generators (must be bracket-closed; throws
/// std::invalid_argument otherwise).
BracketTable subtable(const BracketTable& t, const std::vector<std::uint32_t>& keep);

/// Rename generator identities (display-string keyed).
BracketTable rename_generators(
    const BracketTable& t,
    const std::map<std::string, Generator>& new_identity);

}  // namespace liecheck
