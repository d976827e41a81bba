#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "profab/semilinear.hpp"
#include "profab/terms.hpp"
#include "profab/word_problem.hpp"

namespace profab {

struct Equation {
  SigmaTerm lhs;
  SigmaTerm rhs;
};

/// σ-term equations over `variables` with one semilinear constraint (over the
/// alphabet) per variable.
struct EquationSystem {
  std::vector<std::string> alphabet;
  std::vector<std::string> variables;
  std::vector<Equation> equations;
  std::vector<SemilinearSet> constraints;  ///< indexed like variables

  /// Throws InputError unless names are distinct, every variable has a
  /// constraint and the constraint dimensions match the alphabet.
  void validate() const;
};

/// `lhs = rhs` with terms over the given variables.
Equation parse_equation(std::string_view text, std::span<const std::string> variables);

struct SystemDocument {
  Supernatural pi;
  EquationSystem system;
};

/// JSON object with fields `pi`, `alphabet`, `variables`, `equations`
/// (strings `lhs = rhs`) and `constraints` (variable → semilinear string).
SystemDocument parse_system_document(std::string_view json_text);

/// Solution of a system modulo Ab_π, given by the commutative images.
struct Witness {
  std::vector<std::vector<Pseudonumber>> images;        ///< per variable, per letter
  std::vector<std::size_t> branches;                    ///< chosen constraint branch
  std::vector<std::vector<Pseudonumber>> coefficients;  ///< period coefficients y_xj
};

struct Refutation {
  std::vector<std::size_t> branches;
  Integer modulus;  ///< Z/modulus has no solution for this branch choice
};

struct ReductionResult {
  std::optional<Witness> witness;
  /// Branch combinations ruled out, in lexicographic order; on success only
  /// those preceding the witnessing combination.
  std::vector<Refutation> refutations;
  std::size_t systems_attempted = 0;

  explicit operator bool() const { return witness.has_value(); }
  /// lcm of the refuting moduli: no branch combination is solvable there.
  Integer combined_modulus() const;
};

enum class Execution { serial, parallel };

/// Tries every combination of constraint branches; for each one substitutes
/// x = a_x + Σ_j a_xj·y_xj, abelianizes the equations and solves the linear
/// system over Z_π^σ. The witness for the least solvable combination (in
/// lexicographic order) is verified before it is returned.
ReductionResult decide_and_witness(const Supernatural& pi, const EquationSystem& sys,
                                   Execution execution = Execution::parallel);

/// Equal iff every equation holds under w in Ab_π and each image lies in the
/// closure of its constraint.
Verdict verify_witness(const Supernatural& pi, const EquationSystem& sys, const Witness& w);

}  // namespace profab
