#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "profab/intlinalg.hpp"
#include "profab/reducibility.hpp"

namespace profab::oracle {

/// Largest quotient the exhaustive searches accept.
inline constexpr std::uint64_t max_modulus = 50;
inline constexpr std::size_t max_variables = 3;
inline constexpr std::uint64_t max_assignments = 2'000'000;

/// u in Z/n, computing each n_j^(ω-k) as the element at position ≡ -k of the
/// cycle of powers of n_j in the multiplicative monoid Z/n. Needs n ≤ 10^7.
Integer pseudonumber_mod(const Pseudonumber& u, const Integer& n);

/// Value of t in the group (Z/n, +) with the given residues for the variables,
/// evaluating x^(ω-1) as -x and x^(p^(ω-1)) through powers of p in Z/ord(x).
Integer eval_term_mod(const SigmaTerm& t, std::span<const Integer> assignment, const Integer& n,
                      const Supernatural& pi);

/// Per variable, one residue vector indexed by the alphabet.
using Assignment = std::vector<std::vector<Integer>>;

/// Residue vectors of base + span(periods) modulo n, for all branches, sorted.
std::vector<std::vector<Integer>> constraint_image(const SemilinearSet& s, std::uint64_t n);

/// Searches all assignments from the constraint images mod n for one that
/// satisfies every equation in (Z/n)^alphabet. Returns the first one in
/// enumeration order; the parallel and serial versions agree.
std::optional<Assignment> search_quotient(const EquationSystem& sys, const Integer& n,
                                          const Supernatural& pi);
std::optional<Assignment> search_quotient_serial(const EquationSystem& sys, const Integer& n,
                                                 const Supernatural& pi);

/// Exhaustive solvability of B·x ≡ c over (Z/n)^cols (n^cols ≤ max_assignments).
bool congruences_solvable(const IntMatrix& b, std::span<const Integer> c, const Integer& n);

}  // namespace profab::oracle
