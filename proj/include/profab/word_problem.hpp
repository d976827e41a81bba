#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "profab/pseudonumber.hpp"

namespace profab {

/// Outcome of deciding a pseudoidentity in Ab_π. A negative answer carries a
/// finite quotient Z/modulus (modulus | π) where the two sides differ.
struct Verdict {
  enum class Failure { none, residues, constraint };

  Failure failure = Failure::none;
  Integer modulus = 0;
  Integer residue_u = 0;
  Integer residue_v = 0;
  /// Index of the first failing component for vector comparisons.
  std::optional<std::size_t> component;
  std::string detail;

  bool equal() const { return failure == Failure::none; }
  explicit operator bool() const { return equal(); }

  static Verdict yes() { return {}; }
  static Verdict differ(Integer modulus, Integer ru, Integer rv) {
    Verdict v;
    v.failure = Failure::residues;
    v.modulus = std::move(modulus);
    v.residue_u = std::move(ru);
    v.residue_v = std::move(rv);
    return v;
  }
};

/// Decides whether u = v holds in Ab_π.
///
/// Both sides are cleared to integers with c = c_u·c_v; π splits as M·π'
/// where M collects the primes of c. The identity holds iff u and v agree
/// modulo M and the integers c·u, c·v agree in Ẑ_π' (as integers when π' is
/// infinite, modulo π' otherwise).
Verdict equal_in_ab(const Supernatural& pi, const Pseudonumber& u, const Pseudonumber& v);

/// Componentwise equality of alphabet-indexed vectors.
Verdict equal_vectors(const Supernatural& pi, std::span<const Pseudonumber> u,
                      std::span<const Pseudonumber> v);

Verdict is_zero(const Supernatural& pi, const Pseudonumber& u);

/// Smallest prime power q^e, q ranging over primes with π(q) = ∞, that does
/// not divide the nonzero integer delta.
Integer infinite_witness(const Supernatural& pi, const Integer& delta);

}  // namespace profab
