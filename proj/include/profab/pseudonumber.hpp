#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "profab/integer.hpp"
#include "profab/supernatural.hpp"

namespace profab {

/// coeff · base^(ω - offset)
struct Term {
  Integer base;
  std::uint32_t offset = 1;
  Integer coeff;

  bool operator==(const Term& other) const {
    return offset == other.offset && base == other.base && coeff == other.coeff;
  }
};

/// An element of Z_π^σ written as `a_0 + Σ a_j · n_j^(ω - k_j)`.
///
/// Values are kept normalized: terms sorted by (base, offset) with unique
/// keys, nonzero coefficients, bases ≥ 2 that are not proper prime powers.
/// The form is not canonical; two different values may denote the same
/// pseudonumber, and only the word problem decides equality.
///
/// A pseudonumber remembers the supernatural number it was built over, if
/// any (pure integers carry none). Combining values over different π throws.
class Pseudonumber {
 public:
  Pseudonumber() = default;
  Pseudonumber(Integer constant) : constant_(std::move(constant)) {}  // NOLINT: integers embed
  Pseudonumber(long constant) : constant_(constant) {}                // NOLINT

  static Pseudonumber from_integer(Integer a) { return Pseudonumber(std::move(a)); }

  /// n^(ω - k); every prime of n must lie in P_π.
  static Pseudonumber omega_power(const Supernatural& pi, const Integer& n, std::uint32_t k = 1);

  /// n^ω, materialized as n · n^(ω-1) (1 when n = 1).
  static Pseudonumber omega(const Supernatural& pi, const Integer& n);

  /// Normal form of raw data. Zero coefficients are dropped, base-1 terms
  /// fold into the constant, offset 0 becomes n·n^(ω-1), and prime-power
  /// bases collapse via (p^e)^(ω-k) = p^(ω-ek).
  static Pseudonumber normalize(Integer constant, std::vector<Term> terms,
                                std::optional<Supernatural> pi = std::nullopt);

  const Integer& constant() const { return constant_; }
  std::span<const Term> terms() const { return terms_; }
  const std::optional<Supernatural>& ambient() const { return ambient_; }
  bool is_integer() const { return terms_.empty(); }

  /// Structural equality (not semantic).
  bool operator==(const Pseudonumber& other) const {
    return constant_ == other.constant_ && terms_ == other.terms_;
  }

  Pseudonumber operator-() const;
  friend Pseudonumber operator+(const Pseudonumber& u, const Pseudonumber& v);
  friend Pseudonumber operator-(const Pseudonumber& u, const Pseudonumber& v);
  friend Pseudonumber operator*(const Pseudonumber& u, const Pseudonumber& v);
  Pseudonumber& operator+=(const Pseudonumber& v) { return *this = *this + v; }
  Pseudonumber& operator*=(const Pseudonumber& v) { return *this = *this * v; }

 private:
  Integer constant_ = 0;
  std::vector<Term> terms_;
  std::optional<Supernatural> ambient_;
};

/// Re-normalizes (idempotent on values that already went through the API).
Pseudonumber normalize(const Pseudonumber& u);

struct ClearingFactor {
  Integer factor;  ///< c = ∏ n_j^(k_j + β)
  Integer value;   ///< the integer equal to c·u in Ab_π
};

/// c with c·u an integer in Ab_π; β is the largest finite π-exponent among the
/// primes of the bases, so every prime of c lies in P_π.
ClearingFactor clearing_factor(const Supernatural& pi, const Pseudonumber& u);

/// Image of u in Z/n for n | π.
Integer eval_mod(const Pseudonumber& u, const Integer& n, const Supernatural& pi);

/// The same ring map without checking n | π. Each term evaluates to 0 on the
/// part of n sharing primes with its base and to base^(-k) on the rest.
Integer reduce_mod(const Pseudonumber& u, const Integer& n);

/// Throws InputError when u was built over a supernatural number other than pi.
void require_ambient(const Pseudonumber& u, const Supernatural& pi);

/// Text form: integers, `[n^(w-k)]` atoms, `+ - *` and parentheses,
/// e.g. `3 + 2*[6^(w-2)] - [5^(w-1)]`. Bases are checked against pi.
Pseudonumber parse_pseudonumber(std::string_view text, const Supernatural& pi);
std::string to_string(const Pseudonumber& u);

}  // namespace profab
