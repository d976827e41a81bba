#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "profab/integer.hpp"

namespace profab {

using Prime = std::uint64_t;

/// A p-adic exponent of a supernatural number: a natural number or infinity.
class Exponent {
 public:
  static constexpr Exponent finite(std::uint32_t value) { return Exponent(value, false); }
  static constexpr Exponent infinite() { return Exponent(0, true); }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }
  /// Requires is_finite().
  std::uint32_t value() const;

  /// True iff p^k divides p^(this).
  constexpr bool admits(std::uint64_t k) const { return infinite_ || k <= value_; }

  constexpr bool operator==(const Exponent&) const = default;
  std::strong_ordering operator<=>(const Exponent& other) const;

  std::string to_string() const;

 private:
  constexpr Exponent(std::uint32_t value, bool infinite) : value_(value), infinite_(infinite) {}
  std::uint32_t value_;
  bool infinite_;
};

/// A recursive supernatural number π, described by a finite exponent table and
/// a default exponent (0 or ∞) for every prime missing from the table.
///
/// Values are immutable and share their table; copies are cheap.
class Supernatural {
 public:
  enum class Default { zero, infinity };

  Supernatural();  // the supernatural number 1
  Supernatural(std::map<Prime, Exponent> table, Default fallback);

  /// Grammar: `p^e, q^inf ; default=0` (primes ascending and distinct,
  /// whitespace-insensitive; the default clause may be omitted, meaning 0).
  static Supernatural parse(std::string_view text);

  /// Every prime exponent infinite: the supernatural number of all finite
  /// abelian groups.
  static Supernatural all_infinite();

  Exponent exponent_of(Prime p) const;
  /// p ∈ P_π, i.e. π(p) is finite (0 included).
  bool in_P(Prime p) const;

  /// ∏ p^min(v_p(n), π(p)); n ≥ 1.
  Integer gcd_with_integer(const Integer& n) const;

  /// (∏_{p∈S} p^π(p), π with S zeroed). Every p ∈ S must have finite exponent.
  std::pair<Integer, Supernatural> split(std::span<const Prime> primes) const;

  /// True iff π is a natural number (all exponents finite, finitely many nonzero).
  bool is_finite() const;
  /// Requires is_finite().
  Integer value() const;

  /// True iff every prime divisor of n ≥ 1 lies in P_π.
  bool admits_base(const Integer& n) const;

  /// Listed primes with 0 < π(p) < ∞ that divide n (n ≠ 0), ascending.
  std::vector<Prime> finite_primes_dividing(const Integer& n) const;

  /// Primes p with π(p) = ∞ to consider when a witness modulus is needed:
  /// the listed ones, plus the smallest unlisted ones when the default is ∞.
  std::vector<Prime> infinite_prime_candidates(std::size_t unlisted) const;

  /// Listed primes with finite positive exponent, ascending.
  std::vector<std::pair<Prime, std::uint32_t>> finite_support() const;

  const std::map<Prime, Exponent>& table() const { return data_->table; }
  Default fallback() const { return data_->fallback; }

  std::string to_string() const;

  bool operator==(const Supernatural& other) const;

 private:
  struct Data {
    std::map<Prime, Exponent> table;
    Default fallback;
  };
  std::shared_ptr<const Data> data_;
};

/// n | π as supernatural numbers (n ≥ 1): the cyclic group Z/n lies in Ab_π.
bool divides(const Integer& n, const Supernatural& pi);

/// Up to `count` distinct divisors of π not exceeding `bound`, ascending.
/// Always contains the largest such divisor; the rest favours large values
/// and prime powers. Deterministic for a given seed.
std::vector<Integer> divisor_sample(const Supernatural& pi, const Integer& bound,
                                    std::size_t count, std::uint64_t seed = 0);

}  // namespace profab
