#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace profab {

using Integer = mpz_class;

Integer make_integer(std::int64_t v);
Integer parse_integer(const std::string& text);
std::string to_string(const Integer& v);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer pow(const Integer& base, unsigned long exponent);

/// Least nonnegative residue of a modulo m (m > 0).
Integer mod(const Integer& a, const Integer& m);

/// Inverse of a modulo m, when it exists.
std::optional<Integer> inverse_mod(const Integer& a, const Integer& m);

/// p-adic valuation of n != 0.
unsigned long valuation(const Integer& n, const Integer& p);

/// Largest divisor of m sharing no prime with n.
Integer coprime_part(const Integer& m, const Integer& n);

bool is_prime(const Integer& n);
bool is_prime(std::uint64_t n);

/// (p, e) with n = p^e and p prime, or nullopt.
std::optional<std::pair<Integer, unsigned long>> as_prime_power(const Integer& n);

/// x with x = r1 mod m1 and x = r2 mod m2, for coprime m1, m2; result in [0, m1*m2).
Integer crt_pair(const Integer& r1, const Integer& m1, const Integer& r2, const Integer& m2);

}  // namespace profab
