#include "profab/integer.hpp"

#include "profab/errors.hpp"

namespace profab {

Integer make_integer(std::int64_t v) {
  Integer r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

Integer parse_integer(const std::string& text) {
  Integer r;
  if (text.empty() || r.set_str(text, 10) != 0) {
    throw InputError("not an integer: '" + text + "'");
  }
  return r;
}

std::string to_string(const Integer& v) { return v.get_str(10); }

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::optional<Integer> inverse_mod(const Integer& a, const Integer& m) {
  if (m == 1) return Integer(0);
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) return std::nullopt;
  return r;
}

unsigned long valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw InputError("valuation of zero");
  Integer rest;
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

Integer coprime_part(const Integer& m, const Integer& n) {
  Integer rest = abs(m);
  Integer g = gcd(rest, n);
  while (g > 1) {
    rest /= g;
    g = gcd(rest, g);
  }
  return rest;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
  return is_prime(z);
}

std::optional<std::pair<Integer, unsigned long>> as_prime_power(const Integer& n) {
  if (n < 2) return std::nullopt;
  if (is_prime(n)) return std::make_pair(n, 1UL);
  if (mpz_perfect_power_p(n.get_mpz_t()) == 0) return std::nullopt;
  const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Integer root;
  for (unsigned long e = bits; e >= 2; --e) {
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
      if (is_prime(root)) return std::make_pair(root, e);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

Integer crt_pair(const Integer& r1, const Integer& m1, const Integer& r2, const Integer& m2) {
  if (m1 == 1) return mod(r2, m2);
  if (m2 == 1) return mod(r1, m1);
  const auto inv = inverse_mod(mod(m1, m2), m2);
  if (!inv) throw PreconditionError("crt_pair: moduli not coprime");
  Integer t = mod((r2 - r1) * *inv, m2);
  return mod(r1 + m1 * t, m1 * m2);
}

}  // namespace profab
