#include "profab/word_problem.hpp"

#include "profab/errors.hpp"

namespace profab {

namespace {

// Smallest p^e (p ranging over `primes` with their caps) with u and v
// distinct modulo p^e; the primes multiply to a modulus where they differ.
Integer smallest_distinguishing_power(const std::vector<std::pair<Prime, std::uint32_t>>& primes,
                                      const Pseudonumber& u, const Pseudonumber& v) {
  Integer best = 0;
  for (const auto& [p, cap] : primes) {
    Integer q = 1;
    for (std::uint32_t e = 1; e <= cap; ++e) {
      q *= static_cast<unsigned long>(p);
      if (best != 0 && q >= best) break;
      if (reduce_mod(u, q) != reduce_mod(v, q)) {
        best = q;
        break;
      }
    }
  }
  return best;
}

Verdict differ_at(const Integer& modulus, const Pseudonumber& u, const Pseudonumber& v) {
  return Verdict::differ(modulus, reduce_mod(u, modulus), reduce_mod(v, modulus));
}

}  // namespace

Integer infinite_witness(const Supernatural& pi, const Integer& delta) {
  if (delta == 0) throw PreconditionError("infinite_witness requires a nonzero integer");
  Integer best = 0;
  for (Prime q : pi.infinite_prime_candidates(3)) {
    const Integer zq(static_cast<unsigned long>(q));
    const Integer candidate = pow(zq, (delta % zq == 0 ? valuation(delta, zq) : 0) + 1);
    if (best == 0 || candidate < best) best = candidate;
  }
  if (best == 0) throw PreconditionError("no prime with infinite exponent in " + pi.to_string());
  return best;
}

Verdict equal_in_ab(const Supernatural& pi, const Pseudonumber& u, const Pseudonumber& v) {
  require_ambient(u, pi);
  require_ambient(v, pi);
  if (u == v) return Verdict::yes();

  const ClearingFactor cu = clearing_factor(pi, u);
  const ClearingFactor cv = clearing_factor(pi, v);
  const Integer c = cu.factor * cv.factor;
  const auto primes = pi.finite_primes_dividing(c);
  const auto [m, rest] = pi.split(primes);

  // Finite part: Z/M.
  if (m > 1 && reduce_mod(u, m) != reduce_mod(v, m)) {
    std::vector<std::pair<Prime, std::uint32_t>> caps;
    for (Prime p : primes) caps.emplace_back(p, pi.exponent_of(p).value());
    return differ_at(smallest_distinguishing_power(caps, u, v), u, v);
  }

  // π' part; c is a unit there, so u = v iff c·u = c·v.
  const Integer delta = cu.value * cv.factor - cv.value * cu.factor;
  if (rest.is_finite()) {
    const Integer n = rest.value();
    if (mod(delta, n) == 0) return Verdict::yes();
    return differ_at(smallest_distinguishing_power(rest.finite_support(), u, v), u, v);
  }
  if (delta == 0) return Verdict::yes();

  Integer witness = infinite_witness(rest, delta);
  // A finite prime power of π' may separate the two sides more cheaply.
  for (const auto& [p, cap] : rest.finite_support()) {
    const Integer zp(static_cast<unsigned long>(p));
    const unsigned long e = (delta % zp == 0 ? valuation(delta, zp) : 0) + 1;
    if (e <= cap) {
      const Integer candidate = pow(zp, e);
      if (candidate < witness) witness = candidate;
    }
  }
  return differ_at(witness, u, v);
}

Verdict equal_vectors(const Supernatural& pi, std::span<const Pseudonumber> u,
                      std::span<const Pseudonumber> v) {
  if (u.size() != v.size()) {
    throw InputError("vector length mismatch: " + std::to_string(u.size()) + " vs " +
                     std::to_string(v.size()));
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    Verdict verdict = equal_in_ab(pi, u[i], v[i]);
    if (!verdict) {
      verdict.component = i;
      return verdict;
    }
  }
  return Verdict::yes();
}

Verdict is_zero(const Supernatural& pi, const Pseudonumber& u) {
  return equal_in_ab(pi, u, Pseudonumber(0));
}

}  // namespace profab
