#include <doctest.h>

#include "generators.hpp"
#include "profab/oracle.hpp"
#include "profab/word_problem.hpp"

using namespace profab;

namespace {

const Supernatural pi35 = Supernatural::parse("3^1, 5^inf; default=0");
const Supernatural pi3inf = Supernatural::parse("3^inf; default=0");

Pseudonumber W(const Supernatural& pi, long n, std::uint32_t k = 1) {
  return Pseudonumber::omega_power(pi, Integer(n), k);
}

void check_witness(const Verdict& v, const Pseudonumber& a, const Pseudonumber& b, const Supernatural& pi) {
  REQUIRE_FALSE(v.equal());
  CHECK(divides(v.modulus, pi));
  CHECK(v.residue_u != v.residue_v);
  CHECK(v.residue_u == eval_mod(a, v.modulus, pi));
  CHECK(v.residue_v == eval_mod(b, v.modulus, pi));
}

}  // namespace

TEST_CASE("decides the basic identities") {
  const Pseudonumber u = Pseudonumber(9) * W(pi35, 3);
  CHECK(equal_in_ab(pi35, u, Pseudonumber(3)));
  for (long n : {3, 5, 15, 75}) CHECK(oracle::pseudonumber_mod(u, n) == 3 % n);

  CHECK(equal_in_ab(pi3inf, Pseudonumber(2) * W(pi3inf, 2), Pseudonumber(1)));

  const Verdict v = equal_in_ab(pi3inf, Pseudonumber(1), Pseudonumber(2));
  CHECK_FALSE(v.equal());
  CHECK(v.modulus == 3);
  CHECK(v.residue_u == 1);
  CHECK(v.residue_v == 2);
}

TEST_CASE("vectors compare componentwise") {
  const std::vector<Pseudonumber> a{1, 2};
  CHECK(equal_vectors(pi3inf, a, a));
  const std::vector<Pseudonumber> b{Pseudonumber(9) * W(pi35, 3), 0};
  const std::vector<Pseudonumber> c{3, 0};
  CHECK(equal_vectors(pi35, b, c));
  const std::vector<Pseudonumber> d{1, 1};
  const Verdict v = equal_vectors(pi3inf, d, a);
  CHECK_FALSE(v.equal());
  REQUIRE(v.component.has_value());
  CHECK(*v.component == 1);
  CHECK(v.modulus == 3);
  const std::vector<Pseudonumber> shorter{1};
  CHECK_THROWS(equal_vectors(pi3inf, shorter, a));
}

TEST_CASE("is_zero") {
  CHECK(is_zero(pi35, Pseudonumber(9) * W(pi35, 3) - Pseudonumber(3)));
  CHECK(is_zero(pi35, Pseudonumber(0)));
  const Verdict v = is_zero(Supernatural::parse("2^inf; default=0"), Pseudonumber(1));
  CHECK_FALSE(v.equal());
  CHECK(v.modulus == 2);
}

TEST_CASE("finite supernatural numbers reduce to congruences") {
  const Supernatural pi = Supernatural::parse("2^2, 3^1; default=0");
  CHECK(equal_in_ab(pi, Pseudonumber(1), Pseudonumber(13)));
  const Verdict v = equal_in_ab(pi, Pseudonumber(1), Pseudonumber(7));
  check_witness(v, 1, 7, pi);
  CHECK(v.modulus == 2 * 2);
}

TEST_CASE("infinitely many infinite primes") {
  const Supernatural pi = Supernatural::parse("2^1, 3^1; default=inf");
  const Verdict v = equal_in_ab(pi, W(pi, 2), Pseudonumber(1) + Pseudonumber(30));
  check_witness(v, W(pi, 2), Pseudonumber(31), pi);
  CHECK(equal_in_ab(pi, Pseudonumber(3) * W(pi, 3) * Pseudonumber(3), Pseudonumber(3)));
}

TEST_CASE("property: verdicts agree with evaluation in sampled quotients") {
  gen::Rng rng(31);
  int equal = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Supernatural pi = gen::random_pi(rng);
    const Pseudonumber u = gen::random_pseudonumber(rng, pi);
    const Pseudonumber v = trial % 2 ? u + gen::random_zero(rng, pi) : gen::random_pseudonumber(rng, pi);
    const Verdict verdict = equal_in_ab(pi, u, v);
    CAPTURE(pi.to_string());
    CAPTURE(to_string(u));
    CAPTURE(to_string(v));
    if (trial % 2) CHECK(verdict.equal());
    if (verdict) {
      ++equal;
      for (const Integer& n : gen::moduli(pi, 100000, 10, static_cast<std::uint64_t>(trial))) {
        CHECK(oracle::pseudonumber_mod(u, n) == oracle::pseudonumber_mod(v, n));
      }
    } else {
      check_witness(verdict, u, v, pi);
      if (verdict.modulus <= 10000000) {
        CHECK(oracle::pseudonumber_mod(u, verdict.modulus) != oracle::pseudonumber_mod(v, verdict.modulus));
      }
    }
  }
  CHECK(equal >= 150);
}

TEST_CASE("property: equality is a congruence") {
  gen::Rng rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const Supernatural pi = gen::random_pi(rng);
    const Pseudonumber u = gen::random_pseudonumber(rng, pi, 3);
    const Pseudonumber v = u + gen::random_zero(rng, pi);
    const Pseudonumber w = v + gen::random_zero(rng, pi);
    const Pseudonumber s = gen::random_pseudonumber(rng, pi, 2);
    CHECK(equal_in_ab(pi, u, u));
    CHECK(equal_in_ab(pi, v, u));
    CHECK(equal_in_ab(pi, u, w));
    CHECK(equal_in_ab(pi, u + s, w + s));
    CHECK(equal_in_ab(pi, u * s, w * s));
    const Pseudonumber x = gen::random_pseudonumber(rng, pi, 3);
    CHECK(equal_in_ab(pi, u, x).equal() == equal_in_ab(pi, x, u).equal());
  }
}

TEST_CASE("property: cancelling factors coprime to pi") {
  gen::Rng rng(33);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Supernatural pi = gen::random_pi(rng);
    long n = gen::uniform(rng, 2, 60);
    if (pi.gcd_with_integer(n) != 1) continue;
    ++checked;
    const Pseudonumber u = gen::random_pseudonumber(rng, pi, 3);
    const Pseudonumber v = trial % 2 ? u + gen::random_zero(rng, pi) : gen::random_pseudonumber(rng, pi, 3);
    CHECK(equal_in_ab(pi, Pseudonumber(n) * u, Pseudonumber(n) * v).equal() == equal_in_ab(pi, u, v).equal());
  }
  CHECK(checked > 20);
}
