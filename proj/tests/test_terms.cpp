#include <doctest.h>

#include "generators.hpp"
#include "profab/errors.hpp"
#include "profab/oracle.hpp"
#include "profab/terms.hpp"
#include "profab/word_problem.hpp"

using namespace profab;

namespace {

const Supernatural pi35 = Supernatural::parse("3^1, 5^inf; default=0");
const std::vector<std::string> xy{"x", "y"};

SigmaTerm T(const char* text, const std::vector<std::string>& vars = xy) { return parse_term(text, vars); }

SigmaTerm random_term(gen::Rng& rng, std::size_t vars, int depth) {
  const long roll = depth <= 0 ? 0 : gen::uniform(rng, 0, 5);
  switch (roll) {
    case 0:
    case 1:
      return SigmaTerm::var(static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<long>(vars) - 1)));
    case 2:
    case 3:
      return SigmaTerm::product(random_term(rng, vars, depth - 1), random_term(rng, vars, depth - 1));
    case 4:
      return SigmaTerm::omega_inv(random_term(rng, vars, depth - 1));
    default: {
      static constexpr Prime primes[] = {2, 3, 7};
      return SigmaTerm::prime_power(random_term(rng, vars, depth - 1),
                                    primes[gen::uniform(rng, 0, 2)]);
    }
  }
}

}  // namespace

TEST_CASE("parsing") {
  CHECK(T("x*y^(w-1)") == SigmaTerm::product(SigmaTerm::var(0), SigmaTerm::omega_inv(SigmaTerm::var(1))));
  CHECK(T("(x)^(3^(w-1))") == SigmaTerm::prime_power(SigmaTerm::var(0), 3));
  CHECK(T("x y x") == T("(x*y)*x"));
  CHECK(T("x^(w-1)^(2^(w-1))") == SigmaTerm::prime_power(SigmaTerm::omega_inv(SigmaTerm::var(0)), 2));
  CHECK_THROWS_AS(T("x*z"), ParseError);
  CHECK_THROWS_AS(T("x^(4^(w-1))"), ParseError);
  CHECK_THROWS_AS(T("x^(w-2)"), ParseError);
  CHECK_THROWS_AS(T("x*"), ParseError);
  CHECK_THROWS_AS(T("(x"), ParseError);
  try {
    T("x * q");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("printing round trip") {
  for (const char* text : {"x*y^(w-1)", "x^(3^(w-1))", "(x*y)^(w-1)*x", "x*(y*x)"}) {
    const SigmaTerm t = T(text);
    CHECK(to_string(t, xy) == text);
    CHECK(T(to_string(t, xy).c_str()) == t);
  }
}

TEST_CASE("abelianization") {
  const auto a = abelianize(pi35, T("x*y^(w-1)"), 2);
  CHECK(a == std::vector<Pseudonumber>{1, -1});
  const auto b = abelianize(pi35, T("(x)^(2^(w-1))"), 2);
  CHECK(b[0] == Pseudonumber::omega_power(pi35, 2, 1));
  CHECK(b[1] == Pseudonumber(0));
  CHECK(abelianize(pi35, T("x*x*y"), 2) == std::vector<Pseudonumber>{2, 1});
  CHECK_THROWS_AS(abelianize(pi35, T("x^(5^(w-1))"), 2), SignatureError);
}

TEST_CASE("evaluation in cyclic quotients") {
  const Supernatural all = Supernatural::all_infinite();
  const std::vector<std::string> x{"x"};
  CHECK(oracle::eval_term_mod(T("x*x", x), std::vector<Integer>{5}, 7, all) == 3);
  CHECK(oracle::eval_term_mod(T("x^(w-1)", x), std::vector<Integer>{5}, 7, all) == 2);
  CHECK(oracle::eval_term_mod(T("(x)^(3^(w-1))", x), std::vector<Integer>{1}, 5, pi35) == 2);
}

TEST_CASE("property: abelianization is a homomorphism") {
  gen::Rng rng(71);
  const Supernatural pi = Supernatural::parse("2^2, 3^1, 5^inf, 7^0; default=0");
  for (int trial = 0; trial < 100; ++trial) {
    const SigmaTerm s = random_term(rng, 3, 3);
    const SigmaTerm t = random_term(rng, 3, 3);
    const auto as = abelianize(pi, s, 3);
    const auto at = abelianize(pi, t, 3);
    const auto prod = abelianize(pi, SigmaTerm::product(s, t), 3);
    const auto inv = abelianize(pi, SigmaTerm::omega_inv(s), 3);
    const auto pow3 = abelianize(pi, SigmaTerm::prime_power(s, 3), 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(prod[i] == as[i] + at[i]);
      CHECK(inv[i] == -as[i]);
      CHECK(pow3[i] == Pseudonumber::omega_power(pi, 3, 1) * as[i]);
    }
  }
}

TEST_CASE("property: abelian images agree with evaluation in quotients") {
  gen::Rng rng(72);
  for (int trial = 0; trial < 200; ++trial) {
    Supernatural pi = gen::random_pi(rng);
    if (!pi.in_P(2) || !pi.in_P(3) || !pi.in_P(7)) pi = Supernatural::parse("2^3, 3^1, 5^inf; default=0");
    const SigmaTerm t = random_term(rng, 3, 4);
    const auto coeffs = abelianize(pi, t, 3);
    for (const Integer& n : gen::moduli(pi, 3000, 6, static_cast<std::uint64_t>(trial))) {
      std::vector<Integer> values;
      for (int i = 0; i < 3; ++i) values.emplace_back(gen::uniform(rng, 0, 1000));
      Integer dot = 0;
      for (std::size_t i = 0; i < 3; ++i) dot += eval_mod(coeffs[i], n, pi) * values[i];
      CHECK(oracle::eval_term_mod(t, values, n, pi) == mod(dot, n));
    }
  }
}
