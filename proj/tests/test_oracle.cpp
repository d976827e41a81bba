#include <doctest.h>

#include "profab/errors.hpp"
#include "profab/oracle.hpp"
#include "systems.hpp"

using namespace profab;

TEST_CASE("term evaluation") {
  const Supernatural all = Supernatural::all_infinite();
  const std::vector<std::string> x{"x"};
  CHECK(oracle::eval_term_mod(parse_term("x*x", x), std::vector<Integer>{5}, 7, all) == 3);
  CHECK(oracle::eval_term_mod(parse_term("x^(w-1)", x), std::vector<Integer>{5}, 7, all) == 2);
  const Supernatural pi = Supernatural::parse("3^1, 5^inf; default=0");
  CHECK(oracle::eval_term_mod(parse_term("(x)^(3^(w-1))", x), std::vector<Integer>{1}, 5, pi) == 2);
  // 3^(ω-1)·x in Z/15 with x = 5: order 3, and 3^(ω-1) ≡ 0 there
  CHECK(oracle::eval_term_mod(parse_term("(x)^(3^(w-1))", x), std::vector<Integer>{5}, 15, pi) == 0);
  CHECK_THROWS_AS(oracle::eval_term_mod(parse_term("x", x), std::vector<Integer>{1}, 9, pi), PreconditionError);
  CHECK_THROWS_AS(oracle::eval_term_mod(parse_term("x^(5^(w-1))", x), std::vector<Integer>{1}, 5, pi),
                  SignatureError);
}

TEST_CASE("pseudonumbers by brute force") {
  const Supernatural pi = Supernatural::parse("3^1, 5^inf; default=0");
  CHECK(oracle::pseudonumber_mod(Pseudonumber::omega_power(pi, 3, 1), 15) == 12);
  CHECK(oracle::pseudonumber_mod(Pseudonumber(-8), 5) == 2);
  CHECK_THROWS_AS(oracle::pseudonumber_mod(Pseudonumber(1), Integer("100000000000")), ResourceError);
}

TEST_CASE("constraint images") {
  const auto img = oracle::constraint_image(SemilinearSet::parse("1+2N"), 4);
  CHECK(img == std::vector<std::vector<Integer>>{{1}, {3}});
  const auto two = oracle::constraint_image(SemilinearSet::parse("(1,0)+(2,1)N | (0,0)"), 3);
  CHECK(two.size() == 4);
}

TEST_CASE("searching quotients") {
  const SystemDocument odd = parse_system_document(gen::square_document("3^inf; default=0"));
  const auto found = oracle::search_quotient(odd.system, 3, odd.pi);
  REQUIRE(found.has_value());
  CHECK((*found)[0][0] == mod(2 * (*found)[1][0], 3));

  const SystemDocument even = parse_system_document(gen::square_document("2^inf; default=0"));
  CHECK_FALSE(oracle::search_quotient(even.system, 2, even.pi).has_value());

  const SystemDocument trivial = parse_system_document(
      R"({"pi": "2^inf", "alphabet": ["a"], "variables": ["x"], "equations": ["x = x"], "constraints": {"x": "1+1N"}})");
  CHECK(oracle::search_quotient(trivial.system, 2, trivial.pi).has_value());

  CHECK_THROWS_AS(oracle::search_quotient(even.system, 64, even.pi), ResourceError);
  CHECK_THROWS_AS(oracle::search_quotient(even.system, 3, even.pi), PreconditionError);
  const SystemDocument four = parse_system_document(
      R"({"pi": "2^inf", "alphabet": ["a"], "variables": ["x", "y", "z", "t"], "equations": [],
          "constraints": {"x": "1", "y": "1", "z": "1", "t": "1"}})");
  CHECK_THROWS_AS(oracle::search_quotient(four.system, 2, four.pi), ResourceError);
}

TEST_CASE("parallel and serial searches agree") {
  gen::Rng rng(91);
  for (int trial = 0; trial < 60; ++trial) {
    const SystemDocument doc = gen::random_system(rng);
    for (const Integer& n : gen::moduli(doc.pi, 50, 3, static_cast<std::uint64_t>(trial))) {
      CHECK(oracle::search_quotient(doc.system, n, doc.pi) == oracle::search_quotient_serial(doc.system, n, doc.pi));
    }
  }
}

TEST_CASE("exhaustive congruence solving") {
  CHECK(oracle::congruences_solvable(IntMatrix::parse("2"), std::vector<Integer>{0}, 3));
  CHECK_FALSE(oracle::congruences_solvable(IntMatrix::parse("2"), std::vector<Integer>{1}, 4));
  CHECK(oracle::congruences_solvable(IntMatrix::parse("1,1;0,1"), std::vector<Integer>{5, 2}, 7));
}
