#include <doctest.h>

#include "profab/errors.hpp"
#include "profab/oracle.hpp"
#include "systems.hpp"

using namespace profab;

namespace {

std::size_t branch_product(const EquationSystem& sys) {
  std::size_t n = 1;
  for (const SemilinearSet& c : sys.constraints) n *= c.branches().size();
  return n;
}

}  // namespace

TEST_CASE("the squaring system over 3^inf") {
  const SystemDocument doc = parse_system_document(gen::square_document("3^inf; default=0"));
  for (Execution mode : {Execution::serial, Execution::parallel}) {
    const ReductionResult r = decide_and_witness(doc.pi, doc.system, mode);
    REQUIRE(r);
    CHECK(verify_witness(doc.pi, doc.system, *r.witness));
    const Pseudonumber& x = r.witness->images[0][0];
    const Pseudonumber& y = r.witness->images[1][0];
    for (long n : {3, 9, 27}) {
      CHECK(eval_mod(x, n, doc.pi) == mod(2 * eval_mod(y, n, doc.pi), n));
    }
    CHECK(r.systems_attempted == 1);
    CHECK(r.refutations.empty());
  }
}

TEST_CASE("x = 2, y = 1 solves the squaring system over 3^inf") {
  const SystemDocument doc = parse_system_document(gen::square_document("3^inf; default=0"));
  const Pseudonumber s = Pseudonumber::omega_power(doc.pi, 2, 1);
  Witness w;
  w.images = {{Pseudonumber(1) + Pseudonumber(2) * s}, {Pseudonumber(1)}};
  w.branches = {0, 0};
  w.coefficients = {{s}, {Pseudonumber(0)}};
  CHECK(verify_witness(doc.pi, doc.system, w));
  CHECK(equal_in_ab(doc.pi, w.images[0][0], 2));
  CHECK(eval_mod(w.images[0][0], 3, doc.pi) == 2);
  CHECK(eval_mod(w.images[0][0], 9, doc.pi) == 2);
}

TEST_CASE("the squaring system over 2^inf is refuted modulo 2") {
  const SystemDocument doc = parse_system_document(gen::square_document("2^inf; default=0"));
  const ReductionResult r = decide_and_witness(doc.pi, doc.system);
  CHECK_FALSE(r);
  REQUIRE(r.refutations.size() == 1);
  CHECK(r.refutations[0].modulus == 2);
  CHECK(r.combined_modulus() == 2);
  CHECK_FALSE(oracle::search_quotient(doc.system, 2, doc.pi).has_value());
}

TEST_CASE("trivial equations") {
  const SystemDocument doc = parse_system_document(
      R"({"pi": "5^inf", "alphabet": ["a"], "variables": ["x"], "equations": ["x = x"],
          "constraints": {"x": "1+1N"}})");
  const ReductionResult r = decide_and_witness(doc.pi, doc.system);
  REQUIRE(r);
  CHECK(equal_in_ab(doc.pi, r.witness->images[0][0], 1));
}

TEST_CASE("witness verification") {
  const SystemDocument doc = parse_system_document(gen::square_document("3^inf; default=0"));
  const Supernatural pi2 = Supernatural::parse("2^inf; default=0");
  Witness w;
  w.images = {{Pseudonumber(0)}, {Pseudonumber(1)}};
  w.branches = {0, 0};
  w.coefficients = {{}, {}};
  const EquationSystem no_equations{doc.system.alphabet, doc.system.variables, {}, doc.system.constraints};
  const Verdict v = verify_witness(pi2, no_equations, w);
  CHECK_FALSE(v);
  CHECK(v.failure == Verdict::Failure::constraint);
  CHECK(v.modulus == 2);
  CHECK(*v.component == 0);

  w.images = {{Pseudonumber(3)}, {Pseudonumber(1)}};
  CHECK(verify_witness(pi2, no_equations, w));
  const Verdict eq = verify_witness(doc.pi, doc.system, w);
  CHECK_FALSE(eq);
  CHECK(eq.failure == Verdict::Failure::residues);
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(parse_system_document("{"), InputError);
  CHECK_THROWS_AS(parse_system_document(R"({"pi": "3^inf", "alphabet": ["a"], "variables": ["x", "y"],
      "equations": ["x = y"], "constraints": {"x": "1"}})"),
                  InputError);
  CHECK_THROWS_AS(parse_system_document(R"({"pi": "3^inf", "alphabet": ["a"], "variables": ["x"],
      "equations": ["x = z"], "constraints": {"x": "1"}})"),
                  ParseError);
  CHECK_THROWS_AS(parse_system_document(R"({"pi": "3^inf", "alphabet": ["a"], "variables": ["x"],
      "equations": ["x"], "constraints": {"x": "1"}})"),
                  InputError);
  CHECK_THROWS_AS(parse_system_document(R"({"pi": "3^inf", "alphabet": ["a", "b"], "variables": ["x"],
      "equations": [], "constraints": {"x": "1"}})"),
                  InputError);
  CHECK_THROWS_AS(parse_system_document(R"({"pi": 3, "alphabet": ["a"], "variables": ["x"],
      "constraints": {"x": "1"}})"),
                  InputError);
}

TEST_CASE("branches are enumerated exhaustively") {
  const SystemDocument doc = parse_system_document(
      R"({"pi": "2^inf", "alphabet": ["a"], "variables": ["x", "y"], "equations": ["x = y*y"],
          "constraints": {"x": "1+2N | 3+4N | 5", "y": "1+2N | 1"}})");
  const ReductionResult r = decide_and_witness(doc.pi, doc.system);
  CHECK_FALSE(r);
  CHECK(r.systems_attempted == 6);
  CHECK(r.refutations.size() == 6);
  CHECK(r.refutations[1].branches == std::vector<std::size_t>{0, 1});
  CHECK(r.refutations[2].branches == std::vector<std::size_t>{1, 0});
}

TEST_CASE("the least solvable branch combination wins") {
  const SystemDocument doc = parse_system_document(
      R"({"pi": "2^inf", "alphabet": ["a"], "variables": ["x", "y"], "equations": ["x = y*y"],
          "constraints": {"x": "1 | 2+2N | 4", "y": "1 | 2"}})");
  const ReductionResult serial = decide_and_witness(doc.pi, doc.system, Execution::serial);
  const ReductionResult parallel = decide_and_witness(doc.pi, doc.system, Execution::parallel);
  REQUIRE(serial);
  REQUIRE(parallel);
  CHECK(serial.witness->branches == std::vector<std::size_t>{1, 0});
  CHECK(parallel.witness->branches == serial.witness->branches);
  CHECK(parallel.systems_attempted == serial.systems_attempted);
  CHECK(serial.systems_attempted == 3);
}

TEST_CASE("property: decisions agree with exhaustive search in quotients") {
  gen::Rng rng(81);
  int solvable = 0, unsolvable = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const SystemDocument doc = gen::random_system(rng);
    const ReductionResult r = decide_and_witness(doc.pi, doc.system);
    if (r) {
      ++solvable;
      CHECK(verify_witness(doc.pi, doc.system, *r.witness));
      for (const Integer& n : gen::moduli(doc.pi, 50, 5, static_cast<std::uint64_t>(trial))) {
        CHECK(oracle::search_quotient(doc.system, n, doc.pi).has_value());
      }
    } else {
      ++unsolvable;
      CHECK(r.systems_attempted == branch_product(doc.system));
      const Integer n = r.combined_modulus();
      if (n <= 50) CHECK_FALSE(oracle::search_quotient(doc.system, n, doc.pi).has_value());
    }
  }
  CHECK(solvable > 10);
  CHECK(unsolvable > 5);
}
