#include "profab/reducibility.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>

#include <json.hpp>

#include "profab/errors.hpp"
#include "profab/solver.hpp"

namespace profab {

void EquationSystem::validate() const {
  if (alphabet.empty()) throw InputError("system needs a nonempty alphabet");
  if (variables.empty()) throw InputError("system needs at least one variable");
  if (std::set<std::string>(alphabet.begin(), alphabet.end()).size() != alphabet.size()) {
    throw InputError("duplicate alphabet letter");
  }
  if (std::set<std::string>(variables.begin(), variables.end()).size() != variables.size()) {
    throw InputError("duplicate variable");
  }
  if (constraints.size() != variables.size()) throw InputError("every variable needs a constraint");
  for (std::size_t x = 0; x < variables.size(); ++x) {
    if (constraints[x].dim() != alphabet.size()) {
      throw InputError("constraint for '" + variables[x] + "' does not match the alphabet size");
    }
  }
}

Equation parse_equation(std::string_view text, std::span<const std::string> variables) {
  const std::size_t eq = text.find('=');
  if (eq == std::string_view::npos || text.find('=', eq + 1) != std::string_view::npos) {
    throw InputError("equation must have the form 'lhs = rhs'");
  }
  return Equation{parse_term(text.substr(0, eq), variables), parse_term(text.substr(eq + 1), variables)};
}

SystemDocument parse_system_document(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed system document: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw InputError("system document must be a JSON object");
    for (const char* field : {"pi", "alphabet", "variables", "constraints"}) {
      if (!doc.contains(field)) throw InputError(std::string("system document lacks '") + field + "'");
    }
    SystemDocument out{Supernatural::parse(doc.at("pi").get<std::string>()), {}};
    EquationSystem& sys = out.system;
    sys.alphabet = doc.at("alphabet").get<std::vector<std::string>>();
    sys.variables = doc.at("variables").get<std::vector<std::string>>();
    if (doc.contains("equations")) {
      for (const auto& e : doc.at("equations")) {
        sys.equations.push_back(parse_equation(e.get<std::string>(), sys.variables));
      }
    }
    const auto& constraints = doc.at("constraints");
    if (!constraints.is_object()) throw InputError("'constraints' must be an object");
    for (const auto& [name, _] : constraints.items()) {
      if (std::find(sys.variables.begin(), sys.variables.end(), name) == sys.variables.end()) {
        throw InputError("constraint for undeclared variable '" + name + "'");
      }
    }
    for (const std::string& x : sys.variables) {
      if (!constraints.contains(x)) throw InputError("variable '" + x + "' is unconstrained");
      sys.constraints.push_back(
          SemilinearSet::parse(constraints.at(x).get<std::string>(), sys.alphabet.size()));
    }
    sys.validate();
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed system document: ") + e.what());
  }
}

Integer ReductionResult::combined_modulus() const {
  Integer m = 1;
  for (const Refutation& r : refutations) m = lcm(m, r.modulus);
  return m;
}

namespace {

// n_ex = lhs_e[x] - rhs_e[x]
using Differences = std::vector<std::vector<Pseudonumber>>;

Differences equation_differences(const Supernatural& pi, const EquationSystem& sys) {
  Differences out;
  for (const Equation& e : sys.equations) {
    std::vector<Pseudonumber> l = abelianize(pi, e.lhs, sys.variables.size());
    const std::vector<Pseudonumber> r = abelianize(pi, e.rhs, sys.variables.size());
    for (std::size_t x = 0; x < l.size(); ++x) l[x] = l[x] - r[x];
    out.push_back(std::move(l));
  }
  return out;
}

std::vector<std::size_t> combination(std::size_t index, const EquationSystem& sys) {
  std::vector<std::size_t> branches(sys.variables.size());
  for (std::size_t x = sys.variables.size(); x-- > 0;) {
    const std::size_t count = sys.constraints[x].branches().size();
    branches[x] = index % count;
    index /= count;
  }
  return branches;
}

struct Attempt {
  std::optional<Witness> witness;
  Integer modulus = 0;
};

Attempt attempt(const Supernatural& pi, const EquationSystem& sys, const Differences& diffs,
                const std::vector<std::size_t>& branches) {
  const std::size_t letters = sys.alphabet.size();
  const std::size_t vars = sys.variables.size();
  std::vector<const LinearSet*> chosen(vars);
  std::vector<std::size_t> first_column(vars);
  std::size_t columns = 0;
  for (std::size_t x = 0; x < vars; ++x) {
    chosen[x] = &sys.constraints[x].branches()[branches[x]];
    first_column[x] = columns;
    columns += chosen[x]->periods.size();
  }

  const std::size_t rows = diffs.size() * letters;
  std::vector<Pseudonumber> rhs(rows);
  for (std::size_t e = 0; e < diffs.size(); ++e) {
    for (std::size_t i = 0; i < letters; ++i) {
      Pseudonumber acc;
      for (std::size_t x = 0; x < vars; ++x) {
        if (chosen[x]->base[i] != 0) acc += diffs[e][x] * Pseudonumber(chosen[x]->base[i]);
      }
      rhs[e * letters + i] = -acc;
    }
  }

  std::vector<Pseudonumber> y(columns);
  if (rows > 0 && columns == 0) {
    for (const Pseudonumber& r : rhs) {
      const Verdict z = is_zero(pi, r);
      if (!z) return Attempt{std::nullopt, z.modulus};
    }
  } else if (rows > 0) {
    SigmaMatrix b(rows, columns);
    for (std::size_t e = 0; e < diffs.size(); ++e) {
      for (std::size_t i = 0; i < letters; ++i) {
        for (std::size_t x = 0; x < vars; ++x) {
          for (std::size_t j = 0; j < chosen[x]->periods.size(); ++j) {
            const Integer& a = chosen[x]->periods[j][i];
            if (a != 0) b(e * letters + i, first_column[x] + j) = diffs[e][x] * Pseudonumber(a);
          }
        }
      }
    }
    auto solved = solve_system(pi, b, rhs);
    if (!solved) return Attempt{std::nullopt, solved.refuting_modulus};
    y = std::move(*solved.value);
  }

  Witness w;
  w.branches = branches;
  for (std::size_t x = 0; x < vars; ++x) {
    const std::size_t count = chosen[x]->periods.size();
    std::vector<Pseudonumber> coeffs(y.begin() + first_column[x], y.begin() + first_column[x] + count);
    w.images.push_back(coset_point(*chosen[x], coeffs));
    w.coefficients.push_back(std::move(coeffs));
  }
  return Attempt{std::move(w), 0};
}

}  // namespace

ReductionResult decide_and_witness(const Supernatural& pi, const EquationSystem& sys,
                                   Execution execution) {
  sys.validate();
  const Differences diffs = equation_differences(pi, sys);
  std::size_t total = 1;
  for (const SemilinearSet& c : sys.constraints) total *= c.branches().size();

  std::vector<Attempt> attempts(total);
  std::size_t winner = total;
  if (execution == Execution::serial || total <= 1) {
    for (std::size_t k = 0; k < total; ++k) {
      attempts[k] = attempt(pi, sys, diffs, combination(k, sys));
      if (attempts[k].witness) {
        winner = k;
        break;
      }
    }
  } else {
    std::atomic<std::size_t> best{total};
    std::vector<std::exception_ptr> errors(total);
    const long long count = static_cast<long long>(total);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long k = 0; k < count; ++k) {
      const std::size_t index = static_cast<std::size_t>(k);
      if (index > best.load()) continue;
      try {
        attempts[index] = attempt(pi, sys, diffs, combination(index, sys));
        if (attempts[index].witness) {
          std::size_t current = best.load();
          while (index < current && !best.compare_exchange_weak(current, index)) {
          }
        }
      } catch (...) {
        errors[index] = std::current_exception();
      }
    }
    winner = best.load();
    for (std::size_t k = 0; k < total && k <= winner; ++k) {
      if (errors[k]) std::rethrow_exception(errors[k]);
    }
  }

  ReductionResult result;
  result.systems_attempted = winner < total ? winner + 1 : total;
  for (std::size_t k = 0; k < std::min(winner, total); ++k) {
    result.refutations.push_back(Refutation{combination(k, sys), attempts[k].modulus});
  }
  if (winner < total) {
    const Verdict check = verify_witness(pi, sys, *attempts[winner].witness);
    if (!check) throw std::logic_error("constructed witness failed verification: " + check.detail);
    result.witness = std::move(attempts[winner].witness);
  }
  return result;
}

Verdict verify_witness(const Supernatural& pi, const EquationSystem& sys, const Witness& w) {
  sys.validate();
  const std::size_t letters = sys.alphabet.size();
  if (w.images.size() != sys.variables.size()) throw InputError("witness has the wrong number of variables");
  for (const auto& image : w.images) {
    if (image.size() != letters) throw InputError("witness image does not match the alphabet");
  }
  const Differences diffs = equation_differences(pi, sys);
  for (std::size_t e = 0; e < diffs.size(); ++e) {
    for (std::size_t i = 0; i < letters; ++i) {
      Pseudonumber acc;
      for (std::size_t x = 0; x < sys.variables.size(); ++x) acc += diffs[e][x] * w.images[x][i];
      Verdict z = is_zero(pi, acc);
      if (!z) {
        z.component = e * letters + i;
        z.detail = "equation " + std::to_string(e) + " fails at letter '" + sys.alphabet[i] + "'";
        return z;
      }
    }
  }
  for (std::size_t x = 0; x < sys.variables.size(); ++x) {
    const MembershipResult m = member_of_closure(pi, w.images[x], closure(pi, sys.constraints[x]));
    if (!m) {
      Verdict v;
      v.failure = Verdict::Failure::constraint;
      v.modulus = 1;
      for (const Integer& r : m.refutations) v.modulus = lcm(v.modulus, r);
      v.component = x;
      v.detail = "value of '" + sys.variables[x] + "' lies outside the closure of its constraint";
      return v;
    }
  }
  return Verdict::yes();
}

}  // namespace profab
