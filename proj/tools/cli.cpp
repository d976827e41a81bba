#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "profab/errors.hpp"
#include "profab/oracle.hpp"
#include "profab/reducibility.hpp"
#include "profab/semilinear.hpp"
#include "profab/solver.hpp"
#include "profab/word_problem.hpp"

namespace profab::cli {

namespace {

using nlohmann::json;

constexpr int yes = 0;
constexpr int no = 1;
constexpr int failure = 2;

struct Options {
  std::string format = "text";
  std::uint64_t seed = 1;
  bool json() const { return format == "json"; }
};

std::string slurp(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string read_document(const std::string& file, std::istream& in) {
  if (file.empty() || file == "-") return slurp(in);
  std::ifstream f(file);
  if (!f) throw InputError("cannot open '" + file + "'");
  return slurp(f);
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::vector<Pseudonumber> parse_vector(const std::string& text, const Supernatural& pi) {
  std::vector<Pseudonumber> out;
  for (const std::string& item : split_list(text, ',')) out.push_back(parse_pseudonumber(item, pi));
  if (out.empty()) throw InputError("empty vector");
  return out;
}

std::string entry_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InputError("matrix entries must be strings or integers");
}

json strings(std::span<const Pseudonumber> v) {
  json out = json::array();
  for (const Pseudonumber& x : v) out.push_back(to_string(x));
  return out;
}

std::string joined(std::span<const Pseudonumber> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

int report_verdict(const Verdict& v, const Options& opt, std::ostream& out) {
  if (opt.json()) {
    json j;
    if (v) {
      j["verdict"] = "equal";
    } else {
      j["verdict"] = "not_equal";
      j["modulus"] = to_string(v.modulus);
      j["residue_u"] = to_string(v.residue_u);
      j["residue_v"] = to_string(v.residue_v);
      if (v.component) j["component"] = *v.component;
    }
    out << j.dump() << "\n";
  } else if (v) {
    out << "equal\n";
  } else {
    out << "not equal: modulo " << v.modulus << " the sides are " << v.residue_u << " and "
        << v.residue_v;
    if (v.component) out << " (component " << *v.component << ")";
    out << "\n";
  }
  return v ? yes : no;
}

int report_solution(const Solved<std::vector<Pseudonumber>>& s, const Options& opt,
                    std::ostream& out) {
  if (opt.json()) {
    json j;
    if (s) {
      j["verdict"] = "solvable";
      j["solution"] = strings(*s.value);
    } else {
      j["verdict"] = "unsolvable";
      j["modulus"] = to_string(s.refuting_modulus);
    }
    out << j.dump() << "\n";
  } else if (s) {
    out << "solvable\n";
    for (std::size_t i = 0; i < s.value->size(); ++i) {
      out << "x" << i + 1 << " = " << to_string((*s.value)[i]) << "\n";
    }
  } else {
    out << "unsolvable: no solution modulo " << s.refuting_modulus << "\n";
  }
  return s ? yes : no;
}

std::string branch_list(const EquationSystem& sys, std::span<const std::size_t> branches) {
  std::string out;
  for (std::size_t x = 0; x < branches.size(); ++x) {
    if (x) out += ", ";
    out += sys.variables[x] + ":" + std::to_string(branches[x]);
  }
  return out;
}

int report_reduction(const EquationSystem& sys, const ReductionResult& r, const Options& opt,
                     std::ostream& out) {
  if (opt.json()) {
    json j;
    j["systems_attempted"] = r.systems_attempted;
    json refutations = json::array();
    for (const Refutation& f : r.refutations) {
      refutations.push_back({{"branches", f.branches}, {"modulus", to_string(f.modulus)}});
    }
    j["refutations"] = refutations;
    if (r) {
      j["verdict"] = "solvable";
      json witness = json::object();
      for (std::size_t x = 0; x < sys.variables.size(); ++x) {
        witness[sys.variables[x]] = {{"image", strings(r.witness->images[x])},
                                     {"branch", r.witness->branches[x]},
                                     {"coefficients", strings(r.witness->coefficients[x])}};
      }
      j["witness"] = witness;
    } else {
      j["verdict"] = "unsolvable";
      j["modulus"] = to_string(r.combined_modulus());
    }
    out << j.dump() << "\n";
  } else if (r) {
    out << "solvable (branches " << branch_list(sys, r.witness->branches) << ")\n";
    for (std::size_t x = 0; x < sys.variables.size(); ++x) {
      out << sys.variables[x] << " = " << joined(r.witness->images[x]) << "\n";
    }
  } else {
    out << "unsolvable: no solution modulo " << r.combined_modulus() << "\n";
    for (const Refutation& f : r.refutations) {
      out << "  branches " << branch_list(sys, f.branches) << ": modulo " << f.modulus << "\n";
    }
  }
  return r ? yes : no;
}

std::string assignment_text(const EquationSystem& sys, const oracle::Assignment& a) {
  std::string out;
  for (std::size_t x = 0; x < a.size(); ++x) {
    out += sys.variables[x] + " = (";
    for (std::size_t i = 0; i < a[x].size(); ++i) {
      if (i) out += ", ";
      out += to_string(a[x][i]);
    }
    out += ")\n";
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decision procedures for free profinite abelian groups", "profab"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "Seed for oracle sampling")->capture_default_str();

  std::string pi_text;
  std::function<int()> action;

  auto* decide = app.add_subcommand("decide", "Decide u = v in Ab_pi")->fallthrough();
  std::string u_text, v_text;
  decide->add_option("--pi", pi_text, "Supernatural number")->required();
  decide->add_option("u", u_text)->required();
  decide->add_option("v", v_text)->required();
  decide->callback([&] {
    action = [&] {
      const Supernatural pi = Supernatural::parse(pi_text);
      return report_verdict(equal_in_ab(pi, parse_pseudonumber(u_text, pi), parse_pseudonumber(v_text, pi)),
                            opt, out);
    };
  });

  auto* solve = app.add_subcommand("solve", "Solve B·X = C over Z_pi^sigma")->fallthrough();
  std::string matrix_text, rhs_text, file;
  solve->add_option("--pi", pi_text, "Supernatural number");
  solve->add_option("--matrix", matrix_text, "Rows separated by ';', entries by ','");
  solve->add_option("--rhs", rhs_text, "Right-hand side, entries separated by ','");
  solve->add_option("--file", file, "JSON document with pi, matrix, rhs ('-' for stdin)");
  solve->callback([&] {
    action = [&] {
      std::string pi_source = pi_text;
      std::optional<SigmaMatrix> b;
      std::vector<Pseudonumber> c;
      if (matrix_text.empty()) {
        const json doc = json::parse(read_document(file, in));
        if (!doc.contains("pi") && pi_source.empty()) throw InputError("document lacks 'pi'");
        if (doc.contains("pi")) pi_source = doc.at("pi").get<std::string>();
        const Supernatural pi = Supernatural::parse(pi_source);
        const json& rows = doc.at("matrix");
        if (!rows.is_array() || rows.empty()) throw InputError("'matrix' must be a nonempty array of rows");
        std::vector<Pseudonumber> entries;
        const std::size_t cols = rows.at(0).size();
        for (const json& row : rows) {
          if (!row.is_array() || row.size() != cols || cols == 0) throw InputError("ragged or empty matrix");
          for (const json& e : row) entries.push_back(parse_pseudonumber(entry_text(e), pi));
        }
        b.emplace(rows.size(), cols, std::move(entries));
        for (const json& e : doc.at("rhs")) c.push_back(parse_pseudonumber(entry_text(e), pi));
        return report_solution(solve_system(pi, *b, c), opt, out);
      }
      if (pi_source.empty()) throw InputError("--pi is required with --matrix");
      if (rhs_text.empty()) throw InputError("--rhs is required with --matrix");
      const Supernatural pi = Supernatural::parse(pi_source);
      b.emplace(SigmaMatrix::parse(matrix_text, pi));
      c = parse_vector(rhs_text, pi);
      return report_solution(solve_system(pi, *b, c), opt, out);
    };
  });

  auto* closure_cmd = app.add_subcommand("closure", "Sigma-closure of a semilinear set")->fallthrough();
  std::string set_text, other_text;
  bool plus = false;
  closure_cmd->add_option("--pi", pi_text, "Supernatural number")->required();
  closure_cmd->add_option("--set", set_text, "Semilinear set, e.g. '(1,0)+(2,1)N | (0,3)'")->required();
  closure_cmd->add_option("--sum", other_text, "Add a second semilinear set before closing");
  closure_cmd->add_flag("--plus", plus, "Close the semigroup generated by the set");
  closure_cmd->callback([&] {
    action = [&] {
      const Supernatural pi = Supernatural::parse(pi_text);
      SemilinearSet s = SemilinearSet::parse(set_text);
      if (!other_text.empty()) s = sum(s, SemilinearSet::parse(other_text, s.dim()));
      if (plus) s = plus_closure_generators(s);
      const ClosedCosetUnion c = closure(pi, s);
      if (opt.json()) {
        json branches = json::array();
        for (const LinearSet& b : c.branches) branches.push_back({{"base", [&] {
                                                                     json v = json::array();
                                                                     for (const Integer& x : b.base) v.push_back(to_string(x));
                                                                     return v;
                                                                   }()},
                                                                  {"periods", [&] {
                                                                     json ps = json::array();
                                                                     for (const NatVector& p : b.periods) {
                                                                       json v = json::array();
                                                                       for (const Integer& x : p) v.push_back(to_string(x));
                                                                       ps.push_back(v);
                                                                     }
                                                                     return ps;
                                                                   }()}});
        out << json{{"pi", pi.to_string()}, {"closure", to_string(c)}, {"branches", branches}}.dump() << "\n";
      } else {
        out << to_string(c) << "\n";
      }
      return yes;
    };
  });

  auto* member = app.add_subcommand("member", "Membership in the closure of a semilinear set")->fallthrough();
  std::string vector_text;
  member->add_option("--pi", pi_text, "Supernatural number")->required();
  member->add_option("--set", set_text, "Semilinear set")->required();
  member->add_option("--vector", vector_text, "Pseudonumber vector, entries separated by ','")->required();
  member->callback([&] {
    action = [&] {
      const Supernatural pi = Supernatural::parse(pi_text);
      const std::vector<Pseudonumber> v = parse_vector(vector_text, pi);
      const SemilinearSet s = SemilinearSet::parse(set_text, v.size());
      const MembershipResult m = member_of_closure(pi, v, closure(pi, s));
      if (opt.json()) {
        json j;
        j["verdict"] = m ? "member" : "not_member";
        if (m) {
          j["branch"] = m.witness->branch;
          j["coefficients"] = strings(m.witness->coefficients);
        }
        json refutations = json::array();
        for (const Integer& r : m.refutations) refutations.push_back(to_string(r));
        j["refutations"] = refutations;
        out << j.dump() << "\n";
      } else if (m) {
        out << "member: branch " << m.witness->branch << ", coefficients "
            << joined(m.witness->coefficients) << "\n";
      } else {
        out << "not a member\n";
        for (std::size_t b = 0; b < m.refutations.size(); ++b) {
          out << "  branch " << b << ": excluded modulo " << m.refutations[b] << "\n";
        }
      }
      return m ? yes : no;
    };
  });

  auto* reduce = app.add_subcommand("reduce", "Decide a constrained system of sigma-term equations")->fallthrough();
  reduce->add_option("--file", file, "System document ('-' or omitted for stdin)");
  bool serial = false;
  reduce->add_flag("--serial", serial, "Try branch combinations on one thread");
  reduce->callback([&] {
    action = [&] {
      const SystemDocument doc = parse_system_document(read_document(file, in));
      const ReductionResult r =
          decide_and_witness(doc.pi, doc.system, serial ? Execution::serial : Execution::parallel);
      return report_reduction(doc.system, r, opt, out);
    };
  });

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force evaluation in finite quotients")->fallthrough();
  oracle_cmd->require_subcommand(1);
  std::string modulus_text, vars_text, assign_text, term_text, bound_text = "1000";
  std::size_t count = 8;

  auto* o_eval = oracle_cmd->add_subcommand("eval", "Residue of a pseudonumber modulo n")->fallthrough();
  o_eval->add_option("--pi", pi_text, "Supernatural number")->required();
  o_eval->add_option("--modulus", modulus_text, "Modulus dividing pi")->required();
  o_eval->add_option("u", u_text)->required();
  o_eval->callback([&] {
    action = [&] {
      const Supernatural pi = Supernatural::parse(pi_text);
      const Integer n = parse_integer(modulus_text);
      if (!divides(n, pi)) throw InputError("modulus does not divide pi");
      const Integer r = oracle::pseudonumber_mod(parse_pseudonumber(u_text, pi), n);
      if (opt.json()) {
        out << json{{"modulus", to_string(n)}, {"residue", to_string(r)}}.dump() << "\n";
      } else {
        out << r << "\n";
      }
      return yes;
    };
  });

  auto* o_term = oracle_cmd->add_subcommand("term", "Value of a sigma-term in Z/n")->fallthrough();
  o_term->add_option("--pi", pi_text, "Supernatural number (default: all exponents infinite)");
  o_term->add_option("--modulus", modulus_text, "Modulus dividing pi")->required();
  o_term->add_option("--vars", vars_text, "Variable names separated by ','")->required();
  o_term->add_option("--assign", assign_text, "Residues for the variables, separated by ','")->required();
  o_term->add_option("term", term_text)->required();
  o_term->callback([&] {
    action = [&] {
      const Supernatural pi = pi_text.empty() ? Supernatural::all_infinite() : Supernatural::parse(pi_text);
      const std::vector<std::string> vars = split_list(vars_text, ',');
      std::vector<Integer> values;
      for (const std::string& a : split_list(assign_text, ',')) values.push_back(parse_integer(a));
      if (values.size() != vars.size()) throw InputError("one residue per variable expected");
      const Integer n = parse_integer(modulus_text);
      const Integer r = oracle::eval_term_mod(parse_term(term_text, vars), values, n, pi);
      if (opt.json()) {
        out << json{{"modulus", to_string(n)}, {"value", to_string(r)}}.dump() << "\n";
      } else {
        out << r << "\n";
      }
      return yes;
    };
  });

  auto* o_search = oracle_cmd->add_subcommand("search", "Exhaustive search of a system in Z/n")->fallthrough();
  o_search->add_option("--modulus", modulus_text, "Modulus dividing pi")->required();
  o_search->add_option("--file", file, "System document ('-' or omitted for stdin)");
  o_search->callback([&] {
    action = [&] {
      const SystemDocument doc = parse_system_document(read_document(file, in));
      const Integer n = parse_integer(modulus_text);
      const auto found = oracle::search_quotient(doc.system, n, doc.pi);
      if (opt.json()) {
        json j;
        j["verdict"] = found ? "found" : "none";
        if (found) {
          json a = json::object();
          for (std::size_t x = 0; x < found->size(); ++x) {
            json v = json::array();
            for (const Integer& r : (*found)[x]) v.push_back(to_string(r));
            a[doc.system.variables[x]] = v;
          }
          j["assignment"] = a;
        }
        out << j.dump() << "\n";
      } else if (found) {
        out << "solution modulo " << n << "\n" << assignment_text(doc.system, *found);
      } else {
        out << "no solution modulo " << n << "\n";
      }
      return found ? yes : no;
    };
  });

  auto* o_div = oracle_cmd->add_subcommand("divisors", "Sample divisors of pi up to a bound")->fallthrough();
  o_div->add_option("--pi", pi_text, "Supernatural number")->required();
  o_div->add_option("--bound", bound_text, "Largest divisor considered")->capture_default_str();
  o_div->add_option("--count", count, "Number of divisors")->capture_default_str();
  o_div->callback([&] {
    action = [&] {
      const Supernatural pi = Supernatural::parse(pi_text);
      const std::vector<Integer> ds = divisor_sample(pi, parse_integer(bound_text), count, opt.seed);
      if (opt.json()) {
        json j = json::array();
        for (const Integer& d : ds) j.push_back(to_string(d));
        out << json{{"divisors", j}}.dump() << "\n";
      } else {
        for (std::size_t i = 0; i < ds.size(); ++i) out << (i ? " " : "") << ds[i];
        out << "\n";
      }
      return yes;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? yes : failure;
  }

  try {
    if (!action) throw InputError("no command given");
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const json::exception& e) {
    err << "error: malformed document: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
  }
  return failure;
}

}  // namespace profab::cli
