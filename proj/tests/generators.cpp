#include "generators.hpp"

namespace gen {

using profab::Exponent;
using profab::Prime;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Supernatural random_pi(Rng& rng) {
  const Supernatural::Default fallback =
      uniform(rng, 0, 3) == 0 ? Supernatural::Default::infinity : Supernatural::Default::zero;
  std::map<Prime, Exponent> table;
  for (Prime p : {2, 3, 5, 7}) {
    const long roll = uniform(rng, 0, 5);
    if (roll == 5) continue;
    table.emplace(p, roll == 4 ? Exponent::infinite() : Exponent::finite(static_cast<std::uint32_t>(roll)));
  }
  return Supernatural(std::move(table), fallback);
}

Supernatural random_infinite_pi(Rng& rng) {
  while (true) {
    Supernatural pi = random_pi(rng);
    if (!pi.is_finite()) return pi;
  }
}

std::vector<Integer> admitted_bases(const Supernatural& pi, long max_base) {
  std::vector<Integer> out;
  for (long n = 2; n <= max_base; ++n) {
    if (pi.admits_base(Integer(n))) out.emplace_back(n);
  }
  return out;
}

Pseudonumber random_pseudonumber(Rng& rng, const Supernatural& pi, int max_terms, long max_base,
                                 long max_coeff, std::uint32_t max_offset) {
  const std::vector<Integer> bases = admitted_bases(pi, max_base);
  Pseudonumber u(Integer(uniform(rng, -max_coeff, max_coeff)));
  if (bases.empty()) return u;
  const long terms = uniform(rng, 0, max_terms);
  for (long t = 0; t < terms; ++t) {
    const Integer& b = bases[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(bases.size()) - 1))];
    const auto k = static_cast<std::uint32_t>(uniform(rng, 1, max_offset));
    long c = 0;
    while (c == 0) c = uniform(rng, -max_coeff, max_coeff);
    u += Pseudonumber(Integer(c)) * Pseudonumber::omega_power(pi, b, k);
  }
  return u;
}

Pseudonumber random_zero(Rng& rng, const Supernatural& pi) {
  const std::vector<Integer> bases = admitted_bases(pi, 30);
  if (bases.empty()) return Pseudonumber(0);
  const Integer& b = bases[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(bases.size()) - 1))];
  switch (uniform(rng, 0, 2)) {
    case 0: {
      // n^(ω-k)·n^k = n^ω, and n^ω·n^ω = n^ω
      const auto k = static_cast<std::uint32_t>(uniform(rng, 1, 3));
      const Pseudonumber w = Pseudonumber::omega_power(pi, b, k) * Pseudonumber(profab::pow(b, k));
      return w * w - w;
    }
    case 1: {
      // p^(ω+m) = p^m for a prime with finite exponent m
      std::vector<std::pair<Prime, std::uint32_t>> finite;
      for (Prime p : {2, 3, 5, 7, 11}) {
        if (pi.in_P(p)) finite.emplace_back(p, pi.exponent_of(p).value());
      }
      const auto [p, m] = finite[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(finite.size()) - 1))];
      const Integer pp(static_cast<unsigned long>(p));
      return Pseudonumber::omega_power(pi, pp, 1) * Pseudonumber(profab::pow(pp, m + 1)) -
             Pseudonumber(profab::pow(pp, m));
    }
    default: {
      // n^(ω-1)·n^(ω-1) = n^(ω-2)
      return Pseudonumber::omega_power(pi, b, 1) * Pseudonumber::omega_power(pi, b, 1) -
             Pseudonumber::omega_power(pi, b, 2);
    }
  }
}

profab::IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  profab::IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, -bound, bound);
  }
  return m;
}

profab::SemilinearSet random_semilinear(Rng& rng, std::size_t dim, int max_branches, int max_periods,
                                        long max_entry) {
  std::vector<profab::LinearSet> branches;
  const long count = uniform(rng, 1, max_branches);
  for (long b = 0; b < count; ++b) {
    profab::LinearSet l;
    for (std::size_t i = 0; i < dim; ++i) l.base.emplace_back(uniform(rng, 0, max_entry));
    const long periods = uniform(rng, 0, max_periods);
    for (long p = 0; p < periods; ++p) {
      profab::NatVector v;
      bool nonzero = false;
      for (std::size_t i = 0; i < dim; ++i) {
        v.emplace_back(uniform(rng, 0, max_entry));
        nonzero = nonzero || v.back() != 0;
      }
      if (!nonzero) v[0] = 1;
      l.periods.push_back(std::move(v));
    }
    branches.push_back(std::move(l));
  }
  return profab::SemilinearSet(dim, std::move(branches));
}

std::vector<Integer> moduli(const Supernatural& pi, long bound, std::size_t count, std::uint64_t seed) {
  return profab::divisor_sample(pi, Integer(bound), count, seed);
}

}  // namespace gen

#include "systems.hpp"

namespace gen {

namespace {

std::string random_term_text(Rng& rng, const std::vector<std::string>& vars, const Supernatural& pi,
                             int depth) {
  const long roll = depth <= 0 ? 0 : uniform(rng, 0, 5);
  const std::string& x = vars[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(vars.size()) - 1))];
  switch (roll) {
    case 0:
    case 1:
      return x;
    case 2:
    case 3:
      return random_term_text(rng, vars, pi, depth - 1) + "*" + random_term_text(rng, vars, pi, depth - 1);
    case 4:
      return "(" + random_term_text(rng, vars, pi, depth - 1) + ")^(w-1)";
    default: {
      std::vector<Prime> primes;
      for (Prime p : {2, 3, 5}) {
        if (pi.in_P(p)) primes.push_back(p);
      }
      if (primes.empty()) return x;
      const Prime p = primes[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(primes.size()) - 1))];
      return "(" + random_term_text(rng, vars, pi, depth - 1) + ")^(" + std::to_string(p) + "^(w-1))";
    }
  }
}

}  // namespace

profab::SystemDocument random_system(Rng& rng) {
  profab::SystemDocument doc{random_pi(rng), {}};
  profab::EquationSystem& sys = doc.system;
  const long letters = uniform(rng, 1, 2);
  for (long i = 0; i < letters; ++i) sys.alphabet.push_back(std::string(1, static_cast<char>('a' + i)));
  const long vars = uniform(rng, 1, 3);
  for (long i = 0; i < vars; ++i) sys.variables.push_back(std::string(1, static_cast<char>('x' + i)));
  const long equations = uniform(rng, 1, 2);
  for (long e = 0; e < equations; ++e) {
    const std::string text = random_term_text(rng, sys.variables, doc.pi, 2) + " = " +
                             random_term_text(rng, sys.variables, doc.pi, 2);
    sys.equations.push_back(profab::parse_equation(text, sys.variables));
  }
  for (long x = 0; x < vars; ++x) {
    sys.constraints.push_back(random_semilinear(rng, static_cast<std::size_t>(letters), 2, 1, 3));
  }
  return doc;
}

}  // namespace gen
