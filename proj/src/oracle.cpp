#include "profab/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <set>

#include "profab/errors.hpp"

namespace profab::oracle {

namespace {

std::uint64_t small(const Integer& n, std::uint64_t limit, const char* what) {
  if (n < 1 || n > Integer(static_cast<unsigned long>(limit))) {
    throw ResourceError(std::string(what) + ": modulus out of range for brute force");
  }
  return n.get_ui();
}

// base^(ω-k) in the multiplicative monoid Z/n.
std::uint64_t omega_power_mod(std::uint64_t base, std::uint64_t k, std::uint64_t n) {
  if (n == 1) return 0;
  std::vector<std::int64_t> first(n, -1);
  std::vector<std::uint64_t> seq;
  std::uint64_t x = 1 % n;
  const std::uint64_t b = base % n;
  std::uint64_t start = 0;
  std::uint64_t period = 0;
  for (std::uint64_t j = 0;; ++j) {
    if (first[x] >= 0) {
      start = static_cast<std::uint64_t>(first[x]);
      period = j - start;
      break;
    }
    first[x] = static_cast<std::int64_t>(j);
    seq.push_back(x);
    x = x * b % n;
  }
  // Smallest j >= start with j ≡ -k (mod period).
  const std::uint64_t target = (period - k % period) % period;
  std::uint64_t j = start + ((target + period - start % period) % period);
  return seq[j];
}

std::uint64_t eval_tree(const SigmaTerm& t, std::span<const std::uint64_t> values, std::uint64_t n) {
  switch (t.kind()) {
    case SigmaTerm::Kind::var:
      return values[t.index()] % n;
    case SigmaTerm::Kind::product:
      return (eval_tree(t.left(), values, n) + eval_tree(t.right(), values, n)) % n;
    case SigmaTerm::Kind::omega_inv:
      return (n - eval_tree(t.child(), values, n)) % n;
    case SigmaTerm::Kind::prime_power: {
      const std::uint64_t x = eval_tree(t.child(), values, n);
      const std::uint64_t order = n / std::gcd(x, n);
      const std::uint64_t e = omega_power_mod(t.prime(), 1, order);
      return (e % order) * x % n;
    }
  }
  throw std::logic_error("unreachable term kind");
}

struct Search {
  const EquationSystem& sys;
  std::uint64_t n;
  std::vector<std::vector<std::vector<Integer>>> images;  // per variable
  std::size_t total = 1;

  Search(const EquationSystem& s, const Integer& modulus, const Supernatural& pi) : sys(s) {
    sys.validate();
    if (!divides(modulus, pi)) throw PreconditionError("modulus does not divide pi");
    n = small(modulus, max_modulus, "search_quotient");
    if (sys.variables.size() > max_variables) throw ResourceError("search_quotient: too many variables");
    for (const SemilinearSet& c : sys.constraints) {
      images.push_back(constraint_image(c, n));
      if (images.back().empty()) {
        total = 0;
      } else if (total > 0) {
        total *= images.back().size();
        if (total > max_assignments) throw ResourceError("search_quotient: too many assignments");
      }
    }
    for (const Equation& e : sys.equations) {
      for (const SigmaTerm* side : {&e.lhs, &e.rhs}) check_signature(*side, pi);
    }
  }

  static void check_signature(const SigmaTerm& t, const Supernatural& pi) {
    switch (t.kind()) {
      case SigmaTerm::Kind::var:
        return;
      case SigmaTerm::Kind::product:
        check_signature(t.left(), pi);
        check_signature(t.right(), pi);
        return;
      case SigmaTerm::Kind::omega_inv:
        check_signature(t.child(), pi);
        return;
      case SigmaTerm::Kind::prime_power:
        if (!pi.in_P(t.prime())) throw SignatureError("prime outside P_pi in term");
        check_signature(t.child(), pi);
        return;
    }
  }

  Assignment decode(std::size_t index) const {
    Assignment a(images.size());
    for (std::size_t x = images.size(); x-- > 0;) {
      a[x] = images[x][index % images[x].size()];
      index /= images[x].size();
    }
    return a;
  }

  bool satisfies(std::size_t index) const {
    const Assignment a = decode(index);
    std::vector<std::uint64_t> values(a.size());
    for (std::size_t i = 0; i < sys.alphabet.size(); ++i) {
      for (std::size_t x = 0; x < a.size(); ++x) values[x] = a[x][i].get_ui();
      for (const Equation& e : sys.equations) {
        if (eval_tree(e.lhs, values, n) != eval_tree(e.rhs, values, n)) return false;
      }
    }
    return true;
  }
};

}  // namespace

Integer pseudonumber_mod(const Pseudonumber& u, const Integer& n) {
  const std::uint64_t m = small(n, 10'000'000, "pseudonumber_mod");
  Integer acc = u.constant();
  for (const Term& t : u.terms()) {
    const std::uint64_t b = Integer(t.base % static_cast<unsigned long>(m)).get_ui();
    acc += t.coeff * static_cast<unsigned long>(omega_power_mod(b, t.offset, m));
  }
  return mod(acc, n);
}

Integer eval_term_mod(const SigmaTerm& t, std::span<const Integer> assignment, const Integer& n,
                      const Supernatural& pi) {
  if (!divides(n, pi)) throw PreconditionError("modulus does not divide pi");
  Search::check_signature(t, pi);
  const std::uint64_t m = small(n, 0xffffffffULL, "eval_term_mod");
  std::vector<std::uint64_t> values;
  for (const Integer& a : assignment) values.push_back(mod(a, n).get_ui());
  return Integer(static_cast<unsigned long>(eval_tree(t, values, m)));
}

std::vector<std::vector<Integer>> constraint_image(const SemilinearSet& s, std::uint64_t n) {
  std::set<std::vector<Integer>> out;
  const Integer modulus(static_cast<unsigned long>(n));
  for (const LinearSet& b : s.branches()) {
    std::vector<Integer> start(b.base.size());
    for (std::size_t i = 0; i < start.size(); ++i) start[i] = mod(b.base[i], modulus);
    std::set<std::vector<Integer>> seen{start};
    std::vector<std::vector<Integer>> frontier{start};
    while (!frontier.empty()) {
      std::vector<std::vector<Integer>> next;
      for (const auto& point : frontier) {
        for (const NatVector& p : b.periods) {
          std::vector<Integer> q(point.size());
          for (std::size_t i = 0; i < q.size(); ++i) q[i] = mod(point[i] + p[i], modulus);
          if (seen.insert(q).second) {
            if (seen.size() > max_assignments) throw ResourceError("constraint image too large");
            next.push_back(std::move(q));
          }
        }
      }
      frontier = std::move(next);
    }
    out.insert(seen.begin(), seen.end());
  }
  return {out.begin(), out.end()};
}

std::optional<Assignment> search_quotient_serial(const EquationSystem& sys, const Integer& n,
                                                 const Supernatural& pi) {
  const Search search(sys, n, pi);
  for (std::size_t k = 0; k < search.total; ++k) {
    if (search.satisfies(k)) return search.decode(k);
  }
  return std::nullopt;
}

std::optional<Assignment> search_quotient(const EquationSystem& sys, const Integer& n,
                                          const Supernatural& pi) {
  const Search search(sys, n, pi);
  std::atomic<std::size_t> best{search.total};
  const long long total = static_cast<long long>(search.total);
#pragma omp parallel for schedule(static, 256)
  for (long long k = 0; k < total; ++k) {
    const std::size_t index = static_cast<std::size_t>(k);
    if (index >= best.load(std::memory_order_relaxed)) continue;
    if (search.satisfies(index)) {
      std::size_t current = best.load();
      while (index < current && !best.compare_exchange_weak(current, index)) {
      }
    }
  }
  const std::size_t found = best.load();
  if (found == search.total) return std::nullopt;
  return search.decode(found);
}

bool congruences_solvable(const IntMatrix& b, std::span<const Integer> c, const Integer& n) {
  const std::uint64_t m = small(n, max_assignments, "congruences_solvable");
  if (c.size() != b.rows()) throw InputError("right-hand side length does not match matrix rows");
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < b.cols(); ++j) {
    total *= m;
    if (total > max_assignments) throw ResourceError("congruences_solvable: search space too large");
  }
  std::vector<std::int64_t> mat(b.rows() * b.cols());
  std::vector<std::int64_t> rhs(b.rows());
  const Integer modulus(static_cast<unsigned long>(m));
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) mat[i * b.cols() + j] = mod(b(i, j), modulus).get_si();
    rhs[i] = mod(c[i], modulus).get_si();
  }
  std::vector<std::int64_t> x(b.cols());
  const std::int64_t mm = static_cast<std::int64_t>(m);
  for (std::uint64_t k = 0; k < total; ++k) {
    std::uint64_t rest = k;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      x[j] = static_cast<std::int64_t>(rest % m);
      rest /= m;
    }
    bool ok = true;
    for (std::size_t i = 0; i < b.rows() && ok; ++i) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < b.cols(); ++j) acc = (acc + mat[i * b.cols() + j] * x[j]) % mm;
      ok = acc == rhs[i];
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace profab::oracle
