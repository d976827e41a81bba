#include "profab/solver.hpp"

#include <sstream>

#include "profab/errors.hpp"

namespace profab {

SigmaMatrix::SigmaMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw InputError("matrix dimensions must be positive");
}

SigmaMatrix::SigmaMatrix(std::size_t rows, std::size_t cols, std::vector<Pseudonumber> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw InputError("matrix dimensions must be positive");
  if (data_.size() != rows * cols) throw InputError("matrix entry count does not match shape");
}

SigmaMatrix SigmaMatrix::from_integers(const IntMatrix& m) {
  SigmaMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Pseudonumber(m(i, j));
  }
  return out;
}

SigmaMatrix SigmaMatrix::parse(std::string_view text, const Supernatural& pi) {
  std::vector<Pseudonumber> entries;
  std::size_t rows = 0, cols = 0;
  std::stringstream rs{std::string(text)};
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::stringstream es(row);
    std::string item;
    std::size_t count = 0;
    while (std::getline(es, item, ',')) {
      entries.push_back(parse_pseudonumber(item, pi));
      ++count;
    }
    if (count == 0) throw InputError("empty matrix row");
    if (rows == 0) cols = count;
    if (count != cols) throw InputError("ragged matrix: rows have different lengths");
    ++rows;
  }
  if (rows == 0) throw InputError("empty matrix");
  return SigmaMatrix(rows, cols, std::move(entries));
}

std::vector<Pseudonumber> operator*(const SigmaMatrix& a, std::span<const Pseudonumber> x) {
  if (a.cols() != x.size()) throw InputError("matrix-vector shape mismatch");
  std::vector<Pseudonumber> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  }
  return out;
}

namespace {

using PrimeCaps = std::vector<std::pair<Prime, std::uint32_t>>;

PrimeCaps caps_of(const Supernatural& pi, const std::vector<Prime>& primes) {
  PrimeCaps caps;
  for (Prime p : primes) caps.emplace_back(p, pi.exponent_of(p).value());
  return caps;
}

// Smallest p^e (e ≤ cap) at which `solvable` fails. The caller guarantees a
// failure modulo ∏ p^cap, hence at some p^cap by CRT.
template <class Solvable>
Integer smallest_refuting_power(const PrimeCaps& caps, Solvable&& solvable) {
  Integer best = 0;
  for (const auto& [p, cap] : caps) {
    Integer q = 1;
    for (std::uint32_t e = 1; e <= cap; ++e) {
      q *= static_cast<unsigned long>(p);
      if (best != 0 && q >= best) break;
      if (!solvable(q)) {
        best = q;
        break;
      }
    }
  }
  if (best == 0) throw std::logic_error("no refuting prime power found");
  return best;
}

// Small n | d with n ∤ b, given d ∤ b.
Integer smallest_nondividing_divisor(const Integer& d, const Integer& b) {
  Integer rest = d;
  Integer best = 0;
  auto consider = [&](const Integer& q) {
    const unsigned long e = valuation(rest, q);
    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), pow(q, e).get_mpz_t());
    const unsigned long vb = b == 0 ? e : (b % q == 0 ? valuation(b, q) : 0);
    if (vb < e) {
      const Integer candidate = pow(q, vb + 1);
      if (best == 0 || candidate < best) best = candidate;
    }
  };
  for (unsigned long q = 2; q < 100000 && rest > 1; ++q) {
    if (rest % q == 0) consider(Integer(q));
  }
  if (best == 0) best = rest;  // the untested cofactor must be the culprit
  return best;
}

bool single_solvable_mod(const Pseudonumber& u, const Pseudonumber& v, const Integer& n) {
  return solve_linear_congruence(reduce_mod(u, n), reduce_mod(v, n), n).has_value();
}

bool system_solvable_mod(const SigmaMatrix& b, std::span<const Pseudonumber> c, const Integer& n) {
  IntMatrix reduced(b.rows(), b.cols());
  std::vector<Integer> rhs(c.size());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) reduced(i, j) = reduce_mod(b(i, j), n);
    rhs[i] = reduce_mod(c[i], n);
  }
  return solve_congruences(reduced, rhs, n).has_value();
}

std::optional<std::vector<Integer>> solve_reduced(const SigmaMatrix& b,
                                                  std::span<const Pseudonumber> c,
                                                  const Integer& n) {
  IntMatrix reduced(b.rows(), b.cols());
  std::vector<Integer> rhs(c.size());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) reduced(i, j) = reduce_mod(b(i, j), n);
    rhs[i] = reduce_mod(c[i], n);
  }
  return solve_congruences(reduced, rhs, n);
}

Integer radical_of(const std::vector<Prime>& primes) {
  Integer p = 1;
  for (Prime q : primes) p *= static_cast<unsigned long>(q);
  return p;
}

}  // namespace

Solved<Pseudonumber> solve_single(const Supernatural& pi, const Pseudonumber& u,
                                  const Pseudonumber& v) {
  require_ambient(u, pi);
  require_ambient(v, pi);
  using Result = Solved<Pseudonumber>;

  if (is_zero(pi, u)) {
    const Verdict vz = is_zero(pi, v);
    if (vz) return Result{Pseudonumber(0)};
    return Result::refuted(vz.modulus);
  }

  if (pi.is_finite()) {
    const Integer n = pi.value();
    if (auto x = solve_linear_congruence(reduce_mod(u, n), reduce_mod(v, n), n)) {
      return Result{Pseudonumber(*x)};
    }
    return Result::refuted(smallest_refuting_power(
        pi.finite_support(), [&](const Integer& q) { return single_solvable_mod(u, v, q); }));
  }

  const ClearingFactor cu = clearing_factor(pi, u);
  const ClearingFactor cv = clearing_factor(pi, v);
  const Integer c = cu.factor * cv.factor;
  const std::vector<Prime> primes =
      pi.finite_primes_dividing(cu.value == 0 ? c : Integer(c * cu.value));
  const auto [m, rest] = pi.split(primes);

  Integer x1 = 0;
  if (m > 1) {
    auto sol = solve_linear_congruence(reduce_mod(u, m), reduce_mod(v, m), m);
    if (!sol) {
      return Result::refuted(smallest_refuting_power(
          caps_of(pi, primes), [&](const Integer& q) { return single_solvable_mod(u, v, q); }));
    }
    x1 = *sol;
  }

  // π' side, where c is a unit: u·x = v iff (c_v·val_u)·x = c_u·val_v.
  const Integer target = cu.factor * cv.value;
  Pseudonumber x2;
  if (cu.value == 0) {
    if (target != 0) return Result::refuted(infinite_witness(rest, target));
  } else {
    const Integer d = rest.gcd_with_integer(abs(cu.value));
    if (target % d != 0) return Result::refuted(smallest_nondividing_divisor(d, target));
    const Integer k = target / d;
    const Integer unit = cu.value / d;
    Pseudonumber unit_inv = abs(unit) == 1 ? Pseudonumber(1)
                                            : Pseudonumber::omega_power(pi, abs(unit), 1);
    if (unit < 0) unit_inv = -unit_inv;
    const Pseudonumber c_inv = c == 1 ? Pseudonumber(1) : Pseudonumber::omega_power(pi, c, 1);
    x2 = Pseudonumber(Integer(cu.factor * k)) * unit_inv * c_inv;
  }

  if (primes.empty()) return Result{x2};
  const Pseudonumber x1p(x1);
  return Result{x1p + Pseudonumber::omega(pi, radical_of(primes)) * (x2 - x1p)};
}

Solved<std::vector<Pseudonumber>> solve_system(const Supernatural& pi, const SigmaMatrix& b,
                                               std::span<const Pseudonumber> c) {
  using Result = Solved<std::vector<Pseudonumber>>;
  const std::size_t rows = b.rows();
  const std::size_t cols = b.cols();
  if (c.size() != rows) throw InputError("right-hand side length does not match matrix rows");
  for (std::size_t i = 0; i < rows; ++i) {
    require_ambient(c[i], pi);
    for (std::size_t j = 0; j < cols; ++j) require_ambient(b(i, j), pi);
  }

  if (pi.is_finite()) {
    const Integer n = pi.value();
    if (auto x = solve_reduced(b, c, n)) {
      return Result{std::vector<Pseudonumber>(x->begin(), x->end())};
    }
    return Result::refuted(smallest_refuting_power(
        pi.finite_support(), [&](const Integer& q) { return system_solvable_mod(b, c, q); }));
  }

  // Clear B to an integer matrix with one global factor.
  std::vector<ClearingFactor> factors;
  factors.reserve(rows * cols);
  Integer global = 1;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      factors.push_back(clearing_factor(pi, b(i, j)));
      global = lcm(global, factors.back().factor);
    }
  }
  IntMatrix cleared(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const ClearingFactor& f = factors[i * cols + j];
      cleared(i, j) = (global / f.factor) * f.value;
    }
  }

  const SnfResult snf = smith_normal_form(cleared);
  const Pseudonumber scale(global);
  std::vector<Pseudonumber> rhs(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < rows; ++j) {
      if (snf.left(i, j) != 0) rhs[i] += Pseudonumber(snf.left(i, j)) * scale * c[j];
    }
  }

  std::vector<Pseudonumber> y(cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (i < cols && snf.diagonal(i, i) != 0) {
      auto yi = solve_single(pi, Pseudonumber(snf.diagonal(i, i)), rhs[i]);
      if (!yi) return Result::refuted(yi.refuting_modulus);
      y[i] = std::move(*yi.value);
    } else {
      const Verdict zero = is_zero(pi, rhs[i]);
      if (!zero) return Result::refuted(zero.modulus);
    }
  }

  const Pseudonumber global_omega = Pseudonumber::omega(pi, global);
  std::vector<Pseudonumber> x1(cols);
  for (std::size_t i = 0; i < cols; ++i) {
    Pseudonumber acc;
    for (std::size_t j = 0; j < cols; ++j) {
      if (snf.right(i, j) != 0) acc += Pseudonumber(snf.right(i, j)) * y[j];
    }
    x1[i] = global_omega * acc;
  }

  const std::vector<Prime> primes = pi.finite_primes_dividing(global);
  if (primes.empty()) return Result{std::move(x1)};
  const auto [m, rest] = pi.split(primes);
  auto x2 = solve_reduced(b, c, m);
  if (!x2) {
    return Result::refuted(smallest_refuting_power(
        caps_of(pi, primes), [&](const Integer& q) { return system_solvable_mod(b, c, q); }));
  }
  const Pseudonumber glue = Pseudonumber::omega(pi, radical_of(primes));
  std::vector<Pseudonumber> w(cols);
  for (std::size_t i = 0; i < cols; ++i) {
    const Pseudonumber base((*x2)[i]);
    w[i] = base + glue * (x1[i] - base);
  }
  return Result{std::move(w)};
}

Verdict verify_solution(const Supernatural& pi, const SigmaMatrix& b,
                        std::span<const Pseudonumber> c, std::span<const Pseudonumber> w) {
  if (c.size() != b.rows() || w.size() != b.cols()) {
    throw InputError("verify_solution: shape mismatch");
  }
  const std::vector<Pseudonumber> lhs = b * w;
  return equal_vectors(pi, lhs, c);
}

}  // namespace profab
