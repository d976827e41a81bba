#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "profab/intlinalg.hpp"
#include "profab/pseudonumber.hpp"
#include "profab/word_problem.hpp"

namespace profab {

/// Matrix over Z_π^σ.
class SigmaMatrix {
 public:
  SigmaMatrix(std::size_t rows, std::size_t cols);
  SigmaMatrix(std::size_t rows, std::size_t cols, std::vector<Pseudonumber> entries);
  static SigmaMatrix from_integers(const IntMatrix& m);
  /// Same layout as IntMatrix::parse, with pseudonumber entries.
  static SigmaMatrix parse(std::string_view text, const Supernatural& pi);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Pseudonumber& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Pseudonumber& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Pseudonumber> data_;
};

std::vector<Pseudonumber> operator*(const SigmaMatrix& a, std::span<const Pseudonumber> x);

/// Either a value over Z_π^σ or a modulus n | π such that the problem has no
/// solution already in Z/n.
template <class T>
struct Solved {
  std::optional<T> value;
  Integer refuting_modulus = 0;

  explicit operator bool() const { return value.has_value(); }
  static Solved refuted(Integer modulus) { return Solved{std::nullopt, std::move(modulus)}; }
};

/// Solves u·x = v over Z_π^σ whenever it is solvable in Ẑ_π.
///
/// The finite part (primes of the clearing factors and of c_u·u with finite
/// positive exponent) is a congruence modulo M; the complementary part uses
/// x₂ = c_u·k·(c_u u/d)^(ω-1)·(c_u c_v)^(ω-1), and the two are glued as
/// x₁ + P^ω·(x₂ - x₁) with P the product of those primes.
Solved<Pseudonumber> solve_single(const Supernatural& pi, const Pseudonumber& u,
                                  const Pseudonumber& v);

/// Solves B·X = C over Z_π^σ whenever it is solvable in Ẑ_π, by clearing B
/// to an integer matrix, diagonalizing it and gluing a congruence solution
/// on the finite part.
Solved<std::vector<Pseudonumber>> solve_system(const Supernatural& pi, const SigmaMatrix& b,
                                               std::span<const Pseudonumber> c);

/// Checks B·W = C componentwise in Ab_π.
Verdict verify_solution(const Supernatural& pi, const SigmaMatrix& b,
                        std::span<const Pseudonumber> c, std::span<const Pseudonumber> w);

}  // namespace profab
