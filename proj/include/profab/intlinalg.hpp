#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "profab/integer.hpp"
#include "profab/pseudonumber.hpp"

namespace profab {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  static IntMatrix identity(std::size_t n);
  /// `2,4;6,8`: rows separated by ';', entries by ','.
  static IntMatrix parse(std::string_view text);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t i);

  /// Exact determinant (fraction-free Bareiss elimination); square only.
  Integer determinant() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  bool operator==(const IntMatrix& other) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> data_;
};

std::vector<Integer> operator*(const IntMatrix& a, std::span<const Integer> x);

struct ExtendedGcd {
  Integer g;  ///< gcd(a, b) >= 0
  Integer s;
  Integer t;  ///< s·a + t·b = g
};

ExtendedGcd ext_gcd(const Integer& a, const Integer& b);

/// L · B · R = D with L, R unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SnfResult {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
  std::size_t rank = 0;
};

/// Deterministic: the pivot is always the entry of least nonzero absolute
/// value (first in row-major order on ties).
SnfResult smith_normal_form(const IntMatrix& b);

/// x in [0, m) with a·x = b (mod m), if any.
std::optional<Integer> solve_linear_congruence(const Integer& a, const Integer& b, const Integer& m);

/// X in [0, M)^t with B·X = C (mod M), or nullopt when the system has no
/// solution.
std::optional<std::vector<Integer>> solve_congruences(const IntMatrix& b, std::span<const Integer> c,
                                                      const Integer& modulus);

/// Whether a·x = b has a solution in Ẑ_π: for a ≠ 0, iff b vanishes modulo
/// gcd(a, π); for a = 0, iff b = 0 in Ab_π.
bool solvable_single_in_zhat(const Supernatural& pi, const Integer& a, const Pseudonumber& b);

}  // namespace profab
