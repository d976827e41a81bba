#include "profab/intlinalg.hpp"

#include <algorithm>
#include <sstream>

#include "profab/errors.hpp"
#include "profab/word_problem.hpp"

namespace profab {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {
  if (rows == 0 || cols == 0) throw InputError("matrix dimensions must be positive");
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw InputError("matrix dimensions must be positive");
  if (data_.size() != rows * cols) throw InputError("matrix entry count does not match shape");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::parse(std::string_view text) {
  std::vector<std::vector<Integer>> rows;
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  std::stringstream rs(s);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<Integer> entries;
    std::stringstream es(row);
    std::string item;
    while (std::getline(es, item, ',')) entries.push_back(parse_integer(item));
    if (entries.empty() || row.back() == ',') throw InputError("malformed matrix row '" + row + "'");
    rows.push_back(std::move(entries));
  }
  if (rows.empty()) throw InputError("empty matrix");
  const std::size_t cols = rows.front().size();
  std::vector<Integer> flat;
  for (auto& r : rows) {
    if (r.size() != cols) throw InputError("ragged matrix: rows have different lengths");
    for (auto& e : r) flat.push_back(std::move(e));
  }
  return IntMatrix(rows.size(), cols, std::move(flat));
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += factor * (*this)(source, j);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, target) += factor * (*this)(i, source);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

Integer IntMatrix::determinant() const {
  if (rows_ != cols_) throw InputError("determinant of a non-square matrix");
  IntMatrix a = *this;
  const std::size_t n = rows_;
  Integer sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

std::vector<Integer> operator*(const IntMatrix& a, std::span<const Integer> x) {
  if (a.cols() != x.size()) throw InputError("matrix-vector shape mismatch");
  std::vector<Integer> out(a.rows(), Integer(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ';';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j).get_str();
    }
  }
  return os.str();
}

ExtendedGcd ext_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  if (old_r == 0) return {0, 0, 0};
  return {old_r, old_s, old_t};
}

SnfResult smith_normal_form(const IntMatrix& b) {
  const std::size_t rows = b.rows();
  const std::size_t cols = b.cols();
  IntMatrix d = b;
  IntMatrix left = IntMatrix::identity(rows);
  IntMatrix right = IntMatrix::identity(cols);
  std::size_t rank = 0;

  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    while (true) {
      // Pivot: least nonzero |entry| of the trailing block.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = k; i < rows; ++i) {
        for (std::size_t j = k; j < cols; ++j) {
          if (d(i, j) == 0) continue;
          if (pi == rows || mpz_cmpabs(d(i, j).get_mpz_t(), d(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) break;
      d.swap_rows(k, pi);
      left.swap_rows(k, pi);
      d.swap_cols(k, pj);
      right.swap_cols(k, pj);

      bool remainder = false;
      Integer q;
      for (std::size_t i = k + 1; i < rows; ++i) {
        mpz_tdiv_q(q.get_mpz_t(), d(i, k).get_mpz_t(), d(k, k).get_mpz_t());
        d.add_row_multiple(i, k, -q);
        left.add_row_multiple(i, k, -q);
        remainder = remainder || d(i, k) != 0;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        mpz_tdiv_q(q.get_mpz_t(), d(k, j).get_mpz_t(), d(k, k).get_mpz_t());
        d.add_col_multiple(j, k, -q);
        right.add_col_multiple(j, k, -q);
        remainder = remainder || d(k, j) != 0;
      }
      if (remainder) continue;

      // Divisibility: fold an offending row into the pivot row and repeat.
      bool folded = false;
      for (std::size_t i = k + 1; i < rows && !folded; ++i) {
        for (std::size_t j = k + 1; j < cols; ++j) {
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(k, k).get_mpz_t())) {
            d.add_row_multiple(k, i, 1);
            left.add_row_multiple(k, i, 1);
            folded = true;
            break;
          }
        }
      }
      if (folded) continue;
      if (d(k, k) < 0) {
        d.negate_row(k);
        left.negate_row(k);
      }
      rank = k + 1;
      break;
    }
    if (rank != k + 1) break;
  }
  return SnfResult{std::move(left), std::move(d), std::move(right), rank};
}

std::optional<Integer> solve_linear_congruence(const Integer& a, const Integer& b, const Integer& m) {
  if (m < 1) throw InputError("modulus must be positive");
  const Integer ar = mod(a, m);
  const Integer br = mod(b, m);
  const Integer g = gcd(ar, m);
  if (br % g != 0) return std::nullopt;
  const Integer reduced = m / g;
  const auto inv = inverse_mod(ar / g, reduced);
  return mod((br / g) * *inv, reduced);
}

std::optional<std::vector<Integer>> solve_congruences(const IntMatrix& b, std::span<const Integer> c,
                                                      const Integer& modulus) {
  if (c.size() != b.rows()) throw InputError("right-hand side length does not match matrix rows");
  if (modulus < 1) throw InputError("modulus must be positive");
  const SnfResult snf = smith_normal_form(b);
  const std::vector<Integer> transformed = snf.left * c;
  std::vector<Integer> y(b.cols(), Integer(0));
  for (std::size_t i = 0; i < b.rows(); ++i) {
    const Integer diag = i < b.cols() ? snf.diagonal(i, i) : Integer(0);
    auto yi = solve_linear_congruence(diag, transformed[i], modulus);
    if (!yi) return std::nullopt;
    if (i < b.cols()) y[i] = *yi;
  }
  std::vector<Integer> x = snf.right * std::span<const Integer>(y);
  for (Integer& xi : x) xi = mod(xi, modulus);
  return x;
}

bool solvable_single_in_zhat(const Supernatural& pi, const Integer& a, const Pseudonumber& b) {
  if (a == 0) return is_zero(pi, b).equal();
  return eval_mod(b, pi.gcd_with_integer(abs(a)), pi) == 0;
}

}  // namespace profab
