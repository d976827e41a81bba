#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "profab/pseudonumber.hpp"
#include "profab/word_problem.hpp"

namespace profab {

using NatVector = std::vector<Integer>;

/// base + Σ periods_i·ℕ
struct LinearSet {
  NatVector base;
  std::vector<NatVector> periods;

  bool operator==(const LinearSet&) const = default;
};

/// Finite union of linear sets in ℕ^dim. An empty branch list is the empty set.
class SemilinearSet {
 public:
  explicit SemilinearSet(std::size_t dim, std::vector<LinearSet> branches = {});

  /// `(1,0)+(2,1)N | (0,3)+(1,1)N+(0,2)N`; bare integers stand for 1-vectors.
  /// `{}` or an empty string is the empty set (dim is then taken from the argument).
  static SemilinearSet parse(std::string_view text, std::optional<std::size_t> dim = std::nullopt);

  std::size_t dim() const { return dim_; }
  const std::vector<LinearSet>& branches() const { return branches_; }
  bool empty() const { return branches_.empty(); }

  bool operator==(const SemilinearSet&) const = default;

 private:
  std::size_t dim_;
  std::vector<LinearSet> branches_;
};

std::string to_string(const SemilinearSet& s);

/// Union of cosets base + Σ periods_i·Z_π^σ.
struct ClosedCosetUnion {
  Supernatural pi;
  std::size_t dim = 0;
  std::vector<LinearSet> branches;
};

std::string to_string(const ClosedCosetUnion& c);

ClosedCosetUnion closure(const Supernatural& pi, const SemilinearSet& s);

/// Pairwise branch sums: bases add, period lists concatenate.
SemilinearSet sum(const SemilinearSet& s, const SemilinearSet& t);
ClosedCosetUnion sum(const ClosedCosetUnion& s, const ClosedCosetUnion& t);

/// One branch with base 0 whose periods are all nonzero bases and all periods
/// of s (duplicates removed). Its closure is the closed subgroup generated by s;
/// as a subset of ℕ^dim it is generally larger than s⁺.
SemilinearSet plus_closure_generators(const SemilinearSet& s);

struct Membership {
  std::size_t branch = 0;
  std::vector<Pseudonumber> coefficients;
};

struct MembershipResult {
  std::optional<Membership> witness;
  /// One refuting modulus per branch tried without success, in branch order.
  std::vector<Integer> refutations;

  explicit operator bool() const { return witness.has_value(); }
};

/// First branch (in order) where base + B·Y = v is solvable, B having the
/// periods as columns.
MembershipResult member_of_closure(const Supernatural& pi, std::span<const Pseudonumber> v,
                                   const ClosedCosetUnion& c);

/// base + Σ y_i·periods_i
std::vector<Pseudonumber> coset_point(const LinearSet& branch, std::span<const Pseudonumber> y);

/// Checks that the witness reproduces v.
Verdict verify_membership(const Supernatural& pi, std::span<const Pseudonumber> v,
                          const ClosedCosetUnion& c, const Membership& m);

/// Points of s with every coordinate ≤ limit, by breadth-first search over period
/// combinations (at most max_points of them, ascending).
std::vector<NatVector> enumerate_points(const SemilinearSet& s, const Integer& limit,
                                        std::size_t max_points = 10000);

}  // namespace profab
