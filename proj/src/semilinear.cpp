#include "profab/semilinear.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "profab/errors.hpp"
#include "profab/solver.hpp"

namespace profab {

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }
  Integer natural() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a natural number", pos_);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }
  NatVector vector() {
    NatVector v;
    if (accept('(')) {
      v.push_back(natural());
      while (accept(',')) v.push_back(natural());
      expect(')');
    } else {
      v.push_back(natural());
    }
    return v;
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

bool is_zero_vector(const NatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

std::string vector_text(const NatVector& v) {
  if (v.size() == 1) return to_string(v[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + ")";
}

std::string branches_text(const std::vector<LinearSet>& branches, const char* ring) {
  if (branches.empty()) return "{}";
  std::string out;
  for (std::size_t b = 0; b < branches.size(); ++b) {
    if (b) out += " | ";
    out += vector_text(branches[b].base);
    for (const NatVector& p : branches[b].periods) out += " + " + vector_text(p) + ring;
  }
  return out;
}

std::vector<LinearSet> branch_sums(const std::vector<LinearSet>& s, const std::vector<LinearSet>& t) {
  std::vector<LinearSet> out;
  for (const LinearSet& a : s) {
    for (const LinearSet& b : t) {
      LinearSet c;
      c.base.resize(a.base.size());
      for (std::size_t i = 0; i < a.base.size(); ++i) c.base[i] = a.base[i] + b.base[i];
      c.periods = a.periods;
      c.periods.insert(c.periods.end(), b.periods.begin(), b.periods.end());
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace

SemilinearSet::SemilinearSet(std::size_t dim, std::vector<LinearSet> branches)
    : dim_(dim), branches_(std::move(branches)) {
  if (dim_ == 0) throw InputError("semilinear set needs a positive dimension");
  for (const LinearSet& b : branches_) {
    if (b.base.size() != dim_) throw InputError("semilinear branch has the wrong dimension");
    for (const Integer& x : b.base) {
      if (x < 0) throw InputError("semilinear vectors must be natural");
    }
    for (const NatVector& p : b.periods) {
      if (p.size() != dim_) throw InputError("semilinear period has the wrong dimension");
      for (const Integer& x : p) {
        if (x < 0) throw InputError("semilinear vectors must be natural");
      }
      if (is_zero_vector(p)) throw InputError("semilinear periods must be nonzero");
    }
  }
}

SemilinearSet SemilinearSet::parse(std::string_view text, std::optional<std::size_t> dim) {
  Reader r(text);
  std::vector<LinearSet> branches;
  if (r.at_end() || (r.accept('{') && (r.expect('}'), true))) {
    if (!r.at_end()) throw ParseError("unexpected input after empty set", r.pos());
    if (!dim) throw InputError("cannot infer the dimension of an empty semilinear set");
    return SemilinearSet(*dim);
  }
  do {
    LinearSet branch;
    branch.base = r.vector();
    while (r.accept('+')) {
      branch.periods.push_back(r.vector());
      r.expect('N');
    }
    branches.push_back(std::move(branch));
  } while (r.accept('|'));
  if (!r.at_end()) throw ParseError("unexpected character in semilinear set", r.pos());
  const std::size_t d = dim.value_or(branches.front().base.size());
  return SemilinearSet(d, std::move(branches));
}

std::string to_string(const SemilinearSet& s) { return branches_text(s.branches(), "N"); }

std::string to_string(const ClosedCosetUnion& c) { return branches_text(c.branches, "Z"); }

ClosedCosetUnion closure(const Supernatural& pi, const SemilinearSet& s) {
  return ClosedCosetUnion{pi, s.dim(), s.branches()};
}

SemilinearSet sum(const SemilinearSet& s, const SemilinearSet& t) {
  if (s.dim() != t.dim()) throw InputError("semilinear sets over different alphabets");
  return SemilinearSet(s.dim(), branch_sums(s.branches(), t.branches()));
}

ClosedCosetUnion sum(const ClosedCosetUnion& s, const ClosedCosetUnion& t) {
  if (s.dim != t.dim) throw InputError("coset unions over different alphabets");
  if (!(s.pi == t.pi)) throw InputError("coset unions over different supernatural numbers");
  return ClosedCosetUnion{s.pi, s.dim, branch_sums(s.branches, t.branches)};
}

SemilinearSet plus_closure_generators(const SemilinearSet& s) {
  if (s.empty()) throw InputError("plus closure of the empty set");
  std::vector<NatVector> periods;
  std::set<NatVector> seen;
  auto add = [&](const NatVector& v) {
    if (!is_zero_vector(v) && seen.insert(v).second) periods.push_back(v);
  };
  for (const LinearSet& b : s.branches()) {
    add(b.base);
    for (const NatVector& p : b.periods) add(p);
  }
  return SemilinearSet(s.dim(), {LinearSet{NatVector(s.dim(), 0), std::move(periods)}});
}

std::vector<Pseudonumber> coset_point(const LinearSet& branch, std::span<const Pseudonumber> y) {
  if (y.size() != branch.periods.size()) throw InputError("coefficient count does not match periods");
  std::vector<Pseudonumber> out(branch.base.begin(), branch.base.end());
  for (std::size_t j = 0; j < y.size(); ++j) {
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (branch.periods[j][i] != 0) out[i] += Pseudonumber(branch.periods[j][i]) * y[j];
    }
  }
  return out;
}

MembershipResult member_of_closure(const Supernatural& pi, std::span<const Pseudonumber> v,
                                   const ClosedCosetUnion& c) {
  if (v.size() != c.dim) throw InputError("vector length does not match the alphabet");
  MembershipResult result;
  for (std::size_t b = 0; b < c.branches.size(); ++b) {
    const LinearSet& branch = c.branches[b];
    std::vector<Pseudonumber> rhs(c.dim);
    for (std::size_t i = 0; i < c.dim; ++i) rhs[i] = v[i] - Pseudonumber(branch.base[i]);
    if (branch.periods.empty()) {
      const std::vector<Pseudonumber> zero(c.dim);
      const Verdict eq = equal_vectors(pi, rhs, zero);
      if (eq) {
        result.witness = Membership{b, {}};
        return result;
      }
      result.refutations.push_back(eq.modulus);
      continue;
    }
    SigmaMatrix m(c.dim, branch.periods.size());
    for (std::size_t i = 0; i < c.dim; ++i) {
      for (std::size_t j = 0; j < branch.periods.size(); ++j) m(i, j) = branch.periods[j][i];
    }
    auto solved = solve_system(pi, m, rhs);
    if (solved) {
      result.witness = Membership{b, std::move(*solved.value)};
      return result;
    }
    result.refutations.push_back(solved.refuting_modulus);
  }
  return result;
}

Verdict verify_membership(const Supernatural& pi, std::span<const Pseudonumber> v,
                          const ClosedCosetUnion& c, const Membership& m) {
  if (m.branch >= c.branches.size()) throw InputError("membership branch out of range");
  const std::vector<Pseudonumber> point = coset_point(c.branches[m.branch], m.coefficients);
  return equal_vectors(pi, point, v);
}

std::vector<NatVector> enumerate_points(const SemilinearSet& s, const Integer& limit,
                                        std::size_t max_points) {
  std::set<NatVector> found;
  auto fits = [&](const NatVector& v) {
    return std::all_of(v.begin(), v.end(), [&](const Integer& x) { return x <= limit; });
  };
  for (const LinearSet& b : s.branches()) {
    if (!fits(b.base)) continue;
    std::vector<NatVector> frontier{b.base};
    std::set<NatVector> seen{b.base};
    while (!frontier.empty() && seen.size() < max_points) {
      std::vector<NatVector> next;
      for (const NatVector& point : frontier) {
        for (const NatVector& p : b.periods) {
          NatVector q(point.size());
          for (std::size_t i = 0; i < q.size(); ++i) q[i] = point[i] + p[i];
          if (fits(q) && seen.insert(q).second) next.push_back(std::move(q));
        }
      }
      frontier = std::move(next);
    }
    found.insert(seen.begin(), seen.end());
  }
  std::vector<NatVector> out(found.begin(), found.end());
  if (out.size() > max_points) out.resize(max_points);
  return out;
}

}  // namespace profab
