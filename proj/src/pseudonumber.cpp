#include "profab/pseudonumber.hpp"

#include <algorithm>

#include "profab/errors.hpp"

namespace profab {

namespace {

std::optional<Supernatural> merge_ambient(const std::optional<Supernatural>& a,
                                          const std::optional<Supernatural>& b) {
  if (!a) return b;
  if (!b) return a;
  if (!(*a == *b)) {
    throw InputError("pseudonumbers over different supernatural numbers: " + a->to_string() +
                     " vs " + b->to_string());
  }
  return a;
}

Term multiply_terms(const Term& x, const Term& y) {
  if (x.base == y.base) return Term{x.base, x.offset + y.offset, x.coeff * y.coeff};
  // n1^(ω-k1) n2^(ω-k2) = n2^(k1-k2) (n1 n2)^(ω-k1) for k1 >= k2
  const Term& hi = x.offset >= y.offset ? x : y;
  const Term& lo = x.offset >= y.offset ? y : x;
  return Term{hi.base * lo.base, hi.offset,
              hi.coeff * lo.coeff * pow(lo.base, hi.offset - lo.offset)};
}

}  // namespace

void require_ambient(const Pseudonumber& u, const Supernatural& pi) {
  if (u.ambient() && !(*u.ambient() == pi)) {
    throw InputError("pseudonumber built over " + u.ambient()->to_string() + ", used over " +
                     pi.to_string());
  }
}

Pseudonumber Pseudonumber::normalize(Integer constant, std::vector<Term> terms,
                                     std::optional<Supernatural> pi) {
  Pseudonumber out;
  out.ambient_ = std::move(pi);
  std::vector<Term> staged;
  staged.reserve(terms.size());
  for (Term& t : terms) {
    if (t.coeff == 0) continue;
    if (t.base < 1) throw InputError("term base must be positive, got " + to_string(t.base));
    if (t.base == 1) {
      constant += t.coeff;
      continue;
    }
    if (t.offset == 0) {
      t.coeff *= t.base;
      t.offset = 1;
    }
    if (auto pp = as_prime_power(t.base); pp && pp->second > 1) {
      const unsigned long offset = static_cast<unsigned long>(t.offset) * pp->second;
      if (offset > UINT32_MAX) throw InputError("term offset overflow");
      t.base = pp->first;
      t.offset = static_cast<std::uint32_t>(offset);
    }
    if (out.ambient_ && !out.ambient_->admits_base(t.base)) {
      throw SignatureError("base " + to_string(t.base) + " has a prime outside P_pi for pi = " +
                           out.ambient_->to_string());
    }
    staged.push_back(std::move(t));
  }
  std::sort(staged.begin(), staged.end(), [](const Term& a, const Term& b) {
    if (a.base != b.base) return a.base < b.base;
    return a.offset < b.offset;
  });
  for (Term& t : staged) {
    if (!out.terms_.empty() && out.terms_.back().base == t.base &&
        out.terms_.back().offset == t.offset) {
      out.terms_.back().coeff += t.coeff;
      if (out.terms_.back().coeff == 0) out.terms_.pop_back();
    } else {
      out.terms_.push_back(std::move(t));
    }
  }
  out.constant_ = std::move(constant);
  return out;
}

Pseudonumber Pseudonumber::omega_power(const Supernatural& pi, const Integer& n, std::uint32_t k) {
  if (n < 2) throw InputError("omega_power base must be >= 2, got " + to_string(n));
  if (k < 1) throw InputError("omega_power offset must be >= 1");
  if (!pi.admits_base(n)) {
    throw SignatureError("base " + to_string(n) + " has a prime outside P_pi for pi = " +
                         pi.to_string());
  }
  return normalize(0, {Term{n, k, 1}}, pi);
}

Pseudonumber Pseudonumber::omega(const Supernatural& pi, const Integer& n) {
  if (n == 1) return Pseudonumber(1);
  return normalize(0, {Term{n, 1, n}}, pi);
}

Pseudonumber Pseudonumber::operator-() const {
  Pseudonumber out = *this;
  out.constant_ = -out.constant_;
  for (Term& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Pseudonumber operator+(const Pseudonumber& u, const Pseudonumber& v) {
  auto ambient = merge_ambient(u.ambient_, v.ambient_);
  if (v.terms_.empty()) {
    Pseudonumber out = u;
    out.constant_ += v.constant_;
    out.ambient_ = std::move(ambient);
    return out;
  }
  std::vector<Term> terms = u.terms_;
  terms.insert(terms.end(), v.terms_.begin(), v.terms_.end());
  return Pseudonumber::normalize(u.constant_ + v.constant_, std::move(terms), std::move(ambient));
}

Pseudonumber operator-(const Pseudonumber& u, const Pseudonumber& v) { return u + (-v); }

Pseudonumber operator*(const Pseudonumber& u, const Pseudonumber& v) {
  auto ambient = merge_ambient(u.ambient_, v.ambient_);
  std::vector<Term> terms;
  terms.reserve(u.terms_.size() * (v.terms_.size() + 1) + v.terms_.size());
  if (v.constant_ != 0) {
    for (const Term& t : u.terms_) terms.push_back(Term{t.base, t.offset, t.coeff * v.constant_});
  }
  if (u.constant_ != 0) {
    for (const Term& t : v.terms_) terms.push_back(Term{t.base, t.offset, t.coeff * u.constant_});
  }
  for (const Term& x : u.terms_) {
    for (const Term& y : v.terms_) terms.push_back(multiply_terms(x, y));
  }
  return Pseudonumber::normalize(u.constant_ * v.constant_, std::move(terms), std::move(ambient));
}

Pseudonumber normalize(const Pseudonumber& u) {
  return Pseudonumber::normalize(u.constant(), {u.terms().begin(), u.terms().end()}, u.ambient());
}

ClearingFactor clearing_factor(const Supernatural& pi, const Pseudonumber& u) {
  require_ambient(u, pi);
  std::uint32_t beta = 0;
  for (const auto& [p, e] : pi.finite_support()) {
    if (e <= beta) continue;
    const Integer zp(static_cast<unsigned long>(p));
    for (const Term& t : u.terms()) {
      if (t.base % zp == 0) {
        beta = e;
        break;
      }
    }
  }
  Integer c = 1;
  for (const Term& t : u.terms()) c *= pow(t.base, t.offset + beta);
  // c · n^(ω-k) = (c / n^(k+β)) · n^(ω+β) = (c / n^(k+β)) · n^β = c / n^k
  Integer value = c * u.constant();
  for (const Term& t : u.terms()) value += t.coeff * (c / pow(t.base, t.offset));
  return {c, value};
}

Integer reduce_mod(const Pseudonumber& u, const Integer& n) {
  if (n < 1) throw InputError("modulus must be positive");
  if (n == 1) return 0;
  Integer acc = mod(u.constant(), n);
  for (const Term& t : u.terms()) {
    const Integer coprime = coprime_part(n, t.base);
    if (coprime == 1) continue;  // nilpotent on every prime of n
    const Integer shared = n / coprime;
    const auto inv = inverse_mod(mod(t.base, coprime), coprime);
    Integer r;
    mpz_powm_ui(r.get_mpz_t(), inv->get_mpz_t(), t.offset, coprime.get_mpz_t());
    acc += t.coeff * crt_pair(0, shared, r, coprime);
  }
  return mod(acc, n);
}

Integer eval_mod(const Pseudonumber& u, const Integer& n, const Supernatural& pi) {
  require_ambient(u, pi);
  if (!divides(n, pi)) {
    throw PreconditionError(to_string(n) + " does not divide pi = " + pi.to_string());
  }
  return reduce_mod(u, n);
}

}  // namespace profab
