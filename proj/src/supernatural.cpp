#include "profab/supernatural.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "profab/errors.hpp"

namespace profab {

std::uint32_t Exponent::value() const {
  if (infinite_) throw PreconditionError("exponent is infinite");
  return value_;
}

std::strong_ordering Exponent::operator<=>(const Exponent& other) const {
  if (infinite_ || other.infinite_) return infinite_ <=> other.infinite_;
  return value_ <=> other.value_;
}

std::string Exponent::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

namespace {

Exponent default_exponent(Supernatural::Default d) {
  return d == Supernatural::Default::zero ? Exponent::finite(0) : Exponent::infinite();
}

void require_prime(Prime p) {
  if (!is_prime(p)) throw InputError("not a prime: " + std::to_string(p));
}

Integer to_integer(Prime p) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  return z;
}

}  // namespace

Supernatural::Supernatural() : Supernatural({}, Default::zero) {}

Supernatural::Supernatural(std::map<Prime, Exponent> table, Default fallback) {
  const Exponent dflt = default_exponent(fallback);
  for (auto it = table.begin(); it != table.end();) {
    require_prime(it->first);
    if (it->second == dflt) {
      it = table.erase(it);
    } else {
      ++it;
    }
  }
  data_ = std::make_shared<const Data>(Data{std::move(table), fallback});
}

Supernatural Supernatural::all_infinite() { return Supernatural({}, Default::infinity); }

Supernatural Supernatural::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  Default fallback = Default::zero;
  std::string entries = s;
  if (auto semi = s.find(';'); semi != std::string::npos) {
    entries = s.substr(0, semi);
    const std::string clause = s.substr(semi + 1);
    if (clause == "default=0") {
      fallback = Default::zero;
    } else if (clause == "default=inf") {
      fallback = Default::infinity;
    } else {
      throw ParseError("expected 'default=0' or 'default=inf'", semi + 1);
    }
  } else if (s.rfind("default=", 0) == 0) {
    entries.clear();
    if (s == "default=0") {
      fallback = Default::zero;
    } else if (s == "default=inf") {
      fallback = Default::infinity;
    } else {
      throw ParseError("expected 'default=0' or 'default=inf'", 0);
    }
  }

  std::map<Prime, Exponent> table;
  Prime previous = 0;
  std::size_t pos = 0;
  while (pos < entries.size()) {
    const std::size_t comma = std::min(entries.find(',', pos), entries.size());
    const std::string item = entries.substr(pos, comma - pos);
    const auto caret = item.find('^');
    if (caret == std::string::npos || caret == 0 || caret + 1 == item.size()) {
      throw ParseError("expected 'p^e'", pos);
    }
    const std::string prime_text = item.substr(0, caret);
    const std::string exp_text = item.substr(caret + 1);
    if (!std::all_of(prime_text.begin(), prime_text.end(), ::isdigit) || prime_text.size() > 18) {
      throw ParseError("bad prime '" + prime_text + "'", pos);
    }
    const Prime p = std::stoull(prime_text);
    if (!is_prime(p)) throw ParseError("not a prime: " + prime_text, pos);
    if (p <= previous) throw ParseError("primes must be distinct and ascending", pos);
    previous = p;
    Exponent e = Exponent::infinite();
    if (exp_text != "inf") {
      if (!std::all_of(exp_text.begin(), exp_text.end(), ::isdigit) || exp_text.size() > 9) {
        throw ParseError("bad exponent '" + exp_text + "'", pos + caret + 1);
      }
      e = Exponent::finite(static_cast<std::uint32_t>(std::stoul(exp_text)));
    }
    table.emplace(p, e);
    pos = comma + 1;
    if (comma + 1 == entries.size()) throw ParseError("trailing ','", comma);
  }
  return Supernatural(std::move(table), fallback);
}

Exponent Supernatural::exponent_of(Prime p) const {
  require_prime(p);
  if (auto it = data_->table.find(p); it != data_->table.end()) return it->second;
  return default_exponent(data_->fallback);
}

bool Supernatural::in_P(Prime p) const { return exponent_of(p).is_finite(); }

Integer Supernatural::gcd_with_integer(const Integer& n) const {
  if (n < 1) throw InputError("gcd_with_integer requires n >= 1");
  if (data_->fallback == Default::zero) {
    Integer result = 1;
    for (const auto& [p, e] : data_->table) {
      const Integer zp = to_integer(p);
      if (n % zp != 0) continue;
      const unsigned long v = valuation(n, zp);
      result *= pow(zp, e.is_infinite() ? v : std::min<unsigned long>(v, e.value()));
    }
    return result;
  }
  // Unlisted primes carry infinite exponent; only listed (finite) ones cap.
  Integer result = n;
  for (const auto& [p, e] : data_->table) {
    const Integer zp = to_integer(p);
    if (n % zp != 0) continue;
    const unsigned long v = valuation(n, zp);
    if (v > e.value()) result /= pow(zp, v - e.value());
  }
  return result;
}

std::pair<Integer, Supernatural> Supernatural::split(std::span<const Prime> primes) const {
  Integer m = 1;
  std::map<Prime, Exponent> rest = data_->table;
  std::set<Prime> seen;
  for (Prime p : primes) {
    if (!seen.insert(p).second) continue;
    const Exponent e = exponent_of(p);
    if (e.is_infinite()) {
      throw PreconditionError("split: prime " + std::to_string(p) + " has infinite exponent");
    }
    m *= pow(to_integer(p), e.value());
    rest.insert_or_assign(p, Exponent::finite(0));
  }
  return {m, Supernatural(std::move(rest), data_->fallback)};
}

bool Supernatural::is_finite() const {
  if (data_->fallback == Default::infinity) return false;
  return std::none_of(data_->table.begin(), data_->table.end(),
                      [](const auto& kv) { return kv.second.is_infinite(); });
}

Integer Supernatural::value() const {
  if (!is_finite()) throw PreconditionError("supernatural number is not finite");
  Integer v = 1;
  for (const auto& [p, e] : data_->table) v *= pow(to_integer(p), e.value());
  return v;
}

bool Supernatural::admits_base(const Integer& n) const {
  if (n < 1) return false;
  if (data_->fallback == Default::zero) {
    for (const auto& [p, e] : data_->table) {
      if (e.is_infinite() && n % to_integer(p) == 0) return false;
    }
    return true;
  }
  Integer rest = n;
  for (const auto& [p, e] : data_->table) {
    const Integer zp = to_integer(p);
    while (rest % zp == 0) rest /= zp;
  }
  return rest == 1;
}

std::vector<Prime> Supernatural::finite_primes_dividing(const Integer& n) const {
  std::vector<Prime> out;
  for (const auto& [p, e] : data_->table) {
    if (e.is_finite() && e.value() > 0 && n % to_integer(p) == 0) out.push_back(p);
  }
  return out;
}

std::vector<Prime> Supernatural::infinite_prime_candidates(std::size_t unlisted) const {
  std::vector<Prime> out;
  for (const auto& [p, e] : data_->table) {
    if (e.is_infinite()) out.push_back(p);
  }
  if (data_->fallback == Default::infinity) {
    std::size_t found = 0;
    for (Prime q = 2; found < unlisted; ++q) {
      if (is_prime(q) && !data_->table.contains(q)) {
        out.push_back(q);
        ++found;
      }
    }
    std::sort(out.begin(), out.end());
  }
  return out;
}

std::vector<std::pair<Prime, std::uint32_t>> Supernatural::finite_support() const {
  std::vector<std::pair<Prime, std::uint32_t>> out;
  for (const auto& [p, e] : data_->table) {
    if (e.is_finite() && e.value() > 0) out.emplace_back(p, e.value());
  }
  return out;
}

std::string Supernatural::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : data_->table) {
    if (!first) os << ", ";
    os << p << '^' << e.to_string();
    first = false;
  }
  os << (first ? "" : " ") << "; default=" << (data_->fallback == Default::zero ? "0" : "inf");
  return os.str();
}

bool Supernatural::operator==(const Supernatural& other) const {
  if (data_ == other.data_) return true;
  return data_->fallback == other.data_->fallback && data_->table == other.data_->table;
}

bool divides(const Integer& n, const Supernatural& pi) {
  if (n < 1) return false;
  return pi.gcd_with_integer(n) == n;
}

namespace {

// All divisors of π up to `bound` when the default exponent is 0; the listed
// primes generate them. Stops after `cap` entries.
void enumerate_divisors(const std::vector<std::pair<Integer, Exponent>>& primes, std::size_t idx,
                        const Integer& current, const Integer& bound, std::vector<Integer>& out,
                        std::size_t cap) {
  if (out.size() >= cap) return;
  if (idx == primes.size()) {
    out.push_back(current);
    return;
  }
  const auto& [p, e] = primes[idx];
  Integer value = current;
  for (std::uint64_t k = 0; value <= bound && e.admits(k); ++k) {
    enumerate_divisors(primes, idx + 1, value, bound, out, cap);
    value *= p;
  }
}

}  // namespace

std::vector<Integer> divisor_sample(const Supernatural& pi, const Integer& bound, std::size_t count,
                                    std::uint64_t seed) {
  if (bound < 1) throw InputError("divisor_sample requires bound >= 1");
  if (count == 0) return {};
  constexpr std::size_t kEnumerationCap = 200000;
  std::mt19937_64 rng(seed);

  std::vector<Integer> pool;
  const bool small = bound <= 100000;
  if (pi.fallback() == Supernatural::Default::zero) {
    std::vector<std::pair<Integer, Exponent>> primes;
    for (const auto& [p, e] : pi.table()) primes.emplace_back(to_integer(p), e);
    enumerate_divisors(primes, 0, Integer(1), bound, pool, kEnumerationCap);
  } else if (small) {
    const unsigned long b = bound.get_ui();
    for (unsigned long n = 1; n <= b; ++n) {
      if (divides(Integer(n), pi)) pool.emplace_back(n);
    }
  }

  std::set<Integer> chosen;
  if (!pool.empty()) {
    std::sort(pool.begin(), pool.end());
    if (pool.size() <= count) return pool;
    chosen.insert(pool.back());
    std::vector<Integer> prime_powers;
    for (auto it = pool.rbegin(); it != pool.rend(); ++it) {
      if (as_prime_power(*it)) prime_powers.push_back(*it);
    }
    std::size_t pp = 0;
    for (std::size_t round = 0; chosen.size() < count; ++round) {
      switch (round % 3) {
        case 0:
          if (pp < prime_powers.size()) chosen.insert(prime_powers[pp++]);
          break;
        case 1: {
          std::uniform_int_distribution<std::size_t> upper(pool.size() / 2, pool.size() - 1);
          chosen.insert(pool[upper(rng)]);
          break;
        }
        default: {
          std::uniform_int_distribution<std::size_t> any(0, pool.size() - 1);
          chosen.insert(pool[any(rng)]);
        }
      }
    }
    return {chosen.begin(), chosen.end()};
  }

  // Large bound with default ∞: nearly every integer qualifies, so sample and
  // strip the excess of the (finitely many) capped primes.
  auto shrink = [&](Integer n) { return pi.gcd_with_integer(n); };
  Integer largest = bound;
  while (!divides(largest, pi)) largest -= 1;
  chosen.insert(largest);
  for (Prime q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    if (chosen.size() >= count) break;
    if (!pi.in_P(q) || pi.exponent_of(q).value() > 0) {
      Integer qq = to_integer(q);
      Integer power = 1;
      const Exponent e = pi.exponent_of(q);
      for (std::uint64_t k = 1; power * qq <= bound && e.admits(k); ++k) power *= qq;
      if (power > 1) chosen.insert(power);
    }
  }
  gmp_randclass gen(gmp_randinit_default);
  gen.seed(static_cast<unsigned long>(seed));
  for (std::size_t attempts = 0; chosen.size() < count && attempts < 64 * count; ++attempts) {
    const Integer low = attempts % 2 == 0 ? Integer(bound / 2) : Integer(0);
    Integer n = low + gen.get_z_range(bound - low) + 1;
    if (n > bound) n = bound;
    chosen.insert(shrink(n));
  }
  return {chosen.begin(), chosen.end()};
}

}  // namespace profab
