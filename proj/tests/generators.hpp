#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "profab/intlinalg.hpp"
#include "profab/pseudonumber.hpp"
#include "profab/semilinear.hpp"
#include "profab/supernatural.hpp"

namespace gen {

using Rng = std::mt19937_64;
using profab::Integer;
using profab::Pseudonumber;
using profab::Supernatural;

long uniform(Rng& rng, long lo, long hi);

/// Exponents in {0..3, inf} over 2, 3, 5, 7 with default 0 or inf.
Supernatural random_pi(Rng& rng);
/// Like random_pi but with an infinite exponent somewhere.
Supernatural random_infinite_pi(Rng& rng);

/// Bases in [2, max_base] whose primes all lie in P_π.
std::vector<Integer> admitted_bases(const Supernatural& pi, long max_base = 30);

Pseudonumber random_pseudonumber(Rng& rng, const Supernatural& pi, int max_terms = 4,
                                 long max_base = 30, long max_coeff = 50, std::uint32_t max_offset = 3);

/// A pseudonumber equal to zero in Ab_π by one of the basic identities.
Pseudonumber random_zero(Rng& rng, const Supernatural& pi);

profab::IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound);

profab::SemilinearSet random_semilinear(Rng& rng, std::size_t dim, int max_branches = 2,
                                        int max_periods = 2, long max_entry = 3);

/// Divisors of π up to bound, including the largest and prime powers.
std::vector<Integer> moduli(const Supernatural& pi, long bound, std::size_t count, std::uint64_t seed);

}  // namespace gen
