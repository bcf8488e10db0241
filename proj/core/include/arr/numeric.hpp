#ifndef ARR_NUMERIC_HPP
#define ARR_NUMERIC_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace arr {

/// Exact arbitrary-precision rational, always kept in lowest terms.
using Rat = mpq_class;
/// Exact arbitrary-precision integer.
using Int = mpz_class;

int64_t euler_phi(int64_t m);
bool is_prime(int64_t p);
std::vector<int64_t> primes_up_to(int64_t n);
std::vector<int64_t> divisors(int64_t n);

inline int64_t binomial2(int64_t n) { return n * (n - 1) / 2; }

} // namespace arr

#endif
