#ifndef ARITHLINK_INTEGERS_HPP_
#define ARITHLINK_INTEGERS_HPP_

/* Elementary integer number theory shared by every module. */

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace arithlink {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, mpz_class const& e, std::uint64_t p);
/* inverse of a modulo p; a must be a unit */
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);
/* canonical residue of x modulo p in [0, p) */
std::uint64_t reduce_mod(mpz_class const& x, std::uint64_t p);
std::uint64_t reduce_mod(std::int64_t x, std::uint64_t p);

/* deterministic Miller-Rabin, exact for all 64-bit inputs */
bool is_prime_u64(std::uint64_t n);

long euler_phi(long m);
int moebius(long m);
std::vector<long> divisors(long m);
/* prime factorization of a machine integer, primes ascending */
std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n);

/* Full factorization of |n| > 0 by trial division followed by
 * Pollard-Brent; primes ascending. */
std::vector<std::pair<mpz_class, int>> factor_integer(mpz_class n);

/* p-adic valuation of a nonzero integer */
int valuation_p(mpz_class x, std::uint64_t p);

/* splitmix64 step, used to derive independent stream seeds */
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

} // namespace arithlink

#endif /* ARITHLINK_INTEGERS_HPP_ */
