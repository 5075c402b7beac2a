#pragma once
#include <cstdint>
#include <optional>
#include <vector>

// Exact 64-bit integer kernel. Intermediates widen to 128 bits; anything
// that could silently wrap throws overflow_error instead.

namespace formdiv {

int64_t gcd64(int64_t a, int64_t b);
int64_t checked_add(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

// (a * b) mod m without overflow.
uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m);

// base^exp mod modulus; modulus >= 1, exp >= 0. Negative base is reduced first.
int64_t modpow(int64_t base, int64_t exp, int64_t modulus);

// Jacobi symbol (a/n) for odd n >= 1, any a. Multiplicative in both arguments.
int jacobi(int64_t a, int64_t n);

// Kronecker symbol (d/r) restricted to odd positive r.
// For d < 0: (d/r) = (-1)^((r-1)/2) * (|d|/r).
int kronecker(int64_t d, int64_t r);

// Deterministic Miller-Rabin, exact for the full uint64 range.
bool is_prime(uint64_t n);

// First `count` primes p ≡ r (mod modulus) with p <= bound, ascending.
// Requires gcd(r, modulus) == 1. May return fewer than `count`.
std::vector<int64_t> primes_in_class(int64_t r, int64_t modulus, int64_t count,
                                     int64_t bound);

inline constexpr int64_t kFactorCeiling = 1'000'000;

// Prime factors of n >= 1 with multiplicity, ascending. Trial division only:
// if a composite cofactor survives divisors up to `ceiling`, throws
// oracle_error rather than guessing.
std::vector<int64_t> factorize(int64_t n, int64_t ceiling = kFactorCeiling);

// Floor square root, exact over the whole non-negative int64 range.
int64_t isqrt(int64_t n);
bool is_square(int64_t n);

// Tonelli-Shanks: x with x^2 ≡ a (mod p) for odd prime p, or nullopt.
std::optional<int64_t> sqrt_mod(int64_t a, int64_t p);

int64_t totient(int64_t n);

std::vector<int64_t> sieve_primes(int64_t limit);

}  // namespace formdiv
