#include "arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "error.hpp"

namespace formdiv {

int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }

int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("integer overflow in addition");
  return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("integer overflow in multiplication");
  return r;
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

int64_t modpow(int64_t base, int64_t exp, int64_t modulus) {
  if (modulus < 1) throw domain_error("modpow: modulus must be >= 1");
  if (exp < 0) throw domain_error("modpow: negative exponent");
  uint64_t m = static_cast<uint64_t>(modulus);
  int64_t b = base % modulus;
  if (b < 0) b += modulus;
  uint64_t acc = 1 % m, cur = static_cast<uint64_t>(b);
  uint64_t e = static_cast<uint64_t>(exp);
  while (e) {
    if (e & 1) acc = mulmod(acc, cur, m);
    cur = mulmod(cur, cur, m);
    e >>= 1;
  }
  return static_cast<int64_t>(acc);
}

int jacobi(int64_t a, int64_t n) {
  if (n < 1 || n % 2 == 0) throw domain_error("jacobi: lower argument must be odd and positive");
  a %= n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

int kronecker(int64_t d, int64_t r) {
  if (r < 1 || r % 2 == 0) throw domain_error("kronecker: lower argument must be odd and positive");
  int sign = 1;
  if (d < 0) {
    sign = (r % 4 == 1) ? 1 : -1;
    d = -d;
  }
  return sign * jacobi(d, r);
}

namespace {

bool miller_rabin_witness(uint64_t n, uint64_t a, uint64_t d, int s) {
  uint64_t x = 1;
  // modpow on uint64; n < 2^64 so mulmod stays exact
  uint64_t e = d, cur = a % n;
  while (e) {
    if (e & 1) x = mulmod(x, cur, n);
    cur = mulmod(cur, cur, n);
    e >>= 1;
  }
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;  // a witnesses compositeness
}

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // This base set decides primality for every n < 2^64.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

std::vector<int64_t> primes_in_class(int64_t r, int64_t modulus, int64_t count,
                                     int64_t bound) {
  if (modulus < 1) throw domain_error("primes_in_class: modulus must be >= 1");
  int64_t r0 = r % modulus;
  if (r0 < 0) r0 += modulus;
  if (std::gcd(r0, modulus) != 1)
    throw domain_error("primes_in_class: class not coprime to modulus");
  std::vector<int64_t> out;
  if (count <= 0) return out;
  if (modulus == 1) {
    for (int64_t v = 2; v <= bound && static_cast<int64_t>(out.size()) < count; ++v)
      if (is_prime(static_cast<uint64_t>(v))) out.push_back(v);
    return out;
  }
  for (int64_t v = r0 == 0 ? modulus : r0; v <= bound; v += modulus) {
    if (v >= 2 && is_prime(static_cast<uint64_t>(v))) {
      out.push_back(v);
      if (static_cast<int64_t>(out.size()) == count) break;
    }
  }
  return out;
}

std::vector<int64_t> factorize(int64_t n, int64_t ceiling) {
  if (n < 1) throw domain_error("factorize: argument must be >= 1");
  std::vector<int64_t> out;
  while (n % 2 == 0) {
    out.push_back(2);
    n /= 2;
  }
  for (int64_t d = 3; d <= ceiling && d * d <= n; d += 2) {
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  }
  if (n > 1) {
    if (!is_prime(static_cast<uint64_t>(n)))
      throw oracle_error("factorize: composite cofactor " + std::to_string(n) +
                         " beyond trial ceiling " + std::to_string(ceiling));
    out.push_back(n);
  }
  return out;
}

int64_t isqrt(int64_t n) {
  if (n < 0) throw domain_error("isqrt: negative argument");
  if (n == 0) return 0;
  auto sq = [](int64_t x) { return static_cast<unsigned __int128>(x) * static_cast<unsigned __int128>(x); };
  int64_t x = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
  while (x > 0 && sq(x) > static_cast<uint64_t>(n)) --x;
  while (sq(x + 1) <= static_cast<uint64_t>(n)) ++x;
  return x;
}

bool is_square(int64_t n) {
  if (n < 0) return false;
  int64_t r = isqrt(n);
  return r * r == n;
}

std::optional<int64_t> sqrt_mod(int64_t a, int64_t p) {
  if (p < 3 || !is_prime(static_cast<uint64_t>(p)))
    throw domain_error("sqrt_mod: modulus must be an odd prime");
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  if (jacobi(a, p) != 1) return std::nullopt;
  if (p % 4 == 3) return modpow(a, (p + 1) / 4, p);
  // Tonelli-Shanks
  int64_t q = p - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  int64_t z = 2;
  while (jacobi(z, p) != -1) ++z;
  int64_t m = s;
  int64_t c = modpow(z, q, p);
  int64_t t = modpow(a, q, p);
  int64_t r = modpow(a, (q + 1) / 2, p);
  uint64_t up = static_cast<uint64_t>(p);
  while (t != 1) {
    int64_t i = 0, tt = t;
    while (tt != 1) {
      tt = static_cast<int64_t>(mulmod(static_cast<uint64_t>(tt), static_cast<uint64_t>(tt), up));
      ++i;
      if (i == m) return std::nullopt;  // unreachable for prime p
    }
    int64_t b = c;
    for (int64_t j = 0; j < m - i - 1; ++j)
      b = static_cast<int64_t>(mulmod(static_cast<uint64_t>(b), static_cast<uint64_t>(b), up));
    m = i;
    c = static_cast<int64_t>(mulmod(static_cast<uint64_t>(b), static_cast<uint64_t>(b), up));
    t = static_cast<int64_t>(mulmod(static_cast<uint64_t>(t), static_cast<uint64_t>(c), up));
    r = static_cast<int64_t>(mulmod(static_cast<uint64_t>(r), static_cast<uint64_t>(b), up));
  }
  return r;
}

int64_t totient(int64_t n) {
  if (n < 1) throw domain_error("totient: argument must be >= 1");
  int64_t phi = n;
  int64_t last = 0;
  for (int64_t f : factorize(n)) {
    if (f != last) {
      phi -= phi / f;
      last = f;
    }
  }
  return phi;
}

std::vector<int64_t> sieve_primes(int64_t limit) {
  std::vector<int64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(static_cast<size_t>(limit) + 1, false);
  for (int64_t i = 2; i <= limit; ++i) {
    if (!composite[static_cast<size_t>(i)]) {
      out.push_back(i);
      for (int64_t j = i * i; j <= limit; j += i) composite[static_cast<size_t>(j)] = true;
    }
  }
  return out;
}

}  // namespace formdiv
