#include "recipdim/bigint.hpp"

#include "recipdim/errors.hpp"

#include <boost/integer/common_factor.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

namespace recipdim {

BigInt bi_gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

BigInt bi_mod(const BigInt& a, const BigInt& m) {
  require_internal(m > 0, "bi_mod: nonpositive modulus");
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

BigInt bi_powmod(BigInt base, BigInt exp, const BigInt& m) {
  require_internal(exp >= 0 && m > 1, "bi_powmod: bad arguments");
  base = bi_mod(base, m);
  BigInt result = 1;
  while (exp > 0) {
    if (boost::multiprecision::bit_test(exp, 0)) result = result * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return result;
}

BigInt bi_invmod(const BigInt& a, const BigInt& m) {
  // Extended Euclid; gcd(a, m) must be 1.
  BigInt r0 = bi_mod(a, m), r1 = m;
  BigInt s0 = 1, s1 = 0;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    BigInt s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) fail(ErrorCode::DivisionByZero, "element not invertible mod m");
  return bi_mod(s0, m);
}

bool bi_is_prime(const BigInt& n) {
  if (n < 2) return false;
  // Deterministic witnesses below 3.3e24; Miller-Rabin rounds beyond. Every
  // modulus in this library is far below the deterministic threshold.
  static const int small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (int q : small) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  for (int a : small) {
    // One Miller-Rabin round with fixed base a.
    BigInt d = n - 1;
    unsigned r = 0;
    while (!boost::multiprecision::bit_test(d, 0)) {
      d >>= 1;
      ++r;
    }
    BigInt x = bi_powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned i = 0; i + 1 < r; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::optional<BigInt> bi_exact_sqrt(const BigInt& n) {
  if (n < 0) return std::nullopt;
  BigInt r = boost::multiprecision::sqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

int bi_legendre(const BigInt& a, const BigInt& p) {
  BigInt r = bi_mod(a, p);
  if (r == 0) return 0;
  BigInt e = bi_powmod(r, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

std::optional<BigInt> bi_sqrt_mod(const BigInt& a0, const BigInt& p) {
  require_internal(p > 2 && bi_is_prime(p), "bi_sqrt_mod: p must be an odd prime");
  BigInt a = bi_mod(a0, p);
  if (a == 0) return BigInt(0);
  if (bi_legendre(a, p) != 1) return std::nullopt;
  if (p % 4 == 3) return bi_powmod(a, (p + 1) / 4, p);
  // Tonelli-Shanks.
  BigInt q = p - 1;
  unsigned s = 0;
  while (!boost::multiprecision::bit_test(q, 0)) {
    q >>= 1;
    ++s;
  }
  BigInt z = 2;
  while (bi_legendre(z, p) != -1) ++z;
  BigInt m = s;
  BigInt c = bi_powmod(z, q, p);
  BigInt t = bi_powmod(a, q, p);
  BigInt r = bi_powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    BigInt tt = t;
    BigInt i = 0;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
      if (i == m) return std::nullopt;  // unreachable for true squares
    }
    BigInt b = c;
    for (BigInt j = 0; j < m - i - 1; ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

}  // namespace recipdim
