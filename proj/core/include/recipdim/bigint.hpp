// Arbitrary-precision integers and the handful of number-theory helpers the
// field tower needs (gcd normalization, primality, modular arithmetic,
// integer square roots, Legendre symbols).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>

namespace recipdim {

using BigInt = boost::multiprecision::cpp_int;

BigInt bi_gcd(const BigInt& a, const BigInt& b);

// Floored/Euclidean remainder in [0, m) for m > 0.
BigInt bi_mod(const BigInt& a, const BigInt& m);

// (base^exp) mod m, exp >= 0, m > 1.
BigInt bi_powmod(BigInt base, BigInt exp, const BigInt& m);

// Inverse of a modulo m (gcd(a, m) = 1 required).
BigInt bi_invmod(const BigInt& a, const BigInt& m);

// Miller-Rabin with a fixed deterministic base set for inputs < 3.3e24 plus
// extra rounds beyond; good for every modulus this library accepts.
bool bi_is_prime(const BigInt& n);

// Exact integer square root if n is a perfect square.
std::optional<BigInt> bi_exact_sqrt(const BigInt& n);

// Square root of a mod odd prime p when it exists (Tonelli-Shanks).
std::optional<BigInt> bi_sqrt_mod(const BigInt& a, const BigInt& p);

// Legendre symbol (a/p) for odd prime p: -1, 0, or 1.
int bi_legendre(const BigInt& a, const BigInt& p);

}  // namespace recipdim
