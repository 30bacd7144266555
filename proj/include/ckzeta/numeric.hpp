#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ckzeta {

using Int = mpz_class;
using Rat = mpq_class;

// (a * b) % n without overflow, n < 2^64.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n);

// (base ^ exp) % n, n < 2^64.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n);

// Deterministic Miller-Rabin, valid for every 64-bit input.
bool is_prime(std::uint64_t n);

// Primes <= bound, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

// Parse a decimal integer with optional sign. Throws std::invalid_argument.
Int parse_int(const std::string& text);

// Parse "3", "-7", "3/2" or a decimal like "1.25" into an exact rational.
// Throws std::invalid_argument on malformed input or zero denominator.
Rat parse_rat(const std::string& text);

// Exact n-th power, n >= 0.
Int int_pow(const Int& base, unsigned long n);

}  // namespace ckzeta
