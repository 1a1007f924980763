#pragma once

// Exact integer utilities: base-p digits, carry tests, integer square roots,
// factoring by trial division and deterministic Miller-Rabin.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace paley {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline constexpr u64 kDefaultFactorLimit = u64{1} << 20;

/// Little-endian base-p digits of an integer. Zero has no digits.
struct DigitVector {
  std::vector<u64> digits;
  u64 base = 0;

  /// Value-level comparison; trailing zero digits are ignored.
  bool operator==(const DigitVector& other) const;
  u64 value() const;
};

DigitVector base_digits(u64 m, u64 p);

/// True iff C(a+b, b) is not divisible by p, i.e. adding a and b in base p
/// produces no carry.
bool binom_nonzero_mod_p(u64 a, u64 b, u64 p);

u64 isqrt(u64 m);
u128 isqrt(u128 m);

/// Checked p^e; nullopt on overflow of 64 bits.
std::optional<u64> checked_pow(u64 base, unsigned exp);

u64 gcd(u64 a, u64 b);
u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);

/// Deterministic for all 64-bit inputs.
bool is_prime(u64 n);

/// Prime factorization by trial division up to `limit`. Throws
/// std::domain_error when a cofactor cannot be resolved within the limit.
std::vector<std::pair<u64, unsigned>> factorize(u64 m, u64 limit = kDefaultFactorLimit);

std::vector<u64> divisors(u64 m, u64 limit = kDefaultFactorLimit);

/// (p, e) with q = p^e, or nullopt when q is not a prime power.
std::optional<std::pair<u64, unsigned>> prime_power(u64 q);

}  // namespace paley
