#include "paley/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace paley {

bool DigitVector::operator==(const DigitVector& other) const {
  if (base != other.base) return false;
  const std::size_t n = std::max(digits.size(), other.digits.size());
  for (std::size_t i = 0; i < n; ++i) {
    const u64 a = i < digits.size() ? digits[i] : 0;
    const u64 b = i < other.digits.size() ? other.digits[i] : 0;
    if (a != b) return false;
  }
  return true;
}

u64 DigitVector::value() const {
  u64 v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * base + digits[i];
  return v;
}

DigitVector base_digits(u64 m, u64 p) {
  if (p < 2) throw std::invalid_argument("base must be at least 2");
  DigitVector out{{}, p};
  while (m > 0) {
    out.digits.push_back(m % p);
    m /= p;
  }
  return out;
}

bool binom_nonzero_mod_p(u64 a, u64 b, u64 p) {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  while (a > 0 && b > 0) {
    if (a % p + b % p >= p) return false;
    a /= p;
    b /= p;
  }
  return true;
}

u64 isqrt(u64 m) {
  if (m < 2) return m;
  u64 s = static_cast<u64>(std::sqrt(static_cast<long double>(m)));
  // long double is exact to 64 bits; still nudge for safety at the edges.
  while (static_cast<u128>(s) * s > m) --s;
  while (static_cast<u128>(s + 1) * (s + 1) <= m) ++s;
  return s;
}

u128 isqrt(u128 m) {
  if (m < 2) return m;
  // Newton iteration from an overestimate; monotone decreasing to floor(sqrt(m)).
  int bits = 0;
  for (u128 t = m; t > 0; t >>= 1) ++bits;
  u128 x = u128{1} << ((bits + 1) / 2);
  while (true) {
    const u128 y = (x + m / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

std::optional<u64> checked_pow(u64 base, unsigned exp) {
  u64 result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    const u128 next = static_cast<u128>(result) * base;
    if (next > UINT64_MAX) return std::nullopt;
    result = static_cast<u64>(next);
  }
  return result;
}

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    const u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
  u64 result = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) result = mulmod(result, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 sp : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % sp == 0) return n == sp;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are sufficient for every n < 2^64.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 m, u64 limit) {
  if (m == 0) throw std::invalid_argument("cannot factor zero");
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 f = 2; f * f <= m; f += (f == 2 ? 1 : 2)) {
    if (f > limit) throw std::domain_error("cofactor exceeds the trial-division limit");
    if (m % f != 0) continue;
    unsigned k = 0;
    while (m % f == 0) {
      m /= f;
      ++k;
    }
    out.emplace_back(f, k);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

std::vector<u64> divisors(u64 m, u64 limit) {
  if (m == 0) throw std::invalid_argument("divisors of zero are unbounded");
  std::vector<u64> out{1};
  for (const auto& [prime, mult] : factorize(m, limit)) {
    const std::size_t n = out.size();
    u64 pk = 1;
    for (unsigned k = 1; k <= mult; ++k) {
      pk *= prime;
      for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// floor(q^(1/k)) for k >= 2.
u64 integer_root(u64 q, unsigned k) {
  u64 r = static_cast<u64>(std::pow(static_cast<long double>(q), 1.0L / k));
  auto exceeds = [&](u64 x) {
    auto v = checked_pow(x, k);
    return !v || *v > q;
  };
  while (r > 0 && exceeds(r)) --r;
  while (!exceeds(r + 1)) ++r;
  return r;
}

}  // namespace

std::optional<std::pair<u64, unsigned>> prime_power(u64 q) {
  if (q < 2) return std::nullopt;
  for (unsigned k = 63; k >= 2; --k) {
    const u64 r = integer_root(q, k);
    if (r < 2) continue;
    if (checked_pow(r, k) == q && is_prime(r)) return std::make_pair(r, k);
  }
  if (is_prime(q)) return std::make_pair(q, 1u);
  return std::nullopt;
}

}  // namespace paley
