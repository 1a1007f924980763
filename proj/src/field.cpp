#include "paley/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace paley {

namespace {

// Dense polynomials over GF(p) used only for choosing the modulus.
using PolyP = std::vector<u64>;

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 inv_mod_p(u64 a, u64 p) { return powmod(a, p - 2, p); }

// a mod f, f nonzero.
PolyP rem_p(PolyP a, const PolyP& f, u64 p) {
  trim(a);
  const std::size_t n = f.size() - 1;
  const u64 lead_inv = inv_mod_p(f.back(), p);
  while (a.size() > n) {
    const u64 c = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - n;
    for (std::size_t j = 0; j <= n; ++j) {
      a[shift + j] = (a[shift + j] + p - mulmod(c, f[j], p)) % p;
    }
    trim(a);
  }
  return a;
}

PolyP mulmod_p(const PolyP& a, const PolyP& b, const PolyP& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  PolyP c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
    }
  }
  return rem_p(std::move(c), f, p);
}

PolyP powmod_p(PolyP base, u64 k, const PolyP& f, u64 p) {
  PolyP result = rem_p(PolyP{1}, f, p);
  base = rem_p(std::move(base), f, p);
  while (k > 0) {
    if (k & 1) result = mulmod_p(result, base, f, p);
    base = mulmod_p(base, base, f, p);
    k >>= 1;
  }
  return result;
}

PolyP gcd_p(PolyP a, PolyP b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PolyP r = rem_p(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^k) mod f
PolyP frobenius_x(std::size_t k, const PolyP& f, u64 p) {
  PolyP h = rem_p(PolyP{0, 1}, f, p);
  for (std::size_t i = 0; i < k; ++i) h = powmod_p(h, p, f, p);
  return h;
}

PolyP sub_x(PolyP h, u64 p) {
  if (h.size() < 2) h.resize(2, 0);
  h[1] = (h[1] + p - 1) % p;
  trim(h);
  return h;
}

}  // namespace

bool is_irreducible_mod_p(std::span<const u64> monic, u64 p) {
  PolyP f(monic.begin(), monic.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  for (const auto& [r, mult] : factorize(n)) {
    (void)mult;
    const PolyP g = gcd_p(sub_x(frobenius_x(n / r, f, p), p), f, p);
    if (g.size() != 1) return false;
  }
  return sub_x(frobenius_x(n, f, p), p).empty();
}

std::vector<u64> find_modulus(u64 p, unsigned e) {
  const auto count = checked_pow(p, e);
  if (!count) throw std::invalid_argument("p^e overflows");
  for (u64 v = 0; v < *count; ++v) {
    PolyP f = base_digits(v, p).digits;
    f.resize(e, 0);
    f.push_back(1);
    if (is_irreducible_mod_p(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

Field Field::build(u64 p, unsigned e, const FieldOptions& options) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
  }
  if (e < 1) throw std::invalid_argument("extension degree must be at least 1");
  const auto q = checked_pow(p, e);
  if (!q || *q > options.size_limit) {
    throw std::invalid_argument("field order p^e exceeds the size limit");
  }

  Field f;
  f.spec_.p = p;
  f.spec_.e = e;
  f.spec_.q = *q;
  f.spec_.modulus = find_modulus(p, e);
  f.place_.resize(e);
  for (unsigned i = 0; i < e; ++i) f.place_[i] = i == 0 ? 1 : f.place_[i - 1] * p;
  for (const auto& [prime, mult] : factorize(*q - 1, std::max<u64>(kDefaultFactorLimit, isqrt(*q) + 1))) {
    (void)mult;
    f.order_factors_.push_back(prime);
  }

  for (Elem a = 1; a < *q; ++a) {
    bool primitive = true;
    for (u64 r : f.order_factors_) {
      if (f.pow_poly(a, (*q - 1) / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      f.primitive_root_ = a;
      break;
    }
  }

  if (*q <= options.table_limit) f.build_tables();
  return f;
}

FieldPtr make_field(u64 p, unsigned e, const FieldOptions& options) {
  return std::make_shared<const Field>(Field::build(p, e, options));
}

void Field::build_tables() {
  const u64 n = spec_.q - 1;
  exp_.resize(2 * n);
  log_.assign(spec_.q, kNoLog);
  zech_.resize(n);
  Elem x = 1;
  for (u64 k = 0; k < n; ++k) {
    exp_[k] = static_cast<std::uint32_t>(x);
    exp_[k + n] = static_cast<std::uint32_t>(x);
    log_[x] = static_cast<std::uint32_t>(k);
    x = mul_poly(x, primitive_root_);
  }
  const u64 p = spec_.p;
  for (u64 k = 0; k < n; ++k) {
    const Elem v = exp_[k];
    const Elem one_plus = (v % p == p - 1) ? v - (p - 1) : v + 1;
    zech_[k] = one_plus == 0 ? kNoLog : log_[one_plus];
  }
}

void Field::check(Elem a) const {
  if (a >= spec_.q) {
    throw std::out_of_range("element " + std::to_string(a) + " is not in GF(" +
                            std::to_string(spec_.q) + ")");
  }
}

Elem Field::add_digits(Elem a, Elem b) const {
  const u64 p = spec_.p;
  Elem out = 0;
  for (unsigned i = 0; i < spec_.e; ++i) {
    u64 s = a % p + b % p;
    if (s >= p) s -= p;
    out += s * place_[i];
    a /= p;
    b /= p;
  }
  return out;
}

Elem Field::neg_digits(Elem a) const {
  const u64 p = spec_.p;
  Elem out = 0;
  for (unsigned i = 0; i < spec_.e; ++i) {
    const u64 c = a % p;
    out += (c == 0 ? 0 : p - c) * place_[i];
    a /= p;
  }
  return out;
}

Elem Field::mul_poly(Elem a, Elem b) const {
  const u64 p = spec_.p;
  const unsigned e = spec_.e;
  if (e == 1) return mulmod(a, b, p);
  std::vector<u64> da = digits(a), db = digits(b);
  std::vector<u64> c(2 * e - 1, 0);
  for (unsigned i = 0; i < e; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < e; ++j) c[i + j] = (c[i + j] + mulmod(da[i], db[j], p)) % p;
  }
  const auto& m = spec_.modulus;
  for (std::size_t k = c.size(); k-- > e;) {
    const u64 top = c[k];
    if (top == 0) continue;
    // x^e = -(m_0 + ... + m_{e-1} x^{e-1})
    for (unsigned j = 0; j < e; ++j) {
      c[k - e + j] = (c[k - e + j] + mulmod(p - top, m[j], p)) % p;
    }
    c[k] = 0;
  }
  Elem out = 0;
  for (unsigned i = 0; i < e; ++i) out += c[i] * place_[i];
  return out;
}

Elem Field::pow_poly(Elem a, u64 k) const {
  Elem result = 1;
  while (k > 0) {
    if (k & 1) result = mul_poly(result, a);
    a = mul_poly(a, a);
    k >>= 1;
  }
  return result;
}

Elem Field::add(Elem a, Elem b) const {
  check(a);
  check(b);
  if (!has_tables()) return add_digits(a, b);
  if (a == 0) return b;
  if (b == 0) return a;
  const u64 n = spec_.q - 1;
  const u64 la = log_[a], lb = log_[b];
  const u64 diff = lb >= la ? lb - la : lb + n - la;
  const std::uint32_t z = zech_[diff];
  if (z == kNoLog) return 0;
  return exp_[la + z];
}

Elem Field::neg(Elem a) const {
  check(a);
  if (!has_tables()) return neg_digits(a);
  if (a == 0) return 0;
  return exp_[log_[a] + (spec_.q - 1) / 2];
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
  check(a);
  check(b);
  if (a == 0 || b == 0) return 0;
  if (!has_tables()) return mul_poly(a, b);
  return exp_[static_cast<u64>(log_[a]) + log_[b]];
}

Elem Field::inv(Elem a) const {
  check(a);
  if (a == 0) throw std::domain_error("zero has no inverse");
  if (!has_tables()) return pow_poly(a, spec_.q - 2);
  return exp_[(spec_.q - 1) - log_[a]];
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow_u(Elem a, u64 k) const {
  check(a);
  if (a == 0) return k == 0 ? 1 : 0;
  const u64 n = spec_.q - 1;
  k %= n;
  if (!has_tables()) return pow_poly(a, k);
  return exp_[mulmod(log_[a], k, n)];
}

Elem Field::pow(Elem a, i64 k) const {
  if (k >= 0) return pow_u(a, static_cast<u64>(k));
  check(a);
  if (a == 0) throw std::domain_error("negative power of zero");
  const u64 n = spec_.q - 1;
  const u64 m = static_cast<u64>(-(k + 1)) % n + 1;  // |k| mod n without overflow
  return pow_u(a, (n - m % n) % n);
}

u64 Field::log(Elem a) const {
  check(a);
  if (a == 0) throw std::domain_error("log of zero");
  if (!has_tables()) throw std::logic_error("discrete log requires tables");
  return log_[a];
}

Elem Field::exp(u64 k) const {
  const u64 n = spec_.q - 1;
  if (!has_tables()) return pow_poly(primitive_root_, k % n);
  return exp_[k % n];
}

u64 Field::multiplicative_order(Elem a) const {
  check(a);
  if (a == 0) throw std::domain_error("zero has no multiplicative order");
  u64 order = spec_.q - 1;
  for (u64 r : order_factors_) {
    while (order % r == 0 && pow_u(a, order / r) == 1) order /= r;
  }
  return order;
}

bool Field::is_dth_power(Elem a, u64 d) const {
  check(a);
  if (a == 0) throw std::domain_error("is_dth_power is undefined at zero");
  if (d == 0 || (spec_.q - 1) % d != 0) {
    throw std::invalid_argument("d must divide q - 1");
  }
  if (has_tables()) return log_[a] % d == 0;
  return pow_u(a, (spec_.q - 1) / d) == 1;
}

std::vector<Elem> Field::subfield_elements(unsigned sub_degree) const {
  if (sub_degree == 0 || spec_.e % sub_degree != 0) {
    throw std::invalid_argument("subfield degree must divide the extension degree");
  }
  const u64 order = *checked_pow(spec_.p, sub_degree);
  const Elem h = pow_u(primitive_root_, (spec_.q - 1) / (order - 1));
  std::vector<Elem> out{0};
  Elem x = 1;
  for (u64 k = 0; k + 1 < order; ++k) {
    out.push_back(x);
    x = mul(x, h);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> Field::digits(Elem a) const {
  check(a);
  std::vector<u64> out(spec_.e);
  for (unsigned i = 0; i < spec_.e; ++i) {
    out[i] = a % spec_.p;
    a /= spec_.p;
  }
  return out;
}

Elem Field::from_digits(std::span<const u64> ds) const {
  if (ds.size() > spec_.e) throw std::invalid_argument("too many digits");
  Elem out = 0;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (ds[i] >= spec_.p) throw std::invalid_argument("digit out of range");
    out += ds[i] * place_[i];
  }
  return out;
}

}  // namespace paley
