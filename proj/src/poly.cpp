#include "paley/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace paley {

Poly::Poly(std::vector<Elem> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(Elem c) { return Poly({c}); }

Poly Poly::monomial(Elem c, std::size_t degree) {
  std::vector<Elem> v(degree + 1, 0);
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::linear(const Field& f, Elem root) { return Poly({f.neg(root), 1}); }

Poly add(const Field& f, const Poly& a, const Poly& b) {
  std::vector<Elem> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
  return Poly(std::move(out));
}

Poly sub(const Field& f, const Poly& a, const Poly& b) {
  std::vector<Elem> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
  return Poly(std::move(out));
}

Poly mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::vector<Elem> out(ca.size() + cb.size() - 1, 0);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0) continue;
    for (std::size_t j = 0; j < cb.size(); ++j) {
      if (cb[j] == 0) continue;
      out[i + j] = f.add(out[i + j], f.mul(ca[i], cb[j]));
    }
  }
  return Poly(std::move(out));
}

Poly scale(const Field& f, const Poly& a, Elem c) {
  std::vector<Elem> out(a.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.mul(a.coeffs()[i], c);
  return Poly(std::move(out));
}

Poly pow(const Field& f, const Poly& a, u64 k) {
  Poly result = Poly::constant(1);
  Poly base = a;
  while (k > 0) {
    if (k & 1) result = mul(f, result, base);
    k >>= 1;
    if (k > 0) base = mul(f, base, base);
  }
  return result;
}

DivMod divmod(const Field& f, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Elem> rem = a.coeffs();
  const auto& cb = b.coeffs();
  const std::size_t n = cb.size() - 1;
  const Elem lead_inv = f.inv(cb.back());
  std::vector<Elem> quot(rem.size() - n, 0);
  for (std::size_t k = rem.size(); k-- > n;) {
    const Elem c = f.mul(rem[k], lead_inv);
    quot[k - n] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= n; ++j) {
      rem[k - n + j] = f.sub(rem[k - n + j], f.mul(c, cb[j]));
    }
  }
  rem.resize(n);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly make_monic(const Field& f, const Poly& a) {
  if (a.is_zero()) return a;
  return scale(f, a, f.inv(a.leading()));
}

Poly gcd(const Field& f, const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(f, x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(f, x);
}

Poly powmod(const Field& f, const Poly& base, u64 k, const Poly& modulus) {
  Poly result = divmod(f, Poly::constant(1), modulus).remainder;
  Poly b = divmod(f, base, modulus).remainder;
  while (k > 0) {
    if (k & 1) result = divmod(f, mul(f, result, b), modulus).remainder;
    k >>= 1;
    if (k > 0) b = divmod(f, mul(f, b, b), modulus).remainder;
  }
  return result;
}

Poly derivative(const Field& f, const Poly& a) {
  if (a.degree() < 1) return {};
  std::vector<Elem> out(a.coeffs().size() - 1);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
    // i as a field element is its residue mod p in the prime subfield.
    out[i - 1] = f.mul(static_cast<Elem>(i % f.p()), a.coeffs()[i]);
  }
  return Poly(std::move(out));
}

Elem evaluate(const Field& f, const Poly& a, Elem x) {
  Elem acc = 0;
  for (std::size_t i = a.coeffs().size(); i-- > 0;) acc = f.add(f.mul(acc, x), a.coeffs()[i]);
  return acc;
}

Poly x_q_minus_x(const Field& f) {
  std::vector<Elem> v(f.q() + 1, 0);
  v[f.q()] = 1;
  v[1] = f.neg(1);
  return Poly(std::move(v));
}

}  // namespace paley
