#include "paley/redei.hpp"

#include <stdexcept>

namespace paley {

Poly redei_slice(const Field& f, const PointSet& u, Elem y0) {
  if (u.size() == 0) throw std::invalid_argument("empty point set");
  Poly r = Poly::constant(1);
  for (const auto& [a, b] : u.points()) {
    // x + a y0 - b has root b - a y0.
    r = mul(f, r, Poly::linear(f, f.sub(b, f.mul(a, y0))));
  }
  return r;
}

bool divides_xq_minus_x(const Field& field, const Poly& f) {
  if (f.is_zero()) return false;
  if (f.degree() == 0) return true;
  const Poly x = Poly::monomial(1, 1);
  const Poly xq = powmod(field, x, field.q(), f);
  const Poly h = sub(field, xq, divmod(field, x, f).remainder);
  return gcd(field, f, h) == make_monic(field, f);
}

Poly szonyi_quotient(const Field& f, const PointSet& u, Elem y0) {
  const Poly r = redei_slice(f, u, y0);
  auto [quot, rem] = divmod(f, x_q_minus_x(f), r);
  if (!rem.is_zero()) {
    throw std::domain_error("R(x, y0) does not divide x^q - x; y0 is a determined direction");
  }
  return quot;
}

PthPowerDecomposition pth_power_decompose(const Field& field, const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("the zero polynomial has no decomposition");
  PthPowerDecomposition out;
  out.is_deriv_zero = derivative(field, f).is_zero();
  if (!out.is_deriv_zero) return out;

  // The coefficient at x^{ip} of g^p is c^p where c is the coefficient of x^i
  // in g, so the root takes c -> c^{q/p} (the inverse Frobenius) at x^i.
  const u64 p = field.p();
  const u64 inv_frobenius = field.q() / p;
  const auto& c = f.coeffs();
  std::vector<Elem> g(c.size() / p + 1, 0);
  for (std::size_t i = 0; i < c.size(); i += p) g[i / p] = field.pow_u(c[i], inv_frobenius);
  out.root = Poly(std::move(g));
  return out;
}

}  // namespace paley
