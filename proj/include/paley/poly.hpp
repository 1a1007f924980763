#pragma once

// Dense univariate polynomials over a Field. Coefficients are little-endian
// and normalized: the zero polynomial has no coefficients, any other has a
// nonzero leading coefficient.

#include <cstddef>
#include <vector>

#include "paley/field.hpp"

namespace paley {

class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Elem> coeffs);

  static Poly constant(Elem c);
  static Poly monomial(Elem c, std::size_t degree);
  /// x - root.
  static Poly linear(const Field& f, Elem root);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Elem leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  bool is_monic() const { return leading() == 1; }

  bool operator==(const Poly& other) const = default;

 private:
  void normalize();
  std::vector<Elem> coeffs_;
};

Poly add(const Field& f, const Poly& a, const Poly& b);
Poly sub(const Field& f, const Poly& a, const Poly& b);
Poly mul(const Field& f, const Poly& a, const Poly& b);
Poly scale(const Field& f, const Poly& a, Elem c);
Poly pow(const Field& f, const Poly& a, u64 k);

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// Throws std::domain_error when dividing by zero.
DivMod divmod(const Field& f, const Poly& a, const Poly& b);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Field& f, const Poly& a, const Poly& b);
Poly make_monic(const Field& f, const Poly& a);
Poly powmod(const Field& f, const Poly& base, u64 k, const Poly& modulus);
Poly derivative(const Field& f, const Poly& a);
Elem evaluate(const Field& f, const Poly& a, Elem x);

/// x^q - x over the given field.
Poly x_q_minus_x(const Field& f);

}  // namespace paley
