#pragma once

// Slices of the Redei polynomial R(x, y) = prod_{(a,b) in U} (x + a y - b) at
// fixed y, the cofactor of x^q - x at non-determined directions, and the
// p-th root of polynomials with vanishing derivative.

#include <optional>

#include "paley/directions.hpp"
#include "paley/poly.hpp"

namespace paley {

/// prod_{(a,b) in U} (x + a y0 - b); monic of degree |U|.
Poly redei_slice(const Field& f, const PointSet& u, Elem y0);

/// Whether f divides x^q - x, decided by gcd(f, x^q mod f - x) == f (up to a
/// scalar) without expanding x^q - x.
bool divides_xq_minus_x(const Field& field, const Poly& f);

/// (x^q - x) / R(x, y0) by exact division. Throws std::domain_error when the
/// remainder is nonzero, which happens exactly when y0 is a determined
/// direction.
Poly szonyi_quotient(const Field& f, const PointSet& u, Elem y0);

struct PthPowerDecomposition {
  bool is_deriv_zero = false;
  /// g with g^p = f, present iff is_deriv_zero.
  std::optional<Poly> root;
};

/// Throws std::invalid_argument for the zero polynomial.
PthPowerDecomposition pth_power_decompose(const Field& field, const Poly& f);

}  // namespace paley
