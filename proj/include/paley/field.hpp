#pragma once

// Finite fields GF(p^e) for odd p.
//
// Elements are encoded as integers in [0, q): the base-p digits c_0..c_{e-1}
// of the encoding are the coefficients of the polynomial representative
// c_0 + c_1 x + ... + c_{e-1} x^{e-1} modulo the field's defining polynomial.
//
// The defining polynomial is the first monic irreducible of degree e when the
// monic candidates are ordered by the base-p value of their non-leading
// coefficients. The primitive root is the smallest encoding of multiplicative
// order q - 1. Both are therefore reproducible from (p, e) alone.
//
// For q up to a configurable threshold, log/exp/Zech tables make every
// operation O(1). Above it, arithmetic falls back to polynomial multiplication
// and square-and-multiply.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "paley/arith.hpp"

namespace paley {

using Elem = std::uint64_t;

inline constexpr u64 kDefaultTableLimit = u64{1} << 22;
inline constexpr u64 kDefaultFieldSizeLimit = u64{1} << 32;

struct FieldOptions {
  u64 table_limit = kDefaultTableLimit;
  u64 size_limit = kDefaultFieldSizeLimit;
};

struct FieldSpec {
  u64 p = 0;
  unsigned e = 0;
  u64 q = 0;
  /// Little-endian, length e + 1, leading coefficient 1.
  std::vector<u64> modulus;
};

class Field {
 public:
  /// Throws std::invalid_argument for even/composite p, e < 1, or q above
  /// the size limit.
  static Field build(u64 p, unsigned e, const FieldOptions& options = {});

  const FieldSpec& spec() const { return spec_; }
  u64 p() const { return spec_.p; }
  unsigned e() const { return spec_.e; }
  u64 q() const { return spec_.q; }
  Elem primitive_root() const { return primitive_root_; }
  bool has_tables() const { return !exp_.empty(); }

  bool contains(Elem a) const { return a < spec_.q; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  /// Throws std::domain_error for a = 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  /// Negative exponents are allowed for nonzero a.
  Elem pow(Elem a, i64 k) const;
  Elem pow_u(Elem a, u64 k) const;

  /// Discrete logarithm base the primitive root; requires tables and a != 0.
  u64 log(Elem a) const;
  /// g^k for the primitive root g.
  Elem exp(u64 k) const;

  u64 multiplicative_order(Elem a) const;

  /// a in (F_q^*)^d. Requires a != 0 and d | q - 1.
  bool is_dth_power(Elem a, u64 d) const;

  /// The subfield of order p^sub_degree, ascending. Requires sub_degree | e.
  std::vector<Elem> subfield_elements(unsigned sub_degree) const;

  std::vector<u64> digits(Elem a) const;
  Elem from_digits(std::span<const u64> digits) const;

  /// Prime factors of q - 1, ascending.
  const std::vector<u64>& order_prime_factors() const { return order_factors_; }

 private:
  Field() = default;

  void check(Elem a) const;
  Elem add_digits(Elem a, Elem b) const;
  Elem neg_digits(Elem a) const;
  Elem mul_poly(Elem a, Elem b) const;
  Elem pow_poly(Elem a, u64 k) const;
  void build_tables();

  FieldSpec spec_;
  Elem primitive_root_ = 0;
  std::vector<u64> order_factors_;
  std::vector<u64> place_;  // p^i

  // exp_ has length 2(q-1) so that exp_[log a + log b] needs no reduction.
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  // zech_[k] = log(1 + g^k), or kNoLog when 1 + g^k = 0.
  std::vector<std::uint32_t> zech_;
  static constexpr std::uint32_t kNoLog = UINT32_MAX;
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(u64 p, unsigned e, const FieldOptions& options = {});

/// The deterministic defining polynomial for GF(p^e) (little-endian, monic).
std::vector<u64> find_modulus(u64 p, unsigned e);

/// Irreducibility over GF(p) (Rabin's test) for a monic polynomial.
bool is_irreducible_mod_p(std::span<const u64> monic, u64 p);

}  // namespace paley
