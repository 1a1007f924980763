#include "paley/families.hpp"

#include <algorithm>

namespace paley {

namespace {

u64 bounded_pow(u64 p, unsigned k, u64 max_q) {
  const auto q = checked_pow(p, k);
  if (!q || *q > max_q) {
    throw PreconditionError("q = " + std::to_string(p) + "^" + std::to_string(k) + " exceeds the family size limit");
  }
  return *q;
}

void require_odd_prime(u64 p) {
  if (p < 3 || !is_prime(p)) throw PreconditionError("p must be an odd prime, got " + std::to_string(p));
}

}  // namespace

FamilyInstance family_ex42(u64 p, unsigned m, const FamilyLimits& limits) {
  require_odd_prime(p);
  if (p % 3 != 1) throw PreconditionError("p must be 1 mod 3, got " + std::to_string(p));
  if (m < 1) throw PreconditionError("m must be at least 1");

  FamilyInstance inst;
  inst.family = "ex42";
  inst.parameters = {{"p", static_cast<i64>(p)}, {"m", m}};
  inst.p = p;
  inst.q = bounded_pow(p, 3 * m, limits.max_q);
  inst.k_order = *checked_pow(p, m);
  const u64 k = inst.k_order;
  inst.d = (k * k + k + 1) / 3;
  inst.certificate = prop41_certify(inst.q, k, inst.d);
  inst.accepted = inst.certificate->applicable;
  inst.reason = inst.certificate->reason;
  inst.notes.push_back("(q-1)/d = " + std::to_string((inst.q - 1) / inst.d) + " = 3(|K|-1)");
  return inst;
}

FamilyInstance family_ex43(u64 p, unsigned s, unsigned t, const FamilyLimits& limits) {
  require_odd_prime(p);
  if (t < 1 || s <= t) throw PreconditionError("need s > t >= 1");
  if (gcd(s, t) != 1) throw PreconditionError("s and t must be coprime");

  FamilyInstance inst;
  inst.family = "ex43";
  inst.parameters = {{"p", static_cast<i64>(p)}, {"s", s}, {"t", t}};
  inst.p = p;
  inst.q = bounded_pow(p, s * t, limits.max_q);
  inst.k_order = *checked_pow(p, s);
  const u64 pt = *checked_pow(p, t);
  const u128 num = static_cast<u128>(inst.q - 1) * (p - 1);
  const u128 den = static_cast<u128>(inst.k_order - 1) * (pt - 1);
  if (num % den != 0) throw std::logic_error("ex43 degree is not integral");
  inst.d = static_cast<u64>(num / den);
  if (inst.d <= 1) {
    inst.accepted = false;
    inst.reason = "degenerate instance: d = " + std::to_string(inst.d) + " (d must exceed 1)";
    return inst;
  }
  inst.certificate = prop41_certify(inst.q, inst.k_order, inst.d);
  inst.accepted = inst.certificate->applicable;
  inst.reason = inst.certificate->reason;
  const bool small_clique = ((inst.q - 1) / (pt - 1)) % inst.d == 0;
  inst.notes.push_back(std::string("F_{p^t} (order ") + std::to_string(pt) + ") is " +
                       (small_clique ? "" : "not ") + "a clique");
  return inst;
}

bool ex44_identity_holds(u64 x) {
  const i128 xx = x;
  const i128 p = 2 * xx * xx + xx + 1;
  return (4 * xx * xx + 3) * (xx * xx + xx + 1) == p * p + p + 1;
}

FamilyInstance family_ex44(u64 x, const FamilyLimits& limits) {
  if (x < 1) throw PreconditionError("x must be at least 1");
  if (x > (u64{1} << 30)) throw PreconditionError("x too large");
  FamilyInstance inst;
  inst.family = "ex44";
  inst.parameters = {{"x", static_cast<i64>(x)}};
  inst.p = 2 * x * x + x + 1;
  inst.d = 4 * x * x + 3;
  if (!ex44_identity_holds(x)) throw std::logic_error("ex44 identity failed");
  inst.notes.push_back("(4x^2+3)(x^2+x+1) = p^2+p+1 verified");
  if (!is_prime(inst.p)) {
    inst.accepted = false;
    inst.reason = "p = " + std::to_string(inst.p) + " is composite";
    return inst;
  }
  inst.q = bounded_pow(inst.p, 3, limits.max_q);
  inst.k_order = inst.p;
  inst.certificate = thm14_certify(inst.p, inst.d);
  inst.accepted = inst.certificate->applicable;
  inst.reason = inst.certificate->reason;
  return inst;
}

Ex45Report counterexample_ex45(u64 p, bool with_search, const FamilyLimits& limits,
                               std::chrono::milliseconds time_limit) {
  require_odd_prime(p);
  Ex45Report rep;
  rep.p = p;
  rep.q = bounded_pow(p, 4, limits.max_q);
  const u64 d_full = p * p + 1;
  rep.half_density = prop41_certify(rep.q, p, 2 * d_full);
  rep.full_density = best_bounds(rep.q, d_full);
  rep.failed_prop41 = prop41_certify(rep.q, p, d_full);
  if (with_search && rep.q <= limits.max_search_q) {
    const FieldPtr field = make_field(p, 4);
    for (u64 d : {2 * d_full, d_full}) {
      rep.searches.push_back({d, max_clique(build_paley_graph(field, d), time_limit)});
    }
  }
  return rep;
}

Ex46Report counterexample_ex46() {
  Ex46Report rep;
  rep.prop41 = prop41_certify(rep.q, rep.k_order, rep.d);
  rep.digits_msf = base_digits((rep.q - 1) / rep.d, 5).digits;
  std::reverse(rep.digits_msf.begin(), rep.digits_msf.end());
  const FieldPtr field = make_field(5, 6);
  const Graph g = build_paley_graph(field, rep.d);
  rep.f125_is_clique = is_clique(g, field->subfield_elements(3));
  rep.bounds = best_bounds(rep.q, rep.d);
  rep.clique_number = rep.bounds.exact ? rep.bounds.best_lower : 0;
  return rep;
}

}  // namespace paley
