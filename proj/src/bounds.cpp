#include "paley/bounds.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace paley {

const char* to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::kUpper:
      return "upper";
    case BoundKind::kLower:
      return "lower";
    case BoundKind::kExact:
      return "exact";
  }
  return "unknown";
}

namespace {

i64 saturate(i128 v) {
  constexpr i128 kMax = std::numeric_limits<i64>::max();
  return static_cast<i64>(std::min(v, kMax));
}

BoundInputs make_inputs(u64 q, u64 d) {
  const PrimePower pp = odd_prime_power(q);
  return BoundInputs{q, pp.p, pp.e, d, std::nullopt, std::nullopt};
}

}  // namespace

PrimePower odd_prime_power(u64 q) {
  const auto pp = prime_power(q);
  if (!pp || pp->first == 2) {
    throw PreconditionError("q = " + std::to_string(q) + " is not an odd prime power");
  }
  return {pp->first, pp->second};
}

void require_paley_parameters(u64 q, u64 d) {
  odd_prime_power(q);
  if (d <= 1) throw PreconditionError("d must exceed 1");
  if ((q - 1) % (2 * d) != 0) {
    throw PreconditionError("q = " + std::to_string(q) + " is not 1 mod 2d for d = " + std::to_string(d));
  }
}

i64 trivial_bound(u64 q) { return static_cast<i64>(isqrt(q)); }

Certificate trivial_certificate(u64 q, u64 d) {
  Certificate c;
  c.bound = "trivial";
  c.inputs = make_inputs(q, d);
  c.value = trivial_bound(q);
  c.kind = BoundKind::kUpper;
  c.reason = "omega <= floor(sqrt(q))";
  return c;
}

Certificate thm11_certificate(u64 q, u64 d) {
  require_paley_parameters(q, d);
  Certificate c;
  c.bound = "thm11";
  c.inputs = make_inputs(q, d);
  c.kind = BoundKind::kUpper;
  const u64 p = c.inputs.p;
  const u64 budget = (q - 1) / d;
  const u64 n_max = isqrt(q) + 1;

  std::optional<i64> best;
  u64 best_n = 0;
  for (u64 n = 2; n <= n_max; ++n) {
    if (!binom_nonzero_mod_p(n - 1, budget, p)) continue;
    // Either omega < n, or (omega - 1) n <= (q-1)/d.
    const i64 candidate = std::max<i64>(static_cast<i64>(n - 1), static_cast<i64>(budget / n + 1));
    if (!best || candidate < *best) {
      best = candidate;
      best_n = n;
    }
  }
  if (best) {
    c.value = *best;
    c.reason = "admissible n = " + std::to_string(best_n) + " (no base-" + std::to_string(p) +
               " carry adding n-1 and (q-1)/d)";
    c.conditions.push_back({"no carry adding n-1 and (q-1)/d", "admissible", static_cast<i64>(best_n - 1),
                            static_cast<i64>(budget), true});
  } else {
    c.value = trivial_bound(q);
    c.informative = false;
    c.reason = "no admissible n <= isqrt(q)+1; theorem gave no information, trivial bound returned";
  }
  return c;
}

i64 thm11_bound(u64 q, u64 d) { return thm11_certificate(q, d).value; }

i64 direction_budget_bound(u64 pr, u64 budget) {
  const i128 b = pr;
  const i128 s = budget;
  // f(n) = n^2 - B n + B - 1 - budget; convex with vertex at B/2.
  auto f = [&](i128 n) { return n * n - b * n + b - 1 - s; };
  i128 lo = (b + 1) / 2;
  if (f(lo) > 0) return static_cast<i64>(pr);
  i128 hi = b + static_cast<i128>(isqrt(budget)) + 2;  // f(hi) > 0
  while (hi - lo > 1) {
    const i128 mid = lo + (hi - lo) / 2;
    if (f(mid) <= 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return static_cast<i64>(std::max<i128>(lo, b));
}

Certificate thm13_certificate(u64 q, u64 d) {
  require_paley_parameters(q, d);
  Certificate c;
  c.bound = "thm13";
  c.inputs = make_inputs(q, d);
  c.kind = BoundKind::kUpper;
  c.provenance = "proof-inequality";
  if (c.inputs.e % 2 == 0) {
    throw PreconditionError("q = " + std::to_string(q) + " is a square; the bound needs q = p^(2r+1)");
  }
  const unsigned r = (c.inputs.e - 1) / 2;
  const u64 pr = *checked_pow(c.inputs.p, r);
  c.exponent_r = r;
  c.value = direction_budget_bound(pr, (q - 1) / d);
  c.reason = "largest n with n <= p^r or n^2 - p^r(n-1) + 1 <= (q-1)/d + 2";
  return c;
}

i64 thm13_bound(u64 q, u64 d) { return thm13_certificate(q, d).value; }

Certificate prop41_certify(u64 q, u64 k_order, u64 d) {
  const PrimePower pp = odd_prime_power(q);
  const auto kk = prime_power(k_order);
  if (!kk || kk->first != pp.p || kk->second >= pp.e || pp.e % kk->second != 0) {
    throw PreconditionError(std::to_string(k_order) + " is not the order of a proper subfield of GF(" +
                            std::to_string(q) + ")");
  }
  if (d < 2) throw PreconditionError("d must be at least 2");

  Certificate c;
  c.bound = "prop41";
  c.inputs = BoundInputs{q, pp.p, pp.e, d, k_order, std::nullopt};
  c.kind = BoundKind::kExact;
  c.value = static_cast<i64>(k_order);

  const u64 cofactor = (q - 1) / (k_order - 1);
  const bool c1 = cofactor % d == 0;
  c.conditions.push_back({"(i) d | (q-1)/(|K|-1)", "divides", static_cast<i64>(d), static_cast<i64>(cofactor), c1});

  const i128 product = static_cast<i128>(d) * k_order * (k_order + 1);
  const bool c2 = static_cast<i128>(q) < product;
  c.conditions.push_back({"(ii) q < d|K|(|K|+1)", "<", static_cast<i64>(q), saturate(product), c2});

  bool c3 = false;
  std::string failed;
  if ((q - 1) % d == 0) {
    const u64 modulus = pp.p * k_order;
    const u64 rem = ((q - 1) / d) % modulus;
    const u64 threshold = (pp.p - 1) * k_order;
    c3 = rem < threshold;
    c.remainder_r = rem;
    c.conditions.push_back({"(iii) r < (p-1)|K|", "<", static_cast<i64>(rem), static_cast<i64>(threshold), c3});
  }
  for (const auto& cond : c.conditions) {
    if (!cond.holds) {
      failed = cond.id;
      break;
    }
  }
  if (failed.empty() && !c3) failed = "(iii) r < (p-1)|K| (d does not divide q-1)";

  c.applicable = failed.empty();
  if (c.applicable) {
    c.witness = Witness{kk->second, {}};
    c.reason = "all hypotheses hold; the subfield of order " + std::to_string(k_order) + " is a maximum clique";
  } else {
    c.reason = "condition fails: " + failed;
  }
  return c;
}

Certificate thm14_certify(u64 p, u64 d) {
  if (p < 3 || !is_prime(p)) throw PreconditionError("p must be an odd prime");
  if (d <= 1) throw PreconditionError("d must exceed 1");
  const u64 cube_cofactor = p * p + p + 1;
  if (cube_cofactor % d != 0) throw PreconditionError("d must divide p^2 + p + 1");
  if (d <= p) throw PreconditionError("d must exceed p");
  const u64 q = p * p * p;

  Certificate inner = prop41_certify(q, p, d);
  if (!inner.applicable) {
    throw std::logic_error("prop41 hypotheses failed for a valid thm14 instance: " + inner.reason);
  }
  Certificate c;
  c.bound = "thm14";
  c.inputs = BoundInputs{q, p, 3, d, p, std::nullopt};
  c.kind = BoundKind::kExact;
  c.value = static_cast<i64>(p);
  c.conditions.push_back({"d | p^2+p+1", "divides", static_cast<i64>(d), static_cast<i64>(cube_cofactor), true});
  c.conditions.push_back({"d > p", ">", static_cast<i64>(d), static_cast<i64>(p), true});
  for (const auto& cond : inner.conditions) c.conditions.push_back(cond);
  c.remainder_r = inner.remainder_r;
  c.witness = Witness{1u, {}};
  c.reason = "omega(GP(p^3, d)) = p, re-derived through prop41 with K = F_p";
  return c;
}

u64 difference_count_mod(const std::vector<u64>& index_set, u64 d) {
  std::set<u64> diffs;
  for (u64 a : index_set) {
    for (u64 b : index_set) diffs.insert((a % d + d - b % d) % d);
  }
  return diffs.size();
}

Certificate remark32_certificate(u64 q, u64 d, std::vector<u64> index_set) {
  const PrimePower pp = odd_prime_power(q);
  if (pp.e % 2 == 0) throw PreconditionError("q is a square");
  if (d == 0 || (q - 1) % d != 0) throw PreconditionError("d must divide q - 1");
  if (index_set.empty()) throw PreconditionError("index set must be nonempty");
  for (u64 i : index_set) {
    if (i >= d) throw PreconditionError("index set entries must lie in [0, d)");
  }
  std::sort(index_set.begin(), index_set.end());
  index_set.erase(std::unique(index_set.begin(), index_set.end()), index_set.end());

  // -1 = g^{(q-1)/2} lies in coset (q-1)/2 mod d; S = -S iff I is invariant
  // under that shift.
  const u64 shift = ((q - 1) / 2) % d;
  std::set<u64> members(index_set.begin(), index_set.end());
  for (u64 i : index_set) {
    if (!members.count((i + shift) % d)) throw PreconditionError("connection set is not symmetric");
  }
  const u64 diff = difference_count_mod(index_set, d);
  if (diff == d) throw PreconditionError("I - I = Z/dZ; the bound is vacuous");

  Certificate c;
  c.bound = "remark32";
  c.inputs = BoundInputs{q, pp.p, pp.e, d, std::nullopt, index_set};
  c.kind = BoundKind::kUpper;
  c.provenance = "derived-from-proof";
  const unsigned r = (pp.e - 1) / 2;
  c.exponent_r = r;
  c.value = direction_budget_bound(*checked_pow(pp.p, r), diff * ((q - 1) / d));
  c.reason = "largest n with n <= p^r or n^2 - p^r(n-1) + 1 <= |I-I|(q-1)/d + 2, |I-I| = " +
             std::to_string(diff);
  return c;
}

i64 remark32_bound(u64 q, u64 d, std::vector<u64> index_set) {
  return remark32_certificate(q, d, std::move(index_set)).value;
}

std::optional<unsigned> largest_clique_subfield(u64 q, u64 d) {
  const PrimePower pp = odd_prime_power(q);
  for (unsigned m = pp.e - 1; m >= 1; --m) {
    if (pp.e % m != 0) continue;
    const u64 k = *checked_pow(pp.p, m);
    if (((q - 1) / (k - 1)) % d == 0) return m;
  }
  return std::nullopt;
}

Certificate subfield_lower_certificate(u64 q, u64 d) {
  Certificate c;
  c.bound = "subfield";
  c.inputs = make_inputs(q, d);
  c.kind = BoundKind::kLower;
  const auto m = largest_clique_subfield(q, d);
  if (m) {
    c.value = static_cast<i64>(*checked_pow(c.inputs.p, *m));
    c.inputs.k_order = static_cast<u64>(c.value);
    c.witness = Witness{*m, {}};
    c.reason = "d | (q-1)/(|K|-1), so the subfield K is a clique";
  } else {
    c.value = 1;
    c.applicable = false;
    c.reason = "no proper subfield is a clique";
  }
  return c;
}

BoundBundle best_bounds(u64 q, u64 d) {
  require_paley_parameters(q, d);
  BoundBundle bundle;
  bundle.q = q;
  bundle.d = d;
  const PrimePower pp = odd_prime_power(q);

  Certificate edge;
  edge.bound = "edge";
  edge.inputs = make_inputs(q, d);
  edge.kind = BoundKind::kLower;
  edge.value = 2;
  edge.witness = Witness{std::nullopt, {0, 1}};
  edge.reason = "1 is a d-th power, so {0, 1} is an edge";
  bundle.certificates.push_back(edge);

  bundle.certificates.push_back(subfield_lower_certificate(q, d));
  bundle.certificates.push_back(trivial_certificate(q, d));
  bundle.certificates.push_back(thm11_certificate(q, d));
  if (pp.e % 2 == 1) {
    bundle.certificates.push_back(thm13_certificate(q, d));
  } else {
    Certificate c;
    c.bound = "thm13";
    c.inputs = make_inputs(q, d);
    c.value = trivial_bound(q);
    c.applicable = false;
    c.reason = "q is a square";
    bundle.certificates.push_back(c);
  }
  for (unsigned m = 1; m < pp.e; ++m) {
    if (pp.e % m == 0) bundle.certificates.push_back(prop41_certify(q, *checked_pow(pp.p, m), d));
  }
  std::stable_sort(bundle.certificates.begin(), bundle.certificates.end(),
                   [](const Certificate& a, const Certificate& b) { return a.bound < b.bound; });

  bundle.best_upper = std::numeric_limits<i64>::max();
  bundle.best_lower = 1;
  for (const auto& c : bundle.certificates) {
    if (!c.applicable) continue;
    if (c.kind != BoundKind::kLower) bundle.best_upper = std::min(bundle.best_upper, c.value);
    if (c.kind != BoundKind::kUpper) bundle.best_lower = std::max(bundle.best_lower, c.value);
  }
  bundle.exact = bundle.best_upper == bundle.best_lower;
  return bundle;
}

}  // namespace paley
