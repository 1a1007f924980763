#pragma once

// Clique-number bounds for generalized Paley graphs, each packaged as a
// Certificate recording its hypotheses, verdict and witness. All evaluation is
// exact integer arithmetic; square roots appear only as isqrt comparisons.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "paley/arith.hpp"
#include "paley/field.hpp"

namespace paley {

enum class BoundKind { kUpper, kLower, kExact };

const char* to_string(BoundKind kind);

struct BoundInputs {
  u64 q = 0;
  u64 p = 0;
  unsigned e = 0;
  u64 d = 0;
  std::optional<u64> k_order;
  std::optional<std::vector<u64>> index_set;
};

/// One named hypothesis, evaluated as `lhs relation rhs`.
struct Condition {
  std::string id;
  std::string relation;
  i64 lhs = 0;
  i64 rhs = 0;
  bool holds = false;
};

struct Witness {
  /// The lower bound comes from a subfield of this degree over F_p ...
  std::optional<unsigned> subfield_degree;
  /// ... or from an explicit clique.
  std::vector<Elem> clique;
};

struct Certificate {
  std::string bound;
  BoundInputs inputs;
  i64 value = 0;
  BoundKind kind = BoundKind::kUpper;
  bool applicable = true;
  std::string reason;
  std::optional<Witness> witness;
  std::vector<Condition> conditions;
  /// r in q = p^{2r+1}.
  std::optional<u64> exponent_r;
  /// ((q-1)/d) mod (p |K|).
  std::optional<u64> remainder_r;
  /// False when the bound fell back to a weaker one without new information.
  bool informative = true;
  /// "proof-inequality" for bounds pinned to an inequality inside a proof
  /// rather than a stated closed form.
  std::string provenance;
};

/// Thrown when an input violates an operation's preconditions.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PrimePower {
  u64 p;
  unsigned e;
};

/// Throws PreconditionError unless q is an odd prime power.
PrimePower odd_prime_power(u64 q);

/// Throws PreconditionError unless d > 1 and q = 1 mod 2d.
void require_paley_parameters(u64 q, u64 d);

i64 trivial_bound(u64 q);
Certificate trivial_certificate(u64 q, u64 d);

/// Minimum over admissible n in [2, isqrt(q)+1] of
/// max(n - 1, floor((q-1)/(d n)) + 1), where n is admissible when adding n - 1
/// and (q-1)/d in base p carries nothing. Falls back to the trivial bound
/// (informative = false) when no n is admissible.
Certificate thm11_certificate(u64 q, u64 d);
i64 thm11_bound(u64 q, u64 d);

/// Largest n with n <= B or n^2 - B(n-1) + 1 <= budget + 2, for B = p^r.
i64 direction_budget_bound(u64 pr, u64 budget);

/// q = p^{2r+1}: largest n with n <= p^r or n^2 - p^r (n-1) + 1 <= (q-1)/d + 2.
Certificate thm13_certificate(u64 q, u64 d);
i64 thm13_bound(u64 q, u64 d);

/// q = p^3, d | p^2+p+1, d > p: omega(GP(p^3, d)) = p.
Certificate thm14_certify(u64 p, u64 d);

/// Checks (i) d | (q-1)/(|K|-1), (ii) q < d |K| (|K|+1),
/// (iii) ((q-1)/d) mod (p|K|) < (p-1)|K|. Exact omega = |K| when all hold.
Certificate prop41_certify(u64 q, u64 k_order, u64 d);

/// Cyclotomic analogue with budget |I-I| (q-1)/d; I - I computed in Z/dZ.
Certificate remark32_certificate(u64 q, u64 d, std::vector<u64> index_set);
i64 remark32_bound(u64 q, u64 d, std::vector<u64> index_set);

/// |I - I| in Z/dZ.
u64 difference_count_mod(const std::vector<u64>& index_set, u64 d);

/// Largest m with F_{p^m} a clique of GP(q, d), i.e. d | (q-1)/(p^m - 1);
/// nullopt if none.
std::optional<unsigned> largest_clique_subfield(u64 q, u64 d);
Certificate subfield_lower_certificate(u64 q, u64 d);

struct BoundBundle {
  u64 q = 0;
  u64 d = 0;
  /// Sorted by bound name.
  std::vector<Certificate> certificates;
  i64 best_upper = 0;
  i64 best_lower = 0;
  bool exact = false;
};

BoundBundle best_bounds(u64 q, u64 d);

}  // namespace paley
