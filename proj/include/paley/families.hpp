#pragma once

// Parametrized families of generalized Paley graphs whose clique number is
// pinned down by a subfield clique, plus the two instances showing that the
// hypotheses of the subfield criterion cannot be dropped.

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "paley/bounds.hpp"
#include "paley/graph.hpp"

namespace paley {

struct FamilyLimits {
  /// Certification-only instances.
  u64 max_q = 1'000'000;
  /// Instances that also run an exact clique search.
  u64 max_search_q = 2500;
};

struct FamilyInstance {
  std::string family;
  std::vector<std::pair<std::string, i64>> parameters;
  bool accepted = false;
  std::string reason;
  u64 q = 0;
  u64 d = 0;
  u64 p = 0;
  u64 k_order = 0;
  std::optional<Certificate> certificate;
  std::vector<std::string> notes;
};

/// q = p^{3m}, K = F_{p^m}, d = (p^{2m} + p^m + 1)/3 for p = 1 mod 3.
FamilyInstance family_ex42(u64 p, unsigned m, const FamilyLimits& limits = {});

/// q = p^{st}, K = F_{p^s}, d = (q-1)(p-1)/((p^s-1)(p^t-1)) for coprime s > t.
FamilyInstance family_ex43(u64 p, unsigned s, unsigned t, const FamilyLimits& limits = {});

/// p = 2x^2 + x + 1, d = 4x^2 + 3, q = p^3. Rejected (not thrown) when p is
/// composite.
FamilyInstance family_ex44(u64 x, const FamilyLimits& limits = {});

/// Integer identity (4x^2+3)(x^2+x+1) = p^2 + p + 1 with p = 2x^2+x+1.
bool ex44_identity_holds(u64 x);

struct SearchConfirmation {
  u64 d = 0;
  CliqueResult result;
};

struct Ex45Report {
  u64 p = 0;
  u64 q = 0;
  /// prop41 at d = 2(p^2+1): exact omega = p.
  Certificate half_density;
  /// best_bounds at d = p^2+1: exact omega = p^2 through F_{p^2}.
  BoundBundle full_density;
  /// prop41 at d = p^2+1 with K = F_p: condition (iii) fails.
  Certificate failed_prop41;
  std::vector<SearchConfirmation> searches;
};

/// Graph-level confirmation runs when with_search and q <= limits.max_search_q.
Ex45Report counterexample_ex45(u64 p, bool with_search, const FamilyLimits& limits = {},
                               std::chrono::milliseconds time_limit = kDefaultTimeLimit);

struct Ex46Report {
  u64 q = 15625;
  u64 d = 3;
  u64 k_order = 25;
  Certificate prop41;
  /// Most-significant digit first.
  std::vector<u64> digits_msf;
  bool f125_is_clique = false;
  BoundBundle bounds;
  i64 clique_number = 0;
};

Ex46Report counterexample_ex46();

}  // namespace paley
