#pragma once

// Directions determined by point sets in AG(2, q), the lower bound for
// Cartesian products, and the difference-set corollaries that follow from it.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "paley/field.hpp"

namespace paley {

using Point = std::pair<Elem, Elem>;

class PointSet {
 public:
  /// Deduplicates; the result carries no Cartesian factorization.
  static PointSet from_points(std::vector<Point> points);
  /// A x B. A and B are deduplicated and sorted.
  static PointSet cartesian(std::vector<Elem> a, std::vector<Elem> b);

  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool is_cartesian() const { return factors_.has_value(); }
  const std::vector<Elem>& factor_a() const { return factors_->first; }
  const std::vector<Elem>& factor_b() const { return factors_->second; }

 private:
  std::vector<Point> points_;
  std::optional<std::pair<std::vector<Elem>, std::vector<Elem>>> factors_;
};

/// A subset of GF(q) together with the vertical direction. Infinity is a flag,
/// never an in-field value.
class DirectionSet {
 public:
  explicit DirectionSet(u64 q) : member_(q, false) {}

  void insert(Elem slope);
  void insert_infinity() { infinity_ = true; }

  bool contains(Elem slope) const { return slope < member_.size() && member_[slope]; }
  bool has_infinity() const { return infinity_; }
  std::size_t finite_size() const { return finite_count_; }
  std::size_t size() const { return finite_count_ + (infinity_ ? 1 : 0); }
  /// Ascending.
  std::vector<Elem> finite_part() const;

  bool operator==(const DirectionSet& other) const = default;

 private:
  std::vector<bool> member_;
  std::size_t finite_count_ = 0;
  bool infinity_ = false;
};

/// Uses the difference-set shortcut for Cartesian input and all pairs
/// otherwise. Throws std::invalid_argument for |U| < 2.
DirectionSet direction_set(const Field& f, const PointSet& u);

/// Slopes over every pair of points, ignoring any factorization.
DirectionSet direction_set_all_pairs(const Field& f, const PointSet& u);

/// m n - min{p^s1 (n - 1), p^s2 (m - 1)} + 1 where s1 (resp. s2) is the largest
/// s with p^s n <= q (resp. p^s m <= q). Requires m, n >= 2 and m n <= q.
i64 thm16_lower_bound(u64 m, u64 n, u64 q, u64 p);

/// The row-only form mn - p^s1 (n - 1) + 1, valid for unions of n rows of
/// m points each.
i64 row_lower_bound(u64 m, u64 n, u64 q, u64 p);

/// Largest s with p^s * n <= q.
unsigned largest_exponent_below(u64 n, u64 q, u64 p);

/// A - A as a sorted set.
std::vector<Elem> difference_set(const Field& f, const std::vector<Elem>& a);

struct CorollaryReport {
  i64 lhs = 0;
  /// Right-hand side scaled by `rhs_denominator` so that half-integers stay
  /// exact; the compared quantity is rhs / rhs_denominator.
  i64 rhs = 0;
  i64 rhs_denominator = 1;
  bool holds = false;
  bool applicable = false;
  std::string reason;
};

/// |(A-A)/(A-A)| against |A|^2 / 2. Requires q an odd power of p.
CorollaryReport cor15_check(const Field& f, const std::vector<Elem>& a);

/// |A-A| against min{2|A| - q/p, q}.
CorollaryReport cor23_check(const Field& f, const std::vector<Elem>& a);

/// |(A-A)K| against |A|(|K| - |K|/p - 1) for the proper subfield K of the
/// given degree.
CorollaryReport cor24_check(const Field& f, unsigned k_degree, const std::vector<Elem>& a);

}  // namespace paley
