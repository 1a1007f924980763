#include "paley/directions.hpp"

#include <algorithm>
#include <stdexcept>

namespace paley {

namespace {

std::vector<Elem> sorted_unique(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

PointSet PointSet::from_points(std::vector<Point> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  PointSet u;
  u.points_ = std::move(points);
  return u;
}

PointSet PointSet::cartesian(std::vector<Elem> a, std::vector<Elem> b) {
  a = sorted_unique(std::move(a));
  b = sorted_unique(std::move(b));
  PointSet u;
  u.points_.reserve(a.size() * b.size());
  for (Elem x : a) {
    for (Elem y : b) u.points_.emplace_back(x, y);
  }
  u.factors_.emplace(std::move(a), std::move(b));
  return u;
}

void DirectionSet::insert(Elem slope) {
  if (slope >= member_.size()) throw std::out_of_range("slope outside the field");
  if (!member_[slope]) {
    member_[slope] = true;
    ++finite_count_;
  }
}

std::vector<Elem> DirectionSet::finite_part() const {
  std::vector<Elem> out;
  out.reserve(finite_count_);
  for (Elem s = 0; s < member_.size(); ++s) {
    if (member_[s]) out.push_back(s);
  }
  return out;
}

std::vector<Elem> difference_set(const Field& f, const std::vector<Elem>& a) {
  std::vector<bool> seen(f.q(), false);
  std::vector<Elem> out;
  for (Elem x : a) {
    for (Elem y : a) {
      const Elem d = f.sub(x, y);
      if (!seen[d]) {
        seen[d] = true;
        out.push_back(d);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

DirectionSet direction_set_all_pairs(const Field& f, const PointSet& u) {
  if (u.size() < 2) throw std::invalid_argument("a direction set needs at least two points");
  DirectionSet dirs(f.q());
  const auto& pts = u.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const Elem dx = f.sub(pts[j].first, pts[i].first);
      const Elem dy = f.sub(pts[j].second, pts[i].second);
      if (dx == 0) {
        dirs.insert_infinity();
      } else {
        dirs.insert(f.div(dy, dx));
      }
    }
  }
  return dirs;
}

DirectionSet direction_set(const Field& f, const PointSet& u) {
  if (u.size() < 2) throw std::invalid_argument("a direction set needs at least two points");
  if (!u.is_cartesian()) return direction_set_all_pairs(f, u);

  // Slopes of A x B are (B - B) / (A - A) with a nonzero denominator; a zero
  // numerator gives slope 0 and a zero denominator the vertical direction.
  std::vector<Elem> da = difference_set(f, u.factor_a());
  std::vector<Elem> db = difference_set(f, u.factor_b());
  std::erase(da, Elem{0});
  std::erase(db, Elem{0});
  DirectionSet dirs(f.q());
  if (!da.empty()) dirs.insert(0);
  if (!db.empty()) dirs.insert_infinity();
  for (Elem x : da) {
    const Elem xi = f.inv(x);
    for (Elem y : db) dirs.insert(f.mul(y, xi));
  }
  return dirs;
}

unsigned largest_exponent_below(u64 n, u64 q, u64 p) {
  if (n == 0 || n > q) throw std::invalid_argument("need 1 <= n <= q");
  unsigned s = 0;
  u128 scaled = static_cast<u128>(n) * p;
  while (scaled <= q) {
    ++s;
    scaled *= p;
  }
  return s;
}

namespace {

void check_bound_args(u64 m, u64 n, u64 q) {
  if (m < 2 || n < 2) throw std::invalid_argument("both factors need at least two elements");
  if (static_cast<u128>(m) * n > q) throw std::invalid_argument("m n must not exceed q");
}

}  // namespace

i64 row_lower_bound(u64 m, u64 n, u64 q, u64 p) {
  check_bound_args(m, n, q);
  const u64 ps1 = *checked_pow(p, largest_exponent_below(n, q, p));
  return static_cast<i64>(m * n) - static_cast<i64>(ps1 * (n - 1)) + 1;
}

i64 thm16_lower_bound(u64 m, u64 n, u64 q, u64 p) {
  check_bound_args(m, n, q);
  const u64 ps1 = *checked_pow(p, largest_exponent_below(n, q, p));
  const u64 ps2 = *checked_pow(p, largest_exponent_below(m, q, p));
  const u64 subtract = std::min(ps1 * (n - 1), ps2 * (m - 1));
  return static_cast<i64>(m * n) - static_cast<i64>(subtract) + 1;
}

CorollaryReport cor15_check(const Field& f, const std::vector<Elem>& a_in) {
  if (f.e() % 2 == 0) throw std::invalid_argument("q must be an odd power of p");
  const std::vector<Elem> a = sorted_unique(a_in);
  const i64 size = static_cast<i64>(a.size());
  const u64 pr = *checked_pow(f.p(), (f.e() - 1) / 2);

  CorollaryReport rep;
  rep.rhs = size * size;
  rep.rhs_denominator = 2;
  // |A|^2 < q is |A| < sqrt(q) for integer |A|.
  rep.applicable = static_cast<u64>(size) > 2 * pr && static_cast<u128>(size) * size < f.q();
  rep.reason = rep.applicable ? "2p^r < |A| < sqrt(q)" : "requires 2p^r < |A| < sqrt(q)";
  if (size >= 2) {
    // (A-A)/(A-A) is the finite part of the direction set of A x A.
    rep.lhs = static_cast<i64>(direction_set(f, PointSet::cartesian(a, a)).finite_size());
  }
  rep.holds = 2 * rep.lhs > rep.rhs;
  return rep;
}

CorollaryReport cor23_check(const Field& f, const std::vector<Elem>& a_in) {
  const std::vector<Elem> a = sorted_unique(a_in);
  const i64 size = static_cast<i64>(a.size());
  const i64 q = static_cast<i64>(f.q());
  const i64 q_over_p = q / static_cast<i64>(f.p());

  CorollaryReport rep;
  rep.lhs = a.empty() ? 0 : static_cast<i64>(difference_set(f, a).size());
  rep.rhs = std::min(2 * size - q_over_p, q);
  rep.applicable = size > q_over_p;
  rep.reason = rep.applicable ? "|A| > q/p" : "requires |A| > q/p";
  rep.holds = rep.lhs >= rep.rhs;
  return rep;
}

CorollaryReport cor24_check(const Field& f, unsigned k_degree, const std::vector<Elem>& a_in) {
  if (k_degree == 0 || k_degree >= f.e() || f.e() % k_degree != 0) {
    throw std::invalid_argument("K must be a proper subfield");
  }
  const std::vector<Elem> k = f.subfield_elements(k_degree);
  const std::vector<Elem> a = sorted_unique(a_in);
  const i64 size = static_cast<i64>(a.size());
  const i64 k_order = static_cast<i64>(k.size());

  std::vector<bool> seen(f.q(), false);
  i64 count = 0;
  if (!a.empty()) {
    for (Elem delta : difference_set(f, a)) {
      for (Elem c : k) {
        const Elem v = f.mul(delta, c);
        if (!seen[v]) {
          seen[v] = true;
          ++count;
        }
      }
    }
  }

  CorollaryReport rep;
  rep.lhs = count;
  rep.rhs = size * (k_order - k_order / static_cast<i64>(f.p()) - 1);
  rep.applicable = static_cast<u64>(size) == f.q() / static_cast<u64>(k_order) + 1;
  rep.reason = rep.applicable ? "|A| = q/|K| + 1" : "requires |A| = q/|K| + 1";
  rep.holds = rep.lhs > rep.rhs;
  return rep;
}

}  // namespace paley
