// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "paley/bounds.hpp"
#include "paley/directions.hpp"
#include "paley/families.hpp"
#include "paley/graph.hpp"
#include "paley/redei.hpp"

using namespace paley;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(const std::string& id, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= limit_seconds) {
    o.ok = false;
    o.detail << " [too slow]";
  }
  char timing[64];
  std::snprintf(timing, sizeof timing, " (%.3f s, limit %.0f s)", secs, limit_seconds);
  std::cout << (o.ok ? "PASS " : "FAIL ") << id << ":" << o.detail.str() << timing << std::endl;
  if (!o.ok) ++failures;
}

std::vector<Elem> random_subset(std::mt19937_64& rng, u64 q, std::size_t k) {
  std::set<Elem> s;
  while (s.size() < k) s.insert(rng() % q);
  return {s.begin(), s.end()};
}

std::size_t omega(u64 p, unsigned e, u64 d, bool* optimal = nullptr) {
  const auto r = max_clique(build_paley_graph(make_field(p, e), d));
  if (optimal) *optimal = r.optimal;
  return r.size;
}

}  // namespace

int main() {
  criterion("AC1", 1, [](Outcome& o) {
    bool opt = false;
    const auto w = omega(3, 3, 13, &opt);
    const i64 t11 = thm11_bound(27, 13);
    const i64 t13 = thm13_bound(27, 13);
    o.detail << " omega(GP(27,13)) = " << w << ", thm11 = " << t11 << ", thm13 = " << t13;
    o.require(opt && w == 3, "omega = 3");
    o.require(t11 == 3 && t13 == 3, "thm11 = thm13 = 3");
  });

  criterion("AC2", 5, [](Outcome& o) {
    bool opt20 = false, opt10 = false;
    const auto w20 = omega(3, 4, 20, &opt20);
    const auto w10 = omega(3, 4, 10, &opt10);
    const Certificate good = prop41_certify(81, 3, 20);
    const Certificate bad = prop41_certify(81, 3, 10);
    o.detail << " omega(GP(81,20)) = " << w20 << ", omega(GP(81,10)) = " << w10
             << ", prop41(81,3,20) = " << to_string(good.kind) << " " << good.value
             << ", prop41(81,3,10) r = " << bad.remainder_r.value_or(0) << " vs " << bad.conditions.at(2).rhs;
    o.require(opt20 && opt10 && w20 == 3 && w10 == 9, "exact search values");
    o.require(good.applicable && good.kind == BoundKind::kExact && good.value == 3, "prop41(81,3,20) exact 3");
    o.require(!bad.applicable && !bad.conditions.at(2).holds && bad.remainder_r == 8u && bad.conditions.at(2).rhs == 6,
              "prop41(81,3,10) fails (iii) with r = 8 >= 6");
  });

  criterion("AC3", 60, [](Outcome& o) {
    const Certificate c = prop41_certify(343, 7, 19);
    const FieldPtr f = make_field(7, 3);
    const Graph g = build_paley_graph(f, 19);
    const auto r = max_clique(g);
    const auto en = enumerate_max_cliques(g, {0, 1});
    o.detail << " prop41 = " << c.value << ", search = " << r.size << ", cliques through {0,1} = " << en.cliques.size();
    o.require(c.applicable && c.kind == BoundKind::kExact && c.value == 7, "prop41 exact 7");
    o.require(r.optimal && r.size == 7, "search gives 7");
    o.require(en.complete && en.cliques.size() == 1 && en.cliques[0] == f->subfield_elements(1), "unique clique F_7");
  });

  criterion("AC4", 10, [](Outcome& o) {
    const Ex46Report r = counterexample_ex46();
    const auto& cs = r.prop41.conditions;
    o.detail << " (i) " << (cs.at(0).holds ? "pass" : "fail") << ", (ii) " << cs.at(1).lhs << " vs " << cs.at(1).rhs
             << " " << (cs.at(1).holds ? "pass" : "fail") << ", (iii) " << cs.at(2).lhs << " < " << cs.at(2).rhs << " "
             << (cs.at(2).holds ? "pass" : "fail") << ", omega = " << r.clique_number;
    o.require(cs.at(0).holds, "(i) passes");
    o.require(cs.at(2).holds && cs.at(2).lhs == 83 && cs.at(2).rhs == 100, "(iii) passes with 83 < 100");
    o.require(!cs.at(1).holds && cs.at(1).lhs == 15625 && cs.at(1).rhs == 1950, "(ii) fails with 15625 >= 1950");
    o.require(r.f125_is_clique, "F_125 is a clique");
    o.require(r.bounds.exact && r.clique_number == 125 && trivial_bound(15625) == 125, "omega = 125 via trivial bound");
    o.require(r.digits_msf == std::vector<u64>{1, 3, 1, 3, 1, 3}, "digits of 5208");
  });

  criterion("AC5", 60, [](Outcome& o) {
    u64 cases = 0, violations = 0;
    const FieldPtr f9 = make_field(3, 2);
    std::vector<std::vector<Elem>> subsets;
    for (unsigned mask = 0; mask < 512; ++mask) {
      std::vector<Elem> s;
      for (Elem x = 0; x < 9; ++x) {
        if (mask >> x & 1) s.push_back(x);
      }
      if (s.size() >= 2 && s.size() <= 3) subsets.push_back(s);
    }
    for (const auto& a : subsets) {
      for (const auto& b : subsets) {
        if (a.size() * b.size() > 9) continue;
        const auto ds = direction_set_all_pairs(*f9, PointSet::cartesian(a, b));
        ++cases;
        if (static_cast<i64>(ds.size()) < thm16_lower_bound(a.size(), b.size(), 9, 3)) ++violations;
      }
    }
    const auto k = f9->subfield_elements(1);
    const auto sharp = direction_set(*f9, PointSet::cartesian(k, k)).size();
    std::mt19937_64 rng(2024);
    for (auto [p, e] : std::vector<std::pair<u64, unsigned>>{{3, 3}, {5, 2}}) {
      const FieldPtr f = make_field(p, e);
      for (int i = 0; i < 500; ++i) {
        const u64 m = 2 + rng() % (f->q() / 2 - 1);
        const u64 n = 2 + rng() % (f->q() / m - 1);
        const auto a = random_subset(rng, f->q(), m);
        const auto b = random_subset(rng, f->q(), n);
        const auto ds = direction_set_all_pairs(*f, PointSet::cartesian(a, b));
        ++cases;
        if (static_cast<i64>(ds.size()) < thm16_lower_bound(m, n, f->q(), p)) ++violations;
      }
    }
    o.detail << " " << cases << " cases, " << violations << " violations, |D(F_3 x F_3)| = " << sharp;
    o.require(violations == 0, "no violations");
    o.require(sharp == 4 && thm16_lower_bound(3, 3, 9, 3) == 4, "equality at F_3 x F_3");
  });

  criterion("AC6", 60, [](Outcome& o) {
    std::mt19937_64 rng(6);
    u64 mismatches = 0, violations = 0, cases = 0;
    for (u64 p : {13, 17}) {
      const FieldPtr f = make_field(p, 1);
      for (int i = 0; i < 100; ++i) {
        u64 m = 0, n = 0;
        do {
          m = 2 + rng() % (p / 2 - 1);
          n = 2 + rng() % (p / 2 - 1);
        } while (m * n >= p);
        const auto a = random_subset(rng, p, m);
        const auto b = random_subset(rng, p, n);
        const i64 bound = thm16_lower_bound(m, n, p, p);
        ++cases;
        if (bound != static_cast<i64>(m * n - std::min(m, n) + 2)) ++mismatches;
        if (static_cast<i64>(direction_set(*f, PointSet::cartesian(a, b)).size()) < bound) ++violations;
      }
    }
    o.detail << " " << cases << " cases, " << mismatches << " formula mismatches, " << violations << " violations";
    o.require(cases == 200 && mismatches == 0 && violations == 0, "bound equals mn - min(m,n) + 2 and holds");
  });

  criterion("AC7", 300, [](Outcome& o) {
    bool opt13 = false;
    const auto w13 = omega(13, 1, 2, &opt13);
    o.require(thm11_bound(13, 2) == 3 && opt13 && w13 == 3, "thm11(13,2) = 3 = omega(Paley(13))");
    u64 graphs = 0, checks = 0, violations = 0, timeouts = 0;
    for (u64 q = 3; q <= 361; q += 2) {
      const auto pp = prime_power(q);
      if (!pp) continue;
      const FieldPtr f = make_field(pp->first, pp->second);
      for (u64 d : divisors((q - 1) / 2)) {
        if (d < 2) continue;
        const auto r = max_clique(build_paley_graph(f, d));
        ++graphs;
        if (!r.optimal) {
          ++timeouts;
          continue;
        }
        const i64 w = static_cast<i64>(r.size);
        for (const auto& c : best_bounds(q, d).certificates) {
          if (!c.applicable) continue;
          ++checks;
          const bool bad = (c.kind != BoundKind::kLower && c.value < w) || (c.kind != BoundKind::kUpper && c.value > w);
          if (bad) ++violations;
        }
      }
    }
    o.detail << " thm11(13,2) = 3, " << graphs << " graphs, " << checks << " bound checks, " << violations
             << " violations, " << timeouts << " timeouts";
    o.require(violations == 0 && timeouts == 0, "sweep sound");
  });

  criterion("AC8", 60, [](Outcome& o) {
    bool opt = false;
    const auto w = omega(3, 5, 11, &opt);
    const i64 t13 = thm13_bound(243, 11);
    o.detail << " thm13(243,11) = " << t13 << ", trivial = " << trivial_bound(243) << ", omega = " << w;
    o.require(t13 == 10 && trivial_bound(243) == 15, "thm13 = 10 < 15");
    o.require(opt && static_cast<i64>(w) <= t13, "search completes and omega <= 10");
  });

  criterion("AC9", 60, [](Outcome& o) {
    const FieldPtr f = make_field(3, 3);
    const Poly xq = x_q_minus_x(*f);
    std::mt19937_64 rng(9);
    u64 slices = 0, bad_divides = 0, quotients = 0, bad_quotients = 0, bad_roots = 0;
    for (int t = 0; t < 200; ++t) {
      std::set<Point> pts;
      const std::size_t k = 4 + rng() % 6;
      while (pts.size() < k) pts.emplace(rng() % 27, rng() % 27);
      const PointSet u = PointSet::from_points({pts.begin(), pts.end()});
      const DirectionSet ds = direction_set(*f, u);
      for (Elem y0 = 0; y0 < 27; ++y0) {
        const Poly r = redei_slice(*f, u, y0);
        ++slices;
        if (divides_xq_minus_x(*f, r) == ds.contains(y0)) ++bad_divides;
        if (!ds.contains(y0)) {
          ++quotients;
          if (mul(*f, szonyi_quotient(*f, u, y0), r) != xq) ++bad_quotients;
        }
      }
    }
    for (int i = 0; i < 1000; ++i) {
      std::vector<Elem> c(1 + rng() % 8);
      for (auto& x : c) x = rng() % 27;
      c.back() = 1 + rng() % 26;
      const Poly g(c);
      const auto dec = pth_power_decompose(*f, pow(*f, g, 3));
      if (!dec.is_deriv_zero || !dec.root || *dec.root != g) ++bad_roots;
    }
    o.detail << " " << slices << " slices (" << bad_divides << " wrong), " << quotients << " quotients ("
             << bad_quotients << " wrong), 1000 cube round trips (" << bad_roots << " wrong)";
    o.require(bad_divides == 0 && bad_quotients == 0 && bad_roots == 0, "all identities hold");
  });

  criterion("AC10", 60, [](Outcome& o) {
    u64 c23 = 0, c23_bad = 0;
    const FieldPtr f9 = make_field(3, 2);
    for (unsigned mask = 0; mask < 512; ++mask) {
      if (__builtin_popcount(mask) != 4) continue;
      std::vector<Elem> a;
      for (Elem x = 0; x < 9; ++x) {
        if (mask >> x & 1) a.push_back(x);
      }
      const auto r = cor23_check(*f9, a);
      ++c23;
      if (!r.applicable || !r.holds || r.lhs < 5) ++c23_bad;
    }
    std::mt19937_64 rng(10);
    const FieldPtr f125 = make_field(5, 3);
    u64 c15_bad = 0;
    i64 c15_min = 1 << 30;
    for (int i = 0; i < 100; ++i) {
      const auto r = cor15_check(*f125, random_subset(rng, 125, 11));
      c15_min = std::min(c15_min, r.lhs);
      if (!r.applicable || !r.holds || 2 * r.lhs <= 121) ++c15_bad;
    }
    const FieldPtr f27 = make_field(3, 3);
    u64 c24_bad = 0;
    i64 c24_min = 1 << 30;
    for (int i = 0; i < 100; ++i) {
      const auto r = cor24_check(*f27, 1, random_subset(rng, 27, 10));
      c24_min = std::min(c24_min, r.lhs);
      if (!r.applicable || !r.holds || r.lhs <= 10) ++c24_bad;
    }
    o.detail << " cor23 " << c23 << " sets (" << c23_bad << " bad), cor15 min " << c15_min << " > 60.5 (" << c15_bad
             << " bad), cor24 min " << c24_min << " > 10 (" << c24_bad << " bad)";
    o.require(c23 == 126 && c23_bad == 0 && c15_bad == 0 && c24_bad == 0, "corollaries hold");
  });

  std::cout << (failures == 0 ? "all acceptance criteria passed" : "acceptance failures: " + std::to_string(failures))
            << std::endl;
  return failures == 0 ? 0 : 1;
}
