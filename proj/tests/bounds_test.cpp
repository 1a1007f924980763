#include <gtest/gtest.h>

#include "paley/bounds.hpp"
#include "paley/graph.hpp"

namespace paley {
namespace {

const Certificate* find(const BoundBundle& b, const std::string& name) {
  for (const auto& c : b.certificates) {
    if (c.bound == name) return &c;
  }
  return nullptr;
}

TEST(Trivial, Examples) {
  EXPECT_EQ(trivial_bound(81), 9);
  EXPECT_EQ(trivial_bound(27), 5);
  EXPECT_EQ(trivial_bound(15625), 125);
}

TEST(Thm11, Examples) {
  EXPECT_EQ(thm11_bound(13, 2), 3);
  EXPECT_EQ(thm11_bound(27, 13), 3);
  EXPECT_EQ(thm11_bound(9, 2), 3);
  EXPECT_THROW(thm11_bound(13, 4), PreconditionError);
  EXPECT_THROW(thm11_bound(13, 1), PreconditionError);
}

// Direct evaluation of the minimum with an explicit binomial table.
TEST(Thm11, MatchesDirectMinimum) {
  for (u64 q : {13, 17, 29, 37, 41, 53, 61, 73, 89, 97, 101, 109, 113}) {
    for (u64 d = 2; 2 * d <= q - 1; ++d) {
      if ((q - 1) % (2 * d) != 0) continue;
      const u64 l = (q - 1) / d;
      // C(n-1+l, l) mod q by Pascal's rule.
      std::vector<std::vector<u64>> c(l + isqrt(q) + 2);
      for (std::size_t i = 0; i < c.size(); ++i) {
        c[i].assign(i + 1, 1);
        for (std::size_t k = 1; k < i; ++k) c[i][k] = (c[i - 1][k - 1] + c[i - 1][k]) % q;
      }
      i64 best = trivial_bound(q);
      bool any = false;
      for (u64 n = 2; n <= isqrt(q) + 1; ++n) {
        if (c[n - 1 + l][l] == 0) continue;
        const i64 v = std::max<i64>(n - 1, l / n + 1);
        best = any ? std::min(best, v) : v;
        any = true;
      }
      EXPECT_EQ(thm11_bound(q, d), best) << q << " " << d;
    }
  }
}

TEST(Thm13, Examples) {
  EXPECT_EQ(thm13_bound(27, 13), 3);
  EXPECT_EQ(thm13_bound(243, 11), 10);
  EXPECT_EQ(thm13_bound(243, 121), 9);
  EXPECT_THROW(thm13_bound(81, 10), PreconditionError);
  const Certificate c = thm13_certificate(243, 11);
  EXPECT_EQ(c.exponent_r, 2u);
  EXPECT_EQ(c.kind, BoundKind::kUpper);
}

TEST(DirectionBudget, Brute) {
  for (u64 pr : {1, 3, 9, 27}) {
    for (u64 budget = 0; budget < 300; ++budget) {
      i64 best = 0;
      for (i64 n = 1; n < 1000; ++n) {
        const i64 lhs = n * n - static_cast<i64>(pr) * (n - 1) + 1;
        if (n <= static_cast<i64>(pr) || lhs <= static_cast<i64>(budget) + 2) best = n;
      }
      EXPECT_EQ(direction_budget_bound(pr, budget), best) << pr << " " << budget;
    }
  }
}

TEST(Thm14, Examples) {
  const Certificate a = thm14_certify(3, 13);
  EXPECT_EQ(a.kind, BoundKind::kExact);
  EXPECT_EQ(a.value, 3);
  const Certificate b = thm14_certify(11, 19);
  EXPECT_EQ(b.kind, BoundKind::kExact);
  EXPECT_EQ(b.value, 11);
  EXPECT_THROW(thm14_certify(3, 1), PreconditionError);
  EXPECT_THROW(thm14_certify(7, 3), PreconditionError);   // d <= p
  EXPECT_THROW(thm14_certify(5, 11), PreconditionError);  // 11 does not divide 31
}

TEST(Prop41, Examples) {
  const Certificate a = prop41_certify(81, 3, 20);
  EXPECT_TRUE(a.applicable);
  EXPECT_EQ(a.kind, BoundKind::kExact);
  EXPECT_EQ(a.value, 3);
  ASSERT_TRUE(a.witness);
  EXPECT_EQ(a.witness->subfield_degree, 1u);

  const Certificate b = prop41_certify(343, 7, 19);
  EXPECT_TRUE(b.applicable);
  EXPECT_EQ(b.value, 7);
  EXPECT_EQ(b.remainder_r, 18u);

  const Certificate c = prop41_certify(15625, 25, 3);
  EXPECT_FALSE(c.applicable);
  ASSERT_EQ(c.conditions.size(), 3u);
  EXPECT_TRUE(c.conditions[0].holds);
  EXPECT_FALSE(c.conditions[1].holds);
  EXPECT_EQ(c.conditions[1].lhs, 15625);
  EXPECT_EQ(c.conditions[1].rhs, 1950);
  EXPECT_TRUE(c.conditions[2].holds);
  EXPECT_EQ(c.conditions[2].lhs, 83);
  EXPECT_EQ(c.conditions[2].rhs, 100);
  EXPECT_NE(c.reason.find("(ii)"), std::string::npos);

  const Certificate d = prop41_certify(81, 3, 10);
  EXPECT_FALSE(d.applicable);
  EXPECT_EQ(d.remainder_r, 8u);
  EXPECT_FALSE(d.conditions[2].holds);
  EXPECT_EQ(d.conditions[2].rhs, 6);

  EXPECT_THROW(prop41_certify(81, 5, 20), PreconditionError);
  EXPECT_THROW(prop41_certify(81, 81, 20), PreconditionError);
}

TEST(Prop41, ExactImpliesSubfieldClique) {
  for (auto [p, e] : std::vector<std::pair<u64, unsigned>>{{3, 4}, {3, 6}, {5, 4}, {7, 3}}) {
    const FieldPtr f = make_field(p, e);
    for (u64 d : divisors((f->q() - 1) / 2)) {
      if (d < 2) continue;
      for (unsigned m = 1; m < e; ++m) {
        if (e % m != 0) continue;
        const Certificate c = prop41_certify(f->q(), *checked_pow(p, m), d);
        if (!c.applicable) continue;
        EXPECT_TRUE(is_clique(build_paley_graph(f, d), f->subfield_elements(m))) << f->q() << " " << d;
      }
    }
  }
}

TEST(Remark32, Examples) {
  EXPECT_EQ(remark32_bound(27, 13, {0}), 3);
  EXPECT_EQ(remark32_bound(27, 13, {0, 1}), 4);
  EXPECT_EQ(remark32_bound(243, 11, {0}), 10);
  EXPECT_EQ(difference_count_mod({0, 1}, 13), 3u);
  const Certificate c = remark32_certificate(27, 13, {0, 1});
  EXPECT_EQ(c.provenance, "derived-from-proof");
  EXPECT_THROW(remark32_bound(81, 10, {0}), PreconditionError);
  // I - I covers Z/3Z.
  EXPECT_THROW(remark32_bound(343, 3, {0, 1}), PreconditionError);
}

TEST(Remark32, BoundsCyclotomicCliques) {
  const FieldPtr f = make_field(3, 3);
  for (u64 j = 1; j < 13; ++j) {
    const Graph g = build_cyclotomic_graph(f, 13, {0, j});
    EXPECT_GE(remark32_bound(27, 13, {0, j}), static_cast<i64>(max_clique(g).size)) << j;
  }
}

TEST(BestBounds, Examples) {
  const BoundBundle a = best_bounds(27, 13);
  EXPECT_TRUE(a.exact);
  EXPECT_EQ(a.best_upper, 3);
  EXPECT_EQ(find(a, "thm11")->value, 3);
  EXPECT_EQ(find(a, "thm13")->value, 3);

  const BoundBundle b = best_bounds(81, 10);
  EXPECT_TRUE(b.exact);
  EXPECT_EQ(b.best_lower, 9);
  EXPECT_EQ(find(b, "subfield")->value, 9);
  EXPECT_EQ(find(b, "trivial")->value, 9);

  const BoundBundle c = best_bounds(15625, 3);
  EXPECT_TRUE(c.exact);
  EXPECT_EQ(c.best_lower, 125);
  EXPECT_EQ(c.best_upper, 125);

  for (std::size_t i = 1; i < c.certificates.size(); ++i) {
    EXPECT_LE(c.certificates[i - 1].bound, c.certificates[i].bound);
  }
}

TEST(BestBounds, SoundAgainstSearch) {
  for (u64 q : {25, 27, 49, 81, 121, 125, 169, 243}) {
    const auto [p, e] = *prime_power(q);
    const FieldPtr f = make_field(p, e);
    for (u64 d : divisors((q - 1) / 2)) {
      if (d < 2) continue;
      const auto omega = static_cast<i64>(max_clique(build_paley_graph(f, d)).size);
      const BoundBundle b = best_bounds(q, d);
      EXPECT_LE(b.best_lower, omega) << q << " " << d;
      EXPECT_GE(b.best_upper, omega) << q << " " << d;
    }
  }
}

}  // namespace
}  // namespace paley
