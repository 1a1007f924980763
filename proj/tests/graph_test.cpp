#include <gtest/gtest.h>

#include "oracles.hpp"
#include "paley/graph.hpp"

namespace paley {
namespace {

std::vector<std::vector<u64>> brute_max_cliques(const Graph& g) {
  return oracle::all_maximum_cliques(g.order(), [&](u64 u, u64 v) { return g.adjacent(u, v); });
}

TEST(Build, PaleyExamples) {
  const Graph g9 = build_paley_graph(make_field(3, 2), 2);
  EXPECT_EQ(g9.order(), 9u);
  EXPECT_EQ(g9.degree(), 4u);
  for (Elem u = 0; u < 9; ++u) EXPECT_EQ(g9.neighbors(u).count(), 4u);

  const Graph g27 = build_paley_graph(make_field(3, 3), 13);
  EXPECT_EQ(g27.degree(), 2u);
  EXPECT_THROW(build_paley_graph(make_field(13, 1), 4), std::invalid_argument);
  EXPECT_THROW(build_paley_graph(make_field(13, 1), 1), std::invalid_argument);
}

TEST(Build, CyclotomicExamples) {
  const FieldPtr f27 = make_field(3, 3);
  const Graph a = build_cyclotomic_graph(f27, 13, {0});
  const Graph b = build_paley_graph(f27, 13);
  EXPECT_EQ(a.connection_set(), b.connection_set());
  EXPECT_EQ(build_cyclotomic_graph(f27, 13, {0, 1}).degree(), 4u);

  const FieldPtr f13 = make_field(13, 1);
  const Graph c = build_cyclotomic_graph(f13, 6, {0, 3});
  EXPECT_EQ(c.degree(), 4u);
  EXPECT_EQ(c.connection_set(), (std::vector<Elem>{1, 5, 8, 12}));
  // (q-1)/d = 3 is odd, so -1 is outside every coset union of size 1.
  EXPECT_THROW(build_cyclotomic_graph(f13, 4, {1}), std::invalid_argument);
}

TEST(Build, AdjacencyIsDthPowerDifference) {
  const FieldPtr f = make_field(5, 2);
  const Graph g = build_paley_graph(f, 3);
  for (Elem u = 0; u < 25; ++u) {
    EXPECT_FALSE(g.adjacent(u, u));
    for (Elem v = 0; v < 25; ++v) {
      if (u != v) EXPECT_EQ(g.adjacent(u, v), f->is_dth_power(f->sub(u, v), 3));
    }
  }
}

TEST(IsClique, Examples) {
  EXPECT_TRUE(is_clique(build_paley_graph(make_field(3, 3), 13), {0, 1, 2}));
  const FieldPtr f81 = make_field(3, 4);
  EXPECT_TRUE(is_clique(build_paley_graph(f81, 10), f81->subfield_elements(2)));
  EXPECT_FALSE(is_clique(build_paley_graph(make_field(13, 1), 2), {0, 1, 2}));
  EXPECT_TRUE(is_clique(build_paley_graph(make_field(13, 1), 2), {}));
}

TEST(MaxClique, Examples) {
  const auto r9 = max_clique(build_paley_graph(make_field(3, 2), 2));
  EXPECT_EQ(r9.size, 3u);
  EXPECT_EQ(r9.witness, (std::vector<Elem>{0, 1, 2}));
  EXPECT_TRUE(r9.optimal);

  const auto r13 = max_clique(build_paley_graph(make_field(13, 1), 2));
  EXPECT_EQ(r13.size, 3u);
  EXPECT_TRUE(r13.optimal);

  const auto r27 = max_clique(build_paley_graph(make_field(3, 3), 13));
  EXPECT_EQ(r27.size, 3u);
  EXPECT_TRUE(r27.optimal);
}

// Reported witness is the lexicographically least maximum clique.
TEST(MaxClique, MatchesBronKerbosch) {
  for (auto [p, e] : std::vector<std::pair<u64, unsigned>>{{13, 1}, {17, 1}, {5, 2}, {29, 1}, {37, 1}, {7, 2}, {41, 1}}) {
    const FieldPtr f = make_field(p, e);
    for (u64 d = 2; 2 * d <= f->q() - 1; ++d) {
      if ((f->q() - 1) % (2 * d) != 0) continue;
      const Graph g = build_paley_graph(f, d);
      const auto r = max_clique(g);
      const auto all = brute_max_cliques(g);
      ASSERT_TRUE(r.optimal);
      EXPECT_EQ(r.size, all.front().size()) << f->q() << " " << d;
      EXPECT_EQ(r.witness, all.front()) << f->q() << " " << d;
    }
  }
}

TEST(MaxClique, CyclotomicMatchesBronKerbosch) {
  const FieldPtr f = make_field(3, 3);
  for (u64 j = 1; j < 13; ++j) {
    const Graph g = build_cyclotomic_graph(f, 13, {0, j});
    const auto r = max_clique(g);
    EXPECT_EQ(r.size, brute_max_cliques(g).front().size()) << j;
    EXPECT_TRUE(is_clique(g, r.witness));
  }
}

TEST(MaxClique, TimeLimitReturnsPartial) {
  const Graph g = build_paley_graph(make_field(3, 6), 2);
  const auto r = max_clique(g, std::chrono::milliseconds(0));
  EXPECT_TRUE(is_clique(g, r.witness));
  EXPECT_EQ(r.witness.size(), r.size);
}

TEST(Enumerate, Examples) {
  const auto e9 = enumerate_max_cliques(build_paley_graph(make_field(3, 2), 2), {0, 1});
  EXPECT_TRUE(e9.complete);
  EXPECT_EQ(e9.cliques, (std::vector<std::vector<Elem>>{{0, 1, 2}}));

  const Graph g13 = build_paley_graph(make_field(13, 1), 2);
  const auto e13 = enumerate_max_cliques(g13, {});
  EXPECT_EQ(e13.cliques, brute_max_cliques(g13));
  EXPECT_EQ(e13.clique_number, 3u);

  EXPECT_THROW(enumerate_max_cliques(g13, {0, 2}), std::invalid_argument);
}

TEST(Enumerate, ContainingVertexMatchesBruteForce) {
  const Graph g = build_paley_graph(make_field(5, 2), 2);
  const auto all = brute_max_cliques(g);
  for (Elem v : {0u, 7u}) {
    std::vector<std::vector<Elem>> expect;
    for (const auto& c : all) {
      if (std::find(c.begin(), c.end(), v) != c.end()) expect.push_back(c);
    }
    EXPECT_EQ(enumerate_max_cliques(g, {v}).cliques, expect);
  }
}

}  // namespace
}  // namespace paley
