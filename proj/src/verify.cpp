#include "paley/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/bron_kerbosch_all_cliques.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/random/uniform_int_distribution.hpp>

#include "paley/bounds.hpp"
#include "paley/directions.hpp"
#include "paley/families.hpp"
#include "paley/redei.hpp"

namespace paley {

u64 SuiteReport::violations() const {
  u64 n = 0;
  for (const auto& c : checks) n += c.violations;
  return n;
}

u64 SuiteReport::timeouts() const {
  u64 n = 0;
  for (const auto& c : checks) n += c.timeouts;
  return n;
}

namespace {

constexpr std::size_t kMaxRecordedFailures = 5;

class Check {
 public:
  explicit Check(std::string name) { out_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++out_.cases;
    if (ok) return;
    ++out_.violations;
    if (out_.failures.size() < kMaxRecordedFailures) out_.failures.push_back(describe());
  }
  void timeout() { ++out_.timeouts; }
  CheckOutcome done() { return std::move(out_); }

 private:
  CheckOutcome out_;
};

using Rng = std::mt19937_64;

u64 uniform(Rng& rng, u64 lo, u64 hi) { return boost::random::uniform_int_distribution<u64>(lo, hi)(rng); }

std::vector<Elem> random_subset(Rng& rng, u64 q, std::size_t k) {
  std::vector<Elem> pool(q);
  std::iota(pool.begin(), pool.end(), Elem{0});
  for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[uniform(rng, i, q - 1)]);
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::string join(const std::vector<Elem>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

// Calls visit(subset) for every k-subset of {0..q-1} in lexicographic order.
void for_each_subset(u64 q, std::size_t k, const std::function<void(const std::vector<Elem>&)>& visit) {
  if (k > q) return;
  std::vector<Elem> s(k);
  std::iota(s.begin(), s.end(), Elem{0});
  while (true) {
    visit(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == q - k + i - 1) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

u64 binomial(u64 n, u64 k) {
  if (k > n) return 0;
  u128 r = 1;
  for (u64 i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (u128{1} << 62)) return u64{1} << 62;
  }
  return static_cast<u64>(r);
}

// Runs task(i) for i in [0, n) on up to `workers` threads. Each index writes
// its own slot, so results come back in index order.
template <typename T>
std::vector<T> parallel_map(std::size_t n, unsigned workers, const std::function<T(std::size_t)>& task) {
  std::vector<T> out(n);
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = task(i);
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) out[i] = task(i);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

std::vector<u64> odd_prime_powers(u64 lo, u64 hi) {
  std::vector<u64> out;
  for (u64 q = std::max<u64>(lo, 3); q <= hi; q += 2) {
    if (prime_power(q)) out.push_back(q);
  }
  return out;
}

// d > 1 with 2d | q - 1.
std::vector<u64> paley_degrees(u64 q) {
  std::vector<u64> out;
  for (u64 d : divisors((q - 1) / 2)) {
    if (d > 1) out.push_back(d);
  }
  return out;
}

// ---------------------------------------------------------------- arith

SuiteReport suite_arith(const VerifyOptions& opt) {
  SuiteReport rep{"arith", {}};
  Rng rng(opt.seed);

  Check kummer("binom_nonzero_mod_p matches Pascal's triangle mod p");
  for (u64 p : {2, 3, 5, 7, 13}) {
    constexpr u64 kRows = 80;
    std::vector<std::vector<u64>> pascal(kRows, std::vector<u64>(kRows, 0));
    for (u64 n = 0; n < kRows; ++n) {
      pascal[n][0] = 1;
      for (u64 k = 1; k <= n; ++k) pascal[n][k] = (pascal[n - 1][k - 1] + pascal[n - 1][k]) % p;
    }
    for (u64 n = 0; n < kRows; ++n) {
      for (u64 b = 0; b <= n; ++b) {
        const u64 a = n - b;
        kummer.expect(binom_nonzero_mod_p(a, b, p) == (pascal[n][b] != 0),
                      [&] { return "a=" + std::to_string(a) + " b=" + std::to_string(b) + " p=" + std::to_string(p); });
      }
    }
  }
  rep.checks.push_back(kummer.done());

  Check roots("isqrt is the floor square root");
  const u64 samples = opt.samples.value_or(2000);
  for (u64 i = 0; i < samples; ++i) {
    const u64 m = i < 1000 ? i : uniform(rng, 0, ~u64{0});
    const u64 r = isqrt(m);
    const u128 r2 = static_cast<u128>(r) * r;
    const u128 next = static_cast<u128>(r + 1) * (r + 1);
    roots.expect(r2 <= m && next > m, [&] { return "m=" + std::to_string(m); });
  }
  rep.checks.push_back(roots.done());

  Check digits("base_digits round-trips");
  for (u64 i = 0; i < samples; ++i) {
    const u64 p = std::vector<u64>{2, 3, 5, 7, 11, 101}[i % 6];
    const u64 m = uniform(rng, 0, u64{1} << 40);
    const DigitVector dv = base_digits(m, p);
    bool ok = dv.value() == m;
    for (u64 c : dv.digits) ok = ok && c < p;
    digits.expect(ok, [&] { return "m=" + std::to_string(m) + " p=" + std::to_string(p); });
  }
  rep.checks.push_back(digits.done());

  Check primes("is_prime and factorize agree with a sieve");
  constexpr u64 kSieve = 20000;
  std::vector<bool> composite(kSieve, false);
  for (u64 i = 2; i * i < kSieve; ++i) {
    if (!composite[i]) {
      for (u64 j = i * i; j < kSieve; j += i) composite[j] = true;
    }
  }
  for (u64 n = 2; n < kSieve; ++n) {
    const auto f = factorize(n);
    u64 prod = 1;
    for (auto [pr, k] : f) prod *= *checked_pow(pr, k);
    const bool ok = is_prime(n) == !composite[n] && prod == n && (f.size() == 1 && f[0].second == 1) == !composite[n];
    primes.expect(ok, [&] { return "n=" + std::to_string(n); });
  }
  rep.checks.push_back(primes.done());
  return rep;
}

// ---------------------------------------------------------------- field

// Multiplication oracle: schoolbook product of digit vectors reduced by the
// modulus, independent of the log tables.
Elem oracle_mul(const Field& f, Elem a, Elem b) {
  const u64 p = f.p();
  const unsigned e = f.e();
  const auto da = f.digits(a);
  const auto db = f.digits(b);
  std::vector<u64> prod(2 * e, 0);
  for (unsigned i = 0; i < e; ++i) {
    for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  }
  const auto& mod = f.spec().modulus;  // monic, degree e
  for (unsigned k = 2 * e - 1; k >= e; --k) {
    const u64 c = prod[k];
    if (c == 0) continue;
    for (unsigned i = 0; i <= e; ++i) prod[k - e + i] = (prod[k - e + i] + (p - c) * mod[i] % p) % p;
  }
  prod.resize(e);
  return f.from_digits(prod);
}

SuiteReport suite_field(const VerifyOptions& opt) {
  SuiteReport rep{"field", {}};
  Rng rng(opt.seed);
  const std::vector<u64> orders = opt.q ? std::vector<u64>{*opt.q}
                                        : std::vector<u64>{3, 5, 9, 25, 27, 49, 81, 121, 125, 243, 343, 625, 729, 2187, 3125};
  const u64 samples = opt.samples.value_or(3000);

  Check modulus("modulus is irreducible and the primitive root has order q-1");
  Check mul("multiplication matches the digit-vector oracle");
  Check axioms("field axioms");
  Check tables("table and table-free arithmetic agree");
  Check powers("is_dth_power matches the set of d-th powers");
  Check sub("subfield elements are closed and fixed by Frobenius");

  for (u64 q : orders) {
    const auto pp = prime_power(q);
    if (!pp) throw std::invalid_argument("--q must be a prime power");
    const auto [p, e] = *pp;
    const Field f = Field::build(p, e);
    const Field plain = Field::build(p, e, FieldOptions{0, kDefaultFieldSizeLimit});
    const std::string tag = "q=" + std::to_string(q);

    modulus.expect(is_irreducible_mod_p(f.spec().modulus, p) && f.multiplicative_order(f.primitive_root()) == q - 1,
                   [&] { return tag; });

    const bool exhaustive = q * q <= 20000;
    const u64 rounds = exhaustive ? q * q : samples;
    for (u64 i = 0; i < rounds; ++i) {
      const Elem a = exhaustive ? i / q : uniform(rng, 0, q - 1);
      const Elem b = exhaustive ? i % q : uniform(rng, 0, q - 1);
      const Elem c = uniform(rng, 0, q - 1);
      auto what = [&] { return tag + " a=" + std::to_string(a) + " b=" + std::to_string(b); };
      mul.expect(f.mul(a, b) == oracle_mul(f, a, b), what);
      bool ok = f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a) &&
                f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)) &&
                f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)) && f.sub(f.add(a, b), b) == a &&
                f.add(a, f.neg(a)) == 0;
      if (b != 0) ok = ok && f.mul(f.div(a, b), b) == a && f.mul(b, f.inv(b)) == 1;
      // Frobenius is additive.
      ok = ok && f.pow_u(f.add(a, b), p) == f.add(f.pow_u(a, p), f.pow_u(b, p));
      axioms.expect(ok, what);
      bool same = f.add(a, b) == plain.add(a, b) && f.mul(a, b) == plain.mul(a, b) && f.sub(a, b) == plain.sub(a, b);
      if (b != 0) same = same && f.inv(b) == plain.inv(b);
      tables.expect(same, what);
    }

    if (q <= 1024) {
      for (u64 d : divisors(q - 1)) {
        std::vector<bool> is_power(q, false);
        for (Elem x = 1; x < q; ++x) is_power[f.pow_u(x, d)] = true;
        bool ok = true;
        for (Elem a = 1; a < q; ++a) ok = ok && f.is_dth_power(a, d) == is_power[a];
        powers.expect(ok, [&] { return tag + " d=" + std::to_string(d); });
      }
    }

    for (unsigned m = 1; m <= e; ++m) {
      if (e % m != 0) continue;
      const auto k = f.subfield_elements(m);
      const u64 pm = *checked_pow(p, m);
      bool ok = k.size() == pm;
      for (Elem a : k) ok = ok && f.pow_u(a, pm) == a;
      if (k.size() <= 64) {
        std::set<Elem> ks(k.begin(), k.end());
        for (Elem a : k) {
          for (Elem b : k) ok = ok && ks.count(f.add(a, b)) && ks.count(f.mul(a, b));
        }
      }
      sub.expect(ok, [&] { return tag + " m=" + std::to_string(m); });
    }
  }
  for (Check* c : {&modulus, &mul, &axioms, &tables, &powers, &sub}) rep.checks.push_back(c->done());
  return rep;
}

// ---------------------------------------------------------------- graph

struct MaxCliqueVisitor {
  std::size_t* best;
  template <typename Clique, typename G>
  void clique(const Clique& c, const G&) {
    *best = std::max(*best, static_cast<std::size_t>(c.size()));
  }
};

std::size_t boost_clique_number(const Graph& g) {
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BGraph bg(g.order());
  for (Elem u = 0; u < g.order(); ++u) {
    for (Elem v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v)) boost::add_edge(u, v, bg);
    }
  }
  std::size_t best = 0;
  boost::bron_kerbosch_all_cliques(bg, MaxCliqueVisitor{&best});
  return best;
}

SuiteReport suite_graph(const VerifyOptions& opt) {
  SuiteReport rep{"graph", {}};
  Check oracle("max_clique matches Bron-Kerbosch for GP(q,d), q <= 125");
  Check witness("witness is a clique of the reported size");
  Check subfield("subfield cliques bound max_clique from below");
  Check adjacency("adjacency is u - v in the connection set");

  struct Case {
    u64 q, d;
  };
  std::vector<Case> cases;
  for (u64 q : odd_prime_powers(3, opt.q.value_or(125))) {
    for (u64 d : paley_degrees(q)) cases.push_back({q, d});
  }
  struct Result {
    CliqueResult found;
    std::size_t oracle = 0;
    bool adjacency_ok = true;
    std::vector<std::pair<unsigned, bool>> subfields;  // (m, subfield is a clique)
    bool witness_ok = false;
  };
  auto results = parallel_map<Result>(cases.size(), opt.workers, [&](std::size_t i) {
    const auto [p, e] = *prime_power(cases[i].q);
    const FieldPtr field = make_field(p, e);
    const Graph g = build_paley_graph(field, cases[i].d);
    Result r;
    r.found = max_clique(g, opt.time_limit);
    r.oracle = boost_clique_number(g);
    r.witness_ok = is_clique(g, r.found.witness) && r.found.witness.size() == r.found.size;
    for (Elem u = 0; u < g.order(); ++u) {
      for (Elem v = 0; v < g.order(); ++v) {
        if (u != v && g.adjacent(u, v) != field->is_dth_power(field->sub(u, v), cases[i].d)) r.adjacency_ok = false;
      }
    }
    for (unsigned m = 1; m < e; ++m) {
      if (e % m == 0) r.subfields.emplace_back(m, is_clique(g, field->subfield_elements(m)));
    }
    return r;
  });
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& r = results[i];
    const std::string tag = "GP(" + std::to_string(cases[i].q) + "," + std::to_string(cases[i].d) + ")";
    if (!r.found.optimal) {
      oracle.timeout();
      continue;
    }
    oracle.expect(r.found.size == r.oracle, [&] {
      return tag + " search " + std::to_string(r.found.size) + " vs oracle " + std::to_string(r.oracle);
    });
    witness.expect(r.witness_ok, [&] { return tag; });
    adjacency.expect(r.adjacency_ok, [&] { return tag; });
    const auto [p, e] = *prime_power(cases[i].q);
    for (auto [m, is_cl] : r.subfields) {
      const u64 pm = *checked_pow(p, m);
      const bool predicted = ((cases[i].q - 1) / (pm - 1)) % cases[i].d == 0;
      subfield.expect(is_cl == predicted && (!is_cl || r.found.size >= pm),
                      [&] { return tag + " m=" + std::to_string(m); });
    }
  }
  for (Check* c : {&oracle, &witness, &subfield, &adjacency}) rep.checks.push_back(c->done());

  Check enumerate("enumerate_max_cliques lists sorted maximum cliques containing the required set");
  const FieldPtr f13 = make_field(13, 1);
  const Graph paley13 = build_paley_graph(f13, 2);
  const auto all = enumerate_max_cliques(paley13, {}, opt.time_limit);
  // Oracle: every 3-subset that is a clique (omega(Paley(13)) = 3).
  std::vector<std::vector<Elem>> brute;
  for_each_subset(13, 3, [&](const std::vector<Elem>& s) {
    if (is_clique(paley13, s)) brute.push_back(s);
  });
  enumerate.expect(all.complete && all.clique_number == 3 && all.cliques == brute, [] { return "Paley(13)"; });
  rep.checks.push_back(enumerate.done());
  return rep;
}

// ---------------------------------------------------------------- directions

FieldPtr field_of_order(u64 q) {
  const auto pp = prime_power(q);
  if (!pp) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  return make_field(pp->first, pp->second);
}

SuiteReport suite_directions(const VerifyOptions& opt) {
  SuiteReport rep{"directions", {}};
  Rng rng(opt.seed);
  Check shortcut("Cartesian shortcut equals the all-pairs direction set");
  Check thm16("direction count meets thm16_lower_bound");
  Check sharp("bound is attained at A = B = subfield of order sqrt(q)");
  Check remark("row-union sets meet the row bound minus one without infinity");
  Check prime("prime fields: bound equals mn - min(m,n) + 2 and holds");

  auto check_pair = [&](const Field& f, const std::vector<Elem>& a, const std::vector<Elem>& b) {
    const PointSet u = PointSet::cartesian(a, b);
    const DirectionSet fast = direction_set(f, u);
    const DirectionSet slow = direction_set_all_pairs(f, u);
    auto tag = [&] { return "q=" + std::to_string(f.q()) + " A=" + join(a) + " B=" + join(b); };
    shortcut.expect(fast == slow, tag);
    const i64 bound = thm16_lower_bound(a.size(), b.size(), f.q(), f.p());
    thm16.expect(static_cast<i64>(slow.size()) >= bound, tag);
  };

  // Exhaustive sweep over one field.
  {
    const u64 q = opt.q.value_or(9);
    const FieldPtr f = field_of_order(q);
    std::vector<std::pair<std::size_t, std::size_t>> shapes;
    for (std::size_t m = 2; m * 2 <= q; ++m) {
      for (std::size_t n = 2; m * n <= q; ++n) {
        if (opt.exhaustive || (m <= 3 && n <= 3)) shapes.emplace_back(m, n);
      }
    }
    u64 total = 0;
    for (auto [m, n] : shapes) total += binomial(q, m) * binomial(q, n);
    if (total > 50'000'000) throw std::invalid_argument("exhaustive sweep over GF(" + std::to_string(q) + ") is too large");
    for (auto [m, n] : shapes) {
      std::vector<std::vector<Elem>> bs;
      for_each_subset(q, n, [&](const std::vector<Elem>& b) { bs.push_back(b); });
      for_each_subset(q, m, [&](const std::vector<Elem>& a) {
        for (const auto& b : bs) check_pair(*f, a, b);
      });
    }
  }

  // Seeded random pairs in GF(27) and GF(25).
  const u64 random_pairs = opt.samples.value_or(500);
  for (u64 q : {27, 25}) {
    const FieldPtr f = field_of_order(q);
    for (u64 i = 0; i < random_pairs; ++i) {
      const u64 m = uniform(rng, 2, q / 2);
      const u64 n = uniform(rng, 2, q / m);
      check_pair(*f, random_subset(rng, q, m), random_subset(rng, q, n));
    }
  }

  for (u64 q : {9, 25, 81}) {
    const FieldPtr f = field_of_order(q);
    const auto k = f->subfield_elements(f->e() / 2);
    const auto ds = direction_set(*f, PointSet::cartesian(k, k));
    const i64 bound = thm16_lower_bound(k.size(), k.size(), q, f->p());
    sharp.expect(static_cast<i64>(ds.size()) == bound && bound == static_cast<i64>(k.size()) + 1,
                 [&] { return "q=" + std::to_string(q); });
  }
  // B a subfield, A a B-subspace with |A||B| = q.
  {
    const FieldPtr f = field_of_order(27);
    const auto b = f->subfield_elements(1);
    std::vector<Elem> a;
    for (Elem x : b) {
      for (Elem y : b) a.push_back(f->add(x, f->mul(y, f->primitive_root())));
    }
    std::sort(a.begin(), a.end());
    const auto ds = direction_set(*f, PointSet::cartesian(a, b));
    sharp.expect(static_cast<i64>(ds.size()) == thm16_lower_bound(a.size(), b.size(), 27, 3),
                 [] { return "GF(27), A = F_3 + g F_3, B = F_3"; });
  }

  // Unions of n rows A_i x {b_i} with |A_i| = m.
  const u64 remark_trials = opt.samples.value_or(300);
  for (u64 q : {9, 27}) {
    const FieldPtr f = field_of_order(q);
    for (u64 i = 0; i < remark_trials; ++i) {
      const u64 m = uniform(rng, 2, q / 2);
      const u64 n = uniform(rng, 2, q / m);
      const auto rows = random_subset(rng, q, n);
      std::vector<Point> pts;
      for (Elem y : rows) {
        for (Elem x : random_subset(rng, q, m)) pts.emplace_back(x, y);
      }
      const DirectionSet ds = direction_set(*f, PointSet::from_points(pts));
      const i64 bound = row_lower_bound(m, n, q, f->p()) - (ds.has_infinity() ? 0 : 1);
      remark.expect(static_cast<i64>(ds.size()) >= bound,
                    [&] { return "q=" + std::to_string(q) + " m=" + std::to_string(m) + " n=" + std::to_string(n); });
    }
  }

  const u64 prime_cases = opt.samples.value_or(200);
  for (u64 p : {13, 17}) {
    const FieldPtr f = field_of_order(p);
    for (u64 i = 0; i < prime_cases / 2; ++i) {
      u64 m = 0, n = 0;
      do {
        m = uniform(rng, 2, p / 2);
        n = uniform(rng, 2, p / 2);
      } while (m * n >= p);
      const auto a = random_subset(rng, p, m);
      const auto b = random_subset(rng, p, n);
      const i64 bound = thm16_lower_bound(m, n, p, p);
      const i64 classic = static_cast<i64>(m * n - std::min(m, n) + 2);
      const auto ds = direction_set(*f, PointSet::cartesian(a, b));
      prime.expect(bound == classic && static_cast<i64>(ds.size()) >= bound,
                   [&] { return "p=" + std::to_string(p) + " A=" + join(a) + " B=" + join(b); });
    }
  }
  for (Check* c : {&shortcut, &thm16, &sharp, &remark, &prime}) rep.checks.push_back(c->done());

  Check cor23("|A - A| >= min(2|A| - q/p, q) for |A| > q/p");
  {
    const FieldPtr f = field_of_order(9);
    for (std::size_t k = 4; k <= 9; ++k) {
      for_each_subset(9, k, [&](const std::vector<Elem>& a) {
        const auto r = cor23_check(*f, a);
        cor23.expect(r.applicable && r.holds, [&] { return "GF(9) A=" + join(a); });
      });
    }
  }
  rep.checks.push_back(cor23.done());

  Check cor15("|(A-A)/(A-A)| > |A|^2/2 when 2p^r < |A| < sqrt(q)");
  {
    const FieldPtr f = field_of_order(125);
    for (u64 i = 0; i < opt.samples.value_or(100); ++i) {
      const auto a = random_subset(rng, 125, 11);
      const auto r = cor15_check(*f, a);
      cor15.expect(r.applicable && r.holds, [&] { return "GF(125) A=" + join(a); });
    }
    const FieldPtr f101 = field_of_order(101);
    std::vector<Elem> squares;
    for (Elem x = 1; x <= 10; ++x) squares.push_back(x * x % 101);
    const auto r = cor15_check(*f101, squares);
    cor15.expect(r.applicable && r.holds, [] { return "GF(101) first ten squares"; });
  }
  rep.checks.push_back(cor15.done());

  Check cor24("|(A-A)K| > |A|(|K| - |K|/p - 1) when |A| = q/|K| + 1");
  for (auto [q, m] : {std::pair<u64, unsigned>{27, 1}, {81, 2}, {81, 1}}) {
    const FieldPtr f = field_of_order(q);
    const u64 size = q / *checked_pow(f->p(), m) + 1;
    for (u64 i = 0; i < opt.samples.value_or(100); ++i) {
      const auto a = random_subset(rng, q, size);
      const auto r = cor24_check(*f, m, a);
      cor24.expect(r.applicable && r.holds,
                   [&] { return "q=" + std::to_string(q) + " m=" + std::to_string(m) + " A=" + join(a); });
    }
  }
  rep.checks.push_back(cor24.done());
  return rep;
}

// ---------------------------------------------------------------- redei

Poly random_poly(Rng& rng, u64 q, std::size_t degree) {
  std::vector<Elem> c(degree + 1);
  for (auto& x : c) x = uniform(rng, 0, q - 1);
  c.back() = uniform(rng, 1, q - 1);
  return Poly(c);
}

SuiteReport suite_redei(const VerifyOptions& opt) {
  SuiteReport rep{"redei", {}};
  Rng rng(opt.seed);
  Check divides("slice divides x^q - x exactly at non-determined directions");
  Check quotient("quotient times slice equals x^q - x");
  Check roots("p-th power decomposition round-trips");
  Check calculus("derivative is linear and obeys the product rule");

  auto run_sets = [&](const Field& f, const PointSet& u) {
    const DirectionSet ds = direction_set(f, u);
    const Poly xq = x_q_minus_x(f);
    for (Elem y0 = 0; y0 < f.q(); ++y0) {
      const Poly r = redei_slice(f, u, y0);
      const bool in_d = ds.contains(y0);
      divides.expect(divides_xq_minus_x(f, r) == !in_d && r.is_monic() && r.degree() == static_cast<int>(u.size()),
                     [&] { return "q=" + std::to_string(f.q()) + " |U|=" + std::to_string(u.size()) +
                                  " y0=" + std::to_string(y0); });
      if (!in_d) {
        const Poly fq = szonyi_quotient(f, u, y0);
        quotient.expect(mul(f, fq, r) == xq && fq.degree() == static_cast<int>(f.q() - u.size()),
                        [&] { return "q=" + std::to_string(f.q()) + " y0=" + std::to_string(y0); });
      }
    }
  };

  {
    const FieldPtr f = field_of_order(27);
    for (u64 i = 0; i < opt.samples.value_or(200); ++i) {
      const u64 k = uniform(rng, 4, 9);
      std::set<Point> pts;
      while (pts.size() < k) pts.emplace(uniform(rng, 0, 26), uniform(rng, 0, 26));
      run_sets(*f, PointSet::from_points({pts.begin(), pts.end()}));
    }
  }
  {
    // Every point set of size <= 3 in AG(2,9) containing the origin
    // (translation invariance covers the rest), plus random larger ones.
    const FieldPtr f = field_of_order(9);
    for (std::size_t k = 1; k <= 2; ++k) {
      for_each_subset(80, k, [&](const std::vector<Elem>& s) {
        std::vector<Point> pts{{0, 0}};
        for (Elem v : s) pts.emplace_back((v + 1) / 9, (v + 1) % 9);
        run_sets(*f, PointSet::from_points(pts));
      });
    }
    for (u64 i = 0; i < opt.samples.value_or(200); ++i) {
      const u64 k = uniform(rng, 4, 6);
      std::set<Point> pts;
      while (pts.size() < k) pts.emplace(uniform(rng, 0, 8), uniform(rng, 0, 8));
      run_sets(*f, PointSet::from_points({pts.begin(), pts.end()}));
    }
  }

  for (u64 q : {27, 9, 25, 7}) {
    const FieldPtr f = field_of_order(q);
    const u64 rounds = q == 27 ? opt.samples.value_or(1000) : 100;
    for (u64 i = 0; i < rounds; ++i) {
      const Poly g = random_poly(rng, q, uniform(rng, 0, 6));
      const Poly fp = pow(*f, g, f->p());
      const auto dec = pth_power_decompose(*f, fp);
      roots.expect(dec.is_deriv_zero && dec.root && *dec.root == g && derivative(*f, fp).is_zero(),
                   [&] { return "q=" + std::to_string(q); });
      const Poly h = random_poly(rng, q, uniform(rng, 1, 6));
      const Poly sum = add(*f, g, h);
      const bool linear = derivative(*f, sum) == add(*f, derivative(*f, g), derivative(*f, h));
      const bool leibniz = derivative(*f, mul(*f, g, h)) ==
                           add(*f, mul(*f, derivative(*f, g), h), mul(*f, g, derivative(*f, h)));
      calculus.expect(linear && leibniz, [&] { return "q=" + std::to_string(q); });
    }
  }
  for (Check* c : {&divides, &quotient, &roots, &calculus}) rep.checks.push_back(c->done());
  return rep;
}

// ---------------------------------------------------------------- bounds

SuiteReport suite_bounds(const VerifyOptions& opt) {
  SuiteReport rep{"bounds", {}};
  Rng rng(opt.seed);
  Check upper("every applicable upper bound is at least the exact clique number");
  Check lower("every lower bound is at most the exact clique number");
  Check prop("prop41 exact certificates have a subfield clique");
  Check remark("remark32 bounds cyclotomic clique numbers from above");

  struct Case {
    u64 q, d;
  };
  std::vector<Case> cases;
  for (u64 q : odd_prime_powers(3, opt.q.value_or(361))) {
    for (u64 d : paley_degrees(q)) cases.push_back({q, d});
  }
  struct Result {
    CliqueResult found;
    BoundBundle bundle;
    std::vector<std::pair<std::string, bool>> prop_cliques;
  };
  auto results = parallel_map<Result>(cases.size(), opt.workers, [&](std::size_t i) {
    const auto [p, e] = *prime_power(cases[i].q);
    const FieldPtr field = make_field(p, e);
    const Graph g = build_paley_graph(field, cases[i].d);
    Result r;
    r.found = max_clique(g, opt.time_limit);
    r.bundle = best_bounds(cases[i].q, cases[i].d);
    for (const auto& c : r.bundle.certificates) {
      if (c.bound == "prop41" && c.applicable) {
        r.prop_cliques.emplace_back(std::to_string(*c.inputs.k_order),
                                    is_clique(g, field->subfield_elements(*c.witness->subfield_degree)));
      }
    }
    return r;
  });
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& r = results[i];
    const std::string tag = "GP(" + std::to_string(cases[i].q) + "," + std::to_string(cases[i].d) + ")";
    for (auto [k, ok] : r.prop_cliques) prop.expect(ok, [&] { return tag + " K=" + k; });
    if (!r.found.optimal) {
      upper.timeout();
      continue;
    }
    const i64 omega = static_cast<i64>(r.found.size);
    for (const auto& c : r.bundle.certificates) {
      if (!c.applicable) continue;
      auto what = [&] { return tag + " " + c.bound + "=" + std::to_string(c.value) + " omega=" + std::to_string(omega); };
      if (c.kind == BoundKind::kExact) {
        upper.expect(c.value == omega, what);
        lower.expect(c.value == omega, what);
      } else if (c.kind == BoundKind::kUpper) {
        upper.expect(c.value >= omega, what);
      } else {
        lower.expect(c.value <= omega, what);
      }
    }
  }

  // Cyclotomic graphs with two cosets over non-square fields.
  for (u64 q : {27, 125, 243, 343}) {
    const FieldPtr field = field_of_order(q);
    for (u64 d : divisors(q - 1)) {
      if (d < 3) continue;
      for (u64 j = 1; j < d; ++j) {
        const std::vector<u64> index_set{0, j};
        Certificate cert;
        try {
          cert = remark32_certificate(q, d, index_set);
        } catch (const std::invalid_argument&) {
          continue;  // asymmetric connection set or vacuous I - I
        }
        if (!cert.applicable) continue;
        const Graph g = build_cyclotomic_graph(field, d, index_set);
        const CliqueResult r = max_clique(g, opt.time_limit);
        if (!r.optimal) {
          remark.timeout();
          continue;
        }
        remark.expect(cert.value >= static_cast<i64>(r.size), [&] {
          return "q=" + std::to_string(q) + " d=" + std::to_string(d) + " I={0," + std::to_string(j) +
                 "} bound=" + std::to_string(cert.value) + " omega=" + std::to_string(r.size);
        });
      }
    }
  }
  for (Check* c : {&upper, &lower, &prop, &remark}) rep.checks.push_back(c->done());

  Check closed("integer thm13 equals the floor of the closed form");
  Check below("thm13 never exceeds the trivial bound");
  {
    using Real = boost::multiprecision::cpp_bin_float_50;
    std::vector<Case> pool;
    for (u64 p : {3, 5, 7, 11, 13}) {
      for (unsigned e = 1; e <= 9; e += 2) {
        const auto q = checked_pow(p, e);
        if (!q || *q > 100'000'000) break;
        for (u64 d : divisors((*q - 1) / 2)) {
          if (d > 1) pool.push_back({*q, d});
        }
      }
    }
    const u64 n = opt.samples.value_or(1000);
    for (u64 i = 0; i < n; ++i) {
      const Case c = pool[uniform(rng, 0, pool.size() - 1)];
      const auto [p, e] = *prime_power(c.q);
      const u64 pr = *checked_pow(p, (e - 1) / 2);
      const Real half = Real(pr) / 2;
      const Real form = half + boost::multiprecision::sqrt(Real((c.q - 1) / c.d) + (half - 1) * (half - 1));
      const i64 expected = std::max<i64>(static_cast<i64>(pr), static_cast<i64>(boost::multiprecision::floor(form)));
      const i64 got = thm13_bound(c.q, c.d);
      auto tag = [&] { return "q=" + std::to_string(c.q) + " d=" + std::to_string(c.d); };
      closed.expect(got == expected, tag);
      below.expect(got <= trivial_bound(c.q), tag);
    }
  }
  rep.checks.push_back(closed.done());
  rep.checks.push_back(below.done());

  Check thm14("thm14 agrees with prop41 at K = F_p");
  for (u64 p = 3; p <= 31; p += 2) {
    if (!is_prime(p)) continue;
    for (u64 d : divisors(p * p + p + 1)) {
      if (d <= p) continue;
      const Certificate a = thm14_certify(p, d);
      const Certificate b = prop41_certify(p * p * p, p, d);
      thm14.expect(a.applicable == b.applicable && a.value == b.value && a.kind == b.kind,
                   [&] { return "p=" + std::to_string(p) + " d=" + std::to_string(d); });
    }
  }
  rep.checks.push_back(thm14.done());
  return rep;
}

// ---------------------------------------------------------------- families

SuiteReport suite_families(const VerifyOptions& opt) {
  SuiteReport rep{"families", {}};
  Check revalidate("family certificates re-validate through prop41");
  Check identity("ex44 identity holds for x <= 10^6");
  Check counter("counterexamples show the expected failing conditions");

  auto recheck = [&](const FamilyInstance& inst) {
    if (!inst.accepted) return;
    const Certificate again = prop41_certify(inst.q, inst.k_order, inst.d);
    const bool by_construction = ((inst.q - 1) / (inst.k_order - 1)) % inst.d == 0 &&
                                 static_cast<u128>(inst.q) <
                                     static_cast<u128>(inst.d) * inst.k_order * (inst.k_order + 1);
    revalidate.expect(again.applicable && again.value == static_cast<i64>(inst.k_order) && by_construction &&
                          inst.certificate->value == again.value,
                      [&] { return inst.family + " q=" + std::to_string(inst.q) + " d=" + std::to_string(inst.d); });
  };
  for (u64 p : {7, 13, 19, 31, 37, 43}) {
    for (unsigned m = 1; m <= 2; ++m) {
      try {
        recheck(family_ex42(p, m));
      } catch (const PreconditionError&) {
        // beyond the size limit
      }
    }
  }
  for (u64 p : {3, 5, 7}) {
    for (unsigned s = 2; s <= 5; ++s) {
      for (unsigned t = 1; t < s; ++t) {
        if (gcd(s, t) != 1) continue;
        try {
          recheck(family_ex43(p, s, t));
        } catch (const PreconditionError&) {
        }
      }
    }
  }
  for (u64 x = 1; x <= 6; ++x) {
    try {
      recheck(family_ex44(x));
    } catch (const PreconditionError&) {
    }
  }
  for (u64 x = 1; x <= 1'000'000; ++x) {
    identity.expect(ex44_identity_holds(x), [&] { return "x=" + std::to_string(x); });
  }

  for (u64 p : {3, 5, 7}) {
    const Ex45Report r = counterexample_ex45(p, true, {}, opt.time_limit);
    bool ok = r.half_density.applicable && r.half_density.value == static_cast<i64>(p) && r.full_density.exact &&
              r.full_density.best_lower == static_cast<i64>(p * p) && !r.failed_prop41.applicable &&
              r.failed_prop41.remainder_r == p * p - 1;
    for (const auto& s : r.searches) {
      if (!s.result.optimal) {
        counter.timeout();
        continue;
      }
      ok = ok && s.result.size == (s.d == 2 * (p * p + 1) ? p : p * p);
    }
    counter.expect(ok, [&] { return "ex45 p=" + std::to_string(p); });
  }
  {
    const Ex46Report r = counterexample_ex46();
    const auto& cs = r.prop41.conditions;
    const bool ok = !r.prop41.applicable && cs.size() == 3 && cs[0].holds && !cs[1].holds && cs[2].holds &&
                    r.f125_is_clique && r.bounds.exact && r.clique_number == 125 &&
                    r.digits_msf == std::vector<u64>{1, 3, 1, 3, 1, 3};
    counter.expect(ok, [] { return "ex46"; });
  }
  for (Check* c : {&revalidate, &identity, &counter}) rep.checks.push_back(c->done());
  return rep;
}

using SuiteFn = SuiteReport (*)(const VerifyOptions&);

const std::map<std::string, SuiteFn>& suite_table() {
  static const std::map<std::string, SuiteFn> table{
      {"arith", suite_arith},   {"field", suite_field},   {"graph", suite_graph},       {"directions", suite_directions},
      {"redei", suite_redei},   {"bounds", suite_bounds}, {"families", suite_families},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"arith", "field", "graph", "directions", "redei", "bounds", "families"};
  return names;
}

std::vector<SuiteReport> run_verify(const std::string& suite, const VerifyOptions& options) {
  std::vector<SuiteReport> out;
  if (suite == "all") {
    for (const auto& name : suite_names()) {
      VerifyOptions o = options;
      // --q only makes sense for a single named suite.
      o.q.reset();
      out.push_back(suite_table().at(name)(o));
    }
    return out;
  }
  const auto it = suite_table().find(suite);
  if (it == suite_table().end()) throw std::invalid_argument("unknown suite: " + suite);
  out.push_back(it->second(options));
  return out;
}

}  // namespace paley
