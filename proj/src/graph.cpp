#include "paley/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace paley {

namespace {

constexpr u64 kGraphOrderLimit = u64{1} << 15;

using Clock = std::chrono::steady_clock;

// Branch and bound on an induced subgraph whose vertices are relabelled
// 0..n-1 in ascending order of their original labels. Vertices are branched
// in ascending order, so complete cliques are reached in lexicographic order
// and the first maximum found is the lexicographically least one. The bound
// for the suffix starting at a vertex is the number of colors a greedy
// coloring, run from the largest vertex down, has used by that vertex.
class LocalSearch {
 public:
  LocalSearch(const Graph& g, const std::vector<Elem>& verts, Clock::time_point deadline)
      : n_(verts.size()), adj_(verts.size(), Bitset(verts.size())), deadline_(deadline) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (g.adjacent(verts[i], verts[j])) {
          adj_[i].set(j);
          adj_[j].set(i);
        }
      }
    }
  }

  std::vector<std::size_t> maximize() {
    mode_ = Mode::kMaximize;
    run();
    return best_;
  }

  std::vector<std::vector<std::size_t>> enumerate(std::size_t target) {
    mode_ = Mode::kEnumerate;
    target_ = target;
    if (target == 0) {
      found_.emplace_back();
      return found_;
    }
    run();
    return found_;
  }

  bool timed_out() const { return timed_out_; }
  u64 nodes() const { return nodes_; }

 private:
  enum class Mode { kMaximize, kEnumerate };

  void run() {
    Bitset all(n_);
    for (std::size_t i = 0; i < n_; ++i) all.set(i);
    std::vector<std::size_t> current;
    expand(all, current);
  }

  std::size_t threshold() const {
    // Branches whose bound does not exceed this are pruned.
    return mode_ == Mode::kMaximize ? best_.size() : target_ - 1;
  }

  void expand(const Bitset& cand, std::vector<std::size_t>& current) {
    if (timed_out_) return;
    if ((++nodes_ & 1023) == 1 && Clock::now() > deadline_) {
      timed_out_ = true;
      return;
    }
    if (mode_ == Mode::kEnumerate && current.size() == target_) {
      found_.push_back(current);
      return;
    }
    if (!cand.any()) {
      if (mode_ == Mode::kMaximize && current.size() > best_.size()) best_ = current;
      return;
    }

    std::vector<std::size_t> verts;
    for (std::size_t w = 0; w < cand.words().size(); ++w) {
      for (u64 bits = cand.words()[w]; bits != 0; bits &= bits - 1) {
        verts.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      }
    }
    std::vector<std::size_t> suffix_colors(verts.size());
    std::vector<Bitset> classes;
    for (std::size_t i = verts.size(); i-- > 0;) {
      const std::size_t v = verts[i];
      std::size_t k = 0;
      for (; k < classes.size(); ++k) {
        if (!intersects(classes[k], adj_[v])) break;
      }
      if (k == classes.size()) classes.emplace_back(n_);
      classes[k].set(v);
      suffix_colors[i] = classes.size();
    }

    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (current.size() + suffix_colors[i] <= threshold()) return;
      const std::size_t v = verts[i];
      Bitset next = cand;
      next &= adj_[v];
      clear_through(next, v);
      current.push_back(v);
      expand(next, current);
      current.pop_back();
      if (timed_out_) return;
    }
  }

  static bool intersects(const Bitset& a, const Bitset& b) {
    for (std::size_t i = 0; i < a.words().size(); ++i) {
      if (a.words()[i] & b.words()[i]) return true;
    }
    return false;
  }

  // Clears bits 0..v.
  static void clear_through(Bitset& s, std::size_t v) {
    auto& w = s.words();
    const std::size_t full = v / 64;
    for (std::size_t i = 0; i < full; ++i) w[i] = 0;
    const unsigned rest = static_cast<unsigned>(v % 64) + 1;
    w[full] &= rest == 64 ? 0 : ~((u64{1} << rest) - 1);
  }

  std::size_t n_;
  std::vector<Bitset> adj_;
  Clock::time_point deadline_;
  Mode mode_ = Mode::kMaximize;
  std::size_t target_ = 0;
  bool timed_out_ = false;
  u64 nodes_ = 0;
  std::vector<std::size_t> best_;
  std::vector<std::vector<std::size_t>> found_;
};

std::vector<Elem> members(const Bitset& s) {
  std::vector<Elem> out;
  for (std::size_t w = 0; w < s.words().size(); ++w) {
    for (u64 bits = s.words()[w]; bits != 0; bits &= bits - 1) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    }
  }
  return out;
}

}  // namespace

std::vector<Elem> Graph::connection_set() const { return members(connection_); }

Graph build_cyclotomic_graph(FieldPtr field, u64 d, std::vector<u64> index_set) {
  if (!field) throw std::invalid_argument("null field");
  const u64 q = field->q();
  if (q > kGraphOrderLimit) throw std::invalid_argument("graph order exceeds the adjacency limit");
  if (d == 0 || (q - 1) % d != 0) throw std::invalid_argument("d must divide q - 1");
  if (index_set.empty()) throw std::invalid_argument("index set must be nonempty");
  for (u64 i : index_set) {
    if (i >= d) throw std::invalid_argument("index set entries must lie in [0, d)");
  }
  std::sort(index_set.begin(), index_set.end());
  index_set.erase(std::unique(index_set.begin(), index_set.end()), index_set.end());

  Graph g;
  g.field_ = field;
  g.d_ = d;
  g.index_set_ = std::move(index_set);
  g.connection_ = Bitset(q);
  std::vector<bool> in_index(d, false);
  for (u64 i : g.index_set_) in_index[i] = true;
  // g^k lies in the coset g^{k mod d} H.
  Elem x = 1;
  const Elem gen = field->primitive_root();
  for (u64 k = 0; k + 1 < q; ++k) {
    if (in_index[k % d]) g.connection_.set(x);
    x = field->mul(x, gen);
  }
  g.connection_count_ = g.connection_.count();

  const std::vector<Elem> conn = g.connection_set();
  for (Elem s : conn) {
    if (!g.connection_.test(field->neg(s))) {
      throw std::invalid_argument("connection set is not symmetric (S != -S)");
    }
  }

  g.adjacency_.assign(q, Bitset(q));
  for (Elem u = 0; u < q; ++u) {
    Bitset& row = g.adjacency_[u];
    for (Elem s : conn) row.set(field->add(u, s));
  }
  return g;
}

Graph build_paley_graph(FieldPtr field, u64 d) {
  if (!field) throw std::invalid_argument("null field");
  if (d <= 1) throw std::invalid_argument("d must exceed 1");
  if ((field->q() - 1) % (2 * d) != 0) {
    throw std::invalid_argument("d must divide (q - 1)/2, got d = " + std::to_string(d) +
                                " for q = " + std::to_string(field->q()));
  }
  return build_cyclotomic_graph(std::move(field), d, {0});
}

bool is_clique(const Graph& g, const std::vector<Elem>& vertices) {
  for (Elem v : vertices) {
    if (v >= g.order()) throw std::out_of_range("vertex outside the graph");
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j]) continue;
      if (!g.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

CliqueResult max_clique(const Graph& g, std::chrono::milliseconds time_limit) {
  const auto start = Clock::now();
  // Normalized prefix: {0, 1} for GP(q, d), {0} otherwise.
  std::vector<Elem> base{0};
  Bitset cand = g.neighbors(0);
  if (g.is_paley()) {
    base.push_back(1);
    cand &= g.neighbors(1);
  }
  const std::vector<Elem> verts = members(cand);
  LocalSearch search(g, verts, start + time_limit);
  const std::vector<std::size_t> best = search.maximize();

  CliqueResult res;
  res.witness = base;
  for (std::size_t i : best) res.witness.push_back(verts[i]);
  std::sort(res.witness.begin(), res.witness.end());
  res.size = res.witness.size();
  res.optimal = !search.timed_out();
  res.stats.nodes = search.nodes();
  res.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return res;
}

CliqueEnumeration enumerate_max_cliques(const Graph& g, std::vector<Elem> required,
                                        std::chrono::milliseconds time_limit) {
  const auto start = Clock::now();
  std::sort(required.begin(), required.end());
  required.erase(std::unique(required.begin(), required.end()), required.end());
  if (!is_clique(g, required)) throw std::invalid_argument("required vertices do not form a clique");

  CliqueEnumeration out;
  const CliqueResult best = max_clique(g, time_limit);
  out.clique_number = best.size;
  if (!best.optimal || required.size() > best.size) {
    out.complete = best.optimal;
    return out;
  }

  Bitset cand(g.order());
  for (Elem v = 0; v < g.order(); ++v) cand.set(v);
  for (Elem r : required) cand &= g.neighbors(r);
  const std::vector<Elem> verts = members(cand);

  const auto remaining = time_limit - std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  LocalSearch search(g, verts, Clock::now() + remaining);
  for (const auto& local : search.enumerate(best.size - required.size())) {
    std::vector<Elem> clique = required;
    for (std::size_t i : local) clique.push_back(verts[i]);
    std::sort(clique.begin(), clique.end());
    out.cliques.push_back(std::move(clique));
  }
  std::sort(out.cliques.begin(), out.cliques.end());
  out.complete = !search.timed_out();
  return out;
}

}  // namespace paley
