#pragma once

// Generalized Paley graphs GP(q, d) and cyclotomic Cayley graphs on GF(q),
// with an exact maximum-clique search.

#include <bit>
#include <chrono>
#include <cstdint>
#include <vector>

#include "paley/field.hpp"

namespace paley {

/// Fixed-size bitset over vertex indices, sized at construction.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  void set(std::size_t i) { words_[i >> 6] |= u64{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(u64{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  std::size_t count() const {
    std::size_t c = 0;
    for (u64 w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    for (u64 w : words_) {
      if (w != 0) return true;
    }
    return false;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  const std::vector<u64>& words() const { return words_; }
  std::vector<u64>& words() { return words_; }
  bool operator==(const Bitset& other) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<u64> words_;
};

class Graph {
 public:
  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  u64 order() const { return field_->q(); }
  u64 d() const { return d_; }
  /// Sorted subset of Z/dZ.
  const std::vector<u64>& index_set() const { return index_set_; }
  /// True when the connection set is exactly the d-th powers.
  bool is_paley() const { return index_set_.size() == 1 && index_set_[0] == 0; }
  u64 degree() const { return connection_count_; }

  bool in_connection_set(Elem s) const { return connection_.test(s); }
  /// Ascending.
  std::vector<Elem> connection_set() const;
  bool adjacent(Elem u, Elem v) const { return adjacency_[u].test(v); }
  const Bitset& neighbors(Elem u) const { return adjacency_[u]; }

 private:
  friend Graph build_cyclotomic_graph(FieldPtr field, u64 d, std::vector<u64> index_set);
  Graph() = default;

  FieldPtr field_;
  u64 d_ = 0;
  std::vector<u64> index_set_;
  Bitset connection_;
  u64 connection_count_ = 0;
  std::vector<Bitset> adjacency_;
};

/// GP(q, d): u ~ v iff u - v is a nonzero d-th power. Requires d > 1 and
/// d | (q - 1)/2.
Graph build_paley_graph(FieldPtr field, u64 d);

/// Cay(F_q, union_{i in I} g^i H) with H the d-th powers. Requires d | q - 1,
/// I nonempty, and a symmetric connection set.
Graph build_cyclotomic_graph(FieldPtr field, u64 d, std::vector<u64> index_set);

bool is_clique(const Graph& g, const std::vector<Elem>& vertices);

struct SearchStats {
  u64 nodes = 0;
  double seconds = 0.0;
};

struct CliqueResult {
  std::size_t size = 0;
  /// Ascending; the lexicographically least maximum clique when optimal.
  std::vector<Elem> witness;
  bool optimal = false;
  SearchStats stats;
};

inline constexpr std::chrono::milliseconds kDefaultTimeLimit{60'000};

/// Exact maximum clique. For GP(q, d) every edge maps onto {0, 1} under an
/// affine automorphism, so the search runs inside the common neighborhood
/// of 0 and 1; for other cyclotomic graphs only vertex 0 is fixed. On timeout
/// returns the best clique found with optimal = false.
CliqueResult max_clique(const Graph& g, std::chrono::milliseconds time_limit = kDefaultTimeLimit);

struct CliqueEnumeration {
  std::size_t clique_number = 0;
  /// Every maximum clique containing the required vertices, ascending and
  /// lexicographically sorted.
  std::vector<std::vector<Elem>> cliques;
  bool complete = false;
};

/// Throws std::invalid_argument when `required` is not a clique.
CliqueEnumeration enumerate_max_cliques(const Graph& g, std::vector<Elem> required,
                                        std::chrono::milliseconds time_limit = kDefaultTimeLimit);

}  // namespace paley
