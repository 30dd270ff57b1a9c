#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tokenham/graph.hpp"

namespace tokenham {

/// Largest ground-set size the binomial table covers.
inline constexpr std::size_t kMaxBinomialN = 64;

/// C(n, k) from a precomputed table; 0 when k > n. Throws ParameterError
/// when n exceeds kMaxBinomialN.
std::uint64_t binomial(std::size_t n, std::size_t k);

/// A k-subset of a graph's vertex set, kept strictly increasing.
class TokenVertex {
 public:
  TokenVertex() = default;
  /// Sorts the members; throws ContractViolation on duplicates.
  explicit TokenVertex(std::vector<VertexId> members);
  TokenVertex(std::initializer_list<VertexId> members) : TokenVertex(std::vector<VertexId>(members)) {}

  /// Adopts an already strictly increasing sequence without sorting.
  static TokenVertex from_sorted(std::vector<VertexId> members);

  std::size_t size() const { return members_.size(); }
  std::span<const VertexId> members() const { return members_; }
  bool contains(VertexId v) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  VertexId operator[](std::size_t i) const { return members_[i]; }

  friend bool operator==(const TokenVertex&, const TokenVertex&) = default;
  friend auto operator<=>(const TokenVertex&, const TokenVertex&) = default;

 private:
  std::vector<VertexId> members_;
};

/// True iff `v` is a strictly increasing subset of 0..order-1 of size k.
bool is_valid_token(const TokenVertex& v, std::size_t order, std::size_t k);

/// a ~ b in G^{k}: |a xor b| = 2 and the two differing vertices are
/// adjacent in g. Throws ContractViolation for mismatched sizes or
/// out-of-range members.
bool token_adjacent(const Graph& g, const TokenVertex& a, const TokenVertex& b);

/// Symmetric difference of two equal-size token vertices when it has
/// exactly two elements: (element only in a, element only in b).
std::optional<Edge> token_move(const TokenVertex& a, const TokenVertex& b);

/// Colex rank: sum of C(v_i, i+1) over the 0-indexed sorted members.
std::uint64_t rank(const TokenVertex& v, std::size_t order);
TokenVertex unrank(std::uint64_t r, std::size_t order, std::size_t k);

/// V \ a.
TokenVertex complement_vertex(const TokenVertex& a, std::size_t order);

/// Calls visit(neighbor) for each neighbor of `a` in G^{k}: for each member
/// x and each neighbor y of x outside a, a - {x} + {y}. Order follows
/// members ascending, then g's neighbor lists.
template <typename Visit>
void for_each_token_neighbor(const Graph& g, const TokenVertex& a, Visit&& visit);

inline constexpr std::size_t kDefaultMaterializationCap = 2'000'000;

/// The k-token graph materialized over colex ranks.
class TokenGraph {
 public:
  const Graph& base() const { return base_; }
  std::size_t k() const { return k_; }
  std::size_t size() const { return graph_.order(); }

  /// Adjacency over ranks; vertex r is unrank(r, base.order(), k).
  const Graph& graph() const { return graph_; }
  const TokenVertex& vertex(std::size_t r) const { return vertices_[r]; }
  std::span<const TokenVertex> vertices() const { return vertices_; }

  friend TokenGraph token_graph(const Graph& g, std::size_t k, std::size_t cap);

 private:
  Graph base_;
  std::size_t k_ = 0;
  std::vector<TokenVertex> vertices_;
  Graph graph_;
};

/// Materializes G^{k}. Requires 1 <= k <= order-1. Throws ResourceError when
/// C(order, k) exceeds `cap`.
TokenGraph token_graph(const Graph& g, std::size_t k, std::size_t cap = kDefaultMaterializationCap);

/// "{0,2,5}".
std::string format_token(const TokenVertex& v);
/// "{v1,v3,w2}" under the canonical fan labeling.
std::string format_token(const TokenVertex& v, const FanLayout& layout);

// ---------------------------------------------------------------------------

template <typename Visit>
void for_each_token_neighbor(const Graph& g, const TokenVertex& a, Visit&& visit) {
  const auto members = a.members();
  std::vector<VertexId> scratch(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (VertexId y : g.neighbors(members[i])) {
      if (a.contains(y)) continue;
      // Drop members[i], insert y, keep the result sorted.
      std::size_t out = 0;
      bool placed = false;
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (j == i) continue;
        if (!placed && y < members[j]) {
          scratch[out++] = y;
          placed = true;
        }
        scratch[out++] = members[j];
      }
      if (!placed) scratch[out++] = y;
      visit(TokenVertex::from_sorted(scratch));
    }
  }
}

}  // namespace tokenham
