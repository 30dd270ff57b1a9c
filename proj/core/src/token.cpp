#include "tokenham/token.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "tokenham/error.hpp"

namespace tokenham {

namespace {

using BinomialTable = std::array<std::array<std::uint64_t, kMaxBinomialN + 1>, kMaxBinomialN + 1>;

constexpr BinomialTable make_binomial_table() {
  BinomialTable t{};
  for (std::size_t n = 0; n <= kMaxBinomialN; ++n) {
    t[n][0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
      const std::uint64_t a = t[n - 1][k - 1];
      const std::uint64_t b = t[n - 1][k];
      // Saturating add; every entry for n <= 64 fits in 64 bits.
      t[n][k] = (a > std::numeric_limits<std::uint64_t>::max() - b) ? std::numeric_limits<std::uint64_t>::max()
                                                                     : a + b;
    }
  }
  return t;
}

constexpr BinomialTable kBinomial = make_binomial_table();

static_assert(kBinomial[5][2] == 10);
static_assert(kBinomial[64][32] == 1832624140942590534ULL);

}  // namespace

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (n > kMaxBinomialN) throw ParameterError("binomial table covers n <= 64, got " + std::to_string(n));
  return k > n ? 0 : kBinomial[n][k];
}

TokenVertex::TokenVertex(std::vector<VertexId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw ContractViolation("token vertex with repeated member");
  }
}

TokenVertex TokenVertex::from_sorted(std::vector<VertexId> members) {
  TokenVertex v;
  v.members_ = std::move(members);
  return v;
}

bool TokenVertex::contains(VertexId v) const { return std::binary_search(members_.begin(), members_.end(), v); }

bool is_valid_token(const TokenVertex& v, std::size_t order, std::size_t k) {
  if (v.size() != k) return false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] >= order) return false;
    if (i > 0 && v[i - 1] >= v[i]) return false;
  }
  return true;
}

std::optional<Edge> token_move(const TokenVertex& a, const TokenVertex& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::optional<VertexId> only_a, only_b;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      if (only_a) return std::nullopt;
      only_a = a[i++];
    } else if (i == a.size() || b[j] < a[i]) {
      if (only_b) return std::nullopt;
      only_b = b[j++];
    } else {
      ++i;
      ++j;
    }
  }
  if (!only_a || !only_b) return std::nullopt;
  return Edge{*only_a, *only_b};
}

bool token_adjacent(const Graph& g, const TokenVertex& a, const TokenVertex& b) {
  if (a.size() != b.size()) throw ContractViolation("token vertices of different sizes");
  if (!is_valid_token(a, g.order(), a.size()) || !is_valid_token(b, g.order(), b.size())) {
    throw ContractViolation("token vertex out of range for base graph");
  }
  const auto move = token_move(a, b);
  return move && g.has_edge(move->first, move->second);
}

std::uint64_t rank(const TokenVertex& v, std::size_t order) {
  if (!is_valid_token(v, order, v.size())) throw ContractViolation("rank of an invalid token vertex");
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < v.size(); ++i) r += binomial(v[i], i + 1);
  return r;
}

TokenVertex unrank(std::uint64_t r, std::size_t order, std::size_t k) {
  if (k > order || r >= binomial(order, k)) {
    throw ContractViolation("unrank: rank " + std::to_string(r) + " out of range for C(" + std::to_string(order) +
                            "," + std::to_string(k) + ")");
  }
  std::vector<VertexId> members(k);
  std::size_t bound = order;
  for (std::size_t i = k; i-- > 0;) {
    // Largest c < bound with C(c, i+1) <= r.
    std::size_t c = bound - 1;
    while (binomial(c, i + 1) > r) --c;
    members[i] = static_cast<VertexId>(c);
    r -= binomial(c, i + 1);
    bound = c;
  }
  return TokenVertex::from_sorted(std::move(members));
}

TokenVertex complement_vertex(const TokenVertex& a, std::size_t order) {
  if (!is_valid_token(a, order, a.size())) throw ContractViolation("complement of an invalid token vertex");
  std::vector<VertexId> rest;
  rest.reserve(order - a.size());
  for (VertexId v = 0; v < order; ++v) {
    if (!a.contains(v)) rest.push_back(v);
  }
  return TokenVertex::from_sorted(std::move(rest));
}

TokenGraph token_graph(const Graph& g, std::size_t k, std::size_t cap) {
  const std::size_t n = g.order();
  if (k < 1 || k + 1 > n) {
    throw ParameterError("token graph needs 1 <= k <= order-1 (k=" + std::to_string(k) +
                         ", order=" + std::to_string(n) + ")");
  }
  const std::uint64_t count = binomial(n, k);
  if (count > cap) {
    throw ResourceError("C(" + std::to_string(n) + "," + std::to_string(k) + ")=" + std::to_string(count) +
                        " token vertices exceeds the materialization cap of " + std::to_string(cap) +
                        "; use streaming verification instead");
  }
  TokenGraph t;
  t.base_ = g;
  t.k_ = k;
  t.vertices_.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r) t.vertices_.push_back(unrank(r, n, k));

  std::vector<std::vector<VertexId>> adjacency(count);
  for (std::uint64_t r = 0; r < count; ++r) {
    auto& list = adjacency[r];
    for_each_token_neighbor(g, t.vertices_[r],
                            [&](const TokenVertex& u) { list.push_back(static_cast<VertexId>(rank(u, n))); });
    std::sort(list.begin(), list.end());
  }
  t.graph_ = Graph::from_adjacency(std::move(adjacency));
  return t;
}

std::string format_token(const TokenVertex& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out + "}";
}

std::string format_token(const TokenVertex& v, const FanLayout& layout) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += layout.label(v[i]);
  }
  return out + "}";
}

}  // namespace tokenham
