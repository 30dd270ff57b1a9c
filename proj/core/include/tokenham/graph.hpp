#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tokenham {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

inline constexpr std::size_t kDefaultDenseThreshold = 512;

/// Simple undirected graph on vertices 0..order-1.
///
/// Adjacency is kept as sorted neighbor lists. For graphs whose order is at
/// most the dense threshold, a bit-matrix mirror is built on first use of
/// has_edge() so that membership tests in brute-force search are O(1).
/// Graph values are immutable once constructed.
class Graph {
 public:
  /// Edgeless graph of the given order.
  explicit Graph(std::size_t order = 0, std::size_t dense_threshold = kDefaultDenseThreshold);

  /// Builds a graph from an edge list. Duplicate edges are merged; loops and
  /// out-of-range endpoints throw ContractViolation.
  static Graph from_edges(std::size_t order, std::span<const Edge> edges,
                          std::size_t dense_threshold = kDefaultDenseThreshold);

  /// Builds a graph directly from adjacency lists, which must already be
  /// sorted, symmetric, loop-free and duplicate-free (checked).
  static Graph from_adjacency(std::vector<std::vector<VertexId>> adjacency,
                              std::size_t dense_threshold = kDefaultDenseThreshold);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }

  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }

  bool has_edge(VertexId u, VertexId v) const;

  /// All edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  /// Re-checks symmetry, irreflexivity and sortedness. Returns an empty
  /// string when valid, otherwise a description of the first problem.
  std::string validate() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  struct DenseState;

  const std::vector<std::uint64_t>* dense_bits() const;

  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;
  std::size_t dense_threshold_ = kDefaultDenseThreshold;
  // Shared between copies; the mirror depends only on adjacency_.
  std::shared_ptr<DenseState> dense_state_;
};

enum class FamilyTag { Path, Empty, Complete, Cycle, CompleteBipartite, Star, SquareOfPath, Fan };

/// A named graph family with its integer parameters.
///
/// | tag               | params | graph            |
/// |-------------------|--------|------------------|
/// | Path              | n      | P_n              |
/// | Empty             | m      | E_m              |
/// | Complete          | n      | K_n              |
/// | Cycle             | n      | C_n (n >= 3)     |
/// | CompleteBipartite | a, b   | K_{a,b}          |
/// | Star              | m      | K_{1,m}          |
/// | SquareOfPath      | n      | P_n^2            |
/// | Fan               | m, n   | F_{m,n}=E_m+P_n  |
struct GraphFamily {
  FamilyTag tag;
  std::vector<int> params;

  static GraphFamily path(int n) { return {FamilyTag::Path, {n}}; }
  static GraphFamily empty(int m) { return {FamilyTag::Empty, {m}}; }
  static GraphFamily complete(int n) { return {FamilyTag::Complete, {n}}; }
  static GraphFamily cycle(int n) { return {FamilyTag::Cycle, {n}}; }
  static GraphFamily complete_bipartite(int a, int b) { return {FamilyTag::CompleteBipartite, {a, b}}; }
  static GraphFamily star(int m) { return {FamilyTag::Star, {m}}; }
  static GraphFamily square_of_path(int n) { return {FamilyTag::SquareOfPath, {n}}; }
  static GraphFamily fan(int m, int n) { return {FamilyTag::Fan, {m, n}}; }
};

/// Parses a family name as used on the command line ("path", "fan", ...).
FamilyTag parse_family_tag(const std::string& name);
std::string family_name(FamilyTag tag);

/// Builds the named graph under canonical labeling. Throws ParameterError
/// on wrong parameter count or non-positive sizes.
Graph build(const GraphFamily& family);

/// Join g + h: h's ids are shifted by g.order() and every cross pair
/// becomes an edge.
Graph join(const Graph& g, const Graph& h);

/// Subgraph induced by `keep` (sorted, distinct); vertex i of the result is
/// keep[i].
Graph induced_subgraph(const Graph& g, std::span<const VertexId> keep);

struct Components {
  std::size_t count = 0;
  std::vector<std::size_t> label;
};

/// Connected components by iterative BFS. Labels are assigned in order of
/// the smallest vertex of each component.
Components connected_components(const Graph& g);

/// Canonical fan labeling: v_i -> i-1 (path order), w_j -> n+j-1 (hubs).
struct FanLayout {
  int m = 0;
  int n = 0;

  VertexId v(int i) const { return static_cast<VertexId>(i - 1); }
  VertexId w(int j) const { return static_cast<VertexId>(n + j - 1); }
  bool is_hub(VertexId id) const { return id >= static_cast<VertexId>(n); }
  std::size_t order() const { return static_cast<std::size_t>(m + n); }

  /// "v3" or "w2".
  std::string label(VertexId id) const;
};

using VertexLabeler = std::function<std::string(VertexId)>;

/// Plain decimal id.
std::string plain_label(VertexId id);

/// Undirected DOT: node lines in id order, then edge lines sorted by (u, v).
void write_dot(std::ostream& out, const Graph& g, const VertexLabeler& labeler = plain_label);

/// "# order N" header, then one "u v" line per edge, u < v, sorted.
void write_edge_list(std::ostream& out, const Graph& g);

/// Reads the format written by write_edge_list. Blank lines and further
/// '#' comment lines are ignored. Throws ContractViolation on bad input.
Graph read_edge_list(std::istream& in);

}  // namespace tokenham
