#include "tokenham/graph.hpp"

#include <algorithm>
#include <istream>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>

#include "tokenham/error.hpp"

namespace tokenham {

struct Graph::DenseState {
  std::once_flag once;
  std::vector<std::uint64_t> bits;
};

Graph::Graph(std::size_t order, std::size_t dense_threshold)
    : adjacency_(order), dense_threshold_(dense_threshold), dense_state_(std::make_shared<DenseState>()) {}

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges, std::size_t dense_threshold) {
  std::vector<std::vector<VertexId>> adjacency(order);
  for (const auto& [u, v] : edges) {
    if (u >= order || v >= order) {
      throw ContractViolation("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") out of range for order " + std::to_string(order));
    }
    if (u == v) throw ContractViolation("loop at vertex " + std::to_string(u));
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  for (auto& list : adjacency) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return from_adjacency(std::move(adjacency), dense_threshold);
}

Graph Graph::from_adjacency(std::vector<std::vector<VertexId>> adjacency, std::size_t dense_threshold) {
  Graph g(0, dense_threshold);
  g.adjacency_ = std::move(adjacency);
  std::size_t degree_sum = 0;
  for (const auto& list : g.adjacency_) degree_sum += list.size();
  g.edge_count_ = degree_sum / 2;
  if (auto problem = g.validate(); !problem.empty()) throw ContractViolation(problem);
  return g;
}

const std::vector<std::uint64_t>* Graph::dense_bits() const {
  const std::size_t n = order();
  if (n > dense_threshold_ || !dense_state_) return nullptr;
  std::call_once(dense_state_->once, [&] {
    const std::size_t words = (n + 63) / 64;
    auto& bits = dense_state_->bits;
    bits.assign(n * words, 0);
    for (std::size_t u = 0; u < n; ++u) {
      for (VertexId v : adjacency_[u]) bits[u * words + v / 64] |= std::uint64_t{1} << (v % 64);
    }
  });
  return &dense_state_->bits;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u >= order() || v >= order()) return false;
  if (const auto* bits = dense_bits()) {
    const std::size_t words = (order() + 63) / 64;
    return ((*bits)[u * words + v / 64] >> (v % 64)) & 1U;
  }
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < order(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string Graph::validate() const {
  const std::size_t n = order();
  for (VertexId u = 0; u < n; ++u) {
    const auto& list = adjacency_[u];
    for (std::size_t i = 0; i < list.size(); ++i) {
      const VertexId v = list[i];
      if (v >= n) return "neighbor " + std::to_string(v) + " of " + std::to_string(u) + " out of range";
      if (v == u) return "loop at vertex " + std::to_string(u);
      if (i > 0 && list[i - 1] >= v) {
        return "neighbors of " + std::to_string(u) + " not strictly increasing";
      }
      const auto& back = adjacency_[v];
      if (!std::binary_search(back.begin(), back.end(), u)) {
        return "asymmetric edge " + std::to_string(u) + "->" + std::to_string(v);
      }
    }
  }
  return {};
}

FamilyTag parse_family_tag(const std::string& name) {
  if (name == "path") return FamilyTag::Path;
  if (name == "empty") return FamilyTag::Empty;
  if (name == "complete") return FamilyTag::Complete;
  if (name == "cycle") return FamilyTag::Cycle;
  if (name == "bipartite" || name == "complete-bipartite") return FamilyTag::CompleteBipartite;
  if (name == "star") return FamilyTag::Star;
  if (name == "pathsq" || name == "square-of-path") return FamilyTag::SquareOfPath;
  if (name == "fan") return FamilyTag::Fan;
  throw ParameterError("unknown graph family '" + name + "'");
}

std::string family_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::Path: return "path";
    case FamilyTag::Empty: return "empty";
    case FamilyTag::Complete: return "complete";
    case FamilyTag::Cycle: return "cycle";
    case FamilyTag::CompleteBipartite: return "bipartite";
    case FamilyTag::Star: return "star";
    case FamilyTag::SquareOfPath: return "pathsq";
    case FamilyTag::Fan: return "fan";
  }
  return "?";
}

namespace {

void require_params(const GraphFamily& family, std::size_t count) {
  if (family.params.size() != count) {
    throw ParameterError(family_name(family.tag) + " takes " + std::to_string(count) + " parameter(s), got " +
                         std::to_string(family.params.size()));
  }
  for (int p : family.params) {
    if (p < 1) throw ParameterError(family_name(family.tag) + " parameters must be positive");
  }
}

Graph path_power(std::size_t n, std::size_t reach) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t d = 1; d <= reach && i + d < n; ++d) {
      edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(i + d));
    }
  }
  return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

}  // namespace

Graph build(const GraphFamily& family) {
  switch (family.tag) {
    case FamilyTag::Path:
      require_params(family, 1);
      return path_power(static_cast<std::size_t>(family.params[0]), 1);
    case FamilyTag::Empty:
      require_params(family, 1);
      return Graph(static_cast<std::size_t>(family.params[0]));
    case FamilyTag::Complete:
      require_params(family, 1);
      return complete_graph(static_cast<std::size_t>(family.params[0]));
    case FamilyTag::Cycle: {
      require_params(family, 1);
      const auto n = static_cast<std::size_t>(family.params[0]);
      if (n < 3) throw ParameterError("cycle needs at least 3 vertices");
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < n; ++i) {
        edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
      }
      return Graph::from_edges(n, edges);
    }
    case FamilyTag::CompleteBipartite:
      require_params(family, 2);
      return join(Graph(static_cast<std::size_t>(family.params[0])), Graph(static_cast<std::size_t>(family.params[1])));
    case FamilyTag::Star:
      require_params(family, 1);
      return join(Graph(1), Graph(static_cast<std::size_t>(family.params[0])));
    case FamilyTag::SquareOfPath:
      require_params(family, 1);
      return path_power(static_cast<std::size_t>(family.params[0]), 2);
    case FamilyTag::Fan: {
      require_params(family, 2);
      // E_m + P_n would put hubs first; the canonical labeling wants the
      // path first, and join is symmetric up to that shift.
      return join(path_power(static_cast<std::size_t>(family.params[1]), 1),
                  Graph(static_cast<std::size_t>(family.params[0])));
    }
  }
  throw ParameterError("unknown graph family");
}

Graph join(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0) throw ParameterError("join of an empty graph");
  const auto shift = static_cast<VertexId>(g.order());
  std::vector<Edge> edges = g.edges();
  for (const auto& [u, v] : h.edges()) edges.emplace_back(u + shift, v + shift);
  for (VertexId u = 0; u < g.order(); ++u) {
    for (VertexId v = 0; v < h.order(); ++v) edges.emplace_back(u, v + shift);
  }
  return Graph::from_edges(g.order() + h.order(), edges);
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> keep) {
  std::vector<std::int64_t> position(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) position[keep[i]] = static_cast<std::int64_t>(i);
  std::vector<std::vector<VertexId>> adjacency(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (VertexId u : g.neighbors(keep[i])) {
      if (position[u] >= 0) adjacency[i].push_back(static_cast<VertexId>(position[u]));
    }
    std::sort(adjacency[i].begin(), adjacency[i].end());
  }
  return Graph::from_adjacency(std::move(adjacency));
}

Components connected_components(const Graph& g) {
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  Components out;
  out.label.assign(g.order(), kUnset);
  std::vector<VertexId> queue;
  for (VertexId start = 0; start < g.order(); ++start) {
    if (out.label[start] != kUnset) continue;
    const std::size_t id = out.count++;
    out.label[start] = id;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (VertexId u : g.neighbors(queue[head])) {
        if (out.label[u] == kUnset) {
          out.label[u] = id;
          queue.push_back(u);
        }
      }
    }
  }
  return out;
}

std::string FanLayout::label(VertexId id) const {
  if (is_hub(id)) return "w" + std::to_string(id - static_cast<VertexId>(n) + 1);
  return "v" + std::to_string(id + 1);
}

std::string plain_label(VertexId id) { return std::to_string(id); }

void write_dot(std::ostream& out, const Graph& g, const VertexLabeler& labeler) {
  out << "graph {\n";
  for (VertexId v = 0; v < g.order(); ++v) out << "  " << v << " [label=\"" << labeler(v) << "\"];\n";
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# order " << g.order() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> order;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::istringstream fields(line.substr(first));
    if (line[first] == '#') {
      std::string hash, word;
      fields >> hash >> word;
      if (word == "order" && !order) {
        long long n = -1;
        if (!(fields >> n) || n < 0) {
          throw ContractViolation("line " + std::to_string(line_no) + ": bad order header");
        }
        order = static_cast<std::size_t>(n);
      }
      continue;
    }
    if (!order) throw ContractViolation("line " + std::to_string(line_no) + ": edge before '# order N' header");
    long long u = -1, v = -1;
    std::string rest;
    if (!(fields >> u >> v) || (fields >> rest) || u < 0 || v < 0) {
      throw ContractViolation("line " + std::to_string(line_no) + ": expected 'u v'");
    }
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  if (!order) throw ContractViolation("missing '# order N' header");
  return Graph::from_edges(*order, edges);
}

}  // namespace tokenham
