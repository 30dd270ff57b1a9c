#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tokenham/certificate.hpp"
#include "tokenham/graph.hpp"
#include "tokenham/token.hpp"

namespace tokenham {

/// Machine-readable rejection reasons. The string forms are part of the
/// CLI's JSON output.
enum class Reason {
  Ok,
  WrongLength,
  Malformed,
  Duplicate,
  NonEdgeAt,
  MarkerMismatch,
  OrderMismatch,
  BudgetExhausted,
};

std::string reason_code(Reason reason);

struct Verdict {
  Reason reason = Reason::Ok;
  /// Index of the offending entry, when the check is positional.
  std::optional<std::size_t> index;
  std::string detail;

  bool accepted() const { return reason == Reason::Ok; }
  explicit operator bool() const { return accepted(); }
};

/// {"accepted":bool,"reason":"...","index":i,"detail":"..."}
std::string to_json(const Verdict& verdict);

/// Checks a claimed Hamiltonian cycle of g^{k} without materializing the
/// token graph: length C(order, k), valid and distinct entries, cyclic
/// token adjacency, and the marker pair when one is claimed. Never throws
/// for malformed certificates; the first violation is reported.
Verdict verify_cycle(const Graph& g, std::size_t k, const CycleCertificate& cert);

/// Same checks applied to a bare sequence (no marker).
Verdict verify_sequence(const Graph& g, std::size_t k, std::span<const TokenVertex> sequence, bool cyclic);

inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

enum class SearchStatus { Found, None, BudgetExhausted };

std::string status_name(SearchStatus status);

struct SearchResult {
  SearchStatus status = SearchStatus::None;
  /// The cycle (without repeating the start) or path, as vertex ids.
  std::vector<VertexId> order;
  std::uint64_t expansions = 0;
};

/// Hamiltonian cycle search. `None` is exact; `Found` orders are cycles.
///
/// Rejects at once on a vertex of degree < 2 or when no cycle cover
/// (perfect successor matching) exists. Then a seeded rotation-extension
/// pass gets up to min(budget/2, 200*order) steps; if it finds nothing, an
/// exact backtracking search from vertex 0 gets the rest. That search tries
/// the matched successor first, then fewest usable neighbors, and prunes on
/// dead or forced vertices, unvisited vertices cut off from the end, and
/// successor assignments with no perfect matching. Budget counts steps and
/// node expansions. Deterministic. Requires order >= 3.
SearchResult brute_ham_cycle(const Graph& g, std::uint64_t budget = kDefaultSearchBudget);

/// As brute_ham_cycle without the closing edge; start vertices are tried in
/// ascending order and share the budget.
SearchResult brute_ham_path(const Graph& g, std::uint64_t budget = kDefaultSearchBudget);

/// Total node expansions performed by brute-force searches in this process.
std::uint64_t brute_force_expansions();

struct WitnessCheck {
  std::size_t cut_size = 0;
  std::size_t component_count = 0;
  bool proves = false;
};

/// Counts components of g^{k} minus `cut`; proves = components > |cut|.
/// Throws ContractViolation for an empty or invalid cut, ResourceError past
/// the materialization cap.
WitnessCheck check_witness(const Graph& g, std::size_t k, std::span<const TokenVertex> cut,
                           std::size_t cap = kDefaultMaterializationCap);

/// True iff complementation maps g^{k} isomorphically onto g^{order-k}.
bool check_complement_iso(const Graph& g, std::size_t k, std::size_t cap = kDefaultMaterializationCap);

}  // namespace tokenham
