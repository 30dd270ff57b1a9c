#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tokenham/token.hpp"

namespace tokenham {

/// Two cyclically consecutive certificate positions and the token vertices
/// they must hold. For fan certificates these are
/// {w_1, v_1, ..., v_{k-1}} and {v_1, ..., v_k}.
struct Marker {
  std::size_t first = 0;
  std::size_t second = 0;
  TokenVertex first_vertex;
  TokenVertex second_vertex;
};

enum class Labeling { FanCanonical, Join, Plain };

std::string labeling_name(Labeling labeling);

/// A claimed Hamiltonian cycle of a k-token graph.
struct CycleCertificate {
  std::size_t base_order = 0;
  std::size_t k = 0;
  /// Fan parameters (m hubs, n path vertices); for join certificates, the
  /// orders of the two joined graphs.
  int m = 0;
  int n = 0;
  Labeling labeling = Labeling::FanCanonical;
  std::vector<TokenVertex> sequence;
  std::optional<Marker> marker;
};

/// The marker pair a fan certificate must carry.
std::pair<TokenVertex, TokenVertex> fan_marker_vertices(int m, int n, std::size_t k);

/// Rotates (and, if needed, reverses) the cycle so that the marker pair sits
/// at positions 0 and 1. Certificates without a marker are returned as-is.
CycleCertificate normalize(const CycleCertificate& cert);

/// A cut set A with mu(G^{k} - A) > |A|, refuting Hamiltonicity.
struct NonHamWitness {
  std::vector<TokenVertex> cut;
  std::size_t cut_size = 0;
  std::size_t component_count = 0;
};

/// {"m","n","k","labeling","cycle":[[ids]...],"marker":[p,q]}; non-fan
/// certificates additionally carry "marker_sets".
std::string to_json(const CycleCertificate& cert);
/// Parses to_json output. Throws ContractViolation on malformed input.
/// Structural checks (adjacency, distinctness) are left to verify_cycle.
CycleCertificate certificate_from_json(std::string_view text);

/// {"cut":[[ids]...],"cut_size":...,"components":...}
std::string to_json(const NonHamWitness& witness);

/// One token vertex per line, then "marker: p q" when a marker is present.
std::string to_text(const CycleCertificate& cert);

}  // namespace tokenham
