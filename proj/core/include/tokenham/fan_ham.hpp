#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tokenham/certificate.hpp"
#include "tokenham/graph.hpp"

namespace tokenham {

// Hamiltonian cycles in token graphs of fans F_{m,n} = E_m + P_n and of
// joins G_1 + G_2 where G_2 has a Hamiltonian path.
//
// All vertex ids use the canonical fan labeling (FanLayout): path vertices
// v_1..v_n are 0..n-1 and hubs w_1..w_m are n..n+m-1. Every public
// construction re-verifies its output against the base graph before
// returning and throws ConstructionError if that check fails.

/// 1-based hub index arithmetic modulo 2n, with 2n mod 2n = 2n.
int hub_index(int i, int n);

/// Which path P_t of the m = 2n double-vertex construction owns the hub
/// pair {w_i, w_j}.
int hub_pair_owner(int i, int j, int n);

/// F_{1,n}^{2} for n >= 2, with marker ({w1,v1}, {v1,v2}).
CycleCertificate double_cycle_m1(int n);

/// F_{2n,n}^{2} for n >= 2.
CycleCertificate double_cycle_max(int n);

/// The m = 2n construction split into its paths P_1..P_{2n}, in order.
std::vector<std::vector<TokenVertex>> double_cycle_max_paths(int n);

/// F_{m,n}^{2} for 1 < m < 2n.
CycleCertificate double_cycle_mid(int m, int n);

/// The paths P'_1..P'_m used by double_cycle_mid.
std::vector<std::vector<TokenVertex>> double_cycle_mid_paths(int m, int n);

/// The 6-cycle of K_{1,3}^{2} = F_{3,1}^{2}; carries no marker.
CycleCertificate star_double_cycle();

/// Cut A = {{w_i, v_j}} of F_{m,n}^{2} for m > 2n >= 2, with its exact
/// component count.
NonHamWitness witness_over(int m, int n);

struct Hamiltonian {
  CycleCertificate certificate;
};

struct NotHamiltonian {
  std::optional<NonHamWitness> witness;
  std::string reason;
};

struct Unknown {
  std::string reason;
};

using FanFeasibility = std::variant<Hamiltonian, NotHamiltonian, Unknown>;

/// Decides F_{m,n}^{2}: Hamiltonian iff n >= 2 and m <= 2n, or n = 1 and
/// m = 3. Negative verdicts carry a cut witness when one exists; the two
/// tiny stars K_{1,1}, K_{1,2} are refuted by exhaustion.
FanFeasibility double_cycle(int m, int n);

/// F_{1,n}^{k}, n >= 3, 2 <= k <= n-1, with marker
/// ({w1,v1..v_{k-1}}, {v1..v_k}).
CycleCertificate lemma_cycle_m1(int n, int k);

/// F_{m,n}^{k} for k >= 2, n >= k, 1 <= m <= 2n, with the same marker.
CycleCertificate fan_cycle(int m, int n, int k);

/// fan_cycle / double_cycle dispatch for any (m, n, k): Unknown outside the
/// proven ranges, ParameterError when k is not in 1..m+n-1.
FanFeasibility fan_feasibility(int m, int n, int k);

/// Hamiltonian cycle of (g1 + g2)^{k} from a Hamiltonian path of g2. Ids
/// follow join(g1, g2): g1 first, then g2 shifted by |g1|.
CycleCertificate join_cycle(const Graph& g1, const Graph& g2, const std::vector<VertexId>& hpath, int k);

}  // namespace tokenham
