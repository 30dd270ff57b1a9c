#include "tokenham/fan_ham.hpp"

#include <algorithm>

#include "tokenham/error.hpp"
#include "tokenham/verification.hpp"

namespace tokenham {

namespace {

using Sequence = std::vector<TokenVertex>;

TokenVertex pair_of(VertexId a, VertexId b) { return TokenVertex{a, b}; }

std::string fan_name(int m, int n) { return "F_{" + std::to_string(m) + "," + std::to_string(n) + "}"; }

std::size_t position_of(const Sequence& seq, const TokenVertex& v) {
  const auto it = std::find(seq.begin(), seq.end(), v);
  if (it == seq.end()) throw ConstructionError("vertex " + format_token(v) + " missing from construction");
  return static_cast<std::size_t>(it - seq.begin());
}

// Hamiltonian path of `cycle` from `from` to `to`, which must be cyclically
// consecutive: the cycle minus the edge between them.
Sequence open_cycle(const Sequence& cycle, const TokenVertex& from, const TokenVertex& to) {
  const std::size_t len = cycle.size();
  const std::size_t p = position_of(cycle, from);
  const std::size_t q = position_of(cycle, to);
  Sequence out;
  out.reserve(len);
  if ((p + 1) % len == q) {
    for (std::size_t step = 0; step < len; ++step) out.push_back(cycle[(p + len - step) % len]);
  } else if ((q + 1) % len == p) {
    for (std::size_t step = 0; step < len; ++step) out.push_back(cycle[(p + step) % len]);
  } else {
    throw ConstructionError(format_token(from) + " and " + format_token(to) + " are not consecutive on the cycle");
  }
  return out;
}

void append(Sequence& out, const Sequence& part, bool reversed) {
  if (reversed) {
    out.insert(out.end(), part.rbegin(), part.rend());
  } else {
    out.insert(out.end(), part.begin(), part.end());
  }
}

// Throws unless consecutive entries of `path` are token-adjacent in g.
void check_path(const Graph& g, const Sequence& path, const std::string& what) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!token_adjacent(g, path[i], path[i + 1])) {
      throw ConstructionError(what + ": " + format_token(path[i]) + " -> " + format_token(path[i + 1]) +
                              " is not an edge");
    }
  }
}

CycleCertificate finish(Sequence seq, int m, int n, std::size_t k, bool with_marker = true) {
  CycleCertificate cert;
  cert.base_order = static_cast<std::size_t>(m + n);
  cert.k = k;
  cert.m = m;
  cert.n = n;
  cert.labeling = Labeling::FanCanonical;
  cert.sequence = std::move(seq);
  if (with_marker) {
    Marker mk;
    std::tie(mk.first_vertex, mk.second_vertex) = fan_marker_vertices(m, n, k);
    mk.first = position_of(cert.sequence, mk.first_vertex);
    mk.second = position_of(cert.sequence, mk.second_vertex);
    cert.marker = std::move(mk);
  }
  const auto verdict = verify_cycle(build(GraphFamily::fan(m, n)), k, cert);
  if (!verdict) {
    throw ConstructionError("construction for " + fan_name(m, n) + "^{" + std::to_string(k) +
                            "} failed verification: " + reason_code(verdict.reason) + " " + verdict.detail);
  }
  return cert;
}

// ---- k = 2 -----------------------------------------------------------------

// The m = 1 cycle: reversed T_1, T_2, reversed T_3, ..., where
// T_i = {v_i,w_1}{v_i,v_{i+1}}...{v_i,v_n} and T_n = {v_n,w_1}.
Sequence m1_raw(int n) {
  const FanLayout L{1, n};
  Sequence out;
  for (int i = 1; i <= n; ++i) {
    Sequence t{pair_of(L.v(i), L.w(1))};
    for (int j = i + 1; j <= n; ++j) t.push_back(pair_of(L.v(i), L.v(j)));
    append(out, t, i % 2 == 1);
  }
  return out;
}

std::vector<Sequence> max_paths_raw(int n) {
  const int m = 2 * n;
  const FanLayout L{m, n};
  std::vector<Sequence> paths;
  paths.reserve(static_cast<std::size_t>(m));
  Sequence first = m1_raw(n);
  std::reverse(first.begin(), first.end());  // {v_n,w_1} ... {v_1,v_n}
  paths.push_back(std::move(first));
  for (int i = 2; i <= m; ++i) {
    Sequence p{pair_of(L.w(i), L.v(n))};
    p.push_back(pair_of(L.w(i), L.w(i <= n ? 1 : hub_index(i + n, n))));
    for (int j = n - 1; j >= 1; --j) {
      p.push_back(pair_of(L.w(i), L.v(j)));
      p.push_back(pair_of(L.w(i), L.w(hub_index(i + j, n))));
    }
    paths.push_back(std::move(p));
  }
  return paths;
}

// Hub index of the other member of a {w_i, w_x} vertex, or 0 if `v` is not
// a hub pair containing w_i.
int other_hub(const TokenVertex& v, const FanLayout& L, int i) {
  if (v.size() != 2 || !L.is_hub(v[0]) || !L.is_hub(v[1])) return 0;
  const int a = static_cast<int>(v[0]) - L.n + 1;
  const int b = static_cast<int>(v[1]) - L.n + 1;
  if (a == i) return b;
  if (b == i) return a;
  return 0;
}

std::vector<Sequence> mid_paths_raw(int m, int n) {
  const FanLayout L{m, n};
  const Graph fan = build(GraphFamily::fan(m, n));
  std::vector<Sequence> all = max_paths_raw(n);
  std::vector<Sequence> paths(all.begin(), all.begin() + m);
  for (int i = 2; i <= m; ++i) {
    Sequence& p = paths[static_cast<std::size_t>(i - 1)];
    if (i == m) {
      const auto a = std::find(p.begin(), p.end(), pair_of(L.w(m), L.w(m + 1)));
      const auto b = std::find(p.begin(), p.end(), pair_of(L.w(m), L.w(1)));
      if (a == p.end() || b == p.end()) throw ConstructionError("P_m lacks {w_m,w_{m+1}} or {w_m,w_1}");
      std::iter_swap(a, b);
    }
    std::erase_if(p, [&](const TokenVertex& v) { return other_hub(v, L, i) > m; });
    check_path(fan, p, "P'_" + std::to_string(i));
  }
  return paths;
}

Sequence concat(const std::vector<Sequence>& paths) {
  Sequence out;
  for (const auto& p : paths) append(out, p, false);
  return out;
}

// Cut {w_i, v_j} of F_{m,n}^{2} with its exact component count.
NonHamWitness hub_path_cut(int m, int n) {
  const FanLayout L{m, n};
  NonHamWitness w;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) w.cut.push_back(pair_of(L.v(j), L.w(i)));
  }
  std::sort(w.cut.begin(), w.cut.end());
  const auto check = check_witness(build(GraphFamily::fan(m, n)), 2, w.cut);
  w.cut_size = check.cut_size;
  w.component_count = check.component_count;
  return w;
}

// ---- general k -------------------------------------------------------------

// Recursion labeling: 0 is w_1 (called v_0), i in 1..n is v_i.
using Subsets = std::vector<std::vector<VertexId>>;

// {0..hi} minus `drop`.
std::vector<VertexId> lemma_set(VertexId hi, std::initializer_list<VertexId> drop) {
  std::vector<VertexId> out;
  for (VertexId x = 0; x <= hi; ++x) {
    if (std::find(drop.begin(), drop.end(), x) == drop.end()) out.push_back(x);
  }
  return out;
}

Sequence lemma_to_canonical(const Subsets& subsets, int n) {
  Sequence out;
  out.reserve(subsets.size());
  for (const auto& s : subsets) {
    std::vector<VertexId> ids;
    ids.reserve(s.size());
    for (VertexId x : s) ids.push_back(x == 0 ? static_cast<VertexId>(n) : x - 1);
    out.emplace_back(std::move(ids));
  }
  return out;
}

Subsets canonical_to_lemma(const Sequence& seq, int n) {
  Subsets out;
  out.reserve(seq.size());
  for (const auto& v : seq) {
    std::vector<VertexId> ids;
    for (VertexId x : v) ids.push_back(x == static_cast<VertexId>(n) ? 0 : x + 1);
    std::sort(ids.begin(), ids.end());
    out.push_back(std::move(ids));
  }
  return out;
}

Subsets open_subsets(const Subsets& cycle, const std::vector<VertexId>& from, const std::vector<VertexId>& to) {
  Sequence wrapped;
  wrapped.reserve(cycle.size());
  for (const auto& s : cycle) wrapped.push_back(TokenVertex::from_sorted(s));
  const Sequence path =
      open_cycle(wrapped, TokenVertex::from_sorted(from), TokenVertex::from_sorted(to));
  Subsets out;
  out.reserve(path.size());
  for (const auto& v : path) out.emplace_back(v.begin(), v.end());
  return out;
}

void append_subsets(Subsets& out, const Subsets& part, bool reversed) {
  if (reversed) {
    out.insert(out.end(), part.rbegin(), part.rend());
  } else {
    out.insert(out.end(), part.begin(), part.end());
  }
}

// Hamiltonian cycle of F_{1,n}^{k} in lemma labeling, containing the edge
// {0,1,..,k-1} ~ {1,..,k}. Requires n >= 3, 2 <= k <= n-1.
Subsets lemma_raw(int n, int k) {
  if (k == 2) return canonical_to_lemma(m1_raw(n), n);

  const auto K = static_cast<VertexId>(k);
  // Hamiltonian path X_i -> Y_i of H_i (last token fixed at v_i), from the
  // cycle of F_{1,i-1}^{k-1} with v_i appended to every subset.
  auto block_path = [&](int i) {
    Subsets cycle = lemma_raw(i - 1, k - 1);
    for (auto& s : cycle) s.push_back(static_cast<VertexId>(i));
    std::vector<VertexId> x = lemma_set(K - 2, {});
    x.push_back(static_cast<VertexId>(i));
    std::vector<VertexId> y = lemma_set(K - 1, {0});
    y.push_back(static_cast<VertexId>(i));
    return open_subsets(cycle, x, y);
  };

  Subsets out;
  int first_block = 0;
  if ((n - k) % 2 == 1) {
    // P_k = Z_k Z_0 Z_1 ... Z_{k-1}, Z_j = {v_0..v_k} - v_j.
    out.push_back(lemma_set(K, {K}));
    for (VertexId j = 0; j < K; ++j) out.push_back(lemma_set(K, {j}));
    first_block = k + 1;
  } else {
    // A_{i,j} = {v_0..v_{k+1}} - {v_i, v_j}.
    auto A = [&](VertexId i, VertexId j) { return lemma_set(K + 1, {i, j}); };
    out.push_back(A(K, K + 1));
    out.push_back(A(0, K + 1));
    // R' = R_k R_1 R_2 ... R_{k-1}
    out.push_back(A(K, 0));
    out.push_back(A(1, K));
    out.push_back(A(1, K + 1));
    out.push_back(A(1, 0));
    for (VertexId j = K - 1; j >= 2; --j) out.push_back(A(1, j));
    for (VertexId t = 2; t < K; ++t) {
      out.push_back(A(t, 0));
      out.push_back(A(t, K + 1));
      for (VertexId j = K; j > t; --j) out.push_back(A(t, j));
    }
    first_block = k + 2;
  }
  // Blocks alternate forward / reversed, starting forward.
  for (int i = first_block; i <= n; ++i) append_subsets(out, block_path(i), (i - first_block) % 2 == 1);
  return out;
}

// F_{1,n}^{n} via complementation of the cycle w_1 v_1 ... v_n of F_{1,n}.
Sequence complement_boundary_raw(int n) {
  const FanLayout L{1, n};
  const std::size_t order = L.order();
  Sequence out;
  out.push_back(complement_vertex(TokenVertex{L.w(1)}, order));
  for (int i = 1; i <= n; ++i) out.push_back(complement_vertex(TokenVertex{L.v(i)}, order));
  return out;
}

// Maps a certificate of F_{m-1,n} onto the hubs w_2..w_m of F_{m,n},
// optionally adding w_1 to every vertex.
Sequence lift_hubs(const Sequence& seq, int n, bool add_w1) {
  const auto hub0 = static_cast<VertexId>(n);
  Sequence out;
  out.reserve(seq.size());
  for (const auto& v : seq) {
    std::vector<VertexId> ids;
    ids.reserve(v.size() + 1);
    if (add_w1) ids.push_back(hub0);
    for (VertexId x : v) ids.push_back(x < hub0 ? x : x + 1);
    out.emplace_back(std::move(ids));
  }
  return out;
}

Sequence fan_raw(int m, int n, int k) {
  if (k == 2) {
    if (m == 1) return m1_raw(n);
    if (m == 2 * n) return concat(max_paths_raw(n));
    return concat(mid_paths_raw(m, n));
  }
  if (m == 1) {
    if (k <= n - 1) return lemma_to_canonical(lemma_raw(n, k), n);
    return complement_boundary_raw(n);
  }
  // S_1 (w_1 present) ~ F_{m-1,n}^{k-1}; S_2 (w_1 absent) ~ F_{m-1,n}^{k}.
  const Sequence c1 = lift_hubs(fan_raw(m - 1, n, k - 1), n, true);
  const Sequence c2 = lift_hubs(fan_raw(m - 1, n, k), n, false);
  const FanLayout L{m, n};
  std::vector<VertexId> x1{L.w(1), L.w(2)}, y1{L.w(1)}, x2{L.w(2)}, y2;
  for (int i = 1; i <= k; ++i) {
    if (i <= k - 2) x1.push_back(L.v(i));
    if (i <= k - 1) {
      y1.push_back(L.v(i));
      x2.push_back(L.v(i));
    }
    y2.push_back(L.v(i));
  }
  Sequence out = open_cycle(c1, TokenVertex(x1), TokenVertex(y1));
  append(out, open_cycle(c2, TokenVertex(y2), TokenVertex(x2)), false);
  return out;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ParameterError(message);
}

}  // namespace

int hub_index(int i, int n) {
  const int mod = 2 * n;
  return ((i - 1) % mod + mod) % mod + 1;
}

int hub_pair_owner(int i, int j, int n) {
  if (i > j) std::swap(i, j);
  if (i == j || i < 1 || j > 2 * n) throw ParameterError("hub pair out of range");
  if (i == 1) return j;
  if (i <= n) return j <= i + n - 1 ? i : j;
  return i;
}

CycleCertificate double_cycle_m1(int n) {
  require(n >= 2, "double_cycle_m1 needs n >= 2");
  return finish(m1_raw(n), 1, n, 2);
}

std::vector<Sequence> double_cycle_max_paths(int n) {
  require(n >= 2, "double_cycle_max needs n >= 2");
  return max_paths_raw(n);
}

CycleCertificate double_cycle_max(int n) {
  require(n >= 2, "double_cycle_max needs n >= 2");
  return finish(concat(max_paths_raw(n)), 2 * n, n, 2);
}

std::vector<Sequence> double_cycle_mid_paths(int m, int n) {
  require(n >= 2 && m > 1 && m < 2 * n, "double_cycle_mid needs n >= 2 and 1 < m < 2n");
  return mid_paths_raw(m, n);
}

CycleCertificate double_cycle_mid(int m, int n) {
  return finish(concat(double_cycle_mid_paths(m, n)), m, n, 2);
}

CycleCertificate star_double_cycle() {
  const FanLayout L{3, 1};
  const VertexId v1 = L.v(1), w1 = L.w(1), w2 = L.w(2), w3 = L.w(3);
  Sequence seq{pair_of(v1, w1), pair_of(w1, w2), pair_of(v1, w2), pair_of(w2, w3), pair_of(v1, w3), pair_of(w1, w3)};
  return finish(std::move(seq), 3, 1, 2, false);
}

NonHamWitness witness_over(int m, int n) {
  require(n >= 1 && m > 2 * n, "witness_over needs m > 2n >= 2");
  NonHamWitness w = hub_path_cut(m, n);
  if (w.component_count <= w.cut_size) {
    throw ConstructionError("cut of " + fan_name(m, n) + "^{2} does not separate enough components");
  }
  return w;
}

FanFeasibility double_cycle(int m, int n) {
  require(m >= 1 && n >= 1, "double_cycle needs m >= 1 and n >= 1");
  if (n == 1) {
    if (m == 3) return Hamiltonian{star_double_cycle()};
    if (m == 1) return NotHamiltonian{std::nullopt, "F_{1,1}^{2} has a single vertex"};
    if (m == 2) {
      const auto tg = token_graph(build(GraphFamily::fan(2, 1)), 2);
      const auto search = brute_ham_cycle(tg.graph());
      if (search.status != SearchStatus::None) throw ConstructionError("F_{2,1}^{2} unexpectedly not refuted");
      return NotHamiltonian{std::nullopt, "exhaustive search: F_{2,1}^{2} has no Hamiltonian cycle"};
    }
    NonHamWitness w = hub_path_cut(m, n);
    if (w.component_count <= w.cut_size) {
      throw ConstructionError("star cut does not separate enough components");
    }
    return NotHamiltonian{std::move(w), "cut witness"};
  }
  if (m == 1) return Hamiltonian{double_cycle_m1(n)};
  if (m == 2 * n) return Hamiltonian{double_cycle_max(n)};
  if (m < 2 * n) return Hamiltonian{double_cycle_mid(m, n)};
  return NotHamiltonian{witness_over(m, n), "cut witness"};
}

CycleCertificate lemma_cycle_m1(int n, int k) {
  require(n >= 3 && k >= 2 && k <= n - 1, "lemma_cycle_m1 needs n >= 3 and 2 <= k <= n-1");
  if (k == 2) return double_cycle_m1(n);
  return finish(lemma_to_canonical(lemma_raw(n, k), n), 1, n, static_cast<std::size_t>(k));
}

CycleCertificate fan_cycle(int m, int n, int k) {
  require(k >= 2 && n >= k && m >= 1 && m <= 2 * n, "fan_cycle needs k >= 2, n >= k and 1 <= m <= 2n");
  return finish(fan_raw(m, n, k), m, n, static_cast<std::size_t>(k));
}

FanFeasibility fan_feasibility(int m, int n, int k) {
  require(m >= 1 && n >= 1, "fan needs m >= 1 and n >= 1");
  require(k >= 1 && k < m + n, "k must satisfy 1 <= k <= m+n-1");
  if (k == 2) return double_cycle(m, n);
  if (k == 1) return Unknown{"k = 1 is the fan itself; no construction applies"};
  if (n < k) return Unknown{"no construction for n < k"};
  if (m > 2 * n) return Unknown{"no construction or witness for k > 2 and m > 2n"};
  return Hamiltonian{fan_cycle(m, n, k)};
}

CycleCertificate join_cycle(const Graph& g1, const Graph& g2, const std::vector<VertexId>& hpath, int k) {
  const int m = static_cast<int>(g1.order());
  const int n = static_cast<int>(g2.order());
  if (hpath.size() != g2.order()) throw ContractViolation("Hamiltonian path must list every vertex of g2 once");
  std::vector<bool> seen(g2.order(), false);
  for (VertexId v : hpath) {
    if (v >= g2.order() || seen[v]) throw ContractViolation("Hamiltonian path repeats or leaves g2's vertices");
    seen[v] = true;
  }
  for (std::size_t i = 0; i + 1 < hpath.size(); ++i) {
    if (!g2.has_edge(hpath[i], hpath[i + 1])) {
      throw ContractViolation("Hamiltonian path uses non-edge (" + std::to_string(hpath[i]) + "," +
                              std::to_string(hpath[i + 1]) + ") at step " + std::to_string(i));
    }
  }
  require(k >= 2 && n >= k && m >= 1 && m <= 2 * n, "join_cycle needs k >= 2, n >= k and 1 <= |g1| <= 2|g2|");

  const CycleCertificate fan = fan_cycle(m, n, k);
  auto to_join = [&](const TokenVertex& v) {
    std::vector<VertexId> ids;
    ids.reserve(v.size());
    for (VertexId x : v) {
      ids.push_back(x < static_cast<VertexId>(n) ? static_cast<VertexId>(m) + hpath[x] : x - static_cast<VertexId>(n));
    }
    return TokenVertex(std::move(ids));
  };
  CycleCertificate out;
  out.base_order = fan.base_order;
  out.k = fan.k;
  out.m = m;
  out.n = n;
  out.labeling = Labeling::Join;
  out.sequence.reserve(fan.sequence.size());
  for (const auto& v : fan.sequence) out.sequence.push_back(to_join(v));
  if (fan.marker) {
    out.marker = Marker{fan.marker->first, fan.marker->second, to_join(fan.marker->first_vertex),
                        to_join(fan.marker->second_vertex)};
  }
  const auto verdict = verify_cycle(join(g1, g2), static_cast<std::size_t>(k), out);
  if (!verdict) {
    throw ConstructionError("join certificate failed verification: " + reason_code(verdict.reason) + " " +
                            verdict.detail);
  }
  return out;
}

}  // namespace tokenham
