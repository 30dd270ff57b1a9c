#include "tokenham/verification.hpp"

#include <algorithm>
#include <random>

#include <json.hpp>

#include "tokenham/error.hpp"

namespace tokenham {

std::string reason_code(Reason reason) {
  switch (reason) {
    case Reason::Ok: return "ok";
    case Reason::WrongLength: return "wrong_length";
    case Reason::Malformed: return "malformed";
    case Reason::Duplicate: return "duplicate";
    case Reason::NonEdgeAt: return "non_edge_at";
    case Reason::MarkerMismatch: return "marker_mismatch";
    case Reason::OrderMismatch: return "order_mismatch";
    case Reason::BudgetExhausted: return "budget_exhausted";
  }
  return "unknown";
}

std::string to_json(const Verdict& verdict) {
  nlohmann::json j;
  j["accepted"] = verdict.accepted();
  j["reason"] = reason_code(verdict.reason);
  if (verdict.index) j["index"] = *verdict.index;
  if (!verdict.detail.empty()) j["detail"] = verdict.detail;
  return j.dump() + "\n";
}

namespace {

Verdict reject(Reason reason, std::optional<std::size_t> index, std::string detail) {
  return Verdict{reason, index, std::move(detail)};
}

}  // namespace

Verdict verify_sequence(const Graph& g, std::size_t k, std::span<const TokenVertex> sequence, bool cyclic) {
  const std::size_t order = g.order();
  if (k < 1 || k >= order || order > kMaxBinomialN) {
    return reject(Reason::WrongLength, std::nullopt,
                  "k=" + std::to_string(k) + " is not valid for a base graph of order " + std::to_string(order));
  }
  const std::uint64_t expected = binomial(order, k);
  if (sequence.size() != expected) {
    return reject(Reason::WrongLength, std::nullopt,
                  "expected C(" + std::to_string(order) + "," + std::to_string(k) + ")=" + std::to_string(expected) +
                      " entries, got " + std::to_string(sequence.size()));
  }
  if (cyclic && sequence.size() < 3) {
    return reject(Reason::WrongLength, std::nullopt, "a cycle needs at least 3 vertices");
  }
  std::vector<bool> seen(expected, false);
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (!is_valid_token(sequence[i], order, k)) {
      return reject(Reason::Malformed, i, "entry is not a strictly increasing " + std::to_string(k) + "-subset of 0.." +
                                              std::to_string(order - 1));
    }
    const auto r = rank(sequence[i], order);
    if (seen[r]) return reject(Reason::Duplicate, i, "repeated vertex " + format_token(sequence[i]));
    seen[r] = true;
  }
  const std::size_t steps = cyclic ? sequence.size() : sequence.size() - 1;
  for (std::size_t i = 0; i < steps; ++i) {
    const auto& a = sequence[i];
    const auto& b = sequence[(i + 1) % sequence.size()];
    const auto move = token_move(a, b);
    if (!move || !g.has_edge(move->first, move->second)) {
      return reject(Reason::NonEdgeAt, i, format_token(a) + " and " + format_token(b) + " are not token-adjacent");
    }
  }
  return {};
}

Verdict verify_cycle(const Graph& g, std::size_t k, const CycleCertificate& cert) {
  if (cert.base_order != g.order()) {
    return reject(Reason::OrderMismatch, std::nullopt,
                  "certificate base order " + std::to_string(cert.base_order) + " but graph has order " +
                      std::to_string(g.order()));
  }
  if (cert.k != k) {
    return reject(Reason::WrongLength, std::nullopt,
                  "certificate is for k=" + std::to_string(cert.k) + ", checking k=" + std::to_string(k));
  }
  if (auto v = verify_sequence(g, k, cert.sequence, true); !v) return v;
  if (cert.marker) {
    const auto& mk = *cert.marker;
    const std::size_t len = cert.sequence.size();
    if (mk.first >= len || mk.second >= len) {
      return reject(Reason::MarkerMismatch, std::nullopt, "marker position out of range");
    }
    if ((mk.first + 1) % len != mk.second && (mk.second + 1) % len != mk.first) {
      return reject(Reason::MarkerMismatch, mk.first, "marker positions are not cyclically consecutive");
    }
    if (cert.sequence[mk.first] != mk.first_vertex) {
      return reject(Reason::MarkerMismatch, mk.first,
                    "expected " + format_token(mk.first_vertex) + ", found " + format_token(cert.sequence[mk.first]));
    }
    if (cert.sequence[mk.second] != mk.second_vertex) {
      return reject(Reason::MarkerMismatch, mk.second,
                    "expected " + format_token(mk.second_vertex) + ", found " +
                        format_token(cert.sequence[mk.second]));
    }
  }
  return {};
}

std::string status_name(SearchStatus status) {
  switch (status) {
    case SearchStatus::Found: return "found";
    case SearchStatus::None: return "none";
    case SearchStatus::BudgetExhausted: return "budget";
  }
  return "none";
}

namespace {

std::atomic<std::uint64_t> g_expansions{0};

// Hopcroft-Karp over a bipartite graph in CSR form (left i -> right
// targets[offsets[i] .. offsets[i+1])). Buffers are reused across calls.
class BipartiteMatcher {
 public:
  bool perfect(std::size_t left, std::size_t right, const std::vector<std::uint32_t>& offsets,
               const std::vector<std::uint32_t>& targets) {
    if (left != right) return false;
    offsets_ = &offsets;
    targets_ = &targets;
    match_left_.assign(left, kFree);
    match_right_.assign(right, kFree);
    dist_.assign(left, kInf);
    edge_pos_.assign(left, 0);
    std::size_t matched = 0;
    // Greedy seed.
    for (std::uint32_t u = 0; u < left; ++u) {
      for (auto e = offsets[u]; e < offsets[u + 1]; ++e) {
        if (match_right_[targets[e]] == kFree) {
          match_left_[u] = targets[e];
          match_right_[targets[e]] = u;
          ++matched;
          break;
        }
      }
    }
    while (matched < left && layer()) {
      for (std::uint32_t u = 0; u < left; ++u) {
        if (match_left_[u] == kFree && augment(u)) ++matched;
      }
    }
    return matched == left;
  }

  /// Right vertex matched to left vertex u by the last perfect() call.
  std::uint32_t mate(std::uint32_t u) const { return match_left_[u]; }

 private:
  static constexpr auto kFree = static_cast<std::uint32_t>(-1);
  static constexpr auto kInf = static_cast<std::uint32_t>(-1);

  bool layer() {
    const auto& off = *offsets_;
    const auto& tgt = *targets_;
    queue_.clear();
    for (std::uint32_t u = 0; u < match_left_.size(); ++u) {
      if (match_left_[u] == kFree) {
        dist_[u] = 0;
        queue_.push_back(u);
      } else {
        dist_[u] = kInf;
      }
    }
    bool reachable_free = false;
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const auto u = queue_[i];
      for (auto e = off[u]; e < off[u + 1]; ++e) {
        const auto w = match_right_[tgt[e]];
        if (w == kFree) {
          reachable_free = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          queue_.push_back(w);
        }
      }
    }
    return reachable_free;
  }

  // Iterative augmenting-path search along the BFS layers.
  bool augment(std::uint32_t root) {
    const auto& off = *offsets_;
    const auto& tgt = *targets_;
    stack_.assign(1, root);
    edge_pos_[root] = off[root];
    while (!stack_.empty()) {
      const auto u = stack_.back();
      if (edge_pos_[u] == off[u + 1]) {
        dist_[u] = kInf;
        stack_.pop_back();
        continue;
      }
      const auto v = tgt[edge_pos_[u]++];
      const auto w = match_right_[v];
      if (w == kFree) {
        auto right = v;
        for (std::size_t i = stack_.size(); i-- > 0;) {
          const auto left = stack_[i];
          const auto previous = match_left_[left];
          match_left_[left] = right;
          match_right_[right] = left;
          right = previous;
        }
        return true;
      }
      if (dist_[w] != kInf && dist_[w] == dist_[u] + 1) {
        edge_pos_[w] = off[w];
        stack_.push_back(w);
      }
    }
    return false;
  }

  const std::vector<std::uint32_t>* offsets_ = nullptr;
  const std::vector<std::uint32_t>* targets_ = nullptr;
  std::vector<std::uint32_t> match_left_, match_right_, dist_, edge_pos_, queue_, stack_;
};

// Every Hamiltonian cycle is a spanning set of vertex-disjoint directed
// cycles, i.e. a perfect matching between vertices and their successors.
bool has_cycle_cover(const Graph& g) {
  std::vector<std::uint32_t> offsets{0}, targets;
  for (VertexId u = 0; u < g.order(); ++u) {
    for (VertexId v : g.neighbors(u)) targets.push_back(v);
    offsets.push_back(static_cast<std::uint32_t>(targets.size()));
  }
  BipartiteMatcher matcher;
  return matcher.perfect(g.order(), g.order(), offsets, targets);
}

// Backtracking state shared by the cycle and path searches.
class HamiltonSearch {
 public:
  HamiltonSearch(const Graph& g, bool cycle, std::uint64_t budget)
      : g_(g), cycle_(cycle), budget_(budget), visited_(g.order(), false), usable_(g.order(), 0) {}

  // Runs from `start`. Returns Found / None / BudgetExhausted.
  SearchStatus run(VertexId start, std::vector<VertexId>& out);

  std::uint64_t expansions() const { return expansions_; }

 private:
  struct Frame {
    VertexId vertex;
    std::vector<VertexId> candidates;
    std::size_t next = 0;
  };

  void visit(VertexId from, VertexId to);
  void unvisit(VertexId from, VertexId to);
  bool feasible(VertexId from, VertexId to);
  bool unvisited_connected();
  bool successors_assignable(VertexId head);
  std::vector<VertexId> candidates_from(VertexId head);

  const Graph& g_;
  bool cycle_;
  std::uint64_t budget_;
  std::uint64_t expansions_ = 0;
  VertexId start_ = 0;
  std::size_t remaining_ = 0;
  // Unvisited vertices whose usable count is exactly 1 (path mode only).
  std::size_t single_usable_ = 0;
  std::vector<bool> visited_;
  // For unvisited v: neighbors that are unvisited, the current end, or (in
  // cycle mode) the start.
  std::vector<std::uint32_t> usable_;
  std::vector<VertexId> bfs_;
  std::vector<bool> bfs_mark_;
  std::vector<std::uint32_t> right_index_, offsets_, targets_;
  std::vector<VertexId> right_vertex_;
  BipartiteMatcher matcher_;
  // Successor of the head in the last successful matching, if any.
  std::optional<VertexId> hint_;
};

void HamiltonSearch::visit(VertexId from, VertexId to) {
  visited_[to] = true;
  --remaining_;
  if (!cycle_ && usable_[to] == 1) --single_usable_;
  // `from` stops being an endpoint unless it is the cycle's start.
  if (cycle_ && from == start_) return;
  for (VertexId x : g_.neighbors(from)) {
    if (visited_[x]) continue;
    if (!cycle_) {
      if (usable_[x] == 1) --single_usable_;
      if (usable_[x] == 2) ++single_usable_;
    }
    --usable_[x];
  }
}

void HamiltonSearch::unvisit(VertexId from, VertexId to) {
  if (!(cycle_ && from == start_)) {
    for (VertexId x : g_.neighbors(from)) {
      if (visited_[x]) continue;
      ++usable_[x];
      if (!cycle_) {
        if (usable_[x] == 1) ++single_usable_;
        if (usable_[x] == 2) --single_usable_;
      }
    }
  }
  visited_[to] = false;
  ++remaining_;
  if (!cycle_ && usable_[to] == 1) ++single_usable_;
}

bool HamiltonSearch::unvisited_connected() {
  bfs_mark_.assign(g_.order(), false);
  bfs_.clear();
  for (VertexId v = 0; v < g_.order(); ++v) {
    if (!visited_[v]) {
      bfs_.push_back(v);
      bfs_mark_[v] = true;
      break;
    }
  }
  for (std::size_t i = 0; i < bfs_.size(); ++i) {
    for (VertexId x : g_.neighbors(bfs_[i])) {
      if (!visited_[x] && !bfs_mark_[x]) {
        bfs_mark_[x] = true;
        bfs_.push_back(x);
      }
    }
  }
  return bfs_.size() == remaining_;
}

// Cycle mode: the head and every unvisited vertex need distinct successors
// among the unvisited vertices and the start.
bool HamiltonSearch::successors_assignable(VertexId head) {
  constexpr auto kNone = static_cast<std::uint32_t>(-1);
  right_index_.assign(g_.order(), kNone);
  std::uint32_t right = 0;
  right_vertex_.clear();
  for (VertexId v = 0; v < g_.order(); ++v) {
    if (!visited_[v] || v == start_) {
      right_index_[v] = right++;
      right_vertex_.push_back(v);
    }
  }
  offsets_.assign(1, 0);
  targets_.clear();
  auto add_left = [&](VertexId u) {
    for (VertexId v : g_.neighbors(u)) {
      if (right_index_[v] == kNone) continue;
      if (u == head && v == start_) continue;  // unvisited vertices remain
      targets_.push_back(right_index_[v]);
    }
    offsets_.push_back(static_cast<std::uint32_t>(targets_.size()));
  };
  add_left(head);
  std::size_t left = 1;
  for (VertexId v = 0; v < g_.order(); ++v) {
    if (!visited_[v]) {
      add_left(v);
      ++left;
    }
  }
  hint_.reset();
  if (!matcher_.perfect(left, right, offsets_, targets_)) return false;
  hint_ = right_vertex_[matcher_.mate(0)];
  return true;
}

bool HamiltonSearch::feasible(VertexId from, VertexId to) {
  if (cycle_) {
    if (from != start_) {
      for (VertexId x : g_.neighbors(from)) {
        if (!visited_[x] && usable_[x] < 2) return false;
      }
    }
    bool start_open = false;
    for (VertexId x : g_.neighbors(start_)) {
      if (!visited_[x]) {
        start_open = true;
        break;
      }
    }
    if (!start_open) return false;
  } else {
    for (VertexId x : g_.neighbors(from)) {
      if (!visited_[x] && usable_[x] == 0) return false;
    }
    if (single_usable_ > 1) return false;
  }
  bool head_open = false;
  for (VertexId x : g_.neighbors(to)) {
    if (!visited_[x]) {
      head_open = true;
      break;
    }
  }
  if (!head_open || !unvisited_connected()) return false;
  return !cycle_ || successors_assignable(to);
}

std::vector<VertexId> HamiltonSearch::candidates_from(VertexId head) {
  std::vector<VertexId> open;
  std::vector<VertexId> forced;
  for (VertexId x : g_.neighbors(head)) {
    if (visited_[x]) continue;
    open.push_back(x);
    if (cycle_ && usable_[x] == 2) forced.push_back(x);
  }
  // The matched successor first, then fewest usable neighbors, then id.
  std::stable_sort(open.begin(), open.end(), [&](VertexId a, VertexId b) {
    const bool ha = hint_ == a, hb = hint_ == b;
    if (ha != hb) return ha;
    return usable_[a] < usable_[b];
  });
  if (!cycle_) return open;
  // A vertex whose only two usable neighbors include the end must be
  // entered from it next. At the start vertex two such vertices are fine
  // (one is first, the other last); by reversal symmetry try only one.
  const std::size_t allowed = head == start_ ? 2 : 1;
  if (forced.size() > allowed) return {};
  if (!forced.empty()) return {forced.front()};
  return open;
}

SearchStatus HamiltonSearch::run(VertexId start, std::vector<VertexId>& out) {
  const std::size_t n = g_.order();
  start_ = start;
  hint_.reset();
  std::fill(visited_.begin(), visited_.end(), false);
  single_usable_ = 0;
  for (VertexId v = 0; v < n; ++v) {
    usable_[v] = static_cast<std::uint32_t>(g_.degree(v));
    if (!cycle_ && usable_[v] == 1) ++single_usable_;
  }
  remaining_ = n;
  visited_[start] = true;
  --remaining_;
  if (!cycle_ && usable_[start] == 1) --single_usable_;
  if (remaining_ == 0) {
    out.assign(1, start);
    return SearchStatus::Found;
  }
  if (!cycle_ && single_usable_ > 2) return SearchStatus::None;
  if (!unvisited_connected()) return SearchStatus::None;

  std::vector<Frame> stack;
  stack.push_back(Frame{start, candidates_from(start)});
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next == top.candidates.size()) {
      const VertexId done = top.vertex;
      stack.pop_back();
      if (!stack.empty()) unvisit(stack.back().vertex, done);
      continue;
    }
    const VertexId from = top.vertex;
    const VertexId to = top.candidates[top.next++];
    if (expansions_ >= budget_) return SearchStatus::BudgetExhausted;
    ++expansions_;
    g_expansions.fetch_add(1, std::memory_order_relaxed);
    visit(from, to);
    if (remaining_ == 0) {
      if (!cycle_ || g_.has_edge(to, start_)) {
        out.clear();
        for (const auto& f : stack) out.push_back(f.vertex);
        out.push_back(to);
        return SearchStatus::Found;
      }
      unvisit(from, to);
      continue;
    }
    if (!feasible(from, to)) {
      unvisit(from, to);
      continue;
    }
    auto next = candidates_from(to);
    stack.push_back(Frame{to, std::move(next)});
  }
  return SearchStatus::None;
}

// Randomized rotation-extension. Finds cycles quickly on large positives
// where the exact search can sink into a hopeless early branch; it cannot
// prove absence, so the exact search takes over when it gives up.
std::optional<std::vector<VertexId>> rotation_cycle(const Graph& g, std::uint64_t steps, std::uint64_t& spent) {
  const std::size_t n = g.order();
  std::mt19937_64 rng(0x70c3e11ULL);
  std::vector<VertexId> path;
  std::vector<std::size_t> pos(n);
  std::vector<bool> on_path(n);
  std::vector<VertexId> pick;
  const std::uint64_t per_round = 20 * n + 200;
  auto reverse_tail = [&](std::size_t from) {
    std::reverse(path.begin() + static_cast<std::ptrdiff_t>(from), path.end());
    for (std::size_t i = from; i < path.size(); ++i) pos[path[i]] = i;
  };
  while (spent < steps) {
    path.clear();
    std::fill(on_path.begin(), on_path.end(), false);
    const auto s = static_cast<VertexId>(rng() % n);
    path.push_back(s);
    pos[s] = 0;
    on_path[s] = true;
    for (std::uint64_t round = 0; round < per_round && spent < steps; ++round) {
      ++spent;
      g_expansions.fetch_add(1, std::memory_order_relaxed);
      const VertexId end = path.back();
      // Extend towards the unvisited neighbor with the fewest unvisited neighbors.
      pick.clear();
      std::size_t best = static_cast<std::size_t>(-1);
      for (VertexId x : g.neighbors(end)) {
        if (on_path[x]) continue;
        std::size_t free = 0;
        for (VertexId y : g.neighbors(x)) free += on_path[y] ? 0 : 1;
        if (free < best) {
          best = free;
          pick.assign(1, x);
        } else if (free == best) {
          pick.push_back(x);
        }
      }
      if (!pick.empty()) {
        const VertexId x = pick[rng() % pick.size()];
        pos[x] = path.size();
        path.push_back(x);
        on_path[x] = true;
        continue;
      }
      if (path.size() == n) {
        if (g.has_edge(end, path.front())) return path;
        for (VertexId x : g.neighbors(end)) {
          const std::size_t i = pos[x];
          if (i + 2 < n && g.has_edge(path[i + 1], path.front())) {
            reverse_tail(i + 1);
            return path;
          }
        }
      }
      if (rng() % 4 == 0) {
        reverse_tail(0);
        continue;
      }
      pick.clear();
      for (VertexId x : g.neighbors(end)) {
        if (pos[x] + 2 < path.size()) pick.push_back(x);
      }
      if (pick.empty()) {
        reverse_tail(0);
        continue;
      }
      reverse_tail(pos[pick[rng() % pick.size()]] + 1);
    }
  }
  return std::nullopt;
}

}  // namespace

SearchResult brute_ham_cycle(const Graph& g, std::uint64_t budget) {
  if (g.order() < 3) throw ContractViolation("Hamiltonian cycle search needs order >= 3");
  SearchResult result;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 2) {
      result.status = SearchStatus::None;
      return result;
    }
  }
  if (!has_cycle_cover(g)) {
    result.status = SearchStatus::None;
    return result;
  }
  std::uint64_t spent = 0;
  if (auto found = rotation_cycle(g, std::min<std::uint64_t>(budget / 2, 200 * g.order()), spent)) {
    result.status = SearchStatus::Found;
    result.order = std::move(*found);
    result.expansions = spent;
    return result;
  }
  HamiltonSearch search(g, true, budget - spent);
  result.status = search.run(0, result.order);
  result.expansions = spent + search.expansions();
  if (result.status != SearchStatus::Found) result.order.clear();
  return result;
}

SearchResult brute_ham_path(const Graph& g, std::uint64_t budget) {
  SearchResult result;
  if (g.order() == 0) return result;
  std::uint64_t spent = 0;
  for (VertexId s = 0; s < g.order(); ++s) {
    HamiltonSearch search(g, false, budget - spent);
    const auto status = search.run(s, result.order);
    spent += search.expansions();
    if (status != SearchStatus::None) {
      result.status = status;
      result.expansions = spent;
      if (status != SearchStatus::Found) result.order.clear();
      return result;
    }
  }
  result.status = SearchStatus::None;
  result.expansions = spent;
  result.order.clear();
  return result;
}

std::uint64_t brute_force_expansions() { return g_expansions.load(std::memory_order_relaxed); }

WitnessCheck check_witness(const Graph& g, std::size_t k, std::span<const TokenVertex> cut, std::size_t cap) {
  if (cut.empty()) throw ContractViolation("witness cut must be nonempty");
  const TokenGraph tg = token_graph(g, k, cap);
  std::vector<bool> removed(tg.size(), false);
  for (const auto& v : cut) {
    if (!is_valid_token(v, g.order(), k)) throw ContractViolation("cut member " + format_token(v) + " is invalid");
    const auto r = rank(v, g.order());
    if (removed[r]) throw ContractViolation("cut member " + format_token(v) + " listed twice");
    removed[r] = true;
  }
  std::vector<VertexId> keep;
  for (VertexId r = 0; r < tg.size(); ++r) {
    if (!removed[r]) keep.push_back(r);
  }
  WitnessCheck out;
  out.cut_size = cut.size();
  out.component_count = connected_components(induced_subgraph(tg.graph(), keep)).count;
  out.proves = out.component_count > out.cut_size;
  return out;
}

bool check_complement_iso(const Graph& g, std::size_t k, std::size_t cap) {
  const std::size_t n = g.order();
  const TokenGraph lower = token_graph(g, k, cap);
  const TokenGraph upper = token_graph(g, n - k, cap);
  if (lower.size() != upper.size() || lower.graph().edge_count() != upper.graph().edge_count()) return false;
  std::vector<VertexId> image(lower.size());
  std::vector<bool> hit(upper.size(), false);
  for (VertexId r = 0; r < lower.size(); ++r) {
    const auto c = rank(complement_vertex(lower.vertex(r), n), n);
    if (hit[c]) return false;
    hit[c] = true;
    image[r] = static_cast<VertexId>(c);
  }
  for (const auto& [a, b] : lower.graph().edges()) {
    if (!upper.graph().has_edge(image[a], image[b])) return false;
  }
  return true;
}

}  // namespace tokenham
