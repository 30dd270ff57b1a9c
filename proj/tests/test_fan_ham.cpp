#include <doctest.h>

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "support/bridge.hpp"
#include "tokenham/error.hpp"
#include "tokenham/fan_ham.hpp"
#include "tokenham/verification.hpp"

using namespace tokenham;

namespace {

// The partition of the {w_i, w_j} vertices among P_1..P_{2n}, as listed in
// the m = 2n case.
int owner_by_rule(int i, int j, int n) {
  if (i > j) std::swap(i, j);
  if (i == 1) return j;
  if (i <= n && j <= i + n - 1) return i;
  if (i <= n) return j;
  return i;
}

std::pair<int, int> hubs_of(const TokenVertex& v, const FanLayout& L) {
  return {static_cast<int>(v[0]) - L.n + 1, static_cast<int>(v[1]) - L.n + 1};
}

std::set<TokenVertex> as_set(const std::vector<TokenVertex>& seq) { return {seq.begin(), seq.end()}; }

// m=2n witness component counts, counted with the independent token-graph
// oracle: delete every {w_i, v_j} and count components.
int oracle_witness_components(int m, int n) {
  const auto g = oracle::fan(m, n);
  const oracle::Mask path_bits = (oracle::Mask{1} << n) - 1;
  return oracle::components_without(g, 2, [&](oracle::Mask s) {
    return std::popcount(s & path_bits) == 1;
  });
}

void check_fan_certificate(const CycleCertificate& cert, int m, int n, int k) {
  const Graph g = build(GraphFamily::fan(m, n));
  CHECK(cert.sequence.size() == binomial(static_cast<std::size_t>(m + n), static_cast<std::size_t>(k)));
  CHECK(verify_cycle(g, static_cast<std::size_t>(k), cert).accepted());
  REQUIRE(cert.marker);
  const auto [x, y] = fan_marker_vertices(m, n, static_cast<std::size_t>(k));
  CHECK(cert.marker->first_vertex == x);
  CHECK(cert.marker->second_vertex == y);
  CHECK(bridge::certificate_holds(oracle::fan(m, n), cert));
}

}  // namespace

TEST_CASE("hub index arithmetic keeps 2n as 2n") {
  CHECK(hub_index(4, 2) == 4);
  CHECK(hub_index(5, 2) == 1);
  CHECK(hub_index(8, 2) == 4);
  CHECK(hub_index(1, 3) == 1);
  CHECK(hub_index(0, 3) == 6);
  CHECK(hub_index(13, 3) == 1);
}

TEST_CASE("hub pair ownership follows the ownership rule") {
  for (int n = 2; n <= 7; ++n) {
    for (int i = 1; i <= 2 * n; ++i) {
      for (int j = i + 1; j <= 2 * n; ++j) {
        CHECK(hub_pair_owner(i, j, n) == owner_by_rule(i, j, n));
        CHECK(hub_pair_owner(j, i, n) == hub_pair_owner(i, j, n));
      }
    }
  }
  CHECK_THROWS_AS(hub_pair_owner(2, 2, 3), ParameterError);
  CHECK_THROWS_AS(hub_pair_owner(1, 7, 3), ParameterError);
}

TEST_CASE("the m = 2n paths partition the token graph") {
  for (int n = 2; n <= 6; ++n) {
    const FanLayout L{2 * n, n};
    const auto paths = double_cycle_max_paths(n);
    REQUIRE(paths.size() == static_cast<std::size_t>(2 * n));
    std::set<TokenVertex> seen;
    std::size_t total = 0;
    for (std::size_t t = 0; t < paths.size(); ++t) {
      const int owner = static_cast<int>(t) + 1;
      for (const auto& v : paths[t]) {
        seen.insert(v);
        ++total;
        const bool a_hub = L.is_hub(v[0]), b_hub = L.is_hub(v[1]);
        if (!a_hub && !b_hub) {
          CHECK(owner == 1);
        } else if (a_hub != b_hub) {
          CHECK(static_cast<int>(v[1]) - n + 1 == owner);
        } else {
          const auto [i, j] = hubs_of(v, L);
          CHECK(owner_by_rule(i, j, n) == owner);
        }
      }
    }
    CHECK(total == seen.size());
    CHECK(total == binomial(static_cast<std::size_t>(3 * n), 2));
  }
}

TEST_CASE("endpoints of the m = 2n paths") {
  for (int n = 2; n <= 6; ++n) {
    const FanLayout L{2 * n, n};
    const auto paths = double_cycle_max_paths(n);
    CHECK(paths[0].front() == TokenVertex{L.v(n), L.w(1)});
    CHECK(paths[0].back() == TokenVertex{L.v(1), L.v(n)});
    for (int i = 2; i <= 2 * n; ++i) {
      const auto& p = paths[static_cast<std::size_t>(i - 1)];
      CHECK(p.front() == TokenVertex{L.v(n), L.w(i)});
      CHECK(p.back() == TokenVertex{L.w(i), L.w(hub_index(i + 1, n))});
    }
    // The last path ends at {w_2n, w_1}, which is adjacent to the start
    // {v_n, w_1} of P_1.
    CHECK(paths.back().back() == TokenVertex{L.w(1), L.w(2 * n)});
  }
}

TEST_CASE("double_cycle_m1") {
  const FanLayout L{1, 3};
  const std::vector<TokenVertex> expected{{L.v(1), L.v(3)}, {L.v(1), L.v(2)}, {L.v(1), L.w(1)},
                                          {L.v(2), L.w(1)}, {L.v(2), L.v(3)}, {L.v(3), L.w(1)}};
  const auto c3 = double_cycle_m1(3);
  CHECK(c3.sequence == expected);
  check_fan_certificate(c3, 1, 3, 2);

  const FanLayout L2{1, 2};
  const auto c2 = double_cycle_m1(2);
  CHECK(as_set(c2.sequence) == std::set<TokenVertex>{{L2.v(1), L2.v(2)}, {L2.v(1), L2.w(1)}, {L2.v(2), L2.w(1)}});
  check_fan_certificate(c2, 1, 2, 2);

  for (int n = 2; n <= 8; ++n) check_fan_certificate(double_cycle_m1(n), 1, n, 2);
  CHECK_THROWS_AS(double_cycle_m1(1), ParameterError);
}

TEST_CASE("double_cycle_max") {
  const auto c = double_cycle_max(2);
  CHECK(c.sequence.size() == 15);
  for (int n = 2; n <= 6; ++n) check_fan_certificate(double_cycle_max(n), 2 * n, n, 2);
  CHECK_THROWS_AS(double_cycle_max(1), ParameterError);
}

TEST_CASE("double_cycle_mid") {
  CHECK(double_cycle_mid(2, 2).sequence.size() == 6);
  CHECK(double_cycle_mid(3, 2).sequence.size() == 10);
  for (int n = 2; n <= 6; ++n) {
    for (int m = 2; m < 2 * n; ++m) check_fan_certificate(double_cycle_mid(m, n), m, n, 2);
  }
  CHECK_THROWS_AS(double_cycle_mid(1, 3), ParameterError);
  CHECK_THROWS_AS(double_cycle_mid(6, 3), ParameterError);
}

TEST_CASE("shortened paths keep their endpoints") {
  for (int n = 2; n <= 6; ++n) {
    const auto full = double_cycle_max_paths(n);
    for (int m = 2; m < 2 * n; ++m) {
      const FanLayout L{m, n};
      const auto cut = double_cycle_mid_paths(m, n);
      REQUIRE(cut.size() == static_cast<std::size_t>(m));
      for (int i = 1; i <= m; ++i) {
        const auto& p = cut[static_cast<std::size_t>(i - 1)];
        const auto& q = full[static_cast<std::size_t>(i - 1)];
        CHECK(p.front() == q.front());
        if (i < m) {
          CHECK(p.back() == q.back());
        } else {
          CHECK(p.back() == TokenVertex{L.w(1), L.w(m)});
        }
      }
    }
  }
}

TEST_CASE("star") {
  const FanLayout L{3, 1};
  const auto c = star_double_cycle();
  const std::vector<TokenVertex> expected{{L.v(1), L.w(1)}, {L.w(1), L.w(2)}, {L.v(1), L.w(2)},
                                          {L.w(2), L.w(3)}, {L.v(1), L.w(3)}, {L.w(1), L.w(3)}};
  CHECK(c.sequence == expected);
  CHECK_FALSE(c.marker);
  CHECK(verify_cycle(build(GraphFamily::star(3)), 2, c).accepted());
  CHECK(brute_ham_cycle(token_graph(build(GraphFamily::star(3)), 2).graph()).status == SearchStatus::Found);
}

TEST_CASE("witness counts") {
  CHECK(oracle_witness_components(5, 2) == 11);
  CHECK(oracle_witness_components(7, 3) == 22);
  CHECK(oracle_witness_components(9, 4) == 37);

  const std::vector<std::array<int, 3>> frozen{{5, 2, 11}, {7, 3, 22}, {9, 4, 37}};
  for (const auto& [m, n, components] : frozen) {
    const auto w = witness_over(m, n);
    CHECK(w.cut_size == static_cast<std::size_t>(m * n));
    CHECK(w.cut.size() == w.cut_size);
    CHECK(w.component_count == static_cast<std::size_t>(components));
    CHECK(w.component_count >= static_cast<std::size_t>(m * (m - 1) / 2 + 1));
    CHECK(w.component_count > w.cut_size);
    const auto check = check_witness(build(GraphFamily::fan(m, n)), 2, w.cut);
    CHECK(check.component_count == w.component_count);
    CHECK(check.proves);
  }
  for (int n = 1; n <= 4; ++n) {
    for (int m = 2 * n + 1; m <= 2 * n + 4; ++m) {
      if (n == 1) continue;
      CHECK(witness_over(m, n).component_count == static_cast<std::size_t>(oracle_witness_components(m, n)));
    }
  }
  CHECK_THROWS_AS(witness_over(4, 2), ParameterError);
}

TEST_CASE("double-cycle feasibility boundary against brute force") {
  for (int n = 1; n <= 5; ++n) {
    for (int m = 1; m <= 12; ++m) {
      const bool predicted = (n >= 2 && m <= 2 * n) || (n == 1 && m == 3);
      const FanFeasibility verdict = double_cycle(m, n);
      const bool ham = std::holds_alternative<Hamiltonian>(verdict);
      CHECK_MESSAGE(ham == predicted, "m=" << m << " n=" << n);
      CHECK_FALSE(std::holds_alternative<Unknown>(verdict));
      if (ham) {
        const auto& cert = std::get<Hamiltonian>(verdict).certificate;
        CHECK(verify_cycle(build(GraphFamily::fan(m, n)), 2, cert).accepted());
      }
      if (m + n < 3) continue;
      const Graph t = token_graph(build(GraphFamily::fan(m, n)), 2).graph();
      if (t.order() < 3) {
        CHECK_FALSE(ham);
        continue;
      }
      const auto brute = brute_ham_cycle(t);
      REQUIRE(brute.status != SearchStatus::BudgetExhausted);
      CHECK_MESSAGE((brute.status == SearchStatus::Found) == predicted, "m=" << m << " n=" << n);
    }
  }
}

TEST_CASE("double_cycle dispatch details") {
  CHECK(std::holds_alternative<Hamiltonian>(double_cycle(1, 2)));
  CHECK(std::holds_alternative<Hamiltonian>(double_cycle(3, 1)));
  const auto five_two = double_cycle(5, 2);
  REQUIRE(std::holds_alternative<NotHamiltonian>(five_two));
  CHECK(std::get<NotHamiltonian>(five_two).witness);
  for (int m : {1, 2}) {
    const auto small = double_cycle(m, 1);
    REQUIRE(std::holds_alternative<NotHamiltonian>(small));
    CHECK_FALSE(std::get<NotHamiltonian>(small).reason.empty());
  }
  for (int m = 4; m <= 8; ++m) {
    const auto star = double_cycle(m, 1);
    REQUIRE(std::holds_alternative<NotHamiltonian>(star));
    const auto& no = std::get<NotHamiltonian>(star);
    REQUIRE(no.witness);
    const auto check = check_witness(build(GraphFamily::star(m)), 2, no.witness->cut);
    CHECK(check.proves);
  }
}

TEST_CASE("lemma recursion grid") {
  for (int n = 3; n <= 8; ++n) {
    for (int k = 2; k <= n - 1; ++k) check_fan_certificate(lemma_cycle_m1(n, k), 1, n, k);
  }
  CHECK(lemma_cycle_m1(4, 3).sequence.size() == 10);
  CHECK(lemma_cycle_m1(5, 3).sequence.size() == 20);
  CHECK(lemma_cycle_m1(3, 2).sequence == double_cycle_m1(3).sequence);
  CHECK_THROWS_AS(lemma_cycle_m1(3, 3), ParameterError);
  CHECK_THROWS_AS(lemma_cycle_m1(2, 1), ParameterError);
}

TEST_CASE("lemma blocks partition by maximum element") {
  // Every k-subset of {w_1, v_1..v_n} lies in the block S_i of its largest
  // path vertex v_i, and |S_i| = C(i, k-1).
  for (int n = 3; n <= 7; ++n) {
    for (int k = 2; k <= n - 1; ++k) {
      const auto seq = lemma_cycle_m1(n, k).sequence;
      const FanLayout L{1, n};
      std::map<int, std::size_t> sizes;
      for (const auto& v : seq) {
        int top = 0;
        for (auto x : v) {
          if (!L.is_hub(x)) top = std::max(top, static_cast<int>(x) + 1);
        }
        ++sizes[top];
      }
      CHECK(sizes.size() == static_cast<std::size_t>(n - k + 2));
      for (const auto& [i, size] : sizes) {
        CHECK(i >= k - 1);
        CHECK(size == binomial(static_cast<std::size_t>(i), static_cast<std::size_t>(k - 1)));
      }
    }
  }
}

TEST_CASE("fan cycle grid") {
  for (int k = 2; k <= 4; ++k) {
    for (int n = k; n <= 6; ++n) {
      for (int m = 1; m <= 2 * n; ++m) {
        if (binomial(static_cast<std::size_t>(n + m), static_cast<std::size_t>(k)) > 50000) continue;
        const auto cert = fan_cycle(m, n, k);
        check_fan_certificate(cert, m, n, k);
        const FanLayout L{m, n};
        const auto with_w1 = std::count_if(cert.sequence.begin(), cert.sequence.end(),
                                           [&](const TokenVertex& v) { return v.contains(L.w(1)); });
        CHECK(static_cast<std::uint64_t>(with_w1) ==
              binomial(static_cast<std::size_t>(n + m - 1), static_cast<std::size_t>(k - 1)));
      }
    }
  }
  CHECK(fan_cycle(2, 3, 3).sequence.size() == 10);
  CHECK(fan_cycle(4, 4, 3).sequence.size() == 56);
  CHECK(fan_cycle(1, 5, 2).sequence == double_cycle_m1(5).sequence);
  CHECK_THROWS_AS(fan_cycle(7, 3, 3), ParameterError);
  CHECK_THROWS_AS(fan_cycle(2, 2, 3), ParameterError);
}

TEST_CASE("k = n boundary via complements") {
  for (int n = 2; n <= 7; ++n) check_fan_certificate(fan_cycle(1, n, n), 1, n, n);
}

TEST_CASE("fan_feasibility routing") {
  CHECK(std::holds_alternative<Unknown>(fan_feasibility(5, 2, 3)));
  CHECK(std::holds_alternative<Unknown>(fan_feasibility(2, 3, 1)));
  CHECK(std::holds_alternative<Unknown>(fan_feasibility(3, 2, 3)));
  CHECK(std::holds_alternative<NotHamiltonian>(fan_feasibility(5, 2, 2)));
  CHECK(std::holds_alternative<Hamiltonian>(fan_feasibility(2, 3, 3)));
  CHECK_THROWS_AS(fan_feasibility(2, 2, 4), ParameterError);
  CHECK_THROWS_AS(fan_feasibility(2, 2, 0), ParameterError);
}

TEST_CASE("normalize puts the marker first") {
  for (const auto& cert : {fan_cycle(3, 3, 2), fan_cycle(2, 4, 3), lemma_cycle_m1(6, 4)}) {
    const auto norm = normalize(cert);
    REQUIRE(norm.marker);
    CHECK(norm.marker->first == 0);
    CHECK(norm.marker->second == 1);
    CHECK(norm.sequence[0] == cert.marker->first_vertex);
    CHECK(norm.sequence[1] == cert.marker->second_vertex);
    CHECK(as_set(norm.sequence) == as_set(cert.sequence));
    CHECK(verify_cycle(build(GraphFamily::fan(cert.m, cert.n)), cert.k, norm).accepted());
  }
  const auto star = star_double_cycle();
  CHECK(normalize(star).sequence == star.sequence);
}

TEST_CASE("certificate json round trip") {
  const auto cert = fan_cycle(2, 3, 2);
  const auto back = certificate_from_json(to_json(cert));
  CHECK(back.sequence == cert.sequence);
  CHECK(back.k == cert.k);
  CHECK(back.base_order == cert.base_order);
  REQUIRE(back.marker);
  CHECK(back.marker->first == cert.marker->first);
  CHECK(back.marker->first_vertex == cert.marker->first_vertex);
  CHECK(to_json(back) == to_json(cert));

  CHECK_THROWS_AS(certificate_from_json("not json"), ContractViolation);
  CHECK_THROWS_AS(certificate_from_json("{\"m\":1}"), ContractViolation);
  CHECK_THROWS_AS(certificate_from_json(R"({"m":1,"n":2,"k":2,"labeling":"fan-canonical","cycle":[[0,"x"]]})"),
                  ContractViolation);
}

TEST_CASE("certificate text form") {
  const auto text = to_text(double_cycle_m1(3));
  CHECK(text == "{v1,v3}\n{v1,v2}\n{v1,w1}\n{v2,w1}\n{v2,v3}\n{v3,w1}\nmarker: 2 1\n");
}

TEST_CASE("join_cycle") {
  SUBCASE("a fan is its own join") {
    const Graph e1 = build(GraphFamily::empty(1)), p3 = build(GraphFamily::path(3));
    const auto cert = join_cycle(e1, p3, {0, 1, 2}, 2);
    CHECK(verify_cycle(join(e1, p3), 2, cert).accepted());
    // join ids: hub 0, path 1..3. Canonical fan ids: path 0..2, hub 3.
    std::vector<TokenVertex> relabeled;
    for (const auto& v : cert.sequence) {
      std::vector<VertexId> ids;
      for (auto x : v) ids.push_back(x == 0 ? 3 : x - 1);
      relabeled.emplace_back(ids);
    }
    CHECK(relabeled == double_cycle_m1(3).sequence);
  }
  SUBCASE("complete graph joined with a cycle") {
    const Graph k3 = build(GraphFamily::complete(3)), c4 = build(GraphFamily::cycle(4));
    const auto cert = join_cycle(k3, c4, {0, 1, 2, 3}, 2);
    CHECK(cert.sequence.size() == 21);
    CHECK(verify_cycle(join(k3, c4), 2, cert).accepted());
    CHECK(bridge::certificate_holds(bridge::matrix(join(k3, c4)), cert));
  }
  SUBCASE("non-Hamiltonian base") {
    const Graph e4 = build(GraphFamily::empty(4)), p3 = build(GraphFamily::path(3));
    const Graph base = join(e4, p3);
    CHECK(brute_ham_cycle(base).status == SearchStatus::None);
    const auto cert = join_cycle(e4, p3, {0, 1, 2}, 3);
    CHECK(verify_cycle(base, 3, cert).accepted());
    CHECK(bridge::certificate_holds(bridge::matrix(base), cert));
  }
  SUBCASE("path in a permuted order") {
    const Graph g1 = build(GraphFamily::complete(2)), c5 = build(GraphFamily::cycle(5));
    const auto cert = join_cycle(g1, c5, {3, 4, 0, 1, 2}, 3);
    CHECK(verify_cycle(join(g1, c5), 3, cert).accepted());
  }
  SUBCASE("bad paths are rejected") {
    const Graph e2 = build(GraphFamily::empty(2)), p3 = build(GraphFamily::path(3));
    CHECK_THROWS_AS(join_cycle(e2, p3, {0, 2, 1}, 2), ContractViolation);
    CHECK_THROWS_AS(join_cycle(e2, p3, {0, 1}, 2), ContractViolation);
    CHECK_THROWS_AS(join_cycle(e2, p3, {0, 1, 1}, 2), ContractViolation);
    CHECK_THROWS_AS(join_cycle(build(GraphFamily::empty(7)), p3, {0, 1, 2}, 2), ParameterError);
  }
}
