#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tokenham/certificate.hpp"
#include "tokenham/graph.hpp"
#include "tokenham/verification.hpp"

namespace tokenham {

enum class RelationTag { Transposition, AdjacentTransposition, OneOrTwoApart, GraphInduced };

/// When two k-subsets of an n-set count as close. Each relation is the
/// adjacency of a token graph: K_n, P_n, P_n^2, or an arbitrary graph.
struct ClosenessRelation {
  RelationTag tag = RelationTag::Transposition;
  std::size_t n = 0;
  std::optional<Graph> graph;  // GraphInduced only

  static ClosenessRelation transposition(std::size_t n) { return {RelationTag::Transposition, n, std::nullopt}; }
  static ClosenessRelation adjacent_transposition(std::size_t n) {
    return {RelationTag::AdjacentTransposition, n, std::nullopt};
  }
  static ClosenessRelation one_or_two_apart(std::size_t n) { return {RelationTag::OneOrTwoApart, n, std::nullopt}; }
  static ClosenessRelation induced_by(Graph g) {
    const std::size_t n = g.order();
    return {RelationTag::GraphInduced, n, std::move(g)};
  }
};

/// "transposition", "adjacent", "apart2", "graph".
std::string relation_name(RelationTag tag);

Graph closeness_graph(const ClosenessRelation& rel);

/// A listing of constant-weight words. Character i (0-based, left to
/// right) is '1' iff vertex i belongs to the subset.
struct GrayCodeListing {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<std::string> words;
  bool cyclic = false;
};

std::string encode_word(const TokenVertex& v, std::size_t n);
/// Inverse of encode_word; nullopt if the word has a character other than
/// '0' or '1'.
std::optional<TokenVertex> decode_word(const std::string& word);

GrayCodeListing code_from_sequence(std::span<const TokenVertex> sequence, std::size_t n, std::size_t k, bool cyclic);
GrayCodeListing code_from_cycle(const CycleCertificate& cert);

/// Accepts iff words are well formed (reason "malformed"), distinct
/// ("duplicate"), number C(n,k) ("wrong_length"), and consecutive words (and
/// the wraparound when cyclic) differ by a move along an edge of the
/// closeness graph ("not_close").
struct CodeVerdict {
  std::string reason = "ok";
  std::optional<std::size_t> index;
  std::string detail;
  bool accepted() const { return reason == "ok"; }
  explicit operator bool() const { return accepted(); }
};

CodeVerdict verify_code(const GrayCodeListing& listing, const ClosenessRelation& rel);

/// Constructive cyclic Gray code under the fan relation: the token cycle of
/// fan_cycle(m, n, k) written as words of length m+n. Performs no search.
GrayCodeListing fan_gray_code(int m, int n, int k);

struct GrayCodeSearch {
  SearchStatus status = SearchStatus::None;
  GrayCodeListing listing;
};

/// Brute-force Gray code for k-subsets under `rel`: a Hamiltonian cycle (or
/// path, when `cyclic` is false) of the closeness graph's k-token graph.
GrayCodeSearch search_gray_code(const ClosenessRelation& rel, std::size_t k, bool cyclic,
                                std::uint64_t budget = kDefaultSearchBudget,
                                std::size_t cap = kDefaultMaterializationCap);

/// One word per line, then "# cyclic" when the listing is cyclic.
std::string to_text(const GrayCodeListing& listing);
/// {"n","k","relation","cyclic","words":[...]}
std::string to_json(const GrayCodeListing& listing, const std::string& relation);

}  // namespace tokenham
