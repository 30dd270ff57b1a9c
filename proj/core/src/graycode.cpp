#include "tokenham/graycode.hpp"

#include <json.hpp>

#include "tokenham/error.hpp"
#include "tokenham/fan_ham.hpp"

namespace tokenham {

std::string relation_name(RelationTag tag) {
  switch (tag) {
    case RelationTag::Transposition: return "transposition";
    case RelationTag::AdjacentTransposition: return "adjacent";
    case RelationTag::OneOrTwoApart: return "apart2";
    case RelationTag::GraphInduced: return "graph";
  }
  return "graph";
}

Graph closeness_graph(const ClosenessRelation& rel) {
  if (rel.n < 2) throw ParameterError("closeness relation needs n >= 2");
  const int n = static_cast<int>(rel.n);
  switch (rel.tag) {
    case RelationTag::Transposition: return build(GraphFamily::complete(n));
    case RelationTag::AdjacentTransposition: return build(GraphFamily::path(n));
    case RelationTag::OneOrTwoApart: return build(GraphFamily::square_of_path(n));
    case RelationTag::GraphInduced:
      if (!rel.graph || rel.graph->order() != rel.n) throw ParameterError("graph-induced relation needs a graph of order n");
      return *rel.graph;
  }
  throw ParameterError("unknown closeness relation");
}

std::string encode_word(const TokenVertex& v, std::size_t n) {
  std::string word(n, '0');
  for (VertexId x : v) {
    if (x >= n) throw ContractViolation("subset member " + std::to_string(x) + " outside a word of length " +
                                        std::to_string(n));
    word[x] = '1';
  }
  return word;
}

std::optional<TokenVertex> decode_word(const std::string& word) {
  std::vector<VertexId> members;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] == '1') {
      members.push_back(static_cast<VertexId>(i));
    } else if (word[i] != '0') {
      return std::nullopt;
    }
  }
  return TokenVertex::from_sorted(std::move(members));
}

GrayCodeListing code_from_sequence(std::span<const TokenVertex> sequence, std::size_t n, std::size_t k, bool cyclic) {
  GrayCodeListing out;
  out.n = n;
  out.k = k;
  out.cyclic = cyclic;
  out.words.reserve(sequence.size());
  for (const auto& v : sequence) out.words.push_back(encode_word(v, n));
  return out;
}

GrayCodeListing code_from_cycle(const CycleCertificate& cert) {
  return code_from_sequence(cert.sequence, cert.base_order, cert.k, true);
}

CodeVerdict verify_code(const GrayCodeListing& listing, const ClosenessRelation& rel) {
  auto reject = [](std::string reason, std::optional<std::size_t> index, std::string detail) {
    return CodeVerdict{std::move(reason), index, std::move(detail)};
  };
  if (rel.n != listing.n) {
    return reject("malformed", std::nullopt,
                  "relation is over n=" + std::to_string(rel.n) + " but words have n=" + std::to_string(listing.n));
  }
  const Graph g = closeness_graph(rel);
  const std::size_t n = listing.n;
  const std::size_t k = listing.k;
  if (k > n) return reject("malformed", std::nullopt, "weight exceeds word length");
  std::vector<TokenVertex> subsets;
  subsets.reserve(listing.words.size());
  for (std::size_t i = 0; i < listing.words.size(); ++i) {
    const auto& word = listing.words[i];
    auto decoded = decode_word(word);
    if (word.size() != n || !decoded) return reject("malformed", i, "word '" + word + "' is not a binary string of length " + std::to_string(n));
    if (decoded->size() != k) return reject("malformed", i, "word '" + word + "' does not have weight " + std::to_string(k));
    subsets.push_back(std::move(*decoded));
  }
  std::vector<bool> seen(binomial(n, k), false);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const auto r = rank(subsets[i], n);
    if (seen[r]) return reject("duplicate", i, "word '" + listing.words[i] + "' repeated");
    seen[r] = true;
  }
  if (subsets.size() != binomial(n, k)) {
    return reject("wrong_length", std::nullopt,
                  "expected " + std::to_string(binomial(n, k)) + " words, got " + std::to_string(subsets.size()));
  }
  if (subsets.empty()) return {};
  const std::size_t steps = listing.cyclic ? subsets.size() : subsets.size() - 1;
  for (std::size_t i = 0; i < steps; ++i) {
    const std::size_t j = (i + 1) % subsets.size();
    if (i == j) break;
    const auto move = token_move(subsets[i], subsets[j]);
    if (!move || !g.has_edge(move->first, move->second)) {
      return reject("not_close", i, "'" + listing.words[i] + "' -> '" + listing.words[j] + "'");
    }
  }
  return {};
}

GrayCodeListing fan_gray_code(int m, int n, int k) { return code_from_cycle(fan_cycle(m, n, k)); }

GrayCodeSearch search_gray_code(const ClosenessRelation& rel, std::size_t k, bool cyclic, std::uint64_t budget,
                                std::size_t cap) {
  const Graph base = closeness_graph(rel);
  const TokenGraph tg = token_graph(base, k, cap);
  GrayCodeSearch out;
  out.listing.n = rel.n;
  out.listing.k = k;
  out.listing.cyclic = cyclic;
  if (cyclic && tg.size() < 3) {
    out.status = SearchStatus::None;
    return out;
  }
  const SearchResult result = cyclic ? brute_ham_cycle(tg.graph(), budget) : brute_ham_path(tg.graph(), budget);
  out.status = result.status;
  for (VertexId r : result.order) out.listing.words.push_back(encode_word(tg.vertex(r), rel.n));
  return out;
}

std::string to_text(const GrayCodeListing& listing) {
  std::string out;
  for (const auto& w : listing.words) out += w + "\n";
  if (listing.cyclic) out += "# cyclic\n";
  return out;
}

std::string to_json(const GrayCodeListing& listing, const std::string& relation) {
  nlohmann::json j;
  j["n"] = listing.n;
  j["k"] = listing.k;
  j["relation"] = relation;
  j["cyclic"] = listing.cyclic;
  j["words"] = listing.words;
  return j.dump() + "\n";
}

}  // namespace tokenham
