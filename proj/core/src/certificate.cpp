#include "tokenham/certificate.hpp"

#include <algorithm>

#include <json.hpp>

#include "tokenham/error.hpp"

namespace tokenham {

using nlohmann::json;

std::string labeling_name(Labeling labeling) {
  switch (labeling) {
    case Labeling::FanCanonical: return "fan-canonical";
    case Labeling::Join: return "join";
    case Labeling::Plain: return "plain";
  }
  return "plain";
}

namespace {

Labeling parse_labeling(const std::string& name) {
  if (name == "fan-canonical") return Labeling::FanCanonical;
  if (name == "join") return Labeling::Join;
  if (name == "plain") return Labeling::Plain;
  throw ContractViolation("unknown labeling '" + name + "'");
}

json token_json(const TokenVertex& v) { return json(std::vector<VertexId>(v.begin(), v.end())); }

TokenVertex token_from_json(const json& j) {
  if (!j.is_array()) throw ContractViolation("token vertex must be an integer array");
  std::vector<VertexId> members;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 0) {
      throw ContractViolation("token vertex members must be non-negative integers");
    }
    members.push_back(x.get<VertexId>());
  }
  // Keep the order as written; verify_cycle reports unsorted or repeated
  // members as malformed instead of silently fixing them.
  return TokenVertex::from_sorted(std::move(members));
}

}  // namespace

std::pair<TokenVertex, TokenVertex> fan_marker_vertices(int m, int n, std::size_t k) {
  const FanLayout layout{m, n};
  std::vector<VertexId> first{layout.w(1)};
  std::vector<VertexId> second;
  for (std::size_t i = 1; i <= k; ++i) {
    if (i < k) first.push_back(layout.v(static_cast<int>(i)));
    second.push_back(layout.v(static_cast<int>(i)));
  }
  return {TokenVertex(std::move(first)), TokenVertex(std::move(second))};
}

CycleCertificate normalize(const CycleCertificate& cert) {
  if (!cert.marker) return cert;
  const std::size_t len = cert.sequence.size();
  const Marker& mk = *cert.marker;
  CycleCertificate out = cert;
  out.sequence.clear();
  out.sequence.reserve(len);
  const bool forward = (mk.first + 1) % len == mk.second;
  for (std::size_t step = 0; step < len; ++step) {
    const std::size_t pos = forward ? (mk.first + step) % len : (mk.first + len - step) % len;
    out.sequence.push_back(cert.sequence[pos]);
  }
  out.marker->first = 0;
  out.marker->second = 1;
  return out;
}

std::string to_json(const CycleCertificate& cert) {
  json j;
  j["m"] = cert.m;
  j["n"] = cert.n;
  j["k"] = cert.k;
  j["labeling"] = labeling_name(cert.labeling);
  if (cert.labeling == Labeling::Plain) j["base_order"] = cert.base_order;
  json cycle = json::array();
  for (const auto& v : cert.sequence) cycle.push_back(token_json(v));
  j["cycle"] = std::move(cycle);
  if (cert.marker) {
    j["marker"] = {cert.marker->first, cert.marker->second};
    if (cert.labeling != Labeling::FanCanonical) {
      j["marker_sets"] = {token_json(cert.marker->first_vertex), token_json(cert.marker->second_vertex)};
    }
  }
  return j.dump() + "\n";
}

CycleCertificate certificate_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ContractViolation(std::string("certificate is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ContractViolation("certificate must be a JSON object");
  try {
    CycleCertificate cert;
    cert.k = j.at("k").get<std::size_t>();
    cert.m = j.value("m", 0);
    cert.n = j.value("n", 0);
    cert.labeling = parse_labeling(j.value("labeling", std::string("plain")));
    if (cert.labeling == Labeling::FanCanonical || cert.labeling == Labeling::Join) {
      if (cert.m < 0 || cert.n < 0) throw ContractViolation("m and n must be non-negative");
      cert.base_order = static_cast<std::size_t>(cert.m + cert.n);
    } else {
      cert.base_order = j.value("base_order", std::size_t{0});
    }
    for (const auto& v : j.at("cycle")) cert.sequence.push_back(token_from_json(v));
    if (j.contains("marker")) {
      const auto& pq = j.at("marker");
      if (!pq.is_array() || pq.size() != 2) throw ContractViolation("marker must be [p,q]");
      Marker mk;
      mk.first = pq[0].get<std::size_t>();
      mk.second = pq[1].get<std::size_t>();
      if (j.contains("marker_sets")) {
        const auto& sets = j.at("marker_sets");
        if (!sets.is_array() || sets.size() != 2) throw ContractViolation("marker_sets must hold two vertices");
        mk.first_vertex = token_from_json(sets[0]);
        mk.second_vertex = token_from_json(sets[1]);
      } else if (cert.labeling == Labeling::FanCanonical) {
        std::tie(mk.first_vertex, mk.second_vertex) = fan_marker_vertices(cert.m, cert.n, cert.k);
      } else {
        throw ContractViolation("non-fan certificate with a marker needs marker_sets");
      }
      cert.marker = std::move(mk);
    }
    return cert;
  } catch (const json::exception& e) {
    throw ContractViolation(std::string("malformed certificate: ") + e.what());
  }
}

std::string to_json(const NonHamWitness& witness) {
  json j;
  json cut = json::array();
  for (const auto& v : witness.cut) cut.push_back(token_json(v));
  j["cut"] = std::move(cut);
  j["cut_size"] = witness.cut_size;
  j["components"] = witness.component_count;
  return j.dump() + "\n";
}

std::string to_text(const CycleCertificate& cert) {
  const FanLayout layout{cert.m, cert.n};
  std::string out;
  for (const auto& v : cert.sequence) {
    out += cert.labeling == Labeling::FanCanonical ? format_token(v, layout) : format_token(v);
    out += '\n';
  }
  if (cert.marker) {
    out += "marker: " + std::to_string(cert.marker->first) + " " + std::to_string(cert.marker->second) + "\n";
  }
  return out;
}

}  // namespace tokenham
