#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "tokenham/error.hpp"
#include "tokenham/fan_ham.hpp"
#include "tokenham/graph.hpp"
#include "tokenham/graycode.hpp"
#include "tokenham/token.hpp"
#include "tokenham/verification.hpp"

namespace tokenham::cli {

namespace {

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::size_t cap_from_env() {
  if (const char* raw = std::getenv(kCapEnv)) {
    try {
      return static_cast<std::size_t>(std::stoull(raw));
    } catch (const std::exception&) {
      throw ParameterError(std::string(kCapEnv) + " must be a non-negative integer");
    }
  }
  return kDefaultMaterializationCap;
}

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw ContractViolation("cannot open '" + path + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

Graph read_graph(const std::string& path, std::istream& in) {
  std::istringstream text(read_source(path, in));
  return read_edge_list(text);
}

// ---- fan-cycle -------------------------------------------------------------

struct FanCycleArgs {
  int m = 0, n = 0, k = 0;
  bool normalize = false;
  std::string format = "json";
};

int fan_cycle_cmd(const FanCycleArgs& a, Streams io) {
  const FanFeasibility verdict = fan_feasibility(a.m, a.n, a.k);
  const bool json = a.format == "json";
  if (const auto* ham = std::get_if<Hamiltonian>(&verdict)) {
    const CycleCertificate cert = a.normalize ? normalize(ham->certificate) : ham->certificate;
    io.out << (json ? to_json(cert) : to_text(cert));
    return kOk;
  }
  if (const auto* no = std::get_if<NotHamiltonian>(&verdict)) {
    if (json) {
      if (no->witness) {
        io.out << to_json(*no->witness);
      } else {
        io.out << nlohmann::json{{"verdict", "not_hamiltonian"}, {"reason", no->reason}}.dump() << "\n";
      }
    } else {
      io.out << "not hamiltonian: " << no->reason << "\n";
      if (no->witness) {
        const FanLayout layout{a.m, a.n};
        for (const auto& v : no->witness->cut) io.out << format_token(v, layout) << "\n";
        io.out << "cut_size: " << no->witness->cut_size << "\ncomponents: " << no->witness->component_count << "\n";
      }
    }
    return kNotHamiltonian;
  }
  const auto& unknown = std::get<Unknown>(verdict);
  if (json) {
    io.out << nlohmann::json{{"verdict", "unknown"}, {"reason", unknown.reason}}.dump() << "\n";
  } else {
    io.out << "unknown: " << unknown.reason << "\n";
  }
  return kUnknown;
}

// ---- token-graph -----------------------------------------------------------

struct TokenGraphArgs {
  std::string family;
  std::vector<int> params;
  int k = 0;
  std::string out = "edges";
  std::optional<std::size_t> cap;
};

int token_graph_cmd(const TokenGraphArgs& a, Streams io) {
  const GraphFamily family{parse_family_tag(a.family), a.params};
  const Graph base = build(family);
  if (a.k < 1) throw ParameterError("--k must be positive");
  const TokenGraph tg = token_graph(base, static_cast<std::size_t>(a.k), a.cap.value_or(cap_from_env()));
  if (a.out == "dot") {
    if (family.tag == FamilyTag::Fan) {
      const FanLayout layout{family.params[0], family.params[1]};
      write_dot(io.out, tg.graph(), [&](VertexId r) { return format_token(tg.vertex(r), layout); });
    } else {
      write_dot(io.out, tg.graph(), [&](VertexId r) { return format_token(tg.vertex(r)); });
    }
  } else {
    write_edge_list(io.out, tg.graph());
  }
  return kOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string graph;
  std::string cert;
  int k = 0;
};

int verify_cmd(const VerifyArgs& a, Streams io) {
  if (a.graph == "-" && a.cert == "-") throw ContractViolation("only one of --graph and --cert may read stdin");
  const Graph g = read_graph(a.graph, io.in);
  const CycleCertificate cert = certificate_from_json(read_source(a.cert, io.in));
  if (a.k < 1) throw ParameterError("--k must be positive");
  const Verdict verdict = verify_cycle(g, static_cast<std::size_t>(a.k), cert);
  io.out << to_json(verdict);
  return verdict ? kOk : kRejected;
}

// ---- graycode --------------------------------------------------------------

struct GrayCodeArgs {
  std::string relation;
  int n = 0, k = 0;
  std::optional<int> m;
  bool path = false;
  std::uint64_t budget = kDefaultSearchBudget;
  std::string format = "text";
  std::optional<std::size_t> cap;
};

int emit_listing(const GrayCodeListing& listing, const std::string& relation, const std::string& format,
                 std::ostream& out) {
  out << (format == "json" ? to_json(listing, relation) : to_text(listing));
  return kOk;
}

int graycode_cmd(const GrayCodeArgs& a, Streams io) {
  if (a.n < 1 || a.k < 1) throw ParameterError("--n and --k must be positive");
  if (a.relation == "fan") {
    if (!a.m) throw ParameterError("--relation fan requires --m");
    const FanFeasibility verdict = fan_feasibility(*a.m, a.n, a.k);
    if (const auto* ham = std::get_if<Hamiltonian>(&verdict)) {
      return emit_listing(code_from_cycle(ham->certificate), "fan", a.format, io.out);
    }
    if (std::holds_alternative<NotHamiltonian>(verdict)) {
      io.out << "none\n";
      return kNotHamiltonian;
    }
    io.out << "unknown\n";
    return kUnknown;
  }
  ClosenessRelation rel;
  const auto n = static_cast<std::size_t>(a.n);
  if (a.relation == "transposition") {
    rel = ClosenessRelation::transposition(n);
  } else if (a.relation == "adjacent") {
    rel = ClosenessRelation::adjacent_transposition(n);
  } else if (a.relation == "apart2") {
    rel = ClosenessRelation::one_or_two_apart(n);
  } else {
    throw ParameterError("unknown relation '" + a.relation + "'");
  }
  const GrayCodeSearch found =
      search_gray_code(rel, static_cast<std::size_t>(a.k), !a.path, a.budget, a.cap.value_or(cap_from_env()));
  switch (found.status) {
    case SearchStatus::Found: return emit_listing(found.listing, a.relation, a.format, io.out);
    case SearchStatus::None: io.out << "none\n"; return kNotHamiltonian;
    case SearchStatus::BudgetExhausted: io.out << "budget\n"; return kUnknown;
  }
  return kUnknown;
}

// ---- brute -----------------------------------------------------------------

struct BruteArgs {
  std::string graph;
  bool path = false;
  std::uint64_t budget = kDefaultSearchBudget;
};

int brute_cmd(const BruteArgs& a, Streams io) {
  const Graph g = read_graph(a.graph, io.in);
  SearchResult result;
  if (!a.path && g.order() < 3) {
    result.status = SearchStatus::None;
  } else {
    result = a.path ? brute_ham_path(g, a.budget) : brute_ham_cycle(g, a.budget);
  }
  switch (result.status) {
    case SearchStatus::Found: {
      io.out << (a.path ? "path:" : "cycle:");
      for (VertexId v : result.order) io.out << ' ' << v;
      io.out << "\n";
      return kOk;
    }
    case SearchStatus::None: io.out << "none\n"; return kNotHamiltonian;
    case SearchStatus::BudgetExhausted: io.out << "budget\n"; return kUnknown;
  }
  return kUnknown;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hamiltonian cycles and Gray codes for token graphs of fans and joins", "tokenham"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  FanCycleArgs fc;
  auto* fan_cmd = app.add_subcommand("fan-cycle", "Certificate or witness for F_{m,n}^{k}");
  fan_cmd->add_option("--m", fc.m, "number of hubs")->required();
  fan_cmd->add_option("--n", fc.n, "path length")->required();
  fan_cmd->add_option("--k", fc.k, "number of tokens")->required();
  fan_cmd->add_flag("--normalize", fc.normalize, "rotate so the marker pair sits at positions 0 and 1");
  fan_cmd->add_option("--format", fc.format)->check(CLI::IsMember({"json", "text"}));

  TokenGraphArgs tgc;
  auto* tg_cmd = app.add_subcommand("token-graph", "Emit the k-token graph of a named family");
  tg_cmd->add_option("--family", tgc.family, "path|empty|complete|cycle|bipartite|star|pathsq|fan")->required();
  tg_cmd->add_option("--params", tgc.params, "comma separated family parameters")->required()->delimiter(',');
  tg_cmd->add_option("--k", tgc.k)->required();
  tg_cmd->add_option("--out", tgc.out)->check(CLI::IsMember({"dot", "edges"}));
  tg_cmd->add_option("--cap", tgc.cap, "materialization cap (default from TOKENHAM_MAX_VERTICES or 2000000)");

  VerifyArgs vc;
  auto* verify = app.add_subcommand("verify", "Check a cycle certificate against an edge-list graph");
  verify->add_option("--graph", vc.graph, "edge-list file, '-' for stdin")->required();
  verify->add_option("--k", vc.k)->required();
  verify->add_option("--cert", vc.cert, "certificate JSON, '-' for stdin")->required();

  GrayCodeArgs gc;
  auto* gray = app.add_subcommand("graycode", "Gray code for k-subsets under a closeness relation");
  gray->add_option("--relation", gc.relation)
      ->required()
      ->check(CLI::IsMember({"transposition", "adjacent", "apart2", "fan"}));
  gray->add_option("--n", gc.n, "ground set size (path length for --relation fan)")->required();
  gray->add_option("--k", gc.k)->required();
  gray->add_option("--m", gc.m, "hubs, for --relation fan");
  gray->add_flag("--path", gc.path, "search for a non-cyclic code");
  gray->add_option("--budget", gc.budget, "node-expansion budget for searches");
  gray->add_option("--format", gc.format)->check(CLI::IsMember({"json", "text"}));
  gray->add_option("--cap", gc.cap, "materialization cap");

  BruteArgs bc;
  auto* brute = app.add_subcommand("brute", "Exhaustive Hamiltonian cycle/path search on an edge-list graph");
  brute->add_option("--graph", bc.graph, "edge-list file, '-' for stdin")->required();
  brute->add_flag("--path", bc.path, "search for a path instead of a cycle");
  brute->add_option("--budget", bc.budget, "node-expansion budget");

  std::vector<const char*> argv{"tokenham"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kUsage;
  }

  const Streams io{in, out, err};
  try {
    if (*fan_cmd) return fan_cycle_cmd(fc, io);
    if (*tg_cmd) return token_graph_cmd(tgc, io);
    if (*verify) return verify_cmd(vc, io);
    if (*gray) return graycode_cmd(gc, io);
    if (*brute) return brute_cmd(bc, io);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kTooLarge;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace tokenham::cli
