// Copyright 2026 The gsqss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gsqss/gsqss.hpp"

/// Command-line front end. Every successful command prints one JSON document.
namespace gsqss::cli {

using nlohmann::json;

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kResource = 3 };

/// Bad flags, unreadable files, malformed sets.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::string path;
  std::string inline_g6;
  std::string family;
  std::string format;
  std::size_t n = 5;
  double p = 0.5;
  std::size_t i = 1;
  std::uint64_t seed = protocol::kDefaultSeed;
};

inline GraphFormat resolve_format(const std::string &name, const std::string &path) {
  if (!name.empty()) {
    if (auto f = parse_graph_format(name)) {
      return *f;
    }
    throw UsageError("unknown format '" + name + "' (expected edgelist or graph6)");
  }
  const auto dot = path.rfind('.');
  if (dot != std::string::npos) {
    const auto ext = path.substr(dot + 1);
    if (ext == "g6" || ext == "graph6") {
      return GraphFormat::Graph6;
    }
  }
  return GraphFormat::EdgeList;
}

inline std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw UsageError("cannot read graph file '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) {
    throw UsageError("error while reading graph file '" + path + "'");
  }
  return ss.str();
}

inline Graph build_family(const GraphSource &src) {
  if (src.family == "cycle") {
    return family::cycle(src.n);
  }
  if (src.family == "complete") {
    return family::complete(src.n);
  }
  if (src.family == "path") {
    return family::path(src.n);
  }
  if (src.family == "random") {
    return family::random(src.n, src.p, src.seed);
  }
  if (src.family == "c5pow") {
    return c5_power(src.i);
  }
  throw UsageError("unknown family '" + src.family + "' (expected cycle, complete, path, random or c5pow)");
}

inline Graph load_graph(const GraphSource &src) {
  const int given = !src.path.empty() + !src.inline_g6.empty() + !src.family.empty();
  if (given != 1) {
    throw UsageError("give exactly one of --graph, --g6 or --family");
  }
  if (!src.family.empty()) {
    return build_family(src);
  }
  if (!src.inline_g6.empty()) {
    return parse_graph6(src.inline_g6);
  }
  return parse_graph(read_file(src.path), resolve_format(src.format, src.path));
}

/// "0,2,4" -> {0,2,4}; the empty string is the empty set.
inline VertexSet parse_set(const std::string &text, std::size_t universe, const char *flag) {
  VertexSet s(universe);
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    auto item = rest.substr(0, comma);
    while (!item.empty() && item.front() == ' ') {
      item.remove_prefix(1);
    }
    while (!item.empty() && item.back() == ' ') {
      item.remove_suffix(1);
    }
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw UsageError(std::string(flag) + ": '" + std::string(item) + "' is not a vertex index");
    }
    if (v >= universe) {
      throw UsageError(std::string(flag) + ": vertex " + std::to_string(v) + " out of range for " +
                       std::to_string(universe) + " vertices");
    }
    s.insert(v);
    if (comma == std::string_view::npos) {
      break;
    }
    rest.remove_prefix(comma + 1);
  }
  return s;
}

inline quantum::SimLimits sim_limits() {
  quantum::SimLimits limits;
  if (const char *env = std::getenv("QSS_MAX_QUBITS"); env != nullptr && *env != '\0') {
    std::string_view text(env);
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || v == 0 || v > 30) {
      throw UsageError("QSS_MAX_QUBITS must be an integer in 1..30");
    }
    limits.max_qubits = v;
  }
  return limits;
}

inline json graph_json(const Graph &g) {
  return {{"n", g.order()}, {"edges", g.edge_count()}, {"graph6", serialize_graph6(g)}};
}

inline json set_json(const VertexSet &s) { return s.members(); }

inline json optional_set(const std::optional<VertexSet> &s) { return s ? set_json(*s) : json(nullptr); }

inline json big_json(const bounds::BigInt &v) { return v.str(); }

struct Result {
  json doc;
  int code = kOk;
};

inline void add_graph_options(CLI::App *cmd, GraphSource &src) {
  cmd->add_option("--graph", src.path, "Graph file (edge list: first line n, then 'u v' per line)");
  cmd->add_option("--g6", src.inline_g6, "Inline graph6 string");
  cmd->add_option("--family", src.family, "cycle | complete | path | random | c5pow");
  cmd->add_option("--format", src.format, "edgelist | graph6 (default: by file extension, else edgelist)");
  cmd->add_option("--n", src.n, "Vertex count for --family")->capture_default_str();
  cmd->add_option("--p", src.p, "Edge probability for --family random")->capture_default_str();
  cmd->add_option("--i", src.i, "Power for --family c5pow")->capture_default_str();
  cmd->add_option("--seed", src.seed, "Seed for randomized paths")->capture_default_str();
}

inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Graph-state quantum secret sharing toolkit.\n"
               "Vertex sets are comma-separated, 0-indexed lists, e.g. --B 0,1,2."};
  app.require_subcommand(1);
  app.fallthrough();
  bool compact = false;
  app.add_flag("--json", compact, "Compact single-line JSON output");

  GraphSource src;
  std::string a_text;
  std::string b_text;
  unsigned threads = 0;
  std::size_t limit = 0;

  std::function<Result()> action;

  std::vector<CLI::Option *> a_options;
  auto a_option = [&](CLI::App *cmd) {
    a_options.push_back(cmd->add_option("--A", a_text, "Secret-carrying vertices, 0-indexed (default: all)"));
  };
  auto resolve_a = [&](const Graph &g) {
    const bool given = std::any_of(a_options.begin(), a_options.end(), [](auto *o) { return o->count() > 0; });
    return given ? parse_set(a_text, g.order(), "--A") : VertexSet::full(g.order());
  };

  // classify
  auto *classify = app.add_subcommand("classify", "Classical and quantum verdict for coalition B");
  add_graph_options(classify, src);
  a_option(classify);
  classify->add_option("--B", b_text, "Coalition, 0-indexed")->required();
  classify->callback([&] {
    action = [&] {
      const auto g = load_graph(src);
      const auto a = resolve_a(g);
      const auto b = parse_set(b_text, g.order(), "--B");
      const auto r = analyze(g, a, b);
      json doc = {{"graph", graph_json(g)},
                  {"A", set_json(a)},
                  {"B", set_json(b)},
                  {"c_verdict", to_string(r.c_verdict)},
                  {"q_verdict", to_string(r.q_verdict)},
                  {"rank_residual", r.rank_residual},
                  {"witness_D", optional_set(r.witnesses.accessing)},
                  {"witness_C", optional_set(r.witnesses.blind)}};
      return Result{doc, r.q_verdict == QVerdict::QAccessing ? kOk : kNegative};
    };
  });

  // witness
  auto *witness = app.add_subcommand("witness", "Reconstruction witnesses D_B, C_B or a small witness");
  add_graph_options(witness, src);
  a_option(witness);
  witness->add_option("--B", b_text, "Coalition, 0-indexed")->required();
  bool small = false;
  witness->add_flag("--small", small, "Minimum odd-wise (odd size) or even-wise set inside B");
  witness->add_option("--limit", limit, "Largest kernel dimension to enumerate with --small (default 24)");
  witness->callback([&] {
    action = [&] {
      const auto g = load_graph(src);
      const auto b = parse_set(b_text, g.order(), "--B");
      json doc = {{"graph", graph_json(g)}, {"B", set_json(b)}};
      if (small) {
        try {
          const auto w = small_witness(g, b, limit == 0 ? 24 : limit);
          const std::size_t k = b.size();
          doc["X"] = set_json(w.set);
          doc["kind"] = to_string(w.kind);
          doc["size"] = w.set.size();
          doc["bound"] = 2 * (g.order() - k + 1) / 3;
        } catch (const NoWitnessError &e) {
          doc["error"] = e.what();
          return Result{doc, kNegative};
        }
        return Result{doc, kOk};
      }
      const auto a = resolve_a(g);
      doc["A"] = set_json(a);
      try {
        const auto w = reconstruction_witnesses(g, a, b);
        doc["D_B"] = set_json(w.d);
        doc["C_B"] = set_json(w.c);
      } catch (const NoWitnessError &e) {
        doc["error"] = e.what();
        return Result{doc, kNegative};
      }
      return Result{doc, kOk};
    };
  });

  // threshold
  auto *threshold = app.add_subcommand("threshold", "Smallest k such that every k-coalition is q-accessing");
  add_graph_options(threshold, src);
  a_option(threshold);
  threshold->add_option("--limit", limit, "Largest vertex count to enumerate (default 26)");
  threshold->add_option("--threads", threads, "Worker threads (0 = all cores)");
  threshold->callback([&] {
    action = [&] {
      const auto g = load_graph(src);
      const auto a = resolve_a(g);
      ThresholdOptions opts;
      opts.threads = threads;
      if (limit != 0) {
        opts.max_vertices = limit;
      }
      const auto r = qstar_threshold(g, a, opts);
      json doc = {{"graph", graph_json(g)},
                  {"A", set_json(a)},
                  {"k_star", r.k_star},
                  {"certificate_fail", optional_set(r.certificate_fail)},
                  {"sets_checked", r.sets_checked}};
      return Result{doc, kOk};
    };
  });

  // product
  auto *product = app.add_subcommand("product", "Threshold of a lexicographic product, or the product graph itself");
  std::uint64_t n1 = 0, k1 = 0, n2 = 0, k2 = 0, power = 0;
  std::string second_path;
  std::string second_g6;
  add_graph_options(product, src);
  product->add_option("--n1", n1, "Players of the first scheme");
  product->add_option("--k1", k1, "Threshold of the first scheme");
  product->add_option("--n2", n2, "Players of the second scheme");
  product->add_option("--k2", k2, "Threshold of the second scheme");
  product->add_option("--power", power, "Iterate (n1,k1) with itself this many times");
  product->add_option("--graph2", second_path, "Second factor, file");
  product->add_option("--g6-2", second_g6, "Second factor, inline graph6");
  product->callback([&] {
    action = [&]() -> Result {
      if (!second_path.empty() || !second_g6.empty()) {
        const auto g1 = load_graph(src);
        GraphSource other;
        other.path = second_path;
        other.inline_g6 = second_g6;
        other.format = src.format;
        const auto g2 = load_graph(other);
        const auto g = lexicographic_product(g1, g2);
        const auto fmt = resolve_format(src.format, "");
        return {{{"graph", graph_json(g)}, {"serialized", serialize_graph(g, fmt)}}, kOk};
      }
      if (power != 0) {
        const auto t = power_threshold_bound(n1, k1, power);
        return {{{"n", t.n}, {"k", t.k}, {"power", power}}, kOk};
      }
      if (n1 == 0 || n2 == 0) {
        throw UsageError("product: give --n1 --k1 --n2 --k2, --n1 --k1 --power, or --graph2/--g6-2");
      }
      const auto t = product_threshold_bound(n1, k1, n2, k2);
      return {{{"n", t.n}, {"k", t.k}}, kOk};
    };
  });

  // family
  auto *fam = app.add_subcommand("family", "Build a graph and print it");
  add_graph_options(fam, src);
  fam->callback([&] {
    action = [&] {
      const auto g = load_graph(src);
      const auto fmt = resolve_format(src.format, "");
      return Result{{{"graph", graph_json(g)}, {"serialized", serialize_graph(g, fmt)}}, kOk};
    };
  });

  // simulate
  auto *simulate = app.add_subcommand("simulate", "Statevector check of what coalition B learns about a classical bit");
  add_graph_options(simulate, src);
  a_option(simulate);
  simulate->add_option("--B", b_text, "Coalition, 0-indexed")->required();
  bool dump = false;
  simulate->add_flag("--dump", dump, "Include the amplitudes of |G> as [index, re, im]");
  simulate->callback([&] {
    action = [&] {
      const auto limits = sim_limits();
      const auto g = load_graph(src);
      const auto a = resolve_a(g);
      const auto b = parse_set(b_text, g.order(), "--B");
      const auto d = quantum::distinguishability(g, a, b, limits);
      const auto c = classify_c(g, a, b);
      const bool accessing = d.overlap < quantum::kZeroTol;
      const bool blind = d.distance < quantum::kZeroTol;
      const bool agrees = (c.verdict == CVerdict::Accessing) == accessing && (c.verdict == CVerdict::Blind) == blind;
      json doc = {{"graph", graph_json(g)},
                  {"A", set_json(a)},
                  {"B", set_json(b)},
                  {"overlap", d.overlap},
                  {"distance", d.distance},
                  {"c_verdict", to_string(c.verdict)},
                  {"oracle_agrees", agrees}};
      if (dump) {
        const auto s = quantum::graph_state(g, limits);
        json amps = json::array();
        for (std::size_t x = 0; x < s.dim(); ++x) {
          amps.push_back({x, s[x].real(), s[x].imag()});
        }
        doc["state"] = amps;
      }
      return Result{doc, c.verdict == CVerdict::Accessing ? kOk : kNegative};
    };
  });

  // protocol-run
  auto *run_cmd = app.add_subcommand("protocol-run", "Deal a quantum secret and reconstruct it with a coalition");
  add_graph_options(run_cmd, src);
  a_option(run_cmd);
  std::size_t k = 0;
  std::size_t c = 0;
  double alpha = 0.6;
  double beta = 0.8;
  double beta_phase = 0.0;
  std::string players_text;
  run_cmd->add_option("--k", k, "Threshold (default: q* threshold of the graph)");
  run_cmd->add_option("--c", c, "Extra players holding only a key share")->capture_default_str();
  run_cmd->add_option("--alpha", alpha, "Real amplitude of |0>")->capture_default_str();
  run_cmd->add_option("--beta", beta, "Magnitude of the |1> amplitude")->capture_default_str();
  run_cmd->add_option("--beta-phase", beta_phase, "Phase of the |1> amplitude, radians")->capture_default_str();
  run_cmd->add_option("--players", players_text, "Reconstructing players, 0-indexed (default: first k+c)");
  run_cmd->callback([&] {
    action = [&] {
      protocol::ProtocolConfig cfg;
      cfg.limits = sim_limits();
      cfg.graph = load_graph(src);
      cfg.a = resolve_a(cfg.graph);
      cfg.c = c;
      cfg.seed = src.seed;
      if (cfg.graph.order() > cfg.limits.max_qubits) {
        throw ResourceLimitError("protocol-run: " + std::to_string(cfg.graph.order()) +
                                 " qubits exceeds simulator limit " + std::to_string(cfg.limits.max_qubits));
      }
      cfg.k = k != 0 ? k : qstar_threshold(cfg.graph, cfg.a).k_star;
      const auto b = std::polar(beta, beta_phase);
      auto t = protocol::deal(cfg, alpha, b);
      std::vector<std::size_t> players;
      if (players_text.empty()) {
        for (std::size_t p = 0; p < std::min(t.players(), cfg.k + cfg.c); ++p) {
          players.push_back(p);
        }
      } else {
        players = parse_set(players_text, t.players(), "--players").members();
      }
      json doc;
      int code = kOk;
      try {
        const auto r = protocol::reconstruct(t, players);
        doc["recovered"] = {{"alpha", {r.alpha.real(), r.alpha.imag()}},
                            {"beta", {r.beta.real(), r.beta.imag()}},
                            {"fidelity", r.fidelity},
                            {"ancilla_purity", r.ancilla_purity},
                            {"ancilla_holder", r.ancilla_holder},
                            {"qubit_coalition", set_json(r.qubit_coalition)}};
      } catch (const InsufficientShares &e) {
        doc["error"] = e.what();
        code = kNegative;
      } catch (const NoWitnessError &e) {
        doc["error"] = e.what();
        code = kNegative;
      }
      doc["players"] = players;
      doc["transcript"] = protocol::to_json(t);
      return Result{doc, code};
    };
  });

  // bound
  auto *bound = app.add_subcommand("bound", "Exact counting condition for threshold graphs");
  std::size_t bn = 0;
  std::size_t bk = 0;
  bool min_k = false;
  bool pure = false;
  std::size_t max_k = 100;
  bound->add_option("--n", bn, "Number of players");
  bound->add_option("--k", bk, "Threshold");
  bound->add_flag("--min-k", min_k, "Smallest k satisfying the condition for --n");
  bound->add_flag("--pure", pure, "Scan ((k, 2k-1)) schemes");
  bound->add_option("--max-k", max_k, "Largest k in the --pure scan")->capture_default_str();
  bound->callback([&] {
    action = [&]() -> Result {
      if (pure) {
        if (max_k == 0) {
          throw UsageError("bound: --max-k must be at least 1");
        }
        const auto r = bounds::pure_qss_feasibility(max_k);
        json failing = json::array();
        for (const auto &row : r.rows) {
          if (!row.holds) {
            failing.push_back(row.n);
          }
        }
        json doc = {{"max_k", r.max_k},
                    {"largest_feasible_n", r.largest_feasible_n ? json(*r.largest_feasible_n) : json(nullptr)},
                    {"failing_from_n", r.failing_from_n ? json(*r.failing_from_n) : json(nullptr)},
                    {"failing_n", failing},
                    {"cutoff_n_over_157", {{"k_max", r.cutoff_k_from_157}, {"n_max", r.cutoff_n_from_157}}},
                    {"cutoff_79_over_156", {{"k_max", r.cutoff_k_from_79_156}, {"n_max", r.cutoff_n_from_79_156}}},
                    {"stated_cutoff_n", r.stated_cutoff_n},
                    {"exact_scan_matches_stated", r.exact_scan_matches_stated}};
        return {doc, kOk};
      }
      if (bn == 0) {
        throw UsageError("bound: --n is required");
      }
      if (min_k) {
        const auto m = bounds::min_feasible_k(bn);
        json doc = {{"n", bn}, {"min_feasible_k", m ? json(*m) : json(nullptr)}};
        if (m) {
          doc["ratio"] = static_cast<double>(*m) / static_cast<double>(bn);
        }
        return {doc, m ? kOk : kNegative};
      }
      if (bk == 0) {
        throw UsageError("bound: give --k, --min-k or --pure");
      }
      const auto r = bounds::counting_inequality(bn, bk);
      json doc = {{"n", r.n},     {"k", r.k},         {"sum_limit", r.sum_limit},
                  {"lhs", big_json(r.lhs)}, {"rhs", big_json(r.rhs)}, {"holds", r.holds}};
      return {doc, r.holds ? kOk : kNegative};
    };
  });

  // search
  auto *search = app.add_subcommand("search", "q* threshold of every labelled graph on n vertices, A = V");
  std::size_t sn = 0;
  search->add_option("--n", sn, "Vertex count (at most 7)")->required();
  search->add_option("--threads", threads, "Worker threads (0 = all cores)");
  search->add_option("--limit", limit, "Largest n to accept (default 7)");
  search->callback([&] {
    action = [&] {
      SearchOptions opts;
      opts.threads = threads;
      if (limit != 0) {
        opts.max_n = limit;
      }
      const auto r = exhaustive_graph_search(sn, opts);
      json hist = json::object();
      for (const auto &[ks, count] : r.histogram) {
        hist[std::to_string(ks)] = count;
      }
      json att = json::array();
      for (const auto &g : r.attainers) {
        att.push_back(serialize_graph6(g));
      }
      json doc = {{"n", r.n},
                  {"graphs", r.graphs},
                  {"min_k_star", r.min_k_star},
                  {"histogram", hist},
                  {"attainer_count", r.attainers.size()},
                  {"attainers", att}};
      return Result{doc, kOk};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const auto result = action();
    out << (compact ? result.doc.dump() : result.doc.dump(2)) << '\n';
    return result.code;
  } catch (const ResourceLimitError &e) {
    err << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const ParseError &e) {
    err << "graph input: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError &e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument &e) {
    err << "invalid argument: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range &e) {
    err << "invalid argument: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kNegative;
  }
}

}  // namespace gsqss::cli
