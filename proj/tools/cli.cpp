#include "cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>
#include <thread>

#include "widthlab/branchdec.hpp"
#include "widthlab/classify.hpp"
#include "widthlab/constructive.hpp"
#include "widthlab/errors.hpp"
#include "widthlab/families.hpp"
#include "widthlab/graph.hpp"
#include "widthlab/hgraph.hpp"
#include "widthlab/patterns.hpp"
#include "widthlab/solvers.hpp"

namespace widthlab::cli {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string join(const std::vector<Vertex>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

Json rational_json(const Rational& r) { return r.str(); }

Json ramsey_json(const RamseyBound& r) {
  return Json{{"r", r.r}, {"s", r.s}, {"value", r.value.str()},
              {"provenance", to_string(r.provenance)}};
}

// Options shared by every subcommand.
struct Common {
  std::string graph;
  std::string format = "native";
  std::string out;
  bool timing = false;
};

void add_common(CLI::App* sub, Common& c, bool needs_graph) {
  auto* g = sub->add_option("--graph", c.graph,
                            "graph file, or named:<family>:<params> such as named:C:5");
  if (needs_graph) g->required();
  sub->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"native", "dot", "csv"}));
  sub->add_option("--out", c.out, "write the primary artifact to this file");
  sub->add_flag("--timing", c.timing, "report wall-clock time per stage");
}

// State of one subcommand invocation.
struct Session {
  explicit Session(const Context& c) : ctx(c) {}

  const Context& ctx;
  Common common;
  Json report = Json::object();
  Json inputs = Json::object();
  Json timings = Json::object();
  std::string artifact;  // native file content of the primary artifact
  std::string dot;
  std::vector<std::vector<std::string>> csv;
  std::string plain;  // replaces the report when set

  fs::path resolve(const std::string& p) const {
    fs::path path(p);
    return path.is_relative() && !ctx.base_dir.empty() ? ctx.base_dir / path : path;
  }

  std::string load(const std::string& role, const std::string& p) {
    std::ifstream in(resolve(p), std::ios::binary);
    if (!in) throw UsageError("cannot read " + role + " file " + p);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    inputs[role] = Json{{"path", p}, {"sha256", sha256_hex(text)}};
    return text;
  }

  template <class F>
  auto stage(const std::string& name, F&& f) {
    auto start = std::chrono::steady_clock::now();
    auto finish = [&] {
      std::chrono::duration<double, std::milli> d = std::chrono::steady_clock::now() - start;
      timings[name] = d.count();
    };
    if constexpr (std::is_void_v<decltype(f())>) {
      f();
      finish();
    } else {
      auto r = f();
      finish();
      return r;
    }
  }

  Graph graph() {
    const std::string& spec = common.graph;
    if (spec.rfind("named:", 0) == 0) {
      std::string rest = spec.substr(6);
      auto colon = rest.find(':');
      std::string name = rest.substr(0, colon);
      std::vector<long long> params;
      if (colon != std::string::npos) {
        std::stringstream ss(rest.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
          try {
            params.push_back(std::stoll(item));
          } catch (const std::exception&) {
            throw UsageError("bad parameter in " + spec);
          }
        }
      }
      inputs["graph"] = Json{{"named", spec}};
      return build_named(name, params);
    }
    return graph_from_json(load("graph", spec));
  }

  BranchDecomposition decomposition(const std::string& role, const std::string& p,
                                    std::size_t vertices) {
    auto bd = decomposition_from_json(load(role, p));
    if (bd.vertex_count() != vertices)
      throw UsageError(role + " has " + std::to_string(bd.vertex_count()) +
                       " leaves but the graph has " + std::to_string(vertices) + " vertices");
    return bd;
  }
};

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw UsageError("malformed " + what + ": " + e.what());
  }
}

std::size_t parse_index(const std::string& key, std::size_t count, const std::string& what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(key, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != key.size() || key.empty() || v >= count)
    throw UsageError(what + ": key '" + key + "' is not an index below " + std::to_string(count));
  return static_cast<std::size_t>(v);
}

// {"<index>": [num, den], ...} covering every index exactly once.
std::vector<Rational> parse_weights(const std::string& text, std::size_t count,
                                    const std::string& what) {
  Json j = parse_json(text, what);
  if (!j.is_object()) throw UsageError(what + " must be an object");
  std::vector<std::optional<Rational>> w(count);
  for (auto& [key, value] : j.items()) {
    std::size_t i = parse_index(key, count, what);
    if (!value.is_array() || value.size() != 2 || !value[0].is_number_integer() ||
        !value[1].is_number_integer())
      throw UsageError(what + ": entry " + key + " must be [numerator, denominator]");
    long long num = value[0].get<long long>(), den = value[1].get<long long>();
    if (den <= 0) throw UsageError(what + ": entry " + key + " has a non-positive denominator");
    w[i] = Rational(num, den);
  }
  std::vector<Rational> out;
  for (std::size_t i = 0; i < count; ++i) {
    if (!w[i]) throw UsageError(what + ": missing entry " + std::to_string(i));
    out.push_back(*w[i]);
  }
  return out;
}

ListAssignment parse_lists(const std::string& text, std::size_t n, std::size_t k) {
  Json j = parse_json(text, "list file");
  if (!j.is_object()) throw UsageError("list file must be an object");
  ListAssignment l{k, std::vector<std::vector<int>>(n)};
  std::vector<bool> seen(n, false);
  for (auto& [key, value] : j.items()) {
    std::size_t v = parse_index(key, n, "list file");
    if (!value.is_array()) throw UsageError("list file: entry " + key + " must be an array");
    for (const auto& c : value) {
      if (!c.is_number_integer()) throw UsageError("list file: colours must be integers");
      l.lists[v].push_back(c.get<int>());
    }
    std::sort(l.lists[v].begin(), l.lists[v].end());
    l.lists[v].erase(std::unique(l.lists[v].begin(), l.lists[v].end()), l.lists[v].end());
    seen[v] = true;
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!seen[v]) throw UsageError("list file: missing vertex " + std::to_string(v));
  return l;
}

ListAssignment full_lists(std::size_t n, std::size_t k) {
  ListAssignment l{k, {}};
  std::vector<int> all;
  for (int c = 1; c <= static_cast<int>(k); ++c) all.push_back(c);
  l.lists.assign(n, all);
  return l;
}

WidthKind parse_kind(const std::string& which) {
  return which == "sim" ? WidthKind::sim : WidthKind::mim;
}

Json widths_json(const WidthReport& w) { return Json{{"mimw", w.mimw}, {"simw", w.simw}}; }

// ---------------------------------------------------------------------------
// Subcommands. Each fills the session and returns an exit code.

struct GenArgs {
  std::string family;
  std::vector<std::size_t> params;
  bool verify = false;
};

int cmd_gen(Session& s, const GenArgs& a) {
  Graph g = s.stage("generate", [&] { return generate_family(a.family, a.params); });
  s.report["outcome"] = Json{{"family", a.family}, {"params", a.params}, {"order", g.order()},
                             {"size", g.size()}};
  s.artifact = graph_to_json(g);
  s.dot = graph_to_dot(g);
  int code = ok;
  if (a.verify) {
    auto verdicts = s.stage("verify", [&] { return verify_family(a.family, g); });
    Json rows = Json::array();
    s.csv.push_back({"claim", "verdict", "witness"});
    for (const auto& v : verdicts) {
      Json row{{"claim", v.claim}, {"verdict", v.holds ? "pass" : "fail"}};
      if (!v.holds) {
        row["witness"] = v.witness;
        code = negative;
      }
      rows.push_back(row);
      s.csv.push_back({v.claim, v.holds ? "pass" : "fail", join(v.witness)});
    }
    s.report["outcome"]["verification"] = rows;
  } else {
    s.csv.push_back({"family", "order", "size"});
    s.csv.push_back({a.family, std::to_string(g.order()), std::to_string(g.size())});
  }
  return code;
}

int cmd_check_free(Session& s, const std::string& patterns) {
  Graph g = s.graph();
  auto specs = parse_pattern_list(patterns);
  Json rows = Json::array();
  s.csv.push_back({"pattern", "free", "witness"});
  int code = ok;
  s.stage("check", [&] {
    for (const auto& p : specs) {
      auto hit = contains_induced(g, p);
      Json row{{"pattern", to_string(p)}, {"free", !hit}};
      if (hit) {
        row["witness"] = *hit;
        code = negative;
      }
      rows.push_back(row);
      s.csv.push_back({to_string(p), hit ? "false" : "true", hit ? join(*hit) : ""});
    }
  });
  s.report["outcome"] = Json{{"free", code == ok}, {"patterns", rows}};
  return code;
}

struct DecomposeArgs {
  std::string strategy;
  std::optional<std::size_t> t;
  std::string which = "mim";
  bool no_verify = false;
  bool no_claims = false;
};

int cmd_decompose(Session& s, const DecomposeArgs& a) {
  Graph g = s.graph();
  Json outcome{{"strategy", a.strategy}};
  std::optional<BranchDecomposition> bd;
  if (a.strategy == "thm-3p1" || a.strategy == "thm-4p1") {
    if (!a.t) throw UsageError("--t is required for " + a.strategy);
    ConstructOptions opt{!a.no_verify, !a.no_claims};
    auto cd = s.stage("construct", [&] {
      return a.strategy == "thm-3p1" ? decompose_3p1(g, *a.t, opt) : decompose_4p1(g, *a.t, opt);
    });
    bd = cd.bd;
    Json cert{{"case", to_string(cd.construction)}, {"formula", cd.formula},
              {"t", *a.t}, {"ramsey", ramsey_json(cd.ramsey)},
              {"bound", cd.certificate.str()}, {"claims_checked", cd.claims_checked}};
    if (cd.evaluated_mimw) cert["evaluated_mimw"] = *cd.evaluated_mimw;
    outcome["certificate"] = cert;
  } else if (a.strategy == "caterpillar") {
    bd = caterpillar_decomposition(g);
  } else if (a.strategy == "maxdeg2") {
    for (Vertex v = 0; v < g.order(); ++v)
      if (g.degree(v) > 2) {
        std::vector<Vertex> w{v};
        for (std::size_t i = 0; i < 3; ++i) w.push_back(g.neighbours(v)[i]);
        throw PreconditionFailed("vertex " + std::to_string(v) + " has degree above 2", w);
      }
    bd = maxdeg2_decomposition(g);
  } else {
    auto ex = s.stage("search", [&] { return exact_width(g, parse_kind(a.which)); });
    outcome["exact"] = Json{{"which", a.which}, {"width", ex.width}};
    bd = ex.witness;
  }
  if (g.order() > 0) {
    auto w = s.stage("evaluate", [&] { return evaluate(g, *bd); });
    outcome["widths"] = widths_json(w);
    if (outcome.contains("certificate") && !(BigInt(w.mimw) < BigInt(outcome["certificate"]["bound"].get<std::string>())))
      throw InvariantViolation("evaluated mim-width reaches the certified bound");
  }
  s.report["outcome"] = outcome;
  s.artifact = decomposition_to_json(*bd);
  s.dot = decomposition_to_dot(*bd, &g);
  s.csv.push_back({"strategy", "mimw", "simw", "bound"});
  s.csv.push_back({a.strategy,
                   outcome.contains("widths") ? outcome["widths"]["mimw"].dump() : "",
                   outcome.contains("widths") ? outcome["widths"]["simw"].dump() : "",
                   outcome.contains("certificate")
                       ? outcome["certificate"]["bound"].get<std::string>()
                       : ""});
  return ok;
}

int cmd_eval_width(Session& s, const std::string& bd_path) {
  Graph g = s.graph();
  auto bd = s.decomposition("decomposition", bd_path, g.order());
  auto w = s.stage("evaluate", [&] { return evaluate(g, bd); });
  Json cuts = Json::array();
  s.csv.push_back({"node_a", "node_b", "cutmim", "cutsim"});
  for (std::size_t i = 0; i < bd.edges().size(); ++i) {
    auto [a, b] = bd.edges()[i];
    cuts.push_back({{"edge", {a, b}}, {"cutmim", w.per_edge[i].cutmim},
                    {"cutsim", w.per_edge[i].cutsim}});
    s.csv.push_back({std::to_string(a), std::to_string(b), std::to_string(w.per_edge[i].cutmim),
                     std::to_string(w.per_edge[i].cutsim)});
  }
  Json outcome = widths_json(w);
  outcome["cuts"] = cuts;
  s.report["outcome"] = outcome;
  s.dot = decomposition_to_dot(bd, &g);
  return ok;
}

int cmd_exact_width(Session& s, const std::string& which) {
  Graph g = s.graph();
  auto ex = s.stage("search", [&] { return exact_width(g, parse_kind(which)); });
  s.plain = std::to_string(ex.width) + "\n";
  s.artifact = decomposition_to_json(ex.witness);
  s.dot = decomposition_to_dot(ex.witness, &g);
  s.csv.push_back({"which", "width"});
  s.csv.push_back({which, std::to_string(ex.width)});
  return ok;
}

Json occurrence_json(const HGraphResult& hg, std::size_t id) {
  const auto& o = hg.index.occurrences[id];
  Json edges = Json::array();
  for (auto [u, v] : o.edges) edges.push_back({u, v});
  return Json{{"id", id}, {"pattern", o.pattern}, {"vertices", o.vertices}, {"edges", edges}};
}

HGraphResult build(Session& s, const Graph& g, const std::string& patterns, std::size_t cap) {
  std::vector<Graph> ps;
  for (const auto& p : parse_pattern_list(patterns)) ps.push_back(realize(p));
  return s.stage("hgraph", [&] { return build_hgraph(g, ps, cap); });
}

int cmd_hgraph(Session& s, const std::string& patterns, std::size_t cap) {
  Graph g = s.graph();
  auto hg = build(s, g, patterns, cap);
  Json occ = Json::array();
  s.csv.push_back({"id", "pattern", "vertices"});
  for (std::size_t i = 0; i < hg.index.occurrences.size(); ++i) {
    occ.push_back(occurrence_json(hg, i));
    s.csv.push_back({std::to_string(i), std::to_string(hg.index.occurrences[i].pattern),
                     join(hg.index.occurrences[i].vertices)});
  }
  Json pats = Json::array();
  for (const auto& p : parse_pattern_list(patterns)) pats.push_back(to_string(p));
  s.report["outcome"] = Json{{"patterns", pats}, {"order", hg.hgraph.order()},
                             {"size", hg.hgraph.size()}, {"occurrences", occ}};
  s.artifact = graph_to_json(hg.hgraph);
  s.dot = graph_to_dot(hg.hgraph);
  return ok;
}

struct PackArgs {
  std::string patterns, weights, bd;
  std::size_t cap = default_pattern_cap;
};

int cmd_pack(Session& s, const PackArgs& a) {
  Graph g = s.graph();
  auto hg = build(s, g, a.patterns, a.cap);
  std::optional<std::vector<Rational>> w;
  if (!a.weights.empty())
    w = parse_weights(s.load("weights", a.weights), hg.hgraph.order(), "weight file");
  std::optional<BranchDecomposition> hbd;
  if (!a.bd.empty()) hbd = s.decomposition("hgraph decomposition", a.bd, hg.hgraph.order());
  auto p = s.stage("solve", [&] { return solve_packing(hg, w, hbd ? &*hbd : nullptr); });
  if (!verify_packing(g, hg, p)) throw InvariantViolation("packing failed verification");
  Json chosen = Json::array();
  s.csv.push_back({"id", "pattern", "vertices"});
  for (std::size_t id : p.occurrences) {
    chosen.push_back(occurrence_json(hg, id));
    s.csv.push_back({std::to_string(id), std::to_string(hg.index.occurrences[id].pattern),
                     join(hg.index.occurrences[id].vertices)});
  }
  s.report["outcome"] = Json{{"method", hbd ? "mim-dp" : "oracle"},
                             {"weight", rational_json(p.weight)},
                             {"count", p.occurrences.size()},
                             {"occurrences", chosen}};
  return ok;
}

int cmd_mwis(Session& s, const std::string& weights, const std::string& bd_path) {
  Graph g = s.graph();
  WeightedInstance inst = unit_weights(g);
  if (!weights.empty())
    inst.weights = parse_weights(s.load("weights", weights), g.order(), "weight file");
  for (const auto& w : inst.weights)
    if (w < 0) throw UsageError("weights must be non-negative");
  MwisResult r;
  Json outcome;
  if (!bd_path.empty()) {
    auto bd = s.decomposition("decomposition", bd_path, g.order());
    DpStats stats;
    r = s.stage("solve", [&] { return mwis_mim_dp(inst, bd, &stats); });
    outcome = Json{{"method", "mim-dp"}, {"max_classes", stats.max_classes}};
  } else {
    r = s.stage("solve", [&] { return mwis_oracle(inst); });
    outcome = Json{{"method", "oracle"}};
  }
  if (!is_independent(g, r.set)) throw InvariantViolation("solver returned a dependent set");
  outcome["weight"] = rational_json(r.weight);
  outcome["set"] = r.set;
  s.report["outcome"] = outcome;
  s.csv.push_back({"vertex", "weight"});
  for (Vertex v : r.set) s.csv.push_back({std::to_string(v), inst.weights[v].str()});
  return ok;
}

int cmd_list_color(Session& s, std::size_t k, const std::string& lists, const std::string& bd_path) {
  Graph g = s.graph();
  ListAssignment l = lists.empty() ? full_lists(g.order(), k)
                                   : parse_lists(s.load("lists", lists), g.order(), k);
  BranchDecomposition bd = bd_path.empty() ? caterpillar_decomposition(g)
                                           : s.decomposition("decomposition", bd_path, g.order());
  auto res = s.stage("pipeline", [&] { return list_colouring_pipeline(g, l, bd); });
  Json outcome{{"k", k}, {"feasible", res.feasible}};
  s.csv.push_back({"vertex", "colour"});
  if (!res.clique.empty()) {
    if (res.clique.size() != k + 1 || !contains_induced(induced_subgraph(g, res.clique).graph,
                                                        PatternSpec{pattern::Clique{k + 1}}))
      throw InvariantViolation("clique certificate is not a clique");
    outcome["clique"] = res.clique;
  } else {
    outcome["simw"] = res.simw;
    if (res.mim_bound) {
      Json chain = Json::array();
      for (const auto& r : res.mim_bound->chain) chain.push_back(ramsey_json(r));
      outcome["mim_bound"] = Json{{"value", res.mim_bound->value.str()}, {"chain", chain}};
    }
  }
  if (res.colouring) {
    if (!verify_colouring(g, l, *res.colouring))
      throw InvariantViolation("colouring failed verification");
    outcome["colouring"] = *res.colouring;
    for (Vertex v = 0; v < g.order(); ++v)
      s.csv.push_back({std::to_string(v), std::to_string((*res.colouring)[v])});
  }
  if (!res.note.empty()) outcome["note"] = res.note;
  s.report["outcome"] = outcome;
  return res.feasible ? ok : negative;
}

int cmd_classify(Session& s, const std::string& family, const std::vector<std::size_t>& p) {
  ClassificationOutcome o;
  if (family == "edgeless") {
    if (p.size() != 3) throw UsageError("edgeless takes r,s,t");
    o = classify_edgeless(p[0], p[1], p[2]);
  } else {
    if (p.size() != 4) throw UsageError("complete takes r,s,t,u");
    o = classify_complete(p[0], {p[1], p[2], p[3]});
  }
  Json outcome{{"family", family}, {"params", p}, {"verdict", to_string(o.verdict)},
               {"bullet", o.bullet}, {"quickly_computable", o.quickly_computable}};
  if (!o.evidence.empty()) outcome["evidence"] = o.evidence;
  if (o.verdict == Verdict::open)
    outcome["note"] = "open case: neither a width bound nor an unbounded family is known";
  s.report["outcome"] = outcome;
  std::string params;
  for (std::size_t i = 0; i < p.size(); ++i) params += (i ? " " : "") + std::to_string(p[i]);
  s.csv.push_back({"family", "params", "verdict", "bullet", "quickly_computable"});
  s.csv.push_back({family, params, to_string(o.verdict), o.bullet,
                   o.quickly_computable ? "true" : "false"});
  return ok;
}

// ---------------------------------------------------------------------------
// Batch.

const char* status_name(int code) {
  switch (code) {
    case ok: return "ok";
    case negative: return "negative";
    case usage: return "usage-error";
    default: return "invariant-violated";
  }
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> std::quoted(tok)) out.push_back(tok);
  return out;
}

int cmd_batch(const std::string& manifest, std::size_t jobs, const std::string& format,
              std::ostream& out, const Context& ctx) {
  fs::path path(manifest);
  if (path.is_relative() && !ctx.base_dir.empty()) path = ctx.base_dir / path;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read manifest " + manifest);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto row = split_row(line);
    if (!row.empty() && row[0] == "batch") throw UsageError("manifests cannot nest batch rows");
    rows.push_back(std::move(row));
  }
  Context row_ctx{path.parent_path()};
  struct Result {
    int code = ok;
    std::string out, err;
  };
  std::vector<Result> results(rows.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < rows.size();) {
      std::ostringstream o, e;
      results[i].code = run(rows[i], o, e, row_ctx);
      results[i].out = o.str();
      results[i].err = e.str();
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < std::max<std::size_t>(jobs, 1); ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int worst = ok;
  for (const auto& r : results) worst = std::max(worst, r.code);
  if (format == "native") {
    Json j{{"manifest", manifest}, {"rows", Json::array()}, {"exit", worst}};
    for (std::size_t i = 0; i < rows.size(); ++i)
      j["rows"].push_back({{"row", i + 1}, {"args", rows[i]}, {"exit", results[i].code},
                           {"status", status_name(results[i].code)},
                           {"stdout", results[i].out}, {"stderr", results[i].err}});
    out << j.dump(2) << "\n";
  } else {
    out << "row,command,exit,status,detail\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::string cmd;
      for (const auto& a : rows[i]) cmd += (cmd.empty() ? "" : " ") + a;
      std::string detail = results[i].err.substr(0, results[i].err.find('\n'));
      out << i + 1 << ',' << csv_field(cmd) << ',' << results[i].code << ','
          << status_name(results[i].code) << ',' << csv_field(detail) << "\n";
    }
  }
  return worst;
}

void emit(Session& s, std::ostream& out) {
  if (!s.common.out.empty() && !s.artifact.empty()) {
    std::ofstream f(s.resolve(s.common.out), std::ios::binary);
    if (!f) throw UsageError("cannot write " + s.common.out);
    f << s.artifact;
    s.report["artifact"] = Json{{"path", s.common.out}, {"sha256", sha256_hex(s.artifact)}};
  } else if (!s.artifact.empty()) {
    s.report["artifact"] = Json::parse(s.artifact);
  }
  if (s.common.format == "dot") {
    if (s.dot.empty()) throw UsageError("this command has no DOT output");
    out << s.dot;
  } else if (s.common.format == "csv") {
    for (const auto& row : s.csv) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
      out << "\n";
    }
  } else if (!s.plain.empty()) {
    out << s.plain;
  } else {
    s.report["inputs"] = s.inputs;
    if (s.common.timing) s.report["timing_ms"] = s.timings;
    out << s.report.dump(2) << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Context& ctx) {
  CLI::App app{"Branch decompositions, mim-width and sim-width toolkit", "widthlab"};
  app.require_subcommand(1);
  Session s{ctx};
  std::function<int()> action;

  GenArgs gen;
  auto* c_gen = app.add_subcommand("gen", "generate a family member");
  add_common(c_gen, s.common, false);
  c_gen->add_option("--family", gen.family)->required()->check(
      CLI::IsMember({"wall", "fW", "gW", "hW", "wn", "w5", "w4"}));
  c_gen->add_option("--params", gen.params)->required()->delimiter(',');
  c_gen->add_flag("--verify", gen.verify, "run the family's freeness suite");
  c_gen->callback([&] { action = [&] { return cmd_gen(s, gen); }; });

  std::string patterns;
  auto* c_free = app.add_subcommand("check-free", "test induced containment of patterns");
  add_common(c_free, s.common, true);
  c_free->add_option("--patterns", patterns, "comma-separated pattern list")->required();
  c_free->callback([&] { action = [&] { return cmd_check_free(s, patterns); }; });

  DecomposeArgs dec;
  std::size_t t_value = 0;
  auto* c_dec = app.add_subcommand("decompose", "build a branch decomposition");
  add_common(c_dec, s.common, true);
  c_dec->add_option("--strategy", dec.strategy)->required()->check(
      CLI::IsMember({"thm-3p1", "thm-4p1", "caterpillar", "maxdeg2", "exact"}));
  auto* t_opt = c_dec->add_option("--t", t_value, "t of the excluded co(K[s,t]+P1)");
  c_dec->add_option("--which", dec.which)->check(CLI::IsMember({"mim", "sim"}));
  c_dec->add_flag("--no-verify", dec.no_verify, "skip the freeness check of the input");
  c_dec->add_flag("--no-claims", dec.no_claims, "skip the per-cut bound checks");
  c_dec->callback([&] {
    if (t_opt->count()) dec.t = t_value;
    action = [&] { return cmd_decompose(s, dec); };
  });

  std::string bd_path;
  auto* c_eval = app.add_subcommand("eval-width", "evaluate a decomposition");
  add_common(c_eval, s.common, true);
  c_eval->add_option("--bd", bd_path, "decomposition file")->required();
  c_eval->callback([&] { action = [&] { return cmd_eval_width(s, bd_path); }; });

  std::string which = "mim";
  auto* c_exact = app.add_subcommand("exact-width", "optimal width by exhaustive search");
  add_common(c_exact, s.common, true);
  c_exact->add_option("--which", which)->check(CLI::IsMember({"mim", "sim"}));
  c_exact->callback([&] { action = [&] { return cmd_exact_width(s, which); }; });

  std::size_t cap = default_pattern_cap;
  auto* c_hg = app.add_subcommand("hgraph", "build the H-graph of pattern occurrences");
  add_common(c_hg, s.common, true);
  c_hg->add_option("--patterns", patterns)->required();
  c_hg->add_option("--cap", cap, "largest pattern order");
  c_hg->callback([&] { action = [&] { return cmd_hgraph(s, patterns, cap); }; });

  PackArgs pack;
  auto* c_pack = app.add_subcommand("pack", "maximum-weight independent pattern packing");
  add_common(c_pack, s.common, true);
  c_pack->add_option("--patterns", pack.patterns)->required();
  c_pack->add_option("--weights", pack.weights, "occurrence id -> [num, den]");
  c_pack->add_option("--bd", pack.bd, "decomposition of the H-graph");
  c_pack->add_option("--cap", pack.cap, "largest pattern order");
  c_pack->callback([&] { action = [&] { return cmd_pack(s, pack); }; });

  std::string weights;
  auto* c_mwis = app.add_subcommand("mwis", "maximum-weight independent set");
  add_common(c_mwis, s.common, true);
  c_mwis->add_option("--weights", weights, "vertex -> [num, den]");
  c_mwis->add_option("--bd", bd_path, "decomposition for the dynamic program");
  c_mwis->callback([&] { action = [&] { return cmd_mwis(s, weights, bd_path); }; });

  std::size_t k = 0;
  std::string lists;
  auto* c_lc = app.add_subcommand("list-color", "list k-colouring");
  add_common(c_lc, s.common, true);
  c_lc->add_option("--k", k)->required();
  c_lc->add_option("--lists", lists, "vertex -> sorted colour array; default all of 1..k");
  c_lc->add_option("--bd", bd_path, "decomposition used for the width report");
  c_lc->callback([&] { action = [&] { return cmd_list_color(s, k, lists, bd_path); }; });

  std::string cfamily;
  std::vector<std::size_t> cparams;
  auto* c_cls = app.add_subcommand("classify", "boundedness of mim-width for a class");
  add_common(c_cls, s.common, false);
  c_cls->add_option("--family", cfamily)->required()->check(
      CLI::IsMember({"edgeless", "complete"}));
  c_cls->add_option("--params", cparams, "r,s,t (edgeless) or r,s,t,u (complete)")
      ->required()
      ->delimiter(',');
  c_cls->callback([&] { action = [&] { return cmd_classify(s, cfamily, cparams); }; });

  std::string manifest, batch_format = "csv";
  std::size_t jobs = 1;
  auto* c_batch = app.add_subcommand("batch", "run the rows of a manifest");
  c_batch->add_option("manifest", manifest, "one command line per row")->required();
  c_batch->add_option("--jobs", jobs, "rows run concurrently");
  c_batch->add_option("--format", batch_format)->check(CLI::IsMember({"native", "csv"}));
  c_batch->callback([&] {
    action = [&] { return cmd_batch(manifest, jobs, batch_format, out, ctx); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  s.report["command"] = args;
  try {
    int code = action();
    if (!c_batch->parsed()) emit(s, out);
    return code;
  } catch (const PreconditionFailed& e) {
    Json r{{"command", args},
           {"outcome", {{"status", "precondition-failed"}, {"message", e.what()},
                        {"witness", e.witness()}}}};
    out << r.dump(2) << "\n";
    err << "precondition failed: " << e.what() << "\n";
    return negative;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << "\n";
    return invariant;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return invariant;
  }
}

}  // namespace widthlab::cli
