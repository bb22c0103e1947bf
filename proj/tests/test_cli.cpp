#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"
#include "widthlab/branchdec.hpp"
#include "widthlab/graph.hpp"

using namespace widthlab;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const fs::path& base = {}) {
  std::ostringstream o, e;
  int code = cli::run(args, o, e, cli::Context{base});
  return {code, o.str(), e.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("widthlab_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

const fs::path manifests = WIDTHLAB_MANIFEST_DIR;

}  // namespace

TEST_CASE("documented examples") {
  auto gen = run({"gen", "--family", "w5", "--params", "2", "--verify"});
  CHECK(gen.code == cli::ok);
  auto report = json::parse(gen.out);
  REQUIRE(report["outcome"]["verification"].size() == 2);
  CHECK(report["outcome"]["verification"][0]["claim"] == "K5-free");
  CHECK(report["outcome"]["verification"][1]["claim"] == "P3+P2+P1-free");
  for (const auto& v : report["outcome"]["verification"]) CHECK(v["verdict"] == "pass");

  auto dec = run({"decompose", "--graph", "named:E:3", "--strategy", "thm-3p1", "--t", "4"});
  CHECK(dec.code == cli::negative);
  CHECK(json::parse(dec.out)["outcome"]["witness"] == json::array({0, 1, 2}));

  auto ex = run({"exact-width", "--graph", "named:P:5", "--which", "mim"});
  CHECK(ex.code == cli::ok);
  CHECK(ex.out == "1\n");
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::usage);
  CHECK(run({"frobnicate"}).code == cli::usage);
  CHECK(run({"gen", "--family", "w5"}).code == cli::usage);
  CHECK(run({"gen", "--family", "w5", "--params", "0"}).code == cli::usage);
  CHECK(run({"check-free", "--graph", "missing.json", "--patterns", "K3"}).code == cli::usage);
  CHECK(run({"check-free", "--graph", "named:C:5", "--patterns", "Q9"}).code == cli::usage);
  CHECK(run({"check-free", "--graph", "named:K:4", "--patterns", "K3"}).code == cli::negative);
  CHECK(run({"check-free", "--graph", "named:C:5", "--patterns", "K3,3P1"}).code == cli::ok);
  CHECK(run({"decompose", "--graph", "named:K:5", "--strategy", "thm-3p1"}).code == cli::usage);
  CHECK(run({"decompose", "--graph", "named:star:3", "--strategy", "maxdeg2"}).code ==
        cli::negative);
  CHECK(run({"list-color", "--graph", "named:C:5", "--k", "2"}).code == cli::negative);
  CHECK(run({"list-color", "--graph", "named:C:5", "--k", "3"}).code == cli::ok);
  CHECK(run({"classify", "--family", "complete", "--params", "4,1,1"}).code == cli::usage);
  CHECK(run({"classify", "--family", "edgeless", "--params", "2,3,3"}).code == cli::usage);
  CHECK(run({"classify", "--family", "complete", "--params", "5,0,0,2"}).code == cli::ok);
  CHECK(run({"mwis", "--graph", "named:P:3", "--format", "dot"}).code == cli::usage);
  CHECK(run({"--help"}).code == cli::ok);
}

TEST_CASE("outputs round-trip and are deterministic") {
  TempDir tmp;
  auto g1 = run({"gen", "--family", "gW", "--params", "4,4", "--out", "g.json"}, tmp.path);
  REQUIRE(g1.code == cli::ok);
  std::string text = slurp(tmp.path / "g.json");
  CHECK(graph_to_json(graph_from_json(text)) == text);
  auto g2 = run({"gen", "--family", "gW", "--params", "4,4", "--out", "g2.json"}, tmp.path);
  CHECK(slurp(tmp.path / "g2.json") == text);

  auto d = run({"decompose", "--graph", "named:K:6", "--strategy", "thm-4p1", "--t", "4",
                "--out", "bd.json"},
               tmp.path);
  REQUIRE(d.code == cli::ok);
  auto rep = json::parse(d.out);
  CHECK(rep["outcome"]["certificate"]["case"] == "delegated");
  CHECK(rep["outcome"]["certificate"]["ramsey"]["provenance"] == "exact-table");
  std::string bd_text = slurp(tmp.path / "bd.json");
  CHECK(decomposition_to_json(decomposition_from_json(bd_text)) == bd_text);
  CHECK(rep["artifact"]["path"] == "bd.json");

  auto e = run({"eval-width", "--graph", "named:K:6", "--bd", "bd.json"}, tmp.path);
  REQUIRE(e.code == cli::ok);
  auto er = json::parse(e.out);
  CHECK(er["outcome"]["mimw"] == rep["outcome"]["widths"]["mimw"]);
  CHECK(er["inputs"]["decomposition"]["sha256"].get<std::string>().size() == 64);
  CHECK(run({"eval-width", "--graph", "named:K:5", "--bd", "bd.json"}, tmp.path).code ==
        cli::usage);

  auto h = run({"hgraph", "--graph", "named:P:5", "--patterns", "P3", "--out", "h.json"},
               tmp.path);
  REQUIRE(h.code == cli::ok);
  Graph hg = graph_from_json(slurp(tmp.path / "h.json"));
  CHECK(hg.order() == 3);
  CHECK(json::parse(h.out)["outcome"]["occurrences"][2]["vertices"] == json::array({2, 3, 4}));

  CHECK(run({"gen", "--family", "wall", "--params", "3,3", "--format", "dot"}).out ==
        run({"gen", "--family", "wall", "--params", "3,3", "--format", "dot"}).out);
  CHECK(run({"gen", "--family", "wall", "--params", "2,2", "--format", "dot"}).out.rfind(
            "graph", 0) == 0);
}

TEST_CASE("weights and lists") {
  TempDir tmp;
  write(tmp.path / "w.json", R"({"0":[1,2],"1":[3,1],"2":[1,1],"3":[1,1],"4":[2,1]})");
  auto m = run({"mwis", "--graph", "named:P:5", "--weights", "w.json"}, tmp.path);
  REQUIRE(m.code == cli::ok);
  auto mr = json::parse(m.out);
  CHECK(mr["outcome"]["weight"] == "5");
  CHECK(mr["outcome"]["set"] == json::array({1, 4}));

  REQUIRE(run({"decompose", "--graph", "named:P:5", "--strategy", "caterpillar", "--out",
               "cat.json"},
              tmp.path)
              .code == cli::ok);
  auto dp = run({"mwis", "--graph", "named:P:5", "--weights", "w.json", "--bd", "cat.json"},
                tmp.path);
  CHECK(json::parse(dp.out)["outcome"]["weight"] == "5");
  CHECK(json::parse(dp.out)["outcome"]["method"] == "mim-dp");

  write(tmp.path / "short.json", R"({"0":[1,2]})");
  CHECK(run({"mwis", "--graph", "named:P:5", "--weights", "short.json"}, tmp.path).code ==
        cli::usage);
  write(tmp.path / "zero.json", R"({"0":[1,0],"1":[1,1],"2":[1,1]})");
  CHECK(run({"mwis", "--graph", "named:P:3", "--weights", "zero.json"}, tmp.path).code ==
        cli::usage);

  write(tmp.path / "pw.json", R"({"0":[1,1],"1":[5,2],"2":[1,1]})");
  auto p = run({"pack", "--graph", "named:P:5", "--patterns", "P3", "--weights", "pw.json"},
               tmp.path);
  REQUIRE(p.code == cli::ok);
  CHECK(json::parse(p.out)["outcome"]["weight"] == "5/2");

  write(tmp.path / "lists.json", R"({"0":[1],"1":[1,2],"2":[1]})");
  auto l = run({"list-color", "--graph", "named:P:3", "--k", "2", "--lists", "lists.json"},
               tmp.path);
  CHECK(l.code == cli::ok);
  CHECK(json::parse(l.out)["outcome"]["colouring"] == json::array({1, 2, 1}));
  write(tmp.path / "bad.json", R"({"0":[3],"1":[1],"2":[1]})");
  CHECK(run({"list-color", "--graph", "named:P:3", "--k", "2", "--lists", "bad.json"}, tmp.path)
            .code == cli::usage);
  auto k4 = run({"list-color", "--graph", "named:K:4", "--k", "3"});
  CHECK(k4.code == cli::negative);
  CHECK(json::parse(k4.out)["outcome"]["clique"] == json::array({0, 1, 2, 3}));
}

TEST_CASE("batch") {
  auto gens = run({"batch", (manifests / "gens.txt").string(), "--jobs", "3"});
  CHECK(gens.code == cli::ok);
  std::istringstream rows(gens.out);
  std::string line;
  int count = -1;
  while (std::getline(rows, line)) {
    if (count >= 0) CHECK(line.find(",0,ok,") != std::string::npos);
    ++count;
  }
  CHECK(count == 10);
  CHECK(run({"batch", (manifests / "gens.txt").string()}).out == gens.out);

  auto mixed = run({"batch", (manifests / "mixed.txt").string()});
  CHECK(mixed.code == cli::usage);
  CHECK(mixed.out.find("1,negative,") != std::string::npos);

  TempDir tmp;
  write(tmp.path / "neg.txt", "check-free --graph named:K:3 --patterns K3\n# comment\n\n");
  auto neg = run({"batch", "neg.txt", "--format", "native"}, tmp.path);
  CHECK(neg.code == cli::negative);
  CHECK(json::parse(neg.out)["rows"].size() == 1);
  write(tmp.path / "nest.txt", "batch other.txt\n");
  CHECK(run({"batch", "nest.txt"}, tmp.path).code == cli::usage);
}
