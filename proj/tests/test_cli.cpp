#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef TCSPACE_BIN
#error "TCSPACE_BIN must point at the tcspace executable"
#endif

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// stdout and stderr are captured together; stderr is redirected to a file so
// the two can be told apart.
struct Workspace {
  fs::path dir;

  Workspace() {
    dir = fs::temp_directory_path() / ("tcspace_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Workspace() { fs::remove_all(dir); }

  std::string write(const std::string& name, const std::string& content) const {
    const auto path = dir / name;
    std::ofstream(path) << content;
    return path.string();
  }

  std::string read(const std::string& name) const {
    std::ifstream in(dir / name);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  Run run(const std::string& args, const std::string& env = "") const {
    const std::string cmd = env + " " TCSPACE_BIN " " + args + " 2>" + (dir / "stderr").string();
    Run r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    const int raw = ::pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
  }

  Json err() const { return Json::parse(read("stderr")); }
};

const char* path3 = R"({"vertices":["A","B","C"],"edges":[{"u":"A","v":"B","w":"1"},{"u":"B","v":"C","w":"2"}]})";
const char* spread = R"({"f":{"A":"2","B":"-1","C":"-1"}})";
const char* c4 = R"({"points":["c1","c2","c3","c4"],"dist":[["0","1","2","1"],["1","0","1","2"],["2","1","0","1"],["1","2","1","0"]]})";

}  // namespace

TEST_CASE("validate and canon") {
  Workspace ws;
  auto space = ws.write("c4.json", c4);
  auto r = ws.run("validate --space " + space);
  CHECK(r.status == 0);
  CHECK(Json::parse(r.out)["valid"] == true);

  auto bad = ws.write("bad.json", R"({"points":["A","B","C"],"dist":[["0","1","3"],["1","0","1"],["3","1","0"]]})");
  r = ws.run("validate --space " + bad);
  CHECK(r.status == 1);
  CHECK(ws.err()["error"] == "TriangleViolation");

  r = ws.run("canon --space " + space + " --dot " + (ws.dir / "c4.dot").string());
  CHECK(r.status == 0);
  CHECK(Json::parse(r.out)["edges"].size() == 4);
  CHECK(ws.read("c4.dot").find("digraph") != std::string::npos);
}

TEST_CASE("norm, roadmap and dual on path3") {
  Workspace ws;
  auto space = ws.write("p.json", path3);
  auto f = ws.write("f.json", spread);
  auto r = ws.run("norm --space " + space + " --problem " + f);
  REQUIRE(r.status == 0);
  CHECK(Json::parse(r.out)["tc_norm"] == "4");

  r = ws.run("roadmap --maximal --space " + space + " --problem " + f);
  REQUIRE(r.status == 0);
  auto road = Json::parse(r.out);
  CHECK(road["cost"] == "4");
  CHECK(road["optimal"] == true);

  r = ws.run("dual --unique --space " + space + " --problem " + f);
  REQUIRE(r.status == 0);
  auto dual = Json::parse(r.out);
  CHECK(dual.dump().find("\"unique\":true") != std::string::npos);
}

TEST_CASE("domain and usage errors") {
  Workspace ws;
  auto space = ws.write("p.json", path3);
  auto lopsided = ws.write("g.json", R"({"f":{"A":"1"}})");
  auto r = ws.run("norm --space " + space + " --problem " + lopsided);
  CHECK(r.status == 1);
  CHECK(ws.err()["error"] == "NotZeroSum");

  auto garbage = ws.write("x.json", "{not json");
  r = ws.run("norm --space " + garbage + " --problem " + lopsided);
  CHECK(r.status == 1);
  CHECK(ws.err()["error"] == "ParseError");

  CHECK(ws.run("norm --space " + space).status == 2);
  CHECK(ws.run("no-such-command").status == 2);
  CHECK(ws.run("").status == 2);
  CHECK(ws.run("certify --space " + space).status == 2);

  r = ws.run("validate --space " + ws.write("c4.json", c4), "TCSPACE_MAX_POINTS=3");
  CHECK(r.status == 1);
  CHECK(ws.err()["error"] == "InstanceTooLarge");
}

TEST_CASE("gen and peeled certificates") {
  Workspace ws;
  auto r = ws.run("gen diamond --n 2");
  REQUIRE(r.status == 0);
  auto space = ws.write("d2.json", r.out);
  r = ws.run("certify --space " + space + " --k 4 --peel diamond");
  REQUIRE(r.status == 0);
  auto cert = Json::parse(r.out);
  CHECK(cert["verdict"] == "ruled_out");
  CHECK(cert["peeling"] == Json::array({"D_2", "D_1"}));
  r = ws.run("certify --space " + space + " --k 3 --peel diamond");
  CHECK(Json::parse(r.out)["verdict"] == "inconclusive");

  r = ws.run("gen grid --n 3 --graph");
  REQUIRE(r.status == 0);
  auto grid = ws.write("g3.json", r.out);
  CHECK(Json::parse(ws.run("certify --space " + grid + " --k 5").out)["verdict"] == "ruled_out");
  r = ws.run("certify --space " + grid + " --k 5 --peel diamond");
  CHECK(r.status == 1);
  CHECK(ws.err()["error"] == "PeelNotApplicable");

  r = ws.run("gen recursive --base k23 --n 2");
  REQUIRE(r.status == 0);
  CHECK(Json::parse(r.out)["points"].size() == 2 + 3 + 18);
}

TEST_CASE("realizable and downhill") {
  Workspace ws;
  auto space = ws.write("u.json", R"({"vertices":["A","B","C"],"edges":[{"u":"A","v":"B","w":"1"},{"u":"B","v":"C","w":"1"}]})");
  auto h = ws.write("h.json", R"({"arcs":[{"from":"A","to":"B"}]})");
  auto r = ws.run("realizable --space " + space + " --digraph " + h);
  REQUIRE(r.status == 0);
  auto doc = Json::parse(r.out);
  CHECK(doc["realizable"] == true);

  auto f = ws.write("f.json", R"({"f":{"A":"1","B":"-1"}})");
  r = ws.run("downhill --space " + space + " --problem " + f);
  REQUIRE(r.status == 0);
  CHECK(Json::parse(r.out)["arcs"].size() == 1);
  auto l = ws.write("l.json", R"({"l":{"A":"0","B":"-1","C":"-2"}})");
  CHECK(ws.run("downhill --space " + space + " --problem " + f + " --lipschitz " + l).status == 2);
}

TEST_CASE("oracle check over random instances") {
  Workspace ws;
  auto r = ws.run("oracle-check --random 50 --seed 3 --jobs 2");
  REQUIRE(r.status == 0);
  auto doc = Json::parse(r.out);
  CHECK(doc["checked"] == 50);
  CHECK(doc["agreed"] == 50);
  CHECK(doc["mismatches"].empty());
  CHECK(ws.run("oracle-check --random 5").status == 2);
}

TEST_CASE("output is deterministic and re-readable") {
  Workspace ws;
  auto first = ws.run("oracle-check --random 40 --seed 11 --jobs 1");
  auto second = ws.run("oracle-check --random 40 --seed 11 --jobs 3");
  REQUIRE(first.status == 0);
  CHECK(first.out == second.out);

  auto gen = ws.run("gen recursive --base quadrilateral --n 2");
  REQUIRE(gen.status == 0);
  CHECK(gen.out == ws.run("gen recursive --base quadrilateral --n 2").out);
  auto space = ws.write("b2.json", gen.out);
  CHECK(ws.run("validate --space " + space).status == 0);

  auto canon = ws.run("canon --space " + space);
  REQUIRE(canon.status == 0);
  auto reread = ws.write("canon.json", canon.out);
  auto again = ws.run("canon --space " + reread);
  REQUIRE(again.status == 0);
  CHECK(Json::parse(again.out)["edges"] == Json::parse(canon.out)["edges"]);

  auto p3 = ws.write("p.json", path3);
  auto f = ws.write("f.json", spread);
  auto road = ws.run("roadmap --space " + p3 + " --problem " + f);
  auto dual = ws.run("dual --space " + p3 + " --problem " + f);
  REQUIRE(road.status == 0);
  REQUIRE(dual.status == 0);
  CHECK(road.out.find('.') == std::string::npos);  // rationals never leak as floats
  auto lip = ws.write("l.json", Json::parse(dual.out)["supporting"].dump());
  auto down = ws.run("downhill --space " + p3 + " --lipschitz " + lip);
  CHECK(down.status == 0);
}
