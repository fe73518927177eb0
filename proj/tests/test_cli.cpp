#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "adhm/commands.hpp"
#include "adhm/random.hpp"

using namespace adhm;
namespace fs = std::filesystem;

namespace {

struct Run {
  int exit_code;
  std::string out;
  Json json() const { return Json::parse(out); }
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ADHM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// A scratch directory removed at scope exit.
struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("adhm_cli_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name, std::ios::binary) << text;
    return (path / name).string();
  }
  std::string write(const std::string& name, const GeneratedInstance& doc) const {
    return write(name, serialize_instance(doc));
  }
};

const BlowupTuple kK1Valid{1, 1, {{1}}, {{1}}, {{0}}, {{1}}, {{0}}};
const BlowupTuple kK1Invalid{1, 1, {{1}}, {{1}}, {{0}}, {{1}}, {{1}}};
const BlowupTuple kK2{2, 2, RationalMatrix::identity(2), {{0, 0}, {1, 0}}, {{0, 1}, {0, 0}}, RationalMatrix::identity(2),
                      {{-1, 0}, {0, 1}}};
const P2Tuple kDiag{2, 1, {{1, 0}, {0, 2}}, {{3, 0}, {0, 4}}, RationalMatrix(2, 1), RationalMatrix(1, 2)};

Json rational_pair(int x, int y) {
  return Json::array({Json{{"re", std::to_string(x)}, {"im", "0"}}, Json{{"re", std::to_string(y)}, {"im", "0"}}});
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("serialization round-trips exactly") {
    Rng rng(51);
    for (Family f : kAllFamilies) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const GeneratedInstance doc = generate({f == Family::charge_one ? 1u : 3u, 2, seed, f});
        const std::string text = serialize_instance(doc);
        const GeneratedInstance back = parse_instance(text);
        CHECK(back == doc);
        CHECK(serialize_instance(back) == text);
      }
    }
    const GeneratedInstance complex_entries =
        P2Tuple(1, 1, {{GR(mpq_class(-7, 3), mpq_class(5, 11))}}, {{0}}, {{0}}, {{0}});
    CHECK(parse_instance(serialize_instance(complex_entries)) == complex_entries);
    CHECK(to_json(GR(mpq_class(4, 2))) == Json{{"re", "2"}, {"im", "0"}});
  }

  TEST_CASE("strict parsing") {
    const std::string good = serialize_instance(GeneratedInstance(kK1Valid));
    CHECK_THROWS_AS(parse_instance(good.substr(0, good.size() / 2)), ParseError);
    Json j = Json::parse(good);
    j["matrices"]["a1"][0][0]["re"] = "1/0";
    CHECK_THROWS_AS(instance_from_json(j), ParseError);
    j = Json::parse(good);
    j["k"] = 2;
    CHECK_THROWS_AS(instance_from_json(j), DimensionMismatch);
    j = Json::parse(good);
    j["kind"] = "torus";
    CHECK_THROWS_AS(instance_from_json(j), ParseError);
    j = Json::parse(good);
    j["matrices"].erase("d");
    CHECK_THROWS_AS(instance_from_json(j), ParseError);
    j = Json::parse(good);
    j["schema_version"] = "2";
    CHECK_THROWS_AS(instance_from_json(j), ParseError);
  }

  TEST_CASE("validate exit codes") {
    TempDir dir("validate");
    const Run ok = run("validate " + dir.write("ok.json", kK1Valid));
    CHECK(ok.exit_code == 0);
    CHECK(ok.json()["valid"] == true);

    const Run bad = run("validate " + dir.write("bad.json", kK1Invalid));
    CHECK(bad.exit_code == 2);
    CHECK(bad.json()["error"] == "IntegrabilityViolation");
    CHECK(bad.json()["defect"] == to_json(RationalMatrix{{1}}));

    const std::string text = serialize_instance(GeneratedInstance(kK1Valid));
    CHECK(run("validate " + dir.write("cut.json", text.substr(0, text.size() - 10))).exit_code == 1);
    CHECK(run("validate " + (dir.path / "missing.json").string()).exit_code == 1);

    const BlowupTuple not_onto{1, 1, {{0}}, {{0}}, {{1}}, {{0}}, {{0}}};
    const Run coker = run("validate " + dir.write("onto.json", not_onto));
    CHECK(coker.exit_code == 2);
    CHECK(coker.json()["error"] == "SurjectivityViolation");
    CHECK(coker.json()["cokernel_dim"] == 1);
  }

  TEST_CASE("classify") {
    TempDir dir("classify");
    const Run zero_d = run("classify " + dir.write("zero_d.json", kK1Valid));
    CHECK(zero_d.exit_code == 0);
    CHECK(zero_d.json()["is_s0"] == true);

    const Run k2 = run("classify " + dir.write("k2.json", kK2) + " --oracle-maxlen 4");
    CHECK(k2.exit_code == 0);
    CHECK(k2.json()["is_s0"] == false);
    CHECK(k2.json()["witness"] == "da2 not nilpotent");
    CHECK(k2.json()["oracle_agrees"] == true);

    CHECK(run("classify " + dir.write("bad.json", kK1Invalid)).exit_code == 2);
    CHECK(run("classify " + dir.write("p2.json", kDiag)).exit_code == 1);
  }

  TEST_CASE("pushforward output validates") {
    TempDir dir("push");
    const std::string out = (dir.path / "pushed.json").string();
    const Run push = run("pushforward " + dir.write("k2.json", kK2) + " -o " + out);
    CHECK(push.exit_code == 0);
    const GeneratedInstance pushed = read_instance_file(out);
    REQUIRE(std::holds_alternative<P2Tuple>(pushed));
    CHECK(std::get<P2Tuple>(pushed).a2() == RationalMatrix{{1, 0}, {0, 0}});
    CHECK(run("validate " + out).exit_code == 0);

    const Run to_stdout = run("pushforward " + dir.write("k1.json", kK1Valid));
    CHECK(to_stdout.exit_code == 0);
    CHECK(parse_instance(to_stdout.out) == GeneratedInstance(P2Tuple::zero(1, 1)));
    CHECK(run("pushforward " + dir.write("bad.json", kK1Invalid)).exit_code == 2);
  }

  TEST_CASE("reduce") {
    TempDir dir("reduce");
    const Run diag = run("reduce " + dir.write("diag.json", kDiag));
    CHECK(diag.exit_code == 0);
    CHECK(diag.json()["l"] == 0);
    CHECK(diag.json()["points"] == Json::array({rational_pair(1, 3), rational_pair(2, 4)}));
    CHECK(diag.json()["approx"] == false);

    const RationalMatrix a{{0, 2}, {1, 0}};
    const P2Tuple irrational{2, 1, a, RationalMatrix(2, 2), RationalMatrix(2, 1), RationalMatrix(1, 2)};
    const std::string path = dir.write("irr.json", irrational);
    const Run exact = run("reduce " + path);
    CHECK(exact.exit_code == 2);
    CHECK(exact.json()["error"] == "IrrationalSpectrum");
    const Run approx = run("reduce --float " + path);
    CHECK(approx.exit_code == 0);
    CHECK(approx.json()["approx"] == true);
    CHECK(approx.json()["points"][0][0]["re"].is_number_float());
  }

  TEST_CASE("trivialize") {
    TempDir dir("triv");
    const std::string path = dir.write("conc.json", generate({2, 2, 3, Family::block_concentrated}));
    const Run ok = run("trivialize " + path + " --samples 10");
    CHECK(ok.exit_code == 0);
    CHECK(ok.json()["ok"] == true);
    CHECK(ok.json()["points_checked"] == 10);
    CHECK(run("trivialize " + dir.write("diag.json", kDiag)).exit_code == 2);
  }

  TEST_CASE("generate is deterministic") {
    TempDir dir("gen");
    const std::string a = (dir.path / "a.json").string(), b = (dir.path / "b.json").string();
    const std::string flags = "generate --family charge_one --k 1 --r 2 --seed 7 -o ";
    CHECK(run(flags + a).exit_code == 0);
    CHECK(run(flags + b).exit_code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(run("generate --family charge_one --k 1 --r 2 --seed 7").out == slurp(a));
    CHECK(run("generate --family charge_one --k 1 --r 1").exit_code == 2);
    CHECK(run("generate --family nope").exit_code == 1);
  }

  TEST_CASE("batch mode") {
    TempDir dir("batch");
    dir.write("a.json", kK1Valid);
    dir.write("b.json", kK2);
    dir.write("c.json", kK1Invalid);
    dir.write("notes.txt", "ignored");
    const Run res = run("batch " + dir.path.string() + " --command classify --jobs 2");
    std::istringstream lines(res.out);
    std::vector<Json> parsed;
    for (std::string line; std::getline(lines, line);) parsed.push_back(Json::parse(line));
    REQUIRE(parsed.size() == 4);
    CHECK(parsed[0]["file"] == "a.json");
    CHECK(parsed[1]["report"]["is_s0"] == false);
    CHECK(parsed[2]["exit_code"] == 2);
    CHECK(parsed[3]["files"] == 3);
    CHECK(parsed[3]["invalid"] == 1);
    CHECK(res.exit_code == 2);
    CHECK(run("batch " + (dir.path / "nowhere").string()).exit_code == 1);
    CHECK(run("batch " + dir.path.string() + " --command pushforward").exit_code == 1);
  }

  TEST_CASE("usage errors") {
    CHECK(run("").exit_code == 1);
    CHECK(run("frobnicate").exit_code == 1);
    CHECK(run("--help").exit_code == 0);
  }
}
