#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "common.hpp"
#include "skewgentle/engine.hpp"
#include "skewgentle/report.hpp"

using namespace skewgentle;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SKEWGENTLE_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(SKEWGENTLE_TEST_DATA) + "/" + name; }

}  // namespace

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(run("check " + data("example.sg")).code, 0);
  const auto bad = run("check --json " + data("example_special3.sg"));
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("delta_3"), std::string::npos);
  EXPECT_EQ(run("check " + data("malformed.sg")).code, 2);
  EXPECT_EQ(run("check /nonexistent.sg").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, SplitEmitsExampleQuiver) {
  const auto r = run("split " + data("example.sg"));
  ASSERT_EQ(r.code, 0);
  const auto q = parse_quiver(r.out);
  EXPECT_EQ(q.vertex_count(), 6);
  EXPECT_EQ(q.arrow_count(), 7);
  EXPECT_EQ(q.relations().size(), 2u);
  EXPECT_EQ(realize<Rational>(q).dimension(), oracle_dimension<Rational>(q));
  EXPECT_EQ(run("split " + data("example_special3.sg")).code, 1);
}

TEST(Cli, SplitOfEmptySpecialSetReparsesEqual) {
  const auto r = run("split " + data("example_base.sg"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse_quiver(r.out), parse_quiver("vertices 1 2 3 4; arrow a: 1->2; arrow b: 2->3; arrow c: 3->4; rel a*b;"));
}

TEST(Cli, ExportAlgebraWritesJson) {
  const auto path = (std::filesystem::temp_directory_path() / "skewgentle_alg.json").string();
  ASSERT_EQ(run("split " + data("example.sg") + " -o /dev/null --export-algebra " + path + " --field f2").code, 0);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_FALSE(j.empty());
  std::filesystem::remove(path);
}

TEST(Cli, GammaAndCorners) {
  const auto g = run("gamma " + data("example.sg"));
  ASSERT_EQ(g.code, 0);
  EXPECT_EQ(parse_quiver(g.out).vertex_count(), 6);
  const auto c = run("corners --json " + data("example.sg"));
  ASSERT_EQ(c.code, 0);
  const auto j = nlohmann::json::parse(c.out);
  EXPECT_EQ(j["C_factors"], nlohmann::json::array({"A_2"}));
  EXPECT_EQ(j["quotient"]["dim"], 8);
}

TEST(Cli, VerifyExampleFullOverF2) {
  const auto r = run("verify --json --field f2 --level full " + data("example.sg"));
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  for (const char* b : {"split", "peirce", "stratifying", "gorenstein", "selfinjective"})
    EXPECT_EQ(j["fields"]["F2"][b]["status"], "pass") << b;
}

TEST(Cli, VerifyVacuousStructural) {
  const auto r = run("verify --json --level structural " + data("example_base.sg"));
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["fields"]["Q"]["peirce"]["status"], "vacuous");
  EXPECT_FALSE(j["fields"]["Q"].contains("stratifying"));
}

TEST(Cli, VerifyCapExceededExitsThree) {
  const auto r = run("verify --json --level homological --id-cap 1 " + data("example_base.sg"));
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(run("verify --level nonsense " + data("example.sg")).code, 2);
  EXPECT_EQ(run("verify --field f4 " + data("example.sg")).code, 2);
}

TEST(Cli, CorpusIsDeterministicAndValid) {
  const auto base = std::filesystem::temp_directory_path() / "skewgentle_cli_corpus";
  std::filesystem::remove_all(base);
  const auto d1 = (base / "one").string(), d2 = (base / "two").string();
  ASSERT_EQ(run("corpus --seed 42 --count 10 -o " + d1).code, 0);
  ASSERT_EQ(run("corpus --seed 42 --count 10 -o " + d2).code, 0);
  std::ifstream m1(base / "one" / "manifest.json"), m2(base / "two" / "manifest.json");
  const auto j1 = nlohmann::json::parse(m1), j2 = nlohmann::json::parse(m2);
  ASSERT_EQ(j1["instances"].size(), 10u);
  EXPECT_EQ(j1, j2);
  for (const auto& item : j1["instances"])
    EXPECT_EQ(run("check " + d1 + "/" + item["file"].get<std::string>()).code, 0);
  const auto rep = run("report --json --level structural --jobs 2 " + d1);
  EXPECT_EQ(rep.code, 0);
  EXPECT_EQ(nlohmann::json::parse(rep.out)["instances"], 10);
  EXPECT_EQ(run("corpus --special-density 2 -o " + d1).code, 2);
  std::filesystem::remove_all(base);
}

TEST(Cli, CacheDirectoryIsUsed) {
  const auto dir = std::filesystem::temp_directory_path() / "skewgentle_cache_test";
  std::filesystem::remove_all(dir);
  const std::string env = "SKEWGENTLE_CACHE_DIR=" + dir.string() + " ";
  const auto cmd = std::string("sh -c '") + env + SKEWGENTLE_CLI + " verify --json " + data("example.sg") + "'";
  ASSERT_EQ(std::system(cmd.c_str()) >> 8, 0);
  ASSERT_EQ(std::distance(std::filesystem::directory_iterator(dir), {}), 1);
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  pclose(p);
  EXPECT_TRUE(nlohmann::json::parse(out).value("cached", false));
  std::filesystem::remove_all(dir);
}

TEST(Cli, GeneratedNameCollisionIsAnInputError) {
  const auto path = (std::filesystem::temp_directory_path() / "skewgentle_collision.sg").string();
  std::ofstream(path) << "vertices 1 1__p; arrow a: 1->1__p; special 1;\n";
  EXPECT_EQ(run("check " + path).code, 0);
  EXPECT_EQ(run("split " + path).code, 2);
  std::filesystem::remove(path);
}
