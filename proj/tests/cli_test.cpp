#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"

using namespace srlc;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "srlc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "srlc_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, AnalyzeBowtie) {
  auto r = run({"analyze", "corpus:bowtie", "--field", "q"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("singularity dimension: 0"), std::string::npos);
  EXPECT_NE(r.out.find("Cohen-Macaulay: no"), std::string::npos);
  EXPECT_NE(r.out.find("Buchsbaum: no"), std::string::npos);
}

TEST(Cli, AnalyzeProjectivePlaneOverF2) {
  auto r = run({"analyze", "corpus:rp2-6", "--field", "fp:2", "--json", "-"});
  ASSERT_EQ(r.code, 0);
  auto j = Json::parse(r.out.substr(r.out.find("\n{") + 1));
  EXPECT_EQ(j.at("cohen_macaulay"), false);
  EXPECT_EQ(j.at("singularity").at("dimension"), "-1");
}

TEST(Cli, AnalyzeSimplexBoundaryIsCohenMacaulay) {
  auto r = run({"analyze", "--input", "corpus:boundary-simplex-3", "--json", "-"});
  ASSERT_EQ(r.code, 0);
  auto j = Json::parse(r.out.substr(r.out.find("\n{") + 1));
  EXPECT_EQ(j.at("cohen_macaulay"), true);
  EXPECT_EQ(j.at("singularity").at("dimension"), "-inf");
  EXPECT_EQ(j.at("schema_version"), 1);
}

TEST(Cli, LcTails) {
  auto tri = run({"lc", "corpus:boundary-simplex-2", "--l", "2"});
  EXPECT_EQ(tri.code, 0);
  EXPECT_NE(tri.out.find("3 + 3i"), std::string::npos);
  EXPECT_NE(tri.out.find("[0] 1"), std::string::npos);
  auto bow = run({"lc", "corpus:bowtie", "--l", "2"});
  EXPECT_NE(bow.out.find("i >= 0: 1\n"), std::string::npos);
  EXPECT_EQ(run({"lc", "corpus:bowtie", "--l", "9"}).code, 1);
}

TEST(Cli, QuotientLcReportsIsolatedDegrees) {
  auto r = run({"quotient-lc", "corpus:bowtie", "--m", "1", "--json", "-"});
  ASSERT_EQ(r.code, 0);
  auto j = Json::parse(r.out.substr(r.out.find("\n{") + 1));
  const auto& iso = j.at("quotient_lc").at("isolated");
  ASSERT_EQ(iso.size(), 1u);
  EXPECT_EQ(iso[0].at("degree0"), 1);
  EXPECT_EQ(iso[0].at("degree1"), 0);
  EXPECT_EQ(j.at("quotient_lc").at("flc"), true);
}

TEST(Cli, KernelsAgree) {
  auto r = run({"kernels", "corpus:suspended-bowtie", "--seed", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("MISMATCH"), std::string::npos);
}

TEST(Cli, VerifyExamples) {
  auto ok = run({"verify", "corpus:bowtie", "--m", "1", "--seed", "7"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("agree"), std::string::npos);
  EXPECT_EQ(run({"verify", "corpus:bowtie", "--m", "0"}).code, 0);
  auto bad = run({"verify", "corpus:nonpure-example", "--m", "1"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("purity required"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"analyze"}).code, 1);
  EXPECT_EQ(run({"analyze", "corpus:nope"}).code, 1);
  EXPECT_EQ(run({"analyze", "corpus:bowtie", "--field", "fp:4"}).code, 1);
  EXPECT_EQ(run({"verify", "corpus:bowtie", "--m", "7"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);

  auto bad = scratch("bad.facets");
  std::ofstream(bad) << "n 3\n1 2\n1 9\n";
  auto r = run({"analyze", bad.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);

  auto good = scratch("good.facets");
  std::ofstream(good) << "# bowtie\n1 2 3\n1 4 5\n";
  EXPECT_EQ(run({"analyze", good.string()}).code, 0);
}

TEST(Cli, CorpusListingAndSelftest) {
  auto list = run({"corpus"});
  EXPECT_EQ(list.code, 0);
  for (const auto& e : fixtures::corpus()) EXPECT_NE(list.out.find(e.name), std::string::npos);
  auto self = run({"corpus", "--selftest"});
  EXPECT_EQ(self.code, 0);
  EXPECT_NE(self.out.find("corpus selftest passed"), std::string::npos);
}

TEST(Cli, JsonRoundTrip) {
  std::vector<std::vector<std::string>> commands = {
      {"analyze", "corpus:torus-7"},
      {"lc", "corpus:bowtie"},
      {"quotient-lc", "corpus:bowtie", "--m", "1"},
      {"kernels", "corpus:bowtie", "--m", "1"},
      {"verify", "corpus:two-disjoint-edges", "--field", "q"},
  };
  for (auto cmd : commands) {
    cmd.push_back("--json");
    cmd.push_back("-");
    auto r = run(cmd);
    ASSERT_EQ(r.code, 0) << cmd[0];
    auto j = Json::parse(r.out.substr(r.out.find("\n{") + 1));
    auto back = to_json(report_from_json(j));
    EXPECT_EQ(back.dump(2), j.dump(2)) << cmd[0];
  }
}

TEST(Cli, RejectsUnknownSchemaVersion) {
  auto r = run({"analyze", "corpus:bowtie", "--json", "-"});
  auto j = Json::parse(r.out.substr(r.out.find("\n{") + 1));
  j["schema_version"] = 99;
  EXPECT_THROW(report_from_json(j), std::invalid_argument);
}

TEST(Cli, DeterministicJsonInProcess) {
  auto a = scratch("a.json"), b = scratch("b.json");
  ASSERT_EQ(run({"verify", "corpus:torus-7", "--seed", "11", "--json", a.string()}).code, 0);
  ASSERT_EQ(run({"verify", "corpus:torus-7", "--seed", "11", "--json", b.string()}).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(slurp(a).empty());
}

TEST(Cli, DeterministicJsonAcrossProcesses) {
  auto a = scratch("p1.json"), b = scratch("p2.json");
  const std::string bin = SRLC_BINARY;
  for (const auto& path : {a, b}) {
    std::string cmd = bin + " kernels corpus:suspended-bowtie --seed 5 --json " + path.string() + " > /dev/null";
    ASSERT_EQ(std::system(cmd.c_str()), 0);
  }
  EXPECT_EQ(slurp(a), slurp(b));
}
