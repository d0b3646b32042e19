#include <gtest/gtest.h>

#include <cstdlib>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "koscope/cli.hpp"
#include "koscope/ingest.hpp"
#include "support.hpp"
#include "text_util.hpp"

using namespace koscope;
using koscope::testing::data_path;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    static int n = 0;
    path_ = fs::temp_directory_path() /
            ("koscope_cli_" + std::to_string(::getpid()) + "_" + std::to_string(++n));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content) const {
    const auto p = path_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }
  std::string str() const { return path_.string(); }
  fs::path operator/(const std::string& s) const { return path_ / s; }

 private:
  fs::path path_;
};

nlohmann::json classify_json(std::vector<std::string> args) {
  args.insert(args.begin(), "classify");
  const auto r = run(args);
  EXPECT_EQ(r.code, kExitOk) << r.err;
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(CliClassify, FigureTagsAreR7) {
  const auto j = classify_json({"--tags", "NoCmMaSgNm AjBaNePlGe NoCmNePlGe"});
  EXPECT_EQ(j["outcome"], "Indivisible");
  EXPECT_EQ(j["rule_id"], "R7");
  EXPECT_EQ(j["pattern"], "N+Adj+N");
}

TEST(CliClassify, SingleNounIsR1) {
  EXPECT_EQ(classify_json({"--tags", "NoCmMaSgNm"})["rule_id"], "R1");
}

TEST(CliClassify, ConjunctionIsEnumeration) {
  const auto j = classify_json(
      {"άνδρες και γυναίκες", "--tags", "NoCmMaPlNm CjCo NoCmFePlNm", "--lemmas", "- και -"});
  EXPECT_EQ(j["outcome"], "Divisible");
  EXPECT_EQ(j["types"], nlohmann::json::array({"Enumeration"}));
  EXPECT_EQ(j["markers"][0]["kind"], "Conjunction");
}

TEST(CliClassify, BadTagExitsOne) {
  EXPECT_EQ(run({"classify", "--tags", "QqZz"}).code, kExitInput);
  EXPECT_EQ(run({"classify", "--tags", "NoCmMaSgQq"}).code, kExitInput);
  EXPECT_EQ(run({"classify", "a b", "--tags", "NoCmMaSgNm"}).code, kExitInput);
}

TEST(CliAnalyze, ThreeLinePlaintext) {
  TempDir d;
  const auto in = d.file("three.txt", "alpha\nbeta\n\ngamma\n");
  const auto r = run({"analyze", "-i", in, "--lang", "en"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["corpus_id"], "three");
  EXPECT_EQ(j["general"]["entries"], 3);
}

TEST(CliAnalyze, MissingInputExitsOne) {
  EXPECT_EQ(run({"analyze", "-i", "/nonexistent/input.txt"}).code, kExitInput);
}

TEST(CliAnalyze, ZeroTopKExitsTwo) {
  TempDir d;
  const auto in = d.file("a.txt", "x\n");
  EXPECT_EQ(run({"analyze", "-i", in, "--top-k", "0"}).code, kExitConfig);
}

TEST(CliAnalyze, ConfigErrors) {
  TempDir d;
  const auto in = d.file("a.txt", "x\n");
  EXPECT_EQ(run({"analyze", "-i", in, "--thresholds", "30,10"}).code, kExitConfig);
  EXPECT_EQ(run({"analyze", "-i", in, "--report-format", "xml"}).code, kExitConfig);
  EXPECT_EQ(run({"analyze", "-i", in, "--format", "bogus"}).code, kExitConfig);
  EXPECT_EQ(run({"analyze", "-i", in, "--lang", "!!"}).code, kExitConfig);
  EXPECT_EQ(run({"analyze", "-i", in, "--rules", "/nonexistent.rules"}).code, kExitConfig);
  EXPECT_EQ(run({"analyze", "-i", in, "--suggest"}).code, kExitConfig);
  EXPECT_EQ(run({"analyze", "-i", in, "--out", d.str(), "--suggest", "--base-iri", "x y"}).code,
            kExitConfig);
  EXPECT_EQ(run({"analyze"}).code, kExitConfig);
  EXPECT_EQ(run({}).code, kExitConfig);
  EXPECT_EQ(run({"frobnicate"}).code, kExitConfig);
}

TEST(CliAnalyze, WarningsKeepExitZero) {
  TempDir d;
  const auto in = d.file("w.txt", "ξξξ\n%%\n");
  const auto r = run({"analyze", "-i", in});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["general"]["entries"], 1);
  EXPECT_FALSE(j["diagnostics"].empty());
}

TEST(CliAnalyze, DeterministicBytes) {
  TempDir d;
  const std::vector<std::string> args = {"analyze", "-i", data_path("concepts20.ttl"),
                                         "--lexicon", data_path("greek.lex")};
  const auto a = run(args), b = run(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  auto threaded = args;
  threaded.insert(threaded.end(), {"--threads", "4"});
  EXPECT_EQ(run(threaded).out, a.out);
}

TEST(CliAnalyze, OutputFilesAndFormats) {
  TempDir d;
  const auto in = data_path("concepts20.ttl");
  for (const char* f : {"json", "csv", "markdown"})
    ASSERT_EQ(run({"analyze", "-i", in, "--lexicon", data_path("greek.lex"), "--out", d.str(),
                   "--report-format", f})
                  .code,
              kExitOk);
  EXPECT_TRUE(fs::exists(d / "concepts20.json"));
  EXPECT_TRUE(fs::exists(d / "concepts20.csv"));
  EXPECT_TRUE(fs::exists(d / "concepts20.md"));
}

TEST(CliAnalyze, PublishedAudit) {
  TempDir d;
  const auto in = d.file("p.txt", "alpha\nbeta\n");
  const auto pub = d.file("pub.tsv", "# figures\ngeneral.entries\t3\ngeneral.words\t2\n");
  const auto r = run({"analyze", "-i", in, "--published", pub});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  int mismatches = 0;
  for (const auto& diag : j["diagnostics"]) mismatches += diag["code"] == "published-mismatch";
  EXPECT_EQ(mismatches, 1);
  const auto bad = d.file("bad.tsv", "nonsense\t1\n");
  EXPECT_EQ(run({"analyze", "-i", in, "--published", bad}).code, kExitConfig);
  const auto huge = d.file("huge.tsv", "general.entries\t99999999999999999999999\n");
  EXPECT_EQ(run({"analyze", "-i", in, "--published", huge}).code, kExitConfig);
}

TEST(CliAnalyze, ConfigFileAndFlagOverride) {
  TempDir d;
  const auto in = d.file("c.txt", "a\nb\nc\n");
  const auto cfg = d.file("k.toml", "[analyze]\ntop-k = 1\nlang = \"en\"\n");
  auto r = run({"--config", cfg, "analyze", "-i", in});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["pattern_table"]["rows"].size(), 1u);
  r = run({"--config", cfg, "analyze", "-i", in, "--top-k", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["settings"]["top_k"], 5);
}

TEST(CliRules, EnvironmentDefault) {
  TempDir d;
  const auto rules = d.file("only.rules", "rule\tONLY\tWord\n");
  ::setenv("KOSCOPE_RULES", rules.c_str(), 1);
  const auto j = classify_json({"--tags", "NoCmMaSgNm"});
  const auto dumped = run({"dump-rules"});
  ::unsetenv("KOSCOPE_RULES");
  EXPECT_EQ(j["rule_id"], "ONLY");
  EXPECT_EQ(dumped.out, "rule\tONLY\tWord\n");
}

TEST(CliRules, DumpIsReparseable) {
  const auto r = run({"dump-rules"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(RuleSet::parse(r.out), RuleSet::builtin());
}

TEST(CliTag, WritesTokenAndVerdictTables) {
  TempDir d;
  const auto r = run({"tag", "-i", data_path("concepts20.ttl"), "--lexicon", data_path("greek.lex"),
                      "--out", d.str()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto tokens = text_util::read_file((d / "concepts20.tokens.tsv").string());
  const auto verdicts = text_util::read_file((d / "concepts20.verdicts.tsv").string());
  EXPECT_EQ(tokens.rfind(std::string(kTokenTsvHeader), 0), 0u);
  EXPECT_EQ(verdicts.rfind(std::string(kVerdictTsvHeader), 0), 0u);
  // the token table is valid pre-tagged input
  const auto again = run({"analyze", "-i", (d / "concepts20.tokens.tsv").string()});
  EXPECT_EQ(again.code, kExitOk) << again.err;
}

TEST(CliSuggest, WritesProposals) {
  TempDir d;
  const auto r = run({"suggest", "-i", data_path("concepts20.ttl"), "--lexicon",
                      data_path("greek.lex"), "--out", d.str(), "--base-iri", "http://p.org/"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(fs::exists(d / "concepts20.proposals.nt"));
  EXPECT_TRUE(fs::exists(d / "concepts20.proposals.json"));
  EXPECT_EQ(run({"suggest", "-i", data_path("concepts20.ttl"), "--base-iri", "nope"}).code,
            kExitConfig);
}

TEST(CliHelp, ExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("analyze"), std::string::npos);
}
