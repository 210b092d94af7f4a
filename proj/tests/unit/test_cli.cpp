#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(LIESUB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = fs::temp_directory_path() / ("liesub_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    db_ = (dir_ / "a2.json").string();
    ASSERT_EQ(run("classify --type A2 --out " + db_).code, 0);
  }
  static void TearDownTestSuite() { fs::remove_all(dir_); }
  static inline fs::path dir_;
  static inline std::string db_;
};

}  // namespace

TEST_F(Cli, ClassifyWritesThreeClasses) {
  const auto j = nlohmann::json::parse(slurp(db_));
  EXPECT_EQ(j["classes"].size(), 3u);
  EXPECT_TRUE(j["complete"].get<bool>());
}

TEST_F(Cli, ListShowsIndicesAndAmbientDash) {
  const auto r = run("query --db " + db_ + " list");
  EXPECT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string header, l1, l2, l3;
  std::getline(in, header);
  std::getline(in, l1);
  std::getline(in, l2);
  std::getline(in, l3);
  EXPECT_NE(l1.find("A1"), std::string::npos);
  EXPECT_NE(l1.find(" 1 "), std::string::npos);
  EXPECT_NE(l2.find(" 4 "), std::string::npos);
  EXPECT_NE(l3.find("A2"), std::string::npos);
  EXPECT_NE(l3.find(" - "), std::string::npos);
}

TEST_F(Cli, EquivAndIncludes) {
  EXPECT_EQ(run("query --db " + db_ + " equiv 1 1").out, "yes\n");
  EXPECT_EQ(run("query --db " + db_ + " equiv 1 2").out, "no\n");
  EXPECT_EQ(run("query --db " + db_ + " includes 1 3").out.substr(0, 4), "yes\n");
  EXPECT_EQ(run("query --db " + db_ + " includes 3 1").out, "no\n");
  EXPECT_EQ(run("query --db " + db_ + " includes 1 2").out, "no\n");
}

TEST_F(Cli, ChainRealization) {
  const auto r = run("query --db " + db_ + " chain 2 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("2 A1"), std::string::npos);
  EXPECT_NE(r.out.find("3 A2"), std::string::npos);
  EXPECT_EQ(run("query --db " + db_ + " chain 3 1").code, 1);
  const auto j = run("query --db " + db_ + " chain 1 3 --json");
  EXPECT_EQ(nlohmann::json::parse(j.out).size(), 2u);
}

TEST_F(Cli, UnknownIdExitsFour) {
  EXPECT_EQ(run("query --db " + db_ + " equiv 1 99").code, 4);
  EXPECT_EQ(run("query --db " + db_ + " includes 0 1").code, 4);
}

TEST_F(Cli, VerifyAcceptsAndRejects) {
  EXPECT_EQ(run("verify --db " + db_).code, 0);

  auto j = nlohmann::json::parse(slurp(db_));
  auto tampered = j;
  tampered["classes"][1]["hpart"][0][0] = "3";
  const auto bad = (dir_ / "tampered.json").string();
  std::ofstream(bad) << tampered.dump();
  EXPECT_NE(run("verify --db " + bad).code, 0);

  auto dup = j;
  dup["classes"][1]["gens"] = dup["classes"][0]["gens"];
  dup["classes"][1]["hpart"] = dup["classes"][0]["hpart"];
  dup["classes"][1]["indices"] = dup["classes"][0]["indices"];
  const auto dpath = (dir_ / "dup.json").string();
  std::ofstream(dpath) << dup.dump();
  EXPECT_NE(run("verify --db " + dpath).code, 0);

  const auto garbage = (dir_ / "garbage.json").string();
  std::ofstream(garbage) << "{not json";
  EXPECT_EQ(run("verify --db " + garbage).code, 1);
}

TEST_F(Cli, ByteIdenticalRuns) {
  const auto a = (dir_ / "b2a.json").string();
  const auto b = (dir_ / "b2b.json").string();
  ASSERT_EQ(run("classify --type B2 --out " + a).code, 0);
  ASSERT_EQ(run("classify --type B2 --jobs 2 --out " + b).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(run("export --db " + a).out, run("export --db " + b).out);
}

TEST_F(Cli, BadArgumentsFail) {
  EXPECT_NE(run("classify --type X9 --out " + (dir_ / "x.json").string()).code, 0);
  EXPECT_NE(run("query --db " + db_).code, 0);
}
