#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Run {
  int status = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("twistder_cli_" + name)).string();
}

// args are passed through the shell; callers quote anything with braces
Run run(const std::string& args) {
  auto err_path = temp_path("stderr.txt");
  std::string cmd = std::string(TWISTDER_CLI) + " " + args + " 2>" + err_path;
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.err = slurp(err_path);
  return r;
}

json result_of(const Run& r) {
  EXPECT_EQ(r.status, 0) << r.err;
  return json::parse(r.out)["result"];
}

void expect_error(const std::string& args, int code, const std::string& kind) {
  auto r = run(args);
  EXPECT_EQ(r.status, code) << args;
  EXPECT_TRUE(r.out.empty());
  auto j = json::parse(r.err);
  EXPECT_EQ(j["error"], kind) << r.err;
  EXPECT_EQ(j["exit_code"], code);
}

}  // namespace

TEST(Cli, ClassesS3) {
  auto res = result_of(run("classes --group builtin:s3 --sigma id --tau id"));
  EXPECT_EQ(res["count"], 3);
  EXPECT_EQ(res["sizes"], json::parse("[1,2,3]"));
}

TEST(Cli, CenterQ8) {
  auto res = result_of(run("center --group builtin:quaternion8 --sigma id --tau id"));
  EXPECT_EQ(res["elements"].size(), 2u);
}

TEST(Cli, HeisenbergSingletonClass) {
  auto r = run("classes --group builtin:heisenberg_Z --sigma 'inner:[2,3,0]' --tau 'inner:[2,3,1]' --radius 3 --element '[0,0,5]'");
  auto res = result_of(r);
  ASSERT_EQ(res["classes"].size(), 1u);
  EXPECT_EQ(res["classes"][0]["size"], 1);
  EXPECT_EQ(res["classes"][0]["truncated"], false);
  EXPECT_EQ(json::parse(r.out)["radius"], 3);
}

TEST(Cli, Centralizers) {
  auto res = result_of(run("centralizers --group builtin:s3 --element 1"));
  ASSERT_TRUE(res.is_object() || res.is_array());
  EXPECT_NE(run("centralizers --group builtin:s3 --element 1").out.find("centralizer"), std::string::npos);
}

TEST(Cli, GroupInfo) {
  auto r = run("group-info --group builtin:d4");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["group"]["order"], 8);
}

TEST(Cli, DerivationsDim) {
  EXPECT_EQ(result_of(run("derivations dim --group builtin:s3 --sigma id --tau id"))["dimension"], 3);
}

TEST(Cli, DerivationsBasisAndCheckInner) {
  auto basis_path = temp_path("basis.json");
  auto r = run("derivations basis --group builtin:s3 --output " + basis_path);
  ASSERT_EQ(r.status, 0) << r.err;
  auto report = json::parse(slurp(basis_path));
  auto basis = report["result"]["basis"];
  ASSERT_EQ(basis.size(), 3u);
  auto d_path = temp_path("d0.json");
  std::ofstream(d_path) << basis[0].dump();
  auto res = result_of(run("derivations check-inner --group builtin:s3 --derivation " + d_path));
  EXPECT_EQ(res["inner"], true);
}

TEST(Cli, VerifyDecompositionQ8) {
  auto res = result_of(run("derivations verify-decomposition --group builtin:quaternion8 --sigma inner:i --tau inner:j"));
  EXPECT_EQ(res["dims_match"], true);
  EXPECT_EQ(res["dim_der"], res["dim_inn"]);
}

TEST(Cli, CentralHeisenberg) {
  auto res = result_of(
      run("derivations central --group builtin:heisenberg_Z --params 2,3,0,1 --mu 1 --nu 0 --r 4 --check-radius 3"));
  EXPECT_EQ(res["leibniz"]["leibniz_ok"], true);
  EXPECT_EQ(res["quasi"]["quasi_inner"], false);
  EXPECT_EQ(res["closed_form_agrees"], true);
}

TEST(Cli, QuasiInnerFromPotential) {
  auto p = temp_path("potential.json");
  std::ofstream(p) << R"({"terms":[{"elem":1,"re":"1"},{"elem":3,"re":"-1/2","im":"2"}]})";
  auto res = result_of(run("derivations quasi-inner --group builtin:s3 --sigma inner:1 --potential " + p));
  EXPECT_EQ(res["leibniz"]["leibniz_ok"], true);
  EXPECT_EQ(res["quasi"]["quasi_inner"], true);
}

TEST(Cli, GroupoidExport) {
  auto trivial = run("groupoid-export --group builtin:trivial --format dot");
  ASSERT_EQ(trivial.status, 0);
  EXPECT_NE(trivial.out.find("n0 -> n0"), std::string::npos);
  auto s3 = run("groupoid-export --group builtin:s3 --format dot");
  EXPECT_NE(s3.out.find("cluster_2"), std::string::npos);
  EXPECT_EQ(s3.out.find("cluster_3"), std::string::npos);
  auto c4 = run("groupoid-export --group builtin:c4 --sigma 'images:{1:2}' --format dot");
  EXPECT_NE(c4.out.find("cluster_0"), std::string::npos);
  EXPECT_EQ(c4.out.find("cluster_1"), std::string::npos);
  auto h = run("groupoid-export --group builtin:heisenberg_Z --radius 1 --format dot");
  EXPECT_EQ(h.status, 0);
}

TEST(Cli, TextFormat) {
  auto r = run("center --group builtin:s3 --format text");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("result.size = 1"), std::string::npos);
}

TEST(Cli, ErrorExits) {
  expect_error("classes --group builtin:nosuch", 2, "SpecError");
  expect_error("classes --group builtin:s3 --sigma 'images:{1:3,2:1}'", 2, "NotAHomomorphism");
  expect_error("classes --group builtin:s3 --element 9", 2, "SpecError");
  expect_error("derivations dim --group builtin:c65", 3, "GroupTooLarge");
  expect_error("groupoid-export --group builtin:heisenberg_Z --format dot", 3, "ScopeExceeded");
  expect_error("derivations dim --group builtin:heisenberg_Z", 3, "NotSupportedForScope");
  auto d = temp_path("bad_derivation.json");
  std::ofstream(d) << R"({"D":{"1":{"terms":[{"elem":0,"re":"1"}]}}})";
  expect_error("derivations check-inner --group builtin:s3 --derivation " + d, 4, "NotADerivation");
  auto missing = run("classes");
  EXPECT_NE(missing.status, 0);
  EXPECT_TRUE(json::accept(missing.err));
}

TEST(Cli, Determinism) {
  const std::vector<std::string> commands = {
      "group-info --group builtin:q8",
      "classes --group builtin:s3 --sigma id --tau id",
      "centralizers --group builtin:d4 --sigma inner:1 --tau inner:2",
      "center --group builtin:quaternion8 --sigma id --tau id",
      "groupoid-export --group builtin:s3 --format dot",
      "derivations dim --group builtin:s3",
      "derivations basis --group builtin:q8 --sigma inner:i",
      "derivations verify-decomposition --group builtin:quaternion8 --sigma inner:i --tau inner:j",
      "derivations central --group builtin:heisenberg_Z --params 2,3,0,1 --mu 1 --nu 0 --r 4 --check-radius 2",
  };
  for (const auto& c : commands) {
    auto a = run(c), b = run(c);
    EXPECT_EQ(a.status, 0) << c << a.err;
    EXPECT_EQ(a.out, b.out) << c;
  }
}
