// End-to-end tests of the lemnis executable: exit codes, outputs, config
// files and byte-identical reruns.

#include <json.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Result
{
  int code = -1;
  std::string out;
};

Result
run(const std::string& args)
{
  const std::string cmd = std::string(LEMNIS_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p)
    return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
    r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string
slurp(const fs::path& p)
{
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test
{
protected:
  void SetUp() override
  {
    dir = fs::temp_directory_path() /
          ("lemnis_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }

  std::string path(const std::string& name) const { return (dir / name).string(); }

  fs::path dir;
};

} // namespace

TEST_F(Cli, CertifyExitCodes)
{
  EXPECT_EQ(run("certify --family f3 --kappa 1.0 --eta 1.0 --c 1.0").code, 0);

  const auto f5 = run("certify --family f5 --c 1.0");
  EXPECT_EQ(f5.code, 1);
  const auto j = nlohmann::json::parse(f5.out);
  EXPECT_NEAR(j["s1"].get<double>(), 1.13935, 1e-5);
  EXPECT_EQ(j["family"], "f5");
  EXPECT_FALSE(j["certified"].get<bool>());

  EXPECT_EQ(run("certify --family f2 --b -1 --c 1").code, 2);
}

TEST_F(Cli, InvalidInputsExitTwo)
{
  EXPECT_EQ(run("certify --family f9").code, 2);
  EXPECT_EQ(run("certify --family f3 --eta 1").code, 2);             // kappa missing
  EXPECT_EQ(run("certify --family f1 --kappa 2").code, 2);           // stray parameter
  EXPECT_EQ(run("certify --family f1 --c 1.5").code, 2);
  EXPECT_EQ(run("certify --family f3 --kappa 1 --variant odd").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("threshold --name nope").code, 2);
  EXPECT_EQ(run("identity --lemma nope").code, 2);
  EXPECT_EQ(run("certify --config /nonexistent/file").code, 2);
}

TEST_F(Cli, CertifyWritesReportAndManifest)
{
  const auto out = path("cert.json");
  EXPECT_EQ(run("certify --family f6 --c 0.9 --out " + out + " --plot-data").code, 0);
  const auto j = nlohmann::json::parse(slurp(out));
  EXPECT_NEAR(j["s1"].get<double>(), 0.402721, 1e-6);
  EXPECT_TRUE(fs::exists(path("cert.margin.svg")));

  const auto m = nlohmann::json::parse(slurp(out + ".run.json"));
  EXPECT_EQ(m["command"], "certify");
  EXPECT_EQ(m["inputs"]["family"], "f6");
  EXPECT_EQ(m["inputs"]["c"], "0.9");
  EXPECT_FALSE(m["library_version"].get<std::string>().empty());
  EXPECT_TRUE(m["wall_time_ms"].is_number_integer());
  EXPECT_EQ(m["outputs"].size(), 2u);
}

TEST_F(Cli, ConfigFileSuppliesFlags)
{
  const auto cfg = path("run.cfg");
  std::ofstream(cfg) << "# certify F3\nfamily = f3\nkappa = 0.5\neta = 1.0\nc = 1.0\n";
  EXPECT_EQ(run("certify --config " + cfg).code, 1);
  EXPECT_EQ(run("certify --config " + cfg + " --kappa 2").code, 0); // command line wins
}

TEST_F(Cli, ComplexKappaUsesComplexVariant)
{
  const auto r = run("certify --family f3 --kappa 1.5 --kappa-im 0.5 --eta 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["variant"], "complex");
}

TEST_F(Cli, VerifyWithPlotData)
{
  const auto out = path("v.json");
  EXPECT_EQ(run("verify --family f3 --kappa 2 --eta 1 --c 1 --radii 0.9 0.99 --points 256 --plot-data --out " + out).code, 0);
  const auto j = nlohmann::json::parse(slurp(out));
  EXPECT_TRUE(j["passes"].get<bool>());
  EXPECT_EQ(j["samples"].get<int>(), 512);
  const auto csv = slurp(path("v.samples.csv"));
  EXPECT_EQ(csv.rfind("theta,r,lemniscate_value,re_w,im_w\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 513);
  EXPECT_NE(slurp(path("v.image.svg")).find("</svg>"), std::string::npos);
}

TEST_F(Cli, ThresholdNamedAndCustom)
{
  const auto r = run("threshold --name f2_lemniscate_b");
  EXPECT_EQ(r.code, 0);
  EXPECT_NEAR(nlohmann::json::parse(r.out)["root"].get<double>(), 3.11423, 1e-4);

  const auto c = run("threshold --family struve --free nu --target s2 --c 1 --lo -1.45 --hi 0");
  EXPECT_EQ(c.code, 0);
  EXPECT_NEAR(nlohmann::json::parse(c.out)["root"].get<double>(), -1.04226, 1e-4);

  EXPECT_EQ(run("threshold --family f2 --free b --target s1 --lo 4 --hi 5").code, 2); // no sign change
  EXPECT_EQ(run("threshold --list").code, 0);
}

TEST_F(Cli, TableCsv)
{
  const auto out = path("nu1.csv");
  EXPECT_EQ(run("table --out " + out).code, 0);
  std::istringstream in(slurp(out));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "c,nu1");
  int rows = 0;
  while (std::getline(in, line))
    ++rows;
  EXPECT_EQ(rows, 10);
}

TEST_F(Cli, ListOptionsAcceptCommas)
{
  const auto commas = run("table --c 0.5,1");
  EXPECT_EQ(commas.code, 0);
  EXPECT_EQ(commas.out, run("table --c 0.5 1").out);
  EXPECT_EQ(std::count(commas.out.begin(), commas.out.end(), '\n'), 3);
  EXPECT_EQ(run("verify --family f1 --radii 0.5,0.9 --points 256").code, 0);
}

TEST_F(Cli, IdentitySweep)
{
  EXPECT_EQ(run("identity --lemma basic1 --n-max 10000").code, 0);
  const auto all = run("identity");
  EXPECT_EQ(all.code, 0);
  EXPECT_EQ(nlohmann::json::parse(all.out)["results"].size(), 7u);
}

TEST_F(Cli, OutputsAreByteIdenticalAcrossRuns)
{
  for (const char* cmd : {"table", "identity", "constants"}) {
    const auto a = path(std::string(cmd) + "_a.out"), b = path(std::string(cmd) + "_b.out");
    run(std::string(cmd) + " --out " + a);
    run(std::string(cmd) + " --out " + b);
    ASSERT_TRUE(fs::exists(a) && fs::exists(b)) << cmd;
    EXPECT_EQ(slurp(a), slurp(b)) << cmd;
  }
}
