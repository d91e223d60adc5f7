#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "diq/cli.hpp"
#include "diq/ideal_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("diqloc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  Result shell(const std::string& args) {
    const std::string cmd = std::string(DIQLOC_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
  }

  Result in_process(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = diq::cli::run(args, out, err);
    return {code, out.str()};
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, GroebnerBasis) {
  auto i = file("tc.ideal", "ring x,y,z\nx^2 - y\nx^3 - z\n");
  Result r = shell("gb --ideal " + i + " --order lex");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "ring x,y,z\nx^2 - y\nx*y - z\nx*z - y^2\ny^3 - z^2\n");
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(shell("gb --order lex").code, 2);
  EXPECT_EQ(shell("").code, 2);
  EXPECT_EQ(shell("frobnicate").code, 2);
  auto bad = file("bad.ideal", "ring x,y\nx y\n");
  EXPECT_EQ(shell("gb --ideal " + bad).code, 2);
  auto a = file("a.ideal", "ring x,y\nx\n");
  auto b = file("b.ideal", "ring x,z\nx\n");
  EXPECT_EQ(shell("quotient --ideal " + a + " --by " + b).code, 2);
}

TEST_F(Cli, LpaIsolatedOnI1) {
  auto i = file("i1.ideal", "");
  {
    Result c = shell("corpus --i1 100");
    ASSERT_EQ(c.code, 0);
    std::ofstream(i) << c.out;
  }
  auto p = file("p_x.ideal", "ring x,y,z\nx\n");
  Result r = shell("lpa --ideal " + i + " --prime " + p + " --inline");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(x^2)\n");
}

TEST_F(Cli, AssqNegativeVerdict) {
  auto i = file("i.ideal", "ring x,y\nx^2\nx*y\n");
  auto py = file("py.ideal", "ring x,y\ny\n");
  auto px = file("px.ideal", "ring x,y\nx\n");
  Result r = shell("assq --ideal " + i + " --prime " + py);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("not a prime divisor"), std::string::npos);
  EXPECT_EQ(shell("assq --ideal " + i + " --prime " + px).code, 0);
  EXPECT_EQ(shell("assq --test saturation --ideal " + i + " --prime " + py).code, 1);
}

TEST_F(Cli, DivisorClassificationAndComponents) {
  auto i = file("i.ideal", "ring x,y\nx^2\nx*y\n");
  auto px = file("px.ideal", "ring x,y\nx\n");
  auto pxy = file("pxy.ideal", "ring x,y\nx\ny\n");
  auto q = file("q.ideal", "ring x,y\nx^2\ny\n");
  EXPECT_EQ(shell("isolatedq --ideal " + i + " --prime " + px).code, 0);
  Result e = shell("isolatedq --ideal " + i + " --prime " + pxy);
  EXPECT_EQ(e.code, 1);
  EXPECT_EQ(e.out, "embedded divisor\n");
  EXPECT_EQ(shell("componentq --ideal " + i + " --prime " + pxy + " --component " + q +
                  " --criterion general").code,
            0);
  EXPECT_EQ(shell("componentq --ideal " + i + " --prime " + pxy + " --component " + pxy +
                  " --criterion general").code,
            2);
  Result l = shell("lpa --ideal " + i + " --prime " + pxy + " --strategy pm --certificates");
  EXPECT_EQ(l.code, 0);
  EXPECT_NE(l.out.find("# criterion-5 pass"), std::string::npos);
  EXPECT_NE(l.out.find("m=2"), std::string::npos);
  EXPECT_EQ(l.out.substr(l.out.find("ring")), "ring x,y\nx^2\nx*y\ny^2\n");
  EXPECT_EQ(shell("lpa --ideal " + i + " --prime " + pxy + " --mmax 1").code, 3);
}

TEST_F(Cli, IdealCalculus) {
  auto i = file("i.ideal", "ring x,y\nx^2\nx*y\n");
  auto pxy = file("pxy.ideal", "ring x,y\nx\ny\n");
  auto px = file("px.ideal", "ring x,y\nx\n");
  auto q = file("q.ideal", "ring x,y\nx^2\ny\n");
  EXPECT_EQ(shell("quotient --ideal " + i + " --by " + pxy + " --inline").out, "(x)\n");
  EXPECT_EQ(shell("saturate --ideal " + i + " --by " + pxy + " --inline").out, "(x)\n");
  EXPECT_EQ(shell("intersect --ideal " + px + " --with " + q + " --inline").out, "(x^2, x*y)\n");
  EXPECT_EQ(shell("diq --ideal " + i + " --by " + px + " --inline").out, "(x)\n");
  EXPECT_EQ(shell("satquot --variant 2 --ideal " + i + " --by " + px + " --inline").out,
            "(x^2, x*y)\n");
  EXPECT_EQ(shell("satquot --variant 4 --ideal " + i + " --by " + px).code, 2);
  EXPECT_EQ(shell("hull --ideal " + i + " --inline").out, "(x)\n");
  EXPECT_EQ(shell("hull --method mis --prime " + px + " --ideal " + i + " --inline").out, "(x)\n");
  EXPECT_EQ(shell("dim --ideal " + i).out, "dimension 1\nindependent y\n");
  EXPECT_EQ(shell("mis --ideal " + i).out, "y\n");
  EXPECT_EQ(shell("nf --ideal " + q + " --poly 'x^3 + y*x + 1'").out, "1\n");
  auto tc = file("tc.ideal", "ring x,y,z\nx^2 - y\nx^3 - z\n");
  EXPECT_EQ(shell("eliminate --ideal " + tc + " --vars x --inline").out, "(y^3 - z^2)\n");
  EXPECT_EQ(shell("localize --ideal " + i + " --prime " + px + " --prime " + pxy + " --inline").out,
            "(x^2, x*y)\n");
  EXPECT_EQ(shell("localize --ideal " + i + " --by-element y --inline").out, "(x)\n");
}

TEST_F(Cli, CorpusExportRoundTrips) {
  Result list = in_process({"corpus", "--list"});
  EXPECT_EQ(list.code, 0);
  EXPECT_GE(std::count(list.out.begin(), list.out.end(), '\n'), 20);
  const std::string out_dir = (dir_ / "corpus").string();
  EXPECT_EQ(in_process({"corpus", "--out", out_dir}).code, 0);
  int files = 0;
  for (const auto& entry : fs::directory_iterator(out_dir)) {
    diq::Ideal i = diq::read_ideal_file(entry.path());
    EXPECT_EQ(in_process({"gb", "--ideal", entry.path().string()}).out, diq::format_ideal(i));
    ++files;
  }
  EXPECT_GT(files, 60);
}

TEST_F(Cli, OutputIsDeterministic) {
  auto i = file("i.ideal", "ring x,y,z\nx^2*z\nx*y*z\nx^3\n");
  auto p = file("p.ideal", "ring x,y,z\nx\ny\n");
  const std::string args = "lpa --ideal " + i + " --prime " + p + " --strategy pm --certificates";
  Result a = shell(args);
  Result b = shell(args);
  EXPECT_EQ(a.code, b.code);
  EXPECT_EQ(a.out, b.out);
}
