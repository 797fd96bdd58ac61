#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "fsg/graph.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run fs(const std::string& args) {
  const std::string cmd = std::string(FS_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, Components) {
  const auto r = fs("components 'star(4)' 'tad(3,1)'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"n\":4,\"total\":24,\"components\":3,\"sizes\":{\"8\":3}}\n");
}

TEST(Cli, ConnectedExitCodes) {
  EXPECT_EQ(fs("connected 'spider(2,2,1,1)' 'comp(cycle(7))'").code, 0);
  EXPECT_EQ(fs("connected 'star(4)' 'tad(3,1)'").code, 1);
  EXPECT_EQ(fs("connected 'path(3)' 'path(4)'").code, 2);
  EXPECT_EQ(fs("connected 'path(3' 'path(3)'").code, 2);
  EXPECT_EQ(fs("bogus").code, 2);
  EXPECT_EQ(fs("--max-n 5 components 'path(6)' 'path(6)'").code, 3);
}

TEST(Cli, Certificate) {
  EXPECT_EQ(fs("cert 'cycle(5)' 'cycle(5)'").out, "none\n");
  const auto r = fs("cert 'path(5)' 'cycle(5)'");
  const auto j = fsg::Json::parse(r.out);
  EXPECT_EQ(j["kind"], "cut-path");
  EXPECT_EQ(j["d"], j["path"].size());
}

TEST(Cli, VerifyDocument) {
  const auto r = fs("verify all --max-n 7 --samples 5 --no-timing");
  EXPECT_EQ(r.code, 0);
  const auto j = fsg::Json::parse(r.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["reports"].size(), 10u);
  EXPECT_FALSE(j["reports"][0].contains("elapsed_ms"));
  EXPECT_EQ(fs("verify nothing").code, 2);
}

TEST(Cli, ExploreCsv) {
  const auto r = fs("--max-n 5 explore --min-n 5 spider comp:cycle");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n') + 1),
            "x_spec,y_spec,n,connected,num_components,largest_component\r\n");
  // Spec strings with commas are quoted.
  EXPECT_NE(r.out.find("\"spider(2,1,1)\",comp(cycle(5)),5,"), std::string::npos);
}

TEST(Cli, ExploreReportsResourceErrorsPerRow) {
  const auto r = fs("--max-n 6 --memory-limit 2KB explore --min-n 6 path cycle");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("path(6),cycle(6),6,error,,\r\n"), std::string::npos);
}

TEST(Cli, Neighbours) {
  EXPECT_EQ(fs("neighbors 'path(3)' 'cycle(3)' '[1,2,3]'").out, "[[2,1,3],[1,3,2]]\n");
  EXPECT_EQ(fs("neighbors 'path(3)' 'cycle(3)' '[1,2]'").code, 2);
}

TEST(Cli, EnvironmentFallback) {
  EXPECT_EQ(fs("components 'path(6)' 'path(6)'").code, 0);
  const auto r = fs("components 'path(6)' 'path(6)'");
  const std::string cmd = "FS_MAX_N=5 " + std::string(FS_BINARY) +
                          " components 'path(6)' 'path(6)' >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 3);
  EXPECT_FALSE(r.out.empty());
}
