#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<const char*> args) {
  args.insert(args.begin(), "jhkit");
  std::ostringstream out, err;
  int code = jhkit::cli::run(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Reduce) {
  auto r = run({"reduce", "x y y^-1 x"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x^2\n");
}

TEST(Cli, Hopf) {
  auto r = run({"hopf", "--k", "2", "x^-1 y^-1 x y"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("x/\\x x/\\y y/\\y x/\\x^-1 y/\\x^-1 x/\\y^-1 y/\\y^-1 x/\\y"), std::string::npos);
  EXPECT_NE(r.out.find("{x/\\y:+1, y/\\x:-1}"), std::string::npos);
  auto left = run({"--order", "left", "hopf", "--k", "2", "x^-1 y^-1 x y"});
  EXPECT_NE(left.out.find("x/\\x x/\\y x/\\x^-1 x/\\y^-1 y/\\y y/\\x^-1 y/\\y^-1 x/\\y"), std::string::npos);
}

TEST(Cli, JsonOutput) {
  auto r = run({"--format", "json", "hopf", "--k", "2", "x y"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"abelianized\":{\"x/\\\\y\":1},\"hopf\":\"x/\\\\y\",\"k\":2,\"word\":\"x y\"}\n");
}

TEST(Cli, MagnusAndFox) {
  EXPECT_EQ(run({"magnus", "--trunc", "2", "x^-1"}).out, "1 - x + x.x\n");
  EXPECT_EQ(run({"fox", "--index", "x,y", "x^-1 y^-1 x y"}).out, "1\n");
}

TEST(Cli, Cohen) {
  EXPECT_EQ(run({"cohen", "eval", "(2,2,sigma=(1 2))", "x y"}).out, "y^-1 x^-1 y x\n");
}

TEST(Cli, Collect) {
  auto r = run({"collect", "--k", "2", "x y"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("remainder: b_x [b_x,a_y] b_y"), std::string::npos);
}

TEST(Cli, Verify) {
  auto r = run({"verify", "h2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("PASS h2", 0), 0u);
}

TEST(Cli, Errors) {
  auto r = run({"reduce", "x ^^"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("position 3"), std::string::npos);
  EXPECT_NE(run({"nosuch"}).code, 0);
  EXPECT_EQ(run({"verify", "nosuch"}).code, 2);
}
