#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = oml::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  std::string path = "oml_cli_test_" + name + ".txt";
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("reduce") {
  Run r = cli({"reduce", "(av(-a^(avb)))"});
  CHECK(r.code == 0);
  CHECK(r.out == "48\t-\t(avb)\n");
  r = cli({"reduce", "((aIb)=(((a^b)v(a^-b))v((-a^b)v(-a^-b))))"});
  CHECK(r.out == "80\t30\t((((-(avb)vb)^-a)va)^(-avb))\n");
  r = cli({"--format", "json", "reduce", "a"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["beran"] == 22);
  CHECK(j["text"] == "a");
}

TEST_CASE("parse errors exit 2 with a caret") {
  Run r = cli({"reduce", "(av"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("offset 3") != std::string::npos);
  CHECK(r.err.find("\n     ^") != std::string::npos);
  CHECK(cli({"reduce", "(avc)"}).code == 2);
  CHECK(cli({"check", "--model", "mo2", "--cond", "a = "}).code == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"count", "1", "0"}).code == 2);
  CHECK(cli({"check", "--model", "nope", "--cond", "a = a"}).code == 2);
  CHECK(cli({"search", "--vars", "2", "--ops", "u9"}).code == 2);
  CHECK(cli({"--threads", "0", "count", "2", "0"}).code == 2);
}

TEST_CASE("help lists the notation") {
  Run r = cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Expression notation") != std::string::npos);
  CHECK(r.out.find("xCy") != std::string::npos);
}

TEST_CASE("count") {
  CHECK(cli({"count", "7", "0"}).out == "16896\n");
}

TEST_CASE("check") {
  Run r = cli({"check", "--model", "mo2", "--cond", "((au1b)u1c) = (au1(bu1c))"});
  CHECK(r.code == 1);
  CHECK(r.out == "fail\ta=x b=y c=x'\n");
  r = cli({"check", "--model", "mo2", "--cond", "aCb & aCc => ((au1b)u1c) = (au1(bu1c))"});
  CHECK(r.code == 0);
  CHECK(r.out == "pass\n");
  r = cli({"--format", "json", "check", "--model", "o6", "--cond", "a < b => (av(-a^b)) = b"});
  CHECK(r.code == 1);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "fail");
  CHECK(j["counterexample"] == "a=p b=q");
}

TEST_CASE("search") {
  Run r = cli({"search", "--vars", "5", "--negs", "2", "--ops", ">1,>2,>3,>4,>5", "--target", "(avb)"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "((((-a>1-b)>1b)>1a)>1a)\t48,48,48,48,48\n((((-b>1-a)>1a)>1b)>1b)\t48,48,48,48,48\ntotal 2\n");
  r = cli({"search", "--minimal", "--ops", "u1,u2,u3,u4,u5", "--target", "(avb)"});
  CHECK(r.out.rfind("vars 5 negs 3 raw 4 collapsed 2\n", 0) == 0);
  r = cli({"search", "--vars", "2", "--ops", "v"});
  CHECK(r.out.find("total 4") != std::string::npos);
  CHECK(cli({"search", "--minimal", "--ops", "u1"}).code == 2);
}

TEST_CASE("scan-distrib") {
  CHECK(cli({"scan-distrib", "--model", "mo2"}).out == "1 0 1 0 1\n");
  CHECK(cli({"scan-distrib", "--model", "mo2", "--dual"}).out == "1 0 1 0 1\n");
}

TEST_CASE("greechie") {
  std::string two = temp_file("two", "1 2 3\n3 4 5\n");
  Run r = cli({"greechie", "--file", two, "--check-oml"});
  CHECK(r.code == 0);
  CHECK(r.out == "elements 12\nlattice yes\northolattice yes\northomodular yes\n");
  std::string tri = temp_file("tri", "1 2 3\n3 4 5\n5 6 1\n");
  r = cli({"greechie", "--file", tri, "--check-oml"});
  CHECK(r.code == 1);
  CHECK(r.out.find("lattice no") != std::string::npos);
  CHECK(r.out.find("reason") != std::string::npos);
  CHECK(cli({"greechie", "--file", tri}).code == 0);
  r = cli({"greechie", "--generate", "5", "2"});
  CHECK(r.out == "1 2 5\n3 4 5\n");
  CHECK(cli({"greechie"}).code == 2);
  CHECK(cli({"greechie", "--file", "/nonexistent/diagram"}).code == 2);
  std::remove(two.c_str());
  std::remove(tri.c_str());
}

TEST_CASE("catalog") {
  Run r = cli({"catalog", "run", "--models", "mo2,o6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("mismatches 0") != std::string::npos);
  r = cli({"catalog", "run", "--models", "mo2", "--report", "json"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["mismatches"] == 0);
  Run list = cli({"catalog", "list"});
  CHECK(list.out.find("sym-identity/distributive\tunknown") != std::string::npos);
}

TEST_CASE("output does not depend on the thread count") {
  for (std::vector<std::string> args : {std::vector<std::string>{"scan-distrib", "--model", "bool:2"},
                                         std::vector<std::string>{"catalog", "run", "--models", "mo2,o6,bool:2"}}) {
    std::vector<std::string> one = {"--threads", "1"}, four = {"--threads", "4"};
    one.insert(one.end(), args.begin(), args.end());
    four.insert(four.end(), args.begin(), args.end());
    CHECK(cli(one).out == cli(four).out);
  }
}

TEST_CASE("expressions starting with a complement") {
  CHECK(cli({"reduce", "-(a>1b)"}).out == "14\t-\t(-(a^b)^a)\n");
  CHECK(cli({"reduce", "--a"}).out == "20\t22\ta\n");
  CHECK(cli({"check", "--model", "mo2", "--cond", "-a = ---a"}).out == "pass\n");
  Run r = cli({"search", "--minimal", "--ops", "u1", "--target", "-(-a^-b)"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("vars", 0) == 0);
}
