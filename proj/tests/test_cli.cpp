#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "superspace/cli.hpp"

using namespace superspace;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("dims") {
  auto r = run({"dims", "--m", "2", "--n", "1", "--max-k", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2\t8\t7\t") != std::string::npos);
  auto j = run({"dims", "--m", "2", "--n", "1", "--max-k", "4", "--format", "json"});
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["rows"][2]["dimH"] == 7);
  CHECK(doc["rows"][2]["irrepSum"] == 7);
  CHECK(doc["rows"].size() == 5);
}

TEST_CASE("laplace") {
  CHECK(run({"laplace", "--m", "0", "--n", "1", "e1*e2"}).out == "-4\n");
  CHECK(run({"laplace", "--m", "2", "--n", "1", "--part", "b", "x1^2 + e1*e2"}).out == "-2\n");
  CHECK(run({"laplace", "--m", "2", "--n", "1"}, "x1^2*x2\n").out == "-2*x2\n");
  auto json_in = R"({"m":1,"n":0,"terms":[{"coeff":"1","bos":[3],"ferm":[]}]})";
  auto r = run({"laplace", "--m", "1", "--n", "0", "--format", "json", json_in});
  CHECK(nlohmann::json::parse(r.out)["terms"][0]["coeff"] == "-6");
}

TEST_CASE("fischer") {
  auto r = run({"fischer", "--m", "3", "--n", "1", "--format", "json", "--", "-x1^3 - x1*x2^2 - x1*x3^2 + x1*e1*e2"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["k"] == 3);
  CHECK(doc["components"][0]["i"] == 1);
  auto multi = run({"fischer", "--m", "3", "--n", "1", "--format", "json", "x1 + x1*x2"});
  CHECK(nlohmann::json::parse(multi.out).is_array());
  CHECK(run({"fischer", "--m", "2", "--n", "1", "x1*x2"}).code == 2);
  auto text = run({"fischer", "--m", "3", "--n", "1", "x1*x2"});
  CHECK(text.out == "k = 2\n  i = 0: x1*x2\n");
}

TEST_CASE("irreps") {
  auto r = run({"irreps", "--m", "2", "--n", "1", "x1^2 - x2^2"});
  CHECK(r.out == "(l,p,q) = (0,2,0): x1^2 - x2^2\n");
  auto j = run({"irreps", "--m", "2", "--n", "1", "--format", "json", "--", "-x1^2 - x2^2 + e1*e2"});
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc[0]["l"] == 1);
  CHECK(run({"irreps", "--m", "3", "--n", "1", "x1^2"}).code == 1);
}

TEST_CASE("integrals") {
  auto p = run({"pizzetti", "--m", "2", "--n", "1", "1"});
  CHECK(p.code == 2);
  CHECK(p.err.find("error") != std::string::npos);
  CHECK(run({"pizzetti", "--m", "3", "--n", "0", "1"}).out == "4*pi\n");
  auto b = run({"berezin", "--m", "0", "--n", "1", "--format", "json", "e1*e2"});
  CHECK(nlohmann::json::parse(b.out) == nlohmann::json::parse(R"({"coeff":"1","halfPiExp":-2})"));
  CHECK(run({"berezin", "--m", "0", "--n", "1", "--route", "laplace", "e1*e2"}).out == "1*pi^(-1)\n");
  CHECK(run({"sphere", "--m", "3", "--n", "1", "--weights", "0,1", "--", "-x1^2 - x2^2 - x3^2 + 3/2*e1*e2"}).out == "1\n");
  CHECK(run({"sphere", "--m", "3", "--n", "1", "--integral-one", "--", "-x1^2 - x2^2 - x3^2 + 3/2*e1*e2"}).out == "1\n");
  auto s = run({"sphere", "--m", "3", "--n", "1", "--format", "json", "--weights", "2, 1/2", "1"});
  CHECK(nlohmann::json::parse(s.out)["value"] == "2");
  CHECK(run({"sphere", "--m", "3", "--n", "1", "--weights", "1", "1"}).code == 1);
}

TEST_CASE("errors") {
  auto r = run({"laplace", "--m", "2", "--n", "0", "x1 + x3"});
  CHECK(r.code == 1);
  CHECK(r.err.find("position 5") != std::string::npos);
  CHECK(run({"laplace", "--n", "0", "x1"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"laplace", "--m", "1", "--n", "0", "--input", "/nonexistent/file"}).code == 1);
  CHECK(run({"laplace", "--m", "1", "--n", "0", R"({"m":2,"n":0,"terms":[]})"}).code == 1);
  CHECK(run({"dims", "--help"}).code == 0);
}

TEST_CASE("verify single criterion") {
  auto r = run({"verify", "--only", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS C05", 0) == 0);
}
