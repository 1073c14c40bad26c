#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "threshspec/cli.hpp"

using threshspec::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("charpoly") {
    auto r = invoke({"charpoly", "010101"});
    CHECK(r.code == 0);
    CHECK(r.out == "-1,4,3,-10,-9,0,1\n");
    r = invoke({"charpoly", "0^2 1^3 0^3 1^2"});
    CHECK(r.out == "0,0,0,36,110,94,-21,-66,-26,0,1\n");
    r = invoke({"--format", "json", "charpoly", "011"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["sequence"] == "011");
    CHECK(j["blocks"] == nlohmann::json::array({1, 2}));
    CHECK(j["coefficients"] == nlohmann::json::array({"2", "3", "0", "-1"}));
  }

  TEST_CASE("det, mult, gamma, graph6") {
    CHECK(invoke({"det", "011"}).out == "2\n");
    CHECK(invoke({"mult", "0^2 1^3 0^3 1^2"}).out == "3 3\n");
    CHECK(invoke({"gamma", "010101"}).out == "1,3,6,4,5,1,1\n");
    CHECK(invoke({"graph6", "01"}).out == "A_\n");
  }

  TEST_CASE("spectrum") {
    auto r = invoke({"spectrum", "0001"});
    CHECK(r.code == 0);
    CHECK(r.out == "m0 2\nm-1 0\n-1.732050807569 1\n0.000000000000 2\n1.732050807569 1\n");
    r = invoke({"--precision", "4", "spectrum", "011"});
    CHECK(r.out == "m0 0\nm-1 2\n-1.0000 2\n2.0000 1\n");
    r = invoke({"--format", "json", "spectrum", "0001"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["m0"] == 2);
    CHECK(j["eigenvalues"].size() == 3);
  }

  TEST_CASE("reconstruct") {
    CHECK(invoke({"reconstruct", "-1,4,3,-10,-9,0,1"}).out == "010101\n");
    auto r = invoke({"reconstruct", "-2,0,1"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
    const auto path = std::filesystem::temp_directory_path() / "threshspec_cli_poly.json";
    {
      std::ofstream f(path);
      f << "[\"0\", \"0\", -3, 0, 1]\n";
    }
    r = invoke({"--format", "json", "reconstruct", "--file", path.string()});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["sequence"] == "0001");
    std::filesystem::remove(path);
    CHECK(invoke({"reconstruct", "--file", "/nonexistent/poly.txt"}).code == 1);
    CHECK(invoke({"reconstruct", "1,x"}).code == 1);
  }

  TEST_CASE("verify is reproducible without timing") {
    auto a = invoke({"--workers", "1", "verify", "--order", "8", "--no-timing"});
    auto b = invoke({"--workers", "1", "verify", "--order", "8", "--no-timing"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == "{\"order\":8,\"count\":64,\"collisions\":[],\"elapsed_ms\":0.0,\"workers\":1}\n");
    CHECK(invoke({"verify", "--order", "41"}).code == 1);
    CHECK(invoke({"verify"}).code == 1);
  }

  TEST_CASE("recognize") {
    CHECK(invoke({"recognize", "A_"}).out == "01\n");
    auto r = invoke({"recognize"}, "A_\nBw\n");
    CHECK(r.code == 0);
    CHECK(r.out == "01\n011\n");
    r = invoke({"recognize", "Cr"});
    CHECK(r.code == 2);
    CHECK(invoke({"recognize", "A"}).code == 1);
    CHECK(invoke({"recognize"}, "").code == 1);
  }

  TEST_CASE("usage errors") {
    CHECK(invoke({}).code == 1);
    CHECK(invoke({"frobnicate"}).code == 1);
    CHECK(invoke({"charpoly"}).code == 1);
    CHECK(invoke({"charpoly", "0120"}).code == 1);
    CHECK(invoke({"--format", "xml", "charpoly", "01"}).code == 1);
    CHECK(invoke({"--precision", "0", "spectrum", "01"}).code == 1);
    auto help = invoke({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("charpoly") != std::string::npos);
  }
}
