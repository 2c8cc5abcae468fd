#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using namespace wittjet;

namespace {

const std::filesystem::path kData = WITTJET_TEST_DATA;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("witt-table reproduces the golden file byte for byte") {
  const auto r = run({"witt-table", "--triple", "Z2", "--level", "1"});
  CHECK(r.code == kExitPass);
  CHECK(r.out == slurp(kData / "golden" / "witt_Z2_n1.json"));
}

TEST_CASE("witt-table text output shows S_1") {
  const auto r = run({"witt-table", "--level", "1", "--format", "text"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("S1 = -X0*Y0 + X1 + Y1") != std::string::npos);
}

TEST_CASE("dump, reload, re-verify") {
  const auto dir = std::filesystem::temp_directory_path() / "wittjet_cli_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const auto file = (dir / "gauss.json").string();
  CHECK(run({"witt-table", "--triple", "GAUSS", "--level", "1", "--out", file}).code == kExitPass);
  const auto reload = run({"witt-table", "--table", file});
  CHECK(reload.code == kExitPass);
  CHECK(reload.out == slurp(file));
  CHECK(run({"verify", "witt-axioms", "--table", file}).code == kExitPass);

  const auto cache = (dir / "cache").string();
  CHECK(run({"witt-table", "--level", "2", "--cache", cache}).code == kExitPass);
  CHECK(std::filesystem::exists(dir / "cache" / "witt"));
  CHECK(run({"witt-table", "--level", "2", "--cache", cache}).out == run({"witt-table", "--level", "2"}).out);
  std::filesystem::remove_all(dir);
}

TEST_CASE("the corrupted fixture fails with a witness") {
  const auto r = run({"verify", "witt-axioms", "--table", (kData / "fixtures" / "witt_Z2_n1_bad_S1.json").string()});
  CHECK(r.code == kExitFail);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == false);
  CHECK(j["counterexample"].get<std::string>().find("at x = (1,0), y = (1,0)") != std::string::npos);
  CHECK(run({"witt-table", "--table", (kData / "fixtures" / "witt_Z2_n1_bad_S1.json").string()}).code == kExitFail);
}

TEST_CASE("exit codes") {
  CHECK(run({"verify", "adjunction", "--rings", ""}).code == kExitUsage);
  CHECK(run({"adjoint-check", "--rings", ","}).code == kExitUsage);
  CHECK(run({"witt-table", "--level", "7"}).code == kExitCap);
  CHECK(run({"witt-table", "--level", "3", "--cap", "4"}).code == kExitCap);
  CHECK(run({"witt-table", "--level", "3", "--cap", "8"}).code == kExitPass);
  CHECK(run({"adjoint-check", "--level", "1", "--size-cap", "4"}).code == kExitCap);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"verify", "nonsense"}).code == kExitUsage);
  CHECK(run({"witt-table", "--triple", "Q7"}).code == kExitUsage);
  CHECK(run({"witt-table", "--triple", "{\"g\": [0, 1], \"pi\": [2], \"q\": 4}"}).code == kExitUsage);
  CHECK(run({"witt-op", "--op", "add", "--x", "[1,0,0]", "--y", "[1,0,0]"}).code == kExitUsage);
  const auto r = run({"witt-table", "--cap", "0"});
  CHECK(r.code == kExitUsage);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("identical inputs give identical bytes") {
  const std::vector<std::string> args{"verify", "adjunction", "--level", "1", "--rings", "F2,Z4"};
  const auto first = run(args), second = run(args);
  CHECK(first.code == kExitPass);
  CHECK(first.out == second.out);
  const std::vector<std::string> serial{"verify", "adjunction", "--level", "1", "--rings", "F2,Z4", "--serial"};
  CHECK(run(serial).out == first.out);
}

TEST_CASE("witt-op") {
  auto result = [](std::vector<std::string> args) {
    const auto r = run(std::move(args));
    REQUIRE(r.code == kExitPass);
    return nlohmann::json::parse(r.out)["result"];
  };
  // 1 + 1 = 2 = V(1) in W_1(F2) = Z/4
  CHECK(result({"witt-op", "--op", "add", "--x", "[1,0]", "--y", "[1,0]"}) == nlohmann::json{0, 1});
  CHECK(result({"witt-op", "--op", "verschiebung", "--x", "[1]"}) == nlohmann::json{0, 1});
  CHECK(result({"witt-op", "--op", "teichmuller", "--ring", "F4", "--x", "[0,1]"}) ==
        nlohmann::json::parse("[[0,1],[0,0]]"));
  CHECK(result({"witt-op", "--op", "ghost", "--ring", "Z4", "--x", "[3,1]"}) == nlohmann::json{3, 3});
  CHECK(result({"witt-op", "--op", "scalar", "--lambda", "3", "--x", "[1,0]"}) == nlohmann::json{1, 1});
  CHECK(result({"witt-op", "--op", "frobenius", "--ring", "F4", "--x", "[[0,1],0]"}) == nlohmann::json::parse("[[1,1]]"));
}

TEST_CASE("jet presentations") {
  const auto free = run({"jet", "present", "--gens", "x", "--level", "2"});
  CHECK(free.code == kExitPass);
  CHECK(nlohmann::json::parse(free.out)["relations"].empty());

  const auto echo = run({"jet", "present", "--gens", "x", "--rels", "x^2", "--level", "0", "--format", "text"});
  CHECK(echo.out == "Z2[x]\n  x^2\n");

  const auto x2 = run({"jet", "present", "--level", "1", "--format", "text"});
  CHECK(x2.out == "Z2[x, x']\n  x^2\n  2*x^2*x' + 2*x'^2\n");

  const auto alt = run({"jet", "alt", "--level", "2"});
  CHECK(nlohmann::json::parse(alt.out)["inverse"]["x''"] == "-Px^2*Px' - Px'^2 + Px''");

  const std::string algebra = R"({"triple": "Z3", "generators": ["x", "y"], "relations": ["x*y"]})";
  const auto inline_json = run({"jet", "present", "--algebra", algebra, "--level", "1"});
  CHECK(inline_json.code == kExitPass);
  CHECK(nlohmann::json::parse(inline_json.out)["relations"].size() == 2);
}

TEST_CASE("checks from the command line") {
  CHECK(run({"adjoint-check", "--level", "2", "--rings", "F2,F2eps"}).code == kExitPass);
  const auto loc = run({"localize-check", "--s", "x"});
  CHECK(loc.code == kExitPass);
  CHECK(nlohmann::json::parse(loc.out)["t"] == "x^3 + 2*x*x'");
  const auto gr = run({"greenberg", "compare", "--triple", "GAUSS", "--m", "1"});
  CHECK(gr.code == kExitPass);
  CHECK(nlohmann::json::parse(gr.out)["rings"][2]["bijective"] == false);
  const auto transform = run({"greenberg", "transform", "--m", "2", "--format", "text"});
  CHECK(transform.out.find("X0^2") != std::string::npos);
}

TEST_CASE("every suite passes on its default matrix") {
  const auto r = run({"verify", "all", "--format", "text"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.rfind("PASS all", 0) == 0);
}
