#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "celliep/json_io.hpp"
#include "cli.hpp"

using celliep::json_io::json;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
  json body() const { return json::parse(out); }
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = celliep::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("solve3 reproduces the 3x3 construction") {
  const Result r = call({"solve3", "--spectrum", "[3,-2,-1]"});
  REQUIRE(r.status == 0);
  const json j = r.body();
  CHECK(std::abs(j["x"][0].get<double>() - (std::sqrt(3.0) - 0.5)) <= 1e-12);
  CHECK(j["x"][1].get<double>() == 0.5);
  CHECK(j["verified"].get<bool>());
  CHECK(r.err.find("PASS") != std::string::npos);
}

TEST_CASE("spectrum by both routes") {
  const Result r = call({"spectrum", "--vector", "[1,1,1]"});
  REQUIRE(r.status == 0);
  const json j = r.body();
  CHECK(j["agree"].get<bool>());
  const auto ev = j["eigenvalues"].get<std::vector<double>>();
  REQUIRE(ev.size() == 3);
  CHECK(ev[0] == doctest::Approx(4.0));
  CHECK(ev[2] == doctest::Approx(-2.0));

  const Result ungrouped = call({"spectrum", "--vector", "[1,2,3]"});
  REQUIRE(ungrouped.status == 0);
  CHECK(ungrouped.body()["via_reduction"].is_null());

  const Result from_matrix = call({"spectrum", "--matrix", R"({"n":2,"rows":[[0,2],[2,0]]})"});
  REQUIRE(from_matrix.status == 0);
  CHECK(from_matrix.body()["agree"].get<bool>());

  CHECK(call({"spectrum"}).status == celliep::cli::kParseError);
}

TEST_CASE("solve-grouped builds the 13x13 matrix") {
  const Result r = call({"solve-grouped", "--tails", "[-2,-3,-5]", "--mult", "[4,4,5]"});
  REQUIRE(r.status == 0);
  const json j = r.body();
  CHECK(j["matrix"]["n"].get<int>() == 13);
  CHECK(j["matrix"]["rows"][0][12].get<double>() == 3.5);
  CHECK(j["matrix"]["rows"][4][8].get<double>() == 4.0);
  CHECK(j["verified"].get<bool>());
}

TEST_CASE("other commands") {
  CHECK(call({"construct", "--vector", R"({"x":[1,2,3]})"}).body()["rows"][0][2] == 4.0);
  CHECK(call({"reduce", "--vector", "[1,1,2,2,2]"}).body()["audit"]["max_forced_zero"] == 0.0);
  CHECK(call({"solve-uniform", "--n", "4", "--lambda", "2"}).body()["spectrum"][0] == 6.0);
  CHECK(call({"solve-2group", "--tails", "[-2,-4]", "--mult", "[5,6]"}).body()["verified"]);
  CHECK(call({"verify-perm", "--vector", "[1,2,3,4,5,6,7]", "--perm", "(1 4)(2 5)(3 7 6)"})
            .body()["holds"]);
  CHECK(call({"verify-perm", "--vector", "[1,2,3]", "--perm", R"({"mapping":[3,1,2]})"})
            .body()["holds"]);
  CHECK(call({"verify-membership", "--spectrum", "[4,-2,-2]", "--tails", "[-2]", "--mult", "[3]"})
            .body()["accepted"]);
  CHECK_FALSE(
      call({"verify-membership", "--spectrum", "[5,-2,-3]", "--tails", "[-2]", "--mult", "[2]"})
          .body()["accepted"]);
  CHECK(call({"detcheck", "--vector", "[1,2,3,4]"}).body()["agree"]);
}

TEST_CASE("exit statuses and error objects") {
  const Result unknown = call({"frobnicate"});
  CHECK(unknown.status == celliep::cli::kParseError);
  CHECK(unknown.body()["error"]["kind"] == "parse");

  CHECK(call({}).status == celliep::cli::kParseError);
  CHECK(call({"construct", "--vector", "[1,2"}).status == celliep::cli::kParseError);
  CHECK(call({"construct", "--vector", R"({"x":"no"})"}).status == celliep::cli::kDomainError);

  const Result bad = call({"construct", "--vector", "[1,-2]"});
  CHECK(bad.status == celliep::cli::kDomainError);
  CHECK(bad.body()["error"]["kind"] == "domain");

  CHECK(call({"solve3", "--spectrum", "[3,-2,-2]"}).status == celliep::cli::kDomainError);
  CHECK(call({"solve-2group", "--tails", "[-2,-2]", "--mult", "[3,3]"}).status ==
        celliep::cli::kDomainError);
  CHECK(call({"solve-uniform", "--n", "201", "--lambda", "1"}).status ==
        celliep::cli::kDomainError);
  CHECK(call({"construct", "--vector", "/nonexistent/file.json"}).status ==
        celliep::cli::kParseError);

  // Sixteen groups of two: the 16 x 16 core is beyond the polynomial root finder.
  std::string sixteen = "[";
  for (int v = 1; v <= 16; ++v)
    sixteen += std::to_string(v) + "," + std::to_string(v) + (v < 16 ? "," : "]");
  const Result slow = call({"spectrum", "--vector", sixteen});
  CHECK(slow.status == celliep::cli::kConvergenceError);
  CHECK(slow.body()["error"]["kind"] == "convergence");
}

TEST_CASE("file input, --out and byte-stable output") {
  const std::string in = "celliep_cli_test_vector.json";
  const std::string out = "celliep_cli_test_out.json";
  {
    std::ofstream f(in);
    f << R"({"x": [1, 1, 2, 2, 2]})";
  }
  const Result a = call({"reduce", "--vector", in});
  const Result b = call({"reduce", "--vector", "[1,1,2,2,2]"});
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);

  const Result c = call({"reduce", "--vector", in, "--out", out});
  REQUIRE(c.status == 0);
  CHECK(c.out.empty());
  std::ifstream f(out);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == a.out);
  std::remove(in.c_str());
  std::remove(out.c_str());
}

TEST_CASE("construct output feeds spectrum") {
  const Result sol = call({"solve-2group", "--tails", "[-2,-4]", "--mult", "[5,6]"});
  REQUIRE(sol.status == 0);
  const json s = sol.body();
  const Result built = call({"construct", "--vector", s["x"].dump()});
  const Result spec = call({"spectrum", "--matrix", built.out});
  REQUIRE(spec.status == 0);
  const auto got = spec.body()["eigenvalues"].get<std::vector<double>>();
  const auto want = s["spectrum"].get<std::vector<double>>();
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i)
    CHECK(std::abs(got[i] - want[i]) <= 1e-8 * 32.0);
}
