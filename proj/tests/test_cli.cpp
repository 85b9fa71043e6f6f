#include "dergraph/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace dergraph;
using namespace dergraph::cli;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(Command c)
{
  c.use_cache = false;
  std::ostringstream out, err;
  const int code = run(c, out, err);
  return {code, out.str(), err.str()};
}

Command make(Subcommand s, int n = 0, OutputMode mode = OutputMode::text)
{
  Command c;
  c.subcommand = s;
  c.n = n;
  c.output_mode = mode;
  return c;
}

}  // namespace

TEST_CASE("dn and poly")
{
  CHECK(invoke(make(Subcommand::dn, 5)).out == "44\n");
  CHECK(invoke(make(Subcommand::dn, 0)).out == "1\n");
  CHECK(invoke(make(Subcommand::dn, -1)).code == kUsageError);
  CHECK(invoke(make(Subcommand::poly, 4)).out == "(q-37)(q-1)^10(q+3)^9(q+5)^4\n");
  const Result bad = invoke(make(Subcommand::poly, 3));
  CHECK(bad.code == kUsageError);
  CHECK(bad.err.find("n >= 4") != std::string::npos);
}

TEST_CASE("spectrum text and JSON agree")
{
  const Result text = invoke(make(Subcommand::spectrum, 5));
  const Result js = invoke(make(Subcommand::spectrum, 5, OutputMode::json));
  REQUIRE(text.code == kSuccess);
  REQUIRE(js.code == kSuccess);
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j["n"] == 5);
  REQUIRE(j["entries"].size() == 7);
  for (const auto& e : j["entries"]) {
    Partition lam(e["partition"].get<std::vector<int>>());
    CHECK(text.out.find(lam.to_string()) != std::string::npos);
    CHECK(e["gamma"].get<std::string>() == to_decimal(gamma(lam)));
    CHECK(e["eta"].get<std::string>() == to_decimal(eta(lam)));
  }
  CHECK(j["entries"][0]["gamma"] == "194");
}

TEST_CASE("extremal output")
{
  const Result text = invoke(make(Subcommand::extremal, 5));
  CHECK(text.out.find("(3,2) (3,1,1) (1,1,1,1,1)") != std::string::npos);
  const auto j = nlohmann::json::parse(invoke(make(Subcommand::extremal, 5, OutputMode::json)).out);
  CHECK(j["smallest"]["value"] == "-6");
  CHECK(j["smallest"]["partitions"].size() == 3);
  CHECK(j["third_largest"]["value"] == "2");
}

TEST_CASE("factorize")
{
  Command c = make(Subcommand::factorize, 0, OutputMode::json);
  c.permutation = "(2 3 4 5 6)";
  c.n_hint = 6;
  const Result r = invoke(c);
  CHECK(r.code == kSuccess);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["sigma"] == "(1 2)(3 6 5 4)");
  CHECK(j["tau"] == "(1 2 4 6)(3 5)");
  CHECK(j["method"] == "single-cycle-construction");
  CHECK(j["verified"] == true);
  CHECK(j["w"] == "(2 3 4 5 6)");

  c.output_mode = OutputMode::text;
  const Result t = invoke(c);
  CHECK(t.out.find("sigma  = (1 2)(3 6 5 4)") != std::string::npos);
  CHECK(t.out.find("verified = true") != std::string::npos);

  c.permutation = "(1 2)(3 4)";
  c.n_hint.reset();
  CHECK(invoke(c).code == kUsageError);
  c.permutation = "(1 2 2)";
  CHECK(invoke(c).code == kUsageError);
  c.permutation = "(1 2)";
  c.n_hint = 3;
  CHECK(invoke(c).code == kUsageError);
}

TEST_CASE("verify, sweep and sign")
{
  Command v = make(Subcommand::verify, 5);
  v.k_max = 3;
  const Result r = invoke(v);
  CHECK(r.code == kSuccess);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("tr(d^3)") != std::string::npos);
  CHECK(invoke(make(Subcommand::verify, 3)).code == kUsageError);
  CHECK(invoke(make(Subcommand::verify, 9)).code == kUsageError);

  Command s = make(Subcommand::sweep);
  s.from = 6;
  s.to = 10;
  const Result sw = invoke(s);
  CHECK(sw.code == kSuccess);
  CHECK(sw.out.find("0 violations") != std::string::npos);
  s.from = 4;
  CHECK(invoke(s).code == kUsageError);

  const Result sg = invoke(make(Subcommand::sign, 10));
  CHECK(sg.code == kSuccess);
  CHECK(sg.out.find("0 violations") != std::string::npos);
}
