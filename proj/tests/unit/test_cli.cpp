#include <doctest.h>

#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "cli.hpp"

using kesten::cli::run;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("moments by every route") {
  const auto r = call({"moments", "--n", "3", "--route", "all"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["schema"] == "onc-kesten/1");
  CHECK(j["agreement"] == true);
  std::set<std::string> values;
  for (const auto& [name, value] : j["routes"].items()) values.insert(value.get<std::string>());
  CHECK(j["routes"].size() == 5);
  REQUIRE(values.size() == 1);
  CHECK(*values.begin() == "1 + p + q + 1/2p^2 + pq + 1/2q^2");
}

TEST_CASE("moments evaluated at a parameter point") {
  const auto r = call({"moments", "--n", "3", "--route", "delaney", "--p", "1", "--q", "1"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["value"] == "5");
}

TEST_CASE("enumerate counts") {
  const auto r = call({"enumerate", "--n", "6", "--pairs", "--count-only", "--output", "json"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["count"] == 5);
  const auto ordered = call({"enumerate", "--n", "6", "--pairs", "--ordered", "--count-only", "--output", "json"});
  REQUIRE(ordered.code == 0);
  CHECK(json::parse(ordered.out)["count"] == 30);
}

TEST_CASE("poisson prints the polynomial") {
  CHECK(call({"poisson", "--n", "1"}).out == "T\n");
  const auto r = call({"poisson", "--n", "3", "--output", "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["equal"] == true);
  CHECK(j["operator_route"] == j["combinatorial_route"]);
}

TEST_CASE("brownian example") {
  const auto r = call({"brownian", "--signature", "f f g g f f", "--intervals", "g=[0,1],f=[1,2]"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["equal"] == true);
  CHECK(j["operator_route"] == "1 + 1/2p^2 + 1/2pq");
}

TEST_CASE("density csv and json") {
  const auto csv = call({"density", "--p", "0.3", "--q", "0.2", "--grid", "4"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("x,density\n", 0) == 0);
  CHECK(csv.out.find("\natom_position,atom_mass\n") != std::string::npos);
  const auto j = call({"density", "--p", "1", "--q", "1", "--grid", "4", "--output", "json"});
  REQUIRE(j.code == 0);
  CHECK(json::parse(j.out)["atoms"].empty());
}

TEST_CASE("quadcheck and clt") {
  CHECK(call({"quadcheck", "--p", "0.5", "--q", "0.25", "--nmax", "8"}).code == 0);
  const auto r = call({"clt", "--N", "100", "--moment", "4", "--p", "0", "--q", "1"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["limit"] == "3/2");
  CHECK(j["value"] == "301/200");
}

TEST_CASE("verify reports checks and errata") {
  const auto r = call({"verify", "--order", "5"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK_FALSE(j["paper_errata"].empty());
}

TEST_CASE("usage errors exit with 2") {
  CHECK(call({"moments", "--n", "8", "--route", "all"}).code == 2);
  CHECK(call({"moments", "--n", "3", "--route", "bogus"}).code == 2);
  CHECK(call({"moments"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"density", "--p", "-1", "--q", "1"}).code == 2);
  CHECK(call({"brownian", "--signature", "f g", "--intervals", "f=[0,2],g=[1,3]"}).code == 2);
  CHECK(call({"poisson", "--n", "9"}).code == 2);
}
