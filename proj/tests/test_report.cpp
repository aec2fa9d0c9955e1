#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "cylindex/report.hpp"

using namespace cylindex;

TEST_CASE("canonical json sorts keys and keeps 17 digits") {
  const Json j = {{"b", 0.1}, {"a", 1}, {"c", {{"z", true}, {"y", nullptr}}}, {"d", 2.0}};
  CHECK(canonical_json(j) ==
        R"({"a":1,"b":0.10000000000000001,"c":{"y":null,"z":true},"d":2.0})");
  CHECK(canonical_json(Json(std::numeric_limits<double>::infinity())) == "null");
  CHECK(canonical_json(Json(std::nan(""))) == "null");
  CHECK(canonical_json(Json("a\"b\n")) == R"("a\"b\n")");
}

TEST_CASE("property: canonical json round trips byte for byte") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  std::uniform_int_distribution<int> e(-300, 300);
  for (int trial = 0; trial < 200; ++trial) {
    Json j;
    j["x"] = u(rng) * std::pow(10.0, e(rng) / 10);
    j["list"] = {u(rng), static_cast<int>(u(rng)), "s"};
    j["nested"] = {{"k" + std::to_string(trial), u(rng)}};
    const std::string once = canonical_json(j);
    const std::string twice = canonical_json(Json::parse(once));
    CHECK(once == twice);
    CHECK(Json::parse(once)["x"].get<double>() == j["x"].get<double>());
  }
}

TEST_CASE("shortest decimal formatting") {
  CHECK(format_shortest(0.1) == "0.1");
  CHECK(format_shortest(2.0) == "2");
  CHECK(format_shortest(-1.5e-7) == "-1.5e-07");
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 500; ++i) {
    const double x = u(rng);
    CHECK(std::stod(format_shortest(x)) == x);
  }
}

TEST_CASE("csv quoting") {
  CHECK(csv_line({"a", "b"}) == "a,b\n");
  CHECK(csv_line({"1;2", "x,y"}) == "1;2,\"x,y\"\n");
  CHECK(csv_line({"say \"hi\""}) == "\"say \"\"hi\"\"\"\n");
  CHECK(csv_line({}) == "\n");
}

TEST_CASE("weight set json") {
  WeightSet finite;
  finite.kind = WeightSet::Kind::Finite;
  finite.weights = {1, 2};
  finite.case_label = "III";
  const Json j = to_json(finite);
  CHECK(j["weights"] == Json({1, 2}));
  CHECK(j["case"] == "III");

  WeightSet nf;
  nf.kind = WeightSet::Kind::NonFredholm;
  CHECK_FALSE(to_json(nf).contains("case"));
}

TEST_CASE("character json over a window") {
  CharacterFunctional c;
  c.plus.tail = Multiplicity::Tail::AtLeast;
  c.plus.tail_bound = 1;
  c.plus.tail_multiplicity = 1;
  const Json j = to_json(c, {-1, 2});
  CHECK(j["window"] == Json({-1, 2}));
  CHECK(j["multiplicities"].size() == 4);
  CHECK(j["pattern"] == "at_least");
}
