// Copyright 2026 The haros-graphs Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "haros/io.hpp"

#include <sstream>

#include <doctest.h>
#include <json.hpp>

using namespace haros;

TEST_SUITE_BEGIN("io");

TEST_CASE("rational round trip") {
  CHECK(format_rational(Rational(2, 5)) == "2/5");
  CHECK(parse_rational("2/5") == Rational(2, 5));
  CHECK(parse_rational("4/10") == Rational(2, 5));
  CHECK(parse_rational("1") == Rational(1));
  const Rational big(fibonacci(90), fibonacci(91));
  CHECK(parse_rational(format_rational(big)) == big);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
}

TEST_CASE("cf spec strings") {
  CHECK(format_cf_spec(CFSpec({BigInt(2), BigInt(2)}, {})) == "[2,2]");
  CHECK(format_cf_spec(CFSpec({}, {BigInt(1)})) == "[(1)]");
  CHECK(format_cf_spec(CFSpec({BigInt(3)}, {BigInt(1)})) == "[3,(1)]");

  const CFSpec noble = parse_cf_spec("[2,4,1,1,2,2,(1)]");
  CHECK(noble.transient.size() == 6);
  CHECK(noble.noble());
  CHECK(parse_cf_spec("[(2)]").metallic());
  CHECK(parse_cf_spec("[3,2]").rational());
  CHECK(format_cf_spec(parse_cf_spec("[3,(1)]")) == "[3,(1)]");

  CHECK_THROWS_AS(parse_cf_spec("3,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cf_spec("[3,(2]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cf_spec("[()]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cf_spec("[0,2]"), std::invalid_argument);
}

TEST_CASE("decimal parsing") {
  CHECK(parse_decimal("0.618") == Rational(309, 500));
  CHECK(parse_decimal("0.5") == Rational(1, 2));
  CHECK(parse_decimal("0") == Rational(0));
  CHECK_THROWS_AS(parse_decimal("0.61x"), std::invalid_argument);
}

TEST_CASE("graph json dump") {
  const HarosGraph g = build(rational_to_path(Rational(2, 5)));
  const auto j = nlohmann::json::parse(graph_json(g, true));
  CHECK(j["p"] == "2");
  CHECK(j["q"] == "5");
  CHECK(j["path"] == "LLR");
  CHECK(j["open_degrees"] == nlohmann::json({"3", "3", "2", "5", "2", "3"}));
  CHECK(j["collapsed"] == nlohmann::json({"3", "2", "5", "2", "6"}));
  CHECK(j["distribution"]["2"] == "2/5");
  CHECK(j["distribution"]["5"] == "1/5");

  const auto bare = nlohmann::json::parse(graph_json(g, false));
  CHECK_FALSE(bare.contains("distribution"));

  const auto root = nlohmann::json::parse(graph_json(atom(), true));
  CHECK(root["path"] == "");
  CHECK(root["collapsed"] == nlohmann::json({"2"}));
}

TEST_CASE("entropy csv round-trips its exact fields") {
  NodeBudget budget;
  const auto samples = entropy_curve(5, budget);
  std::ostringstream out;
  write_entropy_csv(out, samples, true, true);
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  CHECK(header == "p,q,x,S,H,k_mean,k_geo");
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    std::stringstream fields(line);
    std::string p, q, x, S, H, k_mean, k_geo;
    std::getline(fields, p, ',');
    std::getline(fields, q, ',');
    std::getline(fields, x, ',');
    std::getline(fields, S, ',');
    std::getline(fields, H, ',');
    std::getline(fields, k_mean, ',');
    std::getline(fields, k_geo, ',');
    CHECK(parse_rational(p + "/" + q) == samples[row].x);
    CHECK(parse_rational(k_mean) == samples[row].k_mean);
    CHECK(std::stod(x) == samples[row].x_float);
    ++row;
  }
  CHECK(row == samples.size());

  std::ostringstream slim;
  write_entropy_csv(slim, samples, false, false);
  std::istringstream slim_in(slim.str());
  std::getline(slim_in, header);
  CHECK(header == "p,q,x,S");
}

TEST_SUITE_END();
