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

#include "haros/farey.hpp"

#include <algorithm>
#include <set>

#include <doctest.h>

using namespace haros;

namespace {

Rational rat(long p, long q) { return Rational(BigInt(p), BigInt(q)); }

}  // namespace

TEST_SUITE_BEGIN("farey");

TEST_CASE("mediant") {
  CHECK(mediant(rat(0, 1), rat(1, 1)) == rat(1, 2));
  CHECK(mediant(rat(1, 3), rat(1, 2)) == rat(2, 5));
  CHECK(mediant(rat(0, 1), rat(0, 1)) == rat(0, 1));
}

TEST_CASE("farey_sequence basics") {
  CHECK(farey_sequence(3) ==
        std::vector<Rational>{rat(0, 1), rat(1, 3), rat(1, 2), rat(2, 3), rat(1, 1)});
  CHECK(farey_sequence(4) == std::vector<Rational>{rat(0, 1), rat(1, 4), rat(1, 3), rat(1, 2),
                                                   rat(2, 3), rat(3, 4), rat(1, 1)});
  CHECK(farey_sequence(1) == std::vector<Rational>{rat(0, 1), rat(1, 1)});
  CHECK_THROWS_AS(farey_sequence(0), std::invalid_argument);
}

TEST_CASE("mediant of consecutive terms stays ordered") {
  const auto seq = farey_sequence(50);
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    const Rational mid = mediant(seq[i], seq[i + 1]);
    CHECK(seq[i] < mid);
    CHECK(mid < seq[i + 1]);
    CHECK(farey_neighbours(seq[i], seq[i + 1]));
  }
}

TEST_CASE("tree_level") {
  CHECK(tree_level(1) == std::vector<Rational>{rat(0, 1), rat(1, 1)});
  CHECK(tree_level(2) == std::vector<Rational>{rat(1, 2)});
  CHECK(tree_level(4) == std::vector<Rational>{rat(1, 4), rat(2, 5), rat(3, 5), rat(3, 4)});

  const auto level5 = tree_level(5);
  CHECK(level5.size() == 8);
  CHECK(std::is_sorted(level5.begin(), level5.end()));
  CHECK(std::count(level5.begin(), level5.end(), rat(2, 7)) == 1);
  CHECK(std::count(level5.begin(), level5.end(), rat(3, 8)) == 1);

  CHECK_THROWS_AS(tree_level(31), std::invalid_argument);
  CHECK_THROWS_AS(tree_level(12, 11), std::invalid_argument);
  CHECK_NOTHROW(tree_level(12, 12));
}

TEST_CASE("farey_sequence is contained in the first tree levels") {
  for (unsigned n = 1; n <= 12; ++n) {
    std::set<Rational> levels;
    for (unsigned i = 1; i <= n; ++i) {
      for (const Rational& r : tree_level(i)) levels.insert(r);
    }
    for (const Rational& r : farey_sequence(n)) CHECK(levels.count(r) == 1);
  }
}

TEST_CASE("path_to_rational") {
  CHECK(path_to_rational(FareyPath("LRLRL")) == rat(8, 13));
  CHECK(path_to_rational(FareyPath("L")) == rat(1, 2));
  CHECK(path_to_rational(FareyPath("LLR")) == rat(2, 5));
  CHECK(path_to_rational(FareyPath{}) == rat(1, 1));
}

TEST_CASE("rational_to_path") {
  CHECK(rational_to_path(rat(8, 13)).str() == "LRLRL");
  CHECK(rational_to_path(rat(1, 3)).str() == "LL");
  CHECK(rational_to_path(rat(2, 7)).str() == "LLLR");
  CHECK_THROWS_AS(rational_to_path(rat(0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(rational_to_path(rat(1, 1)), std::invalid_argument);
}

TEST_CASE("path validation") {
  CHECK_THROWS_AS(FareyPath("RLL"), std::invalid_argument);
  CHECK_THROWS_AS(FareyPath("LxR"), std::invalid_argument);
  CHECK(FareyPath::zigzag(5).str() == "LRLRL");
}

TEST_CASE("paths round-trip over all q <= 200") {
  for (unsigned q = 2; q <= 200; ++q) {
    for (unsigned p = 1; p < q; ++p) {
      if (boost::multiprecision::gcd(BigInt(p), BigInt(q)) != 1) continue;
      const Rational x = rat(p, q);
      CHECK(path_to_rational(rational_to_path(x)) == x);
    }
  }
}

TEST_CASE("fibonacci") {
  CHECK(fibonacci(0) == 1);
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(4) == 5);
  CHECK(fibonacci(10) == 89);
  CHECK(fibonacci(92) > BigInt("9223372036854775807"));  // past int64
}

TEST_SUITE_END();
