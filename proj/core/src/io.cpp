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

#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace haros {

namespace {

BigInt parse_bigint(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("bad integer token '" + std::string(text) + "'");
    }
  }
  return BigInt(std::string(text));
}

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<BigInt> parse_term_list(std::string_view text) {
  std::vector<BigInt> terms;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    terms.push_back(parse_bigint(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return terms;
}

}  // namespace

std::string format_rational(const Rational& r) {
  return num(r).str() + "/" + den(r).str();
}

Rational parse_rational(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  const BigInt p = parse_bigint(text.substr(0, slash));
  const BigInt q = parse_bigint(text.substr(slash + 1));
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

std::string format_cf_spec(const CFSpec& spec) {
  std::string out = "[";
  for (std::size_t i = 0; i < spec.transient.size(); ++i) {
    if (i) out += ",";
    out += spec.transient[i].str();
  }
  if (!spec.period.empty()) {
    if (!spec.transient.empty()) out += ",";
    out += "(";
    for (std::size_t i = 0; i < spec.period.size(); ++i) {
      if (i) out += ",";
      out += spec.period[i].str();
    }
    out += ")";
  }
  return out + "]";
}

CFSpec parse_cf_spec(std::string_view text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw std::invalid_argument("continued fractions look like [a1,a2,...] or [a1,(b1,...)]");
  }
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<BigInt> transient, period;
  const std::size_t open = body.find('(');
  if (open == std::string_view::npos) {
    transient = parse_term_list(body);
  } else {
    const std::size_t close = body.find(')', open);
    if (close == std::string_view::npos || close + 1 != body.size()) {
      throw std::invalid_argument("unterminated period in '" + std::string(text) + "'");
    }
    std::string_view head = body.substr(0, open);
    if (!head.empty()) {
      if (head.back() != ',') throw std::invalid_argument("expected ',' before the period");
      transient = parse_term_list(head.substr(0, head.size() - 1));
    }
    period = parse_term_list(body.substr(open + 1, close - open - 1));
    if (period.empty()) throw std::invalid_argument("empty period");
  }
  return CFSpec(std::move(transient), std::move(period));
}

Rational parse_decimal(std::string_view text) {
  std::string_view digits = text;
  if (digits.empty()) throw std::invalid_argument("empty decimal");
  const std::size_t dot = digits.find('.');
  std::string integral(digits.substr(0, dot));
  std::string fractional(dot == std::string_view::npos ? "" : digits.substr(dot + 1));
  if (integral.empty()) integral = "0";
  BigInt numerator = parse_bigint(integral);
  BigInt denominator = 1;
  for (char c : fractional) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad decimal '" + std::string(text) + "'");
    numerator = numerator * 10 + (c - '0');
    denominator *= 10;
  }
  return Rational(numerator, denominator);
}

std::string graph_json(const HarosGraph& g, bool with_distribution) {
  nlohmann::json j;
  j["p"] = num(g.label).str();
  j["q"] = den(g.label).str();
  j["path"] = is_interior(g.label) ? rational_to_path(g.label).str() : "";
  nlohmann::json open = nlohmann::json::array();
  for (Degree d : g.open_degrees) open.push_back(std::to_string(d));
  j["open_degrees"] = std::move(open);
  nlohmann::json collapsed = nlohmann::json::array();
  for (Degree d : collapse(g)) collapsed.push_back(std::to_string(d));
  j["collapsed"] = std::move(collapsed);
  if (with_distribution) {
    const DegreeDistribution dist = degree_distribution(g);
    nlohmann::json entries = nlohmann::json::object();
    for (const auto& [k, count] : dist.counts) {
      entries[std::to_string(k)] = count.str() + "/" + dist.node_count.str();
    }
    j["distribution"] = std::move(entries);
  }
  return j.dump();
}

void write_entropy_csv(std::ostream& out, std::span<const EntropySample> samples,
                       bool with_reduced, bool with_means) {
  out << "p,q,x,S";
  if (with_reduced) out << ",H";
  if (with_means) out << ",k_mean,k_geo";
  out << "\n";
  for (const EntropySample& s : samples) {
    out << num(s.x).str() << "," << den(s.x).str() << "," << fmt17(s.x_float) << ","
        << fmt17(s.S);
    if (with_reduced) out << "," << fmt17(s.H);
    if (with_means) out << "," << format_rational(s.k_mean) << "," << fmt17(s.k_geo);
    out << "\n";
  }
}

}  // namespace haros
