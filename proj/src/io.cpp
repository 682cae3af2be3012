// Copyright 2026 The bellvar Authors
//
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

#include "bellvar/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bellvar {

namespace {

using nlohmann::json;

double number_field(const json& j, const std::string& where) {
  if (!j.is_number()) {
    throw SchemaError("state JSON: " + where + " is not a number");
  }
  const double value = j.get<double>();
  if (!std::isfinite(value)) {
    throw SchemaError("state JSON: " + where + " is not finite");
  }
  return value;
}

}  // namespace

std::string format_g17(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string state_to_json(const StateVector& psi) {
  json amps = json::array();
  for (Eigen::Index k = 0; k < psi.dim(); ++k) {
    amps.push_back({psi.amps()(k).real(), psi.amps()(k).imag()});
  }
  json j;
  j["n"] = psi.n();
  j["amps"] = std::move(amps);
  return j.dump();
}

StateVector state_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("state JSON: parse failure: ") + e.what());
  }
  if (!j.is_object()) {
    throw SchemaError("state JSON: top level is not an object");
  }
  if (!j.contains("n")) {
    throw SchemaError("state JSON: missing field \"n\"");
  }
  if (!j["n"].is_number_integer()) {
    throw SchemaError("state JSON: field \"n\" is not an integer");
  }
  const int n = j["n"].get<int>();
  if (n < 1 || n > limits::kStructuredQubits) {
    throw SchemaError("state JSON: field \"n\" = " + std::to_string(n) +
                      " out of range [1, " +
                      std::to_string(limits::kStructuredQubits) + "]");
  }
  if (!j.contains("amps")) {
    throw SchemaError("state JSON: missing field \"amps\"");
  }
  const json& amps = j["amps"];
  if (!amps.is_array()) {
    throw SchemaError("state JSON: field \"amps\" is not an array");
  }
  const Eigen::Index want = Eigen::Index(1) << n;
  if (static_cast<Eigen::Index>(amps.size()) != want) {
    throw SchemaError("state JSON: field \"amps\" has " +
                      std::to_string(amps.size()) + " entries, expected " +
                      std::to_string(want));
  }
  Cvec v(want);
  for (Eigen::Index k = 0; k < want; ++k) {
    const json& pair = amps[static_cast<std::size_t>(k)];
    const std::string where = "amps[" + std::to_string(k) + "]";
    if (!pair.is_array() || pair.size() != 2) {
      throw SchemaError("state JSON: " + where +
                        " is not a [re, im] pair");
    }
    v(k) = Complex(number_field(pair[0], where + "[0]"),
                   number_field(pair[1], where + "[1]"));
  }
  return StateVector(n, std::move(v));
}

StateVector read_state_file(const std::string& path) {
  return state_from_json(read_text_file(path));
}

std::string pauli_sum_to_text(const PauliSum& sum) {
  if (!sum.is_hermitian()) {
    throw ContractError(
        "pauli_sum_to_text: sum has complex coefficients");
  }
  std::string out;
  for (const auto& [s, c] : sum.terms()) {
    out += format_g17(c.real());
    out += ' ';
    out += s.str();
    out += '\n';
  }
  return out;
}

PauliSum pauli_sum_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = 0;
  PauliSum sum(1);
  bool seeded = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string coeff_token, letters, extra;
    if (!(fields >> coeff_token)) {
      continue;  // blank line
    }
    if (!(fields >> letters) || (fields >> extra)) {
      throw SchemaError("pauli sum text: line " + std::to_string(line_no) +
                        ": expected `<coefficient> <letters>`");
    }
    std::size_t consumed = 0;
    double coeff = 0.0;
    try {
      coeff = std::stod(coeff_token, &consumed);
    } catch (const std::exception&) {
      consumed = 0;
    }
    if (consumed != coeff_token.size() || !std::isfinite(coeff)) {
      throw SchemaError("pauli sum text: line " + std::to_string(line_no) +
                        ": bad coefficient '" + coeff_token + "'");
    }
    PauliString s = PauliString::parse(letters);
    if (!seeded) {
      n = s.n();
      sum = PauliSum(n);
      seeded = true;
    } else if (s.n() != n) {
      throw SchemaError("pauli sum text: line " + std::to_string(line_no) +
                        ": string width " + std::to_string(s.n()) +
                        " differs from " + std::to_string(n));
    }
    sum.add(s, coeff);
  }
  if (!seeded) {
    throw SchemaError("pauli sum text: no terms found");
  }
  return sum;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open for reading: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw IoError("read failure: " + path);
  }
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open for writing: " + path);
  }
  out << content;
  out.flush();
  if (!out) {
    throw IoError("write failure: " + path);
  }
}

}  // namespace bellvar
