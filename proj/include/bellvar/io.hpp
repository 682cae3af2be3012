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

#pragma once

#include <string>

#include "bellvar/pauli.hpp"
#include "bellvar/state.hpp"

namespace bellvar {

/// Shortest-prefix-of-17-significant-digits decimal form ("%.17g"); decimal
/// round trips reproduce the double exactly.
std::string format_g17(double value);

/// State JSON schema: {"n": <int>, "amps": [[re, im], ...]} with 2^n
/// amplitude pairs, qubit 1 on the most significant basis bit.
std::string state_to_json(const StateVector& psi);
StateVector state_from_json(const std::string& text);
StateVector read_state_file(const std::string& path);

/// Pauli-sum text: one term per line, `<coefficient> <letters>`, terms in
/// canonical lexicographic order, coefficients at 17 significant digits.
/// Only Hermitian sums (real coefficients) can be written.
std::string pauli_sum_to_text(const PauliSum& sum);
PauliSum pauli_sum_from_text(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace bellvar
