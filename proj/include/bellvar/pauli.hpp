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

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bellvar/common.hpp"
#include "bellvar/dense.hpp"
#include "bellvar/state.hpp"

namespace bellvar {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/// Tensor product of single-qubit Pauli letters. Site 1 acts on the most
/// significant basis bit. Internally the string is the phase-canonical
/// i^y * X^x * Z^z with y = popcount(x & z), which keeps every letter string
/// Hermitian.
class PauliString {
 public:
  explicit PauliString(std::vector<Pauli> letters);

  static PauliString identity(int n);
  static PauliString single(int n, int site, Pauli p);

  /// Parses a letter string such as "XXY". Throws SchemaError on any
  /// character outside {I, X, Y, Z}.
  static PauliString parse(const std::string& text);

  int n() const { return static_cast<int>(letters_.size()); }
  const std::vector<Pauli>& letters() const { return letters_; }
  Pauli letter(int site) const;
  int weight() const;
  std::string str() const;

  /// Same string with every X replaced by Y and vice versa.
  PauliString exchanged_xy() const;

  /// Bitmask form: bit (n - j) of x is set when site j carries X or Y, bit
  /// (n - j) of z when site j carries Z or Y.
  struct Masks {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    int y_count = 0;
  };
  Masks masks() const;

  /// out = phase-correct action of this string on amps, computational basis.
  Cvec apply(const Cvec& amps) const;
  Cmat to_dense(Eigen::Index max_dim = kDefaultMaxKronDim) const;

  auto operator<=>(const PauliString&) const = default;

 private:
  std::vector<Pauli> letters_;
};

/// Product of two letter strings as phase * letter string.
struct StringProduct {
  Complex phase;
  PauliString string;
};
StringProduct multiply(const PauliString& a, const PauliString& b);

/// Linear combination of Pauli strings over one register width. Terms are
/// held in lexicographic letter order (I < X < Y < Z) and terms whose
/// coefficient magnitude drops below the pruning floor are removed.
class PauliSum {
 public:
  explicit PauliSum(int n);

  int n() const { return n_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const std::map<PauliString, Complex>& terms() const { return terms_; }

  void add(const PauliString& s, Complex coeff);
  Complex coefficient(const PauliString& s) const;

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(Complex scale);

  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(PauliSum a, Complex scale) { return a *= scale; }
  friend PauliSum operator*(Complex scale, PauliSum a) { return a *= scale; }

  /// Operator product; expands term by term with the Pauli phase algebra.
  PauliSum operator*(const PauliSum& other) const;

  /// All coefficients real to within the tolerance.
  bool is_hermitian(double tolerance = tol::kRealCoeff) const;

  /// Applies the X <-> Y letter exchange to every term.
  PauliSum exchanged_xy() const;

  PauliSum tensor(const PauliSum& other) const;

  Cvec apply(const Cvec& amps) const;
  Cmat to_dense(Eigen::Index max_dim = kDefaultMaxKronDim) const;

  /// <psi| S |psi>; requires a Hermitian sum and checks the imaginary
  /// residue of the quadratic form.
  double expectation(const StateVector& psi) const;
  double expectation(const DensityMatrix& rho) const;

 private:
  int n_;
  std::map<PauliString, Complex> terms_;
};

}  // namespace bellvar
