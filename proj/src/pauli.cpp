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

#include "bellvar/pauli.hpp"

#include <bit>

namespace bellvar {

namespace {

Complex i_power(int exponent) {
  switch (((exponent % 4) + 4) % 4) {
    case 0:
      return Complex(1.0, 0.0);
    case 1:
      return Complex(0.0, 1.0);
    case 2:
      return Complex(-1.0, 0.0);
    default:
      return Complex(0.0, -1.0);
  }
}

int parity(std::uint64_t bits) { return std::popcount(bits) & 1; }

void require_same_width(int lhs, int rhs, const char* what) {
  if (lhs != rhs) {
    throw ShapeError(std::string(what) + ": register widths " +
                     std::to_string(lhs) + " and " + std::to_string(rhs) +
                     " differ");
  }
}

}  // namespace

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I:
      return 'I';
    case Pauli::X:
      return 'X';
    case Pauli::Y:
      return 'Y';
    case Pauli::Z:
      return 'Z';
  }
  throw DomainError("pauli_char: invalid letter value");
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I':
      return Pauli::I;
    case 'X':
      return Pauli::X;
    case 'Y':
      return Pauli::Y;
    case 'Z':
      return Pauli::Z;
    default:
      throw SchemaError(std::string("pauli_from_char: invalid letter '") + c +
                        "', expected one of I X Y Z");
  }
}

PauliString::PauliString(std::vector<Pauli> letters)
    : letters_(std::move(letters)) {
  if (letters_.empty()) {
    throw DomainError("PauliString: empty letter list");
  }
  if (letters_.size() > 64) {
    throw SizeError("PauliString: " + std::to_string(letters_.size()) +
                    " sites exceeds the 64-site mask width");
  }
}

PauliString PauliString::identity(int n) {
  if (n < 1) {
    throw DomainError("PauliString::identity: n = " + std::to_string(n));
  }
  return PauliString(std::vector<Pauli>(static_cast<std::size_t>(n),
                                        Pauli::I));
}

PauliString PauliString::single(int n, int site, Pauli p) {
  if (site < 1 || site > n) {
    throw DomainError("PauliString::single: site " + std::to_string(site) +
                      " out of range for n = " + std::to_string(n));
  }
  PauliString s = identity(n);
  s.letters_[static_cast<std::size_t>(site - 1)] = p;
  return s;
}

PauliString PauliString::parse(const std::string& text) {
  std::vector<Pauli> letters;
  letters.reserve(text.size());
  for (char c : text) {
    letters.push_back(pauli_from_char(c));
  }
  if (letters.empty()) {
    throw SchemaError("PauliString::parse: empty letter string");
  }
  return PauliString(std::move(letters));
}

Pauli PauliString::letter(int site) const {
  if (site < 1 || site > n()) {
    throw DomainError("PauliString::letter: site " + std::to_string(site) +
                      " out of range for n = " + std::to_string(n()));
  }
  return letters_[static_cast<std::size_t>(site - 1)];
}

int PauliString::weight() const {
  int w = 0;
  for (Pauli p : letters_) {
    if (p != Pauli::I) ++w;
  }
  return w;
}

std::string PauliString::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (Pauli p : letters_) {
    out.push_back(pauli_char(p));
  }
  return out;
}

PauliString PauliString::exchanged_xy() const {
  std::vector<Pauli> letters = letters_;
  for (Pauli& p : letters) {
    if (p == Pauli::X) {
      p = Pauli::Y;
    } else if (p == Pauli::Y) {
      p = Pauli::X;
    }
  }
  return PauliString(std::move(letters));
}

PauliString::Masks PauliString::masks() const {
  Masks m;
  const int width = n();
  for (int j = 1; j <= width; ++j) {
    const std::uint64_t bit = std::uint64_t(1) << (width - j);
    switch (letters_[static_cast<std::size_t>(j - 1)]) {
      case Pauli::I:
        break;
      case Pauli::X:
        m.x |= bit;
        break;
      case Pauli::Y:
        m.x |= bit;
        m.z |= bit;
        ++m.y_count;
        break;
      case Pauli::Z:
        m.z |= bit;
        break;
    }
  }
  return m;
}

Cvec PauliString::apply(const Cvec& amps) const {
  const Eigen::Index dim = Eigen::Index(1) << n();
  if (amps.size() != dim) {
    throw ShapeError("PauliString::apply: vector length " +
                     std::to_string(amps.size()) + " for " +
                     std::to_string(n()) + " sites");
  }
  const Masks m = masks();
  const Complex front = i_power(m.y_count);
  Cvec out(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    const auto bits = static_cast<std::uint64_t>(k);
    const double sign = parity(bits & m.z) ? -1.0 : 1.0;
    out(static_cast<Eigen::Index>(bits ^ m.x)) = front * sign * amps(k);
  }
  return out;
}

Cmat PauliString::to_dense(Eigen::Index max_dim) const {
  const Eigen::Index dim = Eigen::Index(1) << n();
  if (dim > max_dim) {
    throw SizeError("PauliString::to_dense: dimension " +
                    std::to_string(dim) + " exceeds limit " +
                    std::to_string(max_dim));
  }
  const Masks m = masks();
  const Complex front = i_power(m.y_count);
  Cmat out = Cmat::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    const auto bits = static_cast<std::uint64_t>(k);
    const double sign = parity(bits & m.z) ? -1.0 : 1.0;
    out(static_cast<Eigen::Index>(bits ^ m.x), k) = front * sign;
  }
  return out;
}

StringProduct multiply(const PauliString& a, const PauliString& b) {
  require_same_width(a.n(), b.n(), "multiply");
  const PauliString::Masks ma = a.masks();
  const PauliString::Masks mb = b.masks();
  const std::uint64_t x = ma.x ^ mb.x;
  const std::uint64_t z = ma.z ^ mb.z;

  std::vector<Pauli> letters(static_cast<std::size_t>(a.n()), Pauli::I);
  const int width = a.n();
  for (int j = 1; j <= width; ++j) {
    const std::uint64_t bit = std::uint64_t(1) << (width - j);
    const bool has_x = (x & bit) != 0;
    const bool has_z = (z & bit) != 0;
    Pauli p = Pauli::I;
    if (has_x && has_z) {
      p = Pauli::Y;
    } else if (has_x) {
      p = Pauli::X;
    } else if (has_z) {
      p = Pauli::Z;
    }
    letters[static_cast<std::size_t>(j - 1)] = p;
  }
  PauliString out(std::move(letters));
  const int y_out = out.masks().y_count;
  // i^ya X^xa Z^za  i^yb X^xb Z^zb
  //   = i^(ya + yb) (-1)^|za & xb| X^(xa^xb) Z^(za^zb)
  //   = i^(ya + yb - y_out + 2 |za & xb|) * canonical(out)
  const int exponent =
      ma.y_count + mb.y_count - y_out + 2 * std::popcount(ma.z & mb.x);
  return StringProduct{i_power(exponent), std::move(out)};
}

PauliSum::PauliSum(int n) : n_(n) {
  if (n_ < 1) {
    throw DomainError("PauliSum: n = " + std::to_string(n_));
  }
}

void PauliSum::add(const PauliString& s, Complex coeff) {
  require_same_width(n_, s.n(), "PauliSum::add");
  auto it = terms_.find(s);
  if (it == terms_.end()) {
    if (std::abs(coeff) > tol::kCoeffPrune) {
      terms_.emplace(s, coeff);
    }
    return;
  }
  it->second += coeff;
  if (std::abs(it->second) <= tol::kCoeffPrune) {
    terms_.erase(it);
  }
}

Complex PauliSum::coefficient(const PauliString& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  require_same_width(n_, other.n_, "PauliSum::operator+=");
  for (const auto& [s, c] : other.terms_) {
    add(s, c);
  }
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  require_same_width(n_, other.n_, "PauliSum::operator-=");
  for (const auto& [s, c] : other.terms_) {
    add(s, -c);
  }
  return *this;
}

PauliSum& PauliSum::operator*=(Complex scale) {
  if (std::abs(scale) <= tol::kCoeffPrune) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, c] : terms_) {
    c *= scale;
  }
  return *this;
}

PauliSum PauliSum::operator*(const PauliSum& other) const {
  require_same_width(n_, other.n_, "PauliSum::operator*");
  PauliSum out(n_);
  for (const auto& [sa, ca] : terms_) {
    for (const auto& [sb, cb] : other.terms_) {
      StringProduct p = multiply(sa, sb);
      out.add(p.string, ca * cb * p.phase);
    }
  }
  return out;
}

bool PauliSum::is_hermitian(double tolerance) const {
  for (const auto& [s, c] : terms_) {
    if (std::abs(c.imag()) > tolerance) {
      return false;
    }
  }
  return true;
}

PauliSum PauliSum::exchanged_xy() const {
  PauliSum out(n_);
  for (const auto& [s, c] : terms_) {
    out.add(s.exchanged_xy(), c);
  }
  return out;
}

PauliSum PauliSum::tensor(const PauliSum& other) const {
  PauliSum out(n_ + other.n_);
  for (const auto& [sa, ca] : terms_) {
    for (const auto& [sb, cb] : other.terms_) {
      std::vector<Pauli> letters = sa.letters();
      letters.insert(letters.end(), sb.letters().begin(),
                     sb.letters().end());
      out.add(PauliString(std::move(letters)), ca * cb);
    }
  }
  return out;
}

Cvec PauliSum::apply(const Cvec& amps) const {
  const Eigen::Index dim = Eigen::Index(1) << n_;
  if (amps.size() != dim) {
    throw ShapeError("PauliSum::apply: vector length " +
                     std::to_string(amps.size()) + " for n = " +
                     std::to_string(n_));
  }
  Cvec out = Cvec::Zero(dim);
  for (const auto& [s, c] : terms_) {
    const PauliString::Masks m = s.masks();
    const Complex front = c * i_power(m.y_count);
    for (Eigen::Index k = 0; k < dim; ++k) {
      const auto bits = static_cast<std::uint64_t>(k);
      const double sign = parity(bits & m.z) ? -1.0 : 1.0;
      out(static_cast<Eigen::Index>(bits ^ m.x)) += front * sign * amps(k);
    }
  }
  return out;
}

Cmat PauliSum::to_dense(Eigen::Index max_dim) const {
  const Eigen::Index dim = Eigen::Index(1) << n_;
  if (dim > max_dim) {
    throw SizeError("PauliSum::to_dense: dimension " + std::to_string(dim) +
                    " exceeds limit " + std::to_string(max_dim));
  }
  Cmat out = Cmat::Zero(dim, dim);
  for (const auto& [s, c] : terms_) {
    const PauliString::Masks m = s.masks();
    const Complex front = c * i_power(m.y_count);
    for (Eigen::Index k = 0; k < dim; ++k) {
      const auto bits = static_cast<std::uint64_t>(k);
      const double sign = parity(bits & m.z) ? -1.0 : 1.0;
      out(static_cast<Eigen::Index>(bits ^ m.x), k) += front * sign;
    }
  }
  return out;
}

double PauliSum::expectation(const StateVector& psi) const {
  if (psi.n() != n_) {
    throw ShapeError("PauliSum::expectation: state has n = " +
                     std::to_string(psi.n()) + ", sum has n = " +
                     std::to_string(n_));
  }
  if (!is_hermitian()) {
    throw ContractError(
        "PauliSum::expectation: coefficients are not all real");
  }
  const Complex value = psi.amps().dot(apply(psi.amps()));
  if (std::abs(value.imag()) > tol::kImagResidue) {
    throw NumericalError("PauliSum::expectation: imaginary residue " +
                         std::to_string(value.imag()));
  }
  return value.real();
}

double PauliSum::expectation(const DensityMatrix& rho) const {
  if (rho.n() != n_) {
    throw ShapeError("PauliSum::expectation: state has n = " +
                     std::to_string(rho.n()) + ", sum has n = " +
                     std::to_string(n_));
  }
  if (!is_hermitian()) {
    throw ContractError(
        "PauliSum::expectation: coefficients are not all real");
  }
  Complex value(0.0, 0.0);
  const Eigen::Index dim = rho.dim();
  for (const auto& [s, c] : terms_) {
    const PauliString::Masks m = s.masks();
    const Complex front = c * i_power(m.y_count);
    // tr(rho P) = sum_k <k| rho P |k>; P |k> lands on a single basis state.
    Complex term(0.0, 0.0);
    for (Eigen::Index k = 0; k < dim; ++k) {
      const auto bits = static_cast<std::uint64_t>(k);
      const double sign = parity(bits & m.z) ? -1.0 : 1.0;
      term += sign * rho.matrix()(k, static_cast<Eigen::Index>(bits ^ m.x));
    }
    value += front * term;
  }
  if (std::abs(value.imag()) > tol::kImagResidue) {
    throw NumericalError("PauliSum::expectation: imaginary residue " +
                         std::to_string(value.imag()));
  }
  return value.real();
}

}  // namespace bellvar
