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

#include "bellvar/bounds.hpp"

#include <bit>
#include <functional>

#include "bellvar/bell_ops.hpp"
#include "bellvar/eigensolver.hpp"
#include "bellvar/observables.hpp"
#include "bellvar/rng.hpp"

namespace bellvar {

namespace {

void require_hermitian(const PauliSum& op, const char* what) {
  if (!op.is_hermitian()) {
    throw ContractError(std::string(what) +
                        ": operator coefficients are not all real");
  }
}

void finish_report(BoundReport& report, std::optional<double> reference) {
  report.bound_reference = reference;
  if (reference) {
    report.gap = *reference - report.value;
  }
}

/// Per-term site data for the Bloch-product fast path: coefficient and, for
/// each non-identity site, (site index, Bloch component index).
struct CompiledTerm {
  double coeff = 0.0;
  std::vector<std::pair<int, int>> factors;
};

std::vector<CompiledTerm> compile_terms(const PauliSum& op) {
  std::vector<CompiledTerm> compiled;
  compiled.reserve(op.size());
  for (const auto& [s, c] : op.terms()) {
    CompiledTerm t;
    t.coeff = c.real();
    for (int site = 1; site <= op.n(); ++site) {
      switch (s.letter(site)) {
        case Pauli::I:
          break;
        case Pauli::X:
          t.factors.emplace_back(site - 1, 0);
          break;
        case Pauli::Y:
          t.factors.emplace_back(site - 1, 1);
          break;
        case Pauli::Z:
          t.factors.emplace_back(site - 1, 2);
          break;
      }
    }
    compiled.push_back(std::move(t));
  }
  return compiled;
}

Vec3 bloch_of(const BlochAngles& a) {
  return Vec3(std::sin(a.theta) * std::cos(a.phi),
              std::sin(a.theta) * std::sin(a.phi), std::cos(a.theta));
}

std::vector<Vec3> bloch_vectors(const ProductStateParams& params) {
  std::vector<Vec3> bloch;
  bloch.reserve(params.angles.size());
  for (const BlochAngles& a : params.angles) {
    bloch.push_back(bloch_of(a));
  }
  return bloch;
}

double evaluate(const std::vector<CompiledTerm>& compiled,
                const std::vector<Vec3>& bloch) {
  double total = 0.0;
  for (const CompiledTerm& t : compiled) {
    double prod = t.coeff;
    for (const auto& [site, comp] : t.factors) {
      prod *= bloch[static_cast<std::size_t>(site)](comp);
    }
    total += prod;
  }
  return total;
}

/// Golden-section maximization on [lo, hi], assuming at most one interior
/// peak; both endpoints are probed as well, so boundary maxima are exact.
std::pair<double, double> golden_max(const std::function<double(double)>& f,
                                     double lo, double hi, double tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    }
  }
  double best_x = 0.5 * (a + b);
  double best_f = f(best_x);
  for (double x : {lo, hi}) {
    const double fx = f(x);
    if (fx > best_f) {
      best_f = fx;
      best_x = x;
    }
  }
  return {best_x, best_f};
}

}  // namespace

double product_expectation(const PauliSum& op,
                           const ProductStateParams& params) {
  require_hermitian(op, "product_expectation");
  if (params.n() != op.n()) {
    throw ShapeError("product_expectation: " + std::to_string(params.n()) +
                     " qubit angles for an operator on " +
                     std::to_string(op.n()));
  }
  return evaluate(compile_terms(op), bloch_vectors(params));
}

BoundReport separable_max(const PauliSum& op, const OptimizerConfig& cfg,
                          std::optional<double> reference) {
  require_hermitian(op, "separable_max");
  cfg.validate();
  const int n = op.n();
  if (n > limits::kStructuredQubits) {
    throw SizeError("separable_max: n = " + std::to_string(n) +
                    " exceeds limit " +
                    std::to_string(limits::kStructuredQubits));
  }
  const std::vector<CompiledTerm> compiled = compile_terms(op);
  Xorshift64Star rng(cfg.seed);

  BoundReport report;
  report.kind = BoundKind::Separable;
  double best_value = -std::numeric_limits<double>::infinity();
  ProductStateParams best_params;

  for (int restart = 0; restart < cfg.restarts; ++restart) {
    ProductStateParams params;
    params.angles.resize(static_cast<std::size_t>(n));
    for (BlochAngles& a : params.angles) {
      a.theta = rng.uniform(0.0, kPi);
      a.phi = rng.uniform(0.0, 2.0 * kPi);
    }
    std::vector<Vec3> bloch = bloch_vectors(params);
    double current = evaluate(compiled, bloch);

    for (int sweep = 0; sweep < cfg.max_iterations; ++sweep) {
      double largest_move = 0.0;
      for (int site = 0; site < n; ++site) {
        for (int which = 0; which < 2; ++which) {
          BlochAngles& angles = params.angles[static_cast<std::size_t>(site)];
          double& coord = which == 0 ? angles.theta : angles.phi;
          const double old_coord = coord;
          auto slice = [&](double x) {
            coord = x;
            bloch[static_cast<std::size_t>(site)] = bloch_of(angles);
            return evaluate(compiled, bloch);
          };
          double cand_x = old_coord;
          double cand_f = current;
          // The slice of the objective along one angle is a single-harmonic
          // sinusoid, so any window of length pi holds at most one interior
          // peak; the phi range is searched as two such windows.
          const double span_hi = which == 0 ? kPi : 2.0 * kPi;
          for (double lo = 0.0; lo < span_hi - 0.1; lo += kPi) {
            auto [x, fx] = golden_max(slice, lo, std::min(lo + kPi, span_hi),
                                      cfg.step_tolerance);
            if (fx > cand_f) {
              cand_f = fx;
              cand_x = x;
            }
          }
          coord = cand_x;
          bloch[static_cast<std::size_t>(site)] = bloch_of(angles);
          current = cand_f;
          largest_move =
              std::max(largest_move, std::abs(cand_x - old_coord));
        }
      }
      if (largest_move <= cfg.step_tolerance) {
        break;
      }
    }
    if (current > best_value) {
      best_value = current;
      best_params = params;
    }
  }

  report.value = best_value;
  report.product_argmax = std::move(best_params);
  finish_report(report, reference);
  return report;
}

BoundReport entangled_max(const PauliSum& op,
                          std::optional<double> reference) {
  require_hermitian(op, "entangled_max");
  if (op.n() > limits::kDenseQubits) {
    throw SizeError("entangled_max: n = " + std::to_string(op.n()) +
                    " exceeds dense limit " +
                    std::to_string(limits::kDenseQubits));
  }
  const Spectrum spectrum = hermitian_eigen(op.to_dense());
  const Eigen::Index top = spectrum.eigenvalues.size() - 1;
  BoundReport report;
  report.kind = BoundKind::Entangled;
  report.value = spectrum.eigenvalues(top);
  report.state_argmax = spectrum.eigenvectors.col(top);
  finish_report(report, reference);
  return report;
}

BoundReport lhv_max(const PauliSum& op, std::optional<double> reference) {
  require_hermitian(op, "lhv_max");
  const int n = op.n();
  if (n > limits::kLhvQubits) {
    throw SizeError("lhv_max: n = " + std::to_string(n) +
                    " exceeds the exhaustive enumeration limit " +
                    std::to_string(limits::kLhvQubits) +
                    " (8^n assignments)");
  }
  // Assignment bit layout: bits [0, n) flip X signs, [n, 2n) Y, [2n, 3n) Z,
  // with bit j of each block belonging to site j+1.
  std::vector<double> coeffs;
  std::vector<std::uint64_t> masks;
  coeffs.reserve(op.size());
  masks.reserve(op.size());
  for (const auto& [s, c] : op.terms()) {
    std::uint64_t mask = 0;
    for (int site = 1; site <= n; ++site) {
      const int j = site - 1;
      switch (s.letter(site)) {
        case Pauli::I:
          break;
        case Pauli::X:
          mask |= std::uint64_t(1) << j;
          break;
        case Pauli::Y:
          mask |= std::uint64_t(1) << (n + j);
          break;
        case Pauli::Z:
          mask |= std::uint64_t(1) << (2 * n + j);
          break;
      }
    }
    coeffs.push_back(c.real());
    masks.push_back(mask);
  }

  const std::uint64_t total = std::uint64_t(1) << (3 * n);
  double best = -std::numeric_limits<double>::infinity();
  std::uint64_t best_assignment = 0;
  for (std::uint64_t v = 0; v < total; ++v) {
    double value = 0.0;
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
      value += (std::popcount(v & masks[t]) & 1) ? -coeffs[t] : coeffs[t];
    }
    if (value > best) {
      best = value;
      best_assignment = v;
    }
  }

  LhvAssignment assignment;
  assignment.signs.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    for (int axis = 0; axis < 3; ++axis) {
      const bool flipped =
          (best_assignment >> (axis * n + j)) & std::uint64_t(1);
      assignment.signs[static_cast<std::size_t>(j)][static_cast<std::size_t>(
          axis)] = flipped ? -1 : 1;
    }
  }

  BoundReport report;
  report.kind = BoundKind::Lhv;
  report.value = best;
  report.lhv_argmax = std::move(assignment);
  finish_report(report, reference);
  return report;
}

std::vector<ScanRow> ghz_scan(int n, int theta_steps) {
  if (theta_steps < 2) {
    throw DomainError("ghz_scan: theta_steps = " +
                      std::to_string(theta_steps) + ", expected >= 2");
  }
  const PauliSum op = variant_operator(n);
  const double scale = std::pow(2.0, 0.5 * (n - 1));
  const double offset = std::pow(2.0, n - 1);
  std::vector<ScanRow> rows;
  rows.reserve(static_cast<std::size_t>(theta_steps));
  for (int i = 0; i < theta_steps; ++i) {
    const double theta =
        (kPi / 4.0) * static_cast<double>(i) / (theta_steps - 1);
    ScanRow row;
    row.theta = theta;
    row.measured = op.expectation(ghz_general(n, theta).state);
    row.analytic = scale * std::sin(2.0 * theta) + offset;
    row.separable_bound = offset;
    rows.push_back(row);
  }
  return rows;
}

GisinReport gisin_witness(const StateVector& psi) {
  const SchmidtForm form = schmidt_decompose(psi);
  if (form.theta <= tol::kSchmidtEntangled) {
    throw NotEntangledError("gisin_witness: Schmidt angle " +
                            std::to_string(form.theta) +
                            " marks a product state");
  }
  const Eigen::Matrix3d r1 = bloch_rotation(form.u1);
  const Eigen::Matrix3d r2 = bloch_rotation(form.u2);

  GisinReport report;
  report.schmidt_theta = form.theta;
  report.a = r1 * Vec3(1, 0, 0);
  report.a_prime = r1 * Vec3(0, 1, 0);
  report.b = r2 * Vec3(1, 0, 0);
  report.b_prime = r2 * Vec3(0, 1, 0);

  const SpinObservable a(report.a), a_prime(report.a_prime);
  const SpinObservable b(report.b), b_prime(report.b_prime);
  report.a_cross = cross_observable(a, a_prime).axis();
  report.b_cross = cross_observable(b, b_prime).axis();

  const PauliSum combination =
      variant_chsh_expression(a, a_prime, b, b_prime);
  report.combination_value = combination.expectation(psi);
  report.operator_value = 0.5 * (report.combination_value + 2.0);
  const double sin_2theta = std::sin(2.0 * form.theta);
  report.combination_predicted = 2.0 * std::sqrt(2.0) * sin_2theta + 2.0;
  report.operator_predicted = std::sqrt(2.0) * sin_2theta + 2.0;
  report.violates =
      report.operator_value > report.separable_bound + tol::kViolationSlack;
  return report;
}

}  // namespace bellvar
