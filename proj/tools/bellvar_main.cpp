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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bellvar/bell_ops.hpp"
#include "bellvar/bounds.hpp"
#include "bellvar/common.hpp"
#include "bellvar/io.hpp"
#include "bellvar/schmidt.hpp"
#include "bellvar/states.hpp"

namespace {

using bellvar::format_g17;
using nlohmann::json;

struct Options {
  std::string command;
  int n = 3;
  double theta = bellvar::kPi / 4.0;
  bool theta_given = false;
  int theta_steps = 181;
  std::string expr = "variant";
  int restarts = 64;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string input_path;
  std::string output_path;
  std::string emit_state_path;
};

void require_format(const Options& opt,
                    std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (opt.format == f) {
      return;
    }
  }
  throw bellvar::DomainError("format '" + opt.format +
                             "' is not defined for command '" + opt.command +
                             "'");
}

/// The operator family selected by --expr. For `variant` this is the
/// combination a local experiment measures: the five-term two-qubit
/// combination at n = 2, the correlator plus even z-products at n >= 3.
bellvar::PauliSum selected_operator(const Options& opt) {
  if (opt.expr == "chsh" || (opt.expr == "variant" && opt.n == 2)) {
    if (opt.n != 2) {
      throw bellvar::DomainError("expr '" + opt.expr +
                                 "' is two-qubit only, got n = " +
                                 std::to_string(opt.n));
    }
    return opt.expr == "chsh" ? bellvar::canonical_chsh()
                              : bellvar::canonical_variant_chsh();
  }
  if (opt.expr == "variant") {
    return bellvar::variant_expression(opt.n).measurable();
  }
  if (opt.expr == "mk") {
    return bellvar::mk_bell(opt.n).b;
  }
  return bellvar::mk_bell_squared(opt.n);
}

struct References {
  std::optional<double> separable;
  std::optional<double> entangled;
  std::optional<double> lhv;
};

References selected_references(const Options& opt) {
  References refs;
  const double half_power = std::pow(2.0, opt.n - 1);
  const double corr_power = std::pow(2.0, 0.5 * (opt.n - 1));
  if (opt.expr == "chsh") {
    refs.separable = 2.0;
    refs.entangled = 2.0 * std::sqrt(2.0);
    refs.lhv = 2.0;
  } else if (opt.expr == "variant" && opt.n == 2) {
    refs.separable = 2.0;
    refs.entangled = 2.0 * (1.0 + std::sqrt(2.0));
    refs.lhv = 4.0;
  } else if (opt.expr == "variant") {
    refs.separable = half_power - 1.0;
    refs.entangled = corr_power + half_power - 1.0;
  } else if (opt.expr == "mk") {
    refs.entangled = corr_power;
  } else {  // mk-squared
    refs.separable = half_power;
    refs.entangled = half_power;
    refs.lhv = half_power;
  }
  return refs;
}

std::string optional_g17(const std::optional<double>& v) {
  return v ? format_g17(*v) : std::string("-");
}

json optional_json(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

bellvar::StateVector resolve_two_qubit_state(const Options& opt) {
  if (!opt.input_path.empty()) {
    bellvar::StateVector psi = bellvar::read_state_file(opt.input_path);
    if (psi.n() != 2) {
      throw bellvar::DomainError("input state has n = " +
                                 std::to_string(psi.n()) + ", expected 2");
    }
    return psi;
  }
  if (opt.theta_given) {
    return bellvar::ghz_general(2, opt.theta).state;
  }
  return bellvar::random_state(2, opt.seed);
}

std::string run_build(const Options& opt) {
  require_format(opt, {"text", "json"});
  const bellvar::PauliSum op = selected_operator(opt);
  if (opt.format == "text") {
    return bellvar::pauli_sum_to_text(op);
  }
  json terms = json::array();
  for (const auto& [s, c] : op.terms()) {
    terms.push_back({{"coefficient", c.real()}, {"letters", s.str()}});
  }
  json j{{"command", "build"},
         {"expr", opt.expr},
         {"n", opt.n},
         {"terms", std::move(terms)}};
  return j.dump() + "\n";
}

std::string run_verify(const Options& opt) {
  require_format(opt, {"text", "json"});
  if (opt.n > bellvar::limits::kDenseQubits) {
    throw bellvar::DomainError("verify needs a dense matrix, n <= " +
                               std::to_string(bellvar::limits::kDenseQubits));
  }
  const double spectral = bellvar::verify_spectral_decomposition(opt.n);
  const double square = bellvar::verify_square_identity(opt.n);
  const bool square_checked = true;
  const bool pass = spectral < 1e-12 && square < 1e-12;
  std::string out;
  if (opt.format == "text") {
    out += "spectral_residual " + format_g17(spectral) + "\n";
    out += "square_identity_residual " +
           (square_checked ? format_g17(square) : std::string("-")) + "\n";
    out += std::string("pass ") + (pass ? "true" : "false") + "\n";
  } else {
    json j{{"command", "verify"},
           {"n", opt.n},
           {"spectral_residual", spectral},
           {"square_identity_residual",
            square_checked ? json(square) : json(nullptr)},
           {"pass", pass}};
    out = j.dump() + "\n";
  }
  if (!pass) {
    throw bellvar::NumericalError("verification residual above 1e-12 "
                                  "(spectral " +
                                  format_g17(spectral) + ", square " +
                                  format_g17(square) + ")");
  }
  return out;
}

std::string run_bounds(const Options& opt) {
  require_format(opt, {"text", "json"});
  const bellvar::PauliSum op = selected_operator(opt);
  const References refs = selected_references(opt);

  bellvar::OptimizerConfig cfg;
  cfg.restarts = opt.restarts;
  cfg.seed = opt.seed;
  const bellvar::BoundReport separable =
      bellvar::separable_max(op, cfg, refs.separable);

  std::optional<bellvar::BoundReport> entangled;
  if (opt.n <= bellvar::limits::kDenseQubits) {
    entangled = bellvar::entangled_max(op, refs.entangled);
  }
  std::optional<bellvar::BoundReport> lhv;
  if (opt.n <= bellvar::limits::kLhvQubits) {
    lhv = bellvar::lhv_max(op, refs.lhv);
  }

  if (opt.format == "text") {
    std::string out;
    auto line = [&](const char* name, const bellvar::BoundReport& r) {
      out += std::string(name) + " " + format_g17(r.value) + " reference " +
             optional_g17(r.bound_reference) + " gap " +
             optional_g17(r.gap) + "\n";
    };
    line("separable", separable);
    if (entangled) {
      line("entangled", *entangled);
    } else {
      out += "entangled skipped (n exceeds dense limit)\n";
    }
    if (lhv) {
      line("lhv", *lhv);
    } else {
      out += "lhv skipped (n exceeds enumeration limit)\n";
    }
    return out;
  }
  auto block = [](const bellvar::BoundReport& r) {
    return json{{"value", r.value},
                {"reference", optional_json(r.bound_reference)},
                {"gap", optional_json(r.gap)}};
  };
  json j{{"command", "bounds"}, {"expr", opt.expr}, {"n", opt.n}};
  j["separable"] = block(separable);
  j["entangled"] = entangled ? block(*entangled) : json(nullptr);
  j["lhv"] = lhv ? block(*lhv) : json(nullptr);
  return j.dump() + "\n";
}

std::string run_lhv(const Options& opt) {
  require_format(opt, {"text", "json"});
  const bellvar::PauliSum op = selected_operator(opt);
  const bellvar::BoundReport report =
      bellvar::lhv_max(op, selected_references(opt).lhv);
  if (opt.format == "text") {
    return format_g17(report.value) + "\n";
  }
  json signs = json::array();
  for (const auto& site : report.lhv_argmax->signs) {
    signs.push_back({site[0], site[1], site[2]});
  }
  json j{{"command", "lhv"},
         {"expr", opt.expr},
         {"n", opt.n},
         {"value", report.value},
         {"reference", optional_json(report.bound_reference)},
         {"assignment", std::move(signs)}};
  return j.dump() + "\n";
}

std::string run_scan(const Options& opt) {
  require_format(opt, {"text", "json", "csv"});
  const std::vector<bellvar::ScanRow> rows =
      bellvar::ghz_scan(opt.n, opt.theta_steps);
  if (opt.format == "json") {
    json arr = json::array();
    for (const bellvar::ScanRow& r : rows) {
      arr.push_back({{"theta", r.theta},
                     {"measured", r.measured},
                     {"analytic", r.analytic},
                     {"separable_bound", r.separable_bound}});
    }
    json j{{"command", "scan-ghz"},
           {"n", opt.n},
           {"theta_steps", opt.theta_steps},
           {"rows", std::move(arr)}};
    return j.dump() + "\n";
  }
  // text and csv share the table form.
  std::string out = "theta,measured,analytic,separable_bound\n";
  for (const bellvar::ScanRow& r : rows) {
    out += format_g17(r.theta) + "," + format_g17(r.measured) + "," +
           format_g17(r.analytic) + "," + format_g17(r.separable_bound) +
           "\n";
  }
  return out;
}

std::string vec3_text(const bellvar::Vec3& v) {
  return format_g17(v(0)) + " " + format_g17(v(1)) + " " + format_g17(v(2));
}

json vec3_json(const bellvar::Vec3& v) {
  return json{v(0), v(1), v(2)};
}

std::string run_gisin(const Options& opt) {
  require_format(opt, {"text", "json"});
  const bellvar::StateVector psi = resolve_two_qubit_state(opt);
  if (!opt.emit_state_path.empty()) {
    bellvar::write_text_file(opt.emit_state_path,
                             bellvar::state_to_json(psi) + "\n");
  }
  const bellvar::GisinReport report = bellvar::gisin_witness(psi);
  if (opt.format == "text") {
    std::string out;
    out += "schmidt_theta " + format_g17(report.schmidt_theta) + "\n";
    out += "a " + vec3_text(report.a) + "\n";
    out += "a_prime " + vec3_text(report.a_prime) + "\n";
    out += "a_cross " + vec3_text(report.a_cross) + "\n";
    out += "b " + vec3_text(report.b) + "\n";
    out += "b_prime " + vec3_text(report.b_prime) + "\n";
    out += "b_cross " + vec3_text(report.b_cross) + "\n";
    out += "combination_value " + format_g17(report.combination_value) + "\n";
    out += "combination_predicted " +
           format_g17(report.combination_predicted) + "\n";
    out += "operator_value " + format_g17(report.operator_value) + "\n";
    out += "operator_predicted " + format_g17(report.operator_predicted) +
           "\n";
    out += "separable_bound " + format_g17(report.separable_bound) + "\n";
    out += std::string("violates ") + (report.violates ? "true" : "false") +
           "\n";
    return out;
  }
  json j{{"command", "gisin"},
         {"schmidt_theta", report.schmidt_theta},
         {"a", vec3_json(report.a)},
         {"a_prime", vec3_json(report.a_prime)},
         {"a_cross", vec3_json(report.a_cross)},
         {"b", vec3_json(report.b)},
         {"b_prime", vec3_json(report.b_prime)},
         {"b_cross", vec3_json(report.b_cross)},
         {"combination_value", report.combination_value},
         {"combination_predicted", report.combination_predicted},
         {"operator_value", report.operator_value},
         {"operator_predicted", report.operator_predicted},
         {"separable_bound", report.separable_bound},
         {"violates", report.violates}};
  return j.dump() + "\n";
}

json mat2_json(const bellvar::Mat2c& m) {
  json rows = json::array();
  for (int i = 0; i < 2; ++i) {
    json row = json::array();
    for (int c = 0; c < 2; ++c) {
      row.push_back({m(i, c).real(), m(i, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string mat2_text(const bellvar::Mat2c& m) {
  std::string out;
  for (int i = 0; i < 2; ++i) {
    for (int c = 0; c < 2; ++c) {
      if (i != 0 || c != 0) {
        out += " ";
      }
      out += format_g17(m(i, c).real()) + " " + format_g17(m(i, c).imag());
    }
  }
  return out;
}

std::string run_schmidt(const Options& opt) {
  require_format(opt, {"text", "json"});
  const bellvar::StateVector psi = resolve_two_qubit_state(opt);
  const bellvar::SchmidtForm form = bellvar::schmidt_decompose(psi);
  if (opt.format == "text") {
    std::string out;
    out += "theta " + format_g17(form.theta) + "\n";
    out += "u1 " + mat2_text(form.u1) + "\n";
    out += "u2 " + mat2_text(form.u2) + "\n";
    std::string amps;
    for (Eigen::Index k = 0; k < 4; ++k) {
      if (k != 0) {
        amps += " ";
      }
      amps += format_g17(form.canonical_state.amps()(k).real()) + " " +
              format_g17(form.canonical_state.amps()(k).imag());
    }
    out += "canonical " + amps + "\n";
    return out;
  }
  json amps = json::array();
  for (Eigen::Index k = 0; k < 4; ++k) {
    amps.push_back({form.canonical_state.amps()(k).real(),
                    form.canonical_state.amps()(k).imag()});
  }
  json j{{"command", "schmidt"},
         {"theta", form.theta},
         {"u1", mat2_json(form.u1)},
         {"u2", mat2_json(form.u2)},
         {"canonical_amps", std::move(amps)}};
  return j.dump() + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bell operator construction and bound certification"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool with_expr) {
    sub->add_option("--n", opt.n, "qubit count")
        ->check(CLI::Range(2, bellvar::limits::kStructuredQubits));
    sub->add_option("--seed", opt.seed, "random seed");
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--output", opt.output_path,
                    "write output to this file instead of standard output");
    if (with_expr) {
      sub->add_option("--expr", opt.expr, "expression family")
          ->check(CLI::IsMember({"chsh", "variant", "mk", "mk-squared"}));
    }
  };

  CLI::App* build = app.add_subcommand(
      "build", "print the selected operator as a Pauli sum");
  add_common(build, true);

  CLI::App* verify = app.add_subcommand(
      "verify", "check the rank-2 spectral form and the square identity");
  add_common(verify, false);

  CLI::App* bounds = app.add_subcommand(
      "bounds", "certify separable, entangled, and deterministic-model "
                "maxima of the selected operator");
  add_common(bounds, true);
  bounds->add_option("--restarts", opt.restarts, "optimizer restarts")
      ->check(CLI::PositiveNumber);

  CLI::App* lhv = app.add_subcommand(
      "lhv", "exact maximum over deterministic sign assignments");
  add_common(lhv, true);

  CLI::App* scan = app.add_subcommand(
      "scan-ghz", "violation curve over the generalized GHZ family");
  add_common(scan, false);
  scan->add_option("--theta-steps", opt.theta_steps, "grid points")
      ->check(CLI::Range(2, 1000000));

  CLI::App* gisin = app.add_subcommand(
      "gisin", "entanglement witness from the Schmidt form of a two-qubit "
               "state");
  add_common(gisin, false);
  gisin->add_option("--input", opt.input_path, "state JSON file");
  CLI::Option* theta_opt =
      gisin->add_option("--theta", opt.theta,
                        "use the canonical state with this Schmidt angle")
          ->check(CLI::Range(0.0, bellvar::kPi / 4.0));
  gisin->add_option("--emit-state", opt.emit_state_path,
                    "also write the analyzed state to this JSON file");

  CLI::App* schmidt = app.add_subcommand(
      "schmidt", "canonical two-qubit form and local unitaries");
  add_common(schmidt, false);
  schmidt->add_option("--input", opt.input_path, "state JSON file");
  CLI::Option* schmidt_theta_opt =
      schmidt
          ->add_option("--theta", opt.theta,
                       "use the canonical state with this Schmidt angle")
          ->check(CLI::Range(0.0, bellvar::kPi / 4.0));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.get_name() << ": " << e.what() << "\n";
    return 2;
  }

  opt.theta_given = theta_opt->count() > 0 || schmidt_theta_opt->count() > 0;

  try {
    std::string out;
    if (build->parsed()) {
      opt.command = "build";
      out = run_build(opt);
    } else if (verify->parsed()) {
      opt.command = "verify";
      out = run_verify(opt);
    } else if (bounds->parsed()) {
      opt.command = "bounds";
      out = run_bounds(opt);
    } else if (lhv->parsed()) {
      opt.command = "lhv";
      out = run_lhv(opt);
    } else if (scan->parsed()) {
      opt.command = "scan-ghz";
      out = run_scan(opt);
    } else if (gisin->parsed()) {
      opt.command = "gisin";
      out = run_gisin(opt);
    } else if (schmidt->parsed()) {
      opt.command = "schmidt";
      out = run_schmidt(opt);
    }
    if (opt.output_path.empty()) {
      std::cout << out;
      std::cout.flush();
    } else {
      bellvar::write_text_file(opt.output_path, out);
    }
    return 0;
  } catch (const bellvar::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
