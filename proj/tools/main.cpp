// main.cpp
// wpurify command line: basis verification, single purification rounds,
// recurrence iteration, curve sweeps, witness evaluation and by-product
// inspection. Exit codes: 0 success, 1 validation failure, 2 usage error.

#include <array>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "wpurify/analysis.hpp"
#include "wpurify/genuine_basis.hpp"
#include "wpurify/numfmt.hpp"
#include "wpurify/purify.hpp"
#include "wpurify/qmat.hpp"
#include "wpurify/wstates.hpp"

namespace {

using namespace wpurify;

std::string format_complex(const Complex& z) {
  const double im = z.imag();
  return format_sig(z.real()) + (im < 0.0 ? "-" : "+") + format_sig(std::abs(im)) +
         "i";
}

int run_basis_verify(int qubits, double tol) {
  const GenuineBasis basis = (qubits == 3) ? genuine_basis_3() : genuine_basis_4();
  const BasisReport report = verify_basis(basis, tol);
  std::cout << "qubits:               " << qubits << "\n"
            << "states:               " << basis.states.size() << "\n"
            << "max_offdiag_overlap:  " << format_sig(report.max_offdiag_overlap)
            << "\n"
            << "max_norm_error:       " << format_sig(report.max_norm_error) << "\n"
            << "completeness_defect:  " << format_sig(report.completeness_defect)
            << "\n"
            << "result: " << (report.passes(tol) ? "PASS" : "FAIL") << " (tol "
            << format_sig(tol) << ")\n";
  return report.passes(tol) ? 0 : 1;
}

CoefficientVector coeffs_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open coefficients file: " + path);
  return CoefficientVector::parse(in);
}

CoefficientVector random_simplex(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> draw(1.0);
  std::array<double, 8> values{};
  double sum = 0.0;
  for (double& v : values) {
    v = draw(rng);
    sum += v;
  }
  double acc = 0.0;
  for (int i = 0; i < 7; ++i) {
    values[static_cast<std::size_t>(i)] /= sum;
    acc += values[static_cast<std::size_t>(i)];
  }
  values[7] = 1.0 - acc;
  return CoefficientVector(values);
}

int run_purify(const CoefficientVector& c) {
  std::cout << "coefficients:";
  for (double v : c.values()) std::cout << ' ' << format_sig(v);
  std::cout << "\n\n" << serialize(purification_round(c));
  return 0;
}

int run_iterate(double c1, int rounds) {
  const RecurrenceTrace trace = recurrence(c1, rounds);
  std::cout << format_row({"round", "f_in", "f_out", "p000", "yield",
                           "cumulative_yield"});
  double cumulative = 1.0;
  for (std::size_t r = 0; r < trace.rounds.size(); ++r) {
    const ConciseMapPoint& p = trace.rounds[r];
    cumulative *= p.yield;
    std::cout << format_row({std::to_string(r + 1), format_sig(p.f_in),
                             format_sig(p.f_out), format_sig(p.p000),
                             format_sig(p.yield), format_sig(cumulative)});
  }
  return 0;
}

std::filesystem::path resolve_output(const std::string& out) {
  std::filesystem::path path(out);
  if (path.is_relative()) {
    if (const char* dir = std::getenv("WPURIFY_OUT_DIR")) path = dir / path;
  }
  return path;
}

int run_sweep(double from, double to, int steps, const std::string& out) {
  const std::filesystem::path path = resolve_output(out);
  export_curves(from, to, steps, path);
  std::cout << "wrote " << steps << " rows to " << path.string() << "\n";
  return 0;
}

int run_witness(double c1, const std::string& preset_name) {
  const auto preset = witness_preset_from_name(preset_name);
  if (!preset)
    throw std::invalid_argument("unknown witness preset '" + preset_name +
                                "' (use paper-w, standard-w or ghz)");
  const WitnessReport report = witness_report(c1, *preset);
  std::cout << "preset:      " << report.preset_name << "\n"
            << "alpha:       " << format_sig(report.alpha) << "\n"
            << "c1:          " << format_sig(report.c1) << "\n"
            << "expectation: " << format_sig(report.expectation) << "\n"
            << "entangled:   " << (report.expectation < 0.0 ? "yes" : "no")
            << " (negative expectation certifies the target class)\n"
            << "threshold:   "
            << (report.threshold ? format_sig(*report.threshold)
                                 : std::string("none in [0, 1]"))
            << "\n";
  if (!report.note.empty()) std::cout << report.note << "\n";
  return 0;
}

CoefficientVector mix_coefficients(const std::string& mix, double c1) {
  if (!(c1 >= 0.0 && c1 <= 1.0))
    throw std::invalid_argument("mixture weight must lie in [0, 1]");
  std::array<double, 8> values{};
  if (mix == "gb1gb4") {
    values[0] = c1;
    values[3] = 1.0 - c1;
  } else if (mix == "gb2gb5") {
    values[1] = c1;
    values[4] = 1.0 - c1;
  } else if (mix == "gb3gb6") {
    values[2] = c1;
    values[5] = 1.0 - c1;
  } else if (mix == "equal-gb1gb4") {
    values[0] = 0.5;
    values[3] = 0.5;
  } else {
    throw std::invalid_argument(
        "unknown mixture '" + mix +
        "' (use gb1gb4, gb2gb5, gb3gb6 or equal-gb1gb4)");
  }
  return CoefficientVector(values);
}

int run_byproduct(const std::string& mix, double c1, const std::string& outcome) {
  const CoefficientVector c = mix_coefficients(mix, c1);
  const RoundResult round = purification_round(c);
  const ByproductReport report = byproduct_analysis(round, outcome);

  std::string pair_names;
  std::string party_name = "none";
  {
    std::string all = "ABC";
    const int skip = report.factorized_party.value_or(-1);
    for (int q = 0; q < 3; ++q)
      if (q != skip) {
        if (!pair_names.empty()) pair_names += ',';
        pair_names += all[static_cast<std::size_t>(q)];
      }
    if (skip >= 0) party_name = std::string(1, all[static_cast<std::size_t>(skip)]);
  }

  std::cout << "outcome:             " << report.outcome << "\n"
            << "branch probability:  " << format_sig(report.branch_probability)
            << "\n"
            << "factorized party:    " << party_name << "\n"
            << "pair:                " << pair_names << "\n"
            << "pair purity:         " << format_sig(report.pair_purity) << "\n"
            << "pair is pure:        " << (report.is_pure ? "yes" : "no") << "\n"
            << "pair entropy (bits): " << format_sig(report.pair_entropy) << "\n"
            << "pair negativity:     " << format_sig(report.pair_negativity) << "\n"
            << "pair state (4x4):\n";
  for (Eigen::Index r = 0; r < 4; ++r) {
    std::cout << " ";
    for (Eigen::Index col = 0; col < 4; ++col)
      std::cout << ' ' << format_complex(report.pair_state.entries()(r, col));
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulator for a two-copy recurrence purification protocol on "
               "mixed three-qubit W states"};
  app.require_subcommand(1);
  int exit_code = 0;

  // basis verify
  auto* basis_cmd = app.add_subcommand("basis", "Genuine-basis checks");
  basis_cmd->require_subcommand(1);
  auto* verify_cmd =
      basis_cmd->add_subcommand("verify", "Orthonormality and completeness report");
  int qubits = 3;
  double tol = 1e-12;
  verify_cmd->add_option("--qubits", qubits, "Basis size: 3 or 4 qubits")
      ->required()
      ->check(CLI::IsMember({3, 4}));
  verify_cmd->add_option("--tol", tol, "Defect tolerance (default 1e-12)");
  verify_cmd->callback([&] { exit_code = run_basis_verify(qubits, tol); });

  // purify
  auto* purify_cmd =
      app.add_subcommand("purify", "Run one purification round, print all branches");
  double purify_c1 = 0.0;
  std::string coeffs_file;
  bool random_input = false;
  std::uint64_t seed = 12345;
  auto* input_group = purify_cmd->add_option_group("input");
  input_group->add_option("--c1", purify_c1,
                          "Concise-family input with this GB1 weight");
  input_group->add_option("--coeffs", coeffs_file,
                          "File with 8 whitespace- or comma-separated weights");
  input_group->add_flag("--random", random_input,
                        "Seeded random simplex input (see --seed)");
  input_group->require_option(1);
  purify_cmd->add_option("--seed", seed,
                         "Seed for --random sampling (default 12345)");
  purify_cmd->callback([&] {
    CoefficientVector c = random_input  ? random_simplex(seed)
                          : coeffs_file.empty()
                              ? CoefficientVector::concise(purify_c1)
                              : coeffs_from_file(coeffs_file);
    exit_code = run_purify(c);
  });

  // iterate
  auto* iterate_cmd =
      app.add_subcommand("iterate", "Iterate the concise recurrence map");
  double iterate_c1 = 0.0;
  int rounds = 1;
  iterate_cmd->add_option("--c1", iterate_c1, "Initial W fraction")->required();
  iterate_cmd->add_option("--rounds", rounds, "Number of rounds")->required();
  iterate_cmd->callback([&] { exit_code = run_iterate(iterate_c1, rounds); });

  // sweep
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Write the map and yield curves as CSV");
  double from = 0.0, to = 1.0;
  int steps = 2;
  std::string out_path;
  sweep_cmd->add_option("--from", from, "Lower end of the W-fraction grid")
      ->required();
  sweep_cmd->add_option("--to", to, "Upper end of the W-fraction grid")->required();
  sweep_cmd->add_option("--steps", steps, "Number of grid rows")->required();
  sweep_cmd
      ->add_option("--out", out_path,
                   "Output CSV path; relative paths honor WPURIFY_OUT_DIR")
      ->required();
  sweep_cmd->callback([&] { exit_code = run_sweep(from, to, steps, out_path); });

  // witness
  auto* witness_cmd =
      app.add_subcommand("witness", "Witness expectation and threshold");
  double witness_c1 = 0.0;
  std::string preset_name;
  witness_cmd->add_option("--c1", witness_c1, "Concise-family W fraction")
      ->required();
  witness_cmd
      ->add_option("--preset", preset_name, "paper-w, standard-w or ghz")
      ->required();
  witness_cmd->callback([&] { exit_code = run_witness(witness_c1, preset_name); });

  // byproduct
  auto* byproduct_cmd =
      app.add_subcommand("byproduct", "Bell by-product report for a failure branch");
  std::string mix;
  double mix_c1 = 0.5;
  std::string outcome;
  byproduct_cmd
      ->add_option("--mix", mix,
                   "Input mixture: gb1gb4, gb2gb5, gb3gb6 or equal-gb1gb4")
      ->required();
  byproduct_cmd->add_option(
      "--c1", mix_c1, "Weight of the first mixture component (default 0.5)");
  byproduct_cmd->add_option("--outcome", outcome, "Three-bit target outcome")
      ->required();
  byproduct_cmd->callback([&] { exit_code = run_byproduct(mix, mix_c1, outcome); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
