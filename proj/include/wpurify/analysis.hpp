// analysis.hpp
// Closed forms for the success branch, the one-parameter recurrence map with
// its fixed points and yield, entanglement witnesses, and the CSV export of
// the map and yield curves.
#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "wpurify/qmat.hpp"
#include "wpurify/wstates.hpp"

namespace wpurify {

// Probability of the all-zero target outcome:
// [2(c1+c2+c3)^2 + 2(c4+c5+c6)^2 + 3(c7+c8)^2] / 6.
double p000_analytic(const CoefficientVector& c);

// GB1 population of the post-selected success branch:
// (2 c1^2 + 4 c2 c3) / (6 P000). This is the branch's W fraction whenever
// GB1 stays the dominant overlap, as it does on the concise family.
double fw000_analytic(const CoefficientVector& c);

struct ConciseMapPoint {
  double f_in = 0.0;
  double f_out = 0.0;  // (51 f^2 - 4 f + 2) / (40 f^2 - 10 f + 19)
  double p000 = 0.0;   // (40 f^2 - 10 f + 19) / 147
  double yield = 0.0;  // p000 / 2, surviving copies per consumed copy
};

ConciseMapPoint fw_concise_map(double f);

// Roots of f_out(f) = f in [0, 1], located to 1e-10: {1/8, 2/5, 1}.
std::vector<double> fixed_points_concise();

struct RecurrenceTrace {
  std::vector<ConciseMapPoint> rounds;
  double cumulative_yield = 1.0;  // product of per-round yields
};

// Iterates the concise map; each round starts from the twirled concise
// family, so rounds[k+1].f_in == rounds[k].f_out.
RecurrenceTrace recurrence(double f0, int rounds);

struct WitnessSpec {
  double alpha = 0.0;  // in (0, 1)
  StateVector target_state;
  std::string name;
};

enum class WitnessPreset {
  PaperW,     // alpha = 13/20, target GB1
  StandardW,  // alpha = 2/3,  target GB1
  Ghz,        // alpha = 3/4,  target GB7
};

WitnessSpec witness_preset(WitnessPreset preset);
std::optional<WitnessPreset> witness_preset_from_name(std::string_view name);
std::string_view to_string(WitnessPreset preset);

// Tr[(alpha I - |psi><psi|) rho] = alpha - <psi|rho|psi>. Negative values
// certify entanglement of the target's class.
double witness_expectation(const DensityMatrix& rho, const WitnessSpec& w);

// The c1 where the witness expectation on the concise family crosses zero,
// located to 1e-10; empty when no crossing exists in [0, 1].
std::optional<double> witness_threshold(const WitnessSpec& w);

struct WitnessReport {
  std::string preset_name;
  double alpha = 0.0;
  double c1 = 0.0;
  double expectation = 0.0;
  std::optional<double> threshold;
  // Nonempty for the W presets: the 13/20 constant and the conventional 2/3
  // constant disagree, and the report says so.
  std::string note;
};

WitnessReport witness_report(double c1, WitnessPreset preset);

// CSV with header "f_in,f_out,p000,yield", `steps` rows over [f_min, f_max]
// in ascending order, all values with 12 significant digits.
void export_curves(double f_min, double f_max, int steps, std::ostream& out);
void export_curves(double f_min, double f_max, int steps,
                   const std::filesystem::path& path);

}  // namespace wpurify
