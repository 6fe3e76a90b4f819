// analysis.cpp

#include "wpurify/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <stdexcept>

#include "wpurify/genuine_basis.hpp"
#include "wpurify/numfmt.hpp"

namespace wpurify {

namespace {

double require_unit_interval(double f, const char* what) {
  if (!(f >= 0.0 && f <= 1.0))
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
  return f;
}

double map_gain(double f) { return fw_concise_map(f).f_out - f; }

// Bisection on a bracket with a sign change. Argument tolerance 1e-14,
// below the 1e-10 the callers promise.
double bisect_root(double lo, double hi, double g_lo,
                   const std::function<double(double)>& g) {
  double g_left = g_lo;
  for (int iter = 0; iter < 200 && hi - lo > 1e-14; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double g_mid = g(mid);
    if (g_mid == 0.0) return mid;
    if ((g_left < 0.0) == (g_mid < 0.0)) {
      lo = mid;
      g_left = g_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double p000_analytic(const CoefficientVector& c) {
  const double a = c[0] + c[1] + c[2];
  const double b = c[3] + c[4] + c[5];
  const double g = c[6] + c[7];
  return (2.0 * a * a + 2.0 * b * b + 3.0 * g * g) / 6.0;
}

double fw000_analytic(const CoefficientVector& c) {
  const double denominator = 6.0 * p000_analytic(c);
  if (denominator <= kBranchFloor)
    throw std::domain_error("success probability vanishes for this input");
  return (2.0 * c[0] * c[0] + 4.0 * c[1] * c[2]) / denominator;
}

ConciseMapPoint fw_concise_map(double f) {
  require_unit_interval(f, "W fraction");
  ConciseMapPoint point;
  point.f_in = f;
  point.f_out = (51.0 * f * f - 4.0 * f + 2.0) / (40.0 * f * f - 10.0 * f + 19.0);
  point.p000 = (40.0 * f * f - 10.0 * f + 19.0) / 147.0;
  point.yield = point.p000 / 2.0;
  return point;
}

std::vector<double> fixed_points_concise() {
  constexpr int kScanPoints = 4096;

  const std::function<double(double)> g = map_gain;
  std::vector<double> roots;
  auto push_root = [&roots](double r) {
    for (double seen : roots)
      if (std::abs(seen - r) < 1e-8) return;
    roots.push_back(r);
  };

  double prev_f = 0.0;
  double prev_g = g(prev_f);
  if (prev_g == 0.0) push_root(prev_f);
  for (int i = 1; i <= kScanPoints; ++i) {
    const double f = static_cast<double>(i) / kScanPoints;
    const double gf = g(f);
    if (gf == 0.0) {
      push_root(f);
    } else if ((prev_g < 0.0) != (gf < 0.0) && prev_g != 0.0) {
      push_root(bisect_root(prev_f, f, prev_g, g));
    }
    prev_f = f;
    prev_g = gf;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

RecurrenceTrace recurrence(double f0, int rounds) {
  require_unit_interval(f0, "initial W fraction");
  if (rounds < 1) throw std::invalid_argument("round count must be at least 1");
  RecurrenceTrace trace;
  trace.rounds.reserve(static_cast<std::size_t>(rounds));
  double f = f0;
  for (int r = 0; r < rounds; ++r) {
    const ConciseMapPoint point = fw_concise_map(f);
    trace.cumulative_yield *= point.yield;
    trace.rounds.push_back(point);
    f = point.f_out;
  }
  return trace;
}

WitnessSpec witness_preset(WitnessPreset preset) {
  const GenuineBasis basis = genuine_basis_3();
  switch (preset) {
    case WitnessPreset::PaperW:
      return WitnessSpec{13.0 / 20.0, basis.state(1), "paper-w"};
    case WitnessPreset::StandardW:
      return WitnessSpec{2.0 / 3.0, basis.state(1), "standard-w"};
    case WitnessPreset::Ghz:
      return WitnessSpec{3.0 / 4.0, basis.state(7), "ghz"};
  }
  throw std::invalid_argument("unknown witness preset");
}

std::optional<WitnessPreset> witness_preset_from_name(std::string_view name) {
  if (name == "paper-w") return WitnessPreset::PaperW;
  if (name == "standard-w") return WitnessPreset::StandardW;
  if (name == "ghz") return WitnessPreset::Ghz;
  return std::nullopt;
}

std::string_view to_string(WitnessPreset preset) {
  switch (preset) {
    case WitnessPreset::PaperW: return "paper-w";
    case WitnessPreset::StandardW: return "standard-w";
    case WitnessPreset::Ghz: return "ghz";
  }
  return "unknown";
}

double witness_expectation(const DensityMatrix& rho, const WitnessSpec& w) {
  return w.alpha - expectation(rho, w.target_state);
}

std::optional<double> witness_threshold(const WitnessSpec& w) {
  const auto g = [&w](double c1) {
    return witness_expectation(concise_state(c1), w);
  };
  constexpr int kScanPoints = 256;
  double prev_c = 0.0;
  double prev_g = g(prev_c);
  if (prev_g == 0.0) return prev_c;
  for (int i = 1; i <= kScanPoints; ++i) {
    const double c = static_cast<double>(i) / kScanPoints;
    const double gc = g(c);
    if (gc == 0.0) return c;
    if ((prev_g < 0.0) != (gc < 0.0))
      return bisect_root(prev_c, c, prev_g, g);
    prev_c = c;
    prev_g = gc;
  }
  return std::nullopt;
}

WitnessReport witness_report(double c1, WitnessPreset preset) {
  require_unit_interval(c1, "W fraction");
  const WitnessSpec spec = witness_preset(preset);
  WitnessReport report;
  report.preset_name = spec.name;
  report.alpha = spec.alpha;
  report.c1 = c1;
  report.expectation = witness_expectation(concise_state(c1), spec);
  report.threshold = witness_threshold(spec);
  if (preset == WitnessPreset::PaperW || preset == WitnessPreset::StandardW) {
    report.note =
        "note: the two W-witness presets disagree: paper-w uses alpha = 13/20 "
        "and standard-w uses the conventional alpha = 2/3; on the concise "
        "family the certification threshold equals alpha in both cases";
  }
  return report;
}

void export_curves(double f_min, double f_max, int steps, std::ostream& out) {
  if (!(f_min >= 0.0 && f_min < f_max && f_max <= 1.0))
    throw std::invalid_argument("curve range must satisfy 0 <= f_min < f_max <= 1");
  if (steps < 2) throw std::invalid_argument("curve export needs at least 2 steps");

  out << "f_in,f_out,p000,yield\n";
  for (int k = 0; k < steps; ++k) {
    // Endpoint-exact interpolation so the last row lands on f_max itself.
    const double f = (static_cast<double>(steps - 1 - k) * f_min +
                      static_cast<double>(k) * f_max) /
                     static_cast<double>(steps - 1);
    const ConciseMapPoint p = fw_concise_map(f);
    out << format_sig(p.f_in) << ',' << format_sig(p.f_out) << ','
        << format_sig(p.p000) << ',' << format_sig(p.yield) << '\n';
  }
}

void export_curves(double f_min, double f_max, int steps,
                   const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot open output file: " + path.string());
  export_curves(f_min, f_max, steps, out);
  if (!out.good())
    throw std::runtime_error("failed while writing: " + path.string());
}

}  // namespace wpurify
