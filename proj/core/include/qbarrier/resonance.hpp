#pragma once

// Resonances of |T|^2: closed forms for the complex potential and a
// grid + golden-section search for arbitrary (Vc, Vq).

#include <array>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qbarrier/barrier.hpp"

namespace qbarrier {

struct Potential {
  double vc = 1.0;
  double vq = 0.0;
  double theta = 0.0;
  std::string label;

  AdimensionalBarrier barrier(double lambda) const { return {vc, vq, theta, lambda}; }
};

/// (1, 0), (sqrt3/2, 1/2), (1/sqrt2, 1/sqrt2), (1/2, sqrt3/2), (0, 1).
std::vector<Potential> table_potentials();

struct EnergyResonance {
  int n = 0;
  double eps = 0.0;              ///< eps_n = sqrt(1 + n^2 pi^2 / l0^2)
  double delta_eps = 0.0;        ///< eps_{n+1} - eps_n
  double delta_eps_tilde = 0.0;  ///< offset of the minimum between eps_n and eps_{n+1}
};

struct WidthResonance {
  int n = 0;
  double lambda = 0.0;              ///< n pi / sqrt(eps0^2 - 1)
  double delta_lambda = 0.0;        ///< pi / sqrt(eps0^2 - 1), n-independent
  double delta_lambda_tilde = 0.0;  ///< pi / (2 sqrt(eps0^2 - 1))
};

/// Complex-potential resonance energies for n = 1..n_max at fixed width.
std::vector<EnergyResonance> complex_resonance_energies(double lambda0, int n_max);

/// Complex-potential resonance widths for n = 1..n_max at fixed energy.
/// Throws InvalidParameter for eps0 <= 1.
std::vector<WidthResonance> complex_resonance_widths(double eps0, int n_max);

/// [1 + 1/(4 e^2 (e^2 - 1))]^-1, the complex-case |T|^2 between two resonances.
double min_transmission(double eps_tilde);

enum class ScanVariable { energy, width };

struct Extremum {
  double location = 0.0;
  double prob = 0.0;
};

struct ResonanceScan {
  ScanVariable variable = ScanVariable::energy;
  /// lambda for an energy scan, eps for a width scan.
  double fixed = 0.0;
  std::vector<Extremum> peaks;
  std::vector<Extremum> valleys;
};

struct ScanOptions {
  double step = 1e-3;
  double tolerance = 1e-6;
};

/// Local extrema of f on the grid lo + k step (k >= 1, up to hi), each refined
/// by golden-section search to `tolerance`.
void find_extrema(const std::function<double(double)>& f, double lo, double hi,
                  const ScanOptions& options, std::vector<Extremum>& peaks,
                  std::vector<Extremum>& valleys);

/// |T|^2 extrema in eps over (lo, hi] at width `fixed` (energy scan) or in
/// lambda over (lo, hi] at energy `fixed` (width scan).  b.lambda is ignored.
ResonanceScan scan_peaks(const AdimensionalBarrier& b, ScanVariable variable, double fixed,
                         double lo, double hi, const ScanOptions& options = {});

struct ResonanceRow {
  Potential potential;
  /// x_n, x_{n+1}, x_{n+1} - x_n, x_{n+2}, x_{n+2} - x_{n+1}
  std::array<double, 5> values{};
  int first_order = 1;
  bool complete = false;
};

/// Three consecutive resonance energies at width lambda0, starting with the
/// lowest peak above eps = 1.
std::vector<ResonanceRow> energy_resonance_table(double lambda0, std::span<const Potential> potentials,
                                                 const ScanOptions& options = {});

/// Resonance widths at energy eps0, in units of pi, for orders 2, 3, 4.
std::vector<ResonanceRow> width_resonance_table(double eps0, std::span<const Potential> potentials,
                                                const ScanOptions& options = {});

}  // namespace qbarrier
