#include "qbarrier/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qbarrier/evaluate.hpp"
#include "qbarrier/parallel.hpp"

namespace qbarrier {

namespace {

constexpr double kPi = std::numbers::pi;

// Golden-section maximisation of g on [a, b].
double golden_max(const std::function<double(double)>& g, double a, double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double gc = g(c);
  double gd = g(d);
  while (b - a > tol) {
    if (gc >= gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - inv_phi * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + inv_phi * (b - a);
      gd = g(d);
    }
  }
  return 0.5 * (a + b);
}

ResonanceRow tabulate(const Potential& pot, const ResonanceScan& scan, int first_order, double unit) {
  ResonanceRow row;
  row.potential = pot;
  row.first_order = first_order;
  const auto first = static_cast<std::size_t>(first_order - 1);
  if (scan.peaks.size() < first + 3) return row;
  const double x1 = scan.peaks[first].location / unit;
  const double x2 = scan.peaks[first + 1].location / unit;
  const double x3 = scan.peaks[first + 2].location / unit;
  row.values = {x1, x2, x2 - x1, x3, x3 - x2};
  row.complete = true;
  return row;
}

}  // namespace

std::vector<Potential> table_potentials() {
  const double h = std::sqrt(3.0) / 2.0;
  const double r = 1.0 / std::sqrt(2.0);
  return {{1.0, 0.0, 0.0, "(1,0)"},
          {h, 0.5, 0.0, "(sqrt3/2,1/2)"},
          {r, r, 0.0, "(1/sqrt2,1/sqrt2)"},
          {0.5, h, 0.0, "(1/2,sqrt3/2)"},
          {0.0, 1.0, 0.0, "(0,1)"}};
}

std::vector<EnergyResonance> complex_resonance_energies(double lambda0, int n_max) {
  if (!(lambda0 > 0.0)) throw InvalidParameter("complex_resonance_energies: lambda0 must be positive");
  if (n_max < 1) throw InvalidParameter("complex_resonance_energies: n_max must be >= 1");
  auto eps_at = [lambda0](double order) { return std::sqrt(1.0 + order * order * kPi * kPi / (lambda0 * lambda0)); };
  std::vector<EnergyResonance> out;
  for (int n = 1; n <= n_max; ++n) {
    EnergyResonance e;
    e.n = n;
    e.eps = eps_at(n);
    e.delta_eps = eps_at(n + 1) - e.eps;
    e.delta_eps_tilde = eps_at(n + 0.5) - e.eps;
    out.push_back(e);
  }
  return out;
}

std::vector<WidthResonance> complex_resonance_widths(double eps0, int n_max) {
  if (!(eps0 > 1.0)) throw InvalidParameter("complex_resonance_widths: eps0 must exceed 1");
  if (n_max < 1) throw InvalidParameter("complex_resonance_widths: n_max must be >= 1");
  const double k = std::sqrt(eps0 * eps0 - 1.0);
  std::vector<WidthResonance> out;
  for (int n = 1; n <= n_max; ++n) {
    out.push_back({n, n * kPi / k, kPi / k, kPi / (2.0 * k)});
  }
  return out;
}

double min_transmission(double eps_tilde) {
  if (!(eps_tilde > 1.0)) throw InvalidParameter("min_transmission: eps_tilde must exceed 1");
  const double e2 = eps_tilde * eps_tilde;
  return 1.0 / (1.0 + 1.0 / (4.0 * e2 * (e2 - 1.0)));
}

void find_extrema(const std::function<double(double)>& f, double lo, double hi, const ScanOptions& options,
                  std::vector<Extremum>& peaks, std::vector<Extremum>& valleys) {
  if (!(options.step > 0.0)) throw InvalidParameter("scan: step must be positive");
  if (!(options.tolerance > 0.0)) throw InvalidParameter("scan: tolerance must be positive");
  peaks.clear();
  valleys.clear();
  if (!(hi > lo)) return;
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / options.step + 1e-9));
  std::vector<double> xs;
  xs.reserve(count);
  for (std::size_t k = 1; k <= count; ++k) xs.push_back(lo + static_cast<double>(k) * options.step);
  if (xs.size() < 3) return;
  const auto v = parallel_map<double>(xs.size(), [&](std::size_t k) { return f(xs[k]); }, 256);

  const auto neg = [&f](double x) { return -f(x); };
  for (std::size_t k = 1; k + 1 < xs.size(); ++k) {
    if (v[k] > v[k - 1] && v[k] >= v[k + 1]) {
      const double x = golden_max(f, xs[k - 1], xs[k + 1], options.tolerance);
      peaks.push_back({x, f(x)});
    } else if (v[k] < v[k - 1] && v[k] <= v[k + 1]) {
      const double x = golden_max(neg, xs[k - 1], xs[k + 1], options.tolerance);
      valleys.push_back({x, f(x)});
    }
  }
}

ResonanceScan scan_peaks(const AdimensionalBarrier& b, ScanVariable variable, double fixed, double lo,
                         double hi, const ScanOptions& options) {
  ResonanceScan scan;
  scan.variable = variable;
  scan.fixed = fixed;
  std::function<double(double)> f;
  if (variable == ScanVariable::energy) {
    if (!(fixed >= 0.0)) throw InvalidParameter("scan_peaks: width must be non-negative");
    AdimensionalBarrier bb = b;
    bb.lambda = fixed;
    f = [bb](double eps) { return evaluate_transmission(eps, bb).result.prob; };
  } else {
    if (!(fixed > 0.0)) throw InvalidParameter("scan_peaks: energy must be positive");
    if (lo < 0.0) throw InvalidParameter("scan_peaks: width range must be non-negative");
    f = [b, fixed](double lambda) {
      AdimensionalBarrier bb = b;
      bb.lambda = lambda;
      return evaluate_transmission(fixed, bb).result.prob;
    };
  }
  find_extrema(f, lo, hi, options, scan.peaks, scan.valleys);
  return scan;
}

std::vector<ResonanceRow> energy_resonance_table(double lambda0, std::span<const Potential> potentials,
                                                 const ScanOptions& options) {
  // Quaternionic peaks sit below the complex ones, so the complex position of
  // order 3.5 bounds the range that holds three peaks.
  const double hi = std::sqrt(1.0 + 3.5 * 3.5 * kPi * kPi / (lambda0 * lambda0));
  std::vector<ResonanceRow> rows;
  for (const auto& pot : potentials) {
    const auto scan = scan_peaks(pot.barrier(lambda0), ScanVariable::energy, lambda0, 1.0, hi, options);
    rows.push_back(tabulate(pot, scan, 1, 1.0));
  }
  return rows;
}

std::vector<ResonanceRow> width_resonance_table(double eps0, std::span<const Potential> potentials,
                                                const ScanOptions& options) {
  if (!(eps0 > 1.0)) throw InvalidParameter("width_resonance_table: eps0 must exceed 1");
  const double hi = 4.5 * kPi / std::sqrt(eps0 * eps0 - 1.0);
  std::vector<ResonanceRow> rows;
  for (const auto& pot : potentials) {
    const auto scan = scan_peaks(pot.barrier(0.0), ScanVariable::width, eps0, 0.0, hi, options);
    rows.push_back(tabulate(pot, scan, 2, kPi));
  }
  return rows;
}

}  // namespace qbarrier
