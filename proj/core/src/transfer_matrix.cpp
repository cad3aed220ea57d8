#include "qbarrier/transfer_matrix.hpp"

#include <algorithm>

namespace qbarrier {

Factors build_factors(const WaveParams& p, double lambda) { return basic_build_factors(p, lambda); }

TransferMatrix transfer_closed(const WaveParams& p, double lambda) {
  return basic_transfer_closed(p, lambda);
}

TransferMatrix transfer_numeric(const WaveParams& p, double lambda) {
  return basic_transfer_numeric(p, lambda);
}

double transfer_discrepancy_binary128(double eps, const AdimensionalBarrier& b) {
  const auto p = basic_wave_params<Complex128>(eps, b);
  const auto closed = basic_transfer_closed(p, b.lambda);
  const auto numeric = basic_transfer_numeric(p, b.lambda);
  return (closed - numeric).max_abs();
}

}  // namespace qbarrier
