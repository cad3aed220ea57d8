#include "qbarrier/linear_solver.hpp"

#include <algorithm>
#include <cmath>

#include "qbarrier/linalg.hpp"
#include "qbarrier/transfer_matrix.hpp"

namespace qbarrier {

namespace {

using Matrix8 = CMatrix<8>;
using Vector8 = std::array<cplx, 8>;

// Unknowns, in column order.  A and A~ are carried as A e^{Re(a-) l} and
// A~ e^{Re(a+) l}; T~ as T~ e^{-eps l}.  With Re(alpha) >= 0 every entry is
// then bounded, so wide barriers neither overflow nor swamp the pivots.
enum Col { kR, kRt, kT, kSigma, kA, kB, kAt, kBt };

struct System {
  Matrix8 m;
  Vector8 rhs;
};

System assemble(const WaveParams& p, double lambda) {
  const cplx i(0.0, 1.0);
  const double eps = p.eps;
  const cplx kappa = eps / p.alpha_minus;
  const cplx rho = p.alpha_plus / p.alpha_minus;
  const cplx& beta = p.beta;
  const cplx& gamma = p.gamma;

  const double shift_m = p.alpha_minus.real() * lambda;
  const double shift_p = p.alpha_plus.real() * lambda;
  // e^{a l} / e^{Re(a) l} and e^{-Re(a) l}: the scaled growing/decaying factors.
  const cplx grow_m = std::exp(cplx(0.0, p.alpha_minus.imag() * lambda));
  const cplx grow_p = std::exp(cplx(0.0, p.alpha_plus.imag() * lambda));
  const double damp_m = std::exp(-shift_m);
  const double damp_p = std::exp(-shift_p);
  const cplx decay_m = std::exp(-p.alpha_minus * lambda);
  const cplx decay_p = std::exp(-p.alpha_plus * lambda);
  const cplx wave = std::exp(i * eps * lambda);

  System s;
  auto& m = s.m;
  s.rhs.fill(0.0);

  // 1 + R = A + B + beta (A~ + B~)
  m(0, kR) = 1.0;
  m(0, kA) = -damp_m;
  m(0, kB) = -1.0;
  m(0, kAt) = -beta * damp_p;
  m(0, kBt) = -beta;
  s.rhs[0] = -1.0;
  // i eps/a- (1 - R) = A - B + a+/a- beta (A~ - B~)
  m(1, kR) = -i * kappa;
  m(1, kA) = -damp_m;
  m(1, kB) = 1.0;
  m(1, kAt) = -rho * beta * damp_p;
  m(1, kBt) = rho * beta;
  s.rhs[1] = -i * kappa;
  // R~ = gamma (A + B) + A~ + B~
  m(2, kRt) = 1.0;
  m(2, kA) = -gamma * damp_m;
  m(2, kB) = -gamma;
  m(2, kAt) = -damp_p;
  m(2, kBt) = -1.0;
  // eps/a- R~ = gamma (A - B) + a+/a- (A~ - B~)
  m(3, kRt) = kappa;
  m(3, kA) = -gamma * damp_m;
  m(3, kB) = gamma;
  m(3, kAt) = -rho * damp_p;
  m(3, kBt) = rho;
  // T e^{i eps l} = A e^{a- l} + B e^{-a- l} + beta (A~ e^{a+ l} + B~ e^{-a+ l})
  m(4, kT) = wave;
  m(4, kA) = -grow_m;
  m(4, kB) = -decay_m;
  m(4, kAt) = -beta * grow_p;
  m(4, kBt) = -beta * decay_p;
  // i eps/a- T e^{i eps l} = A e^{a- l} - B e^{-a- l} + a+/a- beta (A~ e^{a+ l} - B~ e^{-a+ l})
  m(5, kT) = i * kappa * wave;
  m(5, kA) = -grow_m;
  m(5, kB) = decay_m;
  m(5, kAt) = -rho * beta * grow_p;
  m(5, kBt) = rho * beta * decay_p;
  // T~ e^{-eps l} = gamma (A e^{a- l} + B e^{-a- l}) + A~ e^{a+ l} + B~ e^{-a+ l}
  m(6, kSigma) = 1.0;
  m(6, kA) = -gamma * grow_m;
  m(6, kB) = -gamma * decay_m;
  m(6, kAt) = -grow_p;
  m(6, kBt) = -decay_p;
  // -eps/a- T~ e^{-eps l} = gamma (A e^{a- l} - B e^{-a- l}) + a+/a- (A~ e^{a+ l} - B~ e^{-a+ l})
  m(7, kSigma) = -kappa;
  m(7, kA) = -gamma * grow_m;
  m(7, kB) = gamma * decay_m;
  m(7, kAt) = -rho * grow_p;
  m(7, kBt) = rho * decay_p;
  return s;
}

double residual_norm(const Matrix8& m, const Vector8& x, const Vector8& rhs, Vector8* out = nullptr) {
  const Vector8 mx = m * x;
  double worst = 0.0;
  for (std::size_t k = 0; k < 8; ++k) {
    const cplx r = rhs[k] - mx[k];
    if (out) (*out)[k] = r;
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

}  // namespace

ScatteringAmplitudes solve(double eps, const AdimensionalBarrier& b) {
  if (!(b.lambda >= 0.0) || !std::isfinite(b.lambda)) {
    throw InvalidParameter("solve: lambda must be non-negative");
  }
  const WaveParams p = wave_params(eps, b);
  detail::require_nonzero_alphas(p);
  const System sys = assemble(p, b.lambda);

  // Row equilibration; the residual is still measured on the unscaled rows.
  Matrix8 scaled = sys.m;
  Vector8 rhs = sys.rhs;
  for (std::size_t r = 0; r < 8; ++r) {
    double big = 0.0;
    for (std::size_t c = 0; c < 8; ++c) big = std::max(big, std::abs(scaled(r, c)));
    for (std::size_t c = 0; c < 8; ++c) scaled(r, c) /= big;
    rhs[r] /= big;
  }

  Matrix8 lu = scaled;
  std::array<std::size_t, 8> perm{};
  detail::lu_factor<cplx>(lu.data(), 8, perm);
  Vector8 x = rhs;
  detail::lu_solve<cplx>(lu.data(), 8, perm, x);

  Vector8 res;
  double residual = residual_norm(sys.m, x, sys.rhs);
  if (residual > kResidualTolerance) {
    residual_norm(scaled, x, rhs, &res);
    detail::lu_solve<cplx>(lu.data(), 8, perm, res);
    for (std::size_t k = 0; k < 8; ++k) x[k] += res[k];
    residual = residual_norm(sys.m, x, sys.rhs);
  }

  ScatteringAmplitudes out;
  out.r = x[kR];
  out.rt = x[kRt];
  out.t = x[kT];
  out.tt = x[kSigma] * std::exp(eps * b.lambda);
  out.a = x[kA] * std::exp(-p.alpha_minus.real() * b.lambda);
  out.b = x[kB];
  out.at = x[kAt] * std::exp(-p.alpha_plus.real() * b.lambda);
  out.bt = x[kBt];
  out.residual = residual;
  out.condition = condition_estimate(scaled);
  return out;
}

ZoneWavefunction wavefunction(double xi, const ScatteringAmplitudes& amps, const WaveParams& p,
                              const AdimensionalBarrier& b) {
  const cplx i(0.0, 1.0);
  const double eps = p.eps;
  ZoneWavefunction out;
  cplx phi, dphi, psi, dpsi;
  if (xi < 0.0) {
    out.zone = Zone::I;
    const cplx in = std::exp(i * eps * xi);
    const cplx back = std::exp(-i * eps * xi);
    const double ev = std::exp(eps * xi);
    phi = in + back * amps.r;
    dphi = i * eps * (in - back * amps.r);
    psi = ev * amps.rt;
    dpsi = eps * ev * amps.rt;
  } else if (xi <= b.lambda) {
    out.zone = Zone::II;
    const cplx em = std::exp(p.alpha_minus * xi);
    const cplx emi = std::exp(-p.alpha_minus * xi);
    const cplx ep = std::exp(p.alpha_plus * xi);
    const cplx epi = std::exp(-p.alpha_plus * xi);
    // Mode f along (1 + j gamma), mode g along (beta + j).
    const cplx f = em * amps.a + emi * amps.b;
    const cplx df = p.alpha_minus * (em * amps.a - emi * amps.b);
    const cplx g = ep * amps.at + epi * amps.bt;
    const cplx dg = p.alpha_plus * (ep * amps.at - epi * amps.bt);
    phi = f + p.beta * g;
    dphi = df + p.beta * dg;
    psi = p.gamma * f + g;
    dpsi = p.gamma * df + dg;
  } else {
    out.zone = Zone::III;
    const cplx out_wave = std::exp(i * eps * xi);
    const double ev = std::exp(-eps * xi);
    phi = out_wave * amps.t;
    dphi = i * eps * phi;
    psi = ev * amps.tt;
    dpsi = -eps * psi;
  }
  out.value = Quaternion(phi, psi);
  out.derivative = Quaternion(dphi, dpsi);
  return out;
}

double probability_current(const Quaternion& value, const Quaternion& derivative) {
  const Quaternion q = conj(value) * (Quaternion::unit_i() * derivative);
  return 2.0 * q.z().real();
}

double probability_balance(const ScatteringAmplitudes& amps) {
  return 1.0 - std::norm(amps.r) - std::norm(amps.t);
}

}  // namespace qbarrier
