#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qbarrier/closed_form.hpp"
#include "qbarrier/resonance.hpp"

using namespace qbarrier;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("resonance") {
  TEST_CASE("complex closed forms") {
    const auto e = complex_resonance_energies(3.0 * kPi, 3);
    REQUIRE(e.size() == 3);
    CHECK(std::abs(e[0].eps - std::sqrt(10.0) / 3.0) < 1e-12);
    CHECK(std::abs(e[1].eps - std::sqrt(13.0) / 3.0) < 1e-12);
    CHECK(std::abs(e[2].eps - std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(e[0].delta_eps - (e[1].eps - e[0].eps)) < 1e-15);
    CHECK(e[0].delta_eps_tilde > 0.0);
    CHECK(e[0].delta_eps_tilde < e[0].delta_eps);

    const auto w = complex_resonance_widths(std::sqrt(2.0), 3);
    CHECK(std::abs(w[0].lambda - kPi) < 1e-12);
    CHECK(std::abs(w[1].lambda - 2.0 * kPi) < 1e-12);
    CHECK(std::abs(w[2].lambda - 3.0 * kPi) < 1e-12);
    CHECK(std::abs(w[1].delta_lambda - kPi) < 1e-12);
    CHECK(std::abs(w[1].delta_lambda_tilde - kPi / 2.0) < 1e-12);

    CHECK_THROWS_AS(complex_resonance_widths(1.0, 3), InvalidParameter);
    CHECK_THROWS_AS(complex_resonance_energies(0.0, 3), InvalidParameter);
    CHECK_THROWS_AS(complex_resonance_energies(1.0, 0), InvalidParameter);
  }

  TEST_CASE("transmission at complex resonances is one") {
    for (const auto& e : complex_resonance_energies(3.0 * kPi, 4)) {
      CHECK(std::abs(transmission(e.eps, {1.0, 0.0, 0.0, 3.0 * kPi}).prob - 1.0) < 1e-9);
    }
    for (const auto& w : complex_resonance_widths(std::sqrt(2.0), 4)) {
      CHECK(std::abs(transmission(std::sqrt(2.0), {1.0, 0.0, 0.0, w.lambda}).prob - 1.0) < 1e-9);
    }
  }

  TEST_CASE("minimum transmission") {
    CHECK(std::abs(min_transmission(std::sqrt(2.0)) - 8.0 / 9.0) < 1e-14);
    CHECK(min_transmission(1.1) == doctest::Approx(0.504).epsilon(1e-2));
    CHECK(min_transmission(50.0) > 0.99999);
    CHECK_THROWS_AS(min_transmission(1.0), InvalidParameter);
    CHECK_THROWS_AS(min_transmission(0.5), InvalidParameter);

    // The width scan valleys of the complex potential sit at the closed-form minimum.
    const auto scan = scan_peaks({1.0, 0.0, 0.0, 0.0}, ScanVariable::width, 1.1, 0.0, 40.0, {1e-2, 1e-9});
    REQUIRE(!scan.valleys.empty());
    for (const auto& v : scan.valleys) CHECK(std::abs(v.prob - min_transmission(1.1)) < 1e-9);
  }

  TEST_CASE("complex energy scan finds the closed-form peaks") {
    const double l0 = 3.0 * kPi;
    const auto scan = scan_peaks({1.0, 0.0, 0.0, l0}, ScanVariable::energy, l0, 1.0, 1.5, {1e-3, 1e-9});
    const auto exact = complex_resonance_energies(l0, 3);
    REQUIRE(scan.peaks.size() >= 3);
    for (int n = 0; n < 3; ++n) {
      CHECK(std::abs(scan.peaks[n].location - exact[n].eps) < 1e-6);
      CHECK(std::abs(scan.peaks[n].prob - 1.0) < 1e-9);
    }
  }

  TEST_CASE("pure quaternionic energy peaks") {
    const auto scan = scan_peaks({0.0, 1.0, 0.0, 3.0 * kPi}, ScanVariable::energy, 3.0 * kPi, 1.0, 1.3);
    REQUIRE(scan.peaks.size() >= 3);
    CHECK(std::abs(scan.peaks[0].location - 1.011) < 5e-4);
    CHECK(std::abs(scan.peaks[1].location - 1.077) < 5e-4);
    CHECK(std::abs(scan.peaks[2].location - 1.246) < 5e-4);
    for (const auto& p : scan.peaks) CHECK(p.prob <= 1.0 + 1e-10);
  }

  TEST_CASE("pure quaternionic width peaks") {
    const auto scan = scan_peaks({0.0, 1.0, 0.0, 0.0}, ScanVariable::width, std::sqrt(2.0), 0.0, 3.5 * kPi);
    // The lowest peak lies below the tabulated orders.
    REQUIRE(scan.peaks.size() >= 4);
    CHECK(scan.peaks[0].location < 1.718 * kPi);
    CHECK(std::abs(scan.peaks[1].location / kPi - 1.718) < 5e-4);
    CHECK(std::abs(scan.peaks[2].location / kPi - 2.478) < 5e-4);
    CHECK(std::abs(scan.peaks[3].location / kPi - 3.238) < 5e-4);
  }

  TEST_CASE("table structure") {
    const auto pots = table_potentials();
    REQUIRE(pots.size() == 5);
    for (const auto& p : pots) CHECK(std::abs(p.vc * p.vc + p.vq * p.vq - 1.0) < 1e-12);

    const auto energy = energy_resonance_table(3.0 * kPi, pots);
    const auto width = width_resonance_table(std::sqrt(2.0), pots);
    REQUIRE(energy.size() == 5);
    REQUIRE(width.size() == 5);
    for (std::size_t k = 0; k < 5; ++k) {
      REQUIRE(energy[k].complete);
      REQUIRE(width[k].complete);
      CHECK(width[k].first_order == 2);
      const auto& ev = energy[k].values;
      CHECK(ev[0] < ev[1]);
      CHECK(ev[1] < ev[3]);
      const auto& wv = width[k].values;
      CHECK(wv[0] < wv[1]);
      CHECK(wv[1] < wv[3]);
      // Width spacing is constant for a fixed potential.
      CHECK(std::abs(wv[2] - wv[4]) < 5e-4);
      if (k > 0) {
        // Peaks move down as the quaternionic part grows.
        for (int c : {0, 1, 3}) {
          CHECK(ev[c] < energy[k - 1].values[c]);
          CHECK(wv[c] < width[k - 1].values[c]);
        }
      }
    }
    // The complex row matches the closed forms.
    CHECK(std::abs(width[0].values[0] - 2.0) < 1e-6);
    CHECK(std::abs(width[0].values[2] - 1.0) < 1e-6);
    CHECK(std::abs(energy[0].values[3] - std::sqrt(2.0)) < 1e-6);
  }

  TEST_CASE("peaks and valleys interleave") {
    for (const auto& p : table_potentials()) {
      const auto scan = scan_peaks(p.barrier(0.0), ScanVariable::width, std::sqrt(2.0), 0.0, 4.0 * kPi);
      REQUIRE(scan.peaks.size() >= 2);
      for (std::size_t k = 0; k + 1 < scan.peaks.size(); ++k) {
        CHECK(scan.peaks[k].location < scan.peaks[k + 1].location);
        bool between = false;
        for (const auto& v : scan.valleys) {
          if (v.location > scan.peaks[k].location && v.location < scan.peaks[k + 1].location) {
            between = true;
            CHECK(v.prob < scan.peaks[k].prob);
            CHECK(v.prob < scan.peaks[k + 1].prob);
          }
        }
        CHECK(between);
      }
    }
  }

  TEST_CASE("find_extrema on a known function") {
    std::vector<Extremum> peaks, valleys;
    find_extrema([](double x) { return std::sin(x); }, 0.0, 4.0 * kPi, {1e-2, 1e-9}, peaks, valleys);
    REQUIRE(peaks.size() == 2);
    REQUIRE(valleys.size() == 2);
    CHECK(std::abs(peaks[0].location - kPi / 2) < 1e-7);
    CHECK(std::abs(valleys[1].location - 3.5 * kPi) < 1e-7);
    CHECK_THROWS_AS(find_extrema([](double) { return 0.0; }, 0.0, 1.0, {0.0, 1e-9}, peaks, valleys),
                    InvalidParameter);
  }
}
