#pragma once

#include <vector>

#include "picmv/linalg.hpp"
#include "picmv/types.hpp"

namespace picmv {

enum class ArrayKind { UniformLinear, UniformPlanar };

/// Uniform linear or uniform planar array with element spacing in wavelengths.
struct ArrayGeometry {
  ArrayKind kind = ArrayKind::UniformLinear;
  int elements_x = 1;  // M for a ULA, M1 for a planar grid
  int elements_y = 1;  // 1 for a ULA, M2 for a planar grid
  double spacing = 0.5;

  int size() const { return elements_x * elements_y; }

  static ArrayGeometry ula(int m, double spacing = 0.5);
  static ArrayGeometry planar(int m1, int m2, double spacing = 0.5);
};

/// Arrival direction in degrees. A ULA uses only `theta` in [-90, 90]; a
/// planar array uses azimuth in [0, 180] and elevation in [-90, 90].
struct Direction {
  double theta = 0.0;      // ULA angle, degrees
  double azimuth = 0.0;    // planar azimuth, degrees
  double elevation = 0.0;  // planar elevation, degrees

  static Direction linear(double theta_deg) { return {theta_deg, 0.0, 0.0}; }
  static Direction planar(double azimuth_deg, double elevation_deg) {
    return {0.0, azimuth_deg, elevation_deg};
  }
};

/// One narrowband source: true direction and power at the array input.
struct Source {
  Direction direction;
  double power = 1.0;
};

/// Simulation scenario for the narrowband snapshot model: target plus
/// interferers in white noise, with optional DoA estimation error and
/// per-element gain/phase calibration error.
struct Scenario {
  ArrayGeometry geometry;
  Source target;
  std::vector<Source> interferers;
  double noise_power = 1.0;
  double doa_error_halfwidth_deg = 0.0;
  double gain_std = 0.0;       // per-element gain ~ Normal(1, gain_std^2)
  double phase_std_rad = 0.0;  // per-element phase ~ Normal(0, phase_std^2)

  void validate() const;
};

/// One Monte Carlo draw of the scenario: estimated DoAs for building
/// constraint sets and the perturbed (true) steering vectors the waves
/// actually arrive with. The calibration error is a property of the array,
/// so a single diagonal perturbation applies to every true steering vector.
struct ScenarioRealization {
  const Scenario* scenario = nullptr;
  CVec element_gain;                  // diagonal calibration factors g_m e^{j phi_m}
  std::vector<Direction> est_doa;     // index 0 = target, then interferers
  std::vector<CVec> true_steering;    // same indexing, calibration applied

  const CVec& true_target_steering() const { return true_steering.front(); }
};

/// Ideal steering vector; unit-modulus entries, ||a||^2 = M.
/// ULA element m gets phase 2*pi*spacing*m*sin(theta). A planar element at
/// grid position (mx, my) gets phase
/// 2*pi*spacing*(mx*cos(el)*cos(az) + my*cos(el)*sin(az)).
CVec steering_vector(const ArrayGeometry& geometry, const Direction& d);

/// Applies independent per-element gain/phase perturbation:
/// a_m -> g_m * exp(j phi_m) * a_m with g_m ~ N(1, gain_std^2),
/// phi_m ~ N(0, phase_std^2).
CVec perturb_gain_phase(const CVec& a, double gain_std, double phase_std, Rng& rng);

/// Draws the per-element calibration factors themselves (shared across
/// directions within one realization).
CVec draw_calibration(Eigen::Index m, double gain_std, double phase_std, Rng& rng);

/// Estimated DoA uniform on [true - half_width, true + half_width], clipped
/// to the valid angular range of the geometry.
Direction draw_doa_estimate(const Direction& true_direction, double half_width_deg, Rng& rng,
                            ArrayKind kind = ArrayKind::UniformLinear);

/// Draws estimated DoAs and the calibration diagonal for one Monte Carlo run.
ScenarioRealization realize(const Scenario& s, Rng& rng);

/// Snapshots x(n) = s0(n) a0 [if include_target] + sum_k sk(n) ak + v(n),
/// with circular complex Gaussian sources at the scenario powers and white
/// noise. Steering vectors are the realization's true (perturbed) ones.
std::vector<CVec> generate_snapshots(const ScenarioRealization& r, int n_snapshots,
                                     bool include_target, Rng& rng);

/// Analytic interference-plus-noise covariance sum_k sigma_k^2 ak ak^H +
/// sigma_v^2 I built from the true steering vectors.
HermitianMatrix interference_noise_covariance(const ScenarioRealization& r);

/// Output SINR in dB against the true steering vectors and the analytic
/// interference-plus-noise covariance; invariant to nonzero scaling of w.
double output_sinr_db(const CVec& w, const ScenarioRealization& r);

/// sigma0^2 a0^H Rin^{-1} a0 in dB, attained by the MVDR direction.
double optimal_sinr_db(const ScenarioRealization& r);

}  // namespace picmv
