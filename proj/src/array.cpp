#include "picmv/array.hpp"

#include <cmath>
#include <stdexcept>

namespace picmv {

ArrayGeometry ArrayGeometry::ula(int m, double spacing) {
  if (m < 1 || spacing <= 0.0) throw std::invalid_argument("ArrayGeometry: bad ULA parameters");
  return {ArrayKind::UniformLinear, m, 1, spacing};
}

ArrayGeometry ArrayGeometry::planar(int m1, int m2, double spacing) {
  if (m1 < 1 || m2 < 1 || spacing <= 0.0) {
    throw std::invalid_argument("ArrayGeometry: bad planar parameters");
  }
  return {ArrayKind::UniformPlanar, m1, m2, spacing};
}

void Scenario::validate() const {
  auto check_power = [](double p) {
    if (p < 0.0) throw std::invalid_argument("Scenario: powers must be nonnegative");
  };
  check_power(target.power);
  check_power(noise_power);
  for (const Source& s : interferers) check_power(s.power);
  // Directions must be pairwise distinct.
  std::vector<Direction> all{target.direction};
  for (const Source& s : interferers) all.push_back(s.direction);
  for (size_t i = 0; i < all.size(); ++i) {
    for (size_t j = i + 1; j < all.size(); ++j) {
      const bool same = geometry.kind == ArrayKind::UniformLinear
                            ? all[i].theta == all[j].theta
                            : (all[i].azimuth == all[j].azimuth &&
                               all[i].elevation == all[j].elevation);
      if (same) throw std::invalid_argument("Scenario: source directions must be distinct");
    }
  }
  if (doa_error_halfwidth_deg < 0.0 || gain_std < 0.0 || phase_std_rad < 0.0) {
    throw std::invalid_argument("Scenario: perturbation widths must be nonnegative");
  }
}

CVec steering_vector(const ArrayGeometry& geometry, const Direction& d) {
  CVec a(geometry.size());
  if (geometry.kind == ArrayKind::UniformLinear) {
    if (d.theta < -90.0 || d.theta > 90.0) {
      throw std::invalid_argument("steering_vector: ULA angle out of [-90, 90]");
    }
    const double k = 2.0 * kPi * geometry.spacing * std::sin(deg2rad(d.theta));
    for (int m = 0; m < geometry.elements_x; ++m) {
      a(m) = std::polar(1.0, k * m);
    }
  } else {
    if (d.azimuth < 0.0 || d.azimuth > 180.0 || d.elevation < -90.0 || d.elevation > 90.0) {
      throw std::invalid_argument("steering_vector: planar direction out of range");
    }
    const double az = deg2rad(d.azimuth);
    const double el = deg2rad(d.elevation);
    const double u = std::cos(el) * std::cos(az);
    const double v = std::cos(el) * std::sin(az);
    const double k = 2.0 * kPi * geometry.spacing;
    int idx = 0;
    for (int mx = 0; mx < geometry.elements_x; ++mx) {
      for (int my = 0; my < geometry.elements_y; ++my) {
        a(idx++) = std::polar(1.0, k * (mx * u + my * v));
      }
    }
  }
  return a;
}

CVec draw_calibration(Eigen::Index m, double gain_std, double phase_std, Rng& rng) {
  CVec g(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    g(i) = std::polar(rng.normal(1.0, gain_std), rng.normal(0.0, phase_std));
  }
  return g;
}

CVec perturb_gain_phase(const CVec& a, double gain_std, double phase_std, Rng& rng) {
  if (gain_std < 0.0 || phase_std < 0.0) {
    throw std::invalid_argument("perturb_gain_phase: stddevs must be nonnegative");
  }
  return draw_calibration(a.size(), gain_std, phase_std, rng).cwiseProduct(a);
}

Direction draw_doa_estimate(const Direction& true_direction, double half_width_deg, Rng& rng,
                            ArrayKind kind) {
  if (half_width_deg < 0.0) {
    throw std::invalid_argument("draw_doa_estimate: half width must be nonnegative");
  }
  auto clip = [](double x, double lo, double hi) { return std::min(hi, std::max(lo, x)); };
  Direction d = true_direction;
  if (kind == ArrayKind::UniformLinear) {
    d.theta = clip(half_width_deg == 0.0
                       ? true_direction.theta
                       : rng.uniform(true_direction.theta - half_width_deg,
                                     true_direction.theta + half_width_deg),
                   -90.0, 90.0);
  } else {
    if (half_width_deg > 0.0) {
      d.azimuth = rng.uniform(d.azimuth - half_width_deg, d.azimuth + half_width_deg);
      d.elevation = rng.uniform(d.elevation - half_width_deg, d.elevation + half_width_deg);
    }
    d.azimuth = clip(d.azimuth, 0.0, 180.0);
    d.elevation = clip(d.elevation, -90.0, 90.0);
  }
  return d;
}

ScenarioRealization realize(const Scenario& s, Rng& rng) {
  s.validate();
  ScenarioRealization r;
  r.scenario = &s;
  r.est_doa.push_back(
      draw_doa_estimate(s.target.direction, s.doa_error_halfwidth_deg, rng, s.geometry.kind));
  for (const Source& it : s.interferers) {
    r.est_doa.push_back(
        draw_doa_estimate(it.direction, s.doa_error_halfwidth_deg, rng, s.geometry.kind));
  }
  r.element_gain = draw_calibration(s.geometry.size(), s.gain_std, s.phase_std_rad, rng);
  r.true_steering.push_back(
      r.element_gain.cwiseProduct(steering_vector(s.geometry, s.target.direction)));
  for (const Source& it : s.interferers) {
    r.true_steering.push_back(
        r.element_gain.cwiseProduct(steering_vector(s.geometry, it.direction)));
  }
  return r;
}

std::vector<CVec> generate_snapshots(const ScenarioRealization& r, int n_snapshots,
                                     bool include_target, Rng& rng) {
  if (n_snapshots < 1) throw std::invalid_argument("generate_snapshots: need N >= 1");
  const Scenario& s = *r.scenario;
  const Eigen::Index m = s.geometry.size();
  std::vector<CVec> out;
  out.reserve(n_snapshots);
  for (int n = 0; n < n_snapshots; ++n) {
    CVec x = CVec::Zero(m);
    if (include_target && s.target.power > 0.0) {
      x += rng.complex_normal(s.target.power) * r.true_steering[0];
    }
    for (size_t k = 0; k < s.interferers.size(); ++k) {
      if (s.interferers[k].power > 0.0) {
        x += rng.complex_normal(s.interferers[k].power) * r.true_steering[k + 1];
      }
    }
    if (s.noise_power > 0.0) {
      for (Eigen::Index i = 0; i < m; ++i) x(i) += rng.complex_normal(s.noise_power);
    }
    out.push_back(std::move(x));
  }
  return out;
}

HermitianMatrix interference_noise_covariance(const ScenarioRealization& r) {
  const Scenario& s = *r.scenario;
  const Eigen::Index m = s.geometry.size();
  CMat rin = s.noise_power * CMat::Identity(m, m);
  for (size_t k = 0; k < s.interferers.size(); ++k) {
    rin.noalias() += s.interferers[k].power * r.true_steering[k + 1] *
                     r.true_steering[k + 1].adjoint();
  }
  return HermitianMatrix(rin);
}

double output_sinr_db(const CVec& w, const ScenarioRealization& r) {
  if (w.norm() == 0.0) throw std::invalid_argument("output_sinr_db: w must be nonzero");
  const HermitianMatrix rin = interference_noise_covariance(r);
  const double signal =
      r.scenario->target.power * std::norm(w.dot(r.true_target_steering()));
  const double denom = rin.quad_form(w);
  return 10.0 * std::log10(signal / denom);
}

double optimal_sinr_db(const ScenarioRealization& r) {
  const HermitianMatrix rin = interference_noise_covariance(r);
  const CVec& a0 = r.true_target_steering();
  const double v = r.scenario->target.power * std::real(a0.dot(rin.solve(a0)));
  return 10.0 * std::log10(v);
}

}  // namespace picmv
