#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>

namespace picmv {

using cdouble = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;

constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double deg) { return deg * kPi / 180.0; }

/// Seedable random source for all Monte Carlo work. Backed by std::mt19937_64,
/// so sequences are reproducible bit-for-bit across runs of the same build.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  double normal(double mean, double stddev) {
    return std::normal_distribution<double>(mean, stddev)(engine_);
  }
  /// Circular complex Gaussian with E|z|^2 = variance.
  cdouble complex_normal(double variance) {
    const double s = std::sqrt(variance / 2.0);
    return {normal(0.0, s), normal(0.0, s)};
  }
  std::uint64_t raw() { return engine_(); }

  /// Derives an independent per-task seed; used to hand each Monte Carlo run
  /// its own generator (splitmix64 finalizer over the pair).
  static std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace picmv
