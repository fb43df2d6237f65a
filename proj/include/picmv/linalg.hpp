#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "picmv/types.hpp"

namespace picmv {

/// Unitary factor and ascending real eigenvalues of a Hermitian matrix,
/// H = U diag(lambda) U^H.
struct HermitianEig {
  CMat u;
  RVec lambda;
};

/// Immutable Hermitian (positive semidefinite in most uses) matrix with a
/// lazily computed, shared eigendecomposition. Copies share the cache, so
/// the factorization is paid at most once per underlying matrix.
class HermitianMatrix {
public:
  HermitianMatrix() = default;
  /// Rejects inputs whose Hermitian-symmetry violation exceeds
  /// 1e-8 * max(1, ||H||_F). The stored matrix is the Hermitian part
  /// (H + H^H)/2 so downstream arithmetic sees an exactly Hermitian operand.
  explicit HermitianMatrix(const CMat& h);

  static HermitianMatrix identity(Eigen::Index m);
  static HermitianMatrix zero(Eigen::Index m);

  Eigen::Index dim() const { return mat_.rows(); }
  const CMat& mat() const { return mat_; }

  const HermitianEig& eig() const;

  double lambda_min() const { return eig().lambda(0); }
  double lambda_max() const { return eig().lambda(dim() - 1); }

  /// x = H^{-1} b through the cached eigendecomposition. Throws if the matrix
  /// is numerically singular (lambda_min < 1e-12 * lambda_max).
  CVec solve(const CVec& b) const;

  /// Re{w^H H w}; the imaginary part is rounding noise for Hermitian H.
  double quad_form(const CVec& w) const;

  bool is_singular(double rel_tol = 1e-12) const;

private:
  CMat mat_;
  struct Cache {
    std::once_flag once;
    HermitianEig eig;
  };
  std::shared_ptr<Cache> cache_;
};

/// Eigendecomposition H = U diag(lambda) U^H with lambda ascending.
/// Round-trip contract: ||U L U^H - H||_F / ||H||_F < 1e-10.
HermitianEig herm_eig(const HermitianMatrix& h);

/// (1/N) sum_n x(n) x(n)^H over equal-length snapshots. Throws on an empty
/// list or inconsistent lengths.
HermitianMatrix sample_covariance(const std::vector<CVec>& snapshots);

/// Capon spatial power estimate 1 / (a^H R^{-1} a). Requires R positive
/// definite; a numerically singular R raises an error advising diagonal
/// loading.
double capon_spectrum(const HermitianMatrix& r, const CVec& a);

}  // namespace picmv
