#include "picmv/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace picmv {

HermitianMatrix::HermitianMatrix(const CMat& h) {
  if (h.rows() != h.cols() || h.rows() < 1) {
    throw std::invalid_argument("HermitianMatrix: matrix must be square and nonempty");
  }
  if (!h.allFinite()) {
    throw std::invalid_argument("HermitianMatrix: entries must be finite");
  }
  const double asym = (h - h.adjoint()).norm();
  if (asym > 1e-8 * std::max(1.0, h.norm())) {
    throw std::invalid_argument("HermitianMatrix: input is not Hermitian (asymmetry " +
                                std::to_string(asym) + ")");
  }
  mat_ = 0.5 * (h + h.adjoint().eval());
  cache_ = std::make_shared<Cache>();
}

HermitianMatrix HermitianMatrix::identity(Eigen::Index m) {
  return HermitianMatrix(CMat::Identity(m, m));
}

HermitianMatrix HermitianMatrix::zero(Eigen::Index m) {
  return HermitianMatrix(CMat::Zero(m, m));
}

const HermitianEig& HermitianMatrix::eig() const {
  if (!cache_) throw std::logic_error("HermitianMatrix: empty");
  std::call_once(cache_->once, [this] {
    Eigen::SelfAdjointEigenSolver<CMat> es(mat_);
    if (es.info() != Eigen::Success) {
      throw std::runtime_error("HermitianMatrix: eigendecomposition failed");
    }
    cache_->eig.u = es.eigenvectors();
    cache_->eig.lambda = es.eigenvalues();  // ascending
  });
  return cache_->eig;
}

bool HermitianMatrix::is_singular(double rel_tol) const {
  const auto& e = eig();
  const double lmax = std::abs(e.lambda(dim() - 1));
  return e.lambda(0) < rel_tol * std::max(lmax, 1e-300);
}

CVec HermitianMatrix::solve(const CVec& b) const {
  if (b.size() != dim()) throw std::invalid_argument("HermitianMatrix::solve: size mismatch");
  if (is_singular()) {
    throw std::runtime_error(
        "HermitianMatrix::solve: matrix is numerically singular; consider diagonal loading");
  }
  const auto& e = eig();
  CVec bt = e.u.adjoint() * b;
  bt.array() /= e.lambda.array();
  return e.u * bt;
}

double HermitianMatrix::quad_form(const CVec& w) const {
  if (w.size() != dim()) throw std::invalid_argument("HermitianMatrix::quad_form: size mismatch");
  return (w.adjoint() * mat_ * w).value().real();
}

HermitianEig herm_eig(const HermitianMatrix& h) { return h.eig(); }

HermitianMatrix sample_covariance(const std::vector<CVec>& snapshots) {
  if (snapshots.empty()) {
    throw std::invalid_argument("sample_covariance: at least one snapshot required");
  }
  const Eigen::Index m = snapshots.front().size();
  CMat acc = CMat::Zero(m, m);
  for (const CVec& x : snapshots) {
    if (x.size() != m) {
      throw std::invalid_argument("sample_covariance: inconsistent snapshot lengths");
    }
    acc.noalias() += x * x.adjoint();
  }
  acc /= static_cast<double>(snapshots.size());
  return HermitianMatrix(acc);
}

double capon_spectrum(const HermitianMatrix& r, const CVec& a) {
  if (r.is_singular()) {
    throw std::runtime_error(
        "capon_spectrum: covariance is numerically singular; apply diagonal loading first");
  }
  const double denom = std::real(a.dot(r.solve(a)));
  if (!(denom > 0.0)) {
    throw std::runtime_error("capon_spectrum: nonpositive quadratic form; R must be PD");
  }
  return 1.0 / denom;
}

}  // namespace picmv
