#include "tolsys/linalg.hpp"

#include <algorithm>

#include "tolsys/parallel.hpp"

namespace tolsys {

int par::max_threads() {
  static const int cap = [] {
    const char *env = std::getenv("TOLSYS_THREADS");
    const int fallback = omp_get_max_threads();
    if (env == nullptr) {
      return fallback;
    }
    const int requested = std::atoi(env);
    return requested > 0 ? std::min(requested, fallback) : fallback;
  }();
  return cap;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Complex uniform_complex(Rng &rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double re = u(rng);
  const double im = u(rng);
  return {re, im};
}

double operator_norm(const CMatrix &a) {
  if (a.size() == 0) {
    return 0.0;
  }
  Eigen::JacobiSVD<CMatrix> svd(a);
  return svd.singularValues()(0);
}

double trace_norm(const CMatrix &a) {
  if (a.size() == 0) {
    return 0.0;
  }
  Eigen::JacobiSVD<CMatrix> svd(a);
  return svd.singularValues().sum();
}

double hermitian_defect(const CMatrix &a) {
  if (a.size() == 0) {
    return 0.0;
  }
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

CMatrix hermitian_part(const CMatrix &a) { return 0.5 * (a + a.adjoint()); }

HermitianEigen hermitian_eigen(const CMatrix &h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(h));
  return {es.eigenvalues(), es.eigenvectors()};
}

double min_eigenvalue(const CMatrix &h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(h),
                                            Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

CMatrix project_psd(const CMatrix &h) {
  auto [values, vectors] = hermitian_eigen(h);
  const RVector clipped = values.cwiseMax(0.0);
  return vectors * clipped.asDiagonal() * vectors.adjoint();
}

SpectralSplit spectral_split(const CMatrix &h) {
  auto [values, vectors] = hermitian_eigen(h);
  const RVector pos = values.cwiseMax(0.0);
  const RVector neg = (-values).cwiseMax(0.0);
  return {vectors * pos.asDiagonal() * vectors.adjoint(),
          vectors * neg.asDiagonal() * vectors.adjoint()};
}

} // namespace tolsys
