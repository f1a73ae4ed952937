#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace tolsys {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Seeded generator; every random draw in the library goes through one.
using Rng = std::mt19937_64;

/// Per-instance seed from a master seed and an instance index (splitmix64),
/// so parallel sweeps reproduce serial ones bit for bit.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Independent real and imaginary parts uniform on [-1, 1].
Complex uniform_complex(Rng &rng);

/// Largest singular value.
double operator_norm(const CMatrix &a);
/// Sum of singular values.
double trace_norm(const CMatrix &a);
/// max |a - a*| entry.
double hermitian_defect(const CMatrix &a);
CMatrix hermitian_part(const CMatrix &a);

/// Eigen-decomposition of a hermitian matrix (upper and lower triangles both
/// read through the self-adjoint view of the lower one after symmetrising).
struct HermitianEigen {
  RVector values;  // ascending
  CMatrix vectors; // columns
};
HermitianEigen hermitian_eigen(const CMatrix &h);
double min_eigenvalue(const CMatrix &h);

/// Nearest PSD matrix in Frobenius norm (negative eigenvalues clipped).
CMatrix project_psd(const CMatrix &h);

/// Positive and negative spectral parts: h = plus - minus, both PSD with
/// orthogonal ranges.
struct SpectralSplit {
  CMatrix plus;
  CMatrix minus;
};
SpectralSplit spectral_split(const CMatrix &h);

} // namespace tolsys
