#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace jordanlens {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// <x,y>, linear in the first argument and conjugate-linear in the second.
inline Complex inner(const Vector& x, const Vector& y) { return y.dot(x); }

/// Largest singular value.
double operator_norm(const Matrix& a);

bool has_nonfinite(const Matrix& a);

/// Rotates each column so its largest-magnitude entry is real positive.
/// Columns that are identically zero are left alone.
void fix_column_phases(Matrix& b);

/// Deterministic Haar-distributed unitary: QR of a seeded complex Gaussian
/// matrix with the R diagonal rephased to be real positive. The Gaussian
/// samples come from mt19937_64 through an explicit Box-Muller transform so
/// the output is reproducible bit-for-bit for a fixed seed.
Matrix seeded_unitary(Index n, std::uint64_t seed);

}  // namespace jordanlens
