#include "jordanlens/linalg.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace jordanlens {

double operator_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(0);
}

bool has_nonfinite(const Matrix& a) {
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag()))
        return true;
  return false;
}

void fix_column_phases(Matrix& b) {
  for (Index j = 0; j < b.cols(); ++j) {
    Index imax = 0;
    double best = 0.0;
    for (Index i = 0; i < b.rows(); ++i) {
      const double m = std::abs(b(i, j));
      if (m > best) {
        best = m;
        imax = i;
      }
    }
    if (best == 0.0) continue;
    const Complex phase = b(imax, j) / best;
    b.col(j) *= std::conj(phase);
  }
}

namespace {

// mt19937_64 words mapped to [0,1) doubles; implementation-independent,
// unlike std::normal_distribution.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : gen_(seed) {}

  double normal() {
    const double u1 = 1.0 - uniform();  // (0,1], keeps log finite
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  std::mt19937_64 gen_;
};

}  // namespace

Matrix seeded_unitary(Index n, std::uint64_t seed) {
  GaussianSource src(seed);
  Matrix g(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) g(i, j) = Complex(src.normal(), src.normal());

  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix r = qr.matrixQR();
  for (Index j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double m = std::abs(d);
    if (m > 0.0) q.col(j) *= d / m;
  }
  return q;
}

}  // namespace jordanlens
