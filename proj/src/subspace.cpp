#include "jordanlens/subspace.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace jordanlens::subspace {

Subspace Subspace::zero(Index ambient) {
  if (ambient < 1) throw std::invalid_argument("ambient dimension must be >= 1");
  return Subspace(ambient, Matrix(ambient, 0));
}

Subspace Subspace::full(Index ambient) {
  if (ambient < 1) throw std::invalid_argument("ambient dimension must be >= 1");
  return Subspace(ambient, Matrix::Identity(ambient, ambient));
}

Subspace Subspace::from_orthonormal(Matrix basis) {
  const Index n = basis.rows();
  const Index p = basis.cols();
  if (n < 1) throw std::invalid_argument("ambient dimension must be >= 1");
  if (p > n) throw std::invalid_argument("more basis columns than ambient dimension");
  if (has_nonfinite(basis)) throw std::invalid_argument("non-finite basis entries");
  if (p > 0) {
    const double dev =
        (basis.adjoint() * basis - Matrix::Identity(p, p)).cwiseAbs().maxCoeff();
    if (dev > 1e-12)
      throw std::invalid_argument("basis columns not orthonormal (deviation " +
                                  std::to_string(dev) + ")");
  }
  return Subspace(n, std::move(basis));
}

Subspace orthonormalize(const Matrix& raw_columns, double tol) {
  const Index n = raw_columns.rows();
  if (n < 1) throw std::invalid_argument("ambient dimension must be >= 1");
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  if (has_nonfinite(raw_columns))
    throw std::invalid_argument("non-finite entries in input columns");
  if (raw_columns.cols() == 0) return Subspace::zero(n);

  Eigen::JacobiSVD<Matrix> svd(raw_columns, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  Index rank = 0;
  while (rank < sv.size() && sv(rank) > tol * smax) ++rank;
  if (smax == 0.0) rank = 0;

  Matrix basis = svd.matrixU().leftCols(rank);
  fix_column_phases(basis);
  return Subspace::from_orthonormal(std::move(basis));
}

Matrix projector(const Subspace& s) { return s.basis() * s.basis().adjoint(); }

Subspace complement(const Subspace& s) {
  const Index n = s.ambient_dim();
  const Index p = s.dim();
  if (p == 0) return Subspace::full(n);
  if (p == n) return Subspace::zero(n);

  Eigen::JacobiSVD<Matrix> svd(s.basis(), Eigen::ComputeFullU);
  Matrix basis = svd.matrixU().rightCols(n - p);
  fix_column_phases(basis);
  return Subspace::from_orthonormal(std::move(basis));
}

Subspace intersect(const Subspace& s1, const Subspace& s2, double tol) {
  if (s1.ambient_dim() != s2.ambient_dim())
    throw std::invalid_argument("ambient dimension mismatch in intersect");
  const Index n = s1.ambient_dim();
  if (s1.is_zero() || s2.is_zero()) return Subspace::zero(n);

  const Matrix gram = s1.basis().adjoint() * s2.basis();
  Eigen::JacobiSVD<Matrix> svd(gram, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  Index count = 0;
  while (count < sv.size() && sv(count) >= 1.0 - tol) ++count;
  if (count == 0) return Subspace::zero(n);

  Matrix basis = s1.basis() * svd.matrixU().leftCols(count);
  fix_column_phases(basis);
  return Subspace::from_orthonormal(std::move(basis));
}

ProjectorPair make_projector_pair(const Subspace& m, const Subspace& n) {
  if (m.ambient_dim() != n.ambient_dim())
    throw std::invalid_argument("ambient dimension mismatch in projector pair");
  return ProjectorPair{projector(m), projector(n), m, n};
}

FivePartDecomposition five_part_decompose(const Subspace& m, const Subspace& n,
                                          double tol) {
  if (m.ambient_dim() != n.ambient_dim())
    throw std::invalid_argument("ambient dimension mismatch in decomposition");
  if (tol >= 0.1)
    throw std::invalid_argument("classification tolerance must be < 0.1");

  const Index dim_n = m.ambient_dim();
  const Subspace m_perp = complement(m);
  const Subspace n_perp = complement(n);

  FivePartDecomposition out{
      intersect(m, n, tol),           intersect(m, n_perp, tol),
      intersect(m_perp, n, tol),      intersect(m_perp, n_perp, tol),
      Subspace::zero(dim_n)};
  out.a = out.mn.dim();
  out.c = out.mn_perp.dim();
  out.d = out.m_perp_n.dim();
  out.b = out.both_perp.dim();

  const Index fixed = out.a + out.b + out.c + out.d;
  if (fixed > 0) {
    Matrix joined(dim_n, fixed);
    joined << out.mn.basis(), out.mn_perp.basis(), out.m_perp_n.basis(),
        out.both_perp.basis();
    out.r_part = complement(orthonormalize(joined, tol));
  } else {
    out.r_part = Subspace::full(dim_n);
  }

  const Index rdim = out.r_part.dim();
  if (rdim % 2 != 0)
    throw std::runtime_error(
        "tolerance-ambiguous classification: generic remainder has odd "
        "dimension " +
        std::to_string(rdim));
  out.r = rdim / 2;

  if (out.a + out.c + out.r != m.dim() || out.a + out.d + out.r != n.dim())
    throw std::runtime_error(
        "tolerance-ambiguous classification: dimension ledger failed");
  return out;
}

bool is_generic_position(const Subspace& m, const Subspace& n, double tol) {
  const auto five = five_part_decompose(m, n, tol);
  return five.a == 0 && five.b == 0 && five.c == 0 && five.d == 0;
}

bool is_generalized_generic(const Subspace& m, const Subspace& n, double tol) {
  const auto five = five_part_decompose(m, n, tol);
  return five.a == 0 && five.b == 0 && five.c == five.d;
}

std::pair<Subspace, Subspace> synthesize_pair(const std::vector<double>& angles,
                                              int a, int b, int c, int d,
                                              std::uint64_t seed) {
  if (a < 0 || b < 0 || c < 0 || d < 0)
    throw std::invalid_argument("block counts must be non-negative");
  for (double theta : angles)
    if (!(theta > 0.0) || !(theta < std::numbers::pi / 2.0) ||
        !std::isfinite(theta))
      throw std::invalid_argument(
          "interior angles must lie strictly inside (0, pi/2)");

  const Index t = static_cast<Index>(angles.size());
  const Index n = a + b + c + d + 2 * t;
  if (n < 1) throw std::invalid_argument("ambient dimension must be >= 1");

  const Index p = t + a + c;
  const Index q = t + a + d;
  Matrix bm = Matrix::Zero(n, p);
  Matrix bn = Matrix::Zero(n, q);

  // Layout: [angle planes | a shared | b in neither | c only-M | d only-N].
  for (Index j = 0; j < t; ++j) {
    bm(2 * j, j) = 1.0;
    bn(2 * j, j) = std::cos(angles[static_cast<std::size_t>(j)]);
    bn(2 * j + 1, j) = std::sin(angles[static_cast<std::size_t>(j)]);
  }
  const Index base = 2 * t;
  for (Index i = 0; i < a; ++i) {
    bm(base + i, t + i) = 1.0;
    bn(base + i, t + i) = 1.0;
  }
  for (Index i = 0; i < c; ++i) bm(base + a + b + i, t + a + i) = 1.0;
  for (Index i = 0; i < d; ++i) bn(base + a + b + c + i, t + a + i) = 1.0;

  const Matrix u = seeded_unitary(n, seed);
  return {Subspace::from_orthonormal(u * bm),
          Subspace::from_orthonormal(u * bn)};
}

}  // namespace jordanlens::subspace
