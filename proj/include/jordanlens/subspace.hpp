#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "jordanlens/linalg.hpp"

namespace jordanlens::subspace {

/// Default tolerance for rank decisions and angle classification: an angle is
/// zero when cos(theta) >= 1 - tol and right when cos(theta) <= tol.
inline constexpr double kDefaultTol = 1e-8;

/// A subspace of C^n carried as an orthonormal column basis (n x p, p may
/// be 0). Immutable after construction.
class Subspace {
 public:
  static Subspace zero(Index ambient);
  static Subspace full(Index ambient);

  /// Wraps a matrix whose columns are already orthonormal (checked to 1e-12).
  static Subspace from_orthonormal(Matrix basis);

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  bool is_zero() const { return basis_.cols() == 0; }

 private:
  Subspace(Index ambient, Matrix basis)
      : ambient_(ambient), basis_(std::move(basis)) {}

  Index ambient_;
  Matrix basis_;  // n x p, orthonormal columns
};

/// Span of the given columns. Rank is decided by discarding singular
/// directions with singular value <= tol * sigma_max; each retained column's
/// phase is fixed so its largest entry is real positive.
Subspace orthonormalize(const Matrix& raw_columns, double tol = kDefaultTol);

/// B B* for the stored basis B; Hermitian idempotent.
Matrix projector(const Subspace& s);

Subspace complement(const Subspace& s);

/// M intersect N as the span of singular directions of B1* B2 with singular
/// value >= 1 - tol.
Subspace intersect(const Subspace& s1, const Subspace& s2,
                   double tol = kDefaultTol);

struct ProjectorPair {
  Matrix P;
  Matrix Q;
  Subspace M;
  Subspace N;
};

ProjectorPair make_projector_pair(const Subspace& m, const Subspace& n);

/// C^n = (M cap N) + (M cap N-perp) + (M-perp cap N) + (M-perp cap N-perp)
/// + R, with R the generic remainder of even dimension 2r.
struct FivePartDecomposition {
  Subspace mn;         // M cap N,           dim a
  Subspace mn_perp;    // M cap N-perp,      dim c
  Subspace m_perp_n;   // M-perp cap N,      dim d
  Subspace both_perp;  // M-perp cap N-perp, dim b
  Subspace r_part;     // R,                 dim 2r
  Index a = 0, b = 0, c = 0, d = 0, r = 0;
};

FivePartDecomposition five_part_decompose(const Subspace& m, const Subspace& n,
                                          double tol = kDefaultTol);

/// All four intersections trivial.
bool is_generic_position(const Subspace& m, const Subspace& n,
                         double tol = kDefaultTol);

/// M cap N = M-perp cap N-perp = {0} and dim(M cap N-perp) = dim(M-perp cap N).
bool is_generalized_generic(const Subspace& m, const Subspace& n,
                            double tol = kDefaultTol);

/// Ground-truth generator: builds a canonical pair with the requested
/// interior angles and the trivial-intersection counts a, b, c, d, then
/// conjugates it by a seeded random unitary. The returned pair's five-part
/// counts and principal angle multiset match the request exactly.
std::pair<Subspace, Subspace> synthesize_pair(const std::vector<double>& angles,
                                              int a, int b, int c, int d,
                                              std::uint64_t seed);

}  // namespace jordanlens::subspace
