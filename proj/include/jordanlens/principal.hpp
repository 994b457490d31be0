#pragma once

#include <optional>
#include <vector>

#include "jordanlens/linalg.hpp"
#include "jordanlens/subspace.hpp"

namespace jordanlens::principal {

using subspace::Subspace;

/// Principal angles between two subspaces, ascending, with matched principal
/// vector bases. q = min(dim M, dim N); phases are fixed so <u_k, v_k> is
/// real and non-negative.
struct AngleDecomposition {
  std::vector<double> angles;  // ascending, in [0, pi/2]
  Matrix u_vectors;            // n x q, columns in M
  Matrix v_vectors;            // n x q, columns in N
  Index n_zero = 0;            // cos(theta) >= 1 - tol
  Index n_interior = 0;
  Index n_right = 0;           // cos(theta) <= tol
  double tol = subspace::kDefaultTol;

  Index count() const { return static_cast<Index>(angles.size()); }

  /// Smallest principal angle; undefined when q = 0.
  std::optional<double> dixmier() const {
    if (angles.empty()) return std::nullopt;
    return angles.front();
  }

  /// Smallest nonzero principal angle; undefined when all angles are zero.
  std::optional<double> friedrichs() const {
    if (n_zero >= count()) return std::nullopt;
    return angles[static_cast<std::size_t>(n_zero)];
  }
};

AngleDecomposition principal_angles(const Subspace& m, const Subspace& n,
                                    double tol = subspace::kDefaultTol);

/// Direct grid maximization of |<u,v>| with deflation, following the
/// recursive sup definition. Desk-scale check of the SVD path; refuses
/// subspaces of dimension > 3.
std::vector<double> greedy_angle_oracle(const Subspace& m, const Subspace& n,
                                        int grid);

/// One Jordan plane: the four unit vectors u, v, s, t with
/// <u,v> = <s,t> = cos(theta), <s,v> = -<u,t> = sin(theta).
struct JordanFrame {
  double theta;
  double lambda;  // cos(theta)
  double mu;      // sin(theta)
  Vector u, v, s, t;
};

/// One frame per interior angle of the decomposition; zero and right angles
/// produce no frame.
std::vector<JordanFrame> jordan_frames(const AngleDecomposition& dec,
                                       const Subspace& m, const Subspace& n);

struct ClauseCheck {
  bool pass = false;
  double max_deviation = 0.0;
};

/// Bookkeeping between the angles of (M, N) and of (M-perp, N-perp).
/// Deviations for the zero and right clauses are measured on the cosine
/// scale (|1 - cos| resp. |cos|), which is where double-precision SVD is
/// accurate; the matching clause is measured in radians.
struct ComplementAngleReport {
  std::vector<double> theta;  // angles of (M, N), M the larger space
  std::vector<double> eta;    // angles of (M-perp, N-perp)
  Index a = 0, b = 0, c = 0, d = 0, r = 0;
  ClauseCheck zero_clause;      // first a of theta, first b of eta are 0
  ClauseCheck interior_clause;  // theta_{a+i} = eta_{b+i}, i = 1..r
  ClauseCheck right_clause;     // the remaining min(c,d) of each are pi/2
  bool all_pass() const {
    return zero_clause.pass && interior_clause.pass && right_clause.pass;
  }
};

ComplementAngleReport complement_angle_relation(
    const Subspace& m, const Subspace& n, double tol = subspace::kDefaultTol);

}  // namespace jordanlens::principal
