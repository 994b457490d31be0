#pragma once

#include <array>
#include <string>
#include <utility>

#include "jordanlens/principal.hpp"
#include "jordanlens/subspace.hpp"

namespace jordanlens::equivalence {

using subspace::Subspace;
using SubspacePair = std::pair<Subspace, Subspace>;

struct DimCheck {
  std::string name;
  Index value1 = 0;
  Index value2 = 0;
  bool pass = false;
};

struct EquivalenceReport {
  bool equivalent = false;
  std::array<DimCheck, 5> dim_checks;  // a, c, d, b, dim R
  double angle_deviation = 0.0;        // max |theta_i(1) - theta_i(2)|, radians
  double angle_tolerance = 0.0;        // threshold used for the angle clause
};

/// Jordan's criterion: the two pairs are unitarily equivalent iff the five
/// intersection dimensions and the principal angle lists agree. The angle
/// threshold is sqrt(2 tol) radians: a zero angle computed through arccos
/// carries O(sqrt(eps)) noise, so a plain radian comparison at tol would
/// reject genuinely equivalent pairs.
EquivalenceReport decide_equivalent(const SubspacePair& pair1,
                                    const SubspacePair& pair2,
                                    double tol = subspace::kDefaultTol);

/// The skew-Hermitian unitary U = sum_k csc(theta_k)(t_k s_k* - s_k t_k*)
/// with U M = M-perp and U N = N-perp. Requires generic position.
Matrix build_swap_unitary(const Subspace& m, const Subspace& n,
                          double tol = subspace::kDefaultTol);

}  // namespace jordanlens::equivalence
