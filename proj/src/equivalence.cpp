#include "jordanlens/equivalence.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace jordanlens::equivalence {

EquivalenceReport decide_equivalent(const SubspacePair& pair1,
                                    const SubspacePair& pair2, double tol) {
  const Index n = pair1.first.ambient_dim();
  if (pair1.second.ambient_dim() != n || pair2.first.ambient_dim() != n ||
      pair2.second.ambient_dim() != n)
    throw std::invalid_argument("all four subspaces must share one ambient dimension");

  const auto five1 = subspace::five_part_decompose(pair1.first, pair1.second, tol);
  const auto five2 = subspace::five_part_decompose(pair2.first, pair2.second, tol);

  EquivalenceReport rep;
  rep.dim_checks = {
      DimCheck{"dim(M cap N)", five1.a, five2.a, five1.a == five2.a},
      DimCheck{"dim(M cap N-perp)", five1.c, five2.c, five1.c == five2.c},
      DimCheck{"dim(M-perp cap N)", five1.d, five2.d, five1.d == five2.d},
      DimCheck{"dim(M-perp cap N-perp)", five1.b, five2.b, five1.b == five2.b},
      DimCheck{"dim(R)", 2 * five1.r, 2 * five2.r, five1.r == five2.r},
  };

  const auto dec1 = principal::principal_angles(pair1.first, pair1.second, tol);
  const auto dec2 = principal::principal_angles(pair2.first, pair2.second, tol);
  if (dec1.count() != dec2.count()) {
    rep.angle_deviation = std::numeric_limits<double>::infinity();
  } else {
    for (std::size_t i = 0; i < dec1.angles.size(); ++i)
      rep.angle_deviation = std::max(
          rep.angle_deviation, std::abs(dec1.angles[i] - dec2.angles[i]));
  }

  rep.angle_tolerance = std::sqrt(2.0 * tol);
  bool dims_ok = true;
  for (const auto& check : rep.dim_checks) dims_ok = dims_ok && check.pass;
  rep.equivalent = dims_ok && rep.angle_deviation <= rep.angle_tolerance;
  return rep;
}

Matrix build_swap_unitary(const Subspace& m, const Subspace& n, double tol) {
  const auto five = subspace::five_part_decompose(m, n, tol);
  if (five.a != 0 || five.b != 0 || five.c != 0 || five.d != 0) {
    std::string offenders;
    auto note = [&offenders](const char* name, Index value) {
      if (value == 0) return;
      if (!offenders.empty()) offenders += ", ";
      offenders += name;
      offenders += "=" + std::to_string(value);
    };
    note("a", five.a);
    note("b", five.b);
    note("c", five.c);
    note("d", five.d);
    throw std::invalid_argument("pair not in generic position (" + offenders + ")");
  }

  const auto dec = principal::principal_angles(m, n, tol);
  const auto frames = principal::jordan_frames(dec, m, n);
  const Index dim_n = m.ambient_dim();

  Matrix u = Matrix::Zero(dim_n, dim_n);
  for (const auto& f : frames)
    u += (1.0 / f.mu) * (f.t * f.s.adjoint() - f.s * f.t.adjoint());
  return u;
}

}  // namespace jordanlens::equivalence
