#pragma once

#include <string>
#include <vector>

#include "jordanlens/principal.hpp"
#include "jordanlens/subspace.hpp"

namespace jordanlens::spectra {

using principal::JordanFrame;
using subspace::FivePartDecomposition;
using subspace::ProjectorPair;

enum class OperatorKind { Sum, Diff, PQ, QP, Anticomm, Comm };

std::string to_string(OperatorKind kind);
OperatorKind kind_from_string(const std::string& name);  // SUM, DIFF, PQ, ...

Matrix build_operator(OperatorKind kind, const ProjectorPair& pair);

struct EigenPair {
  Complex value;
  Vector vector;  // nonzero, not normalized
};

/// Closed-form eigenpairs assembled per Jordan plane, plus the eigenpairs of
/// the four flat parts of the decomposition, so the list is a complete
/// eigensystem of C^n. Vectors are emitted exactly as written, unnormalized.
std::vector<EigenPair> analytic_eigenpairs(OperatorKind kind,
                                           const std::vector<JordanFrame>& frames,
                                           const FivePartDecomposition& five);

/// Largest matched distance under greedy nearest matching of two equal-size
/// eigenvalue multisets. A positional compare after sorting by (re, im) is
/// not usable here: the commutator spectrum is purely imaginary, so its
/// real-part roundoff scrambles any lexicographic order.
double multiset_deviation(std::vector<Complex> lhs, std::vector<Complex> rhs);

}  // namespace jordanlens::spectra
