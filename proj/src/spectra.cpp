#include "jordanlens/spectra.hpp"

#include <algorithm>
#include <complex>
#include <limits>
#include <stdexcept>

namespace jordanlens::spectra {

std::string to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::Sum: return "SUM";
    case OperatorKind::Diff: return "DIFF";
    case OperatorKind::PQ: return "PQ";
    case OperatorKind::QP: return "QP";
    case OperatorKind::Anticomm: return "ANTICOMM";
    case OperatorKind::Comm: return "COMM";
  }
  throw std::logic_error("unreachable operator kind");
}

OperatorKind kind_from_string(const std::string& name) {
  if (name == "SUM") return OperatorKind::Sum;
  if (name == "DIFF") return OperatorKind::Diff;
  if (name == "PQ") return OperatorKind::PQ;
  if (name == "QP") return OperatorKind::QP;
  if (name == "ANTICOMM") return OperatorKind::Anticomm;
  if (name == "COMM") return OperatorKind::Comm;
  throw std::invalid_argument("unknown operator kind: " + name);
}

Matrix build_operator(OperatorKind kind, const ProjectorPair& pair) {
  const Matrix& p = pair.P;
  const Matrix& q = pair.Q;
  switch (kind) {
    case OperatorKind::Sum: return p + q;
    case OperatorKind::Diff: return p - q;
    case OperatorKind::PQ: return p * q;
    case OperatorKind::QP: return q * p;
    case OperatorKind::Anticomm: return p * q + q * p;
    case OperatorKind::Comm: return p * q - q * p;
  }
  throw std::logic_error("unreachable operator kind");
}

namespace {

void frame_pairs(OperatorKind kind, const JordanFrame& f,
                 std::vector<EigenPair>& out) {
  const double l = f.lambda;
  const double m = f.mu;
  const Complex i(0.0, 1.0);
  switch (kind) {
    case OperatorKind::Sum:
      out.push_back({1.0 + l, f.u + f.v});
      out.push_back({1.0 - l, f.u - f.v});
      break;
    case OperatorKind::Diff:
      out.push_back({m, f.u - ((1.0 - m) / l) * f.v});
      out.push_back({-m, f.u - ((1.0 + m) / l) * f.v});
      break;
    case OperatorKind::PQ:
      out.push_back({l * l, f.u});
      out.push_back({0.0, f.t});
      break;
    case OperatorKind::QP:
      out.push_back({l * l, f.v});
      out.push_back({0.0, f.s});
      break;
    case OperatorKind::Anticomm:
      out.push_back({l * l + l, f.u + f.v});
      out.push_back({l * l - l, f.u - f.v});
      break;
    case OperatorKind::Comm:
      out.push_back({i * l * m, f.u - std::polar(1.0, -f.theta) * f.v});
      out.push_back({-i * l * m, f.u - std::polar(1.0, f.theta) * f.v});
      break;
  }
}

// Scalar action of each operator on the four flat parts.
double flat_value(OperatorKind kind, int part) {
  // part: 0 = M cap N, 1 = M cap N-perp, 2 = M-perp cap N, 3 = both perp
  switch (kind) {
    case OperatorKind::Sum: {
      constexpr double vals[4] = {2.0, 1.0, 1.0, 0.0};
      return vals[part];
    }
    case OperatorKind::Diff: {
      constexpr double vals[4] = {0.0, 1.0, -1.0, 0.0};
      return vals[part];
    }
    case OperatorKind::PQ:
    case OperatorKind::QP:
    case OperatorKind::Anticomm: {
      const double on_mn = kind == OperatorKind::Anticomm ? 2.0 : 1.0;
      return part == 0 ? on_mn : 0.0;
    }
    case OperatorKind::Comm: return 0.0;
  }
  throw std::logic_error("unreachable operator kind");
}

}  // namespace

double multiset_deviation(std::vector<Complex> lhs, std::vector<Complex> rhs) {
  if (lhs.size() != rhs.size())
    throw std::invalid_argument("eigenvalue multisets differ in size");
  auto by_re_im = [](const Complex& x, const Complex& y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  };
  std::sort(lhs.begin(), lhs.end(), by_re_im);

  std::vector<bool> used(rhs.size(), false);
  double worst = 0.0;
  for (const auto& value : lhs) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_index = 0;
    for (std::size_t i = 0; i < rhs.size(); ++i) {
      if (used[i]) continue;
      const double dist = std::abs(value - rhs[i]);
      if (dist < best) {
        best = dist;
        best_index = i;
      }
    }
    used[best_index] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

std::vector<EigenPair> analytic_eigenpairs(OperatorKind kind,
                                           const std::vector<JordanFrame>& frames,
                                           const FivePartDecomposition& five) {
  std::vector<EigenPair> out;
  out.reserve(2 * frames.size() +
              static_cast<std::size_t>(five.a + five.b + five.c + five.d));
  for (const auto& f : frames) frame_pairs(kind, f, out);

  const subspace::Subspace* parts[4] = {&five.mn, &five.mn_perp, &five.m_perp_n,
                                        &five.both_perp};
  for (int part = 0; part < 4; ++part) {
    const double value = flat_value(kind, part);
    const Matrix& basis = parts[part]->basis();
    for (Index j = 0; j < basis.cols(); ++j)
      out.push_back({value, basis.col(j)});
  }
  return out;
}

}  // namespace jordanlens::spectra
