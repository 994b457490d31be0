// Acceptance suite: closed-form results against independent oracles over a
// seeded synthesized corpus (n <= 12). One pass/fail line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

#include "corpus.hpp"
#include "jordanlens/equivalence.hpp"
#include "jordanlens/numrange.hpp"
#include "jordanlens/principal.hpp"
#include "jordanlens/spectra.hpp"
#include "jordanlens/subspace.hpp"

using namespace jordanlens;
using subspace::Subspace;

namespace {

constexpr double kPi = std::numbers::pi;

int g_failures = 0;

void report(int number, const char* name, bool pass, double value,
            double bound, double seconds) {
  std::printf("[%s] %2d. %-28s max=%.3e bound=%.1e (%.2fs)\n",
              pass ? "PASS" : "FAIL", number, name, value, bound, seconds);
  if (!pass) ++g_failures;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

const std::vector<std::pair<Subspace, Subspace>>& full_corpus() {
  static const auto pairs = corpus::mixed(200);
  return pairs;
}

// 1. Biorthogonality and projection action at 1e-10 over 200 pairs, < 5 s.
void criterion_biorthogonality() {
  Timer timer;
  double worst = 0.0;
  for (const auto& [m, n] : full_corpus()) {
    const auto dec = principal::principal_angles(m, n, 1e-8);
    const auto pair = subspace::make_projector_pair(m, n);
    const Index q = dec.count();
    const Matrix gram = dec.u_vectors.adjoint() * dec.v_vectors;
    for (Index i = 0; i < q; ++i)
      for (Index j = 0; j < q; ++j) {
        const Complex expected =
            i == j ? Complex(std::cos(dec.angles[static_cast<std::size_t>(i)]))
                   : Complex(0);
        worst = std::max(worst, std::abs(gram(i, j) - expected));
      }
    for (Index j = 0; j < q; ++j) {
      const double cosine = std::cos(dec.angles[static_cast<std::size_t>(j)]);
      worst = std::max(worst, (pair.P * dec.v_vectors.col(j) -
                               cosine * dec.u_vectors.col(j))
                                  .norm());
      worst = std::max(worst, (pair.Q * dec.u_vectors.col(j) -
                               cosine * dec.v_vectors.col(j))
                                  .norm());
    }
  }
  const double elapsed = timer.seconds();
  report(1, "biorthogonality+action", worst <= 1e-10 && elapsed < 5.0, worst,
         1e-10, elapsed);
}

// 2. Jordan frame identities at 1e-10.
void criterion_frames() {
  Timer timer;
  double worst = 0.0;
  for (const auto& [m, n] : full_corpus()) {
    const auto dec = principal::principal_angles(m, n, 1e-8);
    for (const auto& f : principal::jordan_frames(dec, m, n)) {
      worst = std::max(worst, std::abs(inner(f.u, f.v) - Complex(f.lambda)));
      worst = std::max(worst, std::abs(inner(f.s, f.t) - Complex(f.lambda)));
      worst = std::max(worst, std::abs(inner(f.s, f.v) - Complex(f.mu)));
      worst = std::max(worst, std::abs(inner(f.u, f.t) + Complex(f.mu)));
      worst = std::max(
          worst,
          (f.u - ((f.lambda / f.mu) * f.s - (1.0 / f.mu) * f.t)).norm());
    }
  }
  report(2, "frame identities", worst <= 1e-10, worst, 1e-10, timer.seconds());
}

// 3. Swap unitary laws over 100 generic pairs, < 5 s.
void criterion_swap_unitary() {
  Timer timer;
  double worst = 0.0;
  bool all_equivalent = true;
  for (const auto& [m, n] : corpus::generic(100)) {
    const Index dim = m.ambient_dim();
    const Matrix u = equivalence::build_swap_unitary(m, n, 1e-8);
    worst = std::max(worst,
                     operator_norm(u.adjoint() * u - Matrix::Identity(dim, dim)));
    worst = std::max(worst, operator_norm(u + u.adjoint()));
    const Matrix pm_perp = subspace::projector(subspace::complement(m));
    const Matrix pn_perp = subspace::projector(subspace::complement(n));
    const double range_dev =
        std::max(operator_norm(pm_perp * (u * m.basis()) - u * m.basis()),
                 operator_norm(pn_perp * (u * n.basis()) - u * n.basis()));
    if (range_dev > 1e-9) worst = std::max(worst, range_dev);
    const auto rep = equivalence::decide_equivalent(
        {m, n}, {subspace::complement(m), subspace::complement(n)}, 1e-8);
    all_equivalent = all_equivalent && rep.equivalent;
  }
  const double elapsed = timer.seconds();
  report(3, "swap unitary", worst <= 1e-10 && all_equivalent && elapsed < 5.0,
         worst, 1e-10, elapsed);
}

// 4. |P+Q| = 1 + |PQ| and |PQ| = cos(theta_1) at 1e-10.
void criterion_norm_identities() {
  Timer timer;
  double worst = 0.0;
  for (const auto& [m, n] : full_corpus()) {
    const auto pair = subspace::make_projector_pair(m, n);
    const auto dec = principal::principal_angles(m, n, 1e-8);
    const auto rep = numrange::operator_norm_identities(pair, dec);
    worst = std::max(worst, rep.dev_sum_identity);
    worst = std::max(worst, rep.dev_prod_cos.value());
  }
  report(4, "norm identities", worst <= 1e-10, worst, 1e-10, timer.seconds());
}

// 5. Sum range equals the extreme eigenvalues of P+Q at 1e-10.
void criterion_sum_range() {
  Timer timer;
  double worst = 0.0;
  for (const auto& [m, n] : full_corpus()) {
    const auto interval = numrange::sum_range(m, n);
    Eigen::SelfAdjointEigenSolver<Matrix> es(subspace::projector(m) +
                                             subspace::projector(n));
    worst = std::max(worst, std::abs(interval.lo - es.eigenvalues().minCoeff()));
    worst = std::max(worst, std::abs(interval.hi - es.eigenvalues().maxCoeff()));

    const auto dec = principal::principal_angles(m, n, 1e-8);
    const auto dec_perp = principal::principal_angles(
        subspace::complement(m), subspace::complement(n), 1e-8);
    worst = std::max(worst, std::abs(interval.hi -
                                     2.0 * std::pow(std::cos(dec.angles[0] / 2.0), 2)));
    worst = std::max(
        worst,
        std::abs(interval.lo - 2.0 * std::pow(std::sin(dec_perp.angles[0] / 2.0), 2)));
  }
  report(5, "sum range", worst <= 1e-10, worst, 1e-10, timer.seconds());
}

// 6. Analytic eigenpairs: residuals at 1e-9, multisets at 1e-8, six kinds.
void criterion_eigenpairs() {
  Timer timer;
  double worst_residual = 0.0;
  double worst_multiset = 0.0;
  for (const auto& [m, n] : full_corpus()) {
    const auto pair = subspace::make_projector_pair(m, n);
    const auto dec = principal::principal_angles(m, n, 1e-8);
    const auto frames = principal::jordan_frames(dec, m, n);
    const auto five = subspace::five_part_decompose(m, n, 1e-8);
    for (const auto kind :
         {spectra::OperatorKind::Sum, spectra::OperatorKind::Diff,
          spectra::OperatorKind::PQ, spectra::OperatorKind::QP,
          spectra::OperatorKind::Anticomm, spectra::OperatorKind::Comm}) {
      const Matrix op = spectra::build_operator(kind, pair);
      const auto pairs = spectra::analytic_eigenpairs(kind, frames, five);
      std::vector<Complex> analytic;
      analytic.reserve(pairs.size());
      for (const auto& ep : pairs) {
        worst_residual = std::max(
            worst_residual,
            (op * ep.vector - ep.value * ep.vector).norm() / ep.vector.norm());
        analytic.push_back(ep.value);
      }
      Eigen::ComplexEigenSolver<Matrix> es(op);
      std::vector<Complex> dense(static_cast<std::size_t>(op.rows()));
      for (Index i = 0; i < op.rows(); ++i)
        dense[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
      worst_multiset =
          std::max(worst_multiset, spectra::multiset_deviation(analytic, dense));
    }
  }
  report(6, "eigenpair lemma",
         worst_residual <= 1e-9 && worst_multiset <= 1e-8,
         std::max(worst_residual, worst_multiset), 1e-8, timer.seconds());
}

// 7. Elliptic range of [[0,a],[b,0]] against the support oracle at 1e-3.
void criterion_elliptic_range() {
  Timer timer;
  double worst = 0.0;
  Matrix fixed(2, 2);
  fixed << 0, 2, 1, 0;
  const auto fixed_region =
      numrange::hull_region({numrange::offdiag_ellipse(2.0, 1.0)}, {}, {}, 720);
  worst = std::max(worst, numrange::hausdorff_distance(
                              fixed_region, numrange::support_oracle(fixed, 720)));

  std::mt19937_64 gen(2024);
  auto uniform = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
  for (int i = 0; i < 20; ++i) {
    const double a = 0.2 + uniform() * 2.8;           // a <= 3
    const double b = uniform() * a * 0.999 + 1e-6;    // 0 < b < a
    Matrix mat(2, 2);
    mat << 0, a, b, 0;
    const auto region =
        numrange::hull_region({numrange::offdiag_ellipse(a, b)}, {}, {}, 720);
    worst = std::max(worst, numrange::hausdorff_distance(
                                region, numrange::support_oracle(mat, 720)));
  }
  report(7, "elliptic range", worst <= 1e-3, worst, 1e-3, timer.seconds());
}

// 8. Product range vs oracle at 2e-3 over the corpus, >= 10 pairs with a > 0,
// < 30 s total.
void criterion_product_range() {
  Timer timer;
  double worst = 0.0;
  int a_positive = 0;
  for (const auto& spec : corpus::mixed_specs(200)) {
    const auto [m, n] = corpus::make_pair(spec);
    const auto pair = subspace::make_projector_pair(m, n);
    const auto region = numrange::product_range(m, n, 720);
    const auto oracle = numrange::support_oracle(pair.P * pair.Q, 720);
    worst = std::max(worst, numrange::hausdorff_distance(region, oracle));
    if (spec.a > 0) ++a_positive;
  }
  const double elapsed = timer.seconds();
  report(8, "product range vs oracle",
         worst <= 2e-3 && a_positive >= 10 && elapsed < 30.0, worst, 2e-3,
         elapsed);
}

// 9. Complement-angle bookkeeping over every profile in {0,1,2}^4 at 1e-9.
void criterion_angle_bookkeeping() {
  Timer timer;
  double worst = 0.0;
  bool all_pass = true;
  std::mt19937_64 gen(77);
  auto uniform = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int d = 0; d <= 2; ++d) {
          const int t = 1 + (a + b + c + d) % 2;
          std::vector<double> angles;
          for (int k = 0; k < t; ++k) angles.push_back(0.15 + uniform() * 1.25);
          const auto [m, n] = subspace::synthesize_pair(
              angles, a, b, c, d,
              static_cast<std::uint64_t>(1000 + a * 27 + b * 9 + c * 3 + d));
          const auto rep = principal::complement_angle_relation(m, n, 1e-8);
          all_pass = all_pass && rep.all_pass();
          worst = std::max(worst, rep.zero_clause.max_deviation);
          worst = std::max(worst, rep.interior_clause.max_deviation);
          worst = std::max(worst, rep.right_clause.max_deviation);
        }
  report(9, "angle bookkeeping", all_pass && worst <= 1e-9, worst, 1e-9,
         timer.seconds());
}

// 10. SVD path vs the recursive-definition oracle at grid 360 within 0.02 rad.
void criterion_greedy_oracle() {
  Timer timer;
  double worst = 0.0;
  std::mt19937_64 gen(55);
  auto uniform = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
  for (int i = 0; i < 20; ++i) {
    const int t = 1 + i % 2;  // subspace dims 1 or 2
    std::vector<double> angles;
    for (int k = 0; k < t; ++k) angles.push_back(0.1 + uniform() * 1.35);
    const auto [m_raw, n_raw] = subspace::synthesize_pair(
        angles, 0, 0, 0, 0, static_cast<std::uint64_t>(500 + i));
    const auto m = corpus::scrambled(m_raw, 600 + static_cast<std::uint64_t>(i));
    const auto n = corpus::scrambled(n_raw, 700 + static_cast<std::uint64_t>(i));
    const auto dec = principal::principal_angles(m, n, 1e-8);
    const auto greedy = principal::greedy_angle_oracle(m, n, 360);
    for (std::size_t k = 0; k < greedy.size(); ++k)
      worst = std::max(worst, std::abs(greedy[k] - dec.angles[k]));
  }
  report(10, "recursive-definition oracle", worst <= 0.02, worst, 0.02,
         timer.seconds());
}

}  // namespace

int main() {
  criterion_biorthogonality();
  criterion_frames();
  criterion_swap_unitary();
  criterion_norm_identities();
  criterion_sum_range();
  criterion_eigenpairs();
  criterion_elliptic_range();
  criterion_product_range();
  criterion_angle_bookkeeping();
  criterion_greedy_oracle();
  std::printf("%d criterion failure(s)\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
