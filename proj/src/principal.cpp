#include "jordanlens/principal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jordanlens::principal {

namespace {

constexpr double kPi = std::numbers::pi;

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

}  // namespace

AngleDecomposition principal_angles(const Subspace& m, const Subspace& n,
                                    double tol) {
  if (m.ambient_dim() != n.ambient_dim())
    throw std::invalid_argument("ambient dimension mismatch in principal_angles");

  AngleDecomposition dec;
  dec.tol = tol;
  const Index q = std::min(m.dim(), n.dim());
  if (q == 0) {
    dec.u_vectors = Matrix(m.ambient_dim(), 0);
    dec.v_vectors = Matrix(m.ambient_dim(), 0);
    return dec;
  }

  const Matrix gram = m.basis().adjoint() * n.basis();
  Eigen::JacobiSVD<Matrix> svd(gram, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();

  dec.u_vectors = m.basis() * svd.matrixU();
  dec.v_vectors = n.basis() * svd.matrixV();

  // Joint phase rotation keeps <u_k, v_k> = sigma_k real non-negative while
  // making each u_k's largest entry real positive for determinism.
  for (Index k = 0; k < q; ++k) {
    Index imax = 0;
    double best = 0.0;
    for (Index i = 0; i < dec.u_vectors.rows(); ++i) {
      const double mag = std::abs(dec.u_vectors(i, k));
      if (mag > best) {
        best = mag;
        imax = i;
      }
    }
    if (best == 0.0) continue;
    const Complex phase = std::conj(dec.u_vectors(imax, k) / best);
    dec.u_vectors.col(k) *= phase;
    dec.v_vectors.col(k) *= phase;
  }

  dec.angles.resize(static_cast<std::size_t>(q));
  for (Index k = 0; k < q; ++k) {
    const double cosine = clamp01(sv(k));
    dec.angles[static_cast<std::size_t>(k)] = std::acos(cosine);
    if (sv(k) >= 1.0 - tol)
      ++dec.n_zero;
    else if (sv(k) <= tol)
      ++dec.n_right;
    else
      ++dec.n_interior;
  }
  return dec;
}

namespace {

// Unit vectors of C^d modulo a global phase: d-1 polar angles in [0, pi/2]
// and d-1 relative phases in [0, 2pi).
struct GridSearch {
  const Matrix& gram;  // (deflated N)^adj * (deflated M)
  Index d;
  Eigen::VectorXcd best_w{};
  double best_val = -1.0;

  void run(int grid) {
    Eigen::VectorXcd w(d);
    if (d == 1) {
      w(0) = 1.0;
      consider(w);
      return;
    }
    const int phases = std::max(grid, 1);
    if (d == 2) {
      for (int it = 0; it <= grid; ++it) {
        const double t = (kPi / 2.0) * it / grid;
        for (int ip = 0; ip < phases; ++ip) {
          const double phi = 2.0 * kPi * ip / phases;
          w(0) = std::cos(t);
          w(1) = std::polar(std::sin(t), phi);
          consider(w);
        }
      }
      return;
    }
    // d == 3: four real parameters; a full grid at the requested density is
    // not desk-scale, so run a coarse pass and refine around the best point.
    double lo[4] = {0.0, 0.0, 0.0, 0.0};
    double hi[4] = {kPi / 2.0, kPi / 2.0, 2.0 * kPi, 2.0 * kPi};
    const int coarse = std::min(grid, 32);
    for (int pass = 0; pass < 3; ++pass) {
      double arg_best[4] = {0, 0, 0, 0};
      double pass_best = -1.0;
      for (int i0 = 0; i0 <= coarse; ++i0)
        for (int i1 = 0; i1 <= coarse; ++i1)
          for (int i2 = 0; i2 < coarse; ++i2)
            for (int i3 = 0; i3 < coarse; ++i3) {
              const double t1 = lo[0] + (hi[0] - lo[0]) * i0 / coarse;
              const double t2 = lo[1] + (hi[1] - lo[1]) * i1 / coarse;
              const double p1 = lo[2] + (hi[2] - lo[2]) * i2 / coarse;
              const double p2 = lo[3] + (hi[3] - lo[3]) * i3 / coarse;
              w(0) = std::cos(t1);
              w(1) = std::polar(std::sin(t1) * std::cos(t2), p1);
              w(2) = std::polar(std::sin(t1) * std::sin(t2), p2);
              const double val = (gram * w).norm();
              if (val > pass_best) {
                pass_best = val;
                arg_best[0] = t1;
                arg_best[1] = t2;
                arg_best[2] = p1;
                arg_best[3] = p2;
              }
            }
      w(0) = std::cos(arg_best[0]);
      w(1) = std::polar(std::sin(arg_best[0]) * std::cos(arg_best[1]), arg_best[2]);
      w(2) = std::polar(std::sin(arg_best[0]) * std::sin(arg_best[1]), arg_best[3]);
      consider(w);
      for (int k = 0; k < 4; ++k) {
        const double span = (hi[k] - lo[k]) / coarse * 2.0;
        lo[k] = arg_best[k] - span;
        hi[k] = arg_best[k] + span;
      }
    }
  }

  void consider(const Eigen::VectorXcd& w) {
    const double val = (gram * w).norm();
    if (val > best_val) {
      best_val = val;
      best_w = w;
    }
  }
};

}  // namespace

std::vector<double> greedy_angle_oracle(const Subspace& m, const Subspace& n,
                                        int grid) {
  if (m.ambient_dim() != n.ambient_dim())
    throw std::invalid_argument("ambient dimension mismatch in greedy oracle");
  if (m.dim() > 3 || n.dim() > 3)
    throw std::invalid_argument("greedy oracle refuses subspace dimension > 3");
  if (grid < 1) throw std::invalid_argument("grid must be positive");

  Matrix bm = m.basis();
  Matrix bn = n.basis();
  const Index q = std::min(bm.cols(), bn.cols());
  std::vector<double> angles;
  angles.reserve(static_cast<std::size_t>(q));

  for (Index step = 0; step < q; ++step) {
    const Matrix gram = bn.adjoint() * bm;
    GridSearch search{gram, bm.cols()};
    search.run(grid);

    const double cosine = clamp01(search.best_val);
    angles.push_back(std::acos(cosine));

    const Vector u = bm * search.best_w;
    Vector v;
    const Vector coeff = gram * search.best_w;
    if (coeff.norm() > 1e-12)
      v = bn * (coeff / coeff.norm());
    else
      v = bn.col(0);  // right angle: any direction deflates N correctly

    if (step + 1 == q) break;
    const Matrix deflate_m = bm - u * (u.adjoint() * bm);
    const Matrix deflate_n = bn - v * (v.adjoint() * bn);
    bm = subspace::orthonormalize(deflate_m, 1e-6).basis();
    bn = subspace::orthonormalize(deflate_n, 1e-6).basis();
  }

  std::sort(angles.begin(), angles.end());
  return angles;
}

std::vector<JordanFrame> jordan_frames(const AngleDecomposition& dec,
                                       const Subspace& m, const Subspace& n) {
  if (m.ambient_dim() != n.ambient_dim() ||
      (dec.count() > 0 && dec.u_vectors.rows() != m.ambient_dim()))
    throw std::invalid_argument("decomposition does not match the pair");
  std::vector<JordanFrame> frames;
  frames.reserve(static_cast<std::size_t>(dec.n_interior));

  for (Index k = dec.n_zero; k < dec.n_zero + dec.n_interior; ++k) {
    JordanFrame f;
    f.theta = dec.angles[static_cast<std::size_t>(k)];
    f.lambda = std::cos(f.theta);
    f.mu = std::sin(f.theta);
    f.u = dec.u_vectors.col(k);
    f.v = dec.v_vectors.col(k);

    // s: unit vector in the plane perpendicular to u with <v,s> > 0.
    Vector s = f.v - f.u * (f.u.dot(f.v));
    s /= s.norm();
    {
      const Complex c = s.dot(f.v);  // <v,s>, real positive up to roundoff
      s *= c / std::abs(c);
    }
    // t: unit vector perpendicular to v with <s,t> > 0.
    Vector t = s - f.v * (f.v.dot(s));
    t /= t.norm();
    {
      const Complex c = t.dot(s);  // <s,t>
      t *= c / std::abs(c);
    }
    f.s = std::move(s);
    f.t = std::move(t);
    frames.push_back(std::move(f));
  }
  return frames;
}

ComplementAngleReport complement_angle_relation(const Subspace& m,
                                                const Subspace& n, double tol) {
  if (m.ambient_dim() != n.ambient_dim())
    throw std::invalid_argument("ambient dimension mismatch");
  // Normalize to dim M >= dim N; swapping exchanges the roles of c and d.
  if (m.dim() < n.dim()) return complement_angle_relation(n, m, tol);

  const auto five = subspace::five_part_decompose(m, n, tol);
  const auto dec = principal_angles(m, n, tol);
  const auto dec_perp =
      principal_angles(subspace::complement(m), subspace::complement(n), tol);

  ComplementAngleReport rep;
  rep.theta = dec.angles;
  rep.eta = dec_perp.angles;
  rep.a = five.a;
  rep.b = five.b;
  rep.c = five.c;
  rep.d = five.d;
  rep.r = five.r;

  const double angle_tol = std::sqrt(2.0 * tol);

  double dev = 0.0;
  for (Index i = 0; i < rep.a; ++i)
    dev = std::max(dev, std::abs(1.0 - std::cos(rep.theta[static_cast<std::size_t>(i)])));
  for (Index i = 0; i < rep.b; ++i)
    dev = std::max(dev, std::abs(1.0 - std::cos(rep.eta[static_cast<std::size_t>(i)])));
  rep.zero_clause = {dev <= tol, dev};

  dev = 0.0;
  for (Index i = 0; i < rep.r; ++i)
    dev = std::max(dev, std::abs(rep.theta[static_cast<std::size_t>(rep.a + i)] -
                                 rep.eta[static_cast<std::size_t>(rep.b + i)]));
  rep.interior_clause = {dev <= angle_tol, dev};

  // With dim M >= dim N both lists close with min(c,d) = d right angles.
  const Index rights = std::min(rep.c, rep.d);
  dev = 0.0;
  for (Index i = 0; i < rights; ++i) {
    dev = std::max(dev, std::abs(std::cos(
                            rep.theta[static_cast<std::size_t>(rep.a + rep.r + i)])));
    dev = std::max(dev, std::abs(std::cos(
                            rep.eta[static_cast<std::size_t>(rep.b + rep.r + i)])));
  }
  rep.right_clause = {dev <= tol, dev};
  return rep;
}

}  // namespace jordanlens::principal
