#include "jordanlens/numrange.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace jordanlens::numrange {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCollinearTol = 1e-12;

double cross(const Complex& o, const Complex& a, const Complex& b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

}  // namespace

std::array<Complex, 2> EllipticDisk::foci() const {
  if (semi_major >= semi_minor) {
    const double f = std::sqrt(semi_major * semi_major - semi_minor * semi_minor);
    return {center - f, center + f};
  }
  const double f = std::sqrt(semi_minor * semi_minor - semi_major * semi_major);
  return {center - Complex(0.0, f), center + Complex(0.0, f)};
}

std::vector<Complex> convex_hull(std::vector<Complex> points) {
  auto less = [](const Complex& a, const Complex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  };
  std::sort(points.begin(), points.end(), less);
  points.erase(std::unique(points.begin(), points.end()), points.end());

  const std::size_t n = points.size();
  if (n <= 2) return points;

  std::vector<Complex> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], points[i]) <= kCollinearTol)
      --k;
    hull[k++] = points[i];
  }
  for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= kCollinearTol)
      --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

ConvexRegion hull_region(std::vector<EllipticDisk> disks,
                         std::vector<Segment> segments,
                         std::vector<Complex> points, int samples) {
  if (samples < 3) throw std::invalid_argument("need at least 3 samples per disk");
  std::vector<Complex> cloud = points;
  cloud.reserve(points.size() + 2 * segments.size() +
                disks.size() * static_cast<std::size_t>(samples));
  for (const auto& seg : segments) {
    cloud.push_back(seg.a);
    cloud.push_back(seg.b);
  }
  for (const auto& disk : disks)
    for (int j = 0; j < samples; ++j) {
      const double t = 2.0 * kPi * j / samples;
      cloud.push_back(disk.center + Complex(disk.semi_major * std::cos(t),
                                            disk.semi_minor * std::sin(t)));
    }
  if (cloud.empty())
    throw std::invalid_argument("region has no generators");

  ConvexRegion region;
  region.vertices = convex_hull(std::move(cloud));
  region.disks = std::move(disks);
  region.segments = std::move(segments);
  region.points = std::move(points);
  return region;
}

NormIdentityReport operator_norm_identities(const ProjectorPair& pair,
                                            const AngleDecomposition& dec) {
  NormIdentityReport rep;
  rep.norm_sum = operator_norm(pair.P + pair.Q);
  rep.norm_prod = operator_norm(pair.P * pair.Q);
  rep.dev_sum_identity = std::abs(rep.norm_sum - (1.0 + rep.norm_prod));
  if (dec.count() > 0) {
    rep.cos_theta1 = std::cos(dec.angles.front());
    rep.dev_prod_cos = std::abs(rep.norm_prod - *rep.cos_theta1);
    rep.dev_sum_cos = std::abs(rep.norm_sum - (1.0 + *rep.cos_theta1));
  }
  return rep;
}

Interval sum_range(const Subspace& m, const Subspace& n) {
  if (m.ambient_dim() != n.ambient_dim())
    throw std::invalid_argument("ambient dimension mismatch in sum_range");
  auto degenerate = [](const Subspace& s, const char* name) {
    if (s.dim() == 0)
      throw std::invalid_argument(std::string(name) +
                                  " is the zero subspace; Dixmier angle undefined");
    if (s.dim() == s.ambient_dim())
      throw std::invalid_argument(std::string(name) +
                                  " is the full space; complement Dixmier angle "
                                  "undefined");
  };
  degenerate(m, "M");
  degenerate(n, "N");

  // 2 cos^2(theta_1/2) = 1 + cos(theta_1) and 2 sin^2(eta_1/2) = 1 - cos(eta_1);
  // the cosines are the top singular values of the two cross-Gram matrices.
  const double cos_theta1 = clamp01(operator_norm(m.basis().adjoint() * n.basis()));
  const double cos_eta1 = clamp01(operator_norm(
      subspace::complement(m).basis().adjoint() * subspace::complement(n).basis()));
  return Interval{1.0 - cos_eta1, 1.0 + cos_theta1};
}

EllipticDisk offdiag_ellipse(double a, double b) {
  if (a < 0.0 || b < 0.0) throw std::invalid_argument("entries must be non-negative");
  if (b > a) throw std::invalid_argument("requires b <= a");
  return EllipticDisk{Complex(0.0, 0.0), (a + b) / 2.0, (a - b) / 2.0};
}

std::vector<EllipticDisk> product_disks(const std::vector<JordanFrame>& frames) {
  std::vector<EllipticDisk> disks;
  disks.reserve(frames.size());
  for (const auto& f : frames)
    disks.push_back(EllipticDisk{Complex(f.lambda * f.lambda / 2.0, 0.0),
                                 f.lambda / 2.0, f.lambda * f.mu / 2.0});
  return disks;
}

ConvexRegion product_range(const Subspace& m, const Subspace& n,
                           int samples_per_disk) {
  if (m.ambient_dim() != n.ambient_dim())
    throw std::invalid_argument("ambient dimension mismatch in product_range");
  if (m.dim() == 0 && n.dim() == 0)
    throw std::invalid_argument("both subspaces are zero; W(PQ) region is empty");

  const double tol = subspace::kDefaultTol;
  const auto five = subspace::five_part_decompose(m, n, tol);
  const auto dec = principal::principal_angles(m, n, tol);
  const auto frames = principal::jordan_frames(dec, m, n);

  std::vector<EllipticDisk> disks = product_disks(frames);
  std::vector<Segment> segments;
  std::vector<Complex> points;

  if (five.a == m.ambient_dim()) {
    // M = N = C^n: PQ is the identity and the range collapses to {1}.
    points.emplace_back(1.0, 0.0);
  } else {
    if (five.a > 0) segments.push_back(Segment{Complex(0.0, 0.0), Complex(1.0, 0.0)});
    if (five.b + five.c + five.d > 0) points.emplace_back(0.0, 0.0);
  }
  return hull_region(std::move(disks), std::move(segments), std::move(points),
                     samples_per_disk);
}

std::vector<Complex> support_boundary_points_serial(const Matrix& a,
                                                    int num_angles) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix must be square");
  if (a.rows() < 1) throw std::invalid_argument("matrix must be nonempty");
  if (num_angles < 3) throw std::invalid_argument("need at least 3 angles");

  std::vector<Complex> out(static_cast<std::size_t>(num_angles));
  for (int j = 0; j < num_angles; ++j) {
    const double phi = 2.0 * kPi * j / num_angles;
    const Matrix rotated = std::polar(1.0, phi) * a;
    const Matrix herm = (rotated + rotated.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> es(herm);
    const Vector x = es.eigenvectors().col(a.rows() - 1);
    out[static_cast<std::size_t>(j)] = (x.adjoint() * a * x)(0, 0);
  }
  return out;
}

std::vector<Complex> support_boundary_points(const Matrix& a, int num_angles) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix must be square");
  if (a.rows() < 1) throw std::invalid_argument("matrix must be nonempty");
  if (num_angles < 3) throw std::invalid_argument("need at least 3 angles");

  std::vector<Complex> out(static_cast<std::size_t>(num_angles));
#pragma omp parallel for schedule(static)
  for (int j = 0; j < num_angles; ++j) {
    const double phi = 2.0 * kPi * j / num_angles;
    const Matrix rotated = std::polar(1.0, phi) * a;
    const Matrix herm = (rotated + rotated.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> es(herm);
    const Vector x = es.eigenvectors().col(a.rows() - 1);
    out[static_cast<std::size_t>(j)] = (x.adjoint() * a * x)(0, 0);
  }
  return out;
}

ConvexRegion support_oracle(const Matrix& a, int num_angles) {
  ConvexRegion region;
  region.vertices = convex_hull(support_boundary_points(a, num_angles));
  return region;
}

namespace {

double point_segment_distance(const Complex& p, const Complex& a,
                              const Complex& b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  const double t =
      clamp01(((p - a).real() * ab.real() + (p - a).imag() * ab.imag()) / len2);
  return std::abs(p - (a + t * ab));
}

double point_region_distance(const Complex& p, const ConvexRegion& region) {
  const auto& v = region.vertices;
  if (v.size() == 1) return std::abs(p - v[0]);
  if (v.size() >= 3) {
    bool inside = true;
    for (std::size_t i = 0; i < v.size() && inside; ++i) {
      const Complex& a = v[i];
      const Complex& b = v[(i + 1) % v.size()];
      if (cross(a, b, p) < -1e-12) inside = false;
    }
    if (inside) return 0.0;
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i)
    best = std::min(best,
                    point_segment_distance(p, v[i], v[(i + 1) % v.size()]));
  return best;
}

}  // namespace

double hausdorff_distance(const ConvexRegion& r1, const ConvexRegion& r2) {
  if (r1.vertices.empty() || r2.vertices.empty())
    throw std::invalid_argument("Hausdorff distance of an empty region");
  double dist = 0.0;
  for (const auto& p : r1.vertices)
    dist = std::max(dist, point_region_distance(p, r2));
  for (const auto& p : r2.vertices)
    dist = std::max(dist, point_region_distance(p, r1));
  return dist;
}

}  // namespace jordanlens::numrange
