#pragma once

#include <array>
#include <optional>
#include <vector>

#include "jordanlens/principal.hpp"
#include "jordanlens/subspace.hpp"

namespace jordanlens::numrange {

using principal::AngleDecomposition;
using principal::JordanFrame;
using subspace::ProjectorPair;
using subspace::Subspace;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Axis-aligned filled ellipse in C: semi_major along the real axis,
/// semi_minor along the imaginary axis. Degenerate axes allowed.
struct EllipticDisk {
  Complex center;
  double semi_major = 0.0;
  double semi_minor = 0.0;
  std::array<Complex, 2> foci() const;
};

struct Segment {
  Complex a;
  Complex b;
};

/// Counterclockwise convex polygon together with the generators it was
/// assembled from. Degenerate regions (a point or a segment) keep one or two
/// vertices.
struct ConvexRegion {
  std::vector<Complex> vertices;
  std::vector<EllipticDisk> disks;
  std::vector<Segment> segments;
  std::vector<Complex> points;
};

/// Monotone chain over the given points; collinear points are dropped with
/// cross-product tolerance 1e-12. Returns the hull in CCW order.
std::vector<Complex> convex_hull(std::vector<Complex> points);

/// Samples each disk boundary at `samples` evenly spaced parameters, adds
/// segment endpoints and isolated points, and hulls everything.
ConvexRegion hull_region(std::vector<EllipticDisk> disks,
                         std::vector<Segment> segments,
                         std::vector<Complex> points, int samples);

struct NormIdentityReport {
  double norm_sum = 0.0;   // |P+Q|
  double norm_prod = 0.0;  // |PQ|
  std::optional<double> cos_theta1;
  double dev_sum_identity = 0.0;            // | |P+Q| - (1 + |PQ|) |
  std::optional<double> dev_prod_cos;       // | |PQ| - cos(theta_1) |
  std::optional<double> dev_sum_cos;        // | |P+Q| - (1 + cos(theta_1)) |
};

/// |P+Q| = 1 + |PQ| and |PQ| = cos(theta_1), evaluated numerically on both
/// sides. The cos(theta_1) comparisons are absent when the pair has no
/// principal angles (a zero subspace).
NormIdentityReport operator_norm_identities(const ProjectorPair& pair,
                                            const AngleDecomposition& dec);

/// W(P+Q) = [2 sin^2(eta_1/2), 2 cos^2(theta_1/2)] with theta_1 the Dixmier
/// angle of (M, N) and eta_1 the Dixmier angle of the complements. Errors
/// when either angle is undefined (a zero or full subspace involved).
Interval sum_range(const Subspace& m, const Subspace& n);

/// Numerical range of [[0,a],[b,0]]: the elliptic disk centered at 0 with
/// semi-axes (a+b)/2 and (a-b)/2 and foci at +-sqrt(ab). Requires
/// 0 <= b <= a.
EllipticDisk offdiag_ellipse(double a, double b);

/// Per interior angle: the disk centered at lambda^2/2 with semi-axes
/// lambda/2 and lambda*mu/2 (foci 0 and lambda^2).
std::vector<EllipticDisk> product_disks(const std::vector<JordanFrame>& frames);

/// W(PQ): the convex hull of the per-plane disks, the segment [0,1] when
/// M cap N is nontrivial, and the point {0} when PQ annihilates part of the
/// space. Errors when both subspaces are zero.
ConvexRegion product_range(const Subspace& m, const Subspace& n,
                           int samples_per_disk = 720);

/// Boundary points <A x_phi, x_phi> from the top eigenvector of the rotated
/// Hermitian part at each angle phi_j = 2 pi j / num_angles, in angle order.
/// The parallel version distributes the per-angle eigenproblems over OpenMP
/// threads and returns the same list as the serial reference.
std::vector<Complex> support_boundary_points(const Matrix& a, int num_angles);
std::vector<Complex> support_boundary_points_serial(const Matrix& a,
                                                    int num_angles);

/// Inner approximation of W(A) by the support-function method; converges to
/// W(A) as num_angles grows.
ConvexRegion support_oracle(const Matrix& a, int num_angles = 720);

/// Symmetric Hausdorff distance between two convex regions via
/// vertex-to-region distances in both directions.
double hausdorff_distance(const ConvexRegion& r1, const ConvexRegion& r2);

}  // namespace jordanlens::numrange
