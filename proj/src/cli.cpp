#include "jordanlens/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "jordanlens/equivalence.hpp"
#include "jordanlens/io.hpp"
#include "jordanlens/numrange.hpp"
#include "jordanlens/principal.hpp"
#include "jordanlens/spectra.hpp"
#include "jordanlens/subspace.hpp"

namespace jordanlens::cli {

namespace {

using json = nlohmann::json;
using subspace::Subspace;

constexpr int kSchemaVersion = 1;

std::string fmt12(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

double angle_out(double radians, bool degrees) {
  return degrees ? radians * 180.0 / std::numbers::pi : radians;
}

Subspace load_subspace(const std::string& path, double tol) {
  return subspace::orthonormalize(io::parse_matrix_file(path), tol);
}

struct OutputStream {
  explicit OutputStream(const std::optional<std::string>& path) {
    if (path) {
      file.open(*path);
      if (!file) throw std::runtime_error("cannot open for writing: " + *path);
    }
  }
  std::ostream& get() { return file.is_open() ? file : std::cout; }
  std::ofstream file;
};

json complex_json(const Complex& z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json vector_json(const Vector& v) {
  json arr = json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(complex_json(v(i)));
  return arr;
}

// ---------------------------------------------------------------------------
// angles / decompose / frames
// ---------------------------------------------------------------------------

int cmd_angles(const RunConfig& cfg) {
  const Subspace m = load_subspace(cfg.inputs[0], cfg.tol);
  const Subspace n = load_subspace(cfg.inputs[1], cfg.tol);
  const auto dec = principal::principal_angles(m, n, cfg.tol);

  OutputStream os(cfg.output);
  const char* unit = cfg.degrees ? "degrees" : "radians";
  if (cfg.format == Format::Json) {
    json j{{"schema_version", kSchemaVersion},
           {"command", "angles"},
           {"tol", cfg.tol},
           {"n", m.ambient_dim()},
           {"dim_m", m.dim()},
           {"dim_n", n.dim()},
           {"unit", unit},
           {"counts",
            {{"zero", dec.n_zero}, {"interior", dec.n_interior}, {"right", dec.n_right}}}};
    json arr = json::array();
    for (double t : dec.angles) arr.push_back(angle_out(t, cfg.degrees));
    j["angles"] = arr;
    j["dixmier"] = dec.dixmier() ? json(angle_out(*dec.dixmier(), cfg.degrees)) : json();
    j["friedrichs"] =
        dec.friedrichs() ? json(angle_out(*dec.friedrichs(), cfg.degrees)) : json();
    os.get() << j.dump(2) << '\n';
    return 0;
  }

  os.get() << "n = " << m.ambient_dim() << ", dim M = " << m.dim()
           << ", dim N = " << n.dim() << ", q = " << dec.count() << '\n';
  for (std::size_t i = 0; i < dec.angles.size(); ++i)
    os.get() << "theta_" << i + 1 << " = "
             << fmt12(angle_out(dec.angles[i], cfg.degrees)) << ' ' << unit << '\n';
  os.get() << "counts: zero=" << dec.n_zero << " interior=" << dec.n_interior
           << " right=" << dec.n_right << '\n';
  os.get() << "dixmier = "
           << (dec.dixmier() ? fmt12(angle_out(*dec.dixmier(), cfg.degrees))
                             : std::string("undefined"))
           << '\n';
  os.get() << "friedrichs = "
           << (dec.friedrichs() ? fmt12(angle_out(*dec.friedrichs(), cfg.degrees))
                                : std::string("undefined"))
           << '\n';
  return 0;
}

int cmd_decompose(const RunConfig& cfg) {
  const Subspace m = load_subspace(cfg.inputs[0], cfg.tol);
  const Subspace n = load_subspace(cfg.inputs[1], cfg.tol);
  const auto five = subspace::five_part_decompose(m, n, cfg.tol);

  OutputStream os(cfg.output);
  if (cfg.format == Format::Json) {
    json j{{"schema_version", kSchemaVersion},
           {"command", "decompose"},
           {"tol", cfg.tol},
           {"n", m.ambient_dim()},
           {"dim_m", m.dim()},
           {"dim_n", n.dim()},
           {"a", five.a},
           {"b", five.b},
           {"c", five.c},
           {"d", five.d},
           {"r", five.r},
           {"dim_r_part", 2 * five.r}};
    os.get() << j.dump(2) << '\n';
    return 0;
  }
  os.get() << "n = " << m.ambient_dim() << ", dim M = " << m.dim()
           << ", dim N = " << n.dim() << '\n'
           << "a = dim(M cap N)           = " << five.a << '\n'
           << "b = dim(M-perp cap N-perp) = " << five.b << '\n'
           << "c = dim(M cap N-perp)      = " << five.c << '\n'
           << "d = dim(M-perp cap N)      = " << five.d << '\n'
           << "r (dim R = 2r)             = " << five.r << '\n';
  return 0;
}

int cmd_frames(const RunConfig& cfg) {
  const Subspace m = load_subspace(cfg.inputs[0], cfg.tol);
  const Subspace n = load_subspace(cfg.inputs[1], cfg.tol);
  const auto dec = principal::principal_angles(m, n, cfg.tol);
  const auto frames = principal::jordan_frames(dec, m, n);

  OutputStream os(cfg.output);
  if (cfg.format == Format::Json) {
    json arr = json::array();
    for (const auto& f : frames)
      arr.push_back(json{{"theta", angle_out(f.theta, cfg.degrees)},
                         {"lambda", f.lambda},
                         {"mu", f.mu},
                         {"u", vector_json(f.u)},
                         {"v", vector_json(f.v)},
                         {"s", vector_json(f.s)},
                         {"t", vector_json(f.t)}});
    json j{{"schema_version", kSchemaVersion},
           {"command", "frames"},
           {"tol", cfg.tol},
           {"unit", cfg.degrees ? "degrees" : "radians"},
           {"frames", arr}};
    os.get() << j.dump(2) << '\n';
    return 0;
  }

  auto print_vec = [&os](const char* name, const Vector& v) {
    os.get() << "  " << name << " =";
    for (Index i = 0; i < v.size(); ++i) os.get() << ' ' << io::format_complex(v(i));
    os.get() << '\n';
  };
  os.get() << frames.size() << " Jordan plane(s)\n";
  for (std::size_t k = 0; k < frames.size(); ++k) {
    const auto& f = frames[k];
    os.get() << "plane " << k + 1 << ": theta = "
             << fmt12(angle_out(f.theta, cfg.degrees)) << ", lambda = "
             << fmt12(f.lambda) << ", mu = " << fmt12(f.mu) << '\n';
    print_vec("u", f.u);
    print_vec("v", f.v);
    print_vec("s", f.s);
    print_vec("t", f.t);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// equiv / swap-unitary
// ---------------------------------------------------------------------------

int cmd_equiv(const RunConfig& cfg) {
  const Subspace m1 = load_subspace(cfg.inputs[0], cfg.tol);
  const Subspace n1 = load_subspace(cfg.inputs[1], cfg.tol);
  const Subspace m2 = load_subspace(cfg.inputs[2], cfg.tol);
  const Subspace n2 = load_subspace(cfg.inputs[3], cfg.tol);
  const auto rep = equivalence::decide_equivalent({m1, n1}, {m2, n2}, cfg.tol);

  OutputStream os(cfg.output);
  if (cfg.format == Format::Json) {
    json checks = json::array();
    for (const auto& chk : rep.dim_checks)
      checks.push_back(json{{"name", chk.name},
                            {"value1", chk.value1},
                            {"value2", chk.value2},
                            {"pass", chk.pass}});
    json j{{"schema_version", kSchemaVersion},
           {"command", "equiv"},
           {"tol", cfg.tol},
           {"dim_checks", checks},
           {"angle_deviation", rep.angle_deviation},
           {"angle_tolerance", rep.angle_tolerance},
           {"equivalent", rep.equivalent}};
    os.get() << j.dump(2) << '\n';
  } else {
    for (const auto& chk : rep.dim_checks)
      os.get() << (chk.pass ? "PASS " : "FAIL ") << chk.name << ": " << chk.value1
               << " vs " << chk.value2 << '\n';
    os.get() << (rep.angle_deviation <= rep.angle_tolerance ? "PASS " : "FAIL ")
             << "principal angles: max deviation = " << fmt12(rep.angle_deviation)
             << " (tolerance " << fmt12(rep.angle_tolerance) << ")\n"
             << (rep.equivalent ? "equivalent" : "not equivalent") << '\n';
  }
  return rep.equivalent ? 0 : 1;
}

int cmd_swap_unitary(const RunConfig& cfg) {
  const Subspace m = load_subspace(cfg.inputs[0], cfg.tol);
  const Subspace n = load_subspace(cfg.inputs[1], cfg.tol);
  const Matrix u = equivalence::build_swap_unitary(m, n, cfg.tol);
  OutputStream os(cfg.output);
  io::write_matrix(os.get(), u);
  return 0;
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

int cmd_spectrum(const RunConfig& cfg) {
  const Subspace m = load_subspace(cfg.inputs[0], cfg.tol);
  const Subspace n = load_subspace(cfg.inputs[1], cfg.tol);
  const auto kind = spectra::kind_from_string(cfg.kind);
  const auto pair = subspace::make_projector_pair(m, n);
  const auto five = subspace::five_part_decompose(m, n, cfg.tol);
  const auto dec = principal::principal_angles(m, n, cfg.tol);
  const auto frames = principal::jordan_frames(dec, m, n);
  const Matrix op = spectra::build_operator(kind, pair);
  const auto pairs = spectra::analytic_eigenpairs(kind, frames, five);

  OutputStream os(cfg.output);
  if (cfg.format == Format::Json) {
    json arr = json::array();
    for (const auto& ep : pairs) {
      const double residual = (op * ep.vector - ep.value * ep.vector).norm() /
                              ep.vector.norm();
      arr.push_back(json{{"value", complex_json(ep.value)},
                         {"residual", residual},
                         {"vector", vector_json(ep.vector)}});
    }
    json j{{"schema_version", kSchemaVersion},
           {"command", "spectrum"},
           {"kind", spectra::to_string(kind)},
           {"tol", cfg.tol},
           {"eigenpairs", arr}};
    os.get() << j.dump(2) << '\n';
    return 0;
  }
  os.get() << "EV(" << spectra::to_string(kind) << "): " << pairs.size()
           << " analytic eigenpair(s)\n";
  for (const auto& ep : pairs) {
    const double residual =
        (op * ep.vector - ep.value * ep.vector).norm() / ep.vector.norm();
    os.get() << "value = " << io::format_complex(ep.value)
             << "  residual = " << fmt12(residual) << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------
// numrange-sum / numrange-product
// ---------------------------------------------------------------------------

int cmd_numrange_sum(const RunConfig& cfg) {
  const Subspace m = load_subspace(cfg.inputs[0], cfg.tol);
  const Subspace n = load_subspace(cfg.inputs[1], cfg.tol);
  const auto interval = numrange::sum_range(m, n);

  OutputStream os(cfg.output);
  if (cfg.format == Format::Json) {
    json j{{"schema_version", kSchemaVersion},
           {"command", "numrange-sum"},
           {"tol", cfg.tol},
           {"lo", interval.lo},
           {"hi", interval.hi}};
    os.get() << j.dump(2) << '\n';
  } else {
    os.get() << "W(P+Q) = [" << fmt12(interval.lo) << ", " << fmt12(interval.hi)
             << "]\n";
  }
  return 0;
}

int cmd_numrange_product(const RunConfig& cfg) {
  const Subspace m = load_subspace(cfg.inputs[0], cfg.tol);
  const Subspace n = load_subspace(cfg.inputs[1], cfg.tol);
  const auto region = numrange::product_range(m, n, cfg.samples);

  OutputStream os(cfg.output);
  switch (cfg.format) {
    case Format::Csv:
      io::write_region_csv(os.get(), region);
      break;
    case Format::Svg:
      io::emit_svg(os.get(), region, region.disks);
      break;
    case Format::Json: {
      json verts = json::array();
      for (const auto& v : region.vertices) verts.push_back(complex_json(v));
      json disks = json::array();
      for (const auto& disk : region.disks)
        disks.push_back(json{{"center", complex_json(disk.center)},
                             {"semi_major", disk.semi_major},
                             {"semi_minor", disk.semi_minor}});
      json segments = json::array();
      for (const auto& seg : region.segments)
        segments.push_back(json{{"a", complex_json(seg.a)}, {"b", complex_json(seg.b)}});
      json points = json::array();
      for (const auto& pt : region.points) points.push_back(complex_json(pt));
      json j{{"schema_version", kSchemaVersion},
             {"command", "numrange-product"},
             {"samples", cfg.samples},
             {"vertices", verts},
             {"disks", disks},
             {"segments", segments},
             {"points", points}};
      os.get() << j.dump(2) << '\n';
      break;
    }
    case Format::Text:
      os.get() << "W(PQ): " << region.vertices.size() << " hull vertices, "
               << region.disks.size() << " disk(s), " << region.segments.size()
               << " segment(s), " << region.points.size() << " point(s)\n";
      for (const auto& v : region.vertices)
        os.get() << fmt12(v.real()) << ' ' << fmt12(v.imag()) << '\n';
      break;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// random-pair
// ---------------------------------------------------------------------------

int cmd_random_pair(const RunConfig& cfg) {
  const auto pair = subspace::synthesize_pair(cfg.angles, cfg.a, cfg.b, cfg.c,
                                              cfg.d, cfg.seed.value_or(0));
  io::write_matrix_file(cfg.inputs[0], pair.first.basis());
  io::write_matrix_file(cfg.inputs[1], pair.second.basis());
  std::cerr << "wrote " << cfg.inputs[0] << " (" << pair.first.ambient_dim() << "x"
            << pair.first.dim() << ") and " << cfg.inputs[1] << " ("
            << pair.second.ambient_dim() << "x" << pair.second.dim() << ")\n";
  return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct CheckResult {
  std::string name;
  bool pass;
  double value;  // deviation or similar scalar evidence
};

void check(std::vector<CheckResult>& out, const std::string& name, double value,
           double bound) {
  out.push_back({name, value <= bound, value});
}

std::vector<Complex> dense_eigenvalues(const Matrix& a) {
  Eigen::ComplexEigenSolver<Matrix> es(a);
  std::vector<Complex> values(static_cast<std::size_t>(a.rows()));
  for (Index i = 0; i < a.rows(); ++i) values[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
  return values;
}

std::vector<CheckResult> verify_pair(const Subspace& m, const Subspace& n,
                                     double tol, int samples) {
  std::vector<CheckResult> out;
  const auto pair = subspace::make_projector_pair(m, n);

  auto projector_checks = [&out](const char* tag, const Subspace& s) {
    const Matrix p = subspace::projector(s);
    check(out, std::string("projector.idempotent.") + tag,
          operator_norm(p * p - p), 1e-11);
    check(out, std::string("projector.hermitian.") + tag,
          operator_norm(p - p.adjoint()), 1e-12);
    const Matrix pc = subspace::projector(subspace::complement(s));
    check(out, std::string("complement.resolution.") + tag,
          operator_norm(p + pc - Matrix::Identity(s.ambient_dim(), s.ambient_dim())),
          1e-11);
  };
  projector_checks("M", m);
  projector_checks("N", n);

  const auto five = subspace::five_part_decompose(m, n, tol);
  out.push_back({"five_part.ledger",
                 five.a + five.c + five.r == m.dim() &&
                     five.a + five.d + five.r == n.dim() &&
                     five.a + five.b + five.c + five.d + 2 * five.r ==
                         m.ambient_dim(),
                 0.0});
  {
    const Subspace* parts[5] = {&five.mn, &five.mn_perp, &five.m_perp_n,
                                &five.both_perp, &five.r_part};
    double dev = 0.0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        if (parts[i]->dim() > 0 && parts[j]->dim() > 0)
          dev = std::max(dev, (parts[i]->basis().adjoint() * parts[j]->basis())
                                  .cwiseAbs()
                                  .maxCoeff());
    check(out, "five_part.orthogonality", dev, 1e-10);
  }
  if (five.r > 0) {
    const Subspace rm = subspace::intersect(five.r_part, m, tol);
    const Subspace rn = subspace::intersect(five.r_part, n, tol);
    const Matrix rm_in_r = five.r_part.basis().adjoint() * rm.basis();
    const Matrix rn_in_r = five.r_part.basis().adjoint() * rn.basis();
    const bool generic = rm.dim() == five.r && rn.dim() == five.r &&
                         subspace::is_generic_position(
                             subspace::orthonormalize(rm_in_r, tol),
                             subspace::orthonormalize(rn_in_r, tol), tol);
    out.push_back({"five_part.generic_remainder", generic, 0.0});
  }

  const auto dec = principal::principal_angles(m, n, tol);
  if (dec.count() > 0) {
    Eigen::VectorXd cosines(dec.count());
    for (Index k = 0; k < dec.count(); ++k)
      cosines(k) = std::cos(dec.angles[static_cast<std::size_t>(k)]);
    const Matrix gram = dec.u_vectors.adjoint() * dec.v_vectors;
    check(out, "principal.biorthogonality",
          (gram - cosines.asDiagonal().toDenseMatrix().cast<Complex>())
              .cwiseAbs()
              .maxCoeff(),
          1e-10);
    check(out, "principal.u_orthonormal",
          (dec.u_vectors.adjoint() * dec.u_vectors -
           Matrix::Identity(dec.count(), dec.count()))
              .cwiseAbs()
              .maxCoeff(),
          1e-10);
    check(out, "principal.v_orthonormal",
          (dec.v_vectors.adjoint() * dec.v_vectors -
           Matrix::Identity(dec.count(), dec.count()))
              .cwiseAbs()
              .maxCoeff(),
          1e-10);
    double action = 0.0;
    double phase = 0.0;
    for (Index k = 0; k < dec.count(); ++k) {
      action = std::max(action, (pair.P * dec.v_vectors.col(k) -
                                 cosines(k) * dec.u_vectors.col(k))
                                    .norm());
      action = std::max(action, (pair.Q * dec.u_vectors.col(k) -
                                 cosines(k) * dec.v_vectors.col(k))
                                    .norm());
      const Complex ip = dec.v_vectors.col(k).dot(dec.u_vectors.col(k));
      phase = std::max(phase, std::abs(ip.imag()));
      phase = std::max(phase, std::max(0.0, -ip.real()));
    }
    check(out, "principal.projection_action", action, 1e-10);
    check(out, "principal.phase_convention", phase, 1e-10);
    out.push_back({"principal.intersect_matches_zero_count",
                   subspace::intersect(m, n, tol).dim() == dec.n_zero, 0.0});
  }

  const auto frames = principal::jordan_frames(dec, m, n);
  {
    double dev = 0.0;
    for (const auto& f : frames) {
      dev = std::max(dev, std::abs(inner(f.u, f.v) - Complex(f.lambda)));
      dev = std::max(dev, std::abs(inner(f.s, f.t) - Complex(f.lambda)));
      dev = std::max(dev, std::abs(inner(f.s, f.v) - Complex(f.mu)));
      dev = std::max(dev, std::abs(inner(f.u, f.t) + Complex(f.mu)));
      dev = std::max(dev, std::abs(inner(f.u, f.s)));
      dev = std::max(dev, std::abs(inner(f.v, f.t)));
      const double cot = f.lambda / f.mu;
      const double csc = 1.0 / f.mu;
      dev = std::max(dev, (f.u - (cot * f.s - csc * f.t)).norm());
    }
    check(out, "frames.identities", dev, 1e-10);
  }

  {
    const auto norms = numrange::operator_norm_identities(pair, dec);
    check(out, "numrange.norm_sum_identity", norms.dev_sum_identity, 1e-10);
    if (norms.dev_prod_cos)
      check(out, "numrange.norm_prod_cos", *norms.dev_prod_cos, 1e-10);
  }

  const bool proper = m.dim() > 0 && m.dim() < m.ambient_dim() && n.dim() > 0 &&
                      n.dim() < n.ambient_dim();
  if (proper) {
    const auto interval = numrange::sum_range(m, n);
    Eigen::SelfAdjointEigenSolver<Matrix> es(pair.P + pair.Q);
    const double dev =
        std::max(std::abs(interval.lo - es.eigenvalues().minCoeff()),
                 std::abs(interval.hi - es.eigenvalues().maxCoeff()));
    check(out, "numrange.sum_range_hermitian", dev, 1e-10);
  }

  {
    double worst_residual = 0.0;
    double worst_multiset = 0.0;
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
      worst_multiset = std::max(
          worst_multiset,
          spectra::multiset_deviation(analytic, dense_eigenvalues(op)));
    }
    check(out, "spectra.residuals", worst_residual, 1e-9);
    check(out, "spectra.multisets", worst_multiset, 1e-8);
  }

  if (m.dim() > 0 || n.dim() > 0) {
    const auto region = numrange::product_range(m, n, samples);
    const auto oracle = numrange::support_oracle(pair.P * pair.Q, samples);
    check(out, "numrange.product_vs_oracle",
          numrange::hausdorff_distance(region, oracle), 2e-3);
  }

  {
    const auto rep = principal::complement_angle_relation(m, n, tol);
    out.push_back({"principal.complement_clause_zero", rep.zero_clause.pass,
                   rep.zero_clause.max_deviation});
    out.push_back({"principal.complement_clause_interior",
                   rep.interior_clause.pass, rep.interior_clause.max_deviation});
    out.push_back({"principal.complement_clause_right", rep.right_clause.pass,
                   rep.right_clause.max_deviation});
  }

  if (five.a == 0 && five.b == 0 && five.c == 0 && five.d == 0 && five.r > 0) {
    const Matrix u = equivalence::build_swap_unitary(m, n, tol);
    const Index dim_n = m.ambient_dim();
    check(out, "equivalence.swap_unitary",
          operator_norm(u.adjoint() * u - Matrix::Identity(dim_n, dim_n)), 1e-10);
    check(out, "equivalence.swap_skew", operator_norm(u + u.adjoint()), 1e-10);
    check(out, "equivalence.swap_square",
          operator_norm(u * u + Matrix::Identity(dim_n, dim_n)), 1e-9);
    const Matrix pm_perp = subspace::projector(subspace::complement(m));
    const Matrix pn_perp = subspace::projector(subspace::complement(n));
    const double range_dev =
        std::max(operator_norm(pm_perp * (u * m.basis()) - u * m.basis()),
                 operator_norm(pn_perp * (u * n.basis()) - u * n.basis()));
    check(out, "equivalence.swap_ranges", range_dev, 1e-9);
    const auto rep = equivalence::decide_equivalent(
        {m, n}, {subspace::complement(m), subspace::complement(n)}, tol);
    out.push_back({"equivalence.pair_vs_complements", rep.equivalent,
                   rep.angle_deviation});
  }

  return out;
}

int cmd_verify(const RunConfig& cfg) {
  OutputStream os(cfg.output);
  std::vector<std::pair<Subspace, Subspace>> pairs;
  std::vector<std::string> labels;

  if (cfg.inputs.size() == 2) {
    pairs.emplace_back(load_subspace(cfg.inputs[0], cfg.tol),
                       load_subspace(cfg.inputs[1], cfg.tol));
    labels.push_back(cfg.inputs[0] + " / " + cfg.inputs[1]);
  } else {
    static constexpr int kProfiles[][4] = {
        {0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0},
        {0, 0, 0, 1}, {1, 1, 0, 0}, {1, 0, 1, 1}, {0, 0, 2, 1},
        {2, 1, 0, 0}, {1, 1, 1, 1}, {0, 2, 0, 0}, {0, 0, 1, 1}};
    const std::uint64_t base_seed = cfg.seed.value_or(1);
    for (int i = 0; i < cfg.corpus; ++i) {
      const auto& prof = kProfiles[i % (sizeof(kProfiles) / sizeof(kProfiles[0]))];
      const int t = 1 + i % 3;
      std::mt19937_64 gen(base_seed * 1000003ULL + static_cast<std::uint64_t>(i));
      std::vector<double> angles(static_cast<std::size_t>(t));
      for (double& theta : angles)
        theta = 0.12 + (static_cast<double>(gen() >> 11) * 0x1.0p-53) * 1.33;
      pairs.push_back(subspace::synthesize_pair(angles, prof[0], prof[1], prof[2],
                                                prof[3],
                                                base_seed * 1000003ULL + i));
      labels.push_back("corpus pair " + std::to_string(i));
    }
  }

  int failures = 0;
  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    const auto results =
        verify_pair(pairs[idx].first, pairs[idx].second, cfg.tol, cfg.samples);
    for (const auto& res : results) {
      if (!res.pass) ++failures;
      if (!res.pass || pairs.size() == 1)
        os.get() << (res.pass ? "PASS " : "FAIL ") << res.name << " ("
                 << labels[idx] << "): " << fmt12(res.value) << '\n';
    }
  }
  os.get() << (failures == 0 ? "verify: all checks passed over "
                             : "verify: FAILURES over ")
           << pairs.size() << " pair(s)"
           << (failures ? " (" + std::to_string(failures) + " failed)" : "")
           << '\n';
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run(const RunConfig& config) {
  auto require_inputs = [&config](std::size_t count) {
    if (config.inputs.size() != count)
      throw std::invalid_argument("expected " + std::to_string(count) +
                                  " file path(s), got " +
                                  std::to_string(config.inputs.size()));
  };
  switch (config.command) {
    case Command::Angles: require_inputs(2); return cmd_angles(config);
    case Command::Decompose: require_inputs(2); return cmd_decompose(config);
    case Command::Frames: require_inputs(2); return cmd_frames(config);
    case Command::Equiv: require_inputs(4); return cmd_equiv(config);
    case Command::SwapUnitary: require_inputs(2); return cmd_swap_unitary(config);
    case Command::Spectrum: require_inputs(2); return cmd_spectrum(config);
    case Command::NumrangeSum: require_inputs(2); return cmd_numrange_sum(config);
    case Command::NumrangeProduct:
      require_inputs(2);
      return cmd_numrange_product(config);
    case Command::Verify:
      if (config.inputs.size() != 2 && config.corpus <= 0)
        throw std::invalid_argument(
            "verify needs two file paths or --corpus COUNT");
      return cmd_verify(config);
    case Command::RandomPair: require_inputs(2); return cmd_random_pair(config);
  }
  throw std::logic_error("unreachable command");
}

int run(int argc, const char* const* argv) {
  RunConfig cfg;
  if (const char* env = std::getenv("JORDANLENS_TOL")) {
    try {
      cfg.tol = std::stod(env);
    } catch (const std::exception&) {
      std::cerr << "error: JORDANLENS_TOL is not a number: " << env << '\n';
      return 2;
    }
  }

  CLI::App app{"Principal-angle geometry and numerical ranges of two projections"};
  app.require_subcommand(1);

  const std::map<std::string, Format> format_names{{"text", Format::Text},
                                                   {"csv", Format::Csv},
                                                   {"svg", Format::Svg},
                                                   {"json", Format::Json}};
  std::string output;
  std::uint64_t seed = 0;
  bool seed_given = false;

  auto add_common = [&](CLI::App* sub, std::size_t n_inputs, const char* input_desc) {
    if (n_inputs > 0)
      sub->add_option("inputs", cfg.inputs, input_desc)
          ->expected(static_cast<int>(n_inputs));
    sub->add_option("--tol", cfg.tol,
                    "classification tolerance (default 1e-8, or JORDANLENS_TOL)");
    sub->add_option("-o,--output", output, "write output to this file");
    sub->add_option("--format", cfg.format, "output format")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
    return sub;
  };

  auto* angles_cmd = add_common(
      app.add_subcommand("angles", "principal angles between two subspaces"), 2,
      "M.mat N.mat");
  angles_cmd->add_flag("--degrees", cfg.degrees, "print angles in degrees");
  auto* decompose_cmd = add_common(
      app.add_subcommand("decompose", "five-part dimension ledger"), 2,
      "M.mat N.mat");
  (void)decompose_cmd;
  auto* frames_cmd = add_common(
      app.add_subcommand("frames", "Jordan plane frames u, v, s, t"), 2,
      "M.mat N.mat");
  frames_cmd->add_flag("--degrees", cfg.degrees, "print angles in degrees");
  add_common(app.add_subcommand("equiv", "decide unitary equivalence of two pairs"),
             4, "M1.mat N1.mat M2.mat N2.mat");
  add_common(app.add_subcommand("swap-unitary",
                                "swap unitary U with UM = M-perp, UN = N-perp"),
             2, "M.mat N.mat");
  auto* spectrum_cmd = add_common(
      app.add_subcommand("spectrum", "analytic eigenpairs of a projection word"), 2,
      "M.mat N.mat");
  spectrum_cmd->add_option("--kind", cfg.kind,
                           "operator: SUM, DIFF, PQ, QP, ANTICOMM, COMM");
  add_common(app.add_subcommand("numrange-sum", "numerical range of P+Q"), 2,
             "M.mat N.mat");
  auto* product_cmd = add_common(
      app.add_subcommand("numrange-product", "numerical range of PQ"), 2,
      "M.mat N.mat");
  product_cmd->add_option("--samples", cfg.samples, "boundary samples per ellipse");
  auto* verify_cmd =
      app.add_subcommand("verify", "run the full invariant suite on a pair");
  verify_cmd->add_option("inputs", cfg.inputs, "M.mat N.mat")->expected(0, 2);
  verify_cmd->add_option("--tol", cfg.tol, "classification tolerance");
  verify_cmd->add_option("-o,--output", output, "write report to this file");
  verify_cmd->add_option("--samples", cfg.samples, "oracle resolution");
  verify_cmd->add_option("--corpus", cfg.corpus,
                         "verify this many synthesized pairs instead of files");
  verify_cmd->add_option("--seed", seed, "corpus seed")->each([&](const std::string&) {
    seed_given = true;
  });
  auto* random_cmd = app.add_subcommand(
      "random-pair", "synthesize a pair with prescribed geometry");
  random_cmd->add_option("outputs", cfg.inputs, "M_out.mat N_out.mat")->expected(2);
  random_cmd->add_option("--angles", cfg.angles, "interior angles, comma separated")
      ->delimiter(',');
  random_cmd->add_option("--a", cfg.a, "dim(M cap N)");
  random_cmd->add_option("--b", cfg.b, "dim(M-perp cap N-perp)");
  random_cmd->add_option("--c", cfg.c, "dim(M cap N-perp)");
  random_cmd->add_option("--d", cfg.d, "dim(M-perp cap N)");
  random_cmd->add_option("--seed", seed, "conjugating-unitary seed")
      ->each([&](const std::string&) { seed_given = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  if (seed_given) cfg.seed = seed;
  if (!output.empty()) cfg.output = output;

  static const std::map<std::string, Command> command_names{
      {"angles", Command::Angles},
      {"decompose", Command::Decompose},
      {"frames", Command::Frames},
      {"equiv", Command::Equiv},
      {"swap-unitary", Command::SwapUnitary},
      {"spectrum", Command::Spectrum},
      {"numrange-sum", Command::NumrangeSum},
      {"numrange-product", Command::NumrangeProduct},
      {"verify", Command::Verify},
      {"random-pair", Command::RandomPair}};
  cfg.command = command_names.at(app.get_subcommands().front()->get_name());

  try {
    return run(cfg);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  }
}

}  // namespace jordanlens::cli
