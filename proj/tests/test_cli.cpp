#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "jordanlens/cli.hpp"
#include "jordanlens/io.hpp"
#include "jordanlens/subspace.hpp"

using namespace jordanlens;
namespace fs = std::filesystem;

namespace {
constexpr double kPi = std::numbers::pi;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("jordanlens_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
  static int& counter() {
    static int n = 0;
    return n;
  }
};

int run_argv(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"jordanlens"};
  for (const auto& arg : args) argv.push_back(arg.c_str());
  return cli::run(static_cast<int>(argv.size()), argv.data());
}

void write_line_pair(const TempDir& dir, double theta, std::string& m_path,
                     std::string& n_path) {
  Matrix bm(2, 1), bn(2, 1);
  bm << Complex(1), Complex(0);
  bn << Complex(std::cos(theta)), Complex(std::sin(theta));
  m_path = dir.file("M.mat");
  n_path = dir.file("N.mat");
  io::write_matrix_file(m_path, bm);
  io::write_matrix_file(n_path, bn);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}
}  // namespace

TEST_CASE("angles command prints the known angle and exits 0") {
  TempDir dir;
  std::string m_path, n_path;
  write_line_pair(dir, kPi / 4.0, m_path, n_path);
  const std::string out_path = dir.file("angles.txt");
  CHECK(run_argv({"angles", m_path, n_path, "-o", out_path}) == 0);
  const std::string text = slurp(out_path);
  CHECK(text.find("theta_1 = 0.785398163397") != std::string::npos);
  CHECK(text.find("interior=1") != std::string::npos);
}

TEST_CASE("angles command respects --degrees and --format json") {
  TempDir dir;
  std::string m_path, n_path;
  write_line_pair(dir, kPi / 4.0, m_path, n_path);
  const std::string out_path = dir.file("angles.json");
  CHECK(run_argv({"angles", m_path, n_path, "--degrees", "--format", "json", "-o",
                  out_path}) == 0);
  const auto doc = nlohmann::json::parse(slurp(out_path));
  CHECK(doc.at("schema_version").get<int>() == 1);
  CHECK(doc.at("unit").get<std::string>() == "degrees");
  CHECK(std::abs(doc.at("angles")[0].get<double>() - 45.0) < 1e-9);
}

TEST_CASE("equiv exit codes: 0 for equivalent, 1 otherwise") {
  TempDir dir;
  std::string m_path, n_path;
  write_line_pair(dir, kPi / 4.0, m_path, n_path);
  const std::string report = dir.file("equiv.txt");
  CHECK(run_argv({"equiv", m_path, n_path, m_path, n_path, "-o", report}) == 0);

  std::string m3_path, n3_path;
  TempDir dir2;
  write_line_pair(dir2, kPi / 3.0, m3_path, n3_path);
  CHECK(run_argv({"equiv", m_path, n_path, m3_path, n3_path, "-o", report}) == 1);
  CHECK(slurp(report).find("not equivalent") != std::string::npos);
}

TEST_CASE("numrange-product CSV has the disk's rightmost point") {
  TempDir dir;
  std::string m_path, n_path;
  write_line_pair(dir, kPi / 3.0, m_path, n_path);
  const std::string csv_path = dir.file("region.csv");
  CHECK(run_argv({"numrange-product", m_path, n_path, "--format", "csv", "-o",
                  csv_path}) == 0);

  std::ifstream in(csv_path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "re,im");
  double max_re = -1e300;
  for (std::string line; std::getline(in, line);) {
    const auto comma = line.find(',');
    REQUIRE(comma != std::string::npos);
    max_re = std::max(max_re, std::stod(line.substr(0, comma)));
  }
  // lambda^2/2 + lambda/2 = 0.125 + 0.25 at theta = pi/3.
  CHECK(std::abs(max_re - 0.375) < 1e-9);
}

TEST_CASE("numrange-product SVG is emitted with generators") {
  TempDir dir;
  std::string m_path, n_path;
  write_line_pair(dir, kPi / 3.0, m_path, n_path);
  const std::string svg_path = dir.file("region.svg");
  CHECK(run_argv({"numrange-product", m_path, n_path, "--format", "svg", "-o",
                  svg_path}) == 0);
  const std::string svg = slurp(svg_path);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("<ellipse") != std::string::npos);
  CHECK(svg.find("<polygon") != std::string::npos);
}

TEST_CASE("swap-unitary writes an exchange-format matrix") {
  TempDir dir;
  std::string m_path, n_path;
  write_line_pair(dir, kPi / 3.0, m_path, n_path);
  const std::string u_path = dir.file("U.mat");
  CHECK(run_argv({"swap-unitary", m_path, n_path, "-o", u_path}) == 0);
  const Matrix u = io::parse_matrix_file(u_path);
  REQUIRE(u.rows() == 2);
  REQUIRE(u.cols() == 2);
  CHECK(operator_norm(u.adjoint() * u - Matrix::Identity(2, 2)) < 1e-10);
}

TEST_CASE("random-pair round-trips through the angles command") {
  TempDir dir;
  const std::string m_path = dir.file("M.mat");
  const std::string n_path = dir.file("N.mat");
  CHECK(run_argv({"random-pair", m_path, n_path, "--angles", "0.3,0.7", "--a", "1",
                  "--seed", "11"}) == 0);
  const std::string json_path = dir.file("angles.json");
  CHECK(run_argv({"angles", m_path, n_path, "--format", "json", "-o", json_path}) ==
        0);
  const auto doc = nlohmann::json::parse(slurp(json_path));
  CHECK(doc.at("counts").at("zero").get<int>() == 1);
  const auto angles = doc.at("angles");
  REQUIRE(angles.size() == 3);
  CHECK(angles[0].get<double>() < 1e-6);
  CHECK(std::abs(angles[1].get<double>() - 0.3) < 1e-9);
  CHECK(std::abs(angles[2].get<double>() - 0.7) < 1e-9);
}

TEST_CASE("verify succeeds on a healthy pair and on a corpus") {
  TempDir dir;
  std::string m_path, n_path;
  write_line_pair(dir, kPi / 3.0, m_path, n_path);
  CHECK(run_argv({"verify", m_path, n_path, "-o", dir.file("verify.txt")}) == 0);
  CHECK(run_argv({"verify", "--corpus", "6", "--seed", "5", "-o",
                  dir.file("verify_corpus.txt")}) == 0);
}

TEST_CASE("verify: a seeded 200-pair corpus completes with zero failures") {
  TempDir dir;
  const std::string out = dir.file("corpus200.txt");
  CHECK(run_argv({"verify", "--corpus", "200", "--seed", "1", "-o", out}) == 0);
  CHECK(slurp(out).find("all checks passed over 200 pair(s)") !=
        std::string::npos);
}

TEST_CASE("usage and parse errors exit with 2") {
  TempDir dir;
  CHECK(run_argv({"angles", dir.file("missing.mat"), dir.file("missing2.mat")}) == 2);
  CHECK(run_argv({"angles"}) == 2);            // missing positionals
  CHECK(run_argv({"no-such-command"}) == 2);   // unknown subcommand
  CHECK(run_argv({"verify"}) == 2);            // neither files nor --corpus

  const std::string bad = dir.file("bad.mat");
  std::ofstream(bad) << "1 1\nnot-a-number\n";
  CHECK(run_argv({"angles", bad, bad}) == 2);

  // swap-unitary on a non-generic pair is a precondition error.
  std::string m_path, n_path;
  write_line_pair(dir, kPi / 4.0, m_path, n_path);
  CHECK(run_argv({"swap-unitary", m_path, m_path}) == 2);
}

TEST_CASE("JORDANLENS_TOL environment variable sets the default tolerance") {
  TempDir dir;
  std::string m_path, n_path;
  write_line_pair(dir, kPi / 4.0, m_path, n_path);
  const std::string out_path = dir.file("angles.json");

  ::setenv("JORDANLENS_TOL", "1e-4", 1);
  CHECK(run_argv({"angles", m_path, n_path, "--format", "json", "-o", out_path}) ==
        0);
  CHECK(nlohmann::json::parse(slurp(out_path)).at("tol").get<double>() ==
        doctest::Approx(1e-4));

  // An explicit --tol beats the environment default.
  CHECK(run_argv({"angles", m_path, n_path, "--tol", "1e-6", "--format", "json",
                  "-o", out_path}) == 0);
  CHECK(nlohmann::json::parse(slurp(out_path)).at("tol").get<double>() ==
        doctest::Approx(1e-6));

  ::setenv("JORDANLENS_TOL", "banana", 1);
  CHECK(run_argv({"angles", m_path, n_path}) == 2);
  ::unsetenv("JORDANLENS_TOL");
}

TEST_CASE("commands are deterministic byte-for-byte") {
  TempDir dir;
  const std::string m_path = dir.file("M.mat");
  const std::string n_path = dir.file("N.mat");
  CHECK(run_argv({"random-pair", m_path, n_path, "--angles", "0.5,1.1", "--b", "1",
                  "--seed", "21"}) == 0);
  const std::string first = dir.file("r1.csv");
  const std::string second = dir.file("r2.csv");
  CHECK(run_argv({"numrange-product", m_path, n_path, "--format", "csv", "-o",
                  first}) == 0);
  CHECK(run_argv({"numrange-product", m_path, n_path, "--format", "csv", "-o",
                  second}) == 0);
  CHECK(slurp(first) == slurp(second));
  CHECK(!slurp(first).empty());
}

TEST_CASE("run(RunConfig) enforces command arity up front") {
  cli::RunConfig cfg;
  cfg.command = cli::Command::Equiv;
  cfg.inputs = {"one", "two"};
  CHECK_THROWS_AS(cli::run(cfg), std::invalid_argument);
}
