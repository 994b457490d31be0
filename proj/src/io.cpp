#include "jordanlens/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace jordanlens::io {

namespace {

double parse_double(std::string_view piece) {
  const std::string_view body =
      piece.size() > 1 && piece.front() == '+' ? piece.substr(1) : piece;
  double value = 0.0;
  const char* first = body.data();
  const char* last = body.data() + body.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw std::invalid_argument("bad numeric literal '" + std::string(piece) + "'");
  return value;
}

// Position of the sign separating real and imaginary parts, or npos.
std::size_t split_position(std::string_view body) {
  for (std::size_t i = body.size(); i-- > 1;) {
    const char ch = body[i];
    if ((ch == '+' || ch == '-') && body[i - 1] != 'e' && body[i - 1] != 'E')
      return i;
  }
  return std::string_view::npos;
}

double parse_imag_coefficient(std::string_view piece) {
  if (piece.empty() || piece == "+") return 1.0;
  if (piece == "-") return -1.0;
  return parse_double(piece);
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

Complex parse_complex(std::string_view token) {
  if (token.empty()) throw std::invalid_argument("empty complex literal");
  if (token.back() != 'i') return Complex(parse_double(token), 0.0);

  const std::string_view body = token.substr(0, token.size() - 1);
  const std::size_t pos = split_position(body);
  if (pos == std::string_view::npos)
    return Complex(0.0, parse_imag_coefficient(body));
  return Complex(parse_double(body.substr(0, pos)),
                 parse_imag_coefficient(body.substr(pos)));
}

std::string format_complex(const Complex& z) {
  const double re = z.real();
  const double im = z.imag();
  if (im == 0.0 && !std::signbit(im)) return format_double(re);
  std::string out = format_double(re);
  if (!(im < 0.0) && !std::signbit(im)) out += '+';
  out += format_double(im);
  out += 'i';
  return out;
}

Matrix parse_matrix(std::istream& in, const std::string& source_name) {
  auto fail = [&source_name](int line, const std::string& what) -> void {
    throw ParseError(source_name + ":" + std::to_string(line) + ": " + what);
  };

  std::string line;
  if (!std::getline(in, line)) fail(1, "missing header line");
  long rows = -1, cols = -1;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> rows >> cols) || (header >> extra))
      fail(1, "malformed header, expected 'n k'");
    if (rows < 1 || cols < 0) fail(1, "invalid dimensions in header");
  }

  Matrix m(rows, cols);
  for (long i = 0; i < rows && cols > 0; ++i) {
    const int line_no = static_cast<int>(i) + 2;
    if (!std::getline(in, line)) fail(line_no, "unexpected end of file");
    std::istringstream row(line);
    std::string token;
    for (long j = 0; j < cols; ++j) {
      if (!(row >> token))
        fail(line_no, "expected " + std::to_string(cols) + " entries, found " +
                          std::to_string(j));
      try {
        m(i, j) = parse_complex(token);
      } catch (const std::invalid_argument& err) {
        fail(line_no, err.what());
      }
    }
    std::string extra;
    if (row >> extra)
      fail(line_no, "expected " + std::to_string(cols) + " entries, found more");
  }
  return m;
}

Matrix parse_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  return parse_matrix(in, path);
}

void write_matrix(std::ostream& out, const Matrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (Index i = 0; i < m.rows() && m.cols() > 0; ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ' ';
      out << format_complex(m(i, j));
    }
    out << '\n';
  }
}

void write_matrix_file(const std::string& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_matrix(out, m);
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_region_csv(std::ostream& out, const numrange::ConvexRegion& region) {
  out << "re,im\n";
  for (const auto& v : region.vertices)
    out << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
}

namespace {

struct Box {
  double xmin, xmax, ymin, ymax;
  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
};

Box padded_bbox(const numrange::ConvexRegion& region) {
  Box box{region.vertices.front().real(), region.vertices.front().real(),
          region.vertices.front().imag(), region.vertices.front().imag()};
  for (const auto& v : region.vertices) {
    box.xmin = std::min(box.xmin, v.real());
    box.xmax = std::max(box.xmax, v.real());
    box.ymin = std::min(box.ymin, v.imag());
    box.ymax = std::max(box.ymax, v.imag());
  }
  double span = std::max(box.width(), box.height());
  if (span == 0.0) span = 1.0;
  const double pad_x = std::max(box.width(), 0.2 * span) * 0.1;
  const double pad_y = std::max(box.height(), 0.2 * span) * 0.1;
  box.xmin -= pad_x + 0.1 * std::max(0.0, span - box.width());
  box.xmax += pad_x + 0.1 * std::max(0.0, span - box.width());
  box.ymin -= pad_y + 0.1 * std::max(0.0, span - box.height());
  box.ymax += pad_y + 0.1 * std::max(0.0, span - box.height());
  return box;
}

std::string num(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.8g", x);
  return buf;
}

}  // namespace

void emit_svg(std::ostream& out, const numrange::ConvexRegion& region,
              const std::vector<numrange::EllipticDisk>& disks) {
  if (region.vertices.empty())
    throw std::invalid_argument("cannot render an empty region");

  const Box box = padded_bbox(region);
  const double stroke = 0.005 * std::max(box.width(), box.height());
  const double tick = 3.0 * stroke;

  // SVG y grows downward; world points (x, y) are emitted as (x, -y).
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(box.xmin)
      << ' ' << num(-box.ymax) << ' ' << num(box.width()) << ' '
      << num(box.height()) << "\">\n";

  out << "  <g stroke=\"#888\" stroke-width=\"" << num(stroke * 0.6)
      << "\" fill=\"none\">\n";
  if (box.ymin <= 0.0 && box.ymax >= 0.0)
    out << "    <line x1=\"" << num(box.xmin) << "\" y1=\"0\" x2=\""
        << num(box.xmax) << "\" y2=\"0\"/>\n";
  if (box.xmin <= 0.0 && box.xmax >= 0.0)
    out << "    <line x1=\"0\" y1=\"" << num(-box.ymax) << "\" x2=\"0\" y2=\""
        << num(-box.ymin) << "\"/>\n";
  for (double x = std::ceil(box.xmin); x <= box.xmax; x += 1.0)
    out << "    <line x1=\"" << num(x) << "\" y1=\"" << num(-tick) << "\" x2=\""
        << num(x) << "\" y2=\"" << num(tick) << "\"/>\n";
  for (double y = std::ceil(box.ymin); y <= box.ymax; y += 1.0)
    out << "    <line x1=\"" << num(-tick) << "\" y1=\"" << num(-y) << "\" x2=\""
        << num(tick) << "\" y2=\"" << num(-y) << "\"/>\n";
  out << "  </g>\n";

  out << "  <polygon fill=\"#4682b4\" fill-opacity=\"0.15\" stroke=\"#4682b4\""
      << " stroke-width=\"" << num(stroke) << "\" points=\"";
  for (std::size_t i = 0; i < region.vertices.size(); ++i) {
    if (i > 0) out << ' ';
    out << num(region.vertices[i].real()) << ',' << num(-region.vertices[i].imag());
  }
  out << "\"/>\n";

  for (const auto& disk : disks) {
    out << "  <ellipse cx=\"" << num(disk.center.real()) << "\" cy=\""
        << num(-disk.center.imag()) << "\" rx=\""
        << num(std::max(disk.semi_major, stroke * 0.25)) << "\" ry=\""
        << num(std::max(disk.semi_minor, stroke * 0.25))
        << "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"" << num(stroke)
        << "\"/>\n";
    for (const auto& focus : disk.foci())
      out << "  <circle cx=\"" << num(focus.real()) << "\" cy=\""
          << num(-focus.imag()) << "\" r=\"" << num(1.6 * stroke)
          << "\" fill=\"#c0392b\"/>\n";
  }
  out << "</svg>\n";
}

void emit_svg_file(const std::string& path, const numrange::ConvexRegion& region,
                   const std::vector<numrange::EllipticDisk>& disks) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  emit_svg(out, region, disks);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace jordanlens::io
