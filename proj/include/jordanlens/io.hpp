#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "jordanlens/linalg.hpp"
#include "jordanlens/numrange.hpp"

namespace jordanlens::io {

/// Thrown for malformed exchange-format input; message carries the source
/// name and 1-based line number.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Complex literal of the exchange format: `1`, `-2i`, `0.5-0.866i`,
/// `1.0+0.0i`, `i`, `-i`, scientific notation allowed in either part.
Complex parse_complex(std::string_view token);

/// 17 significant digits; imaginary part omitted when exactly zero, so the
/// writer round-trips bit-identically through parse_complex.
std::string format_complex(const Complex& z);

/// Exchange format: first line `n k`, then n lines of k whitespace-separated
/// complex entries.
Matrix parse_matrix(std::istream& in, const std::string& source_name);
Matrix parse_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const Matrix& m);
void write_matrix_file(const std::string& path, const Matrix& m);

/// CSV with header `re,im`, one vertex per line, CCW, last vertex not
/// repeated.
void write_region_csv(std::ostream& out, const numrange::ConvexRegion& region);

/// Standalone SVG: axes with unit ticks, generator ellipses outlined, hull
/// filled at low opacity, foci marked; viewBox padded 10% beyond the hull.
void emit_svg(std::ostream& out, const numrange::ConvexRegion& region,
              const std::vector<numrange::EllipticDisk>& disks);
void emit_svg_file(const std::string& path, const numrange::ConvexRegion& region,
                   const std::vector<numrange::EllipticDisk>& disks);

}  // namespace jordanlens::io
