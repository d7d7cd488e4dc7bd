#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "ordlines/error.hpp"
#include "ordlines/point_set.hpp"

namespace ordlines {

enum class ParseErrorCode {
  missing_header,
  bad_header,
  unknown_field,
  malformed_rational,
  wrong_coordinate_count,
  zero_projective_point,
  duplicate_point,
  empty_set,
};

std::string_view to_string(ParseErrorCode code);

/// Diagnostic for a point-set file, carrying the 1-based line it refers to.
class ParseError : public Error {
 public:
  ParseError(ParseErrorCode code, std::size_t line, const std::string& detail);

  ParseErrorCode code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorCode code_;
  std::size_t line_;
};

/// Text format:
///
///     # label: two-skew m=3          (optional, sets the label)
///     dim=3 kind=affine field=Q
///     1 0 0
///     0 1/2 3
///
/// Lines starting with '#' are comments. Scalars are "a" or "a/b" (b > 0);
/// over field=Qw also "a+b*w", "a-b*w" or "b*w". Projective points are
/// normalized on read, and duplicates after normalization are rejected.
PointSet parse_pointset(std::string_view text);

/// Inverse of parse_pointset; write(parse(write(s))) is byte-identical to write(s).
std::string write_pointset(const PointSet& set);

PointSet read_pointset_file(const std::filesystem::path& path);
void write_pointset_file(const std::filesystem::path& path, const PointSet& set);

}  // namespace ordlines
