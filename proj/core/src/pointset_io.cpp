#include "ordlines/pointset_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace ordlines {

std::string_view to_string(ParseErrorCode code) {
  switch (code) {
    case ParseErrorCode::missing_header:
      return "missing-header";
    case ParseErrorCode::bad_header:
      return "bad-header";
    case ParseErrorCode::unknown_field:
      return "unknown-field";
    case ParseErrorCode::malformed_rational:
      return "malformed-rational";
    case ParseErrorCode::wrong_coordinate_count:
      return "wrong-coordinate-count";
    case ParseErrorCode::zero_projective_point:
      return "zero-projective-point";
    case ParseErrorCode::duplicate_point:
      return "duplicate-point";
    case ParseErrorCode::empty_set:
      return "empty-set";
  }
  return "?";
}

ParseError::ParseError(ParseErrorCode code, std::size_t line, const std::string& detail)
    : Error("line " + std::to_string(line) + ": " + std::string(to_string(code)) + ": " + detail),
      code_(code),
      line_(line) {}

namespace {

constexpr std::string_view kLabelPrefix = "# label: ";

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

struct Header {
  PointKind kind;
  Field field;
};

Header parse_header(std::string_view line, std::size_t lineno) {
  std::string_view dim, kind, field;
  for (auto token : split_ws(line)) {
    auto eq = token.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(ParseErrorCode::bad_header, lineno, "expected key=value, got '" + std::string(token) + "'");
    }
    auto key = token.substr(0, eq);
    auto value = token.substr(eq + 1);
    if (key == "dim") {
      dim = value;
    } else if (key == "kind") {
      kind = value;
    } else if (key == "field") {
      field = value;
    } else {
      throw ParseError(ParseErrorCode::bad_header, lineno, "unknown header key '" + std::string(key) + "'");
    }
  }
  if (dim.empty() || kind.empty() || field.empty()) {
    throw ParseError(ParseErrorCode::bad_header, lineno, "header needs dim=, kind= and field=");
  }
  Header h{};
  if (field == "Q") {
    h.field = Field::rational;
  } else if (field == "Qw") {
    h.field = Field::eisenstein;
  } else {
    throw ParseError(ParseErrorCode::unknown_field, lineno, "unknown field tag '" + std::string(field) + "'");
  }
  if (dim == "2" && kind == "affine") {
    h.kind = PointKind::affine2;
  } else if (dim == "3" && kind == "affine") {
    h.kind = PointKind::affine3;
  } else if (dim == "2" && kind == "projective") {
    h.kind = PointKind::projective2;
  } else {
    throw ParseError(ParseErrorCode::bad_header, lineno,
                     "unsupported dim=" + std::string(dim) + " kind=" + std::string(kind));
  }
  if (h.kind == PointKind::affine3 && h.field == Field::eisenstein) {
    throw ParseError(ParseErrorCode::bad_header, lineno, "3D sets must be rational");
  }
  return h;
}

}  // namespace

PointSet parse_pointset(std::string_view text) {
  std::optional<Header> header;
  std::string label;
  std::vector<Point> points;
  std::vector<std::size_t> point_lines;
  std::size_t last_line = 0;

  std::size_t pos = 0;
  for (std::size_t lineno = 1; pos <= text.size(); ++lineno) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    last_line = lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.front().front() == '#') {
      if (line.starts_with(kLabelPrefix)) label = std::string(line.substr(kLabelPrefix.size()));
      continue;
    }
    if (!header) {
      header = parse_header(line, lineno);
      continue;
    }
    const std::size_t want = coordinate_count(header->kind);
    if (tokens.size() != want) {
      throw ParseError(ParseErrorCode::wrong_coordinate_count, lineno,
                       "expected " + std::to_string(want) + " coordinates, got " +
                           std::to_string(tokens.size()));
    }
    std::vector<Scalar> coords(want);
    for (std::size_t c = 0; c < want; ++c) {
      if (!parse_scalar(tokens[c], header->field, coords[c])) {
        throw ParseError(ParseErrorCode::malformed_rational, lineno,
                         "cannot read '" + std::string(tokens[c]) + "'");
      }
    }
    if (header->kind == PointKind::projective2 &&
        std::all_of(coords.begin(), coords.end(), [](const Scalar& s) { return s.is_zero(); })) {
      throw ParseError(ParseErrorCode::zero_projective_point, lineno, "all coordinates are zero");
    }
    points.emplace_back(header->kind, std::move(coords));
    point_lines.push_back(lineno);
  }

  if (!header) throw ParseError(ParseErrorCode::missing_header, last_line, "no header line");
  if (points.empty()) throw ParseError(ParseErrorCode::empty_set, last_line, "no points");
  try {
    return PointSet(std::move(points), std::move(label));
  } catch (const DuplicatePointError& e) {
    throw ParseError(ParseErrorCode::duplicate_point, point_lines[e.second()],
                     "repeats the point on line " + std::to_string(point_lines[e.first()]));
  }
}

std::string write_pointset(const PointSet& set) {
  std::string out;
  if (!set.label().empty()) {
    out += kLabelPrefix;
    out += set.label();
    out += '\n';
  }
  out += "dim=";
  out += set.kind() == PointKind::affine3 ? "3" : "2";
  out += set.kind() == PointKind::projective2 ? " kind=projective" : " kind=affine";
  out += " field=";
  out += to_string(set.field());
  out += '\n';
  for (const auto& p : set) {
    for (std::size_t c = 0; c < p.size(); ++c) {
      if (c) out += ' ';
      out += p[c].to_string();
    }
    out += '\n';
  }
  return out;
}

PointSet read_pointset_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_pointset(buf.str());
}

void write_pointset_file(const std::filesystem::path& path, const PointSet& set) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path.string());
  out << write_pointset(set);
  if (!out) throw UsageError("failed writing " + path.string());
}

}  // namespace ordlines
