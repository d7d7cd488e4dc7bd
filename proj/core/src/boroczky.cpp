#include "ordlines/boroczky.hpp"

#include <algorithm>
#include <string>

#include "ordlines/error.hpp"

namespace ordlines {

namespace {

void require_model_size(std::size_t m) {
  if (m < 4 || m % 2 != 0) {
    throw UsageError("Boroczky model needs even m >= 4, got " + std::to_string(m));
  }
}

std::size_t chord_point(std::size_t m, std::size_t j, std::size_t k) {
  return line_point(m, (j + k + m / 2) % m);
}

}  // namespace

BoroczkyModel boroczky_lines(std::size_t m) {
  require_model_size(m);
  BoroczkyModel model{m, {}};
  std::vector<std::size_t> infinity;
  for (std::size_t i = 0; i < m; ++i) infinity.push_back(line_point(m, i));
  model.lines.push_back(std::move(infinity));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = j + 1; k < m; ++k) {
      model.lines.push_back({conic_point(j), conic_point(k), chord_point(m, j, k)});
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    model.lines.push_back({conic_point(j), chord_point(m, j, j)});
  }
  return model;
}

std::vector<std::size_t> boroczky_line_through(std::size_t m, std::size_t a, std::size_t b) {
  require_model_size(m);
  if (a == b || a >= 2 * m || b >= 2 * m) throw UsageError("need two distinct model points");
  if (a > b) std::swap(a, b);
  if (a >= m) {
    std::vector<std::size_t> infinity;
    for (std::size_t i = 0; i < m; ++i) infinity.push_back(line_point(m, i));
    return infinity;
  }
  if (b < m) return {a, b, chord_point(m, a, b)};
  // C_a with D_i: the chord to C_k with a + k + m/2 = i (mod m), or the tangent when k = a.
  const std::size_t i = b - m;
  const std::size_t k = (i + 2 * m - a - m / 2) % m;
  if (k == a) return {a, b};
  return {std::min(a, k), std::max(a, k), b};
}

BoroczkyModelSummary boroczky_model(std::size_t m) {
  BoroczkyModel model = boroczky_lines(m);
  const std::size_t n = 2 * m;

  std::vector<unsigned> cover(n * n, 0);
  for (const auto& line : model.lines) {
    for (std::size_t x = 0; x < line.size(); ++x) {
      for (std::size_t y = x + 1; y < line.size(); ++y) {
        auto [a, b] = std::minmax(line[x], line[y]);
        ++cover[a * n + b];
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (cover[a * n + b] != 1) {
        throw InvariantViolation("model points " + std::to_string(a) + " and " +
                                 std::to_string(b) + " lie on " +
                                 std::to_string(cover[a * n + b]) + " model lines");
      }
    }
  }

  BoroczkyModelSummary s{m, n, 0, {}};
  for (const auto& line : model.lines) ++s.t[line.size()];
  s.ordinary = s.t.count(2) ? s.t.at(2) : 0;
  return s;
}

}  // namespace ordlines
