#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "branchblocks/interlacing.hpp"
#include "branchblocks/tiling.hpp"

namespace branchblocks {

namespace detail {

inline void put_at(std::string& line, std::size_t col, const std::string& text) {
  if (line.size() < col + text.size()) line.resize(col + text.size(), ' ');
  for (std::size_t i = 0; i < text.size(); ++i) line[col + i] = text[i];
}

// Renders the three staggered rows of a triangular layout: row r is offset
// half a column to the right of row r-1. Empty cell strings are skipped.
inline std::string render_staggered(const std::vector<std::string>& top,
                                    const std::vector<std::string>& middle,
                                    const std::vector<std::string>& bottom) {
  std::size_t width = 1;
  for (const auto* row : {&top, &middle, &bottom})
    for (const std::string& cell : *row)
      if (cell.size() > width) width = cell.size();
  const std::size_t half = (width + 3) / 2;  // half a column, >= cell + gap
  std::string line_top, line_mid, line_bot;
  for (std::size_t c = 0; c < top.size(); ++c)
    put_at(line_top, 2 * half * c, top[c]);
  for (std::size_t j = 0; j < middle.size(); ++j)
    put_at(line_mid, 2 * half * j + half, middle[j]);
  for (std::size_t c = 0; c < bottom.size(); ++c)
    put_at(line_bot, 2 * half * (c + 1), bottom[c]);
  std::string out = line_top;
  if (!middle.empty()) out += "\n" + line_mid;
  if (!bottom.empty()) out += "\n" + line_bot;
  return out;
}

inline std::vector<std::string> cell_strings(const std::vector<Int>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const Int& v : values) out.push_back(v.str());
  return out;
}

}  // namespace detail

// Text form of a tiling: the upper row, the middle cells (block values when
// the tiling carries them, placeholders y1, y2, ... otherwise), and the
// lower row, staggered half a column per row.
inline std::string render_tiling(const Tiling& t) {
  std::vector<std::string> middle;
  if (t.middle) {
    middle = detail::cell_strings(*t.middle);
  } else {
    for (std::size_t j = 0; j < t.sigma.size(); ++j)
      middle.push_back("y" + std::to_string(j + 1));
  }
  return detail::render_staggered(detail::cell_strings(t.lambda.entries()),
                                  middle,
                                  detail::cell_strings(t.mu.entries()));
}

// Text form of an interlacing pattern in the same staggered layout.
inline std::string render_pattern(const InterlacingPattern& p) {
  return detail::render_staggered(detail::cell_strings(p.top().entries()),
                                  detail::cell_strings(p.middle()),
                                  detail::cell_strings(p.bottom().entries()));
}

}  // namespace branchblocks
