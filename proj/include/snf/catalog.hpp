#pragma once

#include <array>
#include <string>
#include <string_view>

#include "snf/rings.hpp"

namespace snf {

inline constexpr std::array<std::string_view, 5> catalog_names = {
    "sierpinski-gasket", "vicsek-cross", "sierpinski-hexagon", "lindstrom-snowflake", "pentagon-ring"};

inline FractalSpec catalog(std::string_view name) {
  auto ring = [](int k, std::int64_t radius) {
    std::vector<CycInt> cells;
    for (int j = 0; j < k; ++j) cells.push_back(CycInt::root(k, j, radius));
    return cells;
  };
  if (name == "sierpinski-gasket") return FractalSpec(3, ring(3, 1));
  if (name == "vicsek-cross") {
    auto cells = ring(4, 2);
    cells.insert(cells.begin(), CycInt(4));
    return FractalSpec(4, cells);
  }
  if (name == "sierpinski-hexagon") return FractalSpec(6, ring(6, 2));
  if (name == "lindstrom-snowflake") {
    auto cells = ring(6, 2);
    cells.push_back(CycInt(6));
    return FractalSpec(6, cells);
  }
  if (name == "pentagon-ring") return *detail::corner_ring(5);
  throw std::invalid_argument("unknown catalog entry '" + std::string(name) + "'");
}

}  // namespace snf
