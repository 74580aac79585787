#ifndef SLGF_TESTS_TABLE_DATA_HPP
#define SLGF_TESTS_TABLE_DATA_HPP

// Reference Euler characteristic grids for r = 2 with m_1, m_2, d odd.

#include "slgf/exactmath.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace testdata {

/// rows t = 1..23, columns s2 = 0..23
inline std::vector<std::vector<slgf::Integer>> load_grid(int genus) {
  std::string path = std::string(SLGF_TEST_DATA_DIR) + "/euler_r2_odd_g" + std::to_string(genus) + ".txt";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::vector<slgf::Integer>> grid;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    long t;
    row >> t;
    std::vector<slgf::Integer> values;
    std::string v;
    while (row >> v) values.emplace_back(v);
    if (t != static_cast<long>(grid.size()) + 1 || values.size() != 24) {
      throw std::runtime_error("malformed row in " + path);
    }
    grid.push_back(std::move(values));
  }
  if (grid.size() != 23) throw std::runtime_error("expected 23 rows in " + path);
  return grid;
}

/// The printed genus-3 grid has -378 at t=21, s2=3; the row is palindromic and its mirror cell s2=16 is -318.
inline bool is_known_misprint(int genus, int t, int s2) { return genus == 3 && t == 21 && s2 == 3; }

}  // namespace testdata

#endif  // SLGF_TESTS_TABLE_DATA_HPP
