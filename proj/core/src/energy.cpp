#include "bipartgeo/energy.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace bpg {

long long neighbor_pair_count(std::size_t rows, std::size_t cols, Neighborhood nbhd) {
  const long long m = static_cast<long long>(rows);
  const long long n = static_cast<long long>(cols);
  long long pairs = m * (n - 1) + n * (m - 1);
  if (nbhd == Neighborhood::N8) pairs += 2 * (m - 1) * (n - 1);
  return pairs;
}

long long lattice_energy(const BinaryMatrix& m, Neighborhood nbhd) {
  const std::size_t R = m.rows(), C = m.cols();
  long long agree = 0;
  for (std::size_t i = 0; i < R; ++i) {
    for (std::size_t j = 0; j + 1 < C; ++j) agree += m(i, j) == m(i, j + 1);
  }
  for (std::size_t i = 0; i + 1 < R; ++i) {
    for (std::size_t j = 0; j < C; ++j) agree += m(i, j) == m(i + 1, j);
  }
  if (nbhd == Neighborhood::N8) {
    for (std::size_t i = 0; i + 1 < R; ++i) {
      for (std::size_t j = 0; j + 1 < C; ++j) {
        agree += m(i, j) == m(i + 1, j + 1);
        agree += m(i, j + 1) == m(i + 1, j);
      }
    }
  }
  return -agree;
}

namespace {

using Cell = std::pair<std::size_t, std::size_t>;

void collect_neighbors(const BinaryMatrix& m, Cell c, Neighborhood nbhd,
                       std::set<std::pair<Cell, Cell>>& pairs) {
  const long long R = static_cast<long long>(m.rows());
  const long long C = static_cast<long long>(m.cols());
  const long long i = static_cast<long long>(c.first);
  const long long j = static_cast<long long>(c.second);
  static constexpr std::array<std::pair<int, int>, 8> kOffsets = {
      {{0, 1}, {0, -1}, {1, 0}, {-1, 0}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
  const std::size_t limit = nbhd == Neighborhood::N8 ? 8 : 4;
  for (std::size_t k = 0; k < limit; ++k) {
    const long long ni = i + kOffsets[k].first;
    const long long nj = j + kOffsets[k].second;
    if (ni < 0 || nj < 0 || ni >= R || nj >= C) continue;
    Cell other{static_cast<std::size_t>(ni), static_cast<std::size_t>(nj)};
    pairs.insert({std::min(c, other), std::max(c, other)});
  }
}

}  // namespace

long long energy_delta_swap(const BinaryMatrix& m, std::size_t r1, std::size_t r2,
                            std::size_t c1, std::size_t c2, Neighborhood nbhd) {
  if (r1 == r2 || c1 == c2 || r1 >= m.rows() || r2 >= m.rows() || c1 >= m.cols() ||
      c2 >= m.cols()) {
    throw std::invalid_argument("invalid checkerboard quadruple");
  }
  const bool pattern_a = m(r1, c1) == 1 && m(r2, c2) == 1 && m(r1, c2) == 0 && m(r2, c1) == 0;
  const bool pattern_b = m(r1, c1) == 0 && m(r2, c2) == 0 && m(r1, c2) == 1 && m(r2, c1) == 1;
  if (!pattern_a && !pattern_b) {
    throw std::invalid_argument("quadruple is not a checkerboard");
  }

  const std::array<Cell, 4> toggled = {
      {{r1, c1}, {r1, c2}, {r2, c1}, {r2, c2}}};
  auto is_toggled = [&](Cell c) {
    return (c.first == r1 || c.first == r2) && (c.second == c1 || c.second == c2);
  };
  auto value_after = [&](Cell c) -> int {
    return is_toggled(c) ? 1 - m(c.first, c.second) : m(c.first, c.second);
  };

  std::set<std::pair<Cell, Cell>> pairs;
  for (auto c : toggled) collect_neighbors(m, c, nbhd, pairs);

  long long delta = 0;
  for (const auto& [a, b] : pairs) {
    if (!is_toggled(a) && !is_toggled(b)) continue;
    const int before = m(a.first, a.second) == m(b.first, b.second);
    const int after = value_after(a) == value_after(b);
    delta -= after - before;  // energy counts agreements negatively
  }
  return delta;
}

}  // namespace bpg
