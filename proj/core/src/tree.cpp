#include "bipartgeo/tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bpg {

UltrametricTree UltrametricTree::singleton_tree(std::size_t axis_size) {
  UltrametricTree t;
  t.axis_size = axis_size;
  Cluster all(axis_size);
  for (std::size_t i = 0; i < axis_size; ++i) all[i] = i;
  t.levels.push_back({all});
  Partition singletons;
  singletons.reserve(axis_size);
  for (std::size_t i = 0; i < axis_size; ++i) singletons.push_back({i});
  t.levels.push_back(std::move(singletons));
  t.heights = {1.0, 0.0};
  return t;
}

void UltrametricTree::validate() const {
  if (axis_size == 0) throw std::invalid_argument("tree axis_size must be >= 1");
  if (levels.empty()) throw std::invalid_argument("tree must have at least one level");
  if (heights.size() != levels.size()) {
    throw std::invalid_argument("tree needs one height per level");
  }
  for (std::size_t l = 1; l < heights.size(); ++l) {
    if (!(heights[l] < heights[l - 1])) {
      throw std::invalid_argument("tree heights must be strictly decreasing");
    }
  }
  if (levels.front().size() != 1 || levels.front().front().size() != axis_size) {
    throw std::invalid_argument("level 0 must be the single all-member cluster");
  }

  for (std::size_t l = 0; l < levels.size(); ++l) {
    std::vector<bool> seen(axis_size, false);
    std::size_t covered = 0;
    for (const auto& cluster : levels[l]) {
      if (cluster.empty()) throw std::invalid_argument("empty cluster");
      for (auto idx : cluster) {
        if (idx >= axis_size || seen[idx]) {
          throw std::invalid_argument("clusters must disjointly cover the axis");
        }
        seen[idx] = true;
        ++covered;
      }
    }
    if (covered != axis_size) {
      throw std::invalid_argument("clusters must cover the whole axis");
    }
  }

  // Refinement: each cluster at level l sits inside exactly one parent at l-1.
  for (std::size_t l = 1; l < levels.size(); ++l) {
    std::vector<std::size_t> parent_of(axis_size);
    for (std::size_t p = 0; p < levels[l - 1].size(); ++p) {
      for (auto idx : levels[l - 1][p]) parent_of[idx] = p;
    }
    for (const auto& cluster : levels[l]) {
      const std::size_t p = parent_of[cluster.front()];
      for (auto idx : cluster) {
        if (parent_of[idx] != p) {
          throw std::invalid_argument("level " + std::to_string(l) +
                                      " does not refine level " + std::to_string(l - 1));
        }
      }
    }
    if (levels[l].size() < levels[l - 1].size()) {
      throw std::invalid_argument("cluster count must be non-decreasing toward the bottom");
    }
  }
}

BlockGrid BlockGrid::whole_matrix(std::size_t rows, std::size_t cols) {
  BlockGrid g;
  Cluster r(rows), c(cols);
  for (std::size_t i = 0; i < rows; ++i) r[i] = i;
  for (std::size_t j = 0; j < cols; ++j) c[j] = j;
  g.row_groups = {std::move(r)};
  g.col_groups = {std::move(c)};
  return g;
}

namespace {

void validate_axis(const std::vector<Cluster>& groups, std::size_t size, const char* axis) {
  if (groups.empty()) throw std::invalid_argument(std::string(axis) + " groups empty");
  std::vector<bool> seen(size, false);
  std::size_t covered = 0;
  for (const auto& g : groups) {
    if (g.empty()) throw std::invalid_argument(std::string("empty ") + axis + " group");
    for (auto idx : g) {
      if (idx >= size || seen[idx]) {
        throw std::invalid_argument(std::string(axis) + " groups must disjointly cover axis");
      }
      seen[idx] = true;
      ++covered;
    }
  }
  if (covered != size) {
    throw std::invalid_argument(std::string(axis) + " groups must cover the whole axis");
  }
}

}  // namespace

void BlockGrid::validate(std::size_t rows, std::size_t cols) const {
  validate_axis(row_groups, rows, "row");
  validate_axis(col_groups, cols, "column");
}

BlockGrid grid_at_level(const UltrametricTree& row_tree, const UltrametricTree& col_tree,
                        std::size_t row_level, std::size_t col_level) {
  if (row_level >= row_tree.level_count()) {
    throw std::invalid_argument("row level out of range");
  }
  if (col_level >= col_tree.level_count()) {
    throw std::invalid_argument("column level out of range");
  }
  BlockGrid g;
  g.row_groups = row_tree.levels[row_level];
  g.col_groups = col_tree.levels[col_level];
  return g;
}

}  // namespace bpg
