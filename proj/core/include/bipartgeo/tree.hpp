#pragma once

#include <cstddef>
#include <vector>

namespace bpg {

using Cluster = std::vector<std::size_t>;
using Partition = std::vector<Cluster>;

// Nested partition hierarchy over one axis.  Level 0 is the single all-member
// cluster; each level refines the previous one; the bottom level holds the
// core clusters.  Cluster order and member order encode the display order
// used by the owning geometry's permutation.
struct UltrametricTree {
  std::size_t axis_size = 0;
  std::vector<Partition> levels;   // coarsest (1 cluster) -> finest
  std::vector<double> heights;     // strictly decreasing, one per level

  std::size_t level_count() const { return levels.size(); }
  const Partition& core_clusters() const { return levels.back(); }

  // Single root over singletons: the degenerate two-level tree.  Valid for
  // any axis regardless of arrangement.
  static UltrametricTree singleton_tree(std::size_t axis_size);

  // Throws std::invalid_argument on any violated structural invariant.
  void validate() const;
};

// Ordered partition of both axes into blocks.  Groups hold original matrix
// indices; group order follows the owning geometry's permutations, so in the
// permuted arrangement every group is a contiguous interval.
struct BlockGrid {
  std::vector<Cluster> row_groups;
  std::vector<Cluster> col_groups;

  std::size_t block_rows() const { return row_groups.size(); }
  std::size_t block_cols() const { return col_groups.size(); }

  static BlockGrid whole_matrix(std::size_t rows, std::size_t cols);

  // Checks non-empty disjoint groups covering exactly 0..rows-1 / 0..cols-1.
  void validate(std::size_t rows, std::size_t cols) const;
};

// Grid whose row/column groups are the tree clusters at the requested levels.
// (top, top) yields the 1x1 grid; (bottom, bottom) the finest grid.
BlockGrid grid_at_level(const UltrametricTree& row_tree, const UltrametricTree& col_tree,
                        std::size_t row_level, std::size_t col_level);

}  // namespace bpg
