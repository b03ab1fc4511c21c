#pragma once

#include <cstdint>
#include <vector>

#include "bipartgeo/energy.hpp"
#include "bipartgeo/matrix.hpp"
#include "bipartgeo/tree.hpp"

namespace bpg {

struct GeometryParams {
  std::size_t max_iterations = 10;
  std::size_t tree_levels = 4;   // counting the root level; capped at the axis size
  std::size_t anneal_steps = 4000;
  // Per-step temperatures; empty means a geometric ramp from 2.0 down to 0.02.
  std::vector<double> anneal_temperature_schedule;
  std::uint64_t seed = 0;
  Neighborhood neighborhood = Neighborhood::N8;

  void validate() const;
};

// The deterministic-plus-stochastic description of a binary bipartite
// network: permutations bringing out the block arrangement, the two axis
// trees framing it, the finest block grid (core clusters of both trees) and
// the block intensity matrix lambda.
struct CouplingGeometry {
  std::vector<std::size_t> row_perm;  // display position -> original row
  std::vector<std::size_t> col_perm;
  UltrametricTree row_tree;           // clusters ordered by display position
  UltrametricTree col_tree;
  BlockGrid finest_grid;
  std::vector<std::vector<double>> lambda;
  long long energy = 0;
  std::vector<long long> iteration_energies;  // initial energy, then one per round
  GeometryParams params;                      // provenance; reruns reproduce the result
};

using DistanceMatrix = std::vector<std::vector<double>>;

enum class Axis { Rows, Cols };

// Pairwise axis distances.  Without a tree for the other axis: Hamming
// distance between the raw 0/1 profiles.  With one: each profile is first
// compressed to its mean within every core cluster of the other axis and the
// compressed profiles are compared in Euclidean distance.
DistanceMatrix axis_distance(const BinaryMatrix& m, Axis axis,
                             const UltrametricTree* other_axis_tree = nullptr);

// Average-linkage hierarchy cut at the `levels`-1 largest merge-distance
// gaps (ties prefer the finer cut, so totally tied inputs bottom out at
// singletons).  An all-zero distance matrix collapses to a single cluster at
// every level.  The level count is capped at the axis size.
UltrametricTree build_tree(const DistanceMatrix& dist, std::size_t levels);

// Alternating optimizer: build a tree on one axis (distances conditioned on
// the other axis's current tree), order its clusters greedily by fill, refine
// the order by simulated annealing over tree-respecting permutations, adopt
// the result when it does not increase the energy, then switch axes.  Stops
// when a full round fails to improve the (integer) energy or after
// max_iterations rounds.  Deterministic given seed and params.
CouplingGeometry compute_geometry(const BinaryMatrix& matrix, const GeometryParams& params);

// Fraction of ones per block; entry (i,j) in [0,1].
std::vector<std::vector<double>> block_intensities(const BinaryMatrix& m, const BlockGrid& grid);

}  // namespace bpg
