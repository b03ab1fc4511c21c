#pragma once

#include <cstdint>
#include <vector>

#include "bipartgeo/counting.hpp"
#include "bipartgeo/matrix.hpp"
#include "bipartgeo/tree.hpp"

namespace bpg {

// Divide-and-conquer exact sampler: every block of the grid is resampled
// uniformly from its own margins and the results are patched together, so
// both the block-level and the global margins are preserved exactly.
// Binding a sampler to (matrix, grid) keeps the per-block count memos warm
// across draws.
class BlockSampler {
 public:
  BlockSampler(const BinaryMatrix& matrix, BlockGrid grid,
               std::size_t state_budget = MarginCounter::kDefaultStateBudget);

  // Seeds are split per block (derive_seed(seed, block_index)), so the result
  // does not depend on block evaluation order.
  BinaryMatrix sample(std::uint64_t seed);

  // Product over blocks of the block-margin counts.
  BigInt ensemble_count();

  const BlockGrid& grid() const { return grid_; }

 private:
  BinaryMatrix matrix_;
  BlockGrid grid_;
  std::vector<MarginCounter> block_counters_;  // row-major over blocks
};

BinaryMatrix sample_block_exact(const BinaryMatrix& matrix, const BlockGrid& grid,
                                std::uint64_t seed,
                                std::size_t state_budget = MarginCounter::kDefaultStateBudget);

BigInt count_block_ensemble(const BinaryMatrix& matrix, const BlockGrid& grid,
                            std::size_t state_budget = MarginCounter::kDefaultStateBudget);

}  // namespace bpg
