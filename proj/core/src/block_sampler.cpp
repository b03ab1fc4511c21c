#include "bipartgeo/block_sampler.hpp"

namespace bpg {

BlockSampler::BlockSampler(const BinaryMatrix& matrix, BlockGrid grid,
                           std::size_t state_budget)
    : matrix_(matrix), grid_(std::move(grid)) {
  grid_.validate(matrix.rows(), matrix.cols());
  block_counters_.reserve(grid_.block_rows() * grid_.block_cols());
  for (const auto& rows : grid_.row_groups) {
    for (const auto& cols : grid_.col_groups) {
      const BinaryMatrix block = submatrix(matrix_, rows, cols);
      block_counters_.emplace_back(margins_of(block), state_budget);
    }
  }
}

BinaryMatrix BlockSampler::sample(std::uint64_t seed) {
  BinaryMatrix out(matrix_);
  std::size_t block_index = 0;
  for (const auto& rows : grid_.row_groups) {
    for (const auto& cols : grid_.col_groups) {
      Rng rng = make_rng(derive_seed(seed, block_index));
      const BinaryMatrix block = block_counters_[block_index].sample(rng);
      for (std::size_t a = 0; a < rows.size(); ++a) {
        for (std::size_t b = 0; b < cols.size(); ++b) {
          out.set(rows[a], cols[b], block(a, b));
        }
      }
      ++block_index;
    }
  }
  return out;
}

BigInt BlockSampler::ensemble_count() {
  BigInt total = 1;
  for (auto& counter : block_counters_) {
    total *= counter.count();
    if (total == 0) break;
  }
  return total;
}

BinaryMatrix sample_block_exact(const BinaryMatrix& matrix, const BlockGrid& grid,
                                std::uint64_t seed, std::size_t state_budget) {
  BlockSampler sampler(matrix, grid, state_budget);
  return sampler.sample(seed);
}

BigInt count_block_ensemble(const BinaryMatrix& matrix, const BlockGrid& grid,
                            std::size_t state_budget) {
  BlockSampler sampler(matrix, grid, state_budget);
  return sampler.ensemble_count();
}

}  // namespace bpg
