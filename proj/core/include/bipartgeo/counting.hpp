#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "bipartgeo/matrix.hpp"
#include "bipartgeo/rng.hpp"

namespace bpg {

using BigInt = boost::multiprecision::cpp_int;

struct MarginCount {
  MarginPair margins;
  BigInt count;
};

// Exact counter and exactly-uniform sampler for binary matrices with fixed
// row and column sums.
//
// The count recurses over rows; the state after each row is the multiset of
// residual column sums, represented as counts per residual value.  Column
// order is exchangeable for counting, so this collapses the state space to
// equivalence classes; no matrix is ever enumerated.  Sampling walks the same
// recursion, picking each row's placement with probability
// (ways * completions) / (total completions), which telescopes to the exact
// uniform distribution over all realizations.
//
// The memo table is capped at `state_budget` distinct states; exceeding it
// raises BudgetExceededError instead of consuming unbounded time and memory
// (dense margins defeat the equivalence-class collapse well before 50x50).
class MarginCounter {
 public:
  static constexpr std::size_t kDefaultStateBudget = 4'000'000;

  explicit MarginCounter(MarginPair margins, std::size_t state_budget = kDefaultStateBudget);

  // Exact number of realizations; 0 when the margins are infeasible.
  const BigInt& count();

  // One exactly-uniform draw.  Throws std::domain_error when count() == 0.
  BinaryMatrix sample(Rng& rng);

  std::size_t memo_states() const { return memo_.size(); }
  const MarginPair& margins() const { return margins_; }

 private:
  // counts[v] = number of columns whose residual sum is v; trailing zeros trimmed.
  using Composition = std::vector<std::uint32_t>;

  const BigInt& count_from(std::size_t row_idx, const Composition& comp);
  static std::string encode_key(std::size_t row_idx, const Composition& comp);

  MarginPair margins_;
  std::size_t budget_;
  std::vector<std::vector<BigInt>> binom_;
  std::unordered_map<std::string, BigInt> memo_;
  bool counted_ = false;
  BigInt total_ = 0;
};

// One-shot conveniences over MarginCounter.
BigInt count_matrices(const MarginPair& margins,
                      std::size_t state_budget = MarginCounter::kDefaultStateBudget);
BinaryMatrix sample_exact(const MarginPair& margins, std::uint64_t seed,
                          std::size_t state_budget = MarginCounter::kDefaultStateBudget);

// Uniform BigInt in [0, upper); rejection sampling over fixed-width draws.
BigInt uniform_bigint_below(Rng& rng, const BigInt& upper);

}  // namespace bpg
