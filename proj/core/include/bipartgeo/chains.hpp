#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "bipartgeo/matrix.hpp"
#include "bipartgeo/rng.hpp"

namespace bpg {

enum class ChainKind { Checkerboard, Curveball };

inline constexpr std::size_t kDefaultBurnIn = 10'000;
inline constexpr std::size_t kDefaultThin = 100;

// Swaps the 2x2 checkerboard at (r1,r2,c1,c2) if one is present; returns
// whether a swap happened.  Margins are preserved either way.
bool try_checkerboard_swap(BinaryMatrix& m, std::size_t r1, std::size_t r2, std::size_t c1,
                           std::size_t c2);

// Redistributes the symmetric difference of two rows' occupied columns
// uniformly at random, keeping each row's count of ones.
void curveball_trade(BinaryMatrix& m, std::size_t r1, std::size_t r2, Rng& rng);

// One chain step on a uniformly random pair of rows (and columns, for the
// checkerboard).  No-ops when the random pick admits no move.
void checkerboard_step_inplace(BinaryMatrix& m, Rng& rng);
void curveball_step_inplace(BinaryMatrix& m, Rng& rng);

// Value-returning conveniences.
BinaryMatrix checkerboard_step(const BinaryMatrix& m, Rng& rng);
BinaryMatrix curveball_step(const BinaryMatrix& m, Rng& rng);

struct ChainResult {
  std::vector<BinaryMatrix> samples;
  // Emitted matrices that exactly duplicate an earlier emitted one; short
  // recurrence cycles show up here.
  std::size_t duplicate_count = 0;
};

// Runs the chain from `start`, discards `burn_in` steps, then emits every
// `thin`-th state until `n` states have been delivered to `emit`.
// Returns the duplicate count among emitted states.
std::size_t run_chain(const BinaryMatrix& start, ChainKind kind, std::size_t burn_in,
                      std::size_t thin, std::size_t n, std::uint64_t seed,
                      const std::function<void(const BinaryMatrix&)>& emit);

ChainResult sample_chain(const BinaryMatrix& start, ChainKind kind, std::size_t burn_in,
                         std::size_t thin, std::size_t n, std::uint64_t seed);

}  // namespace bpg
