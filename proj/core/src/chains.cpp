#include "bipartgeo/chains.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>

namespace bpg {

bool try_checkerboard_swap(BinaryMatrix& m, std::size_t r1, std::size_t r2, std::size_t c1,
                           std::size_t c2) {
  if (r1 == r2 || c1 == c2) return false;
  const std::uint8_t a = m(r1, c1), b = m(r1, c2), c = m(r2, c1), d = m(r2, c2);
  if (a == d && b == c && a != b) {
    m.set(r1, c1, b);
    m.set(r1, c2, a);
    m.set(r2, c1, d);
    m.set(r2, c2, c);
    return true;
  }
  return false;
}

void curveball_trade(BinaryMatrix& m, std::size_t r1, std::size_t r2, Rng& rng) {
  if (r1 == r2) return;
  // Columns where exactly one of the two rows is present.
  std::vector<std::size_t> symdiff;
  std::size_t owned_by_r1 = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const std::uint8_t a = m(r1, j), b = m(r2, j);
    if (a != b) {
      symdiff.push_back(j);
      owned_by_r1 += a;
    }
  }
  if (symdiff.size() < 2 || owned_by_r1 == 0 || owned_by_r1 == symdiff.size()) return;

  // Uniform re-assignment: shuffle and give the first `owned_by_r1` to r1.
  for (std::size_t k = symdiff.size() - 1; k > 0; --k) {
    std::uniform_int_distribution<std::size_t> pick(0, k);
    std::swap(symdiff[k], symdiff[pick(rng)]);
  }
  for (std::size_t k = 0; k < symdiff.size(); ++k) {
    const std::uint8_t to_r1 = k < owned_by_r1 ? 1 : 0;
    m.set(r1, symdiff[k], to_r1);
    m.set(r2, symdiff[k], static_cast<std::uint8_t>(1 - to_r1));
  }
}

namespace {

// Uniform unordered pair of distinct indices in [0, n).
std::pair<std::size_t, std::size_t> random_pair(std::size_t n, Rng& rng) {
  std::uniform_int_distribution<std::size_t> d(0, n - 1);
  const std::size_t a = d(rng);
  std::uniform_int_distribution<std::size_t> d2(0, n - 2);
  std::size_t b = d2(rng);
  if (b >= a) ++b;
  return {a, b};
}

}  // namespace

void checkerboard_step_inplace(BinaryMatrix& m, Rng& rng) {
  if (m.rows() < 2 || m.cols() < 2) return;
  const auto [r1, r2] = random_pair(m.rows(), rng);
  const auto [c1, c2] = random_pair(m.cols(), rng);
  try_checkerboard_swap(m, r1, r2, c1, c2);
}

void curveball_step_inplace(BinaryMatrix& m, Rng& rng) {
  if (m.rows() < 2) return;
  const auto [r1, r2] = random_pair(m.rows(), rng);
  curveball_trade(m, r1, r2, rng);
}

BinaryMatrix checkerboard_step(const BinaryMatrix& m, Rng& rng) {
  BinaryMatrix out(m);
  checkerboard_step_inplace(out, rng);
  return out;
}

BinaryMatrix curveball_step(const BinaryMatrix& m, Rng& rng) {
  BinaryMatrix out(m);
  curveball_step_inplace(out, rng);
  return out;
}

std::size_t run_chain(const BinaryMatrix& start, ChainKind kind, std::size_t burn_in,
                      std::size_t thin, std::size_t n, std::uint64_t seed,
                      const std::function<void(const BinaryMatrix&)>& emit) {
  if (n == 0) throw std::invalid_argument("chain must emit at least one state");
  const std::size_t stride = thin == 0 ? 1 : thin;
  BinaryMatrix state(start);
  Rng rng = make_rng(seed);

  auto step = [&]() {
    if (kind == ChainKind::Checkerboard) {
      checkerboard_step_inplace(state, rng);
    } else {
      curveball_step_inplace(state, rng);
    }
  };

  for (std::size_t s = 0; s < burn_in; ++s) step();

  std::unordered_set<std::string> seen;
  std::size_t duplicates = 0;
  for (std::size_t emitted = 0; emitted < n; ++emitted) {
    if (emitted > 0) {
      for (std::size_t s = 0; s < stride; ++s) step();
    }
    std::string bytes(reinterpret_cast<const char*>(state.cells().data()),
                      state.cells().size());
    if (!seen.insert(std::move(bytes)).second) ++duplicates;
    emit(state);
  }
  return duplicates;
}

ChainResult sample_chain(const BinaryMatrix& start, ChainKind kind, std::size_t burn_in,
                         std::size_t thin, std::size_t n, std::uint64_t seed) {
  ChainResult result;
  result.samples.reserve(n);
  result.duplicate_count = run_chain(start, kind, burn_in, thin, n, seed,
                                     [&](const BinaryMatrix& m) { result.samples.push_back(m); });
  return result;
}

}  // namespace bpg
