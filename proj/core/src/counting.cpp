#include "bipartgeo/counting.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <stdexcept>

#include "bipartgeo/errors.hpp"

namespace bpg {

namespace {

// Enumerates per-residual-class pick counts (k_v for v = hi..1) with
// sum(k_v) = quota and k_v <= comp[v], invoking fn(picks, ways) for each
// combination; `ways` is the product of binomial factors C(comp[v], k_v).
template <typename Fn>
void for_each_placement(const std::vector<std::uint32_t>& comp,
                        const std::vector<std::vector<BigInt>>& binom, int quota,
                        const Fn& fn) {
  const int vmax = static_cast<int>(comp.size()) - 1;
  std::vector<std::uint32_t> picks(comp.size(), 0);

  // avail_below[v] = total columns in classes 1..v-1 (class 0 cannot take ones).
  std::vector<long long> avail_below(comp.size() + 1, 0);
  for (int v = 1; v <= vmax; ++v) {
    avail_below[v + 1] = avail_below[v] + comp[v];
  }

  auto dfs = [&](auto&& self, int v, int remaining, const BigInt& ways) -> void {
    if (remaining == 0) {
      for (int w = v; w >= 1; --w) picks[w] = 0;
      fn(picks, ways);
      return;
    }
    if (v < 1 || avail_below[v + 1] < remaining) return;
    const int cap = std::min<long long>(comp[v], remaining);
    const int lo = std::max<long long>(0, remaining - avail_below[v]);
    for (int k = lo; k <= cap; ++k) {
      picks[v] = static_cast<std::uint32_t>(k);
      self(self, v - 1, remaining - k, ways * binom[comp[v]][k]);
    }
    picks[v] = 0;
  };
  dfs(dfs, vmax, quota, BigInt(1));
}

std::vector<std::uint32_t> apply_picks(const std::vector<std::uint32_t>& comp,
                                       const std::vector<std::uint32_t>& picks) {
  std::vector<std::uint32_t> child(comp);
  for (std::size_t v = 1; v < picks.size(); ++v) {
    if (picks[v] == 0) continue;
    child[v] -= picks[v];
    child[v - 1] += picks[v];
  }
  while (child.size() > 1 && child.back() == 0) child.pop_back();
  return child;
}

}  // namespace

MarginCounter::MarginCounter(MarginPair margins, std::size_t state_budget)
    : margins_(std::move(margins)), budget_(state_budget) {
  if (margins_.row_sums.empty() || margins_.col_sums.empty()) {
    throw std::invalid_argument("margins must have at least one row and one column");
  }
  const std::size_t n = margins_.col_sums.size();
  binom_.assign(n + 1, {});
  for (std::size_t i = 0; i <= n; ++i) {
    binom_[i].assign(i + 1, 1);
    for (std::size_t k = 1; k < i; ++k) {
      binom_[i][k] = binom_[i - 1][k - 1] + binom_[i - 1][k];
    }
  }
}

std::string MarginCounter::encode_key(std::size_t row_idx, const Composition& comp) {
  std::string key;
  key.resize(sizeof(std::uint32_t) * (comp.size() + 1));
  std::uint32_t idx = static_cast<std::uint32_t>(row_idx);
  std::memcpy(key.data(), &idx, sizeof(idx));
  std::memcpy(key.data() + sizeof(idx), comp.data(), sizeof(std::uint32_t) * comp.size());
  return key;
}

const BigInt& MarginCounter::count_from(std::size_t row_idx, const Composition& comp) {
  static const BigInt kZero = 0;
  const std::size_t m = margins_.row_sums.size();
  const std::size_t rows_left = m - row_idx;

  // A column still needing more ones than there are rows left is a dead end.
  if (comp.size() > rows_left + 1) return kZero;
  if (row_idx == m) {
    // Residual total is zero by construction once the grand totals matched,
    // so the only composition reaching here is the all-zero one.
    static const BigInt kOne = 1;
    return kOne;
  }

  const std::string key = encode_key(row_idx, comp);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  if (memo_.size() >= budget_) throw BudgetExceededError(budget_);

  BigInt total = 0;
  const int quota = margins_.row_sums[row_idx];
  if (quota == 0) {
    total = count_from(row_idx + 1, comp);
  } else {
    for_each_placement(comp, binom_, quota,
                       [&](const std::vector<std::uint32_t>& picks, const BigInt& ways) {
                         const Composition child = apply_picks(comp, picks);
                         total += ways * count_from(row_idx + 1, child);
                       });
  }
  return memo_.emplace(std::move(key), std::move(total)).first->second;
}

const BigInt& MarginCounter::count() {
  if (counted_) return total_;
  counted_ = true;
  total_ = 0;

  long long sum_r = 0, sum_c = 0;
  bool negative = false;
  int max_c = 0;
  for (int v : margins_.row_sums) {
    sum_r += v;
    negative |= v < 0;
  }
  for (int v : margins_.col_sums) {
    sum_c += v;
    negative |= v < 0;
    max_c = std::max(max_c, v);
  }
  const int n = static_cast<int>(margins_.col_sums.size());
  const int m = static_cast<int>(margins_.row_sums.size());
  const bool row_overflow =
      std::any_of(margins_.row_sums.begin(), margins_.row_sums.end(),
                  [n](int v) { return v > n; });
  if (negative || sum_r != sum_c || row_overflow || max_c > m) {
    return total_;  // infeasible -> 0
  }

  Composition comp(static_cast<std::size_t>(max_c) + 1, 0);
  for (int v : margins_.col_sums) ++comp[v];
  while (comp.size() > 1 && comp.back() == 0) comp.pop_back();
  total_ = count_from(0, comp);
  return total_;
}

BigInt uniform_bigint_below(Rng& rng, const BigInt& upper) {
  if (upper <= 0) throw std::invalid_argument("upper bound must be positive");
  if (upper == 1) return 0;
  const std::size_t bits = boost::multiprecision::msb(upper) + 1;
  const std::size_t words = (bits + 63) / 64;
  while (true) {
    BigInt draw = 0;
    for (std::size_t w = 0; w < words; ++w) {
      draw <<= 64;
      draw |= BigInt(rng());
    }
    draw >>= words * 64 - bits;
    if (draw < upper) return draw;
  }
}

BinaryMatrix MarginCounter::sample(Rng& rng) {
  const BigInt& total = count();
  if (total == 0) throw std::domain_error("margins are infeasible; nothing to sample");

  const std::size_t m = margins_.row_sums.size();
  const std::size_t n = margins_.col_sums.size();
  BinaryMatrix out(m, n);

  std::vector<int> residual(margins_.col_sums.begin(), margins_.col_sums.end());
  Composition comp(*std::max_element(residual.begin(), residual.end()) + 1, 0);
  for (int v : residual) ++comp[v];
  while (comp.size() > 1 && comp.back() == 0) comp.pop_back();

  std::vector<std::size_t> class_columns;
  for (std::size_t i = 0; i < m; ++i) {
    const int quota = margins_.row_sums[i];
    if (quota == 0) continue;

    const BigInt& state_total = count_from(i, comp);
    BigInt ticket = uniform_bigint_below(rng, state_total);

    std::vector<std::uint32_t> chosen;
    Composition child_chosen;
    bool found = false;
    for_each_placement(comp, binom_, quota,
                       [&](const std::vector<std::uint32_t>& picks, const BigInt& ways) {
                         if (found) return;
                         Composition child = apply_picks(comp, picks);
                         const BigInt weight = ways * count_from(i + 1, child);
                         if (ticket < weight) {
                           chosen = picks;
                           child_chosen = std::move(child);
                           found = true;
                         } else {
                           ticket -= weight;
                         }
                       });
    if (!found) throw std::logic_error("sampling ticket exceeded state total");

    // Materialize: within each residual class the columns are exchangeable,
    // so pick the concrete ones uniformly.
    for (std::size_t v = 1; v < chosen.size(); ++v) {
      if (chosen[v] == 0) continue;
      class_columns.clear();
      for (std::size_t j = 0; j < n; ++j) {
        if (residual[j] == static_cast<int>(v)) class_columns.push_back(j);
      }
      for (std::uint32_t need = chosen[v]; need > 0; --need) {
        std::uniform_int_distribution<std::size_t> pick(0, class_columns.size() - 1);
        const std::size_t slot = pick(rng);
        const std::size_t col = class_columns[slot];
        class_columns.erase(class_columns.begin() + static_cast<std::ptrdiff_t>(slot));
        out.set(i, col, 1);
        --residual[col];
      }
    }
    comp = std::move(child_chosen);
  }
  return out;
}

BigInt count_matrices(const MarginPair& margins, std::size_t state_budget) {
  MarginCounter counter(margins, state_budget);
  return counter.count();
}

BinaryMatrix sample_exact(const MarginPair& margins, std::uint64_t seed,
                          std::size_t state_budget) {
  MarginCounter counter(margins, state_budget);
  Rng rng = make_rng(seed);
  return counter.sample(rng);
}

}  // namespace bpg
