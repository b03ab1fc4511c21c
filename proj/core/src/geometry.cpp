#include "bipartgeo/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "bipartgeo/rng.hpp"

namespace bpg {

void GeometryParams::validate() const {
  if (max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
  if (tree_levels < 2) throw std::invalid_argument("tree_levels must be >= 2");
  for (std::size_t i = 1; i < anneal_temperature_schedule.size(); ++i) {
    if (anneal_temperature_schedule[i] > anneal_temperature_schedule[i - 1]) {
      throw std::invalid_argument("anneal temperature schedule must be non-increasing");
    }
  }
  for (double t : anneal_temperature_schedule) {
    if (!(t > 0)) throw std::invalid_argument("anneal temperatures must be positive");
  }
}

DistanceMatrix axis_distance(const BinaryMatrix& m, Axis axis,
                             const UltrametricTree* other_axis_tree) {
  const BinaryMatrix mt = axis == Axis::Rows ? m : transpose(m);
  const std::size_t k = mt.rows();
  const std::size_t len = mt.cols();
  if (other_axis_tree && other_axis_tree->axis_size != len) {
    throw std::invalid_argument("other-axis tree size does not match matrix");
  }

  // Profile per axis element: raw 0/1 vector, or per-cluster means.
  std::vector<std::vector<double>> profiles(k);
  if (!other_axis_tree) {
    for (std::size_t i = 0; i < k; ++i) {
      profiles[i].resize(len);
      for (std::size_t j = 0; j < len; ++j) profiles[i][j] = mt(i, j);
    }
  } else {
    const Partition& clusters = other_axis_tree->core_clusters();
    for (std::size_t i = 0; i < k; ++i) {
      profiles[i].resize(clusters.size());
      for (std::size_t c = 0; c < clusters.size(); ++c) {
        double s = 0;
        for (auto j : clusters[c]) s += mt(i, j);
        profiles[i][c] = s / static_cast<double>(clusters[c].size());
      }
    }
  }

  DistanceMatrix d(k, std::vector<double>(k, 0.0));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      double acc = 0;
      for (std::size_t j = 0; j < profiles[a].size(); ++j) {
        const double diff = profiles[a][j] - profiles[b][j];
        acc += diff * diff;
      }
      // Hamming on raw 0/1 profiles equals the squared Euclidean distance;
      // compressed profiles use the plain Euclidean one.
      d[a][b] = d[b][a] = other_axis_tree ? std::sqrt(acc) : acc;
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// Average-linkage hierarchy
// ---------------------------------------------------------------------------

UltrametricTree build_tree(const DistanceMatrix& dist, std::size_t levels) {
  const std::size_t n = dist.size();
  if (n == 0) throw std::invalid_argument("empty distance matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i].size() != n) throw std::invalid_argument("distance matrix must be square");
  }
  if (levels < 2) throw std::invalid_argument("levels must be >= 2");

  UltrametricTree tree;
  tree.axis_size = n;

  if (n == 1) {
    tree.levels = {{{0}}};
    tree.heights = {0.0};
    return tree;
  }

  // Agglomerate with average linkage; ties break on smallest member indices.
  std::vector<Cluster> active;
  for (std::size_t i = 0; i < n; ++i) active.push_back({i});
  DistanceMatrix link(dist);
  std::vector<Partition> chain;  // chain[t] = partition after t merges
  chain.push_back(active);
  std::vector<double> merge_heights;

  while (active.size() > 1) {
    std::size_t bi = 0, bj = 1;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < active.size(); ++i) {
      for (std::size_t j = i + 1; j < active.size(); ++j) {
        if (link[i][j] < best) {
          best = link[i][j];
          bi = i;
          bj = j;
        }
      }
    }
    merge_heights.push_back(best);

    const double wi = static_cast<double>(active[bi].size());
    const double wj = static_cast<double>(active[bj].size());
    for (std::size_t k = 0; k < active.size(); ++k) {
      if (k == bi || k == bj) continue;
      link[bi][k] = link[k][bi] = (wi * link[bi][k] + wj * link[bj][k]) / (wi + wj);
    }
    active[bi].insert(active[bi].end(), active[bj].begin(), active[bj].end());
    std::sort(active[bi].begin(), active[bi].end());
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(bj));
    link.erase(link.begin() + static_cast<std::ptrdiff_t>(bj));
    for (auto& row : link) row.erase(row.begin() + static_cast<std::ptrdiff_t>(bj));
    chain.push_back(active);
  }

  const std::size_t merges = merge_heights.size();  // == n-1

  // Degenerate cloud: indistinguishable points collapse to one cluster at
  // every level.
  if (merge_heights.back() == 0.0) {
    const std::size_t L = std::min(levels, n);
    for (std::size_t l = 0; l < L; ++l) {
      tree.levels.push_back(chain.back());
      tree.heights.push_back(static_cast<double>(L - 1 - l));
    }
    return tree;
  }

  // Pick the levels-1 cuts with the largest height gaps.  Cut t yields the
  // partition after t merges; gap(t) is the dendrogram height range in which
  // that partition is visible.  Ties prefer smaller t (finer partitions).
  const std::size_t cuts_wanted = std::min(levels, n) - 1;
  std::vector<std::size_t> order(merges);  // candidate cuts t = 0..merges-1
  std::iota(order.begin(), order.end(), 0);
  auto gap = [&](std::size_t t) {
    const double lower = t == 0 ? 0.0 : merge_heights[t - 1];
    return merge_heights[t] - lower;
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double ga = gap(a), gb = gap(b);
    if (ga != gb) return ga > gb;
    return a < b;
  });
  std::vector<std::size_t> cuts(order.begin(),
                                order.begin() + static_cast<std::ptrdiff_t>(cuts_wanted));
  std::sort(cuts.begin(), cuts.end(), std::greater<>());  // coarse -> fine

  tree.levels.push_back(chain.back());  // root
  tree.heights.push_back(merge_heights.back() + 1.0);
  for (auto t : cuts) {
    const double lower = t == 0 ? 0.0 : merge_heights[t - 1];
    double h = (lower + merge_heights[t]) / 2.0;
    if (h >= tree.heights.back()) h = tree.heights.back() - 1e-9;
    tree.levels.push_back(chain[t]);
    tree.heights.push_back(h);
  }
  return tree;
}

std::vector<std::vector<double>> block_intensities(const BinaryMatrix& m,
                                                   const BlockGrid& grid) {
  grid.validate(m.rows(), m.cols());
  std::vector<std::vector<double>> lambda(grid.block_rows(),
                                          std::vector<double>(grid.block_cols(), 0.0));
  for (std::size_t bi = 0; bi < grid.block_rows(); ++bi) {
    for (std::size_t bj = 0; bj < grid.block_cols(); ++bj) {
      long long ones = 0;
      for (auto i : grid.row_groups[bi]) {
        for (auto j : grid.col_groups[bj]) ones += m(i, j);
      }
      const double area = static_cast<double>(grid.row_groups[bi].size()) *
                          static_cast<double>(grid.col_groups[bj].size());
      lambda[bi][bj] = static_cast<double>(ones) / area;
    }
  }
  return lambda;
}

// ---------------------------------------------------------------------------
// Axis-order optimization
// ---------------------------------------------------------------------------

namespace {

// Energy of a row arrangement decomposes into a term that ignores row order
// (within-row horizontal agreements) plus agreements between display-adjacent
// row pairs (vertical and, under N8, both diagonals).  The latter depend only
// on which rows are adjacent, so annealing scores a candidate order with one
// table lookup per adjacency.
struct AdjacencyScores {
  long long fixed = 0;
  std::vector<std::vector<long long>> between;  // symmetric, indexed by original row ids
};

AdjacencyScores make_adjacency_scores(const BinaryMatrix& m,
                                      const std::vector<std::size_t>& col_order,
                                      Neighborhood nbhd) {
  const std::size_t R = m.rows(), C = m.cols();
  AdjacencyScores s;
  for (std::size_t r = 0; r < R; ++r) {
    for (std::size_t j = 0; j + 1 < C; ++j) {
      s.fixed += m(r, col_order[j]) == m(r, col_order[j + 1]);
    }
  }
  s.between.assign(R, std::vector<long long>(R, 0));
  for (std::size_t a = 0; a < R; ++a) {
    for (std::size_t b = a + 1; b < R; ++b) {
      long long agree = 0;
      for (std::size_t j = 0; j < C; ++j) agree += m(a, j) == m(b, j);
      if (nbhd == Neighborhood::N8) {
        for (std::size_t j = 0; j + 1 < C; ++j) {
          agree += m(a, col_order[j]) == m(b, col_order[j + 1]);
          agree += m(a, col_order[j + 1]) == m(b, col_order[j]);
        }
      }
      s.between[a][b] = s.between[b][a] = agree;
    }
  }
  return s;
}

long long order_energy(const AdjacencyScores& s, const std::vector<std::size_t>& order) {
  long long agree = s.fixed;
  for (std::size_t t = 0; t + 1 < order.size(); ++t) {
    agree += s.between[order[t]][order[t + 1]];
  }
  return -agree;
}

// Mutable display order constrained by a tree: core clusters stay contiguous
// and so does every coarser cluster.  Moves are (a) swapping two members
// inside a core cluster and (b) swapping two display-adjacent sibling
// clusters at some level.
struct OrderedState {
  std::vector<std::size_t> core_order;             // display order of core cluster ids
  std::vector<std::vector<std::size_t>> members;   // per core cluster id
  // ancestor[l][core_id] = index of the level-l cluster containing the core cluster
  std::vector<std::vector<std::size_t>> ancestor;

  std::vector<std::size_t> flatten() const {
    std::vector<std::size_t> out;
    for (auto c : core_order) out.insert(out.end(), members[c].begin(), members[c].end());
    return out;
  }
};

OrderedState initial_state(const BinaryMatrix& m, const UltrametricTree& tree) {
  const std::size_t L = tree.level_count();
  const Partition& cores = tree.core_clusters();
  OrderedState st;
  st.members.assign(cores.size(), {});
  for (std::size_t c = 0; c < cores.size(); ++c) st.members[c] = cores[c];

  st.ancestor.assign(L, std::vector<std::size_t>(cores.size(), 0));
  for (std::size_t l = 0; l < L; ++l) {
    std::vector<std::size_t> cluster_of(tree.axis_size, 0);
    for (std::size_t k = 0; k < tree.levels[l].size(); ++k) {
      for (auto idx : tree.levels[l][k]) cluster_of[idx] = k;
    }
    for (std::size_t c = 0; c < cores.size(); ++c) {
      st.ancestor[l][c] = cluster_of[cores[c].front()];
    }
  }

  // Row sums drive the greedy order: dense clusters first, dense members first.
  std::vector<long long> row_sum(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) row_sum[i] += m(i, j);
  }
  for (auto& mem : st.members) {
    std::stable_sort(mem.begin(), mem.end(),
                     [&](std::size_t a, std::size_t b) { return row_sum[a] > row_sum[b]; });
  }
  auto mean_fill = [&](const Cluster& cluster) {
    long long s = 0;
    for (auto i : cluster) s += row_sum[i];
    return static_cast<double>(s) / static_cast<double>(cluster.size());
  };

  // parent_at[l][k] = index of the level-(l-1) cluster containing level-l cluster k.
  std::vector<std::vector<std::size_t>> parent_at(L);
  for (std::size_t l = 1; l < L; ++l) {
    std::vector<std::size_t> cluster_of(tree.axis_size, 0);
    for (std::size_t k = 0; k < tree.levels[l - 1].size(); ++k) {
      for (auto idx : tree.levels[l - 1][k]) cluster_of[idx] = k;
    }
    parent_at[l].resize(tree.levels[l].size());
    for (std::size_t k = 0; k < tree.levels[l].size(); ++k) {
      parent_at[l][k] = cluster_of[tree.levels[l][k].front()];
    }
  }

  // Hierarchical greedy: order children of each parent by descending fill,
  // recursing top-down, so every level stays contiguous in the display order.
  auto order_subtree = [&](auto&& self, std::size_t level, std::size_t cluster_idx,
                           std::vector<std::size_t>& out) -> void {
    if (level + 1 == L) {
      out.push_back(cluster_idx);  // bottom-level index == core cluster id
      return;
    }
    std::vector<std::size_t> children;
    for (std::size_t k = 0; k < tree.levels[level + 1].size(); ++k) {
      if (parent_at[level + 1][k] == cluster_idx) children.push_back(k);
    }
    std::stable_sort(children.begin(), children.end(), [&](std::size_t a, std::size_t b) {
      return mean_fill(tree.levels[level + 1][a]) > mean_fill(tree.levels[level + 1][b]);
    });
    for (auto child : children) self(self, level + 1, child, out);
  };
  st.core_order.clear();
  order_subtree(order_subtree, 0, 0, st.core_order);
  return st;
}

struct SiblingSwap {
  std::size_t seg1_begin, seg1_end, seg2_end;  // [b1,e1) and [e1,e2) in core_order
};

// Display-adjacent cluster runs at `level` sharing a parent at level-1.
std::vector<SiblingSwap> sibling_swaps(const OrderedState& st, std::size_t level) {
  std::vector<SiblingSwap> out;
  const auto& anc = st.ancestor[level];
  const auto& par = st.ancestor[level - 1];
  std::size_t run_begin = 0;
  std::vector<std::pair<std::size_t, std::size_t>> runs;  // [begin,end) in core_order
  for (std::size_t t = 1; t <= st.core_order.size(); ++t) {
    if (t == st.core_order.size() || anc[st.core_order[t]] != anc[st.core_order[run_begin]]) {
      runs.emplace_back(run_begin, t);
      run_begin = t;
    }
  }
  for (std::size_t r = 0; r + 1 < runs.size(); ++r) {
    if (par[st.core_order[runs[r].first]] == par[st.core_order[runs[r + 1].first]]) {
      out.push_back({runs[r].first, runs[r].second, runs[r + 1].second});
    }
  }
  return out;
}

void apply_sibling_swap(std::vector<std::size_t>& core_order, const SiblingSwap& sw) {
  std::rotate(core_order.begin() + static_cast<std::ptrdiff_t>(sw.seg1_begin),
              core_order.begin() + static_cast<std::ptrdiff_t>(sw.seg1_end),
              core_order.begin() + static_cast<std::ptrdiff_t>(sw.seg2_end));
}

struct PhaseResult {
  std::vector<std::size_t> perm;
  long long energy = 0;
};

// Greedy init + simulated annealing over tree-respecting orders; returns the
// best arrangement seen.
PhaseResult optimize_axis_order(const BinaryMatrix& m, const UltrametricTree& tree,
                                const std::vector<std::size_t>& other_order,
                                const GeometryParams& params, Rng& rng) {
  const AdjacencyScores scores = make_adjacency_scores(m, other_order, params.neighborhood);
  OrderedState st = initial_state(m, tree);

  std::vector<std::size_t> best_perm = st.flatten();
  long long best_energy = order_energy(scores, best_perm);

  std::vector<std::size_t> swappable_cores;
  for (std::size_t c = 0; c < st.members.size(); ++c) {
    if (st.members[c].size() >= 2) swappable_cores.push_back(c);
  }
  const std::size_t L = tree.level_count();
  const bool any_sibling = st.core_order.size() >= 2;
  if (swappable_cores.empty() && !any_sibling) {
    return {best_perm, best_energy};
  }

  auto temperature = [&](std::size_t step) {
    const auto& sched = params.anneal_temperature_schedule;
    if (!sched.empty()) {
      const std::size_t idx = step * sched.size() / std::max<std::size_t>(params.anneal_steps, 1);
      return sched[std::min(idx, sched.size() - 1)];
    }
    constexpr double kHot = 2.0, kCold = 0.02;
    if (params.anneal_steps <= 1) return kCold;
    const double f = static_cast<double>(step) / static_cast<double>(params.anneal_steps - 1);
    return kHot * std::pow(kCold / kHot, f);
  };

  std::vector<std::size_t> cur_perm = best_perm;
  long long cur_energy = best_energy;
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  for (std::size_t step = 0; step < params.anneal_steps; ++step) {
    OrderedState cand = st;
    bool moved = false;
    const bool member_move =
        !swappable_cores.empty() && (!any_sibling || (rng() & 1) == 0);
    if (member_move) {
      std::uniform_int_distribution<std::size_t> pick_core(0, swappable_cores.size() - 1);
      auto& mem = cand.members[swappable_cores[pick_core(rng)]];
      std::uniform_int_distribution<std::size_t> pick(0, mem.size() - 1);
      const std::size_t a = pick(rng);
      std::uniform_int_distribution<std::size_t> pick2(0, mem.size() - 2);
      std::size_t b = pick2(rng);
      if (b >= a) ++b;
      std::swap(mem[a], mem[b]);
      moved = true;
    } else if (any_sibling && L >= 2) {
      std::uniform_int_distribution<std::size_t> pick_level(1, L - 1);
      const std::size_t level = pick_level(rng);
      const auto swaps = sibling_swaps(cand, level);
      if (!swaps.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, swaps.size() - 1);
        apply_sibling_swap(cand.core_order, swaps[pick(rng)]);
        moved = true;
      }
    }
    if (!moved) continue;

    const std::vector<std::size_t> cand_perm = cand.flatten();
    const long long cand_energy = order_energy(scores, cand_perm);
    const long long delta = cand_energy - cur_energy;
    if (delta <= 0 || unit(rng) < std::exp(-static_cast<double>(delta) / temperature(step))) {
      st = std::move(cand);
      cur_perm = cand_perm;
      cur_energy = cand_energy;
      if (cur_energy < best_energy) {
        best_energy = cur_energy;
        best_perm = cur_perm;
      }
    }
  }
  return {best_perm, best_energy};
}

// Rewrites cluster and member order to match the display order.
UltrametricTree reorder_tree(const UltrametricTree& tree,
                             const std::vector<std::size_t>& display_order) {
  std::vector<std::size_t> pos(display_order.size());
  for (std::size_t p = 0; p < display_order.size(); ++p) pos[display_order[p]] = p;
  UltrametricTree out(tree);
  for (auto& level : out.levels) {
    for (auto& cluster : level) {
      std::sort(cluster.begin(), cluster.end(),
                [&](std::size_t a, std::size_t b) { return pos[a] < pos[b]; });
    }
    std::sort(level.begin(), level.end(), [&](const Cluster& a, const Cluster& b) {
      return pos[a.front()] < pos[b.front()];
    });
  }
  return out;
}

}  // namespace

CouplingGeometry compute_geometry(const BinaryMatrix& matrix, const GeometryParams& params) {
  params.validate();
  const Neighborhood nbhd = params.neighborhood;
  const BinaryMatrix matrix_t = transpose(matrix);

  CouplingGeometry geom;
  geom.params = params;
  geom.row_perm = identity_permutation(matrix.rows());
  geom.col_perm = identity_permutation(matrix.cols());

  std::optional<UltrametricTree> row_tree, col_tree;
  long long cur_energy = lattice_energy(matrix, nbhd);
  geom.iteration_energies.push_back(cur_energy);

  for (std::size_t iter = 0; iter < params.max_iterations; ++iter) {
    const long long round_start = cur_energy;

    {
      const DistanceMatrix d = axis_distance(matrix, Axis::Rows,
                                             col_tree ? &*col_tree : nullptr);
      const UltrametricTree cand_tree = build_tree(d, params.tree_levels);
      Rng rng = make_rng(derive_seed(params.seed, 2 * iter));
      PhaseResult phase = optimize_axis_order(matrix, cand_tree, geom.col_perm, params, rng);
      if (phase.energy <= cur_energy) {
        geom.row_perm = phase.perm;
        row_tree = reorder_tree(cand_tree, geom.row_perm);
        cur_energy = phase.energy;
      }
    }
    {
      const DistanceMatrix d = axis_distance(matrix, Axis::Cols,
                                             row_tree ? &*row_tree : nullptr);
      const UltrametricTree cand_tree = build_tree(d, params.tree_levels);
      Rng rng = make_rng(derive_seed(params.seed, 2 * iter + 1));
      PhaseResult phase = optimize_axis_order(matrix_t, cand_tree, geom.row_perm, params, rng);
      if (phase.energy <= cur_energy) {
        geom.col_perm = phase.perm;
        col_tree = reorder_tree(cand_tree, geom.col_perm);
        cur_energy = phase.energy;
      }
    }

    geom.iteration_energies.push_back(cur_energy);
    if (round_start - cur_energy < 1) break;
  }

  // Axes that never adopted a tree keep their input order; the singleton tree
  // is consistent with any arrangement.
  geom.row_tree = row_tree ? *row_tree : UltrametricTree::singleton_tree(matrix.rows());
  geom.col_tree = col_tree ? *col_tree : UltrametricTree::singleton_tree(matrix.cols());

  geom.finest_grid = grid_at_level(geom.row_tree, geom.col_tree,
                                   geom.row_tree.level_count() - 1,
                                   geom.col_tree.level_count() - 1);
  geom.lambda = block_intensities(matrix, geom.finest_grid);
  geom.energy = lattice_energy(apply_permutations(matrix, geom.row_perm, geom.col_perm), nbhd);
  return geom;
}

}  // namespace bpg
