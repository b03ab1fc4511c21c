#include "bipartgeo/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace bpg {

namespace {

std::vector<std::string> synthetic_labels(char prefix, std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

void check_unique(const std::vector<std::string>& labels, const char* axis) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw std::invalid_argument(std::string("duplicate ") + axis + " label: " + l);
    }
  }
}

}  // namespace

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows),
      cols_(cols),
      row_labels_(synthetic_labels('r', rows)),
      col_labels_(synthetic_labels('c', cols)),
      cells_(rows * cols, 0) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("matrix must be at least 1x1");
}

BinaryMatrix::BinaryMatrix(std::vector<std::string> row_labels,
                           std::vector<std::string> col_labels,
                           std::vector<std::uint8_t> cells)
    : rows_(row_labels.size()),
      cols_(col_labels.size()),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      cells_(std::move(cells)) {
  if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("matrix must be at least 1x1");
  if (cells_.size() != rows_ * cols_) {
    throw std::invalid_argument("cell count does not match label dimensions");
  }
  for (auto v : cells_) {
    if (v != 0 && v != 1) throw std::invalid_argument("cells must be 0 or 1");
  }
  check_unique(row_labels_, "row");
  check_unique(col_labels_, "column");
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw std::invalid_argument("matrix must be at least 1x1");
  }
  const std::size_t n = rows.front().size();
  BinaryMatrix out(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("ragged row in matrix literal");
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j] != 0 && rows[i][j] != 1) {
        throw std::invalid_argument("cells must be 0 or 1");
      }
      out.set(i, j, static_cast<std::uint8_t>(rows[i][j]));
    }
  }
  return out;
}

void BinaryMatrix::set(std::size_t i, std::size_t j, std::uint8_t v) {
  if (v != 0 && v != 1) throw std::invalid_argument("cells must be 0 or 1");
  cells_[i * cols_ + j] = v;
}

std::size_t BinaryMatrix::ones_count() const {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), 1));
}

std::uint64_t BinaryMatrix::content_hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(rows_);
  mix(cols_);
  for (auto c : cells_) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

MarginPair margins_of(const BinaryMatrix& m) {
  MarginPair out;
  out.row_sums.assign(m.rows(), 0);
  out.col_sums.assign(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j)) {
        ++out.row_sums[i];
        ++out.col_sums[j];
      }
    }
  }
  return out;
}

bool margins_feasible(const MarginPair& margins) {
  const auto& r = margins.row_sums;
  const auto& c = margins.col_sums;
  if (r.empty() || c.empty()) return false;
  const int m = static_cast<int>(r.size());
  const int n = static_cast<int>(c.size());
  long long total_r = 0, total_c = 0;
  for (int v : r) {
    if (v < 0 || v > n) return false;
    total_r += v;
  }
  for (int v : c) {
    if (v < 0 || v > m) return false;
    total_c += v;
  }
  if (total_r != total_c) return false;

  // Gale-Ryser on descending row sums against the conjugate of the column sums.
  std::vector<int> rs(r);
  std::sort(rs.begin(), rs.end(), std::greater<>());
  long long lhs = 0;
  for (int k = 1; k <= m; ++k) {
    lhs += rs[k - 1];
    long long rhs = 0;
    for (int v : c) rhs += std::min(v, k);
    if (lhs > rhs) return false;
  }
  return true;
}

bool is_permutation(std::span<const std::size_t> perm) {
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

std::vector<std::size_t> identity_permutation(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::vector<std::size_t> inverse_permutation(std::span<const std::size_t> perm) {
  std::vector<std::size_t> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
  return inv;
}

BinaryMatrix apply_permutations(const BinaryMatrix& m, std::span<const std::size_t> row_perm,
                                std::span<const std::size_t> col_perm) {
  if (row_perm.size() != m.rows() || col_perm.size() != m.cols()) {
    throw std::invalid_argument("permutation size does not match matrix dimensions");
  }
  if (!is_permutation(row_perm) || !is_permutation(col_perm)) {
    throw std::invalid_argument("not a permutation");
  }
  std::vector<std::string> rl(m.rows()), cl(m.cols());
  std::vector<std::uint8_t> cells(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) rl[i] = m.row_labels()[row_perm[i]];
  for (std::size_t j = 0; j < m.cols(); ++j) cl[j] = m.col_labels()[col_perm[j]];
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells[i * m.cols() + j] = m(row_perm[i], col_perm[j]);
    }
  }
  return BinaryMatrix(std::move(rl), std::move(cl), std::move(cells));
}

BinaryMatrix transpose(const BinaryMatrix& m) {
  std::vector<std::uint8_t> cells(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) cells[j * m.rows() + i] = m(i, j);
  }
  return BinaryMatrix(m.col_labels(), m.row_labels(), std::move(cells));
}

BinaryMatrix submatrix(const BinaryMatrix& m, std::span<const std::size_t> row_ids,
                       std::span<const std::size_t> col_ids) {
  std::vector<std::string> rl, cl;
  rl.reserve(row_ids.size());
  cl.reserve(col_ids.size());
  for (auto i : row_ids) {
    if (i >= m.rows()) throw std::invalid_argument("row index out of range");
    rl.push_back(m.row_labels()[i]);
  }
  for (auto j : col_ids) {
    if (j >= m.cols()) throw std::invalid_argument("column index out of range");
    cl.push_back(m.col_labels()[j]);
  }
  std::vector<std::uint8_t> cells(row_ids.size() * col_ids.size());
  for (std::size_t a = 0; a < row_ids.size(); ++a) {
    for (std::size_t b = 0; b < col_ids.size(); ++b) {
      cells[a * col_ids.size() + b] = m(row_ids[a], col_ids[b]);
    }
  }
  return BinaryMatrix(std::move(rl), std::move(cl), std::move(cells));
}

}  // namespace bpg
