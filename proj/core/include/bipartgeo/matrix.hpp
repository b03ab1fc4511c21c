#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bpg {

// Dense 0/1 matrix with unique labels on both axes.  Values are immutable in
// spirit: every transforming operation returns a new matrix; set() exists for
// builders and swap chains working on their own copies.
class BinaryMatrix {
 public:
  // Zero matrix with synthetic labels r1..rm / c1..cn.
  BinaryMatrix(std::size_t rows, std::size_t cols);

  // Validates shape, label uniqueness and that every cell is 0 or 1.
  BinaryMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
               std::vector<std::uint8_t> cells);

  // Convenience builder for literals in tests and docs.
  static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint8_t operator()(std::size_t i, std::size_t j) const {
    return cells_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, std::uint8_t v);

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  const std::vector<std::uint8_t>& cells() const { return cells_; }

  std::size_t ones_count() const;

  // FNV-1a over dimensions and cell bytes; used for duplicate detection.
  std::uint64_t content_hash() const;

  bool same_cells(const BinaryMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && cells_ == other.cells_;
  }
  bool operator==(const BinaryMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  std::vector<std::uint8_t> cells_;
};

// Row-sum and column-sum sequences; the conditioning statistic of every null
// model in this library.
struct MarginPair {
  std::vector<int> row_sums;
  std::vector<int> col_sums;

  bool operator==(const MarginPair&) const = default;
};

MarginPair margins_of(const BinaryMatrix& m);

// Gale-Ryser feasibility: true iff some binary matrix realizes the margins.
bool margins_feasible(const MarginPair& margins);

// cells'[i][j] = cells[row_perm[i]][col_perm[j]], labels permuted in lockstep.
BinaryMatrix apply_permutations(const BinaryMatrix& m, std::span<const std::size_t> row_perm,
                                std::span<const std::size_t> col_perm);

std::vector<std::size_t> identity_permutation(std::size_t n);
std::vector<std::size_t> inverse_permutation(std::span<const std::size_t> perm);
bool is_permutation(std::span<const std::size_t> perm);

BinaryMatrix transpose(const BinaryMatrix& m);

// Submatrix by explicit index lists (order preserved).
BinaryMatrix submatrix(const BinaryMatrix& m, std::span<const std::size_t> row_ids,
                       std::span<const std::size_t> col_ids);

}  // namespace bpg
