#pragma once

#include <span>
#include <vector>

#include "bipartgeo/matrix.hpp"
#include "bipartgeo/tree.hpp"

namespace bpg {

using RealMatrix = std::vector<std::vector<double>>;

// Traversal direction for block-intensity second differences.  ColumnWise
// walks across each block-row (differencing along j); RowWise walks down each
// block-column (differencing along i).
enum class Orientation { ColumnWise, RowWise };

// Absolute tolerance under which a second difference counts as zero; block
// intensities live in [0,1], so this only absorbs float noise.
inline constexpr double kSignZeroTol = 1e-9;

// ColumnWise: entry (i, j-1) = lambda[i][j+1] - 2*lambda[i][j] + lambda[i][j-1]
// over interior columns, shape I x (J-2).  RowWise analogously, (I-2) x J.
// Traversed dimension < 3 yields an empty matrix.
RealMatrix second_differences(const RealMatrix& lambda, Orientation orientation);

struct SignMatrix {
  std::vector<std::vector<int>> values;  // entries in {-1, 0, +1}
  Orientation orientation = Orientation::ColumnWise;

  bool operator==(const SignMatrix&) const = default;
};

SignMatrix signs_of(const RealMatrix& diffs, Orientation orientation,
                    double zero_tol = kSignZeroTol);

// Nearest sign pattern with at most one -to-+ change per traversal sequence
// (rows of a ColumnWise matrix, columns of a RowWise one): minimum number of
// sign flips, ties broken toward the later change point.  Zeros are
// compatible with any change point and are never flipped.  Idempotent.
SignMatrix repair_signs(const SignMatrix& raw);

// The functional trace of the least nestedness-bearing structure containing
// the block intensities: repaired sign patterns of both second-difference
// orientations.
struct NestedReference {
  SignMatrix col_signs;  // I x (J-2)
  SignMatrix row_signs;  // (I-2) x J
};

NestedReference least_nested_reference(const RealMatrix& lambda);

struct NcgOptions {
  // The fourth term's weight as printed is (I-h+1)*j; the mirrored variant
  // uses (I-h+1)*(J-j+1).
  bool mirrored_t4_weight = false;
  double sign_zero_tol = kSignZeroTol;
};

// Block-based nestedness index: linear-ordering costs along both axes plus
// curvature-coherence terms against the reference signs.  Larger values mean
// farther from nestedness.  Anchored to the block grid; deliberately not
// permutation-invariant.
double ncg_index(const RealMatrix& lambda_sample, const NestedReference& reference,
                 std::span<const double> row_weights, std::span<const double> col_weights,
                 const NcgOptions& options = {});

// Default ncg weights: group sizes as fractions of the axis length.
std::vector<double> cluster_weights(const std::vector<Cluster>& groups, std::size_t axis_size);

// Unexpected absences: for each row, absences at columns strictly richer than
// the poorest column the row occupies (equal richness does not count).
long long n_plus_index(const BinaryMatrix& m);

// Matrix temperature in [0, 100]: packs by descending sums, fits the fill
// isocline, and scores squared normalized diagonal distances of unexpected
// presences/absences.  Undefined (std::domain_error) for all-ones/all-zeros.
double temperature_index(const BinaryMatrix& m);

// Standard NODF in [0, 100]: mean percentage overlap over ordered row and
// column pairs with strictly decreasing sums.
double nodf_index(const BinaryMatrix& m);

}  // namespace bpg
