#pragma once

#include <cstddef>

#include "bipartgeo/matrix.hpp"

namespace bpg {

// Lattice neighborhood over matrix cells.  N4 pairs horizontally and
// vertically adjacent cells; N8 adds both diagonals.  N8 is the library-wide
// default.
enum class Neighborhood { N4, N8 };

// N4: m(n-1) + n(m-1) pairs; N8 adds 2(m-1)(n-1).
long long neighbor_pair_count(std::size_t rows, std::size_t cols, Neighborhood nbhd);

// Total-variation style energy: minus the number of neighbor pairs with equal
// values.  Integer-valued; lower means more homogeneous blocks.  Not invariant
// under row/column permutations, which is what makes it an arrangement score.
long long lattice_energy(const BinaryMatrix& m, Neighborhood nbhd);

// Energy change of the 2x2 checkerboard swap at (r1,c1,r2,c2), computed from
// the affected neighbor pairs only.  The quadruple must currently form a
// checkerboard (01/10 or 10/01); otherwise std::invalid_argument.
long long energy_delta_swap(const BinaryMatrix& m, std::size_t r1, std::size_t r2,
                            std::size_t c1, std::size_t c2, Neighborhood nbhd);

}  // namespace bpg
