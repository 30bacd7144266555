#pragma once

#include <vector>

#include "ckzeta/int_matrix.hpp"
#include "ckzeta/polynomial.hpp"

namespace ckzeta {

// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ... | dr,
// diagonal entries nonnegative, zeros trailing.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

// Nonzero diagonal of the Smith form, without the transform matrices.
// The length equals the rank of m.
std::vector<Int> invariant_factors(const IntMatrix& m);

// Fraction-free Gaussian elimination (Bareiss).  Square input only.
Int determinant(const IntMatrix& m);

// Basis of { x : m x = 0 } as columns of a unimodular completion; the list
// has cols(m) - rank(m) vectors, each of length cols(m).
std::vector<std::vector<Int>> kernel_basis(const IntMatrix& m);

// det(m - s I) as a polynomial in s, via the Faddeev-LeVerrier recurrence.
IntPolynomial char_poly(const IntMatrix& m);

// U * A = H with U unimodular, H in row echelon form, pivots positive,
// entries above a pivot reduced into [0, pivot).
struct HermiteDecomposition {
  IntMatrix H;
  IntMatrix U;
};

HermiteDecomposition hermite_normal_form(const IntMatrix& m);

}  // namespace ckzeta
