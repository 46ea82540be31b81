#ifndef BARYSPEC_OPERATORS_HPP
#define BARYSPEC_OPERATORS_HPP

#include <Eigen/Sparse>
#include <vector>

#include "baryspec/complex.hpp"
#include "baryspec/eigensolver.hpp"

namespace baryspec {

// Operators are assembled with integer-valued entries; doubles below 2^53
// represent them exactly, so equality tests on assembled matrices are exact.
using SparseMat = Eigen::SparseMatrix<double>;

/// L = B - A: diagonal degree matrix minus adjacency matrix.
SparseMat scalar_laplacian(const SimpleGraph& g);

/// Signed incidence matrix d_k from k-simplices to (k+1)-simplices with the
/// ascending-vertex orientation: the entry for a (k+1)-simplex s and its
/// face with the i-th vertex dropped is (-1)^i.  Requires 0 <= k < dim.
SparseMat exterior_derivative(const CliqueComplex& c, int k);

/// L_k = d_k^T d_k + d_{k-1} d_{k-1}^T (terms beyond the ends are zero).
/// L_0 equals the scalar Laplacian.
SparseMat hodge_laplacian(const CliqueComplex& c, int k);

/// D = d + d^T on the total chain space (size = total simplex count, blocks
/// ordered by form degree); D^2 is block diagonal with the L_k as blocks.
SparseMat dirac(const CliqueComplex& c);

bool is_symmetric_exact(const SparseMat& m);

/// Dense row-major copy.
std::vector<double> dense_row_major(const SparseMat& m);

/// Full ascending spectrum of a symmetric operator.  ArgumentError if the
/// matrix is not exactly symmetric; CapacityError above options.size_cap.
Spectrum eigenvalues(const SparseMat& m, const EigenOptions& options = {});

/// b_k = dim ker L_k, counted as eigenvalues below zero_tol * max(1, lambda_max).
/// Asserts the Euler-Poincare identity sum (-1)^k b_k = chi before returning.
std::vector<int> betti_numbers(const CliqueComplex& c, double zero_tol = 1e-8,
                               const EigenOptions& options = {});

} // namespace baryspec

#endif
