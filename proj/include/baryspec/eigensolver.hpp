#ifndef BARYSPEC_EIGENSOLVER_HPP
#define BARYSPEC_EIGENSOLVER_HPP

#include <cstddef>
#include <vector>

#include "baryspec/errors.hpp"

namespace baryspec {

inline constexpr std::size_t kDefaultEigenCap = 6000;

struct EigenOptions {
    bool parallel = true;          // OpenMP tridiagonalization kernel
    std::size_t size_cap = kDefaultEigenCap;
};

/// Full ascending eigenvalue list of a symmetric matrix, plus the accuracy
/// tolerance the values were computed to.
struct Spectrum {
    std::vector<double> values;
    double tol = 0.0;
    std::size_t size() const noexcept { return values.size(); }
};

/// All eigenvalues of the symmetric matrix `a` (row-major n x n, consumed),
/// ascending.  Householder reduction to tridiagonal form followed by QL
/// iteration with implicit shifts; each value is within
/// 1e-9 * max(1, max row sum of |a|) of a true eigenvalue.
///
/// The parallel and serial kernels perform the identical floating point
/// operations, so their results agree bit for bit; the serial kernel is the
/// reference the parallel one is tested and benchmarked against.
///
/// Throws ArgumentError if `a` is not exactly symmetric, CapacityError if
/// n exceeds options.size_cap, NumericError if the QL iteration stalls.
Spectrum sym_eigenvalues_dense(std::vector<double> a, std::size_t n,
                               const EigenOptions& options = {});

namespace kernel {

/// Reference implementation: Householder reduction of a (row-major, full
/// symmetric storage, destroyed) to tridiagonal form with diagonal d and
/// subdiagonal e (e[0] = 0, e[i] couples i-1 and i).
void tridiagonalize_serial(double* a, std::size_t n, double* d, double* e);

/// OpenMP variant.  Work is split over matrix rows only; every row is
/// processed by exactly the serial code path, so results are bitwise equal
/// to tridiagonalize_serial for any thread count.
void tridiagonalize_parallel(double* a, std::size_t n, double* d, double* e);

/// Eigenvalues of a symmetric tridiagonal matrix by shifted QL iteration;
/// d becomes the unsorted eigenvalue list.  e is clobbered.
void tql_eigenvalues(std::vector<double>& d, std::vector<double>& e);

} // namespace kernel

} // namespace baryspec

#endif
