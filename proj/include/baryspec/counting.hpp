#ifndef BARYSPEC_COUNTING_HPP
#define BARYSPEC_COUNTING_HPP

#include <vector>

#include "baryspec/arith.hpp"
#include "baryspec/complex.hpp"

namespace baryspec {

/// f-vector (v_0, ..., v_d) in arbitrary precision.
using FVector = std::vector<BigInt>;

/// Stirling numbers of the second kind, S(n,k) = k*S(n-1,k) + S(n-1,k-1).
BigInt stirling2(int n, int k);

/// The linear subdivision transfer matrix: entry (k, j) counts, for a fixed
/// j-simplex, the chains of nested nonempty faces of length k+1 whose top
/// element is that simplex, which is (k+1)! * S(j+1, k+1).  Applying it to
/// the f-vector of G yields the f-vector of the barycentric refinement G_1.
/// Upper triangular with diagonal (k+1)!, so its eigenvalues are the
/// factorials 1!, 2!, ..., (d+1)!.
class TransferMatrix {
public:
    explicit TransferMatrix(int d);

    int dim() const noexcept { return d_; }
    const BigInt& entry(int k, int j) const;
    FVector apply(const FVector& f) const;

private:
    int d_;
    std::vector<BigInt> a_; // (d+1) x (d+1), row-major
};

TransferMatrix transfer_matrix(int d);

/// m-fold application of the transfer matrix for d = f.size()-1.  Exact.
FVector evolve(const FVector& f, int m);

FVector big_f_vector(const CliqueComplex& c);

enum class SimplexFamily { K2, K3 };

struct ClosedFormRow {
    int m = 0;
    FVector closed;
    FVector evolved;
    bool ok = false;
};

/// Evaluates the closed-form subdivision counts for K_2 or K_3 at levels
/// 0..m and compares them against the transfer dynamics.
std::vector<ClosedFormRow> closed_form_check(SimplexFamily family, int m);

/// Exact ratios v_0(G_{j+1}) / v_0(G_j) for j = 0..m_max-1.
std::vector<Rational> growth_ratios(const FVector& f0, int m_max);

} // namespace baryspec

#endif
