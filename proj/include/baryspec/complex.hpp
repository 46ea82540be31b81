#ifndef BARYSPEC_COMPLEX_HPP
#define BARYSPEC_COMPLEX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "baryspec/graph.hpp"

namespace baryspec {

inline constexpr std::size_t kDefaultSimplexCap = 5'000'000;

/// A complete subgraph of the host, kept as a strictly ascending vertex list.
struct Simplex {
    std::vector<int> vertices;
    int dim() const noexcept { return static_cast<int>(vertices.size()) - 1; }
};

/// The Whitney complex of a graph: every complete subgraph, enumerated once
/// and stored in canonical order (cardinality ascending, then lexicographic
/// on the vertex list).  Immutable and shareable once built.
class CliqueComplex {
public:
    /// Enumerates all cliques of g.  Throws CapacityError when the simplex
    /// count would exceed `cap`.  `parallel` selects the OpenMP enumeration
    /// kernel; the serial kernel produces the identical complex.
    static CliqueComplex build(const SimpleGraph& g, std::size_t cap = kDefaultSimplexCap,
                               bool parallel = true);

    const SimpleGraph& host() const noexcept { return host_; }

    std::size_t size() const noexcept { return offsets_.size() - 1; }

    /// Dimension of the largest simplex (clique number minus one); -1 when empty.
    int dimension() const noexcept { return static_cast<int>(f_vector_.size()) - 1; }

    /// f-vector (v_0, ..., v_d): number of k-dimensional simplices.
    const std::vector<long long>& f_vector() const noexcept { return f_vector_; }

    /// Ascending vertex list of simplex i (canonical order).
    std::span<const int> vertices_of(std::size_t i) const;

    int dim_of(std::size_t i) const;

    /// First canonical index of the k-dimensional block; simplices of
    /// dimension k occupy [begin_of_dim(k), begin_of_dim(k+1)).
    std::size_t begin_of_dim(int k) const;

    /// Canonical index of the simplex with the given ascending vertex list,
    /// or -1 if it is not part of the complex.
    long long index_of(std::span<const int> simplex) const;

private:
    CliqueComplex() = default;

    SimpleGraph host_;
    std::vector<int> verts_;            // concatenated vertex lists
    std::vector<std::size_t> offsets_;  // size()+1 offsets into verts_
    std::vector<std::size_t> dim_begin_;
    std::vector<long long> f_vector_;
};

long long euler_characteristic(const CliqueComplex& c);

/// V_k(x): number of k-dimensional complete subgraphs of the unit sphere
/// S(x), computed from the definition (clique enumeration of the induced
/// neighbor subgraph).  Entry k of the result is V_k(x).
std::vector<long long> sphere_counts(const CliqueComplex& c, int x);

/// V_k(x) for every vertex at once, computed by a single scan of the
/// complex: k-simplices of S(x) correspond to (k+1)-simplices containing x.
std::vector<std::vector<long long>> all_sphere_counts(const CliqueComplex& c);

/// K(x) = 1 - V_0(x)/2 + V_1(x)/3 - V_2(x)/4 + ...  (exact rational).
Rational curvature(const CliqueComplex& c, int x);

struct GaussBonnetReport {
    Rational sum;
    long long chi = 0;
    bool ok = false;
};

/// Checks sum_x K(x) = chi(G) in exact rational arithmetic.
GaussBonnetReport check_gauss_bonnet(const CliqueComplex& c);

struct HandshakeReport {
    int k = 0;
    long long lhs = 0;
    long long rhs = 0;
    bool ok = false;
};

/// Checks sum_x V_k(x) = (k+2) * v_{k+1}.  Beyond the clique dimension both
/// sides are zero and the report is trivially ok.
HandshakeReport check_handshake(const CliqueComplex& c, int k);

} // namespace baryspec

#endif
