#ifndef BARYSPEC_GRAPH_HPP
#define BARYSPEC_GRAPH_HPP

#include <span>
#include <utility>
#include <vector>

#include "baryspec/arith.hpp"
#include "baryspec/errors.hpp"

namespace baryspec {

/// A finite simple graph on the vertex set {0, ..., n-1}.
///
/// Edges are stored normalized (u < v), deduplicated and sorted, with a CSR
/// adjacency structure for neighborhood queries.  Instances are immutable
/// after construction and safe to share across threads.
class SimpleGraph {
public:
    SimpleGraph() = default;

    /// Builds a graph from a raw edge list.  Pairs may arrive in any order
    /// and may repeat; duplicates are merged.  Throws ArgumentError on a
    /// self-loop or an endpoint outside [0, n).
    SimpleGraph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int vertex_count() const noexcept { return n_; }
    long long edge_count() const noexcept { return static_cast<long long>(edges_.size()); }

    /// Normalized edge list: u < v, sorted lexicographically, unique.
    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

    /// Sorted neighbor list of v.
    std::span<const int> neighbors(int v) const;

    int degree(int v) const;
    bool adjacent(int u, int v) const;
    bool connected() const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> adj_ptr_;
    std::vector<int> adj_;
};

SimpleGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Named families.
SimpleGraph complete_graph(int k);   // k >= 1
SimpleGraph cycle_graph(int n);      // n >= 3
SimpleGraph wheel_graph(int n);      // rim cycle of length n >= 3 joined with one hub
SimpleGraph octahedron_graph();      // K_{2,2,2}
SimpleGraph house_graph();           // square 0-1-2-3 with triangle roof {1,2,4}
SimpleGraph torus_graph(int p, int q); // triangulated p x q grid, both wrap directions, p,q >= 3

/// Vertex degrees sorted ascending.
std::vector<int> degree_sequence(const SimpleGraph& g);

/// Subgraph induced on the given vertices; vertex i of the result is
/// vertices[i] of g.  Vertices must be distinct and in range.
SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const int> vertices);

/// Inductive dimension: dim(empty) = -1, otherwise one plus the average of
/// the dimensions of all unit-sphere subgraphs.  Exact rational arithmetic.
Rational inductive_dimension(const SimpleGraph& g);

} // namespace baryspec

#endif
