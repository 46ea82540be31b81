#ifndef BARYSPEC_REFINE_HPP
#define BARYSPEC_REFINE_HPP

#include <vector>

#include "baryspec/complex.hpp"

namespace baryspec {

/// A barycentric refinement together with its provenance: vertex i of the
/// refined graph is the i-th simplex of the parent complex in canonical
/// order, and `parents[i]` is that simplex's vertex list in the parent.
struct RefinedGraph {
    SimpleGraph graph;
    std::vector<std::vector<int>> parents;
    int level = 0;
};

/// One refinement step: vertices are the complete subgraphs of g, two of
/// them adjacent iff one is strictly contained in the other.  Edges are
/// generated by walking the proper faces of each simplex (output-linear);
/// the all-pairs containment test survives only as a test oracle.
RefinedGraph refine(const SimpleGraph& g, std::size_t cap = kDefaultSimplexCap,
                    bool parallel = true);

/// m-fold refinement.  Projected sizes are computed from the subdivision
/// transfer matrix first, so exponential blowups fail with a CapacityError
/// before any allocation.
RefinedGraph refine_iter(const SimpleGraph& g, int m, std::size_t cap = kDefaultSimplexCap,
                         bool parallel = true);

/// color(v) = dimension of the originating simplex.  Verifies that the
/// coloring is proper before returning.
std::vector<int> dimension_coloring(const RefinedGraph& r);

} // namespace baryspec

#endif
