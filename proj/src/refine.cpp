#include "baryspec/refine.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "baryspec/counting.hpp"

namespace baryspec {

namespace {

// Edges of the refinement of the complex `c`: one edge per strict
// containment pair, generated at the larger simplex by enumerating its
// proper nonempty vertex subsets.  Writes the edges of simplex i into
// out[first[i] .. first[i+1]), so the result is identical however the
// loop is scheduled.
void containment_edges(const CliqueComplex& c, std::vector<std::pair<int, int>>& out,
                       bool parallel) {
    std::size_t m = c.size();
    std::vector<std::size_t> first(m + 1, 0);
    for (std::size_t i = 0; i < m; ++i) {
        int card = c.dim_of(i) + 1;
        first[i + 1] = first[i] + ((std::size_t{1} << card) - 2);
    }
    out.assign(first[m], {0, 0});

#pragma omp parallel for schedule(dynamic, 64) if (parallel)
    for (long long ii = 0; ii < static_cast<long long>(m); ++ii) {
        auto i = static_cast<std::size_t>(ii);
        auto verts = c.vertices_of(i);
        int card = static_cast<int>(verts.size());
        std::size_t pos = first[i];
        std::vector<int> face;
        face.reserve(static_cast<size_t>(card));
        for (unsigned mask = 1; mask + 1 < (1u << card); ++mask) {
            face.clear();
            for (int b = 0; b < card; ++b)
                if (mask & (1u << b)) face.push_back(verts[static_cast<size_t>(b)]);
            long long f = c.index_of(face);
            out[pos++] = {static_cast<int>(f), static_cast<int>(i)};
        }
    }
}

} // namespace

RefinedGraph refine(const SimpleGraph& g, std::size_t cap, bool parallel) {
    if (g.vertex_count() == 0) throw ArgumentError("refine needs a nonempty graph");
    CliqueComplex c = CliqueComplex::build(g, cap, parallel);
    if (c.size() > static_cast<std::size_t>(std::numeric_limits<int>::max()))
        throw CapacityError("refined vertex count exceeds index range");

    std::vector<std::pair<int, int>> edges;
    containment_edges(c, edges, parallel);

    RefinedGraph r;
    r.graph = SimpleGraph(static_cast<int>(c.size()), edges);
    r.parents.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        auto v = c.vertices_of(i);
        r.parents.emplace_back(v.begin(), v.end());
    }
    r.level = 1;
    return r;
}

RefinedGraph refine_iter(const SimpleGraph& g, int m, std::size_t cap, bool parallel) {
    if (m < 0) throw ArgumentError("refine_iter needs m >= 0");
    if (g.vertex_count() == 0) throw ArgumentError("refine_iter needs a nonempty graph");

    // Pre-flight: project the f-vector forward and refuse oversized targets
    // before building anything.
    CliqueComplex c0 = CliqueComplex::build(g, cap, parallel);
    FVector f = big_f_vector(c0);
    for (int j = 0; j < m; ++j) {
        BigInt total = 0;
        for (const BigInt& vk : f) total += vk;
        if (total > cap)
            throw CapacityError("projected v0 of level " + std::to_string(j + 1) + " is " +
                                total.str() + ", beyond simplex cap " + std::to_string(cap));
        f = evolve(f, 1);
    }

    RefinedGraph r;
    r.graph = g;
    r.parents.resize(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) r.parents[static_cast<size_t>(v)] = {v};
    r.level = 0;
    for (int j = 0; j < m; ++j) {
        RefinedGraph next = refine(r.graph, cap, parallel);
        next.level = r.level + 1;
        r = std::move(next);
    }
    return r;
}

std::vector<int> dimension_coloring(const RefinedGraph& r) {
    std::vector<int> colors(r.parents.size());
    for (std::size_t i = 0; i < r.parents.size(); ++i)
        colors[i] = static_cast<int>(r.parents[i].size()) - 1;
    for (auto [u, v] : r.graph.edges())
        if (colors[static_cast<size_t>(u)] == colors[static_cast<size_t>(v)])
            throw NumericError("dimension coloring is not proper on edge (" + std::to_string(u) +
                               "," + std::to_string(v) + ")");
    return colors;
}

} // namespace baryspec
