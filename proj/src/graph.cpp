#include "baryspec/graph.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace baryspec {

SimpleGraph::SimpleGraph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
    if (n < 0)
        throw ArgumentError("vertex count must be nonnegative, got " + std::to_string(n));
    edges_.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ArgumentError("edge endpoint out of range [0," + std::to_string(n) + "): (" +
                                std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw ArgumentError("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    adj_ptr_.assign(static_cast<size_t>(n_) + 1, 0);
    for (auto [u, v] : edges_) {
        ++adj_ptr_[static_cast<size_t>(u) + 1];
        ++adj_ptr_[static_cast<size_t>(v) + 1];
    }
    for (int v = 0; v < n_; ++v) adj_ptr_[static_cast<size_t>(v) + 1] += adj_ptr_[v];
    adj_.resize(2 * edges_.size());
    std::vector<int> fill(adj_ptr_.begin(), adj_ptr_.end() - 1);
    for (auto [u, v] : edges_) {
        adj_[static_cast<size_t>(fill[u]++)] = v;
        adj_[static_cast<size_t>(fill[v]++)] = u;
    }
    for (int v = 0; v < n_; ++v)
        std::sort(adj_.begin() + adj_ptr_[v], adj_.begin() + adj_ptr_[static_cast<size_t>(v) + 1]);
}

void SimpleGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw ArgumentError("vertex " + std::to_string(v) + " out of range [0," +
                            std::to_string(n_) + ")");
}

std::span<const int> SimpleGraph::neighbors(int v) const {
    check_vertex(v);
    return {adj_.data() + adj_ptr_[v],
            static_cast<size_t>(adj_ptr_[static_cast<size_t>(v) + 1] - adj_ptr_[v])};
}

int SimpleGraph::degree(int v) const {
    check_vertex(v);
    return adj_ptr_[static_cast<size_t>(v) + 1] - adj_ptr_[v];
}

bool SimpleGraph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

bool SimpleGraph::connected() const {
    if (n_ == 0) return true;
    std::vector<char> seen(static_cast<size_t>(n_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n_;
}

SimpleGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    return SimpleGraph(n, edges);
}

SimpleGraph complete_graph(int k) {
    if (k < 1) throw ArgumentError("complete graph needs k >= 1, got " + std::to_string(k));
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) e.emplace_back(u, v);
    return SimpleGraph(k, e);
}

SimpleGraph cycle_graph(int n) {
    if (n < 3) throw ArgumentError("cycle needs n >= 3, got " + std::to_string(n));
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return SimpleGraph(n, e);
}

SimpleGraph wheel_graph(int n) {
    if (n < 3) throw ArgumentError("wheel needs rim size n >= 3, got " + std::to_string(n));
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v) {
        e.emplace_back(v, (v + 1) % n);
        e.emplace_back(v, n); // hub
    }
    return SimpleGraph(n + 1, e);
}

SimpleGraph octahedron_graph() {
    // K_{2,2,2}: parts {0,1}, {2,3}, {4,5}.
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (u / 2 != v / 2) e.emplace_back(u, v);
    return SimpleGraph(6, e);
}

SimpleGraph house_graph() {
    return SimpleGraph(5, {{0, 1}, {0, 3}, {1, 2}, {1, 4}, {2, 3}, {2, 4}});
}

SimpleGraph torus_graph(int p, int q) {
    if (p < 3 || q < 3)
        throw ArgumentError("torus needs p,q >= 3, got " + std::to_string(p) + "x" +
                            std::to_string(q));
    auto id = [q](int i, int j) { return i * q + j; };
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) {
            e.emplace_back(id(i, j), id((i + 1) % p, j));
            e.emplace_back(id(i, j), id(i, (j + 1) % q));
            e.emplace_back(id(i, j), id((i + 1) % p, (j + 1) % q));
        }
    return SimpleGraph(p * q, e);
}

std::vector<int> degree_sequence(const SimpleGraph& g) {
    std::vector<int> d(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const int> vertices) {
    std::vector<int> verts(vertices.begin(), vertices.end());
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
        throw ArgumentError("induced_subgraph: duplicate vertex");
    std::vector<std::pair<int, int>> e;
    for (size_t a = 0; a < verts.size(); ++a)
        for (size_t b = a + 1; b < verts.size(); ++b)
            if (g.adjacent(verts[a], verts[b])) e.emplace_back(static_cast<int>(a), static_cast<int>(b));
    return SimpleGraph(static_cast<int>(verts.size()), e);
}

namespace {

// Memoized recursion over induced subgraphs, keyed by their vertex sets
// relative to the root graph.
Rational dim_rec(const SimpleGraph& g, std::vector<int>& key_scratch,
                 std::map<std::vector<int>, Rational>& memo) {
    if (g.vertex_count() == 0) return Rational(-1);
    Rational total = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto nb = g.neighbors(v);
        SimpleGraph sphere = induced_subgraph(g, nb);
        // Key: vertex list of this sphere mapped through key_scratch (the
        // identity of the current graph's vertices in the root graph).
        std::vector<int> key(nb.size());
        for (size_t i = 0; i < nb.size(); ++i) key[i] = key_scratch[nb[i]];
        std::sort(key.begin(), key.end());
        auto it = memo.find(key);
        if (it != memo.end()) {
            total += it->second;
        } else {
            Rational d = dim_rec(sphere, key, memo);
            memo.emplace(std::move(key), d);
            total += d;
        }
    }
    return 1 + total / g.vertex_count();
}

} // namespace

Rational inductive_dimension(const SimpleGraph& g) {
    if (g.vertex_count() == 0) return Rational(-1);
    std::vector<int> identity(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) identity[v] = v;
    std::map<std::vector<int>, Rational> memo;
    return dim_rec(g, identity, memo);
}

} // namespace baryspec
