#include "baryspec/complex.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>

namespace baryspec {

namespace {

// Depth-first expansion of cliques rooted at `root`: every clique of the
// graph with minimum vertex `root` is emitted exactly once.  Candidates are
// always neighbors of every clique member and larger than the last member,
// so each recursion node is itself a clique.
void expand_cliques(const SimpleGraph& g, std::vector<int>& clique, std::vector<int>& cand,
                    std::vector<int>& out_verts, std::vector<int>& out_sizes,
                    std::size_t cap, std::atomic<std::size_t>& count) {
    if (count.fetch_add(1, std::memory_order_relaxed) >= cap) return;
    out_sizes.push_back(static_cast<int>(clique.size()));
    out_verts.insert(out_verts.end(), clique.begin(), clique.end());
    for (std::size_t i = 0; i < cand.size(); ++i) {
        int v = cand[i];
        auto nb = g.neighbors(v);
        std::vector<int> next;
        next.reserve(cand.size() - i);
        std::set_intersection(cand.begin() + static_cast<long>(i) + 1, cand.end(), nb.begin(),
                              nb.end(), std::back_inserter(next));
        clique.push_back(v);
        expand_cliques(g, clique, next, out_verts, out_sizes, cap, count);
        clique.pop_back();
    }
}

void enumerate_root(const SimpleGraph& g, int root, std::vector<int>& out_verts,
                    std::vector<int>& out_sizes, std::size_t cap,
                    std::atomic<std::size_t>& count) {
    std::vector<int> clique{root};
    auto nb = g.neighbors(root);
    std::vector<int> cand;
    for (int w : nb)
        if (w > root) cand.push_back(w);
    expand_cliques(g, clique, cand, out_verts, out_sizes, cap, count);
}

struct RawCliques {
    std::vector<int> verts;
    std::vector<int> sizes;
};

RawCliques enumerate_serial(const SimpleGraph& g, std::size_t cap) {
    RawCliques raw;
    std::atomic<std::size_t> count{0};
    for (int v = 0; v < g.vertex_count(); ++v)
        enumerate_root(g, v, raw.verts, raw.sizes, cap, count);
    if (count.load() > cap)
        throw CapacityError("simplex cap " + std::to_string(cap) + " exceeded");
    return raw;
}

RawCliques enumerate_parallel(const SimpleGraph& g, std::size_t cap) {
    int n = g.vertex_count();
    std::vector<RawCliques> per_root(static_cast<size_t>(std::max(n, 1)));
    std::atomic<std::size_t> count{0};
#pragma omp parallel for schedule(dynamic)
    for (int v = 0; v < n; ++v)
        enumerate_root(g, v, per_root[v].verts, per_root[v].sizes, cap, count);
    if (count.load() > cap)
        throw CapacityError("simplex cap " + std::to_string(cap) + " exceeded");
    RawCliques raw;
    std::size_t tv = 0, ts = 0;
    for (auto& r : per_root) {
        tv += r.verts.size();
        ts += r.sizes.size();
    }
    raw.verts.reserve(tv);
    raw.sizes.reserve(ts);
    for (auto& r : per_root) {
        raw.verts.insert(raw.verts.end(), r.verts.begin(), r.verts.end());
        raw.sizes.insert(raw.sizes.end(), r.sizes.begin(), r.sizes.end());
    }
    return raw;
}

} // namespace

CliqueComplex CliqueComplex::build(const SimpleGraph& g, std::size_t cap, bool parallel) {
    RawCliques raw = parallel ? enumerate_parallel(g, cap) : enumerate_serial(g, cap);
    std::size_t m = raw.sizes.size();

    std::vector<std::size_t> start(m);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < m; ++i) {
        start[i] = pos;
        pos += static_cast<std::size_t>(raw.sizes[i]);
    }

    // Canonical order: cardinality, then lexicographic on the vertex list.
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (raw.sizes[a] != raw.sizes[b]) return raw.sizes[a] < raw.sizes[b];
        return std::lexicographical_compare(
            raw.verts.begin() + static_cast<long>(start[a]),
            raw.verts.begin() + static_cast<long>(start[a]) + raw.sizes[a],
            raw.verts.begin() + static_cast<long>(start[b]),
            raw.verts.begin() + static_cast<long>(start[b]) + raw.sizes[b]);
    });

    CliqueComplex c;
    c.host_ = g;
    c.verts_.reserve(raw.verts.size());
    c.offsets_.reserve(m + 1);
    c.offsets_.push_back(0);
    int max_card = 0;
    for (std::size_t i = 0; i < m; ++i) max_card = std::max(max_card, raw.sizes[i]);
    c.f_vector_.assign(static_cast<size_t>(max_card), 0);
    c.dim_begin_.assign(static_cast<size_t>(max_card) + 1, 0);
    for (std::size_t idx : order) {
        int sz = raw.sizes[idx];
        c.verts_.insert(c.verts_.end(), raw.verts.begin() + static_cast<long>(start[idx]),
                        raw.verts.begin() + static_cast<long>(start[idx]) + sz);
        c.offsets_.push_back(c.verts_.size());
        ++c.f_vector_[static_cast<size_t>(sz) - 1];
    }
    for (int k = 0; k < max_card; ++k)
        c.dim_begin_[static_cast<size_t>(k) + 1] =
            c.dim_begin_[k] + static_cast<std::size_t>(c.f_vector_[k]);
    return c;
}

std::span<const int> CliqueComplex::vertices_of(std::size_t i) const {
    return {verts_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
}

int CliqueComplex::dim_of(std::size_t i) const {
    return static_cast<int>(offsets_[i + 1] - offsets_[i]) - 1;
}

std::size_t CliqueComplex::begin_of_dim(int k) const {
    if (k < 0) return 0;
    if (k > dimension()) return size();
    return dim_begin_[static_cast<size_t>(k)];
}

long long CliqueComplex::index_of(std::span<const int> simplex) const {
    int k = static_cast<int>(simplex.size()) - 1;
    if (k < 0 || k > dimension()) return -1;
    std::size_t lo = begin_of_dim(k), hi = begin_of_dim(k + 1);
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        auto v = vertices_of(mid);
        if (std::lexicographical_compare(v.begin(), v.end(), simplex.begin(), simplex.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < begin_of_dim(k + 1)) {
        auto v = vertices_of(lo);
        if (std::equal(v.begin(), v.end(), simplex.begin(), simplex.end()))
            return static_cast<long long>(lo);
    }
    return -1;
}

long long euler_characteristic(const CliqueComplex& c) {
    long long chi = 0;
    int sign = 1;
    for (long long vk : c.f_vector()) {
        chi += sign * vk;
        sign = -sign;
    }
    return chi;
}

std::vector<long long> sphere_counts(const CliqueComplex& c, int x) {
    auto nb = c.host().neighbors(x); // range-checks x
    SimpleGraph sphere = induced_subgraph(c.host(), nb);
    if (sphere.vertex_count() == 0) return {};
    CliqueComplex sc = CliqueComplex::build(sphere, kDefaultSimplexCap, false);
    return sc.f_vector();
}

std::vector<std::vector<long long>> all_sphere_counts(const CliqueComplex& c) {
    int n = c.host().vertex_count();
    int d = c.dimension();
    std::vector<std::vector<long long>> counts(static_cast<size_t>(n),
                                               std::vector<long long>(std::max(d, 0), 0));
    for (std::size_t i = c.begin_of_dim(1); i < c.size(); ++i) {
        auto v = c.vertices_of(i);
        int k = static_cast<int>(v.size()) - 2; // dim of the sphere simplex
        for (int x : v) ++counts[static_cast<size_t>(x)][static_cast<size_t>(k)];
    }
    // Trim trailing zeros so that the per-vertex lists match sphere_counts().
    for (auto& row : counts)
        while (!row.empty() && row.back() == 0) row.pop_back();
    return counts;
}

namespace {

Rational curvature_from_counts(const std::vector<long long>& vk) {
    Rational k(1);
    int sign = -1;
    for (std::size_t j = 0; j < vk.size(); ++j) {
        k += Rational(sign * vk[j], static_cast<long long>(j) + 2);
        sign = -sign;
    }
    return k;
}

} // namespace

Rational curvature(const CliqueComplex& c, int x) {
    return curvature_from_counts(sphere_counts(c, x));
}

GaussBonnetReport check_gauss_bonnet(const CliqueComplex& c) {
    GaussBonnetReport r;
    r.sum = 0;
    auto counts = all_sphere_counts(c);
    for (const auto& vk : counts) r.sum += curvature_from_counts(vk);
    r.chi = euler_characteristic(c);
    r.ok = (r.sum == Rational(r.chi));
    return r;
}

HandshakeReport check_handshake(const CliqueComplex& c, int k) {
    if (k < 0) throw ArgumentError("handshake dimension must be nonnegative");
    HandshakeReport r;
    r.k = k;
    auto counts = all_sphere_counts(c);
    for (const auto& vk : counts)
        if (k < static_cast<int>(vk.size())) r.lhs += vk[static_cast<size_t>(k)];
    long long v_k1 = (k + 1 <= c.dimension()) ? c.f_vector()[static_cast<size_t>(k) + 1] : 0;
    r.rhs = static_cast<long long>(k + 2) * v_k1;
    r.ok = (r.lhs == r.rhs);
    return r;
}

} // namespace baryspec
