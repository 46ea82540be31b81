#include "baryspec/counting.hpp"

#include <string>

namespace baryspec {

BigInt stirling2(int n, int k) {
    if (n < 0 || k < 0) throw ArgumentError("stirling2 arguments must be nonnegative");
    if (k > n) return 0;
    if (n == 0) return 1; // S(0,0)
    if (k == 0) return 0;
    std::vector<BigInt> row(static_cast<size_t>(k) + 1, 0);
    row[0] = 1; // S(0,0)
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j)
            row[static_cast<size_t>(j)] = j * row[static_cast<size_t>(j)] + row[static_cast<size_t>(j) - 1];
        row[0] = 0; // S(i,0) = 0 for i >= 1
    }
    return row[static_cast<size_t>(k)];
}

TransferMatrix::TransferMatrix(int d) : d_(d) {
    if (d < 0) throw ArgumentError("transfer matrix needs d >= 0");
    int n = d + 1;
    a_.assign(static_cast<size_t>(n) * n, 0);
    BigInt fact = 1;
    for (int k = 0; k < n; ++k) {
        fact *= k + 1; // (k+1)!
        for (int j = k; j < n; ++j)
            a_[static_cast<size_t>(k) * n + j] = fact * stirling2(j + 1, k + 1);
    }
}

const BigInt& TransferMatrix::entry(int k, int j) const {
    if (k < 0 || k > d_ || j < 0 || j > d_) throw ArgumentError("transfer matrix index out of range");
    return a_[static_cast<size_t>(k) * (d_ + 1) + j];
}

FVector TransferMatrix::apply(const FVector& f) const {
    if (static_cast<int>(f.size()) != d_ + 1)
        throw ArgumentError("f-vector size " + std::to_string(f.size()) +
                            " does not match transfer dimension " + std::to_string(d_));
    FVector out(f.size(), 0);
    for (int k = 0; k <= d_; ++k)
        for (int j = k; j <= d_; ++j) out[static_cast<size_t>(k)] += entry(k, j) * f[static_cast<size_t>(j)];
    return out;
}

TransferMatrix transfer_matrix(int d) { return TransferMatrix(d); }

FVector evolve(const FVector& f, int m) {
    if (m < 0) throw ArgumentError("evolve needs m >= 0");
    if (f.empty()) throw ArgumentError("evolve needs a nonempty f-vector");
    TransferMatrix t(static_cast<int>(f.size()) - 1);
    FVector cur = f;
    for (int i = 0; i < m; ++i) cur = t.apply(cur);
    return cur;
}

FVector big_f_vector(const CliqueComplex& c) {
    FVector f;
    f.reserve(c.f_vector().size());
    for (long long vk : c.f_vector()) f.emplace_back(vk);
    return f;
}

namespace {

BigInt pow_int(BigInt base, int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

FVector closed_form_k2(int m) {
    // v_0 = 2^m + 1, v_1 = 2^m.
    return {pow_int(2, m) + 1, pow_int(2, m)};
}

FVector closed_form_k3(int m) {
    if (m == 0) return {3, 3, 1};
    // v_0 = 1 - 3*2^{m-1} + 3*2^m + 2^{m-1}*3^m,  v_1 = 3(-2^{m-1} + 2^m + 2^{m-1}*3^m),
    // v_2 = 6^m; the half powers cancel: v_0 = 1 + 2^{m-1}(3 + 3^m), v_1 = 3*2^{m-1}(1 + 3^m).
    BigInt p2 = pow_int(2, m - 1);
    BigInt p3 = pow_int(3, m);
    return {1 + p2 * (3 + p3), 3 * p2 * (1 + p3), pow_int(6, m)};
}

} // namespace

std::vector<ClosedFormRow> closed_form_check(SimplexFamily family, int m) {
    if (m < 0) throw ArgumentError("closed_form_check needs m >= 0");
    FVector base = (family == SimplexFamily::K2) ? FVector{2, 1} : FVector{3, 3, 1};
    std::vector<ClosedFormRow> rows;
    FVector cur = base;
    TransferMatrix t(static_cast<int>(base.size()) - 1);
    for (int j = 0; j <= m; ++j) {
        ClosedFormRow row;
        row.m = j;
        row.closed = (family == SimplexFamily::K2) ? closed_form_k2(j) : closed_form_k3(j);
        row.evolved = cur;
        row.ok = (row.closed == row.evolved);
        rows.push_back(std::move(row));
        cur = t.apply(cur);
    }
    return rows;
}

std::vector<Rational> growth_ratios(const FVector& f0, int m_max) {
    if (m_max < 1) throw ArgumentError("growth_ratios needs m_max >= 1");
    std::vector<Rational> ratios;
    TransferMatrix t(static_cast<int>(f0.size()) - 1);
    FVector cur = f0;
    for (int j = 0; j < m_max; ++j) {
        FVector next = t.apply(cur);
        ratios.emplace_back(next[0], cur[0]);
        cur = std::move(next);
    }
    return ratios;
}

} // namespace baryspec
