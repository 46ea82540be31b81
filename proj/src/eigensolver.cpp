#include "baryspec/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace baryspec {

namespace kernel {

namespace {

// One Householder elimination step on the leading (i+1) x (i+1) block:
// zeroes row i left of the subdiagonal.  Returns through d/e as in tred1.
// The two O(i^2) inner stages (symmetric matrix-vector product and rank-2
// update) are expressed row-wise so a parallel caller can split rows across
// threads without changing any arithmetic.
struct HouseholderStep {
    double* a;
    std::size_t n;
    std::size_t i;     // row being eliminated
    std::size_t l;     // i - 1
    double h = 0.0;    // |u|^2 / 2
    std::vector<double> p, q;

    // Scales row i, builds the Householder vector in-place; returns false
    // when the row is already reduced (then e_i is the raw entry).
    bool prepare(double& e_i) {
        double* row = a + i * n;
        double scale = 0.0;
        for (std::size_t k = 0; k <= l; ++k) scale += std::fabs(row[k]);
        if (scale == 0.0) {
            e_i = row[l];
            return false;
        }
        for (std::size_t k = 0; k <= l; ++k) row[k] /= scale;
        for (std::size_t k = 0; k <= l; ++k) h += row[k] * row[k];
        double f = row[l];
        double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
        e_i = scale * g;
        h -= f * g;
        row[l] = f - g; // u now lives in row i, positions 0..l
        p.assign(l + 1, 0.0);
        q.assign(l + 1, 0.0);
        return true;
    }

    // p[j] = (A u)_j / h for one row j of the leading block.
    void matvec_row(std::size_t j) {
        const double* u = a + i * n;
        const double* rowj = a + j * n;
        double s = 0.0;
        for (std::size_t k = 0; k <= l; ++k) s += rowj[k] * u[k];
        p[j] = s / h;
    }

    // q = p - (u.p / 2h) u; serial, O(i).
    void form_q() {
        const double* u = a + i * n;
        double up = 0.0;
        for (std::size_t k = 0; k <= l; ++k) up += u[k] * p[k];
        double kk = up / (2.0 * h);
        for (std::size_t k = 0; k <= l; ++k) q[k] = p[k] - kk * u[k];
    }

    // A -= u q^T + q u^T on one row j of the leading block.
    void update_row(std::size_t j) {
        const double* u = a + i * n;
        double uj = u[j], qj = q[j];
        double* rowj = a + j * n;
        for (std::size_t k = 0; k <= l; ++k) rowj[k] -= uj * q[k] + qj * u[k];
    }
};

} // namespace

void tridiagonalize_serial(double* a, std::size_t n, double* d, double* e) {
    e[0] = 0.0;
    for (std::size_t i = n - 1; i >= 2; --i) {
        HouseholderStep step{a, n, i, i - 1};
        if (!step.prepare(e[i])) continue;
        for (std::size_t j = 0; j <= step.l; ++j) step.matvec_row(j);
        step.form_q();
        for (std::size_t j = 0; j <= step.l; ++j) step.update_row(j);
    }
    if (n >= 2) e[1] = a[1 * n + 0];
    for (std::size_t k = 0; k < n; ++k) d[k] = a[k * n + k];
}

void tridiagonalize_parallel(double* a, std::size_t n, double* d, double* e) {
    e[0] = 0.0;
    for (std::size_t i = n - 1; i >= 2; --i) {
        HouseholderStep step{a, n, i, i - 1};
        if (!step.prepare(e[i])) continue;
        const long long lim = static_cast<long long>(step.l);
#pragma omp parallel for schedule(static)
        for (long long j = 0; j <= lim; ++j) step.matvec_row(static_cast<std::size_t>(j));
        step.form_q();
#pragma omp parallel for schedule(static)
        for (long long j = 0; j <= lim; ++j) step.update_row(static_cast<std::size_t>(j));
    }
    if (n >= 2) e[1] = a[1 * n + 0];
    for (std::size_t k = 0; k < n; ++k) d[k] = a[k * n + k];
}

void tql_eigenvalues(std::vector<double>& d, std::vector<double>& e) {
    const std::size_t n = d.size();
    if (n == 0) return;
    // Shift subdiagonals down one slot: e[i] couples i and i+1 below.
    for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;

    for (std::size_t lidx = 0; lidx < n; ++lidx) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = lidx; m + 1 < n; ++m) {
                double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) + dd == dd) break;
            }
            if (m != lidx) {
                if (iter++ == 50)
                    throw NumericError("eigenvalue QL iteration did not converge at index " +
                                       std::to_string(lidx));
                double g = (d[lidx + 1] - d[lidx]) / (2.0 * e[lidx]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[lidx] + e[lidx] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                for (std::size_t i = m; i-- > lidx;) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0) continue; // deflated early inside the sweep; re-test
                d[lidx] -= p;
                e[lidx] = g;
                e[m] = 0.0;
            }
        } while (m != lidx);
    }
}

} // namespace kernel

Spectrum sym_eigenvalues_dense(std::vector<double> a, std::size_t n, const EigenOptions& options) {
    if (a.size() != n * n) throw ArgumentError("matrix storage does not match size");
    if (n > options.size_cap)
        throw CapacityError("dense eigensolve size " + std::to_string(n) +
                            " exceeds eigensolver cap " + std::to_string(options.size_cap));
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (a[i * n + j] != a[j * n + i])
                throw ArgumentError("eigenvalues need an exactly symmetric matrix");
            row += std::fabs(a[i * n + j]);
        }
        norm = std::max(norm, row);
    }

    Spectrum s;
    s.tol = 1e-9 * std::max(1.0, norm);
    if (n == 0) return s;

    std::vector<double> d(n), e(n, 0.0);
    if (n == 1) {
        d[0] = a[0];
    } else if (options.parallel) {
        kernel::tridiagonalize_parallel(a.data(), n, d.data(), e.data());
    } else {
        kernel::tridiagonalize_serial(a.data(), n, d.data(), e.data());
    }
    kernel::tql_eigenvalues(d, e);
    std::sort(d.begin(), d.end());
    s.values = std::move(d);
    return s;
}

} // namespace baryspec
