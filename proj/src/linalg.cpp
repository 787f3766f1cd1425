#include "bswkb/linalg.hpp"
#include "bswkb/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

// Dense symmetric eigensolver in the EISPACK/JAMA lineage: Householder
// reduction to tridiagonal form (tred2) and the implicit-shift QL sweep
// (tql2), derived from the Algol procedures by Bowdler, Martin, Reinsch and
// Wilkinson, Handbook for Auto. Comp. Vol. II.

namespace bswkb::linalg {

namespace {

// QL with implicit shifts on a tridiagonal matrix. d[i] diagonal, e[i]
// couples i and i+1 (e[n-1] must be 0). If v is non-null the rotations are
// accumulated into its columns.
void ql_implicit_shift(std::vector<double>& d, std::vector<double>& e, SymMatrix* v)
{
    const int n = static_cast<int>(d.size());
    const double eps = std::numeric_limits<double>::epsilon();
    double f = 0.0;
    double tst1 = 0.0;

    for (int l = 0; l < n; l++) {
        tst1 = std::max(tst1, std::fabs(d[l]) + std::fabs(e[l]));
        int m = l;
        while (m < n) {
            if (std::fabs(e[m]) <= eps * tst1) break;
            m++;
        }
        if (m > l) {
            int iter = 0;
            do {
                if (++iter > 60)
                    throw ConvergenceError("ql_implicit_shift: no convergence in 60 iterations");

                double g = d[l];
                double p = (d[l + 1] - g) / (2.0 * e[l]);
                double r = std::hypot(p, 1.0);
                if (p < 0) r = -r;
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                const double dl1 = d[l + 1];
                double h = g - d[l];
                for (int i = l + 2; i < n; i++) d[i] -= h;
                f += h;

                p = d[m];
                double c = 1.0, c2 = c, c3 = c;
                const double el1 = e[l + 1];
                double s = 0.0, s2 = 0.0;
                for (int i = m - 1; i >= l; i--) {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = std::hypot(p, e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    if (v) {
                        for (int k = 0; k < n; k++) {
                            h = (*v)(k, i + 1);
                            (*v)(k, i + 1) = s * (*v)(k, i) + c * h;
                            (*v)(k, i) = c * (*v)(k, i) - s * h;
                        }
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
            } while (std::fabs(e[l]) > eps * tst1);
        }
        d[l] += f;
        e[l] = 0.0;
    }

    // Sort ascending, carrying eigenvectors along.
    for (int i = 0; i < n - 1; i++) {
        int k = i;
        double p = d[i];
        for (int j = i + 1; j < n; j++) {
            if (d[j] < p) {
                k = j;
                p = d[j];
            }
        }
        if (k != i) {
            d[k] = d[i];
            d[i] = p;
            if (v) {
                for (int j = 0; j < n; j++) std::swap((*v)(j, i), (*v)(j, k));
            }
        }
    }
}

// Householder reduction of v (symmetric, full storage) to tridiagonal d/e.
// On exit v holds the accumulated orthogonal transformation.
void householder_tridiag(SymMatrix& v, std::vector<double>& d, std::vector<double>& e)
{
    const int n = v.n;
    for (int j = 0; j < n; j++) d[j] = v(n - 1, j);

    for (int i = n - 1; i > 0; i--) {
        double scale = 0.0;
        double h = 0.0;
        for (int k = 0; k < i; k++) scale += std::fabs(d[k]);
        if (scale == 0.0) {
            e[i] = d[i - 1];
            for (int j = 0; j < i; j++) {
                d[j] = v(i - 1, j);
                v(i, j) = 0.0;
                v(j, i) = 0.0;
            }
        } else {
            for (int k = 0; k < i; k++) {
                d[k] /= scale;
                h += d[k] * d[k];
            }
            double f = d[i - 1];
            double g = std::sqrt(h);
            if (f > 0) g = -g;
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for (int j = 0; j < i; j++) e[j] = 0.0;

            for (int j = 0; j < i; j++) {
                f = d[j];
                v(j, i) = f;
                g = e[j] + v(j, j) * f;
                for (int k = j + 1; k <= i - 1; k++) {
                    g += v(k, j) * d[k];
                    e[k] += v(k, j) * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for (int j = 0; j < i; j++) {
                e[j] /= h;
                f += e[j] * d[j];
            }
            const double hh = f / (h + h);
            for (int j = 0; j < i; j++) e[j] -= hh * d[j];
            for (int j = 0; j < i; j++) {
                f = d[j];
                g = e[j];
                for (int k = j; k <= i - 1; k++) v(k, j) -= f * e[k] + g * d[k];
                d[j] = v(i - 1, j);
                v(i, j) = 0.0;
            }
        }
        d[i] = h;
    }

    // Accumulate transformations.
    for (int i = 0; i < n - 1; i++) {
        v(n - 1, i) = v(i, i);
        v(i, i) = 1.0;
        const double h = d[i + 1];
        if (h != 0.0) {
            for (int k = 0; k <= i; k++) d[k] = v(k, i + 1) / h;
            for (int j = 0; j <= i; j++) {
                double g = 0.0;
                for (int k = 0; k <= i; k++) g += v(k, i + 1) * v(k, j);
                for (int k = 0; k <= i; k++) v(k, j) -= g * d[k];
            }
        }
        for (int k = 0; k <= i; k++) v(k, i + 1) = 0.0;
    }
    for (int j = 0; j < n; j++) {
        d[j] = v(n - 1, j);
        v(n - 1, j) = 0.0;
    }
    v(n - 1, n - 1) = 1.0;
    e[0] = 0.0;

    // Shift couplings to e[i] = coupling(i, i+1) for the QL kernel.
    for (int i = 1; i < n; i++) e[i - 1] = e[i];
    e[n - 1] = 0.0;
}

} // namespace

std::vector<double> tridiag_eigenvalues(std::vector<double> diag, std::vector<double> off)
{
    if (off.size() + 1 != diag.size())
        throw UsageError("tridiag_eigenvalues: off.size() must be diag.size()-1");
    off.push_back(0.0);
    ql_implicit_shift(diag, off, nullptr);
    return diag;
}

EigenResult eigen_symmetric(SymMatrix a, bool want_vectors)
{
    const int n = a.n;
    EigenResult res;
    if (n == 0) return res;

    std::vector<double> d(n), e(n);
    householder_tridiag(a, d, e);
    ql_implicit_shift(d, e, want_vectors ? &a : nullptr);

    res.values = std::move(d);
    if (want_vectors) {
        res.vectors.assign(n, std::vector<double>(n));
        for (int k = 0; k < n; k++)
            for (int i = 0; i < n; i++) res.vectors[k][i] = a(i, k);
    }
    return res;
}

SymMatrix cholesky(const SymMatrix& a)
{
    const int n = a.n;
    SymMatrix l(n);
    for (int i = 0; i < n; i++) {
        for (int j = 0; j <= i; j++) {
            double sum = a(i, j);
            for (int k = 0; k < j; k++) sum -= l(i, k) * l(j, k);
            if (i == j) {
                if (sum <= 0.0)
                    throw ConvergenceError("cholesky: matrix not positive definite");
                l(i, i) = std::sqrt(sum);
            } else {
                l(i, j) = sum / l(j, j);
            }
        }
    }
    return l;
}

std::vector<double> forward_subst(const SymMatrix& l, const std::vector<double>& b)
{
    const int n = l.n;
    std::vector<double> x(b);
    for (int i = 0; i < n; i++) {
        for (int k = 0; k < i; k++) x[i] -= l(i, k) * x[k];
        x[i] /= l(i, i);
    }
    return x;
}

std::vector<double> back_subst_transposed(const SymMatrix& l, const std::vector<double>& b)
{
    const int n = l.n;
    std::vector<double> x(b);
    for (int i = n - 1; i >= 0; i--) {
        for (int k = i + 1; k < n; k++) x[i] -= l(k, i) * x[k];
        x[i] /= l(i, i);
    }
    return x;
}

bool solve_spd(const SymMatrix& a, const std::vector<double>& rhs, std::vector<double>& x)
{
    try {
        const SymMatrix l = cholesky(a);
        x = back_subst_transposed(l, forward_subst(l, rhs));
        return true;
    } catch (const ConvergenceError&) {
        return false;
    }
}

} // namespace bswkb::linalg
