#ifndef BSWKB_LINALG_HPP
#define BSWKB_LINALG_HPP

#include <vector>

namespace bswkb::linalg {

// Dense symmetric matrix in row-major storage, n*n entries.
struct SymMatrix {
    int n = 0;
    std::vector<double> a;

    SymMatrix() = default;
    explicit SymMatrix(int size) : n(size), a(static_cast<size_t>(size) * size, 0.0) {}
    double& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    double operator()(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

struct EigenResult {
    std::vector<double> values;           // ascending
    std::vector<std::vector<double>> vectors; // vectors[k] is the k-th eigenvector, empty if not requested
};

// Eigenvalues of a symmetric tridiagonal matrix (diag d, off-diagonal e with
// e[i] coupling i and i+1, e.size() == d.size()-1). Implicit-shift QL.
std::vector<double> tridiag_eigenvalues(std::vector<double> diag, std::vector<double> off);

// Full symmetric eigenproblem: Householder reduction to tridiagonal form
// followed by implicit-shift QL, eigenvalues ascending. The input matrix is
// consumed as workspace.
EigenResult eigen_symmetric(SymMatrix a, bool want_vectors);

// Cholesky factor L (lower) of an SPD matrix; throws ConvergenceError if a
// pivot is not positive.
SymMatrix cholesky(const SymMatrix& a);

// Solve L * x = b and L^T * x = b for a lower-triangular L.
std::vector<double> forward_subst(const SymMatrix& l, const std::vector<double>& b);
std::vector<double> back_subst_transposed(const SymMatrix& l, const std::vector<double>& b);

// Solve the symmetric positive system (A + lambda*diag(A)) x = -g used by the
// Levenberg-Marquardt loop. Returns false if the factorization breaks down.
bool solve_spd(const SymMatrix& a, const std::vector<double>& rhs, std::vector<double>& x);

} // namespace bswkb::linalg

#endif
