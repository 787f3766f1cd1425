#ifndef BSWKB_SPECFUN_HPP
#define BSWKB_SPECFUN_HPP

#include <vector>

namespace bswkb::specfun {

// log Gamma(x) for x > 0, Lanczos approximation, relative error <= 1e-13.
double ln_gamma(double x);

// Euler Beta B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b), a,b > 0.
double beta(double a, double b);

// Bessel function of the first kind, nu >= -1/2, x >= 0. Power series for
// small x, backward (Miller) recurrence with sum normalization otherwise.
double bessel_j(double nu, double x);

// k-th positive zero of J_nu (k >= 1). McMahon asymptotic bracket, bisection,
// two Newton polish steps; absolute error well below 1e-10.
double bessel_j_zero(double nu, int k);

enum class QuadFamily { legendre, jacobi_halfpow };

// Gauss rule. legendre: nodes in (-1,1), sum of weights = 2.
// jacobi_halfpow: nodes in (0,1), weights absorb the factor (1-t)^{1/2},
// i.e. sum w_i f(t_i) ~ integral_0^1 (1-t)^{1/2} f(t) dt, sum of weights 2/3.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    QuadFamily family = QuadFamily::legendre;
};

QuadratureRule gauss_rule(int n, QuadFamily family);

// Cached rules for the power-of-two sizes used by the action quadrature.
const QuadratureRule& cached_rule(int n, QuadFamily family);

// Generalized Gauss-Laguerre rule for weight x^alpha e^{-x} on (0, inf).
// Weights are returned in log form: for large n the plain weights underflow.
// ln_dpoly[i] = ln|L_n^{(alpha)}'(x_i)| and sign_dpoly[i] its sign; these feed
// the Lagrange-mesh kinetic matrix.
struct LaguerreRule {
    double alpha = 0.0;
    std::vector<double> nodes;
    std::vector<double> ln_weights;
    std::vector<double> ln_dpoly;
    std::vector<int> sign_dpoly;
};

LaguerreRule gauss_laguerre(int n, double alpha);

} // namespace bswkb::specfun

#endif
