#include "bswkb/specfun.hpp"
#include "bswkb/errors.hpp"
#include "bswkb/linalg.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace bswkb::specfun {

namespace {

constexpr double pi = std::numbers::pi;

// Online log-sum-exp accumulator for sums of exp(t) with wildly varying t.
class LogSumExp {
  public:
    void add(double t)
    {
        if (t == -std::numeric_limits<double>::infinity()) return;
        if (t <= max_) {
            sum_ += std::exp(t - max_);
        } else {
            sum_ = sum_ * std::exp(max_ - t) + 1.0;
            max_ = t;
        }
    }
    double log() const { return max_ + std::log(sum_); }

  private:
    double max_ = -std::numeric_limits<double>::infinity();
    double sum_ = 0.0;
};

// Three-term recurrence of a family of monic orthogonal polynomials:
// p_{k+1}(x) = (x - a_k) p_k(x) - b_k p_{k-1}(x), with first moment mu0 of
// the weight. b_[0] is never used.
struct MonicRecurrence {
    std::vector<double> a;
    std::vector<double> b;
    double mu0 = 0.0;
};

MonicRecurrence legendre_recurrence(int n)
{
    MonicRecurrence r;
    r.a.assign(n, 0.0);
    r.b.assign(n, 0.0);
    for (int k = 1; k < n; k++) r.b[k] = double(k) * k / (4.0 * k * k - 1.0);
    r.mu0 = 2.0;
    return r;
}

// Jacobi weight (1-x)^{1/2} on (-1,1).
MonicRecurrence jacobi_half_recurrence(int n)
{
    const double al = 0.5, be = 0.0;
    MonicRecurrence r;
    r.a.assign(n, 0.0);
    r.b.assign(n, 0.0);
    for (int k = 0; k < n; k++) {
        const double s = 2.0 * k + al + be;
        r.a[k] = (be * be - al * al) / (s * (s + 2.0));
        if (k >= 1)
            r.b[k] = 4.0 * k * (k + al) * (k + be) * (k + al + be) /
                     (s * s * (s + 1.0) * (s - 1.0));
    }
    r.mu0 = std::pow(2.0, 2.5) / 3.0; // integral of (1-x)^{1/2} over (-1,1)
    return r;
}

MonicRecurrence laguerre_recurrence(int n, double alpha)
{
    MonicRecurrence r;
    r.a.assign(n, 0.0);
    r.b.assign(n, 0.0);
    for (int k = 0; k < n; k++) {
        r.a[k] = 2.0 * k + alpha + 1.0;
        if (k >= 1) r.b[k] = k * (k + alpha);
    }
    r.mu0 = std::exp(ln_gamma(alpha + 1.0));
    return r;
}

// Scaled evaluation of p_n and p_n' at x. Returns value/derivative mantissas
// sharing one binary scale so that ratios and signs are exact; lnscale
// receives the log of the common factor.
void monic_eval(const MonicRecurrence& rec, double x, double& p, double& dp, double& lnscale)
{
    const int n = static_cast<int>(rec.a.size());
    double pm = 0.0, pk = 1.0;
    double dm = 0.0, dk = 0.0;
    lnscale = 0.0;
    for (int k = 0; k < n; k++) {
        const double pn = (x - rec.a[k]) * pk - rec.b[k] * pm;
        const double dn = pk + (x - rec.a[k]) * dk - rec.b[k] * dm;
        pm = pk;
        pk = pn;
        dm = dk;
        dk = dn;
        const double m = std::max(std::fabs(pk), std::fabs(dk));
        if (m > 1e140) {
            const double s = 1e-140;
            pm *= s;
            pk *= s;
            dm *= s;
            dk *= s;
            lnscale += std::log(1e140);
        }
    }
    p = pk;
    dp = dk;
}

// Orthonormal-polynomial Christoffel sum: ln lambda_i = -ln sum_k ptilde_k(x)^2.
double log_christoffel_weight(const MonicRecurrence& rec, double x)
{
    const int n = static_cast<int>(rec.a.size());
    std::vector<double> sb(n, 0.0);
    for (int k = 1; k < n; k++) sb[k] = std::sqrt(rec.b[k]);

    double pm = 0.0;
    double pk = 1.0 / std::sqrt(rec.mu0);
    double lnscale = 0.0;
    LogSumExp acc;
    acc.add(2.0 * std::log(std::fabs(pk)));
    for (int k = 0; k + 1 < n; k++) {
        const double pn = ((x - rec.a[k]) * pk - sb[k] * pm) / sb[k + 1];
        pm = pk;
        pk = pn;
        if (std::fabs(pk) > 1e140) {
            pm *= 1e-140;
            pk *= 1e-140;
            lnscale += std::log(1e140);
        }
        if (pk != 0.0) acc.add(2.0 * (std::log(std::fabs(pk)) + lnscale));
    }
    return -acc.log();
}

struct GaussNodes {
    std::vector<double> nodes;
    std::vector<double> ln_weights;
    std::vector<double> ln_dpoly;
    std::vector<int> sign_dpoly;
};

// Golub-Welsch eigenvalues for global root location, Newton polish on the
// recurrence for the last digits (residual |p/p'| driven to ~1e-15 scale).
GaussNodes gauss_from_recurrence(const MonicRecurrence& rec)
{
    const int n = static_cast<int>(rec.a.size());
    std::vector<double> off(n - 1);
    for (int k = 1; k < n; k++) off[k - 1] = std::sqrt(rec.b[k]);
    std::vector<double> nodes = linalg::tridiag_eigenvalues(rec.a, off);

    GaussNodes out;
    out.nodes.resize(n);
    out.ln_weights.resize(n);
    out.ln_dpoly.resize(n);
    out.sign_dpoly.resize(n);
    for (int i = 0; i < n; i++) {
        double x = nodes[i];
        double p = 0.0, dp = 0.0, lnscale = 0.0;
        for (int it = 0; it < 12; it++) {
            monic_eval(rec, x, p, dp, lnscale);
            const double dx = p / dp;
            x -= dx;
            if (std::fabs(dx) <= 1e-15 * std::max(1.0, std::fabs(x))) break;
        }
        monic_eval(rec, x, p, dp, lnscale);
        out.nodes[i] = x;
        out.ln_dpoly[i] = std::log(std::fabs(dp)) + lnscale;
        out.sign_dpoly[i] = dp >= 0.0 ? 1 : -1;
        out.ln_weights[i] = log_christoffel_weight(rec, x);
    }
    return out;
}

double bessel_j_series(double nu, double x)
{
    double term = std::exp(nu * std::log(0.5 * x) - ln_gamma(nu + 1.0));
    double sum = term;
    const double q = 0.25 * x * x;
    for (int k = 0; k < 400; k++) {
        term *= -q / ((k + 1.0) * (nu + k + 1.0));
        sum += term;
        if (std::fabs(term) <= 1e-17 * std::fabs(sum)) break;
    }
    return sum;
}

// Backward (Miller) recurrence normalized with
// sum_k (nu+2k) Gamma(nu+k)/k! J_{nu+2k}(x) = (x/2)^nu.
double bessel_j_miller(double nu, double x)
{
    const int jmax = static_cast<int>(std::ceil(x + 12.0 * std::cbrt(x) + 40.0));
    std::vector<double> f(jmax + 2, 0.0);
    f[jmax + 1] = 0.0;
    f[jmax] = 1e-250;
    for (int j = jmax; j >= 1; j--) {
        f[j - 1] = 2.0 * (nu + j) / x * f[j] - f[j + 1];
        if (std::fabs(f[j - 1]) > 1e250) {
            for (int t = j - 1; t <= jmax + 1; t++) f[t] *= 1e-250;
        }
    }
    double c = std::exp(ln_gamma(nu + 1.0)); // c_0 = Gamma(nu+1)
    double s = c * f[0];
    for (int k = 1; 2 * k <= jmax; k++) {
        if (k == 1)
            c *= nu + 2.0;
        else
            c *= (nu + 2.0 * k) * (nu + k - 1.0) / ((nu + 2.0 * k - 2.0) * k);
        s += c * f[2 * k];
    }
    return f[0] * std::exp(nu * std::log(0.5 * x)) / s;
}

} // namespace

double ln_gamma(double x)
{
    if (!(x > 0.0)) throw std::domain_error("ln_gamma: requires x > 0");
    // Lanczos approximation, g = 671/128, 14 terms.
    static const double cof[14] = {
        57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
        -0.491913816097620199,   0.339946499848118887e-4, 0.465236289270485756e-4,
        -0.983744753048795646e-4, 0.158088703224912494e-3, -0.210264441724104883e-3,
        0.217439618115212643e-3, -0.164318106536763890e-3, 0.844182239838527433e-4,
        -0.261908384015814087e-4, 0.368991826595316234e-5};
    double y = x;
    double tmp = x + 5.24218750000000000;
    tmp = (x + 0.5) * std::log(tmp) - tmp;
    double ser = 0.999999999999997092;
    for (const double c : cof) ser += c / ++y;
    return tmp + std::log(2.5066282746310005 * ser / x);
}

double beta(double a, double b)
{
    if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("beta: requires a, b > 0");
    return std::exp(ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b));
}

double bessel_j(double nu, double x)
{
    if (x < 0.0) throw std::domain_error("bessel_j: requires x >= 0");
    if (nu < -0.5) throw std::domain_error("bessel_j: requires nu >= -1/2");
    if (x == 0.0) return nu == 0.0 ? 1.0 : (nu > 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
    if (x <= 12.0) return bessel_j_series(nu, x);
    return bessel_j_miller(nu, x);
}

double bessel_j_zero(double nu, int k)
{
    if (nu < -0.5) throw std::domain_error("bessel_j_zero: requires nu >= -1/2");
    if (k < 1) throw std::domain_error("bessel_j_zero: requires k >= 1");

    // McMahon expansion of the k-th zero.
    const double mu = 4.0 * nu * nu;
    const double b = (k + 0.5 * nu - 0.25) * pi;
    const double e = 8.0 * b;
    double guess = b - (mu - 1.0) / e - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * e * e * e)
                   - 32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) /
                         (15.0 * e * e * e * e * e);

    double half = 0.5;
    double lo = std::max(guess - half, 1e-8);
    double hi = guess + half;
    double flo = bessel_j(nu, lo);
    double fhi = bessel_j(nu, hi);
    int widen = 0;
    while (flo * fhi > 0.0) {
        if (++widen > 6)
            throw ConvergenceError("bessel_j_zero: bracket search failed");
        half += 0.5;
        lo = std::max(guess - half, 1e-8);
        hi = guess + half;
        flo = bessel_j(nu, lo);
        fhi = bessel_j(nu, hi);
    }

    for (int it = 0; it < 100 && hi - lo > 1e-13 * std::max(1.0, hi); it++) {
        const double mid = 0.5 * (lo + hi);
        const double fm = bessel_j(nu, mid);
        if (flo * fm <= 0.0) {
            hi = mid;
            fhi = fm;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 2; it++) {
        const double j = bessel_j(nu, x);
        const double jd = (nu / x) * j - bessel_j(nu + 1.0, x);
        x -= j / jd;
    }
    return x;
}

QuadratureRule gauss_rule(int n, QuadFamily family)
{
    if (n < 2) throw UsageError("gauss_rule: requires n >= 2");
    QuadratureRule rule;
    rule.family = family;
    switch (family) {
    case QuadFamily::legendre: {
        const GaussNodes g = gauss_from_recurrence(legendre_recurrence(n));
        rule.nodes = g.nodes;
        rule.weights.resize(n);
        for (int i = 0; i < n; i++) rule.weights[i] = std::exp(g.ln_weights[i]);
        break;
    }
    case QuadFamily::jacobi_halfpow: {
        const GaussNodes g = gauss_from_recurrence(jacobi_half_recurrence(n));
        rule.nodes.resize(n);
        rule.weights.resize(n);
        for (int i = 0; i < n; i++) {
            rule.nodes[i] = 0.5 * (1.0 + g.nodes[i]);
            rule.weights[i] = std::exp(g.ln_weights[i]) * std::pow(2.0, -1.5);
        }
        break;
    }
    default:
        throw UsageError("gauss_rule: unknown family");
    }
    return rule;
}

namespace {

template <QuadFamily F, int N>
const QuadratureRule& fixed_rule()
{
    static const QuadratureRule r = gauss_rule(N, F);
    return r;
}

template <QuadFamily F>
const QuadratureRule* fixed_rule_lookup(int n)
{
    switch (n) {
    case 64: return &fixed_rule<F, 64>();
    case 128: return &fixed_rule<F, 128>();
    case 256: return &fixed_rule<F, 256>();
    case 512: return &fixed_rule<F, 512>();
    case 1024: return &fixed_rule<F, 1024>();
    case 2048: return &fixed_rule<F, 2048>();
    default: return nullptr;
    }
}

} // namespace

const QuadratureRule& cached_rule(int n, QuadFamily family)
{
    const QuadratureRule* r = family == QuadFamily::legendre
                                  ? fixed_rule_lookup<QuadFamily::legendre>(n)
                                  : fixed_rule_lookup<QuadFamily::jacobi_halfpow>(n);
    if (r) return *r;
    thread_local QuadratureRule scratch;
    scratch = gauss_rule(n, family);
    return scratch;
}

LaguerreRule gauss_laguerre(int n, double alpha)
{
    if (n < 2) throw UsageError("gauss_laguerre: requires n >= 2");
    if (alpha <= -1.0) throw std::domain_error("gauss_laguerre: requires alpha > -1");
    const GaussNodes g = gauss_from_recurrence(laguerre_recurrence(n, alpha));
    LaguerreRule rule;
    rule.alpha = alpha;
    rule.nodes = g.nodes;
    rule.ln_weights = g.ln_weights;
    rule.ln_dpoly = g.ln_dpoly;
    rule.sign_dpoly = g.sign_dpoly;
    return rule;
}

} // namespace bswkb::specfun
