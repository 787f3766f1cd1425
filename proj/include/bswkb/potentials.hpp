#ifndef BSWKB_POTENTIALS_HPP
#define BSWKB_POTENTIALS_HPP

#include <string>

namespace bswkb {

enum class PotentialKind { power, coulomb, log, anharmonic, infinite_well };

// Radial potential description.
//   power:      V(r) = a * g^{m-2} * sign(m) * r^m,  m in [-1,inf) \ {0}
//   coulomb:    V(r) = -1/r            (identical to power m=-1, a=g=1)
//   log:        V(r) = log r           (the m -> 0 limit of the power family)
//   anharmonic: V(r) = r^2 + lambda r^4
//   infinite_well: V = 0 for r < 1, wall at r = 1; handled by closed forms
struct PotentialSpec {
    PotentialKind kind = PotentialKind::power;
    double m = 2.0;
    double a = 1.0;
    double g = 1.0;
    double lambda = 0.0;

    static PotentialSpec power(double m, double a = 1.0, double g = 1.0);
    static PotentialSpec coulomb();
    static PotentialSpec logarithmic();
    static PotentialSpec anharmonic(double lambda);
    static PotentialSpec infinite_well();

    // True when the spectrum is purely discrete and E ranges over (inf V, inf):
    // power m>0, log, anharmonic, infinite_well.
    bool confining() const;
    // True for the negative-energy branch kinds: coulomb and power with m<0.
    bool attractive_singular() const;
    // Power prefactor a * g^{m-2} (1 for the default couplings).
    double power_prefactor() const;

    // CLI text format: "power:m=4", "power:m=-0.5,a=1,g=1", "coulomb", "log",
    // "anharmonic:lambda=10", "well". Case-insensitive; unknown keys reject.
    static PotentialSpec parse(const std::string& text);
    std::string describe() const;
};

// (n_r, d): radial quantum number and spatial dimension.
struct QuantumLabel {
    int n_r = 0;
    int d = 3;
};

void validate(const PotentialSpec& v);
void validate(const QuantumLabel& q);

// V(r) for r > 0. infinite_well is rejected (closed forms handle it).
double evaluate(const PotentialSpec& v, double r);

// The unique r0 > 0 with V(r0) = E. Closed form for power/log/coulomb,
// bracketed bisection + Newton polish for anharmonic (rel. tol 1e-13).
double turning_point(const PotentialSpec& v, double energy);

} // namespace bswkb

#endif
