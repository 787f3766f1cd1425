#ifndef BSWKB_ACTION_HPP
#define BSWKB_ACTION_HPP

#include "bswkb/potentials.hpp"

namespace bswkb::action {

// Closed-form action integral S(E) = integral_0^{r0} sqrt(E - V) dr for the
// pure power potential V = sign(m) r^m (a = g = 1). With M = 1/m + 1/2:
//   m > 0:  S = E^M * (1/m) B(1/m, 3/2),          E > 0
//   m < 0:  S = |E|^M * (1/|m|) B(3/2, 1/|m|-1/2), E < 0
double closed_power(double m, double energy);

// V = log r: S = e^E * sqrt(pi)/2 for any real E.
double closed_log(double energy);

// Infinite well of radius 1: S = sqrt(E), E > 0.
double closed_well(double energy);

// Quadrature evaluation of the action integral, relative accuracy ~1e-10.
// The turning-point square root is removed with r = r0 sin^2(theta); the
// r -> 0 inverse-power singularity of the m<0 family is regularized with
// r = u^{2/(2+m)} on [0, r0/2]. Node count doubles from 128 until two
// successive results agree to 1e-11 (cap 2048, then ConvergenceError).
double numeric(const PotentialSpec& v, double energy);

// Closed form when available for the spec (pure powers, coulomb, log, well),
// numeric quadrature otherwise (anharmonic, scaled powers).
double integral(const PotentialSpec& v, double energy);

// True when integral() takes the closed-form path for v.
bool has_closed_form(const PotentialSpec& v);

} // namespace bswkb::action

#endif
