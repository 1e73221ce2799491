#pragma once

#include <complex>

#include "rqwave/quadrature.hpp"

namespace rqwave::specfun {

// Macdonald function K_nu(z), nu in {0,1}, Re z > 0, computed from the
// integral representation K_nu(z) = int_0^inf exp(-z cosh t) cosh(nu t) dt
// with adaptive truncation. Valid uniformly in the right half plane, which
// covers every argument sqrt((beta+i tau)^2 + xi^2) that shows up here.
std::complex<double> bessel_k(int order, std::complex<double> z);
double bessel_k(int order, double x);

// Modified Struve function L_nu(x), nu in {-1,0}, x > 0, by its ascending
// series with term-ratio stopping at 1e-16.
double struve_l(int order, double x);

// One-sided Levy stable density of index 1/2:
// g_{1/2}(eta) = exp(-1/(4 eta)) / (2 sqrt(pi) eta^{3/2}), eta > 0.
double levy_half(double eta);

// int_0^inf g_{1/2}(eta) exp(-p eta) d eta, equal to exp(-sqrt(p)) for p >= 0.
// Evaluated by adaptive quadrature after the substitution eta = u^2; this is
// the workhorse of the subordinated heat propagator.
double levy_half_laplace(double p, const quad::QuadratureSpec& spec = {});

// L2 normalization constant of the psi3 packet family:
// N = [2 (K0(2b) + pi/2 - pi b K0(2b) L_{-1}(2b) - pi b K1(2b) L_0(2b))]^{-1/2}.
double psi3_norm_constant(double beta);

} // namespace rqwave::specfun
