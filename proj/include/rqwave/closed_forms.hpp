#pragma once

#include <complex>
#include <utility>

#include "rqwave/grid.hpp"
#include "rqwave/quadrature.hpp"

// Exact solutions used both as fast evaluators and as oracles against the
// spectral propagators. beta, b > 0 throughout; xi, tau are dimensionless.
namespace rqwave::closed_form {

// Relativistic heat flow of the Gaussian packet, by quadrature of
// (1/pi) int_0^inf exp(-beta k^2 - tau sqrt(1+k^2)) cos(k xi) dk.
double f1(double beta, double xi, double tau, const quad::QuadratureSpec& spec = {});

// Relativistic heat flow of the Macdonald packet:
// (beta+tau)/(2 K1(beta)) * K1(R)/R, R = sqrt((beta+tau)^2 + xi^2).
double f2(double beta, double xi, double tau);

// Salpeter flow of the Gaussian packet (oscillatory quadrature),
// (2 beta/pi)^{1/4} / sqrt(2 pi) * int exp(-beta q^2 - i tau w(q) + i q xi) dq.
std::complex<double> psi1(double beta, double xi, double tau,
                          const quad::QuadratureSpec& spec = {});

// Salpeter flow of the Macdonald packet:
// (beta+i tau)/sqrt(pi K1(2 beta)) * K1(c)/c, c = sqrt((beta+i tau)^2 + xi^2).
std::complex<double> psi2(double beta, double xi, double tau);

// Salpeter flow of the square-root-singular packet:
// N (sqrt(a^2+xi^2) + a)^{1/2} exp(-sqrt(a^2+xi^2)) / sqrt(a^2+xi^2), a = beta + i tau.
std::complex<double> psi3(double beta, double xi, double tau);

// Massless flow of the Cauchy packet: sqrt(2b/pi) (b+it)/((b+it)^2 + x^2).
std::complex<double> massless(double b, double x, double t);

// sqrt(<x^2>) of the massless solution by real-line quadrature (the grid
// moment is unusable here: the density has 1/x^4 tails).
double massless_rms(double b, double t, const quad::QuadratureSpec& spec = {});

// Free Dirac flow of the Macdonald packet with weights (1, 0); returns
// (psi_plus, psi_minus) built from K0/K1 at c and its conjugate.
std::pair<std::complex<double>, std::complex<double>>
dirac_macdonald(double beta, double xi, double tau);

// Free Klein-Gordon flow of the Macdonald initial datum (zero velocity slot);
// real-valued for all tau.
std::complex<double> kg_macdonald(double beta, double xi, double tau);

// Field-level samplers. The elementary forms are evaluated pointwise in
// parallel; f1/psi1 are synthesized from their momentum amplitudes on the k
// lattice (identical to the pointwise quadrature up to periodization, which
// the unit tests pin down).
ScalarField f1_field(double beta, double tau, const GridPtr& grid);
ScalarField f2_field(double beta, double tau, const GridPtr& grid);
ScalarField psi1_field(double beta, double tau, const GridPtr& grid);
ScalarField psi2_field(double beta, double tau, const GridPtr& grid);
ScalarField psi3_field(double beta, double tau, const GridPtr& grid);
ScalarField massless_field(double b, double t, const GridPtr& grid);
SpinorField dirac_macdonald_field(double beta, double tau, const GridPtr& grid);
ScalarField kg_macdonald_field(double beta, double tau, const GridPtr& grid);

} // namespace rqwave::closed_form
