#pragma once

#include "rqwave/grid.hpp"
#include "rqwave/quadrature.hpp"

// Fourier-multiplier time evolution: every propagator transforms to the
// wavenumber lattice, multiplies mode by mode, and transforms back. Exact per
// mode, so evolutions at different times compose exactly (semigroup/group).
//
// All operations are pure; multiplier application is parallel across modes
// and reductions use a fixed order, so outputs are independent of the thread
// count.
namespace rqwave {

// dispersion of the massive equations
inline double omega(double k) { return std::sqrt(1.0 + k * k); }

// multiplier exp(-tau k^2)
ScalarField evolve_heat_nonrel(const ScalarField& field, double tau);

// multiplier exp(-tau sqrt(1+k^2))
ScalarField evolve_heat_rel(const ScalarField& field, double tau);

// Same flow realized through the subordination integral
// int_0^inf g_{1/2}(eta) exp(-eta tau^2 (1+k^2)) d eta per mode, evaluated by
// adaptive quadrature; agrees with evolve_heat_rel to quadrature accuracy.
ScalarField evolve_heat_rel_subordinated(const ScalarField& field, double tau,
                                         const quad::QuadratureSpec& spec = {});

// multiplier exp(-i tau sqrt(1+k^2)), or exp(-i tau |k|) when massless
ScalarField evolve_salpeter(const ScalarField& field, double tau, bool massless = false);

// per mode: (p, m) <- (iA (p + k m) + B p, iA (k p - m) + B m),
// A = sin(w tau)/w, B = cos(w tau); unitary, so the total two-component norm
// is conserved.
SpinorField evolve_dirac(const SpinorField& state, double tau);

struct KGState {
    ScalarField psi;
    ScalarField psi_dot;
};

// per mode: psi <- cos(w tau) psi + sin(w tau)/w psi_dot,
//           psi_dot <- -w sin(w tau) psi + cos(w tau) psi_dot
// (determinant-one rotation; inverse is the -tau evolution).
KGState evolve_kg(const KGState& state, double tau);

// Klein-Gordon flow assembled from forward/backward Salpeter flows:
// C1 = (psi0 - i psi1/w)/2 evolved with exp(+i w tau),
// C2 = (psi0 + i psi1/w)/2 evolved with exp(-i w tau); returns the sum.
ScalarField kg_from_salpeter(const ScalarField& psi0, const ScalarField& psi1, double tau);

// Spectral projector 1/2 (1 + H(k)/w) onto positive-energy modes.
SpinorField project_positive_energy(const SpinorField& state);

} // namespace rqwave
