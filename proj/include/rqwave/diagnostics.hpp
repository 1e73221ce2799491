#pragma once

#include <optional>
#include <span>
#include <stdexcept>

#include "rqwave/grid.hpp"
#include "rqwave/propagators.hpp"

namespace rqwave::diag {

struct DiagnosticsReport {
    double tau = 0.0;
    double l2_norm = 0.0;
    double d2_origin = 0.0;
    int peak_count = 0;
    std::optional<double> rms_position;
    std::optional<double> kg_invariant;
};

// Second derivative of |psi|^2 at xi = 0, by spectral differentiation of the
// density (the critical values quoted to three decimals need curvature
// estimates well below finite-difference noise).
double d2_origin(const ScalarField& field);
double d2_origin(const SpinorField& field);

// The closed-form curvature of the psi3 family:
// N^2 exp(-2 beta) (beta^2+tau^2)^{-5/2} [tau^2 (3-4 beta) - beta^2 (3+4 beta)].
double d2_psi3_analytic(double beta, double tau);

// Positive root of the bracket above; defined for 0 < beta < 3/4.
double critical_tau(double beta);

struct NoRootError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class CriticalFamily { psi1, psi2 };

// Bisection root of beta -> d2_origin(closed form at time tau) on the bracket
// [0.01, 10]; throws NoRootError when the curvature does not change sign.
double critical_beta(CriticalFamily family, double tau, double beta_tol = 1e-4,
                     GridPtr grid = nullptr);

// Local maxima of a sampled density with relative prominence at least
// rel_prominence; a plateau counts once, and a nonzero field without interior
// maxima counts as a single peak.
int peak_count(std::span<const double> density, double rel_prominence);
int peak_count(const ScalarField& field, double rel_prominence = 1e-3);
int peak_count(const SpinorField& field, double rel_prominence = 1e-3);

std::vector<double> density(const ScalarField& field);
std::vector<double> density(const SpinorField& field);

double rms_position(const ScalarField& field);
double rms_position(const SpinorField& field);
double mean_position(const SpinorField& field);

// int (|d_tau psi~|^2 + w^2 |psi~|^2) dk in the continuum normalization;
// conserved by evolve_kg.
double kg_invariant(const KGState& state);

} // namespace rqwave::diag
