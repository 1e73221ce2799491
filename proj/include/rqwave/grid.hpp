#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rqwave/parallel.hpp"

namespace rqwave {

using cd = std::complex<double>;

// Uniform periodic lattice standing in for the real line. Position nodes are
// centered on 0 (xi[n/2] == 0 exactly); wavenumbers are stored in FFT order
// with spacing 2*pi/length.
struct Grid {
    int n_points = 0;
    double length = 0.0;
    double spacing = 0.0;
    std::vector<double> xi;
    std::vector<double> k;
};
using GridPtr = std::shared_ptr<const Grid>;

GridPtr make_grid(int n_points, double length);

struct ScalarField {
    GridPtr grid;
    std::vector<cd> values;
};

struct SpinorField {
    GridPtr grid;
    std::vector<cd> plus;
    std::vector<cd> minus;
};

// Unitary DFT in the centered coordinates: spec[m] = n^{-1/2} sum_j f[j]
// exp(-i k_m xi_j). Parseval holds exactly and inverse(forward(f)) == f to
// rounding. Spectra of real even fields come out real and even.
ScalarField forward_transform(const ScalarField& field);
ScalarField inverse_transform(const ScalarField& spectrum);
void forward_transform(const Grid& grid, std::vector<cd>& values);
void inverse_transform(const Grid& grid, std::vector<cd>& values);

double l2_norm(const ScalarField& field);   // sqrt(int |f|^2 dxi)
double l2_norm(const SpinorField& field);
double l1_norm(const ScalarField& field);   // int |f| dxi

// Pointwise construction helpers; evaluation is parallel across nodes.
ScalarField sample_field(const GridPtr& grid, const std::function<cd(double)>& f);
SpinorField sample_spinor(const GridPtr& grid,
                          const std::function<cd(double)>& plus,
                          const std::function<cd(double)>& minus);

// Position samples of a continuum momentum amplitude g(k):
// psi(xi_j) = (dk / sqrt(2 pi)) sum_m g(k_m) exp(i k_m xi_j),
// i.e. the Riemann sum of the inverse Fourier transform on the k lattice
// (equivalently, the periodization of the continuum field).
ScalarField synthesize_from_spectrum(const GridPtr& grid, const std::function<cd(double)>& g);

enum class PacketFamily {
    gaussian,
    macdonald,
    psi3,
    massless_cauchy,
    dirac_gaussian_both,
    dirac_macdonald,
};

struct PacketSpec {
    PacketFamily family = PacketFamily::gaussian;
    double beta = 1.0;                 // localization parameter
    double b = 1.0;                    // massless_cauchy scale
    cd weight_plus{1.0, 0.0};          // dirac_macdonald component weights
    cd weight_minus{0.0, 0.0};
    bool normalize = true;             // L2-normalize (scalar: closed-form constants)
};

// Non-fatal sampling advice: warns when grid.spacing exceeds beta/4 (b/4 for
// the massless family).
std::optional<std::string> resolution_warning(const PacketSpec& spec, const Grid& grid);

ScalarField make_scalar_packet(const PacketSpec& spec, const GridPtr& grid);
SpinorField make_dirac_packet(const PacketSpec& spec, const GridPtr& grid);
std::variant<ScalarField, SpinorField> make_packet(const PacketSpec& spec, const GridPtr& grid);

} // namespace rqwave
