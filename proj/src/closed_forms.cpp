#include "rqwave/closed_forms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rqwave/specfun.hpp"

namespace rqwave::closed_form {

namespace {

constexpr double kPi = std::numbers::pi;

void require_beta(double beta)
{
    if (!(beta > 0.0))
        throw std::domain_error("closed_form: requires beta > 0");
}

// Panel seeds for int_0^K h(k) cos/exp(i phase(k)) dk with phase rate
// bounded by |tau| + |xi|.
std::vector<double> oscillation_edges(double k_max, double rate)
{
    const int panels = std::min(4096, std::max(8, static_cast<int>(k_max * rate / 4.0) + 1));
    std::vector<double> edges(static_cast<std::size_t>(panels) + 1);
    for (int i = 0; i <= panels; ++i)
        edges[static_cast<std::size_t>(i)] = k_max * i / panels;
    return edges;
}

} // namespace

double f1(double beta, double xi, double tau, const quad::QuadratureSpec& spec)
{
    require_beta(beta);
    if (!(tau >= 0.0))
        throw std::domain_error("f1: requires tau >= 0");
    const double k_max = std::sqrt(42.0 / beta);
    auto integrand = [=](double k) {
        const double w = std::sqrt(1.0 + k * k);
        return std::exp(-beta * k * k - tau * w) * std::cos(k * xi);
    };
    const auto edges = oscillation_edges(k_max, std::abs(xi));
    return quad::integrate_panels<double>(integrand, edges, spec) / kPi;
}

double f2(double beta, double xi, double tau)
{
    require_beta(beta);
    const double s = beta + tau;
    const double r = std::sqrt(s * s + xi * xi);
    return s / (2.0 * specfun::bessel_k(1, beta)) * specfun::bessel_k(1, r) / r;
}

std::complex<double> psi1(double beta, double xi, double tau, const quad::QuadratureSpec& spec)
{
    require_beta(beta);
    const double k_max = std::sqrt(42.0 / beta);
    auto integrand = [=](double q) -> cd {
        const double w = std::sqrt(1.0 + q * q);
        return std::exp(-beta * q * q) * std::polar(1.0, -tau * w) * std::cos(q * xi);
    };
    const auto edges = oscillation_edges(k_max, std::abs(tau) + std::abs(xi));
    const cd integral = 2.0 * quad::integrate_panels<cd>(integrand, edges, spec);
    const double n_const = std::pow(2.0 * beta / kPi, 0.25);
    return n_const / std::sqrt(2.0 * kPi) * integral;
}

std::complex<double> psi2(double beta, double xi, double tau)
{
    require_beta(beta);
    const cd a(beta, tau);
    const cd c = std::sqrt(a * a + xi * xi);
    return a / std::sqrt(kPi * specfun::bessel_k(1, 2.0 * beta)) * specfun::bessel_k(1, c) / c;
}

std::complex<double> psi3(double beta, double xi, double tau)
{
    require_beta(beta);
    const cd a(beta, tau);
    const cd s = std::sqrt(a * a + xi * xi);
    return specfun::psi3_norm_constant(beta) * std::sqrt(s + a) * std::exp(-s) / s;
}

std::complex<double> massless(double b, double x, double t)
{
    if (!(b > 0.0))
        throw std::domain_error("massless: requires b > 0");
    const cd bt(b, t);
    return std::sqrt(2.0 * b / kPi) * bt / (bt * bt + x * x);
}

double massless_rms(double b, double t, const quad::QuadratureSpec& spec)
{
    auto abs2 = [=](double x) { return std::norm(massless(b, x, t)); };
    const double m0 = quad::integrate_real_line<double>(abs2, spec);
    const double m2 = quad::integrate_real_line<double>([&](double x) { return x * x * abs2(x); }, spec);
    return std::sqrt(m2 / m0);
}

std::pair<std::complex<double>, std::complex<double>>
dirac_macdonald(double beta, double xi, double tau)
{
    require_beta(beta);
    const cd a(beta, tau);
    const cd c = std::sqrt(a * a + xi * xi);
    const cd k0 = specfun::bessel_k(0, c);
    const cd k1 = specfun::bessel_k(1, c);
    const cd k0s = std::conj(k0);
    const cd k1s = std::conj(k1);
    const cd cs = std::conj(c);
    const double inv = 1.0 / std::sqrt(2.0 * kPi);
    const cd plus = inv * (k0s + std::conj(a) / cs * k1s - k0 + a / c * k1);
    const cd minus = cd(0.0, -1.0) * inv * (xi / c * k1 - xi / cs * k1s);
    return {plus, minus};
}

std::complex<double> kg_macdonald(double beta, double xi, double tau)
{
    require_beta(beta);
    const cd a(beta, tau);
    const cd c = std::sqrt(a * a + xi * xi);
    const cd half = a / c * specfun::bessel_k(1, c);
    return (half + std::conj(half)) / std::sqrt(2.0 * kPi);
}

ScalarField f1_field(double beta, double tau, const GridPtr& grid)
{
    require_beta(beta);
    return synthesize_from_spectrum(grid, [=](double k) -> cd {
        const double w = std::sqrt(1.0 + k * k);
        return std::exp(-beta * k * k - tau * w);
    });
}

ScalarField f2_field(double beta, double tau, const GridPtr& grid)
{
    return sample_field(grid, [=](double xi) -> cd { return f2(beta, xi, tau); });
}

ScalarField psi1_field(double beta, double tau, const GridPtr& grid)
{
    require_beta(beta);
    const double n_const = std::pow(2.0 * beta / kPi, 0.25);
    return synthesize_from_spectrum(grid, [=](double q) -> cd {
        const double w = std::sqrt(1.0 + q * q);
        return n_const * std::exp(-beta * q * q) * std::polar(1.0, -tau * w);
    });
}

ScalarField psi2_field(double beta, double tau, const GridPtr& grid)
{
    return sample_field(grid, [=](double xi) -> cd { return psi2(beta, xi, tau); });
}

ScalarField psi3_field(double beta, double tau, const GridPtr& grid)
{
    return sample_field(grid, [=](double xi) -> cd { return psi3(beta, xi, tau); });
}

ScalarField massless_field(double b, double t, const GridPtr& grid)
{
    return sample_field(grid, [=](double x) -> cd { return massless(b, x, t); });
}

SpinorField dirac_macdonald_field(double beta, double tau, const GridPtr& grid)
{
    SpinorField out{grid,
                    std::vector<cd>(static_cast<std::size_t>(grid->n_points)),
                    std::vector<cd>(static_cast<std::size_t>(grid->n_points))};
    par::parallel_for(grid->n_points, [&](std::int64_t j) {
        const auto i = static_cast<std::size_t>(j);
        const auto [p, m] = dirac_macdonald(beta, grid->xi[i], tau);
        out.plus[i] = p;
        out.minus[i] = m;
    });
    return out;
}

ScalarField kg_macdonald_field(double beta, double tau, const GridPtr& grid)
{
    return sample_field(grid, [=](double xi) -> cd { return kg_macdonald(beta, xi, tau); });
}

} // namespace rqwave::closed_form
