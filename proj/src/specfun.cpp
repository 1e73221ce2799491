#include "rqwave/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace rqwave::specfun {

namespace {

constexpr double kTailLog = 45.0; // exp(-45) ~ 3e-20 below the integrand peak

// Upper limit T with Re z * (cosh T - 1) + ... large enough that the truncated
// tail is negligible relative to the integrand scale exp(-Re z).
double truncation_point(double re_z)
{
    double ch = 1.0 + (kTailLog + 2.0) / re_z;
    for (int i = 0; i < 4; ++i)
        ch = 1.0 + (kTailLog + 2.0 + std::log(ch)) / re_z;
    return std::acosh(ch);
}

// Panel seeds resolving the oscillation of exp(-i Im z cosh t).
std::vector<double> seed_edges(std::complex<double> z, double t_max)
{
    std::vector<double> edges;
    edges.push_back(0.0);
    const double im = std::abs(z.imag());
    double t = 0.0;
    while (t < t_max) {
        double next = t + 0.5;
        if (im > 0.0) {
            const double step_ch = 6.0 / im; // ~one oscillation per panel
            next = std::min(next, std::acosh(std::cosh(t) + step_ch));
        }
        t = std::min(next, t_max);
        edges.push_back(t);
    }
    return edges;
}

} // namespace

std::complex<double> bessel_k(int order, std::complex<double> z)
{
    if (order != 0 && order != 1)
        throw std::domain_error("bessel_k: order must be 0 or 1");
    if (!(z.real() > 0.0))
        throw std::domain_error("bessel_k: requires Re z > 0");

    const double t_max = truncation_point(z.real());
    const auto edges = seed_edges(z, t_max);
    quad::QuadratureSpec spec;
    spec.rel_tol = 5e-13;
    auto integrand = [&](double t) -> std::complex<double> {
        const double ch = std::cosh(t);
        const std::complex<double> e = std::exp(-z * ch);
        return order == 0 ? e : e * ch;
    };
    const std::complex<double> result =
        quad::integrate_panels<std::complex<double>>(integrand, edges, spec);
    if (!std::isfinite(result.real()) || !std::isfinite(result.imag()))
        throw std::runtime_error("bessel_k: non-finite result");
    return result;
}

double bessel_k(int order, double x)
{
    return bessel_k(order, std::complex<double>(x, 0.0)).real();
}

double struve_l(int order, double x)
{
    if (order != 0 && order != -1)
        throw std::domain_error("struve_l: order must be -1 or 0");
    if (!(x > 0.0))
        throw std::domain_error("struve_l: requires x > 0");

    const double q = 0.25 * x * x; // (x/2)^2
    // term_0 = (x/2)^{nu+1} / (Gamma(3/2) Gamma(nu+3/2))
    double term = order == 0 ? (2.0 * x / std::numbers::pi)
                             : 2.0 / std::numbers::pi;
    double sum = term;
    for (int m = 0; m < 500; ++m) {
        term *= q / ((m + 1.5) * (m + order + 1.5));
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum))
            break;
    }
    return sum;
}

double levy_half(double eta)
{
    if (!(eta > 0.0))
        throw std::domain_error("levy_half: requires eta > 0");
    return std::exp(-0.25 / eta) / (2.0 * std::sqrt(std::numbers::pi) * std::pow(eta, 1.5));
}

double psi3_norm_constant(double beta)
{
    if (!(beta > 0.0))
        throw std::domain_error("psi3_norm_constant: requires beta > 0");
    const double x = 2.0 * beta;
    const double k0 = bessel_k(0, x);
    const double k1 = bessel_k(1, x);
    const double bracket = k0 + 0.5 * std::numbers::pi -
                           std::numbers::pi * beta * (k0 * struve_l(-1, x) + k1 * struve_l(0, x));
    return 1.0 / std::sqrt(2.0 * bracket);
}

double levy_half_laplace(double p, const quad::QuadratureSpec& spec)
{
    if (!(p >= 0.0))
        throw std::domain_error("levy_half_laplace: requires p >= 0");
    // eta = u^2:  (1/sqrt(pi)) int u^{-2} exp(-1/(4u^2) - p u^2) du.
    // The exponent peaks at u* = (4p)^{-1/4} with value -sqrt(p); integrate
    // where it stays within kTailLog of the peak.
    double u_lo, u_hi, u_peak;
    if (p > 0.0) {
        const double e = std::sqrt(p) + kTailLog;
        const double disc = std::sqrt(std::max(e * e - p, 0.0));
        u_lo = std::sqrt((e - disc) / (2.0 * p));
        u_hi = std::sqrt((e + disc) / (2.0 * p));
        u_peak = std::pow(4.0 * p, -0.25);
    } else {
        u_lo = 0.5 / std::sqrt(kTailLog);
        u_hi = 1e9; // tail integral of u^{-2} from here: ~1e-9 relative
        u_peak = 1.0;
    }
    const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
    auto integrand = [&](double u) {
        return inv_sqrt_pi * std::exp(-0.25 / (u * u) - p * u * u) / (u * u);
    };
    // Geometric seed panels handle the wide dynamic range at small p.
    std::vector<double> edges;
    edges.push_back(u_lo);
    double t = std::max(u_lo, std::min(u_peak, u_hi));
    if (t > u_lo)
        edges.push_back(t);
    while (t < u_hi) {
        t = std::min(t * 2.0, u_hi);
        edges.push_back(t);
    }
    quad::QuadratureSpec s = spec;
    s.rel_tol = std::min(spec.rel_tol, 1e-10);
    return quad::integrate_panels<double>(integrand, edges, s);
}

} // namespace rqwave::specfun
