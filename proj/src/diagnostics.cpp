#include "rqwave/diagnostics.hpp"

#include <cmath>
#include <numbers>

#include "rqwave/closed_forms.hpp"
#include "rqwave/specfun.hpp"

namespace rqwave::diag {

namespace {

double d2_of_density(const GridPtr& grid, std::vector<double> dens)
{
    const Grid& g = *grid;
    const int n = g.n_points;
    if (std::abs(g.xi[static_cast<std::size_t>(n / 2)]) > 1e-12)
        throw std::runtime_error("d2_origin: grid has no xi = 0 node");
    ScalarField u{grid, std::vector<cd>(static_cast<std::size_t>(n))};
    par::parallel_for(n, [&](std::int64_t j) {
        u.values[static_cast<std::size_t>(j)] = dens[static_cast<std::size_t>(j)];
    });
    forward_transform(g, u.values);
    const cd sum = par::block_sum<cd>(n, [&](std::int64_t m) {
        const auto i = static_cast<std::size_t>(m);
        return g.k[i] * g.k[i] * u.values[i];
    });
    return -sum.real() / std::sqrt(static_cast<double>(n));
}

} // namespace

std::vector<double> density(const ScalarField& field)
{
    std::vector<double> out(field.values.size());
    par::parallel_for(static_cast<std::int64_t>(out.size()), [&](std::int64_t i) {
        out[static_cast<std::size_t>(i)] = std::norm(field.values[static_cast<std::size_t>(i)]);
    });
    return out;
}

std::vector<double> density(const SpinorField& field)
{
    std::vector<double> out(field.plus.size());
    par::parallel_for(static_cast<std::int64_t>(out.size()), [&](std::int64_t i) {
        const auto j = static_cast<std::size_t>(i);
        out[j] = std::norm(field.plus[j]) + std::norm(field.minus[j]);
    });
    return out;
}

double d2_origin(const ScalarField& field)
{
    return d2_of_density(field.grid, density(field));
}

double d2_origin(const SpinorField& field)
{
    return d2_of_density(field.grid, density(field));
}

double d2_psi3_analytic(double beta, double tau)
{
    if (!(beta > 0.0))
        throw std::domain_error("d2_psi3_analytic: requires beta > 0");
    const double n_const = specfun::psi3_norm_constant(beta);
    const double bracket = tau * tau * (3.0 - 4.0 * beta) - beta * beta * (3.0 + 4.0 * beta);
    return n_const * n_const * std::exp(-2.0 * beta) *
           std::pow(beta * beta + tau * tau, -2.5) * bracket;
}

double critical_tau(double beta)
{
    if (!(beta > 0.0) || beta >= 0.75)
        throw std::domain_error("critical_tau: requires 0 < beta < 3/4");
    return std::sqrt(beta * beta * (3.0 + 4.0 * beta) / (3.0 - 4.0 * beta));
}

double critical_beta(CriticalFamily family, double tau, double beta_tol, GridPtr grid)
{
    if (!(tau > 0.0))
        throw std::domain_error("critical_beta: requires tau > 0");
    if (!grid)
        grid = make_grid(4096, 80.0);
    auto curvature = [&](double beta) {
        const ScalarField f = family == CriticalFamily::psi1
                                  ? closed_form::psi1_field(beta, tau, grid)
                                  : closed_form::psi2_field(beta, tau, grid);
        return d2_origin(f);
    };
    double lo = 0.01, hi = 10.0;
    double flo = curvature(lo), fhi = curvature(hi);
    if (flo == 0.0)
        return lo;
    if (fhi == 0.0)
        return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw NoRootError("critical_beta: no sign change on [0.01, 10]");
    while (hi - lo > beta_tol) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = curvature(mid);
        if (fmid == 0.0)
            return mid;
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

int peak_count(std::span<const double> density, double rel_prominence)
{
    const std::size_t n = density.size();
    if (n < 3)
        return 0;
    double peak_max = 0.0;
    for (double v : density)
        peak_max = std::max(peak_max, v);
    if (peak_max <= 0.0)
        return 0;
    const double min_prom = rel_prominence * peak_max;

    int count = 0;
    bool any_interior_max = false;
    std::size_t i = 1;
    while (i + 1 < n) {
        if (!(density[i] > density[i - 1])) {
            ++i;
            continue;
        }
        // climb onto a maximum or plateau
        std::size_t j = i;
        while (j + 1 < n && density[j + 1] == density[j])
            ++j;
        if (j + 1 < n && density[j + 1] > density[j]) {
            i = j + 1;
            continue; // plateau is a shoulder, keep climbing
        }
        any_interior_max = true;
        const double h = density[i];
        // prominence: lowest point until the next higher sample, on each side
        auto base = [&](std::int64_t from, std::int64_t step, std::int64_t end) {
            double lowest = h;
            for (std::int64_t p = from; p != end; p += step) {
                const double v = density[static_cast<std::size_t>(p)];
                if (v > h)
                    break;
                lowest = std::min(lowest, v);
            }
            return lowest;
        };
        const double left = base(static_cast<std::int64_t>(i) - 1, -1, -1);
        const double right = base(static_cast<std::int64_t>(j) + 1, 1, static_cast<std::int64_t>(n));
        if (h - std::max(left, right) >= min_prom)
            ++count;
        i = j + 1;
    }
    if (!any_interior_max)
        return 1; // constant or edge-monotone nonzero field
    return count;
}

int peak_count(const ScalarField& field, double rel_prominence)
{
    const auto d = density(field);
    return peak_count(std::span<const double>(d), rel_prominence);
}

int peak_count(const SpinorField& field, double rel_prominence)
{
    const auto d = density(field);
    return peak_count(std::span<const double>(d), rel_prominence);
}

namespace {

double rms_of_density(const Grid& g, std::span<const double> dens)
{
    const double m0 = par::block_sum<double>(g.n_points, [&](std::int64_t i) {
        return dens[static_cast<std::size_t>(i)];
    });
    const double m2 = par::block_sum<double>(g.n_points, [&](std::int64_t i) {
        const auto j = static_cast<std::size_t>(i);
        return g.xi[j] * g.xi[j] * dens[j];
    });
    return std::sqrt(m2 / m0);
}

} // namespace

double rms_position(const ScalarField& field)
{
    const auto d = density(field);
    return rms_of_density(*field.grid, d);
}

double rms_position(const SpinorField& field)
{
    const auto d = density(field);
    return rms_of_density(*field.grid, d);
}

double mean_position(const SpinorField& field)
{
    const auto d = density(field);
    const Grid& g = *field.grid;
    const double m0 = par::block_sum<double>(g.n_points, [&](std::int64_t i) {
        return d[static_cast<std::size_t>(i)];
    });
    const double m1 = par::block_sum<double>(g.n_points, [&](std::int64_t i) {
        const auto j = static_cast<std::size_t>(i);
        return g.xi[j] * d[j];
    });
    return m1 / m0;
}

double kg_invariant(const KGState& state)
{
    ScalarField s = forward_transform(state.psi);
    ScalarField sd = forward_transform(state.psi_dot);
    const Grid& g = *state.psi.grid;
    const double sum = par::block_sum<double>(g.n_points, [&](std::int64_t m) {
        const auto i = static_cast<std::size_t>(m);
        const double w2 = 1.0 + g.k[i] * g.k[i];
        return std::norm(sd.values[i]) + w2 * std::norm(s.values[i]);
    });
    // unitary-spectrum sum -> continuum int(...) dk equals spacing * sum
    return g.spacing * sum;
}

} // namespace rqwave::diag
