#include "rqwave/propagators.hpp"

#include <cmath>
#include <stdexcept>

#include "rqwave/specfun.hpp"

namespace rqwave {

namespace {

template <typename F>
ScalarField apply_multiplier(const ScalarField& field, F&& factor)
{
    ScalarField spec = forward_transform(field);
    const Grid& g = *spec.grid;
    par::parallel_for(g.n_points, [&](std::int64_t m) {
        const auto i = static_cast<std::size_t>(m);
        spec.values[i] *= factor(g.k[i]);
    });
    return inverse_transform(spec);
}

void check_pair(const ScalarField& a, const ScalarField& b)
{
    if (a.grid != b.grid && (!a.grid || !b.grid || a.grid->n_points != b.grid->n_points ||
                             a.grid->length != b.grid->length))
        throw std::invalid_argument("fields must share a grid");
}

} // namespace

ScalarField evolve_heat_nonrel(const ScalarField& field, double tau)
{
    if (!(tau >= 0.0))
        throw std::invalid_argument("evolve_heat_nonrel: requires tau >= 0");
    return apply_multiplier(field, [=](double k) -> cd { return std::exp(-tau * k * k); });
}

ScalarField evolve_heat_rel(const ScalarField& field, double tau)
{
    if (!(tau >= 0.0))
        throw std::invalid_argument("evolve_heat_rel: requires tau >= 0");
    return apply_multiplier(field, [=](double k) -> cd { return std::exp(-tau * omega(k)); });
}

ScalarField evolve_heat_rel_subordinated(const ScalarField& field, double tau,
                                         const quad::QuadratureSpec& spec)
{
    if (!(tau > 0.0))
        throw std::invalid_argument("evolve_heat_rel_subordinated: requires tau > 0");
    return apply_multiplier(field, [=](double k) -> cd {
        const double w = omega(k);
        return specfun::levy_half_laplace(tau * tau * w * w, spec);
    });
}

ScalarField evolve_salpeter(const ScalarField& field, double tau, bool massless)
{
    return apply_multiplier(field, [=](double k) -> cd {
        const double w = massless ? std::abs(k) : omega(k);
        return std::polar(1.0, -tau * w);
    });
}

SpinorField evolve_dirac(const SpinorField& state, double tau)
{
    SpinorField out{state.grid, state.plus, state.minus};
    const Grid& g = *state.grid;
    forward_transform(g, out.plus);
    forward_transform(g, out.minus);
    par::parallel_for(g.n_points, [&](std::int64_t m) {
        const auto i = static_cast<std::size_t>(m);
        const double k = g.k[i];
        const double w = omega(k);
        const cd ia(0.0, std::sin(w * tau) / w);
        const double b = std::cos(w * tau);
        const cd p = out.plus[i];
        const cd q = out.minus[i];
        out.plus[i] = ia * (p + k * q) + b * p;
        out.minus[i] = ia * (k * p - q) + b * q;
    });
    inverse_transform(g, out.plus);
    inverse_transform(g, out.minus);
    return out;
}

KGState evolve_kg(const KGState& state, double tau)
{
    check_pair(state.psi, state.psi_dot);
    KGState out{ScalarField{state.psi.grid, state.psi.values},
                ScalarField{state.psi.grid, state.psi_dot.values}};
    const Grid& g = *state.psi.grid;
    forward_transform(g, out.psi.values);
    forward_transform(g, out.psi_dot.values);
    par::parallel_for(g.n_points, [&](std::int64_t m) {
        const auto i = static_cast<std::size_t>(m);
        const double w = omega(g.k[i]);
        const double c = std::cos(w * tau);
        const double s = std::sin(w * tau);
        const cd a = out.psi.values[i];
        const cd b = out.psi_dot.values[i];
        out.psi.values[i] = c * a + s / w * b;
        out.psi_dot.values[i] = -w * s * a + c * b;
    });
    inverse_transform(g, out.psi.values);
    inverse_transform(g, out.psi_dot.values);
    return out;
}

ScalarField kg_from_salpeter(const ScalarField& psi0, const ScalarField& psi1, double tau)
{
    check_pair(psi0, psi1);
    ScalarField s0 = forward_transform(psi0);
    ScalarField s1 = forward_transform(psi1);
    const Grid& g = *psi0.grid;
    par::parallel_for(g.n_points, [&](std::int64_t m) {
        const auto i = static_cast<std::size_t>(m);
        const double w = omega(g.k[i]);
        const cd c1 = 0.5 * (s0.values[i] - cd(0.0, 1.0) / w * s1.values[i]);
        const cd c2 = 0.5 * (s0.values[i] + cd(0.0, 1.0) / w * s1.values[i]);
        s0.values[i] = std::polar(1.0, w * tau) * c1 + std::polar(1.0, -w * tau) * c2;
    });
    return inverse_transform(s0);
}

SpinorField project_positive_energy(const SpinorField& state)
{
    SpinorField out{state.grid, state.plus, state.minus};
    const Grid& g = *state.grid;
    forward_transform(g, out.plus);
    forward_transform(g, out.minus);
    par::parallel_for(g.n_points, [&](std::int64_t m) {
        const auto i = static_cast<std::size_t>(m);
        const double k = g.k[i];
        const double w = omega(k);
        const cd p = out.plus[i];
        const cd q = out.minus[i];
        // 1/2 (1 + H/w) with H = [[1, k], [k, -1]]
        out.plus[i] = 0.5 * ((1.0 + 1.0 / w) * p + k / w * q);
        out.minus[i] = 0.5 * (k / w * p + (1.0 - 1.0 / w) * q);
    });
    inverse_transform(g, out.plus);
    inverse_transform(g, out.minus);
    return out;
}

} // namespace rqwave
