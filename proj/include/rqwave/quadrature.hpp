#pragma once

#include <cmath>
#include <complex>
#include <queue>
#include <span>
#include <stdexcept>
#include <vector>

namespace rqwave::quad {

struct QuadratureSpec {
    double rel_tol = 1e-11;
    double abs_tol = 1e-300;
    int max_panels = 20000;
};

// Gauss-Legendre nodes/weights on [-1,1]. Generated once per order by Newton
// iteration on P_n, so there are no transcribed literals to get wrong.
struct GaussRule {
    std::vector<double> x, w;
};
const GaussRule& gauss_rule(int npoints);

namespace detail {

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

template <typename T, typename F>
T panel_estimate(F&& f, double a, double b, const GaussRule& rule)
{
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    T acc{};
    for (std::size_t i = 0; i < rule.x.size(); ++i)
        acc += static_cast<T>(f(mid + half * rule.x[i]) * (rule.w[i] * half));
    return acc;
}

} // namespace detail

// Globally adaptive integration over a list of seed panels: the panel with the
// largest G15-vs-G7 discrepancy is bisected until the estimated error is below
// max(abs_tol, rel_tol*|I|). Panel ordering is deterministic (ties broken by
// position), so results do not depend on thread count or scheduling.
template <typename T, typename F>
T integrate_panels(F&& f, std::span<const double> edges, const QuadratureSpec& spec = {})
{
    if (edges.size() < 2)
        throw std::invalid_argument("integrate_panels: need at least one panel");
    const GaussRule& g15 = gauss_rule(15);
    const GaussRule& g7 = gauss_rule(7);

    struct Panel {
        double err;
        double a, b;
        T value;
        bool operator<(const Panel& o) const
        {
            if (err != o.err) return err < o.err;
            return a > o.a;
        }
    };

    std::priority_queue<Panel> queue;
    T total{};
    double total_err = 0.0;
    auto push_panel = [&](double a, double b) {
        T v15 = detail::panel_estimate<T>(f, a, b, g15);
        T v7 = detail::panel_estimate<T>(f, a, b, g7);
        double err = detail::magnitude(v15 - v7);
        total += v15;
        total_err += err;
        queue.push(Panel{err, a, b, v15});
    };

    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        push_panel(edges[i], edges[i + 1]);

    int panels = static_cast<int>(edges.size()) - 1;
    while (true) {
        const double tol = std::max(spec.abs_tol, spec.rel_tol * detail::magnitude(total));
        if (total_err <= tol)
            break;
        if (panels >= spec.max_panels)
            throw std::runtime_error("quadrature failed to converge within panel budget");
        Panel worst = queue.top();
        queue.pop();
        total -= worst.value;
        total_err -= worst.err;
        const double mid = 0.5 * (worst.a + worst.b);
        push_panel(worst.a, mid);
        push_panel(mid, worst.b);
        ++panels;
    }
    return total;
}

template <typename T, typename F>
T integrate(F&& f, double a, double b, const QuadratureSpec& spec = {})
{
    const double edges[2] = {a, b};
    return integrate_panels<T>(f, edges, spec);
}

// Integral over the whole real line via x = tan(u); the integrand must decay
// at least like 1/x^2.
template <typename T, typename F>
T integrate_real_line(F&& f, const QuadratureSpec& spec = {})
{
    auto mapped = [&](double u) {
        const double c = std::cos(u);
        const double x = std::tan(u);
        return static_cast<T>(f(x) * (1.0 / (c * c)));
    };
    const double h = std::asin(1.0); // pi/2
    std::vector<double> edges;
    for (int i = -16; i <= 16; ++i)
        edges.push_back(h * (static_cast<double>(i) / 16.0));
    return integrate_panels<T>(mapped, edges, spec);
}

} // namespace rqwave::quad
