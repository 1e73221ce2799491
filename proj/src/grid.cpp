#include "rqwave/grid.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include <fftw3.h>

#include "rqwave/specfun.hpp"

namespace rqwave {

namespace {

// FFTW plans are cached per (size, direction). Plan creation is serialized
// (the FFTW planner is not thread-safe); execution via fftw_execute_dft is.
fftw_plan cached_plan(int n, int sign)
{
    static std::mutex mtx;
    static std::map<std::pair<int, int>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(n, sign);
    auto it = cache.find(key);
    if (it == cache.end()) {
        fftw_complex* buf = fftw_alloc_complex(static_cast<std::size_t>(n));
        fftw_plan plan = fftw_plan_dft_1d(n, buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(buf);
        it = cache.emplace(key, plan).first;
    }
    return it->second;
}

void dft_inplace(std::vector<cd>& v, int sign)
{
    fftw_plan plan = cached_plan(static_cast<int>(v.size()), sign);
    auto* data = reinterpret_cast<fftw_complex*>(v.data());
    fftw_execute_dft(plan, data, data);
}

void check_field(const ScalarField& f)
{
    if (!f.grid || f.values.size() != static_cast<std::size_t>(f.grid->n_points))
        throw std::invalid_argument("field size does not match its grid");
}

} // namespace

GridPtr make_grid(int n_points, double length)
{
    if (n_points < 16 || !std::has_single_bit(static_cast<unsigned>(n_points)))
        throw std::invalid_argument("make_grid: n_points must be a power of two >= 16");
    if (!(length > 0.0))
        throw std::invalid_argument("make_grid: length must be positive");

    auto g = std::make_shared<Grid>();
    g->n_points = n_points;
    g->length = length;
    g->spacing = length / n_points;
    g->xi.resize(static_cast<std::size_t>(n_points));
    g->k.resize(static_cast<std::size_t>(n_points));
    const double dk = 2.0 * std::numbers::pi / length;
    for (int j = 0; j < n_points; ++j) {
        g->xi[static_cast<std::size_t>(j)] = (j - n_points / 2) * g->spacing;
        const int s = j < n_points / 2 ? j : j - n_points;
        g->k[static_cast<std::size_t>(j)] = dk * s;
    }
    return g;
}

void forward_transform(const Grid& grid, std::vector<cd>& values)
{
    if (values.size() != static_cast<std::size_t>(grid.n_points))
        throw std::invalid_argument("forward_transform: size mismatch");
    dft_inplace(values, FFTW_FORWARD);
    const double scale = 1.0 / std::sqrt(static_cast<double>(grid.n_points));
    par::parallel_for(grid.n_points, [&](std::int64_t m) {
        values[static_cast<std::size_t>(m)] *= (m % 2 == 0 ? scale : -scale);
    });
}

void inverse_transform(const Grid& grid, std::vector<cd>& values)
{
    if (values.size() != static_cast<std::size_t>(grid.n_points))
        throw std::invalid_argument("inverse_transform: size mismatch");
    const double scale = 1.0 / std::sqrt(static_cast<double>(grid.n_points));
    par::parallel_for(grid.n_points, [&](std::int64_t m) {
        values[static_cast<std::size_t>(m)] *= (m % 2 == 0 ? scale : -scale);
    });
    dft_inplace(values, FFTW_BACKWARD);
}

ScalarField forward_transform(const ScalarField& field)
{
    check_field(field);
    ScalarField out{field.grid, field.values};
    forward_transform(*field.grid, out.values);
    return out;
}

ScalarField inverse_transform(const ScalarField& spectrum)
{
    check_field(spectrum);
    ScalarField out{spectrum.grid, spectrum.values};
    inverse_transform(*spectrum.grid, out.values);
    return out;
}

double l2_norm(const ScalarField& field)
{
    check_field(field);
    const double s = par::block_sum<double>(field.grid->n_points, [&](std::int64_t i) {
        return std::norm(field.values[static_cast<std::size_t>(i)]);
    });
    return std::sqrt(s * field.grid->spacing);
}

double l2_norm(const SpinorField& field)
{
    const double s = par::block_sum<double>(field.grid->n_points, [&](std::int64_t i) {
        const auto j = static_cast<std::size_t>(i);
        return std::norm(field.plus[j]) + std::norm(field.minus[j]);
    });
    return std::sqrt(s * field.grid->spacing);
}

double l1_norm(const ScalarField& field)
{
    check_field(field);
    const double s = par::block_sum<double>(field.grid->n_points, [&](std::int64_t i) {
        return std::abs(field.values[static_cast<std::size_t>(i)]);
    });
    return s * field.grid->spacing;
}

ScalarField sample_field(const GridPtr& grid, const std::function<cd(double)>& f)
{
    ScalarField out{grid, std::vector<cd>(static_cast<std::size_t>(grid->n_points))};
    par::parallel_for(grid->n_points, [&](std::int64_t j) {
        out.values[static_cast<std::size_t>(j)] = f(grid->xi[static_cast<std::size_t>(j)]);
    });
    return out;
}

SpinorField sample_spinor(const GridPtr& grid,
                          const std::function<cd(double)>& plus,
                          const std::function<cd(double)>& minus)
{
    SpinorField out{grid,
                    std::vector<cd>(static_cast<std::size_t>(grid->n_points)),
                    std::vector<cd>(static_cast<std::size_t>(grid->n_points))};
    par::parallel_for(grid->n_points, [&](std::int64_t j) {
        const auto i = static_cast<std::size_t>(j);
        out.plus[i] = plus(grid->xi[i]);
        out.minus[i] = minus(grid->xi[i]);
    });
    return out;
}

ScalarField synthesize_from_spectrum(const GridPtr& grid, const std::function<cd(double)>& g)
{
    ScalarField spec{grid, std::vector<cd>(static_cast<std::size_t>(grid->n_points))};
    par::parallel_for(grid->n_points, [&](std::int64_t m) {
        spec.values[static_cast<std::size_t>(m)] = g(grid->k[static_cast<std::size_t>(m)]);
    });
    // psi_j = (dk/sqrt(2 pi)) sum_m g_m e^{i k_m xi_j}
    //       = inverse_transform(g) * sqrt(n) * dk / sqrt(2 pi)
    ScalarField out = inverse_transform(spec);
    const double dk = 2.0 * std::numbers::pi / grid->length;
    const double scale = std::sqrt(static_cast<double>(grid->n_points)) * dk /
                         std::sqrt(2.0 * std::numbers::pi);
    par::parallel_for(grid->n_points, [&](std::int64_t j) {
        out.values[static_cast<std::size_t>(j)] *= scale;
    });
    return out;
}

std::optional<std::string> resolution_warning(const PacketSpec& spec, const Grid& grid)
{
    const double scale = spec.family == PacketFamily::massless_cauchy ? spec.b : spec.beta;
    if (grid.spacing > scale / 4.0) {
        return "grid spacing " + std::to_string(grid.spacing) +
               " exceeds packet scale/4 = " + std::to_string(scale / 4.0) +
               "; packet may be under-resolved";
    }
    return std::nullopt;
}

ScalarField make_scalar_packet(const PacketSpec& spec, const GridPtr& grid)
{
    const double beta = spec.beta;
    if (!(beta > 0.0) || !(spec.b > 0.0))
        throw std::invalid_argument("make_scalar_packet: beta and b must be positive");

    switch (spec.family) {
    case PacketFamily::gaussian: {
        // raw: (2 sqrt(pi beta))^{-1} exp(-xi^2/(4 beta)); normalized:
        // (2 pi beta)^{-1/4} exp(-xi^2/(4 beta)).
        const double amp = spec.normalize
                               ? std::pow(2.0 * std::numbers::pi * beta, -0.25)
                               : 0.5 / std::sqrt(std::numbers::pi * beta);
        return sample_field(grid, [=](double xi) -> cd {
            return amp * std::exp(-xi * xi / (4.0 * beta));
        });
    }
    case PacketFamily::macdonald: {
        // raw: beta/(2 K1(beta)) * K1(r)/r with r = sqrt(beta^2 + xi^2)
        // (value 1/2 at the origin); normalized uses beta/sqrt(pi K1(2 beta)).
        const double amp = spec.normalize
                               ? beta / std::sqrt(std::numbers::pi * specfun::bessel_k(1, 2.0 * beta))
                               : 0.5 * beta / specfun::bessel_k(1, beta);
        return sample_field(grid, [=](double xi) -> cd {
            const double r = std::sqrt(beta * beta + xi * xi);
            return amp * specfun::bessel_k(1, r) / r;
        });
    }
    case PacketFamily::psi3: {
        // N (sqrt(beta^2+xi^2) + beta)^{1/2} exp(-sqrt(beta^2+xi^2)) / sqrt(beta^2+xi^2);
        // normalized by construction.
        const double n_const = specfun::psi3_norm_constant(beta);
        return sample_field(grid, [=](double xi) -> cd {
            const double s = std::sqrt(beta * beta + xi * xi);
            return n_const * std::sqrt(s + beta) * std::exp(-s) / s;
        });
    }
    case PacketFamily::massless_cauchy: {
        const double b = spec.b;
        const double amp = std::sqrt(2.0 * b / std::numbers::pi);
        return sample_field(grid, [=](double x) -> cd {
            return amp * b / (b * b + x * x);
        });
    }
    default:
        throw std::invalid_argument("make_scalar_packet: family is not scalar");
    }
}

SpinorField make_dirac_packet(const PacketSpec& spec, const GridPtr& grid)
{
    const double beta = spec.beta;
    if (!(beta > 0.0))
        throw std::invalid_argument("make_dirac_packet: beta must be positive");

    SpinorField out;
    switch (spec.family) {
    case PacketFamily::dirac_gaussian_both: {
        // momentum amplitude exp(-beta k^2) on both components:
        // psi_pm(xi) = exp(-xi^2/(4 beta)) / sqrt(2 beta)
        const double amp = 1.0 / std::sqrt(2.0 * beta);
        auto f = [=](double xi) -> cd { return amp * std::exp(-xi * xi / (4.0 * beta)); };
        out = sample_spinor(grid, f, f);
        break;
    }
    case PacketFamily::dirac_macdonald: {
        // momentum amplitude exp(-beta sqrt(1+k^2)) (w+, w-):
        // position profile sqrt(2/pi) beta K1(r)/r times the weights
        const cd wp = spec.weight_plus, wm = spec.weight_minus;
        auto profile = [=](double xi) {
            const double r = std::sqrt(beta * beta + xi * xi);
            return std::sqrt(2.0 / std::numbers::pi) * beta * specfun::bessel_k(1, r) / r;
        };
        out = sample_spinor(
            grid, [=](double xi) -> cd { return wp * profile(xi); },
            [=](double xi) -> cd { return wm * profile(xi); });
        break;
    }
    default:
        throw std::invalid_argument("make_dirac_packet: family is not a Dirac family");
    }
    if (spec.normalize) {
        const double nrm = l2_norm(out);
        if (nrm > 0.0) {
            par::parallel_for(grid->n_points, [&](std::int64_t j) {
                const auto i = static_cast<std::size_t>(j);
                out.plus[i] /= nrm;
                out.minus[i] /= nrm;
            });
        }
    }
    return out;
}

std::variant<ScalarField, SpinorField> make_packet(const PacketSpec& spec, const GridPtr& grid)
{
    switch (spec.family) {
    case PacketFamily::dirac_gaussian_both:
    case PacketFamily::dirac_macdonald:
        return make_dirac_packet(spec, grid);
    default:
        return make_scalar_packet(spec, grid);
    }
}

} // namespace rqwave
