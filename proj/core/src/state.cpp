#include "peq/state.hpp"

#include <cmath>
#include <random>

#include "peq/errors.hpp"

namespace peq {

namespace {

// Reflect one 3D scalar across the side walls: sx/sy = +1 even, -1 odd.
void fill_side_ghosts(Field3& f, double sx, double sy) {
    const int nx = f.nx(), ny = f.ny(), nz = f.nz();
    for (int k = 0; k < nz; ++k) {
        for (int j = 0; j < ny; ++j) {
            f(-1, j, k) = sx * f(0, j, k);
            f(nx, j, k) = sx * f(nx - 1, j, k);
        }
        for (int i = 0; i < nx; ++i) {
            f(i, -1, k) = sy * f(i, 0, k);
            f(i, ny, k) = sy * f(i, ny - 1, k);
        }
    }
}

void fill_z_ghosts(Field3& f, double s_bottom, double s_top) {
    const int nx = f.nx(), ny = f.ny(), nz = f.nz();
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            f(i, j, -1) = s_bottom * f(i, j, 0);
            f(i, j, nz) = s_top * f(i, j, nz - 1);
        }
}

} // namespace

void fill_velocity_ghosts(Field3& v1, Field3& v2) {
    fill_side_ghosts(v1, -1.0, 1.0);
    fill_side_ghosts(v2, 1.0, -1.0);
    fill_z_ghosts(v1, 1.0, 1.0);
    fill_z_ghosts(v2, 1.0, 1.0);
}

void apply_bcs_velocity(State& s, const Grid& g) {
    (void)g;
    fill_velocity_ghosts(s.v1, s.v2);
}

void fill_temperature_ghosts(Field3& T, double alpha, double dz) {
    fill_side_ghosts(T, 1.0, 1.0);
    // Robin fill is exact for fields linear in z across the top face.
    const double a = 0.5 * alpha * dz;
    const double r = (1.0 - a) / (1.0 + a);
    fill_z_ghosts(T, 1.0, r);
}

void apply_bcs_temperature(State& s, const Params& p, const Grid& g) {
    fill_temperature_ghosts(s.T, p.alpha, g.dz);
}

void fill_even_ghosts(Field2& f) {
    const int nx = f.nx(), ny = f.ny();
    for (int j = 0; j < ny; ++j) {
        f(-1, j) = f(0, j);
        f(nx, j) = f(nx - 1, j);
    }
    for (int i = 0; i < nx; ++i) {
        f(i, -1) = f(i, 0);
        f(i, ny) = f(i, ny - 1);
    }
}

void fill_velocity_ghosts2(VecField2& v) {
    const int nx = v.x.nx(), ny = v.x.ny();
    for (int j = 0; j < ny; ++j) {
        v.x(-1, j) = -v.x(0, j);
        v.x(nx, j) = -v.x(nx - 1, j);
        v.y(-1, j) = v.y(0, j);
        v.y(nx, j) = v.y(nx - 1, j);
    }
    for (int i = 0; i < nx; ++i) {
        v.x(i, -1) = v.x(i, 0);
        v.x(i, ny) = v.x(i, ny - 1);
        v.y(i, -1) = -v.y(i, 0);
        v.y(i, ny) = -v.y(i, ny - 1);
    }
}

double robin_wavenumber(double alpha, double h, int branch) {
    if (!(alpha > 0.0) || !(h > 0.0) || branch < 1)
        throw ConfigError("robin_wavenumber: need alpha > 0, h > 0, branch >= 1");
    // Root of f(nu) = nu*tan(nu*h) - alpha on ((m-1)pi/h, (m-1/2)pi/h),
    // where f runs from -alpha (or 0) to +inf; bisection is safe.
    const double pi = 4.0 * std::atan(1.0);
    double lo = (branch - 1) * pi / h + 1e-12;
    double hi = (branch - 0.5) * pi / h - 1e-12;
    auto f = [&](double nu) { return nu * std::tan(nu * h) - alpha; };
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) > 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

State make_smooth_state(const Domain& d, const Grid& g, const Params& p,
                        uint64_t seed, double amplitude) {
    State s(g.nx, g.ny, g.nz);
    const double pi = 4.0 * std::atan(1.0);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);

    // Barotropic part from a streamfunction, differenced with the same
    // centered stencils as the operators so that the depth-averaged
    // divergence vanishes to roundoff (discrete mixed partials commute).
    {
        const int modes = 2;
        double coef[modes][modes];
        for (int a = 0; a < modes; ++a)
            for (int b = 0; b < modes; ++b)
                coef[a][b] = unif(rng) * amplitude / (1.0 + a * a + b * b);

        auto psi = [&](double x, double y) {
            double v = 0.0;
            for (int a = 0; a < modes; ++a)
                for (int b = 0; b < modes; ++b)
                    v += coef[a][b] * std::sin((a + 1) * pi * x / d.Lx) *
                         std::sin((b + 1) * pi * y / d.Ly);
            return v;
        };
        for (int k = 0; k < g.nz; ++k)
            for (int j = 0; j < g.ny; ++j)
                for (int i = 0; i < g.nx; ++i) {
                    const double x = g.x(i), y = g.y(j);
                    s.v1(i, j, k) += (psi(x, y + g.dy) - psi(x, y - g.dy)) / (2.0 * g.dy);
                    s.v2(i, j, k) -= (psi(x + g.dx, y) - psi(x - g.dx, y)) / (2.0 * g.dx);
                }
    }

    // Baroclinic velocity modes: vertical cosines with integer half-period
    // count have exactly zero column mean under midpoint sums.
    {
        const int modes = 2;
        for (int a = 1; a <= modes; ++a)
            for (int b = 1; b <= modes; ++b)
                for (int m = 1; m <= modes; ++m) {
                    const double c1 = unif(rng) * amplitude / (a * a + b * b + m * m);
                    const double c2 = unif(rng) * amplitude / (a * a + b * b + m * m);
                    for (int k = 0; k < g.nz; ++k) {
                        const double cz = std::cos(m * pi * (g.z(k, d.h) + d.h) / d.h);
                        for (int j = 0; j < g.ny; ++j)
                            for (int i = 0; i < g.nx; ++i) {
                                const double x = g.x(i), y = g.y(j);
                                s.v1(i, j, k) += c1 * std::sin(a * pi * x / d.Lx) *
                                                 std::cos(b * pi * y / d.Ly) * cz;
                                s.v2(i, j, k) += c2 * std::cos(a * pi * x / d.Lx) *
                                                 std::sin(b * pi * y / d.Ly) * cz;
                            }
                    }
                }
    }

    // Temperature: horizontal cosines times Robin-exact vertical profiles.
    {
        const double nu1 = robin_wavenumber(p.alpha, d.h, 1);
        const double nu2 = robin_wavenumber(p.alpha, d.h, 2);
        const double nus[2] = {nu1, nu2};
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b)
                for (int m = 0; m < 2; ++m) {
                    const double c = unif(rng) * amplitude / (1.0 + a * a + b * b + m * m);
                    for (int k = 0; k < g.nz; ++k) {
                        const double rz = std::cos(nus[m] * (g.z(k, d.h) + d.h));
                        for (int j = 0; j < g.ny; ++j)
                            for (int i = 0; i < g.nx; ++i)
                                s.T(i, j, k) += c * std::cos(a * pi * g.x(i) / d.Lx) *
                                                std::cos(b * pi * g.y(j) / d.Ly) * rz;
                    }
                }
    }

    apply_bcs_velocity(s, g);
    apply_bcs_temperature(s, p, g);
    return s;
}

} // namespace peq
