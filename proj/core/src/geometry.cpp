#include "peq/geometry.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "peq/errors.hpp"
#include "peq/field.hpp"

namespace peq {

std::pair<Domain, Grid> build_domain(double Lx, double Ly, double h,
                                     int nx, int ny, int nz) {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw ConfigError(std::string("extent ") + name + " must be positive and finite");
    };
    positive(Lx, "Lx");
    positive(Ly, "Ly");
    positive(h, "h");
    auto count = [](int n, const char* name) {
        if (n < 4)
            throw ConfigError(std::string("cell count ") + name + " must be at least 4");
    };
    count(nx, "Nx");
    count(ny, "Ny");
    count(nz, "Nz");

    Domain d{Lx, Ly, h};
    Grid g;
    g.nx = nx;
    g.ny = ny;
    g.nz = nz;
    g.dx = Lx / nx;
    g.dy = Ly / ny;
    g.dz = h / nz;
    return {d, g};
}

namespace {

// Ghost fill for one horizontal scalar under a wall profile.
void fill_profile(Field2& f, WallProfile p) {
    const int nx = f.nx(), ny = f.ny();
    const double sx = (p == WallProfile::V1) ? -1.0 : 1.0;
    const double sy = (p == WallProfile::V1) ? 1.0 : -1.0;
    for (int j = 0; j < ny; ++j) {
        f(-1, j) = sx * f(0, j);
        f(nx, j) = sx * f(nx - 1, j);
    }
    for (int i = 0; i < nx; ++i) {
        f(i, -1) = sy * f(i, 0);
        f(i, ny) = sy * f(i, ny - 1);
    }
}

// y = -lap(x) with the profile's ghost rules; refreshes x's ghosts.
void neg_lap(Field2& x, const Grid& g, WallProfile p, Field2& y) {
    fill_profile(x, p);
    const double ax = 1.0 / (g.dx * g.dx), ay = 1.0 / (g.dy * g.dy);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            y(i, j) = -(ax * (x(i + 1, j) - 2.0 * x(i, j) + x(i - 1, j)) +
                        ay * (x(i, j + 1) - 2.0 * x(i, j) + x(i, j - 1)));
}

double dot2(const Field2& a, const Field2& b, const Grid& g) {
    double s = 0.0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            s += a(i, j) * b(i, j);
    return s;
}

// Plain CG; the profile operator is SPD (at least one Dirichlet direction).
void cg_solve(const Field2& b, const Grid& g, WallProfile p, Field2& x,
              double tol, int max_iter) {
    Field2 r = b, q(g.nx, g.ny), d(g.nx, g.ny);
    x.fill(0.0);
    d = r;
    double rr = dot2(r, r, g);
    const double bb = dot2(b, b, g);
    if (bb == 0.0) {
        x.fill(0.0);
        return;
    }
    for (int it = 0; it < max_iter; ++it) {
        if (rr <= tol * tol * bb) return;
        neg_lap(d, g, p, q);
        const double alpha = rr / dot2(d, q, g);
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                x(i, j) += alpha * d(i, j);
                r(i, j) -= alpha * q(i, j);
            }
        const double rr_new = dot2(r, r, g);
        const double beta = rr_new / rr;
        rr = rr_new;
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                d(i, j) = r(i, j) + beta * d(i, j);
    }
    throw ConvergenceError("poincare_constant: inner CG did not converge",
                           std::sqrt(rr / bb), max_iter);
}

} // namespace

double poincare_constant(const Domain& domain, const Grid& grid, WallProfile profile) {
    (void)domain;
    const int cap = 500;
    const double eig_tol = 1e-8;
    const int cg_iter = 20 * (grid.nx + grid.ny) + 200;

    Field2 x(grid.nx, grid.ny), y(grid.nx, grid.ny), q(grid.nx, grid.ny);
    x.fill(1.0);

    double lambda = 0.0;
    for (int it = 0; it < cap; ++it) {
        cg_solve(x, grid, profile, y, 1e-12, cg_iter);
        const double norm = std::sqrt(dot2(y, y, grid));
        for (int j = 0; j < grid.ny; ++j)
            for (int i = 0; i < grid.nx; ++i)
                y(i, j) /= norm;
        neg_lap(y, grid, profile, q);
        const double lambda_new = dot2(y, q, grid) / dot2(y, y, grid);
        const bool done = it > 0 && std::abs(lambda_new - lambda) <= eig_tol * std::abs(lambda_new);
        lambda = lambda_new;
        x = y;
        if (done) return 1.0 / lambda;
    }
    throw ConvergenceError("poincare_constant: inverse iteration did not converge",
                           lambda, cap);
}

DomainConstants domain_constants(const Domain& domain, const Grid& grid) {
    DomainConstants c;
    c.c_poincare = std::max(poincare_constant(domain, grid, WallProfile::V1),
                            poincare_constant(domain, grid, WallProfile::V2));
    c.volume = domain.Lx * domain.Ly * domain.h;
    c.area = domain.Lx * domain.Ly;
    return c;
}

} // namespace peq
