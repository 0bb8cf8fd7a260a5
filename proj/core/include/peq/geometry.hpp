#pragma once

#include <utility>

namespace peq {

/// Physical extents of the cylinder: horizontal rectangle [0,Lx]x[0,Ly],
/// vertical range z in [-h, 0].
struct Domain {
    double Lx = 1.0;
    double Ly = 1.0;
    double h = 1.0;
};

/// Uniform cell-centered grid over the cylinder. Cell centers:
///   x_i = (i + 1/2) dx,  y_j = (j + 1/2) dy,  z_k = -h + (k + 1/2) dz.
/// One layer of ghost cells per face; boundary conditions are ghost-fill
/// rules applied by the state module.
struct Grid {
    int nx = 0, ny = 0, nz = 0;
    double dx = 0.0, dy = 0.0, dz = 0.0;

    double x(int i) const { return (i + 0.5) * dx; }
    double y(int j) const { return (j + 0.5) * dy; }
    double z(int k, double h) const { return -h + (k + 0.5) * dz; }

    long cells() const { return static_cast<long>(nx) * ny * nz; }
};

/// Which set of side-wall conditions a horizontal scalar carries.
/// V1: zero at x-walls, free (no-flux) at y-walls.
/// V2: free at x-walls, zero at y-walls.
enum class WallProfile { V1, V2 };

/// Domain-dependent constants derived from the grid.
struct DomainConstants {
    double c_poincare = 0.0; ///< C_M with |v|_2^2 <= C_M |grad v|_2^2
    double volume = 0.0;     ///< Lx * Ly * h
    double area = 0.0;       ///< Lx * Ly
};

/// Validates extents/counts and derives spacings.
/// Throws ConfigError for non-positive extents or counts below 4.
std::pair<Domain, Grid> build_domain(double Lx, double Ly, double h,
                                     int nx, int ny, int nz);

/// Reciprocal of the smallest eigenvalue of the discrete horizontal
/// Laplacian under the given wall profile, found by inverse power
/// iteration to a 1e-8 relative eigenvalue tolerance.
/// Throws ConvergenceError if the iteration cap is hit.
double poincare_constant(const Domain& domain, const Grid& grid, WallProfile profile);

/// C_M taken as the larger of the two velocity profiles (the binding one
/// for the vector field), plus volume and area.
DomainConstants domain_constants(const Domain& domain, const Grid& grid);

} // namespace peq
