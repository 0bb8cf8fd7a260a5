#pragma once

#include <cstdint>

#include "peq/field.hpp"
#include "peq/geometry.hpp"

namespace peq {

/// Prognostic fields at one time instant. Interior values are owned;
/// ghost layers are scratch refreshed by the apply_bcs_* calls.
struct State {
    Field3 v1, v2, T;
    double t = 0.0;

    State() = default;
    State(int nx, int ny, int nz) : v1(nx, ny, nz), v2(nx, ny, nz), T(nx, ny, nz) {}
};

/// Physical parameters. Re1/Re2 are the horizontal/vertical Reynolds
/// numbers, Rt1/Rt2 the heat diffusivities, f = f0*(beta + y) the Coriolis
/// parameter, alpha the surface heat-exchange coefficient.
struct Params {
    double Re1 = 1.0, Re2 = 1.0;
    double Rt1 = 1.0, Rt2 = 1.0;
    double f0 = 0.0, beta = 0.0;
    double alpha = 1.0;
};

/// Static heat source. Surface wind stress and the top-surface temperature
/// anomaly are zero in this configuration, so the heat source is the only
/// external forcing carried by a run.
struct Forcing {
    Field3 Q;

    Forcing() = default;
    explicit Forcing(const Grid& g) : Q(g.nx, g.ny, g.nz) {}
};

/// Velocity ghost fill:
///   dv/dz = 0 at z = 0 and z = -h (even reflection),
///   v1 = 0 / dv2/dx = 0 at the x-walls,
///   v2 = 0 / dv1/dy = 0 at the y-walls,
/// each second-order at the wall face.
void apply_bcs_velocity(State& s, const Grid& g);

/// Same rules applied to a standalone pair of components.
void fill_velocity_ghosts(Field3& v1, Field3& v2);

/// Temperature ghost fill: Robin at the top surface,
///   ghost = interior * (1 - alpha*dz/2) / (1 + alpha*dz/2),
/// even reflection at the bottom and side walls.
void apply_bcs_temperature(State& s, const Params& p, const Grid& g);

void fill_temperature_ghosts(Field3& T, double alpha, double dz);

/// Even reflection on all faces (depth averages, surface pressure).
void fill_even_ghosts(Field2& f);

/// 2D velocity ghost rules for a depth-averaged component.
void fill_velocity_ghosts2(VecField2& v);

/// Random low-wavenumber state compatible with every boundary condition.
/// The barotropic velocity part is built from discrete streamfunction
/// differences, so its depth-averaged divergence vanishes to roundoff;
/// baroclinic modes use vertical cosines whose depth average is exactly
/// zero under midpoint quadrature. Deterministic per seed.
State make_smooth_state(const Domain& d, const Grid& g, const Params& p,
                        uint64_t seed, double amplitude = 0.05);

/// Smallest positive root of nu * tan(nu*h) = alpha, branch m = 1,2,...
/// cos(nu*(z+h)) then satisfies the Robin condition at z = 0 and the
/// Neumann condition at z = -h exactly.
double robin_wavenumber(double alpha, double h, int branch);

} // namespace peq
