#pragma once

#include "peq/field.hpp"
#include "peq/geometry.hpp"
#include "peq/state.hpp"

namespace peq {

/// Time derivatives of the prognostic fields.
struct Tendency {
    Field3 dv1, dv2, dT;

    Tendency() = default;
    Tendency(int nx, int ny, int nz) : dv1(nx, ny, nz), dv2(nx, ny, nz), dT(nx, ny, nz) {}
};

/// Skew-symmetric transport of phi by (v, w):
///   1/2 [ v . grad phi + w d_z phi ] + 1/2 [ div(v phi) + d_z(w phi) ].
/// With the ghost rules of this artifact the pairing <advect(phi), phi>
/// telescopes away exactly, which is what makes the energy identities of
/// the estimate chain hold discretely.
void advect(const VecField3& v, const Field3& w, const Field3& phi,
            const Grid& g, Field3& out);
Field3 advect(const VecField3& v, const Field3& w, const Field3& phi, const Grid& g);

/// f(y) * (-v2, v1) with f = f0 (beta + y); pointwise orthogonal to v.
void coriolis(const VecField3& v, double f0, double beta, const Domain& d,
              const Grid& g, VecField3& out);
VecField3 coriolis(const VecField3& v, double f0, double beta, const Domain& d,
                   const Grid& g);

/// Gradient of the baroclinic pressure, -grad_h int_{-h}^z T; the momentum
/// right-hand side subtracts it. Computed as -cumint(grad_h T), which
/// commutes with the other route exactly.
void baroclinic_pressure_grad(const Field3& T, const Grid& g, VecField3& out);
VecField3 baroclinic_pressure_grad(const Field3& T, const Grid& g);

/// The five momentum right-hand-side pieces, individually retrievable.
/// rhs = advection + pressure + baroclinic + coriolis + viscous, where each
/// member already carries its right-hand-side sign.
struct VelocityRhsTerms {
    VecField3 advection;  ///< -advect(v, w, v)
    VecField3 pressure;   ///< -grad_h p_s, depth independent
    VecField3 baroclinic; ///< +grad_h int_{-h}^z T
    VecField3 coriolis;   ///< -f k x v
    VecField3 viscous;    ///< (1/Re1) lap_h v + (1/Re2) d2/dz2 v
};

/// Ghosts of v and T must be filled and w diagnosed from v.
VelocityRhsTerms rhs_velocity_terms(const State& s, const Params& p, const Field3& w,
                                    const Field2& p_s, const Domain& d, const Grid& g);

void rhs_velocity(const State& s, const Params& p, const Field3& w, const Field2& p_s,
                  const Domain& d, const Grid& g, VecField3& out);
VecField3 rhs_velocity(const State& s, const Params& p, const Field3& w,
                       const Field2& p_s, const Domain& d, const Grid& g);

/// dT/dt = Q - advect(v, w, T) + (1/Rt1) lap_h T + (1/Rt2) d2/dz2 T.
/// The Robin boundary dissipation enters through the temperature ghosts.
void rhs_temperature(const State& s, const Params& p, const Field3& w,
                     const Field3& Q, const Grid& g, Field3& out);
Field3 rhs_temperature(const State& s, const Params& p, const Field3& w,
                       const Field3& Q, const Grid& g);

/// Residuals of the barotropic/baroclinic decomposition: the unified
/// right-hand side, depth-averaged (resp. fluctuated), minus the split
/// system assembled directly from (vbar, vtilde, T, p_s). The split is
/// algebraic, so both must vanish to roundoff for any state.
struct SplitResiduals {
    double barotropic_l2 = 0.0;
    double baroclinic_l2 = 0.0;
    double scale_l2 = 0.0; ///< L2 norm of the unified tendency

    double barotropic_rel() const { return scale_l2 > 0 ? barotropic_l2 / scale_l2 : 0.0; }
    double baroclinic_rel() const { return scale_l2 > 0 ? baroclinic_l2 / scale_l2 : 0.0; }
};

SplitResiduals split_residual_check(const State& s, const Params& p,
                                    const Field2& p_s, const Domain& d, const Grid& g);

} // namespace peq
