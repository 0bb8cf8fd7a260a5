#include "peq/dynamics.hpp"

#include <cmath>

#include "peq/operators.hpp"

namespace peq {

namespace {

// Horizontal skew transport of phi by a: 1/2 [a . grad phi + div(a phi)].
void skew_h(const VecField3& a, const Field3& phi, const Grid& g, Field3& out,
            bool accumulate) {
    const double cx = 0.25 / g.dx, cy = 0.25 / g.dy;
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                const double tx =
                    a.x(i, j, k) * (phi(i + 1, j, k) - phi(i - 1, j, k)) +
                    a.x(i + 1, j, k) * phi(i + 1, j, k) - a.x(i - 1, j, k) * phi(i - 1, j, k);
                const double ty =
                    a.y(i, j, k) * (phi(i, j + 1, k) - phi(i, j - 1, k)) +
                    a.y(i, j + 1, k) * phi(i, j + 1, k) - a.y(i, j - 1, k) * phi(i, j - 1, k);
                const double v = cx * tx + cy * ty;
                out(i, j, k) = accumulate ? out(i, j, k) + v : v;
            }
}

// Vertical skew transport: 1/2 [w d_z phi + d_z(w phi)].
void skew_z(const Field3& w, const Field3& phi, const Grid& g, Field3& out,
            bool accumulate) {
    const double cz = 0.25 / g.dz;
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                const double tz =
                    w(i, j, k) * (phi(i, j, k + 1) - phi(i, j, k - 1)) +
                    w(i, j, k + 1) * phi(i, j, k + 1) - w(i, j, k - 1) * phi(i, j, k - 1);
                const double v = cz * tz;
                out(i, j, k) = accumulate ? out(i, j, k) + v : v;
            }
}

// 2D analogue for the barotropic system.
void skew_2(const VecField2& a, const Field2& phi, const Grid& g, Field2& out) {
    const double cx = 0.25 / g.dx, cy = 0.25 / g.dy;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const double tx =
                a.x(i, j) * (phi(i + 1, j) - phi(i - 1, j)) +
                a.x(i + 1, j) * phi(i + 1, j) - a.x(i - 1, j) * phi(i - 1, j);
            const double ty =
                a.y(i, j) * (phi(i, j + 1) - phi(i, j - 1)) +
                a.y(i, j + 1) * phi(i, j + 1) - a.y(i, j - 1) * phi(i, j - 1);
            out(i, j) = cx * tx + cy * ty;
        }
}

} // namespace

void advect(const VecField3& v, const Field3& w, const Field3& phi,
            const Grid& g, Field3& out) {
    skew_h(v, phi, g, out, false);
    skew_z(w, phi, g, out, true);
}

Field3 advect(const VecField3& v, const Field3& w, const Field3& phi, const Grid& g) {
    Field3 out(g.nx, g.ny, g.nz);
    advect(v, w, phi, g, out);
    return out;
}

void coriolis(const VecField3& v, double f0, double beta, const Domain& d,
              const Grid& g, VecField3& out) {
    (void)d;
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j) {
            const double f = f0 * (beta + g.y(j));
            for (int i = 0; i < g.nx; ++i) {
                out.x(i, j, k) = -f * v.y(i, j, k);
                out.y(i, j, k) = f * v.x(i, j, k);
            }
        }
}

VecField3 coriolis(const VecField3& v, double f0, double beta, const Domain& d,
                   const Grid& g) {
    VecField3 out(g.nx, g.ny, g.nz);
    coriolis(v, f0, beta, d, g, out);
    return out;
}

void baroclinic_pressure_grad(const Field3& T, const Grid& g, VecField3& out) {
    VecField3 gT(g.nx, g.ny, g.nz);
    grad_h(T, g, gT);
    vertical_cumint(gT.x, g, out.x);
    vertical_cumint(gT.y, g, out.y);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                out.x(i, j, k) = -out.x(i, j, k);
                out.y(i, j, k) = -out.y(i, j, k);
            }
}

VecField3 baroclinic_pressure_grad(const Field3& T, const Grid& g) {
    VecField3 out(g.nx, g.ny, g.nz);
    baroclinic_pressure_grad(T, g, out);
    return out;
}

namespace {

// Shared assembly: out = -advect(v,w,v) - grad p_s + cumint(grad T)
//                        - f k x v + (1/Re1) lap v + (1/Re2) v_zz.
void assemble_rhs_velocity(const State& s, const Params& p, const Field3& w,
                           const Field2& p_s, const Grid& g,
                           const VecField3& baroclinic_grad, VecField3& out) {
    VecField3 v;
    v.x = s.v1; // shallow copies would be nicer; fields are value types
    v.y = s.v2;

    advect(v, w, s.v1, g, out.x);
    advect(v, w, s.v2, g, out.y);

    Field2 ps = p_s;
    fill_even_ghosts(ps);

    const double cx = 0.5 / g.dx, cy = 0.5 / g.dy;
    const double ax = 1.0 / (g.dx * g.dx), ay = 1.0 / (g.dy * g.dy);
    const double az = 1.0 / (g.dz * g.dz);
    const double iRe1 = 1.0 / p.Re1, iRe2 = 1.0 / p.Re2;

    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j) {
            const double f = p.f0 * (p.beta + g.y(j));
            for (int i = 0; i < g.nx; ++i) {
                const double lap1 =
                    ax * (s.v1(i + 1, j, k) - 2.0 * s.v1(i, j, k) + s.v1(i - 1, j, k)) +
                    ay * (s.v1(i, j + 1, k) - 2.0 * s.v1(i, j, k) + s.v1(i, j - 1, k));
                const double zz1 =
                    az * (s.v1(i, j, k + 1) - 2.0 * s.v1(i, j, k) + s.v1(i, j, k - 1));
                const double lap2 =
                    ax * (s.v2(i + 1, j, k) - 2.0 * s.v2(i, j, k) + s.v2(i - 1, j, k)) +
                    ay * (s.v2(i, j + 1, k) - 2.0 * s.v2(i, j, k) + s.v2(i, j - 1, k));
                const double zz2 =
                    az * (s.v2(i, j, k + 1) - 2.0 * s.v2(i, j, k) + s.v2(i, j, k - 1));

                out.x(i, j, k) = -out.x(i, j, k) - cx * (ps(i + 1, j) - ps(i - 1, j)) -
                                 baroclinic_grad.x(i, j, k) + f * s.v2(i, j, k) +
                                 iRe1 * lap1 + iRe2 * zz1;
                out.y(i, j, k) = -out.y(i, j, k) - cy * (ps(i, j + 1) - ps(i, j - 1)) -
                                 baroclinic_grad.y(i, j, k) - f * s.v1(i, j, k) +
                                 iRe1 * lap2 + iRe2 * zz2;
            }
        }
}

} // namespace

void rhs_velocity(const State& s, const Params& p, const Field3& w, const Field2& p_s,
                  const Domain& d, const Grid& g, VecField3& out) {
    (void)d;
    VecField3 bc(g.nx, g.ny, g.nz);
    baroclinic_pressure_grad(s.T, g, bc);
    assemble_rhs_velocity(s, p, w, p_s, g, bc, out);
}

VecField3 rhs_velocity(const State& s, const Params& p, const Field3& w,
                       const Field2& p_s, const Domain& d, const Grid& g) {
    VecField3 out(g.nx, g.ny, g.nz);
    rhs_velocity(s, p, w, p_s, d, g, out);
    return out;
}

VelocityRhsTerms rhs_velocity_terms(const State& s, const Params& p, const Field3& w,
                                    const Field2& p_s, const Domain& d, const Grid& g) {
    VelocityRhsTerms t;
    VecField3 v;
    v.x = s.v1;
    v.y = s.v2;

    t.advection = VecField3(g.nx, g.ny, g.nz);
    advect(v, w, s.v1, g, t.advection.x);
    advect(v, w, s.v2, g, t.advection.y);

    t.pressure = VecField3(g.nx, g.ny, g.nz);
    Field2 ps = p_s;
    fill_even_ghosts(ps);
    VecField2 gps(g.nx, g.ny);
    grad_h2(ps, g, gps);

    t.baroclinic = VecField3(g.nx, g.ny, g.nz);
    baroclinic_pressure_grad(s.T, g, t.baroclinic);

    t.coriolis = coriolis(v, p.f0, p.beta, d, g);

    t.viscous = VecField3(g.nx, g.ny, g.nz);
    const double iRe1 = 1.0 / p.Re1, iRe2 = 1.0 / p.Re2;
    Field3 lap(g.nx, g.ny, g.nz), zz(g.nx, g.ny, g.nz);
    lap_h(s.v1, g, lap);
    d2dz2(s.v1, g, zz);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                t.advection.x(i, j, k) = -t.advection.x(i, j, k);
                t.pressure.x(i, j, k) = -gps.x(i, j);
                t.baroclinic.x(i, j, k) = -t.baroclinic.x(i, j, k);
                t.coriolis.x(i, j, k) = -t.coriolis.x(i, j, k);
                t.viscous.x(i, j, k) = iRe1 * lap(i, j, k) + iRe2 * zz(i, j, k);
            }
    lap_h(s.v2, g, lap);
    d2dz2(s.v2, g, zz);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                t.advection.y(i, j, k) = -t.advection.y(i, j, k);
                t.pressure.y(i, j, k) = -gps.y(i, j);
                t.baroclinic.y(i, j, k) = -t.baroclinic.y(i, j, k);
                t.coriolis.y(i, j, k) = -t.coriolis.y(i, j, k);
                t.viscous.y(i, j, k) = iRe1 * lap(i, j, k) + iRe2 * zz(i, j, k);
            }
    return t;
}

void rhs_temperature(const State& s, const Params& p, const Field3& w,
                     const Field3& Q, const Grid& g, Field3& out) {
    VecField3 v;
    v.x = s.v1;
    v.y = s.v2;
    advect(v, w, s.T, g, out);

    const double ax = 1.0 / (g.dx * g.dx), ay = 1.0 / (g.dy * g.dy);
    const double az = 1.0 / (g.dz * g.dz);
    const double iRt1 = 1.0 / p.Rt1, iRt2 = 1.0 / p.Rt2;
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                const double lap =
                    ax * (s.T(i + 1, j, k) - 2.0 * s.T(i, j, k) + s.T(i - 1, j, k)) +
                    ay * (s.T(i, j + 1, k) - 2.0 * s.T(i, j, k) + s.T(i, j - 1, k));
                const double zz =
                    az * (s.T(i, j, k + 1) - 2.0 * s.T(i, j, k) + s.T(i, j, k - 1));
                out(i, j, k) = Q(i, j, k) - out(i, j, k) + iRt1 * lap + iRt2 * zz;
            }
}

Field3 rhs_temperature(const State& s, const Params& p, const Field3& w,
                       const Field3& Q, const Grid& g) {
    Field3 out(g.nx, g.ny, g.nz);
    rhs_temperature(s, p, w, Q, g, out);
    return out;
}

SplitResiduals split_residual_check(const State& s, const Params& p,
                                    const Field2& p_s, const Domain& d, const Grid& g) {
    State sf = s;
    apply_bcs_velocity(sf, g);
    apply_bcs_temperature(sf, p, g);
    VecField3 v;
    v.x = sf.v1;
    v.y = sf.v2;

    Field3 w(g.nx, g.ny, g.nz);
    diagnose_w(v, g, w);

    // Unified tendency, then its barotropic / baroclinic parts.
    VecField3 rhs(g.nx, g.ny, g.nz);
    rhs_velocity(sf, p, w, p_s, d, g, rhs);
    VecField2 rbar(g.nx, g.ny);
    depth_average(rhs, g, rbar);

    // Split fields. vtilde inherits its ghost rules from v and the
    // broadcast average, so no separate fill is needed.
    VecField2 vbar(g.nx, g.ny);
    depth_average(v, g, vbar);
    fill_velocity_ghosts2(vbar);
    VecField3 vbar3;
    vbar3.x = broadcast_z(vbar.x, g.nz);
    vbar3.y = broadcast_z(vbar.y, g.nz);
    VecField3 vtil(g.nx, g.ny, g.nz);
    for (int k = -1; k <= g.nz; ++k)
        for (int j = -1; j <= g.ny; ++j)
            for (int i = -1; i <= g.nx; ++i) {
                vtil.x(i, j, k) = v.x(i, j, k) - vbar3.x(i, j, k);
                vtil.y(i, j, k) = v.y(i, j, k) - vbar3.y(i, j, k);
            }

    // Eddy transport carried by the fluctuation field:
    //   skew_h(vtil, vtil) + 1/2 w d_z vtil   (per component).
    const double cz = 0.25 / g.dz;
    VecField3 eddy(g.nx, g.ny, g.nz);
    skew_h(vtil, vtil.x, g, eddy.x, false);
    skew_h(vtil, vtil.y, g, eddy.y, false);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                eddy.x(i, j, k) += 2.0 * cz * w(i, j, k) *
                                   (vtil.x(i, j, k + 1) - vtil.x(i, j, k - 1));
                eddy.y(i, j, k) += 2.0 * cz * w(i, j, k) *
                                   (vtil.y(i, j, k + 1) - vtil.y(i, j, k - 1));
            }
    VecField2 eddy_bar(g.nx, g.ny);
    depth_average(eddy, g, eddy_bar);

    // Baroclinic pressure integral and its depth average.
    VecField3 bc(g.nx, g.ny, g.nz);
    baroclinic_pressure_grad(sf.T, g, bc); // = -cumint(grad T)
    VecField2 bc_bar(g.nx, g.ny);
    depth_average(bc, g, bc_bar);

    Field2 ps = p_s;
    fill_even_ghosts(ps);
    VecField2 gps(g.nx, g.ny);
    grad_h2(ps, g, gps);

    // Barotropic system assembled directly.
    VecField2 adv2(g.nx, g.ny);
    skew_2(vbar, vbar.x, g, adv2.x);
    skew_2(vbar, vbar.y, g, adv2.y);
    Field2 lap2x(g.nx, g.ny), lap2y(g.nx, g.ny);
    lap_h2(vbar.x, g, lap2x);
    lap_h2(vbar.y, g, lap2y);

    const double iRe1 = 1.0 / p.Re1;
    double res_bar = 0.0, scale2 = 0.0;
    for (int j = 0; j < g.ny; ++j) {
        const double f = p.f0 * (p.beta + g.y(j));
        for (int i = 0; i < g.nx; ++i) {
            const double eq1x = -adv2.x(i, j) - eddy_bar.x(i, j) + f * vbar.y(i, j) -
                                gps.x(i, j) - bc_bar.x(i, j) + iRe1 * lap2x(i, j);
            const double eq1y = -adv2.y(i, j) - eddy_bar.y(i, j) - f * vbar.x(i, j) -
                                gps.y(i, j) - bc_bar.y(i, j) + iRe1 * lap2y(i, j);
            const double rx = rbar.x(i, j) - eq1x;
            const double ry = rbar.y(i, j) - eq1y;
            res_bar += rx * rx + ry * ry;
        }
    }

    // Baroclinic system assembled directly. The cross terms and the
    // leftover vertical pieces come from splitting the skew form.
    VecField3 cross1(g.nx, g.ny, g.nz), cross2(g.nx, g.ny, g.nz);
    skew_h(vbar3, vtil.x, g, cross1.x, false);
    skew_h(vbar3, vtil.y, g, cross1.y, false);
    skew_h(vtil, vbar3.x, g, cross2.x, false);
    skew_h(vtil, vbar3.y, g, cross2.y, false);

    Field3 lap3(g.nx, g.ny, g.nz), zz3(g.nx, g.ny, g.nz);
    const double iRe2 = 1.0 / p.Re2;

    double res_til = 0.0;
    const double dA = g.dx * g.dy, dV = dA * g.dz;
    for (int pass = 0; pass < 2; ++pass) {
        const Field3& tc = pass == 0 ? vtil.x : vtil.y;
        const Field3& ec = pass == 0 ? eddy.x : eddy.y;
        const Field2& eb = pass == 0 ? eddy_bar.x : eddy_bar.y;
        const Field3& c1 = pass == 0 ? cross1.x : cross1.y;
        const Field3& c2 = pass == 0 ? cross2.x : cross2.y;
        const Field3& bcc = pass == 0 ? bc.x : bc.y;
        const Field2& bcb = pass == 0 ? bc_bar.x : bc_bar.y;
        const Field3& vb = pass == 0 ? vbar3.x : vbar3.y;
        const Field3& othert = pass == 0 ? vtil.y : vtil.x;
        const Field3& rc = pass == 0 ? rhs.x : rhs.y;
        const Field2& rb = pass == 0 ? rbar.x : rbar.y;
        const double csign = pass == 0 ? 1.0 : -1.0;

        lap_h(tc, g, lap3);
        d2dz2(tc, g, zz3);
        for (int k = 0; k < g.nz; ++k)
            for (int j = 0; j < g.ny; ++j) {
                const double f = p.f0 * (p.beta + g.y(j));
                for (int i = 0; i < g.nx; ++i) {
                    const double dzw = cz * 2.0 * (w(i, j, k + 1) - w(i, j, k - 1)) * 0.5;
                    const double dz_wv = cz * (w(i, j, k + 1) * tc(i, j, k + 1) -
                                               w(i, j, k - 1) * tc(i, j, k - 1));
                    const double eq4 = -(ec(i, j, k) - eb(i, j)) // eddy fluctuation
                                       - c1(i, j, k) - c2(i, j, k) -
                                       vb(i, j, k) * dzw - dz_wv +
                                       csign * f * othert(i, j, k) -
                                       (bcc(i, j, k) - bcb(i, j)) +
                                       iRe1 * lap3(i, j, k) + iRe2 * zz3(i, j, k);
                    const double r = (rc(i, j, k) - rb(i, j)) - eq4;
                    res_til += r * r;
                    if (pass == 0) {
                        const double sx = rhs.x(i, j, k), sy = rhs.y(i, j, k);
                        scale2 += sx * sx + sy * sy;
                    }
                }
            }
    }

    SplitResiduals out;
    out.barotropic_l2 = std::sqrt(res_bar * dA * d.h);
    out.baroclinic_l2 = std::sqrt(res_til * dV);
    out.scale_l2 = std::sqrt(scale2 * dV);
    return out;
}

} // namespace peq
