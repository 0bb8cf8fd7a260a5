#include "peq/operators.hpp"

namespace peq {

void grad_h(const Field3& f, const Grid& g, VecField3& out) {
    const double cx = 0.5 / g.dx, cy = 0.5 / g.dy;
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                out.x(i, j, k) = cx * (f(i + 1, j, k) - f(i - 1, j, k));
                out.y(i, j, k) = cy * (f(i, j + 1, k) - f(i, j - 1, k));
            }
}

void div_h(const VecField3& u, const Grid& g, Field3& out) {
    const double cx = 0.5 / g.dx, cy = 0.5 / g.dy;
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                out(i, j, k) = cx * (u.x(i + 1, j, k) - u.x(i - 1, j, k)) +
                               cy * (u.y(i, j + 1, k) - u.y(i, j - 1, k));
}

void lap_h(const Field3& f, const Grid& g, Field3& out) {
    const double ax = 1.0 / (g.dx * g.dx), ay = 1.0 / (g.dy * g.dy);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                out(i, j, k) = ax * (f(i + 1, j, k) - 2.0 * f(i, j, k) + f(i - 1, j, k)) +
                               ay * (f(i, j + 1, k) - 2.0 * f(i, j, k) + f(i, j - 1, k));
}

void ddz(const Field3& f, const Grid& g, Field3& out) {
    const double cz = 0.5 / g.dz;
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                out(i, j, k) = cz * (f(i, j, k + 1) - f(i, j, k - 1));
}

void d2dz2(const Field3& f, const Grid& g, Field3& out) {
    const double az = 1.0 / (g.dz * g.dz);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                out(i, j, k) = az * (f(i, j, k + 1) - 2.0 * f(i, j, k) + f(i, j, k - 1));
}

void grad_h2(const Field2& f, const Grid& g, VecField2& out) {
    const double cx = 0.5 / g.dx, cy = 0.5 / g.dy;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            out.x(i, j) = cx * (f(i + 1, j) - f(i - 1, j));
            out.y(i, j) = cy * (f(i, j + 1) - f(i, j - 1));
        }
}

void div_h2(const VecField2& u, const Grid& g, Field2& out) {
    const double cx = 0.5 / g.dx, cy = 0.5 / g.dy;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            out(i, j) = cx * (u.x(i + 1, j) - u.x(i - 1, j)) +
                        cy * (u.y(i, j + 1) - u.y(i, j - 1));
}

void lap_h2(const Field2& f, const Grid& g, Field2& out) {
    const double ax = 1.0 / (g.dx * g.dx), ay = 1.0 / (g.dy * g.dy);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            out(i, j) = ax * (f(i + 1, j) - 2.0 * f(i, j) + f(i - 1, j)) +
                        ay * (f(i, j + 1) - 2.0 * f(i, j) + f(i, j - 1));
}

void vertical_cumint(const Field3& f, const Grid& g, Field3& out) {
    // Includes ghost columns so horizontal stencils can follow.
    for (int j = -1; j <= g.ny; ++j)
        for (int i = -1; i <= g.nx; ++i) {
            double run = 0.0;
            for (int k = 0; k < g.nz; ++k) {
                out(i, j, k) = g.dz * (run + 0.5 * f(i, j, k));
                run += f(i, j, k);
            }
        }
}

void depth_average(const Field3& f, const Grid& g, Field2& out) {
    const double inv = 1.0 / g.nz;
    for (int j = -1; j <= g.ny; ++j)
        for (int i = -1; i <= g.nx; ++i) {
            double s = 0.0;
            for (int k = 0; k < g.nz; ++k)
                s += f(i, j, k);
            out(i, j) = s * inv;
        }
}

void depth_average(const VecField3& u, const Grid& g, VecField2& out) {
    depth_average(u.x, g, out.x);
    depth_average(u.y, g, out.y);
}

void fluctuation(const Field3& f, const Grid& g, Field3& out) {
    Field2 bar(g.nx, g.ny);
    depth_average(f, g, bar);
    for (int k = 0; k < g.nz; ++k)
        for (int j = -1; j <= g.ny; ++j)
            for (int i = -1; i <= g.nx; ++i)
                out(i, j, k) = f(i, j, k) - bar(i, j);
}

void fluctuation(const VecField3& u, const Grid& g, VecField3& out) {
    fluctuation(u.x, g, out.x);
    fluctuation(u.y, g, out.y);
}

void broadcast_z(const Field2& f, int nz, Field3& out) {
    const int nx = f.nx(), ny = f.ny();
    for (int k = 0; k < nz; ++k)
        for (int j = -1; j <= ny; ++j)
            for (int i = -1; i <= nx; ++i)
                out(i, j, k) = f(i, j);
    // A depth-independent column reflects onto itself.
    for (int j = -1; j <= ny; ++j)
        for (int i = -1; i <= nx; ++i) {
            out(i, j, -1) = f(i, j);
            out(i, j, nz) = f(i, j);
        }
}

void diagnose_w(const VecField3& v, const Grid& g, Field3& out, Field2* w_top) {
    Field3 div(g.nx, g.ny, g.nz);
    div_h(v, g, div);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            double run = 0.0;
            for (int k = 0; k < g.nz; ++k) {
                out(i, j, k) = -g.dz * (run + 0.5 * div(i, j, k));
                run += div(i, j, k);
            }
            if (w_top)
                (*w_top)(i, j) = -g.dz * run;
            // w vanishes on both horizontal boundaries: odd reflection.
            out(i, j, -1) = -out(i, j, 0);
            out(i, j, g.nz) = -out(i, j, g.nz - 1);
        }
}

void hydrostatic_pressure(const Field3& T, const Field2& p_s, const Grid& g, Field3& out) {
    vertical_cumint(T, g, out);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                out(i, j, k) = p_s(i, j) - out(i, j, k);
}

// Value-returning wrappers.

VecField3 grad_h(const Field3& f, const Grid& g) {
    VecField3 out(g.nx, g.ny, g.nz);
    grad_h(f, g, out);
    return out;
}
Field3 div_h(const VecField3& u, const Grid& g) {
    Field3 out(g.nx, g.ny, g.nz);
    div_h(u, g, out);
    return out;
}
Field3 lap_h(const Field3& f, const Grid& g) {
    Field3 out(g.nx, g.ny, g.nz);
    lap_h(f, g, out);
    return out;
}
Field3 ddz(const Field3& f, const Grid& g) {
    Field3 out(g.nx, g.ny, g.nz);
    ddz(f, g, out);
    return out;
}
Field3 d2dz2(const Field3& f, const Grid& g) {
    Field3 out(g.nx, g.ny, g.nz);
    d2dz2(f, g, out);
    return out;
}
VecField2 grad_h2(const Field2& f, const Grid& g) {
    VecField2 out(g.nx, g.ny);
    grad_h2(f, g, out);
    return out;
}
Field2 div_h2(const VecField2& u, const Grid& g) {
    Field2 out(g.nx, g.ny);
    div_h2(u, g, out);
    return out;
}
Field2 lap_h2(const Field2& f, const Grid& g) {
    Field2 out(g.nx, g.ny);
    lap_h2(f, g, out);
    return out;
}
Field3 vertical_cumint(const Field3& f, const Grid& g) {
    Field3 out(g.nx, g.ny, g.nz);
    vertical_cumint(f, g, out);
    return out;
}
Field2 depth_average(const Field3& f, const Grid& g) {
    Field2 out(g.nx, g.ny);
    depth_average(f, g, out);
    return out;
}
VecField2 depth_average(const VecField3& u, const Grid& g) {
    VecField2 out(g.nx, g.ny);
    depth_average(u, g, out);
    return out;
}
Field3 fluctuation(const Field3& f, const Grid& g) {
    Field3 out(g.nx, g.ny, g.nz);
    fluctuation(f, g, out);
    return out;
}
VecField3 fluctuation(const VecField3& u, const Grid& g) {
    VecField3 out(g.nx, g.ny, g.nz);
    fluctuation(u, g, out);
    return out;
}
Field3 broadcast_z(const Field2& f, int nz) {
    Field3 out(f.nx(), f.ny(), nz);
    broadcast_z(f, nz, out);
    return out;
}
Field3 diagnose_w(const VecField3& v, const Grid& g, Field2* w_top) {
    Field3 out(g.nx, g.ny, g.nz);
    diagnose_w(v, g, out, w_top);
    return out;
}
Field3 hydrostatic_pressure(const Field3& T, const Field2& p_s, const Grid& g) {
    Field3 out(g.nx, g.ny, g.nz);
    hydrostatic_pressure(T, p_s, g, out);
    return out;
}

} // namespace peq
