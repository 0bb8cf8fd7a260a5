#pragma once

#include "peq/field.hpp"
#include "peq/geometry.hpp"

namespace peq {

// Second-order centered stencils on the cell-centered grid. All operators
// read ghost cells, so inputs must have their BC fill applied. In-place
// variants write the interior of a caller-owned output; value-returning
// wrappers allocate.

void grad_h(const Field3& f, const Grid& g, VecField3& out);
void div_h(const VecField3& u, const Grid& g, Field3& out);
void lap_h(const Field3& f, const Grid& g, Field3& out);
void ddz(const Field3& f, const Grid& g, Field3& out);
void d2dz2(const Field3& f, const Grid& g, Field3& out);

VecField3 grad_h(const Field3& f, const Grid& g);
Field3 div_h(const VecField3& u, const Grid& g);
Field3 lap_h(const Field3& f, const Grid& g);
Field3 ddz(const Field3& f, const Grid& g);
Field3 d2dz2(const Field3& f, const Grid& g);

// Horizontal (cross-section) variants.
void grad_h2(const Field2& f, const Grid& g, VecField2& out);
void div_h2(const VecField2& u, const Grid& g, Field2& out);
void lap_h2(const Field2& f, const Grid& g, Field2& out);

VecField2 grad_h2(const Field2& f, const Grid& g);
Field2 div_h2(const VecField2& u, const Grid& g);
Field2 lap_h2(const Field2& f, const Grid& g);

/// Midpoint cumulative integral from the bottom:
///   out_k = dz * (phi_k / 2 + sum_{m<k} phi_m),
/// the value of int_{-h}^{z} phi at the cell center. Exact for fields
/// constant in z. Also evaluated on ghost columns (interior k only) so
/// horizontal stencils can be applied to the result.
void vertical_cumint(const Field3& f, const Grid& g, Field3& out);
Field3 vertical_cumint(const Field3& f, const Grid& g);

/// (1/h) int_{-h}^0 phi dz under the same midpoint rule, i.e. the plain
/// column mean. Ghost columns are averaged too.
void depth_average(const Field3& f, const Grid& g, Field2& out);
Field2 depth_average(const Field3& f, const Grid& g);

void depth_average(const VecField3& u, const Grid& g, VecField2& out);
VecField2 depth_average(const VecField3& u, const Grid& g);

/// phi minus its column mean; depth_average(fluctuation(phi)) vanishes to
/// roundoff by construction.
void fluctuation(const Field3& f, const Grid& g, Field3& out);
Field3 fluctuation(const Field3& f, const Grid& g);
void fluctuation(const VecField3& u, const Grid& g, VecField3& out);
VecField3 fluctuation(const VecField3& u, const Grid& g);

/// Copy a cross-section value to every level, ghosts included for valid
/// ghost columns of the source.
void broadcast_z(const Field2& f, int nz, Field3& out);
Field3 broadcast_z(const Field2& f, int nz);

/// Vertical velocity diagnosed from continuity,
///   w = -int_{-h}^z div_h(v),
/// with w = 0 at the bottom built in. Vertical ghosts of the result are
/// filled by odd reflection (w vanishes on both horizontal boundaries).
/// If w_top is given it receives the z = 0 face value, equal to
/// -h * div_h(vbar) under the shared quadrature.
void diagnose_w(const VecField3& v, const Grid& g, Field3& out, Field2* w_top = nullptr);
Field3 diagnose_w(const VecField3& v, const Grid& g, Field2* w_top = nullptr);

/// p = p_s - int_{-h}^z T, the hydrostatic pressure.
void hydrostatic_pressure(const Field3& T, const Field2& p_s, const Grid& g, Field3& out);
Field3 hydrostatic_pressure(const Field3& T, const Field2& p_s, const Grid& g);

} // namespace peq
