#pragma once

#include "peq/field.hpp"
#include "peq/geometry.hpp"

namespace peq {

/// 2D Neumann Poisson problem lap(phi) = rhs on the cross-section.
/// Solvable only for mean-zero rhs; the solution is pinned to zero mean.
struct PoissonProblem {
    Field2 rhs;
    double tolerance = 1e-10; ///< relative residual target
    int max_iterations = 0;   ///< 0 = pick from grid size
};

/// Conjugate gradient on the Neumann Laplacian with a mean projection
/// each iteration. Returns the mean-zero phi with
///   |lap_h phi - rhs|_2 <= tolerance * |rhs|_2.
/// Throws SolvabilityError when |mean(rhs)| > 1e-10 * rms(rhs), and
/// ConvergenceError (with the reached residual) at the iteration cap.
Field2 solve_neumann_poisson(const PoissonProblem& problem, const Grid& g);

/// Result of projecting a velocity tendency onto the depth-averaged
/// divergence-free constraint set.
struct ProjectionResult {
    VecField3 tendency; ///< input minus grad_h p_s broadcast over depth
    Field2 p_s;         ///< mean-zero surface pressure (the multiplier)
};

/// Solves lap_h p_s = div_h(depth_average(tendency)) and subtracts the
/// broadcast horizontal gradient. The depth-averaged divergence of the
/// result is bounded by the solver residual.
ProjectionResult project_step(const VecField3& tendency, const Grid& g,
                              double tolerance = 1e-10, int max_iterations = 0);

/// In-place variant reusing caller buffers; `tendency` must have had its
/// velocity ghost rules applied (the divergence stencil reads ghosts).
void project_step_inplace(VecField3& tendency, const Grid& g, Field2& p_s,
                          double tolerance = 1e-10, int max_iterations = 0);

} // namespace peq
