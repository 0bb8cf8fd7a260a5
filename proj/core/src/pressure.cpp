#include "peq/pressure.hpp"

#include <cmath>

#include "peq/errors.hpp"
#include "peq/operators.hpp"
#include "peq/state.hpp"

namespace peq {

namespace {

double dot2(const Field2& a, const Field2& b, const Grid& g) {
    double s = 0.0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            s += a(i, j) * b(i, j);
    return s;
}

void subtract_mean(Field2& f, const Grid& g) {
    double s = 0.0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            s += f(i, j);
    const double mean = s / (static_cast<double>(g.nx) * g.ny);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            f(i, j) -= mean;
}

void neg_lap_neumann(Field2& x, const Grid& g, Field2& y) {
    fill_even_ghosts(x);
    const double ax = 1.0 / (g.dx * g.dx), ay = 1.0 / (g.dy * g.dy);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            y(i, j) = -(ax * (x(i + 1, j) - 2.0 * x(i, j) + x(i - 1, j)) +
                        ay * (x(i, j + 1) - 2.0 * x(i, j) + x(i, j - 1)));
}

} // namespace

Field2 solve_neumann_poisson(const PoissonProblem& problem, const Grid& g) {
    const int n = g.nx * g.ny;
    const double bb = dot2(problem.rhs, problem.rhs, g);
    Field2 phi(g.nx, g.ny);
    if (bb == 0.0)
        return phi;

    {
        double s = 0.0;
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                s += problem.rhs(i, j);
        const double mean = s / n;
        const double rms = std::sqrt(bb / n);
        if (std::abs(mean) > 1e-10 * rms)
            throw SolvabilityError("solve_neumann_poisson: rhs has nonzero mean "
                                   "(Neumann compatibility violated)");
    }

    const int cap = problem.max_iterations > 0 ? problem.max_iterations
                                               : 20 * (g.nx + g.ny) + 200;

    // CG on -lap with the residual re-projected onto mean-zero each sweep;
    // the sign flip makes the operator positive semidefinite.
    Field2 r(g.nx, g.ny), d(g.nx, g.ny), q(g.nx, g.ny);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            r(i, j) = -problem.rhs(i, j);
    subtract_mean(r, g);
    d = r;
    double rr = dot2(r, r, g);
    const double target = problem.tolerance * problem.tolerance * bb;

    for (int it = 0; it < cap; ++it) {
        if (rr <= target) {
            subtract_mean(phi, g);
            return phi;
        }
        neg_lap_neumann(d, g, q);
        subtract_mean(q, g);
        const double dq = dot2(d, q, g);
        if (dq <= 0.0)
            break;
        const double alpha = rr / dq;
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                phi(i, j) += alpha * d(i, j);
                r(i, j) -= alpha * q(i, j);
            }
        subtract_mean(r, g);
        const double rr_new = dot2(r, r, g);
        const double beta = rr_new / rr;
        rr = rr_new;
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                d(i, j) = r(i, j) + beta * d(i, j);
    }
    if (rr <= target) {
        subtract_mean(phi, g);
        return phi;
    }
    throw ConvergenceError("solve_neumann_poisson: iteration cap reached",
                           std::sqrt(rr / bb), cap);
}

void project_step_inplace(VecField3& tendency, const Grid& g, Field2& p_s,
                          double tolerance, int max_iterations) {
    VecField2 bar(g.nx, g.ny);
    depth_average(tendency, g, bar);
    fill_velocity_ghosts2(bar);

    PoissonProblem problem;
    problem.rhs = div_h2(bar, g);
    problem.tolerance = tolerance;
    problem.max_iterations = max_iterations;
    p_s = solve_neumann_poisson(problem, g);

    Field2 ps_filled = p_s;
    fill_even_ghosts(ps_filled);
    const double cx = 0.5 / g.dx, cy = 0.5 / g.dy;
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                tendency.x(i, j, k) -= cx * (ps_filled(i + 1, j) - ps_filled(i - 1, j));
                tendency.y(i, j, k) -= cy * (ps_filled(i, j + 1) - ps_filled(i, j - 1));
            }
}

ProjectionResult project_step(const VecField3& tendency, const Grid& g,
                              double tolerance, int max_iterations) {
    ProjectionResult res;
    res.tendency = tendency;
    fill_velocity_ghosts(res.tendency.x, res.tendency.y);
    res.p_s = Field2(g.nx, g.ny);
    project_step_inplace(res.tendency, g, res.p_s, tolerance, max_iterations);
    return res;
}

} // namespace peq
