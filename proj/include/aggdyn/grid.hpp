#pragma once

#include <cmath>
#include <stdexcept>

namespace aggdyn {

// Uniform time grid starting at t=0. Stochastic drivers and propagators share
// the half-step lattice t_k, t_k + h/2 (2*n_steps+1 points) so RK4 stages use
// sampled noise values instead of interpolated ones.
struct TimeGrid {
    double step = 0.0; // h, in units 1/Delta
    int n_steps = 0;

    double t(int k) const { return step * k; }
    double t_max() const { return step * n_steps; }
    int n_points() const { return n_steps + 1; }
    int n_half_points() const { return 2 * n_steps + 1; }
    double half_step() const { return 0.5 * step; }

    bool operator==(const TimeGrid&) const = default;
};

// Grid reaching t_max in n_steps uniform steps.
inline TimeGrid make_grid(double t_max, int n_steps) {
    if (!(t_max > 0.0) || n_steps < 1)
        throw std::invalid_argument("make_grid: need t_max > 0 and n_steps >= 1");
    return TimeGrid{t_max / n_steps, n_steps};
}

// Grid with step <= h_target, adjusted so the last point lands on t_max exactly.
inline TimeGrid make_grid_max_step(double t_max, double h_target) {
    if (!(t_max > 0.0) || !(h_target > 0.0))
        throw std::invalid_argument("make_grid_max_step: need positive t_max and step");
    int n = static_cast<int>(std::ceil(t_max / h_target - 1e-12));
    return make_grid(t_max, n < 1 ? 1 : n);
}

} // namespace aggdyn
