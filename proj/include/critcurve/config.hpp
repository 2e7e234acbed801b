#ifndef CRITCURVE_CONFIG_HPP
#define CRITCURVE_CONFIG_HPP

#include <cstddef>
#include <string>

namespace critcurve {

/// Tolerances and budgets shared across the library.
///
/// eps_b   boundary-hit tolerance on the |x| coordinate of a unit ray
/// eps_c   curve-membership tolerance (relative to the 1-norm of the
///         evaluated terms) after root polishing
/// eps_q   relative tolerance for Q_t zero detection in intersection
///         sequences; applied as eps_q * max(1, max_t |Q_t|)
/// eps_g   relative tolerance for the polygonal median-distance test
struct Config {
    double eps_b = 1e-9;
    double eps_c = 1e-11;
    double eps_q = 1e-7;
    double eps_g = 1e-9;

    double trace_step = 1e-3;
    long max_segment_steps = 10000;   // boundary_segment default budget
    long rotation_iters = 100000;

    // Complexity counter guard: stream must be >= this multiple of n_max.
    int complexity_stream_factor = 10;
};

} // namespace critcurve

#endif
