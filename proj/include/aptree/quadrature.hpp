#ifndef APTREE_QUADRATURE_HPP
#define APTREE_QUADRATURE_HPP

#include <functional>

#include "aptree/tolerance.hpp"

namespace aptree {

/// Adaptive Gauss-Kronrod 7-15 on a single smooth integrand. Throws
/// NonConvergenceError when the subdivision budget runs out.
double adaptive_gk(const std::function<double(double)>& f, double a, double b, double rel,
                   double abs_tol, long long budget);

/// Same, but tolerant of an integrable singularity at one endpoint: strips are
/// graded geometrically toward it and the geometric tail is extrapolated.
/// Throws DivergenceError when the strip contributions do not decay.
double graded_gk(const std::function<double(double)>& f, double a, double b, bool singular_at_a,
                 double rel, double abs_tol, long long budget);

}  // namespace aptree

#endif
