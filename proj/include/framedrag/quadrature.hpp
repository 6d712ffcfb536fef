#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace framedrag::quadrature {

struct Options {
    double rel_tol = 1e-10;   // relative to the L1 norm of the integrand
    unsigned max_depth = 24;  // hard cap on interval bisections
};

struct Estimate {
    double value = 0.0;
    double error = 0.0;
    double l1 = 0.0;
};

/// Adaptive 31-point Gauss-Kronrod on [lo, hi].
template <class F>
Estimate integrate(F&& f, double lo, double hi, Options opts = {}) {
    Estimate e;
    e.value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        f, lo, hi, opts.max_depth, opts.rel_tol, &e.error, &e.l1);
    return e;
}

} // namespace framedrag::quadrature
