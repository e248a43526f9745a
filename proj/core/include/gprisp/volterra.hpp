#pragma once

#include "gprisp/model.hpp"

namespace gprisp {

/// Second derivative of a uniformly sampled signal by second-order central
/// differences (one-sided at the ends). When smooth_width > 0 the signal is
/// first mollified with a discrete Gaussian of that standard deviation (ns),
/// renormalized near the edges so constants stay constant.
Signal differentiate_twice(const Signal& g, double smooth_width = 0.0);

/// Reconstruct F on [0, l] from g'' by forward-marching the second-kind
/// Volterra equation
///   ghat(x) = F(x) + (2/(c H(0))) int_0^x F(xi) H'(2(x-xi)/c) dxi,
///   ghat(x) = 2 (c+c0) g''(2x/c) / (c0 H(0)),
/// with a product-trapezoid rule, g'' resampled by linear interpolation.
Signal volterra_solve(const PhysicalConfig& cfg, const Pulse& p, const Signal& g2);

}  // namespace gprisp
