#pragma once

#include "gprisp/model.hpp"

namespace gprisp {

/// Boundary trace g(t) = u(0,t;F) on the M+1-node grid, by nested trapezoid
/// quadrature of the double-integral representation. The inner xi-grid step
/// is locked to c*dt/2 so the moving upper limit c*t/2 lands on quadrature
/// nodes; `oversample` refines both integrals by that factor (data for the
/// inverse solver is generated with oversample=2 to avoid the inverse crime).
Signal boundary_trace(const PhysicalConfig& cfg, const Pulse& p, const SourceSpec& s,
                      int oversample = 1);

/// First derivative trace g'(t) = c0/(c(c+c0)) * int_0^{ct/2} F(xi) H(t-2xi/c) dxi.
Signal derivative_trace(const PhysicalConfig& cfg, const Pulse& p, const SourceSpec& s);

/// Analytic second derivative trace
/// g''(t) = c0/(c(c+c0)) * [ F(ct/2) H(0) c/2 + int_0^{ct/2} F(xi) H'(t-2xi/c) dxi ].
Signal second_derivative_trace(const PhysicalConfig& cfg, const Pulse& p, const SourceSpec& s);

}  // namespace gprisp
