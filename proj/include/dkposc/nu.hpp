#pragma once

#include <array>

#include "dkposc/params.hpp"

// Functional (Nikiforov-Uvarov style) bookkeeping for the radial equation
// after the s = r^2 substitution:
//   psi'' + (1/s) psi' + (1/s^2) [ -zeta1 s^2 + zeta2 s - zeta3 ] psi = 0.
namespace dkp::nu {

// Composite constants of the radial problem.
double lambda1(double E, const QuantumNumbers& qn, const PhysicsParams& p);
double lambda2(const QuantumNumbers& qn, const PhysicsParams& p);
double lambda3(double E, const QuantumNumbers& qn, const PhysicsParams& p);

// zeta and parametric-template coefficients, kept together with the
// lambdas they overlap with.
struct NuCoefficients {
  double zeta1;  // -lambda1 / 4, never negative
  double zeta2;  // lambda3 / 4
  double zeta3;  // -lambda2 / 4
  std::array<double, 13> c;  // c[0] = c1, ..., c[12] = c13
  double lambda1, lambda2, lambda3;
};

// Coefficient table of the parametric template. Invariants (tested):
//   c1 = 1/2, c2 = c3 = c5 = 0, c4 = 1/4,
//   c6 = c9 = zeta1, c7 = -zeta2, c8 = c4^2 + zeta3,
//   c10 - 2 c12 = 1/2, c11 = 2 sqrt(zeta1), c13 = -c11 / 2.
NuCoefficients nu_coefficients(double E, const QuantumNumbers& qn,
                               const PhysicsParams& p);

// Width of the Gaussian factor: a(E) = sqrt(M^2 w^2 A^2 + E^2 Omega^2).
double gaussian_scale(double E, const PhysicsParams& p);

// Power of r in the eigenfunction:
//   sqrt(M^2 w^2 B^2 + (m - phi)^2 / alpha^2), always real and >= 0.
double eigenfunction_exponent(const QuantumNumbers& qn,
                              const PhysicsParams& p);

// Energy condition g(E) = 2 (2n + 1) a(E) - lambda3(E) + 2 a(E) nu, with
// nu the eigenfunction exponent. Bound states are the real zeros of g.
double quantization_residual(double E, const QuantumNumbers& qn,
                             const PhysicsParams& p);

// The same condition written directly in terms of m with no flux shift
// anywhere. At phi = 0 the two paths must agree bit for bit.
double quantization_residual_no_flux(double E, const QuantumNumbers& qn,
                                     const PhysicsParams& p);

}  // namespace dkp::nu
