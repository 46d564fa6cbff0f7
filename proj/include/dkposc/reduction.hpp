#pragma once

#include <array>
#include <complex>

#include "dkposc/params.hpp"

// Reduction of the five-component wave equation, for modes
//   Psi = exp(i(m phi + k z - E t)) (Phi1, ..., Phi5)(r),
// to a single second-order radial equation for Phi1.
namespace dkp::reduction {

using cplx = std::complex<double>;

struct SpinorComponents {
  cplx c1, c2, c3, c4, c5;
};

// Confining interaction f(r) = A r + B / r and its derivative.
double cornell_f(double r, const PhysicsParams& p);
double cornell_f_prime(double r, const PhysicsParams& p);

// Lower components expressed through Phi1 and its derivative:
//   Phi2 = E Phi1 / M
//   Phi3 = i (Phi1' + M omega f Phi1) / M
//   Phi4 = -(E r^2 alpha Omega + m - phi) Phi1 / (r alpha M)
//   Phi5 = -k Phi1 / M
SpinorComponents eliminate_components(cplx phi1, cplx dphi1, double r,
                                      double E, const QuantumNumbers& qn,
                                      const PhysicsParams& p);

// d/dr of the eliminated Phi3; needs the second derivative of Phi1.
cplx phi3_prime(cplx phi1, cplx dphi1, cplx d2phi1, double r,
                const PhysicsParams& p);

// Signed values of the five coupled component equations; all vanish on a
// solution. dphi3 enters only the first equation, dphi1 only the third.
std::array<cplx, 5> component_equations(const SpinorComponents& c, cplx dphi1,
                                        cplx dphi3, double r, double E,
                                        const QuantumNumbers& qn,
                                        const PhysicsParams& p);

// Magnitudes of the five equation values above.
std::array<double, 5> component_residuals(const SpinorComponents& c,
                                          cplx dphi1, cplx dphi3, double r,
                                          double E, const QuantumNumbers& qn,
                                          const PhysicsParams& p);

// Radial equation in the form
//   Phi1'' + Phi1'/r - (quadratic r^2 + inverse_square / r^2 + constant) Phi1 = 0.
struct RadialCoefficients {
  double quadratic;       // M^2 w^2 A^2 + E^2 Omega^2, never negative
  double inverse_square;  // M^2 w^2 B^2 + (m - phi)^2 / alpha^2
  double constant;        // -E^2 + k^2 + M^2 + 2 E Omega (m-phi)/alpha
                          //   - 2 M w A + 2 A B M^2 w^2
};

RadialCoefficients radial_coefficients(double E, const QuantumNumbers& qn,
                                       const PhysicsParams& p);

// Signed left-hand side of the radial equation at one radius.
cplx radial_lhs(cplx phi1, cplx dphi1, cplx d2phi1, double r, double E,
                const QuantumNumbers& qn, const PhysicsParams& p);

// |radial_lhs|.
double radial_residual(cplx phi1, cplx dphi1, cplx d2phi1, double r, double E,
                       const QuantumNumbers& qn, const PhysicsParams& p);

// Same equation for a general twice-differentiable interaction profile,
// evaluated from f(r) and f'(r) directly:
//   W = M^2 w^2 f^2 - M w f / r - M w f' + (m-phi)^2/(alpha^2 r^2)
//       + E^2 Omega^2 r^2 - E^2 + k^2 + M^2 + 2 E Omega (m-phi)/alpha,
//   lhs = Phi1'' + Phi1'/r - W Phi1.
// For the Cornell profile this matches radial_lhs exactly: the B/r^2
// pieces of f/r and f' cancel against each other.
double radial_weight_general(double r, double f, double fprime, double E,
                             const QuantumNumbers& qn, const PhysicsParams& p);

cplx radial_lhs_general(cplx phi1, cplx dphi1, cplx d2phi1, double r, double f,
                        double fprime, double E, const QuantumNumbers& qn,
                        const PhysicsParams& p);

}  // namespace dkp::reduction
