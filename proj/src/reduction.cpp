#include "dkposc/reduction.hpp"

#include <cmath>

namespace dkp::reduction {

namespace {

constexpr cplx I{0.0, 1.0};

void check_radius(double r) {
  if (!(r > 0.0) || !std::isfinite(r))
    throw invalid_parameter("r must be positive and finite");
}

}  // namespace

double cornell_f(double r, const PhysicsParams& p) {
  check_radius(r);
  return p.A * r + p.B / r;
}

double cornell_f_prime(double r, const PhysicsParams& p) {
  check_radius(r);
  return p.A - p.B / (r * r);
}

SpinorComponents eliminate_components(cplx phi1, cplx dphi1, double r,
                                      double E, const QuantumNumbers& qn,
                                      const PhysicsParams& p) {
  p.validate();
  qn.validate();
  check_radius(r);
  const double f = cornell_f(r, p);
  const double meff = p.m_eff(qn.m);
  SpinorComponents c;
  c.c1 = phi1;
  c.c2 = (E / p.M) * phi1;
  c.c3 = I * (dphi1 + p.M * p.omega * f * phi1) / p.M;
  c.c4 = -(E * r * r * p.alpha * p.Omega + meff) * phi1 / (r * p.alpha * p.M);
  c.c5 = -(p.k / p.M) * phi1;
  return c;
}

cplx phi3_prime(cplx phi1, cplx dphi1, cplx d2phi1, double r,
                const PhysicsParams& p) {
  check_radius(r);
  const double f = cornell_f(r, p);
  const double fp = cornell_f_prime(r, p);
  return I * (d2phi1 + p.M * p.omega * (fp * phi1 + f * dphi1)) / p.M;
}

std::array<cplx, 5> component_equations(const SpinorComponents& c, cplx dphi1,
                                        cplx dphi3, double r, double E,
                                        const QuantumNumbers& qn,
                                        const PhysicsParams& p) {
  p.validate();
  qn.validate();
  check_radius(r);
  const double al = p.alpha;
  const double m = static_cast<double>(qn.m);
  const double f = cornell_f(r, p);
  std::array<cplx, 5> eq;
  // First equation carries the derivative of Phi3 and the interaction;
  // the flux enters it and the fourth equation as a bare -phi term.
  eq[0] = -I * r * al * dphi3 + I * al * (p.M * p.omega * r * f - 1.0) * c.c3 +
          E * r * al * c.c2 + (m + E * r * r * al * p.Omega) * c.c4 +
          p.k * r * al * c.c5 - r * al * p.M * c.c1 - p.phi * c.c4;
  eq[1] = E * c.c1 - p.M * c.c2;
  eq[2] = I * dphi1 + I * p.M * p.omega * f * c.c1 - p.M * c.c3;
  eq[3] = r * r * al * E * p.Omega * c.c1 + m * c.c1 + r * al * p.M * c.c4 -
          p.phi * c.c1;
  eq[4] = p.k * c.c1 + p.M * c.c5;
  return eq;
}

std::array<double, 5> component_residuals(const SpinorComponents& c,
                                          cplx dphi1, cplx dphi3, double r,
                                          double E, const QuantumNumbers& qn,
                                          const PhysicsParams& p) {
  const std::array<cplx, 5> eq =
      component_equations(c, dphi1, dphi3, r, E, qn, p);
  std::array<double, 5> out;
  for (int i = 0; i < 5; ++i) out[i] = std::abs(eq[i]);
  return out;
}

RadialCoefficients radial_coefficients(double E, const QuantumNumbers& qn,
                                       const PhysicsParams& p) {
  p.validate();
  qn.validate();
  const double meff = p.m_eff(qn.m);
  const double Mw = p.M * p.omega;
  RadialCoefficients rc;
  rc.quadratic = Mw * Mw * p.A * p.A + E * E * p.Omega * p.Omega;
  rc.inverse_square = Mw * Mw * p.B * p.B + (meff * meff) / (p.alpha * p.alpha);
  rc.constant = -E * E + p.k * p.k + p.M * p.M +
                2.0 * E * p.Omega * meff / p.alpha - 2.0 * Mw * p.A +
                2.0 * p.A * p.B * Mw * Mw;
  return rc;
}

cplx radial_lhs(cplx phi1, cplx dphi1, cplx d2phi1, double r, double E,
                const QuantumNumbers& qn, const PhysicsParams& p) {
  check_radius(r);
  const RadialCoefficients rc = radial_coefficients(E, qn, p);
  const double w =
      rc.quadratic * r * r + rc.inverse_square / (r * r) + rc.constant;
  return d2phi1 + dphi1 / r - w * phi1;
}

double radial_residual(cplx phi1, cplx dphi1, cplx d2phi1, double r, double E,
                       const QuantumNumbers& qn, const PhysicsParams& p) {
  return std::abs(radial_lhs(phi1, dphi1, d2phi1, r, E, qn, p));
}

double radial_weight_general(double r, double f, double fprime, double E,
                             const QuantumNumbers& qn,
                             const PhysicsParams& p) {
  p.validate();
  qn.validate();
  check_radius(r);
  const double meff = p.m_eff(qn.m);
  const double Mw = p.M * p.omega;
  return Mw * Mw * f * f - Mw * f / r - Mw * fprime +
         (meff * meff) / (p.alpha * p.alpha * r * r) +
         E * E * p.Omega * p.Omega * r * r - E * E + p.k * p.k + p.M * p.M +
         2.0 * E * p.Omega * meff / p.alpha;
}

cplx radial_lhs_general(cplx phi1, cplx dphi1, cplx d2phi1, double r, double f,
                        double fprime, double E, const QuantumNumbers& qn,
                        const PhysicsParams& p) {
  const double w = radial_weight_general(r, f, fprime, E, qn, p);
  return d2phi1 + dphi1 / r - w * phi1;
}

}  // namespace dkp::reduction
