#pragma once

#include <stdexcept>
#include <string>

namespace dkp {

// Parameter validation failure; the message names the offending field.
class invalid_parameter : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// The energy scan found no sign change of the quantization function.
class no_real_root : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An internal numeric routine failed to converge or lost accuracy.
class numeric_failure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// det g reached zero at some radius; carries the radius for diagnostics.
class singular_metric : public std::runtime_error {
public:
  singular_metric(const std::string& what, double r)
      : std::runtime_error(what), radius(r) {}
  double radius;
};

// The finite-difference check could not bracket the analytic root.
class oracle_disagreement : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Rotation and angular-deficit parameters of the background.
struct SpacetimeParams {
  double alpha = 1.0;  // deficit parameter, 0 < alpha <= 1
  double Omega = 0.0;  // rotation (vorticity), >= 0

  void validate() const;
};

// Full model parameter set. phi is the flux in 2*pi/e units, so integer
// phi is gauge-equivalent to a shift of the magnetic quantum number.
struct PhysicsParams {
  double M = 1.0;      // mass, > 0
  double omega = 1.0;  // oscillator frequency, > 0
  double Omega = 0.0;  // spacetime rotation, >= 0
  double alpha = 1.0;  // angular deficit, 0 < alpha <= 1
  double A = 0.0;      // string tension (linear confinement)
  double B = 0.0;      // Coulomb-like strength
  double k = 0.0;      // axial wave number
  double phi = 0.0;    // Aharonov-Bohm flux (in flux-quantum units)

  void validate() const;  // throws invalid_parameter naming the field
  SpacetimeParams spacetime() const { return {alpha, Omega}; }
  // Flux enters every formula only through this shift.
  double m_eff(int m) const { return static_cast<double>(m) - phi; }
};

struct QuantumNumbers {
  int n = 0;  // radial node count, >= 0
  int m = 0;  // magnetic quantum number

  void validate() const;
};

}  // namespace dkp
