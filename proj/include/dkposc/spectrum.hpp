#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dkposc/params.hpp"

// Real roots of the quantization condition, normalized eigenfunctions,
// the conserved charge density, and the flux-shift equivalence map.
namespace dkp::spectrum {

// Generalized Laguerre polynomial L_n^a(x) by the stable three-term
// upward recurrence. Requires a > -1 and x >= 0.
double laguerre(int n, double a, double x);

// d/dx L_n^a(x) = -L_{n-1}^{a+1}(x); zero for n = 0.
double laguerre_prime(int n, double a, double x);

struct EnergyRoot {
  double E;
  double residual;  // |g(E)| at the returned root
  int branch;       // +1 for E >= 0, -1 otherwise
  bool flagged;     // true for a tangency (double-root) candidate
};

struct SolveReport {
  std::vector<EnergyRoot> roots;  // ascending in E
  double scan_limit;              // half-width of the final scan window
  int scan_points;                // samples in the final scan
  int expansions;                 // window doublings performed
  std::vector<int> iterations;    // bisection steps per root
};

// Every real zero of the quantization function inside an automatically
// sized window; the window is doubled up to three times while empty and
// no_real_root (carrying the bounds) is thrown if it stays empty.
SolveReport solve_energy(const QuantumNumbers& qn, const PhysicsParams& p,
                         double tolerance = 1e-12);

// Positive-branch closed form for Omega = 0,
//   E = sqrt(k^2 + M^2 + 2 M w A (2n + nu) + 2 A B M^2 w^2),
// used as an independent cross-check of the root scan.
double energy_no_rotation(const QuantumNumbers& qn, const PhysicsParams& p);

// Bound-state radial profile
//   Phi1(r) = norm * r^exponent * exp(-scale r^2 / 2)
//             * L_n^exponent(scale r^2).
struct WavefunctionSpec {
  int n;
  double exponent;  // nu, >= 0
  double scale;     // a(E), > 0
  double E;
  double norm;
};

double wavefunction(double r, const WavefunctionSpec& w);        // r >= 0
double wavefunction_derivative(double r, const WavefunctionSpec& w);
double wavefunction_second_derivative(double r, const WavefunctionSpec& w);

// Integral of the squared un-normalized profile against r dr; adaptive
// quadrature, relative accuracy 1e-10.
double normalization_integral(int n, double exponent, double scale);

// Constant making the profile a unit vector in the r dr measure.
double normalization(const WavefunctionSpec& w);

// Assembles the full normalized spec for an energy (usually a root from
// solve_energy). Rejects configurations whose Gaussian scale vanishes.
WavefunctionSpec make_wavefunction(double E, const QuantumNumbers& qn,
                                   const PhysicsParams& p);

// Conserved charge density at radius r for a profile value phi1:
//   J^t = -2 [E alpha (Omega^2 r^2 - 1) + (m - phi) Omega] / (M alpha)
//         * phi1^2,
// with the overall proportionality constant fixed to 1.
double charge_density(double r, double E, const QuantumNumbers& qn,
                      const PhysicsParams& p, double phi1_value);

// Radius where the charge density changes sign, when it exists at finite
// positive r: r* = sqrt((E alpha - (m - phi) Omega) / (E alpha Omega^2)).
std::optional<double> charge_sign_radius(double E, const QuantumNumbers& qn,
                                         const PhysicsParams& p);

// Shifting the flux by an integer s while shifting m by the same s is a
// gauge move: (n, m, phi + s) and (n, m - s, phi) have identical spectra.
// Returns the second configuration.
std::pair<QuantumNumbers, PhysicsParams> ab_shift_map(const QuantumNumbers& qn,
                                                      const PhysicsParams& p,
                                                      int s);

}  // namespace dkp::spectrum
