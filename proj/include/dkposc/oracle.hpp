#pragma once

#include <utility>
#include <vector>

#include "dkposc/params.hpp"

// Independent finite-difference check of the closed-form spectrum. The
// radial equation is mapped by Phi1 = S / sqrt(r) to Liouville form
//   -S'' + [ a^2 r^2 + (nu^2 - 1/4) / r^2 ] S = lambda S,
// discretized with second-order central differences and Dirichlet ends,
// and the (n+1)-th eigenvalue is isolated by Sturm-count bisection. The
// energy is recovered by matching lambda against the spectral constant.
// Nothing here touches the quantization condition; independence from the
// closed form is structural.
namespace dkp::oracle {

struct Grid {
  double r_min;  // > 0; Dirichlet cutoff standing in for the origin
  double r_max;
  int points;    // total nodes including both ends, >= 100

  void validate() const;
  double step() const { return (r_max - r_min) / (points - 1); }
};

// Grid sized for state (n, nu) at oscillator scale a:
//   r_min = 1e-4 / sqrt(a), r_max = 3 sqrt((2n + nu + 2) / a).
Grid default_grid(int n, double a, double nu, int points);

// (n+1)-th smallest eigenvalue of the discretized operator on one grid.
double sturm_eigenvalue(int n, double a, double nu, const Grid& g);

// Eigenvalue with resolution control: computed on g and on a grid with
// doubled point count; the two must agree to 1e-4 relative or a
// numeric_failure names the resolution. Returns the finer value.
// Converges to 2a(2n + 1 + nu) as the grid refines.
double fd_lambda(int n, double a, double nu, const Grid& g);

// Eigenvector weight at the last interior node relative to its maximum,
// by shifted inverse iteration; detects a clipping truncation radius.
double tail_fraction(int n, double a, double nu, const Grid& g);

struct OracleResult {
  double E;                // finite-difference energy
  double E_reference;      // closed-form energy the search started from
  Grid grid;               // grid actually used (after tail doubling)
  int bracket_expansions;  // widenings of the initial bracket
  std::vector<std::pair<double, double>> history;  // (E, residual) iterates
};

// Locates the finite-difference energy near E_reference by bisecting
//   h(E) = fd_lambda(n, a(E), nu, grid) - lambda3(E)
// on a grid frozen at E_reference. The bracket starts at +-1e-3 relative
// and doubles until a sign change appears; past +-5 percent an
// oracle_disagreement is thrown (a finding about the closed form, not a
// crash). points <= 0 selects the default resolution.
OracleResult oracle_energy(double E_reference, const QuantumNumbers& qn,
                           const PhysicsParams& p, int points);

}  // namespace dkp::oracle
