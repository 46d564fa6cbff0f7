#pragma once

#include <array>

#include "dkposc/matrix.hpp"
#include "dkposc/params.hpp"

// Background geometry of the rotating cosmic-string spacetime
//   ds^2 = -(dt + alpha Omega r^2 dphi)^2 + dr^2 + alpha^2 r^2 dphi^2 + dz^2
// in coordinates (t, r, phi, z), plus the flat 5x5 spin-0 matrices and the
// connection objects built from the tetrad.
namespace dkp::geometry {

// Coordinate order used for every 4-index below.
enum Coord : int { T = 0, R = 1, PHI = 2, Z = 3 };

struct BetaSet {
  std::array<Mat5, 4> beta;  // b^0, b^1, b^2, b^3
  Mat5 eta0;                 // 2 (b^0)^2 - 1; squares to the identity
};

// Flat Duffin-Kemmer-Petiau matrices in the 5-dim (spin-0) representation,
// integer entries, frozen basis:
//   b^0 couples rows 0,1 symmetrically, b^k couples row 0 to row k+1
//   antisymmetrically (so the space blocks sit in rows 2, 3, 4). They satisfy
//     b^a b^c b^b + b^b b^c b^a = b^a eta^{cb} + b^b eta^{ca}
// exactly, with algebra metric eta = diag(+1,-1,-1,-1). The split into a
// symmetric time block and antisymmetric space blocks is what fixes that
// signature; it is the one that reproduces the five component equations.
const BetaSet& dkp_beta_matrices();

// Algebra metric of the matrices above: diag(+1,-1,-1,-1).
const Mat4& beta_algebra_metric();

// Tangent-space metric for tetrad contractions: diag(-1,+1,+1,+1).
// Distinct object from beta_algebra_metric on purpose.
const Mat4& minkowski_metric();

// e^a_mu, indexed [a][mu]. Column phi carries (alpha Omega r^2, 0, alpha r, 0).
Mat4 tetrad_down(double r, const SpacetimeParams& sp);

// Inverse tetrad e_a^mu, indexed [mu][a].
Mat4 tetrad_up(double r, const SpacetimeParams& sp);

struct TetradPair {
  Mat4 down;  // e^a_mu
  Mat4 up;    // e_a^mu; up * down == identity
};

TetradPair tetrad_at(double r, const SpacetimeParams& sp);

// g_{mu nu} = e^a_mu e^b_nu eta_{ab}.
Mat4 metric_at(double r, const SpacetimeParams& sp);

Mat4 metric_inverse_at(double r, const SpacetimeParams& sp);

// det g = -alpha^2 r^2; throws singular_metric if it degenerates.
double metric_det_at(double r, const SpacetimeParams& sp);

// Inertia (n_negative, n_zero, n_positive) of a symmetric 4x4 via LDL^T
// with diagonal pivoting. A Lorentzian metric returns {1, 0, 3}.
std::array<int, 3> symmetric_inertia(const Mat4& g, double tol = 1e-12);

// Christoffel symbols of the second kind, indexed [lambda][mu][nu], from
// the closed-form r-derivatives of the metric. Throws singular_metric
// when the reduced angular block g_phiphi - g_tphi^2/g_tt degenerates
// (no valid input reaches that, but malformed extensions might).
std::array<Mat4, 4> christoffel_at(double r, const SpacetimeParams& sp);

// Levi-Civita spin connection omega_{mu a b}, indexed [mu][a][b],
// antisymmetric in (a, b).
std::array<Mat4, 4> spin_connection(double r, const SpacetimeParams& sp);

// Curved matrices b^mu = e_a^mu b^a.
std::array<Mat5, 4> beta_curved(double r, const SpacetimeParams& sp);

// Spinor affine connection Gamma_mu = (1/2) omega_{mu a b} [b^b, b^a].
// The commutator order is part of the frozen representation convention;
// it is the one under which the covariant derivative annihilates b^nu.
std::array<Mat5, 4> spinor_connection(double r, const SpacetimeParams& sp);

// b^mu Gamma_mu. For this background the only nonzero entry is -1/r at
// row 0, column 2, independent of alpha and Omega.
Mat5 spinor_connection_contraction(double r, const SpacetimeParams& sp);

}  // namespace dkp::geometry
