#include "dkposc/geometry.hpp"

#include <cmath>

namespace dkp::geometry {

namespace {

Mat5 unit5(int i, int j) {
  Mat5 e{};
  e[i][j] = 1.0;
  return e;
}

// r = 0 is where the angular block g_phiphi - g_tphi^2/g_tt = alpha^2 r^2
// degenerates, so it gets the singularity error, not the parameter one.
void check_radius(double r) {
  if (!(r >= 0.0) || !std::isfinite(r))
    throw invalid_parameter("r must be nonnegative and finite");
  if (r == 0.0) throw singular_metric("metric degenerates on the axis", r);
}

}  // namespace

const BetaSet& dkp_beta_matrices() {
  static const BetaSet set = [] {
    BetaSet s{};
    s.beta[0] = mat_add(unit5(0, 1), unit5(1, 0));
    for (int k = 1; k <= 3; ++k)
      s.beta[k] = mat_sub(unit5(k + 1, 0), unit5(0, k + 1));
    const Mat5& b0 = s.beta[0];
    s.eta0 = mat_sub(mat_scale(2.0, mat_mul(b0, b0)), identity_mat<5>());
    return s;
  }();
  return set;
}

const Mat4& beta_algebra_metric() {
  static const Mat4 eta = [] {
    Mat4 e{};
    e[0][0] = 1.0;
    e[1][1] = e[2][2] = e[3][3] = -1.0;
    return e;
  }();
  return eta;
}

const Mat4& minkowski_metric() {
  static const Mat4 eta = [] {
    Mat4 e{};
    e[0][0] = -1.0;
    e[1][1] = e[2][2] = e[3][3] = 1.0;
    return e;
  }();
  return eta;
}

Mat4 tetrad_down(double r, const SpacetimeParams& sp) {
  sp.validate();
  check_radius(r);
  Mat4 e{};
  e[0][T] = 1.0;
  e[0][PHI] = sp.alpha * sp.Omega * r * r;
  e[1][R] = 1.0;
  e[2][PHI] = sp.alpha * r;
  e[3][Z] = 1.0;
  return e;
}

Mat4 tetrad_up(double r, const SpacetimeParams& sp) {
  sp.validate();
  check_radius(r);
  Mat4 e{};
  e[T][0] = 1.0;
  e[T][2] = -sp.Omega * r;
  e[R][1] = 1.0;
  e[PHI][2] = 1.0 / (sp.alpha * r);
  e[Z][3] = 1.0;
  return e;
}

TetradPair tetrad_at(double r, const SpacetimeParams& sp) {
  return {tetrad_down(r, sp), tetrad_up(r, sp)};
}

Mat4 metric_at(double r, const SpacetimeParams& sp) {
  const Mat4 e = tetrad_down(r, sp);
  const Mat4& eta = minkowski_metric();
  Mat4 g{};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      double s = 0.0;
      for (int a = 0; a < 4; ++a) s += eta[a][a] * e[a][mu] * e[a][nu];
      g[mu][nu] = s;
    }
  return g;
}

Mat4 metric_inverse_at(double r, const SpacetimeParams& sp) {
  // g^{mu nu} = e_a^mu e_b^nu eta^{ab}; eta is its own inverse.
  const Mat4 e = tetrad_up(r, sp);
  const Mat4& eta = minkowski_metric();
  Mat4 g{};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      double s = 0.0;
      for (int a = 0; a < 4; ++a) s += eta[a][a] * e[mu][a] * e[nu][a];
      g[mu][nu] = s;
    }
  return g;
}

double metric_det_at(double r, const SpacetimeParams& sp) {
  Mat4 g = metric_at(r, sp);
  // LU with partial pivoting; a 4x4 keeps this well conditioned here.
  double det = 1.0;
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int row = col + 1; row < 4; ++row)
      if (std::fabs(g[row][col]) > std::fabs(g[piv][col])) piv = row;
    if (piv != col) {
      std::swap(g[piv], g[col]);
      det = -det;
    }
    const double d = g[col][col];
    if (d == 0.0) {
      det = 0.0;
      break;
    }
    det *= d;
    for (int row = col + 1; row < 4; ++row) {
      const double f = g[row][col] / d;
      for (int j = col; j < 4; ++j) g[row][j] -= f * g[col][j];
    }
  }
  // Analytically det g = -alpha^2 r^2, nonzero for every valid input; the
  // guard protects malformed extensions of the background only.
  if (!(std::fabs(det) > 0.0))
    throw singular_metric("metric determinant vanished", r);
  return det;
}

std::array<int, 3> symmetric_inertia(const Mat4& g_in, double tol) {
  // LDL^T with symmetric diagonal pivoting; a hyperbolic 2x2 block fallback
  // covers the case of a vanishing diagonal. Signs of D give the inertia.
  Mat4 a = g_in;
  bool active[4] = {true, true, true, true};
  int neg = 0, zero = 0, pos = 0;
  const double scale = std::max(max_abs(a), 1.0);
  int remaining = 4;
  while (remaining > 0) {
    int piv = -1;
    double best = -1.0;
    for (int i = 0; i < 4; ++i)
      if (active[i] && std::fabs(a[i][i]) > best) {
        best = std::fabs(a[i][i]);
        piv = i;
      }
    double off = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (active[i] && active[j] && i != j)
          off = std::max(off, std::fabs(a[i][j]));
    if (best <= tol * scale && off <= tol * scale) {
      zero += remaining;
      break;
    }
    if (best <= tol * scale) {
      // All remaining diagonals negligible: the largest off-diagonal pair
      // spans a hyperbolic plane, one positive and one negative direction.
      int p = -1, q = -1;
      double bb = -1.0;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          if (active[i] && active[j] && std::fabs(a[i][j]) > bb) {
            bb = std::fabs(a[i][j]);
            p = i;
            q = j;
          }
      neg += 1;
      pos += 1;
      const double b = a[p][q];
      for (int i = 0; i < 4; ++i) {
        if (!active[i] || i == p || i == q) continue;
        const double cip = a[i][q] / b;
        const double ciq = a[i][p] / b;
        for (int j = 0; j < 4; ++j) {
          if (!active[j] || j == p || j == q) continue;
          a[i][j] -= cip * a[p][j] + ciq * a[q][j];
        }
      }
      active[p] = active[q] = false;
      remaining -= 2;
      continue;
    }
    const double d = a[piv][piv];
    if (d > 0.0)
      ++pos;
    else
      ++neg;
    for (int i = 0; i < 4; ++i) {
      if (!active[i] || i == piv) continue;
      const double f = a[i][piv] / d;
      for (int j = 0; j < 4; ++j) {
        if (!active[j] || j == piv) continue;
        a[i][j] -= f * a[piv][j];
      }
    }
    active[piv] = false;
    --remaining;
  }
  return {neg, zero, pos};
}

std::array<Mat4, 4> christoffel_at(double r, const SpacetimeParams& sp) {
  sp.validate();
  check_radius(r);
  const double al = sp.alpha, Om = sp.Omega;
  {
    // Reduced angular block g_phiphi - g_tphi^2 / g_tt = alpha^2 r^2;
    // degeneracy would make the inverse metric blow up.
    const Mat4 g = metric_at(r, sp);
    const double reduced = g[PHI][PHI] - g[T][PHI] * g[T][PHI] / g[T][T];
    if (!(std::fabs(reduced) > 0.0))
      throw singular_metric("angular metric block degenerated", r);
  }
  std::array<Mat4, 4> G{};
  // Nonzero symbols of this background, symmetric in the lower pair.
  // Cross-checked against central differences of the metric.
  G[T][T][R] = G[T][R][T] = Om * Om * r;
  G[T][R][PHI] = G[T][PHI][R] = al * Om * Om * Om * r * r * r;
  G[R][T][PHI] = G[R][PHI][T] = al * Om * r;
  G[R][PHI][PHI] = -al * al * r * (1.0 - 2.0 * Om * Om * r * r);
  G[PHI][T][R] = G[PHI][R][T] = -Om / (al * r);
  G[PHI][R][PHI] = G[PHI][PHI][R] = 1.0 / r - Om * Om * r;
  return G;
}

std::array<Mat4, 4> spin_connection(double r, const SpacetimeParams& sp) {
  sp.validate();
  check_radius(r);
  const double al = sp.alpha, Om = sp.Omega;
  std::array<Mat4, 4> w{};
  auto set = [&](int mu, int a, int b, double v) {
    w[mu][a][b] = v;
    w[mu][b][a] = -v;
  };
  set(T, 1, 2, Om);
  set(R, 0, 2, Om);
  set(PHI, 0, 1, -al * Om * r);
  set(PHI, 1, 2, al * (Om * Om * r * r - 1.0));
  return w;
}

std::array<Mat5, 4> beta_curved(double r, const SpacetimeParams& sp) {
  const Mat4 up = tetrad_up(r, sp);
  const std::array<Mat5, 4>& b = dkp_beta_matrices().beta;
  std::array<Mat5, 4> out{};
  for (int mu = 0; mu < 4; ++mu) {
    Mat5 s{};
    for (int a = 0; a < 4; ++a)
      if (up[mu][a] != 0.0) s = mat_add(s, mat_scale(up[mu][a], b[a]));
    out[mu] = s;
  }
  return out;
}

std::array<Mat5, 4> spinor_connection(double r, const SpacetimeParams& sp) {
  const std::array<Mat4, 4> w = spin_connection(r, sp);
  const std::array<Mat5, 4>& b = dkp_beta_matrices().beta;
  std::array<Mat5, 4> G{};
  for (int mu = 0; mu < 4; ++mu) {
    Mat5 s{};
    for (int a = 0; a < 4; ++a)
      for (int c = 0; c < 4; ++c) {
        const double w_ac = w[mu][a][c];
        if (w_ac == 0.0) continue;
        s = mat_add(s, mat_scale(0.5 * w_ac, commutator(b[c], b[a])));
      }
    G[mu] = s;
  }
  return G;
}

Mat5 spinor_connection_contraction(double r, const SpacetimeParams& sp) {
  const std::array<Mat5, 4> bmu = beta_curved(r, sp);
  const std::array<Mat5, 4> Gmu = spinor_connection(r, sp);
  Mat5 s{};
  for (int mu = 0; mu < 4; ++mu) s = mat_add(s, mat_mul(bmu[mu], Gmu[mu]));
  return s;
}

}  // namespace dkp::geometry
