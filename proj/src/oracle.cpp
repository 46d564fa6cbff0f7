#include "dkposc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "dkposc/nu.hpp"

namespace dkp::oracle {

void Grid::validate() const {
  if (!(r_min > 0.0)) throw invalid_parameter("r_min must be > 0");
  if (!(r_max > r_min)) throw invalid_parameter("r_max must exceed r_min");
  if (points < 100) throw invalid_parameter("points must be >= 100");
}

Grid default_grid(int n, double a, double nu, int points) {
  if (n < 0) throw invalid_parameter("n must be >= 0");
  if (!(a > 0.0)) throw invalid_parameter("scale a must be > 0");
  if (!(nu >= 0.0)) throw invalid_parameter("nu must be >= 0");
  Grid g{1e-4 / std::sqrt(a), 3.0 * std::sqrt((2.0 * n + nu + 2.0) / a),
         points};
  g.validate();
  return g;
}

namespace {

// Interior diagonal of the discretized operator.
std::vector<double> build_diagonal(double a, double nu, const Grid& g) {
  const double h = g.step();
  const double inv_h2 = 1.0 / (h * h);
  const int n_interior = g.points - 2;
  std::vector<double> d(n_interior);
  const double cc = nu * nu - 0.25;
  for (int i = 0; i < n_interior; ++i) {
    const double r = g.r_min + h * (i + 1);
    d[i] = 2.0 * inv_h2 + a * a * r * r + cc / (r * r);
  }
  return d;
}

// Number of eigenvalues strictly below x, by the Sturm sequence of the
// tridiagonal matrix (diagonal d, constant off-diagonal -1/h^2).
int count_below(const std::vector<double>& d, double off2, double x) {
  const double pivmin = 1e-30 * std::max(1.0, off2);
  int count = 0;
  double q = d[0] - x;
  if (std::fabs(q) < pivmin) q = -pivmin;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < d.size(); ++i) {
    q = (d[i] - x) - off2 / q;
    if (std::fabs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

}  // namespace

double sturm_eigenvalue(int n, double a, double nu, const Grid& g) {
  if (n < 0) throw invalid_parameter("n must be >= 0");
  if (!(a > 0.0)) throw invalid_parameter("scale a must be > 0");
  if (!(nu >= 0.0)) throw invalid_parameter("nu must be >= 0");
  g.validate();
  const double h = g.step();
  const double off = -1.0 / (h * h);
  const double off2 = off * off;
  const std::vector<double> d = build_diagonal(a, nu, g);
  if (static_cast<int>(d.size()) <= n)
    throw invalid_parameter("grid has fewer interior nodes than n+1");
  double lo = d[0], hi = d[0];
  for (double di : d) {
    lo = std::min(lo, di);
    hi = std::max(hi, di);
  }
  lo += 2.0 * off;  // Gershgorin bounds; off is negative
  hi -= 2.0 * off;
  const int want = n + 1;
  for (int it = 0; it < 300; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= 1e-13 * std::max(1.0, std::fabs(mid))) break;
    if (count_below(d, off2, mid) >= want)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

double fd_lambda(int n, double a, double nu, const Grid& g) {
  const double coarse = sturm_eigenvalue(n, a, nu, g);
  Grid fine = g;
  fine.points = 2 * g.points;
  const double refined = sturm_eigenvalue(n, a, nu, fine);
  if (std::fabs(refined - coarse) >
      1e-4 * std::max(1.0, std::fabs(refined))) {
    std::ostringstream msg;
    msg << "insufficient grid resolution: eigenvalue moved from " << coarse
        << " to " << refined << " when doubling " << g.points << " points";
    throw numeric_failure(msg.str());
  }
  return refined;
}

double tail_fraction(int n, double a, double nu, const Grid& g) {
  const double lambda = sturm_eigenvalue(n, a, nu, g);
  const double h = g.step();
  const double off = -1.0 / (h * h);
  std::vector<double> d = build_diagonal(a, nu, g);
  const int N = static_cast<int>(d.size());
  // Shift slightly off the eigenvalue so the solves stay regular while
  // the target eigenvector still dominates after a few iterations.
  const double shift = lambda + 1e-6 * std::max(1.0, std::fabs(lambda));
  std::vector<double> v(N, 1.0 / std::sqrt(static_cast<double>(N)));
  std::vector<double> dl(N), dd(N), du(N), du2(N), x(N);
  for (int iter = 0; iter < 4; ++iter) {
    // LU of the shifted tridiagonal with partial pivoting.
    for (int i = 0; i < N; ++i) {
      dd[i] = d[i] - shift;
      dl[i] = off;  // subdiagonal entry below row i
      du[i] = off;  // superdiagonal entry right of row i
      du2[i] = 0.0;
      x[i] = v[i];
    }
    for (int i = 0; i < N - 1; ++i) {
      if (std::fabs(dd[i]) >= std::fabs(dl[i])) {
        const double m = dd[i] != 0.0 ? dl[i] / dd[i] : 0.0;
        dd[i + 1] -= m * du[i];
        x[i + 1] -= m * x[i];
        dl[i] = 0.0;
      } else {
        // Swap rows i and i+1.
        const double m = dd[i] / dl[i];
        const double prev_du = du[i];
        dd[i] = dl[i];
        du[i] = dd[i + 1];
        du2[i] = i + 2 < N ? du[i + 1] : 0.0;
        dd[i + 1] = prev_du - m * du[i];
        if (i + 2 < N) du[i + 1] = -m * du2[i];
        std::swap(x[i], x[i + 1]);
        x[i + 1] -= m * x[i];
        dl[i] = 0.0;
      }
    }
    for (int i = N - 1; i >= 0; --i) {
      double s = x[i];
      if (i + 1 < N) s -= du[i] * x[i + 1];
      if (i + 2 < N) s -= du2[i] * x[i + 2];
      x[i] = dd[i] != 0.0 ? s / dd[i] : 0.0;
    }
    double nrm = 0.0;
    for (double xi : x) nrm += xi * xi;
    nrm = std::sqrt(nrm);
    if (!(nrm > 0.0) || !std::isfinite(nrm))
      throw numeric_failure("inverse iteration collapsed");
    for (int i = 0; i < N; ++i) v[i] = x[i] / nrm;
  }
  double peak = 0.0;
  for (double vi : v) peak = std::max(peak, std::fabs(vi));
  return std::fabs(v[N - 1]) / peak;
}

OracleResult oracle_energy(double E_reference, const QuantumNumbers& qn,
                           const PhysicsParams& p, int points) {
  p.validate();
  qn.validate();
  const double nu_exp = nu::eigenfunction_exponent(qn, p);
  const double a_ref = nu::gaussian_scale(E_reference, p);
  if (!(a_ref > 0.0))
    throw invalid_parameter(
        "scale vanished: M*omega*A and E*Omega are both zero");
  const int pts = points <= 0 ? 24001 : points;
  Grid grid = default_grid(qn.n, a_ref, nu_exp, pts);
  // Truncation control: enlarge the box until the state fits. Point count
  // grows with it so the spacing stays put.
  for (int attempt = 0; attempt < 3; ++attempt) {
    if (tail_fraction(qn.n, a_ref, nu_exp, grid) <= 1e-10) break;
    grid.r_max *= 2.0;
    grid.points *= 2;
  }

  OracleResult result{};
  result.E_reference = E_reference;
  result.grid = grid;

  const auto h = [&](double E) {
    return fd_lambda(qn.n, nu::gaussian_scale(E, p), nu_exp, grid) -
           nu::lambda3(E, qn, p);
  };

  const double ref_mag = std::max(std::fabs(E_reference), 1e-3);
  double delta = 1e-3 * ref_mag;
  double lo = E_reference - delta, hi = E_reference + delta;
  double h_lo = h(lo), h_hi = h(hi);
  result.history.push_back({lo, h_lo});
  result.history.push_back({hi, h_hi});
  int expansions = 0;
  while ((h_lo < 0.0) == (h_hi < 0.0)) {
    delta *= 2.0;
    if (delta > 0.05 * ref_mag) {
      std::ostringstream msg;
      msg << "finite-difference eigenvalue never matches the closed form "
             "within 5% of E = "
          << E_reference << " (residuals " << h_lo << " and " << h_hi << ")";
      throw oracle_disagreement(msg.str());
    }
    lo = E_reference - delta;
    hi = E_reference + delta;
    h_lo = h(lo);
    h_hi = h(hi);
    result.history.push_back({lo, h_lo});
    result.history.push_back({hi, h_hi});
    ++expansions;
  }
  result.bracket_expansions = expansions;

  for (int it = 0; it < 120; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= 1e-12 * std::max(1.0, std::fabs(mid))) break;
    const double hm = h(mid);
    result.history.push_back({mid, hm});
    if (hm == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((h_lo < 0.0) != (hm < 0.0))
      hi = mid;
    else {
      lo = mid;
      h_lo = hm;
    }
  }
  result.E = 0.5 * (lo + hi);
  return result;
}

}  // namespace dkp::oracle
