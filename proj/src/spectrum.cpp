#include "dkposc/spectrum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "dkposc/nu.hpp"

namespace dkp::spectrum {

namespace {

// Adaptive Simpson on [a, b]; eps is an absolute budget for the interval.
double simpson_once(const std::function<double(double)>& f, double a,
                    double fa, double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson_rec(const std::function<double(double)>& f, double a,
                            double fa, double b, double fb, double fm,
                            double whole, double eps, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson_once(f, a, fa, m, fm, flm);
  const double right = simpson_once(f, m, fm, b, fb, frm);
  const double delta = left + right - whole;
  if (depth <= 0) throw numeric_failure("quadrature recursion exhausted");
  if (std::fabs(delta) <= 15.0 * eps)
    return left + right + delta / 15.0;
  return adaptive_simpson_rec(f, a, fa, m, fm, flm, left, 0.5 * eps,
                              depth - 1) +
         adaptive_simpson_rec(f, m, fm, b, fb, frm, right, 0.5 * eps,
                              depth - 1);
}

// A single Simpson panel over [a, b] is useless for sizing the error budget
// when the integrand lives on a small slice of the interval, so the budget
// comes from a composite pass and the refinement runs panel by panel.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double rel_tol) {
  constexpr int kPanels = 128;
  const double h = (b - a) / kPanels;
  std::array<double, kPanels + 1> fx;
  std::array<double, kPanels> fmid;
  for (int i = 0; i <= kPanels; ++i) fx[i] = f(a + i * h);
  for (int i = 0; i < kPanels; ++i) fmid[i] = f(a + (i + 0.5) * h);
  double coarse = 0.0;
  for (int i = 0; i < kPanels; ++i)
    coarse += h / 6.0 * (fx[i] + 4.0 * fmid[i] + fx[i + 1]);
  const double eps = rel_tol * std::max(std::fabs(coarse),
                                        std::numeric_limits<double>::min());
  double total = 0.0;
  for (int i = 0; i < kPanels; ++i) {
    const double pa = a + i * h;
    const double pb = a + (i + 1) * h;
    const double whole = simpson_once(f, pa, fx[i], pb, fx[i + 1], fmid[i]);
    total += adaptive_simpson_rec(f, pa, fx[i], pb, fx[i + 1], fmid[i], whole,
                                  eps / kPanels, 48);
  }
  return total;
}

double bisect(const std::function<double(double)>& g, double a, double b,
              double ga, double tol, int& iters) {
  iters = 0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (a + b);
    if ((b - a) <= tol * std::max(1.0, std::fabs(mid))) {
      iters = i;
      return mid;
    }
    const double gm = g(mid);
    ++iters;
    if (gm == 0.0) return mid;
    if ((ga < 0.0) != (gm < 0.0))
      b = mid;
    else {
      a = mid;
      ga = gm;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double laguerre(int n, double a, double x) {
  if (n < 0) throw invalid_parameter("n must be >= 0");
  if (!(a > -1.0)) throw invalid_parameter("order a must exceed -1");
  if (!(x >= 0.0)) throw invalid_parameter("x must be >= 0");
  if (n == 0) return 1.0;
  double lm1 = 1.0;            // L_0
  double l = 1.0 + a - x;      // L_1
  for (int j = 2; j <= n; ++j) {
    const double next =
        ((2.0 * j - 1.0 + a - x) * l - (j - 1.0 + a) * lm1) / j;
    lm1 = l;
    l = next;
  }
  return l;
}

double laguerre_prime(int n, double a, double x) {
  if (n == 0) return 0.0;
  return -laguerre(n - 1, a + 1.0, x);
}

double energy_no_rotation(const QuantumNumbers& qn, const PhysicsParams& p) {
  p.validate();
  qn.validate();
  if (p.Omega != 0.0)
    throw invalid_parameter("Omega must be 0 for the closed form");
  const double nu = nu::eigenfunction_exponent(qn, p);
  const double Mw = p.M * p.omega;
  const double e2 = p.k * p.k + p.M * p.M +
                    2.0 * Mw * p.A * (2.0 * qn.n + nu) +
                    2.0 * p.A * p.B * Mw * Mw;
  if (!(e2 >= 0.0))
    throw no_real_root("squared energy is negative in the closed form");
  return std::sqrt(e2);
}

SolveReport solve_energy(const QuantumNumbers& qn, const PhysicsParams& p,
                         double tolerance) {
  p.validate();
  qn.validate();
  if (!(tolerance > 0.0)) throw invalid_parameter("tolerance must be > 0");
  const auto g = [&](double E) {
    return nu::quantization_residual(E, qn, p);
  };
  const double nu_exp = nu::eigenfunction_exponent(qn, p);
  const double width = 2.0 * qn.n + nu_exp + 2.0;
  const double base_limit =
      10.0 * (p.M + std::fabs(p.k) + p.M * p.omega * std::fabs(p.A) * width +
              p.Omega * width * width +
              (std::fabs(static_cast<double>(qn.m)) + std::fabs(p.phi)) *
                  p.Omega / p.alpha +
              1.0);

  SolveReport rep{};
  for (int expansion = 0; expansion <= 3; ++expansion) {
    const double limit = base_limit * static_cast<double>(1 << expansion);
    const int pts = 4096 << expansion;
    std::vector<double> x(pts), y(pts);
    for (int i = 0; i < pts; ++i) {
      x[i] = -limit + 2.0 * limit * i / (pts - 1);
      y[i] = g(x[i]);
    }
    rep.roots.clear();
    rep.iterations.clear();
    for (int i = 0; i + 1 < pts; ++i) {
      if (y[i] == 0.0) {
        rep.roots.push_back({x[i], 0.0, x[i] >= 0.0 ? 1 : -1, false});
        rep.iterations.push_back(0);
        continue;
      }
      if ((y[i] < 0.0) != (y[i + 1] < 0.0)) {
        int iters = 0;
        const double root = bisect(g, x[i], x[i + 1], y[i], tolerance, iters);
        rep.roots.push_back(
            {root, std::fabs(g(root)), root >= 0.0 ? 1 : -1, false});
        rep.iterations.push_back(iters);
      }
    }
    // Tangency candidates: |g| dips to ~zero without crossing. Found by
    // shrinking the bracketing triple around an interior minimum.
    for (int i = 1; i + 1 < pts; ++i) {
      const double ay = std::fabs(y[i]);
      if (!(ay < std::fabs(y[i - 1]) && ay <= std::fabs(y[i + 1]))) continue;
      if ((y[i - 1] < 0.0) != (y[i] < 0.0) ||
          (y[i] < 0.0) != (y[i + 1] < 0.0))
        continue;  // handled by the sign-change pass
      const double gscale = std::max(1.0, std::fabs(nu::lambda3(x[i], qn, p)));
      if (ay > 1e-6 * gscale) continue;  // nowhere near a tangency
      double lo = x[i - 1], hi = x[i + 1], mid = x[i], gm = ay;
      for (int it = 0; it < 100; ++it) {
        const double l2 = 0.5 * (lo + mid), r2 = 0.5 * (mid + hi);
        const double gl = std::fabs(g(l2)), gr = std::fabs(g(r2));
        if (gl < gm && gl <= gr) {
          hi = mid;
          mid = l2;
          gm = gl;
        } else if (gr < gm) {
          lo = mid;
          mid = r2;
          gm = gr;
        } else {
          lo = l2;
          hi = r2;
        }
      }
      if (gm < 1e-10 * gscale) {
        const bool dup = std::any_of(
            rep.roots.begin(), rep.roots.end(), [&](const EnergyRoot& r) {
              return std::fabs(r.E - mid) <=
                     1e-6 * std::max(1.0, std::fabs(mid));
            });
        if (!dup) {
          rep.roots.push_back({mid, gm, mid >= 0.0 ? 1 : -1, true});
          rep.iterations.push_back(100);
        }
      }
    }
    rep.scan_limit = limit;
    rep.scan_points = pts;
    rep.expansions = expansion;
    if (!rep.roots.empty()) {
      std::vector<int> order(rep.roots.size());
      for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = static_cast<int>(i);
      std::sort(order.begin(), order.end(), [&](int l, int r) {
        return rep.roots[l].E < rep.roots[r].E;
      });
      SolveReport sorted = rep;
      for (std::size_t i = 0; i < order.size(); ++i) {
        sorted.roots[i] = rep.roots[order[i]];
        sorted.iterations[i] = rep.iterations[order[i]];
      }
      return sorted;
    }
  }
  std::ostringstream msg;
  msg << "no real root of the quantization condition within |E| <= "
      << base_limit * 8.0;
  throw no_real_root(msg.str());
}

double wavefunction(double r, const WavefunctionSpec& w) {
  if (!(r >= 0.0)) throw invalid_parameter("r must be >= 0");
  const double x = w.scale * r * r;
  return w.norm * std::pow(r, w.exponent) * std::exp(-0.5 * x) *
         laguerre(w.n, w.exponent, x);
}

double wavefunction_derivative(double r, const WavefunctionSpec& w) {
  if (!(r > 0.0)) throw invalid_parameter("r must be > 0");
  const double th = w.exponent, a = w.scale;
  const double x = a * r * r;
  const double P = laguerre(w.n, th, x);
  const double Pp = laguerre_prime(w.n, th, x);
  return w.norm * std::exp(-0.5 * x) *
         (th * std::pow(r, th - 1.0) * P - a * std::pow(r, th + 1.0) * P +
          2.0 * a * std::pow(r, th + 1.0) * Pp);
}

double wavefunction_second_derivative(double r, const WavefunctionSpec& w) {
  if (!(r > 0.0)) throw invalid_parameter("r must be > 0");
  const double th = w.exponent, a = w.scale;
  const double x = a * r * r;
  const double P = laguerre(w.n, th, x);
  const double Pp = laguerre_prime(w.n, th, x);
  const double Ppp = w.n >= 2 ? laguerre(w.n - 2, th + 2.0, x) : 0.0;
  const double rm2 = std::pow(r, th - 2.0);
  const double r0 = std::pow(r, th);
  const double rp2 = std::pow(r, th + 2.0);
  return w.norm * std::exp(-0.5 * x) *
         ((th * (th - 1.0) * rm2 - a * (2.0 * th + 1.0) * r0 + a * a * rp2) *
              P +
          (2.0 * a * (2.0 * th + 1.0) * r0 - 4.0 * a * a * rp2) * Pp +
          4.0 * a * a * rp2 * Ppp);
}

double normalization_integral(int n, double exponent, double scale) {
  if (n < 0) throw invalid_parameter("n must be >= 0");
  if (!(exponent >= 0.0)) throw invalid_parameter("exponent must be >= 0");
  if (!(scale > 0.0)) throw invalid_parameter("scale must be > 0");
  const double r_cut = 6.0 * std::sqrt((2.0 * n + exponent + 2.0) / scale);
  const auto integrand = [&](double r) {
    if (r == 0.0) return 0.0;
    const double x = scale * r * r;
    const double q =
        std::pow(r, exponent) * std::exp(-0.5 * x) * laguerre(n, exponent, x);
    return q * q * r;
  };
  return adaptive_simpson(integrand, 0.0, r_cut, 1e-10);
}

double normalization(const WavefunctionSpec& w) {
  const double integral = normalization_integral(w.n, w.exponent, w.scale);
  if (!(integral > 0.0) || !std::isfinite(integral))
    throw numeric_failure("normalization integral did not converge");
  return 1.0 / std::sqrt(integral);
}

WavefunctionSpec make_wavefunction(double E, const QuantumNumbers& qn,
                                   const PhysicsParams& p) {
  p.validate();
  qn.validate();
  WavefunctionSpec w{};
  w.n = qn.n;
  w.E = E;
  w.exponent = nu::eigenfunction_exponent(qn, p);
  w.scale = nu::gaussian_scale(E, p);
  if (!(w.scale > 0.0))
    throw invalid_parameter(
        "scale vanished: M*omega*A and E*Omega are both zero");
  w.norm = 1.0;
  w.norm = normalization(w);
  return w;
}

double charge_density(double r, double E, const QuantumNumbers& qn,
                      const PhysicsParams& p, double phi1_value) {
  p.validate();
  if (!(r >= 0.0)) throw invalid_parameter("r must be >= 0");
  const double meff = p.m_eff(qn.m);
  const double bracket =
      E * p.alpha * (r * r * p.Omega * p.Omega - 1.0) + meff * p.Omega;
  return -2.0 * bracket / (p.M * p.alpha) * (phi1_value * phi1_value);
}

std::optional<double> charge_sign_radius(double E, const QuantumNumbers& qn,
                                         const PhysicsParams& p) {
  p.validate();
  const double meff = p.m_eff(qn.m);
  const double denom = E * p.alpha * p.Omega * p.Omega;
  if (denom == 0.0) return std::nullopt;
  const double r2 = (E * p.alpha - meff * p.Omega) / denom;
  if (!(r2 > 0.0)) return std::nullopt;
  return std::sqrt(r2);
}

std::pair<QuantumNumbers, PhysicsParams> ab_shift_map(const QuantumNumbers& qn,
                                                      const PhysicsParams& p,
                                                      int s) {
  QuantumNumbers shifted = qn;
  shifted.m = qn.m - s;
  return {shifted, p};
}

}  // namespace dkp::spectrum
