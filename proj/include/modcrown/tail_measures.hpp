#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "modcrown/errors.hpp"
#include "modcrown/fit.hpp"
#include "modcrown/quadrature.hpp"

// Measures on [1, infinity) with controlled tails, their Laplace transforms
// L(t) = int e^{-tx} dmu(x), and the small-t asymptotic analysis that decides
// temperedness.

namespace modcrown {

/// dmu = x^{-s} dx on [1, inf).  Any real s; the transform converges for all
/// t > 0 regardless of s.
struct PowerTail {
  double s;
};

/// dmu = exp(c sqrt(x)) dx on [1, inf), c > 0: integrable against e^{-tx}
/// for every t > 0 but growing faster than any polynomial moment allows.
struct StretchedExp {
  double c;
};

/// A density sampled on a finite ascending grid, integrated by the trapezoid
/// rule.  Compactly supported by construction.
struct GridDensity {
  std::vector<double> xs;
  std::vector<double> rho;
};

using TailMeasure = std::variant<PowerTail, StretchedExp, GridDensity>;

inline std::string measure_name(const TailMeasure& mu) {
  if (const auto* p = std::get_if<PowerTail>(&mu))
    return "power-tail(s=" + std::to_string(p->s) + ")";
  if (const auto* p = std::get_if<StretchedExp>(&mu))
    return "stretched-exp(c=" + std::to_string(p->c) + ")";
  return "grid-density";
}

namespace detail {

inline void validate_grid(const GridDensity& g) {
  if (g.xs.size() != g.rho.size() || g.xs.size() < 2)
    throw ShapeError("grid density: need matching xs/rho with >= 2 samples");
  for (std::size_t i = 1; i < g.xs.size(); ++i)
    if (!(g.xs[i] > g.xs[i - 1]))
      throw DomainError("grid density: abscissas must be strictly ascending");
  for (double r : g.rho)
    if (!(r >= 0.0)) throw DomainError("grid density: negative density");
}

inline double grid_weight(const GridDensity& g, std::size_t i) {
  const std::size_t n = g.xs.size();
  if (i == 0) return 0.5 * (g.xs[1] - g.xs[0]);
  if (i == n - 1) return 0.5 * (g.xs[n - 1] - g.xs[n - 2]);
  return 0.5 * (g.xs[i + 1] - g.xs[i - 1]);
}

// log of int_1^inf exp(c sqrt(x) - t x) dx.  Substituting u = sqrt(x) and
// completing the square turns the exponent into -t v^2 + t m^2 with
// v = u - m, m = c/(2t), so the quadrature argument stays O(10^2) near the
// mass and never suffers large-argument cancellation.  The peak v = 0 is a
// piece boundary when it lies inside the domain.
inline double stretched_exp_log_transform(double c, double t) {
  const double m = c / (2.0 * t);
  const double a = std::max(0.0, 1.0 - m);  // onset of the decay in v
  const double width = std::sqrt(74.0 / t);
  const double v_lo = std::max(1.0 - m, -width);
  const double v_hi = a + width;
  auto g = [&](double v) {
    return std::exp(-t * (v - a) * (v + a)) * 2.0 * (v + m);
  };
  double integral = 0.0;
  if (v_lo < 0.0) {
    integral += tanh_sinh(g, v_lo, 0.0, 1e-12, 0.0, 13);
    integral += tanh_sinh(g, 0.0, v_hi, 1e-12, 0.0, 13);
  } else {
    integral += tanh_sinh(g, v_lo, v_hi, 1e-12, 0.0, 13);
  }
  // the dropped exponent t m^2 - t a^2: c - t when the peak is left of the
  // domain, c^2/(4t) otherwise
  const double shift = (m <= 1.0) ? c - t : 0.5 * c * m;
  return shift + std::log(integral);
}

}  // namespace detail

/// Natural logarithm of the Laplace transform L(t) = int e^{-tx} dmu(x).
/// Usable even when L overflows double range (stretched-exponential tails at
/// small t).  Throws DivergentIntegral for t <= 0 on unbounded measures.
inline double laplace_log(const TailMeasure& mu, double t);

/// Laplace transform L(t) itself.  For stretched-exponential measures this
/// is exp(laplace_log) and may round to +inf; prefer laplace_log there.
inline double laplace(const TailMeasure& mu, double t) {
  if (const auto* g = std::get_if<GridDensity>(&mu)) {
    detail::validate_grid(*g);
    double s = 0.0;
    for (std::size_t i = 0; i < g->xs.size(); ++i)
      s += detail::grid_weight(*g, i) * g->rho[i] * std::exp(-t * g->xs[i]);
    return s;
  }
  if (!(t > 0.0))
    throw DivergentIntegral("laplace: transform diverges for t <= 0");
  if (const auto* p = std::get_if<PowerTail>(&mu)) {
    // u = t x turns the transform into t^{s-1} int_t^inf e^{-u} u^{-s} du;
    // the integrand is negligible past u = t + 60.
    const double s = p->s;
    const double val = tanh_sinh(
        [&](double u) { return std::exp(-u) * std::pow(u, -s); }, t, t + 60.0,
        1e-12, 0.0, 13);
    return std::pow(t, s - 1.0) * val;
  }
  const auto& se = std::get<StretchedExp>(mu);
  return std::exp(detail::stretched_exp_log_transform(se.c, t));
}

inline double laplace_log(const TailMeasure& mu, double t) {
  if (const auto* se = std::get_if<StretchedExp>(&mu)) {
    if (!(t > 0.0))
      throw DivergentIntegral("laplace_log: transform diverges for t <= 0");
    return detail::stretched_exp_log_transform(se->c, t);
  }
  const double v = laplace(mu, t);
  if (!(v > 0.0))
    throw DomainError("laplace_log: transform vanishes, log undefined");
  return std::log(v);
}

/// Small-t regime of the Laplace transform.
enum class TailRegime { Finite, Power, Log };

struct TailAsymptotics {
  TailRegime regime;
  double constant;  // limit value / power prefactor / log coefficient
  double exponent;  // only for Power: L(t) ~ constant * t^exponent
  double residual;  // fit RMS (log-log for Power, linear for Log)
};

namespace detail {

// Dyadic sample L(2^-k); shared by the asymptotic classifiers.
inline std::vector<double> laplace_log_grid(const TailMeasure& mu, int kmin,
                                            int kmax) {
  std::vector<double> out;
  for (int k = kmin; k <= kmax; ++k)
    out.push_back(laplace_log(mu, std::ldexp(1.0, -k)));
  return out;
}

}  // namespace detail

/// Classify L(t) as t -> 0+ over the dyadic grid t = 2^-k, k = 4..24:
///   Finite: L converges to a constant
///   Power:  L ~ constant * t^exponent (exponent < 0)
///   Log:    L ~ constant * ln(1/t)
/// Throws FitError when no regime fits (e.g. super-polynomial growth).
inline TailAsymptotics laplace_asymptotics(const TailMeasure& mu) {
  constexpr int kmin = 4, kmax = 24;
  const auto logs = detail::laplace_log_grid(mu, kmin, kmax);
  auto log_at = [&](int k) { return logs[static_cast<std::size_t>(k - kmin)]; };

  // Finite regime: the transform has stopped moving on the last octaves.
  if (log_at(kmax) < 700.0) {
    const double v24 = std::exp(log_at(kmax)), v20 = std::exp(log_at(20));
    if (std::abs(v24 - v20) <= 1e-3 * std::abs(v24))
      return {TailRegime::Finite, v24, 0.0, std::abs(v24 - v20)};
  }

  // Power regime: log L against log(1/t) over the asymptotic half.
  {
    std::vector<double> xs, ys;
    for (int k = 12; k <= kmax; ++k) {
      xs.push_back(k * std::log(2.0));
      ys.push_back(log_at(k));
    }
    const LinearFit f = linear_fit(xs, ys);
    if (f.slope >= 0.25) {
      if (f.rms > 0.1)
        throw FitError("laplace_asymptotics: power-law fit residual " +
                       std::to_string(f.rms));
      return {TailRegime::Power, std::exp(f.intercept), -f.slope, f.rms};
    }
  }

  // Log regime: L itself linear in ln(1/t).
  {
    std::vector<double> xs, ys;
    double mean = 0.0;
    for (int k = kmin; k <= kmax; ++k) {
      xs.push_back(k * std::log(2.0));
      ys.push_back(std::exp(log_at(k)));
      mean += ys.back();
    }
    mean /= static_cast<double>(ys.size());
    const LinearFit f = linear_fit(xs, ys);
    if (f.rms <= 1e-2 * (1.0 + std::abs(mean)))
      return {TailRegime::Log, f.slope, 0.0, f.rms};
  }
  throw FitError("laplace_asymptotics: no regime fits the sampled transform");
}

/// Twofold temperedness verdict.
///  - Moment route: smallest n with int (1+x^2)^{-n} dmu finite (expanding
///    dyadic windows), searched up to n = 50.
///  - Laplace route: L(t) bounded by a fixed power of 1/t on the dyadic
///    grid, with the fitted exponent N_star.
/// The routes are independent and must always agree, so the pair is
/// reported for callers to compare.
struct TemperednessReport {
  bool tempered_moments = false;
  bool tempered_laplace = false;
  std::optional<int> n_star;     // smallest moment order that converges
  std::optional<double> N_star;  // fitted polynomial bound exponent
  bool is_tempered() const { return tempered_moments; }
};

namespace detail {

// Does int_1^inf (1+x^2)^{-n} dmu converge?  Two ingredients: a far-field
// probe of the local decay exponent (an integrand that is still growing, or
// decaying slower than 1/x, out at x = 2^45 cannot have a finite integral at
// our scales), then expanding dyadic windows until the mass stops moving.
// The probe is essential: a stretched-exponential density under a strong
// (1+x^2)^{-n} damping has *decreasing* window mass for many octaves before
// the exponential takes over, so window increments alone can be fooled.
inline bool moment_converges(const TailMeasure& mu, int n) {
  if (std::holds_alternative<GridDensity>(mu)) return true;  // compact support
  auto log_density = [&](double x) -> double {
    if (const auto* p = std::get_if<PowerTail>(&mu)) return -p->s * std::log(x);
    return std::get<StretchedExp>(mu).c * std::sqrt(x);
  };
  auto log_integrand = [&](double x) {
    return log_density(x) - static_cast<double>(n) * std::log1p(x * x);
  };

  const double x_far = std::ldexp(1.0, 45);
  const double q_tail =
      -(log_integrand(2.0 * x_far) - log_integrand(x_far)) / std::log(2.0);
  if (q_tail < 1.05) return false;

  auto integrand = [&](double x) { return std::exp(log_integrand(x)); };
  double total = 0.0;
  for (int j = 1; j <= 45; ++j) {
    const double lo = std::ldexp(1.0, j - 1), hi = std::ldexp(1.0, j);
    const double inc = tanh_sinh(integrand, lo, hi, 1e-10, 0.0, 10);
    total += inc;
    if (j >= 4 && inc <= 1e-10 * total) return true;
  }
  return true;  // probe certified integrability; windows merely slow
}

struct SlopeScan {
  bool bounded;   // all local slopes below the polynomial ceiling
  double slope;   // tail least-squares slope
  double rms;
};

inline SlopeScan scan_slopes(const std::vector<double>& logs, int kmin,
                             int fit_from, int kmax) {
  bool bounded = true;
  for (std::size_t i = 1; i < logs.size(); ++i) {
    const double local = (logs[i] - logs[i - 1]) / std::log(2.0);
    if (std::abs(local) > 50.0) bounded = false;
  }
  std::vector<double> xs, ys;
  for (int k = fit_from; k <= kmax; ++k) {
    xs.push_back(k * std::log(2.0));
    ys.push_back(logs[static_cast<std::size_t>(k - kmin)]);
  }
  const LinearFit f = linear_fit(xs, ys);
  if (f.rms > 0.5) bounded = false;
  return {bounded, f.slope, f.rms};
}

}  // namespace detail

inline TemperednessReport temperedness_test(const TailMeasure& mu) {
  TemperednessReport rep;
  for (int n = 0; n <= 50; ++n) {
    if (detail::moment_converges(mu, n)) {
      rep.tempered_moments = true;
      rep.n_star = n;
      break;
    }
  }
  constexpr int kmin = 4, kmax = 24;
  const auto logs = detail::laplace_log_grid(mu, kmin, kmax);
  const auto scan = detail::scan_slopes(logs, kmin, 16, kmax);
  rep.tempered_laplace = scan.bounded;
  if (scan.bounded) rep.N_star = std::max(0.0, scan.slope);
  return rep;
}

/// Limit check for the boundary orbit: with ||v_t||^2 = L(2(b - t)), sample
/// t -> b along b - t = 2^-j and fit ln||v_t|| against ln(1/(b-t)).  Returns
/// whether the distributional limit exists (polynomial growth) and the
/// fitted growth exponent N.  Existence agrees with temperedness of mu.
struct DistributionLimit {
  bool exists;
  double N;
};

inline DistributionLimit distribution_limit_check(const TailMeasure& mu,
                                                  double b) {
  if (!(b > 0.0)) throw DomainError("distribution_limit_check: need b > 0");
  constexpr int jmin = 4, jmax = 20;
  std::vector<double> logs;
  bool blew_up = false;
  for (int j = jmin; j <= jmax; ++j) {
    const double tau = std::ldexp(1.0, -j);
    double y;
    try {
      y = 0.5 * laplace_log(mu, 2.0 * tau);
    } catch (const Error&) {
      blew_up = true;
      break;
    }
    if (std::abs(y) > 1e6) {
      blew_up = true;
      break;
    }
    logs.push_back(y);
  }
  if (blew_up || logs.size() < 5) return {false, 0.0};
  const auto scan = detail::scan_slopes(logs, jmin, 12, jmax);
  return {scan.bounded, std::max(0.0, scan.slope)};
}

}  // namespace modcrown
