#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include "modcrown/errors.hpp"
#include "modcrown/special_functions.hpp"  // cplx, pi

// Complexified de Sitter geometry: the quadric beta(z) = -1, the crown
// (tube) domain over it, the angular depth coordinate delta, the wedge and
// its modular flow, and the boundary-approach slope that recovers the
// spectral parameter.

namespace modcrown {

using RealPoint = std::vector<double>;  // (x_0, x_1, ..., x_n)
using CplxPoint = std::vector<cplx>;

/// Lorentzian form beta(x) = x_0^2 - x_1^2 - ... - x_n^2.
inline double beta_form(const RealPoint& x) {
  if (x.size() < 2) throw ShapeError("beta_form: need at least 2 components");
  double s = x[0] * x[0];
  for (std::size_t i = 1; i < x.size(); ++i) s -= x[i] * x[i];
  return s;
}

inline cplx beta_form(const CplxPoint& z) {
  if (z.size() < 2) throw ShapeError("beta_form: need at least 2 components");
  cplx s = z[0] * z[0];
  for (std::size_t i = 1; i < z.size(); ++i) s -= z[i] * z[i];
  return s;
}

/// Polarized form beta(u, v) = u_0 v_0 - sum_k u_k v_k.
inline double beta_pairing(const RealPoint& u, const RealPoint& v) {
  if (u.size() != v.size() || u.size() < 2)
    throw ShapeError("beta_pairing: dimension mismatch");
  double s = u[0] * v[0];
  for (std::size_t i = 1; i < u.size(); ++i) s -= u[i] * v[i];
  return s;
}

inline RealPoint real_part(const CplxPoint& z) {
  RealPoint x(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) x[i] = z[i].real();
  return x;
}

inline RealPoint imag_part(const CplxPoint& z) {
  RealPoint y(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) y[i] = z[i].imag();
  return y;
}

/// Is the real point on the unit-curvature de Sitter shell beta(x) = -1?
inline bool on_shell(const RealPoint& x, double tol = 1e-10) {
  return std::abs(beta_form(x) + 1.0) <= tol;
}

/// Crown (tube) domain membership: beta(z) = -1 on the complex shell, with
/// timelike-future imaginary part: (Im z)_0 > 0 and beta(Im z) > 0.
inline bool in_crown(const CplxPoint& z, double tol = 1e-10) {
  if (z.size() < 2) throw ShapeError("in_crown: need at least 2 components");
  if (std::abs(beta_form(z) + 1.0) > tol) return false;
  const RealPoint y = imag_part(z);
  return y[0] > 0.0 && beta_form(y) > 0.0;
}

/// Angular depth of a crown point, through both of its defining formulas:
///   delta = arccos(sqrt(beta(Im z))) = arccos(sqrt(1 + beta(Re z))).
/// The two routes must agree to 1e-9 (FormulaMismatch otherwise); the shell
/// constraint makes them identical in exact arithmetic.
inline double delta_depth(const CplxPoint& z) {
  if (!in_crown(z)) throw DomainError("delta_depth: point not in the crown");
  auto clamped_acos_sqrt = [](double v) {
    return std::acos(std::sqrt(std::clamp(v, 0.0, 1.0)));
  };
  const double d1 = clamped_acos_sqrt(beta_form(imag_part(z)));
  const double d2 = clamped_acos_sqrt(1.0 + beta_form(real_part(z)));
  if (std::abs(d1 - d2) > 1e-9)
    throw FormulaMismatch("delta_depth: the two depth formulas disagree");
  return d1;
}

/// Modular flow of the (0,k) wedge, analytically continued: the complex
/// boost angle t acts on the (x_0, x_k) block by
///   [[cosh t, sinh t], [sinh t, cosh t]],
/// real t being the geometric boost and t = i s the "Euclidean rotation".
inline CplxPoint modular_flow(const cplx& t, const CplxPoint& z, int k = 1) {
  if (k < 1 || static_cast<std::size_t>(k) >= z.size())
    throw DomainError("modular_flow: invalid boost plane index");
  const cplx ch = std::cosh(t), sh = std::sinh(t);
  CplxPoint w = z;
  w[0] = ch * z[0] + sh * z[static_cast<std::size_t>(k)];
  w[static_cast<std::size_t>(k)] = sh * z[0] + ch * z[static_cast<std::size_t>(k)];
  return w;
}

/// Wedge membership of an on-shell real point, decided by the positivity
/// route: with X the boost generator applied to x (X = (x_k, ..., x_0, ...)),
/// require beta(X) > 0 and X_0 > 0.  Algebraically equivalent to the closed
/// form x_k > |x_0|; both are computed and compared.
inline bool wedge_test(const RealPoint& x, int k = 1, double tol = 1e-10) {
  if (k < 1 || static_cast<std::size_t>(k) >= x.size())
    throw DomainError("wedge_test: invalid boost plane index");
  if (!on_shell(x, tol))
    throw OffShellError("wedge_test: point is not on the de Sitter shell");
  RealPoint gen(x.size(), 0.0);
  gen[0] = x[static_cast<std::size_t>(k)];
  gen[static_cast<std::size_t>(k)] = x[0];
  const bool cone_route = beta_form(gen) > 0.0 && gen[0] > 0.0;
  const bool closed_form = x[static_cast<std::size_t>(k)] > std::abs(x[0]);
  if (cone_route != closed_form)
    throw FormulaMismatch("wedge_test: positivity routes disagree");
  return cone_route;
}

/// The antiholomorphic wedge symmetry: z -> (-conj(z_0), -conj(z_1),
/// conj(z_2), ..., conj(z_n)).
inline CplxPoint tau_h_bar(const CplxPoint& z) {
  if (z.size() < 2) throw ShapeError("tau_h_bar: need at least 2 components");
  CplxPoint w(z.size());
  w[0] = -std::conj(z[0]);
  w[1] = -std::conj(z[1]);
  for (std::size_t i = 2; i < z.size(); ++i) w[i] = std::conj(z[i]);
  return w;
}

/// Fixed points of tau_h_bar: first two components purely imaginary, the
/// rest purely real.
inline bool tau_h_bar_fixed(const CplxPoint& z, double tol = 1e-12) {
  const CplxPoint w = tau_h_bar(z);
  for (std::size_t i = 0; i < z.size(); ++i)
    if (std::abs(z[i] - w[i]) > tol) return false;
  return true;
}

/// The distinguished boundary curve of the crown in the (0,n) plane:
///   z_s = (exp(i s B_n))(i e_0) = i cos(s) e_0 - sin(s) e_n,
/// 0 < s < pi/2, living in R^{1+n}.
inline CplxPoint crown_curve_point(double s, int n) {
  if (n < 1) throw DomainError("crown_curve_point: need n >= 1");
  CplxPoint z(static_cast<std::size_t>(n) + 1, 0.0);
  z[0] = cplx(0.0, std::cos(s));
  z[static_cast<std::size_t>(n)] = -std::sin(s);
  return z;
}

/// Boundary-approach slope along the modular flow.  For a tau_h_bar-fixed
/// crown point z with x_0 = Im z_0, x_1 = Im z_1, the depth obeys
///   delta(alpha_{it} z) = arccos(cos(t) sqrt(x_0^2 - x_1^2)),
/// so (pi/2 - delta)/ (pi/2 - t) -> lambda = sqrt(x_0^2 - x_1^2) as
/// t -> pi/2.  Returns the exact lambda and the flow-fitted slope.
struct SlopeReport {
  double lambda;        // sqrt(x_0^2 - x_1^2)
  double fitted_slope;  // Richardson-extrapolated flow estimate
};

inline SlopeReport boundary_slope_check(const CplxPoint& z) {
  if (!tau_h_bar_fixed(z))
    throw DomainError("boundary_slope_check: point must be tau_h_bar-fixed");
  if (!in_crown(z))
    throw DomainError("boundary_slope_check: point not in the crown");
  const RealPoint y = imag_part(z);
  const double disc = y[0] * y[0] - y[1] * y[1];
  if (!(disc > 1e-12))
    throw DegenerateError("boundary_slope_check: lightlike imaginary part");
  const double lambda = std::sqrt(disc);

  // Pointwise check of the broken-line depth formula at a few interior times.
  for (double t : {0.3, 0.7, 1.2}) {
    const double d_flow = delta_depth(modular_flow(cplx(0.0, t), z));
    const double d_formula = std::acos(std::cos(t) * lambda);
    if (std::abs(d_flow - d_formula) > 1e-9)
      throw FormulaMismatch(
          "boundary_slope_check: flow depth disagrees with the closed form");
  }

  auto slope_at = [&](double tau) {
    const double t = 0.5 * pi - tau;
    const double d = delta_depth(modular_flow(cplx(0.0, t), z));
    return (0.5 * pi - d) / tau;
  };
  const double s10 = slope_at(std::ldexp(1.0, -10));
  const double s12 = slope_at(std::ldexp(1.0, -12));
  // slope(tau) = lambda + O(tau^2): one Richardson step removes the tau^2 term.
  const double fitted = (16.0 * s12 - s10) / 15.0;
  return {lambda, fitted};
}

/// Uniform random point on the shell beta(x) = -1: free time component in
/// [-1.5, 1.5], spatial part on the sphere of radius sqrt(1 + x_0^2).
inline RealPoint on_shell_sample(std::mt19937_64& rng, int n) {
  if (n < 1) throw DomainError("on_shell_sample: need n >= 1");
  std::uniform_real_distribution<double> ut(-1.5, 1.5);
  std::normal_distribution<double> gauss(0.0, 1.0);
  RealPoint x(static_cast<std::size_t>(n) + 1);
  x[0] = ut(rng);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (int i = 1; i <= n; ++i) {
      x[static_cast<std::size_t>(i)] = gauss(rng);
      norm2 += x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
    }
  } while (norm2 < 1e-12);
  const double scale = std::sqrt((1.0 + x[0] * x[0]) / norm2);
  for (int i = 1; i <= n; ++i) x[static_cast<std::size_t>(i)] *= scale;
  return x;
}

}  // namespace modcrown
