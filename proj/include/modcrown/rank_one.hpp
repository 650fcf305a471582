#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "modcrown/errors.hpp"
#include "modcrown/fit.hpp"
#include "modcrown/special_functions.hpp"

// Spherical functions on the rank-one noncompact symmetric spaces, their
// continuation to imaginary time (the compact-dual picture), and the boundary
// behaviour as the imaginary-time parameter approaches pi.

namespace modcrown {

enum class Family { So1n, Su1n, Sp1n, F4 };

/// A rank-one simple Lie algebra of noncompact type: so(1,n), su(1,n),
/// sp(1,n) (quaternionic), or the exceptional f4(-20).
struct RankOneAlgebra {
  Family family;
  int n;  // ignored for F4

  std::string name() const {
    switch (family) {
      case Family::So1n: return "so(1," + std::to_string(n) + ")";
      case Family::Su1n: return "su(1," + std::to_string(n) + ")";
      case Family::Sp1n: return "sp(1," + std::to_string(n) + ")";
      case Family::F4: return "f4(-20)";
    }
    throw UnknownAlgebraError("RankOneAlgebra: bad family tag");
  }
};

inline RankOneAlgebra so1n(int n) {
  if (n < 2) throw DomainError("so1n: need n >= 2");
  return {Family::So1n, n};
}
inline RankOneAlgebra su1n(int n) {
  if (n < 1) throw DomainError("su1n: need n >= 1");
  return {Family::Su1n, n};
}
inline RankOneAlgebra sp1n(int n) {
  if (n < 1) throw DomainError("sp1n: need n >= 1");
  return {Family::Sp1n, n};
}
inline RankOneAlgebra f4_minus20() { return {Family::F4, 1}; }

/// Parse "so13", "su12", "sp12", "f4" style names (family + digits "1n").
inline RankOneAlgebra algebra_from_name(const std::string& s) {
  if (s == "f4" || s == "f4-20" || s == "f4(-20)") return f4_minus20();
  if (s.size() >= 4 && s[2] == '1') {
    const std::string fam = s.substr(0, 2);
    const int n = std::stoi(s.substr(3));
    if (fam == "so") return so1n(n);
    if (fam == "su") return su1n(n);
    if (fam == "sp") return sp1n(n);
  }
  throw UnknownAlgebraError("algebra_from_name: cannot parse '" + s + "'");
}

/// Restricted-root multiplicities (m_alpha, m_alpha/2).
struct Multiplicities {
  int m_alpha;
  int m_half;
};

inline Multiplicities multiplicities(const RankOneAlgebra& g) {
  switch (g.family) {
    case Family::So1n: return {g.n - 1, 0};
    case Family::Su1n: return {1, 2 * (g.n - 1)};
    case Family::Sp1n: return {3, 4 * (g.n - 1)};
    case Family::F4: return {7, 8};
  }
  throw UnknownAlgebraError("multiplicities: bad family tag");
}

/// Derived structure constants:
///   rho = (2 m_alpha + m_half) / 4   (half sum of positive roots)
///   c   = (m_half + m_alpha + 1) / 2 (hypergeometric gamma-parameter)
///   b   = (m_alpha - 1) / 2          (boundary growth exponent)
///   s0  = edge of the complementary-series window
struct GeometricParameters {
  double rho;
  double c;
  double b;
  double s0;
};

inline GeometricParameters geometric_parameters(const RankOneAlgebra& g) {
  const auto [m_alpha, m_half] = multiplicities(g);
  GeometricParameters p;
  p.rho = (2.0 * m_alpha + m_half) / 4.0;
  p.c = (m_half + m_alpha + 1.0) / 2.0;
  p.b = (m_alpha - 1.0) / 2.0;
  p.s0 = (m_half == 0) ? p.rho : 0.5 * (1.0 + m_half / 2.0);
  return p;
}

/// Spherical function phi_lambda(a_t) on the noncompact side:
///   phi_lambda(a_t) = 2F1(rho + lambda, rho - lambda; c; -sinh^2(t/2)).
/// Real t, any spectral parameter lambda in C.
inline cplx spherical(const RankOneAlgebra& g, const cplx& lambda, double t) {
  const auto p = geometric_parameters(g);
  const double sh = std::sinh(0.5 * t);
  return f21(p.rho + lambda, p.rho - lambda, p.c, -sh * sh);
}

/// Analytic continuation to imaginary time a_{it}, |t| < pi:
///   phi_lambda(a_{it}) = 2F1(rho + lambda, rho - lambda; c; sin^2(t/2)).
/// The hypergeometric argument approaches the z = 1 singularity as
/// |t| -> pi; evaluation there is delegated to the connection formulas.
inline cplx spherical_imaginary_time(const RankOneAlgebra& g,
                                     const cplx& lambda, double t) {
  if (!(std::abs(t) < pi))
    throw DomainError("spherical_imaginary_time: need |t| < pi");
  const auto p = geometric_parameters(g);
  const double sn = std::sin(0.5 * t);
  return f21(p.rho + lambda, p.rho - lambda, p.c, sn * sn);
}

/// How phi_lambda(a_{it}) behaves as t -> pi.
enum class BoundaryClass {
  Finite,        // cos^{m_alpha - 1}(t/2) phi -> value   (m_alpha > 1)
  LogDivergent,  // phi ~ -value * ln cos(t/2)            (m_alpha = 1)
  Constant,      // lambda = +-rho: phi identically 1
};

struct BoundaryLimit {
  BoundaryClass cls;
  cplx value;
};

/// Boundary limit of the imaginary-time spherical function at t = pi:
/// for m_alpha > 1,
///   lim cos^{m_alpha-1}(t/2) phi_lambda(a_{it})
///     = Gamma(c) Gamma(b) / (Gamma(rho+lambda) Gamma(rho-lambda)),
/// for m_alpha = 1 the function diverges logarithmically with rate
///   2 Gamma(c) / (Gamma(rho+lambda) Gamma(rho-lambda)),
/// and at the endpoint parameters lambda = +-rho it is constant 1.
inline BoundaryLimit boundary_asymptotics(const RankOneAlgebra& g,
                                          const cplx& lambda) {
  const auto p = geometric_parameters(g);
  if (std::abs(lambda - p.rho) < 1e-12 || std::abs(lambda + p.rho) < 1e-12)
    return {BoundaryClass::Constant, 1.0};
  const cplx quot = inv_gamma(p.rho + lambda) * inv_gamma(p.rho - lambda);
  if (multiplicities(g).m_alpha > 1)
    return {BoundaryClass::Finite, gamma_fn(p.c) * gamma_fn(p.b) * quot};
  return {BoundaryClass::LogDivergent, 2.0 * gamma_fn(p.c) * quot};
}

/// Twisted (line-bundle) spherical function on the complex hyperbolic space
/// of su(1,n), twist character indexed by an integer l:
///   chi-phi_{l,lambda}(a_t)
///     = cosh^{-l}(t/2) 2F1((n-l+lambda)/2, (n-l-lambda)/2; n; -sinh^2(t/2)).
inline cplx chi_spherical(int l, const cplx& lambda, int n, double t) {
  if (n < 1) throw DomainError("chi_spherical: need n >= 1");
  const double sh = std::sinh(0.5 * t);
  const cplx nd = static_cast<double>(n), ld = static_cast<double>(l);
  return std::pow(std::cosh(0.5 * t), -l) *
         f21(0.5 * (nd - ld + lambda), 0.5 * (nd - ld - lambda), nd, -sh * sh);
}

/// Imaginary-time twisted spherical function, |t| < pi:
///   cos^{-l}(t/2) 2F1((n-l+lambda)/2, (n-l-lambda)/2; n; sin^2(t/2)).
inline cplx chi_spherical_imaginary_time(int l, const cplx& lambda, int n,
                                         double t) {
  if (n < 1) throw DomainError("chi_spherical_imaginary_time: need n >= 1");
  if (!(std::abs(t) < pi))
    throw DomainError("chi_spherical_imaginary_time: need |t| < pi");
  const double sn = std::sin(0.5 * t);
  const cplx nd = static_cast<double>(n), ld = static_cast<double>(l);
  return std::pow(std::cos(0.5 * t), -l) *
         f21(0.5 * (nd - ld + lambda), 0.5 * (nd - ld - lambda), nd, sn * sn);
}

/// Boundary limit of the twisted function for l != 0:
///   lim cos^{|l|}(t/2) chi-phi_{l,lambda}(a_{it})
///     = Gamma(|l|) (n-1)! / (Gamma((n+|l|-lambda)/2) Gamma((n+|l|+lambda)/2)).
/// l = 0 reduces to the untwisted su(1,n) case (logarithmic at the boundary),
/// so it is rejected here.
inline cplx chi_boundary_limit(int l, const cplx& lambda, int n) {
  if (n < 1) throw DomainError("chi_boundary_limit: need n >= 1");
  if (l == 0)
    throw DomainError("chi_boundary_limit: l = 0 diverges logarithmically");
  const double la = std::abs(static_cast<double>(l));
  const double nd = static_cast<double>(n);
  return gamma_fn(la) * gamma_fn(nd) *
         inv_gamma(0.5 * (nd + la - lambda)) *
         inv_gamma(0.5 * (nd + la + lambda));
}

/// Positive-definiteness window for phi_lambda: the spherical function is
/// positive definite exactly when lambda lies on the imaginary axis, in the
/// real interval [-s0, s0], or at the endpoints +-rho.
inline bool positive_definite_range(const RankOneAlgebra& g,
                                    const cplx& lambda) {
  const auto p = geometric_parameters(g);
  const double tol = 1e-12;
  if (std::abs(lambda.real()) <= tol) return true;  // principal series
  if (std::abs(lambda.imag()) > tol) return false;
  const double x = std::abs(lambda.real());
  return x <= p.s0 + tol || std::abs(x - p.rho) <= tol;
}

/// Fit of the boundary growth exponent: evaluates y_k = (1/2) ln phi(a_{it})
/// at t = pi - 2^{1-k} for k = kmin..kmax and regresses against x_k = k ln 2.
/// For m_alpha > 1 the slope estimates b = (m_alpha - 1)/2.  Requires the
/// sampled values to be positive reals (conjugate-symmetric lambda).
struct GrowthFit {
  double slope;
  double rms;
};

inline GrowthFit growth_exponent_fit(const RankOneAlgebra& g,
                                     const cplx& lambda, int kmin = 6,
                                     int kmax = 20) {
  if (kmax - kmin < 3) throw FitError("growth_exponent_fit: window too short");
  std::vector<double> xs, ys;
  for (int k = kmin; k <= kmax; ++k) {
    const double t = pi - std::ldexp(1.0, 1 - k);
    const cplx phi = spherical_imaginary_time(g, lambda, t);
    if (!(phi.real() > 0.0) ||
        std::abs(phi.imag()) > 1e-8 * std::abs(phi.real()))
      throw FitError("growth_exponent_fit: sampled value not a positive real");
    xs.push_back(k * std::log(2.0));
    ys.push_back(0.5 * std::log(phi.real()));
  }
  const LinearFit f = linear_fit(xs, ys);
  return {f.slope, f.rms};
}

}  // namespace modcrown
