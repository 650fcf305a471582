#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>
#include <utility>
#include <vector>

#include "modcrown/errors.hpp"
#include "modcrown/quadrature.hpp"
#include "modcrown/special_functions.hpp"  // cplx, pi, gamma_fn

// Positive-energy (holomorphic discrete series) structure for SL(2,R) in the
// reproducing-kernel picture on the upper half-plane: kernel vectors, the
// group action, the modular conjugation, and the analytic continuation of
// the boost orbit into the strip.

namespace modcrown {

/// Integer power of a complex number (exponentiation by squaring; negative
/// exponents via the reciprocal).  Keeps even-weight kernels single-valued
/// without touching branch cuts.
inline cplx ipow(cplx base, long e) {
  if (e < 0) return 1.0 / ipow(base, -e);
  cplx r = 1.0;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

/// Real Moebius matrix [[a,b],[c,d]], det = 1.
struct Moebius {
  double a, b, c, d;
};

inline Moebius mobius(double a, double b, double c, double d) {
  if (std::abs(a * d - b * c - 1.0) > 1e-12)
    throw DomainError("mobius: determinant must be 1");
  return {a, b, c, d};
}

inline Moebius mul(const Moebius& g, const Moebius& h) {
  return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,
          g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
}

inline Moebius mobius_identity() { return {1.0, 0.0, 0.0, 1.0}; }

/// One-parameter subgroups: the boost diag(e^{t/2}, e^{-t/2}), the rotation,
/// and the horizontal translation.
inline Moebius boost_element(double t) {
  return {std::exp(0.5 * t), 0.0, 0.0, std::exp(-0.5 * t)};
}
inline Moebius rotation_element(double t) {
  return {std::cos(0.5 * t), std::sin(0.5 * t), -std::sin(0.5 * t),
          std::cos(0.5 * t)};
}
inline Moebius translation_element(double b) { return {1.0, b, 0.0, 1.0}; }

/// The wedge-reflection twist: conjugation by diag(1,-1).
inline Moebius tau_h_flip(const Moebius& g) {
  return {g.a, -g.b, -g.c, g.d};
}

inline cplx mobius_apply(const Moebius& g, const cplx& z) {
  return (g.a * z + g.b) / (g.c * z + g.d);
}

/// Derivative of the Moebius map: g'(z) = (cz + d)^{-2}.
inline cplx mobius_deriv(const Moebius& g, const cplx& z) {
  const cplx den = g.c * z + g.d;
  return 1.0 / (den * den);
}

inline void check_weight(int s) {
  if (s < 2 || s % 2 != 0)
    throw WeightError("weight must be a positive even integer");
}

/// Reproducing kernel of weight s:
///   Q_s(z, w) = ((z - conj(w)) / 2i)^{-s}.
/// Pole exactly at z = conj(w) (for boundary points: z = w).
inline cplx kernel_q(int s, const cplx& z, const cplx& w) {
  check_weight(s);
  const cplx q = (z - std::conj(w)) / cplx(0.0, 2.0);
  if (q == 0.0) throw PoleError("kernel_q: coincident boundary points");
  return ipow(q, -s);
}

/// A finite combination sum_i coeff_i Q_{point_i} of kernel vectors of a
/// common weight.  Points live in the closed upper half-plane; real points
/// are boundary distributions and are flagged.
struct KvTerm {
  cplx coeff;
  cplx point;
  bool boundary;
};

struct KernelVector {
  int s = 2;
  std::vector<KvTerm> terms;
};

inline KernelVector kernel_vector(
    int s, const std::vector<std::pair<cplx, cplx>>& coeff_points) {
  check_weight(s);
  KernelVector v;
  v.s = s;
  for (const auto& [c, w] : coeff_points) {
    if (w.imag() < -1e-12)
      throw DomainError("kernel_vector: point below the real axis");
    const bool bd = std::abs(w.imag()) <= 1e-12;
    v.terms.push_back({c, bd ? cplx(w.real(), 0.0) : w, bd});
  }
  return v;
}

/// Pointwise evaluation f(z) = sum_i c_i Q_s(z, w_i), z in the open upper
/// half-plane.
inline cplx eval_kernel_vector(const KernelVector& v, const cplx& z) {
  if (!(z.imag() > 0.0))
    throw DomainError("eval_kernel_vector: evaluation point must be interior");
  cplx s = 0.0;
  for (const auto& t : v.terms) s += t.coeff * kernel_q(v.s, z, t.point);
  return s;
}

/// Inner product via the reproducing property:
///   <u, v> = sum_{ij} conj(c_i) c'_j Q_s(w_i, w'_j).
/// Conjugate-linear in the first slot.  A pairing of two *coincident*
/// boundary points is a distribution squared: UndefinedPairing.
inline cplx inner_kv(const KernelVector& u, const KernelVector& v) {
  if (u.s != v.s) throw ShapeError("inner_kv: mismatched weights");
  cplx acc = 0.0;
  for (const auto& tu : u.terms)
    for (const auto& tv : v.terms) {
      if (tu.boundary && tv.boundary &&
          std::abs(tu.point - tv.point) <= 1e-12)
        throw UndefinedPairing(
            "inner_kv: coincident boundary points have no finite pairing");
      acc += std::conj(tu.coeff) * tv.coeff * kernel_q(u.s, tu.point, tv.point);
    }
  return acc;
}

/// Unitary action of g on kernel vectors:
///   U(g) Q_w = conj(g'(w))^{s/2} Q_{g w}          (interior w)
///   U(g) Q_x = g'(x)^{s/2} Q_{g x}                (boundary x)
/// Boundary points mapping to infinity (cx + d = 0) are rejected.
inline KernelVector act(const Moebius& g, const KernelVector& v) {
  KernelVector out;
  out.s = v.s;
  for (const auto& t : v.terms) {
    const cplx den = g.c * t.point + g.d;
    if (t.boundary && std::abs(den) <= 1e-12 * (1.0 + std::abs(t.point)))
      throw InfinityError("act: boundary point maps to infinity");
    const cplx dpow = ipow(den, -v.s);  // g'(z)^{s/2} = (cz+d)^{-s}
    const cplx factor = t.boundary ? dpow : std::conj(dpow);
    out.terms.push_back(
        {factor * t.coeff, mobius_apply(g, t.point), t.boundary});
  }
  return out;
}

/// Modular conjugation for the standard wedge:
///   J (sum c_i Q_{w_i}) = (-1)^{s/2} sum conj(c_i) Q_{-conj(w_i)}.
/// Antiunitary; on boundary kernels J Q_x = (-1)^{s/2} Q_{-x}.
inline KernelVector j_conjugation(const KernelVector& v) {
  const double sign = (v.s / 2) % 2 == 0 ? 1.0 : -1.0;
  KernelVector out;
  out.s = v.s;
  for (const auto& t : v.terms)
    out.terms.push_back(
        {sign * std::conj(t.coeff), -std::conj(t.point), t.boundary});
  return out;
}

/// Analytic continuation of the boost orbit of the weight-s lowest vector:
///   v(t) = e^{i s t / 2} Q_{i e^{i t}},  max(|Re t|, |Im t|) <= pi/2.
/// Real t traces the rotation orbit through i; the strip edges reach
/// boundary kernels, e.g. v(-pi/2) = -i Q_1 for s = 2.
inline KernelVector boost_continuation(int s, const cplx& t) {
  check_weight(s);
  if (std::max(std::abs(t.real()), std::abs(t.imag())) > 0.5 * pi + 1e-12)
    throw StripError("boost_continuation: parameter outside the closed strip");
  const cplx coeff =
      std::exp(cplx(0.0, 0.5 * static_cast<double>(s)) * t);
  cplx point = cplx(0.0, 1.0) * std::exp(cplx(0.0, 1.0) * t);
  const bool bd = std::abs(point.imag()) <= 1e-12 * std::abs(point);
  if (bd) point = cplx(point.real(), 0.0);
  KernelVector v;
  v.s = s;
  v.terms.push_back({coeff, point, bd});
  return v;
}

/// Check of the boundary modular relation: continuing
///   F(theta) = e^{i s theta / 2} Q_s(w, e^{i theta} x)
/// along theta: 0 -> pi must land on (-1)^{s/2} Q_s(w, -x), and the path
/// must stay clear of the kernel pole (w grazing the reflected arc
/// e^{-i theta} x).  w must lie in the open upper half-plane.
struct RelationReport {
  bool ok;
  double mismatch;   // endpoint deviation, scaled
  double max_jump;   // largest step-to-step change along the path
};

inline RelationReport modular_relation_check(int s, double x, const cplx& w,
                                             double tol = 1e-9,
                                             int steps = 400) {
  check_weight(s);
  if (!(w.imag() > 0.0))
    throw DomainError("modular_relation_check: w must be interior");
  const double scale = std::abs(w) + std::abs(x) + 1.0;
  cplx prev;
  double max_jump = 0.0;
  for (int k = 0; k <= steps; ++k) {
    const double theta = pi * static_cast<double>(k) / steps;
    const cplx arc = std::exp(cplx(0.0, -theta)) * x;
    if (std::abs(w - arc) < 1e-6 * scale)
      throw PathSingularity(
          "modular_relation_check: path grazes the kernel pole");
    const cplx val = std::exp(cplx(0.0, 0.5 * s * theta)) *
                     kernel_q(s, w, std::exp(cplx(0.0, theta)) * x);
    if (k > 0) max_jump = std::max(max_jump, std::abs(val - prev));
    prev = val;
  }
  const double sign = (s / 2) % 2 == 0 ? 1.0 : -1.0;
  const cplx target = sign * kernel_q(s, w, cplx(-x, 0.0));
  const double mismatch = std::abs(prev - target) / (1.0 + std::abs(target));
  return {mismatch <= tol, mismatch, max_jump};
}

/// Boundary kernels as Fourier transforms of a one-sided density:
///   (2^s / Gamma(s)) int_0^inf e^{i (z + u) p} p^{s-1} dp = Q_s(z, -conj(u))
/// for u in the open upper half-plane.  Returns the kernel vector Q_{-conj(u)}
/// together with the worst relative deviation of the numeric integral from it
/// over a few probe points z.
struct FourierReport {
  KernelVector vector;
  double residual;
};

inline FourierReport fourier_from_density(int s, const cplx& u) {
  check_weight(s);
  if (!(u.imag() > 0.0))
    throw DomainError("fourier_from_density: u must be interior");
  const cplx w = -std::conj(u);
  KernelVector kv;
  kv.s = s;
  kv.terms.push_back({1.0, w, false});

  const cplx probes[3] = {cplx(0.0, 1.0), cplx(0.7, 0.4), cplx(-1.3, 2.0)};
  double worst = 0.0;
  for (const cplx& z : probes) {
    const cplx zu = z + u;
    const double cutoff = 80.0 / zu.imag();
    const cplx integral = tanh_sinh(
        [&](double p) {
          return std::exp(cplx(0.0, 1.0) * zu * p) *
                 std::pow(p, static_cast<double>(s - 1));
        },
        0.0, cutoff, 1e-11, 0.0, 12);
    const cplx lhs =
        std::pow(2.0, static_cast<double>(s)) / gamma_fn(s) * integral;
    const cplx rhs = kernel_q(s, z, w);
    worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
  }
  return {kv, worst};
}

}  // namespace modcrown
