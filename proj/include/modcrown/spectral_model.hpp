#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include "modcrown/errors.hpp"
#include "modcrown/special_functions.hpp"  // cplx, pi

// Finite spectral models: a weighted finite set of real "frequencies" with
// vectors given by their values on the points.  These are the smallest
// structures on which the modular objects (flow, conjugation, KMS boundary
// condition, standard subspace) can be exercised exactly.

namespace modcrown {

struct SpectralModel {
  std::vector<double> points;   // distinct real frequencies
  std::vector<double> weights;  // strictly positive
  std::vector<int> neg_index;   // index of -points[i], or -1 if absent
  bool symmetric = false;       // point set closed under negation

  std::size_t size() const { return points.size(); }
};

using ModelVec = std::vector<cplx>;

inline SpectralModel make_model(std::vector<double> points,
                                std::vector<double> weights) {
  if (points.empty()) throw ShapeError("make_model: empty point set");
  if (points.size() != weights.size())
    throw ShapeError("make_model: points/weights length mismatch");
  for (double w : weights)
    if (!(w > 0.0)) throw DomainError("make_model: weights must be positive");
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (points[i] == points[j])
        throw DomainError("make_model: duplicate frequency");

  SpectralModel m;
  m.points = std::move(points);
  m.weights = std::move(weights);
  m.neg_index.assign(n, -1);
  m.symmetric = true;
  for (std::size_t i = 0; i < n; ++i) {
    int found = -1;
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(m.points[i] + m.points[j]) <= 1e-12) {
        found = static_cast<int>(j);
        break;
      }
    }
    m.neg_index[i] = found;
    if (found < 0) m.symmetric = false;
  }
  return m;
}

inline void check_shape(const SpectralModel& m, const ModelVec& f) {
  if (f.size() != m.size())
    throw ShapeError("spectral model: vector length does not match point set");
}

inline void require_symmetric(const SpectralModel& m) {
  if (!m.symmetric)
    throw ShapeError(
        "spectral model: point set must be closed under negation for "
        "modular operations");
}

/// Weighted inner product, conjugate-linear in the first slot:
///   <f, g> = sum_i w_i conj(f_i) g_i.
inline cplx inner(const SpectralModel& m, const ModelVec& f,
                  const ModelVec& g) {
  check_shape(m, f);
  check_shape(m, g);
  cplx s = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    s += m.weights[i] * std::conj(f[i]) * g[i];
  return s;
}

inline double norm(const SpectralModel& m, const ModelVec& f) {
  return std::sqrt(std::abs(inner(m, f, f)));
}

/// Modular flow, analytically continued: (flow_z f)(p) = e^{i z p} f(p).
/// Real z is the unitary one-parameter group; z = i pi/2 reaches the
/// KMS midpoint.
inline ModelVec flow(const SpectralModel& m, const ModelVec& f,
                     const cplx& z) {
  check_shape(m, f);
  ModelVec out(f.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    out[i] = std::exp(cplx(0.0, 1.0) * z * m.points[i]) * f[i];
  return out;
}

/// Modular conjugation (Jf)(p) = conj(f(-p)).  Antiunitary; at p = 0 it is
/// plain complex conjugation.  Requires a negation-symmetric point set.
inline ModelVec conj_j(const SpectralModel& m, const ModelVec& f) {
  check_shape(m, f);
  require_symmetric(m);
  ModelVec out(f.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    out[i] = std::conj(f[static_cast<std::size_t>(m.neg_index[i])]);
  return out;
}

/// Residual report for the boundary-condition checks.
struct ResidualReport {
  bool ok = true;
  double max_residual = 0.0;
};

/// KMS boundary condition at inverse temperature encoded by `thermal`
/// (default pi): passes iff for every frequency p
///   |conj(eta(-p)) - e^{-thermal p} eta(p)| <= tol (1 + |eta(p)|).
/// At p = 0 this forces eta(0) to be real.
inline ResidualReport kms_check(const SpectralModel& m, const ModelVec& eta,
                                double tol = 1e-10, double thermal = pi) {
  check_shape(m, eta);
  require_symmetric(m);
  ResidualReport r;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double p = m.points[i];
    const cplx eta_neg = eta[static_cast<std::size_t>(m.neg_index[i])];
    const double res =
        std::abs(std::conj(eta_neg) - std::exp(-thermal * p) * eta[i]);
    const double scale = 1.0 + std::abs(eta[i]);
    if (res > r.max_residual) r.max_residual = res;
    if (res > tol * scale) r.ok = false;
  }
  return r;
}

/// Standard-subspace membership: f belongs to the real subspace iff
///   |e^{pi p} conj(f(-p)) - f(p)| <= tol (1 + |f(p)|) for every p.
/// Equivalent to the KMS check up to reflection of the residual.
inline ResidualReport standard_subspace_test(const SpectralModel& m,
                                             const ModelVec& f,
                                             double tol = 1e-10) {
  check_shape(m, f);
  require_symmetric(m);
  ResidualReport r;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double p = m.points[i];
    const cplx f_neg = f[static_cast<std::size_t>(m.neg_index[i])];
    const double res =
        std::abs(std::exp(pi * p) * std::conj(f_neg) - f[i]);
    const double scale = 1.0 + std::abs(f[i]);
    if (res > r.max_residual) r.max_residual = res;
    if (res > tol * scale) r.ok = false;
  }
  return r;
}

/// Half-way point of the KMS strip: v = flow_{i pi/2}(eta).  For eta
/// satisfying the KMS condition, v is fixed by the modular conjugation J.
/// Throws KmsViolation if eta fails kms_check at tolerance tol.
inline ModelVec modular_midpoint(const SpectralModel& m, const ModelVec& eta,
                                 double tol = 1e-10) {
  const auto rep = kms_check(m, eta, tol);
  if (!rep.ok)
    throw KmsViolation("modular_midpoint: input violates the KMS condition");
  return flow(m, eta, cplx(0.0, 0.5 * pi));
}

/// Support analysis for a vector satisfying the KMS condition at both the
/// standard and the doubled inverse temperature.  The two conditions force
///   eta(p) (1 - e^{-pi p}) = 0  up to tolerance,
/// i.e. the support collapses to the single frequency p = 0.
struct CollapseReport {
  bool collapsed = true;           // support contained in {0}
  std::vector<int> support;        // indices with |eta| above tolerance
};

inline CollapseReport double_kms_collapse(const SpectralModel& m,
                                          const ModelVec& eta,
                                          double tol = 1e-10) {
  const auto r1 = kms_check(m, eta, tol, pi);
  const auto r2 = kms_check(m, eta, tol, 2.0 * pi);
  if (!r1.ok || !r2.ok)
    throw KmsViolation(
        "double_kms_collapse: input must satisfy both KMS conditions");
  double scale = 0.0;
  for (const cplx& v : eta) scale = std::max(scale, std::abs(v));
  CollapseReport rep;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (std::abs(eta[i]) > 100.0 * tol * (1.0 + scale)) {
      rep.support.push_back(static_cast<int>(i));
      if (std::abs(m.points[i]) > 1e-12) rep.collapsed = false;
    }
  }
  return rep;
}

/// Draw a vector satisfying the KMS condition exactly: free complex values
/// on the positive frequencies, a free real value at zero, and the negative
/// frequencies filled in by eta(-p) = e^{-pi p} conj(eta(p)).
inline ModelVec random_kms_vector(const SpectralModel& m,
                                  std::mt19937_64& rng) {
  require_symmetric(m);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ModelVec eta(m.size(), 0.0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double p = m.points[i];
    if (p > 0.0) {
      eta[i] = cplx(u(rng), u(rng));
    } else if (p == 0.0 || std::abs(p) <= 1e-12) {
      eta[i] = u(rng);  // J at 0 is plain conjugation: value must be real
    }
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double p = m.points[i];
    if (p < -1e-12) {
      const auto j = static_cast<std::size_t>(m.neg_index[i]);
      eta[i] = std::exp(pi * p) * std::conj(eta[j]);
    }
  }
  return eta;
}

}  // namespace modcrown
