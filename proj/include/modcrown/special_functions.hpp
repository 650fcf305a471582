#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <variant>

#include "modcrown/errors.hpp"

// Complex Gamma / digamma and the Gauss hypergeometric function 2F1,
// including the z -> 1 connection formulas needed for boundary asymptotics.
// Everything here is double precision and self-contained on purpose: the
// evaluation strategy near the unit-argument singularity is the product, not
// a detail we can delegate.

namespace modcrown {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

namespace detail {

// True iff z is exactly a nonpositive integer (0, -1, -2, ...).  Exact
// comparison is deliberate: termination of the hypergeometric series is a
// structural property of the parameters, not an approximate one.
inline bool is_nonpos_int(const cplx& z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

inline bool is_real_int(const cplx& z) {
  return z.imag() == 0.0 && z.real() == std::floor(z.real());
}

}  // namespace detail

/// Complex Gamma function.  Lanczos approximation (g = 7, 9 coefficients)
/// with the reflection formula for Re z < 0.5.  Relative error stays below
/// ~1e-12 for |z| <= 20.  Throws PoleError at the poles 0, -1, -2, ...
inline cplx gamma_fn(cplx z) {
  if (detail::is_nonpos_int(z))
    throw PoleError("gamma_fn: pole at nonpositive integer " +
                    std::to_string(static_cast<long long>(z.real())));

  static const double g_coef[9] = {
      0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
      771.32342877765313,       -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

  if (z.real() < 0.5) {
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return pi / (std::sin(pi * z) * gamma_fn(1.0 - z));
  }
  z -= 1.0;
  cplx x = g_coef[0];
  for (int i = 1; i < 9; ++i) x += g_coef[i] / (z + static_cast<double>(i));
  const cplx t = z + 7.5;
  return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

/// 1/Gamma(z), entire: returns 0 at the poles of Gamma instead of throwing.
inline cplx inv_gamma(const cplx& z) {
  if (detail::is_nonpos_int(z)) return 0.0;
  return 1.0 / gamma_fn(z);
}

/// Complex digamma (logarithmic derivative of Gamma).  Reflection for
/// Re z < 0.5, recurrence up to Re z >= 10, then the asymptotic series.
/// Throws PoleError at nonpositive integers.
inline cplx digamma(cplx z) {
  if (detail::is_nonpos_int(z))
    throw PoleError("digamma: pole at nonpositive integer");
  if (z.real() < 0.5) {
    // psi(z) = psi(1-z) - pi cot(pi z)
    return digamma(1.0 - z) - pi * std::cos(pi * z) / std::sin(pi * z);
  }
  cplx acc = 0.0;
  while (z.real() < 10.0) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  const cplx w2 = 1.0 / (z * z);
  // psi(z) ~ ln z - 1/(2z) - 1/(12 z^2) + 1/(120 z^4) - ...
  cplx s = std::log(z) - 0.5 / z;
  s -= w2 * (1.0 / 12.0 - w2 * (1.0 / 120.0 - w2 * (1.0 / 252.0 -
       w2 * (1.0 / 240.0 - w2 * (1.0 / 132.0)))));
  return acc + s;
}

namespace detail {

// Series cutoff: three consecutive terms below eps_rel * |partial sum|.
inline constexpr double series_eps = 1e-16;
inline constexpr std::int64_t series_max_terms = 100000;

// Plain Gauss series sum_k (a)_k (b)_k / ((c)_k k!) z^k.  Caller guarantees
// convergence (|z| < 1, or a/b a nonpositive integer making it terminate).
inline cplx gauss_series(const cplx& a, const cplx& b, const cplx& c,
                         const cplx& z) {
  // Termination index if the series is a polynomial.
  std::int64_t n_stop = -1;
  if (is_nonpos_int(a)) n_stop = static_cast<std::int64_t>(-a.real());
  if (is_nonpos_int(b)) {
    const auto nb = static_cast<std::int64_t>(-b.real());
    if (n_stop < 0 || nb < n_stop) n_stop = nb;
  }
  if (is_nonpos_int(c)) {
    // Pochhammer (c)_k vanishes from k = -c + 1 on; the series only makes
    // sense if the numerator terminates first.
    const auto nc = static_cast<std::int64_t>(-c.real());
    if (n_stop < 0 || n_stop > nc)
      throw PoleError("f21: gamma parameter is a nonpositive integer");
  }

  cplx term = 1.0, sum = 1.0;
  int quiet = 0;
  for (std::int64_t k = 0;; ++k) {
    if (n_stop >= 0 && k == n_stop) return sum;
    if (k >= series_max_terms)
      throw ConvergenceError("f21: series did not converge within term budget");
    const double kd = static_cast<double>(k);
    term *= (a + kd) * (b + kd) / ((c + kd) * (kd + 1.0)) * z;
    sum += term;
    if (std::abs(term) < series_eps * std::abs(sum)) {
      if (++quiet == 3) return sum;
    } else {
      quiet = 0;
    }
  }
}

// Connection at z = 1 for sigma = c - a - b not close to an integer
// (|w| = |1 - z| small):
//   F = G(c)G(sigma)/(G(c-a)G(c-b)) F(a,b;1-sigma;w)
//     + G(c)G(-sigma)/(G(a)G(b)) w^sigma F(c-a,c-b;1+sigma;w)
inline cplx connection_generic(const cplx& a, const cplx& b, const cplx& c,
                               const cplx& sigma, const cplx& w) {
  const cplx gc = gamma_fn(c);
  const cplx A = gc * gamma_fn(sigma) * inv_gamma(c - a) * inv_gamma(c - b);
  const cplx B = gc * gamma_fn(-sigma) * inv_gamma(a) * inv_gamma(b);
  cplx s1 = 0.0, s2 = 0.0;
  if (A != 0.0) s1 = gauss_series(a, b, 1.0 - sigma, w);
  if (B != 0.0) s2 = gauss_series(c - a, c - b, 1.0 + sigma, w);
  return A * s1 + B * std::pow(w, sigma) * s2;
}

// Connection at z = 1 for c = a + b (logarithmic case):
//   F = G(c)/(G(a)G(b)) sum_k ((a)_k (b)_k / (k!)^2)
//         [2 psi(k+1) - psi(a+k) - psi(b+k) - ln w] w^k
inline cplx connection_log(const cplx& a, const cplx& b, const cplx& w) {
  const cplx pref = gamma_fn(a + b) * inv_gamma(a) * inv_gamma(b);
  const cplx lw = std::log(w);
  cplx t = 1.0;                                      // (a)_k (b)_k / (k!)^2
  cplx d = -2.0 * 0.57721566490153286061 - digamma(a) - digamma(b);
  cplx sum = 0.0;
  int quiet = 0;
  for (std::int64_t k = 0;; ++k) {
    const cplx term = t * (d - lw);
    sum += term;
    if (std::abs(term) < series_eps * std::abs(sum)) {
      if (++quiet == 3) break;
    } else {
      quiet = 0;
    }
    if (k >= series_max_terms)
      throw ConvergenceError("f21: logarithmic connection series stalled");
    const double kd = static_cast<double>(k);
    t *= (a + kd) * (b + kd) / ((kd + 1.0) * (kd + 1.0)) * w;
    d += 2.0 / (kd + 1.0) - 1.0 / (a + kd) - 1.0 / (b + kd);
  }
  return pref * sum;
}

// Connection at z = 1 for sigma = c - a - b = m, a positive integer:
//   F = G(m)G(c)/(G(a+m)G(b+m)) sum_{k<m} ((a)_k (b)_k / (k! (1-m)_k)) w^k
//     + (-1)^m G(c)/(G(a)G(b)) w^m sum_k ((a+m)_k (b+m)_k / (k! (k+m)!))
//         [psi(k+1) + psi(k+m+1) - psi(a+k+m) - psi(b+k+m) - ln w] w^k
inline cplx connection_int_pos(const cplx& a, const cplx& b, long m,
                               const cplx& w) {
  const cplx c = a + b + static_cast<double>(m);
  const cplx gc = gamma_fn(c);
  const cplx md = static_cast<double>(m);

  cplx finite = 0.0;
  {
    cplx t = 1.0;  // (a)_k (b)_k w^k / (k! (1-m)_k)
    for (long k = 0; k < m; ++k) {
      finite += t;
      const double kd = static_cast<double>(k);
      if (k + 1 < m)
        t *= (a + kd) * (b + kd) / ((kd + 1.0) * (1.0 - md + kd)) * w;
    }
    finite *= gamma_fn(md) * gc * inv_gamma(a + md) * inv_gamma(b + md);
  }

  const cplx lw = std::log(w);
  cplx series = 0.0;
  {
    cplx t = 1.0 / gamma_fn(md + 1.0);  // (a+m)_k (b+m)_k / (k! (k+m)!)
    cplx d = -0.57721566490153286061 + digamma(md + 1.0) - digamma(a + md) -
             digamma(b + md);
    int quiet = 0;
    for (std::int64_t k = 0;; ++k) {
      const cplx term = t * (d - lw);
      series += term;
      if (std::abs(term) < series_eps * std::abs(series)) {
        if (++quiet == 3) break;
      } else {
        quiet = 0;
      }
      if (k >= series_max_terms)
        throw ConvergenceError("f21: integer connection series stalled");
      const double kd = static_cast<double>(k);
      t *= (a + md + kd) * (b + md + kd) / ((kd + 1.0) * (kd + md + 1.0)) * w;
      d += 1.0 / (kd + 1.0) + 1.0 / (kd + md + 1.0) - 1.0 / (a + md + kd) -
           1.0 / (b + md + kd);
    }
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    series *= sign * gc * inv_gamma(a) * inv_gamma(b) * std::pow(w, md);
  }
  return finite + series;
}

// Connection at z = 1 for sigma = c - a - b = -m, m a positive integer:
//   F = G(m)G(c)/(G(a)G(b)) w^{-m} sum_{k<m} ((a-m)_k (b-m)_k / (k! (1-m)_k)) w^k
//     + (-1)^m G(c)/(G(a-m)G(b-m)) sum_k ((a)_k (b)_k / (k! (k+m)!))
//         [psi(k+1) + psi(k+m+1) - psi(a+k) - psi(b+k) - ln w] w^k
inline cplx connection_int_neg(const cplx& a, const cplx& b, long m,
                               const cplx& w) {
  const cplx md = static_cast<double>(m);
  const cplx c = a + b - md;
  const cplx gc = gamma_fn(c);

  cplx finite = 0.0;
  {
    cplx t = 1.0;  // (a-m)_k (b-m)_k w^k / (k! (1-m)_k)
    for (long k = 0; k < m; ++k) {
      finite += t;
      const double kd = static_cast<double>(k);
      if (k + 1 < m)
        t *= (a - md + kd) * (b - md + kd) / ((kd + 1.0) * (1.0 - md + kd)) * w;
    }
    finite *= gamma_fn(md) * gc * inv_gamma(a) * inv_gamma(b) * std::pow(w, -md);
  }

  const cplx lw = std::log(w);
  cplx series = 0.0;
  {
    cplx t = 1.0 / gamma_fn(md + 1.0);  // (a)_k (b)_k / (k! (k+m)!)
    cplx d = -0.57721566490153286061 + digamma(md + 1.0) - digamma(a) -
             digamma(b);
    int quiet = 0;
    for (std::int64_t k = 0;; ++k) {
      const cplx term = t * (d - lw);
      series += term;
      if (std::abs(term) < series_eps * std::abs(series)) {
        if (++quiet == 3) break;
      } else {
        quiet = 0;
      }
      if (k >= series_max_terms)
        throw ConvergenceError("f21: integer connection series stalled");
      const double kd = static_cast<double>(k);
      t *= (a + kd) * (b + kd) / ((kd + 1.0) * (kd + md + 1.0)) * w;
      d += 1.0 / (kd + 1.0) + 1.0 / (kd + md + 1.0) - 1.0 / (a + kd) -
           1.0 / (b + kd);
    }
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    series *= sign * gc * inv_gamma(a - md) * inv_gamma(b - md);
  }
  return finite + series;
}

// Evaluate F near z = 1 via the connection formulas, dispatching on how close
// sigma = c - a - b is to an integer.
inline cplx connect_at_one(const cplx& a, const cplx& b, const cplx& c,
                           const cplx& w) {
  const cplx sigma = c - a - b;
  const double m_near = std::round(sigma.real());
  if (std::abs(sigma - m_near) < 1e-8) {
    const long m = static_cast<long>(m_near);
    if (m == 0) return connection_log(a, b, w);
    if (m > 0) return connection_int_pos(a, b, m, w);
    return connection_int_neg(a, b, -m, w);
  }
  return connection_generic(a, b, c, sigma, w);
}

cplx f21_route(const cplx& a, const cplx& b, const cplx& c, const cplx& z,
               bool widened);

// Pfaff transform F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1)), used to pull
// large |z| back toward the unit disk.  The transformed argument is then
// handled by the direct series or, if it lies near 1, by the connection
// formulas (with their own sigma = b - a).
inline cplx pfaff(const cplx& a, const cplx& b, const cplx& c, const cplx& z,
                  bool widened) {
  const cplx zp = z / (z - 1.0);
  return std::pow(1.0 - z, -a) * f21_route(a, c - b, c, zp, widened);
}

inline cplx f21_route(const cplx& a, const cplx& b, const cplx& c,
                      const cplx& z, bool widened) {
  const double r_series = widened ? 0.92 : 0.75;
  const double r_conn = widened ? 0.92 : 0.70;

  if (std::abs(z) <= r_series) return gauss_series(a, b, c, z);
  const cplx w = 1.0 - z;
  if (std::abs(w) <= r_conn) return connect_at_one(a, b, c, w);

  const cplx zp = z / (z - 1.0);
  if (std::abs(zp) <= r_series) return pfaff(a, b, c, z, widened);
  if (std::abs(1.0 - zp) <= r_conn) return pfaff(a, b, c, z, widened);

  if (!widened) return f21_route(a, b, c, z, true);
  throw ConvergenceError(
      "f21: argument lies outside all convergent transformation regions "
      "(near exp(+-i pi/3))");
}

}  // namespace detail

/// Gauss hypergeometric function 2F1(alpha, beta; gamma; z) on the principal
/// branch, cut along [1, infinity).  Terminating (polynomial) cases are summed
/// exactly for any z; otherwise the argument is routed through the direct
/// series, the z -> 1 connection formulas, and the z -> z/(z-1) transform.
/// Throws DomainError on the cut, PoleError if gamma is a nonpositive integer
/// not rescued by a terminating numerator, and ConvergenceError in the small
/// uncovered neighborhoods of exp(+-i pi/3).
inline cplx f21(const cplx& alpha, const cplx& beta, const cplx& gamma,
                const cplx& z) {
  if (detail::is_nonpos_int(alpha) || detail::is_nonpos_int(beta))
    return detail::gauss_series(alpha, beta, gamma, z);  // polynomial, any z
  if (detail::is_nonpos_int(gamma))
    throw PoleError("f21: gamma parameter is a nonpositive integer");
  if (z.imag() == 0.0 && z.real() >= 1.0)
    throw DomainError("f21: argument on the branch cut [1, infinity)");
  if (z == 0.0) return 1.0;
  return detail::f21_route(alpha, beta, gamma, z, false);
}

/// Classification of the z -> 1 boundary behaviour of 2F1.
enum class Z1Class { Finite, LogDivergent, PowerDivergent };

/// Limit data for f21 as z -> 1 along the real axis:
///  - Finite: F(1) = constant
///  - LogDivergent: F(z) ~ -rate * ln(1-z), rate = G(c)/(G(a)G(b))
///  - PowerDivergent: F(z) ~ coefficient * (1-z)^{exponent}, exponent < 0
struct Z1Limit {
  Z1Class cls;
  cplx constant = 0.0;   // Finite value or divergence rate / coefficient
  cplx exponent = 0.0;   // only meaningful for PowerDivergent (= sigma)
};

/// Classify and quantify the z -> 1 limit of 2F1(alpha, beta; gamma; .).
/// The discriminant is sigma = gamma - alpha - beta:
///   Re sigma > 0  -> Finite with value G(c)G(sigma)/(G(c-a)G(c-b))
///   sigma = 0     -> LogDivergent with rate G(c)/(G(a)G(b))
///   Re sigma < 0  -> PowerDivergent with coefficient G(c)G(-sigma)/(G(a)G(b))
/// Purely imaginary nonzero sigma has no limit in this scale: throws
/// UnclassifiedError.
inline Z1Limit f21_limit_z1(const cplx& alpha, const cplx& beta,
                            const cplx& gamma) {
  if (detail::is_nonpos_int(gamma))
    throw PoleError("f21_limit_z1: gamma parameter is a nonpositive integer");
  const cplx sigma = gamma - alpha - beta;
  if (sigma == 0.0) {
    return {Z1Class::LogDivergent,
            gamma_fn(gamma) * inv_gamma(alpha) * inv_gamma(beta), 0.0};
  }
  if (sigma.real() > 0.0) {
    return {Z1Class::Finite,
            gamma_fn(gamma) * gamma_fn(sigma) * inv_gamma(gamma - alpha) *
                inv_gamma(gamma - beta),
            0.0};
  }
  if (sigma.real() < 0.0) {
    return {Z1Class::PowerDivergent,
            gamma_fn(gamma) * gamma_fn(-sigma) * inv_gamma(alpha) *
                inv_gamma(beta),
            sigma};
  }
  throw UnclassifiedError(
      "f21_limit_z1: purely imaginary nonzero gamma - alpha - beta has no "
      "limit at z = 1");
}

}  // namespace modcrown
