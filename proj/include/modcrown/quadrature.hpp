#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <type_traits>
#include <vector>

#include "modcrown/errors.hpp"

// Double-exponential (tanh-sinh) quadrature on a finite interval.  Endpoint
// singularities of integrable type are handled by construction: nodes are
// addressed by their distance to the nearest endpoint, computed in a
// cancellation-free form, so the integrand is never evaluated exactly at an
// endpoint.

namespace modcrown {

namespace detail {

struct TsNode {
  double dist;    // distance from the nearer endpoint, in [0, (b-a)/2]
  double weight;  // quadrature weight (already scaled by interval half-width)
  int side;       // -1: offset from a, +1: offset from b, 0: midpoint
};

// Nodes for one refinement level: abscissas u = k*h with k odd (level > 0)
// or all k (level 0).
inline void ts_nodes(int level, double half_width, std::vector<TsNode>& out) {
  out.clear();
  const double h = 1.0 / static_cast<double>(1 << level);
  const double u_max = 6.5;
  const bool odd_only = level > 0;

  auto push = [&](double u) {
    const double th = 0.5 * 3.14159265358979323846 * std::sinh(u);
    const double ch = std::cosh(th);
    // 1 - tanh(th) = 2 / (exp(2 th) + 1): stable distance to the endpoint.
    const double dist = half_width * 2.0 / (std::exp(2.0 * th) + 1.0);
    const double w = half_width * h * 0.5 * 3.14159265358979323846 *
                     std::cosh(u) / (ch * ch);
    if (dist <= 0.0 || w < 1e-300) return;
    if (u == 0.0) {
      out.push_back({half_width, w, 0});
    } else {
      out.push_back({dist, w, -1});
      out.push_back({dist, w, +1});
    }
  };

  if (!odd_only) push(0.0);
  const int k_step = odd_only ? 2 : 1;
  const int k_start = odd_only ? 1 : 1;
  for (int k = k_start;; k += k_step) {
    const double u = k * h;
    if (u > u_max) break;
    const std::size_t before = out.size();
    push(u);
    if (out.size() == before) break;  // underflowed: all further nodes do too
  }
}

}  // namespace detail

/// Integrate f over [a, b] by tanh-sinh quadrature.  The integrand receives
/// the abscissa and may be real- or complex-valued; endpoint-integrable
/// singularities (e.g. x^{-s} at 0) are fine.  Refines until the level-to-
/// level change is below rel_tol (relative) or abs_tol (absolute), whichever
/// is satisfied first.  Throws QuadratureError if max_level refinements do
/// not settle.
template <class F>
auto tanh_sinh(F&& f, double a, double b, double rel_tol = 1e-12,
               double abs_tol = 0.0, int max_level = 12) {
  using R = std::invoke_result_t<F&, double>;
  const double half = 0.5 * (b - a);
  std::vector<detail::TsNode> nodes;

  auto eval = [&](const detail::TsNode& n) -> R {
    double x;
    if (n.side < 0)
      x = a + n.dist;
    else if (n.side > 0)
      x = b - n.dist;
    else
      x = a + half;
    return f(x) * n.weight;
  };

  detail::ts_nodes(0, half, nodes);
  R sum{};
  for (const auto& n : nodes) sum += eval(n);

  R prev = sum;
  for (int level = 1; level <= max_level; ++level) {
    detail::ts_nodes(level, half, nodes);
    R add{};
    for (const auto& n : nodes) add += eval(n);
    // Halving the step re-weights the previous levels' contributions by 1/2;
    // the new odd-index nodes already carry the refined step in their weights.
    sum = 0.5 * prev + add;
    const double change = std::abs(sum - prev);
    if (level >= 3 &&
        (change <= rel_tol * std::abs(sum) || change <= abs_tol))
      return sum;
    prev = sum;
  }
  throw QuadratureError("tanh_sinh: refinement limit reached without settling");
}

}  // namespace modcrown
