#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "modcrown/errors.hpp"

// Concrete matrix Lie algebras (sl(2,R) and so(1,n)), Euler elements and
// their tri-gradings, the associated involutions, and the quarter-turn map
// zeta = exp(-(i pi/2) ad h) that carries the compact-imaginary slice onto
// the real symmetric subalgebra.

namespace modcrown {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

inline Mat bracket(const Mat& x, const Mat& y) { return x * y - y * x; }

struct MatrixLieAlgebra {
  enum class Kind { Sl2, So1n };
  Kind kind;
  int matrix_dim;          // matrices are matrix_dim x matrix_dim
  std::vector<Mat> basis;  // algebra dimension = basis.size()
  Eigen::MatrixXd basis_flat;  // vec(basis_j) as columns
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> coord_solver;

  int dim() const { return static_cast<int>(basis.size()); }

  void finalize() {
    const int nn = matrix_dim * matrix_dim;
    basis_flat.resize(nn, dim());
    for (int j = 0; j < dim(); ++j)
      basis_flat.col(j) =
          Eigen::Map<const Vec>(basis[static_cast<std::size_t>(j)].data(), nn);
    coord_solver.compute(basis_flat);
  }
};

/// sl(2,R): basis {h, e, f} with h = diag(1,-1), e upper, f lower nilpotent.
inline MatrixLieAlgebra sl2_algebra() {
  MatrixLieAlgebra g;
  g.kind = MatrixLieAlgebra::Kind::Sl2;
  g.matrix_dim = 2;
  Mat h(2, 2), e(2, 2), f(2, 2);
  h << 1, 0, 0, -1;
  e << 0, 1, 0, 0;
  f << 0, 0, 1, 0;
  g.basis = {h, e, f};
  g.finalize();
  return g;
}

/// so(1,n): boosts B_{0k} = E_{0k} + E_{k0} and rotations R_{jk} = E_{jk} -
/// E_{kj}, 1 <= j < k <= n.
inline MatrixLieAlgebra so1n_algebra(int n) {
  if (n < 2) throw DomainError("so1n_algebra: need n >= 2");
  MatrixLieAlgebra g;
  g.kind = MatrixLieAlgebra::Kind::So1n;
  g.matrix_dim = n + 1;
  for (int k = 1; k <= n; ++k) {
    Mat b = Mat::Zero(n + 1, n + 1);
    b(0, k) = 1.0;
    b(k, 0) = 1.0;
    g.basis.push_back(b);
  }
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) {
      Mat r = Mat::Zero(n + 1, n + 1);
      r(j, k) = 1.0;
      r(k, j) = -1.0;
      g.basis.push_back(r);
    }
  g.finalize();
  return g;
}

/// Coordinates of x in the algebra basis; DomainError if x is not (numerically)
/// a member.
inline Vec coords(const MatrixLieAlgebra& g, const Mat& x) {
  if (x.rows() != g.matrix_dim || x.cols() != g.matrix_dim)
    throw ShapeError("coords: wrong matrix size");
  const Eigen::Map<const Vec> v(x.data(),
                                static_cast<Eigen::Index>(x.size()));
  const Vec c = g.coord_solver.solve(v);
  const double resid = (g.basis_flat * c - v).norm();
  if (resid > 1e-10 * (1.0 + v.norm()))
    throw DomainError("coords: matrix is not a member of the algebra");
  return c;
}

inline Mat from_coords(const MatrixLieAlgebra& g, const Vec& c) {
  if (c.size() != g.dim()) throw ShapeError("from_coords: wrong length");
  Mat x = Mat::Zero(g.matrix_dim, g.matrix_dim);
  for (int j = 0; j < g.dim(); ++j)
    x += c[j] * g.basis[static_cast<std::size_t>(j)];
  return x;
}

/// Matrix of ad(x) in the algebra basis.
inline Mat ad_matrix(const MatrixLieAlgebra& g, const Mat& x) {
  coords(g, x);  // membership check
  Mat m(g.dim(), g.dim());
  for (int j = 0; j < g.dim(); ++j)
    m.col(j) = coords(g, bracket(x, g.basis[static_cast<std::size_t>(j)]));
  return m;
}

/// Euler element test: ad(h)^3 = ad(h) with ad(h) != 0 (eigenvalues in
/// {-1, 0, 1} and the grading nontrivial).
inline bool is_euler(const MatrixLieAlgebra& g, const Mat& h,
                     double tol = 1e-10) {
  const Mat m = ad_matrix(g, h);
  const double scale = std::max(1.0, m.norm());
  if (m.norm() <= tol) return false;
  return (m * m * m - m).norm() <= tol * scale;
}

namespace detail {

inline Mat kernel_of(const Mat& m, double thresh = 1e-8) {
  Eigen::FullPivLU<Mat> lu(m);
  lu.setThreshold(thresh);
  if (lu.rank() == m.cols()) return Mat(m.cols(), 0);
  return lu.kernel();
}

inline int rank_of(const Mat& m, double thresh = 1e-8) {
  if (m.cols() == 0) return 0;
  Eigen::ColPivHouseholderQR<Mat> qr(m);
  qr.setThreshold(thresh);
  return static_cast<int>(qr.rank());
}

}  // namespace detail

/// Tri-grading of the algebra by the eigenvalue of ad(h): coordinate bases
/// of the -1, 0, +1 eigenspaces.
struct Grading {
  Mat v_minus, v_zero, v_plus;  // d x dim_k coordinate bases
};

inline Grading grading(const MatrixLieAlgebra& g, const Mat& h) {
  if (!is_euler(g, h)) throw NotEulerError("grading: not an Euler element");
  const Mat m = ad_matrix(g, h);
  const Mat id = Mat::Identity(g.dim(), g.dim());
  Grading gr;
  gr.v_minus = detail::kernel_of(m + id);
  gr.v_zero = detail::kernel_of(m);
  gr.v_plus = detail::kernel_of(m - id);
  if (gr.v_minus.cols() + gr.v_zero.cols() + gr.v_plus.cols() != g.dim())
    throw NotEulerError("grading: eigenspace dimensions do not sum to dim g");
  return gr;
}

/// Split a coordinate vector into its graded components (each returned in
/// the original algebra basis).
struct GradedComponents {
  Vec minus, zero, plus;
};

inline GradedComponents graded_components(const MatrixLieAlgebra& g,
                                          const Grading& gr, const Vec& c) {
  const int dm = static_cast<int>(gr.v_minus.cols());
  const int d0 = static_cast<int>(gr.v_zero.cols());
  const int dp = static_cast<int>(gr.v_plus.cols());
  Mat full(g.dim(), dm + d0 + dp);
  full << gr.v_minus, gr.v_zero, gr.v_plus;
  const Vec a = full.partialPivLu().solve(c);
  GradedComponents out;
  out.minus = gr.v_minus * a.head(dm);
  out.zero = gr.v_zero * a.segment(dm, d0);
  out.plus = gr.v_plus * a.tail(dp);
  return out;
}

/// Cartan involution theta(x) = -x^T (for so(1,n) this coincides with
/// eta x eta, eta = diag(1,-1,...,-1)).
inline Mat theta_involution(const MatrixLieAlgebra& g, const Mat& x) {
  coords(g, x);
  return -x.transpose();
}

/// The grading involution tau_h = identity on g_0, -1 on g_{+1} + g_{-1};
/// equals e^{i pi ad h} for an Euler element h.
inline Mat tau_h_involution(const MatrixLieAlgebra& g, const Grading& gr,
                            const Mat& x) {
  const auto comp = graded_components(g, gr, coords(g, x));
  return from_coords(g, comp.zero - comp.plus - comp.minus);
}

/// The wedge involution tau = theta after tau_h.
inline Mat tau_involution(const MatrixLieAlgebra& g, const Grading& gr,
                          const Mat& x) {
  return theta_involution(g, tau_h_involution(g, gr, x));
}

/// Membership in the invariant cone slice Omega_p: x must lie in the -1
/// eigenspace of theta (NotInP otherwise), and the spectral radius of ad(x)
/// must be strictly below pi/2.
inline bool omega_p_member(const MatrixLieAlgebra& g, const Mat& x,
                           double tol = 1e-10) {
  const Mat tx = theta_involution(g, x);
  if ((tx + x).norm() > tol * (1.0 + x.norm()))
    throw NotInPError("omega_p_member: x is not in the -1 theta-eigenspace");
  const Mat m = ad_matrix(g, x);
  const Eigen::EigenSolver<Mat> es(m);
  double radius = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    radius = std::max(radius, std::abs(es.eigenvalues()[i]));
  return radius < 0.5 * 3.14159265358979323846;
}

/// Quarter-turn consistency check.  With k = fix(theta), h_fix = fix(tau),
/// q = fix(-tau), the map zeta = e^{-(i pi/2) ad h} acts on graded
/// components as (x_-, x_0, x_+) -> (i x_-, x_0, -i x_+).  Applied to
/// h_cap_k + i (q_cap_k) it must produce real vectors spanning h_fix.
inline bool zeta_map_check(const MatrixLieAlgebra& g, const Mat& h,
                           double tol = 1e-9) {
  const Grading gr = grading(g, h);
  const int d = g.dim();
  const Mat id = Mat::Identity(d, d);

  // Involutions as d x d matrices in the algebra basis.
  Mat theta_m(d, d), tau_h_m(d, d);
  for (int j = 0; j < d; ++j) {
    theta_m.col(j) = coords(
        g, theta_involution(g, g.basis[static_cast<std::size_t>(j)]));
    tau_h_m.col(j) = coords(
        g, tau_h_involution(g, gr, g.basis[static_cast<std::size_t>(j)]));
  }
  const Mat tau_m = theta_m * tau_h_m;

  auto intersect_fix = [&](const Mat& a, const Mat& b) {
    Mat stacked(2 * d, d);
    stacked << a - id, b - id;
    return detail::kernel_of(stacked);
  };
  const Mat h_fix = detail::kernel_of(tau_m - id);
  const Mat h_cap_k = intersect_fix(tau_m, theta_m);
  Mat stacked(2 * d, d);
  stacked << tau_m + id, theta_m - id;
  const Mat q_cap_k = detail::kernel_of(stacked);

  // zeta images: real input v -> v_0 + i(v_- - v_+); imaginary input i y ->
  // (y_+ - y_-) + i y_0.
  std::vector<Vec> images;
  auto push_image = [&](const Vec& re_part, const Vec& im_part) {
    if (im_part.norm() > tol * (1.0 + re_part.norm())) return false;
    images.push_back(re_part);
    return true;
  };
  for (Eigen::Index j = 0; j < h_cap_k.cols(); ++j) {
    const auto c = graded_components(g, gr, h_cap_k.col(j));
    if (!push_image(c.zero, c.minus - c.plus)) return false;
  }
  for (Eigen::Index j = 0; j < q_cap_k.cols(); ++j) {
    const auto c = graded_components(g, gr, q_cap_k.col(j));
    if (!push_image(c.plus - c.minus, c.zero)) return false;
  }

  if (images.empty()) return h_fix.cols() == 0;
  Mat img(d, static_cast<Eigen::Index>(images.size()));
  for (std::size_t j = 0; j < images.size(); ++j)
    img.col(static_cast<Eigen::Index>(j)) = images[j];

  // Every image must lie in h_fix, and together they must span it.
  if (h_fix.cols() == 0) return false;
  const Eigen::ColPivHouseholderQR<Mat> qr(h_fix);
  for (Eigen::Index j = 0; j < img.cols(); ++j) {
    const Vec sol = qr.solve(img.col(j));
    if ((h_fix * sol - img.col(j)).norm() > tol * (1.0 + img.col(j).norm()))
      return false;
  }
  return detail::rank_of(img) == static_cast<int>(h_fix.cols());
}

}  // namespace modcrown
