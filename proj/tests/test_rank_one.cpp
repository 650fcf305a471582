#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "modcrown/rank_one.hpp"
#include "oracles.hpp"

using namespace modcrown;

namespace {

double rel_err(const cplx& got, const cplx& want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

RankOneAlgebra algebra_by_id(int id) {
  switch (id) {
    case 0: return so1n(3);
    case 1: return so1n(4);
    case 2: return su1n(1);
    case 3: return su1n(2);
    case 4: return sp1n(2);
    default: return f4_minus20();
  }
}

// plain Taylor sum of 2F1 for |z| < 1, independent of the library routing
cplx naive_f21(cplx a, cplx b, cplx c, cplx z) {
  cplx term = 1.0, sum = 1.0;
  for (int k = 0; k < 400; ++k) {
    const double kd = k;
    term *= (a + kd) * (b + kd) / ((c + kd) * (kd + 1.0)) * z;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

TEST_CASE("multiplicities and derived parameters", "[rank-one]") {
  struct Row {
    RankOneAlgebra g;
    int ma, mh;
    double rho, c, b, s0;
  };
  const Row rows[] = {
      {so1n(3), 2, 0, 1.0, 1.5, 0.5, 1.0},
      {so1n(4), 3, 0, 1.5, 2.0, 1.0, 1.5},
      {su1n(1), 1, 0, 0.5, 1.0, 0.0, 0.5},
      {su1n(2), 1, 2, 1.0, 2.0, 0.0, 1.0},
      {sp1n(2), 3, 4, 2.5, 4.0, 1.0, 1.5},
      {f4_minus20(), 7, 8, 5.5, 8.0, 3.0, 2.5},
  };
  for (const Row& r : rows) {
    INFO(r.g.name());
    const auto m = multiplicities(r.g);
    CHECK(m.m_alpha == r.ma);
    CHECK(m.m_half == r.mh);
    const auto p = geometric_parameters(r.g);
    CHECK(p.rho == r.rho);
    CHECK(p.c == r.c);
    CHECK(p.b == r.b);
    CHECK(p.s0 == r.s0);
  }
}

TEST_CASE("algebra names parse and print", "[rank-one]") {
  CHECK(algebra_from_name("so13").name() == "so(1,3)");
  CHECK(algebra_from_name("su12").name() == "su(1,2)");
  CHECK(algebra_from_name("sp12").name() == "sp(1,2)");
  CHECK(algebra_from_name("f4").name() == "f4(-20)");
  CHECK_THROWS_AS(algebra_from_name("e8"), UnknownAlgebraError);
  CHECK_THROWS_AS(so1n(1), DomainError);
  CHECK_THROWS_AS(su1n(0), DomainError);
}

TEST_CASE("spherical functions match reference values, real time",
          "[rank-one]") {
  for (const auto& row : oracles::spherical_real_table) {
    const auto g = algebra_by_id(static_cast<int>(row[0]));
    const cplx lam(row[1], row[2]);
    INFO(g.name() << " lambda=(" << row[1] << "," << row[2] << ") t="
                  << row[3]);
    const cplx got = spherical(g, lam, row[3]);
    CHECK(rel_err(got, row[4]) < 1e-10);
  }
}

TEST_CASE("spherical functions match reference values, imaginary time",
          "[rank-one]") {
  for (const auto& row : oracles::spherical_imag_table) {
    const auto g = algebra_by_id(static_cast<int>(row[0]));
    const cplx lam(row[1], row[2]);
    INFO(g.name() << " lambda=(" << row[1] << "," << row[2] << ") t="
                  << row[3]);
    const cplx got = spherical_imaginary_time(g, lam, row[3]);
    CHECK(rel_err(got, row[4]) < 1e-10);
  }
}

TEST_CASE("hyperbolic 3-space closed form", "[rank-one]") {
  // For so(1,3): phi_lambda(a_t) = sinh(lambda t) / (lambda sinh t).
  const auto g = so1n(3);
  for (const cplx lam : {cplx(0.0, 1.0), cplx(0.5, 0.0), cplx(0.3, 0.7)})
    for (const double t : {0.4, 1.0, 2.5, 5.0}) {
      const cplx want = std::sinh(lam * t) / (lam * std::sinh(t));
      CHECK(rel_err(spherical(g, lam, t), want) < 1e-11);
    }
}

TEST_CASE("spherical function basic symmetries", "[rank-one]") {
  for (const auto& g : {so1n(3), su1n(2), sp1n(2), f4_minus20()}) {
    INFO(g.name());
    CHECK(spherical(g, cplx(0.0, 0.7), 0.0) == cplx(1.0, 0.0));
    const cplx lam(0.0, 1.3);
    CHECK(rel_err(spherical(g, lam, 1.7), spherical(g, lam, -1.7)) < 1e-14);
    CHECK(rel_err(spherical(g, lam, 1.7), spherical(g, -lam, 1.7)) < 1e-14);
  }
  CHECK_THROWS_AS(spherical_imaginary_time(so1n(3), cplx(0.0, 1.0), pi),
                  DomainError);
  CHECK_THROWS_AS(spherical_imaginary_time(so1n(3), cplx(0.0, 1.0), -3.2),
                  DomainError);
}

TEST_CASE("boundary limits for so(1,3)", "[rank-one]") {
  const auto g = so1n(3);
  for (const auto& row : oracles::so13_boundary_table) {
    const cplx lam(row[0], row[1]);
    INFO("lambda=(" << row[0] << "," << row[1] << ")");
    const auto bl = boundary_asymptotics(g, lam);
    REQUIRE(bl.cls == BoundaryClass::Finite);
    CHECK(rel_err(bl.value, row[2]) < 1e-12);

    // the normalized function approaches the limit near t = pi
    const double t = pi - 1e-6;
    const cplx norm = std::pow(std::cos(0.5 * t), 1.0) *
                      spherical_imaginary_time(g, lam, t);
    CHECK(rel_err(norm, bl.value) < 1e-3);
  }
}

TEST_CASE("boundary limit at the endpoint parameter is constant",
          "[rank-one]") {
  const auto g = so1n(3);  // rho = 1
  const auto bl = boundary_asymptotics(g, cplx(1.0, 0.0));
  CHECK(bl.cls == BoundaryClass::Constant);
  CHECK(bl.value == cplx(1.0, 0.0));
  // rho - lambda = 0 terminates the series: phi is identically 1
  CHECK(spherical_imaginary_time(g, cplx(1.0, 0.0), 2.7) == cplx(1.0, 0.0));
  CHECK(spherical(g, cplx(-1.0, 0.0), 4.0) == cplx(1.0, 0.0));
}

TEST_CASE("logarithmic boundary divergence for the hyperbolic plane",
          "[rank-one]") {
  const auto g = su1n(1);  // m_alpha = 1
  const cplx lam(0.3, 0.0);
  const auto bl = boundary_asymptotics(g, lam);
  REQUIRE(bl.cls == BoundaryClass::LogDivergent);
  const cplx want_rate =
      2.0 * gamma_fn(cplx(1.0)) * inv_gamma(cplx(0.8)) * inv_gamma(cplx(0.2));
  CHECK(rel_err(bl.value, want_rate) < 1e-13);

  // two-point slope in -ln cos(t/2) isolates the rate
  const double t1 = pi - 1e-4, t2 = pi - 1e-5;
  const cplx p1 = spherical_imaginary_time(g, lam, t1);
  const cplx p2 = spherical_imaginary_time(g, lam, t2);
  const double l1 = -std::log(std::cos(0.5 * t1));
  const double l2 = -std::log(std::cos(0.5 * t2));
  CHECK(rel_err((p2 - p1) / (l2 - l1), bl.value) < 1e-3);
}

TEST_CASE("twisted spherical values, imaginary time", "[rank-one]") {
  for (const auto& row : oracles::chi_imag_table) {
    const int l = static_cast<int>(row[0]);
    const cplx lam(row[1], row[2]);
    const int n = static_cast<int>(row[3]);
    INFO("l=" << l << " n=" << n << " t=" << row[4]);
    const cplx got = chi_spherical_imaginary_time(l, lam, n, row[4]);
    CHECK(rel_err(got, row[5]) < 1e-10);
  }
}

TEST_CASE("twisted spherical real time agrees with a plain series",
          "[rank-one]") {
  const int l = 2, n = 2;
  const cplx lam(0.0, 1.0);
  const double t = 1.0;
  const double sh = std::sinh(0.5 * t);
  const double nl = n - l;
  const cplx want = std::pow(std::cosh(0.5 * t), -l) *
                    naive_f21(0.5 * (nl + lam), 0.5 * (nl - lam), cplx(n),
                              -sh * sh);
  CHECK(rel_err(chi_spherical(l, lam, n, t), want) < 1e-12);
}

TEST_CASE("untwisted reduction of the chi-spherical family", "[rank-one]") {
  // l = 0 reproduces the su(1,n) spherical function at half the parameter
  for (const int n : {1, 2, 3})
    for (const cplx lam : {cplx(0.0, 0.8), cplx(0.4, 0.0)})
      for (const double t : {0.7, 1.3, 2.2}) {
        INFO("n=" << n << " t=" << t);
        CHECK(rel_err(chi_spherical(0, lam, n, t),
                      spherical(su1n(n), 0.5 * lam, t)) < 1e-12);
        CHECK(rel_err(chi_spherical_imaginary_time(0, lam, n, t),
                      spherical_imaginary_time(su1n(n), 0.5 * lam, t)) <
              1e-12);
      }
}

TEST_CASE("twisted boundary limits", "[rank-one]") {
  CHECK(rel_err(chi_boundary_limit(2, cplx(0.0, 0.8), 2),
                oracles::chi_boundary_22_08i) < 1e-12);
  // limit depends on |l| only
  CHECK(rel_err(chi_boundary_limit(-3, cplx(0.0, 0.5), 2),
                chi_boundary_limit(3, cplx(0.0, 0.5), 2)) < 1e-15);
  // l = 0 is the logarithmically divergent case
  CHECK_THROWS_AS(chi_boundary_limit(0, cplx(0.0, 0.5), 2), DomainError);

  // normalized approach near t = pi
  const cplx lim = chi_boundary_limit(2, cplx(0.0, 0.8), 2);
  const double t = pi - 1e-6;
  const cplx norm = std::pow(std::cos(0.5 * t), 2.0) *
                    chi_spherical_imaginary_time(2, cplx(0.0, 0.8), 2, t);
  CHECK(rel_err(norm, lim) < 1e-3);
}

TEST_CASE("positive definiteness window", "[rank-one]") {
  const auto g = sp1n(2);  // rho = 2.5, s0 = 1.5
  CHECK(positive_definite_range(g, cplx(0.0, 2.0)));   // imaginary axis
  CHECK(positive_definite_range(g, cplx(0.0, -7.0)));  // imaginary axis
  CHECK(positive_definite_range(g, cplx(1.2, 0.0)));   // inside [-s0, s0]
  CHECK(positive_definite_range(g, cplx(-1.5, 0.0)));  // edge
  CHECK(positive_definite_range(g, cplx(2.5, 0.0)));   // endpoint rho
  CHECK_FALSE(positive_definite_range(g, cplx(2.0, 0.0)));  // inside the gap
  CHECK_FALSE(positive_definite_range(g, cplx(3.0, 0.0)));  // beyond rho
  CHECK_FALSE(positive_definite_range(g, cplx(0.5, 0.5)));  // generic complex

  const auto h = so1n(3);  // s0 = rho = 1: no gap
  CHECK(positive_definite_range(h, cplx(0.9, 0.0)));
  CHECK(positive_definite_range(h, cplx(1.0, 0.0)));
  CHECK_FALSE(positive_definite_range(h, cplx(1.1, 0.0)));

  const auto q = f4_minus20();  // s0 = 2.5, rho = 5.5
  CHECK(positive_definite_range(q, cplx(2.0, 0.0)));
  CHECK_FALSE(positive_definite_range(q, cplx(4.0, 0.0)));
}

TEST_CASE("growth exponent fits recover the boundary exponent", "[rank-one]") {
  struct Case {
    RankOneAlgebra g;
    double b;
  };
  for (const Case& c : {Case{so1n(3), 0.5}, Case{so1n(4), 1.0},
                        Case{sp1n(2), 1.0}, Case{f4_minus20(), 3.0}}) {
    INFO(c.g.name());
    const auto fit = growth_exponent_fit(c.g, cplx(0.0, 0.5));
    CHECK(std::abs(fit.slope - c.b) < 1e-3);
    CHECK(fit.rms < 1e-2);
  }
  // m_alpha = 1: only logarithmic growth, fitted exponent is near zero
  const auto flat = growth_exponent_fit(su1n(1), cplx(0.0, 0.5));
  CHECK(std::abs(flat.slope) < 0.06);

  // a generic complex parameter makes the samples complex: no fit
  CHECK_THROWS_AS(growth_exponent_fit(so1n(3), cplx(0.3, 0.2)), FitError);
}
