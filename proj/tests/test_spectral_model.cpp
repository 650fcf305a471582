#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "modcrown/spectral_model.hpp"

using namespace modcrown;

namespace {

SpectralModel five_point() {
  return make_model({-2.0, -0.5, 0.0, 0.5, 2.0}, {0.3, 1.0, 2.0, 1.0, 0.3});
}

ModelVec random_vec(const SpectralModel& m, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ModelVec f(m.size());
  for (auto& v : f) v = cplx(u(rng), u(rng));
  return f;
}

}  // namespace

TEST_CASE("model construction validates its input", "[spectral]") {
  CHECK_THROWS_AS(make_model({}, {}), ShapeError);
  CHECK_THROWS_AS(make_model({0.0, 1.0}, {1.0}), ShapeError);
  CHECK_THROWS_AS(make_model({0.0, 1.0}, {1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(make_model({0.0, 1.0}, {1.0, -2.0}), DomainError);
  CHECK_THROWS_AS(make_model({1.0, 1.0}, {1.0, 1.0}), DomainError);

  const auto sym = make_model({-1.0, 0.0, 1.0}, {1.0, 1.0, 1.0});
  CHECK(sym.symmetric);
  CHECK(sym.neg_index[0] == 2);
  CHECK(sym.neg_index[1] == 1);
  CHECK(sym.neg_index[2] == 0);

  const auto asym = make_model({0.0, 1.0}, {1.0, 1.0});
  CHECK_FALSE(asym.symmetric);
  const ModelVec f{1.0, 1.0};
  CHECK_THROWS_AS(conj_j(asym, f), ShapeError);
  CHECK_THROWS_AS(kms_check(asym, f), ShapeError);
}

TEST_CASE("inner product is a weighted sesquilinear form", "[spectral]") {
  const auto m = five_point();
  std::mt19937_64 rng(7);
  const auto f = random_vec(m, rng);
  const auto g = random_vec(m, rng);
  const cplx alpha(0.7, -1.4);

  ModelVec af = f, ag = g;
  for (auto& v : af) v *= alpha;
  for (auto& v : ag) v *= alpha;

  const cplx base = inner(m, f, g);
  CHECK(std::abs(inner(m, af, g) - std::conj(alpha) * base) < 1e-14);
  CHECK(std::abs(inner(m, f, ag) - alpha * base) < 1e-14);
  CHECK(std::abs(inner(m, g, f) - std::conj(base)) < 1e-15);

  double want = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    want += m.weights[i] * std::norm(f[i]);
  CHECK(std::abs(norm(m, f) * norm(m, f) - want) < 1e-14);

  CHECK_THROWS_AS(inner(m, ModelVec{1.0}, g), ShapeError);
}

TEST_CASE("flow is unitary with the group law", "[spectral]") {
  const auto m = five_point();
  std::mt19937_64 rng(13);
  const auto f = random_vec(m, rng);
  const auto g = random_vec(m, rng);

  const cplx before = inner(m, f, g);
  const cplx after = inner(m, flow(m, f, 0.83), flow(m, g, 0.83));
  CHECK(std::abs(after - before) < 1e-14);

  const auto two_step = flow(m, flow(m, f, cplx(0.4, 0.1)), cplx(-1.1, 0.3));
  const auto one_step = flow(m, f, cplx(-0.7, 0.4));
  for (std::size_t i = 0; i < m.size(); ++i)
    CHECK(std::abs(two_step[i] - one_step[i]) < 1e-14);
}

TEST_CASE("modular conjugation is an antiunitary involution", "[spectral]") {
  const auto m = five_point();
  std::mt19937_64 rng(21);
  const auto f = random_vec(m, rng);
  const auto g = random_vec(m, rng);

  const auto jf = conj_j(m, f);
  const auto jjf = conj_j(m, jf);
  for (std::size_t i = 0; i < m.size(); ++i)
    CHECK(std::abs(jjf[i] - f[i]) == 0.0);

  CHECK(std::abs(inner(m, jf, conj_j(m, g)) - std::conj(inner(m, f, g))) <
        1e-14);

  // J commutes with the unitary flow
  const auto lhs = conj_j(m, flow(m, f, 0.6));
  const auto rhs = flow(m, jf, 0.6);
  for (std::size_t i = 0; i < m.size(); ++i)
    CHECK(std::abs(lhs[i] - rhs[i]) < 1e-15);
}

TEST_CASE("hand-computed boundary residuals", "[spectral]") {
  const auto m = make_model({-1.0, 0.0, 1.0}, {1.0, 1.0, 1.0});
  const cplx a(0.3, 0.4), b(-0.2, 0.9);
  const double r0 = 0.7;
  const ModelVec eta{a, r0, b};

  const double res_p1 = std::abs(std::conj(a) - std::exp(-pi) * b);
  const double res_m1 = std::abs(std::conj(b) - std::exp(pi) * a);
  const auto rep = kms_check(m, eta, 1e-10);
  CHECK_FALSE(rep.ok);
  CHECK(rep.max_residual == Catch::Approx(std::max(res_p1, res_m1)));

  // an imaginary value at frequency zero violates the condition by 2|Im|
  const ModelVec zim{0.0, cplx(0.0, 0.5), 0.0};
  const auto rep0 = kms_check(m, zim, 1e-10);
  CHECK_FALSE(rep0.ok);
  CHECK(rep0.max_residual == Catch::Approx(1.0));
}

TEST_CASE("random boundary vectors satisfy the condition exactly",
          "[spectral]") {
  const auto m = five_point();
  std::mt19937_64 rng(42);
  for (int k = 0; k < 50; ++k) {
    const auto eta = random_kms_vector(m, rng);
    const auto rep = kms_check(m, eta);
    CHECK(rep.ok);
    CHECK(rep.max_residual <= 1e-15);
    CHECK(standard_subspace_test(m, eta).ok);
  }
}

TEST_CASE("the two boundary verdicts always agree", "[spectral]") {
  const auto m = five_point();
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int checked = 0;
  for (int k = 0; k < 400; ++k) {
    ModelVec f;
    if (k % 2 == 0) {
      f = random_kms_vector(m, rng);
      if (k % 4 == 0) {
        // perturb well above the tolerance band
        f[static_cast<std::size_t>(k / 4) % m.size()] +=
            cplx(1e-5 * (1.0 + u(rng)), 1e-5 * (1.0 + u(rng)));
      }
    } else {
      f = random_vec(m, rng);
    }
    const bool kms_ok = kms_check(m, f).ok;
    const bool sst_ok = standard_subspace_test(m, f).ok;
    CHECK(kms_ok == sst_ok);
    ++checked;
  }
  CHECK(checked == 400);
}

TEST_CASE("real flow preserves subspace residuals exactly", "[spectral]") {
  const auto m = five_point();
  std::mt19937_64 rng(5);
  for (int k = 0; k < 20; ++k) {
    const auto f = random_vec(m, rng);
    const double before = standard_subspace_test(m, f).max_residual;
    const double after =
        standard_subspace_test(m, flow(m, f, -2.0 * pi * 0.37)).max_residual;
    CHECK(after == Catch::Approx(before).epsilon(1e-13));
  }
}

TEST_CASE("members of the real subspace pair to real numbers", "[spectral]") {
  // for f, g with Jf = flow-corrected f (subspace members), Im<Jf, g> = 0;
  // here: vectors fixed under f -> J f after the half-strip flow
  const auto m = five_point();
  std::mt19937_64 rng(31);
  for (int k = 0; k < 20; ++k) {
    const auto eta = random_kms_vector(m, rng);
    const auto xi = random_kms_vector(m, rng);
    const auto f = modular_midpoint(m, eta);
    const auto g = modular_midpoint(m, xi);
    // both midpoints are J-fixed, so their pairing is real
    CHECK(std::abs(std::imag(inner(m, f, g))) <=
          1e-13 * (1.0 + std::abs(inner(m, f, g))));
  }
}

TEST_CASE("midpoint of the strip is fixed by the conjugation", "[spectral]") {
  const auto m = five_point();
  std::mt19937_64 rng(17);
  for (int k = 0; k < 50; ++k) {
    const auto eta = random_kms_vector(m, rng);
    const auto v = modular_midpoint(m, eta);
    const auto jv = conj_j(m, v);
    for (std::size_t i = 0; i < v.size(); ++i)
      CHECK(std::abs(jv[i] - v[i]) <= 1e-12 * (1.0 + std::abs(v[i])));
  }

  ModelVec bad(m.size(), cplx(1.0, 1.0));
  CHECK_THROWS_AS(modular_midpoint(m, bad), KmsViolation);
}

TEST_CASE("double boundary condition collapses the support", "[spectral]") {
  const auto m = make_model({-1.0, 0.0, 1.0}, {1.0, 1.0, 1.0});

  const ModelVec delta0{0.0, 0.7, 0.0};
  const auto rep = double_kms_collapse(m, delta0);
  CHECK(rep.collapsed);
  REQUIRE(rep.support.size() == 1);
  CHECK(m.points[static_cast<std::size_t>(rep.support[0])] == 0.0);

  // an exact pi-KMS vector with off-zero support fails the doubled condition
  std::mt19937_64 rng(3);
  auto eta = random_kms_vector(m, rng);
  eta[2] = cplx(0.5, 0.2);
  eta[0] = std::exp(-pi) * std::conj(eta[2]);
  REQUIRE(kms_check(m, eta).ok);
  CHECK_THROWS_AS(double_kms_collapse(m, eta), KmsViolation);

  // tiny off-zero components below threshold still count as collapsed
  const double eps = 1e-13;
  const ModelVec nearly{std::exp(-pi) * eps, 0.4, eps};
  const auto rep2 = double_kms_collapse(m, nearly, 1e-8);
  CHECK(rep2.collapsed);
}
