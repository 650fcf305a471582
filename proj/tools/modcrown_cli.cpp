// modcrown command-line laboratory.
//
// Subcommands:
//   spherical-asymptotics  boundary limits of (twisted) spherical functions
//   laplace                tail-measure transforms and temperedness verdicts
//   kms-lab                KMS / standard-subspace checks on finite models
//   sl2                    kernel-vector continuation and covariance suite
//   desitter               crown depth, wedge and boundary-slope geometry
//
// Every subcommand writes an optional CSV grid (--out) and prints a JSON
// verdict to stdout.  Exit codes: 0 all checks passed, 1 a tolerance check
// failed, 2 bad parameters or malformed input.

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "modcrown/desitter.hpp"
#include "modcrown/errors.hpp"
#include "modcrown/rank_one.hpp"
#include "modcrown/serialize.hpp"
#include "modcrown/sl2_rep.hpp"
#include "modcrown/special_functions.hpp"
#include "modcrown/spectral_model.hpp"
#include "modcrown/tail_measures.hpp"

namespace mc = modcrown;
using mc::cplx;
using mc::json;

namespace {

// ---- shared helpers --------------------------------------------------------

// Parse "0.5", "i", "-2i", "1+0.5i", "0.3-2i" into a complex number.
cplx parse_complex(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw mc::DomainError("empty complex literal");

  auto parse_real = [](const std::string& p) -> double {
    if (p.empty() || p == "+") return 1.0;
    if (p == "-") return -1.0;
    std::size_t used = 0;
    const double v = std::stod(p, &used);
    if (used != p.size()) throw mc::DomainError("bad numeric literal");
    return v;
  };

  try {
    if (s.back() == 'i' || s.back() == 'I') {
      const std::string body = s.substr(0, s.size() - 1);
      // split at the last +/- that is not an exponent sign and not leading
      for (std::size_t k = body.size(); k-- > 1;) {
        const char ch = body[k];
        if ((ch == '+' || ch == '-') && body[k - 1] != 'e' &&
            body[k - 1] != 'E') {
          return {parse_real(body.substr(0, k)), parse_real(body.substr(k))};
        }
      }
      return {0.0, parse_real(body)};
    }
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw mc::DomainError("bad numeric literal");
    return {v, 0.0};
  } catch (const std::exception&) {
    throw mc::DomainError("cannot parse complex number '" + text + "'");
  }
}

unsigned thread_budget(std::size_t jobs) {
  unsigned t = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("MODCROWN_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) t = std::min<long>(t, v);
    } catch (const std::exception&) {
      // unparsable cap: ignore and keep the hardware default
    }
  }
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(jobs, 1)));
}

// Deterministic parallel map: fn(i) must write only to slot i of its output;
// results are identical regardless of the thread count.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const unsigned nt = thread_budget(n);
  if (nt <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < nt; ++t)
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  for (auto& th : pool) th.join();
}

// Per-sample RNG: decorrelated from the index, reproducible from the seed.
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return std::mt19937_64(z ^ (z >> 31));
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw mc::DomainError("cannot open output file: " + path);
  return f;
}

void emit_verdict(const json& verdict) { std::cout << verdict.dump(2) << "\n"; }

// ---- spherical-asymptotics -------------------------------------------------

struct SphericalOpts {
  std::string algebra = "so13";
  std::vector<std::string> lambdas = {"i"};
  int chi_l = 0;
  bool chi_mode = false;
  int n = 2;
  int kmin = 6, kmax = 20;
  double tol = 1e-3;
  std::string out;
};

int run_spherical(const SphericalOpts& o) {
  if (o.kmin < 2 || o.kmax <= o.kmin)
    throw mc::DomainError("need 2 <= kmin < kmax");
  std::optional<std::ofstream> csv_file;
  std::ostringstream csv_buf;
  mc::CsvWriter csv(csv_buf);
  csv.comment("spherical boundary asymptotics; t = pi - 2^(1-k)");
  csv.comment("tol = " + mc::fmt_g17(o.tol));
  csv.header({"lambda_re", "lambda_im", "k", "t", "phi_re", "phi_im",
              "normalized_re", "normalized_im", "ratio_deviation"});

  json results = json::array();
  bool all_ok = true;

  for (const std::string& ls : o.lambdas) {
    const cplx lam = parse_complex(ls);
    json r;
    r["lambda"] = ls;
    double final_dev = 0.0;
    cplx limit;
    std::string cls;

    for (int k = o.kmin; k <= o.kmax; ++k) {
      const double t = mc::pi - std::ldexp(1.0, 1 - k);
      const double cos_half = std::cos(0.5 * t);
      cplx phi, normalized;
      if (o.chi_mode) {
        const cplx lim = mc::chi_boundary_limit(o.chi_l, lam, o.n);
        limit = lim;
        cls = "chi-finite";
        phi = mc::chi_spherical_imaginary_time(o.chi_l, lam, o.n, t);
        normalized = std::pow(cos_half, std::abs(o.chi_l)) * phi;
      } else {
        const auto alg = mc::algebra_from_name(o.algebra);
        const auto bl = mc::boundary_asymptotics(alg, lam);
        limit = bl.value;
        phi = mc::spherical_imaginary_time(alg, lam, t);
        switch (bl.cls) {
          case mc::BoundaryClass::Finite: {
            cls = "finite";
            const int ma = mc::multiplicities(alg).m_alpha;
            normalized = std::pow(cos_half, ma - 1) * phi;
            break;
          }
          case mc::BoundaryClass::LogDivergent:
            cls = "log";
            normalized = phi / (-std::log(cos_half));
            break;
          case mc::BoundaryClass::Constant:
            cls = "constant";
            normalized = phi;
            break;
        }
      }
      const double dev = std::abs(normalized / limit - 1.0);
      if (k == o.kmax) final_dev = dev;
      csv.row_numeric({lam.real(), lam.imag(), static_cast<double>(k), t,
                       phi.real(), phi.imag(), normalized.real(),
                       normalized.imag(), dev});
    }
    r["class"] = cls;
    r["limit_re"] = limit.real();
    r["limit_im"] = limit.imag();
    r["final_deviation"] = final_dev;
    r["ok"] = final_dev <= o.tol;
    all_ok = all_ok && final_dev <= o.tol;
    results.push_back(r);
  }

  if (!o.out.empty()) open_out(o.out) << csv_buf.str();
  json verdict = {{"command", "spherical-asymptotics"},
                  {"algebra", o.chi_mode ? "su(1," + std::to_string(o.n) + ")"
                                         : o.algebra},
                  {"chi", o.chi_mode ? json(o.chi_l) : json()},
                  {"tol", o.tol},
                  {"results", results},
                  {"ok", all_ok}};
  emit_verdict(verdict);
  return all_ok ? 0 : 1;
}

// ---- laplace ---------------------------------------------------------------

struct LaplaceOpts {
  std::string measure = "power:1";
  int kmin = 4, kmax = 24;
  double tol = 0.05;
  double b = 0.0;  // 0: skip the distribution-limit check
  std::string out;
};

mc::TailMeasure parse_measure(const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string arg =
      colon == std::string::npos ? "" : text.substr(colon + 1);
  if (kind == "power") {
    if (arg.empty()) throw mc::DomainError("power measure needs :s");
    return mc::PowerTail{std::stod(arg)};
  }
  if (kind == "stretched") {
    if (arg.empty()) throw mc::DomainError("stretched measure needs :c");
    const double c = std::stod(arg);
    if (!(c > 0.0)) throw mc::DomainError("stretched measure needs c > 0");
    return mc::StretchedExp{c};
  }
  if (kind == "grid") {
    if (arg.empty()) throw mc::DomainError("grid measure needs :file.json");
    return mc::grid_density_from_json(mc::load_json(arg));
  }
  throw mc::DomainError("unknown measure '" + text +
                        "' (power:s | stretched:c | grid:file.json)");
}

int run_laplace(const LaplaceOpts& o) {
  const mc::TailMeasure mu = parse_measure(o.measure);
  std::ostringstream csv_buf;
  mc::CsvWriter csv(csv_buf);
  csv.comment("Laplace transform on the dyadic grid t = 2^-k");
  csv.comment("measure = " + mc::measure_name(mu));
  csv.comment("tol = " + mc::fmt_g17(o.tol));
  csv.header({"k", "t", "log_laplace", "laplace"});
  for (int k = o.kmin; k <= o.kmax; ++k) {
    const double t = std::ldexp(1.0, -k);
    const double lg = mc::laplace_log(mu, t);
    csv.row_numeric({static_cast<double>(k), t, lg,
                     lg < 700.0 ? std::exp(lg) : std::nan("")});
  }
  if (!o.out.empty()) open_out(o.out) << csv_buf.str();

  json verdict = {{"command", "laplace"}, {"measure", mc::measure_name(mu)}};
  try {
    const auto asym = mc::laplace_asymptotics(mu);
    const char* names[] = {"finite", "power", "log"};
    verdict["asymptotics"] = {
        {"regime", names[static_cast<int>(asym.regime)]},
        {"constant", asym.constant},
        {"exponent", asym.exponent},
        {"residual", asym.residual}};
  } catch (const mc::FitError& e) {
    verdict["asymptotics"] = {{"regime", "none"}, {"error", e.what()}};
  }

  const auto temp = mc::temperedness_test(mu);
  const bool agree = temp.tempered_moments == temp.tempered_laplace;
  verdict["temperedness"] = {
      {"moments", temp.tempered_moments},
      {"laplace", temp.tempered_laplace},
      {"n_star", temp.n_star ? json(*temp.n_star) : json()},
      {"N_star", temp.N_star ? json(*temp.N_star) : json()},
      {"agree", agree}};

  bool ok = agree;
  if (o.b > 0.0) {
    const auto dl = mc::distribution_limit_check(mu, o.b);
    verdict["distribution_limit"] = {{"exists", dl.exists}, {"N", dl.N}};
    ok = ok && dl.exists == temp.is_tempered();
  }
  verdict["ok"] = ok;
  emit_verdict(verdict);
  return ok ? 0 : 1;
}

// ---- kms-lab ---------------------------------------------------------------

struct KmsOpts {
  std::string model;
  int samples = 100;
  std::uint64_t seed = 42;
  double tol = 1e-10;
  std::string out;
};

int run_kms(const KmsOpts& o) {
  if (o.model.empty()) throw mc::DomainError("kms-lab requires --model");
  const json mj = mc::load_json(o.model);
  const mc::SpectralModel model = mc::model_from_json(mj);
  const auto bundled = mc::bundled_vector_from_json(mj);

  json verdict = {{"command", "kms-lab"},
                  {"model", o.model},
                  {"points", model.size()},
                  {"tol", o.tol}};
  bool ok = true;

  if (bundled) {
    const auto kms = mc::kms_check(model, *bundled, o.tol);
    const auto sst = mc::standard_subspace_test(model, *bundled, o.tol);
    json b = {{"kms_ok", kms.ok},
              {"kms_residual", kms.max_residual},
              {"subspace_ok", sst.ok},
              {"subspace_residual", sst.max_residual},
              {"verdicts_agree", kms.ok == sst.ok}};
    if (kms.ok) {
      const auto mid = mc::modular_midpoint(model, *bundled, o.tol);
      double dev = 0.0;
      const auto jmid = mc::conj_j(model, mid);
      for (std::size_t i = 0; i < mid.size(); ++i)
        dev = std::max(dev, std::abs(jmid[i] - mid[i]) /
                                (1.0 + std::abs(mid[i])));
      b["midpoint_j_deviation"] = dev;
      ok = ok && dev <= 1e-10;
    }
    ok = ok && kms.ok == sst.ok;
    verdict["bundled"] = b;
  }

  struct SampleResult {
    double kms_res, sst_res, mid_dev;
    bool agree_pass, agree_fail, collapsed;
  };
  std::vector<SampleResult> rs(static_cast<std::size_t>(o.samples));
  parallel_for(rs.size(), [&](std::size_t i) {
    auto rng = sample_rng(o.seed, i);
    const auto eta = mc::random_kms_vector(model, rng);
    const auto kms = mc::kms_check(model, eta, o.tol);
    const auto sst = mc::standard_subspace_test(model, eta, o.tol);

    const auto mid = mc::modular_midpoint(model, eta, o.tol);
    const auto jm = mc::conj_j(model, mid);
    double mid_dev = 0.0;
    for (std::size_t k = 0; k < mid.size(); ++k)
      mid_dev = std::max(mid_dev,
                         std::abs(jm[k] - mid[k]) / (1.0 + std::abs(mid[k])));

    // perturb one positive frequency: both verdicts must flip together
    auto bad = eta;
    std::size_t slot = 0;
    for (std::size_t k = 0; k < model.size(); ++k)
      if (model.points[k] > 0.0) slot = k;
    std::uniform_real_distribution<double> u(1e-5, 1e-4);
    bad[slot] += cplx(u(rng), u(rng));
    const auto kms_bad = mc::kms_check(model, bad, o.tol);
    const auto sst_bad = mc::standard_subspace_test(model, bad, o.tol);

    // double-KMS vector: supported at 0 only (if the model has frequency 0)
    mc::ModelVec dbl(model.size(), 0.0);
    bool has_zero = false;
    for (std::size_t k = 0; k < model.size(); ++k)
      if (std::abs(model.points[k]) <= 1e-12) {
        dbl[k] = 0.7;
        has_zero = true;
      }
    bool collapsed = true;
    if (has_zero) collapsed = mc::double_kms_collapse(model, dbl, o.tol).collapsed;

    rs[i] = {kms.max_residual, sst.max_residual, mid_dev,
             kms.ok && sst.ok, (!kms_bad.ok) && (!sst_bad.ok), collapsed};
  });

  std::ostringstream csv_buf;
  mc::CsvWriter csv(csv_buf);
  csv.comment("random exact-KMS vectors and their perturbations");
  csv.comment("tol = " + mc::fmt_g17(o.tol));
  csv.header({"sample", "kms_residual", "subspace_residual",
              "midpoint_j_deviation", "agree_pass", "agree_fail"});
  double worst_mid = 0.0;
  int misagree = 0, collapse_fail = 0;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const auto& r = rs[i];
    csv.row_numeric({static_cast<double>(i), r.kms_res, r.sst_res, r.mid_dev,
                     r.agree_pass ? 1.0 : 0.0, r.agree_fail ? 1.0 : 0.0});
    worst_mid = std::max(worst_mid, r.mid_dev);
    if (!r.agree_pass || !r.agree_fail) ++misagree;
    if (!r.collapsed) ++collapse_fail;
  }
  if (!o.out.empty()) open_out(o.out) << csv_buf.str();

  ok = ok && misagree == 0 && collapse_fail == 0 && worst_mid <= 1e-10;
  verdict["samples"] = o.samples;
  verdict["verdict_disagreements"] = misagree;
  verdict["collapse_failures"] = collapse_fail;
  verdict["worst_midpoint_deviation"] = worst_mid;
  verdict["ok"] = ok;
  emit_verdict(verdict);
  return ok ? 0 : 1;
}

// ---- sl2 -------------------------------------------------------------------

struct Sl2Opts {
  int s = 2;
  std::vector<double> xs = {0.5, 1.0, 2.0};
  std::vector<std::string> ws = {"0.2+1.5i", "-1+0.8i", "2+3i"};
  int samples = 100;
  std::uint64_t seed = 42;
  double tol = 1e-9;
  std::string out;
};

mc::KernelVector random_kernel_vector(int s, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ur(-2.0, 2.0);
  std::uniform_real_distribution<double> ui(0.2, 2.5);
  std::vector<std::pair<cplx, cplx>> terms;
  for (int k = 0; k < 3; ++k)
    terms.emplace_back(cplx(ur(rng), ur(rng)), cplx(ur(rng), ui(rng)));
  return mc::kernel_vector(s, terms);
}

mc::Moebius random_group_element(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  using mc::mul;
  return mul(mc::boost_element(u(rng)),
             mul(mc::rotation_element(u(rng)),
                 mc::translation_element(2.0 * u(rng))));
}

int run_sl2(const Sl2Opts& o) {
  mc::check_weight(o.s);
  std::ostringstream csv_buf;
  mc::CsvWriter csv(csv_buf);
  csv.comment("boundary continuation and covariance residuals, weight s = " +
              std::to_string(o.s));
  csv.comment("tol = " + mc::fmt_g17(o.tol));
  csv.header({"check", "param1", "param2", "residual"});

  bool ok = true;
  json relation = json::array();
  for (double x : o.xs)
    for (const std::string& wtxt : o.ws) {
      const cplx w = parse_complex(wtxt);
      const auto rep = mc::modular_relation_check(o.s, x, w, o.tol);
      relation.push_back({{"x", x},
                          {"w", wtxt},
                          {"mismatch", rep.mismatch},
                          {"ok", rep.ok}});
      csv.row_numeric({0.0, x, w.real(), rep.mismatch});
      ok = ok && rep.ok;
    }

  struct PropResult {
    double invariance, j_antiunitary, j_twist;
  };
  std::vector<PropResult> rs(static_cast<std::size_t>(o.samples));
  parallel_for(rs.size(), [&](std::size_t i) {
    auto rng = sample_rng(o.seed, i);
    const auto g = random_group_element(rng);
    const auto u = random_kernel_vector(o.s, rng);
    const auto v = random_kernel_vector(o.s, rng);
    const cplx base = mc::inner_kv(u, v);
    const double scale =
        1.0 + std::abs(mc::inner_kv(u, u)) + std::abs(mc::inner_kv(v, v));

    const cplx moved = mc::inner_kv(mc::act(g, u), mc::act(g, v));
    const double inv_res = std::abs(moved - base) / scale;

    const cplx joined = mc::inner_kv(mc::j_conjugation(u), mc::j_conjugation(v));
    const double j_res = std::abs(joined - std::conj(base)) / scale;

    // J U(g) J = U(tau_h(g)), compared through evaluations
    const auto lhs = mc::j_conjugation(mc::act(g, mc::j_conjugation(u)));
    const auto rhs = mc::act(mc::tau_h_flip(g), u);
    double tw = 0.0;
    for (const cplx z : {cplx(0.3, 1.1), cplx(-0.8, 0.6)}) {
      const cplx a = mc::eval_kernel_vector(lhs, z);
      const cplx b = mc::eval_kernel_vector(rhs, z);
      tw = std::max(tw, std::abs(a - b) / (1.0 + std::abs(b)));
    }
    rs[i] = {inv_res, j_res, tw};
  });

  double winv = 0.0, wj = 0.0, wtw = 0.0;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    winv = std::max(winv, rs[i].invariance);
    wj = std::max(wj, rs[i].j_antiunitary);
    wtw = std::max(wtw, rs[i].j_twist);
    csv.row_numeric({1.0, static_cast<double>(i), 0.0, rs[i].invariance});
  }
  const double prop_tol = 1e-10;
  ok = ok && winv <= prop_tol && wj <= prop_tol && wtw <= prop_tol;

  // Fourier realization of boundary kernels
  double wfour = 0.0;
  for (const cplx u : {cplx(0.5, 0.9), cplx(-1.2, 1.7)})
    wfour = std::max(wfour, mc::fourier_from_density(o.s, u).residual);
  ok = ok && wfour <= 1e-8;

  if (!o.out.empty()) open_out(o.out) << csv_buf.str();
  json verdict = {{"command", "sl2"},
                  {"s", o.s},
                  {"relation", relation},
                  {"worst_invariance", winv},
                  {"worst_j_antiunitarity", wj},
                  {"worst_j_twist", wtw},
                  {"worst_fourier_residual", wfour},
                  {"property_tol", prop_tol},
                  {"tol", o.tol},
                  {"ok", ok}};
  emit_verdict(verdict);
  return ok ? 0 : 1;
}

// ---- desitter --------------------------------------------------------------

struct DesitterOpts {
  int n = 2;
  std::vector<double> ss = {0.1, 0.5, 1.0};
  int samples = 10000;
  std::uint64_t seed = 42;
  double tol = 1e-4;
  std::string point;  // optional explicit wedge probe "x0,x1,..."
  std::string out;
};

int run_desitter(const DesitterOpts& o) {
  if (o.n < 1) throw mc::DomainError("desitter: need n >= 1");
  bool ok = true;
  json verdict = {{"command", "desitter"}, {"n", o.n}, {"tol", o.tol}};

  if (!o.point.empty()) {
    mc::RealPoint x;
    std::stringstream ss(o.point);
    std::string item;
    while (std::getline(ss, item, ',')) x.push_back(std::stod(item));
    const bool in_wedge = mc::wedge_test(x);  // OffShellError -> exit 2
    verdict["probe_point_in_wedge"] = in_wedge;
  }

  json slopes = json::array();
  for (double s : o.ss) {
    const auto z = mc::crown_curve_point(s, o.n);
    const auto rep = mc::boundary_slope_check(z);
    const double dev = std::abs(rep.fitted_slope - std::cos(s));
    slopes.push_back({{"s", s},
                      {"expected", std::cos(s)},
                      {"fitted", rep.fitted_slope},
                      {"deviation", dev}});
    ok = ok && dev <= o.tol;
  }
  verdict["slopes"] = slopes;

  struct Sample {
    mc::CplxPoint z;
    double delta, coherence;
    bool wedge, wedge_agree;
    mc::RealPoint base;
  };
  std::vector<Sample> rs(static_cast<std::size_t>(o.samples));
  parallel_for(rs.size(), [&](std::size_t i) {
    auto rng = sample_rng(o.seed, i);
    mc::RealPoint x = mc::on_shell_sample(rng, o.n);
    Sample smp;
    smp.base = x;
    smp.wedge = x[1] > std::abs(x[0]);
    smp.wedge_agree = mc::wedge_test(x) == smp.wedge;

    // crown point: flow a wedge point into the tube.  Force slot 1 above
    // |x_0| and put the remaining spatial mass in the transverse slots so
    // the point stays exactly on the shell.
    mc::RealPoint w = x;
    if (!(w[1] > std::abs(w[0]))) {
      if (w.size() == 2) {
        w[1] = std::sqrt(1.0 + w[0] * w[0]);
      } else {
        const double w1 = std::abs(w[0]) + 0.1;
        const double rest = 1.0 + w[0] * w[0] - w1 * w1;  // >= 0.69 here
        double cur = 0.0;
        for (std::size_t k = 2; k < w.size(); ++k) cur += w[k] * w[k];
        if (cur > 1e-300) {
          const double scale = std::sqrt(rest / cur);
          for (std::size_t k = 2; k < w.size(); ++k) w[k] *= scale;
        } else {
          w[2] = std::sqrt(rest);
        }
        w[1] = w1;
      }
    }
    std::uniform_real_distribution<double> uth(0.05, 0.5 * mc::pi - 0.05);
    const double theta = uth(rng);
    mc::CplxPoint zc(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) zc[k] = w[k];
    smp.z = mc::modular_flow(cplx(0.0, theta), zc);

    const double d1 = std::acos(std::sqrt(
        std::clamp(mc::beta_form(mc::imag_part(smp.z)), 0.0, 1.0)));
    const double d2 = std::acos(std::sqrt(
        std::clamp(1.0 + mc::beta_form(mc::real_part(smp.z)), 0.0, 1.0)));
    smp.coherence = std::abs(d1 - d2);
    smp.delta = mc::delta_depth(smp.z);
    rs[i] = smp;
  });

  double worst_coherence = 0.0;
  int wedge_mismatches = 0;
  std::ostringstream csv_buf;
  mc::CsvWriter csv(csv_buf);
  csv.comment("crown point cloud: flowed wedge points with depth delta");
  csv.comment("tol = " + mc::fmt_g17(o.tol));
  {
    std::vector<std::string> cols;
    for (int k = 0; k <= o.n; ++k) {
      cols.push_back("re_" + std::to_string(k));
      cols.push_back("im_" + std::to_string(k));
    }
    cols.push_back("delta");
    cols.push_back("base_in_wedge");
    csv.header(cols);
  }
  for (const auto& smp : rs) {
    worst_coherence = std::max(worst_coherence, smp.coherence);
    if (!smp.wedge_agree) ++wedge_mismatches;
    std::vector<double> cells;
    for (const cplx& zk : smp.z) {
      cells.push_back(zk.real());
      cells.push_back(zk.imag());
    }
    cells.push_back(smp.delta);
    cells.push_back(smp.wedge ? 1.0 : 0.0);
    csv.row_numeric(cells);
  }
  if (!o.out.empty()) open_out(o.out) << csv_buf.str();

  ok = ok && worst_coherence <= 1e-9 && wedge_mismatches == 0;
  verdict["samples"] = o.samples;
  verdict["worst_depth_coherence"] = worst_coherence;
  verdict["wedge_route_mismatches"] = wedge_mismatches;
  verdict["ok"] = ok;
  emit_verdict(verdict);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modcrown: modular analysis on crowned symmetric spaces"};
  app.set_config("--config", "", "read options from an INI/TOML file");
  app.require_subcommand(1);

  SphericalOpts so;
  auto* sph = app.add_subcommand("spherical-asymptotics",
                                 "boundary limits of spherical functions");
  sph->add_option("--algebra", so.algebra,
                  "rank-one algebra (so1n/su1n/sp1n/f4, e.g. so13)");
  sph->add_option("--lambda", so.lambdas, "spectral parameters (e.g. i,0.5)");
  auto* chi_opt =
      sph->add_option("--chi", so.chi_l, "twist index l (chi-spherical mode)");
  sph->add_option("--n", so.n, "rank parameter n for chi mode");
  sph->add_option("--kmin", so.kmin, "coarsest dyadic level");
  sph->add_option("--kmax", so.kmax, "finest dyadic level");
  sph->add_option("--tol", so.tol, "ratio tolerance at kmax");
  sph->add_option("--out", so.out, "CSV grid output path");

  LaplaceOpts lo;
  auto* lap = app.add_subcommand("laplace",
                                 "tail-measure Laplace transforms and "
                                 "temperedness verdicts");
  lap->add_option("--measure", lo.measure,
                  "power:s | stretched:c | grid:file.json");
  lap->add_option("--kmin", lo.kmin, "coarsest dyadic level");
  lap->add_option("--kmax", lo.kmax, "finest dyadic level");
  lap->add_option("--tol", lo.tol, "fit residual tolerance");
  lap->add_option("--b", lo.b, "boundary parameter for the limit check");
  lap->add_option("--out", lo.out, "CSV grid output path");

  KmsOpts ko;
  auto* kms = app.add_subcommand("kms-lab",
                                 "KMS and standard-subspace checks on a "
                                 "finite spectral model");
  kms->add_option("--model", ko.model, "model JSON file")->required();
  kms->add_option("--samples", ko.samples, "number of random vectors");
  kms->add_option("--seed", ko.seed, "RNG seed");
  kms->add_option("--tol", ko.tol, "residual tolerance");
  kms->add_option("--out", ko.out, "CSV residual table path");

  Sl2Opts s2o;
  auto* sl2 = app.add_subcommand("sl2",
                                 "kernel-vector continuation and covariance "
                                 "suite");
  sl2->add_option("--s", s2o.s, "representation weight (even, >= 2)");
  sl2->add_option("--x", s2o.xs, "boundary points for the relation check");
  sl2->add_option("--w", s2o.ws, "interior witnesses (complex)");
  sl2->add_option("--samples", s2o.samples, "random group elements");
  sl2->add_option("--seed", s2o.seed, "RNG seed");
  sl2->add_option("--tol", s2o.tol, "relation tolerance");
  sl2->add_option("--out", s2o.out, "CSV residual table path");

  DesitterOpts dso;
  auto* des = app.add_subcommand("desitter",
                                 "crown depth, wedge and boundary-slope "
                                 "geometry");
  des->add_option("--n", dso.n, "spatial dimension");
  des->add_option("--s", dso.ss, "curve parameters for the slope check");
  des->add_option("--samples", dso.samples, "random sample count");
  des->add_option("--seed", dso.seed, "RNG seed");
  des->add_option("--tol", dso.tol, "slope tolerance");
  des->add_option("--point", dso.point, "explicit on-shell probe x0,x1,...");
  des->add_option("--out", dso.out, "CSV point cloud path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad parameters
  }

  try {
    so.chi_mode = chi_opt->count() > 0;
    if (sph->parsed()) return run_spherical(so);
    if (lap->parsed()) return run_laplace(lo);
    if (kms->parsed()) return run_kms(ko);
    if (sl2->parsed()) return run_sl2(s2o);
    if (des->parsed()) return run_desitter(dso);
  } catch (const mc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
