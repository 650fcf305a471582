#pragma once

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "modcrown/errors.hpp"
#include "modcrown/sl2_rep.hpp"
#include "modcrown/spectral_model.hpp"
#include "modcrown/tail_measures.hpp"

// JSON and CSV interchange for the model types.  All floating-point output
// goes through shortest-roundtrip or fixed "%.17g" formatting so repeated
// runs are byte-identical.

namespace modcrown {

using json = nlohmann::json;

/// "%.17g" rendering: round-trips doubles exactly and deterministically.
inline std::string fmt_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw DomainError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

inline void save_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot open file for writing: " + path);
  out << j.dump(2) << "\n";
}

// ---- spectral models and model vectors ------------------------------------

inline json vec_to_json(const ModelVec& f) {
  json re = json::array(), im = json::array();
  for (const cplx& v : f) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  return {{"re", re}, {"im", im}};
}

inline ModelVec vec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw ShapeError("vector JSON needs 're' and 'im' arrays");
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (!re.is_array() || !im.is_array() || re.size() != im.size())
    throw ShapeError("vector JSON: 're' and 'im' must be equal-length arrays");
  ModelVec f;
  for (std::size_t i = 0; i < re.size(); ++i)
    f.emplace_back(re[i].get<double>(), im[i].get<double>());
  return f;
}

inline json model_to_json(const SpectralModel& m,
                          const std::optional<ModelVec>& eta = std::nullopt) {
  json j = {{"points", m.points}, {"weights", m.weights}};
  if (eta) j["eta"] = vec_to_json(*eta);
  return j;
}

inline SpectralModel model_from_json(const json& j) {
  if (!j.is_object() || !j.contains("points") || !j.contains("weights"))
    throw ShapeError("model JSON needs 'points' and 'weights' arrays");
  std::vector<double> pts, wts;
  for (const auto& v : j.at("points")) pts.push_back(v.get<double>());
  for (const auto& v : j.at("weights")) wts.push_back(v.get<double>());
  return make_model(std::move(pts), std::move(wts));
}

inline std::optional<ModelVec> bundled_vector_from_json(const json& j) {
  if (j.is_object() && j.contains("eta")) return vec_from_json(j.at("eta"));
  return std::nullopt;
}

// ---- kernel vectors --------------------------------------------------------

inline json kernel_vector_to_json(const KernelVector& v) {
  json terms = json::array();
  for (const auto& t : v.terms)
    terms.push_back({{"re", t.coeff.real()},
                     {"im", t.coeff.imag()},
                     {"w_re", t.point.real()},
                     {"w_im", t.point.imag()}});
  return {{"s", v.s}, {"terms", terms}};
}

inline KernelVector kernel_vector_from_json(const json& j) {
  if (!j.is_object() || !j.contains("s") || !j.contains("terms"))
    throw ShapeError("kernel vector JSON needs 's' and 'terms'");
  std::vector<std::pair<cplx, cplx>> pairs;
  for (const auto& t : j.at("terms")) {
    if (!t.contains("re") || !t.contains("im") || !t.contains("w_re") ||
        !t.contains("w_im"))
      throw ShapeError("kernel vector term needs re/im/w_re/w_im");
    pairs.emplace_back(cplx(t.at("re").get<double>(), t.at("im").get<double>()),
                       cplx(t.at("w_re").get<double>(),
                            t.at("w_im").get<double>()));
  }
  return kernel_vector(j.at("s").get<int>(), pairs);
}

// ---- grid-density measures -------------------------------------------------

inline json grid_density_to_json(const GridDensity& g) {
  return {{"xs", g.xs}, {"rho", g.rho}};
}

inline GridDensity grid_density_from_json(const json& j) {
  if (!j.is_object() || !j.contains("xs") || !j.contains("rho"))
    throw ShapeError("grid density JSON needs 'xs' and 'rho' arrays");
  GridDensity g;
  for (const auto& v : j.at("xs")) g.xs.push_back(v.get<double>());
  for (const auto& v : j.at("rho")) g.rho.push_back(v.get<double>());
  return g;
}

// ---- CSV -------------------------------------------------------------------

/// Minimal deterministic CSV emitter: comment header lines ("# key = value"),
/// one column-name row, then rows of %.17g-rendered cells.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void comment(const std::string& line) { out_ << "# " << line << "\n"; }

  void header(const std::vector<std::string>& cols) {
    for (std::size_t i = 0; i < cols.size(); ++i)
      out_ << (i ? "," : "") << cols[i];
    out_ << "\n";
  }

  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i)
      out_ << (i ? "," : "") << cells[i];
    out_ << "\n";
  }

  void row_numeric(const std::vector<double>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i)
      out_ << (i ? "," : "") << fmt_g17(cells[i]);
    out_ << "\n";
  }

 private:
  std::ostream& out_;
};

}  // namespace modcrown
