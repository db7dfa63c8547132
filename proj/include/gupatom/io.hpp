#pragma once

// JSON/CSV export of spectra and sampled functions.  The JSON schema is
// stable and round-trips byte-for-byte: keys are emitted in sorted order and
// doubles use shortest round-trip formatting, so parse -> re-serialize is the
// identity on emitted files.  CSV uses 17 significant digits.

#include <cstdio>
#include <string>

#include <json.hpp>

#include "gupatom/model.hpp"
#include "gupatom/version.hpp"

namespace gupatom {

inline std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline nlohmann::json spectrum_to_json(const SpectrumTable& table) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& lv : table.levels)
    levels.push_back({{"n", lv.n}, {"epsilon", lv.epsilon}, {"energy", lv.energy}});
  return nlohmann::json{
      {"params", {{"alpha", table.params.alpha}, {"beta", table.params.beta}}},
      {"method", method_name(table.produced_by)},
      {"levels", levels},
      {"tolerances", {{"spectrum", table.tol_spectrum}, {"quadrature", table.tol_quadrature}}},
      {"tool_version", kToolVersion},
  };
}

inline SpectrumTable spectrum_from_json(const nlohmann::json& j) {
  SpectrumTable table{
      ModelParams(j.at("params").at("alpha").get<double>(), j.at("params").at("beta").get<double>()),
      method_from_name(j.at("method").get<std::string>()),
      {},
      j.at("tolerances").at("spectrum").get<double>(),
      j.at("tolerances").at("quadrature").get<double>(),
  };
  for (const auto& lv : j.at("levels"))
    table.levels.emplace_back(lv.at("n").get<int>(), lv.at("epsilon").get<double>(),
                              table.produced_by);
  table.validate();
  return table;
}

inline std::string spectrum_to_csv(const SpectrumTable& table) {
  std::string out = "n,epsilon,energy\n";
  for (const auto& lv : table.levels)
    out += std::to_string(lv.n) + "," + format_full(lv.epsilon) + "," + format_full(lv.energy) + "\n";
  return out;
}

inline const char* abscissa_label(SampledWaveFunction::Kind kind) {
  switch (kind) {
    case SampledWaveFunction::Kind::momentum_p: return "p";
    case SampledWaveFunction::Kind::quasiposition_xi: return "xi";
    case SampledWaveFunction::Kind::coordinate_x: return "x";
  }
  return "abscissa";
}

inline std::string sampled_to_csv(const SampledWaveFunction& s) {
  std::string out = std::string(abscissa_label(s.abscissa_kind)) + ",re,im,abs2\n";
  for (std::size_t i = 0; i < s.abscissae.size(); ++i) {
    const double re = s.values[i].real(), im = s.values[i].imag();
    out += format_full(s.abscissae[i]) + "," + format_full(re) + "," + format_full(im) + "," +
           format_full(re * re + im * im) + "\n";
  }
  return out;
}

inline nlohmann::json sampled_to_json(const SampledWaveFunction& s) {
  nlohmann::json abscissae = nlohmann::json::array();
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (std::size_t i = 0; i < s.abscissae.size(); ++i) {
    abscissae.push_back(s.abscissae[i]);
    re.push_back(s.values[i].real());
    im.push_back(s.values[i].imag());
  }
  nlohmann::json j{
      {"abscissa", abscissa_label(s.abscissa_kind)},
      {"abscissae", abscissae},
      {"re", re},
      {"im", im},
      {"tool_version", kToolVersion},
  };
  if (s.level) {
    j["level"] = {{"n", s.level->n}, {"epsilon", s.level->epsilon}, {"energy", s.level->energy}};
    j["normalization_A"] = s.normalization_A;
    j["constant_c"] = {{"re", s.constant_c.real()}, {"im", s.constant_c.imag()}};
  }
  return j;
}

}  // namespace gupatom
