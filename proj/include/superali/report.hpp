#pragma once

#include <string>

#include <json.hpp>

#include "superali/antisym.hpp"
#include "superali/vectorial.hpp"
#include "superali/version.hpp"

namespace superali {

/// All reports use insertion-ordered JSON with a fixed field order:
/// command, spec, parameters, results (and result-specific keys), version,
/// timing. The timing object is informational and excluded from determinism
/// comparisons; everything else is byte-stable for fixed inputs and seed.
/// Rationals serialize as "num/den" strings.
using Json = nlohmann::ordered_json;

inline Json scalar_to_json(const SuperScalar& s) {
  Json terms = Json::array();
  for (const auto& t : s.terms()) {
    Json item;
    item["coeff"] = rat_fraction_string(t.coeff);
    item["monomial"] = s.table() ? t.mono.to_string(*s.table()) : std::string("1");
    terms.push_back(std::move(item));
  }
  return terms;
}

inline Json span_report_json(const SpanReport& rep, const Json& timing) {
  Json j;
  j["command"] = "span";
  j["spec"] = rep.spec.to_string();
  j["parameters"] = Json{{"kmax", rep.kmax}};
  Json results = Json::array();
  for (std::uint32_t k = 2; k <= rep.kmax; ++k) {
    Json item;
    item["k"] = k;
    auto it = rep.closure.find(k);
    if (it == rep.closure.end()) {
      item["classification"] = "zero";
    } else {
      item["classification"] = "nonvanishing";
      item["closure"] = closure_name(it->second);
    }
    results.push_back(std::move(item));
  }
  j["results"] = std::move(results);
  j["nonvanishing"] = rep.nonvanishing;
  if (rep.minimal_identity) j["minimal_identity"] = *rep.minimal_identity;
  else j["minimal_identity"] = nullptr;
  j["version"] = version;
  j["timing"] = timing;
  return j;
}

inline Json critical_report_json(const CriticalScanReport& rep, const Json& timing) {
  Json j;
  j["command"] = "vect-critical";
  j["spec"] = rep.spec.to_string();
  j["parameters"] = Json{{"degree", rep.degree}};
  Json results = Json::array();
  for (const auto& item : rep.items) {
    Json r;
    r["n"] = item.N;
    r["classification"] = power_class_name(item.classification);
    r["order"] = item.order;
    results.push_back(std::move(r));
  }
  j["results"] = std::move(results);
  j["truncation_note"] = "identity classifications hold at truncation degree " +
                         std::to_string(rep.degree);
  j["version"] = version;
  j["timing"] = timing;
  return j;
}

inline Json matrix_identity_json(const MatrixAlgebraSpec& spec, std::uint32_t r, bool zero,
                                 std::size_t term_count, const Json& timing) {
  Json j;
  j["command"] = "matrix-identity";
  j["spec"] = spec.to_string();
  j["parameters"] = Json{{"r", r}};
  j["results"] = Json::array({Json{{"r", r},
                                   {"classification", zero ? "zero" : "nonvanishing"},
                                   {"term_count", term_count}}});
  j["version"] = version;
  j["timing"] = timing;
  return j;
}

} // namespace superali
