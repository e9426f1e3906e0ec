#include "raypf/report_json.hpp"

namespace raypf {

Json to_json(const RayParams& params) {
  return Json{{"n", params.n()},
              {"k", params.k()},
              {"a", params.a()},
              {"b", params.b()},
              {"regime", std::string(to_string(params.regime()))}};
}

Json to_json(const RaySequence& seq) {
  Json values = Json::array();
  for (const auto& v : seq.values) values.push_back(to_decimal(v));
  Json out{{"params", to_json(seq.params)},
           {"kind", std::string(to_string(seq.kind))},
           {"values", std::move(values)}};
  out["last_nonzero"] = seq.last_nonzero ? Json(*seq.last_nonzero) : Json(nullptr);
  return out;
}

Json to_json(const MinorSpec& spec) { return Json{{"rows", spec.rows}, {"cols", spec.cols}}; }

Json to_json(const PfVerdict& verdict) {
  Json out{{"passed", verdict.passed},
           {"max_order", verdict.max_order},
           {"window", verdict.window},
           {"minors_checked", verdict.minors_checked}};
  if (verdict.witness) {
    Json w = to_json(verdict.witness->spec);
    w["value"] = to_decimal(verdict.witness->value);
    out["witness"] = std::move(w);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json to_json(const IntPolynomial& p) {
  Json c = Json::array();
  for (const auto& v : p.coefficients()) c.push_back(to_decimal(v));
  return c;
}

Json path_matrix_json(const BigMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_decimal(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"window", m.rows()}, {"entries", std::move(rows)}};
}

Json to_json(const LgvReport& report) {
  Json seq = Json::array();
  for (const auto& v : report.sequence) seq.push_back(to_decimal(v));
  Json out{{"params", to_json(report.params)},
           {"window", report.window},
           {"max_order", report.max_order},
           {"delannoy", report.delannoy_mode},
           {"sequence", std::move(seq)},
           {"path_matrix", path_matrix_json(report.path_matrix)},
           {"toeplitz_match", report.toeplitz_match},
           {"minors_match_families", report.minors_match_families},
           {"minors_nonnegative", report.minors_nonnegative},
           {"minors_checked", report.minors_checked},
           {"passed", report.passed()}};
  out["toeplitz_mismatch"] =
      report.toeplitz_mismatch
          ? Json{{"row", report.toeplitz_mismatch->first}, {"col", report.toeplitz_mismatch->second}}
          : Json(nullptr);
  if (report.family_mismatch) {
    Json m = to_json(report.family_mismatch->spec);
    m["minor"] = to_decimal(report.family_mismatch->minor);
    m["families"] = to_decimal(report.family_mismatch->families);
    out["family_mismatch"] = std::move(m);
  } else {
    out["family_mismatch"] = nullptr;
  }
  if (report.negative_minor) {
    Json m = to_json(report.negative_minor->spec);
    m["value"] = to_decimal(report.negative_minor->value);
    out["negative_minor"] = std::move(m);
  } else {
    out["negative_minor"] = nullptr;
  }
  return out;
}

Json to_json(const TransitionProfile& profile, std::optional<double> x_star, double watson) {
  Json runs = Json::array();
  for (const auto& [sign, count] : run_length(profile.signs))
    runs.push_back(Json{{"sign", sign}, {"count", count}});
  return Json{{"params", to_json(profile.params)},
              {"jMax", profile.jmax},
              {"signs", std::move(runs)},
              {"m", profile.m},
              {"monotoneOK", profile.monotone_ok},
              {"x_star", x_star ? Json(*x_star) : Json(nullptr)},
              {"watson_ratio", watson}};
}

Json rational_json(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace raypf
