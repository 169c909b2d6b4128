#pragma once

// JSON report schema (schema_version 1). The README lists the top-level keys.
//
// Dimensions are JSON integers; polynomial coefficients are exact rationals
// rendered as "p/q" strings. Keys keep insertion order, so a report
// serializes to the same bytes every time.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "srlc/binomial.hpp"
#include "srlc/complex.hpp"
#include "srlc/graebe.hpp"
#include "srlc/hochster.hpp"
#include "srlc/quotient.hpp"

namespace srlc {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct VerdictReport {
  int schema_version = kSchemaVersion;
  std::string command;
  std::string input;  // "corpus:<name>" or a file path
  int n = 0;
  std::vector<std::vector<int>> facets;
  std::string field;
  bool pure = true;
  int dim = 0;
  int d = 0;
  std::optional<SingularityVerdict> singularity;
  std::optional<bool> cohen_macaulay;
  std::optional<bool> buchsbaum;
  std::optional<GradedDimTable> lc_table;
  std::optional<QuotientLcTable> quotient_lc;
  std::vector<KernelReport> kernels;
  std::vector<TheoremVerdict> theorem;
  std::optional<std::uint64_t> seed;
};

namespace detail {

template <typename T>
Json optional_to_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

inline std::optional<bool> optional_bool(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<bool>();
}

inline SingularityDimension singdim_from_string(const std::string& s) {
  if (s == "-inf") return SingularityDimension::neg_infinity();
  return SingularityDimension::finite(std::stoi(s));
}

}  // namespace detail

inline Json to_json(const BinomialSeries& s) {
  Json coeffs = Json::array();
  for (auto c : s.coeffs) coeffs.push_back(c);
  Json monomial = Json::array();
  for (const auto& c : s.monomial_coeffs()) monomial.push_back(c.get_str());
  return Json{{"offset", s.offset},
              {"binomial_coeffs", coeffs},
              {"monomial_coeffs", monomial},
              {"polynomial", s.polynomial_string()}};
}

inline BinomialSeries series_from_json(const Json& j) {
  BinomialSeries s;
  s.offset = j.at("offset").get<std::int64_t>();
  s.coeffs = j.at("binomial_coeffs").get<std::vector<std::uint64_t>>();
  return s;
}

inline Json to_json(const SingularityVerdict& v) {
  Json witnesses = Json::array();
  for (const auto& w : v.witnesses)
    witnesses.push_back(Json{{"face", w.face.vertices()}, {"degree", w.degree}, {"dim", w.dim}});
  return Json{{"dimension", v.dimension.to_string()}, {"pure", v.pure}, {"witnesses", witnesses}};
}

inline SingularityVerdict singularity_from_json(const Json& j) {
  SingularityVerdict v;
  v.dimension = detail::singdim_from_string(j.at("dimension").get<std::string>());
  v.pure = j.at("pure").get<bool>();
  for (const auto& w : j.at("witnesses"))
    v.witnesses.push_back({Face(w.at("face").get<std::vector<int>>()), w.at("degree").get<int>(),
                           w.at("dim").get<std::size_t>()});
  return v;
}

inline Json to_json(const GradedDimTable& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json degrees = Json::array();
    for (auto it = row.by_degree.rbegin(); it != row.by_degree.rend(); ++it)
      degrees.push_back(Json{{"j", it->first}, {"dim", it->second}});
    rows.push_back(Json{{"l", row.l}, {"degrees", degrees}, {"tail", to_json(row.tail)}});
  }
  return Json{{"d", t.d}, {"tail_variable", "i, degree -(i+1)"}, {"rows", rows}};
}

inline GradedDimTable lc_table_from_json(const Json& j) {
  GradedDimTable t;
  t.d = j.at("d").get<int>();
  for (const auto& r : j.at("rows")) {
    GradedDimRow row;
    row.l = r.at("l").get<int>();
    for (const auto& e : r.at("degrees"))
      row.by_degree[e.at("j").get<std::int64_t>()] = e.at("dim").get<std::uint64_t>();
    row.tail = series_from_json(r.at("tail"));
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline Json to_json(const QuotientLcTable& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json degrees = Json::array();
    for (const auto& [i, dim] : row.by_degree) degrees.push_back(Json{{"i", i}, {"dim", dim}});
    rows.push_back(Json{{"l", row.l}, {"degrees", degrees}, {"series", to_json(row.series)}});
  }
  Json isolated = Json::array();
  for (const auto& [l, v] : t.isolated)
    isolated.push_back(Json{{"l", l},
                            {"negative", v.negative},
                            {"degree0", v.degree0},
                            {"degree1", v.degree1},
                            {"coker_prev", v.coker_prev},
                            {"ker_cur", v.ker_cur},
                            {"degree_at_least_2", v.degree_at_least_2},
                            {"degree_at_least_2_source", "derived"}});
  return Json{{"m", t.m}, {"d", t.d}, {"flc", t.flc}, {"series_variable", "i, degree -i"},
              {"rows", rows}, {"isolated", isolated}};
}

inline QuotientLcTable quotient_table_from_json(const Json& j) {
  QuotientLcTable t;
  t.m = j.at("m").get<int>();
  t.d = j.at("d").get<int>();
  t.flc = j.at("flc").get<bool>();
  for (const auto& r : j.at("rows")) {
    QuotientLcRow row;
    row.l = r.at("l").get<int>();
    for (const auto& e : r.at("degrees")) row.by_degree[e.at("i").get<int>()] = e.at("dim").get<std::uint64_t>();
    row.series = series_from_json(r.at("series"));
    t.rows.push_back(std::move(row));
  }
  if (j.contains("isolated"))
    for (const auto& e : j.at("isolated")) {
      IsolatedQuotientDims v;
      v.negative = e.at("negative").get<std::uint64_t>();
      v.degree0 = e.at("degree0").get<std::uint64_t>();
      v.degree1 = e.at("degree1").get<std::uint64_t>();
      v.coker_prev = e.at("coker_prev").get<std::uint64_t>();
      v.ker_cur = e.at("ker_cur").get<std::uint64_t>();
      v.degree_at_least_2 = e.at("degree_at_least_2").get<std::uint64_t>();
      t.isolated[e.at("l").get<int>()] = v;
    }
  return t;
}

inline Json to_json(const KernelReport& k) {
  return Json{{"l", k.l},
              {"m", k.m},
              {"i", k.i},
              {"brute_dim", k.brute_dim},
              {"closed_form_dim", k.closed_form_dim},
              {"surjective_onto_previous", detail::optional_to_json(k.surjective_onto_previous)},
              {"field", k.field},
              {"matrix_provenance", k.matrix_provenance}};
}

inline KernelReport kernel_from_json(const Json& j) {
  KernelReport k;
  k.l = j.at("l").get<int>();
  k.m = j.at("m").get<int>();
  k.i = j.at("i").get<int>();
  k.brute_dim = j.at("brute_dim").get<std::size_t>();
  k.closed_form_dim = j.at("closed_form_dim").get<std::size_t>();
  k.surjective_onto_previous = detail::optional_bool(j, "surjective_onto_previous");
  k.field = j.at("field").get<std::string>();
  k.matrix_provenance = j.at("matrix_provenance").get<std::string>();
  return k;
}

inline Json to_json(const TheoremVerdict& v) {
  Json kernels = Json::array();
  for (const auto& k : v.kernel_reports) kernels.push_back(to_json(k));
  return Json{{"m", v.m},
              {"singularity_dimension", v.singularity_dimension.to_string()},
              {"singdim_less_than_m", v.singularity_dimension.less_than(v.m)},
              {"flc_by_formula", v.flc_by_formula},
              {"flc_by_bruteforce", detail::optional_to_json(v.flc_by_bruteforce)},
              {"bridge_consistent", v.bridge_consistent},
              {"agree", v.agree},
              {"bruteforce_field", v.bruteforce_field},
              {"matrix_provenance", v.matrix_provenance},
              {"resamples", v.resamples},
              {"kernel_reports", kernels}};
}

inline TheoremVerdict theorem_from_json(const Json& j) {
  TheoremVerdict v;
  v.m = j.at("m").get<int>();
  v.singularity_dimension = detail::singdim_from_string(j.at("singularity_dimension").get<std::string>());
  v.flc_by_formula = j.at("flc_by_formula").get<bool>();
  v.flc_by_bruteforce = detail::optional_bool(j, "flc_by_bruteforce");
  v.bridge_consistent = j.at("bridge_consistent").get<bool>();
  v.agree = j.at("agree").get<bool>();
  v.bruteforce_field = j.at("bruteforce_field").get<std::string>();
  v.matrix_provenance = j.at("matrix_provenance").get<std::string>();
  v.resamples = j.at("resamples").get<int>();
  for (const auto& k : j.at("kernel_reports")) v.kernel_reports.push_back(kernel_from_json(k));
  return v;
}

inline Json to_json(const VerdictReport& r) {
  Json j;
  j["schema_version"] = r.schema_version;
  j["command"] = r.command;
  j["input"] = Json{{"source", r.input}, {"n", r.n}, {"facets", r.facets}};
  j["field"] = r.field;
  j["pure"] = r.pure;
  j["dim"] = r.dim;
  j["d"] = r.d;
  j["singularity"] = r.singularity ? to_json(*r.singularity) : Json(nullptr);
  j["cohen_macaulay"] = detail::optional_to_json(r.cohen_macaulay);
  j["buchsbaum"] = detail::optional_to_json(r.buchsbaum);
  j["lc_table"] = r.lc_table ? to_json(*r.lc_table) : Json(nullptr);
  j["quotient_lc"] = r.quotient_lc ? to_json(*r.quotient_lc) : Json(nullptr);
  Json kernels = Json::array();
  for (const auto& k : r.kernels) kernels.push_back(to_json(k));
  j["kernels"] = kernels;
  Json theorem = Json::array();
  for (const auto& v : r.theorem) theorem.push_back(to_json(v));
  j["theorem"] = theorem;
  j["seed"] = detail::optional_to_json(r.seed);
  return j;
}

inline VerdictReport report_from_json(const Json& j) {
  VerdictReport r;
  r.schema_version = j.at("schema_version").get<int>();
  if (r.schema_version != kSchemaVersion)
    throw std::invalid_argument("unsupported report schema_version " + std::to_string(r.schema_version));
  r.command = j.at("command").get<std::string>();
  r.input = j.at("input").at("source").get<std::string>();
  r.n = j.at("input").at("n").get<int>();
  r.facets = j.at("input").at("facets").get<std::vector<std::vector<int>>>();
  r.field = j.at("field").get<std::string>();
  r.pure = j.at("pure").get<bool>();
  r.dim = j.at("dim").get<int>();
  r.d = j.at("d").get<int>();
  if (!j.at("singularity").is_null()) r.singularity = singularity_from_json(j.at("singularity"));
  r.cohen_macaulay = detail::optional_bool(j, "cohen_macaulay");
  r.buchsbaum = detail::optional_bool(j, "buchsbaum");
  if (!j.at("lc_table").is_null()) r.lc_table = lc_table_from_json(j.at("lc_table"));
  if (!j.at("quotient_lc").is_null()) r.quotient_lc = quotient_table_from_json(j.at("quotient_lc"));
  for (const auto& k : j.at("kernels")) r.kernels.push_back(kernel_from_json(k));
  for (const auto& v : j.at("theorem")) r.theorem.push_back(theorem_from_json(v));
  if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
  return r;
}

}  // namespace srlc
