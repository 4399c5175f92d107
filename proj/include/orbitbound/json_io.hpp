#ifndef ORBITBOUND_JSON_IO_HPP
#define ORBITBOUND_JSON_IO_HPP

// Canonical JSON rendering of the engine types. Rationals are normalized
// "p/q" strings, big integers decimal strings; collections are emitted in a
// fixed sorted order so identical inputs produce byte-identical documents.

#include "orbitbound/enumeration.hpp"
#include "orbitbound/involutions.hpp"
#include "orbitbound/specialchecks.hpp"

namespace orbitbound {

inline constexpr const char* kReportSchema = "orbitbound-report/1";

inline Json json_rat_vec(const RatVec& v) {
  Json a = Json::array();
  for (const auto& x : v)
    a.push_back(rat_str(x));
  return a;
}

inline Json json_weight(const RootSystem& rs, const IntVec& w) {
  Json a = Json::array();
  for (int i = 0; i < w.dim(); ++i)
    a.push_back(rat_str(Rational(w[i], rs.den)));
  return a;
}

inline Json json_weight(const WeightSystem& ws, const IntVec& w) {
  Json a = Json::array();
  for (int i = 0; i < w.dim(); ++i)
    a.push_back(rat_str(Rational(w[i], ws.den)));
  return a;
}

inline Json json_hw(const HighestWeight& hw) {
  Json a = Json::array();
  for (auto c : hw.coeffs)
    a.push_back(c);
  return a;
}

inline Json root_system_to_json(const RootSystem& rs) {
  Json j;
  j["schema"] = "orbitbound-rootsystem/1";
  j["type"] = rs.type.label();
  j["rank"] = rs.rank();
  j["ambient_dim"] = rs.ambient;
  j["metric_scale"] = rat_str(rs.metric_scale);
  j["group_dim"] = rs.group_dim;
  j["coxeter_number"] = rs.coxeter;
  if (rs.d3_alias)
    j["a3_alias"] = true;
  j["simple_roots"] = Json::array();
  for (const auto& a : rs.simple_roots)
    j["simple_roots"].push_back(json_weight(rs, a));
  j["positive_roots"] = Json::array();
  for (const auto& a : rs.positive_roots)
    j["positive_roots"].push_back(json_weight(rs, a));
  j["highest_root"] = json_weight(rs, rs.highest_root);
  j["marks"] = rs.marks;
  j["fundamental_weights"] = Json::array();
  for (const auto& a : rs.fundamental_weights)
    j["fundamental_weights"].push_back(json_weight(rs, a));
  j["weyl_vector"] = json_weight(rs, rs.rho);
  j["coroots"] = Json::array();
  for (const auto& a : rs.coroots)
    j["coroots"].push_back(json_rat_vec(a));
  return j;
}

inline Json weight_system_to_json(const WeightSystem& ws) {
  Json j;
  j["schema"] = "orbitbound-weights/1";
  j["type"] = SimpleType{ws.type}.label();
  j["hw"] = ws.hw_coeffs;
  j["dim_c"] = ws.dimC.str();
  j["entries"] = Json::array();
  for (const auto& [w, m] : ws.entries) {
    Json row;
    row["weight"] = json_weight(ws, w);
    row["mult"] = m;
    j["entries"].push_back(std::move(row));
  }
  return j;
}

inline WeightSystem weight_system_from_json(const RootSystem& rs, const Json& j) {
  if (j.value("schema", "") != "orbitbound-weights/1")
    fail(Errc::data_error, "unexpected weight-system schema");
  WeightSystem ws;
  ws.type = rs.type;
  ws.hw_coeffs = j.at("hw").get<std::vector<std::int64_t>>();
  ws.ambient = rs.ambient;
  ws.den = rs.den;
  ws.dimC = BigInt(j.at("dim_c").get<std::string>());
  BigInt total = 0;
  for (const auto& row : j.at("entries")) {
    RatVec v;
    for (const auto& s : row.at("weight"))
      v.push_back(parse_rat(s.get<std::string>()));
    const std::int64_t m = row.at("mult").get<std::int64_t>();
    ws.entries.emplace_back(rs.from_rational(v), m);
    total += m;
  }
  if (total != ws.dimC)
    fail(Errc::data_error, "cached weight system is inconsistent");
  std::sort(ws.entries.begin(), ws.entries.end());
  ws.build_index();
  return ws;
}

inline Json involution_to_json(const RootSystem& rs, const Involution& inv) {
  Json j;
  j["vertex"] = inv.vertex;
  j["twist"] = inv.twist;
  j["x"] = json_rat_vec(inv.x);
  j["square_class"] = square_class(rs, inv);
  return j;
}

inline Json involution_report_to_json(const RootSystem& rs, const InvolutionReport& r) {
  Json j = involution_to_json(rs, r.inv);
  j["fixed_dim_r"] = r.fixed_dim_r;
  j["codim_r"] = r.codim_r;
  j["quotient_dim"] = r.quotient_dim;
  j["passes_screen"] = r.passes_screen;
  return j;
}

inline Json screening_report_to_json(const RootSystem& rs, const ScreeningReport& rep) {
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = "screen";
  j["type"] = rs.type.label();
  j["hw"] = rep.hw.coeffs;
  j["dim_c"] = rep.info.dimC.str();
  j["fs_type"] = fs_name(rep.info.fs);
  j["dim_r"] = rep.info.dimR.str();
  j["ledger"] = Json::array();
  for (const auto& row : rep.rows)
    j["ledger"].push_back(involution_report_to_json(rs, row));
  j["verdict"] = rep.verdict == Verdict::Excluded ? "excluded" : "inconclusive";
  j["survivors"] = Json::array();
  for (const auto& s : rep.survivors) {
    Json sj;
    sj["vertex"] = s.vertex;
    sj["twist"] = s.twist;
    j["survivors"].push_back(std::move(sj));
  }
  return j;
}

inline Json candidate_list_to_json(const RootSystem& rs, const CandidateList& list) {
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = "enumerate";
  j["type"] = SimpleType{list.type}.label();
  if (list.resolved_externally) {
    j["resolved_externally"] = true;
  } else {
    j["bound"] = list.bound;
  }
  j["standard"] = Json::array();
  for (const auto& e : list.standard) {
    Json row;
    row["hw"] = e.hw.coeffs;
    row["label"] = e.row.label;
    row["group"] = e.row.group;
    row["classification"] = e.row.classification;
    if (!e.row.kernel.empty())
      row["kernel"] = e.row.kernel;
    row["pig"] = e.row.pig;
    row["dim_r"] = e.dimR.str();
    if (!e.row.note.empty())
      row["note"] = e.row.note;
    j["standard"].push_back(std::move(row));
  }
  j["nonstandard"] = Json::array();
  for (const auto& h : list.nonstandard) {
    const IrrepInfo info = irrep_info(rs, h);
    Json row;
    row["hw"] = h.coeffs;
    row["dim_c"] = info.dimC.str();
    row["fs_type"] = fs_name(info.fs);
    row["dim_r"] = info.dimR.str();
    j["nonstandard"].push_back(std::move(row));
  }
  return j;
}

inline Json la_solutions_to_json(const std::vector<LaSolution>& sols, int max_rank) {
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = "scan-la";
  j["max_rank"] = max_rank;
  j["solutions"] = Json::array();
  for (const auto& s : sols) {
    Json row;
    row["type"] = s.type.label();
    row["index"] = s.index;
    row["multiplier"] = s.multiplier;
    row["adjoint"] = la_solution_is_adjoint(s);
    j["solutions"].push_back(std::move(row));
  }
  return j;
}

inline Json lemma_g2_to_json(const LemmaG2Report& rep) {
  Json record;
  record["weight_table_ok"] = rep.weight_table_ok;
  record["zero_multiplicity"] = rep.zero_multiplicity;
  record["f"] = rep.f;
  record["required_lower_bound"] = rep.required_lower_bound;
  record["contradiction"] = rep.contradiction;
  record["pass"] = rep.pass;
  record["detail"] = rep.detail;
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = "lemma-g2";
  j["lemmas"] = Json{{"g2-s20r7-empty-boundary", record}};
  j["pass"] = rep.pass;
  return j;
}

}  // namespace orbitbound

#endif
