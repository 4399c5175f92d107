#ifndef ORBITBOUND_REPORT_HPP
#define ORBITBOUND_REPORT_HPP

// Report assembly: run configuration, the registered-claim evaluator driving
// the golden regression file, and deterministic rendering of every report
// document as JSON, CSV, or a text table.

#include "orbitbound/cache.hpp"

#include <iomanip>
#include <sstream>

namespace orbitbound {

struct RunConfig {
  std::string format = "table";  // json | csv | table
  std::string data_dir = default_data_dir();
  std::string cache_dir = default_cache_dir();
  bool no_cache = false;
  std::int64_t budget = kDefaultWeightBudget;
  std::string golden_path;  // defaults to <data_dir>/golden/paper_claims.json

  void validate() const {
    if (budget <= 0)
      fail(Errc::invalid_argument, "budget must be positive");
    if (format != "json" && format != "csv" && format != "table")
      fail(Errc::invalid_argument, "format must be json, csv or table");
  }
  std::string golden() const {
    return golden_path.empty() ? data_dir + "/golden/paper_claims.json" : golden_path;
  }
};

// ---------------------------------------------------------------------------
// Shared evaluation environment with memoized structures.

class Env {
public:
  explicit Env(const RunConfig& cfg) : cfg_(cfg) {}

  const RunConfig& cfg() const { return cfg_; }

  const RootSystem& rs(const SimpleType& t) {
    auto it = systems_.find(t.label());
    if (it == systems_.end())
      it = systems_.emplace(t.label(), build_root_system(t)).first;
    return it->second;
  }
  const RootSystem& rs(const std::string& label) { return rs(SimpleType::parse(label)); }

  const WeightSystem& ws(const RootSystem& r, const HighestWeight& hw) {
    const std::string key = cache_key(r.type, hw.coeffs);
    auto it = weights_.find(key);
    if (it == weights_.end())
      it = weights_.emplace(key, cached_weight_system(r, hw, cfg_.budget, cfg_.cache_dir, cfg_.no_cache)).first;
    return it->second;
  }

  const BoundsTable& bounds() {
    if (!bounds_)
      bounds_ = load_dimension_bounds(cfg_.data_dir + "/dimension_bounds.json");
    return *bounds_;
  }
  const Catalog& catalog() {
    if (!catalog_)
      catalog_ = load_catalog(cfg_.data_dir + "/table1_catalog.json");
    return *catalog_;
  }

  HighestWeight hw(const RootSystem& r, const std::string& coeffs) {
    HighestWeight h{r.type, HighestWeight::parse_coeffs(coeffs)};
    h.validate();
    return h;
  }

private:
  RunConfig cfg_;
  std::map<std::string, RootSystem> systems_;
  std::map<std::string, WeightSystem> weights_;
  std::optional<BoundsTable> bounds_;
  std::optional<Catalog> catalog_;
};

// ---------------------------------------------------------------------------
// Registered claims

enum class ClaimStatus { Match, Mismatch, FlaggedDiscrepancy };

inline std::string claim_status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Match: return "match";
    case ClaimStatus::Mismatch: return "mismatch";
    case ClaimStatus::FlaggedDiscrepancy: return "flagged-discrepancy";
  }
  return "?";
}

struct PaperClaim {
  std::string id;
  std::string citation;
  Json expected;
  Json computed;
  ClaimStatus status = ClaimStatus::Mismatch;
  std::string note;
};

namespace claimdetail {

// Ledger rows of a screening report restricted to the base twist.
inline std::vector<const InvolutionReport*> base_rows(const ScreeningReport& rep) {
  std::vector<const InvolutionReport*> rows;
  for (const auto& r : rep.rows)
    if (r.inv.twist == 0)
      rows.push_back(&r);
  std::sort(rows.begin(), rows.end(),
            [](const InvolutionReport* a, const InvolutionReport* b) { return a->inv.vertex < b->inv.vertex; });
  return rows;
}

inline std::map<int, std::int64_t> max_fixed_by_vertex(const ScreeningReport& rep) {
  std::map<int, std::int64_t> out;
  for (const auto& r : rep.rows) {
    auto [it, fresh] = out.emplace(r.inv.vertex, r.fixed_dim_r);
    if (!fresh)
      it->second = std::max(it->second, r.fixed_dim_r);
  }
  return out;
}

inline std::map<int, std::int64_t> min_codim_by_vertex(const ScreeningReport& rep) {
  std::map<int, std::int64_t> out;
  for (const auto& r : rep.rows) {
    auto [it, fresh] = out.emplace(r.inv.vertex, r.codim_r);
    if (!fresh)
      it->second = std::min(it->second, r.codim_r);
  }
  return out;
}

}  // namespace claimdetail

inline Json evaluate_claim_kind(Env& env, const Json& spec) {
  const std::string kind = spec.at("kind").get<std::string>();
  auto type_of = [&]() { return SimpleType::parse(spec.at("type").get<std::string>()); };
  auto screen_of = [&]() {
    const RootSystem& r = env.rs(type_of());
    HighestWeight h = env.hw(r, spec.at("hw").get<std::string>());
    ScreeningReport rep;
    rep.hw = h;
    rep.info = irrep_info(r, h);
    const WeightSystem& w = env.ws(r, h);
    for (const auto& inv : involution_representatives(r)) {
      InvolutionReport row = fixed_codim_real(r, rep.info, w, inv);
      if (row.passes_screen)
        rep.survivors.push_back(inv);
      rep.rows.push_back(std::move(row));
    }
    rep.verdict = rep.survivors.empty() ? Verdict::Excluded : Verdict::Inconclusive;
    return rep;
  };

  if (kind == "weyl_dim") {
    const RootSystem& r = env.rs(type_of());
    return weyl_dim(r, env.hw(r, spec.at("hw").get<std::string>())).str();
  }
  if (kind == "real_dim") {
    const RootSystem& r = env.rs(type_of());
    return real_dim(r, env.hw(r, spec.at("hw").get<std::string>())).str();
  }
  if (kind == "fs_type") {
    const RootSystem& r = env.rs(type_of());
    return fs_name(fs_type(r, env.hw(r, spec.at("hw").get<std::string>())));
  }
  if (kind == "spin_real_dims") {
    Json out = Json::array();
    for (int n = spec.at("lo").get<int>(); n <= spec.at("hi").get<int>(); ++n) {
      const RootSystem& r = env.rs(SimpleType{Family::B, n});
      std::vector<std::int64_t> c(static_cast<std::size_t>(n), 0);
      c.back() = 1;
      out.push_back(real_dim(r, {r.type, c}).str());
    }
    return out;
  }
  if (kind == "halfspin_real_dims") {
    Json out = Json::array();
    for (int n = spec.at("lo").get<int>(); n <= spec.at("hi").get<int>(); ++n) {
      const RootSystem& r = env.rs(SimpleType{Family::D, n});
      std::vector<std::int64_t> c(static_cast<std::size_t>(n), 0);
      c.back() = 1;
      out.push_back(real_dim(r, {r.type, c}).str());
    }
    return out;
  }
  if (kind == "dimension_bound")
    return dimension_bound(env.bounds(), type_of()).bound;
  if (kind == "enumerate_nonstandard") {
    auto list = enumerate_candidates(env.rs(type_of()), env.bounds(), env.catalog());
    Json out = Json::array();
    for (const auto& h : list.nonstandard)
      out.push_back(h.coeffs);
    return out;
  }
  if (kind == "screen") {
    auto rep = screen_of();
    Json out;
    out["verdict"] = rep.verdict == Verdict::Excluded ? "excluded" : "inconclusive";
    std::set<int> vs;
    for (const auto& s : rep.survivors)
      vs.insert(s.vertex);
    out["survivor_vertices"] = Json::array();
    for (int v : vs)
      out["survivor_vertices"].push_back(v);
    return out;
  }
  if (kind == "ledger_base") {
    auto rep = screen_of();
    Json out = Json::array();
    for (const auto* r : claimdetail::base_rows(rep))
      out.push_back(Json::array({r->inv.vertex, r->fixed_dim_r, r->codim_r, r->quotient_dim, r->passes_screen}));
    return out;
  }
  if (kind == "fixed_at") {
    auto rep = screen_of();
    for (const auto& r : rep.rows)
      if (r.inv.vertex == spec.at("vertex").get<int>() && r.inv.twist == spec.value("twist", 0))
        return r.fixed_dim_r;
    fail(Errc::invalid_argument, "no such involution row");
  }
  if (kind == "max_fixed_at") {
    auto rep = screen_of();
    return claimdetail::max_fixed_by_vertex(rep).at(spec.at("vertex").get<int>());
  }
  if (kind == "max_fixed_at_vertices") {
    auto rep = screen_of();
    auto table = claimdetail::max_fixed_by_vertex(rep);
    Json out = Json::array();
    for (const auto& v : spec.at("vertices"))
      out.push_back(table.at(v.get<int>()));
    return out;
  }
  if (kind == "max_fixed_and_codim") {
    auto rep = screen_of();
    const std::int64_t fixed = claimdetail::max_fixed_by_vertex(rep).at(spec.at("vertex").get<int>());
    return Json::array({fixed, static_cast<std::int64_t>(rep.info.dimR) - fixed});
  }
  if (kind == "min_codim_per_vertex") {
    auto rep = screen_of();
    Json out = Json::array();
    for (const auto& [v, c] : claimdetail::min_codim_by_vertex(rep))
      out.push_back(Json::array({v, c}));
    return out;
  }
  if (kind == "min_codim_overall") {
    auto rep = screen_of();
    std::int64_t best = static_cast<std::int64_t>(rep.info.dimR);
    for (const auto& r : rep.rows)
      best = std::min(best, r.codim_r);
    return best;
  }
  if (kind == "zero_fixed_vertices") {
    auto rep = screen_of();
    Json out = Json::array();
    for (const auto& [v, f] : claimdetail::max_fixed_by_vertex(rep))
      if (f == 0)
        out.push_back(v);
    return out;
  }
  if (kind == "base_codim_at") {
    auto rep = screen_of();
    for (const auto* r : claimdetail::base_rows(rep))
      if (r->inv.vertex == spec.at("vertex").get<int>())
        return r->codim_r;
    fail(Errc::invalid_argument, "no such vertex");
  }
  if (kind == "quotient_dims") {
    const RootSystem& r = env.rs(type_of());
    Json out = Json::array();
    for (const auto& inv : involution_representatives(r))
      if (inv.twist == 0)
        out.push_back(symmetric_quotient_dim(r, inv));
    return out;
  }
  if (kind == "fixed_quotient_pairs") {
    auto rep = screen_of();
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    for (const auto* r : claimdetail::base_rows(rep))
      pairs.emplace_back(r->quotient_dim, r->fixed_dim_r);
    std::sort(pairs.begin(), pairs.end());
    Json out = Json::array();
    for (const auto& [q, f] : pairs)
      out.push_back(Json::array({q, f}));
    return out;
  }
  if (kind == "spin_phase_parity") {
    for (int n = spec.at("lo").get<int>(); n <= spec.at("hi").get<int>(); ++n) {
      const RootSystem& r = env.rs(SimpleType{Family::B, n});
      std::vector<std::int64_t> c(static_cast<std::size_t>(n), 0);
      c.back() = 1;
      const WeightSystem& w = env.ws(r, {r.type, c});
      for (const auto& inv : involution_representatives(r)) {
        if (inv.twist != 0)
          continue;
        auto sp = phase_spectrum(w, inv);
        if (inv.vertex % 2 == 0) {
          if (!(sp.mult.size() == 2 && sp.at(Rational(0)) == sp.at(Rational(1, 2))))
            return false;
        } else {
          if (sp.at(Rational(1, 4)) + sp.at(Rational(3, 4)) != sp.total())
            return false;
        }
      }
    }
    return true;
  }
  if (kind == "vertex_coords") {
    const RootSystem& r = env.rs(type_of());
    auto verts = cartan_vertices(r);
    const int index = spec.at("index").get<int>();
    for (const auto& v : verts)
      if (v.index == index)
        return json_rat_vec(v.v);
    fail(Errc::invalid_argument, "no such vertex");
  }
  if (kind == "center_order")
    return static_cast<std::int64_t>(center_elements(env.rs(type_of())).size());
  if (kind == "automorphism_count")
    return static_cast<std::int64_t>(diagram_automorphisms(env.rs(type_of())).size());
  if (kind == "scan_la") {
    const Rational scale = spec.contains("scale") ? parse_rat(spec.at("scale").get<std::string>()) : Rational(1);
    Json out = Json::array();
    for (const auto& s : scan_eq_la(spec.at("max_rank").get<int>(), scale))
      out.push_back(Json::array({std::string(1, family_char(s.type.family)), s.type.rank, s.index, s.multiplier}));
    return out;
  }
  if (kind == "la_adjoint_solutions") {
    Json out = Json::array();
    for (const auto& s : scan_eq_la(spec.at("max_rank").get<int>()))
      if (la_solution_is_adjoint(s))
        out.push_back(Json::array({std::string(1, family_char(s.type.family)), s.type.rank}));
    return out;
  }
  if (kind == "lemma_g2") {
    auto rep = check_lemma_g2();
    Json out;
    out["weight_table_ok"] = rep.weight_table_ok;
    out["zero_multiplicity"] = rep.zero_multiplicity;
    out["f"] = rep.f;
    out["contradiction"] = rep.contradiction;
    out["pass"] = rep.pass;
    return out;
  }
  if (kind == "circle_fix") {
    const RootSystem& r = env.rs(type_of());
    HighestWeight h = env.hw(r, spec.at("hw").get<std::string>());
    return circle_fix_count(r, env.ws(r, h)).f;
  }
  if (kind == "weight_mult") {
    const RootSystem& r = env.rs(type_of());
    HighestWeight h = env.hw(r, spec.at("hw").get<std::string>());
    RatVec v;
    for (const auto& s : spec.at("weight"))
      v.push_back(parse_rat(s.get<std::string>()));
    return env.ws(r, h).mult_of(r.from_rational(v));
  }
  if (kind == "exclusion_family") {
    auto rows = verify_exclusion_table(env.bounds(), static_cast<Family>(spec.at("family").get<std::string>().at(0)),
                                       spec.at("lo").get<int>(), spec.at("hi").get<int>());
    const std::string id = spec.at("family_id").get<std::string>();
    bool all_exceed = true, forms_match = true, any = false;
    for (const auto& r : rows) {
      if (r.family_id != id)
        continue;
      any = true;
      all_exceed &= r.exceeds;
      forms_match &= r.closed_form_matches;
    }
    if (!any)
      fail(Errc::invalid_argument, "no rows for exclusion family " + id);
    Json out;
    out["all_exceed"] = all_exceed;
    out["closed_forms_match"] = forms_match;
    return out;
  }
  if (kind == "family_dims") {
    auto rows = verify_exclusion_table(env.bounds(), static_cast<Family>(spec.at("family").get<std::string>().at(0)),
                                       spec.at("lo").get<int>(), spec.at("hi").get<int>());
    const std::string id = spec.at("family_id").get<std::string>();
    const bool complex = spec.value("complex", false);
    Json out = Json::array();
    for (const auto& r : rows)
      if (r.family_id == id)
        out.push_back((complex ? r.dimC : r.dimR).str());
    return out;
  }
  if (kind == "brute_fixed" || kind == "brute_fixed_real") {
    std::vector<Rational> phases;
    for (const auto& s : spec.at("phases"))
      phases.push_back(parse_rat(s.get<std::string>()));
    const std::int64_t count = brute_force_fixed_dim(phases, spec.at("k").get<int>());
    return kind == "brute_fixed" ? count : 2 * count;
  }
  fail(Errc::data_error, "unknown claim kind '" + kind + "'");
}

inline std::vector<PaperClaim> evaluate_claims(Env& env, const Json& golden) {
  if (golden.value("schema", "") != "orbitbound-golden/1")
    fail(Errc::data_error, "unexpected golden-file schema");
  std::vector<PaperClaim> out;
  for (const auto& spec : golden.at("claims")) {
    PaperClaim claim;
    claim.id = spec.at("id").get<std::string>();
    claim.citation = spec.value("citation", "");
    claim.expected = spec.at("expected");
    claim.note = spec.value("note", "");
    claim.computed = evaluate_claim_kind(env, spec);
    const bool flagged = spec.value("flagged", false);
    // Key-order-insensitive comparison.
    const bool equal = nlohmann::json(claim.computed) == nlohmann::json(claim.expected);
    if (equal)
      claim.status = ClaimStatus::Match;
    else
      claim.status = flagged ? ClaimStatus::FlaggedDiscrepancy : ClaimStatus::Mismatch;
    out.push_back(std::move(claim));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Commands

inline Json cmd_enumerate(Env& env, const std::string& type_str) {
  const RootSystem& rs = env.rs(type_str);
  return candidate_list_to_json(rs, enumerate_candidates(rs, env.bounds(), env.catalog()));
}

inline Json cmd_screen(Env& env, const std::string& type_str, const std::string& hw_str) {
  const RootSystem& r = env.rs(type_str);
  HighestWeight h = env.hw(r, hw_str);
  ScreeningReport rep;
  rep.hw = h;
  rep.info = irrep_info(r, h);
  const WeightSystem& w = env.ws(r, h);
  for (const auto& inv : involution_representatives(r)) {
    InvolutionReport row = fixed_codim_real(r, rep.info, w, inv);
    if (row.passes_screen)
      rep.survivors.push_back(inv);
    rep.rows.push_back(std::move(row));
  }
  rep.verdict = rep.survivors.empty() ? Verdict::Excluded : Verdict::Inconclusive;
  return screening_report_to_json(r, rep);
}

inline Json cmd_involutions(Env& env, const std::string& type_str) {
  const RootSystem& r = env.rs(type_str);
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = "involutions";
  j["type"] = r.type.label();
  j["vertices"] = Json::array();
  for (const auto& v : cartan_vertices(r)) {
    Json row;
    row["index"] = v.index;
    row["mark"] = v.mark;
    row["v"] = json_rat_vec(v.v);
    j["vertices"].push_back(std::move(row));
  }
  j["involutions"] = Json::array();
  for (const auto& inv : involution_representatives(r)) {
    Json row = involution_to_json(r, inv);
    row["quotient_dim"] = symmetric_quotient_dim(r, inv);
    j["involutions"].push_back(std::move(row));
  }
  return j;
}

inline Json cmd_weights(Env& env, const std::string& type_str, const std::string& hw_str) {
  const RootSystem& r = env.rs(type_str);
  HighestWeight h = env.hw(r, hw_str);
  Json j = weight_system_to_json(env.ws(r, h));
  j["schema"] = kReportSchema;
  j["command"] = "weights";
  return j;
}

inline Json cmd_scan_la(Env&, int max_rank) {
  return la_solutions_to_json(scan_eq_la(max_rank), max_rank);
}

inline Json cmd_lemma_g2(Env&) { return lemma_g2_to_json(check_lemma_g2()); }

inline Json cmd_verify_paper(Env& env) {
  const Json golden = load_json_file(env.cfg().golden());
  auto claims = evaluate_claims(env, golden);
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = "verify-paper";
  j["claims"] = Json::array();
  int match = 0, mismatch = 0, flagged = 0;
  for (const auto& c : claims) {
    Json row;
    row["id"] = c.id;
    row["status"] = claim_status_name(c.status);
    row["expected"] = c.expected;
    row["computed"] = c.computed;
    row["citation"] = c.citation;
    if (!c.note.empty())
      row["note"] = c.note;
    j["claims"].push_back(std::move(row));
    switch (c.status) {
      case ClaimStatus::Match: ++match; break;
      case ClaimStatus::Mismatch: ++mismatch; break;
      case ClaimStatus::FlaggedDiscrepancy: ++flagged; break;
    }
  }
  j["counts"] = Json{{"match", match}, {"mismatch", mismatch}, {"flagged_discrepancy", flagged}};
  j["ok"] = (mismatch == 0);
  return j;
}

// ---------------------------------------------------------------------------
// Rendering

inline std::string render_json(const Json& doc) { return doc.dump(2) + "\n"; }

namespace renderdetail {

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string cell(const Json& v) {
  if (v.is_string())
    return v.get<std::string>();
  return v.dump();
}

inline std::string csv_from_rows(const std::vector<std::string>& header,
                                 const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i)
    out += (i ? "," : "") + csv_escape(header[i]);
  out += "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i)
      out += (i ? "," : "") + csv_escape(r[i]);
    out += "\n";
  }
  return out;
}

inline std::string table_from_rows(const std::vector<std::string>& header,
                                   const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w(header.size());
  for (std::size_t i = 0; i < header.size(); ++i)
    w[i] = header[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i)
      w[i] = std::max(w[i], r[i].size());
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i)
      out << (i ? "  " : "") << std::left << std::setw(static_cast<int>(w[i])) << r[i];
    out << "\n";
  };
  line(header);
  std::vector<std::string> sep;
  for (auto width : w)
    sep.push_back(std::string(width, '-'));
  line(sep);
  for (const auto& r : rows)
    line(r);
  return out.str();
}

// Flatten a report document into one leaf table.
inline void flatten(const Json& doc, std::vector<std::string>& header,
                    std::vector<std::vector<std::string>>& rows) {
  const std::string command = doc.value("command", "");
  if (command == "enumerate") {
    header = {"kind", "hw", "label", "classification", "dim_r"};
    for (const auto& e : doc.at("standard"))
      rows.push_back({"standard", e.at("hw").dump(), e.value("label", ""),
                      e.value("classification", ""), e.value("dim_r", "")});
    for (const auto& e : doc.at("nonstandard"))
      rows.push_back({"nonstandard", e.at("hw").dump(), "", "", e.value("dim_r", "")});
    return;
  }
  if (command == "screen") {
    header = {"vertex", "twist", "fixed_dim_r", "codim_r", "quotient_dim", "passes"};
    for (const auto& e : doc.at("ledger"))
      rows.push_back({cell(e.at("vertex")), cell(e.at("twist")), cell(e.at("fixed_dim_r")),
                      cell(e.at("codim_r")), cell(e.at("quotient_dim")), cell(e.at("passes_screen"))});
    return;
  }
  if (command == "involutions") {
    header = {"vertex", "twist", "x", "square_class", "quotient_dim"};
    for (const auto& e : doc.at("involutions"))
      rows.push_back({cell(e.at("vertex")), cell(e.at("twist")), e.at("x").dump(),
                      cell(e.at("square_class")), cell(e.at("quotient_dim"))});
    return;
  }
  if (command == "weights") {
    header = {"weight", "mult"};
    for (const auto& e : doc.at("entries"))
      rows.push_back({e.at("weight").dump(), cell(e.at("mult"))});
    return;
  }
  if (command == "scan-la") {
    header = {"type", "index", "multiplier", "adjoint"};
    for (const auto& e : doc.at("solutions"))
      rows.push_back({cell(e.at("type")), cell(e.at("index")), cell(e.at("multiplier")),
                      cell(e.at("adjoint"))});
    return;
  }
  if (command == "lemma-g2") {
    header = {"lemma", "field", "value"};
    for (const auto& [name, record] : doc.at("lemmas").items())
      for (const auto& key : {"weight_table_ok", "zero_multiplicity", "f", "required_lower_bound",
                              "contradiction", "pass", "detail"})
        rows.push_back({name, key, cell(record.at(key))});
    return;
  }
  if (command == "verify-paper") {
    header = {"id", "status", "expected", "computed", "citation"};
    for (const auto& e : doc.at("claims"))
      rows.push_back({cell(e.at("id")), cell(e.at("status")), e.at("expected").dump(),
                      e.at("computed").dump(), cell(e.at("citation"))});
    return;
  }
  fail(Errc::invalid_argument, "no tabular rendering for this document");
}

}  // namespace renderdetail

inline std::string render(const Json& doc, const std::string& format) {
  if (format == "json")
    return render_json(doc);
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  renderdetail::flatten(doc, header, rows);
  std::string out =
      format == "csv" ? renderdetail::csv_from_rows(header, rows) : renderdetail::table_from_rows(header, rows);
  if (format == "table") {
    // One summary line for the commands with a verdict.
    const std::string command = doc.value("command", "");
    if (command == "screen")
      out += "verdict: " + doc.at("verdict").get<std::string>() + "\n";
    if (command == "verify-paper") {
      const auto& c = doc.at("counts");
      out += "match: " + std::to_string(c.at("match").get<int>()) +
             ", mismatch: " + std::to_string(c.at("mismatch").get<int>()) +
             ", flagged-discrepancy: " + std::to_string(c.at("flagged_discrepancy").get<int>()) + "\n";
    }
    if (command == "enumerate" && doc.contains("resolved_externally"))
      out += "note: resolved externally\n";
  }
  return out;
}

}  // namespace orbitbound

#endif
