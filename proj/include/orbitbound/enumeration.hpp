#ifndef ORBITBOUND_ENUMERATION_HPP
#define ORBITBOUND_ENUMERATION_HPP

// Candidate enumeration: all irreducible highest weights with real dimension
// within the per-group bound, deduplicated by diagram automorphism and
// partitioned against the standard-example catalog. The bounds and the
// catalog are versioned data files, not code.

#include "orbitbound/irrep.hpp"

#include <json.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace orbitbound {

using Json = nlohmann::ordered_json;

inline std::string default_data_dir() {
#ifdef ORBITBOUND_DATA_DIR
  return ORBITBOUND_DATA_DIR;
#else
  return "data";
#endif
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    fail(Errc::data_error, "cannot open data file " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(Errc::data_error, "cannot parse " + path + ": " + e.what());
  }
  return j;
}

// ---------------------------------------------------------------------------
// Dimension bounds

struct DimensionBound {
  SimpleType type;
  std::int64_t bound = 0;
  std::string citation;
};

struct BoundsEntry {
  Family family;
  int min_rank = 0;
  int max_rank = 1 << 20;
  std::optional<std::array<std::int64_t, 3>> quadratic;
  std::map<int, std::int64_t> values;
  std::string citation;
};

struct BoundsTable {
  std::vector<BoundsEntry> entries;
};

inline BoundsTable load_dimension_bounds(const std::string& path) {
  const Json j = load_json_file(path);
  if (j.value("schema", "") != "orbitbound-bounds/1")
    fail(Errc::data_error, path + ": unexpected schema");
  BoundsTable table;
  for (const auto& e : j.at("entries")) {
    BoundsEntry be;
    be.family = static_cast<Family>(e.at("family").get<std::string>().at(0));
    be.min_rank = e.value("min_rank", 1);
    be.max_rank = e.value("max_rank", 1 << 20);
    if (e.contains("quadratic")) {
      auto q = e.at("quadratic");
      be.quadratic = {{q.at(0).get<std::int64_t>(), q.at(1).get<std::int64_t>(), q.at(2).get<std::int64_t>()}};
    }
    if (e.contains("values"))
      for (const auto& [k, v] : e.at("values").items())
        be.values[std::stoi(k)] = v.get<std::int64_t>();
    be.citation = e.value("citation", "");
    table.entries.push_back(std::move(be));
  }
  return table;
}

inline DimensionBound dimension_bound(const BoundsTable& table, const SimpleType& type) {
  type.validate();
  if (type.family == Family::A && type.rank == 1)
    fail(Errc::not_applicable, "A1 candidates are resolved externally; no dimension bound is catalogued");
  for (const auto& e : table.entries) {
    if (e.family != type.family || type.rank < e.min_rank || type.rank > e.max_rank)
      continue;
    std::int64_t b;
    auto it = e.values.find(type.rank);
    if (it != e.values.end()) {
      b = it->second;
    } else if (e.quadratic) {
      const auto& q = *e.quadratic;
      b = q[0] * type.rank * type.rank + q[1] * type.rank + q[2];
    } else {
      continue;
    }
    return {type, b, e.citation};
  }
  fail(Errc::not_applicable, "no dimension bound catalogued for " + type.label());
}

// ---------------------------------------------------------------------------
// Standard-example catalog

struct CatalogRow {
  std::string group;
  Family family;
  int min_rank = 0;
  int max_rank = 1 << 20;
  Json rep;
  std::string label;
  std::string classification;
  std::string kernel;
  std::string pig;
  std::string note;

  bool standard() const { return classification != "nonstandard-with-boundary"; }
};

struct Catalog {
  std::vector<CatalogRow> rows;
};

inline Catalog load_catalog(const std::string& path) {
  const Json j = load_json_file(path);
  if (j.value("schema", "") != "orbitbound-catalog/1")
    fail(Errc::data_error, path + ": unexpected schema");
  Catalog cat;
  for (const auto& r : j.at("rows")) {
    CatalogRow row;
    row.group = r.value("group", "");
    row.family = static_cast<Family>(r.at("family").get<std::string>().at(0));
    row.min_rank = r.value("min_rank", 1);
    row.max_rank = r.value("max_rank", 1 << 20);
    row.rep = r.at("rep");
    row.label = r.value("label", "");
    row.classification = r.value("classification", "");
    row.kernel = r.value("kernel", "");
    row.pig = r.value("pig", "");
    row.note = r.value("note", "");
    cat.rows.push_back(std::move(row));
  }
  return cat;
}

// Concrete highest weights of a catalog row at a given rank.
inline std::vector<HighestWeight> resolve_catalog_row(const RootSystem& rs, const CatalogRow& row) {
  const int n = rs.rank();
  auto fund = [&](int index, std::int64_t mult) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(n), 0);
    if (index < 1 || index > n)
      fail(Errc::data_error, "catalog row '" + row.label + "' index out of range for " + rs.type.label());
    c[static_cast<std::size_t>(index - 1)] = mult;
    return HighestWeight{rs.type, std::move(c)};
  };
  const std::string kind = row.rep.at("kind").get<std::string>();
  if (kind == "fund")
    return {fund(row.rep.at("index").get<int>(), 1)};
  if (kind == "fund_mult")
    return {fund(row.rep.at("index").get<int>(), row.rep.at("mult").get<std::int64_t>())};
  if (kind == "adjoint") {
    std::vector<std::int64_t> c;
    for (int i = 0; i < n; ++i)
      c.push_back(rs.pairing(rs.highest_root, i));
    return {HighestWeight{rs.type, std::move(c)}};
  }
  if (kind == "spin") {
    if (rs.type.family != Family::B)
      fail(Errc::data_error, "spin rep kind applies to the B family");
    return {fund(n, 1)};
  }
  if (kind == "halfspin") {
    if (rs.type.family != Family::D)
      fail(Errc::data_error, "halfspin rep kind applies to the D family");
    return {fund(n - 1, 1), fund(n, 1)};
  }
  fail(Errc::data_error, "unknown catalog rep kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// Diagram-automorphism orbits of highest weights

inline std::vector<std::int64_t> apply_automorphism(const DiagramAutomorphism& perm,
                                                    const std::vector<std::int64_t>& coeffs) {
  std::vector<std::int64_t> out(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    out[static_cast<std::size_t>(perm[i])] = coeffs[i];
  return out;
}

// Canonical representative: lexicographically greatest in the orbit (picks
// the customary display form, e.g. (1,1,0) rather than (0,1,1)).
inline std::vector<std::int64_t> canonical_under(const std::vector<DiagramAutomorphism>& autos,
                                                 const std::vector<std::int64_t>& coeffs) {
  std::vector<std::int64_t> best = coeffs;
  for (const auto& p : autos) {
    auto img = apply_automorphism(p, coeffs);
    if (img > best)
      best = img;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Pruned enumeration of dominant weights by complex dimension

// Visits every nonzero coefficient vector with weyl_dim <= cap, in
// lexicographic order. Correct because the dimension is strictly monotone in
// each coefficient, so the feasible set is downward closed.
inline void enumerate_dominant_by_dim(const RootSystem& rs, const BigInt& cap,
                                      const std::function<void(const std::vector<std::int64_t>&, const BigInt&)>& visit) {
  const int n = rs.rank();
  std::vector<std::int64_t> cur(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int pos) {
    const BigInt d = weyl_dim(rs, {rs.type, cur});
    if (d > cap)
      return;
    if (pos == n) {
      bool zero = true;
      for (auto c : cur)
        zero &= (c == 0);
      if (!zero)
        visit(cur, d);
      return;
    }
    for (std::int64_t v = 0;; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      if (weyl_dim(rs, {rs.type, cur}) > cap)
        break;
      rec(pos + 1);
    }
    cur[static_cast<std::size_t>(pos)] = 0;
  };
  rec(0);
}

// ---------------------------------------------------------------------------
// Candidate lists

struct CatalogEntry {
  CatalogRow row;
  HighestWeight hw;  // canonical representative
  BigInt dimR;
};

struct CandidateList {
  SimpleType type;
  std::int64_t bound = 0;
  bool resolved_externally = false;  // the A1 branch
  std::vector<CatalogEntry> standard;
  std::vector<HighestWeight> nonstandard;
};

inline CandidateList enumerate_candidates(const RootSystem& rs, const BoundsTable& bounds,
                                          const Catalog& catalog) {
  CandidateList out;
  out.type = rs.type;
  const auto autos = diagram_automorphisms(rs);
  auto canonical = [&](const std::vector<std::int64_t>& c) { return canonical_under(autos, c); };

  // Applicable catalog rows, keyed by the canonical forms of their weights.
  std::map<std::vector<std::int64_t>, const CatalogRow*> standard_of;
  std::vector<std::pair<const CatalogRow*, HighestWeight>> applicable;
  for (const auto& row : catalog.rows) {
    if (row.family != rs.type.family || rs.rank() < row.min_rank || rs.rank() > row.max_rank)
      continue;
    for (const auto& h : resolve_catalog_row(rs, row)) {
      applicable.emplace_back(&row, h);
      if (row.standard())
        standard_of.emplace(canonical(h.coeffs), &row);
    }
  }

  if (rs.type.family == Family::A && rs.rank() == 1) {
    // Resolved externally: the catalog rows are the complete answer.
    out.resolved_externally = true;
    std::map<std::vector<std::int64_t>, CatalogEntry> entries;
    for (const auto& [row, h] : applicable)
      entries.emplace(canonical(h.coeffs), CatalogEntry{*row, {rs.type, canonical(h.coeffs)}, real_dim(rs, h)});
    for (auto& [c, e] : entries)
      out.standard.push_back(std::move(e));
    return out;
  }

  out.bound = dimension_bound(bounds, rs.type).bound;
  if (rs.d3_alias)
    fail(Errc::not_applicable, "D3 candidates are enumerated under A3");

  std::map<std::vector<std::int64_t>, CatalogEntry> standard_found;
  std::map<std::vector<std::int64_t>, HighestWeight> nonstandard_found;
  enumerate_dominant_by_dim(rs, BigInt(out.bound), [&](const std::vector<std::int64_t>& coeffs, const BigInt&) {
    HighestWeight h{rs.type, coeffs};
    const BigInt dr = real_dim(rs, h);
    if (dr > out.bound)
      return;
    auto canon = canonical(coeffs);
    auto it = standard_of.find(canon);
    if (it != standard_of.end()) {
      standard_found.emplace(canon, CatalogEntry{*it->second, {rs.type, canon}, dr});
    } else {
      nonstandard_found.emplace(canon, HighestWeight{rs.type, canon});
    }
  });
  for (auto& [c, e] : standard_found)
    out.standard.push_back(std::move(e));
  for (auto& [c, h] : nonstandard_found)
    out.nonstandard.push_back(std::move(h));
  return out;
}

// ---------------------------------------------------------------------------
// Named large families that fall out of the dimension bound

struct ExclusionRow {
  std::string family_id;
  int n = 0;  // group parameter: SU(n), SO(2n+1), Sp(n), SO(2n)
  HighestWeight hw;
  BigInt dimC;
  BigInt dimR;
  std::int64_t bound = 0;
  bool exceeds = false;
  std::optional<BigInt> closed_form;  // verified closed form for dimR (or dimC, below)
  bool closed_form_is_complex = false;
  bool closed_form_matches = true;
};

namespace detail {

inline BigInt binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n)
    return 0;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

struct ExclusionFamily {
  std::string id;
  Family family;
  int min_n;
  // hw coefficients at group parameter n, or empty when not defined there
  std::function<std::vector<std::int64_t>(int)> coeffs;
  // verified closed form; nullopt = inequality-only family
  std::function<std::optional<BigInt>(int)> closed_form;
  bool closed_form_is_complex = false;
};

inline std::vector<ExclusionFamily> exclusion_families(Family fam) {
  auto unit = [](int rank, int index, std::int64_t mult = 1) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(rank), 0);
    c[static_cast<std::size_t>(index - 1)] = mult;
    return c;
  };
  auto pair_units = [](int rank, int i, int j) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(rank), 0);
    c[static_cast<std::size_t>(i - 1)] = 1;
    c[static_cast<std::size_t>(j - 1)] = 1;
    return c;
  };
  std::vector<ExclusionFamily> out;
  switch (fam) {
    case Family::A:
      out.push_back({"a-l3", fam, 10, [unit](int n) { return unit(n - 1, 3); },
                     [](int n) {
                       return std::optional<BigInt>(BigInt(n) * (n - 1) * (n - 2) / 3);
                     }});
      out.push_back({"a-2l2", fam, 5, [unit](int n) { return unit(n - 1, 2, 2); },
                     [](int n) {
                       return std::optional<BigInt>(BigInt(2) * binom(n, 2) * binom(n + 1, 2) / 3);
                     }});
      out.push_back({"a-l2ln2", fam, 7, [pair_units](int n) { return pair_units(n - 1, 2, n - 2); },
                     [](int n) {
                       return std::optional<BigInt>(BigInt(n - 3) * binom(n, 2) * binom(n + 1, 2) / (n - 1));
                     }});
      out.push_back({"a-l1l3", fam, 5, [pair_units](int n) { return pair_units(n - 1, 1, 3); },
                     [](int n) {
                       return std::optional<BigInt>(BigInt(n) * (n - 1) * (n - 2) * (n + 1) / 8);
                     },
                     true});
      out.push_back({"a-mid", fam, 12, [unit](int n) { return n % 4 == 0 ? unit(n - 1, n / 2) : std::vector<std::int64_t>{}; },
                     [](int n) { return std::optional<BigInt>(binom(n, n / 2)); }});
      break;
    case Family::B:
      out.push_back({"b-l3", fam, 5, [unit](int n) { return unit(n, 3); },
                     [](int n) { return std::optional<BigInt>(binom(2 * n + 1, 3)); }});
      out.push_back({"b-2l2", fam, 5, [unit](int n) { return unit(n, 2, 2); },
                     [](int n) {
                       return std::optional<BigInt>(BigInt(n - 1) * (n + 1) * (2 * n + 1) * (2 * n + 3) / 3);
                     }});
      out.push_back({"b-vecspin", fam, 5, [pair_units](int n) { return pair_units(n, 1, n); },
                     [](int n) { return std::optional<BigInt>(BigInt(n) << (n + 1)); },
                     true});
      out.push_back({"b-2ln", fam, 5, [unit](int n) { return unit(n, n, 2); },
                     [](int n) { return std::optional<BigInt>(binom(2 * n + 1, n)); }});
      break;
    case Family::C:
      out.push_back({"c-l3", fam, 4, [unit](int n) { return unit(n, 3); },
                     [](int n) { return std::optional<BigInt>(BigInt(2) * n * (2 * n + 1) * (2 * n - 4) / 3); }});
      out.push_back({"c-l1l2", fam, 3, [pair_units](int n) { return pair_units(n, 1, 2); },
                     [](int n) { return std::optional<BigInt>(BigInt(16) * n * (n * n - 1) / 3); }});
      out.push_back({"c-ln", fam, 5, [unit](int n) { return unit(n, n); },
                     [](int n) {
                       BigInt v = 2;
                       for (int j = n + 3; j <= 2 * n + 1; ++j)
                         v *= j;
                       BigInt f = 1;
                       for (int j = 2; j <= n; ++j)
                         f *= j;
                       return std::optional<BigInt>(v / f);
                     },
                     true});
      break;
    case Family::D:
      out.push_back({"d-l3", fam, 6, [unit](int n) { return unit(n, 3); },
                     [](int n) { return std::optional<BigInt>(binom(2 * n, 3)); }});
      out.push_back({"d-2l2", fam, 5, [unit](int n) { return unit(n, 2, 2); },
                     [](int n) {
                       return std::optional<BigInt>(BigInt(n) * (n + 1) * (2 * n - 3) * (2 * n + 1) / 3);
                     }});
      out.push_back({"d-2ln", fam, 5, [unit](int n) { return unit(n, n, 2); },
                     [](int n) {
                       const int c = n % 2 == 0 ? 1 : 2;
                       return std::optional<BigInt>(c * binom(2 * n - 1, n - 1));
                     }});
      out.push_back({"d-l1l2", fam, 5, [pair_units](int n) { return pair_units(n, 1, 2); },
                     [](int n) { return std::optional<BigInt>(BigInt(8) * n * (n - 1) * (n + 1) / 3); }});
      out.push_back({"d-lastpair", fam, 5, [pair_units](int n) { return pair_units(n, n - 1, n); },
                     [](int n) { return std::optional<BigInt>(binom(2 * n, n - 1)); },
                     true});
      out.push_back({"d-vecspin", fam, 5, [pair_units](int n) { return pair_units(n, 1, n); },
                     [](int n) { return std::optional<BigInt>(BigInt(2 * n - 1) << (n - 1)); },
                     true});
      break;
    default:
      fail(Errc::not_applicable, "exclusion families are catalogued for the classical families");
  }
  return out;
}

}  // namespace detail

inline std::vector<ExclusionRow> verify_exclusion_table(const BoundsTable& bounds, Family fam,
                                                        int n_lo, int n_hi) {
  if (fam != Family::A && fam != Family::B && fam != Family::C && fam != Family::D)
    fail(Errc::not_applicable, "exclusion families are catalogued for the classical families");
  std::vector<ExclusionRow> rows;
  for (const auto& f : detail::exclusion_families(fam)) {
    for (int n = std::max(n_lo, f.min_n); n <= n_hi; ++n) {
      auto coeffs = f.coeffs(n);
      if (coeffs.empty())
        continue;
      const int rank = fam == Family::A ? n - 1 : n;
      if ((fam == Family::A && rank + 1 > kMaxAmbient) || rank > kMaxAmbient)
        continue;
      RootSystem rs = build_root_system({fam, rank});
      HighestWeight hw{rs.type, coeffs};
      ExclusionRow row;
      row.family_id = f.id;
      row.n = n;
      row.hw = hw;
      row.dimC = weyl_dim(rs, hw);
      row.dimR = real_dim(rs, hw);
      row.bound = dimension_bound(bounds, rs.type).bound;
      row.exceeds = row.dimR > row.bound;
      row.closed_form = f.closed_form(n);
      row.closed_form_is_complex = f.closed_form_is_complex;
      if (row.closed_form)
        row.closed_form_matches = (*row.closed_form == (f.closed_form_is_complex ? row.dimC : row.dimR));
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace orbitbound

#endif
