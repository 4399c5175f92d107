#include "catch_amalgamated.hpp"

#include "orbitbound/enumeration.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace orbitbound;

namespace {

const BoundsTable& bounds() {
  static BoundsTable t = load_dimension_bounds(default_data_dir() + "/dimension_bounds.json");
  return t;
}

const Catalog& catalog() {
  static Catalog c = load_catalog(default_data_dir() + "/table1_catalog.json");
  return c;
}

std::vector<std::vector<std::int64_t>> nonstandard_of(const SimpleType& t) {
  RootSystem rs = build_root_system(t);
  auto list = enumerate_candidates(rs, bounds(), catalog());
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& h : list.nonstandard)
    out.push_back(h.coeffs);
  return out;
}

}  // namespace

TEST_CASE("dimension bounds") {
  CHECK(dimension_bound(bounds(), {Family::A, 2}).bound == 24);
  CHECK(dimension_bound(bounds(), {Family::A, 3}).bound == 40);
  CHECK(dimension_bound(bounds(), {Family::A, 8}).bound == 180);
  CHECK(dimension_bound(bounds(), {Family::B, 2}).bound == 40);
  CHECK(dimension_bound(bounds(), {Family::B, 5}).bound == 154);
  CHECK(dimension_bound(bounds(), {Family::C, 3}).bound == 48);
  CHECK(dimension_bound(bounds(), {Family::C, 4}).bound == 72);
  CHECK(dimension_bound(bounds(), {Family::C, 5}).bound == 102);
  CHECK(dimension_bound(bounds(), {Family::C, 6}).bound == 144);
  CHECK(dimension_bound(bounds(), {Family::D, 5}).bound == 130);
  CHECK(dimension_bound(bounds(), {Family::G, 2}).bound == 36);
  CHECK(dimension_bound(bounds(), {Family::F, 4}).bound == 96);
  CHECK(dimension_bound(bounds(), {Family::E, 6}).bound == 132);
  CHECK(dimension_bound(bounds(), {Family::E, 7}).bound == 222);
  CHECK(dimension_bound(bounds(), {Family::E, 8}).bound == 396);
  CHECK_THROWS_AS(dimension_bound(bounds(), {Family::A, 1}), Error);
  CHECK_THROWS_AS(dimension_bound(bounds(), {Family::C, 2}), Error);
}

TEST_CASE("nonstandard candidates match the per-group statements") {
  using V = std::vector<std::vector<std::int64_t>>;
  CHECK(nonstandard_of({Family::A, 2}) == V{{3, 0}});
  // At the SU(4) bound the tie S^3 C^4 sits at real dimension exactly 40
  // alongside the mixed representation; both are outside the catalog.
  CHECK(nonstandard_of({Family::A, 3}) == V{{1, 1, 0}, {3, 0, 0}});
  CHECK(nonstandard_of({Family::A, 4}).empty());
  CHECK(nonstandard_of({Family::A, 5}).empty());
  CHECK(nonstandard_of({Family::A, 6}) == V{{0, 0, 1, 0, 0, 0}});
  CHECK(nonstandard_of({Family::A, 7}) == V{{0, 0, 1, 0, 0, 0, 0}});
  CHECK(nonstandard_of({Family::A, 8}) == V{{0, 0, 1, 0, 0, 0, 0, 0}});
  CHECK(nonstandard_of({Family::A, 9}).empty());

  CHECK(nonstandard_of({Family::B, 3}) == V{{0, 0, 2}, {1, 0, 1}});
  CHECK(nonstandard_of({Family::B, 4}) == V{{0, 0, 1, 0}});
  CHECK(nonstandard_of({Family::B, 5}) == V{{0, 0, 0, 0, 1}});
  CHECK(nonstandard_of({Family::B, 6}) == V{{0, 0, 0, 0, 0, 1}});
  CHECK(nonstandard_of({Family::B, 7}) == V{{0, 0, 0, 0, 0, 0, 1}});
  CHECK(nonstandard_of({Family::B, 8}) == V{{0, 0, 0, 0, 0, 0, 0, 1}});

  CHECK(nonstandard_of({Family::C, 3}).empty());
  CHECK(nonstandard_of({Family::C, 4}).empty());
  CHECK(nonstandard_of({Family::C, 5}).empty());
  CHECK(nonstandard_of({Family::C, 6}).empty());

  CHECK(nonstandard_of({Family::D, 4}) == V{{1, 0, 1, 0}});
  CHECK(nonstandard_of({Family::D, 5}) == V{{0, 0, 1, 0, 0}});
  CHECK(nonstandard_of({Family::D, 6}).empty());
  CHECK(nonstandard_of({Family::D, 7}) == V{{0, 0, 0, 0, 0, 1, 0}});
  CHECK(nonstandard_of({Family::D, 8}).empty());

  CHECK(nonstandard_of({Family::G, 2}) == V{{2, 0}});
  CHECK(nonstandard_of({Family::F, 4}).empty());
  CHECK(nonstandard_of({Family::E, 6}).empty());
  CHECK(nonstandard_of({Family::E, 7}).empty());
  CHECK(nonstandard_of({Family::E, 8}).empty());
}

TEST_CASE("Spin(5) enumerates honestly despite having no per-group statement") {
  using V = std::vector<std::vector<std::int64_t>>;
  CHECK(nonstandard_of({Family::B, 2}) == V{{0, 3}, {0, 4}, {1, 1}, {1, 2}, {3, 0}});
}

TEST_CASE("A1 is resolved externally") {
  RootSystem a1 = build_root_system({Family::A, 1});
  auto list = enumerate_candidates(a1, bounds(), catalog());
  CHECK(list.resolved_externally);
  CHECK(list.nonstandard.empty());
  REQUIRE(list.standard.size() == 3);
  std::vector<std::string> dims;
  for (const auto& e : list.standard)
    dims.push_back(e.dimR.str());
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<std::string>{"3", "4", "5"});  // R^3, C^2, R^5
}

TEST_CASE("D3 enumeration defers to A3") {
  RootSystem d3 = build_root_system({Family::D, 3});
  CHECK_THROWS_AS(enumerate_candidates(d3, bounds(), catalog()), Error);
}

TEST_CASE("catalog rows appear in the enumeration with matching real dimension") {
  for (const auto& t : obtest::canonical_types(8)) {
    if (t.family == Family::A && t.rank == 1)
      continue;
    if (t.family == Family::C && t.rank == 2)
      continue;
    RootSystem rs = build_root_system(t);
    std::int64_t bound = dimension_bound(bounds(), t).bound;
    auto list = enumerate_candidates(rs, bounds(), catalog());
    auto autos = diagram_automorphisms(rs);
    std::map<std::vector<std::int64_t>, BigInt> standard_dims;
    for (const auto& e : list.standard)
      standard_dims.emplace(e.hw.coeffs, e.dimR);
    for (const auto& row : catalog().rows) {
      if (row.family != t.family || t.rank < row.min_rank || t.rank > row.max_rank || !row.standard())
        continue;
      for (const auto& h : resolve_catalog_row(rs, row)) {
        const BigInt dr = real_dim(rs, h);
        if (dr > bound)
          continue;
        auto canon = canonical_under(autos, h.coeffs);
        INFO(t.label() << " row " << row.label);
        REQUIRE(standard_dims.count(canon) == 1);
        CHECK(standard_dims.at(canon) == dr);
      }
    }
  }
}

TEST_CASE("dedup is idempotent under diagram automorphisms") {
  for (const auto& t : obtest::canonical_types(8)) {
    if (t.family == Family::A && t.rank == 1)
      continue;
    if (t.family == Family::C && t.rank == 2)
      continue;
    RootSystem rs = build_root_system(t);
    auto list = enumerate_candidates(rs, bounds(), catalog());
    auto autos = diagram_automorphisms(rs);
    std::set<std::vector<std::int64_t>> emitted;
    for (const auto& h : list.nonstandard)
      emitted.insert(h.coeffs);
    for (const auto& h : list.nonstandard)
      for (const auto& p : autos) {
        auto img = apply_automorphism(p, h.coeffs);
        if (img != h.coeffs)
          CHECK(emitted.count(img) == 0);
      }
  }
}

TEST_CASE("pruned enumeration equals box brute force at small rank") {
  for (const auto& t : std::vector<SimpleType>{{Family::A, 2}, {Family::A, 3}, {Family::B, 2},
                                               {Family::B, 3}, {Family::C, 3}, {Family::D, 4},
                                               {Family::G, 2}}) {
    RootSystem rs = build_root_system(t);
    const std::int64_t bound = dimension_bound(bounds(), t).bound;
    auto box = obtest::box_enumerate(rs, bound);
    std::set<std::vector<std::int64_t>> pruned;
    enumerate_dominant_by_dim(rs, BigInt(bound), [&](const std::vector<std::int64_t>& c, const BigInt&) {
      if (real_dim(rs, {t, c}) <= bound)
        pruned.insert(c);
    });
    INFO(t.label());
    CHECK(pruned == box);
  }
  // Literal full-box sweep where it is feasible.
  for (const auto& t : std::vector<SimpleType>{{Family::A, 2}, {Family::B, 2}, {Family::G, 2}}) {
    RootSystem rs = build_root_system(t);
    const std::int64_t bound = dimension_bound(bounds(), t).bound;
    CHECK(obtest::box_enumerate(rs, bound) == obtest::box_enumerate(rs, bound, true));
  }
}

TEST_CASE("named families fall out of the dimension bound") {
  auto a_rows = verify_exclusion_table(bounds(), Family::A, 5, 12);
  bool saw_a2l2 = false;
  for (const auto& r : a_rows) {
    INFO(r.family_id << " n=" << r.n);
    CHECK(r.exceeds);
    CHECK(r.closed_form_matches);
    if (r.family_id == "a-2l2") {
      saw_a2l2 = true;
      CHECK(r.dimR == BigInt(2) * detail::binom(r.n, 2) * detail::binom(r.n + 1, 2) / 3);
    }
  }
  CHECK(saw_a2l2);

  for (const auto& r : verify_exclusion_table(bounds(), Family::B, 5, 10)) {
    INFO(r.family_id << " n=" << r.n);
    CHECK(r.exceeds);
    CHECK(r.closed_form_matches);
    if (r.family_id == "b-vecspin")
      CHECK(r.dimC == BigInt(r.n) << (r.n + 1));
  }
  for (const auto& r : verify_exclusion_table(bounds(), Family::C, 3, 8)) {
    INFO(r.family_id << " n=" << r.n);
    CHECK(r.exceeds);
    CHECK(r.closed_form_matches);
  }
  for (const auto& r : verify_exclusion_table(bounds(), Family::D, 5, 10)) {
    INFO(r.family_id << " n=" << r.n);
    CHECK(r.exceeds);
    CHECK(r.closed_form_matches);
  }
  CHECK_THROWS_AS(verify_exclusion_table(bounds(), Family::G, 2, 2), Error);
}
