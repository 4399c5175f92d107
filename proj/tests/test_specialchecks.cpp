#include "catch_amalgamated.hpp"

#include "orbitbound/specialchecks.hpp"
#include "test_util.hpp"

using namespace orbitbound;

namespace {

RatVec reflect_rat(const RootSystem& rs, const RatVec& x, int i) {
  RatVec alpha = rs.to_rational(rs.simple_roots[static_cast<std::size_t>(i)]);
  Rational c = Rational(2) * dot(alpha, x) / dot(alpha, alpha);
  RatVec out = x;
  for (std::size_t a = 0; a < out.size(); ++a)
    out[a] -= c * alpha[a];
  return out;
}

}  // namespace

TEST_CASE("the fundamental-weight scan returns the expected solution set") {
  auto sols = scan_eq_la(8);
  std::vector<LaSolution> expected = {
      {{Family::A, 1}, 1, 2},  // adjoint of SU(2)
      {{Family::A, 3}, 2, 1},  // real form of Lambda^2 C^4
      {{Family::B, 2}, 1, 1}, {{Family::B, 3}, 1, 1}, {{Family::B, 4}, 1, 1},
      {{Family::B, 5}, 1, 1}, {{Family::B, 6}, 1, 1}, {{Family::B, 7}, 1, 1},
      {{Family::B, 8}, 1, 1},  // vector representations, odd
      {{Family::D, 4}, 1, 1}, {{Family::D, 4}, 3, 1}, {{Family::D, 4}, 4, 1},
      {{Family::D, 5}, 1, 1}, {{Family::D, 6}, 1, 1}, {{Family::D, 7}, 1, 1},
      {{Family::D, 8}, 1, 1},  // vector representations, even, and the half-spins of Spin(8)
  };
  std::sort(expected.begin(), expected.end());
  CHECK(sols == expected);
}

TEST_CASE("the scan is invariant under rescaling the invariant form") {
  auto base = scan_eq_la(6);
  CHECK(scan_eq_la(6, Rational(2)) == base);
  CHECK(scan_eq_la(6, Rational(1, 3)) == base);
  CHECK_THROWS_AS(scan_eq_la(6, Rational(0)), Error);
  CHECK_THROWS_AS(scan_eq_la(1), Error);
}

TEST_CASE("only the rank-one adjoint solves the equation") {
  int adjoint_count = 0;
  for (const auto& s : scan_eq_la(8)) {
    if (la_solution_is_adjoint(s)) {
      ++adjoint_count;
      CHECK(s.type.family == Family::A);
      CHECK(s.type.rank == 1);
      CHECK(s.multiplier == 2);
    }
  }
  CHECK(adjoint_count == 1);
}

TEST_CASE("circle-fixed count for the 27 of G2") {
  RootSystem g2 = build_root_system({Family::G, 2});
  auto ws = weight_system(g2, {{Family::G, 2}, {2, 0}});
  auto res = circle_fix_count(g2, ws);
  CHECK(res.f == 9);
  CHECK(vanishing_mult(g2, ws, res.witness) == 9);

  // Weyl images of the witness give the same count.
  for (int i = 0; i < 2; ++i)
    CHECK(vanishing_mult(g2, ws, reflect_rat(g2, res.witness, i)) == 9);

  // Rank-2 collinear-class shortcut agrees with the exhaustive search.
  std::map<std::vector<Rational>, std::int64_t> line_mult;
  std::int64_t zero_mult = 0;
  for (const auto& [w, m] : ws.entries) {
    if (is_zero(w)) {
      zero_mult += m;
      continue;
    }
    RatVec t = g2.to_rational(w);
    Rational lead = 0;
    for (const auto& v : t)
      if (v != 0) {
        lead = v;
        break;
      }
    std::vector<Rational> key;
    for (const auto& v : t)
      key.push_back(v / lead);
    line_mult[key] += m;
  }
  std::int64_t shortcut = 0;
  for (const auto& [k, m] : line_mult)
    shortcut = std::max(shortcut, m);
  CHECK(zero_mult + shortcut == res.f);
}

TEST_CASE("circle-fixed count for the vector representation of G2") {
  RootSystem g2 = build_root_system({Family::G, 2});
  auto ws = weight_system(g2, {{Family::G, 2}, {1, 0}});
  CHECK(circle_fix_count(g2, ws).f == 3);  // the zero weight plus one root pair
}

TEST_CASE("circle-fixed count on rank-2 adjoints") {
  for (const auto& t : std::vector<SimpleType>{{Family::A, 2}, {Family::B, 2}, {Family::G, 2}}) {
    RootSystem rs = build_root_system(t);
    std::vector<std::int64_t> adj;
    for (int i = 0; i < rs.rank(); ++i)
      adj.push_back(rs.pairing(rs.highest_root, i));
    auto ws = weight_system(rs, {t, adj});
    INFO(t.label());
    CHECK(circle_fix_count(rs, ws).f == 2 + 2);
  }
}

TEST_CASE("circle-fixed count at rank 4 and the rank guard") {
  RootSystem b4 = build_root_system({Family::B, 4});
  auto ws = weight_system(b4, {{Family::B, 4}, {1, 0, 0, 0}});
  // Vector representation of SO(9): a coordinate direction annihilates the
  // zero weight and the three +-pairs orthogonal to it.
  CHECK(circle_fix_count(b4, ws).f == 7);

  RootSystem b5 = build_root_system({Family::B, 5});
  auto ws5 = weight_system(b5, {{Family::B, 5}, {1, 0, 0, 0, 0}});
  CHECK_THROWS_AS(circle_fix_count(b5, ws5), Error);
}

TEST_CASE("empty-boundary chain for the 27 of G2") {
  auto rep = check_lemma_g2();
  CHECK(rep.weight_table_ok);
  CHECK(rep.zero_multiplicity == 3);
  CHECK(rep.f == 9);
  CHECK(rep.required_lower_bound == 13);
  CHECK(rep.contradiction);
  CHECK(rep.pass);
}
