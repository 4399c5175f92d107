#include "catch_amalgamated.hpp"

#include "orbitbound/irrep.hpp"
#include "test_util.hpp"

using namespace orbitbound;

namespace {

RootSystem rsys(Family f, int r) { return build_root_system({f, r}); }

HighestWeight hw(const RootSystem& rs, std::vector<std::int64_t> c) { return {rs.type, std::move(c)}; }

HighestWeight fund(const RootSystem& rs, int i) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(rs.rank()), 0);
  c[static_cast<std::size_t>(i - 1)] = 1;
  return {rs.type, std::move(c)};
}

}  // namespace

TEST_CASE("weyl dimension examples") {
  auto a2 = rsys(Family::A, 2);
  CHECK(weyl_dim(a2, hw(a2, {3, 0})) == 10);
  CHECK(weyl_dim(a2, hw(a2, {0, 0})) == 1);
  auto g2 = rsys(Family::G, 2);
  CHECK(weyl_dim(g2, hw(g2, {2, 0})) == 27);
  auto a3 = rsys(Family::A, 3);
  CHECK(weyl_dim(a3, hw(a3, {1, 1, 0})) == 20);
  CHECK(real_dim(a3, hw(a3, {1, 1, 0})) == 40);
}

TEST_CASE("dimension table from the screening sections") {
  auto dimC = [](Family f, int r, std::vector<std::int64_t> c) {
    auto rs = rsys(f, r);
    return weyl_dim(rs, hw(rs, std::move(c)));
  };
  auto dimR = [](Family f, int r, std::vector<std::int64_t> c) {
    auto rs = rsys(f, r);
    return real_dim(rs, hw(rs, std::move(c)));
  };
  CHECK(dimR(Family::A, 2, {3, 0}) == 20);
  CHECK(dimR(Family::A, 6, {0, 0, 1, 0, 0, 0}) == 70);
  CHECK(dimR(Family::A, 7, {0, 0, 1, 0, 0, 0, 0}) == 112);
  CHECK(dimR(Family::A, 8, {0, 0, 1, 0, 0, 0, 0, 0}) == 168);
  CHECK(dimC(Family::B, 3, {0, 0, 2}) == 35);
  CHECK(dimR(Family::B, 3, {0, 0, 2}) == 35);
  CHECK(dimC(Family::B, 3, {1, 0, 1}) == 48);
  CHECK(dimR(Family::B, 3, {1, 0, 1}) == 48);
  CHECK(dimR(Family::B, 4, {0, 0, 1, 0}) == 84);
  CHECK(dimC(Family::G, 2, {2, 0}) == 27);
  CHECK(dimC(Family::F, 4, {0, 0, 1, 0}) == 273);
  CHECK(dimC(Family::E, 6, {1, 0, 0, 0, 0, 1}) == 650);
  CHECK(dimR(Family::E, 6, {1, 0, 0, 0, 0, 1}) == 650);
  CHECK(dimR(Family::D, 5, {0, 0, 1, 0, 0}) == 120);
  CHECK(dimR(Family::D, 8, {0, 0, 0, 0, 0, 0, 0, 1}) == 128);
  // G2 neighbours of the 27-dimensional representation
  CHECK(dimC(Family::G, 2, {1, 1}) == 64);
  CHECK(dimC(Family::G, 2, {0, 2}) == 77);
  CHECK(dimC(Family::G, 2, {3, 0}) == 77);
}

TEST_CASE("frobenius-schur types") {
  auto b5 = rsys(Family::B, 5);
  CHECK(fs_type(b5, fund(b5, 5)) == FSType::Quaternionic);
  auto d8 = rsys(Family::D, 8);
  CHECK(fs_type(d8, fund(d8, 8)) == FSType::Real);
  auto a2 = rsys(Family::A, 2);
  CHECK(fs_type(a2, fund(a2, 1)) == FSType::Complex);
  auto a5 = rsys(Family::A, 5);
  CHECK(fs_type(a5, fund(a5, 3)) == FSType::Quaternionic);
  auto a7 = rsys(Family::A, 7);
  CHECK(fs_type(a7, fund(a7, 4)) == FSType::Real);
}

TEST_CASE("spin dimension rule for odd spin groups") {
  auto b3 = rsys(Family::B, 3);
  CHECK(real_dim(b3, fund(b3, 3)) == 8);
  auto b5 = rsys(Family::B, 5);
  CHECK(real_dim(b5, fund(b5, 5)) == 64);
  auto d7 = rsys(Family::D, 7);
  CHECK(real_dim(d7, fund(d7, 7)) == 128);
  for (int n = 2; n <= 8; ++n) {
    auto rs = rsys(Family::B, n);
    BigInt expected = (n % 4 == 0 || n % 4 == 3) ? BigInt(1) << n : BigInt(1) << (n + 1);
    CHECK(real_dim(rs, fund(rs, n)) == expected);
  }
}

TEST_CASE("weight system of the 27 of G2") {
  auto g2 = rsys(Family::G, 2);
  auto ws = weight_system(g2, hw(g2, {2, 0}));
  CHECK(ws.dimC == 27);
  const IntVec a1 = g2.simple_roots[0];
  CHECK(ws.mult_of(IntVec::zero(g2.ambient)) == 3);
  CHECK(ws.mult_of(a1) == 2);
  CHECK(ws.mult_of(-a1) == 2);
  CHECK(ws.mult_of(a1 + a1) == 1);
  CHECK(ws.mult_of(-(a1 + a1)) == 1);
}

TEST_CASE("adjoint zero-weight multiplicity equals the rank") {
  auto check_adjoint = [](Family f, int r) {
    auto rs = rsys(f, r);
    RatVec coeffs;
    REQUIRE(rs.expand_in_simple_roots(rs.to_rational(rs.highest_root), coeffs));
    std::vector<std::int64_t> hw_coeffs;
    for (int i = 0; i < rs.rank(); ++i)
      hw_coeffs.push_back(rs.pairing(rs.highest_root, i));
    auto ws = weight_system(rs, {rs.type, hw_coeffs});
    CHECK(ws.mult_of(IntVec::zero(rs.ambient)) == rs.rank());
  };
  check_adjoint(Family::A, 2);
  check_adjoint(Family::B, 3);
  check_adjoint(Family::G, 2);
  check_adjoint(Family::D, 4);
}

TEST_CASE("weight system of the third exterior power of R^10") {
  auto d5 = rsys(Family::D, 5);
  auto ws = weight_system(d5, hw(d5, {0, 0, 1, 0, 0}));
  CHECK(ws.dimC == 120);
  IntVec e123 = d5.from_rational(RatVec{1, 1, 1, 0, 0});
  IntVec e1 = d5.from_rational(RatVec{1, 0, 0, 0, 0});
  CHECK(ws.mult_of(e123) == 1);
  CHECK(ws.mult_of(e1) == 4);
  CHECK(ws.mult_of(-e1) == 4);
}

TEST_CASE("weight budget errors name the offending dimension") {
  auto b5 = rsys(Family::B, 5);
  try {
    weight_system(b5, hw(b5, {3, 0, 0, 0, 0}), 100);
    FAIL("expected a resource error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::resource_exhausted);
    CHECK(std::string(e.what()).find("exceeding budget") != std::string::npos);
  }
}

TEST_CASE("tensor-square oracle examples") {
  auto a1 = rsys(Family::A, 1);
  CHECK(tensor_square_parity_oracle(a1, hw(a1, {2})) == FSType::Real);
  CHECK(tensor_square_parity_oracle(a1, hw(a1, {1})) == FSType::Quaternionic);
  auto b3 = rsys(Family::B, 3);
  CHECK(tensor_square_parity_oracle(b3, fund(b3, 3)) == FSType::Real);
  auto a2 = rsys(Family::A, 2);
  CHECK(tensor_square_parity_oracle(a2, fund(a2, 1)) == FSType::Complex);
  // Desk-scale only.
  try {
    tensor_square_parity_oracle(a1, hw(a1, {500}));
    FAIL("expected a resource error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::resource_exhausted);
  }
}

TEST_CASE("weight-system invariants at unit-test scale") {
  for (const auto& t : obtest::canonical_types(4)) {
    RootSystem rs = build_root_system(t);
    // All highest weights with complex dimension at most 120.
    std::vector<std::vector<std::int64_t>> all;
    std::vector<std::int64_t> cur(static_cast<std::size_t>(t.rank), 0);
    std::function<void(int)> rec = [&](int pos) {
      if (weyl_dim(rs, {t, cur}) > 120)
        return;
      if (pos == t.rank) {
        all.push_back(cur);
        return;
      }
      for (std::int64_t v = 0;; ++v) {
        cur[static_cast<std::size_t>(pos)] = v;
        if (weyl_dim(rs, {t, cur}) > 120)
          break;
        rec(pos + 1);
      }
      cur[static_cast<std::size_t>(pos)] = 0;
    };
    rec(0);
    for (const auto& coeffs : all) {
      HighestWeight h{t, coeffs};
      INFO(t.label() << " " << h.label());
      auto info = irrep_info(rs, h);
      auto ws = weight_system(rs, h);

      BigInt total = 0;
      for (const auto& [w, m] : ws.entries)
        total += m;
      CHECK(total == info.dimC);

      // Weyl invariance: each simple reflection permutes entries.
      for (int i = 0; i < t.rank; ++i)
        for (const auto& [w, m] : ws.entries)
          CHECK(ws.mult_of(rs.reflect(w, i)) == m);

      // Self-duality when not complex.
      if (info.fs != FSType::Complex)
        for (const auto& [w, m] : ws.entries)
          CHECK(ws.mult_of(-w) == m);

      // Highest weight has multiplicity one.
      CHECK(ws.mult_of(rs.weight_vector(coeffs)) == 1);

      // Oracle agreement at desk scale.
      if (info.dimC <= 60)
        CHECK(tensor_square_parity_oracle(rs, h, 60) == info.fs);

      // Monotonicity in every coefficient.
      for (int i = 0; i < t.rank; ++i) {
        auto up = coeffs;
        up[static_cast<std::size_t>(i)] += 1;
        CHECK(weyl_dim(rs, {t, up}) > info.dimC);
      }
    }
  }
}
