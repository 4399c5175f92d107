#ifndef ORBITBOUND_SPECIALCHECKS_HPP
#define ORBITBOUND_SPECIALCHECKS_HPP

// Self-contained verification routines: the fundamental-weight scan of the
// torus-restriction equation 2m|lambda_i|^2 = |alpha_i|^2, the maximal
// circle-fixed weight count over a torus, and the empty-boundary chain for
// the 27-dimensional representation of G2.

#include "orbitbound/irrep.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace orbitbound {

struct LaSolution {
  SimpleType type;
  int index = 0;  // 1-based fundamental-weight index
  std::int64_t multiplier = 0;

  bool operator<(const LaSolution& o) const {
    if (!(type == o.type))
      return type < o.type;
    if (index != o.index)
      return index < o.index;
    return multiplier < o.multiplier;
  }
  bool operator==(const LaSolution& o) const {
    return type == o.type && index == o.index && multiplier == o.multiplier;
  }
};

// Exhaustive scan of 2m|lambda_i|^2 = |alpha_i|^2 over all canonical simple
// types up to max_rank and all fundamental weights, solving for a positive
// integer m. Candidates of quaternionic type are discarded: the torus
// restriction that produces the equation already rules that type out, since
// the negative of the distinguished weight would be another weight not
// vanishing on the circle. The scan is invariant under rescaling the
// invariant form (scale_override multiplies it; solutions do not change).
inline std::vector<LaSolution> scan_eq_la(int max_rank, const Rational& scale_override = 1) {
  if (max_rank < 2)
    fail(Errc::invalid_argument, "scan requires max_rank >= 2");
  if (max_rank > kMaxAmbient - 1)
    fail(Errc::invalid_argument, "scan supports max_rank <= " + std::to_string(kMaxAmbient - 1));
  if (scale_override <= 0)
    fail(Errc::invalid_argument, "the invariant form scale must be positive");
  std::vector<SimpleType> types;
  for (int r = 1; r <= max_rank; ++r)
    types.push_back({Family::A, r});
  for (int r = 2; r <= max_rank; ++r)
    types.push_back({Family::B, r});
  for (int r = 3; r <= max_rank; ++r)
    types.push_back({Family::C, r});
  for (int r = 4; r <= max_rank; ++r)
    types.push_back({Family::D, r});
  if (max_rank >= 2)
    types.push_back({Family::G, 2});
  if (max_rank >= 4)
    types.push_back({Family::F, 4});
  for (int r = 6; r <= 8 && r <= max_rank; ++r)
    types.push_back({Family::E, r});

  std::vector<LaSolution> out;
  for (const auto& t : types) {
    RootSystem rs = build_root_system(t);
    for (int i = 0; i < t.rank; ++i) {
      const RatVec lam = rs.to_rational(rs.fundamental_weights[static_cast<std::size_t>(i)]);
      const RatVec alpha = rs.to_rational(rs.simple_roots[static_cast<std::size_t>(i)]);
      const Rational lhs_unit = scale_override * rs.norm2(lam) * 2;
      const Rational rhs = scale_override * rs.norm2(alpha);
      const Rational m = rhs / lhs_unit;
      if (!is_integer(m) || m <= 0)
        continue;
      const std::int64_t mult = static_cast<std::int64_t>(boost::multiprecision::numerator(m));
      std::vector<std::int64_t> coeffs(static_cast<std::size_t>(t.rank), 0);
      coeffs[static_cast<std::size_t>(i)] = mult;
      if (fs_type(rs, {t, coeffs}) == FSType::Quaternionic)
        continue;
      out.push_back({t, i + 1, mult});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Does a scan solution name the adjoint representation of its group?
inline bool la_solution_is_adjoint(const LaSolution& s) {
  RootSystem rs = build_root_system(s.type);
  for (int i = 0; i < rs.rank(); ++i) {
    const std::int64_t expect = (i + 1 == s.index) ? s.multiplier : 0;
    if (rs.pairing(rs.highest_root, i) != expect)
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Maximal total multiplicity of weights vanishing on a nonzero torus
// direction. Candidate directions are kernels of small sets of weight
// functionals; a set of fewer than rank-1 independent functionals is
// completed by a generic direction inside its kernel.

struct CircleFixCount {
  std::int64_t f = 0;
  RatVec witness;  // ambient coordinates of a maximizing direction
};

namespace detail {

struct WeightLine {
  std::vector<std::int64_t> row;  // functional in simple-root coordinates, primitive
  std::int64_t total_mult = 0;
};

inline std::vector<std::int64_t> primitive_row(std::vector<std::int64_t> row) {
  std::int64_t g = 0;
  for (auto v : row)
    g = std::gcd(g, std::abs(v));
  if (g > 1)
    for (auto& v : row)
      v /= g;
  for (auto v : row) {
    if (v > 0)
      break;
    if (v < 0) {
      for (auto& w : row)
        w = -w;
      break;
    }
  }
  return row;
}

}  // namespace detail

inline std::int64_t vanishing_mult(const RootSystem& rs, const WeightSystem& ws, const RatVec& x) {
  std::int64_t f = 0;
  for (const auto& [w, m] : ws.entries)
    if (dot(w, x) == 0)
      f += m;
  return f;
}

inline CircleFixCount circle_fix_count(const RootSystem& rs, const WeightSystem& ws) {
  const int r = rs.rank();
  if (r > 4)
    fail(Errc::unsupported, "circle-fix search supports rank <= 4");
  if (!(ws.type == rs.type))
    fail(Errc::invalid_argument, "weight system and root system disagree");

  // Distinct projective weight lines with their total multiplicities, as
  // functionals in simple-root coordinates (x = sum t_k alpha_k).
  std::map<std::vector<std::int64_t>, std::int64_t> line_mult;
  std::int64_t zero_mult = 0;
  for (const auto& [w, m] : ws.entries) {
    if (is_zero(w)) {
      zero_mult += m;
      continue;
    }
    std::vector<std::int64_t> row(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k)
      row[static_cast<std::size_t>(k)] = dot(w, rs.simple_roots[static_cast<std::size_t>(k)]);
    line_mult[detail::primitive_row(row)] += m;
  }
  std::vector<detail::WeightLine> lines;
  for (const auto& [row, m] : line_mult)
    lines.push_back({row, m});

  auto f_of_direction = [&](const std::vector<Rational>& t) {
    std::int64_t f = zero_mult;
    for (const auto& ln : lines) {
      Rational v = 0;
      for (int k = 0; k < r; ++k)
        v += ln.row[static_cast<std::size_t>(k)] * t[static_cast<std::size_t>(k)];
      if (v == 0)
        f += ln.total_mult;
    }
    return f;
  };
  auto ambient_of = [&](const std::vector<Rational>& t) {
    RatVec x = rat_zero(rs.ambient);
    for (int k = 0; k < r; ++k)
      for (int a = 0; a < rs.ambient; ++a)
        x[static_cast<std::size_t>(a)] += t[static_cast<std::size_t>(k)] *
                                          rs.true_coord(rs.simple_roots[static_cast<std::size_t>(k)], a);
    return x;
  };

  CircleFixCount best;
  best.f = -1;
  auto consider = [&](const std::vector<Rational>& t) {
    bool nonzero = false;
    for (const auto& v : t)
      nonzero |= (v != 0);
    if (!nonzero)
      return;
    const std::int64_t f = f_of_direction(t);
    if (f > best.f) {
      best.f = f;
      best.witness = ambient_of(t);
    }
  };

  // Kernel of a subset of line functionals, with a generic direction inside
  // it when the kernel has dimension greater than one.
  const int m = static_cast<int>(lines.size());
  std::vector<int> subset;
  std::function<void(int, int)> rec = [&](int start, int want) {
    if (want == 0) {
      std::vector<RatVec> rows;
      for (int idx : subset) {
        RatVec qrow(static_cast<std::size_t>(r));
        for (int k = 0; k < r; ++k)
          qrow[static_cast<std::size_t>(k)] = lines[static_cast<std::size_t>(idx)].row[static_cast<std::size_t>(k)];
        rows.push_back(std::move(qrow));
      }
      // Nullspace basis by elimination over the free variables.
      std::vector<RatVec> kernel;
      {
        std::vector<RatVec> a = rows;
        std::vector<int> pivot_of_col(static_cast<std::size_t>(r), -1);
        std::size_t row_i = 0;
        for (int col = 0; col < r && row_i < a.size(); ++col) {
          std::size_t pr = row_i;
          while (pr < a.size() && a[pr][static_cast<std::size_t>(col)] == 0)
            ++pr;
          if (pr == a.size())
            continue;
          std::swap(a[pr], a[row_i]);
          const Rational inv = Rational(1) / a[row_i][static_cast<std::size_t>(col)];
          for (int j = 0; j < r; ++j)
            a[row_i][static_cast<std::size_t>(j)] *= inv;
          for (std::size_t rr = 0; rr < a.size(); ++rr) {
            if (rr == row_i)
              continue;
            const Rational fac = a[rr][static_cast<std::size_t>(col)];
            if (fac == 0)
              continue;
            for (int j = 0; j < r; ++j)
              a[rr][static_cast<std::size_t>(j)] -= fac * a[row_i][static_cast<std::size_t>(j)];
          }
          pivot_of_col[static_cast<std::size_t>(col)] = static_cast<int>(row_i);
          ++row_i;
        }
        for (int col = 0; col < r; ++col) {
          if (pivot_of_col[static_cast<std::size_t>(col)] != -1)
            continue;
          RatVec k(static_cast<std::size_t>(r), Rational(0));
          k[static_cast<std::size_t>(col)] = 1;
          for (int c2 = 0; c2 < r; ++c2) {
            const int p = pivot_of_col[static_cast<std::size_t>(c2)];
            if (p != -1)
              k[static_cast<std::size_t>(c2)] = -a[static_cast<std::size_t>(p)][static_cast<std::size_t>(col)];
          }
          kernel.push_back(std::move(k));
        }
      }
      if (!kernel.empty()) {
        if (kernel.size() == 1) {
          consider(kernel[0]);
        } else {
          // Generic combination: binds exactly the lines vanishing on the
          // whole kernel. Step through integers until no extra line vanishes.
          for (std::int64_t step = 1;; ++step) {
            RatVec t(static_cast<std::size_t>(r), Rational(0));
            Rational w = 1;
            for (const auto& k : kernel) {
              for (int j = 0; j < r; ++j)
                t[static_cast<std::size_t>(j)] += w * k[static_cast<std::size_t>(j)];
              w *= step;
            }
            bool generic = true;
            for (const auto& ln : lines) {
              Rational v_t = 0;
              bool on_kernel = true;
              for (const auto& k : kernel) {
                Rational v_k = 0;
                for (int j = 0; j < r; ++j)
                  v_k += ln.row[static_cast<std::size_t>(j)] * k[static_cast<std::size_t>(j)];
                on_kernel &= (v_k == 0);
              }
              for (int j = 0; j < r; ++j)
                v_t += ln.row[static_cast<std::size_t>(j)] * t[static_cast<std::size_t>(j)];
              if (!on_kernel && v_t == 0) {
                generic = false;
                break;
              }
            }
            if (generic) {
              consider(t);
              break;
            }
          }
        }
      }
      return;
    }
    for (int i = start; i < m; ++i) {
      subset.push_back(i);
      rec(i + 1, want - 1);
      subset.pop_back();
    }
  };
  for (int size = 0; size <= r - 1; ++size)
    rec(0, size);

  if (best.f < 0)
    fail(Errc::data_error, "no direction candidates found");
  return best;
}

// ---------------------------------------------------------------------------
// Empty-boundary chain for (G2, S^2_0 R^7): the printed weight table, the
// circle-fixed count f <= 9, and the contradiction with f >= 13.

struct LemmaG2Report {
  bool weight_table_ok = false;
  std::int64_t zero_multiplicity = 0;
  std::int64_t f = 0;
  std::int64_t required_lower_bound = 13;
  bool contradiction = false;
  bool pass = false;
  std::string detail;
};

inline LemmaG2Report check_lemma_g2() {
  LemmaG2Report rep;
  RootSystem g2 = build_root_system({Family::G, 2});
  HighestWeight h{{Family::G, 2}, {2, 0}};
  WeightSystem ws = weight_system(g2, h);

  const IntVec a1 = g2.simple_roots[0];
  const IntVec a2 = g2.simple_roots[1];
  auto comb = [&](std::int64_t c1, std::int64_t c2) { return c1 * a1 + c2 * a2; };

  std::map<IntVec, std::int64_t> expected;
  auto put_pair = [&](const IntVec& w, std::int64_t m) {
    expected[w] = m;
    expected[-w] = m;
  };
  put_pair(comb(0, 1), 1);
  put_pair(comb(3, 1), 1);
  put_pair(comb(3, 2), 1);
  put_pair(comb(2, 0), 1);
  put_pair(comb(2, 2), 1);
  put_pair(comb(4, 2), 1);
  put_pair(comb(1, 0), 2);
  put_pair(comb(1, 1), 2);
  put_pair(comb(2, 1), 2);
  expected[IntVec::zero(g2.ambient)] = 3;

  rep.weight_table_ok = (ws.entries.size() == expected.size());
  for (const auto& [w, m] : ws.entries) {
    auto it = expected.find(w);
    if (it == expected.end() || it->second != m) {
      rep.weight_table_ok = false;
      rep.detail = "weight table differs from the printed list";
      break;
    }
  }
  rep.zero_multiplicity = ws.mult_of(IntVec::zero(g2.ambient));

  rep.f = circle_fix_count(g2, ws).f;
  rep.contradiction = rep.f < rep.required_lower_bound;
  rep.pass = rep.weight_table_ok && rep.zero_multiplicity == 3 && rep.f == 9 && rep.contradiction;
  if (rep.pass)
    rep.detail = "f = " + std::to_string(rep.f) + " < " + std::to_string(rep.required_lower_bound);
  else if (rep.detail.empty())
    rep.detail = "f = " + std::to_string(rep.f);
  return rep;
}

}  // namespace orbitbound

#endif
