#ifndef ORBITBOUND_ROOTDATA_HPP
#define ORBITBOUND_ROOTDATA_HPP

// Structural data for the simple root systems A_n, B_n, C_n, D_n, G2, F4,
// E6, E7, E8 in their orthogonal (Bourbaki) realizations: simple and positive
// roots, highest-root marks, fundamental weights, Weyl vector, coroots,
// center representatives, diagram automorphisms, and the Weyl-group helpers
// used by the weight machinery.
//
// Coordinates are exact. Internally every root/weight vector is stored as an
// integer vector scaled by a per-system denominator `den`; rational values
// appear only at the API edges. The invariant inner product carries a
// per-type rational scale so that long roots have squared length 2 (the
// scale matters only for norms: it cancels in every pairing ratio).

#include "orbitbound/numeric.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace orbitbound {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline char family_char(Family f) { return static_cast<char>(f); }

struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  std::string label() const { return std::string(1, family_char(family)) + std::to_string(rank); }

  bool operator==(const SimpleType& o) const { return family == o.family && rank == o.rank; }
  bool operator<(const SimpleType& o) const {
    return family_char(family) != family_char(o.family) ? family_char(family) < family_char(o.family)
                                                        : rank < o.rank;
  }

  static SimpleType parse(const std::string& s);
  void validate() const;
};

inline void SimpleType::validate() const {
  auto bad = [&](const std::string& why) {
    fail(Errc::invalid_argument, "invalid type " + label() + ": " + why);
  };
  switch (family) {
    case Family::A:
      if (rank < 1 || rank + 1 > kMaxAmbient) bad("rank must be in 1.." + std::to_string(kMaxAmbient - 1));
      break;
    case Family::B:
    case Family::C:
      if (rank < 2 || rank > kMaxAmbient) bad("rank must be at least 2");
      break;
    case Family::D:
      if (rank < 3 || rank > kMaxAmbient) bad("rank must be at least 3 (D3 is the A3 alias)");
      break;
    case Family::G:
      if (rank != 2) bad("G has rank 2 only");
      break;
    case Family::F:
      if (rank != 4) bad("F has rank 4 only");
      break;
    case Family::E:
      if (rank < 6 || rank > 8) bad("E has ranks 6, 7, 8");
      break;
  }
}

inline SimpleType SimpleType::parse(const std::string& s) {
  if (s.size() < 2)
    fail(Errc::invalid_argument, "cannot parse type '" + s + "' (expected e.g. B3)");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  std::string digits = s.substr(1);
  for (char ch : digits)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      fail(Errc::invalid_argument, "cannot parse type '" + s + "'");
  if (std::string("ABCDEFG").find(f) == std::string::npos)
    fail(Errc::invalid_argument, "unknown family '" + std::string(1, f) + "'");
  SimpleType t{static_cast<Family>(f), std::stoi(digits)};
  t.validate();
  return t;
}

// ---------------------------------------------------------------------------

struct CenterElement {
  RatVec coweight;     // representative c with exp(2*pi*i*c) central
  std::int64_t order;  // order of its class modulo the coroot lattice
};

using DiagramAutomorphism = std::vector<int>;  // permutation of simple-root indices (0-based)

struct RootSystem {
  SimpleType type;
  int ambient = 0;
  std::int64_t den = 1;    // stored coordinates are den * true value
  Rational metric_scale;   // invariant form = metric_scale * (dot of true coords)
  std::int64_t group_dim = 0;
  std::int64_t coxeter = 0;
  bool d3_alias = false;   // D3 is constructible but flagged as A3-isomorphic

  std::vector<IntVec> simple_roots;
  std::vector<IntVec> positive_roots;  // sorted lexicographically
  IntVec highest_root;
  std::vector<std::int64_t> marks;
  std::vector<IntVec> fundamental_weights;
  IntVec rho;
  std::vector<RatVec> coroots;  // per positive root, true coordinates: 2a/|a|^2

  int rank() const { return type.rank; }

  // --- coordinate conversions ------------------------------------------------
  Rational true_coord(const IntVec& v, int i) const { return Rational(v[i], den); }
  RatVec to_rational(const IntVec& v) const {
    RatVec r(static_cast<std::size_t>(ambient));
    for (int i = 0; i < ambient; ++i)
      r[static_cast<std::size_t>(i)] = Rational(v[i], den);
    return r;
  }
  IntVec from_rational(const RatVec& v) const {
    IntVec r = IntVec::zero(ambient);
    for (int i = 0; i < ambient; ++i) {
      Rational x = v[static_cast<std::size_t>(i)] * den;
      if (!is_integer(x))
        fail(Errc::invalid_argument, "vector is not in the " + type.label() + " coordinate lattice");
      r[i] = static_cast<std::int64_t>(boost::multiprecision::numerator(x));
    }
    return r;
  }

  // Invariant form on true coordinates.
  Rational inner(const RatVec& a, const RatVec& b) const { return metric_scale * dot(a, b); }
  Rational norm2(const RatVec& a) const { return inner(a, a); }

  // --- Cartan pairing and Weyl action on scaled vectors ---------------------
  // <v, alpha_i^vee> = 2 (v . a_i) / (a_i . a_i); exact integer on lattice vectors.
  std::int64_t pairing(const IntVec& v, int i) const {
    const IntVec& a = simple_roots[static_cast<std::size_t>(i)];
    const std::int64_t num = 2 * dot(v, a);
    const std::int64_t dd = dot(a, a);
    if (num % dd != 0)
      fail(Errc::invalid_argument, "vector is not in the weight lattice of " + type.label());
    return num / dd;
  }

  IntVec reflect(const IntVec& v, int i) const {
    return v - pairing(v, i) * simple_roots[static_cast<std::size_t>(i)];
  }

  bool is_dominant(const IntVec& v) const {
    for (int i = 0; i < rank(); ++i)
      if (pairing(v, i) < 0)
        return false;
    return true;
  }

  IntVec dominantize(const IntVec& v) const {
    IntVec w = v;
    bool moved = true;
    while (moved) {
      moved = false;
      for (int i = 0; i < rank(); ++i) {
        if (pairing(w, i) < 0) {
          w = reflect(w, i);
          moved = true;
        }
      }
    }
    return w;
  }

  // Vector of a highest weight given by fundamental-weight coefficients.
  IntVec weight_vector(const std::vector<std::int64_t>& coeffs) const {
    if (static_cast<int>(coeffs.size()) != rank())
      fail(Errc::invalid_argument, "expected " + std::to_string(rank()) + " coefficients for " + type.label());
    IntVec v = IntVec::zero(ambient);
    for (int i = 0; i < rank(); ++i)
      if (coeffs[static_cast<std::size_t>(i)] != 0)
        v = v + coeffs[static_cast<std::size_t>(i)] * fundamental_weights[static_cast<std::size_t>(i)];
    return v;
  }

  // Expansion of a span-of-roots vector in the simple-root basis.
  bool expand_in_simple_roots(const RatVec& v, RatVec& coeffs) const {
    std::vector<RatVec> cols(static_cast<std::size_t>(ambient),
                             rat_zero(rank()));
    for (int i = 0; i < ambient; ++i)
      for (int k = 0; k < rank(); ++k)
        cols[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
            true_coord(simple_roots[static_cast<std::size_t>(k)], i);
    return solve_linear(cols, v, coeffs);
  }

  bool in_root_lattice(const RatVec& v) const {
    RatVec coeffs;
    if (!expand_in_simple_roots(v, coeffs))
      return false;
    for (const auto& x : coeffs)
      if (!is_integer(x))
        return false;
    return true;
  }

  // Coroot-lattice coordinates: v = sum x_i alpha_i^vee has x_i = <lambda_i, v>.
  bool coroot_coords(const RatVec& v, RatVec& coeffs) const {
    coeffs = rat_zero(rank());
    for (int i = 0; i < rank(); ++i)
      coeffs[static_cast<std::size_t>(i)] = dot(fundamental_weights[static_cast<std::size_t>(i)], v) / den;
    // Verify v lies in the span of the coroots (= span of the roots).
    RatVec rebuilt = rat_zero(ambient);
    for (int i = 0; i < rank(); ++i) {
      const IntVec& a = simple_roots[static_cast<std::size_t>(i)];
      const Rational scale = coeffs[static_cast<std::size_t>(i)] * 2 * den / dot(a, a);
      for (int j = 0; j < ambient; ++j)
        rebuilt[static_cast<std::size_t>(j)] += scale * a[j];
    }
    return rebuilt == v;
  }

  bool in_coroot_lattice(const RatVec& v) const {
    RatVec coeffs;
    if (!coroot_coords(v, coeffs))
      return false;
    for (const auto& x : coeffs)
      if (!is_integer(x))
        return false;
    return true;
  }
};

// ---------------------------------------------------------------------------
// Construction

namespace detail {

inline RatVec rv(std::initializer_list<Rational> xs) { return RatVec(xs); }

inline void simple_root_table(const SimpleType& t, int& ambient, std::vector<RatVec>& simples,
                              Rational& scale, std::int64_t& group_dim, std::int64_t& coxeter) {
  const int n = t.rank;
  auto unit = [&](int i, int j, std::int64_t vi, std::int64_t vj) {
    RatVec v = rat_zero(ambient);
    v[static_cast<std::size_t>(i)] = vi;
    if (j >= 0)
      v[static_cast<std::size_t>(j)] = vj;
    return v;
  };
  switch (t.family) {
    case Family::A: {
      ambient = n + 1;
      for (int i = 0; i < n; ++i)
        simples.push_back(unit(i, i + 1, 1, -1));
      scale = 1;
      group_dim = static_cast<std::int64_t>(n) * (n + 2);
      coxeter = n + 1;
      break;
    }
    case Family::B: {
      ambient = n;
      for (int i = 0; i + 1 < n; ++i)
        simples.push_back(unit(i, i + 1, 1, -1));
      simples.push_back(unit(n - 1, -1, 1, 0));
      scale = 1;
      group_dim = static_cast<std::int64_t>(n) * (2 * n + 1);
      coxeter = 2 * n;
      break;
    }
    case Family::C: {
      ambient = n;
      for (int i = 0; i + 1 < n; ++i)
        simples.push_back(unit(i, i + 1, 1, -1));
      simples.push_back(unit(n - 1, -1, 2, 0));
      scale = Rational(1, 2);
      group_dim = static_cast<std::int64_t>(n) * (2 * n + 1);
      coxeter = 2 * n;
      break;
    }
    case Family::D: {
      ambient = n;
      for (int i = 0; i + 1 < n; ++i)
        simples.push_back(unit(i, i + 1, 1, -1));
      simples.push_back(unit(n - 2, n - 1, 1, 1));
      scale = 1;
      group_dim = static_cast<std::int64_t>(n) * (2 * n - 1);
      coxeter = 2 * n - 2;
      break;
    }
    case Family::G: {
      ambient = 3;
      simples.push_back(rv({1, -1, 0}));
      simples.push_back(rv({-2, 1, 1}));
      scale = Rational(1, 3);
      group_dim = 14;
      coxeter = 6;
      break;
    }
    case Family::F: {
      ambient = 4;
      simples.push_back(rv({0, 1, -1, 0}));
      simples.push_back(rv({0, 0, 1, -1}));
      simples.push_back(rv({0, 0, 0, 1}));
      simples.push_back(rv({Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)}));
      scale = 1;
      group_dim = 52;
      coxeter = 12;
      break;
    }
    case Family::E: {
      ambient = 8;
      std::vector<RatVec> e8;
      e8.push_back(rv({Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2),
                       Rational(-1, 2), Rational(-1, 2), Rational(-1, 2), Rational(1, 2)}));
      e8.push_back(rv({1, 1, 0, 0, 0, 0, 0, 0}));
      e8.push_back(rv({-1, 1, 0, 0, 0, 0, 0, 0}));
      e8.push_back(rv({0, -1, 1, 0, 0, 0, 0, 0}));
      e8.push_back(rv({0, 0, -1, 1, 0, 0, 0, 0}));
      e8.push_back(rv({0, 0, 0, -1, 1, 0, 0, 0}));
      e8.push_back(rv({0, 0, 0, 0, -1, 1, 0, 0}));
      e8.push_back(rv({0, 0, 0, 0, 0, -1, 1, 0}));
      for (int i = 0; i < n; ++i)
        simples.push_back(e8[static_cast<std::size_t>(i)]);
      scale = 1;
      group_dim = n == 6 ? 78 : (n == 7 ? 133 : 248);
      coxeter = n == 6 ? 12 : (n == 7 ? 18 : 30);
      break;
    }
  }
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

inline std::int64_t rational_lcm_den(const std::vector<RatVec>& vs, std::int64_t start = 1) {
  std::int64_t l = start;
  for (const auto& v : vs)
    for (const auto& x : v)
      l = lcm64(l, static_cast<std::int64_t>(boost::multiprecision::denominator(x)));
  return l;
}

}  // namespace detail

inline RootSystem build_root_system(const SimpleType& type) {
  type.validate();
  RootSystem rs;
  rs.type = type;
  const int n = type.rank;

  std::vector<RatVec> simples_q;
  int ambient = 0;
  {
    // simple_root_table writes into vectors sized per family; set ambient first
    switch (type.family) {
      case Family::A: ambient = n + 1; break;
      case Family::B:
      case Family::C:
      case Family::D: ambient = n; break;
      case Family::G: ambient = 3; break;
      case Family::F: ambient = 4; break;
      case Family::E: ambient = 8; break;
    }
  }
  rs.ambient = ambient;
  detail::simple_root_table(type, ambient, simples_q, rs.metric_scale, rs.group_dim, rs.coxeter);
  rs.d3_alias = (type.family == Family::D && n == 3);

  // Fundamental weights: lambda_i = sum_k x_k alpha_k with <lambda_i, alpha_j^vee> = delta_ij.
  // In the alpha-coordinates this is the inverse of the Cartan matrix.
  std::vector<RatVec> cartan(static_cast<std::size_t>(n), rat_zero(n));
  for (int j = 0; j < n; ++j) {
    const Rational nj = dot(simples_q[static_cast<std::size_t>(j)], simples_q[static_cast<std::size_t>(j)]);
    for (int k = 0; k < n; ++k)
      cartan[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
          Rational(2) * dot(simples_q[static_cast<std::size_t>(k)], simples_q[static_cast<std::size_t>(j)]) / nj;
  }
  std::vector<RatVec> fund_q;
  for (int i = 0; i < n; ++i) {
    RatVec rhs = rat_zero(n);
    rhs[static_cast<std::size_t>(i)] = 1;
    RatVec x;
    if (!solve_linear(cartan, rhs, x))
      fail(Errc::data_error, "Cartan matrix of " + type.label() + " is singular");
    RatVec lam = rat_zero(ambient);
    for (int k = 0; k < n; ++k)
      for (int a = 0; a < ambient; ++a)
        lam[static_cast<std::size_t>(a)] += x[static_cast<std::size_t>(k)] * simples_q[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)];
    fund_q.push_back(std::move(lam));
  }

  rs.den = detail::rational_lcm_den(simples_q);
  rs.den = detail::rational_lcm_den(fund_q, rs.den);

  auto scale_vec = [&](const RatVec& v) {
    IntVec r = IntVec::zero(ambient);
    for (int i = 0; i < ambient; ++i) {
      Rational x = v[static_cast<std::size_t>(i)] * rs.den;
      r[i] = static_cast<std::int64_t>(boost::multiprecision::numerator(x));
    }
    return r;
  };
  for (const auto& v : simples_q)
    rs.simple_roots.push_back(scale_vec(v));
  for (const auto& v : fund_q)
    rs.fundamental_weights.push_back(scale_vec(v));
  rs.rho = IntVec::zero(ambient);
  for (const auto& w : rs.fundamental_weights)
    rs.rho = rs.rho + w;

  // All roots: Weyl-orbit closure of the simple roots.
  std::unordered_set<IntVec, IntVecHash> roots;
  std::deque<IntVec> queue;
  for (const auto& a : rs.simple_roots) {
    if (roots.insert(a).second)
      queue.push_back(a);
    IntVec na = -a;
    if (roots.insert(na).second)
      queue.push_back(na);
  }
  while (!queue.empty()) {
    IntVec v = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      IntVec w = rs.reflect(v, i);
      if (roots.insert(w).second)
        queue.push_back(w);
    }
  }
  for (const auto& r : roots)
    if (dot(r, rs.rho) > 0)
      rs.positive_roots.push_back(r);
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end());

  const std::int64_t expected_positive = (rs.group_dim - n) / 2;
  if (static_cast<std::int64_t>(rs.positive_roots.size()) != expected_positive)
    fail(Errc::data_error, type.label() + ": positive root count " +
                               std::to_string(rs.positive_roots.size()) + " != " +
                               std::to_string(expected_positive));

  // Highest root and marks.
  rs.highest_root = rs.positive_roots.front();
  for (const auto& r : rs.positive_roots)
    if (dot(r, rs.rho) > dot(rs.highest_root, rs.rho))
      rs.highest_root = r;
  {
    RatVec coeffs;
    if (!rs.expand_in_simple_roots(rs.to_rational(rs.highest_root), coeffs))
      fail(Errc::data_error, type.label() + ": highest root not in simple-root span");
    for (const auto& c : coeffs) {
      if (!is_integer(c) || c <= 0)
        fail(Errc::data_error, type.label() + ": non-positive-integer mark");
      rs.marks.push_back(static_cast<std::int64_t>(boost::multiprecision::numerator(c)));
    }
  }

  for (const auto& r : rs.positive_roots) {
    RatVec cr = rs.to_rational(r);
    const Rational nn = dot(cr, cr);
    for (auto& x : cr)
      x = x * 2 / nn;
    rs.coroots.push_back(std::move(cr));
  }
  return rs;
}

// ---------------------------------------------------------------------------
// Center of the simply connected group, as coweight representatives.

inline std::vector<CenterElement> center_elements(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<CenterElement> out;
  out.push_back({rat_zero(rs.ambient), 1});
  auto fund_true = [&](int i) { return rs.to_rational(rs.fundamental_weights[static_cast<std::size_t>(i)]); };
  switch (rs.type.family) {
    case Family::A:
      for (int j = 1; j <= n; ++j)
        out.push_back({fund_true(j - 1), (n + 1) / std::gcd<std::int64_t>(j, n + 1)});
      break;
    case Family::B: {
      RatVec c = rat_zero(rs.ambient);
      c[0] = 1;
      out.push_back({c, 2});
      break;
    }
    case Family::C: {
      RatVec c(static_cast<std::size_t>(rs.ambient), Rational(1, 2));
      out.push_back({c, 2});
      break;
    }
    case Family::D: {
      RatVec half(static_cast<std::size_t>(rs.ambient), Rational(1, 2));
      RatVec z = rat_zero(rs.ambient);
      z[0] = 1;
      const std::int64_t spin_order = (n % 2 == 0) ? 2 : 4;
      out.push_back({half, spin_order});
      out.push_back({z, 2});
      RatVec other = half;
      other[0] += 1;
      out.push_back({other, spin_order});
      break;
    }
    case Family::E:
      if (n == 6) {
        out.push_back({fund_true(0), 3});
        out.push_back({fund_true(5), 3});
      } else if (n == 7) {
        out.push_back({fund_true(6), 2});
      }
      break;
    case Family::G:
    case Family::F:
      break;
  }
  for (const auto& ce : out) {
    for (const auto& r : rs.positive_roots)
      if (!is_integer(dot(r, ce.coweight) / rs.den))
        fail(Errc::data_error, rs.type.label() + ": center representative pairs non-integrally with a root");
    RatVec scaled = ce.coweight;
    for (auto& x : scaled)
      x *= ce.order;
    if (!rs.in_coroot_lattice(scaled))
      fail(Errc::data_error, rs.type.label() + ": center representative order mismatch");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dynkin diagram automorphisms (permutations preserving the Cartan matrix).

inline std::vector<DiagramAutomorphism> diagram_automorphisms(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<std::vector<std::int64_t>> cartan(static_cast<std::size_t>(n),
                                                std::vector<std::int64_t>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          rs.pairing(rs.simple_roots[static_cast<std::size_t>(i)], j);

  std::vector<DiagramAutomorphism> result;
  DiagramAutomorphism perm(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto consistent = [&](int i) {
    for (int j = 0; j <= i; ++j) {
      const int pi = perm[static_cast<std::size_t>(i)];
      const int pj = perm[static_cast<std::size_t>(j)];
      if (cartan[static_cast<std::size_t>(pi)][static_cast<std::size_t>(pj)] !=
              cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ||
          cartan[static_cast<std::size_t>(pj)][static_cast<std::size_t>(pi)] !=
              cartan[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
        return false;
    }
    return true;
  };
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      result.push_back(perm);
      return;
    }
    for (int cand = 0; cand < n; ++cand) {
      if (used[static_cast<std::size_t>(cand)])
        continue;
      perm[static_cast<std::size_t>(i)] = cand;
      used[static_cast<std::size_t>(cand)] = true;
      if (consistent(i))
        rec(i + 1);
      used[static_cast<std::size_t>(cand)] = false;
    }
    perm[static_cast<std::size_t>(i)] = -1;
  };
  rec(0);
  std::sort(result.begin(), result.end());
  return result;
}

// ---------------------------------------------------------------------------
// Weyl group (small ranks; used by the tensor-square oracle).

inline BigInt weyl_order(const SimpleType& t) {
  auto factorial = [](int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i)
      f *= i;
    return f;
  };
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return factorial(n) << n;
    case Family::D: return factorial(n) << (n - 1);
    case Family::G: return 12;
    case Family::F: return 1152;
    case Family::E: return n == 6 ? BigInt(51840) : (n == 7 ? BigInt(2903040) : BigInt(696729600));
  }
  return 0;
}

struct WeylElement {
  IntVec rho_image;
  int sign;  // det(w)
};

inline std::vector<WeylElement> enumerate_weyl_group(const RootSystem& rs, std::int64_t max_order) {
  if (weyl_order(rs.type) > max_order)
    fail(Errc::unsupported, rs.type.label() + ": Weyl group too large for exhaustive enumeration");
  std::unordered_map<IntVec, int, IntVecHash> seen;
  std::deque<IntVec> queue;
  seen.emplace(rs.rho, 1);
  queue.push_back(rs.rho);
  while (!queue.empty()) {
    IntVec v = queue.front();
    queue.pop_front();
    const int s = seen[v];
    for (int i = 0; i < rs.rank(); ++i) {
      IntVec w = rs.reflect(v, i);
      if (seen.emplace(w, -s).second)
        queue.push_back(w);
    }
  }
  std::vector<WeylElement> out;
  out.reserve(seen.size());
  for (const auto& [v, s] : seen)
    out.push_back({v, s});
  std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
    return a.rho_image < b.rho_image;
  });
  return out;
}

// Weyl orbit of a lattice vector.
inline std::vector<IntVec> weyl_orbit(const RootSystem& rs, const IntVec& v) {
  std::unordered_set<IntVec, IntVecHash> seen;
  std::deque<IntVec> queue;
  seen.insert(v);
  queue.push_back(v);
  while (!queue.empty()) {
    IntVec u = queue.front();
    queue.pop_front();
    for (int i = 0; i < rs.rank(); ++i) {
      IntVec w = rs.reflect(u, i);
      if (seen.insert(w).second)
        queue.push_back(w);
    }
  }
  std::vector<IntVec> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace orbitbound

#endif
