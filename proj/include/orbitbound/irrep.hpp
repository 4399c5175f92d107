#ifndef ORBITBOUND_IRREP_HPP
#define ORBITBOUND_IRREP_HPP

// Irreducible representation data: exact Weyl dimension, Frobenius-Schur
// type, real dimension, and the full weight system with Freudenthal
// multiplicities. Multiplicities are computed on dominant weights only and
// spread over Weyl orbits afterwards.

#include "orbitbound/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>
#include <vector>

namespace orbitbound {

inline constexpr std::int64_t kDefaultWeightBudget = 1000000;

struct HighestWeight {
  SimpleType type;
  std::vector<std::int64_t> coeffs;

  void validate() const {
    type.validate();
    if (static_cast<int>(coeffs.size()) != type.rank)
      fail(Errc::invalid_argument, "highest weight for " + type.label() + " needs " +
                                       std::to_string(type.rank) + " coefficients");
    for (auto c : coeffs)
      if (c < 0)
        fail(Errc::invalid_argument, "highest weight coefficients must be nonnegative");
  }

  std::string label() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (i)
        s += ",";
      s += std::to_string(coeffs[i]);
    }
    return s + ")";
  }

  bool operator==(const HighestWeight& o) const { return type == o.type && coeffs == o.coeffs; }
  bool operator<(const HighestWeight& o) const {
    if (!(type == o.type))
      return type < o.type;
    return coeffs < o.coeffs;
  }

  static std::vector<std::int64_t> parse_coeffs(const std::string& s) {
    std::vector<std::int64_t> out;
    std::string cur;
    for (char ch : s + ",") {
      if (ch == ',') {
        if (cur.empty())
          fail(Errc::invalid_argument, "cannot parse highest weight '" + s + "'");
        try {
          out.push_back(std::stoll(cur));
        } catch (const std::exception&) {
          fail(Errc::invalid_argument, "cannot parse highest weight '" + s + "'");
        }
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        cur += ch;
      }
    }
    return out;
  }
};

enum class FSType { Real, Complex, Quaternionic };

inline std::string fs_name(FSType t) {
  switch (t) {
    case FSType::Real: return "real";
    case FSType::Complex: return "complex";
    case FSType::Quaternionic: return "quaternionic";
  }
  return "?";
}

struct IrrepInfo {
  HighestWeight hw;
  BigInt dimC;
  FSType fs = FSType::Real;
  BigInt dimR;
};

// ---------------------------------------------------------------------------

inline BigInt weyl_dim(const RootSystem& rs, const HighestWeight& hw) {
  hw.validate();
  if (!(hw.type == rs.type))
    fail(Errc::invalid_argument, "highest weight type " + hw.type.label() + " does not match " + rs.type.label());
  const IntVec lam_rho = rs.weight_vector(hw.coeffs) + rs.rho;
  BigInt num = 1, den = 1;
  for (const auto& a : rs.positive_roots) {
    num *= dot(lam_rho, a);
    den *= dot(rs.rho, a);
  }
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0)
    fail(Errc::data_error, "Weyl dimension of " + hw.label() + " is not an integer");
  return q;
}

inline FSType fs_type(const RootSystem& rs, const HighestWeight& hw) {
  hw.validate();
  const IntVec lam = rs.weight_vector(hw.coeffs);
  const IntVec dual = rs.dominantize(-lam);
  if (dual != lam)
    return FSType::Complex;
  // <lambda, 2 rho^vee> = sum over positive roots of <lambda, alpha^vee>.
  std::int64_t s = 0;
  for (const auto& a : rs.positive_roots) {
    const std::int64_t num = 2 * dot(lam, a);
    const std::int64_t dd = dot(a, a);
    s += num / dd;  // exact for lattice vectors
  }
  return (s % 2 == 0) ? FSType::Real : FSType::Quaternionic;
}

inline IrrepInfo irrep_info(const RootSystem& rs, const HighestWeight& hw) {
  IrrepInfo info;
  info.hw = hw;
  info.dimC = weyl_dim(rs, hw);
  info.fs = fs_type(rs, hw);
  info.dimR = info.fs == FSType::Real ? info.dimC : 2 * info.dimC;
  return info;
}

inline BigInt real_dim(const RootSystem& rs, const HighestWeight& hw) {
  return irrep_info(rs, hw).dimR;
}

// ---------------------------------------------------------------------------
// Weight systems

struct WeightSystem {
  SimpleType type;
  std::vector<std::int64_t> hw_coeffs;
  int ambient = 0;
  std::int64_t den = 1;
  BigInt dimC;
  std::vector<std::pair<IntVec, std::int64_t>> entries;  // sorted by weight
  std::unordered_map<IntVec, std::int64_t, IntVecHash> index;

  std::int64_t mult_of(const IntVec& w) const {
    auto it = index.find(w);
    return it == index.end() ? 0 : it->second;
  }

  void build_index() {
    index.clear();
    index.reserve(entries.size() * 2);
    for (const auto& [w, m] : entries)
      index.emplace(w, m);
  }
};

namespace detail {

struct DominantTable {
  std::vector<IntVec> weights;  // sorted by descending height
  std::unordered_map<IntVec, std::int64_t, IntVecHash> mult;
};

inline DominantTable dominant_weights(const RootSystem& rs, const IntVec& lam) {
  DominantTable t;
  std::unordered_map<IntVec, bool, IntVecHash> seen;
  std::deque<IntVec> queue;
  seen.emplace(lam, true);
  queue.push_back(lam);
  while (!queue.empty()) {
    IntVec v = queue.front();
    queue.pop_front();
    t.weights.push_back(v);
    for (const auto& a : rs.positive_roots) {
      IntVec w = v - a;
      if (!rs.is_dominant(w))
        continue;
      if (seen.emplace(w, true).second)
        queue.push_back(w);
    }
  }
  std::sort(t.weights.begin(), t.weights.end(), [&](const IntVec& a, const IntVec& b) {
    const std::int64_t ha = dot(a, rs.rho), hb = dot(b, rs.rho);
    if (ha != hb)
      return ha > hb;
    return a < b;
  });
  return t;
}

// Freudenthal recursion on the dominant weights, highest first.
inline void freudenthal(const RootSystem& rs, const IntVec& lam, DominantTable& t) {
  const IntVec lam_rho = lam + rs.rho;
  const std::int64_t lam_norm = dot(lam_rho, lam_rho);
  t.mult.reserve(t.weights.size() * 2);
  for (const auto& mu : t.weights) {
    if (mu == lam) {
      t.mult.emplace(mu, 1);
      continue;
    }
    __int128 num = 0;
    for (const auto& a : rs.positive_roots) {
      const std::int64_t aa = dot(a, a);
      std::int64_t d = dot(mu, a);
      IntVec nu = mu;
      while (true) {
        nu = nu + a;
        d += aa;
        auto it = t.mult.find(rs.dominantize(nu));
        if (it == t.mult.end())
          break;  // weight strings through mu are contiguous
        num += static_cast<__int128>(it->second) * d;
      }
    }
    const IntVec mu_rho = mu + rs.rho;
    const std::int64_t denom = lam_norm - dot(mu_rho, mu_rho);
    if (denom <= 0 || (2 * num) % denom != 0)
      fail(Errc::data_error, "Freudenthal recursion produced a non-integer multiplicity");
    const std::int64_t m = static_cast<std::int64_t>(2 * num / denom);
    t.mult.emplace(mu, m);
  }
}

}  // namespace detail

inline WeightSystem weight_system(const RootSystem& rs, const HighestWeight& hw,
                                  std::int64_t budget = kDefaultWeightBudget) {
  const BigInt dim = weyl_dim(rs, hw);
  if (dim > budget)
    fail(Errc::resource_exhausted, "weight system of " + rs.type.label() + " " + hw.label() +
                                       " has dimension " + dim.str() + " exceeding budget " +
                                       std::to_string(budget));
  const IntVec lam = rs.weight_vector(hw.coeffs);
  auto table = detail::dominant_weights(rs, lam);
  detail::freudenthal(rs, lam, table);

  WeightSystem ws;
  ws.type = rs.type;
  ws.hw_coeffs = hw.coeffs;
  ws.ambient = rs.ambient;
  ws.den = rs.den;
  ws.dimC = dim;
  BigInt total = 0;
  for (const auto& mu : table.weights) {
    const std::int64_t m = table.mult.at(mu);
    for (const auto& w : weyl_orbit(rs, mu)) {
      ws.entries.emplace_back(w, m);
      total += m;
    }
  }
  if (total != dim)
    fail(Errc::data_error, "weight system of " + hw.label() + " sums to " + total.str() +
                               " instead of " + dim.str());
  std::sort(ws.entries.begin(), ws.entries.end());
  ws.build_index();
  return ws;
}

// ---------------------------------------------------------------------------
// Desk-scale independent check of the Frobenius-Schur type: decide whether
// the trivial representation sits in S^2(V) or in Lambda^2(V) by evaluating
// the alternating multiplicity sum over the Weyl group.

inline FSType tensor_square_parity_oracle(const RootSystem& rs, const HighestWeight& hw,
                                          std::int64_t dim_budget = 200) {
  const BigInt dim = weyl_dim(rs, hw);
  if (dim > dim_budget)
    fail(Errc::resource_exhausted, "tensor-square oracle limited to dimension " +
                                       std::to_string(dim_budget) + ", got " + dim.str());
  const auto weyl = enumerate_weyl_group(rs, 1000000);
  const WeightSystem ws = weight_system(rs, hw, dim_budget + 1);

  auto tensor_mult = [&](const IntVec& nu) {
    std::int64_t s = 0;
    for (const auto& [w, m] : ws.entries)
      s += m * ws.mult_of(nu - w);
    return s;
  };
  auto half_mult = [&](const IntVec& nu) -> std::int64_t {
    IntVec h = nu;
    for (int i = 0; i < h.n; ++i) {
      if (h.c[i] % 2 != 0)
        return 0;
      h.c[i] /= 2;
    }
    return ws.mult_of(h);
  };

  std::int64_t n_sym = 0, n_alt = 0;
  for (const auto& el : weyl) {
    const IntVec nu = el.rho_image - rs.rho;
    const std::int64_t t = tensor_mult(nu);
    const std::int64_t h = half_mult(nu);
    n_sym += el.sign * (t + h) / 2;
    n_alt += el.sign * (t - h) / 2;
  }
  if (n_sym < 0 || n_alt < 0 || n_sym + n_alt > 1)
    fail(Errc::data_error, "tensor-square decomposition of " + hw.label() + " is inconsistent");
  if (n_sym == 1)
    return FSType::Real;
  if (n_alt == 1)
    return FSType::Quaternionic;
  return FSType::Complex;
}

}  // namespace orbitbound

#endif
