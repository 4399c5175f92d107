#ifndef ORBITBOUND_INVOLUTIONS_HPP
#define ORBITBOUND_INVOLUTIONS_HPP

// Inner involution representatives from the Cartan-polyhedron vertices
// (Borel-de Siebenthal), optionally twisted by center representatives, their
// eigenphase spectra on weight systems, fixed-point codimensions, symmetric
// quotient dimensions, and the nice-involution screen.
//
// An involution is stored as the exponent coweight x with sigma =
// exp(2*pi*i*x); sigma^2 is central, never assumed to be 1. All phase
// arithmetic is exact rational mod 1.

#include "orbitbound/irrep.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace orbitbound {

struct CartanVertex {
  int index = 0;  // 1-based, matching the simple-root numbering
  RatVec v;
  std::int64_t mark = 0;
};

struct Involution {
  RatVec x;
  int vertex = 0;  // source vertex index (1-based)
  int twist = 0;   // index into center_elements(rs); 0 is the trivial twist
};

struct PhaseSpectrum {
  std::map<Rational, std::int64_t> mult;  // phase in [0,1) -> multiplicity

  std::int64_t at(const Rational& phase) const {
    auto it = mult.find(phase);
    return it == mult.end() ? 0 : it->second;
  }
  BigInt total() const {
    BigInt t = 0;
    for (const auto& [p, m] : mult)
      t += m;
    return t;
  }
};

struct InvolutionReport {
  Involution inv;
  std::int64_t fixed_dim_r = 0;
  std::int64_t codim_r = 0;
  std::int64_t quotient_dim = 0;  // dim G/G^sigma
  bool passes_screen = false;
};

enum class Verdict { Excluded, Inconclusive };

struct ScreeningReport {
  HighestWeight hw;
  IrrepInfo info;
  std::vector<InvolutionReport> rows;
  Verdict verdict = Verdict::Excluded;
  std::vector<Involution> survivors;
};

// ---------------------------------------------------------------------------

inline std::vector<CartanVertex> cartan_vertices(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<RatVec> gram(static_cast<std::size_t>(n), rat_zero(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
          Rational(dot(rs.simple_roots[static_cast<std::size_t>(i)],
                       rs.simple_roots[static_cast<std::size_t>(k)]),
                   rs.den * rs.den);
  std::vector<CartanVertex> out;
  for (int j = 0; j < n; ++j) {
    RatVec rhs = rat_zero(n);
    rhs[static_cast<std::size_t>(j)] = Rational(1, rs.marks[static_cast<std::size_t>(j)]);
    RatVec coeff;
    if (!solve_linear(gram, rhs, coeff))
      fail(Errc::data_error, rs.type.label() + ": singular Gram matrix");
    RatVec v = rat_zero(rs.ambient);
    for (int k = 0; k < n; ++k)
      for (int a = 0; a < rs.ambient; ++a)
        v[static_cast<std::size_t>(a)] +=
            coeff[static_cast<std::size_t>(k)] * rs.true_coord(rs.simple_roots[static_cast<std::size_t>(k)], a);
    out.push_back({j + 1, std::move(v), rs.marks[static_cast<std::size_t>(j)]});
  }
  return out;
}

// Representatives modulo the center: one involution per vertex of mark 1
// (x = v/2) or mark 2 (x = v), composed with every center representative.
inline std::vector<Involution> involution_representatives(const RootSystem& rs) {
  const auto vertices = cartan_vertices(rs);
  const auto center = center_elements(rs);
  std::vector<Involution> out;
  for (const auto& vx : vertices) {
    if (vx.mark > 2)
      continue;
    RatVec base = vx.mark == 1 ? Rational(1, 2) * vx.v : vx.v;
    for (std::size_t t = 0; t < center.size(); ++t)
      out.push_back({base + center[t].coweight, vx.index, static_cast<int>(t)});
  }
  return out;
}

// Central class of sigma^2 = exp(2*pi*i*2x): index of the center
// representative congruent to 2x modulo the coroot lattice.
inline int square_class(const RootSystem& rs, const Involution& inv) {
  const auto center = center_elements(rs);
  RatVec two_x = Rational(2) * inv.x;
  for (std::size_t k = 0; k < center.size(); ++k) {
    RatVec diff = two_x - center[k].coweight;
    if (rs.in_coroot_lattice(diff))
      return static_cast<int>(k);
  }
  fail(Errc::data_error, rs.type.label() + ": involution square is not central");
}

// Phase of a weight: fractional part of mu(x).
inline Rational weight_phase(const WeightSystem& ws, const IntVec& w, const RatVec& x) {
  return frac_part(dot(w, x) / ws.den);
}

inline PhaseSpectrum phase_spectrum(const WeightSystem& ws, const Involution& inv) {
  PhaseSpectrum sp;
  for (const auto& [w, m] : ws.entries)
    sp.mult[weight_phase(ws, w, inv.x)] += m;
  return sp;
}

// Central character of the representation at a center element, as a phase.
inline Rational central_character(const RootSystem& rs, const HighestWeight& hw, const RatVec& c) {
  return frac_part(dot(rs.weight_vector(hw.coeffs), c) / rs.den);
}

inline std::int64_t symmetric_quotient_dim(const RootSystem& rs, const Involution& inv) {
  std::int64_t count = 0;
  for (const auto& r : rs.positive_roots)
    if (!is_integer(dot(r, inv.x) / rs.den))
      count += 2;  // roots pair off as +-alpha
  return count;
}

inline InvolutionReport fixed_codim_real(const RootSystem& rs, const IrrepInfo& info,
                                         const WeightSystem& ws, const Involution& inv) {
  if (!(ws.type == rs.type))
    fail(Errc::invalid_argument, "weight system and root system disagree");
  const PhaseSpectrum sp = phase_spectrum(ws, inv);
  const std::int64_t fixed_c = sp.at(Rational(0));
  const std::int64_t fixed_r = info.fs == FSType::Real ? fixed_c : 2 * fixed_c;
  InvolutionReport rep;
  rep.inv = inv;
  rep.fixed_dim_r = fixed_r;
  rep.codim_r = static_cast<std::int64_t>(info.dimR) - fixed_r;
  rep.quotient_dim = symmetric_quotient_dim(rs, inv);
  rep.passes_screen = rep.codim_r <= 4 + rep.quotient_dim;
  return rep;
}

// The nice-involution screen: a representation is excluded when no
// (vertex, center-twist) representative satisfies
// codim V^sigma <= 4 + dim G/G^sigma. The screen is a necessary condition
// only, so the other verdict is "inconclusive", never "has boundary".
inline ScreeningReport screen_representation(const RootSystem& rs, const HighestWeight& hw,
                                             std::int64_t budget = kDefaultWeightBudget) {
  ScreeningReport report;
  report.hw = hw;
  report.info = irrep_info(rs, hw);
  const WeightSystem ws = weight_system(rs, hw, budget);
  for (const auto& inv : involution_representatives(rs)) {
    InvolutionReport row = fixed_codim_real(rs, report.info, ws, inv);
    if (row.passes_screen)
      report.survivors.push_back(inv);
    report.rows.push_back(std::move(row));
  }
  report.verdict = report.survivors.empty() ? Verdict::Excluded : Verdict::Inconclusive;
  return report;
}

// ---------------------------------------------------------------------------
// Independent oracle: fixed vectors of a diagonal element on an exterior
// power. The element is given by the phases of its diagonal entries
// (entry_j = exp(2*pi*i*phases[j])); a basis monomial e_{i1}^...^e_{ik} is
// fixed exactly when its phase sum is an integer.

inline std::int64_t brute_force_fixed_dim(const std::vector<Rational>& phases, int k) {
  const int m = static_cast<int>(phases.size());
  if (m > 16 || k > 4 || k < 0)
    fail(Errc::unsupported, "exterior-power oracle supports size <= 16 and degree <= 4");
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    idx[static_cast<std::size_t>(i)] = i;
  if (k > m)
    return 0;
  std::int64_t count = 0;
  while (true) {
    Rational sum = 0;
    for (int i = 0; i < k; ++i)
      sum += phases[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    if (frac_part(sum) == 0)
      ++count;
    int p = k - 1;
    while (p >= 0 && idx[static_cast<std::size_t>(p)] == m - k + p)
      --p;
    if (p < 0)
      break;
    ++idx[static_cast<std::size_t>(p)];
    for (int i = p + 1; i < k; ++i)
      idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
  return count;
}

// Diagonal phases of the defining representation at a torus element x.
// A-family: the n+1 coordinate phases recentred to determinant one;
// B-family: {+-x_i, 0}; D-family: {+-x_i}.
inline std::vector<Rational> defining_rep_phases(const RootSystem& rs, const RatVec& x) {
  std::vector<Rational> phases;
  switch (rs.type.family) {
    case Family::A: {
      Rational mean = 0;
      for (const auto& c : x)
        mean += c;
      mean /= static_cast<int>(x.size());
      for (const auto& c : x)
        phases.push_back(c - mean);
      break;
    }
    case Family::B:
      for (const auto& c : x) {
        phases.push_back(c);
        phases.push_back(-c);
      }
      phases.push_back(0);
      break;
    case Family::D:
      for (const auto& c : x) {
        phases.push_back(c);
        phases.push_back(-c);
      }
      break;
    default:
      fail(Errc::unsupported, "defining-representation phases support A, B, D families only");
  }
  return phases;
}

}  // namespace orbitbound

#endif
