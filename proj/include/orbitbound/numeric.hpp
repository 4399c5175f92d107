#ifndef ORBITBOUND_NUMERIC_HPP
#define ORBITBOUND_NUMERIC_HPP

// Exact arithmetic primitives: big integers, rationals rendered as "p/q",
// small integer coordinate vectors, and the error type shared by all modules.
// No floating point is used anywhere in the engine.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbitbound {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Errors

enum class Errc {
  invalid_argument,   // bad type/rank/coefficients; CLI exit 2
  not_applicable,     // operation outside the catalogued range; CLI exit 2
  resource_exhausted, // enumeration budget exceeded; CLI exit 3
  unsupported,        // valid input outside this operation's supported shape
  data_error,         // malformed data or golden file
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

// ---------------------------------------------------------------------------
// Rational rendering

inline std::string rat_str(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1)
    return num.str();
  return num.str() + "/" + den.str();
}

inline Rational parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos)
      return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::exception&) {
    fail(Errc::data_error, "cannot parse rational '" + s + "'");
  }
}

// Fractional part in [0, 1).
inline Rational frac_part(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;
  if (num < 0 && q * den != num)
    --q;
  return Rational(num - q * den, den);
}

inline bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

// ---------------------------------------------------------------------------
// Small integer vectors
//
// All root and weight coordinates live in a fixed ambient space of dimension
// at most kMaxAmbient, scaled by a per-root-system integer denominator so that
// every stored entry is an integer. This keeps the weight-system inner loops
// free of rational arithmetic.

inline constexpr int kMaxAmbient = 16;

struct IntVec {
  std::uint8_t n = 0;
  std::array<std::int64_t, kMaxAmbient> c{};

  static IntVec zero(int dim) {
    IntVec v;
    v.n = static_cast<std::uint8_t>(dim);
    return v;
  }

  int dim() const { return n; }
  std::int64_t operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  std::int64_t& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

  bool operator==(const IntVec& o) const {
    if (n != o.n)
      return false;
    for (int i = 0; i < n; ++i)
      if (c[i] != o.c[i])
        return false;
    return true;
  }
  bool operator!=(const IntVec& o) const { return !(*this == o); }
  bool operator<(const IntVec& o) const {
    if (n != o.n)
      return n < o.n;
    for (int i = 0; i < n; ++i)
      if (c[i] != o.c[i])
        return c[i] < o.c[i];
    return false;
  }
};

inline IntVec operator+(const IntVec& a, const IntVec& b) {
  IntVec r = a;
  for (int i = 0; i < a.n; ++i)
    r.c[i] += b.c[i];
  return r;
}

inline IntVec operator-(const IntVec& a, const IntVec& b) {
  IntVec r = a;
  for (int i = 0; i < a.n; ++i)
    r.c[i] -= b.c[i];
  return r;
}

inline IntVec operator-(const IntVec& a) {
  IntVec r = a;
  for (int i = 0; i < a.n; ++i)
    r.c[i] = -r.c[i];
  return r;
}

inline IntVec operator*(std::int64_t k, const IntVec& a) {
  IntVec r = a;
  for (int i = 0; i < a.n; ++i)
    r.c[i] *= k;
  return r;
}

inline std::int64_t dot(const IntVec& a, const IntVec& b) {
  std::int64_t s = 0;
  for (int i = 0; i < a.n; ++i)
    s += a.c[i] * b.c[i];
  return s;
}

inline bool is_zero(const IntVec& a) {
  for (int i = 0; i < a.n; ++i)
    if (a.c[i] != 0)
      return false;
  return true;
}

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < v.n; ++i) {
      h ^= static_cast<std::uint64_t>(v.c[i]);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ v.n);
  }
};

// ---------------------------------------------------------------------------
// Rational vectors (low-volume exact coordinates: vertices, coweights, duals)

using RatVec = std::vector<Rational>;

inline RatVec rat_zero(int dim) { return RatVec(static_cast<std::size_t>(dim), Rational(0)); }

inline RatVec operator+(const RatVec& a, const RatVec& b) {
  RatVec r = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] += b[i];
  return r;
}

inline RatVec operator-(const RatVec& a, const RatVec& b) {
  RatVec r = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] -= b[i];
  return r;
}

inline RatVec operator*(const Rational& k, const RatVec& a) {
  RatVec r = a;
  for (auto& x : r)
    x *= k;
  return r;
}

inline Rational dot(const RatVec& a, const RatVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

inline Rational dot(const IntVec& a, const RatVec& b) {
  Rational s = 0;
  for (int i = 0; i < a.n; ++i)
    if (a.c[i] != 0)
      s += Rational(a.c[i]) * b[static_cast<std::size_t>(i)];
  return s;
}

// Exact rational linear solve (Gaussian elimination); returns false if the
// system is singular or inconsistent. a is m x n, rhs has length m; on
// success sol has length n (least-structured solution with free vars at 0).
inline bool solve_linear(std::vector<RatVec> a, RatVec rhs, RatVec& sol) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t pr = row;
    while (pr < m && a[pr][col] == 0)
      ++pr;
    if (pr == m)
      continue;
    std::swap(a[pr], a[row]);
    std::swap(rhs[pr], rhs[row]);
    const Rational inv = Rational(1) / a[row][col];
    for (std::size_t j = col; j < n; ++j)
      a[row][j] *= inv;
    rhs[row] *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || a[r][col] == 0)
        continue;
      const Rational f = a[r][col];
      for (std::size_t j = col; j < n; ++j)
        a[r][j] -= f * a[row][j];
      rhs[r] -= f * rhs[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < m; ++r)
    if (rhs[r] != 0)
      return false;
  sol = rat_zero(static_cast<int>(n));
  for (std::size_t r = 0; r < pivot_col.size(); ++r)
    sol[pivot_col[r]] = rhs[r];
  return true;
}

// ---------------------------------------------------------------------------
// Stable content hash for cache keys

inline std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace orbitbound

#endif
