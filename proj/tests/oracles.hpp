#ifndef ORBITBOUND_TEST_ORACLES_HPP
#define ORBITBOUND_TEST_ORACLES_HPP

// Test-only oracles, independent of the pruned search paths they check.

#include "orbitbound/enumeration.hpp"

#include <set>
#include <vector>

namespace obtest {

using namespace orbitbound;

// Brute-force box enumeration of all nonzero highest weights with
// real_dim <= bound. Each axis is capped at the largest c with
// weyl_dim(c * lambda_i) <= bound, which bounds the feasible box because the
// dimension grows in every coefficient; inside the box every point is
// evaluated with no pruning. With `literal_box` the axis caps are replaced by
// the bound itself (only sensible at very small rank).
inline std::set<std::vector<std::int64_t>> box_enumerate(const RootSystem& rs, std::int64_t bound,
                                                         bool literal_box = false) {
  const int n = rs.rank();
  std::vector<std::int64_t> caps(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (literal_box) {
      caps[static_cast<std::size_t>(i)] = bound;
      continue;
    }
    std::vector<std::int64_t> axis(static_cast<std::size_t>(n), 0);
    std::int64_t c = 0;
    while (true) {
      axis[static_cast<std::size_t>(i)] = c + 1;
      if (weyl_dim(rs, {rs.type, axis}) > bound)
        break;
      ++c;
    }
    caps[static_cast<std::size_t>(i)] = c;
  }

  std::set<std::vector<std::int64_t>> found;
  std::vector<std::int64_t> cur(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      bool zero = true;
      for (auto c : cur)
        zero &= (c == 0);
      if (zero)
        return;
      if (real_dim(rs, {rs.type, cur}) <= bound)
        found.insert(cur);
      return;
    }
    for (std::int64_t v = 0; v <= caps[static_cast<std::size_t>(pos)]; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1);
    }
    cur[static_cast<std::size_t>(pos)] = 0;
  };
  rec(0);
  return found;
}

}  // namespace obtest

#endif
