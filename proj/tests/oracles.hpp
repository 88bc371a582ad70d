// Test-only oracles, kept independent of the library implementations they
// cross-check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "pathlat/order.hpp"
#include "pathlat/paths.hpp"
#include "pathlat/poset.hpp"

namespace oracle {

// Path count by an iterative column-major table (the library enumerates
// depth-first and counts with a memoized recursion; this is a third route).
inline std::uint64_t count_paths_table(const pathlat::path_family& fam, long long n) {
  using pathlat::family_kind;
  long long width = fam.width_of(n);
  std::vector<std::map<long long, std::uint64_t>> dp(static_cast<std::size_t>(width) + 1);
  dp[0][0] = 1;
  for (long long col = 0; col < width; ++col) {
    for (auto [h, c] : dp[static_cast<std::size_t>(col)]) {
      if (c == 0) continue;
      switch (fam.kind) {
        case family_kind::dyck_like:
          dp[static_cast<std::size_t>(col + 1)][h + fam.rise] += c;
          if (h >= fam.fall) dp[static_cast<std::size_t>(col + 1)][h - fam.fall] += c;
          break;
        case family_kind::motzkin:
          dp[static_cast<std::size_t>(col + 1)][h + 1] += c;
          dp[static_cast<std::size_t>(col + 1)][h] += c;
          if (h >= 1) dp[static_cast<std::size_t>(col + 1)][h - 1] += c;
          break;
        case family_kind::schroder:
          dp[static_cast<std::size_t>(col + 1)][h + 1] += c;
          if (h >= 1) dp[static_cast<std::size_t>(col + 1)][h - 1] += c;
          if (col + 2 <= width) dp[static_cast<std::size_t>(col + 2)][h] += c;
          break;
      }
    }
  }
  auto& last = dp[static_cast<std::size_t>(width)];
  auto it = last.find(0);
  return it == last.end() ? 0 : it->second;
}

// Covering pairs by the definition: x < y with nothing strictly between.
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> covers_by_definition(
    const pathlat::finite_poset& p) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (x == y || !p.leq(x, y)) continue;
      bool cover = true;
      for (std::size_t z = 0; z < p.size() && cover; ++z)
        if (z != x && z != y && p.leq(x, z) && p.leq(z, y)) cover = false;
      if (cover) out.emplace_back(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y));
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Geometric tunnel finder: every horizontal segment at ordinate k joining two
// path points with the path strictly above in between. Quadratic and naive.
struct geo_tunnel {
  long long height, x_start, x_end;
  friend bool operator==(const geo_tunnel& a, const geo_tunnel& b) {
    return a.height == b.height && a.x_start == b.x_start && a.x_end == b.x_end;
  }
  friend bool operator<(const geo_tunnel& a, const geo_tunnel& b) {
    if (a.height != b.height) return a.height < b.height;
    if (a.x_start != b.x_start) return a.x_start < b.x_start;
    return a.x_end < b.x_end;
  }
};

inline std::vector<geo_tunnel> tunnels_geometric(const pathlat::lattice_path& p) {
  const auto& h = p.heights();
  std::vector<geo_tunnel> out;
  long long width = p.width();
  // a width-1 segment with equal endpoint heights lies along a flat step
  for (long long x1 = 0; x1 < width; ++x1)
    for (long long x2 = x1 + 2; x2 <= width; ++x2) {
      long long k = h[static_cast<std::size_t>(x1)];
      if (h[static_cast<std::size_t>(x2)] != k) continue;
      bool above = true;
      for (long long m = x1 + 1; m < x2 && above; ++m)
        if (h[static_cast<std::size_t>(m)] <= k) above = false;
      if (above) out.push_back({k, x1, x2});
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
