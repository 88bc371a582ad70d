#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pathlat/errors.hpp"
#include "pathlat/rational.hpp"

namespace pathlat {

inline constexpr std::uint64_t k_default_guard = 20000;

enum class family_kind { dyck_like, motzkin, schroder };

/// ell(a, b) = (a + b) / gcd(a, b): the length of the primitive path of the
/// (a, b) family; every path width is a multiple of it.
inline long long ell(long long a, long long b) {
  if (a < 1 || b < 1) raise(errc::bad_argument, "ell requires positive a, b");
  return (a + b) / std::gcd(a, b);
}

// A step alphabet. Dyck-like paths use up steps (1, a) and down steps (1, -b);
// Motzkin adds unit flats, Schroder uses double flats stored as two H letters.
// Dyck-like families are normalized to a >= b (the two orientations give
// isomorphic lattices; `swapped` records when the caller passed a < b).
struct path_family {
  family_kind kind = family_kind::dyck_like;
  int rise = 1;  // a
  int fall = 1;  // b
  bool swapped = false;

  static path_family dyck() { return dyck_like(1, 1); }

  static path_family dyck_like(int a, int b) {
    if (a < 1 || b < 1) raise(errc::bad_argument, "dyck_like requires a >= 1 and b >= 1");
    path_family f;
    f.kind = family_kind::dyck_like;
    if (a >= b) {
      f.rise = a;
      f.fall = b;
    } else {
      f.rise = b;
      f.fall = a;
      f.swapped = true;
    }
    return f;
  }

  static path_family motzkin() {
    path_family f;
    f.kind = family_kind::motzkin;
    return f;
  }

  static path_family schroder() {
    path_family f;
    f.kind = family_kind::schroder;
    return f;
  }

  bool is_dyck() const { return kind == family_kind::dyck_like && rise == 1 && fall == 1; }

  /// Width in unit columns of a size-n path.
  long long width_of(long long n) const {
    switch (kind) {
      case family_kind::dyck_like: return n * ell(rise, fall);
      case family_kind::motzkin: return n;
      case family_kind::schroder: return 2 * n;
    }
    return 0;
  }

  /// Inverse of width_of; errors when the width is not a valid size multiple.
  long long size_of_width(long long width) const {
    long long unit = kind == family_kind::dyck_like ? ell(rise, fall)
                     : kind == family_kind::schroder ? 2
                                                     : 1;
    if (width % unit != 0) raise(errc::bad_argument, "width is not a multiple of the family unit");
    return width / unit;
  }

  std::string name() const {
    switch (kind) {
      case family_kind::dyck_like:
        if (rise == 1 && fall == 1) return "dyck";
        return "dycklike:" + std::to_string(rise) + "," + std::to_string(fall);
      case family_kind::motzkin: return "motzkin";
      case family_kind::schroder: return "schroder";
    }
    return "?";
  }

  friend bool operator==(const path_family& x, const path_family& y) {
    if (x.kind != y.kind) return false;
    if (x.kind != family_kind::dyck_like) return true;
    return x.rise == y.rise && x.fall == y.fall;
  }
};

// A validated step sequence with its cached height profile. heights[k] is the
// ordinate after k columns; heights.front() == heights.back() == 0 and no
// height is negative. Immutable after construction.
class lattice_path {
 public:
  lattice_path() = default;

  const path_family& family() const { return family_; }
  const std::string& steps() const { return steps_; }
  const std::vector<long long>& heights() const { return heights_; }
  long long width() const { return static_cast<long long>(steps_.size()); }
  long long size() const { return family_.size_of_width(width()); }
  long long height_at(long long k) const { return heights_[static_cast<std::size_t>(k)]; }

  friend bool operator==(const lattice_path& x, const lattice_path& y) {
    return x.family_ == y.family_ && x.steps_ == y.steps_;
  }

 private:
  friend lattice_path validate(const path_family&, std::string_view);
  path_family family_;
  std::string steps_;
  std::vector<long long> heights_;
};

/// Checks a step string against the family rules and returns the path with
/// its height profile. Schroder flats must appear as letter pairs: every
/// maximal H run has even length, and the run is read two letters per (2,0)
/// step.
inline lattice_path validate(const path_family& fam, std::string_view steps) {
  std::vector<long long> heights;
  heights.reserve(steps.size() + 1);
  heights.push_back(0);
  long long h = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    char c = steps[i];
    switch (c) {
      case 'U': h += fam.kind == family_kind::dyck_like ? fam.rise : 1; break;
      case 'D': h -= fam.kind == family_kind::dyck_like ? fam.fall : 1; break;
      case 'H':
        if (fam.kind == family_kind::dyck_like)
          raise(errc::illegal_step, "H step in a Dyck-like path");
        break;
      default:
        raise(errc::illegal_step, std::string("unknown step letter '") + c + "'");
    }
    if (h < 0) raise(errc::below_axis, "height " + std::to_string(h) + " after column " + std::to_string(i + 1));
    heights.push_back(h);
  }
  if (h != 0) raise(errc::nonzero_endpoint, "path ends at height " + std::to_string(h));
  if (fam.kind == family_kind::schroder) {
    std::size_t i = 0;
    while (i < steps.size()) {
      if (steps[i] != 'H') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < steps.size() && steps[j] == 'H') ++j;
      if ((j - i) % 2 != 0)
        raise(errc::unpaired_flat, "H run of odd length at column " + std::to_string(i));
      i = j;
    }
  }
  if (fam.kind == family_kind::dyck_like && steps.size() % ell(fam.rise, fam.fall) != 0)
    raise(errc::bad_argument, "width is not a multiple of ell(a,b)");
  lattice_path p;
  p.family_ = fam;
  p.steps_ = std::string(steps);
  p.heights_ = std::move(heights);
  return p;
}

/// Rebuilds the step string of a height profile, or errors when no legal step
/// sequence produces it.
inline lattice_path path_from_heights(const path_family& fam, const std::vector<long long>& heights) {
  PATHLAT_REQUIRE(!heights.empty(), "empty height profile");
  std::string steps;
  steps.reserve(heights.size() - 1);
  for (std::size_t k = 0; k + 1 < heights.size(); ++k) {
    long long d = heights[k + 1] - heights[k];
    if (fam.kind == family_kind::dyck_like) {
      if (d == fam.rise) steps.push_back('U');
      else if (d == -fam.fall) steps.push_back('D');
      else raise(errc::illegal_step, "height difference " + std::to_string(d));
    } else {
      if (d == 1) steps.push_back('U');
      else if (d == -1) steps.push_back('D');
      else if (d == 0) steps.push_back('H');
      else raise(errc::illegal_step, "height difference " + std::to_string(d));
    }
  }
  return validate(fam, steps);
}

/// Bottom element of the size-n lattice. Dyck-like: one up step, then as many
/// down steps as stay on or above the axis, repeated. Motzkin: H^n.
/// Schroder: H^(2n).
inline lattice_path minimum_path(const path_family& fam, long long n) {
  if (n < 0) raise(errc::bad_argument, "negative size");
  switch (fam.kind) {
    case family_kind::motzkin: return validate(fam, std::string(static_cast<std::size_t>(n), 'H'));
    case family_kind::schroder: return validate(fam, std::string(static_cast<std::size_t>(2 * n), 'H'));
    case family_kind::dyck_like: break;
  }
  std::string steps;
  long long width = fam.width_of(n);
  long long h = 0;
  while (static_cast<long long>(steps.size()) < width) {
    steps.push_back('U');
    h += fam.rise;
    while (h >= fam.fall) {
      steps.push_back('D');
      h -= fam.fall;
    }
  }
  return validate(fam, steps);
}

/// Top element: all up steps first. Motzkin keeps a single middle flat for
/// odd n; Schroder is U^n D^n.
inline lattice_path maximum_path(const path_family& fam, long long n) {
  if (n < 0) raise(errc::bad_argument, "negative size");
  std::string steps;
  switch (fam.kind) {
    case family_kind::dyck_like: {
      long long g = std::gcd(fam.rise, fam.fall);
      steps.append(static_cast<std::size_t>(n * fam.fall / g), 'U');
      steps.append(static_cast<std::size_t>(n * fam.rise / g), 'D');
      break;
    }
    case family_kind::motzkin:
      steps.append(static_cast<std::size_t>(n / 2), 'U');
      if (n % 2) steps.push_back('H');
      steps.append(static_cast<std::size_t>(n / 2), 'D');
      break;
    case family_kind::schroder:
      steps.append(static_cast<std::size_t>(n), 'U');
      steps.append(static_cast<std::size_t>(n), 'D');
      break;
  }
  return validate(fam, steps);
}

namespace detail {

// Can a partial path at `height` with `remaining` columns still return to 0?
inline bool completable(const path_family& fam, long long height, long long remaining) {
  switch (fam.kind) {
    case family_kind::dyck_like: {
      long long t = fam.fall * remaining - height;
      if (t < 0 || t % (fam.rise + fam.fall) != 0) return false;
      long long ups = t / (fam.rise + fam.fall);
      return ups >= 0 && ups <= remaining;
    }
    case family_kind::motzkin: return height <= remaining;
    case family_kind::schroder: return height <= remaining && (remaining - height) % 2 == 0;
  }
  return false;
}

struct pos_height_hash {
  std::size_t operator()(const std::pair<long long, long long>& k) const {
    return std::hash<long long>()(k.first * 1000003 + k.second);
  }
};

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  constexpr std::uint64_t cap = std::numeric_limits<std::uint64_t>::max() / 2;
  std::uint64_t s = a + b;
  return s > cap ? cap : s;
}

inline std::uint64_t count_rec(
    const path_family& fam, long long remaining, long long height,
    std::unordered_map<std::pair<long long, long long>, std::uint64_t, pos_height_hash>& memo) {
  if (remaining == 0) return height == 0 ? 1 : 0;
  if (!completable(fam, height, remaining)) return 0;
  auto key = std::make_pair(remaining, height);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::uint64_t total = 0;
  if (fam.kind == family_kind::dyck_like) {
    total = saturating_add(total, count_rec(fam, remaining - 1, height + fam.rise, memo));
    if (height >= fam.fall)
      total = saturating_add(total, count_rec(fam, remaining - 1, height - fam.fall, memo));
  } else if (fam.kind == family_kind::motzkin) {
    total = saturating_add(total, count_rec(fam, remaining - 1, height + 1, memo));
    total = saturating_add(total, count_rec(fam, remaining - 1, height, memo));
    if (height >= 1) total = saturating_add(total, count_rec(fam, remaining - 1, height - 1, memo));
  } else {
    total = saturating_add(total, count_rec(fam, remaining - 1, height + 1, memo));
    if (remaining >= 2) total = saturating_add(total, count_rec(fam, remaining - 2, height, memo));
    if (height >= 1) total = saturating_add(total, count_rec(fam, remaining - 1, height - 1, memo));
  }
  memo.emplace(key, total);
  return total;
}

}  // namespace detail

/// Number of size-n paths via a memoized recurrence on (position, height).
/// Saturates near 2^63 instead of overflowing.
inline std::uint64_t count_paths(const path_family& fam, long long n) {
  if (n < 0) raise(errc::bad_argument, "negative size");
  std::unordered_map<std::pair<long long, long long>, std::uint64_t, detail::pos_height_hash> memo;
  return detail::count_rec(fam, fam.width_of(n), 0, memo);
}

/// All size-n paths in canonical order: lexicographic on step strings with
/// U < H < D. Depth-first generation with non-negativity pruning.
inline std::vector<lattice_path> enumerate_paths(const path_family& fam, long long n,
                                                 std::uint64_t guard = k_default_guard) {
  if (n < 0) raise(errc::bad_argument, "negative size");
  std::uint64_t total = count_paths(fam, n);
  if (total > guard)
    raise(errc::size_limit_exceeded,
          fam.name() + " n=" + std::to_string(n) + " has " + std::to_string(total) +
              " paths, guard is " + std::to_string(guard));
  std::vector<lattice_path> out;
  out.reserve(total);
  long long width = fam.width_of(n);
  std::string cur;
  cur.reserve(static_cast<std::size_t>(width));
  std::function<void(long long)> rec = [&](long long h) {
    long long remaining = width - static_cast<long long>(cur.size());
    if (!detail::completable(fam, h, remaining)) return;
    if (remaining == 0) {
      out.push_back(validate(fam, cur));
      return;
    }
    // candidate order U, H, D = canonical lexicographic output order
    if (fam.kind == family_kind::dyck_like) {
      cur.push_back('U');
      rec(h + fam.rise);
      cur.pop_back();
      if (h >= fam.fall) {
        cur.push_back('D');
        rec(h - fam.fall);
        cur.pop_back();
      }
      return;
    }
    cur.push_back('U');
    rec(h + 1);
    cur.pop_back();
    if (fam.kind == family_kind::motzkin) {
      cur.push_back('H');
      rec(h);
      cur.pop_back();
    } else if (remaining >= 2) {
      cur.append("HH");
      rec(h);
      cur.erase(cur.size() - 2);
    }
    if (h >= 1) {
      cur.push_back('D');
      rec(h - 1);
      cur.pop_back();
    }
  };
  rec(0);
  PATHLAT_REQUIRE(out.size() == total, "enumeration disagrees with path count");
  return out;
}

/// Twice the area below the path (an exact integer).
inline long long area_twice(const lattice_path& p) {
  long long acc = 0;
  const auto& h = p.heights();
  for (std::size_t k = 0; k + 1 < h.size(); ++k) acc += h[k] + h[k + 1];
  return acc;
}

/// Area of the region between the path and the x-axis, as an exact rational.
inline rational area(const lattice_path& p) { return rational(area_twice(p), 2); }

/// Rank in the containment lattice. Dyck-like: (A(x) - A(min)) / (a + b);
/// Motzkin and Schroder: A(x). Always a non-negative integer.
inline long long rank_of(const lattice_path& p) {
  const path_family& fam = p.family();
  if (fam.kind == family_kind::dyck_like) {
    lattice_path bottom = minimum_path(fam, p.size());
    long long num = area_twice(p) - area_twice(bottom);
    long long den = 2 * (fam.rise + fam.fall);
    if (num < 0 || num % den != 0)
      raise(errc::non_integral_rank, "area difference " + std::to_string(num) + " vs " + std::to_string(den));
    return num / den;
  }
  long long tw = area_twice(p);
  if (tw % 2 != 0) raise(errc::non_integral_rank, "odd twice-area " + std::to_string(tw));
  return tw / 2;
}

}  // namespace pathlat
