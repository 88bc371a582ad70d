#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pathlat/order.hpp"
#include "pathlat/paths.hpp"
#include "pathlat/poset.hpp"

namespace pathlat {

// ---------------------------------------------------------------------------
// Canonical spectrum descriptions

// A join-irreducible named by the interval its single pyramid spans. For
// Schroder lattices the same interval carries two join-irreducibles: a peaked
// one and a flat-topped one; the flat sits below the peak.
struct interval_label {
  int i = 0;
  int j = 0;
  enum flavor_t { peak, flat } flavor = peak;

  std::string str() const {
    std::string s = "(" + std::to_string(i) + "," + std::to_string(j);
    if (flavor == flat) s += ",flat";
    return s + ")";
  }
};

/// Order on labels: interval containment; on equal intervals flat < peak.
inline bool label_leq(const interval_label& u, const interval_label& v) {
  if (!(v.i <= u.i && u.j <= v.j)) return false;
  if (u.i == v.i && u.j == v.j)
    return u.flavor == v.flavor || (u.flavor == interval_label::flat && v.flavor == interval_label::peak);
  return true;
}

using labelled_spectrum = std::vector<std::pair<interval_label, lattice_path>>;

/// Join-irreducibles of D_n: (UD)^i U^{j-i} D^{j-i} (UD)^{n-j} for
/// 0 <= i <= j-2, j <= n.
inline labelled_spectrum dyck_spectrum_labels(int n) {
  labelled_spectrum out;
  auto fam = path_family::dyck();
  for (int i = 0; i + 2 <= n; ++i)
    for (int j = i + 2; j <= n; ++j) {
      std::string s;
      for (int t = 0; t < i; ++t) s += "UD";
      s.append(static_cast<std::size_t>(j - i), 'U');
      s.append(static_cast<std::size_t>(j - i), 'D');
      for (int t = 0; t < n - j; ++t) s += "UD";
      out.push_back({interval_label{i, j}, validate(fam, s)});
    }
  return out;
}

/// Join-irreducibles of M_n: H^i U^{k+1} D^{k+1} H^{n-j} where j-i = 2k+2.
inline labelled_spectrum motzkin_spectrum_labels(int n) {
  labelled_spectrum out;
  auto fam = path_family::motzkin();
  for (int i = 0; i <= n; ++i)
    for (int j = i + 2; j <= n; j += 2) {
      int k = (j - i - 2) / 2;
      std::string s(static_cast<std::size_t>(i), 'H');
      s.append(static_cast<std::size_t>(k + 1), 'U');
      s.append(static_cast<std::size_t>(k + 1), 'D');
      s.append(static_cast<std::size_t>(n - j), 'H');
      out.push_back({interval_label{i, j}, validate(fam, s)});
    }
  return out;
}

/// Join-irreducibles of S_n: peaked (HH)^i U^{j-i} D^{j-i} (HH)^{n-j} for
/// 0 <= i < j <= n, and flat-topped (HH)^i U^{j-i-1} HH D^{j-i-1} (HH)^{n-j}
/// for j - i >= 2.
inline labelled_spectrum schroder_spectrum_labels(int n) {
  labelled_spectrum out;
  auto fam = path_family::schroder();
  auto flats = [](int count) { return std::string(static_cast<std::size_t>(2 * count), 'H'); };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::string s = flats(i);
      s.append(static_cast<std::size_t>(j - i), 'U');
      s.append(static_cast<std::size_t>(j - i), 'D');
      s += flats(n - j);
      out.push_back({interval_label{i, j, interval_label::peak}, validate(fam, s)});
      if (j - i >= 2) {
        std::string f = flats(i);
        f.append(static_cast<std::size_t>(j - i - 1), 'U');
        f += "HH";
        f.append(static_cast<std::size_t>(j - i - 1), 'D');
        f += flats(n - j);
        out.push_back({interval_label{i, j, interval_label::flat}, validate(fam, f)});
      }
    }
  return out;
}

inline labelled_spectrum spectrum_labels(const path_family& fam, int n) {
  switch (fam.kind) {
    case family_kind::dyck_like:
      if (!fam.is_dyck())
        raise(errc::bad_argument, "canonical labels exist for (1,1) only; use point_poset");
      return dyck_spectrum_labels(n);
    case family_kind::motzkin: return motzkin_spectrum_labels(n);
    case family_kind::schroder: return schroder_spectrum_labels(n);
  }
  return {};
}

/// The labelled spectrum as a poset of its own (no lattice required).
inline finite_poset label_poset(const labelled_spectrum& ls) {
  std::vector<std::string> labels;
  labels.reserve(ls.size());
  for (const auto& [lab, p] : ls) labels.push_back(lab.str());
  return finite_poset::from_leq(
      ls.size(), [&](std::size_t u, std::size_t v) { return label_leq(ls[u].first, ls[v].first); },
      std::move(labels));
}

struct check_result {
  bool ok = true;
  std::string detail;
};

/// The canonical labelled paths are exactly the join-irreducibles of the
/// built lattice, and label containment is the induced order.
inline check_result verify_spectrum_labels(const path_lattice& lat) {
  check_result res;
  auto ls = spectrum_labels(lat.family(), static_cast<int>(lat.n()));
  auto jis = join_irreducibles(lat);
  if (ls.size() != jis.size()) {
    res.ok = false;
    res.detail = "label count " + std::to_string(ls.size()) + " != join-irreducible count " +
                 std::to_string(jis.size());
    return res;
  }
  std::unordered_map<std::string, std::size_t> ji_set;
  for (auto t : jis) ji_set.emplace(lat.element(t).steps(), t);
  for (const auto& [lab, p] : ls)
    if (!ji_set.count(p.steps())) {
      res.ok = false;
      res.detail = "labelled path " + p.steps() + " (" + lab.str() + ") is not join-irreducible";
      return res;
    }
  for (std::size_t u = 0; u < ls.size(); ++u)
    for (std::size_t v = 0; v < ls.size(); ++v) {
      bool by_label = label_leq(ls[u].first, ls[v].first);
      bool by_path = lat.leq(ji_set.at(ls[u].second.steps()), ji_set.at(ls[v].second.steps()));
      if (by_label != by_path) {
        res.ok = false;
        res.detail = "order mismatch between " + ls[u].first.str() + " and " + ls[v].first.str();
        return res;
      }
    }
  return res;
}

// ---------------------------------------------------------------------------
// Oriented intervals and the lexicographic-product construction

struct oriented_interval {
  int lo = 0, hi = 0;
  bool positive = true;  // singletons are stored positive; they have one orientation
  std::string str() const {
    std::string s = "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
    if (lo != hi) s += positive ? "+" : "-";
    return s;
  }
};

/// Oriented intervals of the chain C_{n-1} (n elements): I <= J iff I is
/// strictly contained in J, or they are equal as intervals and I is negative
/// while J is positive.
inline finite_poset oriented_interval_poset(int n, std::vector<oriented_interval>* out = nullptr) {
  if (n < 0) raise(errc::bad_argument, "negative chain size");
  std::vector<oriented_interval> elems;
  for (int lo = 0; lo < n; ++lo)
    for (int hi = lo; hi < n; ++hi) {
      elems.push_back({lo, hi, true});
      if (lo < hi) elems.push_back({lo, hi, false});
    }
  std::vector<std::string> labels;
  for (const auto& e : elems) labels.push_back(e.str());
  auto leq = [&](std::size_t a, std::size_t b) {
    const auto& x = elems[a];
    const auto& y = elems[b];
    if (x.lo == y.lo && x.hi == y.hi) return x.positive == y.positive || (!x.positive && y.positive);
    return y.lo <= x.lo && x.hi <= y.hi;
  };
  auto p = finite_poset::from_leq(elems.size(), leq, std::move(labels));
  if (out) *out = std::move(elems);
  return p;
}

/// Spec(S_n) as oriented intervals of C_{n-1}: positive [i,j] is the peaked
/// join-irreducible on (i, j+1), negative [i,j] the flat one.
inline check_result verify_schroder_oriented_intervals(int n) {
  check_result res;
  std::vector<oriented_interval> elems;
  auto oip = oriented_interval_poset(n, &elems);
  auto ls = schroder_spectrum_labels(n);
  auto spec = label_poset(ls);
  if (oip.size() != spec.size()) {
    res.ok = false;
    res.detail = "size mismatch";
    return res;
  }
  std::unordered_map<std::string, std::uint32_t> by_label;
  for (std::size_t t = 0; t < ls.size(); ++t) by_label.emplace(ls[t].first.str(), static_cast<std::uint32_t>(t));
  std::vector<std::uint32_t> map(elems.size());
  for (std::size_t e = 0; e < elems.size(); ++e) {
    interval_label lab{elems[e].lo, elems[e].hi + 1,
                       elems[e].positive ? interval_label::peak : interval_label::flat};
    auto it = by_label.find(lab.str());
    if (it == by_label.end()) {
      res.ok = false;
      res.detail = "no spectrum label for " + elems[e].str();
      return res;
    }
    map[e] = it->second;
  }
  iso_counterexample why;
  if (!verify_iso(map, oip, spec, &why)) {
    res.ok = false;
    res.detail = "not an isomorphism: " + why.reason;
  }
  return res;
}

/// Spec(S_n) is Spec(D_{n+1}) o C_1 with the minimal elements removed.
inline check_result verify_schroder_lex_product(int n) {
  check_result res;
  auto dyck_ls = dyck_spectrum_labels(n + 1);
  auto dyck_spec = label_poset(dyck_ls);
  auto prod = lex_product(dyck_spec, chain(1));
  auto minimal = prod.minimal_elements();
  std::vector<char> is_min(prod.size(), 0);
  for (auto m : minimal) is_min[m] = 1;
  std::vector<std::uint32_t> keep;
  for (std::size_t i = 0; i < prod.size(); ++i)
    if (!is_min[i]) keep.push_back(static_cast<std::uint32_t>(i));
  auto trimmed = prod.induced(keep);

  auto ls = schroder_spectrum_labels(n);
  auto spec = label_poset(ls);
  if (trimmed.size() != spec.size()) {
    res.ok = false;
    res.detail = "size mismatch: " + std::to_string(trimmed.size()) + " vs " + std::to_string(spec.size());
    return res;
  }
  std::unordered_map<std::string, std::uint32_t> by_label;
  for (std::size_t t = 0; t < ls.size(); ++t) by_label.emplace(ls[t].first.str(), static_cast<std::uint32_t>(t));
  std::vector<std::uint32_t> map(keep.size());
  for (std::size_t e = 0; e < keep.size(); ++e) {
    std::size_t src = keep[e];
    const auto& dl = dyck_ls[src / 2].first;  // lex_product index = i*|C1| + c
    bool upper = (src % 2) == 1;
    interval_label lab{dl.i, dl.j - 1, upper ? interval_label::peak : interval_label::flat};
    auto it = by_label.find(lab.str());
    if (it == by_label.end()) {
      res.ok = false;
      res.detail = "no spectrum label for product element " + prod.label(src);
      return res;
    }
    map[e] = it->second;
  }
  iso_counterexample why;
  if (!verify_iso(map, trimmed, spec, &why)) {
    res.ok = false;
    res.detail = "not an isomorphism: " + why.reason;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Partitions and the Young-lattice correspondence

struct partition {
  std::vector<long long> parts;  // weakly decreasing, positive

  partition() = default;
  explicit partition(std::vector<long long> raw) {
    for (auto v : raw) {
      if (v < 0) raise(errc::bad_argument, "negative part");
      if (v > 0) parts.push_back(v);
    }
    PATHLAT_REQUIRE(std::is_sorted(parts.rbegin(), parts.rend()), "parts not weakly decreasing");
  }

  long long weight() const { return std::accumulate(parts.begin(), parts.end(), 0ll); }
  std::size_t count() const { return parts.size(); }
  bool empty() const { return parts.empty(); }

  bool contains(const partition& other) const {
    if (other.parts.size() > parts.size()) return false;
    for (std::size_t i = 0; i < other.parts.size(); ++i)
      if (other.parts[i] > parts[i]) return false;
    return true;
  }

  partition conjugate() const {
    partition c;
    if (parts.empty()) return c;
    for (long long col = 1; col <= parts[0]; ++col) {
      long long rows = 0;
      for (auto p : parts)
        if (p >= col) ++rows;
      c.parts.push_back(rows);
    }
    return c;
  }

  std::string str() const {
    if (parts.empty()) return "()";
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts[i]);
    }
    return s;
  }

  friend bool operator==(const partition& a, const partition& b) { return a.parts == b.parts; }
};

/// The staircase-like partition of D_n^{(a,b)} for coprime a, b:
/// parts are lambda_{h,k} = (h-1)a + floor((k-1) a / b), listed for
/// h = n..2 with k = b..1 and h = 1 with k = b..2, zero parts dropped.
inline partition lambda_partition_coprime(long long a, long long b, long long n) {
  if (a < 1 || b < 1 || n < 0) raise(errc::bad_argument, "lambda_partition arguments");
  if (std::gcd(a, b) != 1) raise(errc::not_coprime, "gcd(a,b) != 1");
  std::vector<long long> raw;
  for (long long h = n; h >= 1; --h)
    for (long long k = b; k >= (h == 1 ? 2 : 1); --k) raw.push_back((h - 1) * a + (k - 1) * a / b);
  return partition(std::move(raw));
}

/// General (a, b): reduce by the gcd first; the reduced lattice is the same
/// poset with heights scaled.
inline partition lambda_partition(long long a, long long b, long long n) {
  long long g = std::gcd(a, b);
  return lambda_partition_coprime(a / g, b / g, n);
}

/// The partition of a Dyck-like path: conjugate of (U_total - d_x(j))_j where
/// d_x(j) counts up steps before the j-th down step. Antitone bijection onto
/// the subdiagram lattice of lambda: the minimum maps to lambda itself, the
/// maximum to the empty partition, and weight(partition(x)) + rank(x) is
/// constant.
inline partition path_to_partition(const lattice_path& p) {
  if (p.family().kind != family_kind::dyck_like)
    raise(errc::bad_argument, "path_to_partition needs a Dyck-like path");
  long long total_u = 0;
  for (char c : p.steps())
    if (c == 'U') ++total_u;
  std::vector<long long> psi;
  long long u = 0;
  for (char c : p.steps()) {
    if (c == 'U') ++u;
    else psi.push_back(total_u - u);
  }
  return partition(std::move(psi)).conjugate();
}

namespace detail {
// Emits the current positive prefix, then extends it row by row. Every
// subdiagram is produced exactly once (trailing zero rows are never stored).
inline void enumerate_subdiagrams_rec(const std::vector<long long>& bound, std::size_t row,
                                      long long prev, std::vector<long long>& cur,
                                      std::vector<partition>& out) {
  out.push_back(partition(cur));
  if (row == bound.size()) return;
  long long cap = std::min(prev, bound[row]);
  for (long long v = 1; v <= cap; ++v) {
    cur.push_back(v);
    enumerate_subdiagrams_rec(bound, row + 1, v, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

/// All partitions contained in lambda (the elements of the Young lattice
/// Y_lambda), enumerated independently of any path machinery.
inline std::vector<partition> subdiagrams_of(const partition& lambda) {
  std::vector<partition> out;
  std::vector<long long> cur;
  long long first = lambda.parts.empty() ? 0 : lambda.parts[0];
  detail::enumerate_subdiagrams_rec(lambda.parts, 0, first, cur, out);
  return out;
}

/// Full check of the duality with the Young lattice Y_lambda:
/// path_to_partition is a bijection D_n^{(a,b)} -> { alpha <= lambda } that
/// reverses order, sends the minimum to lambda, and drops exactly one cell
/// across every covering pair.
inline check_result verify_young_duality(long long a, long long b, long long n,
                                         std::uint64_t guard = k_default_guard) {
  check_result res;
  auto fail = [&](std::string why) {
    res.ok = false;
    res.detail = std::move(why);
    return res;
  };
  path_lattice lat(path_family::dyck_like(static_cast<int>(a), static_cast<int>(b)), n, guard);
  partition lambda = lambda_partition(a, b, n);
  std::vector<partition> img;
  img.reserve(lat.size());
  for (std::size_t i = 0; i < lat.size(); ++i) img.push_back(path_to_partition(lat.element(i)));

  if (!(img[lat.bottom()] == lambda)) return fail("minimum does not map to lambda");
  if (!img[lat.top()].empty()) return fail("maximum does not map to the empty partition");

  auto all = subdiagrams_of(lambda);
  if (all.size() != lat.size())
    return fail("Y_lambda has " + std::to_string(all.size()) + " elements, lattice has " +
                std::to_string(lat.size()));
  std::vector<std::string> seen;
  for (const auto& q : img) {
    if (!lambda.contains(q)) return fail("image " + q.str() + " is not inside lambda");
    seen.push_back(q.str());
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    return fail("path_to_partition is not injective");

  for (std::size_t x = 0; x < lat.size(); ++x)
    for (std::size_t y = 0; y < lat.size(); ++y)
      if (lat.leq(x, y) != img[x].contains(img[y]))
        return fail("order reversal fails at (" + lat.element(x).steps() + ", " +
                    lat.element(y).steps() + ")");

  for (auto [x, y] : lat.poset().cover_pairs())
    if (!(img[x].contains(img[y]) && img[x].weight() == img[y].weight() + 1))
      return fail("cover does not remove exactly one cell");

  for (std::size_t x = 0; x < lat.size(); ++x)
    if (img[x].weight() + lat.rank(x) != lambda.weight())
      return fail("weight/rank identity fails at " + lat.element(x).steps());
  return res;
}

// ---------------------------------------------------------------------------
// The point poset of Theorem-style representation

struct lattice_point {
  long long x = 0;       // abscissa of the pyramid vertex
  long long y = 0;       // ordinate in the unit-step (slanted) picture
  long long ups = 0;     // up steps before the vertex
  long long downs = 0;   // down steps before the vertex
};

/// Abscissas of the pyramids of a Dyck-like path: maximal U^r D^s factors
/// whose peak can be lowered into U^{r-1} D U D^{s-1} without leaving the
/// family. Join-irreducibles have exactly one.
inline std::vector<long long> pyramid_apexes(const lattice_path& p) {
  if (p.family().kind != family_kind::dyck_like)
    raise(errc::bad_argument, "pyramids are defined for Dyck-like paths");
  const std::string& s = p.steps();
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != 'U') {
      ++i;
      continue;
    }
    std::size_t r = 0, k = i;
    while (k < s.size() && s[k] == 'U') ++k, ++r;
    std::size_t d = 0, m = k;
    while (m < s.size() && s[m] == 'D') ++m, ++d;
    if (d > 0) {
      long long h0 = p.height_at(static_cast<long long>(i));
      if (h0 + (static_cast<long long>(r) - 1) * p.family().rise - p.family().fall >= 0)
        out.push_back(static_cast<long long>(k));
    }
    i = m;
  }
  return out;
}

struct point_poset_result {
  std::vector<lattice_point> points;
  finite_poset poset;
  bool matches_spectrum = false;
  bool region_ok = false;
  std::string detail;
};

/// Builds P_n^{(a,b)} from the join-irreducibles (one point per unique
/// pyramid vertex), orders it by pyramid containment, and checks the region
/// constraints x <= n*ell, y <= x, y <= -x + 2nb/gcd, (a+b) y >= (b-a) x.
inline point_poset_result point_poset(long long a, long long b, long long n,
                                      std::uint64_t guard = k_default_guard) {
  point_poset_result res;
  path_lattice lat(path_family::dyck_like(static_cast<int>(a), static_cast<int>(b)), n, guard);
  auto fam = lat.family();
  long long ca = fam.rise, cb = fam.fall;  // canonical a >= b
  auto jis = join_irreducibles(lat);
  std::vector<std::string> labels;
  for (auto t : jis) {
    const auto& p = lat.element(t);
    auto apexes = pyramid_apexes(p);
    PATHLAT_REQUIRE(apexes.size() == 1, "join-irreducible without a unique pyramid");
    long long ax = apexes[0];
    long long u = 0, d = 0;
    for (long long c = 0; c < ax; ++c) (p.steps()[static_cast<std::size_t>(c)] == 'U' ? u : d)++;
    res.points.push_back({ax, u - d, u, d});
    labels.push_back("(" + std::to_string(ax) + "," + std::to_string(u - d) + ")");
  }
  res.poset = finite_poset::from_leq(
      res.points.size(),
      [&](std::size_t s, std::size_t t) {
        return res.points[s].ups <= res.points[t].ups && res.points[s].downs >= res.points[t].downs;
      },
      std::move(labels));

  res.matches_spectrum = true;
  for (std::size_t s = 0; s < jis.size() && res.matches_spectrum; ++s)
    for (std::size_t t = 0; t < jis.size(); ++t)
      if (res.poset.leq(s, t) != lat.leq(jis[s], jis[t])) {
        res.matches_spectrum = false;
        res.detail = "point order disagrees with the spectrum at (" + lat.element(jis[s]).steps() +
                     ", " + lat.element(jis[t]).steps() + ")";
        break;
      }

  long long g = std::gcd(ca, cb);
  res.region_ok = true;
  for (const auto& pt : res.points) {
    bool ok = pt.x >= 0 && pt.x <= n * ell(ca, cb) && pt.y <= pt.x &&
              pt.y <= -pt.x + 2 * n * cb / g && (ca + cb) * pt.y >= (cb - ca) * pt.x;
    if (!ok) {
      res.region_ok = false;
      res.detail += std::string(res.detail.empty() ? "" : "; ") + "point (" +
                    std::to_string(pt.x) + "," + std::to_string(pt.y) + ") outside the region";
      break;
    }
  }
  return res;
}

}  // namespace pathlat
