#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pathlat/order.hpp"
#include "pathlat/paths.hpp"
#include "pathlat/poset.hpp"
#include "pathlat/spectrum.hpp"

namespace pathlat {

// ---------------------------------------------------------------------------
// Tunnels and step statistics

// A maximal horizontal segment at ordinate `height` meeting the path only at
// its two endpoints, with the path strictly above in between.
struct tunnel {
  long long height = 0;
  long long x_start = 0;
  long long x_end = 0;
  friend bool operator==(const tunnel& a, const tunnel& b) {
    return a.height == b.height && a.x_start == b.x_start && a.x_end == b.x_end;
  }
};

/// One tunnel per matched U-D pair (stack matching, H steps transparent),
/// sorted by (height, x_start). Tunnels pair unit up and down steps, so they
/// exist for the Dyck, Motzkin and Schroder families only.
inline std::vector<tunnel> tunnels(const lattice_path& p) {
  if (p.family().kind == family_kind::dyck_like && !p.family().is_dyck())
    raise(errc::bad_argument, "tunnels pair unit steps; no (a,b) generalization");
  std::vector<tunnel> out;
  std::vector<std::pair<long long, long long>> stack;  // (start abscissa, start height)
  const std::string& s = p.steps();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 'U') {
      stack.emplace_back(static_cast<long long>(i), p.height_at(static_cast<long long>(i)));
    } else if (s[i] == 'D') {
      PATHLAT_REQUIRE(!stack.empty(), "unmatched down step");
      auto [x0, h0] = stack.back();
      stack.pop_back();
      out.push_back({h0, x0, static_cast<long long>(i) + 1});
    }
  }
  PATHLAT_REQUIRE(stack.empty(), "unmatched up step");
  std::sort(out.begin(), out.end(), [](const tunnel& a, const tunnel& b) {
    return a.height != b.height ? a.height < b.height : a.x_start < b.x_start;
  });
  return out;
}

/// t_k: the number of tunnels at height k. Equals the number of up steps
/// starting at height k.
inline long long tunnel_count(const lattice_path& p, long long k) {
  if (p.family().kind == family_kind::dyck_like && !p.family().is_dyck())
    raise(errc::bad_argument, "tunnels pair unit steps; no (a,b) generalization");
  long long c = 0;
  const std::string& s = p.steps();
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == 'U' && p.height_at(static_cast<long long>(i)) == k) ++c;
  return c;
}

inline long long max_tunnel_height(const lattice_path& p) {
  long long best = -1;
  for (const auto& t : tunnels(p)) best = std::max(best, t.height);
  return best;
}

// Horizontal-step counts by height plus the height-1 factor statistics used
// by the Motzkin characteristic formula.
struct step_stats_t {
  long long o = 0;        // H steps at odd height
  long long e = 0;        // H steps at even nonzero height
  long long o_prime = 0;  // H steps at odd height != 1
  long long h1 = 0;       // H steps at height 1
  long long p1 = 0;       // peaks UD with apex at height 1
  long long f1 = 0;       // truncated pyramids U H^m D with the run at height 1
  long long r1 = 0;       // reverse truncated pyramids D H^m U at height 1
};

inline step_stats_t step_stats(const lattice_path& p) {
  step_stats_t st;
  const std::string& s = p.steps();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != 'H') continue;
    long long h = p.height_at(static_cast<long long>(i));
    if (h % 2 == 1) {
      ++st.o;
      if (h != 1) ++st.o_prime;
      else ++st.h1;
    } else if (h != 0) {
      ++st.e;
    }
  }
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == 'U' && s[i + 1] == 'D' && p.height_at(static_cast<long long>(i) + 1) == 1) ++st.p1;
    if (s[i] == 'U' && s[i + 1] == 'H' && p.height_at(static_cast<long long>(i) + 1) == 1) {
      std::size_t j = i + 1;
      while (j < s.size() && s[j] == 'H') ++j;
      if (j < s.size() && s[j] == 'D') ++st.f1;
    }
    if (s[i] == 'D' && s[i + 1] == 'H' && p.height_at(static_cast<long long>(i) + 1) == 1) {
      std::size_t j = i + 1;
      while (j < s.size() && s[j] == 'H') ++j;
      if (j < s.size() && s[j] == 'U') ++st.r1;
    }
  }
  return st;
}

// ---------------------------------------------------------------------------
// Valuations on a finite distributive lattice

// Values assigned to the join-irreducibles; the valuation they determine is
// evaluated through the ideal calculus below. The all-ones spec gives the
// Euler characteristic.
struct valuation_spec {
  std::vector<long long> values_on_irreducibles;
};

// Evaluates the unique valuation with the given join-irreducible values on
// any order ideal of the spectrum, via
//   v(I) = v(I \ p) + v(down(p)) - v(down(p) \ p)   for p maximal in I,
// which is the valuation law applied to join(I \ p) and p. Results are
// memoized per ideal; warm-up is single-threaded, reads afterwards are safe.
class valuation_engine {
 public:
  valuation_engine(const finite_poset& spec, std::vector<long long> values)
      : size_(spec.size()), values_(std::move(values)) {
    PATHLAT_REQUIRE(values_.size() == size_, "one value per join-irreducible required");
    // internal order: maximal elements first, so the lowest set bit of an
    // ideal is always a maximal element of it
    std::vector<std::size_t> order(size_);
    for (std::size_t i = 0; i < size_; ++i) order[i] = i;
    const auto& ranks = spec.ranks();
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return ranks[a] > ranks[b]; });
    to_internal_.assign(size_, 0);
    from_internal_.assign(size_, 0);
    for (std::size_t pos = 0; pos < size_; ++pos) {
      to_internal_[order[pos]] = pos;
      from_internal_[pos] = order[pos];
    }
    down_open_.assign(size_, dyn_bits(size_));
    for (std::size_t p = 0; p < size_; ++p)
      for (std::size_t q = 0; q < size_; ++q)
        if (q != p && spec.leq(q, p)) down_open_[to_internal_[p]].set(to_internal_[q]);
  }

  /// ideal is indexed by spectrum element; must be downward closed.
  long long eval(const dyn_bits& ideal) {
    dyn_bits internal(size_);
    for (std::size_t i = 0; i < size_; ++i)
      if (ideal.test(i)) internal.set(to_internal_[i]);
    return eval_internal(internal);
  }

 private:
  long long eval_internal(const dyn_bits& ideal) {
    if (ideal.none()) return 0;
    auto it = memo_.find(ideal);
    if (it != memo_.end()) return it->second;
    int p = ideal.lowest_set();
    dyn_bits rest = ideal;
    rest.reset(static_cast<std::size_t>(p));
    dyn_bits below = down_open_[static_cast<std::size_t>(p)];
    long long v = eval_internal(rest) + values_[from_internal_[static_cast<std::size_t>(p)]] -
                  eval_internal(below);
    memo_.emplace(ideal, v);
    return v;
  }

  std::size_t size_;
  std::vector<long long> values_;
  std::vector<std::size_t> to_internal_, from_internal_;
  std::vector<dyn_bits> down_open_;
  std::unordered_map<dyn_bits, long long, dyn_bits_hash> memo_;
};

// ---------------------------------------------------------------------------
// Per-lattice characteristic context

// Caches the spectrum, the ideal of each element, and the valuation engines.
// Build once per lattice; evaluation methods are cheap afterwards.
class chi_context {
 public:
  explicit chi_context(const path_lattice& lat)
      : lat_(&lat), jis_(join_irreducibles(lat)), spec_(lat.poset().induced(jis_)) {
    ideals_.reserve(lat.size());
    for (std::size_t x = 0; x < lat.size(); ++x) ideals_.push_back(ideal_of(lat, jis_, x));
    chi_engine_.emplace(spec_, std::vector<long long>(jis_.size(), 1));
  }

  const path_lattice& lattice() const { return *lat_; }
  const std::vector<std::uint32_t>& jis() const { return jis_; }
  const finite_poset& spectrum() const { return spec_; }
  const dyn_bits& ideal(std::size_t x) const { return ideals_[x]; }

  long long chi(std::size_t x) { return chi_engine_->eval(ideals_[x]); }

  long long evaluate(const valuation_spec& vs, std::size_t x) {
    if (x >= lat_->size()) raise(errc::not_in_lattice, "element index out of range");
    valuation_engine engine(spec_, vs.values_on_irreducibles);
    return engine.eval(ideals_[x]);
  }

  /// Ranks of the join-irreducibles inside {0} u Spec, when that poset is
  /// ranked; empty otherwise. Computed once.
  const std::optional<std::vector<long long>>& hat_ranks() {
    if (!hat_ranks_computed_) {
      hat_ranks_computed_ = true;
      std::size_t m = jis_.size();
      auto hat = finite_poset::from_leq(m + 1, [&](std::size_t i, std::size_t j) {
        if (i == j || i == 0) return true;
        if (j == 0) return false;
        return spec_.leq(i - 1, j - 1);
      });
      if (hat.is_ranked()) {
        std::vector<long long> r(m);
        for (std::size_t t = 0; t < m; ++t) r[t] = hat.ranks()[t + 1];
        hat_ranks_ = std::move(r);
      }
    }
    return hat_ranks_;
  }

  /// Generalized characteristic: the valuation that is 1 exactly on the
  /// join-irreducibles of hat-rank >= k.
  long long chi_k(std::size_t x, long long k) {
    const auto& hr = hat_ranks();
    if (!hr)
      raise(errc::spectrum_not_ranked,
            "{0} u Spec is not ranked for " + lat_->family().name());
    auto it = chi_k_engines_.find(k);
    if (it == chi_k_engines_.end()) {
      std::vector<long long> values(jis_.size());
      for (std::size_t t = 0; t < jis_.size(); ++t) values[t] = (*hr)[t] >= k ? 1 : 0;
      it = chi_k_engines_.emplace(k, valuation_engine(spec_, std::move(values))).first;
    }
    return it->second.eval(ideals_[x]);
  }

  /// Maximal join-irreducibles below x, sorted by the abscissa of their
  /// unique pyramid (the Dyck-like labelling).
  std::vector<std::uint32_t> maximal_ji_below(std::size_t x) const;

  bool is_quasi_join_irreducible(std::size_t x) const;
  std::vector<std::size_t> qji_decomposition(std::size_t x) const;
  std::vector<std::size_t> motzkin_decomposition(std::size_t x) const;

 private:
  const path_lattice* lat_;
  std::vector<std::uint32_t> jis_;
  finite_poset spec_;
  std::vector<dyn_bits> ideals_;
  std::optional<valuation_engine> chi_engine_;
  std::map<long long, valuation_engine> chi_k_engines_;
  bool hat_ranks_computed_ = false;
  std::optional<std::vector<long long>> hat_ranks_;
};

// ---------------------------------------------------------------------------
// Combinatorial characteristics on plain paths

/// Closed combinatorial form of the characteristic: t1 for Dyck, t0 for
/// Schroder, o - e + t1 + f1 + p1 - r1 for Motzkin. Dyck-like (a,b) != (1,1)
/// has no closed form here; use the valuation route instead.
inline long long chi_combinatorial(const lattice_path& p) {
  switch (p.family().kind) {
    case family_kind::dyck_like:
      if (!p.family().is_dyck())
        raise(errc::no_closed_form, "no tunnel formula for dycklike:" +
                                        std::to_string(p.family().rise) + "," +
                                        std::to_string(p.family().fall));
      return tunnel_count(p, 1);
    case family_kind::schroder: return tunnel_count(p, 0);
    case family_kind::motzkin: {
      auto st = step_stats(p);
      return st.o - st.e + tunnel_count(p, 1) + st.f1 + st.p1 - st.r1;
    }
  }
  return 0;
}

// n (width), m (flat run length), h (dimension = height of the run).
struct pyramid_class {
  long long n = 0, m = 0, h = 0;
  friend bool operator==(const pyramid_class& a, const pyramid_class& b) {
    return a.n == b.n && a.m == b.m && a.h == b.h;
  }
};

/// Membership in T_{n,m,h}: horizontal steps only at height 0 except one
/// factor U^h H^m D^h.
inline std::optional<pyramid_class> truncated_pyramid_class(const lattice_path& p) {
  if (p.family().kind != family_kind::motzkin)
    raise(errc::bad_argument, "truncated pyramids are Motzkin factors");
  const std::string& s = p.steps();
  std::size_t i = 0;
  while (i < s.size() && s[i] == 'H') ++i;
  if (i == s.size()) return std::nullopt;  // no up steps
  std::size_t h = 0;
  while (i < s.size() && s[i] == 'U') ++i, ++h;
  std::size_t m = 0;
  while (i < s.size() && s[i] == 'H') ++i, ++m;
  if (m == 0) return std::nullopt;
  std::size_t d = 0;
  while (i < s.size() && s[i] == 'D') ++i, ++d;
  if (d != h) return std::nullopt;
  while (i < s.size() && s[i] == 'H') ++i;
  if (i != s.size()) return std::nullopt;
  return pyramid_class{p.width(), static_cast<long long>(m), static_cast<long long>(h)};
}

/// Abscissa of the unique pyramid of a join-irreducible: the peak vertex, or
/// the midpoint of the top flat for flat-topped Schroder join-irreducibles.
inline long long ji_apex_abscissa(const lattice_path& p) {
  if (p.family().kind == family_kind::dyck_like) {
    auto apexes = pyramid_apexes(p);
    PATHLAT_REQUIRE(apexes.size() == 1, "expected a unique pyramid");
    return apexes[0];
  }
  const std::string& s = p.steps();
  std::vector<long long> candidates;
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] == 'U' && s[i + 1] == 'D') candidates.push_back(static_cast<long long>(i) + 1);
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != 'H' || p.height_at(static_cast<long long>(i)) == 0) {
      ++i;
      continue;
    }
    candidates.push_back(static_cast<long long>(i) + 1);  // elevated flat run
    while (i < s.size() && s[i] == 'H') ++i;
  }
  PATHLAT_REQUIRE(candidates.size() == 1, "expected a unique peak or top flat in " + s);
  return candidates[0];
}

inline std::vector<std::uint32_t> chi_context::maximal_ji_below(std::size_t x) const {
  const dyn_bits& I = ideals_[x];
  std::vector<std::uint32_t> out;
  for (std::size_t t = 0; t < jis_.size(); ++t) {
    if (!I.test(t)) continue;
    bool maximal = true;
    for (std::size_t u = 0; u < jis_.size() && maximal; ++u)
      if (u != t && I.test(u) && spec_.leq(t, u)) maximal = false;
    if (maximal) out.push_back(jis_[t]);
  }
  std::vector<long long> key(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) key[i] = ji_apex_abscissa(lat_->element(out[i]));
  std::vector<std::size_t> order(out.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    PATHLAT_REQUIRE(key[order[i]] != key[order[i + 1]],
                    "distinct join-irreducibles of an antichain share a pyramid abscissa");
  std::vector<std::uint32_t> sorted;
  sorted.reserve(out.size());
  for (auto idx : order) sorted.push_back(out[idx]);
  return sorted;
}

inline bool chi_context::is_quasi_join_irreducible(std::size_t x) const {
  if (x == lat_->bottom()) return false;
  auto m = maximal_ji_below(x);
  for (std::size_t i = 0; i + 1 < m.size(); ++i)
    if (lat_->meet(m[i], m[i + 1]) == lat_->bottom()) return false;
  return true;
}

/// Splits the maximal-join-irreducible antichain at the adjacent zero meets;
/// each group joins into one quasi-join-irreducible part. The parts join to x
/// and meet pairwise in the bottom.
inline std::vector<std::size_t> chi_context::qji_decomposition(std::size_t x) const {
  std::vector<std::size_t> parts;
  if (x == lat_->bottom()) return parts;
  auto m = maximal_ji_below(x);
  std::size_t group_start = 0;
  for (std::size_t i = 0; i + 1 <= m.size(); ++i) {
    bool cut = (i + 1 == m.size()) || lat_->meet(m[i], m[i + 1]) == lat_->bottom();
    if (!cut) continue;
    std::size_t acc = m[group_start];
    for (std::size_t t = group_start + 1; t <= i; ++t) acc = lat_->join(acc, m[t]);
    parts.push_back(acc);
    group_start = i + 1;
  }
  std::size_t rejoin = lat_->bottom();
  for (auto part : parts) {
    PATHLAT_REQUIRE(is_quasi_join_irreducible(part), "decomposition part is not quasi-join-irreducible");
    rejoin = lat_->join(rejoin, part);
  }
  PATHLAT_REQUIRE(rejoin == x, "decomposition does not join back to the element");
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      PATHLAT_REQUIRE(lat_->meet(parts[i], parts[j]) == lat_->bottom(),
                      "decomposition parts with a nonzero meet");
  return parts;
}

/// The Motzkin decomposition of a quasi-join-irreducible: group consecutive
/// join-irreducibles whose join is a path with a unique truncated pyramid,
/// taking the pyramids of maximum length.
inline std::vector<std::size_t> chi_context::motzkin_decomposition(std::size_t x) const {
  if (lat_->family().kind != family_kind::motzkin)
    raise(errc::bad_argument, "Motzkin decompositions need a Motzkin lattice");
  if (!is_quasi_join_irreducible(x))
    raise(errc::not_quasi_join_irreducible, lat_->element(x).steps());
  auto m = maximal_ji_below(x);
  std::vector<std::size_t> parts;
  std::size_t i = 0;
  while (i < m.size()) {
    std::size_t acc = m[i];
    std::size_t j = i;
    while (j + 1 < m.size()) {
      std::size_t cand = lat_->join(acc, m[j + 1]);
      if (!truncated_pyramid_class(lat_->element(cand)).has_value()) break;
      acc = cand;
      ++j;
    }
    parts.push_back(acc);
    i = j + 1;
  }
  return parts;
}

// ---------------------------------------------------------------------------
// One-shot wrappers and lattice-free evaluations

inline long long evaluate_valuation(const path_lattice& lat, const valuation_spec& vs,
                                    std::size_t x) {
  chi_context ctx(lat);
  return ctx.evaluate(vs, x);
}

inline long long chi(const path_lattice& lat, std::size_t x) {
  chi_context ctx(lat);
  return ctx.chi(x);
}

inline long long chi_k(const path_lattice& lat, std::size_t x, long long k) {
  chi_context ctx(lat);
  return ctx.chi_k(x, k);
}

/// chi of a single path straight from the canonical spectrum labels; no
/// lattice enumeration, so it scales to sizes where the lattice would not.
/// Dyck, Motzkin and Schroder only.
inline long long chi_of_path(const lattice_path& p) {
  auto ls = spectrum_labels(p.family(), static_cast<int>(p.size()));
  if (ls.empty()) return 0;  // one-element lattice
  finite_poset spec = finite_poset::from_leq(
      ls.size(), [&](std::size_t u, std::size_t v) { return path_leq(ls[u].second, ls[v].second); });
  valuation_engine engine(spec, std::vector<long long>(ls.size(), 1));
  dyn_bits ideal(ls.size());
  for (std::size_t t = 0; t < ls.size(); ++t)
    if (path_leq(ls[t].second, p)) ideal.set(t);
  return engine.eval(ideal);
}

inline long long chi_of_top(const path_family& fam, int n) {
  return chi_of_path(maximum_path(fam, n));
}

}  // namespace pathlat
