#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pathlat/errors.hpp"

namespace pathlat {

// Fixed-width bit vector used for down-sets and order ideals.
class dyn_bits {
 public:
  dyn_bits() = default;
  explicit dyn_bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  bool none() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }
  bool is_subset_of(const dyn_bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  int lowest_set() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<int>(i * 64 + static_cast<std::size_t>(__builtin_ctzll(w_[i])));
    return -1;
  }
  dyn_bits operator&(const dyn_bits& o) const {
    dyn_bits r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }
  dyn_bits operator|(const dyn_bits& o) const {
    dyn_bits r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
    return r;
  }
  friend bool operator==(const dyn_bits& a, const dyn_bits& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }
  friend bool operator<(const dyn_bits& a, const dyn_bits& b) {
    return std::lexicographical_compare(a.w_.rbegin(), a.w_.rend(), b.w_.rbegin(), b.w_.rend());
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto w : w_) {
      h ^= static_cast<std::size_t>(w);
      h *= 1099511628211ull;
    }
    return h;
  }

  std::vector<std::uint32_t> to_indices() const {
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < n_; ++i)
      if (test(i)) out.push_back(static_cast<std::uint32_t>(i));
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct dyn_bits_hash {
  std::size_t operator()(const dyn_bits& b) const { return b.hash(); }
};

// Square bit matrix; row i holds the up-set of i when used as a leq table.
class bit_matrix {
 public:
  bit_matrix() = default;
  explicit bit_matrix(std::size_t n) : n_(n), words_((n + 63) / 64), w_(n * words_, 0) {}

  void set(std::size_t i, std::size_t j) { w_[i * words_ + (j >> 6)] |= std::uint64_t(1) << (j & 63); }
  bool test(std::size_t i, std::size_t j) const {
    return (w_[i * words_ + (j >> 6)] >> (j & 63)) & 1;
  }
  std::size_t size() const { return n_; }

  bool row_subset(std::size_t i, std::size_t j) const {  // row(i) subset of row(j)
    const std::uint64_t* a = &w_[i * words_];
    const std::uint64_t* b = &w_[j * words_];
    for (std::size_t k = 0; k < words_; ++k)
      if (a[k] & ~b[k]) return false;
    return true;
  }

 private:
  std::size_t n_ = 0, words_ = 0;
  std::vector<std::uint64_t> w_;
};

// Sizes up to which poset axioms are re-verified at construction.
inline constexpr std::size_t k_axiom_check_limit = 2048;

// Elements are indices 0..n-1 with opaque string labels. The covering
// relation is the transitive reduction of leq; ranks are longest-chain
// heights from the minimal elements.
class finite_poset {
 public:
  finite_poset() = default;

  static finite_poset from_leq(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq,
                               std::vector<std::string> labels = {}) {
    finite_poset p;
    p.init(n, leq, std::move(labels));
    p.compute_covers_generic();
    p.compute_ranks();
    return p;
  }

  // Covers via a known rank function: y covers x iff x < y and
  // rank(y) = rank(x) + 1. Valid whenever `rank` is a rank function of the
  // order, which holds for all the path lattices here.
  static finite_poset from_leq_ranked(std::size_t n,
                                      const std::function<bool(std::size_t, std::size_t)>& leq,
                                      const std::vector<long long>& rank,
                                      std::vector<std::string> labels = {}) {
    finite_poset p;
    p.init(n, leq, std::move(labels));
    std::vector<std::vector<std::uint32_t>> by_rank;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t r = static_cast<std::size_t>(rank[i]);
      if (by_rank.size() <= r) by_rank.resize(r + 1);
      by_rank[r].push_back(static_cast<std::uint32_t>(i));
    }
    for (std::size_t r = 0; r + 1 < by_rank.size(); ++r)
      for (auto x : by_rank[r])
        for (auto y : by_rank[r + 1])
          if (p.leq_.test(x, y)) p.cover_pairs_.emplace_back(x, y);
    std::sort(p.cover_pairs_.begin(), p.cover_pairs_.end());
    p.build_cover_adjacency();
    p.compute_ranks();
    return p;
  }

  std::size_t size() const { return n_; }
  bool leq(std::size_t i, std::size_t j) const { return leq_.test(i, j); }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq_.test(i, j); }
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& cover_pairs() const { return cover_pairs_; }
  const std::vector<std::uint32_t>& covers_up(std::size_t i) const { return up_adj_[i]; }
  const std::vector<std::uint32_t>& covers_down(std::size_t i) const { return down_adj_[i]; }
  const std::vector<long long>& ranks() const { return ranks_; }

  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::vector<std::uint32_t> minimal_elements() const {
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < n_; ++i)
      if (down_adj_[i].empty()) out.push_back(static_cast<std::uint32_t>(i));
    return out;
  }
  std::vector<std::uint32_t> maximal_elements() const {
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < n_; ++i)
      if (up_adj_[i].empty()) out.push_back(static_cast<std::uint32_t>(i));
    return out;
  }

  dyn_bits down_set(std::size_t i) const {
    dyn_bits b(n_);
    for (std::size_t u = 0; u < n_; ++u)
      if (leq_.test(u, i)) b.set(u);
    return b;
  }
  dyn_bits up_set(std::size_t i) const {
    dyn_bits b(n_);
    for (std::size_t u = 0; u < n_; ++u)
      if (leq_.test(i, u)) b.set(u);
    return b;
  }

  /// True when every covering pair raises the longest-chain rank by exactly 1.
  bool is_ranked() const {
    for (auto [x, y] : cover_pairs_)
      if (ranks_[y] != ranks_[x] + 1) return false;
    return true;
  }

  bool is_downward_closed(const dyn_bits& members) const {
    for (std::size_t x = 0; x < n_; ++x)
      if (members.test(x))
        for (std::size_t u = 0; u < n_; ++u)
          if (leq_.test(u, x) && !members.test(u)) return false;
    return true;
  }

  finite_poset induced(const std::vector<std::uint32_t>& elems) const {
    std::vector<std::string> labs;
    labs.reserve(elems.size());
    for (auto e : elems) labs.push_back(labels_[e]);
    return from_leq(elems.size(),
                    [&](std::size_t i, std::size_t j) { return leq_.test(elems[i], elems[j]); },
                    std::move(labs));
  }

 private:
  void init(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq,
            std::vector<std::string> labels) {
    n_ = n;
    leq_ = bit_matrix(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq(i, j)) leq_.set(i, j);
    labels_ = std::move(labels);
    if (labels_.empty()) {
      labels_.reserve(n);
      for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
    }
    PATHLAT_REQUIRE(labels_.size() == n, "label count mismatch");
    if (n <= k_axiom_check_limit) verify_axioms();
  }

  void verify_axioms() const {
    for (std::size_t i = 0; i < n_; ++i) {
      PATHLAT_REQUIRE(leq_.test(i, i), "poset not reflexive");
      for (std::size_t j = 0; j < n_; ++j) {
        if (i != j && leq_.test(i, j)) {
          PATHLAT_REQUIRE(!leq_.test(j, i), "poset not antisymmetric");
          // transitivity: up(j) must be contained in up(i)
          PATHLAT_REQUIRE(leq_.row_subset(j, i), "poset not transitive");
        }
      }
    }
  }

  void compute_covers_generic() {
    // y covers x iff x < y and up(x) & down(y) has exactly the two of them.
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y) {
        if (x == y || !leq_.test(x, y)) continue;
        bool cover = true;
        for (std::size_t z = 0; z < n_ && cover; ++z)
          if (z != x && z != y && leq_.test(x, z) && leq_.test(z, y)) cover = false;
        if (cover) cover_pairs_.emplace_back(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y));
      }
    std::sort(cover_pairs_.begin(), cover_pairs_.end());
    build_cover_adjacency();
  }

  void build_cover_adjacency() {
    up_adj_.assign(n_, {});
    down_adj_.assign(n_, {});
    for (auto [x, y] : cover_pairs_) {
      up_adj_[x].push_back(y);
      down_adj_[y].push_back(x);
    }
  }

  void compute_ranks() {
    ranks_.assign(n_, 0);
    // longest chain from below; cover DAG is acyclic, process by in-degree
    std::vector<std::size_t> indeg(n_, 0);
    for (auto& [x, y] : cover_pairs_) (void)x, ++indeg[y];
    std::vector<std::uint32_t> queue;
    for (std::size_t i = 0; i < n_; ++i)
      if (indeg[i] == 0) queue.push_back(static_cast<std::uint32_t>(i));
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      auto x = queue[qi];
      for (auto y : up_adj_[x]) {
        ranks_[y] = std::max(ranks_[y], ranks_[x] + 1);
        if (--indeg[y] == 0) queue.push_back(y);
      }
    }
    PATHLAT_REQUIRE(queue.size() == n_, "cover relation has a cycle");
  }

  std::size_t n_ = 0;
  bit_matrix leq_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> cover_pairs_;
  std::vector<std::vector<std::uint32_t>> up_adj_, down_adj_;
  std::vector<long long> ranks_;
  std::vector<std::string> labels_;
};

// A downward closed subset of a poset, checked at construction.
struct order_ideal {
  const finite_poset* base = nullptr;
  dyn_bits members;

  order_ideal(const finite_poset& p, dyn_bits m) : base(&p), members(std::move(m)) {
    if (!p.is_downward_closed(members)) raise(errc::bad_argument, "set is not downward closed");
  }
};

/// All order ideals of P, as bitsets in a deterministic order (by cardinality,
/// then bit pattern). The count can be exponential; the guard bounds it.
inline std::vector<dyn_bits> all_order_ideals(const finite_poset& p,
                                              std::uint64_t guard = k_default_guard) {
  std::unordered_set<dyn_bits, dyn_bits_hash> seen;
  std::vector<dyn_bits> frontier{dyn_bits(p.size())};
  seen.insert(frontier[0]);
  std::vector<dyn_bits> down_open(p.size(), dyn_bits(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i) {
    down_open[i] = p.down_set(i);
    down_open[i].reset(i);
  }
  for (std::size_t qi = 0; qi < frontier.size(); ++qi) {
    dyn_bits cur = frontier[qi];
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (cur.test(x) || !down_open[x].is_subset_of(cur)) continue;
      dyn_bits next = cur;
      next.set(x);
      if (seen.insert(next).second) {
        if (seen.size() > guard)
          raise(errc::size_limit_exceeded, "ideal count exceeds guard " + std::to_string(guard));
        frontier.push_back(std::move(next));
      }
    }
  }
  std::sort(frontier.begin(), frontier.end(), [](const dyn_bits& a, const dyn_bits& b) {
    auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a < b;
  });
  return frontier;
}

/// J(P): the distributive lattice of order ideals of P under inclusion.
inline finite_poset ideals_poset(const finite_poset& p, std::uint64_t guard,
                                 std::vector<dyn_bits>* out_ideals = nullptr) {
  auto ideals = all_order_ideals(p, guard);
  std::vector<std::string> labels;
  labels.reserve(ideals.size());
  for (const auto& b : ideals) {
    std::string s = "{";
    bool first = true;
    for (auto i : b.to_indices()) {
      if (!first) s += ",";
      s += p.label(i);
      first = false;
    }
    s += "}";
    labels.push_back(std::move(s));
  }
  auto out = finite_poset::from_leq(
      ideals.size(),
      [&](std::size_t i, std::size_t j) { return ideals[i].is_subset_of(ideals[j]); },
      std::move(labels));
  if (out_ideals) *out_ideals = std::move(ideals);
  return out;
}

/// Boolean algebra B_k: subsets of a k-set ordered by inclusion.
inline finite_poset boolean_algebra(int k) {
  if (k < 0 || k > 20) raise(errc::bad_argument, "boolean_algebra size out of range");
  std::size_t n = std::size_t(1) << k;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t m = 0; m < n; ++m) {
    std::string s = "{";
    bool first = true;
    for (int b = 0; b < k; ++b)
      if (m >> b & 1) {
        if (!first) s += ",";
        s += std::to_string(b + 1);
        first = false;
      }
    s += "}";
    labels.push_back(std::move(s));
  }
  return finite_poset::from_leq(
      n, [](std::size_t i, std::size_t j) { return (i & ~j) == 0; }, std::move(labels));
}

/// Chain C_k with k+1 elements 0 <= 1 <= ... <= k.
inline finite_poset chain(int k) {
  if (k < 0) raise(errc::bad_argument, "negative chain length");
  std::vector<std::string> labels;
  for (int i = 0; i <= k; ++i) labels.push_back(std::to_string(i));
  return finite_poset::from_leq(
      static_cast<std::size_t>(k) + 1, [](std::size_t i, std::size_t j) { return i <= j; },
      std::move(labels));
}

/// Induced subposet on { z : x <= z <= y }, together with the element indices.
inline finite_poset interval_poset(const finite_poset& p, std::size_t x, std::size_t y,
                                   std::vector<std::uint32_t>* out_elems = nullptr) {
  if (!p.leq(x, y)) raise(errc::not_comparable, "interval endpoints are not comparable");
  std::vector<std::uint32_t> elems;
  for (std::size_t z = 0; z < p.size(); ++z)
    if (p.leq(x, z) && p.leq(z, y)) elems.push_back(static_cast<std::uint32_t>(z));
  if (out_elems) *out_elems = elems;
  return p.induced(elems);
}

struct iso_counterexample {
  std::size_t x = 0, y = 0;
  std::string reason;
};

/// Checks that `map` (P index -> Q index) is an order isomorphism.
inline bool verify_iso(const std::vector<std::uint32_t>& map, const finite_poset& p,
                       const finite_poset& q, iso_counterexample* why = nullptr) {
  auto fail = [&](std::size_t x, std::size_t y, const char* reason) {
    if (why) *why = {x, y, reason};
    return false;
  };
  if (map.size() != p.size() || p.size() != q.size()) return fail(0, 0, "size mismatch");
  std::vector<char> hit(q.size(), 0);
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] >= q.size() || hit[map[i]]) return fail(i, map[i], "not a bijection");
    hit[map[i]] = 1;
  }
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (p.leq(x, y) != q.leq(map[x], map[y]))
        return fail(x, y, p.leq(x, y) ? "order not preserved" : "order not reflected");
    }
  return true;
}

/// Lexicographic product P o Q: (x1,y1) <= (x2,y2) iff x1 < x2, or x1 = x2
/// and y1 <= y2. Element i*|Q|+j stands for (i, j).
inline finite_poset lex_product(const finite_poset& p, const finite_poset& q) {
  std::size_t n = p.size() * q.size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      labels.push_back("(" + p.label(i) + "," + q.label(j) + ")");
  std::size_t qs = q.size();
  return finite_poset::from_leq(
      n,
      [&, qs](std::size_t u, std::size_t v) {
        std::size_t x1 = u / qs, y1 = u % qs, x2 = v / qs, y2 = v % qs;
        if (x1 == x2) return q.leq(y1, y2);
        return p.less(x1, x2);
      },
      std::move(labels));
}

}  // namespace pathlat
