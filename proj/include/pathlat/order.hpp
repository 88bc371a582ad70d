#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pathlat/paths.hpp"
#include "pathlat/poset.hpp"

namespace pathlat {

/// Coordinatewise order on height profiles. Both paths must belong to the
/// same family and have the same size.
inline bool path_leq(const lattice_path& p, const lattice_path& q) {
  if (!(p.family() == q.family()) || p.width() != q.width())
    raise(errc::family_mismatch, "comparing paths of different families or sizes");
  const auto& a = p.heights();
  const auto& b = q.heights();
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

namespace detail {
inline lattice_path pointwise(const lattice_path& p, const lattice_path& q, bool take_min) {
  if (!(p.family() == q.family()) || p.width() != q.width())
    raise(errc::family_mismatch, "mixing paths of different families or sizes");
  std::vector<long long> h(p.heights().size());
  for (std::size_t k = 0; k < h.size(); ++k)
    h[k] = take_min ? std::min(p.heights()[k], q.heights()[k])
                    : std::max(p.heights()[k], q.heights()[k]);
  try {
    return path_from_heights(p.family(), h);
  } catch (const error&) {
    raise(errc::closure_violation,
          std::string("pointwise ") + (take_min ? "min" : "max") + " of " + p.steps() + " and " +
              q.steps() + " is not a valid path");
  }
}
}  // namespace detail

/// Meet: pointwise minimum of heights, revalidated as a family path.
inline lattice_path path_meet(const lattice_path& p, const lattice_path& q) {
  return detail::pointwise(p, q, true);
}

/// Join: pointwise maximum of heights.
inline lattice_path path_join(const lattice_path& p, const lattice_path& q) {
  return detail::pointwise(p, q, false);
}

// The lattice of all size-n paths of a family: elements in canonical
// enumeration order, leq table, covers, ranks. Immutable once built.
class path_lattice {
 public:
  path_lattice(path_family fam, long long n, std::uint64_t guard = k_default_guard)
      : family_(fam), n_(n), elements_(enumerate_paths(fam, n, guard)) {
    ranks_.reserve(elements_.size());
    std::vector<std::string> labels;
    labels.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      ranks_.push_back(rank_of(elements_[i]));
      labels.push_back(elements_[i].steps());
      index_of_.emplace(elements_[i].steps(), static_cast<std::uint32_t>(i));
    }
    poset_ = finite_poset::from_leq_ranked(
        elements_.size(),
        [&](std::size_t i, std::size_t j) { return heights_leq(i, j); }, ranks_,
        std::move(labels));
    bottom_ = index_of(minimum_path(fam, n));
    top_ = index_of(maximum_path(fam, n));
  }

  const path_family& family() const { return family_; }
  long long n() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<lattice_path>& elements() const { return elements_; }
  const lattice_path& element(std::size_t i) const { return elements_[i]; }
  const finite_poset& poset() const { return poset_; }
  long long rank(std::size_t i) const { return ranks_[i]; }
  const std::vector<long long>& ranks() const { return ranks_; }
  long long height() const { return *std::max_element(ranks_.begin(), ranks_.end()); }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

  std::size_t index_of(const lattice_path& p) const {
    auto it = index_of_.find(p.steps());
    if (it == index_of_.end()) raise(errc::not_in_lattice, p.steps());
    return it->second;
  }
  bool contains(const lattice_path& p) const { return index_of_.count(p.steps()) != 0; }

  bool leq(std::size_t i, std::size_t j) const { return poset_.leq(i, j); }

  std::size_t meet(std::size_t i, std::size_t j) const {
    return index_of(path_meet(elements_[i], elements_[j]));
  }
  std::size_t join(std::size_t i, std::size_t j) const {
    return index_of(path_join(elements_[i], elements_[j]));
  }

 private:
  bool heights_leq(std::size_t i, std::size_t j) const {
    const auto& a = elements_[i].heights();
    const auto& b = elements_[j].heights();
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] > b[k]) return false;
    return true;
  }

  path_family family_;
  long long n_;
  std::vector<lattice_path> elements_;
  std::vector<long long> ranks_;
  finite_poset poset_;
  std::unordered_map<std::string, std::uint32_t> index_of_;
  std::size_t bottom_ = 0, top_ = 0;
};

inline path_lattice build_lattice(const path_family& fam, long long n,
                                  std::uint64_t guard = k_default_guard) {
  return path_lattice(fam, n, guard);
}

inline std::vector<std::uint32_t> atoms(const path_lattice& lat) {
  return lat.poset().covers_up(lat.bottom());
}

inline std::vector<std::uint32_t> coatoms(const path_lattice& lat) {
  return lat.poset().covers_down(lat.top());
}

/// Join of all atoms.
inline std::size_t socle(const path_lattice& lat) {
  std::size_t acc = lat.bottom();
  for (auto a : atoms(lat)) acc = lat.join(acc, a);
  return acc;
}

/// Meet of all coatoms.
inline std::size_t radical(const path_lattice& lat) {
  std::size_t acc = lat.top();
  for (auto c : coatoms(lat)) acc = lat.meet(acc, c);
  return acc;
}

/// Non-bottom elements covering exactly one element. In a finite distributive
/// lattice these are exactly the join-irreducibles.
inline std::vector<std::uint32_t> join_irreducibles(const path_lattice& lat) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (i != lat.bottom() && lat.poset().covers_down(i).size() == 1)
      out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

/// Induced subposet on the join-irreducibles. `out_elements` receives the
/// lattice index of each spectrum element.
inline finite_poset spectrum_poset(const path_lattice& lat,
                                   std::vector<std::uint32_t>* out_elements = nullptr) {
  auto jis = join_irreducibles(lat);
  if (out_elements) *out_elements = jis;
  return lat.poset().induced(jis);
}

/// Bitset over the spectrum: which join-irreducibles lie below x.
inline dyn_bits ideal_of(const path_lattice& lat, const std::vector<std::uint32_t>& jis,
                         std::size_t x) {
  dyn_bits b(jis.size());
  for (std::size_t t = 0; t < jis.size(); ++t)
    if (lat.leq(jis[t], x)) b.set(t);
  return b;
}

struct birkhoff_result {
  bool ok = false;
  std::vector<std::uint32_t> jis;           // spectrum elements (lattice indices)
  std::vector<dyn_bits> ideal_of_element;   // x -> { t : ji_t <= x }
  std::string failure;
};

/// Birkhoff representation check: x -> {join-irreducibles <= x} must be an
/// order isomorphism onto J(Spec(lat)).
inline birkhoff_result verify_birkhoff(const path_lattice& lat,
                                       std::uint64_t guard = k_default_guard) {
  birkhoff_result res;
  res.jis = join_irreducibles(lat);
  res.ideal_of_element.reserve(lat.size());
  for (std::size_t x = 0; x < lat.size(); ++x)
    res.ideal_of_element.push_back(ideal_of(lat, res.jis, x));

  finite_poset spec = lat.poset().induced(res.jis);
  auto ideals = all_order_ideals(spec, guard);
  if (ideals.size() != lat.size()) {
    res.failure = "ideal count " + std::to_string(ideals.size()) + " != lattice size " +
                  std::to_string(lat.size());
    return res;
  }
  std::unordered_set<dyn_bits, dyn_bits_hash> image;
  for (const auto& b : res.ideal_of_element)
    if (!image.insert(b).second) {
      res.failure = "element map is not injective";
      return res;
    }
  for (const auto& ideal : ideals)
    if (!image.count(ideal)) {
      res.failure = "an ideal of the spectrum is not realized by any element";
      return res;
    }
  for (std::size_t x = 0; x < lat.size(); ++x)
    for (std::size_t y = 0; y < lat.size(); ++y) {
      bool lhs = lat.leq(x, y);
      bool rhs = res.ideal_of_element[x].is_subset_of(res.ideal_of_element[y]);
      if (lhs != rhs) {
        res.failure = "order mismatch at (" + lat.element(x).steps() + ", " +
                      lat.element(y).steps() + ")";
        return res;
      }
    }
  res.ok = true;
  return res;
}

}  // namespace pathlat
