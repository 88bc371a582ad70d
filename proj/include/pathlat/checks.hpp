#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pathlat/characteristic.hpp"
#include "pathlat/order.hpp"
#include "pathlat/paths.hpp"
#include "pathlat/rankpoly.hpp"
#include "pathlat/spectrum.hpp"

// Desk-scale verification of the library's theorems: each check returns one
// named pass/fail line. The CLI verify command and the acceptance suite are
// both built on these.

namespace pathlat::checks {

struct line {
  std::string name;
  bool ok = true;
  std::string detail;
};

using suite = std::vector<line>;

namespace detail {

inline line make(const std::string& name, bool ok, std::string detail = "") {
  return {name, ok, std::move(detail)};
}

inline std::vector<std::pair<std::uint32_t, std::uint32_t>> covers_by_definition(
    const finite_poset& p) {
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

inline std::vector<tunnel> tunnels_geometric(const lattice_path& p) {
  const auto& h = p.heights();
  std::vector<tunnel> out;
  for (long long x1 = 0; x1 < p.width(); ++x1)
    for (long long x2 = x1 + 2; x2 <= p.width(); ++x2) {
      long long k = h[static_cast<std::size_t>(x1)];
      if (h[static_cast<std::size_t>(x2)] != k) continue;
      bool above = true;
      for (long long mid = x1 + 1; mid < x2 && above; ++mid)
        if (h[static_cast<std::size_t>(mid)] <= k) above = false;
      if (above) out.push_back({k, x1, x2});
    }
  std::sort(out.begin(), out.end(), [](const tunnel& a, const tunnel& b) {
    return a.height != b.height ? a.height < b.height
                                : (a.x_start != b.x_start ? a.x_start < b.x_start : a.x_end < b.x_end);
  });
  return out;
}

// x <= bound is a boolean algebra B_k under the atom-subset witness.
inline bool ideal_is_boolean(const path_lattice& lat, std::size_t bound, int k) {
  std::vector<std::uint32_t> elems;
  for (std::size_t z = 0; z < lat.size(); ++z)
    if (lat.leq(z, bound)) elems.push_back(static_cast<std::uint32_t>(z));
  if (elems.size() != (std::size_t(1) << k)) return false;
  auto at = atoms(lat);
  if (at.size() != static_cast<std::size_t>(k)) return false;
  std::vector<std::uint32_t> map(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    std::uint32_t mask = 0;
    for (std::size_t t = 0; t < at.size(); ++t)
      if (lat.leq(at[t], elems[i])) mask |= 1u << t;
    map[i] = mask;
  }
  return verify_iso(map, lat.poset().induced(elems), boolean_algebra(k));
}

// The filter above `from`, stripped of its first and last steps, is the
// size-(target) lattice of the same family.
inline bool filter_is_lattice(const path_lattice& lat, std::size_t from, const path_lattice& target) {
  std::vector<std::uint32_t> elems;
  for (std::size_t z = 0; z < lat.size(); ++z)
    if (lat.leq(from, z)) elems.push_back(static_cast<std::uint32_t>(z));
  if (elems.size() != target.size()) return false;
  std::vector<std::uint32_t> map(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const auto& h = lat.element(elems[i]).heights();
    std::vector<long long> inner(h.begin() + 1, h.end() - 1);
    for (auto& v : inner) --v;
    try {
      map[i] = static_cast<std::uint32_t>(target.index_of(path_from_heights(target.family(), inner)));
    } catch (const error&) {
      return false;
    }
  }
  return verify_iso(map, lat.poset().induced(elems), target.poset());
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline suite run_paths_suite() {
  suite out;
  const std::uint64_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  const std::uint64_t motzkin[] = {1, 1, 2, 4, 9, 21, 51, 127, 323};
  const std::uint64_t schroder[] = {1, 2, 6, 22, 90, 394};
  {
    bool ok = true;
    std::string why;
    for (long long n = 0; n <= 8 && ok; ++n) {
      ok = count_paths(path_family::dyck(), n) == catalan[n] &&
           enumerate_paths(path_family::dyck(), n).size() == catalan[n];
      if (!ok) why = "dyck n=" + std::to_string(n);
    }
    for (long long n = 0; n <= 8 && ok; ++n) {
      ok = count_paths(path_family::motzkin(), n) == motzkin[n] &&
           enumerate_paths(path_family::motzkin(), n).size() == motzkin[n];
      if (!ok) why = "motzkin n=" + std::to_string(n);
    }
    for (long long n = 0; n <= 5 && ok; ++n) {
      ok = count_paths(path_family::schroder(), n) == schroder[n] &&
           enumerate_paths(path_family::schroder(), n).size() == schroder[n];
      if (!ok) why = "schroder n=" + std::to_string(n);
    }
    out.push_back(detail::make("enumeration counts (Catalan/Motzkin/Schroder)", ok, why));
  }
  {
    bool ok = true;
    std::string why;
    for (auto [a, b] : {std::pair{1, 1}, {3, 2}, {5, 2}, {5, 3}, {6, 4}}) {
      auto fam = path_family::dyck_like(a, b);
      for (long long n = 0; n <= 2 && ok; ++n) {
        auto paths = enumerate_paths(fam, n, 1u << 20);
        if (paths.size() != count_paths(fam, n)) {
          ok = false;
          why = fam.name();
          break;
        }
        auto lo = minimum_path(fam, n);
        auto hi = maximum_path(fam, n);
        for (const auto& p : paths) {
          if (p.width() != n * ell(a, b)) ok = false;
          for (long long k = 0; k <= p.width(); ++k)
            if (((p.height_at(k) + k * b) % (a + b) + (a + b)) % (a + b) != 0) ok = false;
          if (!path_leq(lo, p) || !path_leq(p, hi)) ok = false;
          if (!ok) {
            why = fam.name() + " " + p.steps();
            break;
          }
        }
      }
    }
    out.push_back(detail::make("Dyck-like widths, height residues, min/max bounds", ok, why));
  }
  {
    bool ok = true;
    for (long long n = 0; n <= 9; ++n) {
      ok = ok && rank_of(maximum_path(path_family::dyck(), n)) == n * (n - 1) / 2;
      ok = ok && rank_of(maximum_path(path_family::motzkin(), n)) == (n / 2) * ((n + 1) / 2);
      ok = ok && rank_of(maximum_path(path_family::schroder(), n)) == n * n;
    }
    out.push_back(detail::make("rank of the maximum (n choose 2, floor*ceil, n^2)", ok));
  }
  return out;
}

inline suite run_order_suite() {
  suite out;
  auto closure_check = [](const path_family& fam, long long maxn) -> std::string {
    for (long long n = 0; n <= maxn; ++n) {
      path_lattice lat(fam, n);
      for (std::size_t i = 0; i < lat.size(); ++i)
        for (std::size_t j = i; j < lat.size(); ++j) {
          std::size_t m, jn;
          try {
            m = lat.meet(i, j);
            jn = lat.join(i, j);
          } catch (const error&) {
            return fam.name() + " n=" + std::to_string(n) + ": closure violation";
          }
          for (std::size_t z = 0; z < lat.size(); ++z) {
            if (lat.leq(z, i) && lat.leq(z, j) && !lat.leq(z, m))
              return fam.name() + " n=" + std::to_string(n) + ": meet not the infimum";
            if (lat.leq(i, z) && lat.leq(j, z) && !lat.leq(jn, z))
              return fam.name() + " n=" + std::to_string(n) + ": join not the supremum";
          }
        }
    }
    return "";
  };
  {
    std::string why = closure_check(path_family::dyck(), 6);
    if (why.empty()) why = closure_check(path_family::motzkin(), 7);
    if (why.empty()) why = closure_check(path_family::schroder(), 4);
    out.push_back(detail::make("meet/join closure and inf/sup universality (D<=6, M<=7, S<=4)",
                               why.empty(), why));
  }
  {
    bool ok = true;
    std::string why;
    for (auto [fam, maxn] : {std::pair{path_family::dyck(), 5ll},
                             {path_family::motzkin(), 6ll},
                             {path_family::schroder(), 3ll}}) {
      for (long long n = 0; n <= maxn && ok; ++n) {
        path_lattice lat(fam, n);
        for (std::size_t x = 0; x < lat.size() && ok; ++x)
          for (std::size_t y = 0; y < lat.size() && ok; ++y)
            for (std::size_t z = 0; z < lat.size() && ok; ++z)
              if (lat.meet(x, lat.join(y, z)) != lat.join(lat.meet(x, y), lat.meet(x, z))) {
                ok = false;
                why = fam.name() + " n=" + std::to_string(n);
              }
      }
    }
    out.push_back(detail::make("distributivity (D<=5, M<=6, S<=3)", ok, why));
  }
  {
    bool ok = true;
    std::string why;
    for (auto [fam, maxn] : {std::pair{path_family::dyck(), 6ll},
                             {path_family::motzkin(), 7ll},
                             {path_family::schroder(), 4ll}}) {
      for (long long n = 0; n <= maxn && ok; ++n) {
        path_lattice lat(fam, n);
        for (auto [lo, hi] : lat.poset().cover_pairs())
          if (lat.rank(hi) != lat.rank(lo) + 1) {
            ok = false;
            why = fam.name() + " n=" + std::to_string(n);
          }
      }
    }
    out.push_back(detail::make("rank increases by one along every cover", ok, why));
  }
  {
    bool ok = true;
    std::string why;
    for (long long n = 2; n <= 6 && ok; ++n) {
      path_lattice lat(path_family::dyck(), n);
      ok = atoms(lat).size() == static_cast<std::size_t>(n - 1) && coatoms(lat).size() == 1;
      if (!ok) why = "dyck n=" + std::to_string(n);
    }
    for (long long n = 2; n <= 7 && ok; ++n) {
      path_lattice lat(path_family::motzkin(), n);
      ok = atoms(lat).size() == static_cast<std::size_t>(n - 1) &&
           coatoms(lat).size() == (n % 2 == 0 ? 1u : 2u);
      if (!ok) why = "motzkin n=" + std::to_string(n);
    }
    for (long long n = 1; n <= 4 && ok; ++n) {
      // one atom per flat of the bottom: n of them (the drawn S_2 and S_3
      // show 2 and 3)
      path_lattice lat(path_family::schroder(), n);
      ok = atoms(lat).size() == static_cast<std::size_t>(n) && coatoms(lat).size() == 1;
      if (!ok) why = "schroder n=" + std::to_string(n);
    }
    out.push_back(detail::make("atom and coatom counts", ok, why));
  }
  {
    bool ok = true;
    std::string why;
    for (long long n = 1; n <= 6 && ok; ++n) {
      path_lattice lat(path_family::dyck(), n);
      path_lattice smaller(path_family::dyck(), n - 1);
      std::size_t s = socle(lat);
      ok = detail::ideal_is_boolean(lat, s, static_cast<int>(n - 1)) &&
           detail::filter_is_lattice(lat, s, smaller);
      if (!ok) why = "dyck n=" + std::to_string(n);
    }
    out.push_back(detail::make("Dyck socle: ideal B_{n-1}, filter D_{n-1} (n<=6)", ok, why));
  }
  {
    bool ok = true;
    std::string why;
    for (long long n = 1; n <= 7 && ok; ++n) {
      path_lattice lat(path_family::motzkin(), n);
      std::size_t s = socle(lat);
      ok = detail::ideal_is_boolean(lat, s, static_cast<int>(n - 1));
      if (ok && n >= 2) {
        path_lattice smaller(path_family::motzkin(), n - 2);
        ok = detail::filter_is_lattice(lat, s, smaller);
      }
      if (!ok) why = "motzkin n=" + std::to_string(n);
    }
    out.push_back(detail::make("Motzkin socle: ideal B_{n-1}, filter M_{n-2} (n<=7)", ok, why));
  }
  {
    bool ok = true;
    std::string why;
    for (long long n = 0; n <= 4 && ok; ++n) {
      path_lattice lat(path_family::schroder(), n);
      ok = detail::ideal_is_boolean(lat, socle(lat), static_cast<int>(n));
      if (!ok) why = "schroder n=" + std::to_string(n);
    }
    out.push_back(detail::make("Schroder socle: ideal B_n (n<=4)", ok, why));
  }
  {
    bool ok = true;
    std::string why;
    for (auto [fam, maxn] : {std::pair{path_family::dyck(), 6ll},
                             {path_family::motzkin(), 7ll},
                             {path_family::schroder(), 4ll}}) {
      for (long long n = 0; n <= maxn && ok; ++n) {
        auto res = verify_birkhoff(path_lattice(fam, n));
        if (!res.ok) {
          ok = false;
          why = fam.name() + " n=" + std::to_string(n) + ": " + res.failure;
        }
      }
    }
    out.push_back(detail::make("Birkhoff: lattice = J(Spec) (D<=6, M<=7, S<=4)", ok, why));
  }
  {
    bool ok = true;
    for (auto [fam, n] : {std::pair{path_family::dyck(), 4ll},
                          {path_family::motzkin(), 4ll},
                          {path_family::schroder(), 2ll}}) {
      path_lattice lat(fam, n);
      ok = ok && lat.poset().cover_pairs() == detail::covers_by_definition(lat.poset());
    }
    out.push_back(detail::make("rank-shortcut covers equal definition-based covers", ok));
  }
  return out;
}

inline suite run_spectrum_suite() {
  suite out;
  {
    bool ok = true;
    std::string why;
    for (int n = 2; n <= 8 && ok; ++n) {
      path_lattice lat(path_family::dyck(), n);
      auto res = verify_spectrum_labels(lat);
      ok = res.ok && dyck_spectrum_labels(n).size() == static_cast<std::size_t>(n * (n - 1) / 2);
      if (!ok) why = "dyck n=" + std::to_string(n) + " " + res.detail;
    }
    out.push_back(detail::make("Spec(D_n) = intervals, |Spec| = C(n,2) (n<=8)", ok, why));
  }
  {
    bool ok = true;
    std::string why;
    for (int n = 2; n <= 8 && ok; ++n) {
      auto res = verify_spectrum_labels(path_lattice(path_family::motzkin(), n));
      if (!res.ok) {
        ok = false;
        why = "motzkin n=" + std::to_string(n) + " " + res.detail;
      }
    }
    out.push_back(detail::make("Spec(M_n) = even intervals (n<=8)", ok, why));
  }
  {
    bool ok = true;
    std::string why;
    for (int n = 1; n <= 5 && ok; ++n) {
      auto res = verify_spectrum_labels(path_lattice(path_family::schroder(), n));
      auto oi = verify_schroder_oriented_intervals(n);
      auto lx = verify_schroder_lex_product(n);
      ok = res.ok && oi.ok && lx.ok;
      if (!ok) why = "schroder n=" + std::to_string(n);
    }
    out.push_back(
        detail::make("Spec(S_n) = oriented intervals and the lex-product construction (n<=5)", ok, why));
  }
  {
    bool ok = dyck_spectrum_labels(4).size() == 6 && motzkin_spectrum_labels(4).size() == 4 &&
              motzkin_spectrum_labels(5).size() == 6 && schroder_spectrum_labels(3).size() == 9;
    out.push_back(detail::make("drawn spectrum sizes 6/4/6/9", ok));
  }
  {
    bool ok = true;
    std::string why;
    for (auto [a, b] : {std::pair{1, 1}, {3, 2}, {5, 2}, {5, 3}})
      for (long long n = 0; n <= 3 && ok; ++n) {
        auto lambda = lambda_partition(a, b, n);
        if (!(path_to_partition(minimum_path(path_family::dyck_like(a, b), n)) == lambda)) {
          ok = false;
          why = "lambda mismatch at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                std::to_string(n) + ")";
        }
        auto l1 = lambda_partition(a, b, 1);
        if (lambda.weight() != (long long)a * b * n * (n - 1) / 2 + n * l1.weight()) {
          ok = false;
          why = "weight identity at (" + std::to_string(a) + "," + std::to_string(b) + ")";
        }
      }
    ok = ok && lambda_partition(3, 2, 3).str() == "7,6,4,3,1";
    out.push_back(detail::make("lambda partitions match the geometric construction (n<=3)", ok, why));
  }
  {
    bool ok = true;
    std::string why;
    for (long long n = 0; n <= 6 && ok; ++n) {
      auto res = verify_young_duality(1, 1, n);
      if (!res.ok) {
        ok = false;
        why = "dyck n=" + std::to_string(n) + ": " + res.detail;
      }
    }
    for (long long n = 0; n <= 2 && ok; ++n) {
      auto res = verify_young_duality(3, 2, n);
      if (!res.ok) {
        ok = false;
        why = "(3,2) n=" + std::to_string(n) + ": " + res.detail;
      }
    }
    out.push_back(detail::make("Young duality (antitone bijection; D<=6 and (3,2) n<=2)", ok, why));
  }
  {
    bool ok = true;
    std::string why;
    for (auto [a, b, maxn] : {std::tuple{1, 1, 5}, {3, 2, 2}, {5, 2, 1}, {5, 3, 1}})
      for (long long n = 1; n <= maxn && ok; ++n) {
        auto res = point_poset(a, b, n);
        path_lattice lat(path_family::dyck_like(a, b), n);
        ok = res.matches_spectrum && res.region_ok &&
             all_order_ideals(res.poset).size() == lat.size();
        if (!ok)
          why = "(" + std::to_string(a) + "," + std::to_string(b) + ") n=" + std::to_string(n) +
                " " + res.detail;
      }
    out.push_back(detail::make("point poset represents the lattice (J(P) = D)", ok, why));
  }
  return out;
}

inline suite run_characteristic_suite() {
  suite out;
  {
    bool ok = true;
    std::string why;
    for (auto [fam, maxn] : {std::pair{path_family::dyck(), 8ll},
                             {path_family::motzkin(), 10ll},
                             {path_family::schroder(), 5ll}}) {
      for (long long n = 0; n <= maxn && ok; ++n)
        for (const auto& p : enumerate_paths(fam, n)) {
          auto st = tunnels(p);
          std::sort(st.begin(), st.end(), [](const tunnel& a, const tunnel& b) {
            return a.height != b.height
                       ? a.height < b.height
                       : (a.x_start != b.x_start ? a.x_start < b.x_start : a.x_end < b.x_end);
          });
          if (!(st == detail::tunnels_geometric(p))) {
            ok = false;
            why = fam.name() + " " + p.steps();
            break;
          }
          for (long long k = 0; k <= 5; ++k) {
            long long c = 0;
            for (auto& t : st) c += t.height == k;
            if (c != tunnel_count(p, k)) {
              ok = false;
              why = fam.name() + " " + p.steps() + " t" + std::to_string(k);
            }
          }
        }
    }
    out.push_back(detail::make("tunnels: stack matching = geometric; t_k = up steps at k "
                               "(D<=8, M<=10, S<=5)",
                               ok, why));
  }
  {
    bool ok = true;
    std::string why;
    for (long long n = 0; n <= 8 && ok; ++n) {
      path_lattice lat(path_family::dyck(), n);
      chi_context c(lat);
      for (std::size_t x = 0; x < lat.size(); ++x)
        if (c.chi(x) != chi_combinatorial(lat.element(x))) {
          ok = false;
          why = "dyck n=" + std::to_string(n) + " " + lat.element(x).steps();
        }
    }
    out.push_back(detail::make("chardyck: chi = t1 on D_n (n<=8)", ok, why));
  }
  {
    bool ok = true;
    std::string why;
    for (long long n = 0; n <= 5 && ok; ++n) {
      path_lattice lat(path_family::schroder(), n);
      chi_context c(lat);
      for (std::size_t x = 0; x < lat.size(); ++x)
        if (c.chi(x) != chi_combinatorial(lat.element(x))) {
          ok = false;
          why = "schroder n=" + std::to_string(n) + " " + lat.element(x).steps();
        }
    }
    out.push_back(detail::make("charschroder: chi = t0 on S_n (n<=5)", ok, why));
  }
  {
    bool ok = true;
    std::string why;
    for (long long n = 0; n <= 10 && ok; ++n) {
      path_lattice lat(path_family::motzkin(), n);
      chi_context c(lat);
      for (std::size_t x = 0; x < lat.size(); ++x)
        if (c.chi(x) != chi_combinatorial(lat.element(x))) {
          ok = false;
          why = "counterexample " + lat.element(x).steps() + " in M_" + std::to_string(n) +
                ": chi=" + std::to_string(c.chi(x)) +
                ", o-e+t1+f1+p1-r1=" + std::to_string(chi_combinatorial(lat.element(x)));
          break;
        }
    }
    out.push_back(detail::make("motzkin tunnel formula: chi = o-e+t1+f1+p1-r1 on M_n (n<=10)", ok, why));
  }
  {
    bool ok = true;
    std::string why;
    for (long long n = 0; n <= 10 && ok; ++n) {
      path_lattice lat(path_family::motzkin(), n);
      chi_context c(lat);
      for (std::size_t x = 0; x < lat.size(); ++x) {
        auto st = step_stats(lat.element(x));
        if (c.chi(x) !=
            static_cast<long long>(c.qji_decomposition(x).size()) + st.o_prime - st.e) {
          ok = false;
          why = lat.element(x).steps() + " in M_" + std::to_string(n);
        }
      }
    }
    out.push_back(detail::make("motzchar: chi = |x| + o' - e on M_n (n<=10)", ok, why));
  }
  {
    bool ok = true;
    std::string why;
    for (long long n = 0; n <= 10 && ok; ++n) {
      path_lattice lat(path_family::motzkin(), n);
      chi_context c(lat);
      for (std::size_t x = 0; x < lat.size(); ++x) {
        auto st = step_stats(lat.element(x));
        long long norm = static_cast<long long>(c.qji_decomposition(x).size());
        if (norm != tunnel_count(lat.element(x), 1) + st.p1 + st.h1 + st.f1 - st.r1) {
          ok = false;
          why = "counterexample " + lat.element(x).steps() + " in M_" + std::to_string(n) +
                ": |x|=" + std::to_string(norm);
          break;
        }
      }
    }
    out.push_back(detail::make("decomposition-size tunnel translation |x| = t1+p1+h1+f1-r1 (n<=10)",
                               ok, why));
  }
  {
    bool ok = true;
    std::string why;
    for (long long n = 1; n <= 7 && ok; ++n) {
      path_lattice lat(path_family::dyck(), n);
      chi_context c(lat);
      for (std::size_t x = 0; x < lat.size() && ok; ++x)
        for (long long k = 1; k <= n; ++k)
          if (c.chi_k(x, k) != tunnel_count(lat.element(x), k)) {
            ok = false;
            why = "dyck n=" + std::to_string(n) + " x=" + lat.element(x).steps() +
                  " k=" + std::to_string(k);
          }
    }
    out.push_back(detail::make("generalized chi_k = t_k on D_n (n<=7)", ok, why));
  }
  {
    bool ok = true;
    std::string why;
    std::mt19937 rng(20240607);
    for (auto [fam, maxn] : {std::pair{path_family::dyck(), 5ll},
                             {path_family::motzkin(), 6ll},
                             {path_family::schroder(), 3ll}}) {
      for (long long n = 0; n <= maxn && ok; ++n) {
        path_lattice lat(fam, n);
        chi_context c(lat);
        std::vector<long long> vals(c.jis().size());
        std::uniform_int_distribution<long long> dist(-3, 3);
        for (auto& v : vals) v = dist(rng);
        valuation_engine eng(c.spectrum(), vals);
        std::vector<long long> table(lat.size());
        for (std::size_t x = 0; x < lat.size(); ++x) table[x] = eng.eval(c.ideal(x));
        for (std::size_t x = 0; x < lat.size() && ok; ++x)
          for (std::size_t y = x; y < lat.size(); ++y) {
            if (table[lat.join(x, y)] + table[lat.meet(x, y)] != table[x] + table[y]) {
              ok = false;
              why = fam.name() + " n=" + std::to_string(n);
            }
            if (c.chi(lat.join(x, y)) + c.chi(lat.meet(x, y)) != c.chi(x) + c.chi(y)) {
              ok = false;
              why = fam.name() + " n=" + std::to_string(n) + " (chi)";
            }
          }
      }
    }
    out.push_back(detail::make("valuation law for chi and random valuations (D<=5, M<=6, S<=3)", ok, why));
  }
  {
    bool ok = true;
    std::string why;
    for (long long n = 2; n <= 8 && ok; ++n) {
      path_lattice lat(path_family::dyck(), n);
      chi_context c(lat);
      auto jis = join_irreducibles(lat);
      std::set<std::size_t> ji_set(jis.begin(), jis.end());
      for (auto s : jis)
        for (auto t : jis) {
          std::size_t m = lat.meet(s, t);
          if (m != lat.bottom() && !ji_set.count(m)) {
            ok = false;
            why = "dyck n=" + std::to_string(n);
          }
        }
      if (!c.hat_ranks()) {
        ok = false;
        why = "spectrum hat not ranked";
      } else {
        for (std::size_t t = 0; t < jis.size(); ++t)
          if ((*c.hat_ranks())[t] != max_tunnel_height(lat.element(jis[t]))) {
            ok = false;
            why = "hat rank != max tunnel height, dyck n=" + std::to_string(n);
          }
      }
    }
    out.push_back(detail::make(
        "meetjoinirred: Dyck join-irreducible meets; spectrum rank = max tunnel height (n<=8)", ok,
        why));
  }
  {
    bool ok = true;
    std::string why;
    for (long long n = 1; n <= 5 && ok; ++n) {
      path_lattice lat(path_family::schroder(), n);
      auto jis = join_irreducibles(lat);
      std::set<std::size_t> ji_set(jis.begin(), jis.end());
      for (auto s : jis)
        for (auto t : jis) {
          std::size_t m = lat.meet(s, t);
          if (m == lat.bottom()) continue;
          if (!ji_set.count(m)) {
            ok = false;
            why = "meet not join-irreducible, n=" + std::to_string(n);
            continue;
          }
          if (lat.leq(s, t) || lat.leq(t, s)) continue;
          const auto& w = lat.element(m);
          long long peaks = 0;
          for (std::size_t i = 0; i + 1 < w.steps().size(); ++i)
            peaks += w.steps()[i] == 'U' && w.steps()[i + 1] == 'D';
          auto st = step_stats(w);
          if (peaks != 1 || st.o + st.e != 0) {
            ok = false;
            why = "incomparable meet without a unique peak, n=" + std::to_string(n);
          }
        }
    }
    out.push_back(detail::make("Schroder special property (n<=5)", ok, why));
  }
  {
    bool ok = true;
    std::string why;
    for (auto [fam, maxn] :
         {std::pair{path_family::dyck(), 7ll}, {path_family::schroder(), 5ll}}) {
      for (long long n = 0; n <= maxn && ok; ++n) {
        path_lattice lat(fam, n);
        chi_context c(lat);
        long long t_height = fam.kind == family_kind::schroder ? 0 : 1;
        for (std::size_t x = 0; x < lat.size(); ++x) {
          bool qji = c.is_quasi_join_irreducible(x);
          if (qji != (tunnel_count(lat.element(x), t_height) == 1)) {
            ok = false;
            why = fam.name() + " " + lat.element(x).steps() + " (tunnel criterion)";
          }
          if (qji && c.chi(x) != 1) {
            ok = false;
            why = fam.name() + " " + lat.element(x).steps() + " (chi of qji)";
          }
          if (c.chi(x) != static_cast<long long>(c.qji_decomposition(x).size())) {
            ok = false;
            why = fam.name() + " " + lat.element(x).steps() + " (chi = part count)";
          }
        }
      }
    }
    out.push_back(detail::make(
        "quasi-join-irreducibles: tunnel criterion, chi = 1, chi = part count (D<=7, S<=5)", ok, why));
  }
  {
    bool ok = true;
    std::string why;
    for (long long n = 1; n <= 10 && ok; ++n) {
      path_lattice lat(path_family::motzkin(), n);
      chi_context c(lat);
      for (std::size_t x = 0; x < lat.size(); ++x) {
        auto cls = truncated_pyramid_class(lat.element(x));
        if (!cls) continue;
        long long expect = (cls->h % 2 == 0 ? -cls->m : cls->m) + 1;
        if (c.chi(x) != expect) {
          ok = false;
          why = lat.element(x).steps();
        }
      }
    }
    out.push_back(detail::make("truncpyr: chi = (-1)^(h+1) m + 1 on T members (n<=10)", ok, why));
  }
  {
    bool ok = true;
    std::string why;
    for (int n = 1; n <= 13; ++n) {
      long long expect = n % 2 == 0 ? 1 : (n % 4 == 1 ? 0 : 2);
      if (chi_of_top(path_family::motzkin(), n) != expect) {
        ok = false;
        why = "n=" + std::to_string(n);
      }
    }
    out.push_back(detail::make("chi of the Motzkin top: 1 / 0 / 2 by n mod 4 (n<=13)", ok, why));
  }
  {
    bool ok = true;
    std::string why;
    for (long long n = 1; n <= 8 && ok; ++n) {
      path_lattice lat(path_family::motzkin(), n);
      chi_context c(lat);
      for (std::size_t x = 0; x < lat.size(); ++x) {
        if (x == lat.bottom()) continue;
        auto m = c.maximal_ji_below(x);
        std::reverse(m.begin(), m.end());
        std::size_t parts = 0;
        for (std::size_t i = 0; i + 1 <= m.size(); ++i)
          if (i + 1 == m.size() || lat.meet(m[i], m[i + 1]) == lat.bottom()) ++parts;
        if (parts != c.qji_decomposition(x).size()) {
          ok = false;
          why = lat.element(x).steps();
        }
      }
    }
    out.push_back(detail::make("decomposition size invariant under permuted tie-breaking (M<=8)", ok, why));
  }
  {
    bool ok = true;
    std::string why;
    for (long long n = 2; n <= 6 && ok; ++n) {
      path_lattice lat(path_family::dyck(), n);
      chi_context c(lat);
      const auto& spec = c.spectrum();
      for (const auto& ideal : all_order_ideals(spec)) {
        std::vector<std::uint32_t> anti;
        for (auto t : ideal.to_indices()) {
          bool maximal = true;
          for (auto u : ideal.to_indices())
            if (u != t && spec.leq(t, u)) maximal = false;
          if (maximal) anti.push_back(c.jis()[t]);
        }
        if (anti.size() < 2) continue;
        std::vector<long long> keys;
        for (auto p : anti) keys.push_back(ji_apex_abscissa(lat.element(p)));
        std::sort(anti.begin(), anti.end(), [&](std::uint32_t p, std::uint32_t q) {
          return ji_apex_abscissa(lat.element(p)) < ji_apex_abscissa(lat.element(q));
        });
        std::sort(keys.begin(), keys.end());
        if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
          ok = false;
          why = "duplicate abscissa label, n=" + std::to_string(n);
        }
        std::size_t all_meet = anti[0];
        for (std::size_t t = 1; t < anti.size(); ++t) all_meet = lat.meet(all_meet, anti[t]);
        if (all_meet != lat.meet(anti.front(), anti.back())) {
          ok = false;
          why = "antichain meet != endpoint meet, n=" + std::to_string(n);
        }
      }
    }
    out.push_back(detail::make("Dyck-like labelling of antichains (D<=6)", ok, why));
  }
  return out;
}

inline suite run_rankpoly_suite() {
  suite out;
  {
    bool ok = true;
    std::string why;
    auto d = dyck_poly_table(8);
    for (long long n = 0; n <= 8 && ok; ++n)
      if (!(d[static_cast<std::size_t>(n)] ==
            rank_polynomial_enumerated(path_family::dyck(), n))) {
        ok = false;
        why = "dyck n=" + std::to_string(n);
      }
    auto m = motzkin_poly_table(10);
    for (long long n = 0; n <= 10 && ok; ++n)
      if (!(m[static_cast<std::size_t>(n)] ==
            rank_polynomial_enumerated(path_family::motzkin(), n))) {
        ok = false;
        why = "motzkin n=" + std::to_string(n);
      }
    auto s = schroder_poly_table(6);
    for (long long n = 0; n <= 6 && ok; ++n)
      if (!(s[static_cast<std::size_t>(n)] ==
            rank_polynomial_enumerated(path_family::schroder(), n))) {
        ok = false;
        why = "schroder n=" + std::to_string(n);
      }
    out.push_back(
        detail::make("recurrence polynomials = enumerated rank profiles (D<=8, M<=10, S<=6)", ok, why));
  }
  {
    bool ok = true;
    for (int n = 0; n <= 12; ++n) ok = ok && series_table::build(path_family::dyck(), n).rows.size() > 0;
    out.push_back(detail::make("coefficient sums equal the path counts (checked in series_table)", ok));
  }
  {
    bool ok = true;
    auto d = dyck_poly_table(10);
    auto m = motzkin_poly_table(10);
    auto s = schroder_poly_table(8);
    for (int n = 2; n <= 10; ++n)
      ok = ok && d[static_cast<std::size_t>(n)].degree() == static_cast<std::size_t>(n * (n - 1) / 2);
    for (int n = 2; n <= 10; ++n)
      ok = ok &&
           m[static_cast<std::size_t>(n)].degree() == static_cast<std::size_t>((n / 2) * ((n + 1) / 2));
    for (int n = 1; n <= 8; ++n)
      ok = ok && s[static_cast<std::size_t>(n)].degree() == static_cast<std::size_t>(n * n);
    out.push_back(detail::make("degrees: C(n,2), floor(n/2)ceil(n/2), n^2", ok));
  }
  {
    bool ok = true;
    std::string why;
    auto d = dyck_poly_table(12);
    auto m = motzkin_poly_table(14);
    auto s = schroder_poly_table(10);
    for (std::size_t n = 0; n < d.size(); ++n)
      if (!is_unimodal(d[n]).unimodal) {
        ok = false;
        why = "dyck n=" + std::to_string(n);
      }
    for (std::size_t n = 0; n < m.size(); ++n)
      if (!is_unimodal(m[n]).unimodal) {
        ok = false;
        why = "motzkin n=" + std::to_string(n);
      }
    for (std::size_t n = 0; n < s.size(); ++n)
      if (!is_unimodal(s[n]).unimodal) {
        ok = false;
        why = "schroder n=" + std::to_string(n);
      }
    out.push_back(detail::make("unimodality scan (D<=12, M<=14, S<=10; evidence only)", ok, why));
  }
  {
    bool ok = true;
    std::string why;
    for (int n = 0; n <= 10; ++n)
      if (!(q_catalan(n) == q_catalan_by_area(n))) {
        ok = false;
        why = "n=" + std::to_string(n);
      }
    out.push_back(detail::make("q-Catalan reversal = area-weighted staircase enumeration (n<=10)", ok, why));
  }
  {
    bool ok = verify_series_identity(path_family::dyck(), 8) &&
              verify_series_identity(path_family::motzkin(), 8) &&
              verify_series_identity(path_family::schroder(), 6);
    out.push_back(detail::make("series functional equations (dyck 8, motzkin 8, schroder 6)", ok));
  }
  return out;
}

inline std::vector<std::pair<std::string, suite (*)()>> all_suites() {
  return {{"paths", &run_paths_suite},
          {"order", &run_order_suite},
          {"spectrum", &run_spectrum_suite},
          {"characteristic", &run_characteristic_suite},
          {"rankpoly", &run_rankpoly_suite}};
}

}  // namespace pathlat::checks
