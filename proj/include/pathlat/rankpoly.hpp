#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pathlat/order.hpp"
#include "pathlat/paths.hpp"

namespace pathlat {

using bigint = boost::multiprecision::cpp_int;

// Exact-integer polynomial in q; index = exponent. Whitney numbers outgrow
// 64 bits once the guards are raised, hence arbitrary precision throughout.
class int_polynomial {
 public:
  int_polynomial() = default;
  explicit int_polynomial(std::vector<bigint> coeffs) : c_(std::move(coeffs)) { trim(); }
  static int_polynomial one() { return int_polynomial({bigint(1)}); }
  static int_polynomial monomial(std::size_t k, bigint coeff = 1) {
    std::vector<bigint> c(k + 1);
    c[k] = std::move(coeff);
    return int_polynomial(std::move(c));
  }

  const std::vector<bigint>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
  bigint coeff(std::size_t k) const { return k < c_.size() ? c_[k] : bigint(0); }
  bigint sum() const {
    bigint s = 0;
    for (const auto& v : c_) s += v;
    return s;
  }

  int_polynomial& operator+=(const int_polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  int_polynomial& operator-=(const int_polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend int_polynomial operator+(int_polynomial a, const int_polynomial& b) { return a += b; }
  friend int_polynomial operator-(int_polynomial a, const int_polynomial& b) { return a -= b; }

  friend int_polynomial operator*(const int_polynomial& a, const int_polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<bigint> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return int_polynomial(std::move(c));
  }

  /// Multiplication by q^k.
  int_polynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<bigint> c(c_.size() + k);
    for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
    return int_polynomial(std::move(c));
  }

  /// Degree reversal: coefficient j becomes coefficient degree - j.
  int_polynomial reversed() const {
    std::vector<bigint> c(c_.rbegin(), c_.rend());
    return int_polynomial(std::move(c));
  }

  friend bool operator==(const int_polynomial& a, const int_polynomial& b) { return a.c_ == b.c_; }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      bigint v = c_[k];
      if (first) {
        if (v < 0) out += "-", v = -v;
      } else {
        out += v < 0 ? " - " : " + ";
        if (v < 0) v = -v;
      }
      if (k == 0) out += v.str();
      else {
        if (v != 1) out += v.str() + "*";
        out += "q";
        if (k > 1) out += "^" + std::to_string(k);
      }
      first = false;
    }
    return out.empty() ? "0" : out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<bigint> c_;
};

/// Rank polynomials D_0(q) .. D_max(q): D_{n+1} = sum_k q^k D_k D_{n-k}.
inline std::vector<int_polynomial> dyck_poly_table(int max_n) {
  std::vector<int_polynomial> d{int_polynomial::one()};
  for (int n = 0; n < max_n; ++n) {
    int_polynomial next;
    for (int k = 0; k <= n; ++k) next += (d[k] * d[n - k]).shifted(static_cast<std::size_t>(k));
    d.push_back(std::move(next));
  }
  return d;
}

/// M_0 = M_1 = 1; M_{n+2} = M_{n+1} + sum_k q^{k+1} M_k M_{n-k}.
inline std::vector<int_polynomial> motzkin_poly_table(int max_n) {
  std::vector<int_polynomial> m{int_polynomial::one()};
  if (max_n >= 1) m.push_back(int_polynomial::one());
  for (int n = 0; n + 2 <= max_n; ++n) {
    int_polynomial next = m[n + 1];
    for (int k = 0; k <= n; ++k) next += (m[k] * m[n - k]).shifted(static_cast<std::size_t>(k) + 1);
    m.push_back(std::move(next));
  }
  return m;
}

/// S_0 = 1; S_{n+1} = S_n + sum_k q^{2k+1} S_k S_{n-k}.
inline std::vector<int_polynomial> schroder_poly_table(int max_n) {
  std::vector<int_polynomial> s{int_polynomial::one()};
  for (int n = 0; n < max_n; ++n) {
    int_polynomial next = s[n];
    for (int k = 0; k <= n; ++k)
      next += (s[k] * s[n - k]).shifted(2 * static_cast<std::size_t>(k) + 1);
    s.push_back(std::move(next));
  }
  return s;
}

inline std::vector<int_polynomial> family_poly_table(const path_family& fam, int max_n) {
  switch (fam.kind) {
    case family_kind::dyck_like:
      if (!fam.is_dyck())
        raise(errc::bad_argument, "rank polynomial recurrences exist for (1,1) only");
      return dyck_poly_table(max_n);
    case family_kind::motzkin: return motzkin_poly_table(max_n);
    case family_kind::schroder: return schroder_poly_table(max_n);
  }
  return {};
}

inline int_polynomial dyck_poly(int n) { return dyck_poly_table(n).back(); }
inline int_polynomial motzkin_poly(int n) { return motzkin_poly_table(n).back(); }
inline int_polynomial schroder_poly(int n) { return schroder_poly_table(n).back(); }

/// Whitney polynomial of the size-n lattice, read off the enumerated paths.
inline int_polynomial rank_polynomial_enumerated(const path_family& fam, long long n,
                                                 std::uint64_t guard = k_default_guard) {
  std::vector<bigint> w;
  for (const auto& p : enumerate_paths(fam, n, guard)) {
    std::size_t r = static_cast<std::size_t>(rank_of(p));
    if (w.size() <= r) w.resize(r + 1);
    w[r] += 1;
  }
  return int_polynomial(std::move(w));
}

inline int_polynomial rank_polynomial_enumerated(const path_lattice& lat) {
  std::vector<bigint> w;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    std::size_t r = static_cast<std::size_t>(lat.rank(i));
    if (w.size() <= r) w.resize(r + 1);
    w[r] += 1;
  }
  return int_polynomial(std::move(w));
}

/// q-Catalan numbers: C_n(q) = q^(n choose 2) D_n(1/q), i.e. the degree
/// reversal of the Dyck rank polynomial.
inline int_polynomial q_catalan(int n) {
  auto d = dyck_poly(n);
  PATHLAT_REQUIRE(d.degree() == static_cast<std::size_t>(n) * (n - 1) / 2 || n <= 1,
                  "unexpected Dyck polynomial degree");
  return d.reversed();
}

namespace detail {
inline void staircase_rec(int n, int x, int y, long long area, std::vector<bigint>& acc) {
  if (x == n && y == n) {
    if (acc.size() <= static_cast<std::size_t>(area)) acc.resize(static_cast<std::size_t>(area) + 1);
    acc[static_cast<std::size_t>(area)] += 1;
    return;
  }
  if (x < n) staircase_rec(n, x + 1, y, area + y, acc);  // east step under y = x
  if (y < x) staircase_rec(n, x, y + 1, area, acc);
}
}  // namespace detail

/// Independent oracle for C_n(q): sum of q^area over the monotone lattice
/// paths from (0,0) to (n,n) weakly below the diagonal.
inline int_polynomial q_catalan_by_area(int n) {
  std::vector<bigint> acc;
  detail::staircase_rec(n, 0, 0, 0, acc);
  return int_polynomial(std::move(acc));
}

struct unimodality_report {
  bool unimodal = false;
  std::size_t index = 0;  // witness peak, or the valley where the scan fails
};

/// Weakly increasing then weakly decreasing coefficients.
inline unimodality_report is_unimodal(const int_polynomial& p) {
  const auto& c = p.coeffs();
  if (c.empty()) return {true, 0};
  std::size_t i = 0;
  while (i + 1 < c.size() && c[i] <= c[i + 1]) ++i;
  std::size_t peak = i;
  while (i + 1 < c.size() && c[i] >= c[i + 1]) ++i;
  if (i + 1 == c.size()) return {true, peak};
  return {false, i};
}

// Bivariate series truncated in the t direction: row k is the q-polynomial
// coefficient of t^k.
using series_rows = std::vector<int_polynomial>;

namespace detail {
inline series_rows series_mult(const series_rows& a, const series_rows& b, int order) {
  series_rows out(static_cast<std::size_t>(order) + 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j + i <= static_cast<std::size_t>(order) && j < b.size(); ++j)
      out[i + j] += a[i] * b[j];
  return out;
}
}  // namespace detail

/// Checks the functional equation of the family's generating series as an
/// exact identity between truncations:
///   D(q,t) (1 - t D(q,qt)) = 1
///   M(q,t) (1 - t - q t^2 M(q,qt)) = 1
///   S(q,x) (1 - x - q x S(q,q^2 x)) = 1
inline bool verify_series_identity(const path_family& fam, int order) {
  auto rows = family_poly_table(fam, order);
  series_rows f(rows.begin(), rows.end());
  series_rows factor(static_cast<std::size_t>(order) + 1);
  factor[0] = int_polynomial::one();
  switch (fam.kind) {
    case family_kind::dyck_like:
      // 1 - t D(q,qt): row k+1 gets -q^k D_k(q)
      for (int k = 0; k + 1 <= order; ++k)
        factor[static_cast<std::size_t>(k) + 1] -= f[static_cast<std::size_t>(k)].shifted(static_cast<std::size_t>(k));
      break;
    case family_kind::motzkin:
      factor[1] -= int_polynomial::one();
      // - q t^2 M(q,qt): row k+2 gets -q^{k+1} M_k(q)
      for (int k = 0; k + 2 <= order; ++k)
        factor[static_cast<std::size_t>(k) + 2] -=
            f[static_cast<std::size_t>(k)].shifted(static_cast<std::size_t>(k) + 1);
      break;
    case family_kind::schroder:
      factor[1] -= int_polynomial::one();
      // - q x S(q,q^2 x): row k+1 gets -q^{2k+1} S_k(q)
      for (int k = 0; k + 1 <= order; ++k)
        factor[static_cast<std::size_t>(k) + 1] -=
            f[static_cast<std::size_t>(k)].shifted(2 * static_cast<std::size_t>(k) + 1);
      break;
  }
  auto prod = detail::series_mult(f, factor, order);
  for (std::size_t k = 0; k < prod.size(); ++k) {
    if (k == 0 && !(prod[k] == int_polynomial::one())) return false;
    if (k > 0 && !prod[k].is_zero()) return false;
  }
  return true;
}

// Rank polynomials of a family for n = 0..max; the row invariant ties the
// coefficient sum to the family's path count.
struct series_table {
  path_family family;
  std::vector<int_polynomial> rows;

  static series_table build(const path_family& fam, int max_n) {
    series_table t{fam, family_poly_table(fam, max_n)};
    for (int n = 0; n < static_cast<int>(t.rows.size()); ++n) {
      std::uint64_t count = count_paths(fam, n);
      PATHLAT_REQUIRE(t.rows[static_cast<std::size_t>(n)].sum() == bigint(count),
                      "rank polynomial sum disagrees with the path count");
    }
    return t;
  }
};

}  // namespace pathlat
