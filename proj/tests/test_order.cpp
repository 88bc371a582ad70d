#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "pathlat/order.hpp"

using namespace pathlat;

namespace {

lattice_path P(const path_family& f, const std::string& s) { return validate(f, s); }

// x <= bound mapped to the subset of atoms below x; the target boolean
// algebra indexes its elements by exactly that bitmask.
bool ideal_below_is_boolean(const path_lattice& lat, std::size_t bound_elem, int k) {
  std::vector<std::uint32_t> elems;
  for (std::size_t z = 0; z < lat.size(); ++z)
    if (lat.leq(z, bound_elem)) elems.push_back(static_cast<std::uint32_t>(z));
  if (elems.size() != (std::size_t(1) << k)) return false;
  auto down = lat.poset().induced(elems);
  auto at = atoms(lat);
  if (at.size() != static_cast<std::size_t>(k)) return false;
  std::vector<std::uint32_t> map(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    std::uint32_t mask = 0;
    for (std::size_t t = 0; t < at.size(); ++t)
      if (lat.leq(at[t], elems[i])) mask |= 1u << t;
    map[i] = mask;
  }
  return verify_iso(map, down, boolean_algebra(k));
}

// Strip the first and last step of every element of the filter above `from`
// and compare with the smaller lattice of the same family.
bool filter_is_smaller_lattice(const path_lattice& lat, std::size_t from,
                               const path_lattice& target) {
  std::vector<std::uint32_t> elems;
  for (std::size_t z = 0; z < lat.size(); ++z)
    if (lat.leq(from, z)) elems.push_back(static_cast<std::uint32_t>(z));
  if (elems.size() != target.size()) return false;
  auto filter = lat.poset().induced(elems);
  std::vector<std::uint32_t> map(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const auto& h = lat.element(elems[i]).heights();
    std::vector<long long> inner(h.begin() + 1, h.end() - 1);
    for (auto& v : inner) --v;
    map[i] = static_cast<std::uint32_t>(target.index_of(path_from_heights(target.family(), inner)));
  }
  return verify_iso(map, filter, target.poset());
}

}  // namespace

TEST_CASE("path_leq") {
  auto d = path_family::dyck();
  CHECK(path_leq(P(d, "UDUD"), P(d, "UUDD")));
  CHECK(!path_leq(P(d, "UUDDUD"), P(d, "UDUUDD")));
  CHECK(!path_leq(P(d, "UDUUDD"), P(d, "UUDDUD")));
  auto m = path_family::motzkin();
  CHECK(path_leq(P(m, "HHHH"), P(m, "UHHD")));
  CHECK_THROWS_AS(path_leq(P(d, "UD"), P(d, "UDUD")), error);
  CHECK_THROWS_AS(path_leq(P(d, "UD"), P(m, "UH")), error);
}

TEST_CASE("path meet and join") {
  auto d = path_family::dyck();
  CHECK(path_meet(P(d, "UUDDUD"), P(d, "UDUUDD")).steps() == "UDUDUD");
  CHECK(path_join(P(d, "UUDDUD"), P(d, "UDUUDD")).steps() == "UUDUDD");
  auto x = P(d, "UUDUDD");
  CHECK(path_meet(x, x) == x);
  CHECK(path_join(x, x) == x);
  auto s = path_family::schroder();
  CHECK(path_meet(P(s, "UUDHHD"), P(s, "UHHUDD")).steps() == "UHHHHD");
  CHECK(path_join(P(s, "UUDHHD"), P(s, "UHHUDD")).steps() == "UUDUDD");
}

TEST_CASE("build_lattice shapes") {
  path_lattice d4(path_family::dyck(), 4);
  CHECK(d4.size() == 14);
  CHECK(d4.height() == 6);
  CHECK(d4.element(d4.bottom()).steps() == "UDUDUDUD");
  CHECK(d4.element(d4.top()).steps() == "UUUUDDDD");

  path_lattice m4(path_family::motzkin(), 4);
  CHECK(m4.size() == 9);
  CHECK(m4.height() == 4);

  path_lattice s2(path_family::schroder(), 2);
  CHECK(s2.size() == 6);
  CHECK(s2.height() == 4);

  SUBCASE("lattice ranks agree with longest-chain poset ranks") {
    for (const path_lattice* lat : {&d4, &m4, &s2}) {
      CHECK(lat->poset().is_ranked());
      for (std::size_t i = 0; i < lat->size(); ++i)
        CHECK(lat->poset().ranks()[i] == lat->rank(i));
    }
  }

  SUBCASE("covers match the definition-based oracle") {
    path_lattice d3(path_family::dyck(), 3);
    path_lattice s3(path_family::schroder(), 3);
    path_lattice dl(path_family::dyck_like(3, 2), 2);
    for (const path_lattice* lat : {&d3, &m4, &s2, &s3, &dl})
      CHECK(lat->poset().cover_pairs() == oracle::covers_by_definition(lat->poset()));
  }
}

TEST_CASE("meet and join realize inf and sup") {
  std::vector<path_lattice> lats;
  for (long long n = 0; n <= 4; ++n) lats.emplace_back(path_family::dyck(), n);
  for (long long n = 0; n <= 5; ++n) lats.emplace_back(path_family::motzkin(), n);
  for (long long n = 0; n <= 3; ++n) lats.emplace_back(path_family::schroder(), n);
  lats.emplace_back(path_family::dyck_like(3, 2), 2);
  lats.emplace_back(path_family::dyck_like(5, 3), 1);
  for (const auto& lat : lats) {
    for (std::size_t i = 0; i < lat.size(); ++i)
      for (std::size_t j = i; j < lat.size(); ++j) {
        std::size_t m = lat.meet(i, j);
        std::size_t jn = lat.join(i, j);
        CHECK(lat.leq(m, i));
        CHECK(lat.leq(m, j));
        CHECK(lat.leq(i, jn));
        CHECK(lat.leq(j, jn));
        for (std::size_t z = 0; z < lat.size(); ++z) {
          if (lat.leq(z, i) && lat.leq(z, j)) CHECK(lat.leq(z, m));
          if (lat.leq(i, z) && lat.leq(j, z)) CHECK(lat.leq(jn, z));
        }
      }
  }
}

TEST_CASE("distributivity") {
  std::vector<path_lattice> lats;
  lats.emplace_back(path_family::dyck(), 4);
  lats.emplace_back(path_family::motzkin(), 4);
  lats.emplace_back(path_family::schroder(), 2);
  lats.emplace_back(path_family::dyck_like(3, 2), 1);
  for (const auto& lat : lats)
    for (std::size_t x = 0; x < lat.size(); ++x)
      for (std::size_t y = 0; y < lat.size(); ++y)
        for (std::size_t z = 0; z < lat.size(); ++z)
          CHECK(lat.meet(x, lat.join(y, z)) == lat.join(lat.meet(x, y), lat.meet(x, z)));
}

TEST_CASE("atoms, coatoms, socle, radical") {
  path_lattice d4(path_family::dyck(), 4);
  CHECK(atoms(d4).size() == 3);
  CHECK(coatoms(d4).size() == 1);
  CHECK(d4.element(coatoms(d4)[0]).steps() == "UUUDUDDD");
  CHECK(d4.element(socle(d4)).steps() == "UUDUDUDD");  // U(UD)^{n-1}D

  path_lattice m5(path_family::motzkin(), 5);
  CHECK(atoms(m5).size() == 4);
  CHECK(coatoms(m5).size() == 2);  // odd n
  CHECK(m5.element(socle(m5)).steps() == "UHHHD");
  path_lattice m4(path_family::motzkin(), 4);
  CHECK(coatoms(m4).size() == 1);  // even n
  CHECK(m4.element(coatoms(m4)[0]).steps() == "UHHD");

  path_lattice s3(path_family::schroder(), 3);
  CHECK(atoms(s3).size() == 3);  // (HH)^k UD (HH)^{n-k-1}, one per k = 0..n-1
  CHECK(coatoms(s3).size() == 1);
  CHECK(s3.element(coatoms(s3)[0]).steps() == "UUHHDD");
  CHECK(s3.element(socle(s3)).steps() == "UDUDUD");  // (UD)^n

  SUBCASE("radical of a one-coatom lattice is that coatom") {
    CHECK(radical(d4) == coatoms(d4)[0]);
    CHECK(radical(s3) == coatoms(s3)[0]);
  }
  SUBCASE("radical of M5 is the meet of its two coatoms") {
    CHECK(m5.element(radical(m5)).steps() == "UHHHD");
  }
  SUBCASE("degenerate sizes") {
    path_lattice d0(path_family::dyck(), 0);
    CHECK(d0.size() == 1);
    CHECK(socle(d0) == d0.bottom());
    CHECK(radical(d0) == d0.top());
    path_lattice d1(path_family::dyck(), 1);
    CHECK(d1.size() == 1);
    CHECK(d1.element(0).steps() == "UD");
  }
}

TEST_CASE("join irreducibles and spectra") {
  path_lattice d4(path_family::dyck(), 4);
  CHECK(join_irreducibles(d4).size() == 6);
  path_lattice m4(path_family::motzkin(), 4);
  CHECK(join_irreducibles(m4).size() == 4);
  path_lattice s2(path_family::schroder(), 2);
  std::set<std::string> ji;
  for (auto i : join_irreducibles(s2)) ji.insert(s2.element(i).steps());
  CHECK(ji == std::set<std::string>{"HHUD", "UDHH", "UHHD", "UUDD"});

  auto spec_d4 = spectrum_poset(d4);
  CHECK(spec_d4.size() == 6);
  CHECK(spec_d4.minimal_elements().size() == 3);
  CHECK(spec_d4.maximal_elements().size() == 1);

  path_lattice m5(path_family::motzkin(), 5);
  auto spec_m5 = spectrum_poset(m5);
  CHECK(spec_m5.size() == 6);
  CHECK(spec_m5.minimal_elements().size() == 4);
  CHECK(spec_m5.maximal_elements().size() == 2);

  path_lattice s3(path_family::schroder(), 3);
  CHECK(spectrum_poset(s3).size() == 9);
}

TEST_CASE("order ideals and J(P)") {
  auto antichain3 = finite_poset::from_leq(3, [](std::size_t i, std::size_t j) { return i == j; });
  CHECK(all_order_ideals(antichain3).size() == 8);
  CHECK(all_order_ideals(chain(2)).size() == 4);

  path_lattice d3(path_family::dyck(), 3);
  auto spec = spectrum_poset(d3);
  CHECK(all_order_ideals(spec).size() == 5);

  auto jp = ideals_poset(antichain3, 100);
  CHECK(jp.size() == 8);
  CHECK(jp.minimal_elements().size() == 1);
  CHECK(jp.maximal_elements().size() == 1);

  SUBCASE("ideal guard") {
    CHECK_THROWS_AS(all_order_ideals(boolean_algebra(4), 10), error);
  }
  SUBCASE("order_ideal rejects non-downward-closed sets") {
    auto c2 = chain(2);
    dyn_bits bad(c2.size());
    bad.set(2);
    CHECK_THROWS_AS(order_ideal(c2, bad), error);
    dyn_bits good(c2.size());
    good.set(0);
    CHECK_NOTHROW(order_ideal(c2, good));
  }
}

TEST_CASE("verify_birkhoff") {
  path_lattice d4(path_family::dyck(), 4);
  auto r = verify_birkhoff(d4);
  CHECK(r.ok);
  CHECK(r.ideal_of_element.size() == 14);
  CHECK(verify_birkhoff(path_lattice(path_family::motzkin(), 5)).ok);
  CHECK(verify_birkhoff(path_lattice(path_family::schroder(), 2)).ok);
  CHECK(verify_birkhoff(path_lattice(path_family::dyck_like(3, 2), 2)).ok);
}

TEST_CASE("verify_iso") {
  path_lattice d3(path_family::dyck(), 3);
  std::vector<std::uint32_t> id(d3.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<std::uint32_t>(i);
  CHECK(verify_iso(id, d3.poset(), d3.poset()));

  iso_counterexample why;
  std::vector<std::uint32_t> swapped = id;
  std::swap(swapped[d3.bottom()], swapped[d3.top()]);
  CHECK(!verify_iso(swapped, d3.poset(), d3.poset(), &why));
  CHECK(!why.reason.empty());
}

TEST_CASE("socle ideals and filters") {
  // principal filter above the socle of D_n is a copy of D_{n-1}
  path_lattice d4(path_family::dyck(), 4);
  path_lattice d3(path_family::dyck(), 3);
  CHECK(filter_is_smaller_lattice(d4, socle(d4), d3));

  // principal ideal below the socle of D_n / M_n is a boolean algebra B_{n-1}
  CHECK(ideal_below_is_boolean(d4, socle(d4), 3));
  path_lattice m5(path_family::motzkin(), 5);
  CHECK(ideal_below_is_boolean(m5, socle(m5), 4));

  // principal filter above the socle of M_n is a copy of M_{n-2}
  path_lattice m3(path_family::motzkin(), 3);
  CHECK(filter_is_smaller_lattice(m5, socle(m5), m3));

  // below the socle of S_n sits B_n
  path_lattice s3(path_family::schroder(), 3);
  CHECK(ideal_below_is_boolean(s3, socle(s3), 3));
}

TEST_CASE("boolean algebra, chain, interval") {
  auto b2 = boolean_algebra(2);
  CHECK(b2.size() == 4);
  CHECK(b2.cover_pairs().size() == 4);
  CHECK(chain(3).size() == 4);
  CHECK(chain(3).cover_pairs().size() == 3);

  // the interval [socle, UH..HD] of S_n is a boolean algebra with n-1 atoms
  path_lattice s3(path_family::schroder(), 3);
  std::size_t s = socle(s3);
  std::size_t sp = s3.index_of(validate(path_family::schroder(), "UHHHHD"));
  std::vector<std::uint32_t> elems;
  auto iv = interval_poset(s3.poset(), s, sp, &elems);
  CHECK(iv.size() == 4);
  std::size_t s_local = static_cast<std::size_t>(
      std::find(elems.begin(), elems.end(), static_cast<std::uint32_t>(s)) - elems.begin());
  auto interval_atoms = iv.covers_up(s_local);
  REQUIRE(interval_atoms.size() == 2);
  std::vector<std::uint32_t> map(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    std::uint32_t mask = 0;
    for (std::size_t t = 0; t < interval_atoms.size(); ++t)
      if (iv.leq(interval_atoms[t], i)) mask |= 1u << t;
    map[i] = mask;
  }
  CHECK(verify_iso(map, iv, boolean_algebra(2)));

  CHECK_THROWS_AS(interval_poset(s3.poset(), s3.top(), s3.bottom()), error);
}

TEST_CASE("lex product basics") {
  auto c1 = chain(1);
  auto prod = lex_product(c1, c1);
  CHECK(prod.size() == 4);
  CHECK(prod.cover_pairs().size() == 3);  // a 4-chain
  auto anti2 = finite_poset::from_leq(2, [](std::size_t i, std::size_t j) { return i == j; });
  auto two_chains = lex_product(anti2, c1);
  CHECK(two_chains.size() == 4);
  CHECK(two_chains.cover_pairs().size() == 2);
  CHECK(two_chains.minimal_elements().size() == 2);
}
