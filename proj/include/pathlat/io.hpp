#pragma once

#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pathlat/characteristic.hpp"
#include "pathlat/order.hpp"
#include "pathlat/paths.hpp"
#include "pathlat/rankpoly.hpp"

namespace pathlat {

inline path_family parse_family(const std::string& name) {
  if (name == "dyck") return path_family::dyck();
  if (name == "motzkin") return path_family::motzkin();
  if (name == "schroder") return path_family::schroder();
  if (name.rfind("dycklike:", 0) == 0) {
    auto rest = name.substr(9);
    auto comma = rest.find(',');
    if (comma == std::string::npos) raise(errc::bad_argument, "expected dycklike:a,b");
    int a = 0, b = 0;
    try {
      a = std::stoi(rest.substr(0, comma));
      b = std::stoi(rest.substr(comma + 1));
    } catch (const std::exception&) {
      raise(errc::bad_argument, "expected dycklike:a,b with integer a, b");
    }
    return path_family::dyck_like(a, b);
  }
  raise(errc::bad_argument, "unknown family '" + name + "'");
}

// --------------------------------------------------------------------------
// Hasse diagram exports

/// DOT digraph, one node per element labeled with the path and rank, one
/// upward edge per covering pair.
inline std::string lattice_to_dot(const path_lattice& lat,
                                  const std::vector<long long>* chi_values = nullptr) {
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < lat.size(); ++i) {
    os << "  n" << i << " [label=\"" << lat.element(i).steps() << "\\nr=" << lat.rank(i);
    if (chi_values) os << " chi=" << (*chi_values)[i];
    os << "\"];\n";
  }
  for (auto [lo, hi] : lat.poset().cover_pairs()) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string lattice_to_json(const path_lattice& lat,
                                   const std::vector<long long>* chi_values = nullptr) {
  nlohmann::json j;
  j["family"] = lat.family().name();
  j["n"] = lat.n();
  j["elements"] = nlohmann::json::array();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    nlohmann::json e{{"id", i}, {"path", lat.element(i).steps()}, {"rank", lat.rank(i)}};
    if (chi_values) e["chi"] = (*chi_values)[i];
    j["elements"].push_back(std::move(e));
  }
  j["covers"] = nlohmann::json::array();
  for (auto [lo, hi] : lat.poset().cover_pairs()) j["covers"].push_back({lo, hi});
  return j.dump(2);
}

// A lattice document read back from JSON: element paths in id order plus the
// cover relation; leq is rebuilt as the reflexive-transitive closure.
struct imported_lattice {
  path_family family;
  long long n = 0;
  std::vector<lattice_path> elements;
  std::vector<long long> ranks;
  finite_poset poset;
};

inline imported_lattice lattice_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  imported_lattice out{parse_family(j.at("family").get<std::string>()),
                       j.at("n").get<long long>(),
                       {},
                       {},
                       {}};
  std::size_t count = j.at("elements").size();
  out.elements.resize(count);
  out.ranks.assign(count, 0);
  std::vector<char> seen(count, 0);
  for (const auto& e : j.at("elements")) {
    std::size_t id = e.at("id").get<std::size_t>();
    if (id >= count || seen[id]) raise(errc::bad_argument, "bad element id in lattice document");
    seen[id] = 1;
    out.elements[id] = validate(out.family, e.at("path").get<std::string>());
    out.ranks[id] = e.at("rank").get<long long>();
  }
  std::vector<std::vector<std::uint32_t>> up(count);
  for (const auto& c : j.at("covers")) {
    std::size_t lo = c.at(0).get<std::size_t>(), hi = c.at(1).get<std::size_t>();
    if (lo >= count || hi >= count) raise(errc::bad_argument, "bad cover pair");
    up[lo].push_back(static_cast<std::uint32_t>(hi));
  }
  // reflexive-transitive closure of the covers
  std::vector<dyn_bits> reach(count, dyn_bits(count));
  std::vector<std::size_t> order(count);
  for (std::size_t i = 0; i < count; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return out.ranks[a] > out.ranks[b]; });
  for (auto i : order) {
    reach[i].set(i);
    for (auto h : up[i]) reach[i] = reach[i] | reach[h];
  }
  out.poset = finite_poset::from_leq(
      count, [&](std::size_t a, std::size_t b) { return reach[a].test(b); });
  return out;
}

// --------------------------------------------------------------------------
// Poset exports (spectra and friends)

inline std::string poset_to_dot(const finite_poset& p) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < p.size(); ++i)
    os << "  n" << i << " [label=\"" << p.label(i) << "\"];\n";
  for (auto [lo, hi] : p.cover_pairs()) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string poset_to_json(const finite_poset& p) {
  nlohmann::json j;
  j["elements"] = nlohmann::json::array();
  for (std::size_t i = 0; i < p.size(); ++i)
    j["elements"].push_back({{"id", i}, {"label", p.label(i)}, {"rank", p.ranks()[i]}});
  j["covers"] = nlohmann::json::array();
  for (auto [lo, hi] : p.cover_pairs()) j["covers"].push_back({lo, hi});
  return j.dump(2);
}

// --------------------------------------------------------------------------
// Tables

/// Tunnel list as JSON triples (k, x_start, x_end).
inline std::string tunnels_to_json(const lattice_path& p) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& t : tunnels(p)) j.push_back({t.height, t.x_start, t.x_end});
  return j.dump();
}

/// Per-element characteristic table: id, path, rank, chi, then chi_comb and
/// tunnel columns for the unit-step families.
inline std::string chi_csv(const path_lattice& lat, chi_context& ctx) {
  bool tunnels_defined =
      lat.family().kind != family_kind::dyck_like || lat.family().is_dyck();
  long long tmax = 0;
  if (tunnels_defined)
    for (std::size_t i = 0; i < lat.size(); ++i)
      tmax = std::max(tmax, max_tunnel_height(lat.element(i)));
  std::ostringstream os;
  os << "id,path,rank,chi";
  if (tunnels_defined) {
    os << ",chi_comb";
    for (long long k = 0; k <= tmax; ++k) os << ",t" << k;
  }
  os << "\n";
  for (std::size_t i = 0; i < lat.size(); ++i) {
    os << i << "," << lat.element(i).steps() << "," << lat.rank(i) << "," << ctx.chi(i);
    if (tunnels_defined) {
      os << "," << chi_combinatorial(lat.element(i));
      for (long long k = 0; k <= tmax; ++k) os << "," << tunnel_count(lat.element(i), k);
    }
    os << "\n";
  }
  return os.str();
}

inline std::string whitney_csv(const series_table& table) {
  std::ostringstream os;
  os << "n,k,W_k\n";
  for (std::size_t n = 0; n < table.rows.size(); ++n) {
    const auto& c = table.rows[n].coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) os << n << "," << k << "," << c[k] << "\n";
  }
  return os.str();
}

inline std::string whitney_triangle_text(const series_table& table) {
  std::ostringstream os;
  for (std::size_t n = 0; n < table.rows.size(); ++n) {
    os << n << ":";
    for (const auto& c : table.rows[n].coeffs()) os << " " << c;
    auto rep = is_unimodal(table.rows[n]);
    os << "   " << (rep.unimodal ? "unimodal(peak " + std::to_string(rep.index) + ")"
                                 : "NOT unimodal(valley " + std::to_string(rep.index) + ")");
    os << "\n";
  }
  return os.str();
}

}  // namespace pathlat
