// pathlat: lattices of Dyck-like, Motzkin and Schroder paths on the command
// line. Exit codes: 0 success, 1 verification/consistency failure or guard
// violation, 2 usage error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pathlat/checks.hpp"
#include "pathlat/pathlat.hpp"

namespace {

using namespace pathlat;

struct cli_config {
  std::string family = "dyck";
  long long n = 0;
  std::uint64_t guard = k_default_guard;
  int max_series_order = 16;
  std::string format = "text";
  std::string output;
};

void add_common(CLI::App* cmd, cli_config& cfg, bool with_n = true) {
  cmd->add_option("--family", cfg.family,
                  "path family: dyck | dycklike:a,b | motzkin | schroder")
      ->capture_default_str();
  if (with_n) cmd->add_option("-n,--size", cfg.n, "size index of the lattice")->required();
  cmd->add_option("--max-lattice-elements", cfg.guard,
                  "largest lattice the tool will materialize")
      ->capture_default_str();
  cmd->add_option("--output", cfg.output, "write to a file instead of standard output");
}

int emit(const cli_config& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream os(cfg.output, std::ios::binary);
  if (!os) {
    std::cerr << "cannot open " << cfg.output << "\n";
    return 1;
  }
  os << text;
  return 0;
}

int cmd_enumerate(const cli_config& cfg) {
  auto fam = parse_family(cfg.family);
  auto paths = enumerate_paths(fam, cfg.n, cfg.guard);
  std::ostringstream os;
  if (cfg.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& p : paths)
      j.push_back({{"path", p.steps()}, {"rank", rank_of(p)}, {"area", area(p).str()}});
    os << j.dump(2) << "\n";
  } else {
    for (const auto& p : paths)
      os << p.steps() << "\t" << rank_of(p) << "\t" << area(p).str() << "\n";
    os << paths.size() << "\n";
  }
  return emit(cfg, os.str());
}

int cmd_lattice(const cli_config& cfg, const std::string& annotate) {
  auto fam = parse_family(cfg.family);
  path_lattice lat(fam, cfg.n, cfg.guard);
  std::vector<long long> chis;
  const std::vector<long long>* chi_ptr = nullptr;
  if (annotate == "chi") {
    chi_context ctx(lat);
    chis.resize(lat.size());
    for (std::size_t i = 0; i < lat.size(); ++i) chis[i] = ctx.chi(i);
    chi_ptr = &chis;
  } else if (!annotate.empty()) {
    std::cerr << "unknown annotation '" << annotate << "'\n";
    return 2;
  }
  if (cfg.format == "dot") return emit(cfg, lattice_to_dot(lat, chi_ptr));
  if (cfg.format == "json") return emit(cfg, lattice_to_json(lat, chi_ptr) + "\n");
  std::cerr << "lattice export supports --format dot or json\n";
  return 2;
}

int cmd_chi(const cli_config& cfg, const std::string& path_arg, bool all) {
  auto fam = parse_family(cfg.family);
  bool unit_family = fam.kind != family_kind::dyck_like || fam.is_dyck();
  if (!path_arg.empty()) {
    auto p = validate(fam, path_arg);
    if (p.size() != cfg.n) {
      std::cerr << "path has size " << p.size() << ", not " << cfg.n << "\n";
      return 2;
    }
    long long v;
    if (unit_family) {
      v = chi_of_path(p);
    } else {
      path_lattice lat(fam, cfg.n, cfg.guard);
      chi_context ctx(lat);
      v = ctx.chi(lat.index_of(p));
    }
    std::ostringstream os;
    os << "path=" << p.steps() << " rank=" << rank_of(p) << " chi=" << v;
    bool mismatch = false;
    if (unit_family) {
      long long comb = chi_combinatorial(p);
      os << " chi_comb=" << comb;
      long long k = 0;
      for (const auto& t : tunnels(p)) k = std::max(k, t.height);
      for (long long h = 0; h <= k; ++h) os << " t" << h << "=" << tunnel_count(p, h);
      mismatch = comb != v;
    }
    os << "\n";
    int rc = emit(cfg, os.str());
    if (rc) return rc;
    if (mismatch) {
      std::cerr << "mismatch: valuation chi=" << v << " differs from the combinatorial formula\n";
      return 1;
    }
    return 0;
  }
  if (!all) {
    std::cerr << "chi needs --path STEPS or --all\n";
    return 2;
  }
  path_lattice lat(fam, cfg.n, cfg.guard);
  chi_context ctx(lat);
  int rc = emit(cfg, chi_csv(lat, ctx));
  if (rc) return rc;
  if (unit_family) {
    for (std::size_t i = 0; i < lat.size(); ++i)
      if (ctx.chi(i) != chi_combinatorial(lat.element(i))) {
        std::cerr << "mismatch at " << lat.element(i).steps() << ": chi=" << ctx.chi(i)
                  << " formula=" << chi_combinatorial(lat.element(i)) << "\n";
        return 1;
      }
  }
  return 0;
}

int cmd_poly(const cli_config& cfg, int max_n) {
  auto fam = parse_family(cfg.family);
  auto table = series_table::build(fam, max_n);
  if (cfg.format == "csv") return emit(cfg, whitney_csv(table));
  return emit(cfg, whitney_triangle_text(table));
}

int cmd_verify(const cli_config& cfg, const std::string& suite_name) {
  auto suites = checks::all_suites();
  bool found = false, all_ok = true;
  std::ostringstream os;
  for (auto& [name, fn] : suites) {
    if (suite_name != "all" && suite_name != name) continue;
    found = true;
    os << "[" << name << "]\n";
    for (const auto& ln : fn()) {
      os << "  " << ln.name << ": " << (ln.ok ? "PASS" : "FAIL");
      if (!ln.ok && !ln.detail.empty()) os << " (" << ln.detail << ")";
      os << "\n";
      all_ok = all_ok && ln.ok;
    }
  }
  if (!found) {
    std::cerr << "unknown suite '" << suite_name << "'\n";
    return 2;
  }
  int rc = emit(cfg, os.str());
  if (rc) return rc;
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace pathlat;
  CLI::App app{"lattices of Dyck-like, Motzkin and Schroder paths"};
  app.require_subcommand(1);

  cli_config cfg;
  if (const char* env = std::getenv("PATHLAT_GUARD_ELEMENTS")) {
    try {
      cfg.guard = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "PATHLAT_GUARD_ELEMENTS is not a number\n";
      return 2;
    }
  }

  auto* c_enum = app.add_subcommand("enumerate", "list the paths of a family and size");
  add_common(c_enum, cfg);
  c_enum->add_option("--format", cfg.format, "text | json")->capture_default_str();

  auto* c_lat = app.add_subcommand("lattice", "export the Hasse diagram");
  add_common(c_lat, cfg);
  std::string annotate;
  c_lat->add_option("--format", cfg.format, "dot | json")->capture_default_str();
  c_lat->add_option("--annotate", annotate, "extra node data: chi");

  auto* c_chi = app.add_subcommand("chi", "Euler characteristics and tunnel tables");
  add_common(c_chi, cfg);
  std::string path_arg;
  bool all = false;
  c_chi->add_option("--path", path_arg, "a single path (step string over U, H, D)");
  c_chi->add_flag("--all", all, "tabulate the whole lattice as CSV");

  auto* c_poly = app.add_subcommand("poly", "Whitney numbers and rank polynomials");
  add_common(c_poly, cfg, false);
  int max_n = 8;
  c_poly->add_option("--max-n", max_n, "largest size to tabulate")->capture_default_str();
  c_poly->add_option("--format", cfg.format, "text | csv")->capture_default_str();
  c_poly->add_option("--max-series-order", cfg.max_series_order,
                     "truncation order for series checks")
      ->capture_default_str();

  auto* c_verify = app.add_subcommand("verify", "run the desk-scale verification suites");
  std::string suite_name = "all";
  c_verify->add_option("--suite", suite_name, "paths | order | spectrum | characteristic | rankpoly | all")
      ->capture_default_str();
  c_verify->add_option("--output", cfg.output, "write to a file instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(c_enum)) return cmd_enumerate(cfg);
    if (app.got_subcommand(c_lat)) return cmd_lattice(cfg, annotate);
    if (app.got_subcommand(c_chi)) return cmd_chi(cfg, path_arg, all);
    if (app.got_subcommand(c_poly)) return cmd_poly(cfg, max_n);
    if (app.got_subcommand(c_verify)) return cmd_verify(cfg, suite_name);
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == errc::bad_argument || e.code() == errc::illegal_step ||
                   e.code() == errc::nonzero_endpoint || e.code() == errc::below_axis ||
                   e.code() == errc::unpaired_flat
               ? 2
               : 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
