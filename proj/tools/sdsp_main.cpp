// Command-line surface for the symmetric doubly-stochastic polytope toolkit.
//
// Exit codes: 0 success, 1 falsification detected, 2 usage error,
// 3 resource limit.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sdsp/acceptance.hpp"
#include "sdsp/conjectures.hpp"
#include "sdsp/json_io.hpp"

namespace {

using namespace sdsp;

struct GlobalOptions {
  std::string format = "json";
  std::string cache_dir;
  std::string convention = "proof";
  std::string two_count_mode = "full";
  ResourceLimits limits;
};

OrderConvention parse_convention(const std::string& s) {
  if (s == "proof") return OrderConvention::ProofConsistent;
  if (s == "literal") return OrderConvention::LiteralDef32;
  if (s == "refined") return OrderConvention::Refined;
  throw InputError("unknown convention \"" + s + "\" (proof|literal|refined)");
}

TwoCountMode parse_mode(const std::string& s) {
  if (s == "full") return TwoCountMode::FullMatrix;
  if (s == "upper") return TwoCountMode::UpperTriangle;
  throw InputError("unknown two-count mode \"" + s + "\" (full|upper)");
}

Family parse_family(const std::string& s) {
  if (s == "S") return Family::S;
  if (s == "Sigma") return Family::Sigma;
  throw InputError("unknown family \"" + s + "\" (S|Sigma)");
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

// Cache keyed by a content hash of the run configuration plus the code
// version; hits and misses must produce identical payloads.
std::string with_cache(const GlobalOptions& opts, const std::string& key_material,
                       const std::function<std::string()>& compute) {
  if (opts.cache_dir.empty()) return compute();
  std::ostringstream key;
  key << kVersion << "|" << opts.format << "|" << opts.convention << "|"
      << opts.two_count_mode << "|" << key_material;
  const std::filesystem::path file =
      std::filesystem::path(opts.cache_dir) / (std::to_string(fnv1a64(key.str())) + ".json");
  if (std::filesystem::exists(file)) {
    std::ifstream in(file);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  const std::string payload = compute();
  std::filesystem::create_directories(opts.cache_dir);
  std::ofstream out(file);
  out << payload;
  return payload;
}

std::string counts_csv(int n, Family family, int max_m) {
  std::ostringstream csv;
  csv << "m,count\n";
  for (int m = 0; m <= max_m; ++m) csv << m << "," << count_points(n, m, family) << "\n";
  return csv.str();
}

GroebnerBasis basis_for(int n, const GlobalOptions& opts, bool vertices_only) {
  const PointConfig config = vertices_only ? vertex_config(n) : full_config(n);
  const TermOrder order = TermOrder::for_config(config, parse_convention(opts.convention),
                                                parse_mode(opts.two_count_mode));
  return toric_groebner(config, order, opts.limits);
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Exact Ehrhart, Groebner, and Gorenstein computations for the "
               "polytopes of symmetric doubly-stochastic matrices"};
  app.require_subcommand(1);

  GlobalOptions opts;
  if (const char* env = std::getenv("SDSP_CACHE_DIR")) opts.cache_dir = env;
  app.add_option("--format", opts.format, "Output format: json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cache-dir", opts.cache_dir, "Result cache directory");
  app.add_option("--convention", opts.convention,
                 "Term-order convention: proof|literal|refined")
      ->check(CLI::IsMember({"proof", "literal", "refined"}));
  app.add_option("--two-count", opts.two_count_mode,
                 "Cell counting for the order: full|upper")
      ->check(CLI::IsMember({"full", "upper"}));
  app.add_option("--max-points", opts.limits.max_points, "Enumeration capacity limit");
  app.add_option("--max-basis", opts.limits.max_basis, "Groebner basis size limit");
  app.add_option("--max-pairs", opts.limits.max_pairs, "S-pair queue limit");
  app.add_option("--time-budget", opts.limits.time_budget_seconds,
                 "Groebner time budget in seconds");

  int n = 3, m = 1, table = -1;
  std::string family = "S", hstar_family = "S", points_mode = "full";
  std::string input_file, conjecture_id;
  bool count_only = false, allow_large = false, both_conventions = false;

  auto* points = app.add_subcommand("points", "Enumerate or count lattice points");
  points->add_option("--n", n)->required();
  points->add_option("--m", m);
  points->add_option("--family", family)->check(CLI::IsMember({"S", "Sigma"}));
  points->add_flag("--count-only", count_only, "Print the count instead of the points");
  points->add_option("--table", table, "CSV count table for m = 0..TABLE");

  auto* hstar = app.add_subcommand("hstar", "h*-vector of S_n, Sigma_n, or P_n");
  hstar->add_option("--n", n)->required();
  hstar->add_option("--family", hstar_family)->check(CLI::IsMember({"S", "Sigma", "P"}));

  auto* quasi = app.add_subcommand("quasi", "Quasipolynomial constituents of Sigma_n");
  quasi->add_option("--n", n)->required();

  auto* reciprocity = app.add_subcommand("reciprocity", "Interior-point reciprocity check");
  reciprocity->add_option("--n", n)->required();

  auto* decompose_cmd =
      app.add_subcommand("decompose", "Write a point of m*S_n as a sum of m points of S_n");
  decompose_cmd->add_option("--m", m)->required();
  decompose_cmd->add_option("--in", input_file, "Matrix JSON file (- for stdin)")->required();

  auto* groebner = app.add_subcommand("groebner", "Reduced Groebner basis of the toric ideal");
  groebner->add_option("--n", n)->required();
  groebner->add_option("--points", points_mode)->check(CLI::IsMember({"full", "vertices"}));
  groebner->add_flag("--allow-large", allow_large, "Permit n >= 4 full-configuration runs");

  auto* thm13 = app.add_subcommand("verify-thm13", "Machine verification of Theorem 1.3");
  thm13->add_option("--n", n)->required();
  thm13->add_flag("--both", both_conventions, "Report both order conventions");
  thm13->add_flag("--allow-large", allow_large);

  auto* gorenstein = app.add_subcommand("gorenstein", "Gorenstein witness for S_n");
  gorenstein->add_option("--n", n)->required();

  auto* simplex = app.add_subcommand("simplex", "Circulant special simplex for even n");
  simplex->add_option("--n", n)->required();

  auto* vertices = app.add_subcommand("vertices", "Vertices of S_n among its lattice points");
  vertices->add_option("--n", n)->required();

  auto* conjecture = app.add_subcommand("conjecture", "Run a conjecture checker");
  conjecture->add_option("id", conjecture_id, "3.3|4.1a|4.1b|4.2|4.3|4.4")->required();
  conjecture->add_option("--n", n);
  conjecture->add_flag("--allow-large", allow_large);

  auto* suite = app.add_subcommand("suite", "Run the acceptance battery");
  (void)suite;

  // global options remain usable after the subcommand name
  for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << Json{{"error", Json{{"type", "usage"}, {"message", e.what()}}}}.dump()
              << "\n";
    return 2;
  }

  std::string payload;
  int exit_code = 0;

  if (points->parsed()) {
    const Family fam = parse_family(family);
    payload = with_cache(
        opts,
        "points|" + std::to_string(n) + "|" + std::to_string(m) + "|" + family + "|" +
            std::to_string(count_only) + "|" + std::to_string(table),
        [&] {
          if (table >= 0 || opts.format == "csv") return counts_csv(n, fam, std::max(table, m));
          if (count_only)
            return Json{{"n", n}, {"m", m}, {"family", family},
                        {"count", big_to_json(count_points(n, m, fam))}}
                .dump();
          return point_list_to_json(enumerate_points(n, m, fam, opts.limits.max_points))
              .dump();
        });
  } else if (hstar->parsed()) {
    payload = with_cache(opts, "hstar|" + std::to_string(n) + "|" + hstar_family, [&] {
      if (opts.format == "csv") {
        const Family fam = hstar_family == "Sigma" ? Family::Sigma : Family::S;
        const int d = n * (n - 1) / 2;
        return counts_csv(n, fam, hstar_family == "Sigma" ? 2 * d + 1 : d + 1);
      }
      HStarVector h;
      if (hstar_family == "S")
        h = hstar_S(n);
      else if (hstar_family == "Sigma")
        h = hstar_sigma(n);
      else {
        const HStarWithVerdict hp = hstar_P(n);
        Json j = hstar_to_json(hp.hstar);
        j["unimodal"] = hp.unimodal;
        return j.dump();
      }
      return hstar_to_json(h).dump();
    });
  } else if (quasi->parsed()) {
    payload = with_cache(opts, "quasi|" + std::to_string(n),
                         [&] { return quasi_to_json(quasipoly_sigma(n)).dump(); });
  } else if (reciprocity->parsed()) {
    payload = with_cache(opts, "reciprocity|" + std::to_string(n),
                         [&] { return reciprocity_to_json(reciprocity_check(n)).dump(); });
    if (Json::parse(payload).at("match") == false) exit_code = 1;
  } else if (decompose_cmd->parsed()) {
    Json input;
    try {
      if (input_file == "-") {
        input = Json::parse(std::cin);
      } else {
        std::ifstream in(input_file);
        if (!in) throw InputError("cannot open " + input_file);
        input = Json::parse(in);
      }
    } catch (const Json::parse_error& e) {
      throw InputError(std::string("matrix JSON parse error: ") + e.what());
    }
    const SymIntMatrix x = matrix_from_json(input);
    payload = decomposition_to_json(decompose(x, m)).dump();
  } else if (groebner->parsed()) {
    const bool vertices_only = points_mode == "vertices";
    if (!vertices_only && n >= 4 && !allow_large)
      throw InputError("full-configuration Groebner at n >= 4 requires --allow-large");
    payload = with_cache(
        opts, "groebner|" + std::to_string(n) + "|" + points_mode,
        [&] { return basis_to_json(basis_for(n, opts, vertices_only)).dump(); });
  } else if (thm13->parsed()) {
    if (n >= 4 && !allow_large)
      throw InputError("Theorem 1.3 verification at n >= 4 requires --allow-large");
    payload = with_cache(opts, "thm13|" + std::to_string(n) + "|" + std::to_string(both_conventions), [&] {
      const PointConfig config = full_config(n);
      Json out = Json::object();
      const std::vector<std::string> convs =
          both_conventions ? std::vector<std::string>{"proof", "literal"}
                           : std::vector<std::string>{opts.convention};
      for (const auto& cv : convs) {
        const TermOrder order = TermOrder::for_config(config, parse_convention(cv),
                                                      parse_mode(opts.two_count_mode));
        const GroebnerBasis basis = toric_groebner(config, order, opts.limits);
        out[cv] = theorem13_to_json(verify_theorem13(basis, config));
      }
      return out.dump();
    });
    const Json parsed = Json::parse(payload);
    for (const auto& [cv, rep] : parsed.items())
      if (!(rep.at("p1").get<bool>() && rep.at("p2").get<bool>() && rep.at("p4").get<bool>()))
        exit_code = 1;  // Theorem 1.3 (1),(2),(4) hold for any order
  } else if (gorenstein->parsed()) {
    payload = with_cache(opts, "gorenstein|" + std::to_string(n), [&] {
      const auto w = gorenstein_witness(n);
      Json j{{"n", n}, {"gorenstein", w.has_value()}};
      j["witness"] = w ? Json{{"index", w->index}, {"matrix", matrix_to_json(w->c)}}
                       : Json(nullptr);
      return j.dump();
    });
  } else if (simplex->parsed()) {
    payload = with_cache(opts, "simplex|" + std::to_string(n), [&] {
      const SpecialSimplex s = special_simplex(n);
      Json verts = Json::array();
      for (const auto& v : s.vertices) verts.push_back(matrix_to_json(v));
      return Json{{"n", s.n}, {"k", s.vertices.size()}, {"vertices", verts}}.dump();
    });
  } else if (vertices->parsed()) {
    payload = with_cache(opts, "vertices|" + std::to_string(n), [&] {
      return point_list_to_json(polytope_vertices(n)).dump();
    });
  } else if (conjecture->parsed()) {
    payload = with_cache(
        opts, "conjecture|" + conjecture_id + "|" + std::to_string(n) + "|" +
                  std::to_string(allow_large),
        [&] {
          ConjectureReport rep;
          if (conjecture_id == "4.1a" || conjecture_id == "4.1b") {
            const PointConfig config = full_config(n);
            const TermOrder order =
                TermOrder::for_config(config, parse_convention(opts.convention),
                                      parse_mode(opts.two_count_mode));
            const GroebnerBasis basis = toric_groebner(config, order, opts.limits);
            rep = conjecture_id == "4.1a" ? check_connectivity(basis, config)
                                          : check_zero_one_summand(basis, config);
          } else if (conjecture_id == "4.2") {
            rep = check_refined_order(n, allow_large, parse_mode(opts.two_count_mode));
          } else if (conjecture_id == "4.3") {
            rep = check_hstar_P_unimodal(n);
          } else if (conjecture_id == "4.4") {
            rep = check_vertex_ideal(n, allow_large);
          } else if (conjecture_id == "3.3") {
            rep = check_squarefree_triangulation(n, parse_convention(opts.convention),
                                                 allow_large);
          } else {
            throw InputError("unknown conjecture id \"" + conjecture_id + "\"");
          }
          return rep.to_json().dump();
        });
    const std::string verdict = Json::parse(payload).at("verdict").get<std::string>();
    if (verdict == "counterexample") exit_code = 1;
    if (verdict == "resource-limit") exit_code = 3;
  } else if (suite->parsed()) {
    const auto results = run_acceptance(std::cout);
    return acceptance_passed(results) ? 0 : 1;
  }

  if (opts.format == "text" && !payload.empty() && payload.front() == '{') {
    std::cout << Json::parse(payload).dump(2) << "\n";
  } else {
    std::cout << payload;
    if (payload.empty() || payload.back() != '\n') std::cout << "\n";
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const CapacityError& e) {
    std::cerr << Json{{"error", Json{{"type", "resource-limit"}, {"message", e.what()}}}}.dump()
              << "\n";
    return 3;
  } catch (const FalsificationError& e) {
    std::cerr << Json{{"error", Json{{"type", "falsification"}, {"message", e.what()}}}}.dump()
              << "\n";
    return 1;
  } catch (const InputError& e) {
    std::cerr << Json{{"error", Json{{"type", "input"}, {"message", e.what()}}}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", Json{{"type", "internal"}, {"message", e.what()}}}}.dump()
              << "\n";
    return 1;
  }
}
