// cubicplanar: counts, constants, moments and self-checks for cubic planar
// graph families.

#include <cmath>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cubic/assemble.hpp"
#include "cubic/moments.hpp"
#include "cubic/recurrence.hpp"
#include "cubic/singular.hpp"
#include "cubic/trivariate.hpp"
#include "cubic/verify.hpp"

using namespace cubic;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Family family_arg(const std::string& s) {
  try {
    return parse_family(s);
  } catch (const std::exception&) {
    throw UsageError("unknown family '" + s +
                     "' (connected, all, biconnected, multigraph, connected-multigraph, triangle-free, "
                     "connected-triangle-free)");
  }
}

int digits_for(unsigned bits) { return std::max(10, int(bits * 0.30103) - 8); }

std::string dec(const BigFloat& x, unsigned bits) { return to_decimal(x, digits_for(bits)); }

int run_census(const std::string& fam, int N, const std::string& format, bool triangles) {
  Family f = family_arg(fam);
  if (N < 2 || N % 2) throw UsageError("order N must be even and at least 2");
  if (triangles) {
    if (f != Family::Connected) throw UsageError("--triangles is available for the connected family");
    auto b = trivariate::solve_triangle_marked(N);
    json rows = json::array();
    if (format == "csv") std::cout << "n,triangles,count\n";
    for (int n = 2; n <= N; n += 2)
      for (auto& [k, c] : trivariate::triangle_distribution(b, n)) {
        if (c == 0) continue;
        if (format == "json")
          rows.push_back({{"n", n}, {"triangles", k}, {"count", c.get_str()}});
        else if (format == "csv")
          std::cout << n << ',' << k << ',' << c.get_str() << '\n';
        else
          std::cout << n << ", " << k << ", " << c.get_str() << '\n';
      }
    if (format == "json") std::cout << json{{"family", fam}, {"rows", rows}}.dump(2) << '\n';
    return 0;
  }
  auto t = assemble::census(f, N);
  if (format == "json")
    std::cout << t.to_json().dump(2) << '\n';
  else if (format == "csv")
    std::cout << t.to_csv();
  else
    for (const auto& r : t.rows) std::cout << r.n << ", " << r.count.get_str() << '\n';
  return 0;
}

int run_constants(const std::string& fam, unsigned bits, const std::string& format) {
  Family f = family_arg(fam);
  PrecisionScope scope(bits);
  auto c = singular::family_constants(f);
  json j;
  j["family"] = family_name(f);
  j["precision_bits"] = bits;
  j["rho"] = dec(c.rho, bits);
  j["growth"] = dec(c.gamma, bits);
  j["amplitude"] = dec(c.amplitude, bits);
  j["rho_from_polynomial"] = dec(c.rho_from_polynomial, bits);
  j["modulus_unique"] = c.modulus_unique;
  if (f == Family::All) j["probability"] = dec(c.detail("p"), bits);
  if (f == Family::Multigraph) j["probability"] = dec(c.detail("p_m"), bits);
  if (f == Family::Connected || f == Family::All) {
    auto tm = singular::triangle_moments();
    j["moments"] = {{"triangles", {{"mu", dec(tm.moments.mu, bits)}, {"lambda", dec(tm.moments.lambda, bits)}}}};
  }
  json d = json::object();
  for (const auto& [k, v] : c.details) d[k] = dec(v, bits);
  j["details"] = d;
  if (format == "json") {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "family     " << family_name(f) << '\n'
              << "rho        " << to_fixed(c.rho, 12) << '\n'
              << "growth     " << to_fixed(c.gamma, 12) << '\n'
              << "amplitude  " << to_fixed(c.amplitude, 12) << '\n';
    if (j.contains("probability")) std::cout << "probability " << j["probability"].get<std::string>().substr(0, 14) << '\n';
    for (const auto& [k, v] : c.details) std::cout << "  " << k << " = " << to_fixed(v, 12) << '\n';
  }
  return 0;
}

json moment_json(const singular::MomentPair& m, unsigned bits) {
  return {{"mu", dec(m.mu, bits)}, {"lambda", dec(m.lambda, bits)}};
}

int run_moments(const std::string& what, int size, const std::string& aut_s, bool k4minus, unsigned bits,
                const std::string& format) {
  PrecisionScope scope(bits);
  json j;
  j["parameter"] = what;
  singular::MomentPair shown;
  if (what == "triangles") {
    auto tm = singular::triangle_moments();
    shown = tm.moments;
    j["rho"] = dec(tm.printed_implicit.rho, bits);
    j["rho_prime"] = dec(tm.printed_implicit.d1, bits);
    j["rho_second"] = dec(tm.printed_implicit.d2, bits);
    j["path_disagreement"] = to_decimal(tm.disagreement, 3);
  } else if (what == "cherry" || what == "brick") {
    bool cherry = what == "cherry";
    if (k4minus && cherry) throw UsageError("--k4minus applies to bricks");
    Rat aut = aut_s.empty() ? (k4minus ? singular::k4_minus_aut : Rat(1)) : parse_rat(aut_s);
    if (aut <= 0) throw UsageError("aut must be positive");
    if (k4minus) {
      size = 4;
    } else if (size < (cherry ? 6 : 4)) {
      throw UsageError(cherry ? "cherries have at least 6 vertices" : "bricks have at least 4 vertices");
    }
    singular::Marking m{cherry ? singular::Marking::Cherry
                               : (k4minus ? singular::Marking::K4Minus : singular::Marking::Brick),
                        size, aut};
    auto num = singular::marked_moments(m);
    j["size"] = size;
    j["aut"] = to_fraction_string(aut);
    j["numeric"] = moment_json(num.moments, bits);
    shown = num.moments;
    if (!k4minus) {
      auto cf = cherry ? singular::cherry_closed_form(size, aut) : singular::brick_closed_form(size, aut);
      j["closed_form"] = moment_json(cf, bits);
      shown = cf;
    }
  } else {
    throw UsageError("moments parameter must be triangles, cherry or brick");
  }
  j["mu"] = dec(shown.mu, bits);
  j["lambda"] = dec(shown.lambda, bits);
  if (format == "json")
    std::cout << j.dump(2) << '\n';
  else
    std::cout << "mu      " << to_fixed(shown.mu, 12) << "\nlambda  " << to_fixed(shown.lambda, 12) << '\n';
  return 0;
}

int run_verify(const std::string& level, bool corrupt, const std::string& format) {
  if (level != "quick" && level != "full") throw UsageError("verify level must be quick or full");
  trivariate::TriangleOptions opt;
  if (corrupt) opt.p1_loop_weight = 2;
  auto rep = verify::run(level == "full" ? verify::Level::Full : verify::Level::Quick, opt);
  if (format == "json") {
    json cs = json::array();
    for (const auto& c : rep.checks) cs.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    std::cout << json{{"level", level}, {"pass", rep.all_pass()}, {"checks", cs}}.dump(2) << '\n';
  } else {
    int failed = 0;
    for (const auto& c : rep.checks) {
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
      std::cout << '\n';
      failed += !c.pass;
    }
    std::cout << (failed ? std::to_string(failed) + " check(s) failed" : "all checks passed") << '\n';
  }
  return rep.all_pass() ? 0 : 1;
}

int run_recurrence(const std::string& fam, int max_order, int max_degree, int N, int holdout,
                   const std::string& format) {
  Family f = family_arg(fam);
  if (N < 2 || N % 2) throw UsageError("order N must be even and at least 2");
  auto t = assemble::census(f, N);
  std::optional<assemble::Recurrence> r;
  try {
    r = assemble::guess_recurrence(t, max_order, max_degree, holdout);
  } catch (const assemble::InsufficientTerms& e) {
    throw UsageError(e.what());
  }
  if (format == "json") {
    json j{{"family", family_name(f)}, {"terms", t.rows.size()}, {"index", "k = n/2"}};
    j["recurrence"] = r ? r->to_json() : json(nullptr);
    std::cout << j.dump(2) << '\n';
  } else if (r) {
    std::cout << "a(k) = count at n = 2k\n" << r->to_string() << '\n'
              << "fitted on " << r->training_equations << " equations, confirmed on " << r->holdout_equations
              << " held-out\n";
  } else {
    std::cout << "none found\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts and asymptotic constants for labeled cubic planar graphs"};
  app.require_subcommand(1);
  std::string format = "table";
  auto add_format = [&](CLI::App* sc) {
    sc->add_option("--format", format, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));
  };
  unsigned bits = default_precision_bits();
  auto add_bits = [&](CLI::App* sc) {
    sc->add_option("--bits", bits, "working precision in bits (default $CUBICPLANAR_PRECISION or 256)")
        ->check(CLI::Range(64u, 100000u));
  };

  std::string family;
  int N = 32;
  bool triangles = false;
  auto* census = app.add_subcommand("census", "exact counts for even n <= N");
  census->add_option("family", family)->required();
  census->add_option("-N,--order", N, "largest n (even)");
  census->add_flag("--triangles", triangles, "connected graphs split by number of triangles");
  add_format(census);

  auto* constants = app.add_subcommand("constants", "singularity and asymptotic constants");
  constants->add_option("family", family)->required();
  add_bits(constants);
  add_format(constants);

  std::string parameter, aut;
  int size = 0;
  bool k4minus = false;
  auto* moments = app.add_subcommand("moments", "limit-law constants: triangles | cherry h aut | brick b aut");
  moments->add_option("parameter", parameter)->required();
  moments->add_option("size", size, "cherry or brick order");
  moments->add_option("aut", aut, "automorphism count");
  moments->add_flag("--k4minus", k4minus, "the brick K4 minus an edge");
  add_bits(moments);
  add_format(moments);

  std::string level = "quick";
  bool corrupt = false;
  auto* verify = app.add_subcommand("verify", "self-checks: quick or full");
  verify->add_option("level", level)->check(CLI::IsMember({"quick", "full"}));
  verify->add_flag("--corrupt-triangle-system", corrupt)->group("");
  add_format(verify);

  int max_order = 4, max_degree = 4, holdout = 5;
  int rec_N = 60;
  auto* rec = app.add_subcommand("recurrence", "guess a P-recurrence for a count table");
  rec->add_option("family", family)->required();
  rec->add_option("--max-order", max_order);
  rec->add_option("--max-degree", max_degree);
  rec->add_option("-N,--order", rec_N, "largest n used (even)");
  rec->add_option("--holdout", holdout, "held-out equations")->check(CLI::PositiveNumber);
  add_format(rec);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (census->parsed()) return run_census(family, N, format, triangles);
    if (constants->parsed()) return run_constants(family, bits, format);
    if (moments->parsed()) return run_moments(parameter, size, aut, k4minus, bits, format);
    if (verify->parsed()) return run_verify(level, corrupt, format);
    if (rec->parsed()) return run_recurrence(family, max_order, max_degree, rec_N, holdout, format);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
