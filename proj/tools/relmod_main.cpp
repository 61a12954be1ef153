// Command-line front end. Builds JSON requests, sends them through the C
// API, and renders the responses. Links only the public C interface.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "relmod.h"

namespace {

using Json = nlohmann::json;

struct GlobalConfig {
  int m = 2;
  int n = 1;
  int ell = 5;
  std::string ideal = "pert";
  double tol = 0.0;  // 0 = library default; verify: check-tolerance override
  std::string format = "table";
  int precision = 12;
  std::optional<unsigned> seed;
};

// ------------------------------------------------------------- rendering

std::string fmt_num(double x, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, x);
  return buf;
}

bool is_complex_obj(const Json& j) {
  return j.is_object() && j.size() == 2 && j.contains("re") && j.contains("im");
}

std::string fmt_complex(const Json& j, int precision) {
  const double re = j.at("re").get<double>();
  const double im = j.at("im").get<double>();
  std::string out = "{" + fmt_num(re, precision) + ", " +
                    fmt_num(im, precision) + "}";
  return out;
}

// Generic deterministic table renderer: objects one "key = value" line per
// field (alphabetical), arrays as indexed lines, complex as {re, im}.
void render(const Json& j, const std::string& prefix, int precision) {
  if (is_complex_obj(j)) {
    std::printf("%s%s\n", prefix.empty() ? "" : (prefix + " = ").c_str(),
                fmt_complex(j, precision).c_str());
    return;
  }
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      const std::string path = prefix.empty() ? key : prefix + "." + key;
      render(value, path, precision);
    }
    return;
  }
  if (j.is_array()) {
    bool scalar = true;
    for (const Json& e : j)
      if (!(e.is_number() || e.is_string() || e.is_boolean() ||
            is_complex_obj(e)))
        scalar = false;
    if (scalar) {
      std::string line;
      for (const Json& e : j) {
        if (!line.empty()) line += ", ";
        if (is_complex_obj(e))
          line += fmt_complex(e, precision);
        else if (e.is_number())
          line += fmt_num(e.get<double>(), precision);
        else
          line += e.dump();
      }
      std::printf("%s = [%s]\n", prefix.c_str(), line.c_str());
      return;
    }
    int i = 0;
    for (const Json& e : j) {
      render(e, prefix + "[" + std::to_string(i) + "]", precision);
      ++i;
    }
    return;
  }
  std::string shown;
  if (j.is_number())
    shown = fmt_num(j.get<double>(), precision);
  else if (j.is_string())
    shown = j.get<std::string>();
  else
    shown = j.dump();
  std::printf("%s = %s\n", prefix.c_str(), shown.c_str());
}

// -------------------------------------------------------------- plumbing

[[noreturn]] void die(int code, const std::string& message) {
  std::fprintf(stderr, "relmod: %s\n", message.c_str());
  std::exit(code);
}

Json parse_complex_arg(const std::string& text, const std::string& flag) {
  std::istringstream is(text);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(is >> re)) die(2, flag + ": expected RE or RE,IM, got '" + text + "'");
  if (is >> comma) {
    if (comma != ',' || !(is >> im))
      die(2, flag + ": expected RE or RE,IM, got '" + text + "'");
  }
  return Json{{"re", re}, {"im", im}};
}

Json parse_json_arg(const std::string& text, const std::string& flag) {
  const Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) die(2, flag + ": invalid JSON: " + text);
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) die(2, "cannot open diagram file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const Json j = Json::parse(buf.str(), nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) die(2, "invalid JSON in diagram file: " + path);
  return j;
}

struct CtxGuard {
  relmod_ctx* ctx = nullptr;
  ~CtxGuard() { relmod_ctx_free(ctx); }
};

// Runs one request against a fresh context and renders the result.
// Exit codes: 0 success, 1 domain/request error, 2 configuration error.
[[noreturn]] void execute(const GlobalConfig& g, Json request) {
  CtxGuard guard;
  const relmod_status cst = relmod_ctx_new(g.m, g.n, g.ell, g.ideal.c_str(),
                                           g.tol, &guard.ctx);
  if (cst != RELMOD_OK)
    die(2, std::string("configuration error (") + relmod_status_name(cst) +
               "): " + relmod_global_last_error());

  char* out = nullptr;
  const relmod_status st =
      relmod_request(guard.ctx, request.dump().c_str(), &out);
  const Json response =
      out ? Json::parse(std::string(out)) : Json{{"error", "no response"}};
  relmod_string_free(out);
  if (st != RELMOD_OK)
    die(1, std::string("error (") + relmod_status_name(st) + "): " +
               response.value("error", std::string("unknown")));

  const Json& result = response.at("result");
  if (g.format == "json")
    std::printf("%s\n", result.dump(2).c_str());
  else
    render(result, "", g.precision);
  std::exit(0);
}

// Verify: print the per-criterion table (or the JSON report) and exit with
// 0 iff the suite passed, 1 on failures, 2 on configuration errors.
[[noreturn]] void execute_verify(const GlobalConfig& g) {
  Json options{{"m", g.m}, {"n", g.n}, {"ell", g.ell}};
  if (g.seed) options["seed"] = *g.seed;
  if (g.tol > 0) options["tol"] = g.tol;

  char* out = nullptr;
  const relmod_status st = relmod_verify(options.dump().c_str(), &out);
  const Json response =
      out ? Json::parse(std::string(out)) : Json{{"error", "no response"}};
  relmod_string_free(out);
  if (st != RELMOD_OK)
    die(2, std::string("configuration error (") + relmod_status_name(st) +
               "): " + response.value("error", std::string("unknown")));

  const Json& report = response.at("result");
  if (g.format == "json") {
    std::printf("%s\n", report.dump(2).c_str());
  } else {
    const Json& opts = report.at("options");
    std::printf("verify: sl(%d|%d), ell = %d, seed = %llu\n",
                opts.at("m").get<int>(), opts.at("n").get<int>(),
                opts.at("ell").get<int>(),
                static_cast<unsigned long long>(
                    opts.at("seed").get<unsigned long>()));
    for (const Json& c : report.at("criteria")) {
      std::printf("criterion %2d %-24s %s\n", c.at("number").get<int>(),
                  c.at("name").get<std::string>().c_str(),
                  c.at("pass").get<bool>() ? "PASS" : "FAIL");
      for (const Json& ch : c.at("checks"))
        if (!ch.at("pass").get<bool>())
          std::printf("    FAIL %s: residual %s, tol %s\n",
                      ch.at("name").get<std::string>().c_str(),
                      fmt_num(ch.at("residual").get<double>(), 6).c_str(),
                      fmt_num(ch.at("tol").get<double>(), 6).c_str());
    }
    std::printf("verify: %s\n",
                report.at("pass").get<bool>() ? "all criteria passed"
                                              : "FAILURES above");
  }
  std::exit(report.at("pass").get<bool>() ? 0 : 1);
}

// Weight argument: --weight takes a JSON array; --a/--c build the sl(2|1)
// highest weight (c, a) when the scale is (2,1).
Json weight_from_flags(const GlobalConfig& g, const std::string& weight_json,
                       const std::string& a, int c) {
  if (!weight_json.empty()) return parse_json_arg(weight_json, "--weight");
  if (a.empty()) die(2, "give --weight or --a");
  if (g.m != 2 || g.n != 1)
    die(2, "--a/--c shorthand is for sl(2|1); use --weight for other scales");
  return Json::array({c, parse_complex_arg(a, "--a")});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Quantum sl(m|n) invariants at odd roots of unity: typicality, "
      "modified dimensions, twists, Hopf pairings, fusion, tangle "
      "evaluation and surgery invariants."};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalConfig g;
  app.add_option("--m", g.m, "Superalgebra parameter m (default 2)");
  app.add_option("--n", g.n, "Superalgebra parameter n (default 1)");
  app.add_option("--ell", g.ell, "Order of the root of unity (odd, default 5)");
  app.add_option("--ideal", g.ideal, "Trace ideal: pert or proj");
  app.add_option("--tol", g.tol,
                 "Tolerance override (context tolerance; for verify, "
                 "replaces every check tolerance)");
  app.add_option("--format", g.format, "Output format: table or json")
      ->check(CLI::IsMember({"table", "json"}));
  app.add_option("--precision", g.precision,
                 "Significant digits in table output (default 12)");
  unsigned seed_flag = 0;
  CLI::Option* seed_opt =
      app.add_option("--seed", seed_flag, "Seed for randomized checks");

  std::string weight_json, a_arg, a2_arg, b_arg, lam_arg, mu_arg;
  std::string mode = "both", diagram_path, left_json, right_json, module_json;
  std::string type = "typical";
  int c_arg = 0, c2_arg = 0, parity_arg = 0;
  bool strict = false, negative = false, entries = false;

  CLI::App* typical = app.add_subcommand("typical", "Typicality of a weight");
  typical->add_option("--weight", weight_json, "Weight as a JSON array");
  typical->add_option("--a", a_arg, "sl(2|1) odd coordinate RE[,IM]");
  typical->add_option("--c", c_arg, "sl(2|1) even coordinate (default 0)");

  CLI::App* alcove = app.add_subcommand("alcove", "Alcove membership");
  alcove->add_option("--weight", weight_json, "Weight as a JSON array");
  alcove->add_option("--a", a_arg, "sl(2|1) odd coordinate RE[,IM]");
  alcove->add_option("--c", c_arg, "sl(2|1) even coordinate (default 0)");
  alcove->add_flag("--strict", strict, "Open alcove instead of closed");

  CLI::App* mdim = app.add_subcommand("mdim", "Modified dimension");
  mdim->add_option("--weight", weight_json, "Weight as a JSON array");
  mdim->add_option("--a", a_arg, "sl(2|1) odd coordinate RE[,IM]");
  mdim->add_option("--c", c_arg, "sl(2|1) even coordinate (default 0)");

  CLI::App* twist = app.add_subcommand("twist", "Ribbon twist scalar");
  twist->add_option("--weight", weight_json, "Weight as a JSON array");
  twist->add_option("--a", a_arg, "sl(2|1) odd coordinate RE[,IM]");
  twist->add_option("--c", c_arg, "sl(2|1) even coordinate (default 0)");

  CLI::App* sprime = app.add_subcommand("sprime", "Normalized Hopf pairing");
  sprime->add_option("--lam", lam_arg, "Cut-strand weight (JSON array)")
      ->required();
  sprime->add_option("--mu", mu_arg, "Circle weight (JSON array)")->required();

  CLI::App* hopf = app.add_subcommand("hopf", "Hopf link invariant, sl(2|1)");
  hopf->add_option("--a", a_arg, "First color RE[,IM]")->required();
  hopf->add_option("--c", c_arg, "First even coordinate");
  hopf->add_option("--a2", a2_arg, "Second color RE[,IM]")->required();
  hopf->add_option("--c2", c2_arg, "Second even coordinate");
  hopf->add_flag("--negative", negative, "Negative Hopf link");

  CLI::App* fuse = app.add_subcommand("fuse", "Tensor decomposition");
  fuse->add_option("--a", a_arg, "First degree RE[,IM]")->required();
  fuse->add_option("--b", b_arg, "Second degree RE[,IM]")->required();

  CLI::App* delta = app.add_subcommand("delta", "Surgery normalization");
  delta->add_option("--mode", mode, "closed, sum, or both")
      ->check(CLI::IsMember({"closed", "sum", "both"}));
  delta->add_option("--a", a_arg, "Degree for the sum RE[,IM]");

  CLI::App* kirby = app.add_subcommand("kirby", "Kirby color expansion");
  kirby->add_option("--a", a_arg, "Degree RE[,IM]")->required();

  CLI::App* module = app.add_subcommand("module", "Module construction");
  module->add_option("--module", module_json, "Full descriptor (JSON)");
  module->add_option("--type", type,
                     "typical, standard, trivial, odd_trivial, epsilon, sigma");
  module->add_option("--a", a_arg, "typical: odd coordinate RE[,IM]");
  module->add_option("--c", c_arg, "typical: even coordinate");
  module->add_option("--parity", parity_arg, "sigma: parity 0/1");
  module->add_option("--weight", weight_json, "sigma: weight (JSON array)");

  CLI::App* braid = app.add_subcommand("braid", "Braiding operator");
  braid->add_option("--left", left_json, "Left module descriptor (JSON)")
      ->required();
  braid->add_option("--right", right_json, "Right module descriptor (JSON)")
      ->required();
  braid->add_flag("--entries", entries, "Include matrix entries");

  CLI::App* eval = app.add_subcommand("eval", "Evaluate a tangle word");
  eval->add_option("--diagram", diagram_path, "Diagram JSON file")->required();

  CLI::App* fprime = app.add_subcommand("fprime", "Renormalized invariant");
  fprime->add_option("--diagram", diagram_path, "Diagram JSON file")
      ->required();

  CLI::App* cgp = app.add_subcommand("cgp", "Surgery 3-manifold invariant");
  cgp->add_option("--diagram", diagram_path,
                  "Presentation JSON file (surgery, gradings, linking)")
      ->required();

  app.add_subcommand("verify", "Run the acceptance suite");

  CLI11_PARSE(app, argc, argv);
  if (seed_opt->count() > 0) g.seed = seed_flag;

  if (app.got_subcommand("verify")) execute_verify(g);

  if (app.got_subcommand("typical"))
    execute(g, Json{{"op", "typical"},
                    {"weight", weight_from_flags(g, weight_json, a_arg, c_arg)}});
  if (app.got_subcommand("alcove"))
    execute(g, Json{{"op", "alcove"},
                    {"weight", weight_from_flags(g, weight_json, a_arg, c_arg)},
                    {"strict", strict}});
  if (app.got_subcommand("mdim"))
    execute(g, Json{{"op", "mdim"},
                    {"weight", weight_from_flags(g, weight_json, a_arg, c_arg)}});
  if (app.got_subcommand("twist"))
    execute(g, Json{{"op", "twist"},
                    {"weight", weight_from_flags(g, weight_json, a_arg, c_arg)}});
  if (app.got_subcommand("sprime"))
    execute(g, Json{{"op", "sprime"},
                    {"lam", parse_json_arg(lam_arg, "--lam")},
                    {"mu", parse_json_arg(mu_arg, "--mu")}});
  if (app.got_subcommand("hopf"))
    execute(g, Json{{"op", "hopf"},
                    {"a", parse_complex_arg(a_arg, "--a")},
                    {"c", c_arg},
                    {"a2", parse_complex_arg(a2_arg, "--a2")},
                    {"c2", c2_arg},
                    {"positive", !negative}});
  if (app.got_subcommand("fuse"))
    execute(g, Json{{"op", "fuse"},
                    {"a", parse_complex_arg(a_arg, "--a")},
                    {"b", parse_complex_arg(b_arg, "--b")}});
  if (app.got_subcommand("delta")) {
    Json req{{"op", "delta"}, {"mode", mode}};
    if (!a_arg.empty()) req["a"] = parse_complex_arg(a_arg, "--a");
    execute(g, std::move(req));
  }
  if (app.got_subcommand("kirby"))
    execute(g, Json{{"op", "kirby"}, {"a", parse_complex_arg(a_arg, "--a")}});
  if (app.got_subcommand("module")) {
    Json desc;
    if (!module_json.empty()) {
      desc = parse_json_arg(module_json, "--module");
    } else {
      desc = Json{{"type", type}};
      if (!a_arg.empty()) desc["a"] = parse_complex_arg(a_arg, "--a");
      if (type == "typical") desc["c"] = c_arg;
      if (type == "sigma") {
        desc["parity"] = parity_arg;
        if (weight_json.empty()) die(2, "sigma needs --weight");
        desc["weight"] = parse_json_arg(weight_json, "--weight");
      }
    }
    execute(g, Json{{"op", "module"}, {"module", std::move(desc)}});
  }
  if (app.got_subcommand("braid"))
    execute(g, Json{{"op", "braid"},
                    {"left", parse_json_arg(left_json, "--left")},
                    {"right", parse_json_arg(right_json, "--right")},
                    {"entries", entries}});
  if (app.got_subcommand("eval"))
    execute(g, Json{{"op", "eval"}, {"diagram", load_json_file(diagram_path)}});
  if (app.got_subcommand("fprime"))
    execute(g,
            Json{{"op", "fprime"}, {"diagram", load_json_file(diagram_path)}});
  if (app.got_subcommand("cgp"))
    execute(g, Json{{"op", "cgp"}, {"diagram", load_json_file(diagram_path)}});

  die(2, "no subcommand handled");
}
