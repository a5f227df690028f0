#include "cli.hpp"

#include "CLI11.hpp"
#include "acceptance.hpp"
#include "json.hpp"
#include "weylva/character.hpp"
#include "weylva/interlock.hpp"
#include "weylva/mta.hpp"
#include "weylva/series_io.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

namespace weylva::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kOutDirEnv = "WEYLVA_OUT_DIR";

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string subcommand;
  int max_d = 8;
  int j_window = 8;
  int p2_max = 6;
  bool list = false;
  std::optional<int> level;
  std::optional<int> depth;
  std::optional<int> window;
  std::string family;
  std::string lambda = "1/2";
  std::string report = "full";
  bool matrices = false;
  std::vector<int> ells;
  int probe_depth = 2;
  bool quick = false;
  std::string format = "json";
  std::string out_path;
  bool no_timestamp = false;
};

struct Report {
  Json body;
  bool passed = true;
  std::string csv_table;  // set when the report has a native table form
  std::vector<std::string> text_lines;
};

Json str(const Rational& q) { return to_string(q); }

std::vector<std::string> strings(const std::vector<int>& v) {
  std::vector<std::string> out;
  for (int x : v) out.push_back(std::to_string(x));
  return out;
}

void require_non_negative(int value, const char* flag) {
  if (value < 0) throw ConfigError(std::string(flag) + " must be non-negative");
}

int or_default(const std::optional<int>& value, int fallback, const char* flag) {
  if (!value) return fallback;
  require_non_negative(*value, flag);
  return *value;
}

Report characters(const Config& c) {
  require_non_negative(c.max_d, "--max-d");
  require_non_negative(c.j_window, "--j-window");
  if (c.max_d > c.j_window) throw ConfigError("--max-d must not exceed --j-window");
  auto s = character_series(c.max_d, c.j_window);
  Report r;
  r.body = series_to_json(s);
  r.csv_table = series_to_csv(s);
  return r;
}

Report p2(const Config& c) {
  require_non_negative(c.p2_max, "--max");
  Report r;
  Json counts = Json::array();
  Json lists = Json::object();
  for (int d = 0; d <= c.p2_max; ++d) {
    counts.push_back(bipartition_count(d));
    if (c.list) {
      Json l = Json::array();
      for (const auto& bp : enumerate_bipartitions(d)) l.push_back(to_string(bp));
      lists[std::to_string(d)] = l;
    }
  }
  r.body["max"] = c.p2_max;
  r.body["counts"] = counts;
  if (c.list) r.body["bipartitions"] = lists;
  return r;
}

Json mta_element(const MTAElement& x) {
  Json rows = Json::array();
  for (const auto& [key, w] : x.entries()) {
    rows.push_back({{"row", to_string(key.first)}, {"col", to_string(key.second)}, {"value", to_string(w)}});
  }
  return rows;
}

Report mta(const Config& c) {
  int level = or_default(c.level, 1, "--level");
  if (level > 6) throw ConfigError("--level must be at most 6");
  Report r;
  r.body["level"] = level;
  Json bps = Json::array(), constants = Json::array();
  for (const auto& bp : enumerate_bipartitions(level)) {
    bps.push_back(to_string(bp));
    constants.push_back({{"bipartition", to_string(bp)}, {"constant", to_string(contraction_constant(bp))}});
  }
  r.body["bipartitions"] = bps;
  r.body["constants"] = constants;
  r.body["unity"] = mta_element(unity(level));
  Json strong = Json::array();
  int bound = std::min(level, 3);
  for (int n = 0; n <= bound; ++n) {
    for (int m = 0; m <= bound; ++m) {
      auto rep = verify_strong_unity(n, m);
      strong.push_back({{"n", n}, {"m", m}, {"checked", rep.checked}, {"passed", rep.passed()}, {"failures", rep.failures}});
      r.passed &= rep.passed();
    }
  }
  r.body["strong_unity"] = strong;
  return r;
}

Report zhu(const Config& c) {
  int level = or_default(c.level, 4, "--level");
  if (level > 6) throw ConfigError("--level must be at most 6");
  auto z = zhu_structure(level);
  Report r;
  r.body["level"] = level;
  r.body["block_sizes"] = z.block_sizes;
  r.body["total"] = z.total;
  r.body["unity_idempotent"] = z.unity_idempotent;
  r.body["unities_orthogonal"] = z.unities_orthogonal;
  for (bool b : z.unity_idempotent) r.passed &= b;
  r.passed &= z.unities_orthogonal;
  return r;
}

Report zhu_products(const Config& c) {
  int depth = or_default(c.depth, 1, "--depth");
  if (depth > 4) throw ConfigError("--depth must be at most 4");
  const std::vector<std::pair<std::string, FockVector>> states = {
      {"alpha", alpha_state()}, {"beta", beta_state()}, {"J", heisenberg_j()}, {"omega", omega()}};
  Report r;
  Json rows = Json::array();
  for (const auto& [un, u] : states) {
    for (const auto& [vn, v] : states) {
      for (int n = 0; n <= depth; ++n) {
        rows.push_back({{"u", un}, {"v", vn}, {"n", n}, {"circ", to_string(zhu_circ(u, v, n))}, {"star", to_string(zhu_star(u, v, n))}});
      }
    }
  }
  r.body["depth"] = depth;
  r.body["products"] = rows;
  FockVector comm = zhu_star(alpha_state(), beta_state(), 0) - zhu_star(beta_state(), alpha_state(), 0);
  r.body["commutator_symbol"] = to_string(zhu_symbol(comm));
  r.passed = zhu_symbol(comm) == mode_scalar(1);
  return r;
}

std::vector<WeightModuleSpec> parse_specs(const Config& c, int window, const char* default_family) {
  std::string key = c.family.empty() ? default_family : c.family;
  Rational lam;
  try {
    lam = parse_rational(c.lambda);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("--lambda: ") + e.what());
  }
  std::vector<Family> fams;
  if (key == "all") {
    fams = {Family::V, Family::CV, Family::WLambda, Family::W0Plus, Family::W0Minus};
  } else if (auto f = parse_family(key)) {
    fams = {*f};
  } else {
    throw ConfigError("unknown --family '" + key + "' (expected v, cv, wlambda, w0+, w0-)");
  }
  std::vector<WeightModuleSpec> specs;
  for (auto f : fams) {
    try {
      specs.push_back(WeightModuleSpec::make(f, window, f == Family::WLambda ? lam : Rational(0)));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  return specs;
}

Json vertex_report(const VertexInterlockReport& v) {
  return {{"module", v.module_name},
          {"ell", v.ell},
          {"depth", v.depth},
          {"probe_depth", v.probe_depth},
          {"socle_level0", strings(v.socle_level0)},
          {"radical_level0", strings(v.radical_level0)},
          {"matches_base", v.matches_base},
          {"socle_multiplicities_ok", v.socle_multiplicities_ok},
          {"weakly_interlocked", v.weakly_interlocked},
          {"witness", v.witness},
          {"status", to_string(v.status)},
          {"notes", v.notes}};
}

Report modules(const Config& c) {
  int window = or_default(c.window, 12, "--window");
  int depth = or_default(c.depth, 0, "--depth");
  if (depth > 3) throw ConfigError("--depth must be at most 3");
  Report r;
  Json list = Json::array();
  for (const auto& spec : parse_specs(c, window, "all")) {
    auto rep = weakly_interlocked(spec);
    Json m = {{"family", family_key(spec.family)},
              {"name", spec.name()},
              {"lambda", str(spec.lambda)},
              {"window", window},
              {"socle", strings(rep.submodules.socle)},
              {"radical", strings(rep.submodules.radical)},
              {"boundary_status", to_string(rep.submodules.status)},
              {"boundary_notes", rep.submodules.boundary_notes}};
    if (c.report != "socle") {
      m["socle_type"] = rep.socle_type;
      m["radical_type"] = rep.radical_type;
      m["quotient_by_socle_type"] = rep.quotient_by_socle_type;
      m["quotient_by_radical_type"] = rep.quotient_by_radical_type;
      m["weakly_interlocked"] = rep.weakly_interlocked;
      m["witness"] = rep.witness;
    }
    if (c.matrices) {
      auto sh = spec.shape();
      for (auto [key, g] : {std::pair{"a", WeylGenerator::A}, std::pair{"a*", WeylGenerator::AStar}}) {
        Json triples = Json::array();
        for (int k = sh.min_exponent(); k <= sh.max_exponent(); ++k) {
          for (const auto& [t, coeff] : weyl_act(sh, g, WeightVector(k)).value) {
            if (sh.in_window(t)) triples.push_back({std::to_string(t), std::to_string(k), str(coeff)});
          }
        }
        std::sort(triples.begin(), triples.end(), [](const Json& x, const Json& y) {
          return std::pair{std::stoi(x[0].get<std::string>()), std::stoi(x[1].get<std::string>())} <
                 std::pair{std::stoi(y[0].get<std::string>()), std::stoi(y[1].get<std::string>())};
        });
        m["matrices"][key] = triples;
      }
    }
    bool expected = spec.irreducible();
    bool ok = rep.weakly_interlocked == expected;
    if (depth > 0) {
      auto v = vertex_weakly_interlocked(induce(spec, depth), std::min(depth, c.probe_depth));
      m["induced"] = vertex_report(v);
      ok &= v.weakly_interlocked == expected && v.matches_base;
    }
    m["matches_expectation"] = ok;
    r.passed &= ok;
    list.push_back(m);
  }
  r.body["modules"] = list;
  return r;
}

Report flow(const Config& c) {
  int window = or_default(c.window, 3, "--window");
  int depth = or_default(c.depth, 1, "--depth");
  if (depth > 6) throw ConfigError("--depth must be at most 6");
  std::vector<int> ells = c.ells.empty() ? std::vector<int>{-3, -2, -1, 0, 1, 2, 3} : c.ells;
  Report r;
  Json list = Json::array();
  for (const auto& spec : parse_specs(c, window, "w0+")) {
    InducedTruncation m = induce(spec, depth);
    for (int ell : ells) {
      auto rep = verify_spectral_flow(m, ell, std::min(depth, c.probe_depth));
      list.push_back({{"family", rep.family},
                      {"ell", ell},
                      {"depth", rep.depth},
                      {"window", rep.window},
                      {"commutator_checks", rep.commutator_checks},
                      {"heisenberg_checks", rep.heisenberg_checks},
                      {"virasoro_checks", rep.virasoro_checks},
                      {"delta_checks", rep.delta_checks},
                      {"escaping_images", rep.escaping_images},
                      {"failures", rep.failures},
                      {"passed", rep.passed()},
                      {"interlock", vertex_report(rep.interlock)}});
      r.passed &= rep.passed();
    }
  }
  r.body["flows"] = list;
  return r;
}

Report verify_all(const Config& c) {
  Report r;
  Json list = Json::array();
  for (const auto& cr : verify::run_acceptance(c.quick)) {
    list.push_back({{"id", cr.id}, {"title", cr.title}, {"passed", cr.passed}, {"detail", cr.detail}});
    r.text_lines.push_back((cr.passed ? "[PASS] " : "[FAIL] ") + std::to_string(cr.id) + ". " + cr.title + " (" + cr.detail + ")");
    r.passed &= cr.passed;
  }
  r.body["quick"] = c.quick;
  r.body["criteria"] = list;
  return r;
}

void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, rows);
  } else if (j.is_array()) {
    if (j.empty()) rows.emplace_back(path, "");
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(path, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

std::string timestamp() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

std::string render(const Config& c, Report& r) {
  Json doc;
  doc["subcommand"] = c.subcommand;
  if (!c.no_timestamp) doc["generated_at"] = timestamp();
  doc["passed"] = r.passed;
  for (const auto& [k, v] : r.body.items()) doc[k] = v;
  if (c.format == "json") return doc.dump(2) + "\n";
  std::ostringstream s;
  if (c.format == "csv") {
    if (!r.csv_table.empty()) {
      if (!c.no_timestamp) s << "# generated_at=" << doc["generated_at"].get<std::string>() << "\n";
      s << r.csv_table;
      return s.str();
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(doc, "", rows);
    s << "path,value\n";
    for (const auto& [p, v] : rows) s << csv_field(p) << "," << csv_field(v) << "\n";
    return s.str();
  }
  if (!r.text_lines.empty()) {
    for (const auto& l : r.text_lines) s << l << "\n";
    s << (r.passed ? "all checks passed" : "verification failed") << "\n";
    return s.str();
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  for (const auto& [p, v] : rows) s << p << " = " << v << "\n";
  return s.str();
}

std::string destination(const Config& c) {
  if (!c.out_path.empty()) return c.out_path;
  if (const char* dir = std::getenv(kOutDirEnv); dir && *dir) {
    return (std::filesystem::path(dir) / (c.subcommand + "." + c.format)).string();
  }
  return {};
}

void emit_error(std::ostream& err, const std::string& kind, const std::string& message) {
  Json e = {{"error", {{"kind", kind}, {"message", message}}}};
  err << e.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Exact computations for the Weyl vertex algebra (beta-gamma system, c = 2)", "weylva"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", c.out_path, std::string("Output path (default: $") + kOutDirEnv + "/<subcommand>.<format>, else stdout)");
    sub->add_flag("--no-timestamp", c.no_timestamp, "Omit the generated_at field");
  };
  auto* s_char = app.add_subcommand("characters", "Bivariate character table of the Fock module");
  s_char->add_option("--max-d", c.max_d, "Maximal conformal degree (default 8)");
  s_char->add_option("--j-window", c.j_window, "Charge window |j| <= J (default 8)");
  auto* s_p2 = app.add_subcommand("p2", "Counts (and lists) of 2-component multipartitions");
  s_p2->add_option("--max,--max-d", c.p2_max, "Largest total (default 6)");
  s_p2->add_flag("--list", c.list, "Also list the bipartitions");
  auto* s_mta = app.add_subcommand("mta", "Contraction constants, unity and strong-unity report");
  s_mta->add_option("--level", c.level, "Level d (default 1)");
  auto* s_zhu = app.add_subcommand("zhu", "Block descriptor of the level-d Zhu algebra");
  s_zhu->add_option("--level", c.level, "Level d (default 4)");
  auto* s_zp = app.add_subcommand("zhu-products", "Sample tables of the circ_n and star_n products");
  s_zp->add_option("--depth", c.depth, "Largest n (default 1)");
  auto* s_mod = app.add_subcommand("modules", "Socle, radical and interlocking of weight modules");
  s_mod->add_option("--family", c.family, "v, cv, wlambda, w0+, w0- or all (default all)");
  s_mod->add_option("--window", c.window, "Exponent window (default 12)");
  s_mod->add_option("--lambda", c.lambda, "lambda in (0,1) as p/q (default 1/2)");
  s_mod->add_option("--depth", c.depth, "Also analyse the induced module to this depth (default 0)");
  s_mod->add_option("--report", c.report, "socle, interlock or full (default full)")->check(CLI::IsMember({"socle", "interlock", "full"}));
  s_mod->add_flag("--matrices", c.matrices, "Include a, a* action matrices as (row, col, value) triples");
  auto* s_flow = app.add_subcommand("flow", "Spectral-flow verification on induced modules");
  s_flow->add_option("--ell", c.ells, "Flow parameter; repeatable (default -3..3)");
  s_flow->add_option("--family", c.family, "v, cv, wlambda, w0+, w0- or all (default w0+)");
  s_flow->add_option("--lambda", c.lambda, "lambda in (0,1) as p/q (default 1/2)");
  s_flow->add_option("--depth", c.depth, "Induction depth (default 1)");
  s_flow->add_option("--window", c.window, "Exponent window (default 3)");
  auto* s_all = app.add_subcommand("verify-all", "Run every acceptance criterion");
  s_all->add_flag("--quick", c.quick, "Reduced bounds");
  for (auto* sub : {s_char, s_p2, s_mta, s_zhu, s_zp, s_mod, s_flow, s_all}) common(sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "config", e.what());
    return 2;
  }
  for (auto* sub : app.get_subcommands()) c.subcommand = sub->get_name();

  Report r;
  try {
    if (c.subcommand == "characters") r = characters(c);
    else if (c.subcommand == "p2") r = p2(c);
    else if (c.subcommand == "mta") r = mta(c);
    else if (c.subcommand == "zhu") r = zhu(c);
    else if (c.subcommand == "zhu-products") r = zhu_products(c);
    else if (c.subcommand == "modules") r = modules(c);
    else if (c.subcommand == "flow") r = flow(c);
    else r = verify_all(c);
  } catch (const ConfigError& e) {
    emit_error(err, "config", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    emit_error(err, "config", e.what());
    return 2;
  } catch (const std::exception& e) {
    emit_error(err, "internal", e.what());
    return 1;
  }

  std::string text = render(c, r);
  std::string path = destination(c);
  if (path.empty()) {
    out << text;
  } else {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
      emit_error(err, "config", "cannot write " + path);
      return 2;
    }
    f << text;
  }
  return r.passed ? 0 : 1;
}

}  // namespace weylva::cli
