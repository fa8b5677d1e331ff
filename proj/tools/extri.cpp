// Command-line front end: object listings, E tables, checkers, theorem
// verification and the subcategory search.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "extri/errors.hpp"
#include "extri/report.hpp"
#include "extri/search.hpp"
#include "extri/tilt.hpp"

using namespace extri;
using report::Json;

namespace {

enum Exit { kPass = 0, kFail = 1, kError = 2 };

struct Config {
  std::string algebra_file;
  std::string nakayama;
  std::uint32_t field = 0;
  std::string context = "mod";
  std::string parent = "mod";
  std::string objects;
  bool exhaustive = false;
  int mmax = 2;
  int kmax = 4;
  std::uint64_t max_subsets = std::uint64_t{1} << 20;
  std::optional<std::uint64_t> budget;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string command;

  // check / verify-theorem
  std::string x, y;
  int n = 1;
  std::string mode = "cotorsion";
  std::string side = "both";

  // search-e36
  int ct_size = 6;
  int ct_degree = 4;
  int samples = 256;
  bool skip_theorem = false;
};

void add_common(CLI::App* sub, Config& cfg) {
  sub->add_option("algebra", cfg.algebra_file, "algebra description file");
  sub->add_option("--nakayama", cfg.nakayama, "cyclic Nakayama algebra N,R instead of a file");
  sub->add_option("--field", cfg.field, "prime characteristic, overriding the file");
  sub->add_option("--context", cfg.context, "mod | stable | sub")->check(CLI::IsMember({"mod", "stable", "sub"}));
  sub->add_option("--parent", cfg.parent, "ambient model of a sub context: mod | stable")
      ->check(CLI::IsMember({"mod", "stable"}));
  sub->add_option("--objects", cfg.objects, "members of a sub context: labels, all, P, I");
  sub->add_flag("--exhaustive", cfg.exhaustive, "back approximation candidates with a bounded search");
  sub->add_option("--mmax", cfg.mmax, "summand multiplicity bound of the search")->check(CLI::PositiveNumber);
  sub->add_option("--kmax", cfg.kmax, "depth of the E^k tables")->check(CLI::PositiveNumber);
  sub->add_option("--max-subsets", cfg.max_subsets, "subset enumeration budget")->check(CLI::PositiveNumber);
  sub->add_option("--budget", cfg.budget,
                  "subset enumeration budget; for search-e36 the largest complement enumerated (default 6)");
  sub->add_option("--seed", cfg.seed, "seed for randomized splitting and sampling");
  sub->add_option("--format", cfg.format, "text | structured")->check(CLI::IsMember({"text", "structured"}));
}

std::pair<int, int> parse_pair(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw Error("expected N,R but got '" + s + "'");
  try {
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw Error("expected N,R but got '" + s + "'");
  }
}

AlgebraPtr load_algebra(const Config& cfg) {
  if (!cfg.nakayama.empty()) {
    auto [n, r] = parse_pair(cfg.nakayama);
    if (n < 1 || r < 2) throw Error("--nakayama needs N >= 1 and R >= 2");
    return nakayama_cyclic(n, r, cfg.field ? cfg.field : 2);
  }
  if (cfg.algebra_file.empty()) throw Error("no algebra given: pass a file or --nakayama N,R");
  std::ifstream in(cfg.algebra_file);
  if (!in) throw Error("cannot read " + cfg.algebra_file);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str(), cfg.field);
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<int> resolve_ambient(const Ambient& amb, const std::string& spec) {
  std::vector<int> out;
  for (const auto& tok : split(spec)) {
    if (tok == "all") {
      for (std::size_t i = 0; i < amb.size(); ++i) out.push_back(static_cast<int>(i));
    } else if (tok == "P" || tok == "I") {
      for (std::size_t i = 0; i < amb.size(); ++i) {
        const auto& o = amb.object(static_cast<int>(i));
        if (tok == "P" ? o.projective_module : o.injective_module) out.push_back(static_cast<int>(i));
      }
    } else {
      int idx = amb.find_label(tok);
      if (idx < 0) throw UnknownSymbolError("unknown object '" + tok + "'");
      out.push_back(idx);
    }
  }
  return out;
}

Subcat resolve(const Context& ctx, const std::string& spec) {
  std::vector<int> out;
  for (const auto& tok : split(spec)) {
    if (tok == "all") {
      for (std::size_t i = 0; i < ctx.size(); ++i) out.push_back(static_cast<int>(i));
    } else if (tok == "P") {
      out.insert(out.end(), ctx.projectives().begin(), ctx.projectives().end());
    } else if (tok == "I") {
      out.insert(out.end(), ctx.injectives().begin(), ctx.injectives().end());
    } else if (tok != "none") {
      int idx = ctx.find_label(tok);
      if (idx < 0) throw UnknownSymbolError("unknown object '" + tok + "' in this context");
      out.push_back(idx);
    }
  }
  return Subcat(ctx.size(), std::move(out));
}

AmbientPtr make_ambient(const AlgebraPtr& alg, const std::string& kind, const Config& cfg) {
  AmbientOptions opt;
  opt.seed = cfg.seed;
  return kind == "stable" ? Ambient::stable(alg, opt) : Ambient::exact(alg, opt);
}

Context make_context(const Config& cfg, int min_kmax) {
  AlgebraPtr alg = load_algebra(cfg);
  ContextOptions copt;
  copt.kmax = std::max(cfg.kmax, min_kmax);
  if (cfg.context == "sub") {
    AmbientPtr amb = make_ambient(alg, cfg.parent, cfg);
    if (cfg.objects.empty()) throw Error("--context sub needs --objects");
    return Context::sub(amb, resolve_ambient(*amb, cfg.objects), copt);
  }
  return Context::whole(make_ambient(alg, cfg.context, cfg), copt);
}

CheckOptions check_options(const Config& cfg) {
  CheckOptions o;
  o.exhaustive = cfg.exhaustive;
  o.mmax = cfg.mmax;
  o.max_subsets = cfg.budget && cfg.command != "search-e36" ? *cfg.budget : cfg.max_subsets;
  return o;
}

Json config_json(const Config& cfg, const std::string& command) {
  Json j;
  j["command"] = command;
  j["algebra"] = cfg.nakayama.empty() ? cfg.algebra_file : "nakayama " + cfg.nakayama;
  j["field_override"] = cfg.field;
  j["context"] = cfg.context;
  if (cfg.context == "sub") {
    j["parent"] = cfg.parent;
    j["objects"] = cfg.objects;
  }
  j["exhaustive"] = cfg.exhaustive;
  j["mmax"] = cfg.mmax;
  j["kmax"] = cfg.kmax;
  j["max_subsets"] = cfg.max_subsets;
  if (cfg.budget) j["budget"] = *cfg.budget;
  j["seed"] = cfg.seed;
  return j;
}

void emit(const Config& cfg, const std::string& command, const Json& header, const Json& result,
          const std::string& text) {
  if (cfg.format == "structured") {
    Json doc;
    doc["tool"] = "extri";
    doc["config"] = config_json(cfg, command);
    doc["context"] = header;
    doc["result"] = result;
    std::cout << doc.dump(2) << '\n';
    return;
  }
  std::cout << "# " << command << "  context " << header.value("context_id", std::string("-")) << "  algebra "
            << header.value("algebra_hash", std::string("-")) << "  " << header.value("kind", std::string("-"))
            << " over F_" << header.value("field", 0) << "  seed " << cfg.seed << '\n'
            << text;
}

int cmd_objects(const Config& cfg) {
  Context ctx = make_context(cfg, 1);
  emit(cfg, "objects", report::context_header(ctx), report::objects(ctx), report::objects_text(ctx));
  return kPass;
}

int cmd_ext_table(const Config& cfg) {
  Context ctx = make_context(cfg, cfg.kmax);
  emit(cfg, "ext-table", report::context_header(ctx), report::ext_tables(ctx, cfg.kmax),
       report::ext_tables_text(ctx, cfg.kmax));
  return kPass;
}

int cmd_check(const Config& cfg) {
  Context ctx = make_context(cfg, cfg.mode == "ct" ? cfg.n - 1 : cfg.n);
  if (cfg.x.empty()) throw Error("--x is required");
  Checker checker(ctx, check_options(cfg));
  Subcat x = resolve(ctx, cfg.x);
  Verdict v;
  if (cfg.mode == "ct") {
    v = checker.check_cluster_tilting(x, cfg.n);
  } else {
    Subcat y = cfg.y.empty() ? x : resolve(ctx, cfg.y);
    if (cfg.side == "left") v = checker.check_left_cotorsion(x, y, cfg.n);
    else if (cfg.side == "right") v = checker.check_right_cotorsion(x, y, cfg.n);
    else v = checker.check_cotorsion(x, y, cfg.n);
  }
  emit(cfg, "check", report::context_header(ctx), report::verdict(ctx, v), report::verdict_text(ctx, v));
  return v.pass ? kPass : kFail;
}

int cmd_verify_theorem(const Config& cfg) {
  Context ctx = make_context(cfg, cfg.n);
  Checker checker(ctx, check_options(cfg));
  TheoremReport r = checker.verify_theorem(cfg.n);
  emit(cfg, "verify-theorem", report::context_header(ctx), report::theorem(ctx, r), report::theorem_text(ctx, r));
  return r.equal ? kPass : kFail;
}

int cmd_search(Config cfg) {
  if (cfg.nakayama.empty() && cfg.algebra_file.empty()) cfg.nakayama = "10,4";
  AlgebraPtr alg = load_algebra(cfg);
  AmbientPtr amb = make_ambient(alg, "stable", cfg);
  SubcontextSearchOptions opt;
  opt.ct_size = cfg.ct_size;
  opt.ct_degree = cfg.ct_degree;
  opt.budget = cfg.budget ? static_cast<int>(std::min<std::uint64_t>(*cfg.budget, 64)) : 6;
  opt.generator_samples = cfg.samples;
  opt.seed = cfg.seed;
  opt.verify_theorem = !cfg.skip_theorem;
  opt.check = check_options(cfg);
  ContextOptions copt;
  copt.kmax = std::max(cfg.kmax, cfg.ct_degree);
  SubcontextSearchReport r = search_cluster_tilting_subcontexts(amb, opt, copt);

  Json header;
  header["algebra_hash"] = report::hex(alg->hash());
  header["kind"] = "stable";
  header["field"] = alg->p();
  header["objects"] = amb->size();
  header["context_id"] = report::hex(Context::whole(amb, copt).id_hash());
  Json result = report::search(amb, r);
  result["ct_size"] = cfg.ct_size;
  result["ct_degree"] = cfg.ct_degree;
  emit(cfg, "search-e36", header, result, report::search_text(amb, r));
  for (const auto& h : r.hits)
    if (!h.cluster_tilting.pass || !h.cotorsion.pass || (h.theorem_checked && !h.theorem_equal)) return kFail;
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extension tables, cotorsion pairs and cluster tilting in module categories"};
  app.require_subcommand(1);
  Config cfg;

  auto* objects = app.add_subcommand("objects", "list the indecomposable objects of a context");
  add_common(objects, cfg);

  auto* ext = app.add_subcommand("ext-table", "print dim E^k for k = 1..kmax");
  add_common(ext, cfg);

  auto* check = app.add_subcommand("check", "check a cotorsion pair or a cluster tilting subcategory");
  add_common(check, cfg);
  check->add_option("--x", cfg.x, "objects of X: labels, all, P, I");
  check->add_option("--y", cfg.y, "objects of Y (defaults to X)");
  check->add_option("-n", cfg.n, "n of the cotorsion pair, or the cluster tilting degree")->check(CLI::PositiveNumber);
  check->add_option("--mode", cfg.mode, "ct | cotorsion")->check(CLI::IsMember({"ct", "cotorsion"}));
  check->add_option("--side", cfg.side, "left | right | both")->check(CLI::IsMember({"left", "right", "both"}));

  auto* theorem = app.add_subcommand("verify-theorem", "compare (n+1)-cluster tilting sets with n-cotorsion pairs");
  add_common(theorem, cfg);
  theorem->add_option("-n", cfg.n, "cotorsion degree n")->check(CLI::PositiveNumber);

  auto* search = app.add_subcommand("search-e36", "search extension-closed stable subcategories for cluster tilting");
  add_common(search, cfg);
  search->add_option("--ct-size", cfg.ct_size, "number of objects of X")->check(CLI::PositiveNumber);
  search->add_option("--ct-degree", cfg.ct_degree, "cluster tilting degree")->check(CLI::Range(2, 64));
  search->add_option("--samples", cfg.samples, "seeded generator sets")->check(CLI::NonNegativeNumber);
  search->add_flag("--skip-theorem", cfg.skip_theorem, "do not run the theorem comparison on hits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kError;
  }

  try {
    if (*objects) return cmd_objects(cfg);
    if (*ext) return cmd_ext_table(cfg);
    if (*check) return cmd_check(cfg);
    if (*theorem) return cmd_verify_theorem(cfg);
    if (*search) {
      cfg.command = "search-e36";
      return cmd_search(cfg);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
