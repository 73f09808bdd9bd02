#include "maxsg/cli.hpp"

#include <CLI11.hpp>

#include "maxsg/classify.hpp"
#include "maxsg/error.hpp"
#include "maxsg/fintrans.hpp"
#include "maxsg/genpairs.hpp"
#include "maxsg/parse.hpp"
#include "maxsg/selftest.hpp"
#include "maxsg/serialize.hpp"

namespace maxsg {

namespace {

using nlohmann::json;

struct Options {
  bool pretty = false;
  std::uint64_t window = 1000;
  std::string gamma;
  std::string mu = "aleph0plus";
  unsigned n = 2;
  std::string filter = "principal";
  std::string algorithm = "bfs";
  std::string suite = "all";
  std::string family;
  std::string context;
  std::vector<std::string> args;
};

Threshold parse_mu(const std::string& s) {
  if (s == "aleph0") {
    return Threshold::Aleph0;
  }
  if (s == "aleph0plus" || s == "aleph0+") {
    return Threshold::Aleph0Plus;
  }
  throw Error(errc::usage, "--mu must be aleph0 or aleph0plus");
}

std::vector<std::uint64_t> require_gamma(const Options& o) {
  if (o.gamma.empty()) {
    throw Error(errc::usage, "this query needs --gamma");
  }
  return parse_naturals(o.gamma);
}

FilterOracle parse_filter(const Options& o) {
  if (o.filter == "frechet") {
    return FilterOracle::frechet();
  }
  if (o.filter == "principal") {
    return FilterOracle::principal(require_gamma(o));
  }
  throw Error(errc::usage, "--filter must be principal or frechet");
}

Family parse_family(const Options& o) {
  static const std::vector<std::pair<std::string, FamilyKind>> kinds{
      {"S1", FamilyKind::S1}, {"S2", FamilyKind::S2}, {"S3", FamilyKind::S3},
      {"S4", FamilyKind::S4}, {"S5", FamilyKind::S5}, {"F1", FamilyKind::F1},
      {"F2", FamilyKind::F2}, {"U1", FamilyKind::U1}, {"U2", FamilyKind::U2},
      {"A1", FamilyKind::A1}, {"A2", FamilyKind::A2}};
  for (const auto& [name, kind] : kinds) {
    if (name == o.family) {
      switch (kind) {
        case FamilyKind::F1:
        case FamilyKind::F2:
          return Family::f(kind, require_gamma(o), parse_mu(o.mu));
        case FamilyKind::U1:
        case FamilyKind::U2:
          return Family::u(kind, parse_filter(o), parse_mu(o.mu));
        case FamilyKind::A1:
        case FamilyKind::A2:
          return Family::a(kind, o.n);
        default:
          return Family::s(kind);
      }
    }
  }
  throw Error(errc::usage, "unknown family '" + o.family + "'");
}

int certify_cmd(const Options& o, json& out) {
  MapExpr e = parse_expr(o.args.at(0));
  auto normal = normalize(e);
  WindowReport w = window_stats(e, o.window);
  out = {{"expr", to_string(e)},
         {"normal_form", normal ? json(to_string(*normal)) : json(nullptr)},
         {"certificate", to_json(certify(e))},
         {"window",
          {{"M", w.window}, {"missed", w.missed.size()}, {"collisions", w.collisions}}}};
  return 0;
}

int classify_cmd(const Options& o, json& out) {
  Family fam = parse_family(o);
  Verdict v = member(fam, parse_expr(o.args.at(0)));
  out = to_json(fam, v);
  return v.answer == Tri::Unknown ? 2 : 0;
}

int genpair_cmd(const Options& o, json& out) {
  MapExpr f = parse_expr(o.args.at(0));
  MapExpr g = parse_expr(o.args.at(1));
  Decision d;
  if (o.context == "sym") {
    d = decide_sym_pair(f, g);
  } else if (o.context == "pointwise") {
    d = decide_pointwise_stab_pair(require_gamma(o), f, g);
  } else if (o.context == "filter") {
    d = decide_filter_pair(parse_filter(o), f, g);
  } else if (o.context == "partition") {
    d = decide_partition_pair(o.n, f, g);
  } else {
    throw Error(errc::usage, "context must be sym, pointwise, filter or partition");
  }
  out = to_json(d);
  return d.answer == Decision::Answer::Unknown ? 2 : 0;
}

int rho_cmd(const Options& o, json& out) {
  Relation r = rho(parse_expr(o.args.at(0)), o.n);
  out = {{"n", o.n},
         {"relation", to_string(r)},
         {"permutation", is_permutation(r)},
         {"total", is_total(r)},
         {"inverse_total", is_total(invert_rel(r))}};
  return 0;
}

int bfin_cmd(const Options& o, json& out) {
  Relation r = parse_relation(o.args.at(0), o.n);
  Relation s = parse_relation(o.args.at(1), o.n);
  Word w;
  if (o.algorithm == "bfs") {
    w = bfin_witness(r, s);
  } else if (o.algorithm == "greedy") {
    w = bfin_greedy(r, s);
  } else {
    throw Error(errc::usage, "--algorithm must be bfs or greedy");
  }
  out = {{"algorithm", o.algorithm},
         {"word", to_json(w)},
         {"length", w.size()},
         {"value", to_string(evaluate(w, r, s))}};
  return 0;
}

int maxtn_cmd(const Options& o, json& out) {
  auto reports = maximal_subsemigroups_Tn(o.n);
  std::vector<ElementSet> sets;
  json items = json::array();
  for (const auto& r : reports) {
    sets.push_back(r.elements);
    items.push_back({{"size", r.elements.size()},
                     {"closed", r.is_closed},
                     {"maximal", r.is_maximal},
                     {"description", r.description}});
  }
  CompletenessResult c = completeness_report(o.n, sets);
  out = {{"n", o.n},
         {"maximal_subgroups", maximal_subgroups_symn(o.n).size()},
         {"count", reports.size()},
         {"subsemigroups", items},
         {"completeness",
          {{"complete", c.complete}, {"tuples", c.tuples}, {"closures", c.closures}}}};
  return 0;
}

int selftest_cmd(const Options& o, json& out) {
  auto checks = run_selftest(o.suite);
  json items = json::array();
  std::size_t passed = 0;
  for (const auto& c : checks) {
    json item = {{"suite", c.suite}, {"name", c.name}, {"ok", c.ok}};
    if (!c.detail.empty()) {
      item["detail"] = c.detail;
    }
    items.push_back(item);
    passed += c.ok ? 1 : 0;
  }
  out = {{"suite", o.suite},
         {"passed", passed},
         {"failed", checks.size() - passed},
         {"checks", items}};
  return passed == checks.size() ? 0 : 1;
}

void print(std::ostream& os, const json& j, bool pretty) {
  if (!pretty || !j.is_object()) {
    os << j.dump() << "\n";
    return;
  }
  std::size_t width = 0;
  for (const auto& [key, value] : j.items()) {
    width = std::max(width, key.size());
  }
  for (const auto& [key, value] : j.items()) {
    os << key << std::string(width - key.size() + 2, ' ')
       << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& os) {
  Options o;
  CLI::App app{"Maximal subsemigroups of the full transformation monoid on N"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_flag = false;
  app.add_flag("--json", json_flag, "JSON output (default)");
  app.add_flag("--pretty", o.pretty, "one line per field");
  app.add_option("--window", o.window, "window size for empirical statistics")
      ->check(CLI::PositiveNumber);
  app.add_option("--gamma", o.gamma, "finite set, e.g. 0,1");
  app.add_option("--mu", o.mu, "aleph0 or aleph0plus");
  app.add_option("--n", o.n, "partition or semigroup size");
  app.add_option("--filter", o.filter, "principal or frechet");

  auto* certify = app.add_subcommand("certify", "parameters of a map");
  certify->add_option("expr", o.args)->required()->expected(1);
  auto* classify = app.add_subcommand("classify", "membership in a family");
  classify->add_option("family", o.family)->required();
  classify->add_option("expr", o.args)->required()->expected(1);
  auto* genpair = app.add_subcommand("genpair", "does a pair generate?");
  genpair->add_option("context", o.context, "sym, pointwise, filter or partition")
      ->required();
  genpair->add_option("exprs", o.args)->required()->expected(2);
  auto* rho_sc = app.add_subcommand("rho", "class relation of a map");
  rho_sc->add_option("expr", o.args)->required()->expected(1);
  auto* bfin = app.add_subcommand("bfin", "word reaching the full relation");
  bfin->add_option("relations", o.args)->required()->expected(2);
  bfin->add_option("--algorithm", o.algorithm, "bfs or greedy");
  auto* maxtn = app.add_subcommand("maxtn", "maximal subsemigroups of T_n");
  auto* selftest = app.add_subcommand("selftest", "reference examples");
  selftest->add_option("suite", o.suite);

  json out;
  int code = 1;
  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
      os << app.help();
      return 0;
    } catch (const CLI::ParseError& e) {
      throw Error(errc::usage, e.what());
    }
    if (certify->parsed()) {
      code = certify_cmd(o, out);
    } else if (classify->parsed()) {
      code = classify_cmd(o, out);
    } else if (genpair->parsed()) {
      code = genpair_cmd(o, out);
    } else if (rho_sc->parsed()) {
      code = rho_cmd(o, out);
    } else if (bfin->parsed()) {
      code = bfin_cmd(o, out);
    } else if (maxtn->parsed()) {
      code = maxtn_cmd(o, out);
    } else if (selftest->parsed()) {
      code = selftest_cmd(o, out);
    }
  } catch (const Error& e) {
    out = {{"error", e.code()}, {"message", e.what()}};
    code = 1;
  } catch (const std::exception& e) {
    out = {{"error", "InternalError"}, {"message", e.what()}};
    code = 1;
  }
  print(os, out, o.pretty);
  return code;
}

}  // namespace maxsg
