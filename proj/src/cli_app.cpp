#include "holo/cli_app.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "holo/acceptance.hpp"
#include "holo/catalog.hpp"
#include "holo/errors.hpp"
#include "holo/holomorph.hpp"
#include "holo/json_io.hpp"
#include "holo/oracle.hpp"
#include "holo/perfect.hpp"

namespace holo {
namespace {

struct Options {
  std::string format = "json";
  std::optional<std::size_t> max_order;
  std::optional<std::size_t> max_nodes;
  std::string aut = "auto";
};

AutStrategy strategy_of(const std::string& s) {
  if (s == "brute") return AutStrategy::Brute;
  if (s == "factorwise") return AutStrategy::Factorwise;
  return AutStrategy::Auto;
}

AutBudget aut_budget(const Options& opt) {
  AutBudget b;
  if (opt.max_nodes) b.max_nodes = *opt.max_nodes;
  return b;
}

ClassifyBudget classify_budget(const Options& opt) {
  ClassifyBudget b;
  if (opt.max_nodes) {
    b.iso_max_nodes = *opt.max_nodes;
    b.aut_budget.max_nodes = *opt.max_nodes;
  }
  return b;
}

// Group construction shares one order guard across all commands; the oracle
// enumeration applies its own, tighter default on top.
GroupPtr load_group(const std::string& spec, const Options& opt) {
  GroupPtr g = named_group(spec);
  const std::size_t cap = opt.max_order.value_or(20000);
  if (g->order() > cap)
    throw BoundError("group order " + std::to_string(g->order()) +
                     " exceeds the order bound " + std::to_string(cap));
  return g;
}

void emit(const Json& j, const Options& opt, std::ostream& out) {
  out << (opt.format == "text" ? render_text(j) : dump_json(j));
}

Json cmd_analyze(const std::string& spec, const Options& opt) {
  GroupPtr g = load_group(spec, opt);
  Holomorph hol = holomorph(g, strategy_of(opt.aut), aut_budget(opt));
  Json j;
  j["order"] = g->order();
  j["is_perfect"] = g->is_perfect();
  j["center_order"] = g->center_members().size();
  j["aut_order"] = hol.aut.order();
  j["hol_order"] = hol.group.order();
  if (g->is_perfect()) j["inn_krs_n"] = krs_inn(g, hol.aut).factors.size();
  return j;
}

// The full enumeration with records and, when every record is an isomorphic
// copy of the base, the normalizer quotient type.
Json cmd_enumerate_normal_regular(const std::string& spec, const Options& opt) {
  GroupPtr g = load_group(spec, opt);
  if (!g->is_perfect())
    throw ScopeError(
        "the normal regular enumeration covers perfect groups only; the "
        "abelian and general theory is out of scope for this tool");
  Holomorph hol = holomorph(g, strategy_of(opt.aut), aut_budget(opt));
  PerfectJEnumeration e = enumerate_j_perfect(hol, classify_budget(opt));
  bool all_h = true;
  for (const PerfectJRecord& r : e.records)
    all_h = all_h && r.record.in_h.value_or(false);
  std::optional<TGroupResult> t;
  if (all_h) {
    std::vector<RegularRecord> recs;
    for (const PerfectJRecord& r : e.records) recs.push_back(r.record);
    t = t_group(hol, recs);
  }
  return perfect_enumeration_json(e, t);
}

Json cmd_enumerate_regular(const std::string& spec, const Options& opt) {
  GroupPtr g = load_group(spec, opt);
  Holomorph hol = holomorph(g, strategy_of(opt.aut), aut_budget(opt));
  SearchBudget b;
  if (opt.max_order) b.max_group_order = *opt.max_order;
  if (opt.max_nodes) b.max_nodes = *opt.max_nodes;
  OracleEnumeration e = enumerate_regular_in_hol(hol, b);
  std::vector<RegularRecord> recs;
  recs.reserve(e.hits.size());
  for (const OracleHit& h : e.hits)
    recs.push_back(classify_regular(hol, h.gamma, std::nullopt, classify_budget(opt)));
  return oracle_enumeration_json(e, recs);
}

Json cmd_t_group(const std::string& spec, const Options& opt) {
  GroupPtr g = load_group(spec, opt);
  if (!g->is_perfect())
    throw ScopeError("the normalizer quotient is computed for perfect groups only");
  Holomorph hol = holomorph(g, strategy_of(opt.aut), aut_budget(opt));
  PerfectJEnumeration e = enumerate_j_perfect(hol, classify_budget(opt));
  std::vector<RegularRecord> recs;
  for (const PerfectJRecord& r : e.records) {
    if (!r.record.in_h.value_or(false))
      throw ScopeError(
          "the normalizer quotient needs every normalized subgroup to be an "
          "isomorphic copy of the base");
    recs.push_back(r.record);
  }
  TGroupResult t = t_group(hol, recs);
  Json j;
  j["type"] = t.structure;
  j["order"] = t.group->order();
  Json table = Json::array();
  for (const std::vector<std::uint32_t>& row : t.table) table.push_back(row);
  j["table"] = std::move(table);
  return j;
}

Json cmd_pairing(const std::string& spec, std::vector<std::uint32_t> subset,
                 const Options& opt) {
  GroupPtr g = load_group(spec, opt);
  if (!g->is_perfect())
    throw ScopeError("pairing is computed for perfect groups only");
  Holomorph hol = holomorph(g, strategy_of(opt.aut), aut_budget(opt));
  PerfectJEnumeration e = enumerate_j_perfect(hol, classify_budget(opt));
  const std::size_t nf = e.krs.factors.size();
  std::sort(subset.begin(), subset.end());
  if (std::adjacent_find(subset.begin(), subset.end()) != subset.end())
    throw ParseError("duplicate factor index in --subset");
  for (std::uint32_t i : subset)
    if (i >= nf)
      throw ParseError("factor index " + std::to_string(i) +
                       " is out of range; there are " + std::to_string(nf) +
                       " invariant factors");
  std::vector<std::uint32_t> complement;
  for (std::uint32_t i = 0; i < nf; ++i)
    if (!std::binary_search(subset.begin(), subset.end(), i))
      complement.push_back(i);

  PerfectJEnumeration pair;
  pair.krs = e.krs;
  for (const PerfectJRecord& r : e.records)
    if (r.subset == subset || r.subset == complement) pair.records.push_back(r);
  if (pair.records.size() != 2)
    throw InvariantError("the subset and its complement did not match exactly two records");
  CentralizerBudget cb;
  if (opt.max_nodes) cb.max_nodes = *opt.max_nodes;
  PairingReport rep = pairing_check(hol, pair, cb);
  Json j;
  j["subset"] = subset;
  j["complement"] = complement;
  j["inversion_conjugates"] = rep.inversion_conjugates;
  j["inversion_is_circ_iso"] = rep.inversion_is_circ_iso;
  j["centralizer_matches"] = rep.centralizer_matches;
  j["centralizer_checked"] = rep.centralizer_checked;
  return j;
}

Json cmd_opposite_replace(const std::string& spec, int factor, const Options& opt) {
  GroupPtr g = load_group(spec, opt);
  if (factor != 0 && factor != 1)
    throw ParseError("--factor must be 0 (left) or 1 (right)");
  OppositeReplaceResult r = opposite_replace(g, factor == 1);
  Json j;
  j["factor"] = factor;
  j["table_unchanged"] = r.table_unchanged;
  j["iso_found"] = r.iso.has_value();
  if (r.iso) {
    Json w = Json::array();
    for (Point x : r.iso->images()) w.push_back(x);
    j["iso"] = std::move(w);
  }
  j["replacement"] = cayley_json(*r.group);
  return j;
}

int cmd_verify(const std::optional<std::string>& only, const Options& opt,
               std::ostream& out) {
  std::vector<AcceptanceCase> cases = run_acceptance(only);
  bool all = true;
  for (const AcceptanceCase& a : cases) all = all && a.pass;
  if (opt.format == "text") {
    for (const AcceptanceCase& a : cases)
      out << (a.pass ? "PASS " : "FAIL ") << a.name << ": " << a.detail << "\n";
  } else {
    Json j;
    j["pass"] = all;
    Json arr = Json::array();
    for (const AcceptanceCase& a : cases) {
      Json cj;
      cj["name"] = a.name;
      cj["pass"] = a.pass;
      cj["detail"] = a.detail;
      arr.push_back(std::move(cj));
    }
    j["cases"] = std::move(arr);
    out << dump_json(j);
  }
  return all ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "finite group holomorphs, twisted regular subgroups, and their "
      "classification",
      "holo"};
  app.require_subcommand(1);
  // Global options may appear before or after the subcommand.
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--max-order", opt.max_order,
                 "largest group order accepted (env HOLO_MAX_ORDER)")
      ->envname("HOLO_MAX_ORDER");
  app.add_option("--max-nodes", opt.max_nodes, "search node budget override");
  app.add_option("--aut-strategy", opt.aut, "automorphism group strategy")
      ->check(CLI::IsMember({"auto", "brute", "factorwise"}))
      ->capture_default_str();

  std::string spec;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "orders, center, automorphism and holomorph sizes, invariant factor count");
  analyze->add_option("spec", spec, "group spec, e.g. sl:2,5 or direct(alt:5,psl:2,7)")
      ->required();

  CLI::App* enn = app.add_subcommand(
      "enumerate-normal-regular",
      "all regular subgroups the holomorph normalizes, for a perfect group");
  enn->add_option("spec", spec, "group spec")->required();

  bool oracle = false;
  CLI::App* enr = app.add_subcommand(
      "enumerate-regular",
      "brute-force enumeration of every regular subgroup of the holomorph");
  enr->add_option("spec", spec, "group spec")->required();
  enr->add_flag("--oracle", oracle, "acknowledge the exhaustive small-order search")
      ->required();

  CLI::App* tg = app.add_subcommand(
      "t-group",
      "the quotient of the holomorph's normalizer, acting on the isomorphic-copy records");
  tg->add_option("spec", spec, "group spec")->required();

  std::vector<std::uint32_t> subset;
  CLI::App* pairing =
      app.add_subcommand("pairing", "complement pairing of one normalized record");
  pairing->add_option("spec", spec, "group spec")->required();
  pairing->add_option("--subset", subset, "invariant factor indices of the record")
      ->delimiter(',');

  std::string case_name;
  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--case", case_name, "run a single named case");

  int factor = 1;
  CLI::App* orep = app.add_subcommand(
      "opposite-replace",
      "rebuild a central product with one factor replaced by its opposite");
  orep->add_option("spec", spec, "group spec of a product-built group")->required();
  orep->add_option("--factor", factor, "which factor to replace: 0 left, 1 right")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) {
      emit(cmd_analyze(spec, opt), opt, out);
    } else if (enn->parsed()) {
      emit(cmd_enumerate_normal_regular(spec, opt), opt, out);
    } else if (enr->parsed()) {
      emit(cmd_enumerate_regular(spec, opt), opt, out);
    } else if (tg->parsed()) {
      emit(cmd_t_group(spec, opt), opt, out);
    } else if (pairing->parsed()) {
      emit(cmd_pairing(spec, subset, opt), opt, out);
    } else if (orep->parsed()) {
      emit(cmd_opposite_replace(spec, factor, opt), opt, out);
    } else if (verify->parsed()) {
      std::optional<std::string> only;
      if (!case_name.empty()) only = case_name;
      return cmd_verify(only, opt, out);
    }
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BoundError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ScopeError& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace holo
