#include "irred/cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "irred/cnf.hpp"
#include "irred/dimacs.hpp"
#include "irred/errors.hpp"
#include "irred/gadgets.hpp"
#include "irred/redundancy.hpp"
#include "irred/revision.hpp"
#include "irred/sat.hpp"
#include "irred/var_redundancy.hpp"

namespace irred::cli {
namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::string file;
  std::string with;
  std::string out;
  std::string order;
  std::string vars;
  std::string kind;
  std::string base;
  bool json = false;
  bool all = false;
  bool witness = false;
  bool forget = false;
  long long clause = -1;
  std::size_t cap = 0;  // 0: the analysis default
  std::uint64_t seed = 1;
  std::uint32_t num_vars = 3;
  std::size_t num_clauses = 3;
  std::size_t exists = 1;
  std::size_t n = 2;
  bool sat_mode = false;
};

struct Input {
  std::string path;
  std::string bytes;
  ParsedDimacs parsed;
};

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return os.str();
}

Input load(const std::string& path, std::istream& in) {
  Input r;
  r.path = path;
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open '" + path + "'");
    buf << f.rdbuf();
  }
  r.bytes = buf.str();
  r.parsed = parse_dimacs(r.bytes);
  return r;
}

json lits(const Clause& c) {
  json a = json::array();
  for (const Lit& l : c.literals()) a.push_back(l.to_dimacs());
  return a;
}

json ids(const ClauseIdSet& s) { return json(s); }

json model(const Assignment& a) { return json(a.to_dimacs()); }

json formula_clauses(const Formula& f) {
  json a = json::array();
  for (const Clause& c : f.clauses()) a.push_back(lits(c));
  return a;
}

json input_record(const Input& in) {
  const Formula& f = in.parsed.formula;
  return {{"path", in.path},
          {"sha256", sha256_hex(in.bytes)},
          {"num_vars", f.universe()},
          {"num_clauses", f.size()},
          {"duplicates_dropped", f.duplicates_dropped()},
          {"warnings", in.parsed.warnings}};
}

json clause_records(const Input& in) {
  json a = json::array();
  const Formula& f = in.parsed.formula;
  for (ClauseId id = 0; id < f.size(); ++id) {
    a.push_back({{"id", id}, {"line", in.parsed.clause_lines.at(id)}, {"literals", lits(f[id])}});
  }
  return a;
}

std::vector<std::uint32_t> parse_list(const std::string& s, const std::string& what) {
  std::vector<std::uint32_t> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      long long v = std::stoll(item, &pos);
      if (pos != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::logic_error&) {
      throw UsageError("bad " + what + " entry '" + item + "'");
    }
  }
  return out;
}

// Ids to query: the single --clause, or all of them.
ClauseIdSet queried(const Options& o, const Formula& f) {
  if (o.clause < 0) return f.all_ids();
  ClauseId id = static_cast<ClauseId>(o.clause);
  f.clause(id);
  return {id};
}

std::size_t cap_or(const Options& o, std::size_t dflt) { return o.cap ? o.cap : dflt; }

// A model of pi without the clause that falsifies the clause.
std::optional<Assignment> counter_model(const Formula& f, ClauseId id) {
  Solver s(f.universe());
  s.add_formula(f.without(id));
  for (const Lit& l : f[id].literals()) s.add_unit(~l);
  SatResult r = s.solve();
  return r.model;
}

json do_check(const Options& o, const Input& in, json& clauses) {
  const Formula& f = in.parsed.formula;
  ClauseIdSet red;
  for (ClauseId id : queried(o, f)) {
    bool r = is_clause_redundant(f, id);
    clauses[id]["redundant"] = r;
    if (r) red.push_back(id);
    if (o.witness && !r) clauses[id]["counter_model"] = model(*counter_model(f, id));
  }
  json res = {{"redundant_ids", ids(red)}};
  if (o.clause < 0) res["redundant"] = !red.empty();
  return res;
}

json do_classify(const Options& o, const Input& in, json& clauses) {
  const Formula& f = in.parsed.formula;
  ClassificationReport rep = classify_clauses(f, cap_or(o, kDefaultIesCap));
  ClauseIdSet useful, useless;
  for (ClauseId id = 0; id < f.size(); ++id) {
    ClauseStatus s = rep.statuses[id];
    clauses[id]["status"] = to_string(s);
    if (s == ClauseStatus::UsefulNotNecessary) useful.push_back(id);
    if (s == ClauseStatus::Useless) useless.push_back(id);
    if (o.witness && s != ClauseStatus::Useless) clauses[id]["ies_witness"] = ids(*useful_witness(f, id));
  }
  return {{"necessary", ids(rep.necessary_set)},
          {"useful", ids(useful)},
          {"useless", ids(useless)},
          {"ies_count", rep.ies_count},
          {"ies_count_truncated", rep.ies_count_truncated}};
}

json do_ies(const Options& o, const Input& in) {
  const Formula& f = in.parsed.formula;
  if (o.all) {
    IesReport rep = enumerate_ies(f, cap_or(o, kDefaultIesCap));
    json list = json::array();
    for (const auto& s : rep.ies_list) list.push_back(ids(s));
    return {{"ies", list}, {"count", rep.ies_list.size()}, {"truncated", rep.truncated}, {"unique", rep.unique}};
  }
  json res;
  if (o.order.empty()) {
    res["ies"] = ids(greedy_ies(f));
  } else {
    std::vector<ClauseId> order;
    for (auto v : parse_list(o.order, "order")) order.push_back(v);
    res["ies"] = ids(greedy_ies(f, std::span<const ClauseId>(order)));
    res["order"] = order;
  }
  return res;
}

json do_unique(const Input& in) {
  const Formula& f = in.parsed.formula;
  ClauseIdSet nec = necessary_clauses(f);
  bool unique = has_unique_ies(f);
  json res = {{"unique", unique}, {"necessary", ids(nec)}, {"ies", unique ? ids(nec) : json(nullptr)}};
  auto w = two_ies_witness(f);
  res["two_ies_witness"] = w ? json::array({w->first, w->second}) : json(nullptr);
  return res;
}

json do_minsize(const Input& in) {
  const Formula& f = in.parsed.formula;
  auto m = minimum_equivalent_subset(f);
  return {{"min_size", m->size}, {"witness", ids(m->witness)}, {"necessary_count", necessary_clauses(f).size()}};
}

json do_varred(const Options& o, const Input& in, json& clauses) {
  const Formula& f = in.parsed.formula;
  std::vector<Var> vs;
  for (auto v : parse_list(o.vars, "vars")) {
    if (v == 0) throw UsageError("variable 0 in --vars");
    vs.push_back(Var{v});
  }
  VarScope scope(vs);
  const std::size_t cap = cap_or(o, kDefaultVarCap);
  ClauseIdSet red;
  for (ClauseId id : queried(o, f)) {
    bool r = is_clause_var_redundant(f, id, scope, cap);
    clauses[id]["var_redundant"] = r;
    if (r) red.push_back(id);
  }
  json v = json::array();
  for (Var x : scope.vars) v.push_back(x.index);
  json res = {{"vars", v}, {"var_redundant_ids", ids(red)}};
  if (o.clause < 0) res["redundant"] = !red.empty();
  if (o.forget) res["forget"] = formula_clauses(forget(f, scope, cap));
  return res;
}

json do_condred(const Options& o, const Input& in, json& clauses) {
  const Formula& f = in.parsed.formula;
  ClauseIdSet red;
  for (ClauseId id : queried(o, f)) {
    auto w = cond_irredundancy_witness(f, id);
    clauses[id]["cond_redundant"] = !w;
    if (!w) red.push_back(id);
    if (o.witness && w) clauses[id]["witness"] = {{"omega", model(w->omega)}, {"omega_prime", model(w->omega_prime)}};
  }
  json res = {{"cond_redundant_ids", ids(red)}};
  if (o.clause < 0) res["redundant"] = !red.empty();
  return res;
}

json do_revise(const Options& o, const Input& in, const Input& with) {
  RevisionOutcome r = revise(in.parsed.formula, with.parsed.formula, cap_or(o, kDefaultRevisionCap));
  json subsets = json::array();
  for (const auto& s : r.maximal_subsets) subsets.push_back(ids(s));
  json models = json::array();
  for (const auto& m : r.models) models.push_back(model(m));
  return {{"maximal_subsets", subsets}, {"universe", r.universe}, {"models", models}, {"model_count", r.models.size()}};
}

// gen ---------------------------------------------------------------------

Formula random_base(std::mt19937_64& rng, std::uint32_t vars, std::size_t clauses, std::uint32_t offset = 0) {
  std::vector<Clause> cs;
  std::vector<std::uint32_t> pool(vars);
  for (std::uint32_t i = 0; i < vars; ++i) pool[i] = offset + i + 1;
  for (std::size_t i = 0; i < clauses; ++i) {
    std::shuffle(pool.begin(), pool.end(), rng);
    std::size_t len = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(3, vars))(rng);
    std::vector<Lit> ls;
    for (std::size_t j = 0; j < len; ++j) ls.emplace_back(Var{pool[j]}, (rng() & 1) != 0);
    cs.push_back(Clause::make(std::move(ls)));
  }
  return Formula(std::move(cs), offset + vars);
}

json gadget_fields(const GadgetOutput& g) {
  json fresh = json::array();
  for (const auto& [role, v] : g.fresh_vars) fresh.push_back({{"role", role}, {"var", v.index}});
  json scope = json::array();
  for (Var v : g.scope) scope.push_back(v.index);
  return {{"fresh_vars", fresh},
          {"distinguished", ids(g.distinguished)},
          {"params", g.params},
          {"scope", scope},
          {"dimacs", write_dimacs(g.formula)}};
}

json label(const std::string& property, json value, const std::string& oracle) {
  return {{"property", property}, {"value", std::move(value)}, {"oracle", oracle}};
}

// X is the first `exists` variables the base mentions, Y the rest.
std::pair<std::vector<Var>, std::vector<Var>> split(const Formula& g, std::size_t exists) {
  std::vector<Var> vs = g.vars();
  std::size_t k = std::min(exists, vs.size());
  return {std::vector<Var>(vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(k)),
          std::vector<Var>(vs.begin() + static_cast<std::ptrdiff_t>(k), vs.end())};
}

json vars_json(const std::vector<Var>& vs) {
  json a = json::array();
  for (Var v : vs) a.push_back(v.index);
  return a;
}

json do_gen(const Options& o, std::istream& in_stream, std::vector<std::pair<std::string, std::string>>& files) {
  std::mt19937_64 rng(o.seed);
  auto base = [&]() -> Formula {
    if (!o.base.empty()) return load(o.base, in_stream).parsed.formula;
    return random_base(rng, o.num_vars, o.num_clauses);
  };
  json m = {{"kind", o.kind}, {"seed", o.seed}};
  const std::string& k = o.kind;
  if (k == "exp") {
    Formula f = exponential_family(o.n);
    m["fresh_vars"] = json::array();
    m["distinguished"] = json::array();
    m["params"] = {{"n", o.n}};
    m["scope"] = json::array();
    m["dimacs"] = write_dimacs(f);
    m["expected"] = label("ies_count", std::int64_t{1} << o.n, "closed form 2^n");
  } else if (k == "dp") {
    Formula g = base();
    Formula s = o.base.empty() ? random_base(rng, o.num_vars, o.num_clauses, g.universe())
                               : Formula::of({{int(g.universe()) + 1}, {-int(g.universe()) - 1}});
    auto [full, sub] = dp_pair(g, s);
    m.update(gadget_fields(full));
    m["sub"] = gadget_fields(sub);
    m["base"] = write_dimacs(g);
    m["base_s"] = write_dimacs(s);
    bool expect = solve(g).sat() && !solve(s).sat();
    m["expected"] = label("sub is an IES of the formula", expect, "solve(g) sat and solve(s) unsat");
  } else {
    Formula g = base();
    m["base"] = write_dimacs(g);
    if (k == "sat") {
      m.update(gadget_fields(sat_gadget(g)));
      m["expected"] = label("distinguished clause redundant", !solve(g).sat(), "solve(base) unsat");
    } else if (k == "size" || k == "useful") {
      auto [x, y] = split(g, o.exists);
      bool ef = eval_exists_forall({x, y, g});
      m["x"] = vars_json(x);
      m["y"] = vars_json(y);
      if (k == "size") {
        GadgetOutput out = size_gadget(g, x, y, o.sat_mode);
        m.update(gadget_fields(out));
        m["expected"] = label("equivalent subset of size at most k", ef, "eval_exists_forall(X, Y, base)");
      } else {
        m.update(gadget_fields(usefulness_gadget(g, x, y)));
        bool value = x.empty() ? true : ef;
        m["expected"] = label("distinguished clause useful", value,
                              x.empty() ? "X empty: (w) necessary or base unsat" : "eval_exists_forall(X, Y, base)");
      }
    } else if (k == "var") {
      auto [x, y] = split(g, o.exists);
      m.update(gadget_fields(var_gadget(g, x)));
      m["expected"] = label("distinguished clause var-redundant", !eval_exists_forall({x, y, g}),
                            "not eval_exists_forall(X, Y, base)");
    } else if (k == "condclause") {
      m.update(gadget_fields(cond_clause_gadget(g)));
      m["expected"] = label("distinguished clause conditionally redundant", !solve(g).sat(), "solve(base) unsat");
    } else if (k == "condset") {
      m.update(gadget_fields(cond_set_gadget(g)));
      m["expected"] = label("formula conditionally redundant", !solve(g).sat(), "solve(base) unsat");
    } else {
      throw UsageError("unknown gadget kind '" + k + "'");
    }
  }
  if (!o.out.empty()) {
    files.emplace_back(o.out + ".cnf", m["dimacs"].get<std::string>());
    if (m.contains("sub")) files.emplace_back(o.out + ".sub.cnf", m["sub"]["dimacs"].get<std::string>());
    files.emplace_back(o.out + ".json", m.dump(2) + "\n");
    json paths = json::array();
    for (const auto& f : files) paths.push_back(f.first);
    m["files"] = paths;
  }
  return m;
}

// text rendering ----------------------------------------------------------

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, v] : j.items()) flatten(v, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& e) { return e.is_object(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
  } else if (j.is_string()) {
    out << prefix << ": " << j.get<std::string>() << "\n";
  } else {
    out << prefix << ": " << j.dump() << "\n";
  }
}

void render_text(const json& report, std::ostream& out) {
  if (report["command"]["name"] == "gen") {
    json m = report["result"];
    std::string dimacs = m["dimacs"];
    m.erase("dimacs");
    if (m.contains("sub")) m["sub"].erase("dimacs");
    m.erase("base");
    m.erase("base_s");
    std::ostringstream meta;
    flatten(m, "", meta);
    std::istringstream lines(meta.str());
    for (std::string line; std::getline(lines, line);) out << "c " << line << "\n";
    out << dimacs;
    return;
  }
  json r = report;
  r.erase("schema_version");
  flatten(r, "", out);
}

void add_common(CLI::App* sub, Options& o, bool file = true) {
  if (file) sub->add_option("file", o.file, "DIMACS CNF input, '-' for standard input")->required();
  sub->add_flag("--json", o.json, "emit the JSON report");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Redundancy analysis of CNF formulas", "irred"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "redundant clauses (entailed by the rest)");
  add_common(check, o);
  check->add_option("--clause", o.clause, "query a single clause id");
  check->add_flag("--witness", o.witness, "counter-model for each irredundant clause");

  auto* classify = app.add_subcommand("classify", "necessary / useful / useless per clause");
  add_common(classify, o);
  classify->add_option("--cap", o.cap, "IES count cap (default 256)");
  classify->add_flag("--witness", o.witness, "an IES containing each useful clause");

  auto* ies = app.add_subcommand("ies", "an irredundant equivalent subset, or all of them");
  add_common(ies, o);
  ies->add_flag("--all", o.all, "enumerate every IES up to the cap");
  ies->add_option("--cap", o.cap, "enumeration cap (default 256)");
  ies->add_option("--order", o.order, "greedy removal order, comma-separated clause ids");

  auto* unique = app.add_subcommand("unique", "whether the IES is unique");
  add_common(unique, o);

  auto* minsize = app.add_subcommand("minsize", "smallest equivalent subset");
  add_common(minsize, o);

  auto* varred = app.add_subcommand("varred", "redundancy w.r.t. a variable subset");
  add_common(varred, o);
  varred->add_option("--vars", o.vars, "comma-separated DIMACS variables")->required();
  varred->add_option("--clause", o.clause, "query a single clause id");
  varred->add_option("--cap", o.cap, "maximum |V| (default 16)");
  varred->add_flag("--forget", o.forget, "also report the forgetting onto V");

  auto* condred = app.add_subcommand("condred", "conditional (revision) redundancy");
  add_common(condred, o);
  condred->add_option("--clause", o.clause, "query a single clause id");
  condred->add_flag("--witness", o.witness, "assignment pair for each irredundant clause");

  auto* rev = app.add_subcommand("revise", "maxcons revision by a second formula");
  add_common(rev, o);
  rev->add_option("--with", o.with, "the revising formula (DIMACS)")->required();
  rev->add_option("--cap", o.cap, "maximum joint universe (default 20)");

  auto* gen = app.add_subcommand("gen", "emit a labelled gadget instance");
  add_common(gen, o, false);
  gen->add_option("kind", o.kind, "sat | dp | size | useful | var | condclause | condset | exp")->required();
  gen->add_option("--seed", o.seed, "seed for the random base (default 1)");
  gen->add_option("--base", o.base, "use this DIMACS file as the base instead");
  gen->add_option("--num-vars", o.num_vars, "random base variables (default 3)")->check(CLI::Range(1, 16));
  gen->add_option("--num-clauses", o.num_clauses, "random base clauses (default 3)");
  gen->add_option("--exists", o.exists, "existential variables: the first k the base mentions (default 1)");
  gen->add_option("--n", o.n, "copies for exp (default 2)")->check(CLI::Range(1, 20));
  gen->add_flag("--satisfiable", o.sat_mode, "size gadget with the extra variable u");
  gen->add_option("--out", o.out, "write <prefix>.cnf and <prefix>.json");

  try {
    std::vector<std::string> rev_args(args.rbegin(), args.rend());
    app.parse(rev_args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  o.command = app.get_subcommands().front()->get_name();

  try {
    auto start = std::chrono::steady_clock::now();
    json report;
    report["schema_version"] = kSchemaVersion;
    report["command"] = {{"name", o.command}, {"args", args}};
    std::vector<std::pair<std::string, std::string>> files;

    if (o.command == "gen") {
      report["result"] = do_gen(o, in, files);
    } else {
      Input input = load(o.file, in);
      report["input"] = input_record(input);
      json clauses = clause_records(input);
      json res;
      if (o.command == "check") res = do_check(o, input, clauses);
      else if (o.command == "classify") res = do_classify(o, input, clauses);
      else if (o.command == "ies") res = do_ies(o, input);
      else if (o.command == "unique") res = do_unique(input);
      else if (o.command == "minsize") res = do_minsize(input);
      else if (o.command == "varred") res = do_varred(o, input, clauses);
      else if (o.command == "condred") res = do_condred(o, input, clauses);
      else if (o.command == "revise") {
        if (o.with == "-" && o.file == "-") throw UsageError("only one input may be standard input");
        Input with = load(o.with, in);
        report["revisor"] = input_record(with);
        report["revisor_clauses"] = clause_records(with);
        res = do_revise(o, input, with);
      }
      report["clauses"] = clauses;
      report["result"] = res;
    }

    for (const auto& [path, content] : files) {
      std::ofstream f(path, std::ios::binary);
      if (!f || !(f << content)) throw UsageError("cannot write '" + path + "'");
    }

    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report["timing"] = {{"elapsed_ms", ms}};
    if (o.json) {
      out << report.dump(2) << "\n";
    } else {
      render_text(report, out);
    }
    return 0;
  } catch (const CapExceeded& e) {
    err << "irred: cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const UsageError& e) {
    err << "irred: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "irred: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "irred: internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace irred::cli
