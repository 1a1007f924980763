#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "paley/bounds.hpp"
#include "paley/directions.hpp"
#include "paley/families.hpp"
#include "paley/graph.hpp"
#include "paley/report.hpp"
#include "paley/verify.hpp"

namespace paley::cli {

namespace {

struct Config {
  std::string format = "json";
  std::optional<u64> table_limit;
  double time_limit_seconds = 60.0;

  u64 p = 0;
  unsigned e = 0;
  u64 d = 0;
  std::string index_set;

  bool enumerate = false;
  std::string contains;

  bool bound_all = false;
  bool bound_trivial = false;
  bool bound_thm11 = false;
  bool bound_thm13 = false;
  std::optional<u64> bound_prop41;
  std::string bound_remark32;

  std::string set_a;
  std::string set_b;

  std::string family;
  std::vector<u64> family_params;
  bool family_search = false;

  std::string suite;
  VerifyOptions verify;
};

// Result of a command: the JSON document, optional certificate rows for CSV,
// and the exit code.
struct Outcome {
  Json doc;
  std::vector<Certificate> rows;
  int code = kExitOk;
};

std::vector<u64> parse_list(const std::string& text, const char* what) {
  std::vector<u64> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    u64 v = 0;
    try {
      v = std::stoull(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != item.size()) throw PreconditionError(std::string("malformed ") + what + ": '" + text + "'");
    out.push_back(v);
  }
  return out;
}

FieldOptions field_options(const Config& c) {
  FieldOptions o;
  if (c.table_limit) {
    o.table_limit = *c.table_limit;
  } else if (const char* env = std::getenv("PALEY_TABLE_LIMIT")) {
    const auto v = parse_list(env, "PALEY_TABLE_LIMIT");
    if (v.size() != 1) throw PreconditionError("PALEY_TABLE_LIMIT must be a single integer");
    o.table_limit = v[0];
  }
  return o;
}

FieldPtr field_from(const Config& c) {
  if (!is_prime(c.p)) throw PreconditionError("p = " + std::to_string(c.p) + " is not prime");
  if (c.e < 1) throw PreconditionError("e must be at least 1");
  return make_field(c.p, c.e, field_options(c));
}

std::chrono::milliseconds time_limit(const Config& c) {
  if (!(c.time_limit_seconds > 0)) throw PreconditionError("--time-limit must be positive");
  return std::chrono::milliseconds(static_cast<i64>(c.time_limit_seconds * 1000.0));
}

Graph graph_from(const Config& c, const FieldPtr& field) {
  if (c.index_set.empty()) {
    require_paley_parameters(field->q(), c.d);
    return build_paley_graph(field, c.d);
  }
  return build_cyclotomic_graph(field, c.d, parse_list(c.index_set, "index set"));
}

Json header(const std::string& command) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

Outcome cmd_field(const Config& c) {
  Outcome o{header("field"), {}, kExitOk};
  o.doc["field"] = to_json(*field_from(c));
  return o;
}

Outcome cmd_graph(const Config& c) {
  const FieldPtr field = field_from(c);
  const Graph g = graph_from(c, field);
  Outcome o{header("graph"), {}, kExitOk};
  o.doc["graph"] = to_json(g);
  o.doc["connection_set"] = g.connection_set();
  return o;
}

Outcome cmd_clique(const Config& c) {
  const FieldPtr field = field_from(c);
  const Graph g = graph_from(c, field);
  Outcome o{header("clique"), {}, kExitOk};
  o.doc["graph"] = to_json(g);
  if (c.enumerate) {
    const auto en = enumerate_max_cliques(g, parse_list(c.contains, "vertex set"), time_limit(c));
    o.doc["contains"] = parse_list(c.contains, "vertex set");
    o.doc["enumeration"] = to_json(en);
    if (!en.complete) o.code = kExitTimeout;
  } else {
    const auto r = max_clique(g, time_limit(c));
    o.doc["clique"] = to_json(r);
    if (!r.optimal) o.code = kExitTimeout;
  }
  return o;
}

Outcome cmd_bound(const Config& c) {
  const FieldPtr field = field_from(c);
  const u64 q = field->q();
  Outcome o{header("bound"), {}, kExitOk};
  const int chosen = c.bound_trivial + c.bound_thm11 + c.bound_thm13 + c.bound_prop41.has_value() +
                     !c.bound_remark32.empty();
  if (chosen == 0 || c.bound_all) {
    const BoundBundle b = best_bounds(q, c.d);
    o.doc["bundle"] = to_json(b);
    o.rows = b.certificates;
    return o;
  }
  Certificate cert;
  if (c.bound_trivial) {
    cert = trivial_certificate(q, c.d);
  } else if (c.bound_thm11) {
    cert = thm11_certificate(q, c.d);
  } else if (c.bound_thm13) {
    cert = thm13_certificate(q, c.d);
  } else if (c.bound_prop41) {
    cert = prop41_certify(q, *c.bound_prop41, c.d);
  } else {
    cert = remark32_certificate(q, c.d, parse_list(c.bound_remark32, "index set"));
  }
  o.doc["certificate"] = to_json(cert);
  o.rows.push_back(cert);
  if (!cert.applicable) o.code = kExitPrecondition;
  return o;
}

std::vector<Elem> parse_set(const Field& f, const std::string& text) {
  std::vector<Elem> out;
  if (text.rfind("subfield:", 0) == 0) {
    const auto m = parse_list(text.substr(9), "subfield degree");
    if (m.size() != 1 || m[0] < 1 || f.e() % m[0] != 0) throw PreconditionError("no subfield of degree " + text.substr(9));
    return f.subfield_elements(static_cast<unsigned>(m[0]));
  }
  if (text.rfind("range:", 0) == 0) {
    const auto k = parse_list(text.substr(6), "range length");
    if (k.size() != 1 || k[0] > f.q()) throw PreconditionError("range length must be at most q");
    for (Elem x = 0; x < k[0]; ++x) out.push_back(x);
    return out;
  }
  out = parse_list(text, "set");
  for (Elem x : out) {
    if (!f.contains(x)) throw PreconditionError("element " + std::to_string(x) + " is not in GF(" + std::to_string(f.q()) + ")");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Outcome cmd_directions(const Config& c) {
  const FieldPtr field = field_from(c);
  const auto a = parse_set(*field, c.set_a);
  const auto b = parse_set(*field, c.set_b);
  const PointSet u = PointSet::cartesian(a, b);
  if (u.size() < 2) throw PreconditionError("A x B needs at least two points");
  const DirectionSet ds = direction_set(*field, u);

  Outcome o{header("directions"), {}, kExitOk};
  o.doc["field"] = to_json(*field);
  o.doc["A"] = a;
  o.doc["B"] = b;
  o.doc["directions"] = to_json(ds);
  o.doc["size"] = ds.size();
  if (a.size() >= 2 && b.size() >= 2 && static_cast<u128>(a.size()) * b.size() <= field->q()) {
    const i64 bound = thm16_lower_bound(a.size(), b.size(), field->q(), field->p());
    o.doc["bound"] = bound;
    o.doc["sharp"] = static_cast<i64>(ds.size()) == bound;
    if (static_cast<i64>(ds.size()) < bound) o.code = kExitViolation;
  } else {
    o.doc["bound"] = nullptr;
    o.doc["sharp"] = false;
  }
  return o;
}

void expect_params(const Config& c, std::size_t n, const char* usage) {
  if (c.family_params.size() != n) throw PreconditionError(std::string("usage: family ") + usage);
}

Outcome cmd_family(const Config& c) {
  Outcome o{header("family"), {}, kExitOk};
  const auto& v = c.family_params;
  auto instance = [&](const FamilyInstance& inst) {
    o.doc["instance"] = to_json(inst);
    if (inst.certificate) o.rows.push_back(*inst.certificate);
    if (!inst.accepted) o.code = kExitPrecondition;
  };
  if (c.family == "ex42") {
    expect_params(c, 2, "ex42 p m");
    instance(family_ex42(v[0], static_cast<unsigned>(v[1])));
  } else if (c.family == "ex43") {
    expect_params(c, 3, "ex43 p s t");
    instance(family_ex43(v[0], static_cast<unsigned>(v[1]), static_cast<unsigned>(v[2])));
  } else if (c.family == "ex44") {
    expect_params(c, 1, "ex44 x");
    instance(family_ex44(v[0]));
  } else if (c.family == "ex45") {
    expect_params(c, 1, "ex45 p [--search]");
    const Ex45Report r = counterexample_ex45(v[0], c.family_search, {}, time_limit(c));
    o.doc["report"] = to_json(r);
    o.rows = {r.half_density, r.failed_prop41};
    for (const auto& s : r.searches) {
      if (!s.result.optimal) o.code = kExitTimeout;
    }
  } else if (c.family == "ex46") {
    expect_params(c, 0, "ex46");
    const Ex46Report r = counterexample_ex46();
    o.doc["report"] = to_json(r);
    o.rows = {r.prop41};
  } else {
    throw PreconditionError("unknown family: " + c.family);
  }
  return o;
}

Outcome cmd_verify(const Config& c) {
  VerifyOptions opts = c.verify;
  opts.time_limit = time_limit(c);
  const auto reports = run_verify(c.suite, opts);
  Outcome o{header("verify"), {}, kExitOk};
  Json suites = Json::array();
  u64 violations = 0, timeouts = 0;
  for (const auto& r : reports) {
    Json checks = Json::array();
    for (const auto& ch : r.checks) {
      checks.push_back({{"name", ch.name},
                        {"cases", ch.cases},
                        {"violations", ch.violations},
                        {"timeouts", ch.timeouts},
                        {"failures", ch.failures}});
    }
    suites.push_back({{"suite", r.suite}, {"checks", checks}});
    violations += r.violations();
    timeouts += r.timeouts();
  }
  o.doc["suite"] = c.suite;
  o.doc["seed"] = opts.seed;
  o.doc["suites"] = suites;
  o.doc["violations"] = violations;
  o.doc["timeouts"] = timeouts;
  if (violations > 0) {
    o.code = kExitViolation;
  } else if (timeouts > 0) {
    o.code = kExitTimeout;
  }
  return o;
}

// Flattens nested objects into dotted keys; arrays of scalars become
// space-separated values.
void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  if (j.is_array()) {
    bool scalar = true;
    for (const auto& x : j) scalar = scalar && !x.is_structured();
    if (!scalar) {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
      return;
    }
    std::string s;
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? " " : "") + j[i].dump();
    out.emplace_back(prefix, s);
    return;
  }
  out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char ch : s) {
    if (ch == '"') r += '"';
    r += ch;
  }
  return r + "\"";
}

void emit(const Config& c, const Outcome& o, std::ostream& out) {
  if (c.format == "json") {
    out << o.doc.dump(2) << '\n';
    return;
  }
  std::vector<std::pair<std::string, std::string>> flat;
  flatten(o.doc, "", flat);
  if (c.format == "text") {
    for (const auto& [k, v] : flat) out << k << ": " << v << '\n';
    return;
  }
  if (!o.rows.empty()) {
    out << certificate_csv_header() << '\n';
    for (const auto& cert : o.rows) out << to_csv_row(cert) << '\n';
    return;
  }
  for (std::size_t i = 0; i < flat.size(); ++i) out << (i ? "," : "") << csv_field(flat[i].first);
  out << '\n';
  for (std::size_t i = 0; i < flat.size(); ++i) out << (i ? "," : "") << csv_field(flat[i].second);
  out << '\n';
}

void add_field_args(CLI::App* sub, Config& c) {
  sub->add_option("p", c.p, "characteristic")->required();
  sub->add_option("e", c.e, "extension degree")->required();
}

void add_graph_args(CLI::App* sub, Config& c) {
  add_field_args(sub, c);
  sub->add_option("d", c.d, "degree parameter")->required();
  sub->add_option("--index-set", c.index_set, "coset indices, comma separated (cyclotomic graph)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Generalized Paley graphs, clique bounds and direction sets"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--table-limit", c.table_limit, "largest field order with log tables (overrides PALEY_TABLE_LIMIT)");
  app.add_option("--time-limit", c.time_limit_seconds, "clique search limit in seconds");

  auto* field = app.add_subcommand("field", "field construction data");
  add_field_args(field, c);

  auto* graph = app.add_subcommand("graph", "graph summary");
  add_graph_args(graph, c);

  auto* clique = app.add_subcommand("clique", "exact maximum clique");
  add_graph_args(clique, c);
  clique->add_flag("--enumerate", c.enumerate, "list every maximum clique");
  clique->add_option("--contains", c.contains, "required vertices for --enumerate, comma separated");

  auto* bound = app.add_subcommand("bound", "clique number bounds");
  add_field_args(bound, c);
  bound->add_option("d", c.d, "degree parameter")->required();
  bound->add_flag("--all", c.bound_all, "every bound (default)");
  bound->add_flag("--trivial", c.bound_trivial, "square-root bound");
  bound->add_flag("--thm11", c.bound_thm11, "binomial-coefficient bound");
  bound->add_flag("--thm13", c.bound_thm13, "direction-set bound for non-square q");
  bound->add_option("--prop41", c.bound_prop41, "subfield criterion with |K| = K");
  bound->add_option("--remark32", c.bound_remark32, "cyclotomic bound for index set I");

  auto* directions = app.add_subcommand("directions", "directions determined by A x B");
  add_field_args(directions, c);
  directions->add_option("--A", c.set_a, "explicit list, subfield:m or range:k")->required();
  directions->add_option("--B", c.set_b, "explicit list, subfield:m or range:k")->required();

  auto* family = app.add_subcommand("family", "example families");
  family->add_option("name", c.family, "ex42, ex43, ex44, ex45 or ex46")->required();
  family->add_option("params", c.family_params, "family parameters");
  family->add_flag("--search", c.family_search, "ex45: confirm by exact search");

  auto* verify = app.add_subcommand("verify", "run property suites");
  verify->add_option("suite", c.suite, "suite name or all")->required();
  verify->add_option("--q", c.verify.q, "field order for single-field sweeps");
  verify->add_flag("--exhaustive", c.verify.exhaustive, "widen exhaustive sweeps");
  verify->add_option("--seed", c.verify.seed, "random seed");
  verify->add_option("--samples", c.verify.samples, "sample count override");
  verify->add_option("--workers", c.verify.workers, "worker threads")->check(CLI::PositiveNumber);

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  }

  try {
    Outcome o;
    if (field->parsed()) {
      o = cmd_field(c);
    } else if (graph->parsed()) {
      o = cmd_graph(c);
    } else if (clique->parsed()) {
      if (!c.contains.empty() && !c.enumerate) throw PreconditionError("--contains requires --enumerate");
      o = cmd_clique(c);
    } else if (bound->parsed()) {
      o = cmd_bound(c);
    } else if (directions->parsed()) {
      o = cmd_directions(c);
    } else if (family->parsed()) {
      o = cmd_family(c);
    } else {
      o = cmd_verify(c);
    }
    emit(c, o, out);
    return o.code;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitPrecondition;
}

}  // namespace paley::cli
