#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "dkcat/io.hpp"

using namespace dkcat;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_input = 2;

/// Usage errors. Every exception that reaches main exits with code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<Field> parse_field_option(const std::string& text) {
  if (text.empty()) return std::nullopt;
  try {
    return Field::parse(text);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad --field: ") + e.what());
  }
}

void require_prime(const Field& f, const char* verb) {
  if (!f.is_prime_field()) throw InputError(std::string(verb) + " needs a prime field F<p>, got " + f.name());
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
}

/// The report goes to the --report file when given, to stdout otherwise.
int finish(const Json& report, const std::string& report_path, bool passed) {
  std::string text = canonical_dump(report);
  if (report_path.empty()) {
    std::cout << text;
  } else {
    write_file(report_path, text);
    std::cout << (passed ? "pass" : "fail") << "\n";
  }
  return passed ? exit_pass : exit_fail;
}

ChainCategory load_category(const std::string& path, const std::optional<Field>& field) {
  ChainCategory c = category_from_json(read_json(path), field);
  CategoryReport r = validate(c);
  if (!r.ok) throw InputError("category is invalid: " + r.witness);
  return c;
}

// ---- verify-interval ---------------------------------------------------------------

struct IntervalOptions {
  std::string file, builtin, field, mode = "strict", actions = "trivial", report;
  int truncation = 2;
};

int cmd_verify_interval(const IntervalOptions& o) {
  if (o.file.empty() == o.builtin.empty()) throw InputError("give either an interval file or --builtin");
  Mode mode;
  try {
    mode = parse_mode(o.mode);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  std::optional<Field> field = parse_field_option(o.field);
  Json out;
  AxiomReport co, cyl;
  if (!o.file.empty()) {
    ChainInterval iv = interval_from_json(read_json(o.file), field);
    out["interval"] = o.file;
    out["field"] = iv.I.field().name();
    co = verify_cocategory(iv, mode);
    cyl = verify_cylinder(iv);
  } else if (o.builtin == "chain") {
    Field f = field.value_or(Field::rationals());
    ChainInterval iv = chain_interval(f);
    out["interval"] = "chain";
    out["field"] = f.name();
    co = verify_cocategory(iv, mode);
    cyl = verify_cylinder(iv);
  } else if (o.builtin == "smod") {
    if (o.truncation < 1) throw InputError("--truncation must be at least 1");
    Field f = field.value_or(Field::rationals());
    SimplicialInterval iv = smod_interval(f, o.truncation);
    out["interval"] = "smod";
    out["field"] = f.name();
    out["truncation"] = o.truncation;
    co = verify_cocategory(iv, mode);
    cyl = verify_cylinder(iv);
  } else if (o.builtin == "cat") {
    CatInterval iv = cat_interval();
    out["interval"] = "cat";
    co = verify_cocategory(iv, mode);
    cyl = verify_cylinder(iv);
  } else if (o.builtin.rfind("hopf:", 0) == 0) {
    std::string path = o.builtin.substr(5);
    HopfAlgebra h = hopf_from_json(read_json(path), field);
    HopfReport valid = validate(h);
    if (!valid.ok) throw InputError("not a Hopf algebra: " + valid.failures.front());
    ActionKind kind;
    try {
      kind = parse_action_kind(o.actions);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    HopfInterval iv = hopf_interval(h, kind);
    out["interval"] = "hopf";
    out["algebra"] = path;
    out["field"] = h.field.name();
    out["dim"] = h.dim;
    out["semisimple"] = is_semisimple(h);
    Json lin = Json::object();
    for (const auto& [name, ok] : h_linearity(iv)) lin[name] = ok;
    out["h_linearity"] = lin;
    co = verify_cocategory(iv, mode);
    cyl = verify_cylinder(iv);
  } else {
    throw InputError("unknown builtin '" + o.builtin + "' (chain, smod, cat, hopf:<file>)");
  }
  out["mode"] = std::string(to_string(mode));
  out["cocategory"] = to_json(co);
  out["cylinder"] = to_json(cyl);
  bool passed = co.passed() && cyl.passed();
  out["passed"] = passed;
  return finish(out, o.report, passed);
}

// ---- path-object -------------------------------------------------------------------

struct PathOptions {
  std::string file, field, interval, report, emit;
  std::size_t max_objects = 64;
  std::vector<std::size_t> trace;
};

int cmd_path_object(const PathOptions& o) {
  auto a = std::make_shared<const ChainCategory>(load_category(o.file, parse_field_option(o.field)));
  require_prime(a->field(), "path-object");
  ChainInterval iv = chain_interval(a->field());
  if (!o.interval.empty()) iv = interval_from_json(read_json(o.interval), a->field());
  std::vector<PathObjectEntry> ledger = p0_objects(*a, o.max_objects);
  PathObjectBundle b = build_path_object(a, iv, ledger);
  AxiomReport report = verify_path_object(b);
  Json out = path_object_summary(b, report);
  if (!o.trace.empty()) {
    if (o.trace.size() != 3) throw InputError("--trace takes three ledger indices");
    for (std::size_t k : o.trace)
      if (k >= ledger.size()) throw InputError("--trace index " + std::to_string(k) + " is not in the ledger");
    PathObjectBuilder builder(a, iv, ledger);
    const auto &e0 = ledger[o.trace[0]], &e1 = ledger[o.trace[1]], &e2 = ledger[o.trace[2]];
    if (e0.source != e1.source || e1.source != e2.source || e0.target != e1.target || e1.target != e2.target)
      throw InputError("--trace entries must share source and target");
    out["trace"] = to_json(builder.composition(o.trace[0], o.trace[1], o.trace[2]));
  }
  if (!o.emit.empty()) {
    std::filesystem::create_directories(o.emit);
    std::filesystem::path dir(o.emit);
    write_file(dir / "i.json", canonical_dump(to_json(b.i)));
    write_file(dir / "s.json", canonical_dump(to_json(b.s_p)));
    write_file(dir / "t.json", canonical_dump(to_json(b.t_p)));
    write_file(dir / "st.json", canonical_dump(to_json(b.st_p)));
  }
  return finish(out, o.report, report.passed());
}

// ---- dk-check --------------------------------------------------------------------

struct DkOptions {
  std::string file, field, report;
};

Json pairs_json(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  Json out = Json::array();
  for (auto [x, y] : pairs) out.push_back({x, y});
  return out;
}

int cmd_dk_check(const DkOptions& o) {
  ChainFunctor f = functor_from_json(read_json(o.file), parse_field_option(o.field));
  require_prime(f.source().field(), "dk-check");
  for (const ChainCategory* c : {&f.source(), &f.target()}) {
    CategoryReport r = validate(*c);
    if (!r.ok) throw InputError("category is invalid: " + r.witness);
  }
  CategoryReport r = validate(f);
  if (!r.ok) throw InputError("not a functor: " + r.witness);
  DkVerdict v = dk_verdict(f);
  Json out;
  out["field"] = f.source().field().name();
  out["verdict"] = to_json(v);
  out["failing_pairs"] = {{"locally-weq", pairs_json(local_failures(f, LocalPredicate::weak_equivalence))},
                          {"locally-fib", pairs_json(local_failures(f, LocalPredicate::fibration))},
                          {"locally-triv-fib", pairs_json(local_failures(f, LocalPredicate::trivial_fibration))}};
  return finish(out, o.report, v.characterization.first == v.characterization.second);
}

// ---- dold-kan ----------------------------------------------------------------------

struct DoldKanCliOptions {
  std::string field = "F7", report;
  std::size_t trials = 100, max_rank = 3;
  std::uint64_t seed = 42;
  int max_degree = 4;
  bool inject_fault = false;
};

int cmd_dold_kan(const DoldKanCliOptions& o) {
  DoldKanOptions opts;
  opts.field = *parse_field_option(o.field);
  require_prime(opts.field, "dold-kan");
  if (o.max_degree < 0) throw InputError("--max-degree must be non-negative");
  opts.trials = o.trials;
  opts.seed = o.seed;
  opts.max_degree = o.max_degree;
  opts.max_rank = o.max_rank;
  if (o.inject_fault) opts.signs = ShuffleSigns::unsigned_terms;
  DoldKanSummary s = run_dold_kan_suite(opts);
  if (s.first_failure)
    std::cerr << "first failing trial: " << *s.first_failure << " (" << s.trials[*s.first_failure].failure << ")\n";
  return finish(to_json(s), o.report, s.failures == 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for chain complexes, simplicial modules and dg-categories"};
  app.require_subcommand(1);

  IntervalOptions io;
  auto* vi = app.add_subcommand("verify-interval", "Verify the cocategory and cylinder axioms of an interval");
  vi->add_option("file", io.file, "Interval file");
  vi->add_option("--builtin", io.builtin, "chain, smod, cat or hopf:<file>");
  vi->add_option("--field", io.field, "Q or F<p>");
  vi->add_option("--mode", io.mode, "strict or lax")->capture_default_str();
  vi->add_option("--truncation", io.truncation, "Truncation level for smod")->capture_default_str();
  vi->add_option("--actions", io.actions, "trivial or regular H-action for hopf")->capture_default_str();
  vi->add_option("--report", io.report, "Write the report here instead of stdout");

  PathOptions po;
  auto* pc = app.add_subcommand("path-object", "Build and verify the path object of a dg-category");
  pc->add_option("file", po.file, "Category file")->required();
  pc->add_option("--field", po.field, "F<p>");
  pc->add_option("--interval", po.interval, "Interval file (default: the chain interval)");
  pc->add_option("--max-objects", po.max_objects, "Refuse ledgers larger than this")->capture_default_str();
  pc->add_option("--emit-functors", po.emit, "Directory for i.json, s.json, t.json and st.json");
  pc->add_option("--trace", po.trace, "Dump the composition trace for ledger entries f0 f1 f2")->expected(3);
  pc->add_option("--report", po.report, "Write the report here instead of stdout");

  DkOptions dk;
  auto* dc = app.add_subcommand("dk-check", "DK predicates of an enriched functor");
  dc->add_option("file", dk.file, "Functor file")->required();
  dc->add_option("--field", dk.field, "F<p>");
  dc->add_option("--report", dk.report, "Write the report here instead of stdout");

  DoldKanCliOptions dko;
  auto* dkc = app.add_subcommand("dold-kan", "Seeded Dold-Kan property suite");
  dkc->add_option("--trials", dko.trials)->capture_default_str();
  dkc->add_option("--seed", dko.seed)->capture_default_str();
  dkc->add_option("--max-degree", dko.max_degree)->capture_default_str();
  dkc->add_option("--max-rank", dko.max_rank)->capture_default_str();
  dkc->add_option("--field", dko.field, "F<p>")->capture_default_str();
  dkc->add_flag("--inject-fault", dko.inject_fault, "Drop the signs of the shuffle map");
  dkc->add_option("--report", dko.report, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_pass : exit_input;
  }

  try {
    if (vi->parsed()) return cmd_verify_interval(io);
    if (pc->parsed()) return cmd_path_object(po);
    if (dc->parsed()) return cmd_dk_check(dk);
    return cmd_dold_kan(dko);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return exit_input;
}
