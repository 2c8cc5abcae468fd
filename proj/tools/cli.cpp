#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "wittjet/greenberg.hpp"
#include "wittjet/suites.hpp"

namespace wittjet {

namespace {

using nlohmann::json;

struct Options {
  std::string triple = "Z2";
  bool triple_set = false;
  unsigned level = 1;
  bool level_set = false;
  unsigned long cap = 64;
  std::uint64_t size_cap = kDefaultSizeCap;
  std::string cache;
  bool trust_cache = false;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::vector<std::string> rings;
  bool rings_set = false;
  bool serial = false;

  std::string algebra;
  std::vector<std::string> gens;
  std::vector<std::string> rels;
  std::string out;
  std::string table;
  std::string ring = "F2";
  std::string op;
  std::string x, y;
  long lambda = 0;
  std::string s = "x";
  std::string mode;
  std::string suite;
  unsigned m = 1;

  TableOptions tables() const {
    TableOptions t;
    t.cap = cap;
    if (!cache.empty()) t.cache_dir = cache;
    t.trust_cache = trust_cache;
    return t;
  }

  AdjunctionOptions enumeration() const {
    AdjunctionOptions a;
    a.cap = size_cap;
    a.exec = serial ? Exec::Serial : Exec::Parallel;
    return a;
  }
};

std::string read_source(const std::string& text) {
  if (!text.empty() && text.front() == '{') return text;
  std::ifstream in(text);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + text);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, what + ": " + e.what());
  }
}

/// --algebra (file or inline JSON) or --gens/--rels over --triple; `fallback` otherwise.
Presentation algebra(const Options& o, const TriplePtr& triple, std::vector<std::string> fallback_rels) {
  if (!o.algebra.empty()) {
    json j = parse_json(read_source(o.algebra), "algebra");
    if (j.is_object() && !j.contains("triple")) j["triple"] = o.triple;
    return Presentation::from_json(j);
  }
  if (o.gens.empty()) return Presentation::parse(triple, {"x"}, fallback_rels, "A");
  return Presentation::parse(triple, o.gens, o.rels, "A");
}

std::vector<std::string> rings_or(const Options& o, std::vector<std::string> defaults) {
  return o.rings_set ? o.rings : defaults;
}

void render(std::ostream& out, const json& report, unsigned depth) {
  const std::string pad(2 * depth, ' ');
  out << pad << (report.at("pass").get<bool>() ? "PASS " : "FAIL ") << report.at("name").get<std::string>()
      << " (" << report.at("checked").get<std::uint64_t>() << " checks)\n";
  if (report.contains("counterexample")) out << pad << "  witness: " << report["counterexample"].get<std::string>() << "\n";
  for (const auto& [key, value] : report.items()) {
    if (value.is_object() && value.contains("pass") && value.contains("name")) render(out, value, depth + 1);
  }
}

int emit_report(const Options& o, std::ostream& out, const Report& report) {
  if (o.format == "text") {
    render(out, report.to_json(), 0);
  } else {
    out << report.to_json().dump(2) << "\n";
  }
  return report.pass ? kExitPass : kExitFail;
}

void emit(const Options& o, std::ostream& out, const json& j, const std::string& text) {
  if (o.format == "text") {
    out << text;
  } else {
    out << j.dump(2) << "\n";
  }
}

std::string presentation_text(const Presentation& p) {
  std::string out = p.base_name() + "[";
  for (std::size_t i = 0; i < p.generators.size(); ++i) out += (i ? ", " : "") + p.generators[i].name();
  out += "]\n";
  for (const auto& r : p.relations) out += "  " + r.to_string() + "\n";
  return out;
}

json substitution_json(const std::map<JetVar, MultiPoly>& map) {
  json j = json::object();
  for (const auto& [v, f] : map) j[v.name()] = f.to_string();
  return j;
}

// ---------------------------------------------------------------------------

int cmd_witt_table(const Options& o, std::ostream& out) {
  if (!o.table.empty()) {
    SuiteConfig config;
    config.table = o.table;
    Report report = run_suite("witt-axioms", config);
    if (!report.pass) return emit_report(o, out, report);
    WittTable table = witt_table_from_json(parse_json(read_source(o.table), o.table));
    json j = witt_table_to_json(table);
    if (!o.out.empty()) {
      std::ofstream(o.out) << j.dump() << "\n";
      return emit_report(o, out, report);
    }
    out << j.dump() << "\n";
    return kExitPass;
  }
  auto table = build_witt_table(parse_triple(o.triple), o.level, o.tables());
  const json j = witt_table_to_json(*table);
  if (!o.out.empty()) {
    std::ofstream file(o.out);
    if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write " + o.out);
    file << j.dump() << "\n";
    return kExitPass;
  }
  std::string text;
  auto block = [&](const char* name, const std::vector<MultiPoly>& polys) {
    for (std::size_t i = 0; i < polys.size(); ++i) text += name + std::to_string(i) + " = " + polys[i].to_string() + "\n";
  };
  block("S", table->sum);
  block("M", table->product);
  block("N", table->negation);
  block("F", table->frobenius);
  block("D", table->delta);
  out << (o.format == "text" ? text : j.dump() + "\n");
  return kExitPass;
}

int cmd_witt_op(const Options& o, std::ostream& out) {
  const TriplePtr triple = parse_triple(o.triple);
  const FiniteAlgebra b = parse_rings({o.ring}, triple).front();
  const auto table = build_witt_table(triple, o.level, o.tables());
  const WittRing<FiniteAlgebra> w(b, table, o.level);
  using V = std::vector<FiniteAlgebra::Element>;
  auto vector = [&](const std::string& text, const char* flag) {
    if (text.empty()) throw Error(ErrorKind::InvalidArgument, std::string("missing ") + flag);
    const json j = parse_json(text, flag);
    if (!j.is_array() || j.empty()) throw Error(ErrorKind::Parse, std::string(flag) + " must be a non-empty array");
    V v;
    for (const auto& c : j) v.push_back(b.ring().element_from_json(c));
    if (v.size() > w.length()) {
      throw Error(ErrorKind::InvalidArgument, std::string(flag) + " has more than " + std::to_string(w.length()) + " components");
    }
    return v;
  };
  auto to_json_vec = [&](const V& v) {
    json j = json::array();
    for (auto c : v) j.push_back(b.ring().element_to_json(c));
    return j;
  };
  json result;
  json j = {{"triple", o.triple}, {"ring", b.name()}, {"level", o.level}, {"op", o.op}};
  if (o.op == "teichmuller") {
    const auto e = b.ring().element_from_json(parse_json(o.x, "--x"));
    j["x"] = b.ring().element_to_json(e);
    result = to_json_vec(w.teichmuller(e));
  } else {
    const V x = vector(o.x, "--x");
    j["x"] = to_json_vec(x);
    auto binary = [&](const std::function<V(const V&, const V&)>& f) {
      const V y = vector(o.y, "--y");
      if (y.size() != x.size()) throw Error(ErrorKind::InvalidArgument, "--x and --y differ in length");
      j["y"] = to_json_vec(y);
      return to_json_vec(f(x, y));
    };
    auto shrinking = [&](V (WittRing<FiniteAlgebra>::*f)(const V&) const) {
      if (x.size() < 2) throw Error(ErrorKind::InvalidArgument, o.op + " needs at least two components");
      return to_json_vec((w.*f)(x));
    };
    if (o.op == "add") result = binary([&](const V& a, const V& c) { return w.add(a, c); });
    else if (o.op == "sub") result = binary([&](const V& a, const V& c) { return w.sub(a, c); });
    else if (o.op == "mul") result = binary([&](const V& a, const V& c) { return w.mul(a, c); });
    else if (o.op == "neg") result = to_json_vec(w.neg(x));
    else if (o.op == "frobenius") result = shrinking(&WittRing<FiniteAlgebra>::frobenius);
    else if (o.op == "delta") result = shrinking(&WittRing<FiniteAlgebra>::delta);
    else if (o.op == "verschiebung") {
      if (x.size() >= w.length()) throw Error(ErrorKind::InvalidArgument, "verschiebung needs fewer than level+1 components");
      result = to_json_vec(w.verschiebung(x));
    } else if (o.op == "ghost") result = to_json_vec(w.ghost(x));
    else if (o.op == "scalar") {
      j["lambda"] = o.lambda;
      result = to_json_vec(w.scalar(triple->ring().from_int(Integer(o.lambda)), x));
    } else {
      throw Error(ErrorKind::InvalidArgument, "unknown op '" + o.op + "'");
    }
  }
  j["result"] = result;
  emit(o, out, j, result.dump() + "\n");
  return kExitPass;
}

int cmd_jet(const Options& o, std::ostream& out) {
  const TriplePtr triple = parse_triple(o.triple);
  const Presentation a = algebra(o, triple, {"x^2"});
  const unsigned n = o.level_set ? o.level : 1;
  const Presentation jets = jet_algebra(a, n);
  if (o.mode == "alt") {
    const AltPresentation alt = alt_presentation(jets, p_polynomials(a.triple, n, o.cap));
    const json j = {{"presentation", alt.presentation.to_json()},
                    {"forward", substitution_json(alt.forward)},
                    {"inverse", substitution_json(alt.inverse)}};
    std::string text = presentation_text(alt.presentation);
    for (const auto& [v, f] : alt.inverse) text += v.name() + " = " + f.to_string() + "\n";
    emit(o, out, j, text);
    return kExitPass;
  }
  emit(o, out, jets.to_json(), presentation_text(jets));
  return kExitPass;
}

int cmd_adjoint_check(const Options& o, std::ostream& out) {
  const TriplePtr triple = parse_triple(o.triple);
  const Presentation a = algebra(o, triple, {"x^2"});
  const unsigned n = o.level;
  const auto table = build_witt_table(a.triple, n, o.tables());
  const PFamily family = p_polynomials(a.triple, n, o.cap);
  Report report;
  report.name = "adjoint-check " + a.to_string() + " n=" + std::to_string(n);
  for (const auto& b : parse_rings(rings_or(o, {"F2", "F4", "Z4", "F2eps"}), a.triple)) {
    Report r = check_adjunction(a, n, b, table, family, nullptr, o.enumeration());
    r.name = b.name();
    report.absorb(r);
  }
  return emit_report(o, out, report);
}

int cmd_localize_check(const Options& o, std::ostream& out) {
  const TriplePtr triple = parse_triple(o.triple);
  const Presentation a = algebra(o, triple, {});
  const auto rings = parse_rings(rings_or(o, {"F2", "F3", "Z4"}), a.triple);
  Report report = check_localization(a, parse_polynomial(*a.triple, o.s), o.level, rings, o.enumeration());
  return emit_report(o, out, report);
}

int cmd_greenberg(const Options& o, std::ostream& out) {
  const TriplePtr triple = parse_triple(o.triple);
  const auto ctx = GreenbergContext::make(triple, o.m);
  const Presentation a = algebra(o, triple, {"x^2"});
  const auto tables = greenberg_tables(ctx, o.tables());
  if (o.mode == "transform") {
    const Presentation gr = greenberg_transform(a, ctx, tables);
    json j = gr.to_json();
    j["context"] = ctx.describe();
    emit(o, out, j, ctx.describe() + "\n" + presentation_text(gr));
    return kExitPass;
  }
  const auto rings = parse_rings(rings_or(o, {"F2", "F4", "F2eps"}), triple);
  return emit_report(o, out, compare_greenberg(a, ctx, tables, rings, o.enumeration()));
}

int cmd_verify(const Options& o, std::ostream& out) {
  SuiteConfig config;
  if (o.triple_set) config.triple = o.triple;
  if (o.level_set) config.level = o.level;
  if (o.rings_set) config.rings = o.rings;
  if (!o.table.empty()) config.table = o.table;
  config.seed = o.seed;
  config.tables = o.tables();
  config.enumeration = o.enumeration();
  if (o.suite != "all") return emit_report(o, out, run_suite(o.suite, config));
  Report report;
  report.name = "all";
  for (const auto& name : suite_names()) report.absorb(run_suite(name, config));
  return emit_report(o, out, report);
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SizeCap:
    case ErrorKind::FeasibilityCap:
      return kExitCap;
    case ErrorKind::NotDivisible:
      return kExitIntegrality;
    default:
      return kExitUsage;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Witt vectors, arithmetic jets and the Greenberg comparison"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto common = [&](CLI::App* c) {
    c->add_option("--triple", o.triple, "Named triple (Z2, Z3, GAUSS, EISEN, ...) or inline {g, pi, q} JSON")
        ->each([&](const std::string&) { o.triple_set = true; });
    c->add_option("--level", o.level, "Level n")->each([&](const std::string&) { o.level_set = true; });
    c->add_option("--cap", o.cap, "Largest q^n for which tables are built")->check(CLI::PositiveNumber);
    c->add_option("--size-cap", o.size_cap, "Largest enumerated set")->check(CLI::PositiveNumber);
    c->add_option("--cache", o.cache, "Table cache directory");
    c->add_flag("--trust-cache", o.trust_cache, "Skip re-verification of cached tables");
    c->add_option("--seed", o.seed, "Seed for sampled checks");
    c->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    c->add_option("--rings", o.rings, "Coefficient rings (F2, F4, Z4, F2eps, ...)")
        ->delimiter(',')
        ->each([&](const std::string&) { o.rings_set = true; });
    c->add_flag("--serial", o.serial, "Use the serial enumeration kernels");
  };
  auto algebra_options = [&](CLI::App* c) {
    c->add_option("--algebra", o.algebra, "Presentation file or inline JSON");
    c->add_option("--gens", o.gens, "Generator names")->delimiter(',');
    c->add_option("--rels", o.rels, "Relations, e.g. x^2");
  };

  std::function<int()> action;
  auto sub = [&](const char* name, const char* help, std::function<int(const Options&, std::ostream&)> f) {
    CLI::App* c = app.add_subcommand(name, help);
    common(c);
    c->callback([&, f] { action = [&, f] { return f(o, out); }; });
    return c;
  };

  auto* table = sub("witt-table", "Dump (or reload and verify) a universal Witt table", cmd_witt_table);
  table->add_option("--out", o.out, "Write the canonical JSON here");
  table->add_option("--table", o.table, "Table file to reload and verify");

  auto* op = sub("witt-op", "Witt vector arithmetic over a finite ring", cmd_witt_op);
  op->add_option("--ring", o.ring, "Coefficient ring");
  op->add_option("--op", o.op, "add sub mul neg frobenius verschiebung delta teichmuller ghost scalar")->required();
  op->add_option("--x", o.x, "JSON array of components (an element for teichmuller)");
  op->add_option("--y", o.y, "Second operand");
  op->add_option("--lambda", o.lambda, "Integer scalar");

  auto* jet = sub("jet", "Jet algebra presentation", cmd_jet);
  jet->add_option("mode", o.mode, "present or alt")->required()->check(CLI::IsMember({"present", "alt"}));
  algebra_options(jet);

  algebra_options(sub("adjoint-check", "Hom(A, W_n B) against Hom(J_n A, B)", cmd_adjoint_check));

  auto* localize = sub("localize-check", "J_n(A_s) against (J_n A)_t", cmd_localize_check);
  algebra_options(localize);
  localize->add_option("--s", o.s, "Element to invert");

  auto* greenberg = sub("greenberg", "Greenberg transform and comparison", cmd_greenberg);
  greenberg->add_option("mode", o.mode, "transform or compare")->required()->check(CLI::IsMember({"transform", "compare"}));
  greenberg->add_option("--m", o.m, "R = O'/pi'^{me}")->check(CLI::PositiveNumber);
  algebra_options(greenberg);

  auto* verify = sub("verify", "Run a verification suite", cmd_verify);
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("suite", o.suite, "Suite name")->required()->check(CLI::IsMember(suites));
  verify->add_option("--table", o.table, "witt-axioms: verify this table file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const json::exception& e) {
    err << "error (Parse): " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace wittjet
