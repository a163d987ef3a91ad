#include "ncpos/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ncpos/caterpillar.hpp"
#include "ncpos/error.hpp"
#include "ncpos/factorization.hpp"
#include "ncpos/geom_tree.hpp"
#include "ncpos/labeling.hpp"
#include "ncpos/ncpl.hpp"
#include "ncpos/qsym.hpp"
#include "ncpos/verify.hpp"

namespace ncpos::cli {
namespace {

using nlohmann::json;

// Raised for flag combinations CLI11 cannot express; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void write_csv(std::ostream& out, const Table& t) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
    out << "\n";
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

json chord_json(const Chord& c) { return json::array({c.a(), c.b()}); }

// Word descent set: the direct rule on U_n, the chain labeling elsewhere in F_n.
IndexSet word_descents(const FactorSequence& w) {
  if (is_linearly_ordered(w)) return descent_set_direct(w);
  return chain_descent(w);
}

std::string join_args(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) {
    if (!s.empty()) s += ' ';
    s += a.find(' ') == std::string::npos ? a : "\"" + a + "\"";
  }
  return s;
}

struct Emit {
  json doc;
  Table table;
  int code = 0;
};

// enumerate ------------------------------------------------------------

Emit do_enumerate(const std::string& kind, int n) {
  const int cap = (kind == "factorizations" || kind == "chains") ? 8 : kind == "ncpartitions" ? 12 : 16;
  const int floor = kind == "ncpartitions" ? 1 : 2;
  if (n < floor || n > cap) {
    throw UsageError("enumerate " + kind + " needs " + std::to_string(floor) + " <= n <= " + std::to_string(cap));
  }
  Emit e;
  json records = json::array();
  if (kind == "factorizations" || kind == "linear") {
    const auto words = kind == "linear" ? enumerate_linearly_ordered(n) : enumerate_factorizations(n);
    e.table.header = {"word", "descent_set"};
    for (const auto& w : words) {
      const auto des = word_descents(w);
      records.push_back({{"word", w.to_string()}, {"descent_set", des.members()}});
      e.table.rows.push_back({w.to_string(), des.to_string()});
    }
  } else if (kind == "caterpillars") {
    e.table.header = {"word", "descent_set", "main_index", "branches", "links"};
    for (const auto& c : enumerate_caterpillars(n)) {
      const auto des = descent_set_direct(c.word());
      IndexSet branches;
      IndexSet links;
      for (int i = 1; i <= n - 1; ++i) {
        if (c.is_branch(i)) branches.insert(i);
        if (c.is_link(i)) links.insert(i);
      }
      records.push_back({{"word", c.word().to_string()},
                         {"descent_set", des.members()},
                         {"main_index", main_index(c)},
                         {"branches", branches.members()},
                         {"links", links.members()}});
      e.table.rows.push_back({c.word().to_string(), des.to_string(), std::to_string(main_index(c)),
                              branches.to_string(), links.to_string()});
    }
  } else if (kind == "chains") {
    const ChainInverter inverse(n);
    e.table.header = {"word", "chain"};
    for (const auto& m : enumerate_maximal_chains(n)) {
      json parts = json::array();
      std::string joined;
      for (const auto& p : m.partitions()) {
        parts.push_back(p.to_string());
        joined += (joined.empty() ? "" : " < ") + p.to_string();
      }
      const auto& w = inverse(m);
      records.push_back({{"word", w.to_string()}, {"chain", parts}});
      e.table.rows.push_back({w.to_string(), joined});
    }
  } else {
    e.table.header = {"partition", "blocks"};
    for (const auto& p : enumerate_noncrossing_partitions(n)) {
      records.push_back({{"partition", p.to_string()}, {"blocks", p.blocks()}});
      e.table.rows.push_back({p.to_string(), std::to_string(p.block_count())});
    }
  }
  e.doc = {{"kind", kind}, {"n", n}, {"count", records.size()}, {"records", records}};
  return e;
}

// verify ---------------------------------------------------------------

Emit do_verify(const std::string& suite, int lo, int hi) {
  const std::vector<std::string> suites = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  int limit = 0;
  for (const auto& s : suites) limit = std::max(limit, suite_limit(s));
  if (lo < 2) throw UsageError("verify needs n >= 2");
  if (lo > limit) throw UsageError("n = " + std::to_string(lo) + " exceeds the exhaustive limit " + std::to_string(limit));

  Emit e;
  const auto start = std::chrono::steady_clock::now();
  json checks = json::array();
  e.table.header = {"suite", "check", "n", "status", "cases", "ms", "statement", "detail"};
  int run = 0;
  int failed = 0;
  int skipped = 0;
  for (const auto& s : suites) {
    for (const auto& r : run_suite(s, lo, hi)) {
      const std::string status = r.skipped ? "skipped" : r.pass ? "pass" : "fail";
      if (r.skipped) {
        ++skipped;
      } else {
        ++run;
        failed += r.pass ? 0 : 1;
      }
      checks.push_back({{"suite", r.suite},
                        {"check", r.check},
                        {"tests", r.statement},
                        {"n", r.n},
                        {"status", status},
                        {"cases", r.cases},
                        {"ms", std::round(r.ms * 1000.0) / 1000.0},
                        {"detail", r.detail}});
      std::ostringstream ms;
      ms << std::fixed << std::setprecision(3) << r.ms;
      e.table.rows.push_back({r.suite, r.check, std::to_string(r.n), status, std::to_string(r.cases), ms.str(),
                              r.statement, r.detail});
    }
  }
  const double total = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  e.doc = {{"suite", suite},
           {"min_n", lo},
           {"n", hi},
           {"passed", failed == 0},
           {"summary", {{"run", run}, {"passed", run - failed}, {"failed", failed}, {"skipped", skipped}}},
           {"ms", std::round(total * 1000.0) / 1000.0},
           {"checks", checks}};
  e.code = failed == 0 ? 0 : 1;
  return e;
}

// expand ---------------------------------------------------------------

json read_json_input(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return json::parse(in);
  } catch (const json::parse_error& ex) {
    throw UsageError("input is not valid JSON: " + std::string(ex.what()));
  }
}

// Accepts the document printed by `enumerate`: {"n": N, "records": [...]},
// where each record is a word string or an object with a "word" field, or
// an object with a "descent_set" array when no word is present.
std::pair<int, std::vector<IndexSet>> descents_from_document(const json& doc, int n_flag) {
  if (!doc.is_object() || !doc.contains("records") || !doc["records"].is_array()) {
    throw UsageError("input needs a \"records\" array");
  }
  int n = n_flag;
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer()) throw UsageError("\"n\" must be an integer");
    const int file_n = doc["n"].get<int>();
    if (n_flag != 0 && n_flag != file_n) throw UsageError("--n disagrees with the input's n");
    n = file_n;
  }
  if (n < 2) throw UsageError("input needs n >= 2 (set \"n\" or pass --n)");
  std::vector<IndexSet> out;
  for (const auto& r : doc["records"]) {
    std::string word;
    if (r.is_string()) {
      word = r.get<std::string>();
    } else if (r.is_object() && r.contains("word")) {
      word = r["word"].get<std::string>();
    } else if (r.is_object() && r.contains("descent_set")) {
      IndexSet d;
      for (const auto& x : r["descent_set"]) d.insert(x.get<int>());
      if (!d.within(n - 2)) throw UsageError("descent set " + d.to_string() + " is not inside [n-2]");
      out.push_back(d);
      continue;
    } else {
      throw UsageError("record without a word or descent_set: " + r.dump());
    }
    const auto w = FactorSequence::parse(word, n);
    if (w.size() != n - 1 || !is_cycle_factorization(w)) {
      throw UsageError(word + " is not a factorization of the " + std::to_string(n) + "-cycle");
    }
    out.push_back(word_descents(w));
  }
  if (out.empty()) throw UsageError("input has no records");
  return {n, out};
}

Emit do_expand(const std::string& set, int n_flag, const std::string& input) {
  int n = n_flag;
  std::vector<IndexSet> des;
  if (set == "U") {
    if (!input.empty()) throw UsageError("--input goes with --set custom");
    if (n < 2 || n > 12) throw UsageError("expand qsym --set U needs 2 <= n <= 12");
    for (const auto& u : enumerate_linearly_ordered(n)) des.push_back(descent_set_direct(u));
  } else {
    if (input.empty()) throw UsageError("--set custom needs --input FILE (or - for stdin)");
    std::tie(n, des) = descents_from_document(read_json_input(input), n_flag);
    if (n > 13) throw UsageError("expansion supports n <= 13");
  }
  const int degree = n - 1;
  const auto q = qsym_of_descent_multiset(degree, des);

  Emit e;
  json fundamental = json::array();
  e.table.header = {"basis", "index", "coefficient"};
  for (const auto& [d, c] : q.coeffs()) {
    fundamental.push_back({{"descent_set", d.members()}, {"coefficient", c}});
    e.table.rows.push_back({"F", d.to_string(), std::to_string(c)});
  }
  e.doc = {{"set", set}, {"n", n}, {"degree", degree}, {"count", des.size()}, {"fundamental", fundamental}};

  const auto r = expand_in_schur(q);
  if (const auto* ns = std::get_if<NotSymmetric>(&r)) {
    e.doc["symmetric"] = false;
    e.doc["reason"] = ns->reason;
    e.code = 1;
    return e;
  }
  const auto& s = std::get<SchurExpansion>(r);
  json schur = json::array();
  for (const auto& [shape, c] : s.coeffs) {
    schur.push_back({{"shape", shape.parts()}, {"coefficient", c.str()}});
    e.table.rows.push_back({"s", shape.to_string(), c.str()});
  }
  e.doc["symmetric"] = true;
  e.doc["schur"] = schur;
  e.doc["expansion"] = s.to_string();
  e.doc["schur_positive"] = s.integral() && s.nonnegative();
  const bool hooks = q == hook_identity_rhs(n);
  e.doc["hook_identity"] = hooks;
  if (set == "U" && !hooks) e.code = 1;
  return e;
}

// map ------------------------------------------------------------------

Emit do_map(const std::string& word_text, int n_flag, bool coords) {
  FactorSequence w;
  try {
    w = FactorSequence::parse(word_text, n_flag);
  } catch (const InvalidArgument& ex) {
    throw UsageError(ex.what());
  }
  const int n = w.n();
  Emit e;
  e.table.header = {"record", "key", "value"};
  e.doc = {{"word", w.to_string()}, {"n", n}};
  const bool in_fn = w.size() == n - 1 && is_cycle_factorization(w);
  e.doc["factorization"] = in_fn;
  e.table.rows.push_back({"property", "factorization", in_fn ? "true" : "false"});

  if (coords) {
    json pts = json::array();
    for (int k = 1; k <= n; ++k) {
      const auto [x, y] = polygon_vertex(k, n);
      pts.push_back({{"label", k}, {"x", x}, {"y", y}});
      std::ostringstream v;
      v << std::setprecision(12) << x << " " << y;
      e.table.rows.push_back({"coord", std::to_string(k), v.str()});
    }
    e.doc["coords"] = pts;
  }

  std::optional<GeometricTree> tree;
  try {
    tree = build_geometric_graph(w);
  } catch (const GeometryError& ex) {
    json off = json::array();
    for (const auto& c : ex.offending()) off.push_back(chord_json(c));
    e.doc["geometric_tree"] = false;
    e.doc["error"] = ex.what();
    e.doc["offending"] = off;
    e.table.rows.push_back({"property", "geometric_tree", "false"});
    e.table.rows.push_back({"error", "", ex.what()});
    e.code = 1;
    return e;
  }
  e.doc["geometric_tree"] = true;
  e.table.rows.push_back({"property", "geometric_tree", "true"});

  json edges = json::array();
  for (const auto& c : tree->edges()) {
    const std::string kind = to_string(classify_edge(*tree, c));
    edges.push_back({{"edge", chord_json(c)}, {"kind", kind}});
    e.table.rows.push_back({"edge", c.to_string(), kind});
  }
  e.doc["edges"] = edges;

  const GYOrder order(*tree);
  json rel = json::array();
  for (const auto& [a, b] : order.relation_pairs()) {
    rel.push_back(json::array({chord_json(a), chord_json(b)}));
    e.table.rows.push_back({"less", a.to_string(), b.to_string()});
  }
  e.doc["relation"] = rel;
  const bool total = order.is_total();
  const bool cat = is_caterpillar(*tree);
  const bool convex = is_convex_caterpillar(*tree);
  e.doc["total"] = total;
  e.doc["caterpillar"] = cat;
  e.doc["convex_caterpillar"] = convex;
  e.table.rows.push_back({"property", "total", total ? "true" : "false"});
  e.table.rows.push_back({"property", "caterpillar", cat ? "true" : "false"});
  e.table.rows.push_back({"property", "convex_caterpillar", convex ? "true" : "false"});
  try {
    const auto count = count_linear_extensions(order);
    e.doc["linear_extensions"] = count;
    e.table.rows.push_back({"property", "linear_extensions", std::to_string(count)});
  } catch (const InvalidArgument&) {
    e.doc["linear_extensions"] = nullptr;
    e.table.rows.push_back({"property", "linear_extensions", "over cap"});
  }
  if (cat) {
    json sp = json::array();
    for (const auto& c : spine(*tree)) sp.push_back(chord_json(c));
    e.doc["spine"] = sp;
  }
  if (in_fn && is_linearly_ordered(w)) {
    const auto des = descent_set_direct(w);
    e.doc["descent_set"] = des.members();
    e.doc["main_index"] = main_index(w);
    e.table.rows.push_back({"property", "descent_set", des.to_string()});
    e.table.rows.push_back({"property", "main_index", std::to_string(main_index(w))});
  }
  return e;
}

}  // namespace

std::pair<double, double> polygon_vertex(int k, int n) {
  const double theta = std::numbers::pi / 2 - 2 * std::numbers::pi * (k - 1) / n;
  auto tidy = [](double v) {
    v = std::round(v * 1e12) / 1e12;
    return v == 0.0 ? 0.0 : v;
  };
  return {tidy(std::cos(theta)), tidy(std::sin(theta))};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transposition factorizations of the n-cycle: enumeration, checks and expansions", "ncpos"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  long long seed = 0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", seed, "Reserved; every computation is exhaustive");

  auto* en = app.add_subcommand("enumerate", "List the objects of one family at size n");
  std::string en_kind;
  int en_n = 0;
  en->add_option("kind", en_kind)
      ->required()
      ->check(CLI::IsMember({"factorizations", "linear", "caterpillars", "chains", "ncpartitions"}));
  en->add_option("--n", en_n, "Polygon size")->required();

  auto* ve = app.add_subcommand("verify", "Run invariant suites exhaustively");
  std::string ve_suite;
  int ve_n = 0;
  int ve_max = 0;
  ve->add_option("suite", ve_suite)
      ->required()
      ->check(CLI::IsMember({"counts", "gy", "linearity", "descents", "distribution", "schur", "lattice", "all"}));
  auto* opt_n = ve->add_option("--n", ve_n, "Check this size only");
  auto* opt_max = ve->add_option("--max-n", ve_max, "Check sizes 2..N");
  opt_n->excludes(opt_max);

  auto* ex = app.add_subcommand("expand", "Expand a descent generating function in the Schur basis");
  std::string ex_what;
  std::string ex_set;
  std::string ex_input;
  int ex_n = 0;
  ex->add_option("what", ex_what)->required()->check(CLI::IsMember({"qsym"}));
  ex->add_option("--set", ex_set)->required()->check(CLI::IsMember({"U", "custom"}));
  ex->add_option("--n", ex_n, "Polygon size");
  ex->add_option("--input", ex_input, "JSON from enumerate, or - for stdin");

  auto* mp = app.add_subcommand("map", "Geometric tree, order and caterpillar data for one word");
  std::string mp_what;
  std::string mp_word;
  int mp_n = 0;
  bool mp_coords = false;
  mp->add_option("what", mp_what)->required()->check(CLI::IsMember({"gy"}));
  mp->add_option("--word", mp_word, "Factors such as \"(1,2)(2,3)\"")->required();
  mp->add_option("--n", mp_n, "Polygon size (default: factors + 1)");
  mp->add_flag("--coords", mp_coords, "Include polygon vertex coordinates");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  CLI::App* active = &app;
  try {
    app.parse(rev);
    Emit e;
    if (en->parsed()) {
      active = en;
      e = do_enumerate(en_kind, en_n);
    } else if (ve->parsed()) {
      active = ve;
      if (opt_n->count() == 0 && opt_max->count() == 0) throw UsageError("verify needs --n N or --max-n N");
      const int lo = opt_n->count() ? ve_n : 2;
      const int hi = opt_n->count() ? ve_n : ve_max;
      if (hi > 30) throw UsageError("n is limited to 30");
      e = do_verify(ve_suite, lo, hi);
    } else if (ex->parsed()) {
      active = ex;
      e = do_expand(ex_set, ex_n, ex_input);
    } else {
      active = mp;
      if (mp_n < 0) throw UsageError("--n must be positive");
      e = do_map(mp_word, mp_n, mp_coords);
    }
    if (format == "csv") {
      write_csv(out, e.table);
    } else {
      json doc = {{"command", join_args(args)}};
      doc.update(e.doc);
      out << doc.dump(2) << "\n";
    }
    return e.code;
  } catch (const CLI::CallForHelp&) {
    out << (active->parsed() && active != &app ? active->help() : app.help());
    return 0;
  } catch (const CLI::ParseError& pe) {
    err << "error: " << pe.what() << "\n\n" << app.help();
    return 2;
  } catch (const UsageError& ue) {
    err << "error: " << ue.what() << "\n\n" << active->help();
    return 2;
  } catch (const InvalidArgument& ia) {
    err << "error: " << ia.what() << "\n";
    return 2;
  } catch (const std::exception& other) {
    err << "internal error: " << other.what() << "\n";
    return 1;
  }
}

}  // namespace ncpos::cli
