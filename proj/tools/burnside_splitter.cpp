// burnside-splitter: dims | verify | summands | simples
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "burnside/verify.hpp"

using namespace burnside;
using nlohmann::json;

namespace {

struct Row {
  std::string tag;
  std::optional<int> weight;
  std::string computed;
  std::string expected;
  bool match;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_csv(std::ostream& os, const std::vector<Row>& rows) {
  os << "case,weight,computed,expected,match\n";
  for (const auto& r : rows)
    os << csv_field(r.tag) << ',' << (r.weight ? std::to_string(*r.weight) : "") << ',' << csv_field(r.computed) << ','
       << csv_field(r.expected) << ',' << (r.match ? "true" : "false") << '\n';
}

json rows_json(const std::vector<Row>& rows) {
  json a = json::array();
  for (const auto& r : rows)
    a.push_back({{"case", r.tag},
                  {"weight", r.weight ? json(*r.weight) : json(nullptr)},
                  {"computed", r.computed},
                  {"expected", r.expected},
                  {"match", r.match}});
  return a;
}

bool all_match(const std::vector<Row>& rows) {
  for (const auto& r : rows)
    if (!r.match) return false;
  return true;
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int p = 3;
  std::optional<int> max_weight;
  std::string case_id = "all";
  std::string format = "csv";
  std::uint64_t seed = 1;
  std::string out;
};

int weight_cap(int p) {
  if (const char* env = std::getenv("BS_MAX_WEIGHT")) {
    try {
      std::size_t used = 0;
      int v = std::stoi(env, &used);
      if (used == std::string(env).size() && v >= 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("BS_MAX_WEIGHT is not a nonnegative integer: ") + env);
  }
  return default_max_weight(p);
}

int resolve_weight(const Options& o) {
  int cap = weight_cap(o.p);
  if (!o.max_weight) return cap;
  if (*o.max_weight < 0) throw UsageError("--max-weight must be nonnegative");
  if (*o.max_weight > cap)
    throw UsageError("--max-weight " + std::to_string(*o.max_weight) + " exceeds the cap " + std::to_string(cap) +
                     " (raise it with BS_MAX_WEIGHT)");
  return *o.max_weight;
}

void require_p(int p, std::initializer_list<int> allowed, const std::string& cmd) {
  for (int a : allowed)
    if (a == p) return;
  std::string list;
  for (int a : allowed) list += (list.empty() ? "" : ", ") + std::to_string(a);
  throw UsageError(cmd + " supports p in {" + list + "}, got " + std::to_string(p));
}

Settings settings_for(const Options& o) {
  Settings s;
  s.p = o.p;
  s.max_weight = resolve_weight(o);
  s.a_max_weight = std::min(s.max_weight, 20);
  s.seed = o.seed;
  return s;
}

struct Output {
  std::vector<Row> rows;
  json doc;
};

Output cmd_dims(const Options& o) {
  require_p(o.p, {3, 5, 7}, "dims");
  int n = resolve_weight(o);
  BisetContext ctx(o.p);
  Cohomology coh(ctx);
  Output out;
  for (const auto& d : dimension_table(coh, n))
    out.rows.push_back(Row{"dims", d.weight, std::to_string(d.computed), std::to_string(d.expected), d.computed == d.expected});
  out.doc = {{"command", "dims"}, {"p", o.p}, {"max_weight", n}, {"rows", rows_json(out.rows)}};
  return out;
}

Output cmd_verify(const Options& o) {
  require_p(o.p, {3, 5}, "verify");
  if (o.case_id != "all" && !is_case(o.case_id)) {
    std::string ids;
    for (const auto& c : verification_cases()) ids += "\n  " + c.id;
    throw UsageError("unknown case " + o.case_id + "; known cases:" + ids);
  }
  Settings s = settings_for(o);
  Workbench wb(s);
  Output out;
  json cases = json::array();
  for (const auto& c : verification_cases()) {
    if (o.case_id != "all" && c.id != o.case_id) continue;
    CaseResult r = run_case(wb, c.id);
    for (const auto& row : r.rows)
      out.rows.push_back(Row{r.id + "/" + row.check, row.weight, row.computed, row.expected, row.match});
    if (!r.error.empty()) out.rows.push_back(Row{r.id + "/error", std::nullopt, r.error, "", false});
    std::cerr << (r.passed() ? "PASS " : "FAIL ") << r.id << "  (" << r.rows.size() << " checks, " << r.failures()
              << " failed)" << (r.error.empty() ? "" : "  error: " + r.error) << '\n';
    for (const auto& row : r.rows)
      if (!row.match)
        std::cerr << "  " << row.check << (row.weight ? " at weight " + std::to_string(*row.weight) : "") << ": got "
                  << row.computed << ", expected " << row.expected << '\n';
    json checks = json::array();
    for (const auto& row : r.rows)
      checks.push_back({{"check", row.check},
                        {"weight", row.weight ? json(*row.weight) : json(nullptr)},
                        {"computed", row.computed},
                        {"expected", row.expected},
                        {"match", row.match}});
    cases.push_back({{"id", r.id},
                     {"statement", r.statement},
                     {"status", r.passed() ? "PASS" : "FAIL"},
                     {"error", r.error},
                     {"checks", checks}});
  }
  out.doc = {{"command", "verify"}, {"p", o.p}, {"max_weight", s.max_weight}, {"seed", o.seed}, {"cases", cases}};
  return out;
}

Output cmd_summands(const Options& o) {
  require_p(o.p, {3, 5}, "summands");
  Settings s = settings_for(o);
  Workbench wb(s);
  const int n_max = s.max_weight;
  Output out;
  json entries = json::array();
  std::vector<long long> total(static_cast<std::size_t>(n_max + 1), 0);
  for (const auto& cf : closed_forms(o.p, n_max)) {
    auto h = wb.census().summand_hilbert(cf.id, n_max, o.seed);
    json rows = json::array();
    for (int n = 1; n <= n_max; ++n) {
      auto un = static_cast<std::size_t>(n);
      total[un] += h[un];
      out.rows.push_back(Row{cf.label, n, std::to_string(h[un]), std::to_string(cf.series[un]), h[un] == cf.series[un]});
      rows.push_back({{"weight", n}, {"computed", h[un]}, {"expected", cf.series[un]}, {"match", h[un] == cf.series[un]}});
    }
    json e = {{"summand", cf.label}, {"simple", cf.id.name()}, {"subspace", cf.text()}, {"rows", rows}};
    if (cf.table_row >= 0) e["table_row"] = cf.table_row + 1;
    entries.push_back(e);
  }
  for (int n = 1; n <= n_max; ++n) {
    long long dim = static_cast<long long>(wb.coh().he_basis(n).dim());
    auto t = total[static_cast<std::size_t>(n)];
    out.rows.push_back(Row{"total", n, std::to_string(t), std::to_string(dim), t == dim});
  }
  json table = json::array();
  for (int i = 1; i <= o.p - 2; ++i)
    for (int q = 0; q <= o.p - 2; ++q) table.push_back({{"i", i}, {"q", q}, {"row", twisted_row(i, q, o.p) + 1}});
  out.doc = {{"command", "summands"}, {"p", o.p},         {"max_weight", n_max},
             {"summands", entries},   {"table", table}, {"rows", rows_json(out.rows)}};
  return out;
}

Output cmd_simples(const Options& o) {
  require_p(o.p, {3, 5}, "simples");
  Settings s = settings_for(o);
  Workbench wb(s);
  const Simples& sim = wb.simples();
  Output out;
  json census = json::object();
  for (const Group* g : {&wb.ctx().E(), &wb.ctx().A()}) {
    json list = json::array();
    for (const auto& id : sim.census(*g)) {
      long long built = static_cast<long long>(sim.reference(id).dim);
      out.rows.push_back(Row{id.name(), std::nullopt, std::to_string(built), std::to_string(id.expected_dim(o.p)),
                             built == id.expected_dim(o.p)});
      list.push_back({{"id", id.name()}, {"dim", id.expected_dim(o.p)}, {"reference_dim", built}});
    }
    census[g->name()] = list;
  }
  json vanish = json::array();
  for (int i = 0; i <= o.p - 2; ++i)
    for (int q = 0; q <= o.p - 2; ++q) {
      long long d = static_cast<long long>(sim.rank_two_value(i, q).dim);
      std::string tag = "S(A,A,S^" + std::to_string(i) + "*det^" + std::to_string(q) + ") at E";
      out.rows.push_back(Row{tag, std::nullopt, std::to_string(d), "0", d == 0});
      vanish.push_back({{"i", i}, {"q", q}, {"dim", d}});
    }
  json weights = json::array();
  for (int n = 1; n <= s.max_weight; ++n) {
    const WeightCensus& wc = wb.census().at(wb.ctx().E(), n, o.seed);
    json fs = json::array();
    bool known = true;
    std::string text;
    for (const auto& f : wc.factors) {
      std::string name = f.id ? f.id->name() : "unknown";
      known = known && f.id.has_value();
      fs.push_back({{"id", name}, {"multiplicity", f.multiplicity}});
      text += (text.empty() ? "" : " + ") + std::to_string(f.multiplicity) + "x" + name;
    }
    out.rows.push_back(Row{"factors of H(E)", n, text, "identified", known});
    weights.push_back({{"weight", n}, {"dim", wc.dim}, {"factors", fs}});
  }
  out.doc = {{"command", "simples"}, {"p", o.p}, {"census", census}, {"vanishing", vanish}, {"weights", weights}};
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Composition factors of the mod-p cohomology of p^(1+2)_+ under the double Burnside algebra"};
  app.require_subcommand(1, 1);
  Options o;
  int p_arg = 3;
  int mw_arg = -1;
  app.add_option("--p", p_arg, "odd prime (dims: 3, 5, 7; others: 3, 5)");
  app.add_option("--max-weight", mw_arg, "largest weight n of H^{2n} to check (default: cap for p)");
  app.add_option("--case", o.case_id, "verification case id, or all");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", o.seed, "seed for the MeatAxe");
  app.add_option("--out", o.out, "write the report here instead of stdout");
  auto* dims = app.add_subcommand("dims", "dim H^{2n}(E) against the generating function")->fallthrough();
  auto* verify = app.add_subcommand("verify", "run verification cases")->fallthrough();
  auto* summands = app.add_subcommand("summands", "multiplicity series of each simple against the closed forms")->fallthrough();
  auto* simples = app.add_subcommand("simples", "census of simple modules with reference dimensions")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  o.p = p_arg;
  if (app.count("--max-weight")) o.max_weight = mw_arg;

  Output out;
  try {
    if (!is_odd_prime(o.p)) throw UsageError("--p must be an odd prime");
    if (dims->parsed())
      out = cmd_dims(o);
    else if (verify->parsed())
      out = cmd_verify(o);
    else if (summands->parsed())
      out = cmd_summands(o);
    else if (simples->parsed())
      out = cmd_simples(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  }

  std::ostringstream text;
  if (o.format == "json")
    text << out.doc.dump(2) << '\n';
  else
    write_csv(text, out.rows);
  if (o.out.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "cannot write " << o.out << '\n';
      return 2;
    }
    f << text.str();
  }
  bool ok = all_match(out.rows);
  std::cerr << (ok ? "all checks match" : "some checks FAILED") << " (" << out.rows.size() << " rows)\n";
  return ok ? 0 : 1;
}
