#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <algorithm>

#include "spectral/catalog.hpp"
#include "spectral/expr.hpp"
#include "spectral/graph.hpp"
#include "spectral/lpbound.hpp"
#include "spectral/search.hpp"
#include "spectral/spectrum.hpp"
#include "spectral/table.hpp"

using json = nlohmann::ordered_json;
using namespace spectral;

namespace {

// usage or domain problems; exit code 2
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { text, json, csv };

struct GraphInput {
  std::string name, g6, file;
};

void add_graph_options(CLI::App* cmd, GraphInput& in) {
  auto* a = cmd->add_option("--graph", in.name, "catalog label, e.g. heawood or pg_incidence(3)");
  auto* b = cmd->add_option("--g6", in.g6, "graph6 string");
  auto* c = cmd->add_option("--file", in.file, "file holding graph6 or an adjacency list");
  a->excludes(b)->excludes(c);
  b->excludes(c);
}

std::string registry_listing() {
  std::string s;
  for (const auto& n : registry_names()) s += "  " + n + (is_parametric(n) ? "(...)" : "") + "\n";
  return s;
}

CatalogEntry lookup(const std::string& label) {
  auto [name, params] = parse_entry_label(label);
  const auto names = registry_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw UsageError("unknown graph '" + name + "'; registry:\n" + registry_listing());
  try {
    return entry(name, params);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

// the graph and, for registry input, its entry
std::pair<Graph, std::optional<CatalogEntry>> load_graph(const GraphInput& in) {
  if (!in.name.empty()) {
    auto e = lookup(in.name);
    return {build(e), e};
  }
  try {
    if (!in.g6.empty()) return {from_graph6(in.g6), std::nullopt};
    if (!in.file.empty()) {
      std::ifstream f(in.file);
      if (!f) throw UsageError("cannot read " + in.file);
      std::stringstream ss;
      ss << f.rdbuf();
      return {parse_graph_text(ss.str()), std::nullopt};
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad graph input: ") + e.what());
  }
  throw UsageError("one of --graph, --g6 or --file is required");
}

Scalar parse_lambda(const std::string& s) {
  try {
    return parse_scalar(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad lambda: ") + e.what());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

json factors_json(const std::vector<std::pair<IntPoly, int>>& fs) {
  json a = json::array();
  for (const auto& [p, m] : fs) a.push_back({{"factor", p.to_string()}, {"multiplicity", m}});
  return a;
}

// ---- bound

int cmd_bound(int k, const std::string& lambda_text, Format fmt) {
  Scalar lambda = parse_lambda(lambda_text);
  auto c = bound_for_lambda(k, lambda);
  if (fmt == Format::json) {
    json j{{"k", k},
           {"lambda", lambda.to_string()},
           {"t", c.params.t},
           {"c", c.params.c.to_string()},
           {"lambda2_T", c.lambda2.to_string()},
           {"M", c.M.to_string()},
           {"M_approx", c.M.to_double()},
           {"v_ub", c.v_ub.get_str()},
           {"parity_applied", c.parity_applied}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "k        " << k << "\n"
              << "lambda   " << lambda.to_string() << "\n"
              << "t        " << c.params.t << "\n"
              << "c        " << c.params.c.to_string() << "\n"
              << "M        " << c.M.to_string() << " (~" << c.M.to_double() << ")\n"
              << "v_ub     " << c.v_ub.get_str() << "\n";
    if (c.parity_applied) std::cout << "parity   k odd, floor(M) odd: bound lowered by one\n";
  }
  return 0;
}

// ---- table

int cmd_table(const TableOptions& opts, bool extended, Format fmt) {
  if (extended) {
    auto rows = extended_table();
    if (fmt == Format::json) {
      json a = json::array();
      for (const auto& r : rows)
        a.push_back({{"graph", r.graph},
                     {"k", r.k},
                     {"t", r.t},
                     {"c", r.c.get_str()},
                     {"threshold", r.parity ? "parity" : "plain"},
                     {"flagged", r.flagged},
                     {"f", r.f.to_string()},
                     {"lambda_prime", r.lambda_prime.to_string()},
                     {"lambda_prime_approx", r.lambda_prime.to_double()}});
      std::cout << a.dump(2) << "\n";
    } else if (fmt == Format::csv) {
      std::cout << "graph,k,t,c,threshold,flagged,f,lambda_prime\n";
      for (const auto& r : rows)
        std::cout << r.graph << ',' << r.k << ',' << r.t << ',' << r.c.get_str() << ','
                  << (r.parity ? "parity" : "plain") << ',' << (r.flagged ? 1 : 0) << ',' << r.f.to_string() << ','
                  << r.lambda_prime.to_double() << "\n";
    } else {
      for (const auto& r : rows) {
        std::printf("%-18s (%d,%d,%s) %-6s %-26s lambda' %.5f%s\n", r.graph.c_str(), r.k, r.t,
                    r.c.get_str().c_str(), r.parity ? "parity" : "plain", r.f.to_string().c_str(),
                    r.lambda_prime.to_double(), r.flagged ? "  [flagged]" : "");
      }
    }
    return 0;
  }
  auto rows = summary_table(opts);
  if (fmt == Format::json) {
    json a = json::array();
    for (const auto& r : rows)
      a.push_back({{"k", r.k},
                   {"lambda", r.lambda.to_string()},
                   {"v", r.v.get_str()},
                   {"source", to_string(r.source)},
                   {"witness", r.witness},
                   {"printed", r.printed.get_str()},
                   {"discrepancy", r.discrepancy},
                   {"note", r.note}});
    std::cout << a.dump(2) << "\n";
  } else if (fmt == Format::csv) {
    std::cout << "k,lambda,v,source,discrepancy,printed,witness,note\n";
    for (const auto& r : rows)
      std::cout << r.k << ',' << csv_field(r.lambda.to_string()) << ',' << r.v.get_str() << ','
                << to_string(r.source) << ',' << (r.discrepancy ? 1 : 0) << ',' << r.printed.get_str() << ','
                << csv_field(r.witness) << ',' << csv_field(r.note) << "\n";
  } else {
    for (const auto& r : rows) {
      std::printf("%3d  %-16s %9s  %-15s %s%s\n", r.k, r.lambda.to_string().c_str(), r.v.get_str().c_str(),
                  to_string(r.source).c_str(), r.witness.c_str(),
                  r.discrepancy ? ("  [differs from printed " + r.printed.get_str() + "]").c_str() : "");
    }
  }
  return 0;
}

// ---- certify

int cmd_certify(const GraphInput& in, std::optional<int> k, const std::string& lambda_text, Format fmt) {
  auto [g, e] = load_graph(in);
  if (!k && lambda_text.empty()) {
    if (!e) throw UsageError("--k and --lambda are required unless --graph names a catalog entry");
    auto r = certify(*e);
    if (fmt == Format::json) {
      json j{{"graph", r.label}, {"ok", r.ok}, {"n", r.n}};
      if (r.k) j["k"] = *r.k;
      if (r.lambda2) j["lambda2"] = r.lambda2->to_string();
      if (r.girth) j["girth"] = *r.girth;
      j["failures"] = r.failures;
      j["seconds"] = r.seconds;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << (r.ok ? "OK " : "FAIL ") << r.label << " n=" << r.n;
      if (r.lambda2) std::cout << " lambda2=" << r.lambda2->to_string();
      if (r.girth) std::cout << " girth=" << *r.girth;
      std::cout << "\n";
      for (const auto& f : r.failures) std::cout << "  " << f << "\n";
    }
    return r.ok ? 0 : 1;
  }
  if (!k || lambda_text.empty()) throw UsageError("--k and --lambda go together");
  Scalar lambda = parse_lambda(lambda_text);
  auto a = certify_attainment(g, *k, lambda);
  std::string label = in.name.empty() ? to_graph6(g) : in.name;
  std::string vname = "v(" + std::to_string(*k) + "," + lambda.to_string() + ")";
  std::string bound = a.classified ? std::to_string(*a.classified) : a.v_ub.get_str();
  if (fmt == Format::json) {
    json j{{"graph", label},     {"k", *k},           {"lambda", lambda.to_string()},
           {"n", a.n},           {"regular", a.regular}, {"connected", a.connected},
           {"bound", bound},     {"attains", a.attains}};
    if (a.connected) {
      j["lambda2"] = a.lambda2.to_string();
      j["lambda2_ok"] = a.lambda2_ok;
      j["t"] = a.t;
      j["c"] = a.c.to_string();
      j["equals_M"] = a.equals_M;
      if (a.drg) j["distance_regular"] = *a.drg;
      if (a.girth) j["girth"] = *a.girth;
    }
    j["notes"] = a.notes;
    std::cout << j.dump(2) << "\n";
  } else {
    if (a.attains) {
      std::cout << "ATTAINS " << vname << "=" << bound << "\n";
    } else {
      std::cout << "DOES NOT ATTAIN " << vname << "=" << bound << "\n";
    }
    std::cout << "  graph   " << label << " (n=" << a.n << ")\n";
    if (a.connected) {
      std::cout << "  lambda2 " << a.lambda2.to_string() << (a.lambda2_ok ? " <= " : " > ") << lambda.to_string()
                << "\n";
      if (a.drg) std::cout << "  distance-regular with T(k,t,c): " << (*a.drg ? "yes" : "no") << "\n";
    }
    for (const auto& n : a.notes) std::cout << "  " << n << "\n";
  }
  return a.attains ? 0 : 1;
}

// ---- search

struct SearchArgs {
  int k = 3;
  std::optional<int> n, n_min, n_max, girth, girth_min;
  std::string lambda;
  bool count = false, collect = false, extremal = false;
  bool no_spectral = false, no_girth = false, no_subgraph = false;
  int jobs = default_jobs();
  int split_depth = 3;
  std::string out;
};

json stats_json(const SearchStats& s) {
  return {{"nodes", s.nodes},
          {"canonical", s.pruned_canonical},
          {"feasibility", s.pruned_feasibility},
          {"spectral", s.pruned_spectral},
          {"subgraph", s.pruned_subgraph},
          {"rejected_final", s.rejected_final}};
}

int cmd_search(const SearchArgs& a, Format fmt) {
  if (a.jobs < 1) throw UsageError("--jobs must be positive");
  if (int(a.count) + int(a.collect) + int(a.extremal) > 1) throw UsageError("pick one of --count, --collect, --extremal");
  SearchResult res;
  json spec_json{{"k", a.k}};
  if (a.extremal) {
    if (a.lambda.empty()) throw UsageError("--extremal needs --lambda");
    Scalar lambda = parse_lambda(a.lambda);
    spec_json["lambda2_max"] = lambda.to_string();
    spec_json["mode"] = "extremal";
    res = find_extremal(a.k, lambda, a.jobs);
  } else {
    SearchSpec s;
    s.k = a.k;
    if (a.n) {
      if (a.n_min || a.n_max) throw UsageError("--n excludes --n-min/--n-max");
      s.n_min = s.n_max = *a.n;
    } else {
      if (!a.n_max) throw UsageError("--n or --n-max is required");
      s.n_max = *a.n_max;
      s.n_min = a.n_min.value_or(1);
    }
    if (a.girth) s.girth_exact = *a.girth;
    if (a.girth_min) s.girth_min = *a.girth_min;
    if (!a.lambda.empty()) s.lambda2_max = parse_lambda(a.lambda);
    s.mode = a.collect ? SearchSpec::Mode::collect : SearchSpec::Mode::count;
    s.hooks.spectral = !a.no_spectral;
    s.hooks.girth = !a.no_girth;
    s.hooks.subgraph_bound = !a.no_subgraph;
    s.jobs = a.jobs;
    s.split_depth = a.split_depth;
    spec_json["n_min"] = s.n_min;
    spec_json["n_max"] = s.n_max;
    if (s.girth_exact) spec_json["girth_exact"] = *s.girth_exact;
    spec_json["girth_min"] = s.girth_min;
    if (s.lambda2_max) spec_json["lambda2_max"] = s.lambda2_max->to_string();
    spec_json["mode"] = a.collect ? "collect" : "count";
    res = enumerate(s);
  }
  for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";

  std::vector<std::string> lines = res.graphs;
  if (a.extremal)
    for (const auto& w : res.witnesses) lines.push_back(w.graph6);
  if (!a.out.empty()) {
    std::ofstream f(a.out);
    if (!f) throw UsageError("cannot write " + a.out);
    for (const auto& l : lines) f << l << "\n";
  }

  if (fmt == Format::json) {
    json counts = json::object();
    for (const auto& [n, c] : res.counts_by_n) counts[std::to_string(n)] = c;
    json j{{"spec", spec_json},
           {"counts_by_n", counts},
           {"total", res.total()},
           {"pruned_branches", stats_json(res.stats)},
           {"wall_time", res.wall_time}};
    if (a.extremal) {
      if (res.max_order) j["max_order"] = *res.max_order;
      json w = json::array();
      for (const auto& x : res.witnesses) w.push_back({{"graph6", x.graph6}, {"lambda2", x.lambda2.to_string()}});
      j["witnesses"] = w;
    }
    if (a.collect && a.out.empty()) j["graphs"] = res.graphs;
    std::cout << j.dump(2) << "\n";
  } else {
    if (a.extremal) {
      if (res.max_order) {
        std::cout << "max order " << *res.max_order << "\n";
        for (const auto& w : res.witnesses) std::cout << w.graph6 << "  lambda2 " << w.lambda2.to_string() << "\n";
      } else {
        std::cout << "no graph found\n";
      }
    } else {
      if (a.collect && a.out.empty())
        for (const auto& l : res.graphs) std::cout << l << "\n";
      if (res.counts_by_n.size() == 1 && !a.collect) {
        std::cout << res.total() << "\n";
      } else {
        for (const auto& [n, c] : res.counts_by_n) std::cerr << "n=" << n << ": " << c << "\n";
        std::cerr << "total " << res.total() << "\n";
      }
    }
    std::cerr << "time " << res.wall_time << " s, nodes " << res.stats.nodes << "\n";
  }
  if (a.extremal) return res.max_order ? 0 : 1;
  return 0;
}

// ---- catalog

json entry_json(const CatalogEntry& e, const std::optional<Graph>& g) {
  json j{{"name", e.label()}, {"n", e.n}, {"k", e.k}};
  j["lambda2"] = e.lambda2 ? json(e.lambda2->to_string()) : json(nullptr);
  if (e.girth) j["girth"] = *e.girth;
  json factors = json::array();
  if (g && g->order() <= kCharPolyMaxOrder) {
    factors = factors_json(factor_rational(char_poly(*g)));
  } else if (!e.charpoly.empty()) {
    factors = e.charpoly;
  }
  j["charpoly"] = factors;
  j["provenance"] = to_string(e.provenance);
  if (!e.description.empty()) j["description"] = e.description;
  return j;
}

int cmd_catalog_list(Format fmt) {
  auto es = standard_entries();
  if (fmt == Format::json) {
    json a = json::array();
    for (const auto& e : es) a.push_back(entry_json(e, std::nullopt));
    std::cout << a.dump(2) << "\n";
  } else if (fmt == Format::csv) {
    std::cout << "name,n,k,lambda2,girth,provenance\n";
    for (const auto& e : es)
      std::cout << csv_field(e.label()) << ',' << e.n << ',' << e.k << ','
                << csv_field(e.lambda2 ? e.lambda2->to_string() : "") << ','
                << (e.girth ? std::to_string(*e.girth) : "") << ',' << to_string(e.provenance) << "\n";
  } else {
    for (const auto& e : es) {
      std::printf("%-24s n=%-5d k=%-3d lambda2=%-12s %s\n", e.label().c_str(), e.n, e.k,
                  e.lambda2 ? e.lambda2->to_string().c_str() : "?", to_string(e.provenance).c_str());
    }
  }
  return 0;
}

int cmd_catalog_export(const std::string& name, const std::string& format) {
  auto e = lookup(name);
  Graph g = build(e);
  if (format == "graph6") {
    std::cout << to_graph6(g) << "\n";
  } else if (format == "adjlist") {
    std::cout << to_adjacency_list(g);
  } else {
    json j = entry_json(e, g);
    j["graph6"] = to_graph6(g);
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

// ---- spectrum

int cmd_spectrum(const GraphInput& in, Format fmt) {
  auto [g, e] = load_graph(in);
  if (g.order() > kCharPolyMaxOrder)
    throw UsageError("exact spectrum limited to " + std::to_string(kCharPolyMaxOrder) + " vertices");
  auto s = spectrum(g);
  if (fmt == Format::json) {
    json eig = json::array();
    for (const auto& ev : s.eigenvalues) eig.push_back({{"value", ev.value.to_string()}, {"multiplicity", ev.multiplicity}});
    json j{{"n", g.order()},
           {"charpoly", s.charpoly.to_string()},
           {"factors", factors_json(s.factors)},
           {"eigenvalues", eig}};
    if (g.is_connected() && g.order() >= 2) j["lambda2"] = second_eig(g).to_string();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << factored_string(s.factors) << "\n";
    for (const auto& ev : s.eigenvalues) std::cout << "  " << ev.value.to_string() << "  x" << ev.multiplicity << "\n";
    if (g.is_connected() && g.order() >= 2) std::cout << "lambda2 " << second_eig(g).to_string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral bounds on the order of regular graphs"};
  app.require_subcommand(1);
  bool as_json = false, as_csv = false;
  auto add_format = [&](CLI::App* c) {
    auto* j = c->add_flag("--json", as_json, "JSON output");
    auto* v = c->add_flag("--csv", as_csv, "CSV output");
    j->excludes(v);
  };

  int bound_k = 0;
  std::string bound_lambda;
  auto* bound = app.add_subcommand("bound", "linear programming bound v(k, lambda)");
  bound->add_option("--k", bound_k, "degree")->required();
  bound->add_option("--lambda", bound_lambda, "lambda, e.g. \"(sqrt(5)-1)/2\"")->required();
  add_format(bound);

  TableOptions topts;
  bool no_search = false, extended = false;
  auto* table = app.add_subcommand("table", "summary table for k <= max-k");
  table->add_option("--max-k", topts.max_k, "largest degree (<= 22)");
  table->add_flag("--no-search", no_search, "skip the exhaustive search row");
  table->add_flag("--extended", extended, "extended-range table instead");
  table->add_option("--jobs", topts.jobs, "worker threads");
  topts.jobs = default_jobs();
  add_format(table);

  GraphInput cert_in;
  std::optional<int> cert_k;
  std::string cert_lambda;
  auto* cert = app.add_subcommand("certify", "check that a graph attains v(k, lambda), or certify a catalog entry");
  add_graph_options(cert, cert_in);
  cert->add_option("--k", cert_k, "degree");
  cert->add_option("--lambda", cert_lambda, "lambda");
  add_format(cert);

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "exhaustive search over connected k-regular graphs");
  search->add_option("--k", sa.k, "degree")->required();
  search->add_option("--n", sa.n, "order");
  search->add_option("--n-min", sa.n_min, "smallest order");
  search->add_option("--n-max", sa.n_max, "largest order");
  search->add_option("--girth", sa.girth, "exact girth");
  search->add_option("--girth-min", sa.girth_min, "girth at least");
  search->add_option("--lambda", sa.lambda, "keep graphs with lambda2 <= lambda");
  search->add_flag("--count", sa.count, "count only (default)");
  search->add_flag("--collect", sa.collect, "emit graph6 lines");
  search->add_flag("--extremal", sa.extremal, "largest order with lambda2 <= lambda");
  search->add_flag("--no-spectral-prune", sa.no_spectral);
  search->add_flag("--no-girth-prune", sa.no_girth);
  search->add_flag("--no-subgraph-prune", sa.no_subgraph);
  search->add_option("--jobs", sa.jobs, "worker threads (default $SPECTRAL_BOUND_JOBS or 1)");
  search->add_option("--split-depth", sa.split_depth, "rows placed before the work is split");
  search->add_option("--out", sa.out, "write graph6 lines to this file");
  add_format(search);

  auto* catalog = app.add_subcommand("catalog", "catalog of extremal graphs");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "list standard entries");
  add_format(list);
  std::string export_name, export_format = "json";
  auto* exp = catalog->add_subcommand("export", "export one entry");
  exp->add_option("--name", export_name, "catalog label")->required();
  exp->add_option("--format", export_format, "graph6, adjlist or json")
      ->check(CLI::IsMember({"graph6", "adjlist", "json"}));

  GraphInput spec_in;
  auto* spec = app.add_subcommand("spectrum", "exact spectrum");
  add_graph_options(spec, spec_in);
  add_format(spec);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  Format fmt = as_json ? Format::json : as_csv ? Format::csv : Format::text;

  try {
    if (*bound) return cmd_bound(bound_k, bound_lambda, fmt);
    if (*table) {
      topts.run_search = !no_search;
      return cmd_table(topts, extended, fmt);
    }
    if (*cert) return cmd_certify(cert_in, cert_k, cert_lambda, fmt);
    if (*search) return cmd_search(sa, fmt);
    if (*list) return cmd_catalog_list(fmt);
    if (*exp) return cmd_catalog_export(export_name, export_format);
    if (*spec) return cmd_spectrum(spec_in, fmt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
