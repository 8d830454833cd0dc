#include "spectral/table.hpp"

#include <stdexcept>

#include "spectral/catalog.hpp"
#include "spectral/expr.hpp"
#include "spectral/lpbound.hpp"
#include "spectral/search.hpp"

namespace spectral {

namespace {

struct Cell {
  int k;
  const char* lambda;
  long printed;
};

// (k, lambda) keys of the published summary table with the printed orders
const Cell kCells[] = {
    {2, "-1", 3}, {2, "0", 4}, {2, "(sqrt(5)-1)/2", 5}, {2, "1", 6}, {2, "sqrt(2)", 8},
    {2, "(sqrt(5)+1)/2", 10}, {2, "sqrt(3)", 12},
    {3, "-1", 4}, {3, "0", 6}, {3, "1", 10}, {3, "sqrt(2)", 14}, {3, "sqrt(3)", 18}, {3, "2", 30},
    {3, "sqrt(6)", 126},
    {4, "-1", 5}, {4, "0", 8}, {4, "1", 9}, {4, "sqrt(5)-1", 10}, {4, "sqrt(3)", 26}, {4, "2", 35},
    {4, "sqrt(6)", 80}, {4, "3", 728},
    {5, "-1", 6}, {5, "0", 10}, {5, "1", 16}, {5, "2", 42}, {5, "2*sqrt(2)", 170}, {5, "2*sqrt(3)", 2730},
    {6, "-1", 7}, {6, "0", 12}, {6, "1", 15}, {6, "sqrt(5)", 62}, {6, "sqrt(10)", 312}, {6, "sqrt(15)", 7812},
    {7, "-1", 8}, {7, "0", 14}, {7, "1", 18}, {7, "2", 50},
    {8, "-1", 9}, {8, "0", 16}, {8, "1", 21}, {8, "sqrt(7)", 114}, {8, "sqrt(14)", 800}, {8, "sqrt(21)", 39216},
    {9, "-1", 10}, {9, "0", 18}, {9, "1", 24}, {9, "2*sqrt(2)", 146}, {9, "4", 1170}, {9, "2*sqrt(6)", 74898},
    {10, "-1", 11}, {10, "0", 20}, {10, "1", 27}, {10, "2", 56}, {10, "3", 182}, {10, "3*sqrt(2)", 1640},
    {10, "3*sqrt(3)", 132860},
    {11, "-1", 12}, {11, "0", 22}, {11, "1", 24},
    {12, "-1", 13}, {12, "0", 24}, {12, "1", 26}, {12, "sqrt(11)", 266}, {12, "sqrt(22)", 2928},
    {12, "sqrt(33)", 354312},
    {13, "-1", 14}, {13, "0", 26}, {13, "1", 28},
    {14, "-1", 15}, {14, "0", 28}, {14, "1", 30}, {14, "sqrt(13)", 366}, {14, "sqrt(26)", 4760},
    {14, "sqrt(39)", 804468},
    {15, "-1", 16}, {15, "0", 30}, {15, "1", 32},
    {16, "-1", 17}, {16, "0", 32}, {16, "1", 34}, {16, "2", 77},
    {17, "-1", 18}, {17, "0", 34}, {17, "1", 36},
    {18, "-1", 19}, {18, "0", 36}, {18, "1", 38}, {18, "sqrt(17)", 614}, {18, "sqrt(34)", 10440},
    {18, "sqrt(51)", 3017196},
    {19, "-1", 20}, {19, "0", 38}, {19, "1", 40},
    {20, "-1", 21}, {20, "0", 40}, {20, "1", 42}, {20, "sqrt(19)", 762}, {20, "sqrt(38)", 14480},
    {20, "sqrt(57)", 5227320},
    {21, "-1", 22}, {21, "0", 42}, {21, "1", 44},
    {22, "-1", 23}, {22, "0", 44}, {22, "1", 46}, {22, "2", 100},
};

// catalog graph of order v with the row's k and lambda_2, by metadata
std::string find_witness(int k, const Scalar& lambda, const BigInt& v) {
  std::vector<CatalogEntry> cands;
  for (const auto& name : registry_names()) {
    if (!is_parametric(name)) cands.push_back(entry(name));
  }
  if (v <= 64) {
    int n = static_cast<int>(v.get_si());
    if (k == 2 && n >= 3) cands.push_back(entry("cycle", {n}));
  }
  if (k >= 1) {
    cands.push_back(entry("complete", {k + 1}));
    cands.push_back(entry("complete_bipartite", {k}));
    if (k >= 2) cands.push_back(entry("complement_line_K2m", {k + 1}));
  }
  if (k >= 3) {
    int q = k - 1;
    for (const char* fam : {"pg_incidence", "gq_incidence"}) {
      try {
        cands.push_back(entry(fam, {q}));
      } catch (const std::domain_error&) {
      }
    }
  }
  for (const auto& e : cands) {
    if (e.k == k && e.lambda2 && *e.lambda2 == lambda && v == e.n) return e.label();
  }
  return "";
}

}  // namespace

std::string to_string(RowSource s) {
  switch (s) {
    case RowSource::lp_bound: return "lp-bound";
    case RowSource::classification: return "classification";
    case RowSource::search: return "search";
    case RowSource::paper_asserted: return "paper-asserted";
  }
  return "?";
}

std::vector<TableRow> summary_table(const TableOptions& opts) {
  if (opts.max_k < 2 || opts.max_k > 22) throw std::domain_error("max-k must be between 2 and 22");
  std::vector<TableRow> rows;
  for (const auto& cell : kCells) {
    if (cell.k > opts.max_k) continue;
    TableRow r;
    r.k = cell.k;
    r.lambda = parse_scalar(cell.lambda);
    r.printed = cell.printed;
    if (r.lambda == Scalar(1L)) {
      r.v = v_k_1(r.k);
      r.source = RowSource::classification;
      if (r.k == 2) r.witness = "cycle(6)";
      else if (r.k >= 11) r.witness = "complement_line_K2m(" + std::to_string(r.k + 1) + ")";
      else r.witness = find_witness(r.k, r.lambda, r.v);
    } else if (r.k == 4 && r.lambda == parse_scalar("sqrt(5)-1")) {
      // graphs with lambda_2 <= sqrt(5)-1 either have lambda_2 <= 1 or are equality cases
      r.source = RowSource::search;
      if (opts.run_search) {
        auto res = find_extremal(4, r.lambda, opts.jobs);
        if (!res.max_order) throw std::logic_error("extremal search found no graph");
        r.v = *res.max_order;
        r.note = "exhaustive search below the bound " + bound_for_lambda(4, r.lambda).v_ub.get_str();
      } else {
        r.v = std::max(v_k_1(4), 10);
        r.source = RowSource::classification;
        r.note = "search skipped; max of v(4,1) and the equality cases";
      }
      r.witness = r.v == 12 ? "quartic12" : "";
    } else {
      auto cert = bound_for_lambda(r.k, r.lambda);
      r.v = cert.v_ub;
      r.witness = find_witness(r.k, r.lambda, r.v);
      r.source = r.witness.empty() ? RowSource::paper_asserted : RowSource::lp_bound;
      if (r.witness.empty()) r.note = "attainment not constructed here";
    }
    r.discrepancy = r.v != r.printed;
    if (r.discrepancy) r.note = "printed value " + r.printed.get_str() + (r.note.empty() ? "" : "; " + r.note);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<ExtendedRow> extended_table() {
  struct Spec {
    const char* graph;
    int k, t;
    long c;
    bool published_parity;
  };
  const Spec specs[] = {
      {"petersen", 3, 3, 1, false}, {"odd_graph_4", 4, 4, 2, false}, {"hoffman_singleton", 7, 3, 1, true},
      {"clebsch", 5, 3, 2, true},   {"gewirtz", 10, 3, 2, false},    {"m22_graph", 16, 3, 4, false},
      {"higman_sims", 22, 3, 6, false},
  };
  std::vector<ExtendedRow> out;
  for (const auto& s : specs) {
    TridiagParams p{s.k, s.t, Scalar(s.c)};
    Scalar m = M(p);
    bool m_even = m.is_rational() && m.rational().get_den() == 1 && m.rational().get_num() % 2 == 0;
    bool rule_parity = m_even && s.k % 2 == 1;
    auto er = extended_range(p, s.published_parity ? Threshold::parity : Threshold::plain);
    ExtendedRow row;
    row.graph = s.graph;
    row.k = s.k;
    row.t = s.t;
    row.c = s.c;
    row.parity = s.published_parity;
    row.flagged = rule_parity != s.published_parity;
    row.f = er.f;
    row.lambda_prime = er.lambda_prime;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace spectral
