#include "spectral/catalog.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "spectral/constructions.hpp"
#include "spectral/expr.hpp"
#include "spectral/finite_field.hpp"
#include "spectral/lpbound.hpp"
#include "spectral/spectrum.hpp"
#include "spectral/structure.hpp"

namespace spectral {

namespace {

struct CertifiedData {
  const char* name;
  const char* graph6;
  const char* charpoly;
};

// produced by tools/gen_certified.py
const CertifiedData kCertified[] = {
#include "catalog_data.inc"
};

// produced once by the search engine, see README
const CertifiedData kSearchFound[] = {
    {"fig_sqrt5", R"g6(G}`Hxw)g6", ""},
    {"fig_onept9", R"g6(QsP@@?OC?S@C@_@G?G_AA?EC?Q_)g6", ""},
    {"yu_graph", R"g6(O}GWWC@?W@?A?A?A_?o?J)g6", ""},
    {"quartic12", R"g6(Ks`aaOpI_i`s)g6", ""},
};

const CertifiedData* find_data(std::string_view name) {
  for (const auto& d : kCertified) {
    if (name == d.name) return &d;
  }
  for (const auto& d : kSearchFound) {
    if (name == d.name) return &d;
  }
  return nullptr;
}

Graph from_data(std::string_view name) {
  const CertifiedData* d = find_data(name);
  if (!d || !*d->graph6) throw std::logic_error("no stored graph for " + std::string(name));
  return from_graph6(d->graph6);
}

Graph clebsch() {
  // folded 5-cube: 4-bit words, adjacent when they differ in one bit or in all four
  Graph g(16);
  for (int u = 0; u < 16; ++u) {
    for (int v = u + 1; v < 16; ++v) {
      int x = u ^ v;
      if (std::popcount(static_cast<unsigned>(x)) == 1 || x == 15) g.add_edge(u, v);
    }
  }
  return g;
}

Graph hoffman_singleton() {
  // pentagons P_h (vertex 5h+j) and pentagrams Q_i (vertex 25+5i+j)
  Graph g(50);
  for (int h = 0; h < 5; ++h) {
    for (int j = 0; j < 5; ++j) {
      g.add_edge(5 * h + j, 5 * h + (j + 1) % 5);
      g.add_edge(25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5);
    }
  }
  for (int h = 0; h < 5; ++h)
    for (int j = 0; j < 5; ++j)
      for (int i = 0; i < 5; ++i) g.add_edge(5 * h + j, 25 + 5 * i + (h * i + j) % 5);
  return g;
}

Graph schlafli_complement() {
  // 27 lines on a cubic surface: a_i (0..5), b_i (6..11), c_ij (12..26); edges join meeting lines
  std::vector<std::pair<int, int>> c;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) c.emplace_back(i, j);
  Graph g(27);
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      g.add_edge(i, 6 + j);
      g.add_edge(j, 6 + i);
    }
  }
  for (size_t x = 0; x < c.size(); ++x) {
    auto [i, j] = c[x];
    for (int l : {i, j}) {
      g.add_edge(l, 12 + static_cast<int>(x));
      g.add_edge(6 + l, 12 + static_cast<int>(x));
    }
    for (size_t y = x + 1; y < c.size(); ++y) {
      auto [k, l] = c[y];
      if (i != k && i != l && j != k && j != l) g.add_edge(12 + static_cast<int>(x), 12 + static_cast<int>(y));
    }
  }
  return g;
}

// normalized projective points of GF(q)^dim in lexicographic order
std::vector<std::vector<int>> projective_points(const FiniteField& f, int dim) {
  std::vector<std::vector<int>> pts;
  const int q = f.order();
  std::vector<int> v(dim, 0);
  long total = 1;
  for (int i = 0; i < dim; ++i) total *= q;
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int i = dim - 1; i >= 0; --i, c /= q) v[i] = static_cast<int>(c % q);
    int first = 0;
    while (first < dim && v[first] == 0) ++first;
    if (first < dim && v[first] == 1) pts.push_back(v);
  }
  return pts;
}

std::vector<int> normalize(const FiniteField& f, std::vector<int> v) {
  for (int x : v) {
    if (x != 0) {
      int s = f.inv(x);
      for (auto& y : v) y = f.mul(y, s);
      return v;
    }
  }
  return v;
}

Graph pg_incidence(int q) {
  FiniteField f(q);
  auto pts = projective_points(f, 3);
  const int m = static_cast<int>(pts.size());
  Graph g(2 * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      int dot = 0;
      for (int a = 0; a < 3; ++a) dot = f.add(dot, f.mul(pts[i][a], pts[j][a]));
      if (dot == 0) g.add_edge(i, m + j);
    }
  }
  return g;
}

Graph gq_incidence(int q) {
  // W(q): totally isotropic lines of PG(3,q) under x0y1 - x1y0 + x2y3 - x3y2
  FiniteField f(q);
  auto pts = projective_points(f, 4);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < pts.size(); ++i) index[pts[i]] = static_cast<int>(i);
  auto form = [&](const std::vector<int>& x, const std::vector<int>& y) {
    int s = f.sub(f.mul(x[0], y[1]), f.mul(x[1], y[0]));
    return f.add(s, f.sub(f.mul(x[2], y[3]), f.mul(x[3], y[2])));
  };
  std::set<std::vector<int>> lines;
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t j = i + 1; j < pts.size(); ++j) {
      if (form(pts[i], pts[j]) != 0) continue;
      std::vector<int> members{static_cast<int>(i), static_cast<int>(j)};
      for (int s = 1; s < q; ++s) {
        std::vector<int> w(4);
        for (int a = 0; a < 4; ++a) w[a] = f.add(pts[i][a], f.mul(s, pts[j][a]));
        members.push_back(index.at(normalize(f, w)));
      }
      std::sort(members.begin(), members.end());
      lines.insert(members);
    }
  }
  const int np = static_cast<int>(pts.size());
  Graph g(np + static_cast<int>(lines.size()));
  int l = np;
  for (const auto& line : lines) {
    for (int p : line) g.add_edge(p, l);
    ++l;
  }
  return g;
}

Scalar S(const char* text) { return parse_scalar(text); }

struct Fixed {
  const char* name;
  int k, n;
  const char* lambda2;
  int girth;
  Provenance prov;
  std::function<Graph()> builder;
  const char* description;
};

const std::vector<Fixed>& fixed_entries() {
  static const std::vector<Fixed> v = {
      {"petersen", 3, 10, "1", 5, Provenance::constructed, [] { return kneser(5, 2); }, "Kneser graph K(5,2)"},
      {"odd_graph_4", 4, 35, "2", 6, Provenance::constructed, [] { return kneser(7, 3); }, "Odd graph O_4 = K(7,3)"},
      {"clebsch", 5, 16, "1", 4, Provenance::constructed, clebsch, "folded 5-cube"},
      {"hoffman_singleton", 7, 50, "2", 5, Provenance::constructed, hoffman_singleton,
       "pentagons and pentagrams"},
      {"pappus", 3, 18, "sqrt(3)", 6, Provenance::certified_data, [] { return from_data("pappus"); },
       "LCF [5,7,-7,7,-7,-5]^3"},
      {"mcgee", 3, 24, "2", 7, Provenance::certified_data, [] { return from_data("mcgee"); }, "LCF [12,7,-7]^8"},
      {"heawood", 3, 14, "sqrt(2)", 6, Provenance::certified_data, [] { return from_data("heawood"); },
       "LCF [5,-5]^7"},
      {"tutte_coxeter", 3, 30, "2", 8, Provenance::certified_data, [] { return from_data("tutte_coxeter"); },
       "LCF [-13,-9,7,-7,9,13]^5"},
      {"tutte_12cage", 3, 126, "sqrt(6)", 12, Provenance::certified_data,
       [] { return from_data("tutte_12cage"); }, "incidence graph of GH(2,2)"},
      {"gewirtz", 10, 56, "2", 4, Provenance::certified_data, [] { return from_data("gewirtz"); },
       "hexads of S(3,6,22) missing a point, adjacent when disjoint"},
      {"m22_graph", 16, 77, "2", 4, Provenance::certified_data, [] { return from_data("m22_graph"); },
       "hexads of S(3,6,22), adjacent when disjoint"},
      {"higman_sims", 22, 100, "2", 4, Provenance::certified_data, [] { return from_data("higman_sims"); },
       "point, 22 points and 77 hexads of S(3,6,22)"},
      {"schlafli_complement", 10, 27, "1", 3, Provenance::constructed, schlafli_complement,
       "intersection graph of the 27 lines on a cubic surface"},
      {"ci10_14", 4, 10, "sqrt(5)-1", 4, Provenance::constructed, [] { return circulant(10, {1, 4}); },
       "circulant Ci_10(1,4)"},
      {"fig_sqrt5", 4, 8, "sqrt(5)-1", 3, Provenance::search_found, [] { return from_data("fig_sqrt5"); },
       "non-circulant 4-regular graph with lambda_2 = sqrt(5)-1"},
      {"fig_onept9", 3, 18, "root(x^3+2x^2-4x-6, [1.8, 1.9])", 6, Provenance::search_found,
       [] { return from_data("fig_onept9"); }, "cubic girth-6 graph on 18 vertices with lambda_2 <= 1.9"},
      {"yu_graph", 3, 16, "root(x^6-3x^5-7x^4+21x^3+13x^2-35x-4, [2.89, 2.9])", 3, Provenance::search_found, [] { return from_data("yu_graph"); },
       "cubic graph on 16 vertices with least eigenvalue the smallest root of "
       "x^6-3x^5-7x^4+21x^3+13x^2-35x-4"},
      {"quartic12", 4, 12, "1", 4, Provenance::search_found, [] { return from_data("quartic12"); },
       "largest 4-regular graph with lambda_2 <= sqrt(5)-1; triangle-free, lambda_2 = 1"},
  };
  return v;
}

const char* const kParametric[] = {"cycle", "complete", "complete_bipartite", "complement_line_K2m",
                                   "pg_incidence", "gq_incidence"};

std::optional<AttainsRow> attains_for(int k, const Scalar& lambda, int n) {
  try {
    auto cert = bound_for_lambda(k, lambda);
    if (cert.v_ub == n) return AttainsRow{k, lambda, cert.params.t, cert.params.c};
  } catch (const std::domain_error&) {
  }
  return std::nullopt;
}

// 2 cos(2 pi / n) where it is rational or quadratic
std::optional<Scalar> cycle_lambda2(int n) {
  switch (n) {
    case 3: return S("-1");
    case 4: return S("0");
    case 5: return S("(sqrt(5)-1)/2");
    case 6: return S("1");
    case 8: return S("sqrt(2)");
    case 10: return S("(sqrt(5)+1)/2");
    case 12: return S("sqrt(3)");
    default: return std::nullopt;
  }
}

void need(const std::vector<int>& params, size_t count, std::string_view name) {
  if (params.size() != count)
    throw std::invalid_argument(std::string(name) + " takes " + std::to_string(count) + " parameter(s)");
}

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::constructed: return "constructed";
    case Provenance::certified_data: return "certified-data";
    case Provenance::search_found: return "search-found";
  }
  return "?";
}

std::string CatalogEntry::label() const {
  if (params.empty()) return name;
  std::string s = name + "(";
  for (size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
  return s + ")";
}

std::vector<std::string> registry_names() {
  std::vector<std::string> out;
  for (const auto& f : fixed_entries()) out.emplace_back(f.name);
  for (const char* p : kParametric) out.emplace_back(p);
  return out;
}

bool is_parametric(std::string_view name) {
  for (const char* p : kParametric) {
    if (name == p) return true;
  }
  return false;
}

std::pair<std::string, std::vector<int>> parse_entry_label(std::string_view text) {
  auto open = text.find('(');
  if (open == std::string_view::npos) return {std::string(text), {}};
  if (text.back() != ')') throw std::invalid_argument("bad catalog label: " + std::string(text));
  std::string name(text.substr(0, open));
  std::vector<int> params;
  std::string_view inner = text.substr(open + 1, text.size() - open - 2);
  while (!inner.empty()) {
    auto comma = inner.find(',');
    std::string tok(inner.substr(0, comma));
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) throw std::invalid_argument("bad catalog parameter: " + tok);
    params.push_back(v);
    if (comma == std::string_view::npos) break;
    inner.remove_prefix(comma + 1);
  }
  return {name, params};
}

CatalogEntry entry(std::string_view name, const std::vector<int>& params) {
  CatalogEntry e;
  e.name = std::string(name);
  e.params = params;
  for (const auto& f : fixed_entries()) {
    if (name != f.name) continue;
    if (!params.empty()) throw std::invalid_argument(std::string(name) + " takes no parameters");
    e.k = f.k;
    e.n = f.n;
    if (*f.lambda2) e.lambda2 = S(f.lambda2);
    if (f.girth > 0) e.girth = f.girth;
    e.provenance = f.prov;
    e.description = f.description;
    if (const CertifiedData* d = find_data(name)) e.charpoly = d->charpoly;
    if (e.lambda2) e.attains = attains_for(e.k, *e.lambda2, e.n);
    return e;
  }
  if (name == "cycle") {
    need(params, 1, name);
    int n = params[0];
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    e.k = 2;
    e.n = n;
    e.lambda2 = cycle_lambda2(n);
    e.girth = n;
    e.description = "cycle C_" + std::to_string(n);
  } else if (name == "complete") {
    need(params, 1, name);
    int n = params[0];
    if (n < 2) throw std::invalid_argument("complete needs n >= 2");
    e.k = n - 1;
    e.n = n;
    e.lambda2 = Scalar(-1L);
    if (n >= 3) e.girth = 3;
    e.description = "complete graph K_" + std::to_string(n);
  } else if (name == "complete_bipartite") {
    need(params, 1, name);
    int k = params[0];
    if (k < 1) throw std::invalid_argument("complete_bipartite needs k >= 1");
    e.k = k;
    e.n = 2 * k;
    e.lambda2 = Scalar(0L);
    if (k >= 2) e.girth = 4;
    e.description = "K_{k,k}";
  } else if (name == "complement_line_K2m") {
    need(params, 1, name);
    int m = params[0];
    if (m < 3) throw std::invalid_argument("complement_line_K2m needs m >= 3");
    e.k = m - 1;
    e.n = 2 * m;
    e.lambda2 = Scalar(1L);
    e.girth = m == 3 ? 6 : 4;
    e.description = "complement of the line graph of K_{2,m}";
  } else if (name == "pg_incidence") {
    need(params, 1, name);
    int q = params[0];
    if (!FiniteField::supported(q)) throw std::domain_error("field not in supported set");
    e.k = q + 1;
    e.n = 2 * (q * q + q + 1);
    e.lambda2 = Scalar::sqrt(Rat(q));
    e.girth = 6;
    e.description = "incidence graph of PG(2," + std::to_string(q) + ")";
  } else if (name == "gq_incidence") {
    need(params, 1, name);
    int q = params[0];
    if (!FiniteField::supported(q)) throw std::domain_error("field not in supported set");
    e.k = q + 1;
    e.n = 2 * (q + 1) * (q * q + 1);
    e.lambda2 = Scalar::sqrt(Rat(2 * q));
    e.girth = 8;
    e.description = "incidence graph of the generalized quadrangle W(" + std::to_string(q) + ")";
  } else {
    throw std::invalid_argument("unknown catalog entry: " + std::string(name));
  }
  if (e.lambda2) e.attains = attains_for(e.k, *e.lambda2, e.n);
  return e;
}

Graph build(const CatalogEntry& e) { return build(e.name, e.params); }

Graph build(std::string_view name, const std::vector<int>& params) {
  for (const auto& f : fixed_entries()) {
    if (name == f.name) {
      if (!params.empty()) throw std::invalid_argument(std::string(name) + " takes no parameters");
      return f.builder();
    }
  }
  if (name == "cycle") return need(params, 1, name), cycle_graph(params[0]);
  if (name == "complete") return need(params, 1, name), complete_graph(params[0]);
  if (name == "complete_bipartite") return need(params, 1, name), complete_bipartite(params[0], params[0]);
  if (name == "complement_line_K2m") return need(params, 1, name), complement_line_K2m(params[0]);
  if (name == "pg_incidence") return need(params, 1, name), pg_incidence(params[0]);
  if (name == "gq_incidence") return need(params, 1, name), gq_incidence(params[0]);
  throw std::invalid_argument("unknown catalog entry: " + std::string(name));
}

std::vector<CatalogEntry> standard_entries() {
  std::vector<CatalogEntry> out;
  for (const auto& f : fixed_entries()) out.push_back(entry(f.name));
  for (int q : {2, 3, 4, 5, 7, 8, 9}) out.push_back(entry("pg_incidence", {q}));
  for (int q : {2, 3, 4, 5, 7, 8, 9}) out.push_back(entry("gq_incidence", {q}));
  out.push_back(entry("cycle", {6}));
  out.push_back(entry("complete", {4}));
  out.push_back(entry("complete_bipartite", {3}));
  out.push_back(entry("complement_line_K2m", {12}));
  return out;
}

namespace {

std::multiset<std::pair<std::string, int>> parse_factored(const std::string& s) {
  std::multiset<std::pair<std::string, int>> out;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '(') throw std::invalid_argument("bad factorization string");
    size_t close = s.find(')', i);
    std::string f = s.substr(i + 1, close - i - 1);
    i = close + 1;
    int m = 1;
    if (i < s.size() && s[i] == '^') {
      size_t end = i + 1;
      while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
      m = std::stoi(s.substr(i + 1, end - i - 1));
      i = end;
    }
    out.emplace(f, m);
  }
  return out;
}

}  // namespace

CertifyReport certify(const CatalogEntry& e) {
  auto start = std::chrono::steady_clock::now();
  CertifyReport r;
  r.label = e.label();
  auto fail = [&](std::string msg) { r.failures.push_back(std::move(msg)); };
  Graph g;
  try {
    g = build(e);
  } catch (const std::exception& ex) {
    fail(std::string("build failed: ") + ex.what());
    return r;
  }
  r.n = g.order();
  r.k = g.regular_degree();
  if (r.n != e.n) fail("order " + std::to_string(r.n) + " != " + std::to_string(e.n));
  if (!r.k || *r.k != e.k) fail("not " + std::to_string(e.k) + "-regular");
  if (!g.is_connected()) fail("disconnected");
  r.girth = girth(g);
  if (e.girth && r.girth != e.girth) fail("girth " + (r.girth ? std::to_string(*r.girth) : "inf") + " != " + std::to_string(*e.girth));
  if (g.is_connected() && g.order() > kCharPolyMaxOrder) {
    // distinct eigenvalues of a distance-regular graph are those of its intersection matrix
    auto q = distance_regular_quotient(g);
    if (!q) {
      fail("too large for the characteristic polynomial and not distance-regular");
    } else {
      r.lambda2 = quotient_lambda2(*q);
      if (e.lambda2 && !(*r.lambda2 == *e.lambda2))
        fail("lambda_2 " + r.lambda2->to_string() + " != " + e.lambda2->to_string());
    }
  } else if (g.is_connected() && g.order() >= 2) {
    IntPoly cp = char_poly(g);
    if (!e.charpoly.empty()) {
      std::multiset<std::pair<std::string, int>> got;
      for (const auto& [f, m] : factor_rational(cp)) got.emplace(f.to_string(), m);
      if (got != parse_factored(e.charpoly)) fail("characteristic polynomial differs from " + e.charpoly);
    }
    r.lambda2 = second_eig(g);
    if (e.lambda2 && !(*r.lambda2 == *e.lambda2))
      fail("lambda_2 " + r.lambda2->to_string() + " != " + e.lambda2->to_string());
  }
  r.ok = r.failures.empty();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

AttainmentReport certify_attainment(const Graph& g, int k, const Scalar& lambda) {
  AttainmentReport a;
  a.n = g.order();
  auto deg = g.regular_degree();
  a.regular = deg && *deg == k;
  a.connected = g.is_connected();
  if (!a.connected) {
    a.notes.push_back("graph is disconnected");
    return a;
  }
  if (a.n > kCharPolyMaxOrder) {
    auto q = distance_regular_quotient(g);
    if (!q) {
      a.notes.push_back("too large for the characteristic polynomial and not distance-regular");
      return a;
    }
    a.lambda2 = quotient_lambda2(*q);
  } else {
    a.lambda2 = second_eig(g);
  }
  a.lambda2_ok = a.lambda2 <= lambda;
  auto cert = bound_for_lambda(k, lambda);
  a.v_ub = cert.v_ub;
  a.t = cert.params.t;
  a.c = cert.params.c;
  a.girth = girth(g);
  a.girth_ok = !a.girth || *a.girth >= 2 * a.t - 2;
  a.meets_v_ub = a.n == a.v_ub;
  a.equals_M = cert.M == Scalar(static_cast<long>(a.n));
  if (a.equals_M && a.c.is_rational()) {
    a.drg = is_drg_with_array(g, a.c.rational()).ok;
    if (!*a.drg) a.notes.push_back("order equals M but the graph is not distance-regular with T(k,t,c)");
  }
  if (lambda == Scalar(1L) && k >= 2) a.classified = v_k_1(k);
  bool order_ok = a.meets_v_ub || (a.classified && a.n == *a.classified);
  a.attains = a.regular && a.lambda2_ok && order_ok && (!a.equals_M || a.drg.value_or(false));
  if (a.equals_M && !a.girth_ok) a.notes.push_back("girth below 2t-2");
  return a;
}

int v_k_1(int k) {
  static const int small[] = {6, 10, 12, 16, 15, 18, 21, 24, 27};
  if (k < 2) throw std::domain_error("v(k,1) needs k >= 2");
  if (k <= 10) return small[k - 2];
  return 2 * k + 2;
}

}  // namespace spectral
