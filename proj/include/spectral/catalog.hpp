#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spectral/graph.hpp"
#include "spectral/scalar.hpp"

namespace spectral {

enum class Provenance { constructed, certified_data, search_found };
std::string to_string(Provenance p);

struct AttainsRow {
  int k = 0;
  Scalar lambda;
  int t = 0;
  Scalar c;
};

struct CatalogEntry {
  std::string name;         // registry key
  std::vector<int> params;  // for parametric families
  int k = 0;
  int n = 0;
  std::optional<Scalar> lambda2;
  std::optional<int> girth;  // nullopt: not recorded
  std::optional<AttainsRow> attains;
  Provenance provenance = Provenance::constructed;
  std::string charpoly;  // expected factorization, empty when not recorded
  std::string description;

  std::string label() const;  // name, or name(p1,p2)
};

// Every registry key, fixed entries first, then parametric families.
std::vector<std::string> registry_names();
bool is_parametric(std::string_view name);

// "pg_incidence(3)" or "pg_incidence" with explicit params
std::pair<std::string, std::vector<int>> parse_entry_label(std::string_view text);

CatalogEntry entry(std::string_view name, const std::vector<int>& params = {});
Graph build(std::string_view name, const std::vector<int>& params = {});
Graph build(const CatalogEntry& e);

// The entries checked by certify-on-load: all fixed entries plus the finite
// geometry families over every supported field.
std::vector<CatalogEntry> standard_entries();

struct CertifyReport {
  std::string label;
  bool ok = false;
  std::vector<std::string> failures;
  int n = 0;
  std::optional<int> k;
  std::optional<Scalar> lambda2;
  std::optional<int> girth;
  double seconds = 0;
};

CertifyReport certify(const CatalogEntry& e);

struct AttainmentReport {
  bool regular = false;
  bool connected = false;
  int n = 0;
  BigInt v_ub;
  Scalar lambda2;
  bool lambda2_ok = false;
  int t = 0;
  Scalar c;
  std::optional<int> girth;
  bool girth_ok = false;  // girth >= 2t - 2
  bool equals_M = false;
  std::optional<bool> drg;  // checked when n = M(k,t,c)
  bool meets_v_ub = false;   // n equals the integer bound
  std::optional<int> classified;  // v(k,1) when lambda = 1
  bool attains = false;
  std::vector<std::string> notes;
};

AttainmentReport certify_attainment(const Graph& g, int k, const Scalar& lambda);

// classified maximum order of a connected k-regular graph with lambda_2 <= 1
int v_k_1(int k);

}  // namespace spectral
