#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectral/int_poly.hpp"
#include "spectral/scalar.hpp"

namespace spectral {

enum class RowSource { lp_bound, classification, search, paper_asserted };
std::string to_string(RowSource s);

struct TableRow {
  int k = 0;
  Scalar lambda;
  BigInt v;
  RowSource source = RowSource::lp_bound;
  std::string witness;         // catalog label of a graph of order v, when one is known
  BigInt printed;              // value printed in the published table
  bool discrepancy = false;    // v differs from the printed value
  std::string note;
};

struct TableOptions {
  int max_k = 22;
  bool run_search = true;  // settle (4, sqrt(5)-1) by exhaustive search
  int jobs = 1;
};

std::vector<TableRow> summary_table(const TableOptions& opts = {});

// Rows of the extended-range table: the named graph, its (k,t,c) and threshold.
struct ExtendedRow {
  std::string graph;
  int k = 0, t = 0;
  Rat c;
  bool parity = false;   // threshold used by the published row
  bool flagged = false;  // parity rule would pick the other threshold
  IntPoly f;
  Scalar lambda_prime;
};

std::vector<ExtendedRow> extended_table();

}  // namespace spectral
