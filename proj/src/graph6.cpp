#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>

#include "spectral/graph.hpp"

namespace spectral {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Graph from_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  for (char ch : text) {
    if (ch < 63 || ch > 126) throw std::invalid_argument("graph6: invalid character");
  }
  size_t pos = 0;
  auto take = [&]() -> long {
    if (pos >= text.size()) throw std::invalid_argument("graph6: truncated");
    return text[pos++] - 63;
  };
  long n = take();
  if (n == 63) {
    n = take();
    if (n == 63) {
      n = 0;
      for (int i = 0; i < 6; ++i) n = (n << 6) | take();
    } else {
      n = (n << 12) | (take() << 6);
      n |= take();
    }
  }
  if (n > 100000) throw std::invalid_argument("graph6: order too large");
  Graph g(static_cast<int>(n));
  long bits = n * (n - 1) / 2;
  long need = (bits + 5) / 6;
  if (static_cast<long>(text.size() - pos) != need) throw std::invalid_argument("graph6: wrong length");
  long b = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++b) {
      int byte = text[pos + b / 6] - 63;
      if ((byte >> (5 - b % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  long n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n < 258048) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
  int acc = 0, cnt = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++cnt == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = cnt = 0;
      }
    }
  }
  if (cnt > 0) out.push_back(static_cast<char>((acc << (6 - cnt)) + 63));
  return out;
}

Graph from_adjacency_list(std::string_view text) {
  std::vector<std::pair<int, int>> edges;
  int declared = -1, maxv = -1;
  std::istringstream in{std::string(text)};
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<long> nums;
    std::string tok;
    while (ls >> tok) {
      long v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || p != tok.data() + tok.size() || v < 0)
        throw std::invalid_argument("adjacency list: bad token '" + tok + "'");
      nums.push_back(v);
    }
    if (nums.empty()) continue;
    if (first && nums.size() == 1) {
      declared = static_cast<int>(nums[0]);
      first = false;
      continue;
    }
    first = false;
    if (nums.size() != 2) throw std::invalid_argument("adjacency list: expected two vertices per line");
    if (nums[0] == nums[1]) throw std::invalid_argument("adjacency list: loop");
    edges.emplace_back(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
    maxv = std::max<int>(maxv, static_cast<int>(std::max(nums[0], nums[1])));
  }
  int n = declared >= 0 ? declared : maxv + 1;
  if (maxv >= n) throw std::invalid_argument("adjacency list: vertex out of range");
  return Graph::from_edges(n, edges);
}

std::string to_adjacency_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph parse_graph_text(std::string_view text) {
  std::string_view t = trim(text);
  bool g6 = !t.empty() && t.find_first_of(" \n\t") == std::string_view::npos;
  if (g6) {
    // a lone number is an edgeless adjacency list only if it is not valid graph6
    try {
      return from_graph6(t);
    } catch (const std::invalid_argument&) {
      if (t.find_first_not_of("0123456789") != std::string_view::npos) throw;
    }
  }
  return from_adjacency_list(text);
}

}  // namespace spectral
