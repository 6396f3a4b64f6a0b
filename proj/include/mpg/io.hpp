#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mpg/graph.hpp"

namespace mpg {

// ---- graph6 ----
// header byte n+63 for n < 63, else '~' plus three 6-bit bytes (18-bit big-endian);
// data bits are the upper triangle column by column, 6-bit groups, each +63

inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

inline Graph from_graph6(const std::string& line) {
  std::string s = line;
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw std::invalid_argument("graph6: empty line");
  std::size_t pos = 0;
  auto take = [&]() -> int {
    if (pos >= s.size()) throw std::invalid_argument("graph6: truncated input");
    int c = static_cast<unsigned char>(s[pos++]);
    if (c < 63 || c > 126) {
      throw std::invalid_argument("graph6: byte out of range at position " + std::to_string(pos - 1));
    }
    return c - 63;
  };
  int n;
  int first = take();
  if (first < 63) {
    n = first;
  } else {
    n = (take() << 12) | (take() << 6) | take();
  }
  if (n > max_vertices) throw std::invalid_argument("graph6: order over cap");
  Graph g(n);
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      if (nbits == 0) {
        acc = take();
        nbits = 6;
      }
      if ((acc >> (nbits - 1)) & 1) g.add_edge(u, v);
      --nbits;
    }
  if (pos != s.size()) throw std::invalid_argument("graph6: trailing bytes");
  return g;
}

// ---- JSON edge-list interchange: {"n": int, "edges": [[u,v],...]} with u < v sorted ----

inline nlohmann::json to_json_edges(const Graph& g) {
  EdgeList el = edge_list(g);
  nlohmann::json j;
  j["n"] = el.n;
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : el.edges) j["edges"].push_back({u, v});
  return j;
}

inline Graph from_json_edges(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("json graph: expected {\"n\":..., \"edges\":[...]}");
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("json graph: bad edge entry");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return make_graph(n, edges);
}

// ---- file helpers ----

inline std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<Graph> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      out.push_back(from_graph6(line));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(path + " line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

inline void write_graph6_file(const std::string& path, const std::vector<Graph>& gs) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  for (const auto& g : gs) out << to_graph6(g) << "\n";
}

// sniff by extension, then by leading byte ('{' means JSON)
inline Graph read_graph_file(const std::string& path) {
  auto ends_with = [&](const char* suf) {
    std::string s(suf);
    return path.size() >= s.size() && path.compare(path.size() - s.size(), s.size(), s) == 0;
  };
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i == std::string::npos) throw std::invalid_argument(path + ": empty graph file");
  bool json = ends_with(".json") || (!ends_with(".g6") && !ends_with(".graph6") && text[i] == '{');
  if (json) return from_json_edges(nlohmann::json::parse(text));
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line))
    if (!line.empty()) return from_graph6(line);
  throw std::invalid_argument(path + ": no graph line");
}

}  // namespace mpg
