#pragma once

#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "mpg/graph.hpp"
#include "mpg/io.hpp"
#include "mpg/products.hpp"

namespace mpg {

enum class Provenance { paper_figure, ingested, constructed };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::paper_figure:
      return "paper-figure";
    case Provenance::ingested:
      return "ingested";
    case Provenance::constructed:
      return "constructed";
  }
  return "?";
}

inline Provenance provenance_from_string(const std::string& s) {
  if (s == "paper-figure") return Provenance::paper_figure;
  if (s == "ingested") return Provenance::ingested;
  if (s == "constructed") return Provenance::constructed;
  throw std::invalid_argument("unknown provenance: " + s);
}

struct CatalogEntry {
  std::string name;
  Graph graph;
  Provenance provenance = Provenance::constructed;
  std::vector<std::string> tags;
};

namespace detail {

inline Graph complement_of(int n, std::initializer_list<std::pair<int, int>> sparse) {
  return complement(make_graph(n, std::vector<std::pair<int, int>>(sparse)));
}

}  // namespace detail

// FIG5_* and FIG6_* hold complements of sparse drawings; the dense side is the
// graph under study
inline std::vector<CatalogEntry> builtin_fixtures() {
  std::vector<CatalogEntry> out;
  auto add = [&out](const std::string& name, Graph g, std::vector<std::string> tags) {
    out.push_back(CatalogEntry{name, std::move(g), Provenance::paper_figure, std::move(tags)});
  };

  add("FIG1_8",
      make_graph(8, {{0, 1}, {0, 2}, {0, 6}, {0, 7}, {1, 2}, {1, 3}, {1, 7}, {2, 3},
                     {2, 4}, {3, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7}}),
      {"minimal"});

  add("FIG2_6", make_graph(6, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}}),
      {"minimal", "reseminant"});

  add("FIG3_11",
      make_graph(11, {{0, 2},  {0, 4},  {0, 5},  {0, 6}, {0, 7}, {0, 8}, {0, 9}, {0, 10},
                      {1, 3},  {1, 6},  {1, 8},  {1, 9}, {1, 10}, {2, 4}, {2, 5}, {2, 6},
                      {2, 7},  {2, 8},  {2, 9},  {2, 10}, {3, 7}, {4, 5}, {4, 6}, {4, 7},
                      {4, 8},  {4, 9},  {4, 10}, {5, 6}, {5, 7}, {5, 8}, {5, 9}, {5, 10},
                      {6, 8},  {6, 9},  {6, 10}, {8, 9}, {8, 10}, {9, 10}}),
      {"minimal", "non-regular"});

  {
    Graph k2 = make_graph(2, {{0, 1}});
    add("FIG4_10", strong_product(k2, make_c5()), {"minimal", "regular", "reseminant"});
  }

  add("FIG5_9",
      detail::complement_of(9, {{0, 1}, {0, 3}, {0, 7}, {1, 2}, {1, 5}, {2, 3}, {2, 6},
                                {2, 8}, {3, 4}, {4, 5}, {4, 8}, {5, 6}, {6, 7}, {7, 8}}),
      {"minimal"});

  add("FIG5_10",
      detail::complement_of(10, {{0, 1}, {0, 3}, {0, 7}, {1, 2}, {1, 5}, {2, 3}, {2, 6},
                                 {2, 8}, {3, 4}, {4, 5}, {4, 8}, {5, 6}, {6, 7}, {7, 8},
                                 {9, 0}, {9, 4}, {9, 6}}),
      {"minimal", "generated"});

  add("FIG6_15",
      detail::complement_of(15, {{0, 1},  {0, 3},   {0, 7},   {0, 11},  {0, 13},  {0, 14},
                                 {1, 2},  {1, 5},   {1, 9},   {1, 12},  {2, 3},   {2, 6},
                                 {2, 8},  {2, 11},  {3, 4},   {3, 10},  {4, 5},   {4, 8},
                                 {4, 11}, {5, 6},   {5, 13},  {6, 7},   {6, 10},  {6, 14},
                                 {7, 8},  {7, 12},  {8, 9},   {8, 13},  {9, 10},  {9, 11},
                                 {9, 14}, {10, 12}, {11, 12}, {12, 13}, {12, 14}}),
      {"minimal"});

  add("FIG6_16",
      detail::complement_of(16, {{0, 1},  {0, 3},   {0, 7},   {0, 11},  {0, 13},  {0, 14},
                                 {1, 2},  {1, 5},   {1, 9},   {1, 12},  {2, 3},   {2, 6},
                                 {2, 8},  {2, 11},  {3, 4},   {3, 10},  {4, 5},   {4, 8},
                                 {4, 11}, {5, 6},   {5, 13},  {6, 7},   {6, 10},  {6, 14},
                                 {7, 8},  {7, 12},  {8, 9},   {8, 13},  {9, 10},  {9, 11},
                                 {9, 14}, {10, 12}, {11, 12}, {12, 13}, {12, 14}, {15, 3},
                                 {15, 5}, {15, 8},  {15, 11}}),
      {"minimal", "generated"});

  return out;
}

inline std::optional<CatalogEntry> find_fixture(const std::string& name) {
  for (auto& e : builtin_fixtures())
    if (e.name == name) return e;
  return std::nullopt;
}

namespace detail {

inline std::string file_stem(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

}  // namespace detail

// one entry per line of a graph6 file, named <stem>-<line index, 1-based>
inline std::vector<CatalogEntry> ingest_graph6(const std::string& path) {
  std::vector<Graph> graphs = read_graph6_file(path);
  std::string stem = detail::file_stem(path);
  std::vector<CatalogEntry> out;
  out.reserve(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i)
    out.push_back(CatalogEntry{stem + "-" + std::to_string(i + 1), std::move(graphs[i]),
                               Provenance::ingested, {}});
  return out;
}

inline nlohmann::json entry_to_json(const CatalogEntry& e) {
  nlohmann::json j = to_json_edges(e.graph);
  j["name"] = e.name;
  j["provenance"] = to_string(e.provenance);
  j["tags"] = e.tags;
  return j;
}

inline CatalogEntry entry_from_json(const nlohmann::json& j) {
  CatalogEntry e;
  e.name = j.at("name").get<std::string>();
  e.graph = from_json_edges(j);
  e.provenance = provenance_from_string(j.at("provenance").get<std::string>());
  e.tags = j.at("tags").get<std::vector<std::string>>();
  return e;
}

inline void export_graph6(const std::vector<CatalogEntry>& entries, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for write: " + path);
  for (const auto& e : entries) out << to_graph6(e.graph) << "\n";
}

inline void export_json(const std::vector<CatalogEntry>& entries, const std::string& path) {
  nlohmann::json j;
  j["entries"] = nlohmann::json::array();
  for (const auto& e : entries) j["entries"].push_back(entry_to_json(e));
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for write: " + path);
  out << j.dump(2) << "\n";
}

inline std::vector<CatalogEntry> load_catalog_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  std::vector<CatalogEntry> out;
  for (const auto& item : j.at("entries")) out.push_back(entry_from_json(item));
  return out;
}

// <dir>/<name>.g6 per entry plus <dir>/index.json
inline void export_catalog_dir(const std::vector<CatalogEntry>& entries, const std::string& dir) {
  std::filesystem::create_directories(dir);
  nlohmann::json index;
  index["entries"] = nlohmann::json::array();
  for (const auto& e : entries) {
    std::string file = e.name + ".g6";
    std::ofstream out(std::filesystem::path(dir) / file);
    if (!out) throw std::runtime_error("cannot open for write: " + dir + "/" + file);
    out << to_graph6(e.graph) << "\n";
    nlohmann::json row;
    row["name"] = e.name;
    row["file"] = file;
    row["n"] = e.graph.order();
    row["m"] = e.graph.edge_count();
    row["provenance"] = to_string(e.provenance);
    row["tags"] = e.tags;
    index["entries"].push_back(row);
  }
  std::ofstream out(std::filesystem::path(dir) / "index.json");
  if (!out) throw std::runtime_error("cannot open for write: " + dir + "/index.json");
  out << index.dump(2) << "\n";
}

}  // namespace mpg
