// command-line front end: verification, construction, and catalog access
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mpg/mpg.hpp"

namespace {

using nlohmann::json;

// positional graph arguments accept a file path (graph6 or JSON) or the name
// of a builtin fixture
mpg::Graph load_graph_arg(const std::string& arg) {
  if (std::filesystem::exists(arg)) return mpg::read_graph_file(arg);
  if (auto e = mpg::find_fixture(arg)) return e->graph;
  throw std::runtime_error("no such file or fixture: " + arg);
}

json graph_json(const mpg::Graph& g) {
  json j = mpg::to_json_edges(g);
  j["m"] = g.edge_count();
  j["graph6"] = mpg::to_graph6(g);
  return j;
}

json report_json(const mpg::MinimalityReport& r) {
  json j;
  j["solvable"] = r.is_solvable;
  j["minimal"] = r.is_minimal;
  j["failing_edge"] = nullptr;
  j["failure"] = nullptr;
  j["triangle"] = nullptr;
  if (r.failing_edge) j["failing_edge"] = {r.failing_edge->first, r.failing_edge->second};
  if (r.failure_kind)
    j["failure"] = r.failure_kind == mpg::FailureKind::triangle_survives ? "triangle-survives"
                                                                         : "coloring-survives";
  if (r.triangle_witness)
    j["triangle"] = {(*r.triangle_witness)[0], (*r.triangle_witness)[1], (*r.triangle_witness)[2]};
  if (r.coloring_witness) j["surviving_coloring"] = r.coloring_witness->colors;
  return j;
}

void emit(const json& j, bool pretty) {
  if (!pretty) {
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << j.dump(2) << "\n";
}

void describe_report(const mpg::MinimalityReport& r) {
  if (!r.is_solvable) {
    if (r.triangle_witness)
      std::cout << "not solvable: complement has triangle {" << (*r.triangle_witness)[0] << ", "
                << (*r.triangle_witness)[1] << ", " << (*r.triangle_witness)[2] << "}\n";
    else
      std::cout << "not solvable: complement is not 3-colorable\n";
    return;
  }
  if (r.is_minimal) {
    std::cout << "minimal: every edge deletion breaks the complement\n";
    return;
  }
  if (r.failing_edge)
    std::cout << "solvable but not minimal: deleting {" << r.failing_edge->first << ", "
              << r.failing_edge->second << "} leaves the complement triangle-free and 3-colorable\n";
  else
    std::cout << "solvable but not minimal: graph is disconnected or too small\n";
}

int write_graph_output(const mpg::Graph& g, const std::string& out_path, bool pretty) {
  if (out_path.empty()) {
    emit(graph_json(g), pretty);
    return 0;
  }
  if (out_path.size() >= 5 && out_path.substr(out_path.size() - 5) == ".json") {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open for write: " + out_path);
    out << mpg::to_json_edges(g).dump(2) << "\n";
  } else {
    mpg::write_graph6_file(out_path, {g});
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal prime graph toolkit"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "human-readable output");

  std::string in_arg, out_path;

  // ---- verify ----
  auto* cmd_verify = app.add_subcommand("verify", "check the minimal prime graph property");
  cmd_verify->add_option("graph", in_arg, "graph file or fixture name")->required();

  // ---- duplicate ----
  auto* cmd_dup = app.add_subcommand("duplicate", "duplicate one vertex");
  int dup_vertex = 0;
  cmd_dup->add_option("graph", in_arg, "graph file or fixture name")->required();
  cmd_dup->add_option("-v,--vertex", dup_vertex, "vertex to duplicate")->required();
  cmd_dup->add_option("-o,--out", out_path, "output file (.g6 or .json)");

  // ---- reseminant ----
  auto* cmd_res = app.add_subcommand("reseminant", "expand a base graph by a duplication vector");
  std::vector<int> res_w;
  std::string res_base;
  cmd_res->add_option("-w,--weights", res_w, "duplication vector, one entry per base vertex")
      ->required()
      ->delimiter(',');
  cmd_res->add_option("--base", res_base, "base graph file or fixture (default: 5-cycle)");
  cmd_res->add_option("-o,--out", out_path, "output file (.g6 or .json)");

  // ---- family ----
  auto* cmd_fam = app.add_subcommand("family", "circulant family check");
  int fam_n = 0, fam_k = 0;
  cmd_fam->add_option("-n", fam_n, "order of the circulant")->required();
  cmd_fam->add_option("-k", fam_k, "connection parameter (default: (n+2)/6)");

  // ---- product ----
  auto* cmd_prod = app.add_subcommand("product", "graph products, plain and complementary");
  std::string prod_kind = "strong";
  std::vector<std::string> prod_args;
  bool prod_check = false;
  cmd_prod->add_option("--kind", prod_kind, "direct|cartesian|strong|cdirect|ccartesian");
  cmd_prod->add_option("graphs", prod_args, "two or more graph files or fixture names")
      ->expected(2, -1);
  cmd_prod->add_flag("--check", prod_check,
                     "for complementary kinds, verify the result is a solvable prime graph");
  cmd_prod->add_option("-o,--out", out_path, "output file (.g6 or .json)");

  // ---- aut ----
  auto* cmd_aut = app.add_subcommand("aut", "automorphism group decomposition");
  cmd_aut->add_option("graph", in_arg, "graph file or fixture name")->required();

  // ---- sites ----
  auto* cmd_sites = app.add_subcommand("sites", "enumerate generation sites");
  cmd_sites->add_option("graph", in_arg, "graph file or fixture name")->required();

  // ---- superbase ----
  auto* cmd_super = app.add_subcommand("superbase", "check that no vertex deletion stays minimal");
  cmd_super->add_option("graph", in_arg, "graph file or fixture name")->required();

  // ---- catalog ----
  auto* cmd_cat = app.add_subcommand("catalog", "builtin fixture catalog");
  cmd_cat->require_subcommand(1);
  auto* cat_list = cmd_cat->add_subcommand("list", "list fixtures");
  auto* cat_show = cmd_cat->add_subcommand("show", "print one fixture");
  std::string cat_name;
  cat_show->add_option("name", cat_name, "fixture name")->required();
  auto* cat_export = cmd_cat->add_subcommand("export", "write <dir>/<name>.g6 plus index.json");
  std::string cat_dir = "catalog";
  cat_export->add_option("-d,--dir", cat_dir, "output directory (default: catalog)");
  auto* cat_ingest = cmd_cat->add_subcommand("ingest", "read a graph6 file as catalog entries");
  std::string cat_file;
  cat_ingest->add_option("file", cat_file, "graph6 file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_verify) {
      mpg::Graph g = load_graph_arg(in_arg);
      mpg::MinimalityReport r = mpg::check_minimal_prime_graph(g);
      json j = report_json(r);
      j["n"] = g.order();
      j["m"] = g.edge_count();
      if (pretty)
        describe_report(r);
      else
        emit(j, false);
      return r.is_minimal ? 0 : 1;
    }

    if (*cmd_dup) {
      mpg::Graph g = load_graph_arg(in_arg);
      return write_graph_output(mpg::duplicate_vertex(g, dup_vertex), out_path, pretty);
    }

    if (*cmd_res) {
      mpg::Graph base = res_base.empty() ? mpg::make_c5() : load_graph_arg(res_base);
      mpg::DuplicationVector d = mpg::make_duplication_vector(base, res_w);
      mpg::Graph g = mpg::build_reseminant(base, d);
      if (!out_path.empty()) return write_graph_output(g, out_path, pretty);
      json j = graph_json(g);
      if (base.order() == 5 && base == mpg::make_c5()) {
        j["degrees"] = mpg::degree_vector(d);
        mpg::RegularityVerdict v = mpg::regular_reseminant_verdict(d);
        j["regular"] = v.regular;
        j["k"] = v.k ? json(*v.k) : json(nullptr);
        j["h"] = v.h ? json(*v.h) : json(nullptr);
        j["aut_class"] = mpg::to_string(mpg::classify_c5_reseminant_aut(d));
      }
      j["minimal"] = mpg::check_minimal_prime_graph(g).is_minimal;
      emit(j, pretty);
      return 0;
    }

    if (*cmd_fam) {
      if (fam_k == 0) fam_k = (fam_n + 2) / 6;
      mpg::CirculantSpec s{fam_n, fam_k};
      json j;
      j["n"] = s.n;
      j["k"] = s.k;
      j["regime"] = mpg::paper_regime(s);
      if (!mpg::paper_regime(s)) {
        j["note"] = "outside the n = 0, 5 (mod 6) regime; no family claim applies";
        emit(j, pretty);
        return 1;
      }
      mpg::Coloring c = mpg::block_coloring(s);
      mpg::Graph circ = mpg::g_circulant(s);
      j["block_coloring_proper"] = mpg::is_proper_coloring(circ, c);
      mpg::MinimalityReport r = mpg::family_check(s);
      j["complement"] = report_json(r);
      j["graph6"] = mpg::to_graph6(mpg::complement(circ));
      if (pretty) {
        std::cout << "circulant n=" << s.n << " k=" << s.k << ", block coloring "
                  << (mpg::is_proper_coloring(circ, c) ? "proper" : "IMPROPER") << "\n";
        describe_report(r);
      } else {
        emit(j, false);
      }
      return r.is_minimal ? 0 : 1;
    }

    if (*cmd_prod) {
      mpg::ProductKind kind = mpg::product_kind_from_string(prod_kind);
      std::vector<mpg::Graph> factors;
      factors.reserve(prod_args.size());
      for (const auto& a : prod_args) factors.push_back(load_graph_arg(a));
      mpg::Graph acc = factors[0];
      for (std::size_t i = 1; i < factors.size(); ++i) acc = mpg::product(kind, acc, factors[i]);
      if (prod_check) {
        bool ok = mpg::check_product_preservation(kind, factors);
        json j = graph_json(acc);
        j["solvable"] = ok;
        emit(j, pretty);
        return ok ? 0 : 1;
      }
      return write_graph_output(acc, out_path, pretty);
    }

    if (*cmd_aut) {
      mpg::Graph g = load_graph_arg(in_arg);
      mpg::AutReport r = mpg::decompose_aut(g);
      mpg::TwinPartition tp = mpg::twin_partition(g);
      json j;
      j["n"] = g.order();
      j["order"] = r.order;
      j["kernel_order"] = r.kernel_order;
      j["quotient_order"] = r.quotient_order;
      j["kernel_matches_twin_product"] = r.kernel_matches_twin_product;
      j["quotient_embeds_in_base_aut"] = r.quotient_embeds_in_base_aut;
      j["twin_classes"] = tp.classes;
      if (pretty)
        std::cout << "|Aut| = " << r.order << " = " << r.kernel_order << " (twin kernel) x "
                  << r.quotient_order << " (action on the base graph)\n";
      else
        emit(j, false);
      return 0;
    }

    if (*cmd_sites) {
      mpg::Graph g = load_graph_arg(in_arg);
      mpg::MinimalityReport pre = mpg::check_minimal_prime_graph(g);
      if (!pre.is_minimal) {
        json j;
        j["error"] = "input is not a minimal prime graph";
        j["report"] = report_json(pre);
        std::cout << j.dump() << "\n";
        return 1;
      }
      std::vector<mpg::GenerationSite> sites = mpg::enumerate_generation_sites(g);
      json j;
      j["n"] = g.order();
      j["count"] = sites.size();
      j["sites"] = json::array();
      for (const auto& s : sites) {
        mpg::SiteClassification c = mpg::classify_site(g, s.site);
        json row;
        row["site"] = s.site;
        row["complement_set"] = s.complement_set;
        row["kind"] = mpg::to_string(c.kind);
        row["graph6"] = mpg::to_graph6(s.generated);
        j["sites"].push_back(row);
      }
      if (pretty) {
        std::cout << sites.size() << " generation site(s)\n";
        for (const auto& row : j["sites"]) {
          std::cout << "  " << row["kind"].get<std::string>() << " {";
          const auto& site = row["site"];
          for (std::size_t i = 0; i < site.size(); ++i)
            std::cout << (i ? ", " : "") << site[i].get<int>();
          std::cout << "}\n";
        }
      } else {
        emit(j, false);
      }
      return 0;
    }

    if (*cmd_super) {
      mpg::Graph g = load_graph_arg(in_arg);
      mpg::MinimalityReport pre = mpg::check_minimal_prime_graph(g);
      if (!pre.is_minimal) {
        json j;
        j["error"] = "input is not a minimal prime graph";
        j["report"] = report_json(pre);
        std::cout << j.dump() << "\n";
        return 2;
      }
      mpg::SuperBaseReport r = mpg::is_super_base(g);
      json j;
      j["super_base"] = r.is_super;
      j["deletions"] = json::array();
      for (std::size_t v = 0; v < r.deletions.size(); ++v) {
        json row = report_json(r.deletions[v]);
        row["vertex"] = v;
        j["deletions"].push_back(row);
      }
      if (pretty)
        std::cout << (r.is_super ? "super base: no vertex deletion is minimal\n"
                                 : "not a super base: some vertex deletion stays minimal\n");
      else
        emit(j, false);
      return r.is_super ? 0 : 1;
    }

    if (*cmd_cat) {
      std::vector<mpg::CatalogEntry> entries = mpg::builtin_fixtures();
      if (*cat_list) {
        json j = json::array();
        for (const auto& e : entries) {
          json row;
          row["name"] = e.name;
          row["n"] = e.graph.order();
          row["m"] = e.graph.edge_count();
          row["provenance"] = mpg::to_string(e.provenance);
          row["tags"] = e.tags;
          j.push_back(row);
        }
        if (pretty)
          for (const auto& e : entries)
            std::printf("%-10s n=%-3d m=%d\n", e.name.c_str(), e.graph.order(),
                        e.graph.edge_count());
        else
          emit(j, false);
        return 0;
      }
      if (*cat_show) {
        auto e = mpg::find_fixture(cat_name);
        if (!e) throw std::runtime_error("no such fixture: " + cat_name);
        json j = mpg::entry_to_json(*e);
        j["graph6"] = mpg::to_graph6(e->graph);
        emit(j, pretty);
        return 0;
      }
      if (*cat_export) {
        mpg::export_catalog_dir(entries, cat_dir);
        json j;
        j["dir"] = cat_dir;
        j["count"] = entries.size();
        emit(j, pretty);
        return 0;
      }
      if (*cat_ingest) {
        std::vector<mpg::CatalogEntry> in = mpg::ingest_graph6(cat_file);
        json j = json::array();
        for (const auto& e : in) {
          json row = mpg::entry_to_json(e);
          row["graph6"] = mpg::to_graph6(e.graph);
          j.push_back(row);
        }
        emit(j, pretty);
        return 0;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
