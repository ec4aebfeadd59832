#pragma once

// Command-line surface. Exit codes: 0 = success / valid, 1 = a verification
// gave a negative answer (imperfect set, non-isomorphic graphs, wrong
// diameter), 2 = the invocation itself was bad (unparsable input, missing
// file, parameters out of range).

#include <array>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>

#include <CLI11.hpp>
#include <json.hpp>

#include "analysis.hpp"
#include "builders.hpp"
#include "difference_sets.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "io.hpp"
#include "iso.hpp"

namespace moore2 {
namespace cli {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path);
  out << bytes;
}

// Either a whole graph family or one concrete difference set, as selected by
// the build/export flag group.
struct FamilySelection {
  std::string family;
  int64_t q = 0;
  std::string set_text;
  int64_t mod = 0;
  std::string alpha_text;
};

inline DifferenceSet selected_set(const FamilySelection& sel) {
  if (!sel.set_text.empty()) {
    if (sel.mod <= 0) throw InputError("--set requires --mod");
    return DifferenceSet(sel.mod, parse_residue_list(sel.set_text));
  }
  if (sel.q <= 0) throw InputError("give either --q or --set with --mod");
  return singer_set(sel.q);
}

inline Graph build_family(const FamilySelection& sel) {
  if (sel.family == "diff") return diff_graph(selected_set(sel));
  if (sel.family == "brown") return brown_graph(sel.q);
  if (sel.family == "brown-aug") return brown_augmented(sel.q);
  if (sel.family == "bilinear") {
    auto pp = as_prime_power(sel.q);
    if (!pp) throw NotPrimePowerError("q=" + std::to_string(sel.q) + " is not a prime power");
    FieldSpec K = make_field(pp->p, pp->e);
    return bilinear_graph(K, parse_element(K, sel.alpha_text));
  }
  if (sel.family == "hybrid") {
    if (!sel.set_text.empty()) {
      if (sel.mod <= 0) throw InputError("--set requires --mod");
      return hybrid_graph(sel.q, DifferenceSet(sel.mod, parse_residue_list(sel.set_text)));
    }
    return hybrid_graph(sel.q);
  }
  throw InputError("unknown family: " + sel.family);
}

inline std::string serialize(const Graph& G, const std::string& format) {
  if (format == "edges") return to_edge_list(G);
  if (format == "graph6") return to_graph6(G) + "\n";
  if (format == "dot") return to_dot(G);
  throw InputError("unknown format: " + format + " (expected graph6, dot or edges)");
}

inline nlohmann::json to_json(const GraphReport& r) {
  nlohmann::json hist = nlohmann::json::object();
  for (auto& [deg, cnt] : r.histogram) hist[std::to_string(deg)] = cnt;
  nlohmann::json j;
  j["order"] = r.order;
  j["edges"] = r.edges;
  j["histogram"] = hist;
  if (r.diameter)
    j["diameter"] = *r.diameter;
  else
    j["diameter"] = nullptr;
  j["max_degree"] = r.max_degree;
  j["moore_bound"] = r.moore_bound;
  j["moore_gap"] = r.moore_gap;
  return j;
}

inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["valid"] = r.valid;
  j["multiplicities"] = r.multiplicities;
  j["failures"] = r.failures;
  return j;
}

inline nlohmann::json to_json(const VertexBijection& f) {
  nlohmann::json j;
  j["source"] = f.source;
  j["target"] = f.target;
  j["verified"] = f.verified;
  j["map"] = f.map;
  return j;
}

inline void print_report(std::ostream& out, const GraphReport& r) {
  out << "order " << r.order << "\n";
  out << "edges " << r.edges << "\n";
  out << "degrees";
  for (auto& [deg, cnt] : r.histogram) out << " " << deg << ":" << cnt;
  out << "\n";
  out << "max_degree " << r.max_degree << "\n";
  if (r.diameter)
    out << "diameter " << *r.diameter << "\n";
  else
    out << "diameter infinite\n";
  out << "moore_bound " << r.moore_bound << "\n";
  out << "moore_gap " << r.moore_gap << "\n";
}

inline void print_report(std::ostream& out, const VerificationReport& r) {
  out << "valid " << (r.valid ? "yes" : "no") << "\n";
  for (auto& line : r.failures) out << line << "\n";
}

inline void add_family_options(CLI::App* sub, FamilySelection& sel, bool with_set,
                               bool with_alpha) {
  sub->add_option("--q", sel.q, "field order / parameter q");
  if (with_set) {
    sub->add_option("--set", sel.set_text, "explicit residue list, e.g. \"0,1,3\"");
    sub->add_option("--mod", sel.mod, "modulus for --set");
  }
  if (with_alpha)
    sub->add_option("--alpha", sel.alpha_text, "field element, e.g. \"z+1\" or \"3\"")
        ->required();
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"constructions and checks for dense diameter-2 graphs"};
  app.require_subcommand(1);
  int rc = 0;
  bool json_mode = false;

  FamilySelection sel;
  std::string out_path;
  std::string format = "edges";
  std::string file_a, file_b, file_cert;

  auto emit_graph = [&](const Graph& G) {
    if (!out_path.empty()) write_file(out_path, serialize(G, format));
    auto rep = analyze(G);
    if (json_mode)
      out << to_json(rep).dump(2) << "\n";
    else
      print_report(out, rep);
  };

  // family name, takes --set/--mod, takes --alpha
  const std::array<std::tuple<const char*, bool, bool>, 5> families{{
      {"diff", true, false},
      {"brown", false, false},
      {"brown-aug", false, false},
      {"bilinear", false, true},
      {"hybrid", true, false},
  }};

  // build: construct a graph, print its report, optionally write it out
  auto* build = app.add_subcommand("build", "construct a graph and report its invariants");
  build->require_subcommand(1);
  for (auto&& [name, with_set, with_alpha] : families) {
    auto* sub = build->add_subcommand(name, "");
    add_family_options(sub, sel, with_set, with_alpha);
    sub->add_option("--out", out_path, "also write the graph to this file");
    sub->add_option("--format", format, "graph6, dot or edges (with --out)");
    sub->add_flag("--json", json_mode, "emit the report as JSON");
    sub->callback([&, fam = std::string(name)] {
      sel.family = fam;
      emit_graph(build_family(sel));
    });
  }

  // export: write a graph in the chosen format, nothing else
  auto* exp = app.add_subcommand("export", "write a constructed graph to a file");
  exp->require_subcommand(1);
  for (auto&& [name, with_set, with_alpha] : families) {
    auto* sub = exp->add_subcommand(name, "");
    add_family_options(sub, sel, with_set, with_alpha);
    sub->add_option("--format", format, "graph6, dot or edges")->required();
    sub->add_option("--out", out_path, "output path (stdout when omitted)");
    sub->callback([&, fam = std::string(name)] {
      sel.family = fam;
      std::string bytes = serialize(build_family(sel), format);
      if (out_path.empty())
        out << bytes;
      else
        write_file(out_path, bytes);
    });
  }

  // verify: difference sets, relative difference sets, graph invariants
  auto* verify = app.add_subcommand("verify", "check set or graph properties");
  verify->require_subcommand(1);

  auto* vpds = verify->add_subcommand("pds", "check a perfect difference set");
  vpds->add_option("--set", sel.set_text, "residue list")->required();
  vpds->add_option("--mod", sel.mod, "modulus")->required();
  vpds->add_flag("--json", json_mode, "emit the report as JSON");
  vpds->callback([&] {
    DifferenceSet D(sel.mod, parse_residue_list(sel.set_text));
    auto rep = verify_perfect(D);
    if (json_mode)
      out << to_json(rep).dump(2) << "\n";
    else {
      out << "set " << to_text(D) << "\n";
      print_report(out, rep);
    }
    rc = rep.valid ? 0 : 1;
  });

  int64_t rds_p = 0;
  auto* vrds = verify->add_subcommand("rds", "check the quadratic relative difference set");
  vrds->add_option("--p", rds_p, "odd prime")->required();
  vrds->add_flag("--json", json_mode, "emit the report as JSON");
  vrds->callback([&] {
    auto R = quadratic_rds(rds_p);
    auto rep = verify_rds(R);
    if (json_mode)
      out << to_json(rep).dump(2) << "\n";
    else {
      out << "p " << rds_p << "\n";
      print_report(out, rep);
    }
    rc = rep.valid ? 0 : 1;
  });

  auto* vgraph = verify->add_subcommand("graph", "analyze a graph file, expect diameter 2");
  vgraph->add_option("file", file_a, "edge-list or graph6 file")->required();
  vgraph->add_flag("--json", json_mode, "emit the report as JSON");
  vgraph->callback([&] {
    auto rep = analyze(parse_graph(read_file(file_a)));
    if (json_mode)
      out << to_json(rep).dump(2) << "\n";
    else
      print_report(out, rep);
    rc = (rep.diameter && *rep.diameter == 2) ? 0 : 1;
  });

  // iso: certified bijections
  auto* iso = app.add_subcommand("iso", "build and check vertex bijections");
  iso->require_subcommand(1);

  auto* isb = iso->add_subcommand("singer-brown",
                                  "certified map from the difference graph to the polarity graph");
  isb->add_option("--q", sel.q, "prime power")->required();
  isb->add_option("--out", out_path, "write the certificate to this file");
  isb->add_flag("--json", json_mode, "emit the bijection as JSON");
  isb->callback([&] {
    auto f = singer_to_brown(sel.q);
    if (json_mode) {
      out << to_json(f).dump(2) << "\n";
    } else {
      std::string text = certificate_to_text(f, sel.q);
      if (out_path.empty()) {
        out << text;
      } else {
        write_file(out_path, text);
        out << "verified bijection on " << f.map.size() << " vertices -> " << out_path << "\n";
      }
    }
  });

  auto* igen = iso->add_subcommand("general", "search for an isomorphism between two graph files");
  igen->add_option("fileG", file_a, "first graph")->required();
  igen->add_option("fileH", file_b, "second graph")->required();
  igen->add_option("--out", out_path, "write the certificate to this file");
  igen->add_flag("--json", json_mode, "emit the result as JSON");
  igen->callback([&] {
    Graph G = parse_graph(read_file(file_a));
    Graph H = parse_graph(read_file(file_b));
    auto f = general_isomorphism(G, H);
    if (!f) {
      if (json_mode)
        out << nlohmann::json{{"isomorphic", false}}.dump(2) << "\n";
      else
        out << "not isomorphic\n";
      rc = 1;
      return;
    }
    f->source = file_a;
    f->target = file_b;
    if (json_mode) {
      auto j = to_json(*f);
      j["isomorphic"] = true;
      out << j.dump(2) << "\n";
    } else {
      std::string text = certificate_to_text(*f);
      if (out_path.empty()) {
        out << text;
      } else {
        write_file(out_path, text);
        out << "isomorphism on " << f->map.size() << " vertices -> " << out_path << "\n";
      }
    }
  });

  auto* ichk = iso->add_subcommand("check", "verify a stored certificate against two graph files");
  ichk->add_option("fileG", file_a, "source graph")->required();
  ichk->add_option("fileH", file_b, "target graph")->required();
  ichk->add_option("certificate", file_cert, "certificate file")->required();
  ichk->add_flag("--json", json_mode, "emit the report as JSON");
  ichk->callback([&] {
    Graph G = parse_graph(read_file(file_a));
    Graph H = parse_graph(read_file(file_b));
    auto f = certificate_from_text(read_file(file_cert));
    auto rep = verify_bijection(G, H, f);
    if (json_mode)
      out << to_json(rep).dump(2) << "\n";
    else {
      out << (rep.valid ? "certificate valid\n" : "certificate invalid\n");
      for (auto& line : rep.failures) out << line << "\n";
    }
    rc = rep.valid ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // help requests exit 0 through here; real parse failures map to 2
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const InputError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 2;
  }
  return rc;
}

}  // namespace cli
}  // namespace moore2
