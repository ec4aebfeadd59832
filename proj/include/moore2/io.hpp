#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "builders.hpp"
#include "difference_sets.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "graph.hpp"
#include "iso.hpp"
#include "numtheory.hpp"

namespace moore2 {

// ---- difference sets: "0,1,4,14,16 mod 21" ----

inline std::string to_text(const DifferenceSet& D) {
  std::string out;
  for (size_t i = 0; i < D.elements().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(D.elements()[i]);
  }
  out += " mod " + std::to_string(D.modulus());
  return out;
}

inline std::vector<int64_t> parse_residue_list(const std::string& text) {
  std::vector<int64_t> vals;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    try {
      size_t used = 0;
      vals.push_back(std::stoll(token, &used));
      while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) ++used;
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw InputError("cannot parse residue '" + token + "'");
    }
  }
  if (vals.empty()) throw InputError("empty residue list");
  return vals;
}

inline DifferenceSet parse_difference_set(const std::string& text) {
  auto pos = text.find(" mod ");
  if (pos == std::string::npos)
    throw InputError("expected '<residues> mod <n>', got '" + text + "'");
  int64_t n = 0;
  try {
    n = std::stoll(text.substr(pos + 5));
  } catch (const std::exception&) {
    throw InputError("cannot parse modulus in '" + text + "'");
  }
  return DifferenceSet(n, parse_residue_list(text.substr(0, pos)));
}

// ---- edge list: header "n m", then one "u v" line per edge, u < v ----

inline std::string to_edge_list(const Graph& G) {
  std::vector<std::pair<int64_t, int64_t>> edges;
  edges.reserve(static_cast<size_t>(G.edge_count()));
  for (int64_t u = 0; u < G.order(); ++u)
    for (int32_t w : G.neighbors(u))
      if (w > u) edges.emplace_back(u, w);
  std::sort(edges.begin(), edges.end());
  std::string out = std::to_string(G.order()) + " " + std::to_string(G.edge_count()) + "\n";
  for (auto& [u, v] : edges) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

inline Graph from_edge_list(const std::string& text) {
  std::istringstream in(text);
  int64_t n = 0, m = 0;
  if (!(in >> n >> m)) throw InputError("edge list must start with 'n m'");
  if (n <= 0) throw InputError("edge list declares a non-positive order");
  Graph G(n);
  for (int64_t k = 0; k < m; ++k) {
    int64_t u = 0, v = 0;
    if (!(in >> u >> v)) throw InputError("edge list ends before the declared edge count");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("edge endpoint out of range: " + std::to_string(u) + " " +
                       std::to_string(v));
    if (u == v) throw InputError("edge list contains a loop");
    G.add_edge(u, v);
  }
  int64_t extra = 0;
  if (in >> extra) throw InputError("edge list has trailing data");
  if (G.edge_count() != m) throw InputError("edge list repeats an edge");
  return G;
}

// ---- graph6: standard 6-bit encoding of the upper triangle ----

inline std::string to_graph6(const Graph& G) {
  int64_t n = G.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += '~';
    out += static_cast<char>(((n >> 12) & 63) + 63);
    out += static_cast<char>(((n >> 6) & 63) + 63);
    out += static_cast<char>((n & 63) + 63);
  } else {
    throw InputError("graph too large for the short graph6 header");
  }
  int bits = 0, group = 0;
  for (int64_t j = 1; j < n; ++j)
    for (int64_t i = 0; i < j; ++i) {
      group = (group << 1) | (G.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out += static_cast<char>(group + 63);
        bits = 0;
        group = 0;
      }
    }
  if (bits > 0) out += static_cast<char>((group << (6 - bits)) + 63);
  return out;
}

inline Graph from_graph6(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw InputError("empty graph6 input");
  size_t pos = 0;
  int64_t n = 0;
  if (s[0] == '~') {
    if (s.size() < 4) throw InputError("truncated graph6 header");
    for (int k = 1; k <= 3; ++k) {
      int v = static_cast<unsigned char>(s[static_cast<size_t>(k)]) - 63;
      if (v < 0 || v > 63) throw InputError("graph6 header byte out of range");
      n = (n << 6) | v;
    }
    pos = 4;
  } else {
    n = static_cast<unsigned char>(s[0]) - 63;
    if (n < 0 || n > 62) throw InputError("graph6 header byte out of range");
    pos = 1;
  }
  if (n <= 0) throw InputError("graph6 declares a non-positive order");
  Graph G(n);
  int64_t pairs = n * (n - 1) / 2;
  size_t need = static_cast<size_t>((pairs + 5) / 6);
  if (s.size() - pos != need)
    throw InputError("graph6 body length mismatch: expected " + std::to_string(need) +
                     " bytes, got " + std::to_string(s.size() - pos));
  int64_t bit_index = 0;
  for (int64_t j = 1; j < n; ++j)
    for (int64_t i = 0; i < j; ++i) {
      int byte = static_cast<unsigned char>(s[pos + static_cast<size_t>(bit_index / 6)]) - 63;
      if (byte < 0 || byte > 63) throw InputError("graph6 body byte out of range");
      if ((byte >> (5 - bit_index % 6)) & 1) G.add_edge(i, j);
      ++bit_index;
    }
  return G;
}

// Reads a graph from either format: edge lists start with a digit, graph6
// bytes never do.
inline Graph parse_graph(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (std::isdigit(static_cast<unsigned char>(c))) return from_edge_list(text);
    return from_graph6(text);
  }
  throw InputError("empty graph input");
}

// ---- DOT, for human inspection; carries labels ----

inline std::string to_dot(const Graph& G, const std::string& name = "moore2") {
  std::string out = "graph " + name + " {\n";
  if (G.has_labels())
    for (int64_t v = 0; v < G.order(); ++v)
      out += "  " + std::to_string(v) + " [label=\"" + G.label(v) + "\"];\n";
  std::vector<std::pair<int64_t, int64_t>> edges;
  for (int64_t u = 0; u < G.order(); ++u)
    for (int32_t w : G.neighbors(u))
      if (w > u) edges.emplace_back(u, w);
  std::sort(edges.begin(), edges.end());
  for (auto& [u, v] : edges)
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

// ---- bijection certificates ----
//
// One line per vertex, "i -> image". With a "# q N" header the images are
// projective points over GF(N) in coordinate form, e.g. "0 -> (1,z+1,0)",
// resolved against the canonical point enumeration; without it the images
// are plain vertex indices. Unreduced coordinate polynomials (like z^2 over
// GF(4)) are accepted and reduced on parse.

inline std::string certificate_to_text(const VertexBijection& f, int64_t q = 0) {
  std::string out;
  out += "# source " + f.source + "\n";
  out += "# target " + f.target + "\n";
  std::vector<std::string> image_names;
  if (q > 0) {
    out += "# q " + std::to_string(q) + "\n";
    auto pp = as_prime_power(q);
    if (!pp) throw NotPrimePowerError("q=" + std::to_string(q) + " is not a prime power");
    auto pts = projective_points(make_field(pp->p, pp->e));
    for (const auto& p : pts) image_names.push_back(point_label(p));
  }
  for (size_t i = 0; i < f.map.size(); ++i) {
    int64_t img = f.map[i];
    out += std::to_string(i) + " -> ";
    if (q > 0) {
      if (img < 0 || img >= static_cast<int64_t>(image_names.size()))
        throw InputError("certificate image out of range of the point enumeration");
      out += image_names[static_cast<size_t>(img)];
    } else {
      out += std::to_string(img);
    }
    out += "\n";
  }
  return out;
}

inline VertexBijection certificate_from_text(const std::string& text) {
  VertexBijection f;
  int64_t q = 0;
  std::vector<std::pair<int64_t, std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    line = line.substr(start);
    if (line[0] == '#') {
      std::istringstream hl(line.substr(1));
      std::string key;
      hl >> key;
      if (key == "q") {
        if (!(hl >> q) || q <= 0) throw InputError("bad q header in certificate");
      } else if (key == "source") {
        std::getline(hl, f.source);
        if (!f.source.empty() && f.source[0] == ' ') f.source.erase(0, 1);
      } else if (key == "target") {
        std::getline(hl, f.target);
        if (!f.target.empty() && f.target[0] == ' ') f.target.erase(0, 1);
      }
      continue;
    }
    auto arrow = line.find("->");
    if (arrow == std::string::npos)
      throw InputError("certificate line lacks '->': " + line);
    int64_t src = 0;
    try {
      src = std::stoll(line.substr(0, arrow));
    } catch (const std::exception&) {
      throw InputError("cannot parse source vertex in: " + line);
    }
    std::string rhs = line.substr(arrow + 2);
    size_t rs = rhs.find_first_not_of(" \t");
    if (rs == std::string::npos) throw InputError("certificate line lacks an image: " + line);
    rows.emplace_back(src, rhs.substr(rs));
  }
  if (rows.empty()) throw InputError("certificate contains no mapping lines");

  int64_t n = 0;
  for (auto& [src, rhs] : rows) n = std::max(n, src + 1);
  f.map.assign(static_cast<size_t>(n), -1);

  FieldSpec K;
  std::vector<ProjectivePoint> pts;
  if (q > 0) {
    auto pp = as_prime_power(q);
    if (!pp) throw NotPrimePowerError("q=" + std::to_string(q) + " is not a prime power");
    K = make_field(pp->p, pp->e);
    pts = projective_points(K);
  }

  for (auto& [src, rhs] : rows) {
    if (src < 0) throw InputError("negative source vertex in certificate");
    if (f.map[static_cast<size_t>(src)] != -1)
      throw InputError("vertex " + std::to_string(src) + " mapped twice in certificate");
    int64_t img = -1;
    if (!rhs.empty() && rhs[0] == '(') {
      if (q <= 0)
        throw InputError("certificate uses point images but carries no '# q N' header");
      auto close = rhs.find(')');
      if (close == std::string::npos) throw InputError("unterminated point: " + rhs);
      std::string body = rhs.substr(1, close - 1);
      std::vector<std::string> parts;
      std::istringstream ps(body);
      std::string part;
      while (std::getline(ps, part, ',')) parts.push_back(part);
      if (parts.size() != 3) throw InputError("point must have three coordinates: " + rhs);
      ProjectivePoint p(parse_element(K, parts[0]), parse_element(K, parts[1]),
                        parse_element(K, parts[2]));
      for (size_t i = 0; i < pts.size(); ++i)
        if (pts[i] == p) {
          img = static_cast<int64_t>(i);
          break;
        }
      if (img < 0) throw InternalError("parsed point missing from enumeration");
    } else {
      try {
        img = std::stoll(rhs);
      } catch (const std::exception&) {
        throw InputError("cannot parse image in certificate line: " + rhs);
      }
    }
    f.map[static_cast<size_t>(src)] = img;
  }
  for (size_t i = 0; i < f.map.size(); ++i)
    if (f.map[i] == -1)
      throw InputError("certificate is missing vertex " + std::to_string(i));
  return f;
}

}  // namespace moore2
