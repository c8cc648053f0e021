#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "xw/grid.hpp"
#include "xw/vertex_index.hpp"
#include "xw/network.hpp"

namespace xw {

enum class graph_part : unsigned char { a, b };

inline graph_part other_part(graph_part p) {
  return p == graph_part::a ? graph_part::b : graph_part::a;
}

inline const char* part_name(graph_part p) { return p == graph_part::a ? "A" : "B"; }

struct bit_edge {
  vertex_index a;
  vertex_index b;
  edge_label label = edge_label::zero;
  std::optional<coord> cell;  // carried through folding and voiding, ignored by equivalence

  bool operator==(const bit_edge&) const = default;
};

inline bool edge_value_less(const bit_edge& x, const bit_edge& y) {
  return std::tie(x.a, x.b, x.label, x.cell) < std::tie(y.a, y.b, y.label, y.cell);
}

/// Balanced bipartite indexed tricolored multigraph. Parts are kept sorted
/// and duplicate-free; the edge list is a multiset sorted by value.
struct bit_multigraph {
  std::vector<vertex_index> part_a;
  std::vector<vertex_index> part_b;
  std::vector<bit_edge> edges;

  std::vector<vertex_index>& part(graph_part p) { return p == graph_part::a ? part_a : part_b; }
  const std::vector<vertex_index>& part(graph_part p) const {
    return p == graph_part::a ? part_a : part_b;
  }

  void normalize() {
    std::sort(part_a.begin(), part_a.end());
    std::sort(part_b.begin(), part_b.end());
    std::sort(edges.begin(), edges.end(), edge_value_less);
  }

  bool has_vertex(graph_part p, const vertex_index& v) const {
    const auto& vec = part(p);
    return std::binary_search(vec.begin(), vec.end(), v);
  }

  /// Degree counts edge multiplicity; a double edge contributes two.
  int degree(graph_part p, const vertex_index& v) const {
    int d = 0;
    for (const bit_edge& e : edges) {
      if ((p == graph_part::a ? e.a : e.b) == v) ++d;
    }
    return d;
  }

  bool isolated(graph_part p, const vertex_index& v) const { return degree(p, v) == 0; }
};

struct floor_set {
  graph_part part = graph_part::a;
  int floor_value = 0;
  std::vector<vertex_index> members;  // ascending
};

/// Partition of one part by the integer part of the indices, ordered by
/// floor value with members ascending.
inline std::vector<floor_set> floor_sets(const bit_multigraph& g, graph_part p) {
  std::map<int, std::vector<vertex_index>> grouped;
  for (const vertex_index& v : g.part(p)) grouped[v.int_part].push_back(v);
  std::vector<floor_set> out;
  out.reserve(grouped.size());
  for (auto& [value, members] : grouped) {
    std::sort(members.begin(), members.end());
    out.push_back({p, value, std::move(members)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

struct bitgraph_report {
  bool balanced = true;
  bool indices_distinct = true;
  bool zero_vertex_present = true;
  bool zero_edge_rules = true;
  bool double_edge_rule = true;
  std::vector<std::string> problems;

  bool valid() const {
    return balanced && indices_distinct && zero_vertex_present && zero_edge_rules &&
           double_edge_rule;
  }
};

inline bitgraph_report validate_bit_multigraph(const bit_multigraph& g) {
  bitgraph_report rep;
  auto flag = [&](bool& verdict, const std::string& what) {
    verdict = false;
    rep.problems.push_back(what);
  };

  if (g.part_a.size() != g.part_b.size()) {
    flag(rep.balanced, "|A| = " + std::to_string(g.part_a.size()) +
                           " but |B| = " + std::to_string(g.part_b.size()));
  }

  for (graph_part p : {graph_part::a, graph_part::b}) {
    std::vector<vertex_index> sorted = g.part(p);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 1; k < sorted.size(); ++k) {
      if (sorted[k] == sorted[k - 1]) {
        flag(rep.indices_distinct,
             std::string(part_name(p)) + " repeats index " + sorted[k].str());
      } else if (prefix_related(sorted[k - 1], sorted[k])) {
        // A prefix pair denotes the same decimal twice; the order would not
        // be total, so it is rejected alongside duplicates.
        flag(rep.indices_distinct, std::string(part_name(p)) + " holds prefix pair " +
                                       sorted[k - 1].str() + " / " + sorted[k].str());
      }
    }
    bool has_zero = false;
    for (const vertex_index& v : sorted) has_zero = has_zero || v.zero_floor();
    if (!has_zero) {
      flag(rep.zero_vertex_present, std::string(part_name(p)) + " has no zero vertex");
    }
  }

  std::map<std::pair<vertex_index, vertex_index>, std::array<int, 3>> pair_counts;
  for (const bit_edge& e : g.edges) {
    pair_counts[{e.a, e.b}][static_cast<int>(e.label)] += 1;
  }
  int zero_zero_pairs = 0;
  for (const auto& [pair, counts] : pair_counts) {
    const auto& [a, b] = pair;
    int total = counts[0] + counts[1] + counts[2];
    bool zero_incident = a.zero_floor() || b.zero_floor();
    if (zero_incident) {
      if (total != counts[static_cast<int>(edge_label::zero)]) {
        flag(rep.zero_edge_rules,
             "non-zero label on edge at zero vertex (" + a.str() + ", " + b.str() + ")");
      }
      if (total > 1) {
        flag(rep.zero_edge_rules,
             "multiple edges between (" + a.str() + ", " + b.str() + ") at a zero vertex");
      }
      if (a.zero_floor() && b.zero_floor()) ++zero_zero_pairs;
    } else {
      if (counts[static_cast<int>(edge_label::zero)] > 0) {
        flag(rep.double_edge_rule,
             "zero-labeled edge between nonzero vertices (" + a.str() + ", " + b.str() + ")");
      }
      if (counts[static_cast<int>(edge_label::plus)] > 1 ||
          counts[static_cast<int>(edge_label::minus)] > 1) {
        flag(rep.double_edge_rule,
             "repeated same-label edge between (" + a.str() + ", " + b.str() + ")");
      }
    }
  }
  if (zero_zero_pairs > 1) {
    flag(rep.zero_edge_rules,
         std::to_string(zero_zero_pairs) + " adjacent zero-zero pairs, at most one allowed");
  }

  for (const bit_edge& e : g.edges) {
    if (!g.has_vertex(graph_part::a, e.a) || !g.has_vertex(graph_part::b, e.b)) {
      flag(rep.indices_distinct, "edge endpoint missing from its part: (" + e.a.str() + ", " +
                                     e.b.str() + ")");
    }
  }

  return rep;
}

// ---------------------------------------------------------------------------
// Canonical form and equivalence
// ---------------------------------------------------------------------------

/// Canonical fractional digits for the k-th smallest member (0-based) of a
/// floor set: empty for a singleton, otherwise the decimal rendering of k
/// zero padded to a common width to keep the set prefix-free.
inline std::string canonical_frac(std::size_t k, std::size_t size) {
  if (size <= 1) return {};
  std::string digits = std::to_string(k);
  std::size_t width = std::to_string(size - 1).size();
  return std::string(width - digits.size(), '0') + digits;
}

inline bit_multigraph strip_isolated(const bit_multigraph& g) {
  bit_multigraph out;
  out.edges = g.edges;
  for (graph_part p : {graph_part::a, graph_part::b}) {
    for (const vertex_index& v : g.part(p)) {
      if (!g.isolated(p, v)) out.part(p).push_back(v);
    }
  }
  out.normalize();
  return out;
}

/// Renames every floor set to the fixed fractional scheme, preserving order.
/// Any two graphs differing only by an order-preserving reindexing map to
/// the same canonical graph; the map is idempotent.
inline bit_multigraph canonicalize(const bit_multigraph& g) {
  std::map<vertex_index, vertex_index> rename_a, rename_b;
  for (graph_part p : {graph_part::a, graph_part::b}) {
    auto& rename = p == graph_part::a ? rename_a : rename_b;
    for (const floor_set& fs : floor_sets(g, p)) {
      for (std::size_t k = 0; k < fs.members.size(); ++k) {
        rename[fs.members[k]] = vertex_index{fs.floor_value, canonical_frac(k, fs.members.size())};
      }
    }
  }
  bit_multigraph out;
  for (const vertex_index& v : g.part_a) out.part_a.push_back(rename_a.at(v));
  for (const vertex_index& v : g.part_b) out.part_b.push_back(rename_b.at(v));
  for (const bit_edge& e : g.edges) {
    out.edges.push_back({rename_a.at(e.a), rename_b.at(e.b), e.label, e.cell});
  }
  out.normalize();
  return out;
}

/// Equality up to order-preserving reindexing, with cell tags ignored and
/// isolated vertices optionally stripped first.
inline bool equivalent(const bit_multigraph& g1, const bit_multigraph& g2, bool ignore_isolated) {
  bit_multigraph c1 = canonicalize(ignore_isolated ? strip_isolated(g1) : g1);
  bit_multigraph c2 = canonicalize(ignore_isolated ? strip_isolated(g2) : g2);
  if (c1.part_a != c2.part_a || c1.part_b != c2.part_b) return false;
  auto triples = [](const bit_multigraph& g) {
    std::vector<std::tuple<vertex_index, vertex_index, int>> t;
    t.reserve(g.edges.size());
    for (const bit_edge& e : g.edges) t.emplace_back(e.a, e.b, static_cast<int>(e.label));
    std::sort(t.begin(), t.end());
    return t;
  };
  return triples(c1) == triples(c2);
}

// ---------------------------------------------------------------------------
// Folding the fundamental graph
// ---------------------------------------------------------------------------

/// Identifies the down vertices of equal absolute value, dropping the sign
/// decorations; part A holds the across magnitudes, part B the down ones.
/// Folding merges vertices only, so the edge multiset is preserved.
inline bit_multigraph crossword_multigraph(const fundamental_graph& f) {
  bit_multigraph g;
  std::set<vertex_index> a_set, b_set;
  for (const auto& [idx, ans] : f.across) {
    if (idx.neg) {
      throw error(errc::bad_input, "fundamental graph holds a negative across vertex " + idx.str());
    }
    a_set.insert(idx.mag);
  }
  for (const auto& [idx, ans] : f.down) b_set.insert(idx.mag);
  g.part_a.assign(a_set.begin(), a_set.end());
  g.part_b.assign(b_set.begin(), b_set.end());
  for (const licn_edge& e : f.edges) {
    g.edges.push_back({e.across.mag, e.down.mag, e.label, e.cell});
  }
  g.normalize();
  return g;
}

// ---------------------------------------------------------------------------
// Grid reconstruction
// ---------------------------------------------------------------------------

/// Inverts the grid-to-multigraph pipeline: integer parts of the endpoints
/// give the cell coordinates, the label fixes the signs. The half size is
/// the number of floor sets per part minus one, which the parts must agree
/// on.
inline grid reconstruct_grid(const bit_multigraph& g) {
  std::set<int> floors_a, floors_b;
  for (const vertex_index& v : g.part_a) floors_a.insert(v.int_part);
  for (const vertex_index& v : g.part_b) floors_b.insert(v.int_part);
  if (floors_a.size() != floors_b.size()) {
    throw error(errc::inconsistent_floor_counts,
                "A spans " + std::to_string(floors_a.size()) + " floors, B spans " +
                    std::to_string(floors_b.size()));
  }
  if (floors_a.empty()) {
    throw error(errc::out_of_range, "graph has no vertices");
  }
  const int n = static_cast<int>(floors_a.size()) - 1;

  grid out = grid::filled(n, square::black);
  for (const bit_edge& e : g.edges) {
    const int r = e.a.int_part;
    const int c = e.b.int_part;
    if (r > n || c > n) {
      throw error(errc::out_of_range, "edge (" + e.a.str() + ", " + e.b.str() +
                                          ") exceeds floor range for n=" + std::to_string(n));
    }
    coord cell{};
    switch (e.label) {
      case edge_label::plus:
        if (r == 0 || c == 0) {
          throw error(errc::bad_input, "plus edge touching a zero floor");
        }
        cell = {c, r};
        break;
      case edge_label::minus:
        if (r == 0 || c == 0) {
          throw error(errc::bad_input, "minus edge touching a zero floor");
        }
        cell = {-c, r};
        break;
      case edge_label::zero:
        if (r != 0 && c != 0) {
          throw error(errc::bad_input, "zero edge between nonzero floors");
        }
        cell = {c, r};  // one of them is zero, so this is (c,0), (0,r) or (0,0)
        break;
    }
    if (out.white(cell)) {
      throw error(errc::cell_collision, "two edges map to cell (" + std::to_string(cell.i) + "," +
                                            std::to_string(cell.j) + ")");
    }
    out.set(cell, square::white);
    out.set(rotate180(cell), square::white);
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON and DOT
// ---------------------------------------------------------------------------

inline nlohmann::json bitgraph_to_json(const bit_multigraph& g) {
  bit_multigraph sorted = g;
  sorted.normalize();
  std::set<int> floors_a;
  for (const vertex_index& v : sorted.part_a) floors_a.insert(v.int_part);
  nlohmann::json a = nlohmann::json::array(), b = nlohmann::json::array();
  for (const vertex_index& v : sorted.part_a) a.push_back(v.str());
  for (const vertex_index& v : sorted.part_b) b.push_back(v.str());
  nlohmann::json edges = nlohmann::json::array();
  for (const bit_edge& e : sorted.edges) {
    nlohmann::json je{{"a", e.a.str()}, {"b", e.b.str()},
                      {"label", std::string(1, label_char(e.label))}};
    if (e.cell) je["cell"] = {e.cell->i, e.cell->j};
    edges.push_back(je);
  }
  return {{"n", static_cast<int>(floors_a.size()) - 1}, {"A", a}, {"B", b}, {"edges", edges}};
}

inline bit_multigraph bitgraph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("A") || !j.contains("B") || !j.contains("edges")) {
    throw error(errc::bad_input, "graph json needs fields A, B and edges");
  }
  bit_multigraph g;
  for (const auto& v : j["A"]) g.part_a.push_back(vertex_index::parse(v.get<std::string>()));
  for (const auto& v : j["B"]) g.part_b.push_back(vertex_index::parse(v.get<std::string>()));
  for (const auto& je : j["edges"]) {
    bit_edge e;
    e.a = vertex_index::parse(je.at("a").get<std::string>());
    e.b = vertex_index::parse(je.at("b").get<std::string>());
    std::string label = je.at("label").get<std::string>();
    if (label.size() != 1) throw error(errc::bad_input, "edge label must be -, 0 or +");
    e.label = label_from_char(label[0]);
    if (je.contains("cell")) {
      const auto& c = je["cell"];
      if (!c.is_array() || c.size() != 2) throw error(errc::bad_input, "cell must be [i,j]");
      e.cell = coord{c[0].get<int>(), c[1].get<int>()};
    }
    g.edges.push_back(e);
  }
  g.normalize();
  for (const bit_edge& e : g.edges) {
    if (!g.has_vertex(graph_part::a, e.a) || !g.has_vertex(graph_part::b, e.b)) {
      throw error(errc::bad_input, "edge endpoint (" + e.a.str() + ", " + e.b.str() +
                                       ") missing from the vertex lists");
    }
  }
  return g;
}

inline std::string bitgraph_to_dot(const bit_multigraph& g) {
  bit_multigraph sorted = g;
  sorted.normalize();
  std::ostringstream os;
  os << "graph bit_multigraph {\n  rankdir=LR;\n";
  for (const vertex_index& v : sorted.part_a) os << "  \"A " << v.str() << "\" [shape=circle];\n";
  for (const vertex_index& v : sorted.part_b) os << "  \"B " << v.str() << "\" [shape=square];\n";
  for (const bit_edge& e : sorted.edges) {
    os << "  \"A " << e.a.str() << "\" -- \"B " << e.b.str() << "\" [color=" << label_color(e.label)
       << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace xw
