#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "xw/bitgraph.hpp"
#include "xw/grid.hpp"

namespace xw {

/// One endpoint reassignment performed by a voiding step, with the id of the
/// rule that fired. Matching-label edges resolve by comparing the far
/// endpoint against the removed edge (rules 3a-i .. 3a-iv); other labels go
/// to a fixed split (rules 3b-i .. 3b-vi).
struct void_assignment {
  bit_edge before;
  bit_edge after;
  graph_part side = graph_part::a;
  std::string rule;
};

struct void_step {
  bit_edge removed;
  vertex_index a0, a1, b0, b1;
  std::vector<void_assignment> assignments;
};

/// Template bit multigraph of the all-white (2n+1) grid: integer indices
/// 0..n in both parts, a complete bipartite graph of plus edges and one of
/// minus edges over the nonzero vertices, and 2n+1 zero edges fanning out
/// from the two zero vertices. Every edge carries the cell it stands for.
inline bit_multigraph unvoided_graph(int n) {
  bit_multigraph g;
  for (int v = 0; v <= n; ++v) {
    g.part_a.push_back(vertex_index{v, {}});
    g.part_b.push_back(vertex_index{v, {}});
  }
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      g.edges.push_back({vertex_index{a, {}}, vertex_index{b, {}}, edge_label::plus, coord{b, a}});
      g.edges.push_back({vertex_index{a, {}}, vertex_index{b, {}}, edge_label::minus, coord{-b, a}});
    }
  }
  for (int b = 1; b <= n; ++b) {
    g.edges.push_back({vertex_index{0, {}}, vertex_index{b, {}}, edge_label::zero, coord{b, 0}});
  }
  for (int a = 1; a <= n; ++a) {
    g.edges.push_back({vertex_index{a, {}}, vertex_index{0, {}}, edge_label::zero, coord{0, a}});
  }
  g.edges.push_back({vertex_index{0, {}}, vertex_index{0, {}}, edge_label::zero, coord{0, 0}});
  g.normalize();
  return g;
}

namespace detail {

struct split_rule {
  char digit;  // '0' or '1'
  const char* rule;
};

// Reassignment of an edge incident to the removed edge's A endpoint. `far`
// is the incident edge's B endpoint, compared against the removed edge's B
// endpoint when the labels match.
inline split_rule assign_a_side(edge_label removed, edge_label incident, const vertex_index& far,
                                const vertex_index& removed_b) {
  if (incident == removed) {
    if (far == removed_b) {
      throw error(errc::ambiguous_comparison,
                  "same-labeled edge between the removed edge's endpoints");
    }
    if (incident == edge_label::minus) {
      return far > removed_b ? split_rule{'0', "3a-ii"} : split_rule{'1', "3a-ii"};
    }
    return far < removed_b ? split_rule{'0', "3a-i"} : split_rule{'1', "3a-i"};
  }
  switch (incident) {
    case edge_label::plus: return {'1', "3b-i"};
    case edge_label::zero: return removed == edge_label::minus ? split_rule{'1', "3b-ii"}
                                                               : split_rule{'0', "3b-ii"};
    case edge_label::minus: return {'0', "3b-iii"};
  }
  throw error(errc::ambiguous_comparison, "unreachable label");
}

inline split_rule assign_b_side(edge_label removed, edge_label incident, const vertex_index& far,
                                const vertex_index& removed_a) {
  if (incident == removed) {
    if (far == removed_a) {
      throw error(errc::ambiguous_comparison,
                  "same-labeled edge between the removed edge's endpoints");
    }
    if (incident == edge_label::minus) {
      return far > removed_a ? split_rule{'0', "3a-iv"} : split_rule{'1', "3a-iv"};
    }
    return far < removed_a ? split_rule{'0', "3a-iii"} : split_rule{'1', "3a-iii"};
  }
  switch (incident) {
    case edge_label::plus: return {'1', "3b-iv"};
    case edge_label::zero: return removed == edge_label::minus ? split_rule{'1', "3b-v"}
                                                               : split_rule{'0', "3b-v"};
    case edge_label::minus: return {'0', "3b-vi"};
  }
  throw error(errc::ambiguous_comparison, "unreachable label");
}

}  // namespace detail

/// Voids one edge: removes it, splits both endpoints by appending a binary
/// digit, and reassigns every other incident edge. Appending digits keeps
/// the new indices ordered relative to all existing ones, so any order of
/// voiding a set of edges lands on the same graph up to the canonical
/// renaming (the digit strings themselves are path dependent).
inline bit_multigraph void_edge(const bit_multigraph& g, const bit_edge& e,
                                void_step* trace = nullptr) {
  std::size_t removed_pos = g.edges.size();
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const bit_edge& cand = g.edges[k];
    if (cand.a == e.a && cand.b == e.b && cand.label == e.label) {
      removed_pos = k;
      break;
    }
  }
  if (removed_pos == g.edges.size()) {
    throw error(errc::edge_not_present, "no edge (" + e.a.str() + ", " + e.b.str() + ", " +
                                            std::string(1, label_char(e.label)) + ")");
  }
  const bit_edge removed = g.edges[removed_pos];

  const vertex_index a0 = removed.a.child('0'), a1 = removed.a.child('1');
  const vertex_index b0 = removed.b.child('0'), b1 = removed.b.child('1');
  for (const vertex_index& v : {a0, a1}) {
    if (g.has_vertex(graph_part::a, v)) {
      throw error(errc::index_collision, "split index " + v.str() + " already present in A");
    }
  }
  for (const vertex_index& v : {b0, b1}) {
    if (g.has_vertex(graph_part::b, v)) {
      throw error(errc::index_collision, "split index " + v.str() + " already present in B");
    }
  }

  if (trace) {
    trace->removed = removed;
    trace->a0 = a0;
    trace->a1 = a1;
    trace->b0 = b0;
    trace->b1 = b1;
    trace->assignments.clear();
  }

  bit_multigraph out;
  out.part_a.reserve(g.part_a.size() + 1);
  out.part_b.reserve(g.part_b.size() + 1);
  for (const vertex_index& v : g.part_a) {
    if (v == removed.a) {
      out.part_a.push_back(a0);
      out.part_a.push_back(a1);
    } else {
      out.part_a.push_back(v);
    }
  }
  for (const vertex_index& v : g.part_b) {
    if (v == removed.b) {
      out.part_b.push_back(b0);
      out.part_b.push_back(b1);
    } else {
      out.part_b.push_back(v);
    }
  }

  out.edges.reserve(g.edges.size() - 1);
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    if (k == removed_pos) continue;
    bit_edge moved = g.edges[k];
    if (moved.a == removed.a) {
      auto [digit, rule] = detail::assign_a_side(removed.label, moved.label, moved.b, removed.b);
      bit_edge before = moved;
      moved.a = digit == '0' ? a0 : a1;
      if (trace) trace->assignments.push_back({before, moved, graph_part::a, rule});
    }
    if (moved.b == removed.b) {
      auto [digit, rule] = detail::assign_b_side(removed.label, moved.label, g.edges[k].a,
                                                 removed.a);
      bit_edge before = moved;
      moved.b = digit == '0' ? b0 : b1;
      if (trace) trace->assignments.push_back({before, moved, graph_part::b, rule});
    }
    out.edges.push_back(moved);
  }
  out.normalize();
  return out;
}

/// The unique edge carrying a given cell tag.
inline bit_edge edge_for_cell(const bit_multigraph& g, coord c) {
  for (const bit_edge& e : g.edges) {
    if (e.cell && *e.cell == c) return e;
  }
  throw error(errc::no_such_cell,
              "no edge tagged with cell (" + std::to_string(c.i) + "," + std::to_string(c.j) + ")");
}

/// Applies the voiding procedure to the edge representative of every void in
/// the fundamental region, starting from the all-white template. Voids are
/// processed in the canonical region order, making the output reproducible;
/// any other order gives the same graph up to canonical renaming.
inline bit_multigraph voided_from_grid(const grid& g, std::vector<void_step>* trace = nullptr) {
  if (!is_symmetric(g)) {
    throw error(errc::asymmetric_grid, "grid lacks 180-degree rotational symmetry");
  }
  bit_multigraph out = unvoided_graph(g.n);
  for (int j = g.n; j >= 0; --j) {
    for (int i = (j == 0 ? 0 : -g.n); i <= g.n; ++i) {
      coord c{i, j};
      if (g.white(c)) continue;
      void_step step;
      out = void_edge(out, edge_for_cell(out, c), trace ? &step : nullptr);
      if (trace) trace->push_back(std::move(step));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Crossword-voids check
// ---------------------------------------------------------------------------

/// Side-sharing places: unordered void/void adjacencies plus void/boundary
/// contacts. `orbits` counts them up to the 180-degree symmetry, `region`
/// counts only places among voids of the fundamental region.
struct side_share_counts {
  int full = 0;
  int orbits = 0;
  int region = 0;
};

inline side_share_counts count_side_shares(const grid& g) {
  side_share_counts out;
  const int n = g.n;
  for (int j = n; j >= -n; --j) {
    for (int i = -n; i <= n; ++i) {
      coord c{i, j};
      if (g.white(c)) continue;
      const bool in_region = in_fundamental_region(c);
      // Pairs, counted once via the right and up neighbors.
      for (coord nb : {coord{i + 1, j}, coord{i, j + 1}}) {
        if (g.in_bounds(nb) && !g.white(nb)) {
          ++out.full;
          if (in_region && in_fundamental_region(nb)) ++out.region;
        }
      }
      // Boundary contacts, one per side.
      for (coord nb : {coord{i + 1, j}, coord{i - 1, j}, coord{i, j + 1}, coord{i, j - 1}}) {
        if (!g.in_bounds(nb)) {
          ++out.full;
          if (in_region) ++out.region;
        }
      }
    }
  }
  out.orbits = out.full / 2;  // places pair up under the rotation, none are fixed
  return out;
}

struct crossword_voids_report {
  bool equivalent = false;
  int isolated_vertices = 0;
  side_share_counts side_shares;
  int orbits_plus_center = 0;  // orbit places, plus two when the center is void
  bool matches_orbits = false;
  bool matches_full = false;
  bool matches_region = false;
  bool matches_orbits_plus_center = false;
};

/// Compares the voiding pipeline against the direct fold of the fundamental
/// graph. Equivalence is the firm claim; the isolated-vertex counts are
/// reported against the side-sharing counts without being asserted. A center
/// void always isolates the two '0' splits of the zero-zero edge on top of
/// the side-sharing places, which the orbits_plus_center tally accounts for.
inline crossword_voids_report check_crossword_voids(const grid& g) {
  crossword_voids_report rep;
  bit_multigraph voided = voided_from_grid(g);
  bit_multigraph direct = crossword_multigraph(fundamental(build_licn(g)));
  rep.equivalent = equivalent(voided, direct, /*ignore_isolated=*/true);
  for (graph_part p : {graph_part::a, graph_part::b}) {
    for (const vertex_index& v : voided.part(p)) {
      if (voided.isolated(p, v)) ++rep.isolated_vertices;
    }
  }
  rep.side_shares = count_side_shares(g);
  rep.orbits_plus_center = rep.side_shares.orbits + (g.white({0, 0}) ? 0 : 2);
  rep.matches_orbits = rep.isolated_vertices == rep.side_shares.orbits;
  rep.matches_full = rep.isolated_vertices == rep.side_shares.full;
  rep.matches_region = rep.isolated_vertices == rep.side_shares.region;
  rep.matches_orbits_plus_center = rep.isolated_vertices == rep.orbits_plus_center;
  return rep;
}

// ---------------------------------------------------------------------------
// Trace rendering
// ---------------------------------------------------------------------------

inline std::string format_edge(const bit_edge& e) {
  std::string s = "(" + e.a.str() + ", " + e.b.str() + ", " + label_char(e.label);
  if (e.cell) s += ", cell=(" + std::to_string(e.cell->i) + "," + std::to_string(e.cell->j) + ")";
  return s + ")";
}

inline std::string format_void_step(const void_step& s) {
  std::ostringstream os;
  os << "void " << format_edge(s.removed) << " splits a->" << s.a0.str() << "/" << s.a1.str()
     << " b->" << s.b0.str() << "/" << s.b1.str() << "\n";
  for (const void_assignment& as : s.assignments) {
    os << "  [" << as.rule << "] " << (as.side == graph_part::a ? "a" : "b") << "-side "
       << format_edge(as.before) << " -> " << format_edge(as.after) << "\n";
  }
  return os.str();
}

inline nlohmann::json void_step_to_json(const void_step& s) {
  auto edge_json = [](const bit_edge& e) {
    nlohmann::json j{{"a", e.a.str()}, {"b", e.b.str()},
                     {"label", std::string(1, label_char(e.label))}};
    if (e.cell) j["cell"] = {e.cell->i, e.cell->j};
    return j;
  };
  nlohmann::json assignments = nlohmann::json::array();
  for (const void_assignment& as : s.assignments) {
    assignments.push_back({{"rule", as.rule},
                           {"side", as.side == graph_part::a ? "a" : "b"},
                           {"before", edge_json(as.before)},
                           {"after", edge_json(as.after)}});
  }
  return {{"removed", edge_json(s.removed)},
          {"splits",
           {{"a", {s.a0.str(), s.a1.str()}}, {"b", {s.b0.str(), s.b1.str()}}}},
          {"assignments", assignments}};
}

inline nlohmann::json crossword_voids_report_to_json(const crossword_voids_report& r) {
  return {{"equivalent", r.equivalent},
          {"isolated_vertices", r.isolated_vertices},
          {"side_shares",
           {{"full", r.side_shares.full},
            {"orbits", r.side_shares.orbits},
            {"region", r.side_shares.region},
            {"orbits_plus_center", r.orbits_plus_center}}},
          {"isolated_matches",
           {{"orbits", r.matches_orbits},
            {"full", r.matches_full},
            {"region", r.matches_region},
            {"orbits_plus_center", r.matches_orbits_plus_center}}}};
}

}  // namespace xw
