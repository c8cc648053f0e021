#pragma once

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "xw/bitgraph.hpp"

namespace xw {

enum class condition_id : unsigned char {
  c1_squareness,
  c2_word_length,
  c3_connectivity,
  c4_edge_vertex_count,
  c5a_zero_floor_edges,
  c5b_nonzero_floor_edges,
  c5c_no_doubles,
  c5d_blue_above_red,
  c5e_purple_in_between,
  c5f_maximal_same_label,
  c5g_blue_sweep,
  c5h_red_sweep,
  c5i_purple_sweep,
};

inline const char* condition_name(condition_id id) {
  switch (id) {
    case condition_id::c1_squareness: return "C1_Squareness";
    case condition_id::c2_word_length: return "C2_WordLength";
    case condition_id::c3_connectivity: return "C3_Connectivity";
    case condition_id::c4_edge_vertex_count: return "C4_EdgeVertexCount";
    case condition_id::c5a_zero_floor_edges: return "C5a_ZeroFloorEdges";
    case condition_id::c5b_nonzero_floor_edges: return "C5b_NonzeroFloorEdges";
    case condition_id::c5c_no_doubles: return "C5c_NoDoubles";
    case condition_id::c5d_blue_above_red: return "C5d_BlueAboveRed";
    case condition_id::c5e_purple_in_between: return "C5e_PurpleInBetween";
    case condition_id::c5f_maximal_same_label: return "C5f_MaximalSameLabel";
    case condition_id::c5g_blue_sweep: return "C5g_BlueSweep";
    case condition_id::c5h_red_sweep: return "C5h_RedSweep";
    case condition_id::c5i_purple_sweep: return "C5i_PurpleSweep";
  }
  return "?";
}

inline const std::vector<condition_id>& all_conditions() {
  static const std::vector<condition_id> ids = {
      condition_id::c1_squareness,       condition_id::c2_word_length,
      condition_id::c3_connectivity,     condition_id::c4_edge_vertex_count,
      condition_id::c5a_zero_floor_edges, condition_id::c5b_nonzero_floor_edges,
      condition_id::c5c_no_doubles,      condition_id::c5d_blue_above_red,
      condition_id::c5e_purple_in_between, condition_id::c5f_maximal_same_label,
      condition_id::c5g_blue_sweep,      condition_id::c5h_red_sweep,
      condition_id::c5i_purple_sweep,
  };
  return ids;
}

enum class verdict_kind : unsigned char { pass, fail, not_applicable };

struct condition_verdict {
  verdict_kind kind = verdict_kind::pass;
  std::string witness;  // empty unless the check failed

  bool passed() const { return kind == verdict_kind::pass; }
  static condition_verdict ok() { return {}; }
  static condition_verdict failure(std::string w) { return {verdict_kind::fail, std::move(w)}; }
  static condition_verdict na() { return {verdict_kind::not_applicable, {}}; }
};

/// Missing-floor list m_1 > ... > m_l used by one sweep check.
struct sweep_gap {
  graph_part part = graph_part::a;
  int floor_value = 0;
  edge_label label = edge_label::plus;
  std::vector<int> missing;
};

struct condition_report {
  int n = -1;  // inferred half size, -1 when C1 fails
  std::map<condition_id, condition_verdict> verdicts;
  std::vector<sweep_gap> sweep_gaps;
  nlohmann::json aux;  // auxiliary counts for the inequality variants

  bool overall() const {
    for (const auto& [id, v] : verdicts) {
      if (v.kind == verdict_kind::fail) return false;
    }
    return true;
  }
};

// ---------------------------------------------------------------------------
// Helpers
// ---------------------------------------------------------------------------

namespace detail {

inline const vertex_index& end_of(const bit_edge& e, graph_part p) {
  return p == graph_part::a ? e.a : e.b;
}

/// Numeric positivity: the decimal the index denotes is greater than zero.
inline bool numerically_positive(const vertex_index& v) {
  if (v.int_part > 0) return true;
  for (char d : v.frac) {
    if (d != '0') return true;
  }
  return false;
}

inline int count_size_one_floors(const std::vector<floor_set>& floors, bool nonzero_only) {
  int c = 0;
  for (const floor_set& fs : floors) {
    if (fs.members.size() == 1 && (!nonzero_only || fs.floor_value != 0)) ++c;
  }
  return c;
}

inline int count_size_one_floors_non_isolated(const bit_multigraph& g,
                                              const std::vector<floor_set>& floors,
                                              graph_part p) {
  int c = 0;
  for (const floor_set& fs : floors) {
    if (fs.members.size() == 1 && !g.isolated(p, fs.members.front())) ++c;
  }
  return c;
}

/// Distinct floor values of a part, ascending.
inline std::vector<int> floor_values(const bit_multigraph& g, graph_part p) {
  std::set<int> vals;
  for (const vertex_index& v : g.part(p)) vals.insert(v.int_part);
  return {vals.begin(), vals.end()};
}

}  // namespace detail

/// Half size inferred from the floor partition: n+1 floor sets per part,
/// every floor 0..n present in both. Returns -1 when that fails.
inline int infer_half_size(const bit_multigraph& g) {
  std::vector<int> fa = detail::floor_values(g, graph_part::a);
  std::vector<int> fb = detail::floor_values(g, graph_part::b);
  if (fa.empty() || fa != fb) return -1;
  for (std::size_t k = 0; k < fa.size(); ++k) {
    if (fa[k] != static_cast<int>(k)) return -1;
  }
  return static_cast<int>(fa.size()) - 1;
}

// ---------------------------------------------------------------------------
// Conditions 1 .. 4
// ---------------------------------------------------------------------------

inline condition_verdict check_c1_squareness(const bit_multigraph& g, int* n_out = nullptr) {
  std::vector<int> fa = detail::floor_values(g, graph_part::a);
  std::vector<int> fb = detail::floor_values(g, graph_part::b);
  if (n_out) *n_out = -1;
  if (fa.empty() || fb.empty()) {
    return condition_verdict::failure("a part has no vertices, no floor partition exists");
  }
  if (fa.size() != fb.size()) {
    return condition_verdict::failure("A has " + std::to_string(fa.size()) + " floor sets, B has " +
                                      std::to_string(fb.size()));
  }
  for (std::size_t k = 0; k < fa.size(); ++k) {
    if (fa[k] != static_cast<int>(k)) {
      return condition_verdict::failure("part A misses floor " + std::to_string(k));
    }
    if (fb[k] != static_cast<int>(k)) {
      return condition_verdict::failure("part B misses floor " + std::to_string(k));
    }
  }
  if (n_out) *n_out = static_cast<int>(fa.size()) - 1;
  return condition_verdict::ok();
}

/// Word length. Degree equals answer length except at the endpoints of the
/// zero-zero edge: those vertices stand for the self-symmetric center
/// answers, whose 2d-1 cells fold onto d edges, so degree 2 already means a
/// length-3 answer there.
inline condition_verdict check_c2_word_length(const bit_multigraph& g) {
  std::set<std::pair<int, vertex_index>> zero_zero_ends;
  for (const bit_edge& e : g.edges) {
    if (e.a.zero_floor() && e.b.zero_floor()) {
      zero_zero_ends.insert({0, e.a});
      zero_zero_ends.insert({1, e.b});
    }
  }
  for (graph_part p : {graph_part::a, graph_part::b}) {
    for (const vertex_index& v : g.part(p)) {
      int d = g.degree(p, v);
      if (d == 0) continue;  // isolated vertices are exempt
      int required = zero_zero_ends.count({p == graph_part::a ? 0 : 1, v}) ? 2 : 3;
      if (d < required) {
        return condition_verdict::failure(std::string(part_name(p)) + " vertex " + v.str() +
                                          " has degree " + std::to_string(d));
      }
    }
  }
  return condition_verdict::ok();
}

inline condition_verdict check_c3_connectivity(const bit_multigraph& g) {
  // Vertices of degree >= 1, double edges collapsing to one adjacency.
  std::map<std::pair<int, vertex_index>, int> id;
  for (const bit_edge& e : g.edges) {
    id.emplace(std::make_pair(0, e.a), 0);
    id.emplace(std::make_pair(1, e.b), 0);
  }
  if (id.empty()) {
    return condition_verdict::failure("graph has no edges, nothing is connected");
  }
  int next = 0;
  for (auto& [key, value] : id) value = next++;
  std::vector<int> parent(id.size());
  for (std::size_t k = 0; k < parent.size(); ++k) parent[k] = static_cast<int>(k);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const bit_edge& e : g.edges) {
    int ra = find(id.at({0, e.a}));
    int rb = find(id.at({1, e.b}));
    if (ra != rb) parent[ra] = rb;
  }
  int root = find(0);
  for (std::size_t k = 1; k < parent.size(); ++k) {
    if (find(static_cast<int>(k)) != root) {
      for (const auto& [key, value] : id) {
        if (value == static_cast<int>(k)) {
          return condition_verdict::failure("non-isolated subgraph splits; vertex " +
                                            key.second.str() + " sits in a second component");
        }
      }
    }
  }
  return condition_verdict::ok();
}

inline condition_verdict check_c4_count(const bit_multigraph& g) {
  int n = infer_half_size(g);
  if (n < 0) return condition_verdict::na();
  const long long e = static_cast<long long>(g.edges.size());
  const long long k = static_cast<long long>(g.part_a.size());
  const long long want = 2LL * n * n + 3LL * n + 2;
  if (e + k != want) {
    return condition_verdict::failure("e+k = " + std::to_string(e + k) + ", expected " +
                                      std::to_string(want) + " for n=" + std::to_string(n));
  }
  return condition_verdict::ok();
}

// ---------------------------------------------------------------------------
// Condition 5: floor set edge conditions
// ---------------------------------------------------------------------------

namespace detail {

struct floor_edge_counts {
  int total = 0;
  int plus = 0;
  int minus = 0;
  int zero = 0;
};

inline floor_edge_counts edges_incident_to_floor(const bit_multigraph& g, graph_part p,
                                                 int floor_value) {
  floor_edge_counts c;
  for (const bit_edge& e : g.edges) {
    if (end_of(e, p).int_part != floor_value) continue;
    ++c.total;
    switch (e.label) {
      case edge_label::plus: ++c.plus; break;
      case edge_label::minus: ++c.minus; break;
      case edge_label::zero: ++c.zero; break;
    }
  }
  return c;
}

inline const floor_set* find_floor(const std::vector<floor_set>& floors, int value) {
  for (const floor_set& fs : floors) {
    if (fs.floor_value == value) return &fs;
  }
  return nullptr;
}

}  // namespace detail

/// 5(a): with l vertices in the zero floor set, exactly n-l+2 incident
/// edges, and at least one per size-one floor set of the opposite part (the
/// unsplit vertices keep their zero edge).
inline condition_verdict check_c5a_zero_floor(const bit_multigraph& g, graph_part p) {
  int n = infer_half_size(g);
  if (n < 0) return condition_verdict::na();
  auto floors = floor_sets(g, p);
  const floor_set* zero = detail::find_floor(floors, 0);
  const int l = static_cast<int>(zero->members.size());
  const auto counts = detail::edges_incident_to_floor(g, p, 0);
  if (counts.total != n - l + 2) {
    return condition_verdict::failure(std::string("|E(floor 0 of ") + part_name(p) +
                                      ")| = " + std::to_string(counts.total) + ", expected n-l+2 = " +
                                      std::to_string(n - l + 2));
  }
  const int singles = detail::count_size_one_floors(floor_sets(g, other_part(p)), false);
  if (counts.total < singles) {
    return condition_verdict::failure(std::string("|E(floor 0 of ") + part_name(p) + ")| = " +
                                      std::to_string(counts.total) + " < " + std::to_string(singles) +
                                      " size-one floor sets opposite");
  }
  return condition_verdict::ok();
}

/// 5(b): a nonzero floor set has at most n minus, n plus and one zero edge,
/// exactly 2n-l+2 in total, and keeps the plus/minus pair of every unsplit
/// nonzero floor set of the opposite part.
inline condition_verdict check_c5b_nonzero_floor(const bit_multigraph& g, graph_part p, int k) {
  int n = infer_half_size(g);
  if (n < 0) return condition_verdict::na();
  if (k < 1 || k > n) {
    return condition_verdict::failure("floor " + std::to_string(k) + " outside 1.." +
                                      std::to_string(n));
  }
  auto floors = floor_sets(g, p);
  const floor_set* fs = detail::find_floor(floors, k);
  const int l = static_cast<int>(fs->members.size());
  const auto counts = detail::edges_incident_to_floor(g, p, k);
  std::string where = std::string("floor ") + std::to_string(k) + " of " + part_name(p);
  if (counts.plus > n || counts.minus > n) {
    return condition_verdict::failure(where + " has " + std::to_string(counts.plus) + " plus / " +
                                      std::to_string(counts.minus) + " minus edges, cap is n=" +
                                      std::to_string(n));
  }
  if (counts.zero > 1) {
    return condition_verdict::failure(where + " has " + std::to_string(counts.zero) +
                                      " zero edges, at most one allowed");
  }
  if (counts.total != 2 * n - l + 2) {
    return condition_verdict::failure("|E(" + where + ")| = " + std::to_string(counts.total) +
                                      ", expected 2n-l+2 = " + std::to_string(2 * n - l + 2));
  }
  // The unsplit opposite floor sets each retain a plus and a minus edge into
  // this floor; the zero floor opposite contributes a zero edge instead, so
  // it stays out of the doubled count.
  const int singles = detail::count_size_one_floors(floor_sets(g, other_part(p)), true);
  if (counts.total < 2 * singles) {
    return condition_verdict::failure("|E(" + where + ")| = " + std::to_string(counts.total) +
                                      " < 2 * " + std::to_string(singles) +
                                      " unsplit nonzero floor sets opposite");
  }
  return condition_verdict::ok();
}

/// 5(c): between two nonzero floor sets at most one plus and one minus edge;
/// a zero floor set reaches any floor set through at most one zero edge.
inline condition_verdict check_c5c_no_doubles(const bit_multigraph& g) {
  std::map<std::tuple<int, int, int>, int> counts;
  for (const bit_edge& e : g.edges) {
    counts[{e.a.int_part, e.b.int_part, static_cast<int>(e.label)}] += 1;
  }
  for (const auto& [key, count] : counts) {
    const auto& [fa, fb, label_int] = key;
    const edge_label label = static_cast<edge_label>(label_int);
    if (label == edge_label::zero) {
      if ((fa == 0 || fb == 0) && count > 1) {
        return condition_verdict::failure("floors (" + std::to_string(fa) + ", " +
                                          std::to_string(fb) + ") joined by " +
                                          std::to_string(count) + " zero edges");
      }
    } else if (fa != 0 && fb != 0 && count > 1) {
      return condition_verdict::failure("floors (" + std::to_string(fa) + ", " +
                                        std::to_string(fb) + ") joined by " + std::to_string(count) +
                                        " '" + label_char(label) + "' edges");
    }
  }
  return condition_verdict::ok();
}

/// 5(d): two members of one floor set sharing a positive neighbor meet it
/// red below, blue above.
inline condition_verdict check_c5d_blue_above_red(const bit_multigraph& g) {
  for (graph_part p : {graph_part::a, graph_part::b}) {
    const graph_part q = other_part(p);
    for (const vertex_index& w : g.part(q)) {
      if (!detail::numerically_positive(w)) continue;
      // Edges from w grouped by the floor of the p endpoint.
      std::map<int, std::vector<const bit_edge*>> by_floor;
      for (const bit_edge& e : g.edges) {
        if (detail::end_of(e, q) == w) by_floor[detail::end_of(e, p).int_part].push_back(&e);
      }
      for (const auto& [floor_value, floor_edges] : by_floor) {
        for (const bit_edge* e1 : floor_edges) {
          for (const bit_edge* e2 : floor_edges) {
            const vertex_index& v1 = detail::end_of(*e1, p);
            const vertex_index& v2 = detail::end_of(*e2, p);
            if (!(v1 < v2)) continue;
            if (!detail::numerically_positive(v1)) continue;
            if (e1->label != edge_label::minus || e2->label != edge_label::plus) {
              return condition_verdict::failure(
                  std::string(part_name(p)) + " members " + v1.str() + " < " + v2.str() +
                  " both meet " + part_name(q) + " " + w.str() + " with labels '" +
                  label_char(e1->label) + "'/'" + label_char(e2->label) + "'");
            }
          }
        }
      }
    }
  }
  return condition_verdict::ok();
}

/// 5(e): a vertex with both a plus and a minus edge also has a zero edge.
inline condition_verdict check_c5e_purple_between(const bit_multigraph& g) {
  for (graph_part p : {graph_part::a, graph_part::b}) {
    for (const vertex_index& v : g.part(p)) {
      bool plus = false, minus = false, zero = false;
      for (const bit_edge& e : g.edges) {
        if (detail::end_of(e, p) != v) continue;
        plus = plus || e.label == edge_label::plus;
        minus = minus || e.label == edge_label::minus;
        zero = zero || e.label == edge_label::zero;
      }
      if (plus && minus && !zero) {
        return condition_verdict::failure(std::string(part_name(p)) + " vertex " + v.str() +
                                          " has plus and minus edges but no zero edge");
      }
    }
  }
  return condition_verdict::ok();
}

/// 5(f): a floor set carrying the full complement of n same-labeled edges
/// concentrates them on one member: the maximal one for plus, the minimal
/// one for minus.
inline condition_verdict check_c5f_maximal_same_label(const bit_multigraph& g) {
  int n = infer_half_size(g);
  if (n < 0) return condition_verdict::na();
  for (graph_part p : {graph_part::a, graph_part::b}) {
    for (const floor_set& fs : floor_sets(g, p)) {
      for (edge_label lab : {edge_label::plus, edge_label::minus}) {
        std::vector<vertex_index> attach;
        for (const bit_edge& e : g.edges) {
          const vertex_index& end = detail::end_of(e, p);
          if (end.int_part == fs.floor_value && e.label == lab) attach.push_back(end);
        }
        if (static_cast<int>(attach.size()) != n || attach.empty()) continue;
        const vertex_index& want =
            lab == edge_label::plus ? fs.members.back() : fs.members.front();
        for (const vertex_index& at : attach) {
          if (at != want) {
            return condition_verdict::failure(
                std::string("floor ") + std::to_string(fs.floor_value) + " of " + part_name(p) +
                " holds n '" + label_char(lab) + "' edges but " + at.str() + " is not the " +
                (lab == edge_label::plus ? "maximal" : "minimal") + " member " + want.str());
          }
        }
      }
    }
  }
  return condition_verdict::ok();
}

// ---------------------------------------------------------------------------
// Sweep checks 5(g), 5(h), 5(i)
// ---------------------------------------------------------------------------

namespace detail {

struct sweep_eval {
  bool pass = true;
  std::string witness;
  std::vector<int> missing;
};

/// The walked members of a floor set must meet exactly the intervals between
/// consecutive missing floors: with missing floors m_1 > ... > m_l and
/// m_0 = infinity, the i-th member in walk order is adjacent to precisely
/// the floors strictly between m_i and m_{i-1}; members past the l-th get
/// the sentinel m = -1, forcing empty neighborhoods. Isolated split vertices
/// occupy the empty intervals, which is why the literal reading holds on
/// voided graphs.
inline sweep_eval eval_sweep(const bit_multigraph& g, graph_part p, const floor_set& fs,
                             edge_label lab, bool descending, int n) {
  sweep_eval out;
  std::vector<vertex_index> members = fs.members;  // ascending
  if (descending) std::reverse(members.begin(), members.end());

  std::map<vertex_index, std::set<int>> nb;
  std::set<int> present;
  for (const bit_edge& e : g.edges) {
    if (e.label != lab) continue;
    const vertex_index& end = end_of(e, p);
    if (end.int_part != fs.floor_value) continue;
    int far = end_of(e, other_part(p)).int_part;
    nb[end].insert(far);
    present.insert(far);
  }
  for (int x = n; x >= 0; --x) {
    if (!present.count(x)) out.missing.push_back(x);  // descending
  }

  for (std::size_t i = 0; i < members.size(); ++i) {
    const long long upper =
        i == 0 ? LLONG_MAX : (i - 1 < out.missing.size() ? out.missing[i - 1] : -1);
    const long long lower = i < out.missing.size() ? out.missing[i] : -1;
    std::set<int> expect;
    for (int x = 0; x <= n; ++x) {
      if (x > lower && x < upper) expect.insert(x);
    }
    const std::set<int>& got = nb.count(members[i]) ? nb[members[i]] : std::set<int>{};
    if (got != expect) {
      std::ostringstream os;
      os << "floor " << fs.floor_value << " of " << part_name(p) << ", '" << label_char(lab)
         << "' sweep: member " << members[i].str() << " (walk position " << i + 1
         << ") meets floors {";
      for (int x : got) os << x << ' ';
      os << "} instead of the interval (" << lower << ", "
         << (upper == LLONG_MAX ? std::string("inf") : std::to_string(upper)) << ")";
      out.pass = false;
      out.witness = os.str();
      return out;
    }
  }
  // Members exhausted: any leftover nonempty interval below the walk is fine,
  // it just means this floor set was never split that far.
  return out;
}

}  // namespace detail

inline condition_verdict check_c5g_blue_sweep(const bit_multigraph& g,
                                              std::vector<sweep_gap>* gaps = nullptr) {
  int n = infer_half_size(g);
  if (n < 0) return condition_verdict::na();
  for (graph_part p : {graph_part::a, graph_part::b}) {
    for (const floor_set& fs : floor_sets(g, p)) {
      auto ev = detail::eval_sweep(g, p, fs, edge_label::plus, /*descending=*/true, n);
      if (gaps) gaps->push_back({p, fs.floor_value, edge_label::plus, ev.missing});
      if (!ev.pass) return condition_verdict::failure(ev.witness);
    }
  }
  return condition_verdict::ok();
}

inline condition_verdict check_c5h_red_sweep(const bit_multigraph& g,
                                             std::vector<sweep_gap>* gaps = nullptr) {
  int n = infer_half_size(g);
  if (n < 0) return condition_verdict::na();
  for (graph_part p : {graph_part::a, graph_part::b}) {
    for (const floor_set& fs : floor_sets(g, p)) {
      auto ev = detail::eval_sweep(g, p, fs, edge_label::minus, /*descending=*/false, n);
      if (gaps) gaps->push_back({p, fs.floor_value, edge_label::minus, ev.missing});
      if (!ev.pass) return condition_verdict::failure(ev.witness);
    }
  }
  return condition_verdict::ok();
}

/// 5(i): the zero floor's sweep over its zero edges, minimality of the
/// zero-zero edge's endpoints, and the rule that a vertex reached from a
/// zero vertex caps minus edges above it and plus edges below it within its
/// floor set.
inline condition_verdict check_c5i_purple_sweep(const bit_multigraph& g,
                                                std::vector<sweep_gap>* gaps = nullptr) {
  int n = infer_half_size(g);
  if (n < 0) return condition_verdict::na();

  for (graph_part p : {graph_part::a, graph_part::b}) {
    auto floors = floor_sets(g, p);
    const floor_set* zero = detail::find_floor(floors, 0);
    auto ev = detail::eval_sweep(g, p, *zero, edge_label::zero, /*descending=*/true, n);
    if (gaps) gaps->push_back({p, 0, edge_label::zero, ev.missing});
    if (!ev.pass) return condition_verdict::failure(ev.witness);
  }

  // Zero-zero adjacency joins the minimal members.
  {
    auto floors_a = floor_sets(g, graph_part::a);
    auto floors_b = floor_sets(g, graph_part::b);
    const floor_set* za = detail::find_floor(floors_a, 0);
    const floor_set* zb = detail::find_floor(floors_b, 0);
    for (const bit_edge& e : g.edges) {
      if (!e.a.zero_floor() || !e.b.zero_floor()) continue;
      if (e.a != za->members.front() || e.b != zb->members.front()) {
        return condition_verdict::failure("zero-zero edge joins " + e.a.str() + " and " +
                                          e.b.str() + " which are not both minimal in their floor");
      }
    }
  }

  // Crossing a zero edge into a floor set splits it: members above the
  // reached vertex carry no minus edge, members below no plus edge.
  for (graph_part p : {graph_part::a, graph_part::b}) {
    const graph_part q = other_part(p);
    auto floors_q = floor_sets(g, q);
    for (const bit_edge& e : g.edges) {
      if (e.label != edge_label::zero) continue;
      if (!detail::end_of(e, p).zero_floor()) continue;
      const vertex_index& x = detail::end_of(e, q);
      const floor_set* fs = detail::find_floor(floors_q, x.int_part);
      for (const vertex_index& y : fs->members) {
        if (y == x) continue;
        for (const bit_edge& f : g.edges) {
          if (detail::end_of(f, q) != y) continue;
          if (y > x && f.label == edge_label::minus) {
            return condition_verdict::failure(
                std::string(part_name(q)) + " " + y.str() + " sits above the zero-reached " +
                x.str() + " in floor " + std::to_string(x.int_part) + " yet has a minus edge");
          }
          if (y < x && f.label == edge_label::plus) {
            return condition_verdict::failure(
                std::string(part_name(q)) + " " + y.str() + " sits below the zero-reached " +
                x.str() + " in floor " + std::to_string(x.int_part) + " yet has a plus edge");
          }
        }
      }
    }
  }
  return condition_verdict::ok();
}

// ---------------------------------------------------------------------------
// Aggregate
// ---------------------------------------------------------------------------

inline condition_report check_all(const bit_multigraph& g) {
  condition_report rep;
  rep.verdicts[condition_id::c1_squareness] = check_c1_squareness(g, &rep.n);
  rep.verdicts[condition_id::c2_word_length] = check_c2_word_length(g);
  rep.verdicts[condition_id::c3_connectivity] = check_c3_connectivity(g);

  if (rep.n < 0) {
    for (condition_id id : all_conditions()) {
      if (!rep.verdicts.count(id)) rep.verdicts[id] = condition_verdict::na();
    }
    return rep;
  }

  rep.verdicts[condition_id::c4_edge_vertex_count] = check_c4_count(g);

  auto merge = [](condition_verdict acc, condition_verdict next) {
    return acc.kind == verdict_kind::fail ? acc : next;
  };

  condition_verdict v5a = check_c5a_zero_floor(g, graph_part::a);
  v5a = merge(v5a, check_c5a_zero_floor(g, graph_part::b));
  rep.verdicts[condition_id::c5a_zero_floor_edges] = v5a;

  condition_verdict v5b = condition_verdict::ok();
  for (graph_part p : {graph_part::a, graph_part::b}) {
    for (int k = 1; k <= rep.n; ++k) {
      v5b = merge(v5b, check_c5b_nonzero_floor(g, p, k));
    }
  }
  rep.verdicts[condition_id::c5b_nonzero_floor_edges] = v5b;

  rep.verdicts[condition_id::c5c_no_doubles] = check_c5c_no_doubles(g);
  rep.verdicts[condition_id::c5d_blue_above_red] = check_c5d_blue_above_red(g);
  rep.verdicts[condition_id::c5e_purple_in_between] = check_c5e_purple_between(g);
  rep.verdicts[condition_id::c5f_maximal_same_label] = check_c5f_maximal_same_label(g);
  rep.verdicts[condition_id::c5g_blue_sweep] = check_c5g_blue_sweep(g, &rep.sweep_gaps);
  rep.verdicts[condition_id::c5h_red_sweep] = check_c5h_red_sweep(g, &rep.sweep_gaps);
  rep.verdicts[condition_id::c5i_purple_sweep] = check_c5i_purple_sweep(g, &rep.sweep_gaps);

  // Companion counts for the inequality clauses of 5(a)/5(b): the literal
  // size-one tallies, the nonzero-only tally the verdict uses for 5(b), and
  // the non-isolated variant. These coincide on grid-derived graphs.
  {
    nlohmann::json alt;
    for (graph_part p : {graph_part::a, graph_part::b}) {
      auto floors = floor_sets(g, p);
      alt[part_name(p)] = {
          {"size_one_floors", detail::count_size_one_floors(floors, false)},
          {"size_one_nonzero_floors", detail::count_size_one_floors(floors, true)},
          {"size_one_non_isolated_floors",
           detail::count_size_one_floors_non_isolated(g, floors, p)},
      };
    }
    const long long n = rep.n;
    alt["e_plus_k"] = static_cast<long long>(g.edges.size() + g.part_a.size());
    alt["triangular_base"] = 2 * n + 1;
    alt["triangular_plus_one"] = (2 * n + 1) * (2 * n + 2) / 2 + 1;
    rep.aux = alt;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

inline nlohmann::json condition_report_to_json(const condition_report& rep) {
  nlohmann::json conditions;
  for (const auto& [id, v] : rep.verdicts) {
    nlohmann::json jv{{"verdict", v.kind == verdict_kind::pass
                                      ? "pass"
                                      : (v.kind == verdict_kind::fail ? "fail" : "n/a")}};
    if (!v.witness.empty()) jv["witness"] = v.witness;
    conditions[condition_name(id)] = jv;
  }
  nlohmann::json gaps = nlohmann::json::array();
  for (const sweep_gap& sg : rep.sweep_gaps) {
    gaps.push_back({{"part", part_name(sg.part)},
                    {"floor", sg.floor_value},
                    {"label", std::string(1, label_char(sg.label))},
                    {"missing", sg.missing}});
  }
  nlohmann::json out{{"n", rep.n},
                     {"overall", rep.overall()},
                     {"conditions", conditions},
                     {"sweep_gaps", gaps}};
  if (!rep.aux.is_null()) out["aux"] = rep.aux;
  return out;
}

inline std::string condition_report_to_text(const condition_report& rep) {
  std::ostringstream os;
  os << "n = " << rep.n << "\n";
  for (condition_id id : all_conditions()) {
    const condition_verdict& v = rep.verdicts.at(id);
    os << "  " << condition_name(id) << ": "
       << (v.kind == verdict_kind::pass ? "pass"
                                        : (v.kind == verdict_kind::fail ? "FAIL" : "n/a"));
    if (!v.witness.empty()) os << "  (" << v.witness << ")";
    os << "\n";
  }
  os << "overall: " << (rep.overall() ? "pass" : "FAIL") << "\n";
  return os.str();
}

}  // namespace xw
