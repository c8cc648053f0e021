#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "xw/grid.hpp"
#include "xw/vertex_index.hpp"

namespace xw {

/// Index of an answer vertex in the labeled indexed crossword network.
/// Negative rows and columns carry negated indices; the answer through the
/// center cell is the only one whose index is its own negation.
struct signed_index {
  bool neg = false;  // never set on the exact-zero magnitude
  vertex_index mag;

  bool operator==(const signed_index&) const = default;

  std::strong_ordering operator<=>(const signed_index& o) const {
    if (neg != o.neg) return neg ? std::strong_ordering::less : std::strong_ordering::greater;
    if (neg) return o.mag <=> mag;  // more negative sorts first
    return mag <=> o.mag;
  }

  bool is_zero() const { return !neg && mag == vertex_index{}; }

  signed_index negated() const {
    if (is_zero()) return *this;
    return {!neg, mag};
  }

  std::string str() const {
    if (is_zero()) return "0";
    return (neg ? "-" : "+") + mag.str();
  }

  /// Presentation used for the fundamental graph, where a nonzero across
  /// vertex stands for both signs of the original network.
  std::string pm_str() const {
    if (mag == vertex_index{}) return "0";
    return "±" + mag.str();
  }
};

struct licn_edge {
  signed_index across;
  signed_index down;
  edge_label label = edge_label::zero;
  coord cell;
};

/// Labeled indexed crossword network: one vertex per answer, one edge per
/// white cell, edge labels from the sign of the cell's coordinate product.
struct licn {
  int n = 0;
  std::map<signed_index, answer> across;
  std::map<signed_index, answer> down;
  std::vector<licn_edge> edges;
};

/// The network restricted to edges whose cell lies in the fundamental
/// region, keeping only vertices incident to a retained edge.
struct fundamental_graph {
  int n = 0;
  std::map<signed_index, answer> across;
  std::map<signed_index, answer> down;
  std::vector<licn_edge> edges;
};

namespace detail {

/// Fractional digit strings "1".."m" in orientation order, zero padded to a
/// common width so that no string is a prefix of another.
inline std::string ordinal_frac(std::size_t k, std::size_t m) {
  std::string digits = std::to_string(k);
  std::size_t width = std::to_string(m).size();
  return std::string(width - digits.size(), '0') + digits;
}

// Orientation key of an answer: position of its first cell when walking the
// line in orientation order.
inline void assign_line_indices(std::vector<answer*>& line, bool is_across, int line_no,
                                std::map<const answer*, signed_index>& out) {
  auto inner_end = [&](const answer& a) {
    // Cell of the answer closest to the origin along the line.
    int best = 0;
    bool first = true;
    for (coord c : a.coords) {
      int t = is_across ? c.i : c.j;
      if (first || std::abs(t) < std::abs(best)) best = t;
      first = false;
    }
    return best;
  };

  if (line_no != 0) {
    // Whole line sits on one side of the symmetry; orientation order is
    // left-to-right / bottom-to-top for positive lines and reversed for
    // negative ones.
    std::sort(line.begin(), line.end(), [&](const answer* x, const answer* y) {
      int kx = is_across ? x->coords.front().i : x->coords.front().j;
      int ky = is_across ? y->coords.front().i : y->coords.front().j;
      return line_no > 0 ? kx < ky : kx > ky;
    });
    const std::size_t m = line.size();
    for (std::size_t k = 0; k < m; ++k) {
      vertex_index mag{std::abs(line_no), m == 1 ? std::string{} : ordinal_frac(k + 1, m)};
      out[line[k]] = signed_index{line_no < 0, mag};
    }
    return;
  }

  // Line zero is oriented outward from the origin. The answer containing the
  // center takes magnitude zero; answers strictly on the positive side are
  // numbered outward and their mirror images get the negated indices.
  std::vector<answer*> positive, negative;
  for (answer* a : line) {
    bool has_zero = false, has_pos = false;
    for (coord c : a->coords) {
      int t = is_across ? c.i : c.j;
      if (t == 0) has_zero = true;
      if (t > 0) has_pos = true;
    }
    if (has_zero) {
      out[a] = signed_index{false, vertex_index{}};
    } else if (has_pos) {
      positive.push_back(a);
    } else {
      negative.push_back(a);
    }
  }
  auto outward_sort = [&](std::vector<answer*>& v, bool positive_side) {
    std::sort(v.begin(), v.end(), [&](const answer* x, const answer* y) {
      int kx = std::abs(inner_end(*x)), ky = std::abs(inner_end(*y));
      return kx < ky;
    });
    (void)positive_side;
  };
  outward_sort(positive, true);
  outward_sort(negative, false);
  for (std::size_t k = 0; k < positive.size(); ++k) {
    out[positive[k]] = signed_index{false, vertex_index{0, ordinal_frac(k + 1, positive.size())}};
  }
  for (std::size_t k = 0; k < negative.size(); ++k) {
    out[negative[k]] = signed_index{true, vertex_index{0, ordinal_frac(k + 1, negative.size())}};
  }
}

}  // namespace detail

inline edge_label cell_label(coord c) {
  long long p = static_cast<long long>(c.i) * c.j;
  if (p < 0) return edge_label::minus;
  if (p > 0) return edge_label::plus;
  return edge_label::zero;
}

/// Builds the labeled indexed crossword network of a symmetric grid. Only
/// rotational symmetry is required; grids breaking the other structure rules
/// still have a network.
inline licn build_licn(const grid& g) {
  if (!is_symmetric(g)) {
    throw error(errc::asymmetric_grid, "grid lacks 180-degree rotational symmetry");
  }

  licn net;
  net.n = g.n;

  std::vector<answer> all = answers(g);
  std::map<std::pair<orientation, int>, std::vector<answer*>> lines;
  for (answer& a : all) lines[{a.dir, a.line}].push_back(&a);

  std::map<const answer*, signed_index> idx_of;
  for (auto& [key, group] : lines) {
    detail::assign_line_indices(group, key.first == orientation::across, key.second, idx_of);
  }

  // Cell -> containing answer, per orientation.
  std::vector<const answer*> across_at(g.squares.size(), nullptr);
  std::vector<const answer*> down_at(g.squares.size(), nullptr);
  for (const answer& a : all) {
    for (coord c : a.coords) {
      (a.dir == orientation::across ? across_at : down_at)[grid::offset(g.n, c)] = &a;
    }
  }

  for (const answer& a : all) {
    (a.dir == orientation::across ? net.across : net.down)[idx_of.at(&a)] = a;
  }
  for (int j = g.n; j >= -g.n; --j) {
    for (int i = -g.n; i <= g.n; ++i) {
      coord c{i, j};
      if (!g.white(c)) continue;
      const answer* ac = across_at[grid::offset(g.n, c)];
      const answer* dn = down_at[grid::offset(g.n, c)];
      net.edges.push_back({idx_of.at(ac), idx_of.at(dn), cell_label(c), c});
    }
  }
  return net;
}

inline fundamental_graph fundamental(const licn& l) {
  fundamental_graph f;
  f.n = l.n;
  for (const licn_edge& e : l.edges) {
    if (!in_fundamental_region(e.cell)) continue;
    f.edges.push_back(e);
    f.across.emplace(e.across, l.across.at(e.across));
    f.down.emplace(e.down, l.down.at(e.down));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Exports
// ---------------------------------------------------------------------------

namespace detail {

template <typename Graph>
nlohmann::json network_json(const Graph& g, bool pm_across) {
  nlohmann::json across = nlohmann::json::array();
  nlohmann::json down = nlohmann::json::array();
  for (const auto& [idx, a] : g.across) across.push_back(pm_across ? idx.pm_str() : idx.str());
  for (const auto& [idx, a] : g.down) down.push_back(idx.str());
  nlohmann::json edges = nlohmann::json::array();
  for (const licn_edge& e : g.edges) {
    edges.push_back({{"across", pm_across ? e.across.pm_str() : e.across.str()},
                     {"down", e.down.str()},
                     {"label", std::string(1, label_char(e.label))},
                     {"cell", {e.cell.i, e.cell.j}}});
  }
  return {{"n", g.n}, {"across", across}, {"down", down}, {"edges", edges}};
}

template <typename Graph>
std::string network_dot(const Graph& g, const char* name, bool pm_across) {
  std::ostringstream os;
  os << "graph " << name << " {\n  rankdir=LR;\n";
  for (const auto& [idx, a] : g.across) {
    os << "  \"A " << (pm_across ? idx.pm_str() : idx.str()) << "\" [shape=circle];\n";
  }
  for (const auto& [idx, a] : g.down) {
    os << "  \"D " << idx.str() << "\" [shape=square];\n";
  }
  for (const licn_edge& e : g.edges) {
    os << "  \"A " << (pm_across ? e.across.pm_str() : e.across.str()) << "\" -- \"D "
       << e.down.str() << "\" [color=" << label_color(e.label) << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace detail

inline nlohmann::json licn_to_json(const licn& l) { return detail::network_json(l, false); }
inline nlohmann::json fundamental_to_json(const fundamental_graph& f) {
  return detail::network_json(f, true);
}
inline std::string licn_to_dot(const licn& l) { return detail::network_dot(l, "licn", false); }
inline std::string fundamental_to_dot(const fundamental_graph& f) {
  return detail::network_dot(f, "fundamental", true);
}

}  // namespace xw
