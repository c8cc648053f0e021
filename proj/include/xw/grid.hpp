#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "xw/error.hpp"

namespace xw {

/// Centered cell coordinates: `i` is the column, `j` the row, the center
/// cell is (0,0) and the grid spans [-n, n] in both directions.
struct coord {
  int i = 0;
  int j = 0;

  auto operator<=>(const coord&) const = default;
};

inline coord rotate180(coord c) { return {-c.i, -c.j}; }

enum class square : std::uint8_t { white, black };

/// A (2n+1) x (2n+1) matrix of white cells and black voids.
struct grid {
  int n = 0;
  std::vector<square> squares;  // row-major, top row (j=+n) first, i ascending

  int side() const { return 2 * n + 1; }

  static std::size_t offset(int n, coord c) {
    return static_cast<std::size_t>(n - c.j) * (2 * n + 1) + static_cast<std::size_t>(c.i + n);
  }

  square at(coord c) const { return squares[offset(n, c)]; }
  void set(coord c, square s) { squares[offset(n, c)] = s; }
  bool white(coord c) const { return at(c) == square::white; }

  bool in_bounds(coord c) const { return c.i >= -n && c.i <= n && c.j >= -n && c.j <= n; }

  bool operator==(const grid&) const = default;

  static grid filled(int n, square s = square::white) {
    grid g{n, {}};
    g.squares.assign(static_cast<std::size_t>(2 * n + 1) * (2 * n + 1), s);
    return g;
  }
};

enum class orientation : std::uint8_t { across, down };

inline const char* orientation_name(orientation o) {
  return o == orientation::across ? "across" : "down";
}

/// A maximal run of white cells along one row (across) or column (down).
/// Single cells count as answers.
struct answer {
  orientation dir = orientation::across;
  int line = 0;  // row number for across, column number for down
  std::vector<coord> coords;

  int length() const { return static_cast<int>(coords.size()); }
  bool operator==(const answer&) const = default;
};

// ---------------------------------------------------------------------------
// Text and JSON forms
// ---------------------------------------------------------------------------

/// Parses the '.'/'#' text form. Row 0 of the text is the top of the grid
/// (j = +n); characters map to columns i = -n .. n left to right.
inline grid parse_grid(std::string_view text) {
  std::vector<std::string_view> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      rows.push_back(text.substr(start));
      break;
    }
    rows.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  if (!rows.empty() && rows.back().empty()) rows.pop_back();  // optional trailing newline

  const std::size_t side = rows.size();
  for (std::size_t r = 0; r < side; ++r) {
    if (rows[r].size() != side) {
      throw error(errc::non_square, "row " + std::to_string(r) + " has width " +
                                        std::to_string(rows[r].size()) + ", expected " +
                                        std::to_string(side));
    }
  }
  if (side == 0 || side % 2 == 0) {
    throw error(errc::even_side, "side length " + std::to_string(side) + " is not odd");
  }

  grid g;
  g.n = static_cast<int>(side / 2);
  g.squares.resize(side * side);
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) {
      char ch = rows[r][c];
      if (ch == '.') {
        g.squares[r * side + c] = square::white;
      } else if (ch == '#') {
        g.squares[r * side + c] = square::black;
      } else {
        throw error(errc::invalid_character, std::string("character '") + ch + "' at row " +
                                                 std::to_string(r) + ", column " + std::to_string(c));
      }
    }
  }
  return g;
}

inline std::string serialize_grid(const grid& g) {
  std::string out;
  const int side = g.side();
  out.reserve(static_cast<std::size_t>(side) * (side + 1));
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) {
      out += g.squares[static_cast<std::size_t>(r) * side + c] == square::white ? '.' : '#';
    }
    out += '\n';
  }
  return out;
}

inline nlohmann::json grid_to_json(const grid& g) {
  nlohmann::json voids = nlohmann::json::array();
  for (int j = g.n; j >= -g.n; --j) {
    for (int i = -g.n; i <= g.n; ++i) {
      if (!g.white({i, j})) voids.push_back({i, j});
    }
  }
  return {{"n", g.n}, {"voids", voids}};
}

inline grid grid_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw error(errc::bad_input, "grid json needs an integer field 'n'");
  }
  int n = j["n"].get<int>();
  if (n < 0 || n > 1000) throw error(errc::bad_input, "grid json: n out of range");
  grid g = grid::filled(n);
  if (j.contains("voids")) {
    for (const auto& v : j["voids"]) {
      if (!v.is_array() || v.size() != 2) throw error(errc::bad_input, "void entries must be [i,j]");
      coord c{v[0].get<int>(), v[1].get<int>()};
      if (!g.in_bounds(c)) throw error(errc::out_of_range, "void (" + std::to_string(c.i) + "," +
                                                               std::to_string(c.j) + ") outside grid");
      g.set(c, square::black);
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Answers
// ---------------------------------------------------------------------------

/// Every white cell lies in exactly one across answer and one down answer.
inline std::vector<answer> answers(const grid& g) {
  std::vector<answer> out;
  const int n = g.n;
  for (int j = n; j >= -n; --j) {
    answer run{orientation::across, j, {}};
    for (int i = -n; i <= n + 1; ++i) {
      if (i <= n && g.white({i, j})) {
        run.coords.push_back({i, j});
      } else if (!run.coords.empty()) {
        out.push_back(run);
        run.coords.clear();
      }
    }
  }
  for (int i = -n; i <= n; ++i) {
    answer run{orientation::down, i, {}};
    for (int j = n; j >= -n - 1; --j) {
      if (j >= -n && g.white({i, j})) {
        run.coords.push_back({i, j});
      } else if (!run.coords.empty()) {
        out.push_back(run);
        run.coords.clear();
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Structure rules
// ---------------------------------------------------------------------------

enum class rule : std::uint8_t {
  connectivity,
  rotational_symmetry,
  answer_length,
  keyed_squares,
  full_dimension,
};

inline const char* rule_name(rule r) {
  switch (r) {
    case rule::connectivity: return "Connectivity";
    case rule::rotational_symmetry: return "RotationalSymmetry";
    case rule::answer_length: return "AnswerLength";
    case rule::keyed_squares: return "KeyedSquares";
    case rule::full_dimension: return "FullDimension";
  }
  return "?";
}

struct rule_verdict {
  bool pass = true;
  std::optional<coord> coord_witness;
  std::optional<answer> answer_witness;
};

struct structure_report {
  rule_verdict connectivity;
  rule_verdict rotational_symmetry;
  rule_verdict answer_length;
  rule_verdict keyed_squares;
  rule_verdict full_dimension;

  bool valid() const {
    return connectivity.pass && rotational_symmetry.pass && answer_length.pass &&
           keyed_squares.pass && full_dimension.pass;
  }
};

inline bool is_symmetric(const grid& g) {
  for (int j = g.n; j >= -g.n; --j) {
    for (int i = -g.n; i <= g.n; ++i) {
      if (g.at({i, j}) != g.at(rotate180({i, j}))) return false;
    }
  }
  return true;
}

/// Checks the five structure rules. A grid with no white cells fails
/// connectivity; rule failures are verdicts, never exceptions.
inline structure_report validate(const grid& g) {
  structure_report rep;
  const int n = g.n;

  // Connectivity: flood fill from the first white cell.
  {
    std::vector<coord> whites;
    for (int j = n; j >= -n; --j) {
      for (int i = -n; i <= n; ++i) {
        if (g.white({i, j})) whites.push_back({i, j});
      }
    }
    if (whites.empty()) {
      rep.connectivity.pass = false;
    } else {
      std::vector<char> seen(g.squares.size(), 0);
      std::vector<coord> stack{whites.front()};
      seen[grid::offset(n, whites.front())] = 1;
      std::size_t reached = 0;
      while (!stack.empty()) {
        coord c = stack.back();
        stack.pop_back();
        ++reached;
        const coord nb[4] = {{c.i + 1, c.j}, {c.i - 1, c.j}, {c.i, c.j + 1}, {c.i, c.j - 1}};
        for (coord m : nb) {
          if (g.in_bounds(m) && g.white(m) && !seen[grid::offset(n, m)]) {
            seen[grid::offset(n, m)] = 1;
            stack.push_back(m);
          }
        }
      }
      if (reached != whites.size()) {
        rep.connectivity.pass = false;
        for (coord c : whites) {
          if (!seen[grid::offset(n, c)]) {
            rep.connectivity.coord_witness = c;
            break;
          }
        }
      }
    }
  }

  for (int j = n; j >= -n && rep.rotational_symmetry.pass; --j) {
    for (int i = -n; i <= n; ++i) {
      if (g.at({i, j}) != g.at(rotate180({i, j}))) {
        rep.rotational_symmetry.pass = false;
        rep.rotational_symmetry.coord_witness = coord{i, j};
        break;
      }
    }
  }

  const std::vector<answer> all = answers(g);
  for (const answer& a : all) {
    if (a.length() < 3) {
      rep.answer_length.pass = false;
      rep.answer_length.answer_witness = a;
      break;
    }
  }

  // Keyed squares: implied by the maximal-run construction, reported anyway.
  {
    std::vector<char> in_across(g.squares.size(), 0), in_down(g.squares.size(), 0);
    for (const answer& a : all) {
      for (coord c : a.coords) {
        (a.dir == orientation::across ? in_across : in_down)[grid::offset(n, c)] = 1;
      }
    }
    for (int j = n; j >= -n && rep.keyed_squares.pass; --j) {
      for (int i = -n; i <= n; ++i) {
        coord c{i, j};
        if (g.white(c) && !(in_across[grid::offset(n, c)] && in_down[grid::offset(n, c)])) {
          rep.keyed_squares.pass = false;
          rep.keyed_squares.coord_witness = c;
          break;
        }
      }
    }
  }

  // Full dimension: no boundary row or column may be entirely black.
  {
    auto line_all_black = [&](bool row, int fixed) {
      for (int t = -n; t <= n; ++t) {
        coord c = row ? coord{t, fixed} : coord{fixed, t};
        if (g.white(c)) return false;
      }
      return true;
    };
    for (int s : {n, -n}) {
      if (line_all_black(true, s)) {
        rep.full_dimension.pass = false;
        rep.full_dimension.coord_witness = coord{0, s};
      }
      if (line_all_black(false, s)) {
        rep.full_dimension.pass = false;
        rep.full_dimension.coord_witness = coord{s, 0};
      }
    }
  }

  return rep;
}

// ---------------------------------------------------------------------------
// Fundamental region
// ---------------------------------------------------------------------------

inline bool in_fundamental_region(coord c) { return c.j > 0 || (c.j == 0 && c.i >= 0); }

/// The positive rows plus the nonnegative half of row 0: one representative
/// per 180-degree orbit. Cardinality 2n^2 + 2n + 1.
inline std::set<coord> fundamental_region(int n) {
  std::set<coord> out;
  for (int j = n; j >= 1; --j) {
    for (int i = -n; i <= n; ++i) out.insert({i, j});
  }
  for (int i = 0; i <= n; ++i) out.insert({i, 0});
  return out;
}

inline nlohmann::json structure_report_to_json(const structure_report& rep) {
  auto verdict = [](const rule_verdict& v) {
    nlohmann::json j{{"pass", v.pass}};
    if (v.coord_witness) j["witness"] = {v.coord_witness->i, v.coord_witness->j};
    if (v.answer_witness) {
      nlohmann::json coords = nlohmann::json::array();
      for (coord c : v.answer_witness->coords) coords.push_back({c.i, c.j});
      j["witness"] = {{"orientation", orientation_name(v.answer_witness->dir)},
                      {"line", v.answer_witness->line},
                      {"coords", coords}};
    }
    return j;
  };
  return {{"valid", rep.valid()},
          {"Connectivity", verdict(rep.connectivity)},
          {"RotationalSymmetry", verdict(rep.rotational_symmetry)},
          {"AnswerLength", verdict(rep.answer_length)},
          {"KeyedSquares", verdict(rep.keyed_squares)},
          {"FullDimension", verdict(rep.full_dimension)}};
}

}  // namespace xw
