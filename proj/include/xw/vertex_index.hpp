#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include "xw/error.hpp"

namespace xw {

/// Vertex index of a bit multigraph: a nonnegative integer part plus an
/// ordered string of fractional digits. Ordering compares the integer parts
/// numerically and then the digit strings position by position, a missing
/// digit sorting before '0'. Within one vertex part no index's digit string
/// is a prefix of another's, which makes this order agree with the numeric
/// value of the decimal the index denotes.
struct vertex_index {
  int int_part = 0;
  std::string frac;

  auto operator<=>(const vertex_index&) const = default;

  bool zero_floor() const { return int_part == 0; }

  /// The index of a split child: one more trailing digit.
  vertex_index child(char digit) const { return vertex_index{int_part, frac + digit}; }

  std::string str() const {
    std::string s = std::to_string(int_part);
    if (!frac.empty()) {
      s += '.';
      s += frac;
    }
    return s;
  }

  static vertex_index parse(std::string_view text) {
    auto fail = [&] { throw error(errc::bad_input, "malformed index '" + std::string(text) + "'"); };
    if (text.empty()) fail();
    std::size_t pos = 0;
    long long ip = 0;
    while (pos < text.size() && text[pos] != '.') {
      char c = text[pos++];
      if (c < '0' || c > '9') fail();
      ip = ip * 10 + (c - '0');
      if (ip > 1'000'000) fail();
    }
    if (pos == 0) fail();
    vertex_index out{static_cast<int>(ip), {}};
    if (pos < text.size()) {
      ++pos;  // skip '.'
      if (pos == text.size()) fail();
      for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c < '0' || c > '9') fail();
        out.frac += c;
      }
    }
    return out;
  }
};

/// True when `p.frac` is a proper prefix of `q.frac` or vice versa (same
/// integer part). Such a pair has no consistent numeric order.
inline bool prefix_related(const vertex_index& p, const vertex_index& q) {
  if (p.int_part != q.int_part) return false;
  const std::string& a = p.frac;
  const std::string& b = q.frac;
  if (a.size() == b.size()) return false;
  const std::string& shorter = a.size() < b.size() ? a : b;
  const std::string& longer = a.size() < b.size() ? b : a;
  return longer.compare(0, shorter.size(), shorter) == 0;
}

enum class edge_label : unsigned char { minus, zero, plus };

inline char label_char(edge_label l) {
  switch (l) {
    case edge_label::minus: return '-';
    case edge_label::zero: return '0';
    case edge_label::plus: return '+';
  }
  return '?';
}

inline edge_label label_from_char(char c) {
  switch (c) {
    case '-': return edge_label::minus;
    case '0': return edge_label::zero;
    case '+': return edge_label::plus;
  }
  throw error(errc::bad_input, std::string("unknown edge label '") + c + "'");
}

/// Edge color used by the DOT exports: blue '+', purple '0', red '-'.
inline const char* label_color(edge_label l) {
  switch (l) {
    case edge_label::minus: return "red";
    case edge_label::zero: return "purple";
    case edge_label::plus: return "blue";
  }
  return "black";
}

}  // namespace xw
