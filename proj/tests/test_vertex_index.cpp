#include <doctest.h>

#include <algorithm>
#include <vector>

#include "xw/vertex_index.hpp"

using xw::vertex_index;

TEST_CASE("index ordering compares integer part first") {
  CHECK(vertex_index{1, {}} < vertex_index{2, {}});
  CHECK(vertex_index{2, "9"} < vertex_index{3, {}});
}

TEST_CASE("index ordering on fractional digits is positional") {
  CHECK(vertex_index{1, "1"} < vertex_index{1, "2"});
  CHECK(vertex_index{1, "10"} < vertex_index{1, "2"});   // 0.10 < 0.2
  CHECK(vertex_index{1, "01"} < vertex_index{1, "1"});
  CHECK(vertex_index{1, {}} < vertex_index{1, "0"});     // a split child sorts above its parent slot
  CHECK(vertex_index{2, "0"} < vertex_index{2, "01"});
  CHECK(vertex_index{2, "011"} < vertex_index{2, "1"});
}

TEST_CASE("voiding-style splits preserve relative order") {
  // Splitting 2 into 2.0/2.1 keeps both between 1-land and 3-land.
  vertex_index lo{1, {}}, hi{3, {}}, parent{2, {}};
  CHECK(lo < parent.child('0'));
  CHECK(parent.child('0') < parent.child('1'));
  CHECK(parent.child('1') < hi);
  // Deeper splits nest inside the parent's slot.
  CHECK(parent.child('0').child('1') < parent.child('1'));
  CHECK(parent.child('0') < parent.child('0').child('1'));
}

TEST_CASE("prefix detection") {
  CHECK(xw::prefix_related(vertex_index{1, "0"}, vertex_index{1, "01"}));
  CHECK(xw::prefix_related(vertex_index{1, "01"}, vertex_index{1, "0"}));
  CHECK(xw::prefix_related(vertex_index{1, {}}, vertex_index{1, "1"}));
  CHECK_FALSE(xw::prefix_related(vertex_index{1, "0"}, vertex_index{1, "1"}));
  CHECK_FALSE(xw::prefix_related(vertex_index{1, "0"}, vertex_index{2, "0"}));
  CHECK_FALSE(xw::prefix_related(vertex_index{1, "01"}, vertex_index{1, "00"}));
}

TEST_CASE("index string form roundtrips") {
  for (const vertex_index& v : {vertex_index{0, {}}, vertex_index{3, {}}, vertex_index{1, "01"}, vertex_index{12, "101"}}) {
    CHECK(vertex_index::parse(v.str()) == v);
  }
  CHECK(vertex_index::parse("0").str() == "0");
  CHECK(vertex_index::parse("2.10").frac == "10");
}

TEST_CASE("index parse rejects malformed text") {
  for (const char* bad : {"", ".", "1.", ".5", "-1", "1.2.3", "a", "1a", "1.a"}) {
    CHECK_THROWS_AS(vertex_index::parse(bad), xw::error);
  }
}

TEST_CASE("edge label characters") {
  CHECK(xw::label_char(xw::edge_label::plus) == '+');
  CHECK(xw::label_from_char('-') == xw::edge_label::minus);
  CHECK_THROWS_AS(xw::label_from_char('x'), xw::error);
}
