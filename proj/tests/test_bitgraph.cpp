#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "xw/bitgraph.hpp"
#include "xw/enumeration.hpp"
#include "xw/voiding.hpp"

using namespace xw;
using xw::vertex_index;

namespace {

vertex_index vi(const char* s) { return vertex_index::parse(s); }

bit_multigraph pipeline(const grid& g) {
  return crossword_multigraph(fundamental(build_licn(g)));
}

/// Renames fractional digit strings order-preservingly, for the
/// reindexing-invariance property.
bit_multigraph stretch_fracs(const bit_multigraph& g) {
  auto stretch = [](vertex_index v) {
    std::string frac;
    for (char d : v.frac) {
      frac += d;
      frac += '5';
    }
    return vertex_index{v.int_part, frac};
  };
  bit_multigraph out;
  for (const vertex_index& v : g.part_a) out.part_a.push_back(stretch(v));
  for (const vertex_index& v : g.part_b) out.part_b.push_back(stretch(v));
  for (const bit_edge& e : g.edges) {
    out.edges.push_back({stretch(e.a), stretch(e.b), e.label, e.cell});
  }
  out.normalize();
  return out;
}

}  // namespace

TEST_CASE("validate_bit_multigraph accepts the template") {
  for (int n = 0; n <= 4; ++n) {
    auto rep = validate_bit_multigraph(unvoided_graph(n));
    CHECK(rep.valid());
  }
}

TEST_CASE("validate_bit_multigraph rejects duplicated zero edges") {
  bit_multigraph g = unvoided_graph(1);
  g.edges.push_back({vi("0"), vi("1"), edge_label::zero, {}});
  g.normalize();
  auto rep = validate_bit_multigraph(g);
  CHECK_FALSE(rep.zero_edge_rules);
}

TEST_CASE("validate_bit_multigraph rejects same-label doubles") {
  bit_multigraph g = unvoided_graph(2);
  g.edges.push_back({vi("1"), vi("2"), edge_label::plus, {}});
  g.normalize();
  auto rep = validate_bit_multigraph(g);
  CHECK_FALSE(rep.double_edge_rule);
}

TEST_CASE("validate_bit_multigraph flags structural problems") {
  bit_multigraph g;
  g.part_a = {vi("0"), vi("1")};
  g.part_b = {vi("0")};
  auto rep = validate_bit_multigraph(g);
  CHECK_FALSE(rep.balanced);

  bit_multigraph h;
  h.part_a = {vi("1"), vi("1.0")};  // prefix pair
  h.part_b = {vi("0"), vi("1")};
  auto hr = validate_bit_multigraph(h);
  CHECK_FALSE(hr.indices_distinct);
  CHECK_FALSE(hr.zero_vertex_present);  // A has no zero vertex

  bit_multigraph z = unvoided_graph(1);
  z.edges.push_back({vi("0"), vi("1"), edge_label::plus, {}});
  z.normalize();
  CHECK_FALSE(validate_bit_multigraph(z).zero_edge_rules);

  bit_multigraph w = unvoided_graph(2);
  w.edges.push_back({vi("1"), vi("2"), edge_label::zero, {}});
  w.normalize();
  CHECK_FALSE(validate_bit_multigraph(w).double_edge_rule);
}

TEST_CASE("floor sets partition each part") {
  auto fs = floor_sets(unvoided_graph(3), graph_part::a);
  REQUIRE(fs.size() == 4);
  for (int k = 0; k < 4; ++k) {
    CHECK(fs[k].floor_value == k);
    CHECK(fs[k].members.size() == 1);
  }

  // Voiding splits members inside their floor set.
  bit_multigraph g = unvoided_graph(3);
  g = void_edge(g, edge_for_cell(g, {1, 2}));
  auto fa = floor_sets(g, graph_part::a);
  REQUIRE(fa.size() == 4);
  CHECK(fa[2].members == std::vector<vertex_index>{vi("2.0"), vi("2.1")});

  std::size_t total = 0;
  for (const auto& f : fa) total += f.members.size();
  CHECK(total == g.part_a.size());
}

TEST_CASE("canonicalize is idempotent and collapses reindexings") {
  std::mt19937_64 rng(57);
  for (int rep = 0; rep < 30; ++rep) {
    grid g = xwtest::random_symmetric_grid(3, rng);
    bit_multigraph m = voided_from_grid(g);
    bit_multigraph c = canonicalize(m);
    CHECK(canonicalize(c).part_a == c.part_a);
    CHECK(canonicalize(c).edges == c.edges);
    // An order-preserving renaming of the fractions lands on the same form.
    CHECK(equivalent(stretch_fracs(m), m, false));
  }
  for (int n = 0; n <= 3; ++n) {
    bit_multigraph t = unvoided_graph(n);
    CHECK(canonicalize(t).part_a == t.part_a);
    CHECK(canonicalize(t).part_b == t.part_b);
  }
}

TEST_CASE("canonical fractions stay prefix-free in wide floor sets") {
  CHECK(canonical_frac(0, 1).empty());
  CHECK(canonical_frac(0, 2) == "0");
  CHECK(canonical_frac(9, 10) == "9");
  CHECK(canonical_frac(0, 11) == "00");
  CHECK(canonical_frac(10, 11) == "10");
  for (std::size_t size : {11u, 25u, 101u}) {
    std::vector<vertex_index> made;
    for (std::size_t k = 0; k < size; ++k)
      made.push_back(vertex_index{1, canonical_frac(k, size)});
    for (std::size_t k = 1; k < size; ++k) {
      CHECK(made[k - 1] < made[k]);
      CHECK_FALSE(prefix_related(made[k - 1], made[k]));
    }
  }
}

TEST_CASE("equivalent is reflexive and honors the isolated flag") {
  bit_multigraph g = pipeline(parse_grid("....#\n.....\n.....\n.....\n#...."));
  CHECK(equivalent(g, g, false));
  CHECK(equivalent(g, g, true));

  bit_multigraph h = g;
  h.part_a.push_back(vi("7"));
  h.part_b.push_back(vi("7"));
  h.normalize();
  CHECK(equivalent(g, h, true));
  CHECK_FALSE(equivalent(g, h, false));
}

TEST_CASE("equivalent is symmetric and transitive") {
  std::mt19937_64 rng(67);
  for (int rep = 0; rep < 15; ++rep) {
    grid g = xwtest::random_symmetric_grid(2, rng);
    bit_multigraph a = voided_from_grid(g);
    bit_multigraph b = stretch_fracs(a);
    bit_multigraph c = stretch_fracs(b);
    CHECK(equivalent(a, b, false));
    CHECK(equivalent(b, a, false));
    CHECK(equivalent(b, c, false));
    CHECK(equivalent(a, c, false));
  }
}

TEST_CASE("equivalent distinguishes labels and connections") {
  bit_multigraph g = unvoided_graph(2);
  bit_multigraph h = unvoided_graph(2);
  // Swap one plus edge for a second copy of a minus edge.
  for (bit_edge& e : h.edges) {
    if (e.a == vi("1") && e.b == vi("2") && e.label == edge_label::plus) {
      e.label = edge_label::minus;
    }
  }
  h.normalize();
  CHECK_FALSE(equivalent(g, h, false));
}

TEST_CASE("reconstruct_grid inverts the template") {
  for (int n = 0; n <= 5; ++n) {
    CHECK(reconstruct_grid(unvoided_graph(n)) == grid::filled(n));
  }
}

TEST_CASE("reconstruct_grid maps the missing zero-zero edge to a black center") {
  grid g = parse_grid(".....\n.....\n..#..\n.....\n.....");
  bit_multigraph m = pipeline(g);
  grid back = reconstruct_grid(m);
  CHECK_FALSE(back.white({0, 0}));
  CHECK(back == g);
}

TEST_CASE("reconstruct_grid roundtrips every symmetric 5x5 through the fold") {
  // All 2^13 fundamental void masks; the fold pipeline reconstructs the grid
  // exactly whenever the floor structure survives (it always does for valid
  // grids, and for almost all symmetric ones).
  const std::uint64_t total = 1ULL << region_bit_count(2);
  std::uint64_t exact = 0, degenerate = 0;
  for (std::uint64_t v = 0; v < total; ++v) {
    grid g = mask_to_grid(void_mask::from_value(2, v));
    try {
      if (reconstruct_grid(pipeline(g)) == g) {
        ++exact;
        continue;
      }
    } catch (const error&) {
    }
    // Masks with whole rows or columns of voids lose floors in the fold and
    // come back smaller or not at all; none of them are valid grids.
    ++degenerate;
    CHECK_FALSE(validate(g).valid());
  }
  CHECK(exact + degenerate == total);
  CHECK(exact > 0);
  // Every valid grid must be in the exact set.
  std::uint64_t valid = 0;
  for (std::uint64_t v = 0; v < total; ++v) {
    grid g = mask_to_grid(void_mask::from_value(2, v));
    if (!validate(g).valid()) continue;
    ++valid;
    CHECK(reconstruct_grid(pipeline(g)) == g);
  }
  CHECK(valid > 0);
}

TEST_CASE("reconstruct_grid handles unbalanced folds of valid grids") {
  // A boundary-adjacent void can isolate a split on one side only, so the
  // fold of a valid grid may have parts of different sizes. Reconstruction
  // relies on the floor structure, not on balance.
  grid g = grid::filled(5);
  g.set({5, 2}, square::black);
  g.set({-5, -2}, square::black);
  REQUIRE(validate(g).valid());
  bit_multigraph fold = pipeline(g);
  CHECK(fold.part_a.size() == 6);
  CHECK(fold.part_b.size() == 7);
  CHECK_FALSE(validate_bit_multigraph(fold).balanced);
  CHECK(reconstruct_grid(fold) == g);
  // The voided-pipeline graph stays balanced and reconstructs too.
  CHECK(reconstruct_grid(voided_from_grid(g)) == g);
}

TEST_CASE("reconstruct_grid error paths") {
  bit_multigraph g;
  g.part_a = {vi("0"), vi("1")};
  g.part_b = {vi("0")};
  CHECK_THROWS_AS(reconstruct_grid(g), error);  // floor counts disagree

  bit_multigraph far;
  far.part_a = {vi("0"), vi("2")};
  far.part_b = {vi("0"), vi("2")};
  far.edges = {{vi("2"), vi("2"), edge_label::plus, {}}};
  try {
    reconstruct_grid(far);
    FAIL("expected OutOfRange");
  } catch (const error& e) {
    CHECK(e.code() == errc::out_of_range);
  }

  bit_multigraph clash = unvoided_graph(1);
  clash.edges.push_back({vi("1"), vi("1"), edge_label::plus, {}});
  clash.normalize();
  try {
    reconstruct_grid(clash);
    FAIL("expected CellCollision");
  } catch (const error& e) {
    CHECK(e.code() == errc::cell_collision);
  }
}

TEST_CASE("bitgraph json roundtrip") {
  std::mt19937_64 rng(61);
  for (int rep = 0; rep < 10; ++rep) {
    grid g = xwtest::random_symmetric_grid(2, rng);
    bit_multigraph m = voided_from_grid(g);
    bit_multigraph back = bitgraph_from_json(bitgraph_to_json(m));
    CHECK(back.part_a == m.part_a);
    CHECK(back.part_b == m.part_b);
    CHECK(back.edges == m.edges);
  }
  nlohmann::json j = bitgraph_to_json(unvoided_graph(2));
  CHECK(j["n"] == 2);
  CHECK(j["A"].size() == 3);
  CHECK(j["edges"].size() == 13);

  CHECK_THROWS_AS(bitgraph_from_json(nlohmann::json::object()), error);
  nlohmann::json dangling{{"A", {"0"}},
                          {"B", {"0"}},
                          {"edges", {{{"a", "0"}, {"b", "1"}, {"label", "0"}}}}};
  CHECK_THROWS_AS(bitgraph_from_json(dangling), error);
}

TEST_CASE("bitgraph dot export uses the color convention") {
  std::string dot = bitgraph_to_dot(unvoided_graph(2));
  CHECK(dot.find("color=blue") != std::string::npos);
  CHECK(dot.find("color=red") != std::string::npos);
  CHECK(dot.find("color=purple") != std::string::npos);
}
