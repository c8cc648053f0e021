#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "xw/enumeration.hpp"

using namespace xw;

TEST_CASE("region coordinate order is row-major, j descending") {
  auto coords = region_coords(2);
  REQUIRE(coords.size() == 13);
  CHECK(coords.front() == coord{-2, 2});
  CHECK(coords[1] == coord{-1, 2});
  CHECK(coords[5] == coord{-2, 1});
  CHECK(coords[10] == coord{0, 0});
  CHECK(coords.back() == coord{2, 0});
  for (int n = 0; n <= 4; ++n) {
    auto v = region_coords(n);
    CHECK(v.size() == region_bit_count(n));
    CHECK(std::set<coord>(v.begin(), v.end()) == fundamental_region(n));
  }
}

TEST_CASE("mask enumeration counts and order") {
  std::vector<void_mask> masks;
  enumerate_masks(0, [&](const void_mask& m) { masks.push_back(m); });
  CHECK(masks.size() == 2);
  CHECK(masks[0].bits == std::vector<bool>{false});
  CHECK(masks[1].bits == std::vector<bool>{true});

  std::size_t count = 0;
  enumerate_masks(1, [&](const void_mask&) { ++count; });
  CHECK(count == 32);

  CHECK_THROWS_AS(enumerate_masks(4, [](const void_mask&) {}), error);
  std::size_t big = 0;
  CHECK_THROWS_AS(enumerate_masks(4, [&](const void_mask&) { ++big; }, 3), error);
}

TEST_CASE("masks expand to symmetric grids") {
  void_mask m = void_mask::from_value(2, 0b1);  // first region coord (-2,2)
  grid g = mask_to_grid(m);
  CHECK_FALSE(g.white({-2, 2}));
  CHECK_FALSE(g.white({2, -2}));
  CHECK(validate(g).rotational_symmetry.pass);
  CHECK(m.bit_string() == "1000000000000");
}

TEST_CASE("fast validity matches the rule-by-rule validator") {
  for (std::uint64_t v = 0; v < (1ULL << region_bit_count(1)); ++v) {
    grid g = mask_to_grid(void_mask::from_value(1, v));
    std::vector<char> seen(g.squares.size());
    CHECK(detail::grid_valid_fast(g, seen) == validate(g).valid());
  }
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 400; ++rep) {
    int n = 2 + static_cast<int>(rng() % 2);
    grid g = xwtest::random_symmetric_grid(n, rng, 0.2);
    std::vector<char> seen(g.squares.size());
    CHECK(detail::grid_valid_fast(g, seen) == validate(g).valid());
  }
}

TEST_CASE("count_valid_grids small sizes") {
  // The 1x1 white grid has one-cell answers, so nothing at n=0 validates.
  CHECK(count_valid_grids(0) == 0);
  // At 3x3 any void pair shortens a three-cell line; only all-white stands.
  CHECK(count_valid_grids(1) == 1);
  // At 5x5 all voids crowd the corners: singles, dominoes along the top or
  // side, and 2x2 blocks, each with its mirror. Twelve masks survive, and
  // the condition pipeline reproduces the same count below.
  CHECK(count_valid_grids(2) == 12);
  CHECK_THROWS_AS(count_valid_grids(5), error);
}

TEST_CASE("count_valid_grids is chunking independent") {
  CHECK(count_valid_grids(2, 1) == count_valid_grids(2, 3));
  CHECK(count_valid_grids(2, 1) == count_valid_grids(2, 8));
}

TEST_CASE("count_valid_sampled is deterministic") {
  CHECK(count_valid_sampled(2, 500, 42) == count_valid_sampled(2, 500, 42));
}

TEST_CASE("sampled valid grids really validate") {
  std::mt19937_64 rng(2024);
  for (int n = 1; n <= 4; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      void_mask m = sample_valid_mask(n, rng);
      CHECK(validate(mask_to_grid(m)).valid());
    }
  }
}

TEST_CASE("necessity experiment n=1 and n=2 find no mismatch") {
  experiment_result r1 = necessity_experiment(1);
  CHECK(r1.total_examined == 32);
  CHECK(r1.valid_grids == 1);
  CHECK(r1.condition_pass == 1);
  CHECK(r1.mismatches.empty());

  experiment_result r2 = necessity_experiment(2);
  CHECK(r2.total_examined == 8192);
  CHECK(r2.valid_grids == 12);
  CHECK(r2.condition_pass == 12);
  CHECK(r2.mismatches.empty());
}

TEST_CASE("sampled necessity is reproducible and clean") {
  experiment_result a = necessity_experiment(3, 50, 99);
  experiment_result b = necessity_experiment(3, 50, 99);
  CHECK(a.mismatches.empty());
  CHECK(a.valid_grids == 50);
  CHECK(experiment_result_to_json(a, false) == experiment_result_to_json(b, false));
}

TEST_CASE("sufficiency experiment n=1 truth table") {
  experiment_result r = sufficiency_experiment(1);
  CHECK(r.total_examined == 32);
  CHECK(r.valid_grids == 1);
  // Necessity direction: no valid grid may fail the conditions.
  for (const experiment_mismatch& m : r.mismatches) {
    CHECK_FALSE(m.structure.valid());
    CHECK(m.pipelines_equivalent);
  }
  // Both counting paths tie out.
  std::uint64_t pass_not_valid = 0, valid_not_pass = 0;
  for (const experiment_mismatch& m : r.mismatches) {
    if (m.conditions.overall() && !m.structure.valid()) ++pass_not_valid;
    if (!m.conditions.overall() && m.structure.valid()) ++valid_not_pass;
  }
  CHECK(valid_not_pass == 0);
  CHECK(r.valid_grids == r.condition_pass - pass_not_valid + valid_not_pass);
}

TEST_CASE("sufficiency experiment n=2 keeps the necessity direction empty") {
  experiment_result r = sufficiency_experiment(2);
  CHECK(r.total_examined == 8192);
  CHECK(r.valid_grids == 12);
  std::uint64_t valid_not_pass = 0;
  for (const experiment_mismatch& m : r.mismatches) {
    if (m.structure.valid() && !m.conditions.overall()) ++valid_not_pass;
    CHECK(m.pipelines_equivalent);
  }
  CHECK(valid_not_pass == 0);
}

TEST_CASE("experiments are chunking independent") {
  experiment_result serial = sufficiency_experiment(1, 1);
  experiment_result chunked = sufficiency_experiment(1, 4);
  CHECK(experiment_result_to_json(serial, false) == experiment_result_to_json(chunked, false));

  experiment_result n1 = necessity_experiment(2, {}, 0, 1);
  experiment_result n3 = necessity_experiment(2, {}, 0, 3);
  CHECK(experiment_result_to_json(n1, false) == experiment_result_to_json(n3, false));
}

TEST_CASE("roundtrip experiment") {
  roundtrip_report r = reconstruct_roundtrip_experiment(2);
  CHECK(r.examined == 12);
  CHECK(r.failures.empty());

  roundtrip_report s = reconstruct_roundtrip_experiment(3, 25, 7);
  CHECK(s.examined == 25);
  CHECK(s.failures.empty());

  nlohmann::json j = roundtrip_report_to_json(r, false);
  CHECK(j["examined"] == 12);
  CHECK(j["failures"].empty());
}

TEST_CASE("experiment json shape") {
  experiment_result r = necessity_experiment(1);
  nlohmann::json j = experiment_result_to_json(r);
  CHECK(j["n"] == 1);
  CHECK(j["total_examined"] == 32);
  CHECK(j["valid_grids"] == 1);
  CHECK(j.contains("elapsed_seconds"));
  CHECK(j["mismatches"].is_array());
}
