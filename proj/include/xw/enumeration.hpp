#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "xw/conditions.hpp"
#include "xw/grid.hpp"
#include "xw/voiding.hpp"

namespace xw {

/// Fundamental-region coordinates in canonical mask order: rows from j=n
/// down to j=1 with i ascending, then the nonnegative half of row 0.
inline std::vector<coord> region_coords(int n) {
  std::vector<coord> out;
  out.reserve(static_cast<std::size_t>(2 * n * n + 2 * n + 1));
  for (int j = n; j >= 1; --j) {
    for (int i = -n; i <= n; ++i) out.push_back({i, j});
  }
  for (int i = 0; i <= n; ++i) out.push_back({i, 0});
  return out;
}

inline std::uint64_t region_bit_count(int n) {
  return static_cast<std::uint64_t>(2 * n * n + 2 * n + 1);
}

/// One bit per fundamental-region coordinate; a set bit voids that cell and
/// its rotated image.
struct void_mask {
  int n = 0;
  std::vector<bool> bits;

  bool operator==(const void_mask&) const = default;

  std::string bit_string() const {
    std::string s;
    s.reserve(bits.size());
    for (bool b : bits) s += b ? '1' : '0';
    return s;
  }

  static void_mask from_value(int n, std::uint64_t value) {
    void_mask m{n, std::vector<bool>(region_bit_count(n), false)};
    for (std::size_t k = 0; k < m.bits.size(); ++k) m.bits[k] = (value >> k) & 1;
    return m;
  }
};

inline grid mask_to_grid(const void_mask& m) {
  grid g = grid::filled(m.n);
  const std::vector<coord> coords = region_coords(m.n);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (m.bits[k]) {
      g.set(coords[k], square::black);
      g.set(rotate180(coords[k]), square::black);
    }
  }
  return g;
}

inline constexpr int default_exhaustive_limit = 3;

namespace detail {

inline void check_limit(int n, int limit) {
  if (n > limit) {
    throw error(errc::limit_exceeded, "n=" + std::to_string(n) +
                                          " exceeds the exhaustive limit " + std::to_string(limit));
  }
  if (n < 0) throw error(errc::bad_input, "n must be nonnegative");
}

/// Writes the grid of `value` into a reused buffer; avoids per-mask
/// allocation in the exhaustive loops.
struct mask_scratch {
  grid g;
  std::vector<coord> coords;
  std::vector<std::size_t> offsets;          // region cell offsets
  std::vector<std::size_t> mirror_offsets;   // their rotated images
  std::vector<char> seen;

  explicit mask_scratch(int n) : g(grid::filled(n)), coords(region_coords(n)) {
    offsets.reserve(coords.size());
    mirror_offsets.reserve(coords.size());
    for (coord c : coords) {
      offsets.push_back(grid::offset(n, c));
      mirror_offsets.push_back(grid::offset(n, rotate180(c)));
    }
    seen.resize(g.squares.size());
  }

  void load(std::uint64_t value) {
    std::fill(g.squares.begin(), g.squares.end(), square::white);
    for (std::size_t k = 0; k < offsets.size(); ++k) {
      if ((value >> k) & 1) {
        g.squares[offsets[k]] = square::black;
        g.squares[mirror_offsets[k]] = square::black;
      }
    }
  }
};

/// Equivalent to validate(g).valid() for symmetric grids, allocation free.
inline bool grid_valid_fast(const grid& g, std::vector<char>& seen) {
  const int n = g.n;
  const int side = 2 * n + 1;

  // Run lengths: every maximal run in every row and column has >= 3 cells.
  for (int r = 0; r < side; ++r) {
    int run = 0;
    for (int c = 0; c <= side; ++c) {
      if (c < side && g.squares[static_cast<std::size_t>(r) * side + c] == square::white) {
        ++run;
      } else {
        if (run > 0 && run < 3) return false;
        run = 0;
      }
    }
  }
  for (int c = 0; c < side; ++c) {
    int run = 0;
    for (int r = 0; r <= side; ++r) {
      if (r < side && g.squares[static_cast<std::size_t>(r) * side + c] == square::white) {
        ++run;
      } else {
        if (run > 0 && run < 3) return false;
        run = 0;
      }
    }
  }

  // Full dimension: boundary rows and columns are not entirely black.
  auto any_white_row = [&](int r) {
    for (int c = 0; c < side; ++c) {
      if (g.squares[static_cast<std::size_t>(r) * side + c] == square::white) return true;
    }
    return false;
  };
  auto any_white_col = [&](int c) {
    for (int r = 0; r < side; ++r) {
      if (g.squares[static_cast<std::size_t>(r) * side + c] == square::white) return true;
    }
    return false;
  };
  if (!any_white_row(0) || !any_white_row(side - 1) || !any_white_col(0) ||
      !any_white_col(side - 1)) {
    return false;
  }

  // Connectivity over white cells.
  std::size_t first = g.squares.size();
  std::size_t whites = 0;
  for (std::size_t k = 0; k < g.squares.size(); ++k) {
    if (g.squares[k] == square::white) {
      ++whites;
      if (first == g.squares.size()) first = k;
    }
  }
  if (whites == 0) return false;
  std::fill(seen.begin(), seen.end(), 0);
  std::vector<std::size_t> stack{first};
  seen[first] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    std::size_t k = stack.back();
    stack.pop_back();
    ++reached;
    const int r = static_cast<int>(k) / side, c = static_cast<int>(k) % side;
    const int nr[4] = {r + 1, r - 1, r, r};
    const int nc[4] = {c, c, c + 1, c - 1};
    for (int t = 0; t < 4; ++t) {
      if (nr[t] < 0 || nr[t] >= side || nc[t] < 0 || nc[t] >= side) continue;
      std::size_t m = static_cast<std::size_t>(nr[t]) * side + nc[t];
      if (g.squares[m] == square::white && !seen[m]) {
        seen[m] = 1;
        stack.push_back(m);
      }
    }
  }
  return reached == whites;
}

}  // namespace detail

/// Streams all 2^(2n^2+2n+1) masks in ascending bit-pattern order.
template <typename Fn>
void enumerate_masks(int n, Fn&& fn, int limit = default_exhaustive_limit) {
  detail::check_limit(n, limit);
  const std::uint64_t total = 1ULL << region_bit_count(n);
  for (std::uint64_t value = 0; value < total; ++value) {
    fn(void_mask::from_value(n, value));
  }
}

// ---------------------------------------------------------------------------
// Counting
// ---------------------------------------------------------------------------

inline std::uint64_t count_valid_grids(int n, int jobs = 1,
                                       int limit = default_exhaustive_limit) {
  detail::check_limit(n, limit);
  const std::uint64_t total = 1ULL << region_bit_count(n);
  jobs = std::max(1, jobs);
  std::vector<std::uint64_t> counts(jobs, 0);
  auto work = [&](int t, std::uint64_t lo, std::uint64_t hi) {
    detail::mask_scratch scratch(n);
    std::uint64_t c = 0;
    for (std::uint64_t v = lo; v < hi; ++v) {
      scratch.load(v);
      if (detail::grid_valid_fast(scratch.g, scratch.seen)) ++c;
    }
    counts[t] = c;
  };
  if (jobs == 1) {
    work(0, 0, total);
  } else {
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (total + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t) {
      std::uint64_t lo = std::min<std::uint64_t>(total, chunk * t);
      std::uint64_t hi = std::min<std::uint64_t>(total, chunk * (t + 1));
      threads.emplace_back(work, t, lo, hi);
    }
    for (auto& th : threads) th.join();
  }
  std::uint64_t sum = 0;
  for (std::uint64_t c : counts) sum += c;
  return sum;
}

/// Validity count over `sample` uniform random masks; an estimate basis for
/// sizes past the exhaustive limit.
inline std::uint64_t count_valid_sampled(int n, std::uint64_t sample, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  detail::mask_scratch scratch(n);
  const std::size_t bits = region_bit_count(n);
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s < sample; ++s) {
    std::fill(scratch.g.squares.begin(), scratch.g.squares.end(), square::white);
    for (std::size_t k = 0; k < bits; ++k) {
      if (rng() & 1) {
        scratch.g.squares[scratch.offsets[k]] = square::black;
        scratch.g.squares[scratch.mirror_offsets[k]] = square::black;
      }
    }
    if (detail::grid_valid_fast(scratch.g, scratch.seen)) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Valid-grid sampling
// ---------------------------------------------------------------------------

/// Draws a valid grid by seeding a small uniform number of region voids and
/// rejecting invalid grids. Uniform masks are hopeless here: valid grids
/// thin out so fast that rejection from the uniform distribution stalls
/// already at n=4.
inline void_mask sample_valid_mask(int n, std::mt19937_64& rng,
                                   std::uint64_t max_tries = 10'000'000) {
  const std::vector<coord> coords = region_coords(n);
  const std::size_t bits = coords.size();
  detail::mask_scratch scratch(n);
  std::vector<std::size_t> positions(bits);
  for (std::size_t k = 0; k < bits; ++k) positions[k] = k;

  std::uniform_int_distribution<int> void_count(0, 2 * n);
  for (std::uint64_t attempt = 0; attempt < max_tries; ++attempt) {
    const int v = void_count(rng);
    for (int k = 0; k < v; ++k) {
      std::uniform_int_distribution<std::size_t> pick(k, bits - 1);
      std::swap(positions[k], positions[pick(rng)]);
    }
    void_mask m{n, std::vector<bool>(bits, false)};
    std::fill(scratch.g.squares.begin(), scratch.g.squares.end(), square::white);
    for (int k = 0; k < v; ++k) {
      m.bits[positions[k]] = true;
      scratch.g.squares[scratch.offsets[positions[k]]] = square::black;
      scratch.g.squares[scratch.mirror_offsets[positions[k]]] = square::black;
    }
    if (detail::grid_valid_fast(scratch.g, scratch.seen)) return m;
  }
  throw error(errc::limit_exceeded, "no valid grid found while sampling n=" + std::to_string(n));
}

// ---------------------------------------------------------------------------
// Experiments
// ---------------------------------------------------------------------------

struct experiment_mismatch {
  void_mask mask;
  structure_report structure;
  condition_report conditions;
  bool pipelines_equivalent = true;
};

struct experiment_result {
  int n = 0;
  std::uint64_t total_examined = 0;
  std::uint64_t valid_grids = 0;
  std::uint64_t condition_pass = 0;
  std::vector<experiment_mismatch> mismatches;
  double elapsed_seconds = 0;  // excluded from the determinism guarantee
};

namespace detail {

struct pipeline_outcome {
  structure_report structure;
  condition_report conditions;
  bool equivalent = true;
};

/// Runs both graph pipelines for one grid: the voiding route from the
/// template and the direct fold of the fundamental graph. Conditions are
/// checked on the voided graph, whose isolated vertices the counting and
/// sweep conditions rely on.
inline pipeline_outcome run_pipeline(const grid& g) {
  pipeline_outcome out;
  out.structure = validate(g);
  bit_multigraph voided = voided_from_grid(g);
  bit_multigraph direct = crossword_multigraph(fundamental(build_licn(g)));
  out.equivalent = equivalent(voided, direct, /*ignore_isolated=*/true);
  out.conditions = check_all(voided);
  return out;
}

}  // namespace detail

/// Necessity direction: every valid grid's multigraph
/// passes all condition checks, with the two pipelines agreeing. Exhaustive
/// when no sample size is given, seeded valid-grid sampling otherwise.
inline experiment_result necessity_experiment(int n, std::optional<std::uint64_t> sample = {},
                                              std::uint64_t seed = 0, int jobs = 1,
                                              int limit = default_exhaustive_limit) {
  const auto start = std::chrono::steady_clock::now();
  experiment_result res;
  res.n = n;

  if (sample) {
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < *sample; ++s) {
      void_mask m = sample_valid_mask(n, rng);
      grid g = mask_to_grid(m);
      auto out = detail::run_pipeline(g);
      ++res.total_examined;
      ++res.valid_grids;
      if (out.conditions.overall()) ++res.condition_pass;
      if (!out.conditions.overall() || !out.equivalent) {
        res.mismatches.push_back({m, out.structure, out.conditions, out.equivalent});
      }
    }
  } else {
    detail::check_limit(n, limit);
    const std::uint64_t total = 1ULL << region_bit_count(n);
    jobs = std::max(1, jobs);
    std::vector<experiment_result> partial(jobs);
    auto work = [&](int t, std::uint64_t lo, std::uint64_t hi) {
      detail::mask_scratch scratch(n);
      experiment_result& r = partial[t];
      for (std::uint64_t v = lo; v < hi; ++v) {
        scratch.load(v);
        ++r.total_examined;
        if (!detail::grid_valid_fast(scratch.g, scratch.seen)) continue;
        ++r.valid_grids;
        auto out = detail::run_pipeline(scratch.g);
        if (out.conditions.overall()) ++r.condition_pass;
        if (!out.conditions.overall() || !out.equivalent) {
          r.mismatches.push_back(
              {void_mask::from_value(n, v), out.structure, out.conditions, out.equivalent});
        }
      }
    };
    if (jobs == 1) {
      work(0, 0, total);
    } else {
      std::vector<std::thread> threads;
      const std::uint64_t chunk = (total + jobs - 1) / jobs;
      for (int t = 0; t < jobs; ++t) {
        threads.emplace_back(work, t, std::min(total, chunk * t),
                             std::min(total, chunk * (t + 1)));
      }
      for (auto& th : threads) th.join();
    }
    for (const experiment_result& r : partial) {
      res.total_examined += r.total_examined;
      res.valid_grids += r.valid_grids;
      res.condition_pass += r.condition_pass;
      res.mismatches.insert(res.mismatches.end(), r.mismatches.begin(), r.mismatches.end());
    }
  }

  res.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

/// Sufficiency probe: every mask, valid or not, goes through the voiding
/// pipeline and the condition checks. Grids in the (valid, not pass)
/// direction would break necessity and must not occur; the (pass, not
/// valid) direction is the open conjecture and is reported as data.
inline experiment_result sufficiency_experiment(int n, int jobs = 1,
                                                int limit = default_exhaustive_limit) {
  detail::check_limit(n, limit);
  const auto start = std::chrono::steady_clock::now();
  experiment_result res;
  res.n = n;
  const std::uint64_t total = 1ULL << region_bit_count(n);
  jobs = std::max(1, jobs);
  std::vector<experiment_result> partial(jobs);
  auto work = [&](int t, std::uint64_t lo, std::uint64_t hi) {
    detail::mask_scratch scratch(n);
    experiment_result& r = partial[t];
    for (std::uint64_t v = lo; v < hi; ++v) {
      scratch.load(v);
      ++r.total_examined;
      auto out = detail::run_pipeline(scratch.g);
      const bool valid = out.structure.valid();
      const bool pass = out.conditions.overall();
      if (valid) ++r.valid_grids;
      if (pass) ++r.condition_pass;
      if (valid != pass || !out.equivalent) {
        r.mismatches.push_back(
            {void_mask::from_value(n, v), out.structure, out.conditions, out.equivalent});
      }
    }
  };
  if (jobs == 1) {
    work(0, 0, total);
  } else {
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (total + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t) {
      threads.emplace_back(work, t, std::min(total, chunk * t), std::min(total, chunk * (t + 1)));
    }
    for (auto& th : threads) th.join();
  }
  for (const experiment_result& r : partial) {
    res.total_examined += r.total_examined;
    res.valid_grids += r.valid_grids;
    res.condition_pass += r.condition_pass;
    res.mismatches.insert(res.mismatches.end(), r.mismatches.begin(), r.mismatches.end());
  }
  res.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

struct roundtrip_report {
  int n = 0;
  std::uint64_t examined = 0;
  std::vector<void_mask> failures;
  double elapsed_seconds = 0;
};

/// Exact grid recovery through the fold pipeline, over every valid grid
/// (exhaustive) or a seeded sample of valid grids.
inline roundtrip_report reconstruct_roundtrip_experiment(int n,
                                                         std::optional<std::uint64_t> sample = {},
                                                         std::uint64_t seed = 0,
                                                         int limit = default_exhaustive_limit) {
  const auto start = std::chrono::steady_clock::now();
  roundtrip_report rep;
  rep.n = n;
  auto roundtrips = [&](const grid& g) {
    grid back = reconstruct_grid(crossword_multigraph(fundamental(build_licn(g))));
    return back == g;
  };
  if (sample) {
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < *sample; ++s) {
      void_mask m = sample_valid_mask(n, rng);
      ++rep.examined;
      if (!roundtrips(mask_to_grid(m))) rep.failures.push_back(m);
    }
  } else {
    detail::check_limit(n, limit);
    const std::uint64_t total = 1ULL << region_bit_count(n);
    detail::mask_scratch scratch(n);
    for (std::uint64_t v = 0; v < total; ++v) {
      scratch.load(v);
      if (!detail::grid_valid_fast(scratch.g, scratch.seen)) continue;
      ++rep.examined;
      if (!roundtrips(scratch.g)) rep.failures.push_back(void_mask::from_value(n, v));
    }
  }
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

inline nlohmann::json experiment_result_to_json(const experiment_result& res,
                                                bool include_elapsed = true) {
  nlohmann::json mismatches = nlohmann::json::array();
  for (const experiment_mismatch& m : res.mismatches) {
    mismatches.push_back({{"mask", m.mask.bit_string()},
                          {"grid", serialize_grid(mask_to_grid(m.mask))},
                          {"structure", structure_report_to_json(m.structure)},
                          {"conditions", condition_report_to_json(m.conditions)},
                          {"pipelines_equivalent", m.pipelines_equivalent}});
  }
  nlohmann::json out{{"n", res.n},
                     {"total_examined", res.total_examined},
                     {"valid_grids", res.valid_grids},
                     {"condition_pass", res.condition_pass},
                     {"mismatches", mismatches}};
  if (include_elapsed) out["elapsed_seconds"] = res.elapsed_seconds;
  return out;
}

inline nlohmann::json roundtrip_report_to_json(const roundtrip_report& rep,
                                               bool include_elapsed = true) {
  nlohmann::json failures = nlohmann::json::array();
  for (const void_mask& m : rep.failures) {
    failures.push_back({{"mask", m.bit_string()}, {"grid", serialize_grid(mask_to_grid(m))}});
  }
  nlohmann::json out{{"n", rep.n}, {"examined", rep.examined}, {"failures", failures}};
  if (include_elapsed) out["elapsed_seconds"] = rep.elapsed_seconds;
  return out;
}

}  // namespace xw
