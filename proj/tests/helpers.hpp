#pragma once

#include <random>

#include "xw/enumeration.hpp"
#include "xw/grid.hpp"

namespace xwtest {

/// Uniform random symmetric grid (any validity) with a fixed-seed generator.
inline xw::grid random_symmetric_grid(int n, std::mt19937_64& rng, double void_prob = 0.25) {
  xw::void_mask m{n, std::vector<bool>(xw::region_bit_count(n), false)};
  std::bernoulli_distribution voided(void_prob);
  for (std::size_t k = 0; k < m.bits.size(); ++k) m.bits[k] = voided(rng);
  return xw::mask_to_grid(m);
}

}  // namespace xwtest
