#pragma once

#include <cstdint>
#include <random>

#include "braids/braid.hpp"

namespace test_support {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline braids::BraidWord random_word(std::mt19937_64& gen, int strands, int max_length) {
  std::uniform_int_distribution<int> len_dist(0, max_length);
  const int len = strands > 1 ? len_dist(gen) : 0;
  braids::BraidWord w(strands);
  if (strands == 1) return w;
  std::uniform_int_distribution<int> index_dist(1, strands - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  for (int i = 0; i < len; ++i) {
    w.push_back({index_dist(gen), sign_dist(gen) == 0 ? +1 : -1});
  }
  return w;
}

}  // namespace test_support
