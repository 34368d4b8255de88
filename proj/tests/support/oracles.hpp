#pragma once

// Brute-force oracles kept independent of the library's counting paths.

#include <cstdint>
#include <vector>

#include "braids/quandle.hpp"

namespace test_support {

/// Counts solutions of the arc relations by exhausting every assignment of
/// quandle elements to the presentation generators.
inline std::uint64_t coloring_count_by_presentation(const braids::QuandlePresentation& pres,
                                                    const braids::FiniteQuandle& quandle) {
  const int q = quandle.order();
  const int g = pres.generators;
  std::vector<int> assign(static_cast<std::size_t>(g), 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (const auto& [k, i, j] : pres.relations) {
      if (assign[k] != quandle.op(assign[i], assign[j])) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    int pos = g - 1;
    while (pos >= 0 && assign[pos] == q - 1) assign[pos--] = 0;
    if (pos < 0) break;
    ++assign[pos];
  }
  return count;
}

/// Every q-by-q operation table satisfying the three axioms, found by raw
/// exhaustion over all q^(q*q) tables. Only usable for q <= 3.
inline std::vector<braids::FiniteQuandle> enumerate_quandles_raw(int q) {
  std::vector<braids::FiniteQuandle> out;
  const int cells = q * q;
  std::vector<int> flat(static_cast<std::size_t>(cells), 0);
  while (true) {
    std::vector<std::vector<int>> table(static_cast<std::size_t>(q),
                                        std::vector<int>(static_cast<std::size_t>(q)));
    for (int i = 0; i < q; ++i) {
      for (int j = 0; j < q; ++j) table[i][j] = flat[i * q + j];
    }
    braids::FiniteQuandle candidate(std::move(table));
    if (braids::check_axioms(candidate).ok) out.push_back(std::move(candidate));

    int pos = cells - 1;
    while (pos >= 0 && flat[pos] == q - 1) flat[pos--] = 0;
    if (pos < 0) break;
    ++flat[pos];
  }
  return out;
}

}  // namespace test_support
