#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "braids/braid.hpp"
#include "braids/mixed.hpp"

namespace braids {

enum class Ambient { sphere3, solid_torus };

inline std::string_view ambient_name(Ambient a) {
  return a == Ambient::sphere3 ? "sphere3" : "solid_torus";
}

/// Invariant data of the closure of a braid word.
///
/// Components are indexed by their least strand (1-based strand ids). The
/// winding entries are reported as a sorted multiset; in the three-sphere
/// they are all zero, in the solid torus the entry of a component equals the
/// number of strands it uses (each strand travels once around the axis
/// between closure arcs, so the component's class in the first homology of
/// the solid torus is its strand count).
struct LinkData {
  Ambient ambient = Ambient::sphere3;
  int components = 0;
  std::vector<int> winding;                         // sorted ascending
  std::vector<std::vector<int>> linking;            // symmetric, zero diagonal
  std::vector<std::vector<int>> component_strands;  // 1-based strand ids

  /// Stable single-line form: ambient, component count, winding multiset,
  /// then the strict upper triangle of the linking matrix row by row.
  std::string to_line() const {
    std::string out = "ambient=";
    out += ambient_name(ambient);
    out += " components=" + std::to_string(components);
    out += " winding=";
    for (std::size_t i = 0; i < winding.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(winding[i]);
    }
    out += " linking=";
    bool first = true;
    for (int p = 0; p < components; ++p) {
      for (int q = p + 1; q < components; ++q) {
        if (!first) out += ',';
        out += std::to_string(linking[p][q]);
        first = false;
      }
    }
    return out;
  }
};

namespace detail_closure {

/// Component index of every strand (0-based), components ordered by least
/// strand.
inline std::vector<int> component_of_strand(const Permutation& p) {
  const auto cycles = p.cycles();
  std::vector<int> comp(static_cast<std::size_t>(p.size()), -1);
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    for (int s : cycles[c]) comp[s] = static_cast<int>(c);
  }
  return comp;
}

/// Linking numbers between closure components: half the signed crossing
/// count between strands of distinct components. Positions are tracked
/// through the word; closure arcs contribute no crossings.
inline std::vector<std::vector<int>> linking_between_components(const BraidWord& w,
                                                                const std::vector<int>& comp,
                                                                int components) {
  std::vector<std::vector<int>> sum(components, std::vector<int>(components, 0));
  std::vector<int> occupant(static_cast<std::size_t>(w.strands()));
  for (int p = 0; p < w.strands(); ++p) occupant[p] = p;
  for (const BraidLetter& l : w.letters()) {
    const int a = occupant[l.index - 1];
    const int b = occupant[l.index];
    if (comp[a] != comp[b]) {
      sum[comp[a]][comp[b]] += l.sign;
      sum[comp[b]][comp[a]] += l.sign;
    }
    std::swap(occupant[l.index - 1], occupant[l.index]);
  }
  for (int p = 0; p < components; ++p) {
    for (int q = 0; q < components; ++q) {
      if (sum[p][q] % 2 != 0) {
        throw std::logic_error("linking_between_components: odd crossing sum");
      }
      sum[p][q] /= 2;
    }
  }
  return sum;
}

}  // namespace detail_closure

inline std::vector<std::vector<int>> linking_matrix(const BraidWord& w) {
  const Permutation perm = strand_permutation(w);
  const std::vector<int> comp = detail_closure::component_of_strand(perm);
  const int components = static_cast<int>(perm.cycles().size());
  return detail_closure::linking_between_components(w, comp, components);
}

inline std::vector<std::vector<int>> linking_matrix(const MixedBraidWord& w) {
  return linking_matrix(moving_part(w));
}

/// Strict upper triangle of the linking matrix in its lexicographically
/// least form over simultaneous row/column permutations, and optionally over
/// global negation (components carry no preferred order, and a mirror of the
/// ambient space negates every linking number at once).
inline std::vector<int> canonical_linking(const std::vector<std::vector<int>>& m,
                                          bool up_to_negation) {
  const int k = static_cast<int>(m.size());
  if (k > 8) throw std::invalid_argument("canonical_linking: too many components");
  std::vector<int> order(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) order[i] = i;
  std::optional<std::vector<int>> best;
  do {
    for (int flip = 0; flip < (up_to_negation ? 2 : 1); ++flip) {
      std::vector<int> tri;
      tri.reserve(static_cast<std::size_t>(k * (k - 1) / 2));
      for (int p = 0; p < k; ++p) {
        for (int q = p + 1; q < k; ++q) {
          tri.push_back((flip ? -1 : 1) * m[order[p]][order[q]]);
        }
      }
      if (!best || tri < *best) best = std::move(tri);
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return best ? *best : std::vector<int>{};
}

/// Closure in the three-sphere.
inline LinkData close(const BraidWord& w) {
  const Permutation perm = strand_permutation(w);
  const auto cycles = perm.cycles();
  LinkData out;
  out.ambient = Ambient::sphere3;
  out.components = static_cast<int>(cycles.size());
  out.winding.assign(cycles.size(), 0);
  out.linking = linking_matrix(w);
  for (const auto& cycle : cycles) {
    std::vector<int> strands;
    for (int s : cycle) strands.push_back(s + 1);
    std::sort(strands.begin(), strands.end());
    out.component_strands.push_back(std::move(strands));
  }
  return out;
}

/// Closure of the moving strands around the closed fixed strand, which acts
/// as the axis of the complementary solid torus. Loop letters wind the first
/// moving strand around the axis without moving strands, so components and
/// the reported invariants are those of the moving braid word.
inline LinkData close_mixed(const MixedBraidWord& w) {
  if (w.fixed_strands() != 1) {
    throw std::invalid_argument("close_mixed: exactly one fixed strand required");
  }
  LinkData out = close(moving_part(w));
  out.ambient = Ambient::solid_torus;
  for (std::size_t c = 0; c < out.component_strands.size(); ++c) {
    out.winding[c] = static_cast<int>(out.component_strands[c].size());
  }
  std::sort(out.winding.begin(), out.winding.end());
  return out;
}

/// Sufficient condition only: a non-zero winding certifies that no embedded
/// ball contains the component. False means "not certified essential".
inline bool is_essential(const LinkData& link) {
  if (link.ambient != Ambient::solid_torus) {
    throw std::invalid_argument("is_essential: defined for solid torus closures");
  }
  for (int m : link.winding) {
    if (m != 0) return true;
  }
  return false;
}

inline BraidWord markov_conjugate(const BraidWord& w, const BraidWord& c) {
  if (w.strands() != c.strands()) {
    throw std::invalid_argument("markov_conjugate: strand counts differ");
  }
  return free_reduce(c * w * c.inverse());
}

inline BraidWord markov_stabilize(const BraidWord& w, int sign) {
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("markov_stabilize: sign must be +1 or -1");
  }
  BraidWord out = include(w, w.strands() + 1);
  out.push_back({w.strands(), sign});
  return out;
}

/// Inverse of stabilization: defined when the top generator occurs exactly
/// once in the freely reduced word. Removing it from any position keeps the
/// closure type, since the word is a cyclic rotation of one ending in that
/// letter.
inline std::optional<BraidWord> markov_destabilize(const BraidWord& w) {
  if (w.strands() < 2) return std::nullopt;
  const BraidWord r = free_reduce(w);
  const int top = r.strands() - 1;
  int count = 0;
  std::size_t where = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r.letters()[i].index == top) {
      ++count;
      where = i;
    }
  }
  if (count != 1) return std::nullopt;
  BraidWord out(r.strands() - 1);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i != where) out.push_back(r.letters()[i]);
  }
  return out;
}

}  // namespace braids
