#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "braids/braid.hpp"
#include "braids/permutation.hpp"

namespace braids {

// Garside left normal form over the classical generators. A word is written
// as D^inf x_1 ... x_k where D is the positive half twist, each x_i is a
// simple element (a positive braid in which any two strands cross at most
// once, identified with its permutation), no x_i is trivial or D, and each
// adjacent pair is left weighted. This form is a complete invariant: two
// words represent the same group element exactly when their normal forms
// coincide field by field.

namespace garside {

/// Generator i left-divides the simple element with permutation `p` iff the
/// strands entering at positions i-1, i cross, i.e. p^-1 has a descent there.
inline bool generator_starts(const std::vector<int>& inv_images, int i) {
  return inv_images[i - 1] > inv_images[i];
}

/// Generator i right-divides the simple element iff the strands leaving at
/// positions i-1, i cross, i.e. the image list has a descent there.
inline bool generator_finishes(const std::vector<int>& images, int i) {
  return images[i - 1] > images[i];
}

/// Largest common left divisor of two simple elements, by peeling common
/// starting generators; valid because left divisibility of positive braids
/// is a lattice order.
inline Permutation left_meet(const Permutation& a, const Permutation& b) {
  const int n = a.size();
  std::vector<int> ai = a.inverse().images();
  std::vector<int> bi = b.inverse().images();
  std::vector<int> av = a.images();
  std::vector<int> bv = b.images();
  std::vector<int> meet(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) meet[x] = x;

  auto peel = [](std::vector<int>& img, std::vector<int>& inv, int i) {
    // img <- transposition(i) * img: swap the values i-1 and i
    std::swap(img[inv[i - 1]], img[inv[i]]);
    std::swap(inv[i - 1], inv[i]);
  };

  bool found = true;
  while (found) {
    found = false;
    for (int i = 1; i < n; ++i) {
      if (generator_starts(ai, i) && generator_starts(bi, i)) {
        peel(av, ai, i);
        peel(bv, bi, i);
        std::swap(meet[i - 1], meet[i]);  // meet <- meet * transposition(i)
        found = true;
        break;
      }
    }
  }
  return Permutation::from_images(std::move(meet));
}

/// Permutation of a^-1 * D, the simple element completing `a` to the half
/// twist on the right.
inline Permutation right_complement(const Permutation& a) {
  const int n = a.size();
  const std::vector<int> inv = a.inverse().images();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) out[x] = inv[n - 1 - x];
  return Permutation::from_images(std::move(out));
}

/// Conjugation by the half twist, an involutive automorphism on simples.
inline Permutation delta_conjugate(const Permutation& f) {
  const int n = f.size();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) out[x] = n - 1 - f(n - 1 - x);
  return Permutation::from_images(std::move(out));
}

/// Canonical positive word of a simple element: repeatedly emit the least
/// starting generator. The length equals the inversion count.
inline std::vector<BraidLetter> simple_to_letters(Permutation p) {
  const int n = p.size();
  std::vector<BraidLetter> out;
  std::vector<int> inv = p.inverse().images();
  std::vector<int> img = p.images();
  bool found = true;
  while (found) {
    found = false;
    for (int i = 1; i < n; ++i) {
      if (generator_starts(inv, i)) {
        out.push_back({i, +1});
        std::swap(img[inv[i - 1]], img[inv[i]]);
        std::swap(inv[i - 1], inv[i]);
        found = true;
        break;
      }
    }
  }
  return out;
}

/// Canonical positive word of the half twist on n strands:
/// (s1 ... s_{n-1})(s1 ... s_{n-2}) ... (s1).
inline std::vector<BraidLetter> half_twist_letters(int n) {
  std::vector<BraidLetter> out;
  for (int block = n - 1; block >= 1; --block) {
    for (int i = 1; i <= block; ++i) out.push_back({i, +1});
  }
  return out;
}

/// Rewrites a sequence of simple factors into left weighted order, dropping
/// trivial factors and absorbing leading half twists into `infimum`.
inline void left_weight_factors(int n, int& infimum, std::vector<Permutation>& factors) {
  const Permutation delta = Permutation::reversal(n);
  std::size_t guard = 0;
  const std::size_t guard_limit =
      16 + factors.size() * factors.size() * static_cast<std::size_t>(n) * static_cast<std::size_t>(n);

  bool changed = true;
  while (changed) {
    changed = false;
    std::erase_if(factors, [](const Permutation& f) { return f.is_identity(); });
    for (std::size_t j = 0; j + 1 < factors.size(); ++j) {
      const Permutation t = left_meet(right_complement(factors[j]), factors[j + 1]);
      if (!t.is_identity()) {
        factors[j] = factors[j] * t;
        factors[j + 1] = t.inverse() * factors[j + 1];
        changed = true;
      }
    }
    if (++guard > guard_limit) {
      throw std::logic_error("left_weight_factors: failed to converge");
    }
  }
  std::erase_if(factors, [](const Permutation& f) { return f.is_identity(); });

  std::size_t lead = 0;
  while (lead < factors.size() && factors[lead] == delta) ++lead;
  infimum += static_cast<int>(lead);
  factors.erase(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(lead));
}

}  // namespace garside

struct NormalForm {
  int strands = 1;
  int infimum = 0;
  std::vector<Permutation> factors;

  int supremum() const { return infimum + static_cast<int>(factors.size()); }
  int canonical_length() const { return static_cast<int>(factors.size()); }
  bool is_identity() const { return infimum == 0 && factors.empty(); }

  auto operator<=>(const NormalForm&) const = default;

  /// Compact canonical string, usable as a hash/set key for group elements.
  std::string key() const {
    std::string out = std::to_string(strands) + ";" + std::to_string(infimum);
    for (const Permutation& f : factors) {
      out += '|';
      for (int v : f.images()) {
        out += std::to_string(v);
        out += ',';
      }
    }
    return out;
  }

  /// Canonical word: the half twist power followed by the factor words.
  BraidWord to_word() const {
    BraidWord out(strands);
    const std::vector<BraidLetter> delta = garside::half_twist_letters(strands);
    if (infimum >= 0) {
      for (int k = 0; k < infimum; ++k) {
        for (const BraidLetter& l : delta) out.push_back(l);
      }
    } else {
      for (int k = 0; k < -infimum; ++k) {
        for (auto it = delta.rbegin(); it != delta.rend(); ++it) out.push_back({it->index, -1});
      }
    }
    for (const Permutation& f : factors) {
      for (const BraidLetter& l : garside::simple_to_letters(f)) out.push_back(l);
    }
    return out;
  }
};

inline NormalForm left_normal_form(const BraidWord& w) {
  const int n = w.strands();
  const Permutation half_twist = Permutation::reversal(n);
  NormalForm nf;
  nf.strands = n;
  for (const BraidLetter& l : w.letters()) {
    if (l.sign > 0) {
      nf.factors.push_back(Permutation::transposition(n, l.index));
    } else {
      // s_i^-1 = D^-1 (D s_i^-1): push the inverse half twist to the front,
      // conjugating the factors already collected.
      nf.infimum -= 1;
      for (Permutation& f : nf.factors) f = garside::delta_conjugate(f);
      nf.factors.push_back(half_twist * Permutation::transposition(n, l.index));
    }
  }
  garside::left_weight_factors(n, nf.infimum, nf.factors);
  return nf;
}

/// Word problem: true iff u and v represent the same element of B_n.
inline bool words_equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) {
    throw std::invalid_argument("words_equal: strand counts differ");
  }
  return left_normal_form(u) == left_normal_form(v);
}

}  // namespace braids
