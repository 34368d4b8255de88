#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "braids/braid.hpp"
#include "braids/normal_form.hpp"

namespace braids {

// Conjugacy decision through super summit sets: within a conjugacy class the
// infimum has a maximum and the supremum a minimum over normal forms, both
// reached by iterated cycling and decycling. The set of class members
// realizing both extremes is finite and closed under conjugation by simple
// elements, so a budgeted orbit search decides conjugacy whenever it
// completes; exhausted budgets yield "undecided", never a wrong verdict.

struct ConjugacyBudget {
  std::size_t max_set_size = 4096;   // super summit elements kept per class
  std::size_t max_steps = 200000;    // conjugation/normalization operations
};

enum class ConjugacyOutcome { conjugate, not_conjugate, undecided };

struct ConjugacyResult {
  ConjugacyOutcome outcome = ConjugacyOutcome::undecided;
  std::optional<BraidWord> witness;  // c with c u c^-1 = v when conjugate
  std::string certificate;
};

struct CyclingStep {
  NormalForm form;
  BraidWord conjugator;  // s with s^-1 w s equal to `form`
};

namespace detail_conjugacy {

inline BraidWord simple_word(int strands, const Permutation& p) {
  BraidWord w(strands);
  for (const BraidLetter& l : garside::simple_to_letters(p)) w.push_back(l);
  return w;
}

inline Permutation twist_power(const Permutation& p, int power) {
  return (power % 2 == 0) ? p : garside::delta_conjugate(p);
}

}  // namespace detail_conjugacy

/// Conjugates by the initial factor: D^p x1..xk  ->  D^p x2..xk t^-p(x1).
/// Never lowers the infimum, never raises the supremum.
inline CyclingStep cycling(const NormalForm& nf) {
  if (nf.factors.empty()) return {nf, BraidWord(nf.strands)};
  const Permutation initial = detail_conjugacy::twist_power(nf.factors.front(), nf.infimum);
  NormalForm out;
  out.strands = nf.strands;
  out.infimum = nf.infimum;
  out.factors.assign(nf.factors.begin() + 1, nf.factors.end());
  out.factors.push_back(initial);
  garside::left_weight_factors(out.strands, out.infimum, out.factors);
  return {std::move(out), detail_conjugacy::simple_word(nf.strands, initial)};
}

/// Conjugates by the inverse of the final factor:
/// D^p x1..xk  ->  D^p t^p(xk) x1..x_{k-1}.
inline CyclingStep decycling(const NormalForm& nf) {
  if (nf.factors.empty()) return {nf, BraidWord(nf.strands)};
  const Permutation last = nf.factors.back();
  NormalForm out;
  out.strands = nf.strands;
  out.infimum = nf.infimum;
  out.factors.clear();
  out.factors.push_back(detail_conjugacy::twist_power(last, nf.infimum));
  out.factors.insert(out.factors.end(), nf.factors.begin(), nf.factors.end() - 1);
  garside::left_weight_factors(out.strands, out.infimum, out.factors);
  return {std::move(out), detail_conjugacy::simple_word(nf.strands, last).inverse()};
}

/// All non-trivial simple elements of B_n (one per non-identity permutation).
inline const std::vector<Permutation>& all_simple_elements(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("all_simple_elements: supported for 1 <= n <= 8");
  static std::map<int, std::vector<Permutation>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[i] = i;
  std::vector<Permutation> out;
  while (std::next_permutation(img.begin(), img.end())) {
    out.push_back(Permutation::from_images(img));
  }
  return cache.emplace(n, std::move(out)).first->second;
}

/// Iterated cycling and decycling until neither improves infimum or
/// supremum; the result lies in the super summit set of its class.
/// Returns the representative and `a` with a^-1 w a = representative,
/// or nullopt if the step budget ran out.
inline std::optional<CyclingStep> super_summit_representative(const BraidWord& w,
                                                              const ConjugacyBudget& budget = {}) {
  NormalForm nf = left_normal_form(w);
  BraidWord acc(w.strands());
  std::size_t steps = 0;

  bool improved = true;
  while (improved) {
    improved = false;

    std::set<std::string> seen{nf.key()};
    while (true) {
      if (++steps > budget.max_steps) return std::nullopt;
      CyclingStep step = cycling(nf);
      if (step.form.infimum > nf.infimum) {
        nf = std::move(step.form);
        acc = free_reduce(acc * step.conjugator);
        improved = true;
        seen = {nf.key()};
        continue;
      }
      if (!seen.insert(step.form.key()).second) break;  // plateau cycle: infimum is maximal
      nf = std::move(step.form);
      acc = free_reduce(acc * step.conjugator);
    }

    seen = {nf.key()};
    while (true) {
      if (++steps > budget.max_steps) return std::nullopt;
      CyclingStep step = decycling(nf);
      if (step.form.supremum() < nf.supremum()) {
        nf = std::move(step.form);
        acc = free_reduce(acc * step.conjugator);
        improved = true;
        seen = {nf.key()};
        continue;
      }
      if (!seen.insert(step.form.key()).second) break;  // supremum is minimal
      nf = std::move(step.form);
      acc = free_reduce(acc * step.conjugator);
    }
  }
  return CyclingStep{std::move(nf), std::move(acc)};
}

struct SuperSummitSet {
  bool complete = false;
  int infimum = 0;
  int supremum = 0;
  std::vector<NormalForm> members;
  std::map<std::string, BraidWord> witness_by_key;  // g with g^-1 w g = member
};

/// Orbit closure of a super summit representative under conjugation by
/// simple elements, keeping only elements with the extremal invariants.
/// `complete` is false when a budget was exhausted before closure.
inline SuperSummitSet super_summit_set(const BraidWord& w, const ConjugacyBudget& budget = {}) {
  SuperSummitSet out;
  const auto rep = super_summit_representative(w, budget);
  if (!rep) return out;
  out.infimum = rep->form.infimum;
  out.supremum = rep->form.supremum();

  std::size_t steps = 0;
  std::vector<NormalForm> queue{rep->form};
  out.members.push_back(rep->form);
  out.witness_by_key.emplace(rep->form.key(), rep->conjugator);

  const std::vector<Permutation>& simples = all_simple_elements(w.strands());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NormalForm current = queue[head];
    const BraidWord current_word = current.to_word();
    const BraidWord witness = out.witness_by_key.at(current.key());
    for (const Permutation& s : simples) {
      if (++steps > budget.max_steps || out.members.size() > budget.max_set_size) {
        return out;  // incomplete
      }
      const BraidWord s_word = detail_conjugacy::simple_word(w.strands(), s);
      NormalForm next = left_normal_form(s_word.inverse() * current_word * s_word);
      if (next.infimum != out.infimum || next.supremum() != out.supremum) continue;
      std::string key = next.key();
      if (out.witness_by_key.contains(key)) continue;
      out.witness_by_key.emplace(std::move(key), free_reduce(witness * s_word));
      out.members.push_back(next);
      queue.push_back(std::move(next));
    }
  }
  out.complete = true;
  return out;
}

/// Decides conjugacy of u and v within the given budget.
///  - "conjugate" always carries a witness c verified to satisfy c u c^-1 = v;
///  - "not_conjugate" is only reported on a sound certificate: distinct
///    exponent sums, or a fully computed super summit set avoided by the
///    other word's representative;
///  - otherwise "undecided".
inline ConjugacyResult conjugate_test(const BraidWord& u, const BraidWord& v,
                                      const ConjugacyBudget& budget = {}) {
  if (u.strands() != v.strands()) {
    throw std::invalid_argument("conjugate_test: strand counts differ");
  }
  ConjugacyResult result;

  const long long eu = exponent_sum(u);
  const long long ev = exponent_sum(v);
  if (eu != ev) {
    result.outcome = ConjugacyOutcome::not_conjugate;
    result.certificate = "exponent sums differ: " + std::to_string(eu) + " vs " + std::to_string(ev);
    return result;
  }

  if (words_equal(u, v)) {
    result.outcome = ConjugacyOutcome::conjugate;
    result.witness = BraidWord(u.strands());
    result.certificate = "words are equal; identity witness";
    return result;
  }

  const auto u_rep = super_summit_representative(u, budget);
  if (!u_rep) {
    result.certificate = "budget exhausted while reducing the first word";
    return result;
  }
  const SuperSummitSet v_set = super_summit_set(v, budget);
  if (v_set.witness_by_key.empty()) {
    result.certificate = "budget exhausted while reducing the second word";
    return result;
  }

  const auto hit = v_set.witness_by_key.find(u_rep->form.key());
  if (hit != v_set.witness_by_key.end()) {
    // a^-1 u a = r and g^-1 v g = r, so (g a^-1) u (g a^-1)^-1 = v.
    const BraidWord c = free_reduce(hit->second * u_rep->conjugator.inverse());
    if (!words_equal(conjugated(u, c), v)) {
      throw std::logic_error("conjugate_test: witness failed verification");
    }
    result.outcome = ConjugacyOutcome::conjugate;
    result.witness = c;
    result.certificate = "witness verified against both words";
    return result;
  }

  if (v_set.complete) {
    result.outcome = ConjugacyOutcome::not_conjugate;
    result.certificate = "super summit sets disjoint: representative not among " +
                         std::to_string(v_set.members.size()) + " elements";
    return result;
  }
  result.certificate = "super summit set incomplete within budget";
  return result;
}

}  // namespace braids
