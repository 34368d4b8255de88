// Acceptance suite: one line per criterion, pinned tolerances, wall-clock
// bounds included in the verdict. Exits with the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "braids/braids.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace braids;

namespace {

struct Criterion {
  std::string name;
  double time_limit_seconds;
  std::function<bool(std::string&)> run;
};

bool check(bool condition, std::string& detail, const std::string& message) {
  if (!condition && detail.empty()) detail = message;
  return condition;
}

// 1. Every defining relator collapses to the identity, plain and mixed.
bool criterion_presentations(std::string& detail) {
  bool ok = true;
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i + 1 <= n - 1; ++i) {
      BraidWord lhs(n), rhs(n);
      lhs.push_back({i, 1});
      lhs.push_back({i + 1, 1});
      lhs.push_back({i, 1});
      rhs.push_back({i + 1, 1});
      rhs.push_back({i, 1});
      rhs.push_back({i + 1, 1});
      ok &= check(words_equal(lhs, rhs), detail,
                  "braid relator failed in B" + std::to_string(n));
      ok &= check(left_normal_form(lhs * rhs.inverse()).is_identity(), detail,
                  "braid relator word is not the identity");
    }
    for (int i = 1; i <= n - 1; ++i) {
      for (int j = i + 2; j <= n - 1; ++j) {
        BraidWord lhs(n), rhs(n);
        lhs.push_back({i, 1});
        lhs.push_back({j, 1});
        rhs.push_back({j, 1});
        rhs.push_back({i, 1});
        ok &= check(words_equal(lhs, rhs), detail,
                    "commutation relator failed in B" + std::to_string(n));
      }
    }
  }
  for (const auto& [m, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}}) {
    const PresentationReport report = verify_presentation(m, n);
    bool saw_loop_four = false;
    for (const RelatorCheck& c : report.checks) {
      ok &= check(c.pass, detail, "mixed relator " + c.family + " failed at (" +
                                      std::to_string(m) + "," + std::to_string(n) + ")");
      if (c.family.rfind("loop-four", 0) == 0) saw_loop_four = true;
    }
    ok &= check(saw_loop_four, detail, "loop-four family missing");
  }
  return ok;
}

// 2. In B2 the word problem is exactly the exponent-sum oracle, exhaustively
// over all words of length at most eight.
bool criterion_word_problem_oracle(std::string& detail) {
  const std::vector<BraidWord> words = enumerate_words(2, 8);
  std::vector<NormalForm> forms;
  std::vector<long long> sums;
  forms.reserve(words.size());
  for (const BraidWord& w : words) {
    forms.push_back(left_normal_form(w));
    sums.push_back(exponent_sum(w));
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i; j < words.size(); ++j) {
      if ((forms[i] == forms[j]) != (sums[i] == sums[j])) {
        detail = "mismatch at pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
        return false;
      }
    }
  }
  detail = std::to_string(words.size()) + " words, all pairs agree";
  return true;
}

// 3. Conjugacy with witness and with a sound refusal.
bool criterion_conjugacy(std::string& detail) {
  bool ok = true;
  const BraidWord s1 = parse_braid("1", 3);
  const BraidWord s2 = parse_braid("2", 3);
  const ConjugacyResult r1 = conjugate_test(s1, s2);
  ok &= check(r1.outcome == ConjugacyOutcome::conjugate, detail, "s1 ~ s2 not certified");
  ok &= check(r1.witness && words_equal(conjugated(s1, *r1.witness), s2), detail,
              "witness fails verification");
  const ConjugacyResult r2 = conjugate_test(parse_braid("1", 2), parse_braid("-1", 2));
  ok &= check(r2.outcome == ConjugacyOutcome::not_conjugate, detail,
              "s1 !~ s1^-1 not certified");
  ok &= check(r2.certificate.find("exponent") != std::string::npos, detail,
              "missing exponent-sum certificate");
  return ok;
}

// 4. Coloring counts, each value reproduced by the assignment oracle first.
bool criterion_quandle_counts(std::string& detail) {
  bool ok = true;
  struct Case {
    BraidWord word;
    int order;
    std::uint64_t expected;
  };
  const std::vector<Case> cases{
      {parse_braid("1 1 1", 2), 3, 9},
      {BraidWord(1), 3, 3},
      {parse_braid("1 -2 1 -2", 3), 5, 25},
  };
  for (const Case& c : cases) {
    const FiniteQuandle quandle = dihedral(c.order);
    const std::uint64_t by_oracle =
        test_support::coloring_count_by_presentation(fundamental_presentation(c.word), quandle);
    const std::uint64_t by_propagation = coloring_count(c.word, quandle);
    ok &= check(by_oracle == c.expected, detail,
                "oracle disagrees with the frozen constant " + std::to_string(c.expected));
    ok &= check(by_propagation == c.expected, detail,
                "propagation disagrees with the frozen constant " + std::to_string(c.expected));
  }
  return ok;
}

// 5. Fingerprints survive one random conjugation and one stabilization,
// for 500 random words.
bool criterion_markov_invariance(std::string& detail) {
  auto gen = test_support::rng(900001);
  int failures = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 3;
    const BraidWord w = test_support::random_word(gen, n, 6);
    const CensusFingerprint base = fingerprint(w);
    const BraidWord c = test_support::random_word(gen, n, 4);
    if (fingerprint(markov_conjugate(w, c)) != base) ++failures;
    if (fingerprint(markov_stabilize(w, trial % 2 ? +1 : -1)) != base) ++failures;
  }
  detail = std::to_string(failures) + " failures out of 500 words";
  return failures == 0;
}

// 6. Census determinism, soundness, and the three separated buckets.
bool criterion_census(std::string& detail) {
  CensusConfig config;
  config.ambient = Ambient::sphere3;
  config.max_strands = 3;
  config.max_length = 4;
  config.depth = 3;

  const CensusReport first = run_census(config);
  const CensusReport second = run_census(config);
  bool ok = check(first.to_text() == second.to_text(), detail, "reports differ between runs");

  auto class_of = [&](const std::string& text) {
    for (const CensusRecord& r : first.records) {
      if (r.word_text == text) return r.class_id;
    }
    return -1;
  };
  const int unknot = class_of("B1:");
  const int hopf = class_of("B2: 1 1");
  const int trefoil = class_of("B2: 1 1 1");
  ok &= check(unknot >= 0 && hopf >= 0 && trefoil >= 0, detail, "landmark words missing");
  ok &= check(unknot != hopf && unknot != trefoil && hopf != trefoil, detail,
              "landmark classes merged");

  for (const CensusRecord& r : first.records) {
    if (!replay_trace(r, config.ambient)) {
      detail = "trace replay failed for " + r.word_text;
      return false;
    }
  }
  detail = std::to_string(first.records.size()) + " words, " +
           std::to_string(first.class_count) + " classes, all traces replay";
  return ok;
}

// 7. Ten essential closures separated by winding.
bool criterion_witnesses(std::string& detail) {
  const auto witnesses = essential_witnesses(10);
  bool ok = check(witnesses.size() == 10, detail, "wrong witness count");
  std::set<std::vector<int>> windings;
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    const LinkData link = close_mixed(witnesses[i]);
    ok &= check(link.components == 1, detail, "witness is not a knot");
    ok &= check(is_essential(link), detail, "witness not certified essential");
    ok &= check(link.winding == std::vector<int>{static_cast<int>(i) + 1}, detail,
                "unexpected winding");
    windings.insert(link.winding);
  }
  ok &= check(windings.size() == 10, detail, "windings not pairwise distinct");
  return ok;
}

// 8. Model flow verification at the pinned tolerances.
bool criterion_dynamics(std::string& detail) {
  const dynamics::DynamicsReport report = dynamics::verify_dynamics(1000, 1e-12, 1e-4, 1e-9, 1e-12);
  for (const auto& c : report.checks) {
    if (!c.pass) {
      detail = c.name + " observed=" + std::to_string(c.observed);
      return false;
    }
  }
  detail = std::to_string(report.checks.size()) + " checks";
  return report.all_pass;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"presentation soundness (plain n<=5, mixed (1,2),(1,3),(2,2))", 10.0, criterion_presentations},
      {"word problem equals the exponent oracle in B2 (length <= 8)", 30.0, criterion_word_problem_oracle},
      {"conjugacy witness and exponent certificate", 1.0, criterion_conjugacy},
      {"quandle coloring counts 9 / 3 / 25 against the assignment oracle", 5.0, criterion_quandle_counts},
      {"fingerprint invariance under Markov moves (500 words)", 60.0, criterion_markov_invariance},
      {"census determinism, separation, and trace replay", 300.0, criterion_census},
      {"ten essential witnesses with winding 1..10", 1.0, criterion_witnesses},
      {"model flow verification", 30.0, criterion_dynamics},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = false;
    try {
      pass = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > criteria[i].time_limit_seconds) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("time limit exceeded");
    }
    if (!pass) ++failures;
    std::printf("[%s] criterion %zu: %s (%.2fs%s%s)\n", pass ? "PASS" : "FAIL", i + 1,
                criteria[i].name.c_str(), seconds, detail.empty() ? "" : "; ",
                detail.c_str());
  }
  std::printf("%s: %zu/%zu criteria passed\n", failures == 0 ? "RESULT" : "RESULT(FAILURES)",
              criteria.size() - failures, criteria.size());
  return failures;
}
