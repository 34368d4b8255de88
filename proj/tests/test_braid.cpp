#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "braids/braid.hpp"
#include "support/helpers.hpp"

using namespace braids;

TEST_CASE("parse_braid maps signed tokens to letters", "[braid]") {
  const BraidWord cube = parse_braid("1 1 1", 2);
  REQUIRE(cube.strands() == 2);
  REQUIRE(cube.letters() == std::vector<BraidLetter>{{1, 1}, {1, 1}, {1, 1}});

  const BraidWord empty = parse_braid("", 3);
  REQUIRE(empty.strands() == 3);
  REQUIRE(empty.empty());

  const BraidWord fig8 = parse_braid("1 -2 1 -2", 3);
  REQUIRE(fig8.letters() == std::vector<BraidLetter>{{1, 1}, {2, -1}, {1, 1}, {2, -1}});
}

TEST_CASE("parse_braid rejects bad input", "[braid]") {
  REQUIRE_THROWS_AS(parse_braid("1 x", 3), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_braid("3", 3), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_braid("0", 3), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_braid("1", 1), std::invalid_argument);
  REQUIRE_THROWS_AS(BraidWord(0), std::invalid_argument);
}

TEST_CASE("word serialization round trips", "[braid]") {
  auto gen = test_support::rng(7001);
  for (int trial = 0; trial < 100; ++trial) {
    const BraidWord w = test_support::random_word(gen, 1 + trial % 4, 8);
    REQUIRE(parse_braid(to_token_string(w), w.strands()) == w);
    REQUIRE(parse_word(to_header_string(w)) == w);
  }
  REQUIRE(to_header_string(parse_braid("", 3)) == "B3:");
  REQUIRE(parse_word("1 2") == parse_braid("1 2", 3));  // inferred strand count
}

TEST_CASE("free_reduce cancels adjacent inverse pairs", "[braid]") {
  REQUIRE(free_reduce(parse_braid("1 -1", 2)).empty());
  REQUIRE(free_reduce(parse_braid("1 2 -2 1", 3)) == parse_braid("1 1", 3));
  REQUIRE(free_reduce(parse_braid("1 1 1", 2)) == parse_braid("1 1 1", 2));

  auto gen = test_support::rng(7002);
  for (int trial = 0; trial < 200; ++trial) {
    const BraidWord w = test_support::random_word(gen, 2 + trial % 3, 12);
    const BraidWord r = free_reduce(w);
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
      const bool cancels = r.letters()[i].index == r.letters()[i + 1].index &&
                           r.letters()[i].sign == -r.letters()[i + 1].sign;
      REQUIRE_FALSE(cancels);
    }
    REQUIRE(free_reduce(w * w.inverse()).empty());
  }
}

TEST_CASE("strand_permutation sends generator i to the adjacent transposition", "[braid]") {
  REQUIRE(strand_permutation(parse_braid("1", 2)) == Permutation::transposition(2, 1));
  REQUIRE(strand_permutation(parse_braid("", 3)).is_identity());
  // s1 s2 acts as the 3-cycle 0 -> 1 -> 2 -> 0 on end positions.
  REQUIRE(strand_permutation(parse_braid("1 2", 3)).images() == std::vector<int>{1, 2, 0});
}

TEST_CASE("strand_permutation is a homomorphism", "[braid]") {
  auto gen = test_support::rng(7003);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 4;
    const BraidWord u = test_support::random_word(gen, n, 6);
    const BraidWord v = test_support::random_word(gen, n, 6);
    REQUIRE(strand_permutation(u * v) == strand_permutation(u) * strand_permutation(v));
  }
}

TEST_CASE("exponent_sum", "[braid]") {
  REQUIRE(exponent_sum(parse_braid("1 1 1", 2)) == 3);
  REQUIRE(exponent_sum(parse_braid("1 -2", 3)) == 0);

  auto gen = test_support::rng(7004);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 3;
    const BraidWord u = test_support::random_word(gen, n, 6);
    const BraidWord v = test_support::random_word(gen, n, 6);
    REQUIRE(exponent_sum(u * v) == exponent_sum(u) + exponent_sum(v));
    REQUIRE(exponent_sum(conjugated(parse_braid("1", n), u)) == 1);
    REQUIRE(exponent_sum(free_reduce(u)) == exponent_sum(u));
  }
}

TEST_CASE("include raises the strand count only", "[braid]") {
  REQUIRE(include(parse_braid("1", 2), 3) == parse_braid("1", 3));
  REQUIRE(include(parse_braid("", 2), 5) == parse_braid("", 5));
  REQUIRE(include(parse_braid("1 2", 3), 4) == parse_braid("1 2", 4));
  REQUIRE_THROWS_AS(include(parse_braid("1 2", 3), 2), std::invalid_argument);
}

TEST_CASE("word enumeration is exhaustive, ordered, and duplicate free", "[braid]") {
  const std::vector<BraidWord> tiny = enumerate_words(2, 1);
  REQUIRE(tiny.size() == 3);
  REQUIRE(tiny[0].empty());
  REQUIRE(tiny[1] == parse_braid("1", 2));
  REQUIRE(tiny[2] == parse_braid("-1", 2));

  REQUIRE(enumerate_words(3, 0).size() == 1);
  REQUIRE(enumerate_words(3, 2).size() == 21);  // 1 + 4 + 16
  REQUIRE(enumerate_words(1, 5).size() == 1);

  const std::vector<BraidWord> all = enumerate_words(3, 3);
  REQUIRE(all.size() == WordEnumerator::total(3, 3));
  // Letter rank: index ascending, positive before negative.
  auto ranks = [](const BraidWord& w) {
    std::vector<int> out;
    for (const BraidLetter& l : w.letters()) out.push_back(2 * (l.index - 1) + (l.sign < 0));
    return out;
  };
  std::set<std::vector<BraidLetter>> distinct;
  for (std::size_t i = 0; i < all.size(); ++i) {
    distinct.insert(all[i].letters());
    if (i == 0) continue;
    REQUIRE(all[i - 1].size() <= all[i].size());  // length monotone
    if (all[i - 1].size() == all[i].size()) {
      REQUIRE(ranks(all[i - 1]) < ranks(all[i]));  // lexicographic within a length
    }
  }
  REQUIRE(distinct.size() == all.size());
}
