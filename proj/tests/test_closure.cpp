#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "braids/closure.hpp"
#include "support/helpers.hpp"

using namespace braids;

namespace {

// Independent component counter: follow each strand through the crossings by
// simulating positions, then close up bottom to top and count orbits. Shares
// nothing with Permutation::cycles.
int count_components_by_following(const BraidWord& w) {
  const int n = w.strands();
  std::vector<int> end_position(n);
  for (int start = 0; start < n; ++start) {
    int pos = start;
    for (const BraidLetter& l : w.letters()) {
      if (pos == l.index - 1) {
        pos = l.index;
      } else if (pos == l.index) {
        pos = l.index - 1;
      }
    }
    end_position[start] = pos;
  }
  std::set<int> visited;
  int components = 0;
  for (int start = 0; start < n; ++start) {
    if (visited.contains(start)) continue;
    ++components;
    int s = start;
    while (visited.insert(s).second) s = end_position[s];
  }
  return components;
}

}  // namespace

TEST_CASE("close counts components through the permutation", "[closure]") {
  const LinkData unlink = close(parse_braid("", 3));
  REQUIRE(unlink.components == 3);
  REQUIRE(unlink.ambient == Ambient::sphere3);
  REQUIRE(unlink.winding == std::vector<int>{0, 0, 0});

  REQUIRE(close(parse_braid("1 1 1", 2)).components == 1);  // trefoil
  REQUIRE(close(parse_braid("1 1", 2)).components == 2);    // Hopf link

  auto gen = test_support::rng(7401);
  for (int trial = 0; trial < 200; ++trial) {
    const BraidWord w = test_support::random_word(gen, 2 + trial % 4, 10);
    REQUIRE(close(w).components == count_components_by_following(w));
  }
}

TEST_CASE("linking matrix on small links", "[closure]") {
  const auto hopf = linking_matrix(parse_braid("1 1", 2));
  REQUIRE(hopf[0][1] == 1);
  REQUIRE(hopf[1][0] == 1);
  REQUIRE(hopf[0][0] == 0);

  REQUIRE(linking_matrix(parse_braid("-1 -1", 2))[0][1] == -1);
  REQUIRE(linking_matrix(parse_braid("", 2))[0][1] == 0);

  // (2,4) torus link: linking number 2.
  REQUIRE(linking_matrix(parse_braid("1 1 1 1", 2))[0][1] == 2);

  auto gen = test_support::rng(7402);
  for (int trial = 0; trial < 100; ++trial) {
    const BraidWord w = test_support::random_word(gen, 2 + trial % 3, 10);
    const auto lk = linking_matrix(w);
    for (std::size_t p = 0; p < lk.size(); ++p) {
      REQUIRE(lk[p][p] == 0);
      for (std::size_t q = 0; q < lk.size(); ++q) REQUIRE(lk[p][q] == lk[q][p]);
    }
  }
}

TEST_CASE("close_mixed reports winding as strand count per component", "[closure]") {
  const LinkData core = close_mixed(parse_mixed("", 1, 1));
  REQUIRE(core.ambient == Ambient::solid_torus);
  REQUIRE(core.components == 1);
  REQUIRE(core.winding == std::vector<int>{1});

  const LinkData two = close_mixed(parse_mixed("1", 1, 2));
  REQUIRE(two.components == 1);
  REQUIRE(two.winding == std::vector<int>{2});

  const LinkData three = close_mixed(parse_mixed("", 1, 3));
  REQUIRE(three.components == 3);
  REQUIRE(three.winding == std::vector<int>{1, 1, 1});

  REQUIRE_THROWS_AS(close_mixed(MixedBraidWord(2, 1)), std::invalid_argument);

  // The winding multiset always sums to the number of moving strands.
  auto gen = test_support::rng(7403);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 4;
    const MixedBraidWord w = as_mixed(1, test_support::random_word(gen, n, 8));
    const LinkData link = close_mixed(w);
    int sum = 0;
    for (int m : link.winding) sum += m;
    REQUIRE(sum == n);
    REQUIRE(is_essential(link));
  }
}

TEST_CASE("is_essential demands a solid torus closure", "[closure]") {
  REQUIRE_THROWS_AS(is_essential(close(parse_braid("1", 2))), std::invalid_argument);
  LinkData zero;
  zero.ambient = Ambient::solid_torus;
  zero.components = 1;
  zero.winding = {0};
  REQUIRE_FALSE(is_essential(zero));
}

TEST_CASE("markov moves preserve closure invariants", "[closure]") {
  const BraidWord one(1);
  const BraidWord stab = markov_stabilize(one, +1);
  REQUIRE(stab == parse_braid("1", 2));
  REQUIRE(close(stab).components == 1);
  REQUIRE(markov_destabilize(stab).value() == one);

  REQUIRE(markov_conjugate(parse_braid("1 1 1", 2), parse_braid("1", 2)) ==
          parse_braid("1 1 1", 2));

  auto gen = test_support::rng(7404);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 3;
    const BraidWord w = test_support::random_word(gen, n, 8);
    const BraidWord c = test_support::random_word(gen, n, 5);
    const LinkData base = close(w);

    const LinkData conj = close(markov_conjugate(w, c));
    REQUIRE(conj.components == base.components);
    REQUIRE(canonical_linking(conj.linking, false) == canonical_linking(base.linking, false));

    for (int sign : {+1, -1}) {
      const LinkData stabbed = close(markov_stabilize(w, sign));
      REQUIRE(stabbed.components == base.components);
      REQUIRE(canonical_linking(stabbed.linking, false) == canonical_linking(base.linking, false));
    }

    // Round trip whenever the destabilization precondition holds.
    const BraidWord up = markov_stabilize(w, trial % 2 == 0 ? +1 : -1);
    const auto down = markov_destabilize(up);
    REQUIRE(down.has_value());
    REQUIRE(*down == free_reduce(w));
  }
}

TEST_CASE("destabilize precondition", "[closure]") {
  REQUIRE_FALSE(markov_destabilize(parse_braid("1 1", 2)).has_value());
  REQUIRE_FALSE(markov_destabilize(BraidWord(1)).has_value());
  REQUIRE_FALSE(markov_destabilize(parse_braid("2 1 2", 3)).has_value());
  // Unique top letter in the middle still destabilizes.
  const auto mid = markov_destabilize(parse_braid("1 2 1", 3));
  REQUIRE(mid.has_value());
  REQUIRE(*mid == parse_braid("1 1", 2));
  // The top letter pair cancels first, leaving no occurrence.
  REQUIRE_FALSE(markov_destabilize(parse_braid("2 -2 1", 3)).has_value());

  // Closure class is preserved by middle destabilization.
  const LinkData a = close(parse_braid("1 2 1", 3));
  const LinkData b = close(parse_braid("1 1", 2));
  REQUIRE(a.components == b.components);
  REQUIRE(canonical_linking(a.linking, false) == canonical_linking(b.linking, false));
}

TEST_CASE("include adds exactly one split component", "[closure]") {
  auto gen = test_support::rng(7405);
  for (int trial = 0; trial < 80; ++trial) {
    const BraidWord w = test_support::random_word(gen, 2 + trial % 3, 8);
    REQUIRE(close(include(w, w.strands() + 1)).components == close(w).components + 1);
  }
}

TEST_CASE("link data serializes to one stable line", "[closure]") {
  REQUIRE(close(parse_braid("1 1", 2)).to_line() ==
          "ambient=sphere3 components=2 winding=0,0 linking=1");
  REQUIRE(close_mixed(parse_mixed("1", 1, 2)).to_line() ==
          "ambient=solid_torus components=1 winding=2 linking=");
}
