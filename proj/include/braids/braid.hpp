#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "braids/permutation.hpp"

namespace braids {

/// One letter of a braid word: the generator with 1-based index `index`
/// (acting on strand positions index-1 and index, 0-based) raised to the
/// power `sign` (+1 or -1).
///
/// Sign convention: in a positive letter the strand entering at position
/// index-1 passes under the strand entering at position index.
struct BraidLetter {
  int index = 1;
  int sign = +1;

  auto operator<=>(const BraidLetter&) const = default;
};

/// A word in the generators of the braid group on `strands` strands.
/// The empty word is the identity. Words are immutable values apart from
/// push_back, which validates the letter.
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<BraidLetter> letters = {})
      : strands_(strands) {
    if (strands < 1) throw std::invalid_argument("BraidWord: strands must be >= 1");
    letters_.reserve(letters.size());
    for (const BraidLetter& l : letters) push_back(l);
  }

  int strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void push_back(BraidLetter l) {
    if (l.index < 1 || l.index >= strands_) {
      throw std::invalid_argument("BraidWord: generator index " + std::to_string(l.index) +
                                  " out of range for " + std::to_string(strands_) + " strands");
    }
    if (l.sign != 1 && l.sign != -1) {
      throw std::invalid_argument("BraidWord: sign must be +1 or -1");
    }
    letters_.push_back(l);
  }

  BraidWord inverse() const {
    BraidWord out(strands_);
    out.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
      out.letters_.push_back({it->index, -it->sign});
    }
    return out;
  }

  /// Concatenation; both operands must live in the same group.
  friend BraidWord operator*(const BraidWord& lhs, const BraidWord& rhs) {
    if (lhs.strands_ != rhs.strands_) {
      throw std::invalid_argument("BraidWord: cannot concatenate words with different strand counts");
    }
    BraidWord out = lhs;
    out.letters_.insert(out.letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
    return out;
  }

  auto operator<=>(const BraidWord&) const = default;

 private:
  int strands_;
  std::vector<BraidLetter> letters_;
};

namespace detail {

inline int parse_int_token(std::string_view tok, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw std::invalid_argument(std::string(what) + ": malformed token '" + std::string(tok) + "'");
  }
  return value;
}

inline std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace detail

/// Parses a whitespace-separated list of signed non-zero integers; token k
/// stands for the generator |k| with the sign of k.
inline BraidWord parse_braid(std::string_view text, int strands) {
  BraidWord out(strands);
  for (std::string_view tok : detail::split_tokens(text)) {
    const int k = detail::parse_int_token(tok, "parse_braid");
    if (k == 0) throw std::invalid_argument("parse_braid: token 0 is not a generator");
    out.push_back({k < 0 ? -k : k, k < 0 ? -1 : +1});
  }
  return out;
}

inline std::string to_token_string(const BraidWord& w) {
  std::string out;
  for (const BraidLetter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l.sign * l.index);
  }
  return out;
}

/// "B3: 1 -2 1" form; parse_word accepts this header and plain token lists.
inline std::string to_header_string(const BraidWord& w) {
  std::string out = "B" + std::to_string(w.strands()) + ":";
  const std::string tokens = to_token_string(w);
  if (!tokens.empty()) out += ' ' + tokens;
  return out;
}

/// Parses "Bn: tokens" or a bare token list. Without a header the strand
/// count comes from `fallback_strands`, or failing that from the largest
/// generator index used (+1), so "1 2" parses as a word in B3.
inline BraidWord parse_word(std::string_view text,
                            std::optional<int> fallback_strands = std::nullopt) {
  std::string_view body = text;
  std::optional<int> strands;
  const std::size_t colon = text.find(':');
  if (colon != std::string_view::npos) {
    std::string_view head = text.substr(0, colon);
    while (!head.empty() && std::isspace(static_cast<unsigned char>(head.front()))) head.remove_prefix(1);
    while (!head.empty() && std::isspace(static_cast<unsigned char>(head.back()))) head.remove_suffix(1);
    if (head.size() < 2 || (head[0] != 'B' && head[0] != 'b')) {
      throw std::invalid_argument("parse_word: bad header '" + std::string(head) + "'");
    }
    strands = detail::parse_int_token(head.substr(1), "parse_word header");
    body = text.substr(colon + 1);
  } else if (fallback_strands) {
    strands = *fallback_strands;
  } else {
    int max_index = 0;
    for (std::string_view tok : detail::split_tokens(text)) {
      const int k = detail::parse_int_token(tok, "parse_word");
      max_index = std::max(max_index, k < 0 ? -k : k);
    }
    strands = max_index + 1;
  }
  return parse_braid(body, *strands);
}

/// Removes all adjacent inverse pairs; the result represents the same
/// group element and contains no cancelling pair.
inline BraidWord free_reduce(const BraidWord& w) {
  std::vector<BraidLetter> stack;
  stack.reserve(w.size());
  for (const BraidLetter& l : w.letters()) {
    if (!stack.empty() && stack.back().index == l.index && stack.back().sign == -l.sign) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return BraidWord(w.strands(), std::move(stack));
}

/// Image of a word under the homomorphism onto the symmetric group that
/// sends generator i to the transposition of positions i-1, i. Satisfies
/// strand_permutation(u * v) == strand_permutation(u) * strand_permutation(v).
inline Permutation strand_permutation(const BraidWord& w) {
  Permutation p = Permutation::identity(w.strands());
  for (const BraidLetter& l : w.letters()) {
    p = p * Permutation::transposition(w.strands(), l.index);
  }
  return p;
}

/// Sum of letter signs (the abelianization). Conjugation invariant.
inline long long exponent_sum(const BraidWord& w) {
  long long s = 0;
  for (const BraidLetter& l : w.letters()) s += l.sign;
  return s;
}

/// The same letter sequence viewed in a larger braid group.
inline BraidWord include(const BraidWord& w, int new_strands) {
  if (new_strands < w.strands()) {
    throw std::invalid_argument("include: cannot lower strand count");
  }
  return BraidWord(new_strands, w.letters());
}

inline BraidWord conjugated(const BraidWord& w, const BraidWord& c) {
  return c * w * c.inverse();
}

/// Deterministic stream of all words over the signed generators of B_n with
/// length <= max_length, ordered by length then lexicographically with the
/// letter order s1, s1^-1, s2, s2^-1, ...
class WordEnumerator {
 public:
  WordEnumerator(int strands, int max_length)
      : strands_(strands), max_length_(max_length), alphabet_(2 * (strands - 1)) {
    if (strands < 1) throw std::invalid_argument("WordEnumerator: strands must be >= 1");
    if (max_length < 0) throw std::invalid_argument("WordEnumerator: max_length must be >= 0");
  }

  std::optional<BraidWord> next() {
    if (done_) return std::nullopt;
    BraidWord out(strands_);
    for (int r : ranks_) out.push_back(letter_of_rank(r));
    advance();
    return out;
  }

  static std::uint64_t total(int strands, int max_length) {
    const std::uint64_t a = static_cast<std::uint64_t>(2 * (strands - 1));
    std::uint64_t sum = 0, pow = 1;
    for (int len = 0; len <= max_length; ++len) {
      sum += pow;
      pow *= a;
      if (a == 0) break;  // only the empty word exists
    }
    return sum;
  }

 private:
  BraidLetter letter_of_rank(int r) const {
    return {1 + r / 2, (r % 2 == 0) ? +1 : -1};
  }

  void advance() {
    int pos = static_cast<int>(ranks_.size()) - 1;
    while (pos >= 0) {
      if (++ranks_[pos] < alphabet_) return;
      ranks_[pos] = 0;
      --pos;
    }
    // carry past the front: move to the next length
    if (static_cast<int>(ranks_.size()) >= max_length_ || alphabet_ == 0) {
      done_ = true;
      return;
    }
    ranks_.assign(ranks_.size() + 1, 0);
  }

  int strands_;
  int max_length_;
  int alphabet_;
  std::vector<int> ranks_;
  bool done_ = false;
};

inline std::vector<BraidWord> enumerate_words(int strands, int max_length) {
  WordEnumerator en(strands, max_length);
  std::vector<BraidWord> out;
  while (auto w = en.next()) out.push_back(std::move(*w));
  return out;
}

}  // namespace braids
