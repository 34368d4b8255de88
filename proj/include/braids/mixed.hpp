#pragma once

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "braids/braid.hpp"
#include "braids/normal_form.hpp"

namespace braids {

// Words in the mixed braid group on m fixed strands and n moving strands.
// Generators: loop generators a_1..a_m (the first moving strand encircling
// fixed strand i) and braid generators s_1..s_{n-1} acting on the moving
// strands. The group embeds into the braid group on m+n strands with the
// fixed strands at positions 1..m.

enum class MixedKind { loop, braid };

struct MixedLetter {
  MixedKind kind = MixedKind::braid;
  int index = 1;
  int sign = +1;

  auto operator<=>(const MixedLetter&) const = default;
};

class MixedBraidWord {
 public:
  MixedBraidWord(int fixed_strands, int moving_strands, std::vector<MixedLetter> letters = {})
      : fixed_(fixed_strands), moving_(moving_strands) {
    if (fixed_ < 0) throw std::invalid_argument("MixedBraidWord: fixed strand count must be >= 0");
    if (moving_ < 1) throw std::invalid_argument("MixedBraidWord: moving strand count must be >= 1");
    letters_.reserve(letters.size());
    for (const MixedLetter& l : letters) push_back(l);
  }

  int fixed_strands() const { return fixed_; }
  int moving_strands() const { return moving_; }
  const std::vector<MixedLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void push_back(MixedLetter l) {
    if (l.sign != 1 && l.sign != -1) {
      throw std::invalid_argument("MixedBraidWord: sign must be +1 or -1");
    }
    if (l.kind == MixedKind::loop) {
      if (l.index < 1 || l.index > fixed_) {
        throw std::invalid_argument("MixedBraidWord: loop generator index out of range");
      }
    } else {
      if (l.index < 1 || l.index >= moving_) {
        throw std::invalid_argument("MixedBraidWord: braid generator index out of range");
      }
    }
    letters_.push_back(l);
  }

  MixedBraidWord inverse() const {
    MixedBraidWord out(fixed_, moving_);
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
      out.letters_.push_back({it->kind, it->index, -it->sign});
    }
    return out;
  }

  friend MixedBraidWord operator*(const MixedBraidWord& lhs, const MixedBraidWord& rhs) {
    if (lhs.fixed_ != rhs.fixed_ || lhs.moving_ != rhs.moving_) {
      throw std::invalid_argument("MixedBraidWord: cannot concatenate across different groups");
    }
    MixedBraidWord out = lhs;
    out.letters_.insert(out.letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
    return out;
  }

  auto operator<=>(const MixedBraidWord&) const = default;

 private:
  int fixed_;
  int moving_;
  std::vector<MixedLetter> letters_;
};

/// Tokens: "a3" (loop generator 3), "A3" (its inverse), signed integers for
/// the braid generators of the moving strands.
inline MixedBraidWord parse_mixed(std::string_view text, int fixed_strands, int moving_strands) {
  MixedBraidWord out(fixed_strands, moving_strands);
  for (std::string_view tok : detail::split_tokens(text)) {
    if (tok.front() == 'a' || tok.front() == 'A') {
      const int idx = detail::parse_int_token(tok.substr(1), "parse_mixed");
      out.push_back({MixedKind::loop, idx, tok.front() == 'a' ? +1 : -1});
    } else {
      const int k = detail::parse_int_token(tok, "parse_mixed");
      if (k == 0) throw std::invalid_argument("parse_mixed: token 0 is not a generator");
      out.push_back({MixedKind::braid, k < 0 ? -k : k, k < 0 ? -1 : +1});
    }
  }
  return out;
}

inline std::string to_token_string(const MixedBraidWord& w) {
  std::string out;
  for (const MixedLetter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    if (l.kind == MixedKind::loop) {
      out += (l.sign > 0 ? 'a' : 'A');
      out += std::to_string(l.index);
    } else {
      out += std::to_string(l.sign * l.index);
    }
  }
  return out;
}

/// "B1,2: a1 1" form.
inline std::string to_header_string(const MixedBraidWord& w) {
  std::string out = "B" + std::to_string(w.fixed_strands()) + "," +
                    std::to_string(w.moving_strands()) + ":";
  const std::string tokens = to_token_string(w);
  if (!tokens.empty()) out += ' ' + tokens;
  return out;
}

/// Parses "B{m},{n}: tokens"; the header is required.
inline MixedBraidWord parse_mixed_word(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("parse_mixed_word: missing 'B{m},{n}:' header");
  }
  std::string_view head = text.substr(0, colon);
  while (!head.empty() && std::isspace(static_cast<unsigned char>(head.front()))) head.remove_prefix(1);
  while (!head.empty() && std::isspace(static_cast<unsigned char>(head.back()))) head.remove_suffix(1);
  if (head.size() < 4 || (head[0] != 'B' && head[0] != 'b')) {
    throw std::invalid_argument("parse_mixed_word: bad header '" + std::string(head) + "'");
  }
  const std::size_t comma = head.find(',');
  if (comma == std::string_view::npos) {
    throw std::invalid_argument("parse_mixed_word: header must contain 'B{m},{n}'");
  }
  const int m = detail::parse_int_token(head.substr(1, comma - 1), "parse_mixed_word header");
  const int n = detail::parse_int_token(head.substr(comma + 1), "parse_mixed_word header");
  return parse_mixed(text.substr(colon + 1), m, n);
}

/// The moving strand part: braid letters reindexed to a word in B_n. Loop
/// letters do not move strands and are dropped.
inline BraidWord moving_part(const MixedBraidWord& w) {
  BraidWord out(w.moving_strands());
  for (const MixedLetter& l : w.letters()) {
    if (l.kind == MixedKind::braid) out.push_back({l.index, l.sign});
  }
  return out;
}

inline MixedBraidWord as_mixed(int fixed_strands, const BraidWord& moving) {
  MixedBraidWord out(fixed_strands, moving.strands());
  for (const BraidLetter& l : moving.letters()) {
    out.push_back({MixedKind::braid, l.index, l.sign});
  }
  return out;
}

/// Embedding into the braid group on m+n strands: braid generator j maps to
/// the generator m+j, and the loop generator i maps to the word
/// s_m s_{m-1} .. s_{i+1} s_i^2 s_{i+1}^-1 .. s_m^-1, the first moving
/// strand encircling fixed strand i in front of fixed strands i+1..m.
/// A homomorphism on letter sequences; every defining relator of the mixed
/// group maps to a relation of the ambient braid group (see
/// verify_presentation).
inline BraidWord embed(const MixedBraidWord& w) {
  const int m = w.fixed_strands();
  const int total = m + w.moving_strands();
  BraidWord out(total);
  for (const MixedLetter& l : w.letters()) {
    if (l.kind == MixedKind::braid) {
      out.push_back({m + l.index, l.sign});
    } else {
      for (int j = m; j > l.index; --j) out.push_back({j, +1});
      out.push_back({l.index, l.sign});
      out.push_back({l.index, l.sign});
      for (int j = l.index + 1; j <= m; ++j) out.push_back({j, -1});
    }
  }
  return out;
}

struct RelatorCheck {
  std::string family;
  MixedBraidWord lhs;
  MixedBraidWord rhs;
  bool pass = false;
};

struct PresentationReport {
  int fixed_strands = 0;
  int moving_strands = 0;
  std::vector<RelatorCheck> checks;

  bool all_pass() const {
    for (const RelatorCheck& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
};

/// All instances of the five defining relation families of the mixed braid
/// group on (m, n) strands. Families that reference absent generators are
/// skipped. The loop-loop commutation family pairs a_i with the conjugated
/// loop s_1 a_r s_1^-1 for r < i.
inline std::vector<RelatorCheck> mixed_relator_instances(int m, int n) {
  std::vector<RelatorCheck> out;
  auto loop = [&](int i, int sign) { return MixedLetter{MixedKind::loop, i, sign}; };
  auto sig = [&](int j, int sign) { return MixedLetter{MixedKind::braid, j, sign}; };
  auto word = [&](std::vector<MixedLetter> ls) { return MixedBraidWord(m, n, std::move(ls)); };

  for (int i = 1; i + 1 <= n - 1; ++i) {
    out.push_back({"braid(" + std::to_string(i) + ")",
                   word({sig(i, 1), sig(i + 1, 1), sig(i, 1)}),
                   word({sig(i + 1, 1), sig(i, 1), sig(i + 1, 1)})});
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) {
      out.push_back({"commute(" + std::to_string(i) + "," + std::to_string(j) + ")",
                     word({sig(i, 1), sig(j, 1)}), word({sig(j, 1), sig(i, 1)})});
    }
  }
  if (n >= 2) {
    for (int i = 1; i <= m; ++i) {
      out.push_back({"loop-four(" + std::to_string(i) + ")",
                     word({loop(i, 1), sig(1, 1), loop(i, 1), sig(1, 1)}),
                     word({sig(1, 1), loop(i, 1), sig(1, 1), loop(i, 1)})});
    }
  }
  for (int i = 1; i <= m; ++i) {
    for (int k = 2; k <= n - 1; ++k) {
      out.push_back({"loop-far(" + std::to_string(i) + "," + std::to_string(k) + ")",
                     word({loop(i, 1), sig(k, 1)}), word({sig(k, 1), loop(i, 1)})});
    }
  }
  if (n >= 2) {
    for (int i = 1; i <= m; ++i) {
      for (int r = 1; r < i; ++r) {
        out.push_back({"loop-loop(" + std::to_string(i) + "," + std::to_string(r) + ")",
                       word({loop(i, 1), sig(1, 1), loop(r, 1), sig(1, -1)}),
                       word({sig(1, 1), loop(r, 1), sig(1, -1), loop(i, 1)})});
      }
    }
  }
  return out;
}

/// Evaluates every relator instance in the ambient braid group through the
/// embedding. Any failing entry is a defect of embed, not of the input.
inline PresentationReport verify_presentation(int m, int n) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("verify_presentation: need m >= 1 and n >= 1");
  }
  PresentationReport report;
  report.fixed_strands = m;
  report.moving_strands = n;
  report.checks = mixed_relator_instances(m, n);
  for (RelatorCheck& c : report.checks) {
    c.pass = words_equal(embed(c.lhs), embed(c.rhs));
  }
  return report;
}

}  // namespace braids
