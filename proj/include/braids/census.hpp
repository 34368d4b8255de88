#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "braids/braid.hpp"
#include "braids/closure.hpp"
#include "braids/mixed.hpp"
#include "braids/normal_form.hpp"
#include "braids/quandle.hpp"

namespace braids {

// Census of closed braids at bounded complexity. Words are fingerprinted by
// genuine closure invariants and merged into equivalence classes only when a
// replayable move sequence connects them, so classes are never over-merged:
// fingerprint-equal but unconnected words stay apart as "not yet
// distinguished".

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Fingerprints

struct CensusFingerprint {
  Ambient ambient = Ambient::sphere3;
  int components = 0;
  std::vector<int> winding;              // sorted; empty in the three-sphere
  std::vector<int> linking;              // canonical upper triangle, negation-identified
  std::vector<std::uint64_t> panel;      // coloring counts over the quandle panel

  auto operator<=>(const CensusFingerprint&) const = default;

  std::string to_string() const {
    std::string out = "ambient=";
    out += ambient_name(ambient);
    out += " components=" + std::to_string(components);
    out += " winding=";
    for (std::size_t i = 0; i < winding.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(winding[i]);
    }
    out += " linking=";
    for (std::size_t i = 0; i < linking.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(linking[i]);
    }
    out += " panel=";
    for (std::size_t i = 0; i < panel.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(panel[i]);
    }
    return out;
  }

  std::uint64_t hash() const { return fnv1a(to_string()); }
};

inline CensusFingerprint fingerprint(const BraidWord& w, const std::vector<int>& panel = {3, 4, 5}) {
  const LinkData link = close(w);
  CensusFingerprint fp;
  fp.ambient = Ambient::sphere3;
  fp.components = link.components;
  fp.linking = canonical_linking(link.linking, true);
  for (int q : panel) fp.panel.push_back(coloring_count(w, dihedral(q)));
  return fp;
}

inline CensusFingerprint fingerprint(const MixedBraidWord& w, const std::vector<int>& panel = {3, 4, 5}) {
  const LinkData link = close_mixed(w);
  CensusFingerprint fp;
  fp.ambient = Ambient::solid_torus;
  fp.components = link.components;
  fp.winding = link.winding;
  fp.linking = canonical_linking(link.linking, true);
  for (int q : panel) fp.panel.push_back(coloring_count(moving_part(w), dihedral(q)));
  return fp;
}

// ---------------------------------------------------------------------------
// Moves

enum class MoveKind { rotate_left, rotate_right, conjugate, stabilize, destabilize };

struct Move {
  MoveKind kind = MoveKind::rotate_left;
  int index = 0;  // conjugating generator index
  int sign = 0;   // conjugator or stabilization sign

  std::string to_string() const {
    switch (kind) {
      case MoveKind::rotate_left: return "rotl";
      case MoveKind::rotate_right: return "rotr";
      case MoveKind::conjugate:
        return std::string("conj(") + (sign > 0 ? "" : "-") + std::to_string(index) + ")";
      case MoveKind::stabilize: return sign > 0 ? "stab(+)" : "stab(-)";
      case MoveKind::destabilize: return "destab";
    }
    return "?";
  }
};

/// Applies one move; the result is freely reduced. Returns nullopt when the
/// move does not apply (bad conjugator index, failed destabilization
/// precondition). Deterministic, so recorded move lists replay exactly.
inline std::optional<BraidWord> apply_move(const BraidWord& w, const Move& m) {
  switch (m.kind) {
    case MoveKind::rotate_left: {
      if (w.empty()) return free_reduce(w);
      std::vector<BraidLetter> letters(w.letters().begin() + 1, w.letters().end());
      letters.push_back(w.letters().front());
      return free_reduce(BraidWord(w.strands(), std::move(letters)));
    }
    case MoveKind::rotate_right: {
      if (w.empty()) return free_reduce(w);
      std::vector<BraidLetter> letters{w.letters().back()};
      letters.insert(letters.end(), w.letters().begin(), w.letters().end() - 1);
      return free_reduce(BraidWord(w.strands(), std::move(letters)));
    }
    case MoveKind::conjugate: {
      if (m.index < 1 || m.index >= w.strands()) return std::nullopt;
      BraidWord c(w.strands());
      c.push_back({m.index, m.sign});
      return free_reduce(markov_conjugate(w, c));
    }
    case MoveKind::stabilize:
      return free_reduce(markov_stabilize(w, m.sign));
    case MoveKind::destabilize: {
      auto down = markov_destabilize(w);
      if (!down) return std::nullopt;
      return free_reduce(*down);
    }
  }
  return std::nullopt;
}

inline std::optional<BraidWord> replay_moves(const BraidWord& start, const std::vector<Move>& moves) {
  BraidWord current = free_reduce(start);
  for (const Move& m : moves) {
    auto next = apply_move(current, m);
    if (!next) return std::nullopt;
    current = std::move(*next);
  }
  return current;
}

namespace detail_census {

struct ReachEntry {
  BraidWord word;
  std::vector<Move> moves;  // from the search root to `word`
};

inline std::vector<Move> candidate_moves(const BraidWord& w, bool allow_stabilization) {
  std::vector<Move> out;
  out.push_back({MoveKind::rotate_left, 0, 0});
  out.push_back({MoveKind::rotate_right, 0, 0});
  for (int i = 1; i < w.strands(); ++i) {
    out.push_back({MoveKind::conjugate, i, +1});
    out.push_back({MoveKind::conjugate, i, -1});
  }
  if (allow_stabilization) {
    out.push_back({MoveKind::stabilize, 0, +1});
    out.push_back({MoveKind::stabilize, 0, -1});
    out.push_back({MoveKind::destabilize, 0, 0});
  }
  return out;
}

/// Breadth-first closure of a word under the move set, keyed by normal form,
/// so distinct nodes are distinct group elements. Sets *truncated when the
/// node cap stopped the search early.
inline std::map<std::string, ReachEntry> reachable_set(const BraidWord& start, int depth,
                                                       bool allow_stabilization,
                                                       std::size_t node_cap, bool* truncated) {
  std::map<std::string, ReachEntry> seen;
  const BraidWord root = free_reduce(start);
  seen.emplace(left_normal_form(root).key(), ReachEntry{root, {}});
  std::vector<ReachEntry> frontier{ReachEntry{root, {}}};
  for (int level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<ReachEntry> next_frontier;
    for (const ReachEntry& entry : frontier) {
      for (const Move& m : candidate_moves(entry.word, allow_stabilization)) {
        auto next = apply_move(entry.word, m);
        if (!next) continue;
        std::string key = left_normal_form(*next).key();
        if (seen.contains(key)) continue;
        if (seen.size() >= node_cap) {
          if (truncated) *truncated = true;
          return seen;
        }
        std::vector<Move> moves = entry.moves;
        moves.push_back(m);
        ReachEntry reached{std::move(*next), std::move(moves)};
        seen.emplace(std::move(key), reached);
        next_frontier.push_back(std::move(reached));
      }
    }
    frontier = std::move(next_frontier);
  }
  return seen;
}

}  // namespace detail_census

/// Bounded search for a move sequence carrying u to v (as group elements,
/// checked through normal forms). Absent means "not connected within depth",
/// never "non-equivalent". In the three-sphere the moves are rotation,
/// single-generator conjugation, stabilization, and destabilization.
inline std::optional<std::vector<Move>> merge_search(const BraidWord& u, const BraidWord& v,
                                                     int depth, bool allow_stabilization = true,
                                                     std::size_t node_cap = 20000) {
  const std::string target = left_normal_form(v).key();
  bool truncated = false;
  const auto reach = detail_census::reachable_set(u, depth, allow_stabilization, node_cap, &truncated);
  const auto hit = reach.find(target);
  if (hit == reach.end()) return std::nullopt;
  return hit->second.moves;
}

/// Solid torus variant: closed braids are isotopic exactly when the braids
/// are conjugate, so only rotation and conjugation apply; strand counts
/// never change.
inline std::optional<std::vector<Move>> merge_search(const MixedBraidWord& u,
                                                     const MixedBraidWord& v, int depth,
                                                     std::size_t node_cap = 20000) {
  if (u.fixed_strands() != 1 || v.fixed_strands() != 1) {
    throw std::invalid_argument("merge_search: solid torus words need one fixed strand");
  }
  if (u.moving_strands() != v.moving_strands()) return std::nullopt;
  return merge_search(moving_part(u), moving_part(v), depth, false, node_cap);
}

// ---------------------------------------------------------------------------
// Census

struct CensusConfig {
  Ambient ambient = Ambient::sphere3;
  int max_strands = 3;       // braid index bound (moving strands in the solid torus)
  int max_length = 6;
  int depth = 4;             // move search depth
  std::vector<int> panel = {3, 4, 5};
  std::size_t max_words = 100000;
  std::size_t node_cap = 20000;

  std::string to_string() const {
    std::string out = "ambient=";
    out += ambient_name(ambient);
    out += " strands<=" + std::to_string(max_strands);
    out += " length<=" + std::to_string(max_length);
    out += " depth=" + std::to_string(depth);
    out += " panel=";
    for (std::size_t i = 0; i < panel.size(); ++i) {
      if (i) out += ',';
      out += 'd' + std::to_string(panel[i]);
    }
    out += " max_words=" + std::to_string(max_words);
    out += " node_cap=" + std::to_string(node_cap);
    return out;
  }
};

/// One certified step of a class-merge trace: `moves` replays from the word
/// written in `from_text` to a word equal to the one in `to_text`. A trace
/// walks hops in either direction; backward traversal of a hop is verified
/// by the same forward replay.
struct TraceHop {
  std::string from_text;
  std::string to_text;
  std::vector<Move> moves;
  bool forward = true;
};

struct CensusRecord {
  std::string word_text;
  CensusFingerprint fp;
  std::uint64_t fp_hash = 0;
  int class_id = 0;
  std::string representative_text;
  std::vector<TraceHop> trace;  // word -> representative
};

struct BucketSummary {
  CensusFingerprint fp;
  int class_count = 0;
  int word_count = 0;
};

struct CensusReport {
  CensusConfig config;
  bool complete = true;
  int class_count = 0;
  std::vector<CensusRecord> records;
  std::vector<BucketSummary> buckets;

  void write(std::ostream& os, bool records_only = false) const;
  std::string to_text(bool records_only = false) const {
    std::ostringstream os;
    write(os, records_only);
    return os.str();
  }
};

namespace detail_census {

inline BraidWord parse_census_word(const std::string& text, Ambient ambient) {
  if (ambient == Ambient::sphere3) return parse_word(text);
  return moving_part(parse_mixed_word(text));
}

inline std::string census_word_text(const BraidWord& w, Ambient ambient) {
  if (ambient == Ambient::sphere3) return to_header_string(w);
  return to_header_string(as_mixed(1, w));
}

struct MergeForest {
  struct Edge {
    int from = 0;
    int to = 0;
    std::vector<Move> moves;  // replay(words[from], moves) equals words[to]
  };

  std::vector<int> parent;
  std::vector<Edge> edges;                     // spanning edges only
  std::vector<std::vector<int>> adjacency;     // indices into `edges`

  explicit MergeForest(int n) : parent(static_cast<std::size_t>(n)), adjacency(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  /// Roots are kept at the least member index, so the class representative
  /// is always the earliest enumerated word.
  bool unite(int a, int b, std::vector<Move> moves) {
    const int ra = find(a);
    const int rb = find(b);
    if (ra == rb) return false;
    parent[std::max(ra, rb)] = std::min(ra, rb);
    const int edge_id = static_cast<int>(edges.size());
    edges.push_back({a, b, std::move(moves)});
    adjacency[a].push_back(edge_id);
    adjacency[b].push_back(edge_id);
    return true;
  }
};

}  // namespace detail_census

/// Verifies one record's trace: each hop replays to words_equal-checked
/// equality and chains from the record's word to its representative.
inline bool replay_trace(const CensusRecord& record, Ambient ambient) {
  BraidWord current = detail_census::parse_census_word(record.word_text, ambient);
  for (const TraceHop& hop : record.trace) {
    const BraidWord from = detail_census::parse_census_word(hop.from_text, ambient);
    const BraidWord to = detail_census::parse_census_word(hop.to_text, ambient);
    const auto replayed = replay_moves(from, hop.moves);
    if (!replayed || replayed->strands() != to.strands() || !words_equal(*replayed, to)) {
      return false;
    }
    const BraidWord& entry = hop.forward ? from : to;
    const BraidWord& exit = hop.forward ? to : from;
    if (current.strands() != entry.strands() || !words_equal(current, entry)) return false;
    current = exit;
  }
  const BraidWord rep = detail_census::parse_census_word(record.representative_text, ambient);
  return current.strands() == rep.strands() && words_equal(current, rep);
}

inline CensusReport run_census(const CensusConfig& config) {
  if (config.max_strands < 1 || config.max_length < 0 || config.depth < 0) {
    throw std::invalid_argument("run_census: bounds must be positive");
  }
  CensusReport report;
  report.config = config;

  // Deterministic word universe: strand count ascending, then the canonical
  // enumeration order. In the solid torus the words are the moving parts of
  // one-fixed-strand mixed braids.
  std::vector<BraidWord> words;
  for (int n = 1; n <= config.max_strands && report.complete; ++n) {
    WordEnumerator en(n, config.max_length);
    while (auto w = en.next()) {
      if (words.size() >= config.max_words) {
        report.complete = false;
        break;
      }
      words.push_back(std::move(*w));
    }
  }
  const int count = static_cast<int>(words.size());

  const bool sphere = config.ambient == Ambient::sphere3;
  std::vector<CensusFingerprint> fps;
  std::vector<std::string> keys;
  fps.reserve(words.size());
  keys.reserve(words.size());
  std::map<std::string, int> first_with_key;
  detail_census::MergeForest forest(count);
  for (int i = 0; i < count; ++i) {
    fps.push_back(sphere ? fingerprint(words[i], config.panel)
                         : fingerprint(as_mixed(1, words[i]), config.panel));
    keys.push_back(left_normal_form(words[i]).key());
    // Words that are literally the same group element merge with an empty hop.
    auto [it, inserted] = first_with_key.emplace(keys.back(), i);
    if (!inserted) forest.unite(it->second, i, {});
  }

  // Certified merges: breadth-first move closure of each word, matched
  // against the other words through normal form keys.
  for (int i = 0; i < count; ++i) {
    bool truncated = false;
    const auto reach = detail_census::reachable_set(words[i], config.depth, sphere,
                                                    config.node_cap, &truncated);
    if (truncated) report.complete = false;
    for (const auto& [key, entry] : reach) {
      const auto hit = first_with_key.find(key);
      if (hit == first_with_key.end() || hit->second == i) continue;
      const int j = hit->second;
      if (fps[i] != fps[j]) {
        throw std::logic_error("run_census: move path between different fingerprints");
      }
      forest.unite(i, j, entry.moves);
    }
  }

  // Class ids in enumeration order of the representatives.
  std::map<int, int> class_id_of_root;
  for (int i = 0; i < count; ++i) {
    const int root = forest.find(i);
    if (!class_id_of_root.contains(root)) {
      const int id = static_cast<int>(class_id_of_root.size());
      class_id_of_root.emplace(root, id);
    }
  }
  report.class_count = static_cast<int>(class_id_of_root.size());

  // Trace hops from each word to its class representative along the
  // spanning forest (breadth-first from the representative).
  std::vector<std::vector<TraceHop>> traces(words.size());
  {
    std::vector<int> hop_edge(words.size(), -1);
    std::vector<int> from_node(words.size(), -1);
    std::vector<char> visited(words.size(), 0);
    for (const auto& [root, id] : class_id_of_root) {
      (void)id;
      std::vector<int> queue{root};
      visited[root] = 1;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const int node = queue[head];
        for (int edge_id : forest.adjacency[node]) {
          const auto& e = forest.edges[edge_id];
          const int other = e.from == node ? e.to : e.from;
          if (visited[other]) continue;
          visited[other] = 1;
          hop_edge[other] = edge_id;
          from_node[other] = node;
          queue.push_back(other);
        }
      }
    }
    for (int i = 0; i < count; ++i) {
      std::vector<TraceHop> path;
      int node = i;
      while (hop_edge[node] != -1) {
        const auto& e = forest.edges[hop_edge[node]];
        TraceHop hop;
        hop.from_text = detail_census::census_word_text(words[e.from], config.ambient);
        hop.to_text = detail_census::census_word_text(words[e.to], config.ambient);
        hop.moves = e.moves;
        hop.forward = (e.from == node);
        path.push_back(std::move(hop));
        node = from_node[node];
      }
      traces[i] = std::move(path);
    }
  }

  for (int i = 0; i < count; ++i) {
    CensusRecord record;
    record.word_text = detail_census::census_word_text(words[i], config.ambient);
    record.fp = fps[i];
    record.fp_hash = fps[i].hash();
    record.class_id = class_id_of_root.at(forest.find(i));
    record.representative_text = detail_census::census_word_text(words[forest.find(i)], config.ambient);
    record.trace = std::move(traces[i]);
    if (!replay_trace(record, config.ambient)) {
      throw std::logic_error("run_census: trace replay failed for " + record.word_text);
    }
    report.records.push_back(std::move(record));
  }

  // Summary, ordered by fingerprint.
  std::map<CensusFingerprint, std::pair<std::set<int>, int>> grouped;
  for (const CensusRecord& r : report.records) {
    auto& slot = grouped[r.fp];
    slot.first.insert(r.class_id);
    slot.second += 1;
  }
  for (const auto& [fp, slot] : grouped) {
    report.buckets.push_back({fp, static_cast<int>(slot.first.size()), slot.second});
  }
  return report;
}

inline void CensusReport::write(std::ostream& os, bool records_only) const {
  os << "# census " << config.to_string() << '\n';
  os << "# complete=" << (complete ? "true" : "false") << " classes=" << class_count
     << " words=" << records.size() << '\n';
  for (const CensusRecord& r : records) {
    os << r.word_text << '\t' << ambient_name(r.fp.ambient) << '\t';
    char hex[17];
    std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(r.fp_hash));
    os << hex << '\t' << r.fp.to_string() << '\t' << "class=" << r.class_id << '\t'
       << "rep=" << r.representative_text << '\t' << "trace=";
    if (r.trace.empty()) {
      os << '-';
    } else {
      for (std::size_t h = 0; h < r.trace.size(); ++h) {
        if (h) os << ';';
        const TraceHop& hop = r.trace[h];
        os << (hop.forward ? '>' : '<') << '|' << hop.from_text << '|' << hop.to_text << '|';
        for (std::size_t m = 0; m < hop.moves.size(); ++m) {
          if (m) os << ',';
          os << hop.moves[m].to_string();
        }
      }
    }
    os << '\n';
  }
  if (!records_only) {
    os << "# summary: class count per fingerprint bucket\n";
    for (const BucketSummary& b : buckets) {
      os << "# bucket " << b.fp.to_string() << " classes=" << b.class_count
         << " words=" << b.word_count << '\n';
    }
  }
}

/// Solid torus closures with winding 1..k: the cyclic positive words on
/// 1..k moving strands. Pairwise distinct winding multisets separate them,
/// and each has non-zero winding, hence is essential.
inline std::vector<MixedBraidWord> essential_witnesses(int k) {
  if (k < 1) throw std::invalid_argument("essential_witnesses: k must be >= 1");
  std::vector<MixedBraidWord> out;
  for (int c = 1; c <= k; ++c) {
    MixedBraidWord w(1, c);
    for (int i = 1; i <= c - 1; ++i) w.push_back({MixedKind::braid, i, +1});
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace braids
