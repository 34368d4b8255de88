#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "braids/braid.hpp"

namespace braids {

/// Finite magma given by its full operation table; the quandle axioms are
/// checked separately so defective tables can be inspected.
class FiniteQuandle {
 public:
  explicit FiniteQuandle(std::vector<std::vector<int>> table) : table_(std::move(table)) {
    const int q = static_cast<int>(table_.size());
    if (q < 1) throw std::invalid_argument("FiniteQuandle: order must be >= 1");
    for (const auto& row : table_) {
      if (static_cast<int>(row.size()) != q) {
        throw std::invalid_argument("FiniteQuandle: table must be square");
      }
      for (int v : row) {
        if (v < 0 || v >= q) throw std::invalid_argument("FiniteQuandle: entry out of range");
      }
    }
  }

  int order() const { return static_cast<int>(table_.size()); }

  /// i * j
  int op(int i, int j) const { return table_[i][j]; }

  /// The unique x with x * j = b; requires the column map to be a bijection.
  int right_inverse(int b, int j) const {
    for (int x = 0; x < order(); ++x) {
      if (table_[x][j] == b) return x;
    }
    throw std::domain_error("FiniteQuandle::right_inverse: column is not surjective");
  }

  const std::vector<std::vector<int>>& table() const { return table_; }

  auto operator<=>(const FiniteQuandle&) const = default;

 private:
  std::vector<std::vector<int>> table_;
};

/// i * j = 2j - i mod n; the dihedral quandle (Fox n-coloring rule).
inline FiniteQuandle dihedral(int n) {
  if (n < 1) throw std::invalid_argument("dihedral: order must be >= 1");
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) table[i][j] = ((2 * j - i) % n + n) % n;
  }
  return FiniteQuandle(std::move(table));
}

struct QuandleAxiomReport {
  bool ok = false;
  std::string axiom;            // "idempotence", "right_invertibility", "self_distributivity"
  std::array<int, 3> witness{};  // offending elements; unused slots stay 0
};

/// Checks the three axiom families by brute force and reports the first
/// counterexample found.
inline QuandleAxiomReport check_axioms(const FiniteQuandle& quandle) {
  const int q = quandle.order();
  for (int i = 0; i < q; ++i) {
    if (quandle.op(i, i) != i) return {false, "idempotence", {i, 0, 0}};
  }
  for (int j = 0; j < q; ++j) {
    std::vector<char> hit(static_cast<std::size_t>(q), 0);
    for (int i = 0; i < q; ++i) hit[quandle.op(i, j)] = 1;
    for (int b = 0; b < q; ++b) {
      if (!hit[b]) return {false, "right_invertibility", {b, j, 0}};
    }
  }
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      for (int k = 0; k < q; ++k) {
        if (quandle.op(quandle.op(i, j), k) !=
            quandle.op(quandle.op(i, k), quandle.op(j, k))) {
          return {false, "self_distributivity", {i, j, k}};
        }
      }
    }
  }
  return {true, "", {}};
}

/// Generators and relations of the knot magma of a closed braid diagram:
/// one generator per arc, one relation x_k = x_i * x_j per crossing, with
/// the closure identifying bottom arcs with top arcs.
struct QuandlePresentation {
  int generators = 0;
  std::vector<std::array<int, 3>> relations;  // {k, i, j} encodes x_k = x_i * x_j
};

namespace detail_quandle {

struct ArcUnionFind {
  std::vector<int> parent;

  explicit ArcUnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail_quandle

inline QuandlePresentation fundamental_presentation(const BraidWord& w) {
  const int n = w.strands();
  const int total_arcs = n + static_cast<int>(w.size());
  std::vector<int> arc_at(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) arc_at[p] = p;

  // Raw relations over arc ids. A positive crossing takes the pair (a, b) at
  // positions (i-1, i) to (b, a * b): the strand entering on the left goes
  // under and emerges recolored; a negative crossing inverts that.
  std::vector<std::array<int, 3>> raw;
  int next_arc = n;
  for (const BraidLetter& l : w.letters()) {
    const int a = arc_at[l.index - 1];
    const int b = arc_at[l.index];
    const int fresh = next_arc++;
    if (l.sign > 0) {
      raw.push_back({fresh, a, b});  // x_fresh = x_a * x_b
      arc_at[l.index - 1] = b;
      arc_at[l.index] = fresh;
    } else {
      raw.push_back({b, fresh, a});  // x_b = x_fresh * x_a
      arc_at[l.index - 1] = fresh;
      arc_at[l.index] = a;
    }
  }

  // Close up: the arc leaving at the bottom of position p is the arc
  // entering at the top of position p.
  detail_quandle::ArcUnionFind uf(total_arcs);
  for (int p = 0; p < n; ++p) uf.unite(arc_at[p], p);

  std::vector<int> label(static_cast<std::size_t>(total_arcs), -1);
  int generators = 0;
  for (int arc = 0; arc < total_arcs; ++arc) {
    const int root = uf.find(arc);
    if (label[root] == -1) label[root] = generators++;
    label[arc] = label[root];
  }

  QuandlePresentation out;
  out.generators = generators;
  for (const auto& [k, i, j] : raw) {
    out.relations.push_back({label[k], label[i], label[j]});
  }
  return out;
}

/// Number of colorings of the closed braid by Q: assignments of elements to
/// the top arcs that propagate through every crossing back to themselves,
/// i.e. fixed points of the word's action on Q^n. Positive crossings act by
/// (a, b) -> (b, a * b), negative ones by the inverse.
inline std::uint64_t coloring_count(const BraidWord& w, const FiniteQuandle& quandle) {
  const QuandleAxiomReport axioms = check_axioms(quandle);
  if (!axioms.ok) {
    throw std::invalid_argument("coloring_count: operation table violates " + axioms.axiom);
  }
  const int q = quandle.order();
  const int n = w.strands();
  std::vector<int> colors(static_cast<std::size_t>(n), 0);
  std::vector<int> work(static_cast<std::size_t>(n));
  std::uint64_t count = 0;
  while (true) {
    work = colors;
    for (const BraidLetter& l : w.letters()) {
      const int a = work[l.index - 1];
      const int b = work[l.index];
      if (l.sign > 0) {
        work[l.index - 1] = b;
        work[l.index] = quandle.op(a, b);
      } else {
        work[l.index - 1] = quandle.right_inverse(b, a);
        work[l.index] = a;
      }
    }
    if (work == colors) ++count;
    int pos = n - 1;
    while (pos >= 0 && colors[pos] == q - 1) colors[pos--] = 0;
    if (pos < 0) break;
    ++colors[pos];
  }
  return count;
}

/// Every operation table on {0..q-1} satisfying the axioms, for q <= 4.
/// Idempotence and right invertibility are built into the enumeration
/// (columns are permutations fixing the diagonal entry); tables are emitted
/// in lexicographic column order, distinct as tables, with no isomorphism
/// reduction.
inline std::vector<FiniteQuandle> enumerate_quandles(int q) {
  if (q < 1 || q > 4) throw std::invalid_argument("enumerate_quandles: supported for 1 <= q <= 4");

  std::vector<int> base(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) base[i] = i;
  std::vector<std::vector<std::vector<int>>> column_choices(static_cast<std::size_t>(q));
  std::vector<int> perm = base;
  do {
    for (int j = 0; j < q; ++j) {
      if (perm[j] == j) column_choices[j].push_back(perm);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<FiniteQuandle> out;
  std::vector<std::size_t> pick(static_cast<std::size_t>(q), 0);
  while (true) {
    std::vector<std::vector<int>> table(static_cast<std::size_t>(q),
                                        std::vector<int>(static_cast<std::size_t>(q)));
    for (int j = 0; j < q; ++j) {
      for (int i = 0; i < q; ++i) table[i][j] = column_choices[j][pick[j]][i];
    }
    FiniteQuandle candidate(std::move(table));
    if (check_axioms(candidate).ok) out.push_back(std::move(candidate));

    int pos = q - 1;
    while (pos >= 0 && pick[pos] + 1 == column_choices[pos].size()) pick[pos--] = 0;
    if (pos < 0) break;
    ++pick[pos];
  }
  return out;
}

/// Table file: first line the order q, then q rows of q integers.
inline void write_table(std::ostream& os, const FiniteQuandle& quandle) {
  os << quandle.order() << '\n';
  for (const auto& row : quandle.table()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << ' ';
      os << row[j];
    }
    os << '\n';
  }
}

inline FiniteQuandle read_table(std::istream& is) {
  int q = 0;
  if (!(is >> q) || q < 1) throw std::invalid_argument("read_table: bad order line");
  std::vector<std::vector<int>> table(static_cast<std::size_t>(q),
                                      std::vector<int>(static_cast<std::size_t>(q)));
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      if (!(is >> table[i][j])) throw std::invalid_argument("read_table: truncated table");
    }
  }
  return FiniteQuandle(std::move(table));
}

}  // namespace braids
