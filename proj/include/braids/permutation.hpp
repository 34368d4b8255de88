#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace braids {

/// Permutation of {0, ..., n-1} stored as an image list.
///
/// Composition follows function application: (a * b)(x) = a(b(x)), so the
/// right factor acts first.
class Permutation {
 public:
  explicit Permutation(int n) : img_(checked_size(n)) {
    std::iota(img_.begin(), img_.end(), 0);
  }

  static Permutation identity(int n) { return Permutation(n); }

  /// Transposition of positions i-1 and i, i.e. the image of the braid
  /// generator with index i (1-based, 1 <= i <= n-1).
  static Permutation transposition(int n, int generator_index) {
    Permutation p(n);
    if (generator_index < 1 || generator_index >= n) {
      throw std::invalid_argument("Permutation::transposition: generator index " +
                                  std::to_string(generator_index) + " out of range for n=" +
                                  std::to_string(n));
    }
    std::swap(p.img_[generator_index - 1], p.img_[generator_index]);
    return p;
  }

  /// x -> n-1-x; the underlying permutation of the positive half twist.
  static Permutation reversal(int n) {
    Permutation p(n);
    std::reverse(p.img_.begin(), p.img_.end());
    return p;
  }

  static Permutation from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<char> seen(checked_size(n), 0);
    for (int v : images) {
      if (v < 0 || v >= n || seen[v]) {
        throw std::invalid_argument("Permutation::from_images: not a bijection");
      }
      seen[v] = 1;
    }
    Permutation p(n);
    p.img_ = std::move(images);
    return p;
  }

  int size() const { return static_cast<int>(img_.size()); }

  int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }

  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int x = 0; x < size(); ++x) {
      if (img_[x] != x) return false;
    }
    return true;
  }

  Permutation operator*(const Permutation& rhs) const {
    if (size() != rhs.size()) {
      throw std::invalid_argument("Permutation::operator*: size mismatch");
    }
    Permutation out(size());
    for (int x = 0; x < size(); ++x) out.img_[x] = img_[rhs.img_[x]];
    return out;
  }

  Permutation inverse() const {
    Permutation out(size());
    for (int x = 0; x < size(); ++x) out.img_[img_[x]] = x;
    return out;
  }

  /// Cycle decomposition including fixed points, each cycle starting at its
  /// least element, cycles ordered by least element.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(img_.size(), 0);
    for (int start = 0; start < size(); ++start) {
      if (seen[start]) continue;
      std::vector<int> cycle;
      int x = start;
      while (!seen[x]) {
        seen[x] = 1;
        cycle.push_back(x);
        x = img_[x];
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

  auto operator<=>(const Permutation&) const = default;

 private:
  static std::size_t checked_size(int n) {
    if (n < 1) throw std::invalid_argument("Permutation: size must be positive");
    return static_cast<std::size_t>(n);
  }

  std::vector<int> img_;
};

}  // namespace braids
