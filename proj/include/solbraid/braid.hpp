#pragma once

// Braid words over the Artin generators of B_n.
//
// A word is a list of signed generator indices: letter k > 0 is sigma_k,
// letter k < 0 is sigma_{|k|}^{-1}.  Generator sigma_i crosses the strand
// at position i over the strand at position i+1; the inverse crosses it
// under.  Words compose top to bottom: compose(a, b) stacks a above b.
//
// The mirror image flips every crossing sign in place (letter order is
// preserved); reversing the word as well would give the inverse braid,
// which is a different element in general.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "solbraid/errors.hpp"

namespace solbraid {

/// Permutation of {0, .., n-1}; image_of(i) is where position i is sent.
/// Braid convention: permutation of a word maps top positions to bottom
/// positions, so permutation(compose(a, b)) == permutation(a).then(permutation(b)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n) : img_(static_cast<std::size_t>(n)) {
    if (n < 0) throw std::invalid_argument("permutation size must be >= 0");
    std::iota(img_.begin(), img_.end(), 0);
  }
  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("not a permutation");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  int size() const { return static_cast<int>(img_.size()); }
  int image_of(int i) const { return img_[static_cast<std::size_t>(i)]; }
  int operator[](int i) const { return image_of(i); }
  const std::vector<int>& images() const { return img_; }

  /// Set the image of position i.  The caller is responsible for keeping
  /// the table a bijection; used by the Garside factor manipulations.
  void set_image(int i, int v) { img_[static_cast<std::size_t>(i)] = v; }

  /// this, then other:  result[i] = other[this[i]].
  Permutation then(const Permutation& other) const {
    if (other.size() != size())
      throw std::invalid_argument("permutation size mismatch");
    std::vector<int> r(img_.size());
    for (int i = 0; i < size(); ++i) r[static_cast<std::size_t>(i)] = other[img_[static_cast<std::size_t>(i)]];
    return Permutation(std::move(r));
  }

  Permutation inverse() const {
    std::vector<int> r(img_.size());
    for (int i = 0; i < size(); ++i) r[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = i;
    return Permutation(std::move(r));
  }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (img_[static_cast<std::size_t>(i)] != i) return false;
    return true;
  }

  /// True when the permutation is one cycle covering all positions.
  bool single_cycle() const {
    if (size() == 0) return false;
    int seen = 0, at = 0;
    do {
      at = img_[static_cast<std::size_t>(at)];
      ++seen;
    } while (at != 0 && seen <= size());
    return seen == size();
  }

  /// Cycle lengths, sorted descending; conjugacy invariant in S_n.
  std::vector<int> cycle_type() const {
    std::vector<bool> used(img_.size(), false);
    std::vector<int> lens;
    for (int i = 0; i < size(); ++i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      int len = 0, at = i;
      while (!used[static_cast<std::size_t>(at)]) {
        used[static_cast<std::size_t>(at)] = true;
        at = img_[static_cast<std::size_t>(at)];
        ++len;
      }
      lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return lens;
  }

  /// Inversion count; equals the letter count of the permutation braid.
  int inversions() const {
    int c = 0;
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (img_[static_cast<std::size_t>(i)] > img_[static_cast<std::size_t>(j)]) ++c;
    return c;
  }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> img_;
};

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;  // signed generator indices, |k| in [1, strands-1]

  BraidWord() = default;
  BraidWord(int n, std::vector<int> w) : strands(n), letters(std::move(w)) {
    if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
    for (int k : letters)
      if (k == 0 || std::abs(k) > strands - 1)
        throw std::invalid_argument("generator index " + std::to_string(k) +
                                    " out of range for " + std::to_string(strands) + " strands");
  }

  bool operator==(const BraidWord&) const = default;
};

inline BraidWord identity_braid(int strands) { return BraidWord(strands, {}); }

/// Cancel adjacent sigma_i sigma_i^{-1} pairs until none remain.
inline std::vector<int> free_reduce(const std::vector<int>& letters) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (int k : letters) {
    if (!out.empty() && out.back() == -k)
      out.pop_back();
    else
      out.push_back(k);
  }
  return out;
}

inline BraidWord free_reduce(const BraidWord& b) {
  return BraidWord(b.strands, free_reduce(b.letters));
}

/// a stacked above b.  Free reduction is applied eagerly; the result is
/// the same group element with a shorter word.
inline BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands)
    throw std::invalid_argument("strand count mismatch in compose");
  std::vector<int> w = a.letters;
  w.insert(w.end(), b.letters.begin(), b.letters.end());
  return BraidWord(a.strands, free_reduce(w));
}

inline BraidWord inverse(const BraidWord& b) {
  std::vector<int> w(b.letters.rbegin(), b.letters.rend());
  for (int& k : w) k = -k;
  return BraidWord(b.strands, std::move(w));
}

/// Mirror image: flip every crossing sign, keep the letter order.
inline BraidWord mirror(const BraidWord& b) {
  std::vector<int> w = b.letters;
  for (int& k : w) k = -k;
  return BraidWord(b.strands, std::move(w));
}

inline Permutation transposition(int n, int i) {
  // swaps positions i-1 and i (generator index i is 1-based)
  Permutation p(n);
  p.set_image(i - 1, i);
  p.set_image(i, i - 1);
  return p;
}

inline Permutation permutation(const BraidWord& b) {
  // at[p] = strand currently at position p, walking the word downward
  std::vector<int> at(static_cast<std::size_t>(b.strands));
  std::iota(at.begin(), at.end(), 0);
  for (int k : b.letters) {
    std::size_t i = static_cast<std::size_t>(std::abs(k) - 1);
    std::swap(at[i], at[i + 1]);
  }
  std::vector<int> img(at.size());
  for (std::size_t p = 0; p < at.size(); ++p) img[static_cast<std::size_t>(at[p])] = static_cast<int>(p);
  return Permutation(std::move(img));
}

inline bool is_cyclic(const BraidWord& b) { return permutation(b).single_cycle(); }

/// Writhe of the closure: sum of crossing signs.
inline int exponent_sum(const BraidWord& b) {
  int e = 0;
  for (int k : b.letters) e += (k > 0) ? 1 : -1;
  return e;
}

inline BraidWord power(const BraidWord& b, int k) {
  BraidWord base = k < 0 ? inverse(b) : b;
  int reps = std::abs(k);
  BraidWord acc = identity_braid(b.strands);
  for (int i = 0; i < reps; ++i) acc = compose(acc, base);
  return acc;
}

}  // namespace solbraid
