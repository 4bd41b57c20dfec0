#pragma once

// Satellite composition of closed braids at the word level.
//
// cable_compose(outer, inner) replaces each strand of `outer` by a bundle
// of inner.strands parallel strands carried with the blackboard framing of
// the outer diagram (bundles cross as flat bands, no internal twisting),
// then splices `inner` into the first bundle once at the closure cut.
// The closure of the result is the satellite with companion closure(outer)
// and pattern closure(inner), framed by the outer diagram's writhe.

#include "solbraid/braid.hpp"

namespace solbraid {

/// Positive band crossing of bundle i over bundle i+1, bundle width w.
/// w*w positive letters; no crossings inside either bundle.
inline std::vector<int> cable_band(int i, int w) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(w) * static_cast<std::size_t>(w));
  for (int a = 1; a <= w; ++a)
    for (int d = 0; d < w; ++d) out.push_back(i * w + a - 1 - d);
  return out;
}

inline BraidWord cable_compose(const BraidWord& outer, const BraidWord& inner) {
  if (!is_cyclic(outer))
    throw std::invalid_argument(
        "cable_compose: outer braid closure must be a knot (cyclic permutation)");
  const int w = inner.strands;
  const int n = outer.strands * w;
  std::vector<int> word;
  for (int k : outer.letters) {
    std::vector<int> band = cable_band(std::abs(k), w);
    if (k > 0) {
      word.insert(word.end(), band.begin(), band.end());
    } else {
      // negative band crossing = exact inverse of the positive one
      for (auto it = band.rbegin(); it != band.rend(); ++it) word.push_back(-*it);
    }
  }
  // pattern spliced into the first bundle at the closure cut
  word.insert(word.end(), inner.letters.begin(), inner.letters.end());
  return BraidWord(n, std::move(word));
}

}  // namespace solbraid
