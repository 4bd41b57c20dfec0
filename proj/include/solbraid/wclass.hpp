#pragma once

// Conjugacy classes of unknotted-closure braids on 2 and 3 strands, and a
// three-valued knottedness test for cyclic braid closures.
//
// On 2 strands every braid is a power of sigma_1, so the two unknotted
// classes are read off the exponent sum.  On 3 strands membership is decided
// by the conjugacy search against a fixed representative, after cheap
// screens (closure a knot, exponent sum matches).

#include <optional>

#include "solbraid/braid.hpp"
#include "solbraid/burau.hpp"
#include "solbraid/conjugacy.hpp"
#include "solbraid/kauffman.hpp"

namespace solbraid {

enum class WLabel { Plus2, Minus2, Pos3, Neg3, Mixed3 };

struct WClass {
  int strands;
  BraidWord representative;
  WLabel label;
};

/// The unknotted-closure conjugacy classes on 2 or 3 strands, in a fixed
/// order.  Other strand counts are out of scope.
inline std::vector<WClass> w_class_representatives(int strands) {
  switch (strands) {
    case 2:
      return {
          {2, BraidWord(2, {1}), WLabel::Plus2},
          {2, BraidWord(2, {-1}), WLabel::Minus2},
      };
    case 3:
      return {
          {3, BraidWord(3, {1, 2}), WLabel::Pos3},
          {3, BraidWord(3, {-1, -2}), WLabel::Neg3},
          {3, BraidWord(3, {1, -2}), WLabel::Mixed3},
      };
    default:
      throw std::invalid_argument("w_class_representatives: classes are tabulated for 2 or 3 strands only");
  }
}

/// Class of b among the unknotted-closure classes of its strand count,
/// or nullopt when the closure is not one of them.
inline std::optional<WClass> w_class_of(const BraidWord& b, const ConjugacyOptions& opts = {}) {
  if (b.strands != 2 && b.strands != 3)
    throw std::invalid_argument("w_class_of: classes are tabulated for 2 or 3 strands only");
  const long long e = exponent_sum(b);
  if (b.strands == 2) {
    // B_2 is infinite cyclic: conjugacy is just the exponent sum.
    if (e == 1) return w_class_representatives(2)[0];
    if (e == -1) return w_class_representatives(2)[1];
    return std::nullopt;
  }
  if (!is_cyclic(b)) return std::nullopt;
  for (const auto& cls : w_class_representatives(3)) {
    if (e != exponent_sum(cls.representative)) continue;
    if (are_conjugate(b, cls.representative, opts).conjugate) return cls;
  }
  return std::nullopt;
}

enum class KnottingVerdict { Knotted, Unknotted, Unknown };

namespace detail {

/// Remove trivial top-strand crossings: while the top generator index
/// appears exactly once, conjugate it to the end of the word and apply a
/// destabilization.  Both moves preserve the closure.
inline BraidWord destabilize(BraidWord b) {
  for (;;) {
    b = BraidWord(b.strands, free_reduce(b.letters));
    if (b.strands == 1) return b;
    const int top = b.strands - 1;
    int count = 0;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < b.letters.size(); ++i)
      if (std::abs(b.letters[i]) == top) {
        ++count;
        pos = i;
      }
    if (count != 1) return b;
    std::vector<int> rotated;
    rotated.reserve(b.letters.size() - 1);
    for (std::size_t i = 1; i < b.letters.size(); ++i)
      rotated.push_back(b.letters[(pos + i) % b.letters.size()]);
    b = BraidWord(b.strands - 1, rotated);
  }
}

}  // namespace detail

/// Decide whether the closure of a cyclic braid is knotted.  Nontrivial
/// Alexander or Jones certifies Knotted; a destabilization chain ending in
/// a tabulated unknotted class certifies Unknotted; otherwise Unknown.
/// All invariants are computed on the destabilized reduct, which has the
/// same closure and never more crossings.
inline KnottingVerdict knottedness_verdict(const BraidWord& b,
                                           const InvariantOptions& inv_opts = {},
                                           const ConjugacyOptions& conj_opts = {}) {
  if (!is_cyclic(b))
    throw std::invalid_argument("knottedness_verdict: closure must be a knot (cyclic permutation)");
  const BraidWord d = detail::destabilize(b);
  if (d.strands == 1) return KnottingVerdict::Unknotted;
  if (!alexander(d).is_one()) return KnottingVerdict::Knotted;
  if (d.strands <= 3 && w_class_of(d, conj_opts).has_value()) return KnottingVerdict::Unknotted;
  if (!jones(d, inv_opts).is_one()) return KnottingVerdict::Knotted;
  return KnottingVerdict::Unknown;
}

/// lk0 scaled by every winding number in both towers.  Overflow is a
/// resource error, not silent wraparound.
inline long long linking_scale(long long lk0, const std::vector<long long>& va,
                               const std::vector<long long>& vb) {
  long long acc = lk0;
  for (long long w : va) acc = detail::checked_mul(acc, w);
  for (long long w : vb) acc = detail::checked_mul(acc, w);
  return acc;
}

}  // namespace solbraid
