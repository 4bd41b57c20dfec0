#pragma once

// Eventually periodic sequences presented as a finite prefix plus a nonempty
// repeating cycle, with two decidable comparisons:
//
//   same_sequence      pointwise equality of the infinite sequences
//   deletion_equivalent  existence of a common tail, i.e. the sequences can
//                        be made identical by deleting finitely many leading
//                        terms from each
//
// Every tail of prefix+cycle^inf is, after at most |prefix| further
// deletions, exactly rot_i(cycle)^inf for some rotation i.  Two purely
// periodic sequences are equal iff they agree on lcm of the period lengths
// terms.  So a common tail exists iff some rotation pair matches on an lcm
// window, which is what deletion_equivalent checks.

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace solbraid {

template <typename T>
struct EventuallyPeriodicSeq {
  std::vector<T> prefix;
  std::vector<T> cycle;

  EventuallyPeriodicSeq(std::vector<T> pre, std::vector<T> cyc)
      : prefix(std::move(pre)), cycle(std::move(cyc)) {
    if (cycle.empty())
      throw std::invalid_argument("eventually periodic sequence needs a nonempty cycle");
  }

  const T& at(std::size_t n) const {
    if (n < prefix.size()) return prefix[n];
    return cycle[(n - prefix.size()) % cycle.size()];
  }

  std::vector<T> unroll(std::size_t count) const {
    std::vector<T> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(at(i));
    return out;
  }

  /// Presentation equality: same prefix and same cycle.
  bool operator==(const EventuallyPeriodicSeq&) const = default;
};

/// Pointwise equality of the infinite sequences.  Beyond both prefixes the
/// sequences are periodic with periods dividing the lcm, so agreement on
/// max-prefix + lcm terms is agreement everywhere.
template <typename T>
bool same_sequence(const EventuallyPeriodicSeq<T>& a, const EventuallyPeriodicSeq<T>& b) {
  const std::size_t window = std::max(a.prefix.size(), b.prefix.size()) +
                             std::lcm(a.cycle.size(), b.cycle.size());
  for (std::size_t n = 0; n < window; ++n)
    if (!(a.at(n) == b.at(n))) return false;
  return true;
}

/// True iff the two sequences share a common tail.
template <typename T>
bool deletion_equivalent(const EventuallyPeriodicSeq<T>& a, const EventuallyPeriodicSeq<T>& b) {
  const std::size_t pa = a.cycle.size(), pb = b.cycle.size();
  const std::size_t window = std::lcm(pa, pb);
  for (std::size_t i = 0; i < pa; ++i)
    for (std::size_t j = 0; j < pb; ++j) {
      bool match = true;
      for (std::size_t k = 0; k < window; ++k)
        if (!(a.cycle[(i + k) % pa] == b.cycle[(j + k) % pb])) {
          match = false;
          break;
        }
      if (match) return true;
    }
  return false;
}

}  // namespace solbraid
