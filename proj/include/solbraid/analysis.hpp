#pragma once

// Knot-theoretic invariant sequences along a defining sequence of solid
// tori.  Each level n has a core knot, presented by core_braid(spec, n);
// the sequences of its classical invariants, optionally weighted by a
// user-chosen scale per level, are the computable shadow of the embedding.
// Crossing counts grow geometrically with the level, so every driver here
// reports honest truncation instead of failing when a per-call resource
// cap is hit.

#include <vector>

#include "solbraid/burau.hpp"
#include "solbraid/kauffman.hpp"
#include "solbraid/solenoid.hpp"

namespace solbraid {

enum class WhichInvariant { Jones, Alexander, Writhe };

/// values[n] is the invariant of the level-n core; series[n] = values[n]
/// scaled by the level weight g[n].  truncated is set when a resource cap
/// stopped the computation early, in which case values and series hold the
/// completed levels only.
struct InvariantSequence {
  WhichInvariant which;
  int requested_depth;
  std::vector<LaurentPolynomial> values;
  std::vector<LaurentPolynomial> series;
  bool truncated = false;
};

inline InvariantSequence invariant_sequence(const SolenoidSpec& spec, int depth,
                                            WhichInvariant which,
                                            const std::vector<long long>& g,
                                            const InvariantOptions& opts = {}) {
  if (depth < 0)
    throw std::invalid_argument("invariant_sequence: the depth must be nonnegative");
  if (g.size() < static_cast<std::size_t>(depth) + 1)
    throw std::invalid_argument(
        "invariant_sequence: need a weight for every level up to the depth");
  InvariantSequence out{which, depth, {}, {}, false};
  for (int n = 0; n <= depth; ++n) {
    const BraidWord core = core_braid(spec, n);
    LaurentPolynomial v;
    try {
      switch (which) {
        case WhichInvariant::Jones:
          v = jones(core, opts);
          break;
        case WhichInvariant::Alexander:
          v = alexander(core);
          break;
        case WhichInvariant::Writhe:
          v = LaurentPolynomial::constant(exponent_sum(core));
          break;
      }
    } catch (const resource_limit_error&) {
      out.truncated = true;
      break;
    }
    out.series.push_back(v * LaurentPolynomial::constant(g[static_cast<std::size_t>(n)]));
    out.values.push_back(std::move(v));
  }
  return out;
}

/// Per-level knottedness of the cores.  aggregate is Knotted as soon as
/// any level is (the embedding is knotted), Unknotted only when every
/// requested level was decided Unknotted, and Unknown otherwise.
struct KnottingReport {
  int requested_depth;
  std::vector<KnottingVerdict> levels;
  KnottingVerdict aggregate;
  bool truncated = false;
};

inline KnottingReport knotting_report(const SolenoidSpec& spec, int depth,
                                      const InvariantOptions& inv_opts = {},
                                      const ConjugacyOptions& conj_opts = {}) {
  if (depth < 0)
    throw std::invalid_argument("knotting_report: the depth must be nonnegative");
  KnottingReport out{depth, {}, KnottingVerdict::Unknown, false};
  for (int n = 0; n <= depth; ++n) {
    try {
      out.levels.push_back(knottedness_verdict(core_braid(spec, n), inv_opts, conj_opts));
    } catch (const resource_limit_error&) {
      out.truncated = true;
      break;
    }
  }
  bool any_knotted = false;
  bool all_unknotted = !out.levels.empty();
  for (const KnottingVerdict v : out.levels) {
    if (v == KnottingVerdict::Knotted) any_knotted = true;
    if (v != KnottingVerdict::Unknotted) all_unknotted = false;
  }
  if (any_knotted)
    out.aggregate = KnottingVerdict::Knotted;
  else if (all_unknotted && !out.truncated)
    out.aggregate = KnottingVerdict::Unknotted;
  return out;
}

/// Two disjointly embedded solenoids are algebraically linked iff their
/// outermost tori have nonzero linking number: the winding numbers multiply
/// the pairing at every deeper level, so it never dies.
inline bool algebraically_linked(const SolenoidSpec&, const SolenoidSpec&, long long lk0) {
  return lk0 != 0;
}

}  // namespace solbraid
