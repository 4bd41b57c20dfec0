#pragma once

// Combinatorial model of tame solenoid embeddings in the 3-sphere.
//
// A solenoid embedding is presented by a defining sequence of nested solid
// tori: an ambient companion (the outermost torus, an unknot or a tubular
// neighborhood of a closed-braid knot) plus an eventually periodic sequence
// of stage braids, stage n being the thick braid that embeds torus n into
// torus n-1.  Framing convention throughout: the blackboard framing of each
// closed-braid diagram.  It coincides with the zero framing exactly when
// the accumulated writhes vanish, which is why the strict-achirality
// certifier only answers Yes on all-writhe-zero specs.
//
// The 2-adic classification encodes each winding-number-2 stage by the sign
// of its unknotted conjugacy class; equivalence and achirality of the
// resulting sign sequences decide equivalence and achirality of the
// embeddings.
//
// supernatural_equal uses the full homeomorphism classification of abstract
// solenoids by prime content, which is stronger than the sufficient
// finite-deletion criterion the rest of this header is built on.

#include <set>
#include <string>

#include "solbraid/braid.hpp"
#include "solbraid/cable.hpp"
#include "solbraid/conjugacy.hpp"
#include "solbraid/sequences.hpp"
#include "solbraid/wclass.hpp"

namespace solbraid {

/// Winding numbers, all >= 2.
using SolenoidType = EventuallyPeriodicSeq<int>;

/// Entries in {+1, -1}.
using SignSeq = EventuallyPeriodicSeq<int>;

struct StageBraid {
  BraidWord braid;

  explicit StageBraid(BraidWord b) : braid(std::move(b)) {
    if (braid.strands < 2)
      throw std::invalid_argument("stage braid needs winding number at least 2");
    if (!is_cyclic(braid))
      throw std::invalid_argument("stage braid must be cyclic (permute its strands in one cycle)");
  }

  bool operator==(const StageBraid&) const = default;
};

/// The outermost solid torus: an unknot, or a tubular neighborhood of a
/// closed-braid knot.  The strictly-achiral flag records documented cases
/// (the unknot always; e.g. the figure-eight knot) and gates Yes-verdicts
/// of verify_strict_achirality.
class AmbientCompanion {
 public:
  static AmbientCompanion unknot() { return AmbientCompanion(); }

  static AmbientCompanion closed_braid(BraidWord b, bool strictly_achiral_known = false) {
    if (!is_cyclic(b))
      throw std::invalid_argument("ambient companion closure must be a knot (cyclic permutation)");
    AmbientCompanion a;
    a.unknot_ = false;
    a.braid_ = std::move(b);
    a.flag_ = strictly_achiral_known;
    return a;
  }

  bool is_unknot() const { return unknot_; }
  /// The companion as a braid word; the unknot is the 1-strand identity.
  const BraidWord& braid() const { return braid_; }
  bool strictly_achiral_known() const { return flag_; }

  bool operator==(const AmbientCompanion&) const = default;

 private:
  AmbientCompanion() = default;
  bool unknot_ = true;
  BraidWord braid_ = identity_braid(1);
  bool flag_ = true;
};

/// A combinatorially presented defining sequence.
struct SolenoidSpec {
  AmbientCompanion ambient;
  EventuallyPeriodicSeq<StageBraid> stages;

  bool operator==(const SolenoidSpec&) const = default;
};

namespace detail {

inline void validate_type(const SolenoidType& t) {
  auto check = [](int w) {
    if (w < 2)
      throw std::invalid_argument("solenoid type entries are winding numbers, all at least 2");
  };
  for (int w : t.prefix) check(w);
  for (int w : t.cycle) check(w);
}

inline void validate_signs(const SignSeq& s) {
  auto check = [](int a) {
    if (a != 1 && a != -1)
      throw std::invalid_argument("sign sequence entries must be +1 or -1");
  };
  for (int a : s.prefix) check(a);
  for (int a : s.cycle) check(a);
}

inline std::set<int> cycle_primes(const SolenoidType& t) {
  std::set<int> primes;
  for (int w : t.cycle) {
    int m = w;
    for (int p = 2; p * p <= m; ++p)
      while (m % p == 0) {
        primes.insert(p);
        m /= p;
      }
    if (m > 1) primes.insert(m);
  }
  return primes;
}

/// sigma_1 ... sigma_{w-1}: the standard winding-w Smale stage.
inline BraidWord monotone_stage_word(int w) {
  std::vector<int> letters;
  for (int i = 1; i < w; ++i) letters.push_back(i);
  return BraidWord(w, std::move(letters));
}

}  // namespace detail

/// Entrywise winding numbers of the stages, same prefix/cycle shape.
inline SolenoidType type_of(const SolenoidSpec& spec) {
  std::vector<int> pre, cyc;
  for (const auto& s : spec.stages.prefix) pre.push_back(s.braid.strands);
  for (const auto& s : spec.stages.cycle) cyc.push_back(s.braid.strands);
  return SolenoidType(std::move(pre), std::move(cyc));
}

/// Homeomorphism classification of the abstract solenoids: equal sets of
/// primes with infinite multiplicity, i.e. equal prime sets of the cycle
/// products.  Finite prime content is absorbable by finite deletions.
inline bool supernatural_equal(const SolenoidType& a, const SolenoidType& b) {
  detail::validate_type(a);
  detail::validate_type(b);
  return detail::cycle_primes(a) == detail::cycle_primes(b);
}

/// Mirror image of a defining sign sequence.
inline SignSeq negated(const SignSeq& s) {
  detail::validate_signs(s);
  auto flip = [](std::vector<int> v) {
    for (int& a : v) a = -a;
    return v;
  };
  return SignSeq(flip(s.prefix), flip(s.cycle));
}

/// Equivalence of unknotted 2-adic embeddings: the sign sequences can be
/// made identical by deleting finitely many terms.
inline bool signseq_equivalent(const SignSeq& a, const SignSeq& b) {
  detail::validate_signs(a);
  detail::validate_signs(b);
  return deletion_equivalent(a, b);
}

/// An unknotted 2-adic embedding is achiral iff its sign sequence is
/// equivalent to its own negation.
inline bool is_achiral_2adic(const SignSeq& s) { return signseq_equivalent(s, negated(s)); }

/// Classify each winding-2 stage of an unknotted spec by its sign: +1 for
/// the right-handed unknotted class, -1 for the left-handed one.
inline SignSeq encode_2adic(const SolenoidSpec& spec) {
  if (!spec.ambient.is_unknot())
    throw std::invalid_argument("encode_2adic: the ambient companion must be the unknot");
  auto sign_of = [](const StageBraid& s) {
    if (s.braid.strands != 2)
      throw std::invalid_argument("encode_2adic: every stage must have winding number 2");
    const auto cls = w_class_of(s.braid);
    if (!cls)
      throw std::invalid_argument(
          "encode_2adic: a stage closure is knotted in S^3, outside the two unknotted classes");
    return cls->label == WLabel::Plus2 ? 1 : -1;
  };
  std::vector<int> pre, cyc;
  for (const auto& s : spec.stages.prefix) pre.push_back(sign_of(s));
  for (const auto& s : spec.stages.cycle) cyc.push_back(sign_of(s));
  return SignSeq(std::move(pre), std::move(cyc));
}

/// A type admits a strictly achiral tame embedding iff all but finitely
/// many winding numbers are odd, i.e. every cycle entry is odd.
inline bool strictly_achiral_embeddable(const SolenoidType& t) {
  detail::validate_type(t);
  for (int w : t.cycle)
    if (w % 2 == 0) return false;
  return true;
}

/// Build the strictly achiral embedding with stage n = beta beta* for
/// beta = sigma_1 ... sigma_{w_n - 1}.  Even prefix entries are dropped:
/// the resulting type is deletion-equivalent, and beta beta* is not cyclic
/// on an even strand count.  With knotted set, the ambient companion is the
/// figure-eight knot, a documented strictly achiral knot.
inline SolenoidSpec construct_strictly_achiral(const SolenoidType& t, bool knotted) {
  detail::validate_type(t);
  if (!strictly_achiral_embeddable(t))
    throw std::invalid_argument(
        "construct_strictly_achiral: every cycle winding number must be odd");
  auto bb_stage = [](int w) {
    const BraidWord beta = detail::monotone_stage_word(w);
    return StageBraid(compose(beta, mirror(beta)));
  };
  std::vector<StageBraid> pre, cyc;
  for (int w : t.prefix)
    if (w % 2 != 0) pre.push_back(bb_stage(w));
  for (int w : t.cycle) cyc.push_back(bb_stage(w));
  AmbientCompanion ambient =
      knotted ? AmbientCompanion::closed_braid(BraidWord(3, {1, -2, 1, -2}), true)
              : AmbientCompanion::unknot();
  return SolenoidSpec{std::move(ambient),
                      EventuallyPeriodicSeq<StageBraid>(std::move(pre), std::move(cyc))};
}

enum class Achirality { Yes, No, Unknown };

/// Certify strict achirality of a spec.
///
/// No: some cycle stage has an even winding number; a cyclic braid on an
/// even strand count has odd writhe, so the zero-framing criterion fails at
/// infinitely many levels.
///
/// Yes: the ambient companion is a documented strictly achiral knot (or the
/// unknot) and every stage has writhe zero (so blackboard framing equals
/// zero framing) and is conjugate to its mirror.
///
/// Anything else, including a conjugacy search hitting its orbit cap, is
/// Unknown.
inline Achirality verify_strict_achirality(const SolenoidSpec& spec,
                                           const ConjugacyOptions& opts = {}) {
  for (const auto& s : spec.stages.cycle)
    if (s.braid.strands % 2 == 0) return Achirality::No;
  if (!spec.ambient.strictly_achiral_known()) return Achirality::Unknown;
  auto stage_ok = [&opts](const StageBraid& s) {
    if (exponent_sum(s.braid) != 0) return false;
    try {
      return is_achiral_braid(s.braid, opts).conjugate;
    } catch (const resource_limit_error&) {
      return false;
    }
  };
  for (const auto& s : spec.stages.prefix)
    if (!stage_ok(s)) return Achirality::Unknown;
  for (const auto& s : spec.stages.cycle)
    if (!stage_ok(s)) return Achirality::Unknown;
  return Achirality::Yes;
}

/// Core knot of the level-n torus as a braid word: the ambient braid with
/// stages 1..n cabled in, left to right.  Level 0 is the ambient core; the
/// unknot ambient contributes the 1-strand identity.
inline BraidWord core_braid(const SolenoidSpec& spec, int n) {
  if (n < 0) throw std::invalid_argument("core_braid: the level must be nonnegative");
  BraidWord acc = spec.ambient.braid();
  for (int i = 0; i < n; ++i)
    acc = cable_compose(acc, spec.stages.at(static_cast<std::size_t>(i)).braid);
  return acc;
}

/// The standard Smale realization of a purely periodic type: unknot ambient
/// and stage sigma_1 ... sigma_{w_n - 1} at every level.
inline SolenoidSpec smale_construct(const SolenoidType& t) {
  detail::validate_type(t);
  if (!t.prefix.empty())
    throw std::invalid_argument("smale_construct: the type must be purely periodic (empty prefix)");
  std::vector<StageBraid> cyc;
  for (int w : t.cycle) cyc.emplace_back(detail::monotone_stage_word(w));
  return SolenoidSpec{AmbientCompanion::unknot(),
                      EventuallyPeriodicSeq<StageBraid>({}, std::move(cyc))};
}

/// All Smale realizations of a purely periodic type with winding numbers
/// <= 3: one unknotted-class representative per cycle position, up to
/// cyclic rotation of the period (rotations give deletion-equivalent
/// defining sequences).  Mirror classes are not identified.
inline std::vector<SolenoidSpec> smale_enumerate(const SolenoidType& t) {
  detail::validate_type(t);
  if (!t.prefix.empty())
    throw std::invalid_argument("smale_enumerate: the type must be purely periodic (empty prefix)");
  for (int w : t.cycle)
    if (w > 3)
      throw std::invalid_argument(
          "smale_enumerate: winding number " + std::to_string(w) +
          " has countably infinite unknotted thick-braid classes; all winding numbers must be <= 3");

  const std::size_t p = t.cycle.size();
  std::vector<std::vector<BraidWord>> choices;
  for (int w : t.cycle) {
    std::vector<BraidWord> reps;
    for (const auto& cls : w_class_representatives(w)) reps.push_back(cls.representative);
    choices.push_back(std::move(reps));
  }

  // rotations under which the winding cycle is invariant
  std::vector<std::size_t> symmetries;
  for (std::size_t r = 0; r < p; ++r) {
    bool fixes = true;
    for (std::size_t i = 0; i < p && fixes; ++i) fixes = t.cycle[(i + r) % p] == t.cycle[i];
    if (fixes) symmetries.push_back(r);
  }

  std::vector<SolenoidSpec> out;
  std::vector<std::size_t> idx(p, 0);
  for (;;) {
    bool minimal = true;
    for (std::size_t r : symmetries) {
      if (r == 0) continue;
      for (std::size_t i = 0; i < p; ++i) {
        const std::size_t rotated = idx[(i + r) % p];
        if (rotated != idx[i]) {
          minimal = rotated > idx[i];
          break;
        }
      }
      if (!minimal) break;
    }
    if (minimal) {
      std::vector<StageBraid> cyc;
      for (std::size_t i = 0; i < p; ++i) cyc.emplace_back(choices[i][idx[i]]);
      out.push_back(SolenoidSpec{AmbientCompanion::unknot(),
                                 EventuallyPeriodicSeq<StageBraid>({}, std::move(cyc))});
    }
    std::size_t pos = p;
    while (pos > 0 && ++idx[pos - 1] == choices[pos - 1].size()) {
      idx[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
  return out;
}

}  // namespace solbraid
