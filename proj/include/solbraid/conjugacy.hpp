#pragma once

// Conjugacy decision in B_n via super summit sets.
//
// Cycling and decycling never hurt the pair (inf, -sup); iterating either
// until the orbit repeats certifies that no further improvement exists, so
// the loop below lands in the super summit set without magic iteration
// bounds.  Membership is then a breadth-first closure of the summit orbit
// under conjugation by all permutation braids, which is finite and, when
// both inputs are conjugate, connects them.  Every step records its
// conjugator so a witness word comes out for free.
//
// The search is exact but can be large; `max_orbit` caps the number of
// stored summit elements and overflowing it raises resource_limit_error
// rather than returning a wrong answer.

#include <map>
#include <optional>

#include "solbraid/garside.hpp"

namespace solbraid {

struct ConjugacyOptions {
  std::size_t max_orbit = 100000;
};

struct ConjugacyResult {
  bool conjugate = false;
  std::optional<BraidWord> witness;  // alpha with alpha^{-1} . a . alpha == b
};

namespace detail {

inline BraidWord conjugate_word(const BraidWord& x, const BraidWord& alpha) {
  return compose(compose(inverse(alpha), x), alpha);
}

/// One cycling step: conjugate by the initial factor tau^{-inf}(A_1).
inline std::pair<GarsideCanonical, BraidWord> cycle_once(const GarsideCanonical& x) {
  if (x.factors.empty()) return {x, identity_braid(x.strands)};
  Permutation head = x.factors.front();
  if (x.inf % 2 != 0) head = tau_perm(head);
  BraidWord step = simple_to_word(head, x.strands);
  return {normal_form(conjugate_word(to_word(x), step)), step};
}

/// One decycling step: conjugate by the inverse of the final factor.
inline std::pair<GarsideCanonical, BraidWord> decycle_once(const GarsideCanonical& x) {
  if (x.factors.empty()) return {x, identity_braid(x.strands)};
  BraidWord step = inverse(simple_to_word(x.factors.back(), x.strands));
  return {normal_form(conjugate_word(to_word(x), step)), step};
}

/// Iterate cycling (or decycling) from x until inf rises / sup falls or the
/// orbit repeats.  On improvement, fold the conjugator into w and report true.
inline bool improve_summit(GarsideCanonical& x, BraidWord& w, bool cycling) {
  std::set<GarsideCanonical> seen;
  GarsideCanonical y = x;
  BraidWord acc = identity_braid(x.strands);
  while (seen.insert(y).second) {
    auto [next, step] = cycling ? cycle_once(y) : decycle_once(y);
    acc = compose(acc, step);
    y = next;
    if (y.inf > x.inf || y.sup() < x.sup()) {
      x = y;
      w = compose(w, acc);
      return true;
    }
  }
  return false;
}

/// Conjugate x into its super summit set; returns (representative, alpha)
/// with alpha^{-1} . x . alpha == representative.
inline std::pair<GarsideCanonical, BraidWord> to_super_summit(const GarsideCanonical& x0) {
  GarsideCanonical x = x0;
  BraidWord w = identity_braid(x0.strands);
  while (improve_summit(x, w, true) || improve_summit(x, w, false)) {
  }
  return {x, w};
}

/// All non-identity permutations of n in lexicographic order.
inline std::vector<Permutation> all_simples(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
  std::vector<Permutation> out;
  while (std::next_permutation(img.begin(), img.end())) out.emplace_back(img);
  return out;
}

}  // namespace detail

/// Decide conjugacy of a and b; on success the witness alpha satisfies
/// alpha^{-1} . a . alpha == b.  Deterministic, including the witness.
inline ConjugacyResult are_conjugate(const BraidWord& a, const BraidWord& b,
                                     const ConjugacyOptions& opts = {}) {
  if (a.strands != b.strands)
    throw std::invalid_argument("are_conjugate: strand count mismatch");
  if (exponent_sum(a) != exponent_sum(b)) return {};
  if (permutation(a).cycle_type() != permutation(b).cycle_type()) return {};

  auto [xa, wa] = detail::to_super_summit(normal_form(a));
  auto [xb, wb] = detail::to_super_summit(normal_form(b));
  if (xa.inf != xb.inf || xa.canonical_length() != xb.canonical_length()) return {};
  if (xa == xb)
    return {true, free_reduce(compose(wa, inverse(wb)))};

  const std::vector<Permutation> simples = detail::all_simples(a.strands);
  std::map<GarsideCanonical, BraidWord> visited;
  visited.emplace(xa, identity_braid(a.strands));
  if (visited.size() > opts.max_orbit)
    throw resource_limit_error(
        "conjugacy orbit cap exceeded: more than " + std::to_string(opts.max_orbit) +
        " summit elements (raise max_orbit to search further)");
  std::vector<const GarsideCanonical*> queue{&visited.begin()->first};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const GarsideCanonical& u = *queue[qi];
    const BraidWord u_word = to_word(u);
    const BraidWord u_witness = visited.at(u);
    for (const Permutation& s : simples) {
      BraidWord sw = simple_to_word(s, a.strands);
      GarsideCanonical v = normal_form(detail::conjugate_word(u_word, sw));
      if (v.inf != xa.inf || v.canonical_length() != xa.canonical_length()) continue;
      if (visited.count(v)) continue;
      BraidWord v_witness = free_reduce(compose(u_witness, sw));
      if (v == xb) {
        BraidWord alpha = free_reduce(compose(compose(wa, v_witness), inverse(wb)));
        return {true, alpha};
      }
      auto [it, fresh] = visited.emplace(std::move(v), std::move(v_witness));
      if (fresh) queue.push_back(&it->first);
      if (visited.size() > opts.max_orbit)
        throw resource_limit_error(
            "conjugacy orbit cap exceeded: more than " + std::to_string(opts.max_orbit) +
            " summit elements (raise max_orbit to search further)");
    }
  }
  return {};
}

/// A braid is achiral when it is conjugate to its mirror image.
inline ConjugacyResult is_achiral_braid(const BraidWord& b,
                                        const ConjugacyOptions& opts = {}) {
  return are_conjugate(b, mirror(b), opts);
}

}  // namespace solbraid
