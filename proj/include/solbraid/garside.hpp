#pragma once

// Left-greedy (Garside/Thurston) normal form for braid words.
//
// Every element of B_n is written uniquely as Delta^inf . A_1 ... A_k where
// Delta is the positive half twist, each A_j is a permutation braid (a
// positive braid in which any two strands cross at most once) different
// from the identity and from Delta, and every adjacent pair (A_j, A_{j+1})
// is left-weighted: the finishing set of A_j contains the starting set of
// A_{j+1}.  Two words represent the same braid exactly when their normal
// forms are identical, which is what all equality checks in this library
// reduce to.
//
// Permutation braids are stored as their permutations.  Conventions:
//  - generator i is a starting letter of P(pi)  iff pi(i-1) > pi(i)
//  - generator i is a finishing letter of P(pi) iff pi^{-1}(i-1) > pi^{-1}(i)
//  - appending sigma_i below P(pi) swaps the values i-1 and i in the table
//    and keeps the braid simple iff i is not in the finishing set
//  - removing a leading sigma_i swaps the table entries at positions i-1, i.

#include <set>
#include <utility>

#include "solbraid/braid.hpp"

namespace solbraid {

/// Half twist permutation: position i goes to n-1-i.
inline Permutation delta_perm(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = n - 1 - i;
  return Permutation(std::move(img));
}

/// Conjugation by Delta on permutation braids: tau(p) = omega . p . omega.
/// On generators tau sends sigma_i to sigma_{n-i}; it is an involution.
inline Permutation tau_perm(const Permutation& p) {
  const int n = p.size();
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = n - 1 - p[n - 1 - i];
  return Permutation(std::move(img));
}

/// starting_set(p)[i-1] == true iff sigma_i is a prefix of the permutation braid P(p).
inline std::vector<bool> starting_set(const Permutation& p) {
  std::vector<bool> s(static_cast<std::size_t>(p.size() > 0 ? p.size() - 1 : 0));
  for (int i = 0; i + 1 < p.size(); ++i) s[static_cast<std::size_t>(i)] = p[i] > p[i + 1];
  return s;
}

inline std::vector<bool> finishing_set(const Permutation& p) {
  return starting_set(p.inverse());
}

/// Left-weighted test for an adjacent factor pair.
inline bool left_weighted(const Permutation& a, const Permutation& b) {
  const Permutation ai = a.inverse();
  for (int i = 0; i + 1 < b.size(); ++i)
    if (b[i] > b[i + 1] && !(ai[i] > ai[i + 1])) return false;
  return true;
}

/// Slide crossings from the front of b to the back of a until the pair is
/// left-weighted.  Preserves the product a.b; returns true when anything moved.
inline bool left_weight_pair(Permutation& a, Permutation& b) {
  bool moved = false;
  Permutation ai = a.inverse();
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 0; i + 1 < b.size(); ++i) {
      if (b[i] > b[i + 1] && !(ai[i] > ai[i + 1])) {
        // b loses the leading sigma_{i+1}: swap table positions i, i+1
        int bi = b[i];
        b.set_image(i, b[i + 1]);
        b.set_image(i + 1, bi);
        // a gains sigma_{i+1} at the bottom: swap values i, i+1,
        // i.e. swap positions i, i+1 of the inverse table
        int p = ai[i], q = ai[i + 1];
        ai.set_image(i, q);
        ai.set_image(i + 1, p);
        a.set_image(q, i);
        a.set_image(p, i + 1);
        moved = true;
        progress = true;
      }
    }
  }
  return moved;
}

/// Write a permutation braid as a positive word (lexicographically first
/// descent each step; deterministic).
inline BraidWord simple_to_word(Permutation p, int strands) {
  std::vector<int> word;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 0; i + 1 < p.size(); ++i) {
      if (p[i] > p[i + 1]) {
        word.push_back(i + 1);
        int v = p[i];
        p.set_image(i, p[i + 1]);
        p.set_image(i + 1, v);
        progress = true;
        break;
      }
    }
  }
  return BraidWord(strands, std::move(word));
}

struct GarsideCanonical {
  int strands = 1;
  int inf = 0;                       // exponent of the leading Delta power
  std::vector<Permutation> factors;  // left-weighted, none identity or Delta

  int canonical_length() const { return static_cast<int>(factors.size()); }
  int sup() const { return inf + canonical_length(); }

  bool operator==(const GarsideCanonical&) const = default;
  auto operator<=>(const GarsideCanonical&) const = default;
};

inline GarsideCanonical normal_form(const BraidWord& b) {
  const int n = b.strands;
  const Permutation delta = delta_perm(n);
  GarsideCanonical g;
  g.strands = n;

  for (int k : b.letters) {
    if (k > 0) {
      g.factors.push_back(transposition(n, k));
    } else {
      // sigma_i^{-1} = Delta^{-1} . (Delta sigma_i^{-1}); pushing the
      // Delta^{-1} to the far left applies tau to the accumulated factors
      const int i = -k;
      g.inf -= 1;
      for (Permutation& f : g.factors) f = tau_perm(f);
      std::vector<int> img(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) {
        int v = n - 1 - j;
        if (v == i - 1)
          v = i;
        else if (v == i)
          v = i - 1;
        img[static_cast<std::size_t>(j)] = v;
      }
      g.factors.emplace_back(std::move(img));
    }
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j < g.factors.size();) {
      if (g.factors[j].is_identity()) {
        g.factors.erase(g.factors.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
      } else {
        ++j;
      }
    }
    for (std::size_t j = 0; j + 1 < g.factors.size(); ++j)
      if (left_weight_pair(g.factors[j], g.factors[j + 1])) changed = true;
    for (std::size_t j = 0; j < g.factors.size();) {
      if (g.factors[j] == delta) {
        g.inf += 1;
        for (std::size_t i = 0; i < j; ++i) g.factors[i] = tau_perm(g.factors[i]);
        g.factors.erase(g.factors.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
      } else {
        ++j;
      }
    }
  }
  return g;
}

/// Fixed positive word for Delta: (s1..s_{n-1})(s1..s_{n-2})...(s1).
inline BraidWord delta_word(int n) {
  std::vector<int> w;
  for (int top = n - 1; top >= 1; --top)
    for (int i = 1; i <= top; ++i) w.push_back(i);
  return BraidWord(n, std::move(w));
}

/// Serialize a canonical form back to a braid word (deterministic choice).
inline BraidWord to_word(const GarsideCanonical& g) {
  BraidWord acc = identity_braid(g.strands);
  if (g.inf != 0) {
    const BraidWord d = delta_word(g.strands);
    acc = power(d, g.inf);
  }
  for (const Permutation& f : g.factors)
    acc = compose(acc, simple_to_word(f, g.strands));
  return acc;
}

/// Braid-group equality: identical normal forms.
inline bool braids_equal(const BraidWord& a, const BraidWord& b) {
  return normal_form(a) == normal_form(b);
}

}  // namespace solbraid
