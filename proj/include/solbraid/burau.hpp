#pragma once

// Alexander polynomial of a knotted closed braid via the reduced Burau
// representation.
//
// For b in B_n with knot closure, det(R(b) - I) equals, up to a unit
// +-t^k, Delta(t) * (1 - t^n)/(1 - t); the quotient is computed by exact
// division and the unit is then fixed by centering the exponents
// symmetrically (Delta(t) == Delta(1/t)) and making Delta(1) = +1.
// |Delta(1)| == 1 holds for every knot and is asserted.
//
// The determinant uses fraction-free Bareiss elimination; every division
// it performs is exact in Z[t, 1/t].

#include "solbraid/braid.hpp"
#include "solbraid/laurent.hpp"

namespace solbraid {

namespace detail {

using PolyMatrix = std::vector<std::vector<LaurentPolynomial>>;

inline PolyMatrix identity_matrix(int m) {
  PolyMatrix r(static_cast<std::size_t>(m),
               std::vector<LaurentPolynomial>(static_cast<std::size_t>(m), LaurentPolynomial('t')));
  for (int i = 0; i < m; ++i) r[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = LaurentPolynomial::one('t');
  return r;
}

/// Reduced Burau image of a single generator sigma_i^{sign} in B_n,
/// acting on an (n-1)-dimensional module.
inline PolyMatrix reduced_burau_letter(int n, int i, bool positive) {
  const int m = n - 1;
  PolyMatrix r = identity_matrix(m);
  const auto t = LaurentPolynomial::monomial(1, 1, 't');
  const auto t_inv = LaurentPolynomial::monomial(1, -1, 't');
  auto at = [&r](int row, int col) -> LaurentPolynomial& {
    return r[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
  };
  // blocks indexed from the generator position (1-based i -> 0-based row i-1)
  const int d = i - 1;
  if (positive) {
    if (i > 1) at(d - 1, d) = t;
    at(d, d) = -t;
    if (i < n - 1) at(d + 1, d) = LaurentPolynomial::one('t');
  } else {
    if (i > 1) at(d - 1, d) = LaurentPolynomial::one('t');
    at(d, d) = -t_inv;
    if (i < n - 1) at(d + 1, d) = t_inv;
  }
  return r;
}

inline PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t m = a.size();
  PolyMatrix r(m, std::vector<LaurentPolynomial>(m, LaurentPolynomial('t')));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (b[k][j].is_zero()) continue;
        r[i][j] += a[i][k] * b[k][j];
      }
    }
  return r;
}

/// Fraction-free determinant (Bareiss).  All divisions are exact.
inline LaurentPolynomial determinant(PolyMatrix a) {
  const int m = static_cast<int>(a.size());
  if (m == 0) return LaurentPolynomial::one('t');
  int sign = 1;
  LaurentPolynomial prev = LaurentPolynomial::one('t');
  for (int k = 0; k < m - 1; ++k) {
    if (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)].is_zero()) {
      int swap_row = -1;
      for (int r = k + 1; r < m; ++r)
        if (!a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)].is_zero()) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return LaurentPolynomial('t');  // singular
      std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(swap_row)]);
      sign = -sign;
    }
    for (int i = k + 1; i < m; ++i)
      for (int j = k + 1; j < m; ++j) {
        auto num = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                   a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = num.divide_exact(prev);
      }
    prev = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
  }
  auto det = a[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(m - 1)];
  return sign < 0 ? -det : det;
}

}  // namespace detail

/// Reduced Burau matrix of a braid word, (n-1) x (n-1) over Z[t, 1/t].
inline detail::PolyMatrix reduced_burau(const BraidWord& b) {
  detail::PolyMatrix r = detail::identity_matrix(b.strands - 1);
  for (int k : b.letters)
    r = detail::multiply(r, detail::reduced_burau_letter(b.strands, std::abs(k), k > 0));
  return r;
}

/// Alexander polynomial of the closure (a knot), symmetric normalization
/// with Delta(1) = +1.
inline LaurentPolynomial alexander(const BraidWord& b) {
  if (!is_cyclic(b))
    throw std::invalid_argument("alexander: braid closure must be a knot (cyclic permutation)");
  const int n = b.strands;
  if (n == 1) return LaurentPolynomial::one('t');

  detail::PolyMatrix m = reduced_burau(b);
  for (int i = 0; i < n - 1; ++i)
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] -= LaurentPolynomial::one('t');
  LaurentPolynomial det = detail::determinant(std::move(m));

  const auto one = LaurentPolynomial::one('t');
  const auto numer = det * (one - LaurentPolynomial::monomial(1, 1, 't'));
  const auto denom = one - LaurentPolynomial::monomial(1, n, 't');
  LaurentPolynomial delta = numer.divide_exact(denom);

  if (delta.is_zero())
    throw std::invalid_argument("alexander: degenerate determinant for a knot closure");
  const int center = delta.min_doubled_exp() + delta.max_doubled_exp();
  if (center % 2 != 0)
    throw std::invalid_argument("alexander: asymmetric exponent span");
  delta = delta.shifted(1, -center / 2);
  if (!delta.is_palindromic())
    throw std::invalid_argument("alexander: normalization failed to symmetrize");
  long long at_one = delta.eval_at_one();
  if (at_one == -1) {
    delta = -delta;
    at_one = 1;
  }
  if (at_one != 1)
    throw std::invalid_argument("alexander: |Delta(1)| != 1 for a knot closure");
  return delta;
}

}  // namespace solbraid
